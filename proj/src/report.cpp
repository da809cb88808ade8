#include "pt/report.hpp"

#include <json.hpp>

#include "pt/errors.hpp"

namespace pt {

namespace {

using Json = nlohmann::ordered_json;

std::vector<std::string> string_array(const Json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_array())
        throw ParseError(1, 1, std::string("report needs a '") + key + "' array");
    std::vector<std::string> out;
    for (const auto& item : j[key]) {
        if (!item.is_string()) throw ParseError(1, 1, std::string("'") + key + "' holds a non-string");
        out.push_back(item.get<std::string>());
    }
    return out;
}

std::string string_field(const Json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_string())
        throw ParseError(1, 1, std::string("report needs a '") + key + "' string");
    return j[key].get<std::string>();
}

}  // namespace

std::string serialize_report(const Report& r) {
    Json j;
    j["model"] = r.model;
    j["mode"] = r.mode;
    j["balance"] = r.balance;
    j["resonances"] = r.resonances;
    j["coefficients"] = r.coefficients;
    j["verdict"] = r.verdict;
    j["diagnostics"] = r.diagnostics;
    j["provenance"] = Json{{"input_hash", r.input_hash}, {"engine_version", r.engine_version}};
    return j.dump(2) + "\n";
}

Report parse_report(const std::string& text) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError(1, 1, "malformed report document");
    if (!j.is_object()) throw ParseError(1, 1, "report must be an object");
    Report r;
    r.model = string_field(j, "model");
    r.mode = string_field(j, "mode");
    r.balance = string_array(j, "balance");
    r.resonances = string_array(j, "resonances");
    r.coefficients = string_array(j, "coefficients");
    r.verdict = string_field(j, "verdict");
    if (!j.contains("diagnostics") || !j["diagnostics"].is_object())
        throw ParseError(1, 1, "report needs a 'diagnostics' object");
    for (const auto& [key, value] : j["diagnostics"].items()) {
        if (!value.is_string()) throw ParseError(1, 1, "'diagnostics' holds a non-string");
        r.diagnostics[key] = value.get<std::string>();
    }
    if (!j.contains("provenance") || !j["provenance"].is_object())
        throw ParseError(1, 1, "report needs a 'provenance' object");
    r.input_hash = string_field(j["provenance"], "input_hash");
    r.engine_version = string_field(j["provenance"], "engine_version");
    return r;
}

std::string input_fingerprint(const std::string& text) {
    unsigned long long h = 14695981039346656037ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int k = 15; k >= 0; --k) {
        out[k] = digits[h & 0xf];
        h >>= 4;
    }
    return out;
}

}  // namespace pt
