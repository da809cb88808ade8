#pragma once

// Structured result document emitted by the command-line tool.  Everything is
// carried as exact strings (no floats ever enter the symbolic fields), and
// the JSON form round-trips: parse_report(serialize_report(r)) == r.

#include <map>
#include <string>
#include <vector>

namespace pt {

inline constexpr const char* kEngineVersion = "1.0.0";

struct Report {
    std::string model;
    std::string mode;
    std::vector<std::string> balance;
    std::vector<std::string> resonances;
    std::vector<std::string> coefficients;
    std::string verdict;
    std::map<std::string, std::string> diagnostics;
    std::string input_hash;
    std::string engine_version = kEngineVersion;

    friend bool operator==(const Report&, const Report&) = default;
};

std::string serialize_report(const Report& r);

// Throws ParseError on malformed or incomplete documents.
Report parse_report(const std::string& text);

// Stable 64-bit FNV-1a fingerprint of the model source, as 16 hex digits.
std::string input_fingerprint(const std::string& text);

}  // namespace pt
