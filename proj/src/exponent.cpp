#include "pt/exponent.hpp"

#include <boost/functional/hash.hpp>

#include <algorithm>

namespace pt {

const char* exp_var_name(ExpVar v) {
    switch (v) {
        case ExpVar::Eps: return "eps";
        case ExpVar::Mu: return "mu";
        case ExpVar::Alpha: return "alpha";
        case ExpVar::R: return "r";
    }
    return "?";
}

ExpPoly::ExpPoly(long long c) {
    if (c != 0) terms_.push_back({Mono{0, 0, 0, 0}, c});
}

ExpPoly ExpPoly::var(ExpVar v) {
    ExpPoly p;
    Mono m{0, 0, 0, 0};
    m[static_cast<int>(v)] = 1;
    p.terms_.push_back({m, 1});
    return p;
}

bool ExpPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].first == Mono{0, 0, 0, 0});
}

long long ExpPoly::constant_value() const {
    auto c = as_constant();
    if (!c) throw InternalInvariantViolation("exponent is not constant: " + to_string());
    return *c;
}

std::optional<long long> ExpPoly::as_constant() const {
    if (terms_.empty()) return 0;
    if (terms_.size() == 1 && terms_[0].first == Mono{0, 0, 0, 0}) return terms_[0].second;
    return std::nullopt;
}

bool ExpPoly::depends_on(ExpVar v) const {
    for (const auto& [m, c] : terms_)
        if (m[static_cast<int>(v)] != 0) return true;
    return false;
}

int ExpPoly::degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m[0] + m[1] + m[2] + m[3]);
    return d;
}

long long ExpPoly::coeff(const Mono& m) const {
    for (const auto& [mm, c] : terms_)
        if (mm == m) return c;
    return 0;
}

long long ExpPoly::linear_coeff(ExpVar v) const {
    Mono m{0, 0, 0, 0};
    m[static_cast<int>(v)] = 1;
    return coeff(m);
}

long long ExpPoly::constant_term() const { return coeff(Mono{0, 0, 0, 0}); }

void ExpPoly::normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::pair<Mono, long long>> out;
    for (auto& t : terms_) {
        if (!out.empty() && out.back().first == t.first)
            out.back().second += t.second;
        else
            out.push_back(t);
        if (!out.empty() && out.back().second == 0) out.pop_back();
    }
    terms_ = std::move(out);
}

ExpPoly ExpPoly::operator-() const {
    ExpPoly p = *this;
    for (auto& t : p.terms_) t.second = -t.second;
    return p;
}

ExpPoly& ExpPoly::operator+=(const ExpPoly& o) {
    terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
    normalize();
    return *this;
}

ExpPoly& ExpPoly::operator-=(const ExpPoly& o) { return *this += -o; }

ExpPoly& ExpPoly::operator*=(const ExpPoly& o) {
    std::vector<std::pair<Mono, long long>> prod;
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            Mono m;
            for (int k = 0; k < kNumExpVars; ++k) {
                int d = ma[k] + mb[k];
                if (d > 255) throw UnsupportedExponentForm("exponent degree overflow");
                m[k] = static_cast<std::uint8_t>(d);
            }
            prod.push_back({m, ca * cb});
        }
    }
    terms_ = std::move(prod);
    normalize();
    return *this;
}

ExpPoly ExpPoly::eval_partial(const std::map<ExpVar, long long>& vals) const {
    ExpPoly out;
    for (const auto& [m, c] : terms_) {
        long long coeff = c;
        Mono rest = m;
        for (const auto& [v, value] : vals) {
            int idx = static_cast<int>(v);
            for (int k = 0; k < rest[idx]; ++k) coeff *= value;
            rest[idx] = 0;
        }
        ExpPoly t;
        if (coeff != 0) t.terms_.push_back({rest, coeff});
        out += t;
    }
    return out;
}

ExpPoly ExpPoly::subst_var(ExpVar v, const ExpPoly& value) const {
    int idx = static_cast<int>(v);
    ExpPoly out;
    for (const auto& [m, c] : terms_) {
        Mono rest = m;
        int deg = rest[idx];
        rest[idx] = 0;
        ExpPoly t;
        t.terms_.push_back({rest, c});
        for (int k = 0; k < deg; ++k) t *= value;
        out += t;
    }
    return out;
}

int ExpPoly::cmp_structural(const ExpPoly& o) const {
    if (terms_ == o.terms_) return 0;
    return terms_ < o.terms_ ? -1 : 1;
}

std::string ExpPoly::to_string() const {
    if (terms_.empty()) return "0";
    // Print highest-degree monomials first; ties broken by variable order.
    auto sorted = terms_;
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
        int da = a.first[0] + a.first[1] + a.first[2] + a.first[3];
        int db = b.first[0] + b.first[1] + b.first[2] + b.first[3];
        if (da != db) return da > db;
        return a.first > b.first;
    });
    std::string s;
    bool first = true;
    for (const auto& [m, c] : sorted) {
        long long mag = c < 0 ? -c : c;
        std::string body;
        bool is_const = (m == Mono{0, 0, 0, 0});
        if (is_const || mag != 1) body = std::to_string(mag);
        // Alphabetical variable order within a monomial.
        static constexpr ExpVar display[] = {ExpVar::Alpha, ExpVar::Eps, ExpVar::Mu, ExpVar::R};
        for (ExpVar v : display) {
            int k = static_cast<int>(v);
            if (m[k] == 0) continue;
            if (!body.empty()) body += "*";
            body += exp_var_name(v);
            if (m[k] > 1) body += "^" + std::to_string(static_cast<int>(m[k]));
        }
        if (first) {
            s += (c < 0 ? "-" : "") + body;
            first = false;
        } else {
            s += (c < 0 ? "-" : "+") + body;
        }
    }
    return s;
}

std::size_t ExpPoly::hash() const {
    std::size_t seed = 0;
    for (const auto& [m, c] : terms_) {
        for (auto d : m) boost::hash_combine(seed, d);
        boost::hash_combine(seed, c);
    }
    return seed;
}

std::optional<int> exp_try_compare(const ExpPoly& a, const ExpPoly& b) {
    ExpPoly d = a - b;
    if (d.is_zero()) return 0;
    if (auto c = d.as_constant()) return *c > 0 ? 1 : -1;
    if (d.depends_on(ExpVar::Alpha) || d.depends_on(ExpVar::R)) return std::nullopt;

    // Shift eps = 1 + p, mu = 1 + q with p, q >= 0.  If every coefficient of
    // the shifted polynomial is >= 0 then d >= d(1,1) everywhere, so a strictly
    // positive value at eps = mu = 1 proves d > 0.  Mirror argument for < 0.
    // The shift is exact because degrees are tiny.
    ExpPoly shifted;
    ExpPoly eps_shift = ExpPoly(1) + ExpPoly::var(ExpVar::Eps);
    ExpPoly mu_shift = ExpPoly(1) + ExpPoly::var(ExpVar::Mu);
    for (const auto& [m, c] : d.terms()) {
        ExpPoly t(c);
        for (int k = 0; k < m[0]; ++k) t *= eps_shift;
        for (int k = 0; k < m[1]; ++k) t *= mu_shift;
        shifted += t;
    }
    bool all_nonneg = true;
    bool all_nonpos = true;
    for (const auto& [m, c] : shifted.terms()) {
        if (c < 0) all_nonneg = false;
        if (c > 0) all_nonpos = false;
    }
    long long at_base = shifted.constant_term();
    if (all_nonneg && at_base > 0) return 1;
    if (all_nonpos && at_base < 0) return -1;
    return std::nullopt;
}

int exp_compare(const ExpPoly& a, const ExpPoly& b) {
    auto c = exp_try_compare(a, b);
    if (!c)
        throw AmbiguousOrdering("cannot order exponents \"" + a.to_string() + "\" and \"" +
                                b.to_string() + "\" under eps,mu >= 1");
    return *c;
}

}  // namespace pt
