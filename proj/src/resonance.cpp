#include "pt/resonance.hpp"

#include <algorithm>
#include <climits>

#include "pt/polyfit.hpp"
#include "pt/series.hpp"

namespace pt {

namespace {

const Symbol kPhi = Symbol::jet("phi", 0, 0);
const Symbol kTheta = Symbol::probe();
const Symbol kR = Symbol::exp_sym(ExpVar::R);

long long eval_int_poly(const std::vector<long long>& p, long long x) {
    long long acc = 0;
    for (std::size_t k = p.size(); k-- > 0;) acc = acc * x + p[k];
    return acc;
}

// Exact division of p by (r - z); the caller guarantees z is a root.
std::vector<long long> deflate(const std::vector<long long>& p, long long z) {
    std::vector<long long> q(p.size() - 1);
    long long carry = p.back();
    for (std::size_t k = p.size() - 1; k-- > 0;) {
        q[k] = carry;
        carry = p[k] + z * carry;
    }
    if (carry != 0) throw InternalInvariantViolation("polynomial deflation by a non-root");
    return q;
}

// All integer roots with multiplicity (ascending) and the deflated remainder.
std::pair<std::vector<long long>, std::vector<long long>> split_integer_roots(
    std::vector<long long> p) {
    std::vector<long long> roots;
    while (p.size() > 1 && p.front() == 0) {
        roots.push_back(0);
        p.erase(p.begin());
    }
    bool again = true;
    while (p.size() > 1 && again) {
        again = false;
        for (long long z : all_divisors_signed(p.front())) {
            if (eval_int_poly(p, z) != 0) continue;
            p = deflate(p, z);
            roots.push_back(z);
            again = true;
            break;
        }
    }
    std::sort(roots.begin(), roots.end());
    return {std::move(roots), std::move(p)};
}

void check_constraint(const BalanceResult& bal, std::optional<long long> eps,
                      std::optional<long long> mu) {
    if (!bal.constraint) return;
    bool ok = true;
    switch (bal.constraint->kind) {
        case BalanceConstraint::Kind::EpsEquals:
            ok = eps && *eps == bal.constraint->value;
            break;
        case BalanceConstraint::Kind::MuEquals:
            ok = mu && *mu == bal.constraint->value;
            break;
        case BalanceConstraint::Kind::EpsMinusMu:
            ok = eps && mu && *eps - *mu == bal.constraint->value;
            break;
    }
    if (!ok)
        throw UnsupportedBalance("exponent values do not satisfy the balance constraint " +
                                 bal.constraint->to_string());
}

}  // namespace

std::optional<QuadraticFactor> ResonanceReport::quadratic() const {
    if (remainder.size() != 3) return std::nullopt;
    QuadraticFactor q;
    q.c = remainder[0];
    q.b = remainder[1];
    q.a = remainder[2];
    q.disc = q.b * q.b - 4 * q.a * q.c;
    q.square_disc = perfect_square(q.disc);
    return q;
}

Expr ResonanceReport::full() const {
    Expr p;
    for (std::size_t k = 0; k < poly.size(); ++k) {
        if (poly[k] == 0) continue;
        p += Expr(poly[k]) * Expr::sym_pow(kR, ExpPoly(static_cast<long long>(k)));
    }
    return content * p;
}

ResonanceReport resonance_spectrum(const PDESystem& sys, const BalanceResult& bal,
                                   std::optional<long long> eps, std::optional<long long> mu) {
    check_constraint(bal, eps, mu);
    std::map<ExpVar, long long> vals;
    if (eps) vals[ExpVar::Eps] = *eps;
    if (mu) vals[ExpVar::Mu] = *mu;

    Expr lam0 = bal.lambda0.eval_exponents(vals);
    ExpPoly alpha(bal.alpha);

    // Guard against evaluation at exponents where this balance does not hold
    // (the constraint check above is necessary but not sufficient).
    auto s = bal.leading_exponent.eval_partial(vals).as_constant();
    if (!s) throw UnsupportedBalance("resonance spectrum needs concrete exponent values");
    SeriesContext ctx;
    ctx.mode = AnsatzMode::General;
    ctx.field = sys.field();
    PhiSeries u0 = PhiSeries::monomial(bal.alpha, lam0);
    if (!evaluate_pde_on_series(sys.expanded(eps, mu), sys.field(), u0, ctx,
                                static_cast<int>(*s))
             .at_exponent(static_cast<int>(*s))
             .is_zero())
        throw UnsupportedBalance("leading coefficient fails at these exponent values");

    Expr probe_term = Expr(kTheta) * Expr::sym_pow(kPhi, ExpPoly::var(ExpVar::R) + alpha);
    Expr ansatz = lam0 * Expr::sym_pow(kPhi, alpha) + probe_term;

    Substitution sub;
    sub.map.push_back({Symbol::jet(sys.field(), 0, 0), ansatz});
    sub.mode = DiffMode::General;
    Expr linear = sys.expanded(eps, mu).substitute(sub).coeff_of(kTheta, ExpPoly(1));
    if (linear.is_zero())
        throw InternalInvariantViolation("probe does not reach the equation");

    // Lowest phi-order of the probe response; every exponent is r + const.
    std::optional<long long> cmin;
    Expr lead;
    for (const auto& [key, val] : linear.collect_powers(kPhi)) {
        if (key.linear_coeff(ExpVar::R) != 1 || key.degree() != 1)
            throw InternalInvariantViolation("probe term with unexpected phi exponent " +
                                             key.to_string());
        long long c = key.constant_term();
        if (!cmin || c < *cmin) {
            cmin = c;
            lead = val;
        }
    }

    // lead is a polynomial in r over monomial cofactors; normalize it into
    // content * primitive integer polynomial.
    long long deg = lead.max_power(kR);
    if (deg <= 0) throw InternalInvariantViolation("resonance polynomial is constant");
    Expr top = lead.coeff_of(kR, ExpPoly(deg));
    if (!top.is_single_term())
        throw InternalInvariantViolation("resonance leading coefficient is not a monomial");

    std::vector<Rational> q(deg + 1);
    for (long long k = 0; k <= deg; ++k) {
        Expr ck = lead.coeff_of(kR, ExpPoly(k));
        if (ck.is_zero()) continue;
        auto ratio = ck.divide_by_term(top).as_constant();
        if (!ratio || !ratio->im().is_zero())
            throw InternalInvariantViolation(
                "resonance polynomial does not reduce to rational coefficients");
        q[k] = ratio->re();
    }

    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    Integer den(1);
    for (const auto& x : q) den = lcm(den, denominator(x));
    std::vector<Integer> n(q.size());
    Integer g(0);
    for (std::size_t k = 0; k < q.size(); ++k) {
        n[k] = numerator(q[k]) * (den / denominator(q[k]));
        g = gcd(g, n[k]);
    }

    ResonanceReport rep;
    rep.poly.resize(q.size());
    for (std::size_t k = 0; k < q.size(); ++k)
        rep.poly[k] = (n[k] / g).convert_to<long long>();
    rep.content = top * Expr(GaussRational(Rational(g, den)));
    std::tie(rep.integer_roots, rep.remainder) = split_integer_roots(rep.poly);
    rep.universal = std::binary_search(rep.integer_roots.begin(), rep.integer_roots.end(), -1);
    return rep;
}

// ---------------------------------------------------------------------------

namespace {

// The reduced resonance polynomial (universal factor removed) at one sample
// of the family parameter.
std::vector<long long> reduced_sample(const PDESystem& sys, const BalanceResult& bal,
                                      long long v) {
    std::optional<long long> eps, mu;
    if (bal.constraint) {
        auto m = bal.constraint->tie(v);
        eps = m[ExpVar::Eps];
        mu = m[ExpVar::Mu];
    } else {
        eps = mu = v;
    }
    ResonanceReport rep = resonance_spectrum(sys, bal, eps, mu);
    if (eval_int_poly(rep.poly, -1) != 0)
        throw UnsupportedBalance("family analysis expects the universal resonance r = -1");
    return deflate(rep.poly, -1);
}

long long int_coeff(const GaussRational& c) {
    if (!c.is_integer())
        throw UnsupportedBalance("resonance family coefficients are not integer polynomials");
    return boost::multiprecision::numerator(c.re()).convert_to<long long>();
}

long long eval_or_zero(const std::vector<long long>& p, long long x) {
    return p.empty() ? 0 : eval_int_poly(p, x);
}

}  // namespace

IntegralityRecord integrality_analysis(const PDESystem& sys, const BalanceResult& bal) {
    if (!bal.generic)
        throw UnsupportedBalance("integrality analysis applies to generic balances");
    const long long start = bal.constraint ? bal.constraint->min_free_value() : 1;
    const int kSamples = 5, kVerify = 2;

    std::vector<std::vector<long long>> red;
    for (long long v = start; v < start + kSamples; ++v) {
        red.push_back(reduced_sample(sys, bal, v));
        if (red.back().size() != red.front().size())
            throw UnsupportedBalance("resonance family degree varies with the exponent");
    }
    const std::size_t deg = red.front().size() - 1;

    IntegralityRecord rec;
    rec.family.resize(deg + 1);
    for (std::size_t k = 0; k <= deg; ++k) {
        std::vector<std::pair<long long, GaussRational>> pts;
        for (int i = 0; i < kSamples; ++i)
            pts.push_back({start + i, GaussRational(red[i][k])});
        for (const auto& c : fit_polynomial(pts)) rec.family[k].push_back(int_coeff(c));
    }
    for (long long v = start + kSamples; v < start + kSamples + kVerify; ++v) {
        auto probe = reduced_sample(sys, bal, v);
        if (probe.size() != deg + 1)
            throw UnsupportedBalance("resonance family degree varies with the exponent");
        for (std::size_t k = 0; k <= deg; ++k)
            if (eval_or_zero(rec.family[k], v) != probe[k])
                throw UnsupportedBalance(
                    "resonance family coefficients are not polynomial in the exponent");
    }

    if (deg == 1) {
        const auto& a = rec.family[1];
        const auto& b = rec.family[0];
        if (a.size() > 2 || b.size() > 2)
            throw UnsupportedBalance("resonance family root is not a linear-fraction family");
        // Root -b(s)/a(s): integer exactly when a(s) divides -b(s).
        long long a1 = a.size() > 1 ? a[1] : 0, a0 = eval_or_zero(a, 0);
        long long b1 = b.size() > 1 ? -b[1] : 0, b0 = -eval_or_zero(b, 0);
        if (a1 == 0) {
            if (a0 == 0) throw InternalInvariantViolation("degenerate linear resonance family");
            if (b1 != 0)
                throw UnsupportedBalance("resonance root varies with the exponent");
            if (b0 % a0 == 0) {
                rec.always_roots.push_back(b0 / a0);
                rec.always_integral = true;
            }
            return rec;
        }
        auto sols = divisor_quotients(a1, a0, b1, b0, start);
        if (sols.constant_quotient) {
            rec.always_roots.push_back(*sols.constant_quotient);
            rec.always_integral = true;
        }
        for (auto [s, z] : sols.at) rec.sporadic.push_back({s, {z}});
        return rec;
    }

    if (deg != 2)
        throw UnsupportedBalance("resonance family beyond quadratic is not analyzed");

    const auto& l = rec.family[2];
    if (l.size() > 1)
        throw UnsupportedBalance("resonance family has exponent-dependent leading coefficient");
    const long long L = eval_or_zero(l, 0);
    const auto& bb = rec.family[1];
    const auto& cc = rec.family[0];
    if (bb.size() > 2 || cc.size() > 2)
        throw UnsupportedBalance("resonance family coefficients exceed linear growth");
    long long b1 = bb.size() > 1 ? bb[1] : 0, b0 = eval_or_zero(bb, 0);
    long long c1 = cc.size() > 1 ? cc[1] : 0, c0 = eval_or_zero(cc, 0);

    // disc(s) = b(s)^2 - 4 L c(s) = A s^2 + B s + C
    const long long A = b1 * b1;
    const long long B = 2 * b1 * b0 - 4 * L * c1;
    const long long C = b0 * b0 - 4 * L * c0;
    rec.disc = {C, B, A};
    while (!rec.disc.empty() && rec.disc.back() == 0) rec.disc.pop_back();

    auto try_hit = [&](long long s, long long m) {
        if (s < start || m < 0) return;
        if (eval_int_poly({C, B, A}, s) != m * m) return;
        std::vector<long long> roots;
        long long bs = b1 * s + b0;
        for (long long sign : {+1, -1}) {
            long long num = -bs + sign * m;
            if (num % (2 * L) == 0) roots.push_back(num / (2 * L));
        }
        if (roots.empty()) return;
        std::sort(roots.begin(), roots.end());
        roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
        for (auto& h : rec.sporadic) {
            if (h.eps == s) {
                for (long long r : roots)
                    if (!std::count(h.roots.begin(), h.roots.end(), r)) h.roots.push_back(r);
                std::sort(h.roots.begin(), h.roots.end());
                return;
            }
        }
        rec.sporadic.push_back({s, std::move(roots)});
    };

    if (A == 0 && B == 0) {
        // Constant coefficients (A = 0 forces b1 = 0, then B = 0 forces
        // c1 = 0): the two roots do not move with the exponent.
        long long m;
        if (C >= 0 && perfect_square(C, &m)) {
            long long lo = -b0 - m, hi = -b0 + m;
            if (lo % (2 * L) == 0) rec.always_roots.push_back(lo / (2 * L));
            if (hi % (2 * L) == 0 && hi != lo) rec.always_roots.push_back(hi / (2 * L));
            std::sort(rec.always_roots.begin(), rec.always_roots.end());
            rec.always_integral = rec.always_roots.size() == (m == 0 ? 1u : 2u);
        }
        return rec;
    }
    if (A == 0) {
        if (B > 0)
            throw UnsupportedBalance("resonance discriminant grows without bound");
        for (long long s = start; B * s + C >= 0; ++s) {
            long long m;
            if (perfect_square(B * s + C, &m)) try_hit(s, m);
        }
        return rec;
    }
    if (A < 0) {
        // Downward parabola: only finitely many s can have disc >= 0.
        long long vertex = -B / (2 * A);
        for (long long s = start;; ++s) {
            long long d = eval_int_poly({C, B, A}, s);
            if (d < 0) {
                if (s > vertex) break;
                continue;
            }
            long long m;
            if (perfect_square(d, &m)) try_hit(s, m);
        }
        return rec;
    }

    long long g;
    if (!perfect_square(A, &g))
        throw UnsupportedBalance("resonance discriminant is a Pell form; not analyzed");
    const long long delta = B * B - 4 * A * C;
    if (delta == 0) {
        if (B % (2 * g) == 0)
            throw UnsupportedBalance("resonance discriminant is a perfect square throughout");
        return rec;  // (2As+B)^2/(4A) is never a square off the ray
    }
    // disc = m^2 becomes (2As+B)^2 - (2gm)^2 = delta; factor delta.
    for (long long d1 : all_divisors_signed(delta)) {
        long long d2 = delta / d1;
        if ((d1 + d2) % 2 != 0) continue;
        long long X = (d1 + d2) / 2;
        long long W = d2 - d1;  // = 4 g m
        if (W < 0 || W % (4 * g) != 0) continue;
        if ((X - B) % (2 * A) != 0) continue;
        try_hit((X - B) / (2 * A), W / (4 * g));
    }
    std::sort(rec.sporadic.begin(), rec.sporadic.end(),
              [](const auto& x, const auto& y) { return x.eps < y.eps; });
    return rec;
}

}  // namespace pt
