#pragma once

// Numeric evaluation of expressions and adaptive integration of complex ODE
// systems at configurable precision.  The integrator is an extrapolated
// midpoint scheme with an embedded error estimate; its effective order grows
// with the extrapolation depth, which keeps step counts small even at
// tolerances far below double precision.

#include <algorithm>
#include <functional>
#include <ios>
#include <string>
#include <utility>
#include <vector>

#include "pt/errors.hpp"
#include "pt/expr.hpp"
#include "pt/mpfloat.hpp"

namespace pt {

template <typename F>
Cplx<F> cplx_pow(Cplx<F> base, long long e) {
    if (e < 0) {
        base = Cplx<F>{F(1), F(0)} / base;
        e = -e;
    }
    Cplx<F> acc{F(1), F(0)};
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

// An expression lowered to numeric form over a fixed state vector: a sum of
// complex coefficients times powers of state slots.  Constant symbols are
// folded into the coefficients exactly before conversion.
template <typename F>
struct CompiledExpr {
    struct CTerm {
        Cplx<F> coeff;
        std::vector<std::pair<int, long long>> powers;  // (state slot, exponent)
    };
    std::vector<CTerm> terms;

    Cplx<F> eval(const std::vector<Cplx<F>>& state) const {
        Cplx<F> acc{};
        for (const auto& t : terms) {
            Cplx<F> v = t.coeff;
            for (const auto& [slot, e] : t.powers) v = v * cplx_pow(state[slot], e);
            acc += v;
        }
        return acc;
    }
};

template <typename F>
CompiledExpr<F> compile_expr(const Expr& e, const std::vector<Symbol>& state,
                             const std::vector<std::pair<Symbol, GaussRational>>& constants) {
    CompiledExpr<F> out;
    for (const Term& t : e.terms()) {
        typename CompiledExpr<F>::CTerm ct;
        GaussRational folded = t.coeff;
        for (const Factor& f : t.factors) {
            auto p = f.exp.as_constant();
            if (!p) throw UnsupportedExponentForm("numeric evaluation needs concrete powers, got " +
                                                  f.exp.to_string());
            auto slot = std::find(state.begin(), state.end(), f.sym);
            if (slot != state.end()) {
                ct.powers.emplace_back(static_cast<int>(slot - state.begin()), *p);
                continue;
            }
            bool bound = false;
            for (const auto& [sym, val] : constants) {
                if (sym == f.sym) {
                    folded *= val.pow(*p);
                    bound = true;
                    break;
                }
            }
            if (!bound) throw Error("numeric evaluation hit an unbound symbol: " + f.sym.name());
        }
        ct.coeff = to_cplx<F>(folded);
        out.terms.push_back(std::move(ct));
    }
    return out;
}

struct IntegrateOptions {
    double rtol = 1e-10;
    long long max_steps = 100000;
};

// Advances y' = f(y) for a complex autonomous system.  Each step runs the
// modified midpoint rule at substep counts 2, 4, ..., 16 and extrapolates the
// results in (step/substeps)^2; the difference between the last two table
// entries is the error estimate.  Steps adapt to hold that estimate under
// rtol in the relative sense.
template <typename F>
class MidpointExtrapolator {
  public:
    using State = std::vector<Cplx<F>>;
    using Deriv = std::function<void(const State&, State&)>;

    MidpointExtrapolator(Deriv f, State y0, F z0, IntegrateOptions opt = {})
        : f_(std::move(f)), y_(std::move(y0)), z_(std::move(z0)), opt_(opt) {}

    const State& state() const { return y_; }
    const F& position() const { return z_; }

    void advance_to(const F& target) {
        if (target < z_) throw ArithmeticError("ode integration only runs forward");
        if (h_ == 0) h_ = (target - z_) / 100;
        F rtol{opt_.rtol};
        while (z_ < target) {
            if (++steps_ > opt_.max_steps)
                throw ArithmeticError("ode integration exceeded the step limit near z = " +
                                      z_.str(8, std::ios_base::scientific));
            bool clamped = h_ >= target - z_;
            F h = clamped ? target - z_ : h_;
            State out;
            F err = attempt(h, out);
            if (err <= rtol) {
                y_ = std::move(out);
                if (clamped)
                    z_ = target;  // land exactly, leaving no rounding sliver
                else
                    z_ += h;
                if (!clamped) {
                    F grow = pow(rtol / (err + tiny()), F(1) / 15);
                    if (grow > 4) grow = 4;
                    h_ *= F(9) / 10 * grow;
                }
            } else {
                F shrink = F(9) / 10 * pow(rtol / err, F(1) / 15);
                if (shrink < F(1) / 10) shrink = F(1) / 10;
                h_ = h * shrink;
                if (h_ < (target - z_) * tiny())
                    throw ArithmeticError("ode integration stalled near z = " +
                                          z_.str(8, std::ios_base::scientific));
            }
        }
    }

  private:
    static constexpr int kStages = 8;

    static const F& tiny() {
        static const F t{"1e-60"};
        return t;
    }

    // Modified midpoint rule with n substeps over a step of width h.
    State midpoint(const F& h_total, int n) const {
        F h = h_total / n;
        State ym = y_, y1(y_.size()), dy(y_.size());
        f_(ym, dy);
        for (std::size_t i = 0; i < y_.size(); ++i) y1[i] = ym[i] + h * dy[i];
        for (int m = 1; m < n; ++m) {
            f_(y1, dy);
            for (std::size_t i = 0; i < y_.size(); ++i) {
                Cplx<F> y2 = ym[i] + (2 * h) * dy[i];
                ym[i] = y1[i];
                y1[i] = y2;
            }
        }
        f_(y1, dy);
        State out(y_.size());
        for (std::size_t i = 0; i < y_.size(); ++i)
            out[i] = (F(1) / 2) * (ym[i] + y1[i] + h * dy[i]);
        return out;
    }

    F attempt(const F& h, State& result) {
        std::vector<State> row(kStages);
        State prev_diag;
        F err{};
        for (int j = 0; j < kStages; ++j) {
            State cur = midpoint(h, 2 * (j + 1));
            for (int k = 0; k < j; ++k) {
                // Richardson extrapolation in (h / substeps)^2.
                F ratio = F(2 * (j + 1)) / F(2 * (j - k));
                F den = ratio * ratio - 1;
                State next(cur.size());
                for (std::size_t i = 0; i < cur.size(); ++i)
                    next[i] = cur[i] + (F(1) / den) * (cur[i] - row[k][i]);
                row[k] = std::move(cur);
                cur = std::move(next);
            }
            if (j > 0) {
                err = F(0);
                for (std::size_t i = 0; i < cur.size(); ++i) {
                    F scale = prev_diag[i].abs() + tiny();
                    F e = (cur[i] - prev_diag[i]).abs() / scale;
                    if (e > err) err = e;
                }
            }
            row[j] = cur;
            prev_diag = std::move(cur);
        }
        result = std::move(prev_diag);
        return err;
    }

    Deriv f_;
    State y_;
    F z_;
    F h_{};
    IntegrateOptions opt_;
    long long steps_ = 0;
};

}  // namespace pt
