#include "hornlab/functional.hpp"

#include "hornlab/errors.hpp"

#include <algorithm>

namespace hornlab {

Rational compose_integral(const StepQuantile& P, const StepQuantile& inner, const Rational& mu) {
    if (inner.min_value() < 0 || inner.max_value() > 1) {
        throw PreconditionError("compose_integral: inner values outside [0,1]");
    }
    if (mu < 0 || inner.max_value() + mu > 1) {
        throw PreconditionError("compose_integral: composition argument escapes [0,1]");
    }
    Rational acc(0);
    for (std::size_t s = 0; s < inner.pieces(); ++s) {
        const Rational& a = inner.breaks()[s];
        const Rational b = (s + 1 < inner.pieces()) ? inner.breaks()[s + 1] : Rational(1);
        const Rational& v = inner.values()[s];
        if (mu == 0) {
            acc += (b - a) * P.eval(v);
        } else {
            acc += P.integral_on(v + mu * a, v + mu * b) / mu;
        }
    }
    return acc;
}

Rational energy(const QuantileTriple& Q, const QuantileTriple& Qt, const Rational& mu) {
    if (mu < 0 || mu > eta(Qt)) {
        throw PreconditionError("energy: mu outside [0, eta]");
    }
    return -compose_integral(Q.q1, Qt.q1, mu) - compose_integral(Q.q2, Qt.q2, mu) +
           compose_integral(Q.q3, Qt.q3, mu);
}

namespace {

// Integrals of q over the windows [(j-1)/n, j/n), j = 1..n.
std::vector<Rational> window_integrals(const StepQuantile& q, int n) {
    std::vector<Rational> w(n + 1);
    for (int j = 1; j <= n; ++j) {
        w[j] = q.integral_on(Rational(j - 1, n), Rational(j, n));
    }
    return w;
}

Rational margin_from_windows(const std::vector<Rational>& w1, const std::vector<Rational>& w2,
                             const std::vector<Rational>& w3, const HornTriple& h) {
    Rational acc(0);
    for (int i : h.I) {
        acc -= w1[i];
    }
    for (int j : h.J) {
        acc -= w2[j];
    }
    for (int k : h.K) {
        acc += w3[k];
    }
    return acc * h.n / h.r;
}

} // namespace

Margin horn_margin(const QuantileTriple& Q, const HornTriple& h) {
    const auto w1 = window_integrals(Q.q1, h.n);
    const auto w2 = window_integrals(Q.q2, h.n);
    const auto w3 = window_integrals(Q.q3, h.n);
    return Margin{margin_from_windows(w1, w2, w3, h), h, ""};
}

std::vector<Rational> horn_margins_at_scale(const QuantileTriple& Q, int scale,
                                            const std::vector<HornTriple>& witnesses) {
    const auto w1 = window_integrals(Q.q1, scale);
    const auto w2 = window_integrals(Q.q2, scale);
    const auto w3 = window_integrals(Q.q3, scale);
    std::vector<Rational> out;
    out.reserve(witnesses.size());
    for (const HornTriple& h : witnesses) {
        if (h.n != scale) {
            throw InternalError("horn_margins_at_scale: witness at wrong scale");
        }
        out.push_back(margin_from_windows(w1, w2, w3, h));
    }
    return out;
}

Rational horn_margin_integer(const HornTriple& outer, const HornTriple& inner) {
    if (inner.n != outer.r) {
        throw PreconditionError("horn_margin_integer: inner witness must live at scale r");
    }
    long long acc = static_cast<long long>(inner.r) * (inner.r + 1) / 2;
    for (int f : inner.I) {
        acc -= outer.I[f - 1];
    }
    for (int g : inner.J) {
        acc -= outer.J[g - 1];
    }
    for (int h : inner.K) {
        acc += outer.K[h - 1];
    }
    return Rational(acc) / (static_cast<long long>(inner.r) * outer.n);
}

namespace {

// Scans witnesses at scales m = lo..hi; returns the violation per policy, or
// nothing if every margin is nonnegative.
std::optional<Margin> scan_for_violation(const QuantileTriple& Q, int lo, int hi,
                                         WitnessPolicy policy) {
    std::optional<Margin> worst;
    for (int m = lo; m <= hi; ++m) {
        for (int r = 1; r <= m - 1; ++r) {
            const auto& witnesses = cached_T(m, r);
            const auto margins = horn_margins_at_scale(Q, m, witnesses);
            for (std::size_t i = 0; i < witnesses.size(); ++i) {
                if (margins[i] < 0) {
                    if (policy == WitnessPolicy::first) {
                        return Margin{margins[i], witnesses[i], ""};
                    }
                    if (!worst || margins[i] < worst->value) {
                        worst = Margin{margins[i], witnesses[i], ""};
                    }
                }
            }
        }
    }
    return worst;
}

} // namespace

MembershipVerdict is_member_Hn(const QuantileTriple& Q, int n, WitnessPolicy policy) {
    if (!is_atomic(Q, n)) {
        throw PreconditionError("is_member_Hn: triple is not n-atomic");
    }
    if (Rational tr = trace(Q); tr != 0) {
        return {Verdict::nonmember, Margin{std::move(tr), std::nullopt, "trace"}, n};
    }
    if (auto violation = scan_for_violation(Q, n, n, policy)) {
        return {Verdict::nonmember, std::move(violation), n};
    }
    return {Verdict::member, std::nullopt, n};
}

MembershipVerdict is_member_H_desk(const QuantileTriple& Q, int depth, WitnessPolicy policy) {
    if (depth < 2) {
        throw PreconditionError("is_member_H_desk: depth must be >= 2");
    }
    if (Rational tr = trace(Q); tr != 0) {
        return {Verdict::nonmember, Margin{std::move(tr), std::nullopt, "trace"}, depth};
    }
    if (auto violation = scan_for_violation(Q, 2, depth, policy)) {
        return {Verdict::nonmember, std::move(violation), depth};
    }
    // Atomic upgrade: an n-atomic trace-zero triple clearing every inequality
    // at scale n clears them at all scales.
    Integer n0 = lcm(lcm(Q.q1.atomicity(), Q.q2.atomicity()), Q.q3.atomicity());
    if (n0 == 1) {
        n0 = 2; // constants are 2-atomic; scale-2 witnesses were scanned
    }
    if (n0 <= depth) {
        return {Verdict::member, std::nullopt, depth};
    }
    return {Verdict::inconclusive, std::nullopt, depth};
}

std::vector<Margin> shifted_energy_scan(const QuantileTriple& Q, const QuantileTriple& Qt,
                                        const std::vector<Rational>& grid) {
    const Rational bound = eta(Qt);
    std::vector<Margin> out;
    out.reserve(grid.size());
    for (const Rational& mu : grid) {
        if (mu < 0 || mu > bound) {
            throw PreconditionError("shifted_energy_scan: grid point outside [0, eta]");
        }
        out.push_back(Margin{energy(Q, Qt, mu), std::nullopt, "mu=" + format_rational(mu)});
    }
    return out;
}

} // namespace hornlab
