#pragma once

// The composition functional E(Q, Qt + mu*t) and the membership verdicts built
// from it. All evaluation is exact rational.

#include "hornlab/horn.hpp"
#include "hornlab/step_quantile.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hornlab {

struct Margin {
    Rational value;
    std::optional<HornTriple> witness; // absent for symbolic shifts
    std::string note;                  // e.g. "trace" or "mu=1/3"
};

enum class Verdict { member, nonmember, inconclusive };

struct MembershipVerdict {
    Verdict verdict = Verdict::inconclusive;
    std::optional<Margin> violated; // present iff nonmember
    int depth = 0;
};

enum class WitnessPolicy { first, max_violation };

/// Exact integral of P(inner(t) + mu*t) over [0,1]. Requires inner values in
/// [0,1] and mu in [0, 1 - max inner]. mu = 0 uses pointwise evaluation with
/// the right-continuity convention.
Rational compose_integral(const StepQuantile& P, const StepQuantile& inner, const Rational& mu);

/// E(Q, Qt + mu*t) = -int Q1(Qt1+mu t) - int Q2(Qt2+mu t) + int Q3(Qt3+mu t).
/// Requires Qt values in [0,1] and 0 <= mu <= eta(Qt).
Rational energy(const QuantileTriple& Q, const QuantileTriple& Qt, const Rational& mu);

/// energy(Q, embed(h), r/n), evaluated through per-window integrals of Q.
Margin horn_margin(const QuantileTriple& Q, const HornTriple& h);

/// Margins of Q against a list of witnesses at a common scale; shares the
/// window-integral precomputation across witnesses.
std::vector<Rational> horn_margins_at_scale(const QuantileTriple& Q, int scale,
                                            const std::vector<HornTriple>& witnesses);

/// Margin of an embedded triple against an inner witness by pure integer sums:
/// (1/(p*n)) * (-sum_F i_f - sum_G j_g + sum_H k_h + p(p+1)/2). Cross-check
/// route for horn_margin when Q = embed(outer).
Rational horn_margin_integer(const HornTriple& outer, const HornTriple& inner);

/// Membership among spectra triples of n-by-n Hermitian sums: trace zero and
/// nonnegative margin against every element of T^n_r, 1 <= r <= n-1.
/// Requires Q n-atomic.
MembershipVerdict is_member_Hn(const QuantileTriple& Q, int n,
                               WitnessPolicy policy = WitnessPolicy::first);

/// Desk-scale scan of the full inequality system up to the given depth.
/// Certified nonmember on any violation; member only when the atomic upgrade
/// applies (Q is n-atomic with n <= depth); otherwise inconclusive.
MembershipVerdict is_member_H_desk(const QuantileTriple& Q, int depth,
                                   WitnessPolicy policy = WitnessPolicy::first);

/// energy(Q, Qt, mu) for each mu in grid; grid must lie in [0, eta(Qt)].
std::vector<Margin> shifted_energy_scan(const QuantileTriple& Q, const QuantileTriple& Qt,
                                        const std::vector<Rational>& grid);

} // namespace hornlab
