#pragma once

// Combinatorics of the index sets behind the Horn inequalities: the sum
// condition defining U^n_r, the recursion defining T^n_r, the partition map,
// the quantile embedding, and subset dilation.

#include "hornlab/step_quantile.hpp"

#include <vector>

namespace hornlab {

struct HornTriple {
    int n = 0;
    int r = 0;
    std::vector<int> I, J, K; // strictly increasing, in {1..n}, each of size r

    friend bool operator==(const HornTriple&, const HornTriple&) = default;
    friend auto operator<=>(const HornTriple&, const HornTriple&) = default;
};

using Partition = std::vector<long long>; // nonincreasing parts

/// Validates index ranges and cardinalities.
HornTriple make_horn_triple(int n, int r, std::vector<int> I, std::vector<int> J,
                            std::vector<int> K);

/// (i_r - r, i_{r-1} - (r-1), ..., i_1 - 1).
Partition partition_of(const std::vector<int>& I, int r);

/// Q_{I,n}: value (i_s - s)/n on [(s-1)/r, s/r).
StepQuantile embed_subset(const std::vector<int>& I, int n);

/// (Q_{I,n}, Q_{J,n}, Q_{K,n}).
QuantileTriple embed(const HornTriple& h);

/// Sum condition: sum(I) + sum(J) == sum(K) + r(r+1)/2.
bool in_U(const HornTriple& h);

/// Membership in T^n_r by the integer recursion (T^r_p sets memoized).
bool in_T(const HornTriple& h);

/// Membership by the composition-functional criterion: trace(embed) == 0 and
/// energy(embed(h), embed(F,G,H at r), p/r) >= 0 for all (F,G,H) in T^r_p.
/// Independent evaluation path used to cross-check in_T.
bool in_T_functional(const HornTriple& h);

/// All of U^n_r in lexicographic (I, J, K) order.
std::vector<HornTriple> enumerate_U(int n, int r);

/// All of T^n_r in lexicographic order.
std::vector<HornTriple> enumerate_T(int n, int r);

/// Memoized enumerate_T; the cache is immutable once an entry is built.
const std::vector<HornTriple>& cached_T(int n, int r);

/// (mI, mJ, mK) at (mn, mr), where mI = union over i in I of {mi-m+1, ..., mi}.
HornTriple dilate_horn(const HornTriple& h, int m);

/// The r-atomic triple with S_i(t) = s (+ (r+1)/2 for i = 3) on [(s-1)/r, s/r).
/// Trace zero; satisfies every scale-r Horn inequality with margin r(r-p)/2.
QuantileTriple s_triple(int r);

/// Candidate-count guard used by the enumerators: C(n,r)^3 <= 10^7.
void check_enumeration_cap(int n, int r);

} // namespace hornlab
