#pragma once

// Constructive approximation of a [0,1]-valued triple by an embedded element
// of T^n_r: r-averaging, perturbation by the margin-lifting S triple, flooring
// to the 1/n grid, trace correction, and decoding back to index sets.

#include "hornlab/horn.hpp"
#include "hornlab/step_quantile.hpp"

#include <array>

namespace hornlab {

struct ApproxReport {
    QuantileTriple input;
    Rational epsilon;
    int n = 0;
    int r = 0;
    bool strict_floor = false;
    HornTriple output;
    std::array<Rational, 3> distances; // per-component L1 between input and embed(output)
    bool in_T_verified = false;
};

/// Q + eps * s_triple(r), componentwise on the r-grid. Requires Q r-atomic, eps > 0.
QuantileTriple perturb(const QuantileTriple& Q, int r, const Rational& eps);

/// Componentwise pointwise floor to the 1/n grid. Non-strict by default (grid
/// points are fixed); strict replicates "largest multiple of 1/n less than".
QuantileTriple floor_to_grid(const QuantileTriple& Q, int n, bool strict = false);

/// Restores trace zero by adding 1/n on the top a_i/r fraction of component i,
/// with the deterministic split of tau = trace * n * r into a1 + a2 - a3.
/// Requires P n-integral, r-atomic, tau an integer in [-r, 2r].
QuantileTriple trace_correct(const QuantileTriple& P, int n, int r);

/// Inverse of embed: i_s = n * Q((s-1)/r) + s per component. Throws
/// PreconditionError("shift regime violated") when values escape [0, 1-r/n].
HornTriple decode_embedded(const QuantileTriple& Q, int n, int r);

/// Default perturbation max(1/r^2, 6/(n*r)), the smallest consistent with the
/// n >= 6/(eps*r) construction regime.
Rational default_epsilon(int n, int r);

/// Full pipeline. Caller asserts the input represents a member; requires
/// values in [0,1], trace zero, 1 <= r <= n-1, eps > 0.
ApproxReport approximate_in_Tnr(const QuantileTriple& Q, int n, int r, const Rational& eps,
                                bool strict_floor = false);

} // namespace hornlab
