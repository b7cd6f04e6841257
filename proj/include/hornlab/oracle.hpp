#pragma once

// Floating-point random-matrix ground truth: spectra of A + UBU* for Haar
// unitary U. Floats meet the exact core at a single seam: sampled spectra are
// snapped to denominator-2^53 rationals before any margin is evaluated.

#include "hornlab/functional.hpp"
#include "hornlab/step_quantile.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace hornlab {

struct SpectraSample {
    int n = 0;
    std::uint64_t seed = 0;
    std::vector<double> alpha, beta, gamma; // nonincreasing
    double residual = 0.0;                  // max eigen-equation residual across solves
};

/// Eigenvalues of a Hermitian matrix, nonincreasing. Enforces the residual
/// contract ||Hv - lambda v|| <= 1e-9 ||H|| on every eigenpair; if given,
/// max_residual accumulates the worst relative residual seen.
std::vector<double> eig_hermitian(const Eigen::MatrixXcd& H, double* max_residual = nullptr);

/// Haar-distributed unitary via Ginibre + QR with the R-diagonal phase fix.
Eigen::MatrixXcd haar_unitary(int n, std::mt19937_64& rng);

/// Hermitian matrix with independent Gaussian entries, (G + G*)/2.
Eigen::MatrixXcd random_hermitian(int n, std::mt19937_64& rng);

/// Derives an independent per-sample RNG stream from (master seed, index).
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

/// gamma = spectrum of diag(alpha) + U diag(beta) U*. alpha, beta nonincreasing.
SpectraSample sample_horn_point(const std::vector<double>& alpha, const std::vector<double>& beta,
                                std::uint64_t seed);

struct NormalizedSample {
    QuantileTriple triple;  // exact, values in [0,1]
    Rational scale, a, b;   // the affine map x -> scale*x + {a, b, a+b}
};

/// Snaps spectra to denominator-2^53 rationals and applies an exact affine
/// map (s, a, b) placing all three components in [0,1].
NormalizedSample normalize_sample(const SpectraSample& s);

/// round(x * 2^53) / 2^53.
Rational snap_to_binary64_grid(double x);

struct SoundnessReport {
    int depth = 0;
    int margins_checked = 0;
    Rational min_margin;
    std::optional<HornTriple> min_witness;
    int violations = 0; // margins below -tol
    NormalizedSample normalized;
};

/// Checks every T^m_r margin for m <= depth on the normalized triple.
SoundnessReport soundness_check(const SpectraSample& s, int depth, double tol);

/// Draws four random Hermitian blocks, forms row/column/total sums, and checks
/// that the bottom row (column spectra vs total) passes soundness.
bool sudoku_check(int n, std::uint64_t seed, int* margins_checked = nullptr);

/// -Q1(a) - Q2(b) + Q3(a+b) on a normalized triple; a, b >= 0, a + b <= 1.
Rational weyl_margin(const QuantileTriple& Q, const Rational& a, const Rational& b);

/// Integral of (Q1 + Q2 - Q3) over [x, 1].
Rational kyfan_margin(const QuantileTriple& Q, const Rational& x);

/// energy(Q, (S, 0, S), mu); S valued in [0, 1-mu].
Rational lidskii_margin(const QuantileTriple& Q, const StepQuantile& S, const Rational& mu);

} // namespace hornlab
