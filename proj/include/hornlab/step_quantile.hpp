#pragma once

// Exact step quantile functions and triples. A StepQuantile is the quantile
// function of a finitely-atomic probability measure with rational atoms and
// rational weights: piecewise constant, right-continuous, nondecreasing on
// [0,1]. All operations are pure and exact.

#include "hornlab/rational.hpp"

#include <array>
#include <vector>

namespace hornlab {

class StepQuantile {
public:
    /// The constant-zero quantile (of the Dirac mass at 0).
    StepQuantile() : breaks_{Rational(0)}, values_{Rational(0)} {}

    /// Validates and canonicalizes (adjacent pieces with equal values are merged).
    /// Preconditions: lists of equal nonzero length; breaks strictly increasing,
    /// starting at 0, all < 1; values nondecreasing.
    static StepQuantile make(std::vector<Rational> breaks, std::vector<Rational> values);

    static StepQuantile constant(const Rational& c);

    /// Quantile of the uniform measure on the n values (given nondecreasing),
    /// i.e. value[j] on [j/n, (j+1)/n).
    static StepQuantile from_sorted_values(const std::vector<Rational>& nondecreasing, int n);

    const std::vector<Rational>& breaks() const { return breaks_; }
    const std::vector<Rational>& values() const { return values_; }
    std::size_t pieces() const { return values_.size(); }

    /// Q(t) for t in [0,1]; Q(1) is the last piece's value (left limit convention).
    const Rational& eval(const Rational& t) const;

    Rational integral() const;
    Rational integral_on(const Rational& a, const Rational& b) const;

    const Rational& min_value() const { return values_.front(); }
    const Rational& max_value() const { return values_.back(); }

    /// Constant on each [(j-1)/n, j/n)?
    bool is_atomic(int n) const;
    /// Values all in (1/n)Z?
    bool is_integral(int n) const;
    /// Smallest n such that the function is n-atomic (lcm of break denominators).
    Integer atomicity() const;

    friend bool operator==(const StepQuantile&, const StepQuantile&) = default;

private:
    std::vector<Rational> breaks_;
    std::vector<Rational> values_;
};

/// Exact integral of |q - p| over [0,1]; equals W1 of the represented measures.
Rational l1_distance(const StepQuantile& q, const StepQuantile& p);

/// n-atomic average: value n * (integral of q over [(j-1)/n, j/n)) on that interval.
StepQuantile average_n(const StepQuantile& q, int n);

/// Pointwise scale * q + shift. Requires scale >= 0 (a negative scale does not
/// produce a quantile function by pointwise mapping).
StepQuantile affine(const StepQuantile& q, const Rational& scale, const Rational& shift);

/// Pointwise lambda*a + (1-lambda)*b on the merged break grid; lambda in [0,1].
StepQuantile pointwise_combine(const Rational& lambda, const StepQuantile& a, const StepQuantile& b);

/// Quantile of the measure mixture lambda*pi_a + (1-lambda)*pi_b; lambda in [0,1].
StepQuantile mixture(const Rational& lambda, const StepQuantile& a, const StepQuantile& b);

struct QuantileTriple {
    StepQuantile q1, q2, q3;

    const StepQuantile& component(int i) const;
    StepQuantile& component(int i);

    friend bool operator==(const QuantileTriple&, const QuantileTriple&) = default;
};

/// Integral of (-q1 - q2 + q3); vanishes on spectra triples of A + B = C.
Rational trace(const QuantileTriple& q);

/// Componentwise pointwise convex combination of quantile functions.
QuantileTriple horizontal_combine(const Rational& lambda, const QuantileTriple& a,
                                  const QuantileTriple& b);

/// Componentwise measure mixture.
QuantileTriple vertical_combine(const Rational& lambda, const QuantileTriple& a,
                                const QuantileTriple& b);

/// (s*q1 + a, s*q2 + b, s*q3 + (a+b)); the pushforward triple under dilation by
/// s >= 0 and the translation pattern (a, b, a+b).
QuantileTriple dilate_translate(const QuantileTriple& q, const Rational& s, const Rational& a,
                                const Rational& b);

/// 1 - max_i sup q_i. Requires all values in [0,1].
Rational eta(const QuantileTriple& q);

bool is_atomic(const QuantileTriple& q, int n);
bool is_integral(const QuantileTriple& q, int n);
bool values_in_unit_interval(const QuantileTriple& q);

QuantileTriple average_triple(const QuantileTriple& q, int n);

} // namespace hornlab
