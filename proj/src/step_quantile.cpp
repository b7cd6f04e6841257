#include "hornlab/step_quantile.hpp"

#include "hornlab/errors.hpp"

#include <algorithm>
#include <utility>

namespace hornlab {

StepQuantile StepQuantile::make(std::vector<Rational> breaks, std::vector<Rational> values) {
    if (breaks.empty() || breaks.size() != values.size()) {
        throw PreconditionError("not a quantile function: breaks/values size mismatch");
    }
    if (breaks.front() != 0) {
        throw PreconditionError("not a quantile function: first break must be 0");
    }
    for (std::size_t s = 0; s < breaks.size(); ++s) {
        if (breaks[s] < 0 || breaks[s] >= 1) {
            throw PreconditionError("not a quantile function: break outside [0,1)");
        }
        if (s + 1 < breaks.size() && breaks[s] >= breaks[s + 1]) {
            throw PreconditionError("not a quantile function: breaks not strictly increasing");
        }
        if (s + 1 < values.size() && values[s] > values[s + 1]) {
            throw PreconditionError("not a quantile function: values not nondecreasing");
        }
    }
    StepQuantile q;
    q.breaks_.reserve(breaks.size());
    q.values_.reserve(values.size());
    for (std::size_t s = 0; s < breaks.size(); ++s) {
        if (!q.values_.empty() && q.values_.back() == values[s]) {
            continue; // merge equal adjacent pieces
        }
        q.breaks_.push_back(std::move(breaks[s]));
        q.values_.push_back(std::move(values[s]));
    }
    return q;
}

StepQuantile StepQuantile::constant(const Rational& c) {
    return make({Rational(0)}, {c});
}

StepQuantile StepQuantile::from_sorted_values(const std::vector<Rational>& nondecreasing, int n) {
    if (n <= 0 || nondecreasing.size() != static_cast<std::size_t>(n)) {
        throw PreconditionError("from_sorted_values: need exactly n values");
    }
    std::vector<Rational> breaks(n);
    for (int j = 0; j < n; ++j) {
        breaks[j] = Rational(j, n);
    }
    return make(std::move(breaks), nondecreasing);
}

const Rational& StepQuantile::eval(const Rational& t) const {
    if (t < 0 || t > 1) {
        throw PreconditionError("eval: argument outside [0,1]");
    }
    if (t == 1) {
        return values_.back();
    }
    // last piece with break <= t
    auto it = std::upper_bound(breaks_.begin(), breaks_.end(), t);
    return values_[static_cast<std::size_t>(it - breaks_.begin()) - 1];
}

Rational StepQuantile::integral() const {
    return integral_on(Rational(0), Rational(1));
}

Rational StepQuantile::integral_on(const Rational& a, const Rational& b) const {
    if (a < 0 || b > 1 || a > b) {
        throw InternalError("integral_on: bad interval");
    }
    Rational acc(0);
    for (std::size_t s = 0; s < pieces(); ++s) {
        const Rational& lo = breaks_[s];
        const Rational hi = (s + 1 < pieces()) ? breaks_[s + 1] : Rational(1);
        const Rational left = std::max(lo, a);
        const Rational right = std::min(hi, b);
        if (left < right) {
            acc += values_[s] * (right - left);
        }
    }
    return acc;
}

bool StepQuantile::is_atomic(int n) const {
    if (n <= 0) {
        return false;
    }
    for (const auto& b : breaks_) {
        if (!is_multiple_of_unit_fraction(b, n)) {
            return false;
        }
    }
    return true;
}

bool StepQuantile::is_integral(int n) const {
    if (n <= 0) {
        return false;
    }
    for (const auto& v : values_) {
        if (!is_multiple_of_unit_fraction(v, n)) {
            return false;
        }
    }
    return true;
}

Integer StepQuantile::atomicity() const {
    Integer n(1);
    for (const auto& b : breaks_) {
        n = lcm(n, denominator(b));
    }
    return n;
}

namespace {

// Merged break grid of two step functions.
std::vector<Rational> merged_grid(const StepQuantile& a, const StepQuantile& b) {
    std::vector<Rational> grid;
    grid.reserve(a.pieces() + b.pieces());
    std::merge(a.breaks().begin(), a.breaks().end(), b.breaks().begin(), b.breaks().end(),
               std::back_inserter(grid));
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    return grid;
}

} // namespace

Rational l1_distance(const StepQuantile& q, const StepQuantile& p) {
    const auto grid = merged_grid(q, p);
    Rational acc(0);
    for (std::size_t s = 0; s < grid.size(); ++s) {
        const Rational hi = (s + 1 < grid.size()) ? grid[s + 1] : Rational(1);
        Rational diff = q.eval(grid[s]) - p.eval(grid[s]);
        if (diff < 0) {
            diff = -diff;
        }
        acc += diff * (hi - grid[s]);
    }
    return acc;
}

StepQuantile average_n(const StepQuantile& q, int n) {
    if (n <= 0) {
        throw PreconditionError("average_n: n must be positive");
    }
    std::vector<Rational> breaks(n), values(n);
    for (int j = 0; j < n; ++j) {
        breaks[j] = Rational(j, n);
        values[j] = q.integral_on(Rational(j, n), Rational(j + 1, n)) * n;
    }
    return StepQuantile::make(std::move(breaks), std::move(values));
}

StepQuantile affine(const StepQuantile& q, const Rational& scale, const Rational& shift) {
    if (scale < 0) {
        throw PreconditionError("affine: negative scale does not preserve quantile monotonicity");
    }
    std::vector<Rational> values(q.pieces());
    for (std::size_t s = 0; s < q.pieces(); ++s) {
        values[s] = scale * q.values()[s] + shift;
    }
    return StepQuantile::make(q.breaks(), std::move(values));
}

StepQuantile pointwise_combine(const Rational& lambda, const StepQuantile& a,
                               const StepQuantile& b) {
    if (lambda < 0 || lambda > 1) {
        throw PreconditionError("pointwise_combine: lambda outside [0,1]");
    }
    const auto grid = merged_grid(a, b);
    std::vector<Rational> values(grid.size());
    const Rational mu = Rational(1) - lambda;
    for (std::size_t s = 0; s < grid.size(); ++s) {
        values[s] = lambda * a.eval(grid[s]) + mu * b.eval(grid[s]);
    }
    return StepQuantile::make(grid, std::move(values));
}

StepQuantile mixture(const Rational& lambda, const StepQuantile& a, const StepQuantile& b) {
    if (lambda < 0 || lambda > 1) {
        throw PreconditionError("mixture: lambda outside [0,1]");
    }
    // Atoms (value, weight) of the represented measures, weights scaled by the
    // mixture coefficients; then rebuild the quantile from the sorted atoms.
    std::vector<std::pair<Rational, Rational>> atoms;
    auto add_atoms = [&atoms](const StepQuantile& q, const Rational& coeff) {
        if (coeff == 0) {
            return;
        }
        for (std::size_t s = 0; s < q.pieces(); ++s) {
            const Rational hi = (s + 1 < q.pieces()) ? q.breaks()[s + 1] : Rational(1);
            atoms.emplace_back(q.values()[s], coeff * (hi - q.breaks()[s]));
        }
    };
    add_atoms(a, lambda);
    add_atoms(b, Rational(1) - lambda);
    std::sort(atoms.begin(), atoms.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });

    std::vector<Rational> breaks, values;
    Rational cum(0);
    for (const auto& [value, weight] : atoms) {
        if (!values.empty() && values.back() == value) {
            cum += weight;
            continue;
        }
        breaks.push_back(cum);
        values.push_back(value);
        cum += weight;
    }
    if (cum != 1) {
        throw InternalError("mixture: weights do not sum to 1");
    }
    return StepQuantile::make(std::move(breaks), std::move(values));
}

const StepQuantile& QuantileTriple::component(int i) const {
    switch (i) {
    case 1: return q1;
    case 2: return q2;
    case 3: return q3;
    default: throw InternalError("component index must be 1, 2 or 3");
    }
}

StepQuantile& QuantileTriple::component(int i) {
    switch (i) {
    case 1: return q1;
    case 2: return q2;
    case 3: return q3;
    default: throw InternalError("component index must be 1, 2 or 3");
    }
}

Rational trace(const QuantileTriple& q) {
    return -q.q1.integral() - q.q2.integral() + q.q3.integral();
}

QuantileTriple horizontal_combine(const Rational& lambda, const QuantileTriple& a,
                                  const QuantileTriple& b) {
    return {pointwise_combine(lambda, a.q1, b.q1), pointwise_combine(lambda, a.q2, b.q2),
            pointwise_combine(lambda, a.q3, b.q3)};
}

QuantileTriple vertical_combine(const Rational& lambda, const QuantileTriple& a,
                                const QuantileTriple& b) {
    return {mixture(lambda, a.q1, b.q1), mixture(lambda, a.q2, b.q2),
            mixture(lambda, a.q3, b.q3)};
}

QuantileTriple dilate_translate(const QuantileTriple& q, const Rational& s, const Rational& a,
                                const Rational& b) {
    return {affine(q.q1, s, a), affine(q.q2, s, b), affine(q.q3, s, a + b)};
}

Rational eta(const QuantileTriple& q) {
    if (!values_in_unit_interval(q)) {
        throw PreconditionError("eta: values must lie in [0,1]");
    }
    Rational top = q.q1.max_value();
    top = std::max(top, q.q2.max_value());
    top = std::max(top, q.q3.max_value());
    return Rational(1) - top;
}

bool is_atomic(const QuantileTriple& q, int n) {
    return q.q1.is_atomic(n) && q.q2.is_atomic(n) && q.q3.is_atomic(n);
}

bool is_integral(const QuantileTriple& q, int n) {
    return q.q1.is_integral(n) && q.q2.is_integral(n) && q.q3.is_integral(n);
}

bool values_in_unit_interval(const QuantileTriple& q) {
    for (int i = 1; i <= 3; ++i) {
        if (q.component(i).min_value() < 0 || q.component(i).max_value() > 1) {
            return false;
        }
    }
    return true;
}

QuantileTriple average_triple(const QuantileTriple& q, int n) {
    return {average_n(q.q1, n), average_n(q.q2, n), average_n(q.q3, n)};
}

} // namespace hornlab
