#include "hornlab/approx.hpp"

#include "hornlab/errors.hpp"

#include <utility>

namespace hornlab {

namespace {

// Values of q on the r-grid, q assumed r-atomic.
std::vector<Rational> grid_values(const StepQuantile& q, int r) {
    std::vector<Rational> v(r);
    for (int s = 0; s < r; ++s) {
        v[s] = q.eval(Rational(s, r));
    }
    return v;
}

StepQuantile from_grid_values(std::vector<Rational> v, int r) {
    std::vector<Rational> breaks(r);
    for (int s = 0; s < r; ++s) {
        breaks[s] = Rational(s, r);
    }
    return StepQuantile::make(std::move(breaks), std::move(v));
}

} // namespace

QuantileTriple perturb(const QuantileTriple& Q, int r, const Rational& eps) {
    if (eps <= 0) {
        throw PreconditionError("perturb: eps must be positive");
    }
    if (!is_atomic(Q, r)) {
        throw PreconditionError("perturb: triple is not r-atomic");
    }
    const QuantileTriple S = s_triple(r);
    QuantileTriple out = Q;
    for (int i = 1; i <= 3; ++i) {
        auto v = grid_values(Q.component(i), r);
        const auto sv = grid_values(S.component(i), r);
        for (int s = 0; s < r; ++s) {
            v[s] += eps * sv[s];
        }
        out.component(i) = from_grid_values(std::move(v), r);
    }
    return out;
}

QuantileTriple floor_to_grid(const QuantileTriple& Q, int n, bool strict) {
    if (n <= 0) {
        throw PreconditionError("floor_to_grid: n must be positive");
    }
    QuantileTriple out = Q;
    for (int i = 1; i <= 3; ++i) {
        const StepQuantile& q = Q.component(i);
        std::vector<Rational> values(q.pieces());
        for (std::size_t s = 0; s < q.pieces(); ++s) {
            const Rational scaled = q.values()[s] * n;
            Integer fl = floor_int(scaled);
            if (strict && fl == scaled) {
                --fl;
            }
            values[s] = Rational(fl) / n;
        }
        out.component(i) = StepQuantile::make(q.breaks(), std::move(values));
    }
    return out;
}

QuantileTriple trace_correct(const QuantileTriple& P, int n, int r) {
    if (!is_atomic(P, r) || !is_integral(P, n)) {
        throw PreconditionError("trace_correct: triple must be r-atomic and n-integral");
    }
    const Rational tau_rat = trace(P) * n * r;
    if (denominator(tau_rat) != 1) {
        throw InternalError("trace_correct: trace is not an integer multiple of 1/(n*r)");
    }
    const Integer tau_big = numerator(tau_rat);
    if (tau_big < -r || tau_big > 2 * r) {
        throw PreconditionError("trace_correct: trace out of the [-r/(nr), 2r/(nr)] window");
    }
    const long long tau = static_cast<long long>(tau_big);
    long long a1 = 0, a2 = 0, a3 = 0;
    if (tau >= 0) {
        a1 = std::min<long long>(tau, r);
        a2 = tau - a1;
    } else {
        a3 = -tau;
    }

    const std::array<long long, 3> add = {a1, a2, a3};
    QuantileTriple out = P;
    for (int i = 1; i <= 3; ++i) {
        if (add[i - 1] == 0) {
            continue;
        }
        auto v = grid_values(P.component(i), r);
        for (int s = 0; s < r; ++s) {
            if (s >= r - add[i - 1]) {
                v[s] += Rational(1, n);
            }
        }
        out.component(i) = from_grid_values(std::move(v), r);
    }
    return out;
}

HornTriple decode_embedded(const QuantileTriple& Q, int n, int r) {
    if (!is_atomic(Q, r)) {
        throw InternalError("decode_embedded: triple is not r-atomic");
    }
    auto decode_component = [n, r](const StepQuantile& q) {
        std::vector<int> I(r);
        for (int s = 1; s <= r; ++s) {
            const Rational& v = q.eval(Rational(s - 1, r));
            if (v < 0 || v > Rational(n - r, n)) {
                throw PreconditionError("shift regime violated: value outside [0, 1-r/n]");
            }
            const Rational idx = v * n + s;
            if (denominator(idx) != 1) {
                throw InternalError("decode_embedded: value is not n-integral");
            }
            I[s - 1] = static_cast<int>(numerator(idx));
        }
        return I;
    };
    return make_horn_triple(n, r, decode_component(Q.q1), decode_component(Q.q2),
                            decode_component(Q.q3));
}

Rational default_epsilon(int n, int r) {
    return std::max(Rational(1, static_cast<long long>(r) * r),
                    Rational(6, static_cast<long long>(n) * r));
}

ApproxReport approximate_in_Tnr(const QuantileTriple& Q, int n, int r, const Rational& eps,
                                bool strict_floor) {
    if (r < 1 || r > n - 1) {
        throw PreconditionError("approximate_in_Tnr: need 1 <= r <= n-1");
    }
    if (!values_in_unit_interval(Q)) {
        throw PreconditionError("approximate_in_Tnr: input values must lie in [0,1]");
    }
    if (trace(Q) != 0) {
        throw PreconditionError("approximate_in_Tnr: input trace must be zero");
    }
    if (eps <= 0) {
        throw PreconditionError("approximate_in_Tnr: eps must be positive");
    }
    const QuantileTriple averaged = average_triple(Q, r);
    const QuantileTriple perturbed = perturb(averaged, r, eps);
    const QuantileTriple floored = floor_to_grid(perturbed, n, strict_floor);
    const QuantileTriple corrected = trace_correct(floored, n, r);
    HornTriple h = decode_embedded(corrected, n, r);

    ApproxReport report;
    report.input = Q;
    report.epsilon = eps;
    report.n = n;
    report.r = r;
    report.strict_floor = strict_floor;
    const QuantileTriple image = embed(h);
    for (int i = 1; i <= 3; ++i) {
        report.distances[i - 1] = l1_distance(Q.component(i), image.component(i));
    }
    report.in_T_verified = in_T(h);
    report.output = std::move(h);
    return report;
}

} // namespace hornlab
