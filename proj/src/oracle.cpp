#include "hornlab/oracle.hpp"

#include "hornlab/errors.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

namespace hornlab {

namespace {

constexpr double kHermitianTol = 1e-12;
constexpr double kResidualTol = 1e-9;

double matrix_scale(const Eigen::VectorXd& eigenvalues) {
    const double top = eigenvalues.cwiseAbs().maxCoeff();
    return top > 0 ? top : 1.0;
}

} // namespace

std::vector<double> eig_hermitian(const Eigen::MatrixXcd& H, double* max_residual) {
    if (H.rows() != H.cols() || H.rows() == 0) {
        throw PreconditionError("eig_hermitian: matrix must be square and nonempty");
    }
    const double hermitian_defect = (H - H.adjoint()).cwiseAbs().maxCoeff();
    const double entry_scale = std::max(1.0, H.cwiseAbs().maxCoeff());
    if (hermitian_defect > kHermitianTol * entry_scale) {
        throw PreconditionError("eig_hermitian: matrix is not Hermitian");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(H);
    if (solver.info() != Eigen::Success) {
        throw NumericError("eig_hermitian: eigensolver failed to converge");
    }
    const Eigen::VectorXd lambda = solver.eigenvalues(); // increasing
    const Eigen::MatrixXcd V = solver.eigenvectors();
    const double scale = matrix_scale(lambda);
    double worst = 0.0;
    for (int i = 0; i < H.rows(); ++i) {
        const double residual = (H * V.col(i) - lambda(i) * V.col(i)).norm();
        worst = std::max(worst, residual);
        if (residual > kResidualTol * scale) {
            throw NumericError("eig_hermitian: residual contract violated");
        }
    }
    if (max_residual != nullptr) {
        *max_residual = std::max(*max_residual, worst / scale);
    }
    std::vector<double> out(lambda.size());
    for (int i = 0; i < lambda.size(); ++i) {
        out[i] = lambda(lambda.size() - 1 - i);
    }
    return out;
}

Eigen::MatrixXcd haar_unitary(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::MatrixXcd G(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            G(i, j) = std::complex<double>(gauss(rng), gauss(rng));
        }
    }
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(G);
    Eigen::MatrixXcd Q = qr.householderQ();
    const Eigen::MatrixXcd R = qr.matrixQR().triangularView<Eigen::Upper>();
    // Normalize column phases by the R diagonal so the distribution is exactly
    // Haar, not merely unitary.
    for (int j = 0; j < n; ++j) {
        const std::complex<double> d = R(j, j);
        const double mag = std::abs(d);
        Q.col(j) *= (mag > 0) ? d / mag : std::complex<double>(1.0, 0.0);
    }
    return Q;
}

Eigen::MatrixXcd random_hermitian(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::MatrixXcd G(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            G(i, j) = std::complex<double>(gauss(rng), gauss(rng));
        }
    }
    return (G + G.adjoint()) / 2.0;
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    // splitmix64 over the pair; cheap and collision-free in practice.
    std::uint64_t z = master + 0x9E3779B97F4A7C15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

SpectraSample sample_horn_point(const std::vector<double>& alpha, const std::vector<double>& beta,
                                std::uint64_t seed) {
    if (alpha.size() != beta.size() || alpha.empty()) {
        throw PreconditionError("sample_horn_point: alpha, beta must have equal nonzero length");
    }
    if (!std::is_sorted(alpha.rbegin(), alpha.rend()) ||
        !std::is_sorted(beta.rbegin(), beta.rend())) {
        throw PreconditionError("sample_horn_point: spectra must be nonincreasing");
    }
    const int n = static_cast<int>(alpha.size());
    std::mt19937_64 rng(seed);
    const Eigen::MatrixXcd U = haar_unitary(n, rng);
    Eigen::VectorXd beta_vec(n);
    for (int i = 0; i < n; ++i) {
        beta_vec(i) = beta[i];
    }
    Eigen::MatrixXcd C = U * beta_vec.asDiagonal() * U.adjoint();
    for (int i = 0; i < n; ++i) {
        C(i, i) += alpha[i];
    }
    SpectraSample s;
    s.n = n;
    s.seed = seed;
    s.alpha = alpha;
    s.beta = beta;
    s.residual = 0.0;
    s.gamma = eig_hermitian(C, &s.residual);

    double sum_defect = 0.0;
    double value_scale = 1.0;
    for (int i = 0; i < n; ++i) {
        sum_defect += s.gamma[i] - alpha[i] - beta[i];
        value_scale = std::max({value_scale, std::abs(alpha[i]), std::abs(beta[i])});
    }
    if (std::abs(sum_defect) > kResidualTol * n * value_scale) {
        throw NumericError("sample_horn_point: trace identity violated beyond tolerance");
    }
    return s;
}

Rational snap_to_binary64_grid(double x) {
    if (!std::isfinite(x)) {
        throw PreconditionError("snap_to_binary64_grid: non-finite value");
    }
    static const Integer kDen = Integer(1) << 53;
    // Scaling by a power of two is exact, so this is the nearest grid point.
    const double scaled = std::round(x * 9007199254740992.0); // x * 2^53
    return Rational(Integer(scaled), kDen);
}

NormalizedSample normalize_sample(const SpectraSample& s) {
    const int n = s.n;
    std::vector<Rational> a_r(n), b_r(n), c_r(n); // increasing order
    for (int i = 0; i < n; ++i) {
        a_r[i] = snap_to_binary64_grid(s.alpha[n - 1 - i]);
        b_r[i] = snap_to_binary64_grid(s.beta[n - 1 - i]);
        c_r[i] = snap_to_binary64_grid(s.gamma[n - 1 - i]);
    }
    const Rational m1 = a_r.front(), M1 = a_r.back();
    const Rational m2 = b_r.front(), M2 = b_r.back();
    const Rational m3 = c_r.front(), M3 = c_r.back();

    // Map x -> s*x + {a, b, a+b}. The spread D covers every component; the
    // extra g term absorbs the (numerical-only) case gamma_min < m1 + m2.
    Rational g = m1 + m2 - m3;
    if (g < 0) {
        g = 0;
    }
    Rational spread = std::max({M1 - m1, M2 - m2, M3 - m1 - m2}) + g;
    Rational scale = (spread > 0) ? Rational(1) / spread : Rational(1);
    const Rational pad = scale * g / 2;
    const Rational shift_a = -scale * m1 + pad;
    const Rational shift_b = -scale * m2 + pad;

    auto build = [n](const std::vector<Rational>& vals, const Rational& sc, const Rational& sh) {
        std::vector<Rational> mapped(n);
        for (int i = 0; i < n; ++i) {
            mapped[i] = sc * vals[i] + sh;
        }
        return StepQuantile::from_sorted_values(mapped, n);
    };
    NormalizedSample out;
    out.triple = {build(a_r, scale, shift_a), build(b_r, scale, shift_b),
                  build(c_r, scale, shift_a + shift_b)};
    out.scale = scale;
    out.a = shift_a;
    out.b = shift_b;
    if (!values_in_unit_interval(out.triple)) {
        throw InternalError("normalize_sample: normalized values escaped [0,1]");
    }
    return out;
}

SoundnessReport soundness_check(const SpectraSample& s, int depth, double tol) {
    if (depth < 2 || depth > 6) {
        throw PreconditionError("soundness_check: depth must be in [2, 6]");
    }
    SoundnessReport report;
    report.depth = depth;
    report.normalized = normalize_sample(s);
    const QuantileTriple& Q = report.normalized.triple;
    const Rational tol_rat = snap_to_binary64_grid(tol);
    bool have_min = false;
    for (int m = 2; m <= depth; ++m) {
        for (int r = 1; r <= m - 1; ++r) {
            const auto& witnesses = cached_T(m, r);
            const auto margins = horn_margins_at_scale(Q, m, witnesses);
            for (std::size_t i = 0; i < witnesses.size(); ++i) {
                ++report.margins_checked;
                if (!have_min || margins[i] < report.min_margin) {
                    report.min_margin = margins[i];
                    report.min_witness = witnesses[i];
                    have_min = true;
                }
                if (margins[i] < -tol_rat) {
                    ++report.violations;
                }
            }
        }
    }
    return report;
}

bool sudoku_check(int n, std::uint64_t seed, int* margins_checked) {
    if (n < 1 || n > 16) {
        throw PreconditionError("sudoku_check: n must be in [1, 16]");
    }
    std::mt19937_64 rng(seed);
    const Eigen::MatrixXcd A11 = random_hermitian(n, rng);
    const Eigen::MatrixXcd A12 = random_hermitian(n, rng);
    const Eigen::MatrixXcd A21 = random_hermitian(n, rng);
    const Eigen::MatrixXcd A22 = random_hermitian(n, rng);
    const Eigen::MatrixXcd col1 = A11 + A21;
    const Eigen::MatrixXcd col2 = A12 + A22;
    const Eigen::MatrixXcd total = col1 + col2;

    SpectraSample bottom;
    bottom.n = n;
    bottom.seed = seed;
    bottom.residual = 0.0;
    bottom.alpha = eig_hermitian(col1, &bottom.residual);
    bottom.beta = eig_hermitian(col2, &bottom.residual);
    bottom.gamma = eig_hermitian(total, &bottom.residual);

    const int depth = std::min(n, 5);
    if (depth < 2) {
        return true; // 1-by-1 case carries no scale-m inequalities
    }
    const SoundnessReport report = soundness_check(bottom, depth, 1e-9);
    if (margins_checked != nullptr) {
        *margins_checked = report.margins_checked;
    }
    return report.violations == 0;
}

Rational weyl_margin(const QuantileTriple& Q, const Rational& a, const Rational& b) {
    if (a < 0 || b < 0 || a + b > 1) {
        throw PreconditionError("weyl_margin: need a, b >= 0 and a + b <= 1");
    }
    return -Q.q1.eval(a) - Q.q2.eval(b) + Q.q3.eval(a + b);
}

Rational kyfan_margin(const QuantileTriple& Q, const Rational& x) {
    if (x < 0 || x > 1) {
        throw PreconditionError("kyfan_margin: x outside [0,1]");
    }
    const Rational one(1);
    return Q.q1.integral_on(x, one) + Q.q2.integral_on(x, one) - Q.q3.integral_on(x, one);
}

Rational lidskii_margin(const QuantileTriple& Q, const StepQuantile& S, const Rational& mu) {
    const QuantileTriple inner{S, StepQuantile::constant(Rational(0)), S};
    return energy(Q, inner, mu);
}

} // namespace hornlab
