#include "qsimplex/clifford.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "qsimplex/rng.hpp"

namespace qsx {

namespace {

constexpr double kPi = 3.14159265358979323846;

Mat word(const Mat& p1, const Mat& p2, const Mat& p3) { return kron(p1, p2, p3); }

void require_anticommuting(const Mat& a, const Mat& b) {
    if ((a * b + b * a).norm() > 1e-12)
        throw std::invalid_argument("operators do not anticommute");
}

}  // namespace

Mat PauliVector::materialize() const { return a1 * pauli_x() + a2 * pauli_y() + a3 * pauli_z(); }

double PauliVector::case1_residual() const {
    return std::abs(a1 * a1 + a2 * a2 + a3 * a3 - cx(1.0, 0.0));
}

Mat clifford_tetra(const CliffordCoeffs& c, const Mat& a, const Mat& b) {
    require_anticommuting(a, b);
    const auto& al = c.alpha;
    if (c.variant == CliffordVariant::bbb_aab)
        return al[0] * word(b, b, b) + al[1] * word(a, a, b) + al[2] * word(a, b, a) +
               al[3] * word(b, a, a);
    return al[0] * word(a, a, a) + al[1] * word(b, b, a) + al[2] * word(b, a, b) +
           al[3] * word(a, b, b);
}

std::array<double, 4> constraint_residual(const CliffordCoeffs& c) {
    const auto& a = c.alpha;
    cx c1 = a[0] * std::conj(a[1]) - a[3] * std::conj(a[2]) - a[2] * std::conj(a[3]) +
            a[1] * std::conj(a[0]);
    cx c2 = -a[3] * std::conj(a[1]) + a[0] * std::conj(a[2]) - a[1] * std::conj(a[3]) +
            a[2] * std::conj(a[0]);
    cx c3 = -a[2] * std::conj(a[1]) - a[1] * std::conj(a[2]) + a[0] * std::conj(a[3]) +
            a[3] * std::conj(a[0]);
    double norm_defect =
        std::abs(std::norm(a[0]) + std::norm(a[1]) + std::norm(a[2]) + std::norm(a[3]) - 1.0);
    return {std::abs(c1), std::abs(c2), std::abs(c3), norm_defect};
}

CliffordCoeffs table1_solution(int row, double psi, double phi) {
    cx ep = std::polar(0.5, psi);
    cx ef = std::polar(0.5, phi);
    CliffordCoeffs c;
    switch (row) {
        case 1: c.alpha = {ep, ep, ef, ef}; break;
        case 2: c.alpha = {ep, ef, ep, ef}; break;
        case 3: c.alpha = {ep, ef, ef, ep}; break;
        default: throw std::invalid_argument("table1_solution: row must be 1..3");
    }
    return c;
}

CliffordCoeffs table2_three_equal_explicit(double t, double gamma, double theta) {
    if (1.0 - 3.0 * t * t < 0.0) throw std::domain_error("three-equal solution needs 1 - 3t^2 >= 0");
    double u = std::sqrt(1.0 - 3.0 * t * t);
    CliffordCoeffs c;
    c.alpha = {std::polar(t, gamma), std::polar(u, theta), std::polar(t, gamma), std::polar(t, gamma)};
    return c;
}

CliffordCoeffs table2_three_equal(double t, double gamma, int theta_branch) {
    if (1.0 - 3.0 * t * t < 0.0) throw std::domain_error("three-equal solution needs 1 - 3t^2 >= 0");
    double u = std::sqrt(1.0 - 3.0 * t * t);
    if (t > u) throw std::domain_error("three-equal phase relation needs t <= 1/2");
    double delta = (t == 0.0 && u == 0.0) ? 0.0 : std::acos(t / u);
    double theta = gamma - (theta_branch >= 0 ? delta : -delta);
    return table2_three_equal_explicit(t, gamma, theta);
}

CliffordCoeffs table2_two_equal(double s) {
    if (s < -1.0 || s > 1.0) throw std::domain_error("two-equal solution needs |s| <= 1");
    // the tabulated row carries total squared modulus 2; scale onto S^3
    const double n = 1.0 / std::sqrt(2.0);
    double u = std::sqrt(1.0 - s * s);
    CliffordCoeffs c;
    c.alpha = {cx(n * s, 0.0), std::polar(n * u, -kPi / 2), std::polar(n * s, kPi / 2),
               std::polar(n * u, kPi)};
    return c;
}

CliffordCoeffs two_zero_solution(double phi, double theta) {
    CliffordCoeffs c;
    c.alpha = {std::polar(std::cos(phi), theta), 0.0, 0.0, std::polar(std::sin(phi), theta + kPi / 2)};
    return c;
}

namespace {

// Constraint system over the Cartesian unknowns (Re a_j, Im a_j):
//   f0 = 2 Re(a0 conj a1) - 2 Re(a2 conj a3)
//   f1 = 2 Re(a0 conj a2) - 2 Re(a1 conj a3)
//   f2 = 2 Re(a0 conj a3) - 2 Re(a1 conj a2)
//   f3 = sum |a|^2 - 1
// All four are plain quadratics, so the Jacobian is linear in the unknowns
// and has no parameterization degeneracies at vanishing moduli.
struct Unknowns {
    Eigen::Matrix<double, 8, 1> x;  // (re0, im0, ..., re3, im3)

    cx a(int j) const { return {x(2 * j), x(2 * j + 1)}; }

    CliffordCoeffs coeffs(CliffordVariant variant) const {
        CliffordCoeffs c;
        c.variant = variant;
        for (int j = 0; j < 4; ++j) c.alpha[j] = a(j);
        return c;
    }
};

Eigen::Vector4d constraints(const Unknowns& u) {
    auto dot = [&](int p, int q) {
        return u.x(2 * p) * u.x(2 * q) + u.x(2 * p + 1) * u.x(2 * q + 1);
    };
    Eigen::Vector4d f;
    f(0) = 2.0 * (dot(0, 1) - dot(2, 3));
    f(1) = 2.0 * (dot(0, 2) - dot(1, 3));
    f(2) = 2.0 * (dot(0, 3) - dot(1, 2));
    f(3) = dot(0, 0) + dot(1, 1) + dot(2, 2) + dot(3, 3) - 1.0;
    return f;
}

Eigen::Matrix<double, 4, 8> jacobian(const Unknowns& u) {
    Eigen::Matrix<double, 4, 8> j = Eigen::Matrix<double, 4, 8>::Zero();
    const int rows[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
    for (int f = 0; f < 3; ++f) {
        int a = rows[f][0], b = rows[f][1], c = rows[f][2], d = rows[f][3];
        for (int part = 0; part < 2; ++part) {
            j(f, 2 * a + part) += 2.0 * u.x(2 * b + part);
            j(f, 2 * b + part) += 2.0 * u.x(2 * a + part);
            j(f, 2 * c + part) -= 2.0 * u.x(2 * d + part);
            j(f, 2 * d + part) -= 2.0 * u.x(2 * c + part);
        }
    }
    for (int t = 0; t < 8; ++t) j(3, t) = 2.0 * u.x(t);
    return j;
}

double worst_residual(const std::array<double, 4>& r) {
    return std::max(std::max(r[0], r[1]), std::max(r[2], r[3]));
}

}  // namespace

SolveResult solve_constraints(const SolveOptions& opt) {
    Rng rng(opt.seed);
    Unknowns u;
    CliffordVariant variant = CliffordVariant::bbb_aab;
    auto random_point = [&] {
        for (int t = 0; t < 8; ++t) u.x(t) = 0.5 * rng.gaussian();
    };
    if (opt.start) {
        variant = opt.start->variant;
        for (int j = 0; j < 4; ++j) {
            u.x(2 * j) = opt.start->alpha[j].real();
            u.x(2 * j + 1) = opt.start->alpha[j].imag();
        }
    } else {
        random_point();
    }

    SolveResult result;
    result.coeffs = u.coeffs(variant);
    result.residuals = constraint_residual(result.coeffs);
    if (worst_residual(result.residuals) <= opt.tol) return result;

    double lambda = 1e-3;
    Eigen::Vector4d f = constraints(u);
    double best = worst_residual(result.residuals);
    for (int iter = 1; iter <= opt.max_iter; ++iter) {
        Eigen::Matrix<double, 4, 8> j = jacobian(u);
        Eigen::Matrix<double, 8, 8> lhs = j.transpose() * j;
        lhs.diagonal().array() += lambda;
        Eigen::Matrix<double, 8, 1> step = lhs.ldlt().solve(-j.transpose() * f);
        Unknowns trial = u;
        trial.x += step;
        Eigen::Vector4d ftrial = constraints(trial);
        if (ftrial.squaredNorm() < f.squaredNorm()) {
            u = trial;
            f = ftrial;
            lambda = std::max(lambda / 10.0, 1e-14);
        } else {
            lambda *= 10.0;
        }
        if (lambda > 1e8) {
            // damping has swallowed the step; restart from a fresh point
            random_point();
            f = constraints(u);
            lambda = 1e-3;
        }
        CliffordCoeffs cand = u.coeffs(variant);
        std::array<double, 4> res = constraint_residual(cand);
        result.iterations = iter;
        if (worst_residual(res) < best) {
            best = worst_residual(res);
            result.coeffs = cand;
            result.residuals = res;
        }
        if (worst_residual(res) <= opt.tol) {
            result.coeffs = cand;
            result.residuals = res;
            return result;
        }
    }
    char msg[96];
    std::snprintf(msg, sizeof msg, "solve_constraints did not converge; best residual %.3e", best);
    throw std::runtime_error(msg);
}

Mat case2_tetra(double a, double b, double c, double d, const std::array<double, 4>& phases,
                CliffordVariant variant) {
    const Mat za = pauli_z();
    const Mat xb = pauli_x() + cx(0, 1) * pauli_y();  // squares to 0
    CliffordCoeffs coeffs;
    coeffs.variant = variant;
    coeffs.alpha = {std::polar(d, phases[3]), std::polar(a, phases[0]), std::polar(b, phases[1]),
                    std::polar(c, phases[2])};
    // pure word carries d: for aaa_bba that is AAA with A = Z (invertible);
    // for bbb_aab it is BBB with B nilpotent.
    return clifford_tetra(coeffs, za, xb);
}

std::optional<int> nilpotency_check(const Mat& r, int max_power, double tol) {
    Mat acc = r;
    for (int n = 1; n <= max_power; ++n) {
        if (acc.norm() <= tol) return n;
        acc = acc * r;
    }
    return std::nullopt;
}

Mat case3_tetra(const ProjectorCoeffs& p) {
    std::array<cx, 8> d = case3_diagonal(p);
    Mat out = Mat::Zero(8, 8);
    for (int i = 0; i < 8; ++i) out(i, i) = d[i];
    return out;
}

std::array<cx, 8> case3_diagonal(const ProjectorCoeffs& p) {
    // factor diagonals on (|0>, |1>): 1 -> (1,1), Pi- -> (0,1), Pi+ -> (1,0)
    const double diag[3][2] = {{1, 1}, {0, 1}, {1, 0}};
    std::array<cx, 8> out{};
    for (int m = 0; m < 3; ++m)
        for (int n = 0; n < 3; ++n)
            for (int l = 0; l < 3; ++l) {
                cx coef = p.at(m, n, l);
                if (coef == cx(0.0, 0.0)) continue;
                for (int b = 0; b < 8; ++b) {
                    double w = diag[m][(b >> 2) & 1] * diag[n][(b >> 1) & 1] * diag[l][b & 1];
                    out[b] += coef * w;
                }
            }
    return out;
}

Mat abc_tetra(cx alpha, cx beta, const Mat& a, const Mat& b, const Mat& c, AbcPlacement placement) {
    require_anticommuting(a, b);
    require_anticommuting(a, c);
    require_anticommuting(b, c);
    if (placement == AbcPlacement::c_last) return alpha * word(a, a, c) + beta * word(b, b, c);
    return alpha * word(c, a, a) + beta * word(c, b, b);
}

}  // namespace qsx
