#include "qsimplex/unitary.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace qsx {

UnitarityReport certify(const Mat& r, double tol) {
    if (r.rows() != r.cols()) throw std::invalid_argument("certify requires a square matrix");
    UnitarityReport rep;
    rep.residual_rrdag = residual(r.adjoint() * r, Mat::Identity(r.rows(), r.cols()));
    double dev = 0.0;
    for (const cx& lambda : spectrum(r)) dev = std::max(dev, std::abs(std::abs(lambda) - 1.0));
    rep.eigen_moduli_max_dev = dev;
    rep.is_unitary = rep.residual_rrdag <= tol && rep.eigen_moduli_max_dev <= tol;
    return rep;
}

std::vector<cx> spectrum(const Mat& r) {
    if (r.rows() != r.cols()) throw std::invalid_argument("spectrum requires a square matrix");
    Eigen::ComplexEigenSolver<Mat> solver(r, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success) throw std::runtime_error("eigenvalue iteration failed");
    std::vector<cx> values(r.rows());
    for (Eigen::Index i = 0; i < r.rows(); ++i) values[i] = solver.eigenvalues()(i);
    return phase_sorted(values);
}

std::vector<cx> phase_sorted(std::vector<cx> values) {
    std::sort(values.begin(), values.end(), [](const cx& a, const cx& b) {
        double pa = std::arg(a), pb = std::arg(b);
        if (pa != pb) return pa < pb;
        return std::abs(a) < std::abs(b);
    });
    return values;
}

double multiset_distance(const std::vector<cx>& a, const std::vector<cx>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("multiset size mismatch");
    // Phase-sorting alone is fragile at the -pi/pi cut (an eigenvalue -1 with
    // +-1e-16 imaginary noise sorts to opposite ends), so pair globally
    // closest entries instead. Sizes here are <= 32.
    const std::size_t n = a.size();
    std::vector<bool> used_a(n, false), used_b(n, false);
    double worst = 0.0;
    for (std::size_t round = 0; round < n; ++round) {
        double best = std::numeric_limits<double>::infinity();
        std::size_t bi = 0, bj = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (used_a[i]) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (used_b[j]) continue;
                double d = std::abs(a[i] - b[j]);
                if (d < best) {
                    best = d;
                    bi = i;
                    bj = j;
                }
            }
        }
        used_a[bi] = used_b[bj] = true;
        worst = std::max(worst, best);
    }
    return worst;
}

}  // namespace qsx
