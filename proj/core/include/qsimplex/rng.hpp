#pragma once

#include <complex>
#include <cstdint>

#include <Eigen/Dense>

namespace qsx {

/// Deterministic pseudo-random stream (splitmix64 + Box-Muller).
///
/// Verification residuals must be reproducible across platforms and standard
/// libraries, so the probe/sample generators avoid std::normal_distribution
/// (whose output is implementation-defined) and use this fixed scheme instead.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1).
    double uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Standard normal via Box-Muller.
    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        double u2 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    std::complex<double> gaussian_cx() {
        double re = gaussian();
        double im = gaussian();
        return {re, im};
    }

    Eigen::VectorXcd gaussian_vector(Eigen::Index dim) {
        Eigen::VectorXcd v(dim);
        for (Eigen::Index i = 0; i < dim; ++i) v(i) = gaussian_cx();
        return v;
    }

    Eigen::MatrixXcd gaussian_matrix(Eigen::Index rows, Eigen::Index cols) {
        Eigen::MatrixXcd m(rows, cols);
        for (Eigen::Index i = 0; i < rows; ++i)
            for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = gaussian_cx();
        return m;
    }

    /// Haar-ish unitary from the QR factorization of a Gaussian matrix.
    Eigen::MatrixXcd random_unitary(Eigen::Index dim) {
        Eigen::MatrixXcd g = gaussian_matrix(dim, dim);
        Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
        Eigen::MatrixXcd q = qr.householderQ();
        Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
        for (Eigen::Index i = 0; i < dim; ++i) {
            std::complex<double> d = r(i, i);
            double a = std::abs(d);
            q.col(i) *= (a > 0.0) ? d / a : 1.0;
        }
        return q;
    }

private:
    std::uint64_t state_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

/// Mixes a seed with a stream index so that parallel evaluation of probe i
/// reproduces the sequential result.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    Rng r(seed ^ (0x632be59bd9b4e019ull * (index + 1)));
    return r.next_u64();
}

/// Normalized Gaussian probe vector, deterministic per (seed, index).
inline Eigen::VectorXcd probe_vector(std::uint64_t seed, std::uint64_t index,
                                     Eigen::Index dim) {
    Rng r(mix_seed(seed, index));
    Eigen::VectorXcd v = r.gaussian_vector(dim);
    v /= v.norm();
    return v;
}

}  // namespace qsx
