#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace qsx {

using cx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

inline constexpr double kDefaultTol = 1e-10;

/// Registers larger than this are refused by dense checkers; use the
/// matrix-free probe mode instead.
inline constexpr Eigen::Index kDenseDimCap = 4096;

Mat pauli_x();
Mat pauli_y();
Mat pauli_z();
Mat identity(Eigen::Index dim);

/// (1 +- Z)/2 projectors onto the Z eigenbasis.
Mat proj_plus();
Mat proj_minus();

/// Kronecker product; site 1 is the most significant tensor leg.
Mat kron(const Mat& a, const Mat& b);
Mat kron(const Mat& a, const Mat& b, const Mat& c);

/// A local operator placed on an ordered list of register sites.
///
/// `op` acts on 2^k dimensions, leg i of `op` lives on sites[i]; sites are
/// 1-based and their order is significant (operators need not be
/// leg-symmetric). The register has `n_sites` qubits.
struct EmbeddedOperator {
    Mat op;
    std::vector<int> sites;
    int n_sites = 0;
};

/// Throws std::invalid_argument("invalid site list") on duplicate or
/// out-of-range sites, and on an op whose side is not 2^k.
void validate(const EmbeddedOperator& e);

/// Dense matrix acting as `op` on the listed sites and identity elsewhere.
/// Computed by basis-index arithmetic.
Mat embed(const EmbeddedOperator& e);

/// embed(e) * v without forming the full matrix.
Vec apply_embedded(const EmbeddedOperator& e, const Vec& v);

/// In-place m <- embed(e) * m, column by column. The workhorse behind the
/// dense relation checkers: a k-leg factor costs dim^2 * 2^k instead of dim^3.
void apply_embedded_left(const EmbeddedOperator& e, Mat& m);

/// In-place v <- embed(e) * v.
void apply_embedded_in_place(const EmbeddedOperator& e, Vec& v);

Mat dagger(const Mat& a);

/// Inverse with a singularity guard: throws std::runtime_error("singular
/// matrix") when the smallest singular value is below 1e-12 of the largest.
Mat inverse(const Mat& a);

double frobenius(const Mat& a);

/// ||a - b||_F / max(1, ||b||_F); the relative residual used everywhere.
double residual(const Mat& a, const Mat& b);

}  // namespace qsx
