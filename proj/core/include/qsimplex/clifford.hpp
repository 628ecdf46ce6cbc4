#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "qsimplex/tensalg.hpp"

namespace qsx {

/// Word pattern of the two Clifford tetrahedron ansatzes built from an
/// anticommuting pair (A, B):
///   bbb_aab: a0 BBB + a1 AAB + a2 ABA + a3 BAA
///   aaa_bba: a0 AAA + a1 BBA + a2 BAB + a3 ABB
enum class CliffordVariant { bbb_aab, aaa_bba };

struct CliffordCoeffs {
    std::array<cx, 4> alpha{};
    CliffordVariant variant = CliffordVariant::bbb_aab;
};

/// a1 X + a2 Y + a3 Z. Case-1 admissibility is a1^2 + a2^2 + a3^2 = 1
/// (complex sum, no identity component).
struct PauliVector {
    cx a1{}, a2{}, a3{};
    Mat materialize() const;
    /// |a1^2 + a2^2 + a3^2 - 1|
    double case1_residual() const;
};

/// The 8x8 operator sum of the variant's four words. Requires AB = -BA to
/// 1e-12; throws std::invalid_argument("operators do not anticommute").
Mat clifford_tetra(const CliffordCoeffs& c, const Mat& a, const Mat& b);

/// Absolute values of the three bilinear unitarity constraints and of the
/// norm defect |sum |a_t|^2 - 1|.
std::array<double, 4> constraint_residual(const CliffordCoeffs& c);

/// All-moduli-1/2 solutions, rows 1..3: the phase pattern places e^{i psi}
/// and e^{i phi} on complementary index pairs.
CliffordCoeffs table1_solution(int row, double psi, double phi);

/// Three-equal-moduli solution (t e^{i gamma}, sqrt(1-3t^2) e^{i theta},
/// t e^{i gamma}, t e^{i gamma}). The constraints couple the phases:
/// cos(gamma - theta) = t / sqrt(1 - 3 t^2), so the two-argument form derives
/// an admissible theta (requires t <= 1/2); the explicit-theta form returns
/// the literal coefficients and leaves admissibility to the caller.
CliffordCoeffs table2_three_equal(double t, double gamma, int theta_branch = +1);
CliffordCoeffs table2_three_equal_explicit(double t, double gamma, double theta);

/// Two-pairs-of-equal-moduli solution
/// (s, sqrt(1-s^2) e^{-i pi/2}, s e^{i pi/2}, sqrt(1-s^2) e^{i pi}).
CliffordCoeffs table2_two_equal(double s);

/// r1 = r2 = 0 solution: (cos(phi) e^{i theta}, 0, 0, sin(phi) e^{i(theta+pi/2)}).
CliffordCoeffs two_zero_solution(double phi, double theta);

struct SolveOptions {
    std::uint64_t seed = 0;
    int max_iter = 500;
    double tol = 1e-10;
    std::optional<CliffordCoeffs> start;
};

struct SolveResult {
    CliffordCoeffs coeffs;
    std::array<double, 4> residuals{};
    int iterations = 0;
};

/// Finds coefficients with all four constraint residuals <= tol by damped
/// Gauss-Newton over (t_j, theta_j) with r_j = t_j^2, from a seeded random
/// start (or `start` if given). Throws std::runtime_error carrying the best
/// residual on non-convergence.
SolveResult solve_constraints(const SolveOptions& opt);

/// Case-2 operator over A = Z, B = X + iY (so B^2 = 0): coefficient d sits on
/// the variant's pure word, (a, b, c) on the three mixed words in the order
/// listed for the variant.
Mat case2_tetra(double a, double b, double c, double d, const std::array<double, 4>& phases,
                CliffordVariant variant);

/// Smallest n <= max_power with ||R^n|| <= tol, or nullopt.
std::optional<int> nilpotency_check(const Mat& r, int max_power = 8, double tol = 1e-12);

/// 27 coefficients indexed by (m, n, l) over the commuting factors
/// A1 = 1, A2 = Pi-, A3 = Pi+ (index = 9m + 3n + l, zero-based).
struct ProjectorCoeffs {
    std::array<cx, 27> alpha{};
    cx& at(int m, int n, int l) { return alpha[9 * m + 3 * n + l]; }
    const cx& at(int m, int n, int l) const { return alpha[9 * m + 3 * n + l]; }
};

/// Diagonal 8x8 case-3 operator; unitary iff every diagonal entry has unit
/// modulus.
Mat case3_tetra(const ProjectorCoeffs& p);
std::array<cx, 8> case3_diagonal(const ProjectorCoeffs& p);

enum class AbcPlacement { c_last, c_first };

/// alpha A_i A_j C_k + beta B_i B_j C_k (or the C-first variant) for a
/// mutually anticommuting triple. Unitary when |alpha|^2 + |beta|^2 = 1 and
/// cos(arg alpha - arg beta) = 0.
Mat abc_tetra(cx alpha, cx beta, const Mat& a, const Mat& b, const Mat& c, AbcPlacement placement);

}  // namespace qsx
