#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qsimplex/tensalg.hpp"

namespace qsx {

/// Lift of a lower simplex solution to a 4-/5-simplex operator: the base
/// (4x4 vertex-form Yang-Baxter Y, or 8x8 tetrahedron T) occupies a run of
/// legs starting at `position` (0-based), single-site copies of `m` fill the
/// rest.
struct LiftSpec {
    Mat base;
    Mat m;
    int position = 0;
};

/// 16x16 operator: Y at legs (position, position+1) of 4, or T at legs
/// (0,1,2) with one M. Preconditions: the base solves its own vertex
/// relation to 1e-10 and the commutant [base, M x.. M] vanishes to 1e-10;
/// violations throw with the offending residual.
Mat lift_4simplex(const LiftSpec& spec);

/// 32x32 operator: Y plus three M legs (positions 0..3) or T plus two.
Mat lift_5simplex(const LiftSpec& spec);

/// Commutant residual of [base, M^(x legs)]; the gate checked before lifting.
double lift_commutant(const LiftSpec& spec);

/// Appendix-style word operators over a mutually anticommuting triple:
/// A_i A_j A_k C_l + B_i B_j B_k C_l (16x16, solves the anti-4-simplex
/// relation) and A^4 C + B^4 C (32x32, solves the 5-simplex relation).
Mat anti4_word(const Mat& a, const Mat& b, const Mat& c);
Mat five_word(const Mat& a, const Mat& b, const Mat& c);

/// Shipped single-site candidates for T-based lifts (identity and the three
/// Pauli operators); which of them pass the 3-local commutant depends on T
/// and is reported by lift_commutant.
std::vector<std::pair<std::string, Mat>> t_lift_m_candidates();

}  // namespace qsx
