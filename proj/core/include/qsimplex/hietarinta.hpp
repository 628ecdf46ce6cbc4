#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "qsimplex/clifford.hpp"
#include "qsimplex/rng.hpp"
#include "qsimplex/tensalg.hpp"

namespace qsx {

/// The ten invertible 4x4 constant Yang-Baxter classes plus the permutation
/// operator.
enum class HClassId { h31, h21, h22, h23, h11, h12, h13, h14, h01, h02, perm };

const std::vector<HClassId>& all_h_classes();
std::string h_class_name(HClassId id);
HClassId h_class_from_name(const std::string& name);

/// Class parameters; each class reads the subset it uses (k, p, q, s).
struct HParams {
    cx k{1.0}, p{1.0}, q{1.0}, s{1.0};
};

/// The literal class matrix in braided form. With require_invertible the
/// parameters must keep the matrix nonsingular (smallest singular value
/// >= 1e-12 of largest), else std::runtime_error.
Mat build_yb(HClassId id, const HParams& params = {}, bool require_invertible = true);

/// 2-site permutation operator P.
Mat perm_p();

/// Braided -> vertex transform: P * Y for the ten Hietarinta classes. P
/// itself already satisfies the vertex equation, so the perm class maps to P
/// unchanged rather than to P*P = 1.
Mat vertex_form(HClassId id, const Mat& braided);

/// One compatible single-site operator family for a class.
struct MOption {
    std::string form;       // human-readable shape, e.g. "diag(m1,m4)"
    bool invertible;        // paper's invertibility flag
    std::function<Mat(Rng&)> sample;  // draws a well-conditioned instance
};

/// The per-class M families with [Y, M x M] = 0 (checked against the vertex
/// form actually used by lifts). Non-invertible options (projectors,
/// nilpotents) are included with invertible = false.
std::vector<MOption> compatible_m(HClassId id, const HParams& params = {});

enum class Placement { y_m, m_y };
std::string placement_name(Placement p);

/// Y (x) M or M (x) Y. Preconditions: ybe_vertex(y) <= 1e-10 and
/// ||[y, M x M]|| <= 1e-10; violations throw with the offending residual in
/// the message.
Mat lift(const Mat& y_vertex, const Mat& m, Placement placement);

struct GaugeTransform {
    Mat q;           // 2x2, |det| > 1e-12
    cx kappa{1.0};
};

/// kappa (Q x Q x Q) R (Q^-1 x Q^-1 x Q^-1).
Mat gauge_conjugate(const Mat& r, const GaugeTransform& g);

/// Deviation operator D = H R^-1 - R^dag H with H = (Q^dag Q)^(x3);
/// D = 0 exactly when the gauge-conjugated operator is unitary.
Mat deviation(const Mat& r, const Mat& q);

/// Structure report for H = (Q^dag Q)^(x3) driven by z = q1 conj(q2) + q3 conj(q4).
struct HPropositionReport {
    cx z;
    bool qdagq_diagonal = false;
    bool h_diag_nonzero = false;      // all H_ii away from zero
    bool h_offdiag_all_or_none = false;
    double min_h_diag = 0.0;
    int offdiag_zero_count = 0;
    int offdiag_total = 0;
};
HPropositionReport h_propositions(const Mat& q);

/// A point of one of the Table rows 2..7. `params` carries the row's named
/// scalars (p, q, r, thetap, thetaq, m1..m4 as applicable); `q` is the local
/// gauge matrix; `sign_branch` selects the +- choice of rows 5 and 6.
struct UnitaryFamilyPoint {
    int row = 2;
    Placement placement = Placement::y_m;
    int sign_branch = +1;
    std::map<std::string, cx> params;
    Mat q = Mat::Identity(2, 2);
    cx kappa{1.0};
};

struct FamilyCertificate {
    Mat t;                              // the conjugated 8x8 operator
    double unitarity = 0.0;             // ||T†T - 1|| relative
    double vertex_residual = 0.0;
    double edge_residual = 0.0;         // reported, never asserted: lifted
                                        // solutions need not satisfy the edge form
    double eigen_match = 0.0;           // distance to the closed-form multiset
    std::vector<cx> expected_eigenvalues;
    std::map<std::string, double> constraint_residuals;
};

/// Builds and certifies a family point. Row constraints are validated to
/// 1e-12 first; a violation throws std::invalid_argument naming the
/// constraint. |kappa| = 1 is enforced (scaling by a non-phase breaks
/// unitarity).
FamilyCertificate unitary_family(const UnitaryFamilyPoint& pt);

/// Closed-form eigenvalue multiset for a point (row formulas; rows 5 and 6
/// evaluated on the principal square-root branch).
std::vector<cx> family_eigenvalues(const UnitaryFamilyPoint& pt);

/// Row-1 closed form: {+-(a0-a1-a2-a3), +-(a1-a0-a2-a3), +-(a2-a0-a1-a3),
/// +-(a3-a0-a1-a2)}.
std::vector<cx> row1_eigenvalues(const CliffordCoeffs& c);

/// Draws a constraint-satisfying random point of the given row/placement/
/// branch; the workhorse behind the family sweeps.
UnitaryFamilyPoint sample_family_point(int row, Placement placement, int sign_branch, Rng& rng);

/// Numerical verification of the two stated reductions: (i) the Clifford
/// Yang-Baxter alpha XX + beta ZZ conjugates into the displayed H1,4-class
/// matrix and the appended operator maps to -Z; (ii) the projector
/// Yang-Baxter conjugates into the displayed H3,1 diagonals under the
/// antidiagonal and diagonal Q. Throws std::domain_error("branch
/// singularity") when alpha == beta.
struct Remark41Report {
    double h14_conj_residual = 0.0;
    double appended_minus_z_residual = 0.0;
    double h31_antidiag_residual = 0.0;
    double h31_diag_residual = 0.0;
};
Remark41Report remark41_equivalences(cx alpha, cx beta, cx p, const std::array<cx, 9>& proj_alpha);

}  // namespace qsx
