#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "qsimplex/tensalg.hpp"

namespace qsx {

/// One factor of a simplex relation: which operator slot goes on which sites.
struct SlotTerm {
    int slot;
    std::vector<int> sites;
};

/// Declarative simplex-type equation:
///   product(lhs) = rhs_scale * product(rhs)
/// on an n_sites qubit register. Slot ids reference operators supplied at
/// check time, so one relation covers whole operator families.
struct SimplexRelation {
    std::string name;
    int n_sites = 0;
    std::vector<SlotTerm> lhs;
    std::vector<SlotTerm> rhs;
    cx rhs_scale = 1.0;
};

// Built-in relations.
const SimplexRelation& rel_tetra_vertex();   // R123 R145 R246 R356 = reverse
const SimplexRelation& rel_tetra_edge();     // R123 R124 R134 R234 = reverse (Frenkel-Moore)
const SimplexRelation& rel_ybe_vertex();     // Y12 Y13 Y23 = Y23 Y13 Y12
const SimplexRelation& rel_ybe_braided();    // Y12 Y23 Y12 = Y23 Y12 Y23
const SimplexRelation& rel_four_simplex();   // 5 factors on 10 sites
const SimplexRelation& rel_five_simplex();   // 6 factors on 15 sites
const SimplexRelation& rel_anti_tetra_vertex();    // rhs_scale -1
const SimplexRelation& rel_anti_four_simplex();    // rhs_scale -1

/// Mixed-word tetrahedron relation with slot 1 in the outer positions and
/// slot 2 (the signed operator) in slots 145 and 246.
SimplexRelation rel_signed_word_tetra(cx rhs_scale);

using SlotMap = std::map<int, Mat>;

/// Dense residual: residual(LHS product, rhs_scale * RHS product).
/// Refuses registers above kDenseDimCap.
double check_relation(const SimplexRelation& rel, const SlotMap& slots);

/// Matrix-free residual: max over normalized Gaussian probes v of
/// ||LHS v - rhs_scale * RHS v|| / max(1, ||RHS v||). Deterministic per
/// (seed, probe index).
double check_relation(const SimplexRelation& rel, const SlotMap& slots, int probes,
                      std::uint64_t seed);

// Wrappers over the built-ins for the common single-operator cases.
double tetra_vertex(const Mat& r);          // r is 8x8
double tetra_edge(const Mat& r);            // r is 8x8
double ybe_braided(const Mat& y);           // y is 4x4
double ybe_vertex(const Mat& y);            // y is 4x4
double anti_tetra_vertex(const Mat& r);
double four_simplex(const Mat& r);          // r is 16x16, dense (dim 1024)
double five_simplex(const Mat& r, int probes, std::uint64_t seed);  // r is 32x32

/// residual of the signed-word relation with R in the outer slots and Rminus
/// in slots 145/246; rhs_scale is +1 for the ACA/BCB word, -1 for ACB/BCA.
double signed_word_tetra(const Mat& r, const Mat& rminus, cx rhs_scale);

/// Generalized Yang-Baxter pair:
///   residual_yb of Y12 Y13 Y23 = alpha * Y23 Y13 Y12,
///   residual_mm of M1 M2 Y12 = (1/alpha) * Y12 M1 M2.
std::pair<double, double> generalized_ybe(const Mat& y, const Mat& m, cx alpha);

/// Spectral-parameter tetrahedron residual for T_ijk(mu) = Y_ij(mu) M_k.
/// The four slot parameters are inherited from the Yang-Baxter legs:
/// mu123 <- mu12, mu145 <- mu14, mu246 <- mu24, mu356 <- mu35.
/// Throws std::runtime_error("M incompatible with Y(mu)") if [M x M, Y(mu)]
/// exceeds 1e-10 at any supplied parameter.
struct SpectralParams {
    double mu123, mu145, mu246, mu356;
};
double spectral_tetra(const std::function<Mat(double)>& y_family, const Mat& m,
                      const SpectralParams& mu);

}  // namespace qsx
