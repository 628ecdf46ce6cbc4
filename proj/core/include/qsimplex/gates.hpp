#pragma once

#include <string>
#include <vector>

#include "qsimplex/tensalg.hpp"
#include "qsimplex/unitary.hpp"

namespace qsx {

/// Register sites used for the (i, j, k) legs of a recipe; any permutation of
/// (1, 2, 3).
struct Sites3 {
    int i = 1, j = 2, k = 3;
};

/// An ordered product of tetrahedron factors realizing a named gate. Each
/// factor is an 8x8 operator on the (i, j, k) legs; `factors[0]` is the
/// leftmost factor of the product. `target` is the canonical gate matrix on
/// the same legs.
struct GateRecipe {
    std::string name;
    std::vector<EmbeddedOperator> factors;
    Mat target;
};

/// Ordered product of the factors on the 3-qubit register (identity for an
/// empty recipe).
Mat compose(const GateRecipe& recipe);

struct GateReport {
    std::vector<double> factor_vertex;            // tetra_vertex per factor
    std::vector<UnitarityReport> factor_unitary;  // certification per factor
    double product_target_residual = 0.0;
    bool pass = false;
};

/// Per-factor tetrahedron residuals and unitarity plus the product-vs-target
/// residual.
GateReport verify(const GateRecipe& recipe, double tol = kDefaultTol);

/// One-factor recipe lambda+ 1 + (lambda- - lambda+) Gamma- embedded at
/// `site`; scalar gates (lambda+ = lambda-) become the scalar itself.
/// Throws std::invalid_argument on a non-unitary input.
GateRecipe single_qubit_gate(const Mat& u, int site, const Sites3& s = {});

GateRecipe cz(const Sites3& s = {});
GateRecipe cnot(const Sites3& s = {});
/// Controlled U(phi, psi) with U = e^{i psi} (cos phi 1 + i sin phi X);
/// reduces to CNOT at (pi/2, -pi/2).
GateRecipe controlled_u(double phi, double psi, const Sites3& s = {});
GateRecipe swap_gate(const Sites3& s = {});
GateRecipe iswap(const Sites3& s = {});
GateRecipe ccz(const Sites3& s = {});
GateRecipe toffoli(const Sites3& s = {});
/// Deutsch gate at psi = pi/2, phi = -lambda: the target block is
/// (i cos lambda, sin lambda; sin lambda, i cos lambda).
GateRecipe deutsch(double lambda, const Sites3& s = {});
GateRecipe margolus(const Sites3& s = {});
GateRecipe fredkin(const Sites3& s = {});

}  // namespace qsx
