#pragma once

#include <vector>

#include "qsimplex/tensalg.hpp"

namespace qsx {

/// Result of a unitarity certification.
struct UnitarityReport {
    double residual_rrdag = 0.0;       // ||R†R - 1|| relative
    double eigen_moduli_max_dev = 0.0; // max | |lambda_i| - 1 |
    bool is_unitary = false;           // both residuals within tolerance
};

UnitarityReport certify(const Mat& r, double tol = kDefaultTol);

/// Numerically computed eigenvalues, sorted by phase (then modulus).
std::vector<cx> spectrum(const Mat& r);

/// Sorts a copy of `values` by (phase, modulus); shared by spectrum and the
/// eigenvalue-formula comparisons.
std::vector<cx> phase_sorted(std::vector<cx> values);

/// Max pairwise distance after phase-sorting both multisets; the eigenvalue
/// comparison used by the family certificates. Throws on size mismatch.
double multiset_distance(const std::vector<cx>& a, const std::vector<cx>& b);

}  // namespace qsx
