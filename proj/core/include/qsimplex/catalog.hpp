#pragma once

#include <vector>

#include "qsimplex/archive.hpp"

namespace qsx {

/// The 13 unitary families: row1 plus rows 2..7 in both placements.
std::vector<CatalogRecord> unitary_catalog();

/// Unitary families plus the non-unitary construction records (case 2,
/// case 3, word operators, higher-simplex lifts, spectral lift).
std::vector<CatalogRecord> full_catalog();

}  // namespace qsx
