#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qsimplex/tensalg.hpp"

namespace qsx {

/// One catalog entry: either a unitary family of Table-row provenance or a
/// non-unitary construction, distinguished by `kind`.
struct CatalogRecord {
    std::string family_id;
    std::string kind;         // "unitary" | "construction"
    std::string aliases;      // comma-separated alternate names
    std::string placement;    // "Y@M", "M@Y", or "-"
    std::string parameters;   // names + domains, human-readable
    std::string constraints;  // constraint description
    std::string eigenvalues;  // closed-form eigenvalue description
    std::string reference;    // anchor text
};

// SIMPLEXMAT 1 text format:
//   line 1: "SIMPLEXMAT 1"
//   line 2: "dim R C"
//   R rows of C whitespace-separated "re,im" tokens, 17 significant digits.
// Round-trips bit-exactly for finite doubles.
void write_matrix(const Mat& m, std::ostream& out);
void write_matrix(const Mat& m, const std::string& path);
Mat read_matrix(std::istream& in);
Mat read_matrix(const std::string& path);

// Manifest: one "key: value" line per field, records separated by blank
// lines. Duplicate family ids are rejected on both write and read.
void write_manifest(const std::vector<CatalogRecord>& records, std::ostream& out);
void write_manifest(const std::vector<CatalogRecord>& records, const std::string& path);
std::vector<CatalogRecord> read_manifest(std::istream& in);
std::vector<CatalogRecord> read_manifest(const std::string& path);

}  // namespace qsx
