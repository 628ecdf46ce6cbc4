#include "qsimplex/archive.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qsx {

namespace {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

[[noreturn]] void bad(const std::string& what) { throw std::runtime_error("SIMPLEXMAT: " + what); }

}  // namespace

void write_matrix(const Mat& m, std::ostream& out) {
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag()))
                bad("non-finite value");
    out << "SIMPLEXMAT 1\n";
    out << "dim " << m.rows() << " " << m.cols() << "\n";
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (j) out << ' ';
            out << fmt17(m(i, j).real()) << ',' << fmt17(m(i, j).imag());
        }
        out << '\n';
    }
}

void write_matrix(const Mat& m, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    write_matrix(m, out);
}

Mat read_matrix(std::istream& in) {
    std::string header;
    if (!std::getline(in, header) || header != "SIMPLEXMAT 1") bad("malformed header");
    std::string dimline;
    if (!std::getline(in, dimline)) bad("missing dim line");
    std::istringstream ds(dimline);
    std::string tag;
    long rows = 0, cols = 0;
    if (!(ds >> tag >> rows >> cols) || tag != "dim" || rows <= 0 || cols <= 0)
        bad("malformed dim line");
    Mat m(rows, cols);
    long count = 0;
    std::string token;
    while (in >> token) {
        if (count >= rows * cols) bad("entry count mismatch");
        auto comma = token.find(',');
        if (comma == std::string::npos) bad("malformed entry '" + token + "'");
        char* end = nullptr;
        double re = std::strtod(token.c_str(), &end);
        if (end != token.c_str() + comma) bad("malformed entry '" + token + "'");
        double im = std::strtod(token.c_str() + comma + 1, &end);
        if (*end != '\0') bad("malformed entry '" + token + "'");
        m(count / cols, count % cols) = cx(re, im);
        ++count;
    }
    if (count != rows * cols) bad("entry count mismatch");
    return m;
}

Mat read_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open: " + path);
    return read_matrix(in);
}

namespace {

void put(std::ostream& out, const char* key, const std::string& value) {
    out << key << ": " << value << '\n';
}

void check_unique_ids(const std::vector<CatalogRecord>& records) {
    std::set<std::string> seen;
    for (const auto& r : records)
        if (!seen.insert(r.family_id).second)
            throw std::runtime_error("duplicate family_id: " + r.family_id);
}

}  // namespace

void write_manifest(const std::vector<CatalogRecord>& records, std::ostream& out) {
    check_unique_ids(records);
    bool first = true;
    for (const auto& r : records) {
        if (!first) out << '\n';
        first = false;
        put(out, "family_id", r.family_id);
        put(out, "kind", r.kind);
        put(out, "aliases", r.aliases);
        put(out, "placement", r.placement);
        put(out, "parameters", r.parameters);
        put(out, "constraints", r.constraints);
        put(out, "eigenvalues", r.eigenvalues);
        put(out, "reference", r.reference);
    }
}

void write_manifest(const std::vector<CatalogRecord>& records, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    write_manifest(records, out);
}

std::vector<CatalogRecord> read_manifest(std::istream& in) {
    std::vector<CatalogRecord> records;
    CatalogRecord cur;
    bool have = false;
    auto flush = [&] {
        if (have) records.push_back(cur);
        cur = CatalogRecord{};
        have = false;
    };
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) {
            flush();
            continue;
        }
        auto colon = line.find(": ");
        if (colon == std::string::npos) throw std::runtime_error("manifest: malformed line '" + line + "'");
        std::string key = line.substr(0, colon);
        std::string value = line.substr(colon + 2);
        have = true;
        if (key == "family_id") cur.family_id = value;
        else if (key == "kind") cur.kind = value;
        else if (key == "aliases") cur.aliases = value;
        else if (key == "placement") cur.placement = value;
        else if (key == "parameters") cur.parameters = value;
        else if (key == "constraints") cur.constraints = value;
        else if (key == "eigenvalues") cur.eigenvalues = value;
        else if (key == "reference") cur.reference = value;
        else throw std::runtime_error("manifest: unknown key '" + key + "'");
    }
    flush();
    check_unique_ids(records);
    return records;
}

std::vector<CatalogRecord> read_manifest(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open: " + path);
    return read_manifest(in);
}

}  // namespace qsx
