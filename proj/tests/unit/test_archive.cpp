#include "doctest.h"

#include <filesystem>
#include <sstream>

#include "qsimplex/archive.hpp"
#include "qsimplex/catalog.hpp"
#include "qsimplex/hietarinta.hpp"
#include "qsimplex/rng.hpp"
#include "test_helpers.hpp"

using namespace qsx;

TEST_CASE("identity round-trips through the text format") {
    std::ostringstream out;
    write_matrix(identity(2), out);
    std::string text = out.str();
    CHECK(text.rfind("SIMPLEXMAT 1\ndim 2 2\n", 0) == 0);
    CHECK(text.find("1,0 0,0") != std::string::npos);
    std::istringstream in(text);
    CHECK((read_matrix(in) - identity(2)).norm() == 0.0);
}

TEST_CASE("matrices round-trip bit-exactly") {
    Rng rng(120);
    for (int t = 0; t < 20; ++t) {
        Eigen::Index rows = 1 + Eigen::Index(rng.next_u64() % 9);
        Eigen::Index cols = 1 + Eigen::Index(rng.next_u64() % 9);
        Mat m = rng.gaussian_matrix(rows, cols);
        if (t % 3 == 0) m *= 1e-13;  // exercise subnormal-ish magnitudes
        std::ostringstream out;
        write_matrix(m, out);
        std::istringstream in(out.str());
        Mat back = read_matrix(in);
        REQUIRE(back.rows() == rows);
        for (Eigen::Index i = 0; i < rows; ++i)
            for (Eigen::Index j = 0; j < cols; ++j) {
                CHECK(back(i, j).real() == m(i, j).real());
                CHECK(back(i, j).imag() == m(i, j).imag());
            }
        // re-serialization is byte-identical
        std::ostringstream out2;
        write_matrix(back, out2);
        CHECK(out.str() == out2.str());
    }
}

TEST_CASE("a family representative round-trips bit-exactly") {
    Rng rng(121);
    FamilyCertificate cert = unitary_family(sample_family_point(3, Placement::y_m, +1, rng));
    std::ostringstream out;
    write_matrix(cert.t, out);
    std::istringstream in(out.str());
    Mat back = read_matrix(in);
    CHECK((back - cert.t).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("malformed inputs are rejected") {
    auto read_text = [](const std::string& text) {
        std::istringstream in(text);
        return read_matrix(in);
    };
    CHECK_THROWS_AS((void)read_text("SIMPLEXMAT 2\ndim 1 1\n0,0\n"), std::runtime_error);
    CHECK_THROWS_AS((void)read_text("dim 1 1\n0,0\n"), std::runtime_error);
    CHECK_THROWS_AS((void)read_text("SIMPLEXMAT 1\ndim 0 1\n"), std::runtime_error);
    CHECK_THROWS_AS((void)read_text("SIMPLEXMAT 1\ndim 2 2\n1,0 0,0\n0,0\n"), std::runtime_error);
    CHECK_THROWS_AS((void)read_text("SIMPLEXMAT 1\ndim 1 1\n1;0\n"), std::runtime_error);
    CHECK_THROWS_AS((void)read_text("SIMPLEXMAT 1\ndim 1 1\n1,0 2,0\n"), std::runtime_error);

    Mat bad(1, 1);
    bad(0, 0) = std::numeric_limits<double>::infinity();
    std::ostringstream out;
    CHECK_THROWS_AS(write_matrix(bad, out), std::runtime_error);
}

TEST_CASE("file round-trip") {
    auto path = std::filesystem::temp_directory_path() / "qsimplex_archive_test.mat";
    Rng rng(122);
    Mat m = rng.gaussian_matrix(4, 4);
    write_matrix(m, path.string());
    CHECK((read_matrix(path.string()) - m).norm() == 0.0);
    std::filesystem::remove(path);
    CHECK_THROWS_AS((void)read_matrix(path.string()), std::runtime_error);
}

TEST_CASE("manifest round-trip") {
    std::vector<CatalogRecord> records = unitary_catalog();
    REQUIRE(records.size() == 13);
    std::ostringstream out;
    write_manifest(records, out);
    std::istringstream in(out.str());
    std::vector<CatalogRecord> back = read_manifest(in);
    REQUIRE(back.size() == records.size());
    for (std::size_t i = 0; i < records.size(); ++i) {
        CHECK(back[i].family_id == records[i].family_id);
        CHECK(back[i].kind == records[i].kind);
        CHECK(back[i].placement == records[i].placement);
        CHECK(back[i].eigenvalues == records[i].eigenvalues);
    }
}

TEST_CASE("empty manifest") {
    std::ostringstream out;
    write_manifest({}, out);
    CHECK(out.str().empty());
    std::istringstream in("");
    CHECK(read_manifest(in).empty());
}

TEST_CASE("duplicate family ids are rejected") {
    std::vector<CatalogRecord> records = {CatalogRecord{"a", "unitary", "", "-", "", "", "", ""},
                                          CatalogRecord{"a", "unitary", "", "-", "", "", "", ""}};
    std::ostringstream out;
    CHECK_THROWS_AS(write_manifest(records, out), std::runtime_error);
}

TEST_CASE("the full catalog carries the 13 unitary rows plus constructions") {
    std::vector<CatalogRecord> all = full_catalog();
    int unitary = 0, constructions = 0;
    for (const auto& r : all) (r.kind == "unitary" ? unitary : constructions)++;
    CHECK(unitary == 13);
    CHECK(constructions >= 5);
}
