#include "qsimplex/simplex.hpp"

#include <stdexcept>

#include "qsimplex/rng.hpp"

namespace qsx {

namespace {

SimplexRelation make(const std::string& name, int n, std::vector<SlotTerm> lhs, cx scale) {
    SimplexRelation rel;
    rel.name = name;
    rel.n_sites = n;
    rel.lhs = std::move(lhs);
    rel.rhs.assign(rel.lhs.rbegin(), rel.lhs.rend());
    rel.rhs_scale = scale;
    return rel;
}

}  // namespace

const SimplexRelation& rel_tetra_vertex() {
    static const SimplexRelation rel =
        make("tetra-vertex", 6, {{1, {1, 2, 3}}, {1, {1, 4, 5}}, {1, {2, 4, 6}}, {1, {3, 5, 6}}}, 1.0);
    return rel;
}

const SimplexRelation& rel_tetra_edge() {
    static const SimplexRelation rel =
        make("tetra-edge", 4, {{1, {1, 2, 3}}, {1, {1, 2, 4}}, {1, {1, 3, 4}}, {1, {2, 3, 4}}}, 1.0);
    return rel;
}

const SimplexRelation& rel_ybe_vertex() {
    static const SimplexRelation rel =
        make("ybe-vertex", 3, {{1, {1, 2}}, {1, {1, 3}}, {1, {2, 3}}}, 1.0);
    return rel;
}

const SimplexRelation& rel_ybe_braided() {
    static const SimplexRelation rel = [] {
        SimplexRelation r;
        r.name = "ybe-braided";
        r.n_sites = 3;
        r.lhs = {{1, {1, 2}}, {1, {2, 3}}, {1, {1, 2}}};
        r.rhs = {{1, {2, 3}}, {1, {1, 2}}, {1, {2, 3}}};
        r.rhs_scale = 1.0;
        return r;
    }();
    return rel;
}

const SimplexRelation& rel_four_simplex() {
    static const SimplexRelation rel = make(
        "four-simplex", 10,
        {{1, {1, 2, 3, 4}}, {1, {1, 5, 6, 7}}, {1, {2, 5, 8, 9}}, {1, {3, 6, 8, 10}}, {1, {4, 7, 9, 10}}},
        1.0);
    return rel;
}

const SimplexRelation& rel_five_simplex() {
    static const SimplexRelation rel = make("five-simplex", 15,
                                            {{1, {1, 2, 3, 4, 5}},
                                             {1, {1, 6, 7, 8, 9}},
                                             {1, {2, 6, 10, 11, 12}},
                                             {1, {3, 7, 10, 13, 14}},
                                             {1, {4, 8, 11, 13, 15}},
                                             {1, {5, 9, 12, 14, 15}}},
                                            1.0);
    return rel;
}

const SimplexRelation& rel_anti_tetra_vertex() {
    static const SimplexRelation rel =
        make("anti-tetra-vertex", 6, {{1, {1, 2, 3}}, {1, {1, 4, 5}}, {1, {2, 4, 6}}, {1, {3, 5, 6}}}, -1.0);
    return rel;
}

const SimplexRelation& rel_anti_four_simplex() {
    static const SimplexRelation rel = make(
        "anti-four-simplex", 10,
        {{1, {1, 2, 3, 4}}, {1, {1, 5, 6, 7}}, {1, {2, 5, 8, 9}}, {1, {3, 6, 8, 10}}, {1, {4, 7, 9, 10}}},
        -1.0);
    return rel;
}

SimplexRelation rel_signed_word_tetra(cx rhs_scale) {
    SimplexRelation rel;
    rel.name = "signed-word-tetra";
    rel.n_sites = 6;
    rel.lhs = {{1, {1, 2, 3}}, {1, {1, 4, 5}}, {1, {2, 4, 6}}, {1, {3, 5, 6}}};
    rel.rhs = {{1, {3, 5, 6}}, {2, {2, 4, 6}}, {2, {1, 4, 5}}, {1, {1, 2, 3}}};
    rel.rhs_scale = rhs_scale;
    return rel;
}

namespace {

const Mat& slot_matrix(const SlotMap& slots, int id) {
    auto it = slots.find(id);
    if (it == slots.end()) throw std::invalid_argument("missing relation slot operator");
    return it->second;
}

EmbeddedOperator term_operator(const SimplexRelation& rel, const SlotMap& slots,
                               const SlotTerm& term) {
    EmbeddedOperator e;
    e.op = slot_matrix(slots, term.slot);
    e.sites = term.sites;
    e.n_sites = rel.n_sites;
    const Eigen::Index want = Eigen::Index(1) << term.sites.size();
    if (e.op.rows() != want || e.op.cols() != want)
        throw std::invalid_argument("slot operator dimension mismatch");
    return e;
}

// Product of embedded factors applied left to right onto m (or v), i.e.
// m <- factors[0] * factors[1] * ... * m, hence the reverse iteration.
template <typename Target>
void apply_product(const SimplexRelation& rel, const SlotMap& slots,
                   const std::vector<SlotTerm>& terms, Target& target) {
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        EmbeddedOperator e = term_operator(rel, slots, *it);
        if constexpr (std::is_same_v<Target, Mat>)
            apply_embedded_left(e, target);
        else
            apply_embedded_in_place(e, target);
    }
}

}  // namespace

double check_relation(const SimplexRelation& rel, const SlotMap& slots) {
    const Eigen::Index dim = Eigen::Index(1) << rel.n_sites;
    if (dim > kDenseDimCap)
        throw std::invalid_argument("register too large for dense mode; use probes");
    Mat lhs = Mat::Identity(dim, dim);
    Mat rhs = Mat::Identity(dim, dim);
    apply_product(rel, slots, rel.lhs, lhs);
    apply_product(rel, slots, rel.rhs, rhs);
    return residual(lhs, rel.rhs_scale * rhs);
}

double check_relation(const SimplexRelation& rel, const SlotMap& slots, int probes,
                      std::uint64_t seed) {
    if (probes < 1) throw std::invalid_argument("probe count must be positive");
    const Eigen::Index dim = Eigen::Index(1) << rel.n_sites;
    double worst = 0.0;
    for (int i = 0; i < probes; ++i) {
        Vec v = probe_vector(seed, static_cast<std::uint64_t>(i), dim);
        Vec lhs = v;
        Vec rhs = v;
        apply_product(rel, slots, rel.lhs, lhs);
        apply_product(rel, slots, rel.rhs, rhs);
        double num = (lhs - rel.rhs_scale * rhs).norm();
        double den = std::max(1.0, rhs.norm());
        worst = std::max(worst, num / den);
    }
    return worst;
}

namespace {

double single_slot(const SimplexRelation& rel, const Mat& r) {
    return check_relation(rel, SlotMap{{1, r}});
}

}  // namespace

double tetra_vertex(const Mat& r) { return single_slot(rel_tetra_vertex(), r); }
double tetra_edge(const Mat& r) { return single_slot(rel_tetra_edge(), r); }
double ybe_braided(const Mat& y) { return single_slot(rel_ybe_braided(), y); }
double ybe_vertex(const Mat& y) { return single_slot(rel_ybe_vertex(), y); }
double anti_tetra_vertex(const Mat& r) { return single_slot(rel_anti_tetra_vertex(), r); }
double four_simplex(const Mat& r) { return single_slot(rel_four_simplex(), r); }

double five_simplex(const Mat& r, int probes, std::uint64_t seed) {
    return check_relation(rel_five_simplex(), SlotMap{{1, r}}, probes, seed);
}

double signed_word_tetra(const Mat& r, const Mat& rminus, cx rhs_scale) {
    return check_relation(rel_signed_word_tetra(rhs_scale), SlotMap{{1, r}, {2, rminus}});
}

std::pair<double, double> generalized_ybe(const Mat& y, const Mat& m, cx alpha) {
    if (alpha == cx(0.0, 0.0)) throw std::invalid_argument("alpha must be nonzero");
    SimplexRelation yb = make("gen-ybe", 3, {{1, {1, 2}}, {1, {1, 3}}, {1, {2, 3}}}, alpha);
    double r_yb = check_relation(yb, SlotMap{{1, y}});

    SimplexRelation mm;
    mm.name = "gen-ybe-mm";
    mm.n_sites = 2;
    mm.lhs = {{2, {1}}, {2, {2}}, {1, {1, 2}}};
    mm.rhs = {{1, {1, 2}}, {2, {1}}, {2, {2}}};
    mm.rhs_scale = cx(1.0, 0.0) / alpha;
    double r_mm = check_relation(mm, SlotMap{{1, y}, {2, m}});
    return {r_yb, r_mm};
}

double spectral_tetra(const std::function<Mat(double)>& y_family, const Mat& m,
                      const SpectralParams& mu) {
    const double mus[4] = {mu.mu123, mu.mu145, mu.mu246, mu.mu356};
    const Mat mm = kron(m, m);
    for (double v : mus) {
        Mat y = y_family(v);
        if (y.rows() != 4 || y.cols() != 4)
            throw std::invalid_argument("Y(mu) must be 4x4");
        if ((mm * y - y * mm).norm() > 1e-10)
            throw std::runtime_error("M incompatible with Y(mu)");
    }
    SlotMap slots;
    for (int i = 0; i < 4; ++i) slots[i + 1] = kron(y_family(mus[i]), m);
    SimplexRelation rel;
    rel.name = "spectral-tetra";
    rel.n_sites = 6;
    rel.lhs = {{1, {1, 2, 3}}, {2, {1, 4, 5}}, {3, {2, 4, 6}}, {4, {3, 5, 6}}};
    rel.rhs.assign(rel.lhs.rbegin(), rel.lhs.rend());
    rel.rhs_scale = 1.0;
    return check_relation(rel, slots);
}

}  // namespace qsx
