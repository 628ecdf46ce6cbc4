#include "qsimplex/tensalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace qsx {

Mat pauli_x() {
    Mat m(2, 2);
    m << 0, 1, 1, 0;
    return m;
}

Mat pauli_y() {
    Mat m(2, 2);
    m << cx(0, 0), cx(0, -1), cx(0, 1), cx(0, 0);
    return m;
}

Mat pauli_z() {
    Mat m(2, 2);
    m << 1, 0, 0, -1;
    return m;
}

Mat identity(Eigen::Index dim) { return Mat::Identity(dim, dim); }

Mat proj_plus() {
    Mat m(2, 2);
    m << 1, 0, 0, 0;
    return m;
}

Mat proj_minus() {
    Mat m(2, 2);
    m << 0, 0, 0, 1;
    return m;
}

Mat kron(const Mat& a, const Mat& b) {
    Mat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

Mat kron(const Mat& a, const Mat& b, const Mat& c) { return kron(kron(a, b), c); }

namespace {

int leg_count(const EmbeddedOperator& e) {
    int k = 0;
    Eigen::Index side = 1;
    while (side < e.op.rows()) {
        side *= 2;
        ++k;
    }
    return k;
}

}  // namespace

void validate(const EmbeddedOperator& e) {
    const int k = leg_count(e);
    if (e.op.rows() != e.op.cols() || e.op.rows() != (Eigen::Index(1) << k))
        throw std::invalid_argument("invalid site list");
    if (static_cast<int>(e.sites.size()) != k) throw std::invalid_argument("invalid site list");
    std::vector<int> sorted = e.sites;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] < 1 || sorted[i] > e.n_sites) throw std::invalid_argument("invalid site list");
        if (i > 0 && sorted[i] == sorted[i - 1]) throw std::invalid_argument("invalid site list");
    }
}

namespace {

// Site s (1-based, site 1 = most significant qubit) maps to bit n - s.
struct LegPlan {
    std::vector<long> leg_bit;   // register bit mask per op leg
    long leg_mask = 0;           // union of leg bits
    long dim = 0;
    int k = 0;
};

LegPlan plan(const EmbeddedOperator& e) {
    validate(e);
    LegPlan p;
    p.k = static_cast<int>(e.sites.size());
    p.dim = 1L << e.n_sites;
    p.leg_bit.resize(p.k);
    for (int i = 0; i < p.k; ++i) {
        p.leg_bit[i] = 1L << (e.n_sites - e.sites[i]);
        p.leg_mask |= p.leg_bit[i];
    }
    return p;
}

// Register index for local pattern a (leg 0 of op = most significant local bit)
// relative to a base index with all leg bits clear.
long pattern_index(const LegPlan& p, long base, int a) {
    long idx = base;
    for (int i = 0; i < p.k; ++i)
        if (a & (1 << (p.k - 1 - i))) idx |= p.leg_bit[i];
    return idx;
}

template <typename Body>
void for_each_base(const LegPlan& p, Body&& body) {
    for (long base = 0; base < p.dim; ++base) {
        if (base & p.leg_mask) continue;
        body(base);
    }
}

}  // namespace

Mat embed(const EmbeddedOperator& e) {
    LegPlan p = plan(e);
    if (p.dim > kDenseDimCap)
        throw std::invalid_argument("register too large for a dense embedding; use apply_embedded");
    Mat out = Mat::Zero(p.dim, p.dim);
    const int block = 1 << p.k;
    for_each_base(p, [&](long base) {
        for (int a = 0; a < block; ++a) {
            long ia = pattern_index(p, base, a);
            for (int b = 0; b < block; ++b) out(ia, pattern_index(p, base, b)) = e.op(a, b);
        }
    });
    return out;
}

void apply_embedded_in_place(const EmbeddedOperator& e, Vec& v) {
    LegPlan p = plan(e);
    if (v.size() != p.dim) throw std::invalid_argument("state vector length mismatch");
    const int block = 1 << p.k;
    std::vector<long> idx(block);
    std::vector<cx> buf(block);
    for_each_base(p, [&](long base) {
        for (int a = 0; a < block; ++a) {
            idx[a] = pattern_index(p, base, a);
            buf[a] = v(idx[a]);
        }
        for (int a = 0; a < block; ++a) {
            cx acc = 0;
            for (int b = 0; b < block; ++b) acc += e.op(a, b) * buf[b];
            v(idx[a]) = acc;
        }
    });
}

Vec apply_embedded(const EmbeddedOperator& e, const Vec& v) {
    Vec out = v;
    apply_embedded_in_place(e, out);
    return out;
}

void apply_embedded_left(const EmbeddedOperator& e, Mat& m) {
    LegPlan p = plan(e);
    if (m.rows() != p.dim) throw std::invalid_argument("matrix dimension mismatch");
    const int block = 1 << p.k;
    std::vector<long> idx(block);
    std::vector<cx> buf(block);
    for (Eigen::Index col = 0; col < m.cols(); ++col) {
        for_each_base(p, [&](long base) {
            for (int a = 0; a < block; ++a) {
                idx[a] = pattern_index(p, base, a);
                buf[a] = m(idx[a], col);
            }
            for (int a = 0; a < block; ++a) {
                cx acc = 0;
                for (int b = 0; b < block; ++b) acc += e.op(a, b) * buf[b];
                m(idx[a], col) = acc;
            }
        });
    }
}

Mat dagger(const Mat& a) { return a.adjoint(); }

Mat inverse(const Mat& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("inverse of a non-square matrix");
    Eigen::JacobiSVD<Mat> svd(a);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0 || sv(sv.size() - 1) < 1e-12 * sv(0))
        throw std::runtime_error("singular matrix");
    return a.inverse();
}

double frobenius(const Mat& a) { return a.norm(); }

double residual(const Mat& a, const Mat& b) {
    return (a - b).norm() / std::max(1.0, b.norm());
}

}  // namespace qsx
