#include "qsimplex/higher.hpp"

#include <stdexcept>
#include <string>

#include "qsimplex/simplex.hpp"

namespace qsx {

namespace {

int base_legs(const Mat& base) {
    if (base.rows() == 4 && base.cols() == 4) return 2;
    if (base.rows() == 8 && base.cols() == 8) return 3;
    throw std::invalid_argument("lift base must be a 4x4 Y or an 8x8 T");
}

Mat m_power(const Mat& m, int legs) {
    Mat acc = m;
    for (int i = 1; i < legs; ++i) acc = kron(acc, m);
    return acc;
}

Mat assemble(const LiftSpec& spec, int total_legs) {
    const int bl = base_legs(spec.base);
    const int m_count = total_legs - bl;
    if (spec.position < 0 || spec.position > m_count)
        throw std::invalid_argument("lift position out of range");
    if (spec.m.rows() != 2 || spec.m.cols() != 2)
        throw std::invalid_argument("lift M must be 2x2");

    double base_res = bl == 2 ? ybe_vertex(spec.base) : tetra_vertex(spec.base);
    if (base_res > kDefaultTol)
        throw std::invalid_argument("lift base fails its own relation (residual " +
                                    std::to_string(base_res) + ")");
    double comm = lift_commutant(spec);
    if (comm > kDefaultTol)
        throw std::invalid_argument("lift commutant [base, M x .. x M] does not vanish (residual " +
                                    std::to_string(comm) + ")");

    Mat acc = Mat::Identity(1, 1);
    for (int leg = 0; leg < spec.position; ++leg) acc = kron(acc, spec.m);
    acc = kron(acc, spec.base);
    for (int leg = spec.position; leg < m_count; ++leg) acc = kron(acc, spec.m);
    return acc;
}

}  // namespace

double lift_commutant(const LiftSpec& spec) {
    Mat mm = m_power(spec.m, base_legs(spec.base));
    return (spec.base * mm - mm * spec.base).norm();
}

Mat lift_4simplex(const LiftSpec& spec) { return assemble(spec, 4); }

Mat lift_5simplex(const LiftSpec& spec) { return assemble(spec, 5); }

Mat anti4_word(const Mat& a, const Mat& b, const Mat& c) {
    return kron(kron(a, a), kron(a, c)) + kron(kron(b, b), kron(b, c));
}

Mat five_word(const Mat& a, const Mat& b, const Mat& c) {
    return kron(kron(kron(a, a), kron(a, a)), c) + kron(kron(kron(b, b), kron(b, b)), c);
}

std::vector<std::pair<std::string, Mat>> t_lift_m_candidates() {
    return {{"1", identity(2)}, {"X", pauli_x()}, {"Y", pauli_y()}, {"Z", pauli_z()}};
}

}  // namespace qsx
