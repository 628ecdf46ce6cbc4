#include "qsimplex/gates.hpp"

#include <cmath>
#include <stdexcept>

#include "qsimplex/simplex.hpp"

namespace qsx {

namespace {

constexpr double kPi = 3.14159265358979323846;
const cx kI{0.0, 1.0};

// Factors are built as 8x8 matrices in leg order (legs 1,2,3 = i,j,k); the
// EmbeddedOperator then carries the chosen register sites.
Mat on_legs(const Mat& op, std::vector<int> legs) {
    return embed(EmbeddedOperator{op, std::move(legs), 3});
}

EmbeddedOperator factor(const Mat& op8, const Sites3& s) {
    return EmbeddedOperator{op8, {s.i, s.j, s.k}, 3};
}

Mat hadamard() { return (pauli_x() + pauli_z()) / std::sqrt(2.0); }

/// diagonal(e^{i(phi+psi)}, e^{i(psi-phi+pi)})
Mat g_phase(double phi, double psi) {
    Mat g = Mat::Zero(2, 2);
    g(0, 0) = std::exp(kI * (phi + psi));
    g(1, 1) = std::exp(kI * (psi - phi + kPi));
    return g;
}

Mat u_phi_psi(double phi, double psi) {
    Mat u(2, 2);
    u << std::cos(phi), kI * std::sin(phi), kI * std::sin(phi), std::cos(phi);
    return Mat(std::exp(kI * psi) * u);
}

Mat cz_factor() { return Mat(identity(8) - 2.0 * on_legs(kron(proj_minus(), proj_minus()), {1, 2})); }

Mat ccz_factor() {
    return Mat(identity(8) - 2.0 * on_legs(kron(proj_minus(), proj_minus(), proj_minus()), {1, 2, 3}));
}

Mat h_on(int leg) { return on_legs(hadamard(), {leg}); }

Mat cnot_target() {
    Mat c = Mat::Zero(4, 4);
    c(0, 0) = 1;
    c(1, 1) = 1;
    c(2, 3) = 1;
    c(3, 2) = 1;
    return on_legs(c, {1, 2});
}

Mat toffoli_target() {
    Mat t = identity(8);
    t(6, 6) = 0;
    t(7, 7) = 0;
    t(6, 7) = 1;
    t(7, 6) = 1;
    return t;
}

}  // namespace

Mat compose(const GateRecipe& recipe) {
    Mat acc = identity(8);
    for (auto it = recipe.factors.rbegin(); it != recipe.factors.rend(); ++it)
        apply_embedded_left(*it, acc);
    return acc;
}

GateReport verify(const GateRecipe& recipe, double tol) {
    GateReport rep;
    bool ok = true;
    for (const auto& f : recipe.factors) {
        double v = tetra_vertex(f.op);
        rep.factor_vertex.push_back(v);
        rep.factor_unitary.push_back(certify(f.op, tol));
        ok = ok && v <= tol && rep.factor_unitary.back().is_unitary;
    }
    Mat target = embed(EmbeddedOperator{recipe.target, recipe.factors.empty()
                                                           ? std::vector<int>{1, 2, 3}
                                                           : recipe.factors.front().sites,
                                        3});
    rep.product_target_residual = residual(compose(recipe), target);
    rep.pass = ok && rep.product_target_residual <= tol;
    return rep;
}

GateRecipe single_qubit_gate(const Mat& u, int site, const Sites3& s) {
    if (u.rows() != 2 || u.cols() != 2) throw std::invalid_argument("single_qubit_gate: U must be 2x2");
    if (residual(u.adjoint() * u, Mat::Identity(2, 2)) > 1e-10)
        throw std::invalid_argument("single_qubit_gate: U must be unitary");
    if (site < 1 || site > 3) throw std::invalid_argument("single_qubit_gate: site must be 1..3");
    cx tr = u(0, 0) + u(1, 1);
    cx disc = std::sqrt(tr * tr - 4.0 * u.determinant());
    cx lp = 0.5 * (tr + disc), lm = 0.5 * (tr - disc);

    GateRecipe recipe;
    recipe.name = "single-qubit";
    if (std::abs(lp - lm) <= 1e-12) {
        // scalar gate: the recipe is the scalar itself
        recipe.factors.push_back(factor(Mat(lp * identity(8)), s));
        recipe.target = lp * identity(8);
        return recipe;
    }
    Mat gamma_minus = (u - lp * identity(2)) / (lm - lp);
    Mat r2 = lp * identity(2) + (lm - lp) * gamma_minus;
    recipe.factors.push_back(factor(on_legs(r2, {site}), s));
    recipe.target = on_legs(u, {site});
    return recipe;
}

GateRecipe cz(const Sites3& s) {
    GateRecipe r;
    r.name = "cz";
    r.factors = {factor(cz_factor(), s)};
    r.target = cz_factor();
    return r;
}

GateRecipe cnot(const Sites3& s) {
    GateRecipe r;
    r.name = "cnot";
    r.factors = {factor(h_on(2), s), factor(cz_factor(), s), factor(h_on(2), s)};
    r.target = cnot_target();
    return r;
}

GateRecipe controlled_u(double phi, double psi, const Sites3& s) {
    GateRecipe r;
    r.name = "controlled-u";
    Mat mid = identity(8) - on_legs(kron(proj_minus(), identity(2) - g_phase(phi, psi) * pauli_z()),
                                    {1, 2});
    r.factors = {factor(h_on(2), s), factor(mid, s), factor(h_on(2), s)};
    Mat lam1 = identity(4);
    lam1.block(2, 2, 2, 2) = u_phi_psi(phi, psi);
    r.target = on_legs(lam1, {1, 2});
    return r;
}

GateRecipe swap_gate(const Sites3& s) {
    GateRecipe r;
    r.name = "swap";
    Mat p = Mat::Zero(4, 4);
    p(0, 0) = 1;
    p(1, 2) = 1;
    p(2, 1) = 1;
    p(3, 3) = 1;
    r.factors = {factor(on_legs(p, {1, 2}), s)};
    r.target = on_legs(p, {1, 2});
    return r;
}

GateRecipe iswap(const Sites3& s) {
    GateRecipe r;
    r.name = "iswap";
    Mat p = Mat::Zero(4, 4);
    p(0, 0) = 1;
    p(1, 2) = 1;
    p(2, 1) = 1;
    p(3, 3) = 1;
    Mat bracket = identity(4) + cx(-1, 1) * kron(proj_minus(), identity(2)) +
                  cx(-1, 1) * kron(identity(2), proj_minus()) +
                  cx(2, -2) * kron(proj_minus(), proj_minus());
    r.factors = {factor(on_legs(p, {1, 2}), s), factor(on_legs(bracket, {1, 2}), s)};
    Mat canonical = Mat::Zero(4, 4);
    canonical(0, 0) = 1;
    canonical(1, 2) = kI;
    canonical(2, 1) = kI;
    canonical(3, 3) = 1;
    r.target = on_legs(canonical, {1, 2});
    return r;
}

GateRecipe ccz(const Sites3& s) {
    GateRecipe r;
    r.name = "ccz";
    r.factors = {factor(ccz_factor(), s)};
    r.target = ccz_factor();
    return r;
}

GateRecipe toffoli(const Sites3& s) {
    GateRecipe r;
    r.name = "toffoli";
    r.factors = {factor(h_on(3), s), factor(ccz_factor(), s), factor(h_on(3), s)};
    r.target = toffoli_target();
    return r;
}

GateRecipe deutsch(double lambda, const Sites3& s) {
    GateRecipe r;
    r.name = "deutsch";
    Mat mid = identity(8) -
              on_legs(kron(proj_minus(), proj_minus(),
                           identity(2) - g_phase(-lambda, kPi / 2) * pauli_z()),
                      {1, 2, 3});
    r.factors = {factor(h_on(3), s), factor(mid, s), factor(h_on(3), s)};
    Mat target = identity(8);
    target(6, 6) = kI * std::cos(lambda);
    target(6, 7) = std::sin(lambda);
    target(7, 6) = std::sin(lambda);
    target(7, 7) = kI * std::cos(lambda);
    r.target = target;
    return r;
}

GateRecipe margolus(const Sites3& s) {
    GateRecipe r;
    r.name = "margolus";
    Mat phase = identity(8) - 2.0 * on_legs(kron(proj_minus(), proj_plus(), proj_minus()), {1, 2, 3});
    GateRecipe tof = toffoli(s);
    r.factors = {factor(phase, s)};
    r.factors.insert(r.factors.end(), tof.factors.begin(), tof.factors.end());
    // Toffoli up to a single relative phase, -1 on |101>
    Mat target = toffoli_target();
    target(5, 5) = -1;
    r.target = target;
    return r;
}

GateRecipe fredkin(const Sites3& s) {
    GateRecipe r;
    r.name = "fredkin";
    GateRecipe tof = toffoli(s);
    auto hj = factor(h_on(2), s);
    auto cczf = factor(ccz_factor(), s);
    r.factors = {hj, cczf, hj};
    r.factors.insert(r.factors.end(), tof.factors.begin(), tof.factors.end());
    r.factors.push_back(hj);
    r.factors.push_back(cczf);
    r.factors.push_back(hj);
    Mat target = identity(8);
    target(5, 5) = 0;
    target(6, 6) = 0;
    target(5, 6) = 1;
    target(6, 5) = 1;
    r.target = target;
    return r;
}

}  // namespace qsx
