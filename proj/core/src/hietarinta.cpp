#include "qsimplex/hietarinta.hpp"

#include <cmath>
#include <stdexcept>

#include "qsimplex/simplex.hpp"
#include "qsimplex/unitary.hpp"

namespace qsx {

namespace {

constexpr double kPi = 3.14159265358979323846;
const cx kI{0.0, 1.0};

[[noreturn]] void violated(const std::string& name) {
    throw std::invalid_argument("constraint violated: " + name);
}

void require(bool ok, const std::string& name) {
    if (!ok) violated(name);
}

bool near(double a, double b, double tol = 1e-12) { return std::abs(a - b) <= tol; }

}  // namespace

const std::vector<HClassId>& all_h_classes() {
    static const std::vector<HClassId> ids = {
        HClassId::h31, HClassId::h21, HClassId::h22, HClassId::h23, HClassId::h11, HClassId::h12,
        HClassId::h13, HClassId::h14, HClassId::h01, HClassId::h02, HClassId::perm};
    return ids;
}

std::string h_class_name(HClassId id) {
    switch (id) {
        case HClassId::h31: return "H3,1";
        case HClassId::h21: return "H2,1";
        case HClassId::h22: return "H2,2";
        case HClassId::h23: return "H2,3";
        case HClassId::h11: return "H1,1";
        case HClassId::h12: return "H1,2";
        case HClassId::h13: return "H1,3";
        case HClassId::h14: return "H1,4";
        case HClassId::h01: return "H0,1";
        case HClassId::h02: return "H0,2";
        case HClassId::perm: return "P";
    }
    return "?";
}

HClassId h_class_from_name(const std::string& name) {
    for (HClassId id : all_h_classes())
        if (h_class_name(id) == name) return id;
    throw std::invalid_argument("unknown Hietarinta class: " + name);
}

Mat perm_p() {
    Mat p = Mat::Zero(4, 4);
    p(0, 0) = 1;
    p(1, 2) = 1;
    p(2, 1) = 1;
    p(3, 3) = 1;
    return p;
}

Mat build_yb(HClassId id, const HParams& prm, bool require_invertible) {
    const cx k = prm.k, p = prm.p, q = prm.q, s = prm.s;
    Mat m = Mat::Zero(4, 4);
    switch (id) {
        case HClassId::h31:
            m(0, 0) = k; m(1, 2) = p; m(2, 1) = q; m(3, 3) = s;
            break;
        case HClassId::h21:
            m(0, 0) = k * k; m(1, 1) = k * k - p * q; m(1, 2) = k * p; m(2, 1) = k * q;
            m(3, 3) = k * k;
            break;
        case HClassId::h22:
            m(0, 0) = k * k; m(1, 1) = k * k - p * q; m(1, 2) = k * p; m(2, 1) = k * q;
            m(3, 3) = -p * q;
            break;
        case HClassId::h23:
            m(0, 0) = k; m(0, 1) = p; m(0, 2) = q; m(0, 3) = s;
            m(1, 2) = k; m(1, 3) = p;
            m(2, 1) = k; m(2, 3) = q;
            m(3, 3) = k;
            break;
        case HClassId::h11:
            m(0, 0) = p * p + 2.0 * p * q - q * q; m(0, 3) = p * p - q * q;
            m(1, 1) = p * p - q * q; m(1, 2) = p * p + q * q;
            m(2, 1) = p * p + q * q; m(2, 2) = p * p - q * q;
            m(3, 0) = p * p - q * q; m(3, 3) = p * p - 2.0 * p * q - q * q;
            break;
        case HClassId::h12:
            m(0, 0) = p; m(0, 3) = k;
            m(1, 1) = p - q; m(1, 2) = p;
            m(2, 1) = q;
            m(3, 3) = -q;
            break;
        case HClassId::h13:
            m(0, 0) = k * k; m(0, 1) = -k * p; m(0, 2) = k * p; m(0, 3) = p * q;
            m(1, 2) = k * k; m(1, 3) = k * q;
            m(2, 1) = k * k; m(2, 3) = -k * q;
            m(3, 3) = k * k;
            break;
        case HClassId::h14:
            m(0, 3) = p; m(1, 1) = k; m(2, 2) = k; m(3, 0) = q;
            break;
        case HClassId::h01:
            m(0, 0) = 1; m(0, 3) = 1; m(1, 2) = -1; m(2, 1) = -1; m(3, 3) = 1;
            break;
        case HClassId::h02:
            m(0, 0) = 1; m(0, 3) = 1;
            m(1, 1) = 1; m(1, 2) = 1;
            m(2, 1) = -1; m(2, 2) = 1;
            m(3, 0) = -1; m(3, 3) = 1;
            break;
        case HClassId::perm:
            m = perm_p();
            break;
    }
    if (require_invertible) {
        Eigen::JacobiSVD<Mat> svd(m);
        const auto& sv = svd.singularValues();
        if (sv(sv.size() - 1) < 1e-12 * sv(0))
            throw std::runtime_error(h_class_name(id) + " parameters make the class matrix singular");
    }
    return m;
}

Mat vertex_form(HClassId id, const Mat& braided) {
    if (id == HClassId::perm) return braided;
    return perm_p() * braided;
}

namespace {

cx sample_phase(Rng& rng) { return std::polar(1.0, rng.uniform(0.0, 2.0 * kPi)); }
cx sample_unit_range(Rng& rng, double lo = 0.4, double hi = 1.4) {
    return std::polar(rng.uniform(lo, hi), rng.uniform(0.0, 2.0 * kPi));
}

Mat diag_m(cx m1, cx m4) {
    Mat m = Mat::Zero(2, 2);
    m(0, 0) = m1;
    m(1, 1) = m4;
    return m;
}

Mat upper_m(cx m1, cx m2, cx m4) {
    Mat m = Mat::Zero(2, 2);
    m(0, 0) = m1;
    m(0, 1) = m2;
    m(1, 1) = m4;
    return m;
}

}  // namespace

std::vector<MOption> compatible_m(HClassId id, const HParams& prm) {
    std::vector<MOption> out;
    auto add = [&](std::string form, bool invertible, std::function<Mat(Rng&)> sample) {
        out.push_back(MOption{std::move(form), invertible, std::move(sample)});
    };
    switch (id) {
        case HClassId::h31:
        case HClassId::h22:
            add("diag(m1,m4)", true,
                [](Rng& r) { return diag_m(sample_unit_range(r), sample_unit_range(r)); });
            break;
        case HClassId::h21:
            add("diag(m1,m4)", true,
                [](Rng& r) { return diag_m(sample_unit_range(r), sample_unit_range(r)); });
            add("(0,0;m3,0)", false, [](Rng& r) {
                Mat m = Mat::Zero(2, 2);
                m(1, 0) = sample_unit_range(r);
                return m;
            });
            add("(0,m2;0,0)", false, [](Rng& r) {
                Mat m = Mat::Zero(2, 2);
                m(0, 1) = sample_unit_range(r);
                return m;
            });
            break;
        case HClassId::h23:
        case HClassId::h13:
            // the commutant forces equal diagonal entries; invertible iff m1 != 0
            add("(m1,m2;0,m1)", true, [](Rng& r) {
                cx m1 = sample_unit_range(r);
                return upper_m(m1, sample_unit_range(r, 0.0, 1.0), m1);
            });
            if (id == HClassId::h13)
                add("(0,m2;0,0)", false, [](Rng& r) {
                    Mat m = Mat::Zero(2, 2);
                    m(0, 1) = sample_unit_range(r);
                    return m;
                });
            break;
        case HClassId::h11: {
            add("Z", true, [](Rng&) { return pauli_z(); });
            // the paper's projector options, normalized so M^2 = M exactly
            cx ratio = (prm.p - prm.q) / (prm.p + prm.q);
            cx root = std::sqrt(ratio);
            for (double sg : {1.0, -1.0}) {
                add("projector (1,r;r,r^2)/(1+r^2)", false, [root, ratio, sg](Rng&) {
                    Mat m(2, 2);
                    m << 1.0, sg * root, sg * root, ratio;
                    return Mat(m / (1.0 + ratio));
                });
                add("projector (1,r;-r,-r^2)/(1-r^2)", false, [root, ratio, sg](Rng&) {
                    Mat m(2, 2);
                    m << 1.0, sg * root, -sg * root, -ratio;
                    return Mat(m / (1.0 - ratio));
                });
            }
            break;
        }
        case HClassId::h12: {
            add("Z", true, [](Rng&) { return pauli_z(); });
            cx root = std::sqrt((prm.p + prm.q) / prm.k);
            for (double sg : {1.0, -1.0}) {
                add("(±r,1;0,0)", false, [root, sg](Rng&) {
                    Mat m = Mat::Zero(2, 2);
                    m(0, 0) = sg * root;
                    m(0, 1) = 1.0;
                    return m;
                });
            }
            break;
        }
        case HClassId::h14: {
            add("Z", true, [](Rng&) { return pauli_z(); });
            cx root = std::sqrt(prm.q / prm.p);
            for (double sg : {1.0, -1.0}) {
                add(sg > 0 ? "(0,1;+sqrt(q/p),0)" : "(0,1;-sqrt(q/p),0)", true, [root, sg](Rng&) {
                    Mat m = Mat::Zero(2, 2);
                    m(0, 1) = 1.0;
                    m(1, 0) = sg * root;
                    return m;
                });
            }
            break;
        }
        case HClassId::h01:
        case HClassId::h02:
            add("Z", true, [](Rng&) { return pauli_z(); });
            break;
        case HClassId::perm:
            add("GL(2,C)", true, [](Rng& r) {
                Mat m = r.gaussian_matrix(2, 2);
                Eigen::JacobiSVD<Mat> svd(m);
                if (svd.singularValues()(1) < 0.1 * svd.singularValues()(0))
                    m += 0.5 * Mat::Identity(2, 2);
                return m;
            });
            break;
    }
    return out;
}

std::string placement_name(Placement p) { return p == Placement::y_m ? "Y@M" : "M@Y"; }

Mat lift(const Mat& y_vertex, const Mat& m, Placement placement) {
    if (y_vertex.rows() != 4 || y_vertex.cols() != 4 || m.rows() != 2 || m.cols() != 2)
        throw std::invalid_argument("lift expects a 4x4 Y and a 2x2 M");
    double yres = ybe_vertex(y_vertex);
    if (yres > kDefaultTol)
        throw std::invalid_argument("lift: Y fails the vertex Yang-Baxter equation (residual " +
                                    std::to_string(yres) + ")");
    Mat mm = kron(m, m);
    double comm = (y_vertex * mm - mm * y_vertex).norm();
    if (comm > kDefaultTol)
        throw std::invalid_argument("lift: [Y, M x M] does not vanish (residual " +
                                    std::to_string(comm) + ")");
    return placement == Placement::y_m ? kron(y_vertex, m) : kron(m, y_vertex);
}

Mat gauge_conjugate(const Mat& r, const GaugeTransform& g) {
    if (g.q.rows() != 2 || g.q.cols() != 2) throw std::invalid_argument("gauge Q must be 2x2");
    if (std::abs(g.q.determinant()) <= 1e-12) throw std::runtime_error("singular Q");
    Mat q3 = kron(g.q, g.q, g.q);
    return g.kappa * q3 * r * q3.inverse();
}

Mat deviation(const Mat& r, const Mat& q) {
    if (std::abs(q.determinant()) <= 1e-12) throw std::runtime_error("singular Q");
    Mat g = q.adjoint() * q;
    Mat h = kron(g, g, g);
    return h * inverse(r) - r.adjoint() * h;
}

HPropositionReport h_propositions(const Mat& q) {
    if (q.rows() != 2 || q.cols() != 2) throw std::invalid_argument("Q must be 2x2");
    if (std::abs(q.determinant()) <= 1e-12) throw std::runtime_error("singular Q");
    Mat g = q.adjoint() * q;
    Mat h = kron(g, g, g);
    HPropositionReport rep;
    rep.z = q(0, 0) * std::conj(q(0, 1)) + q(1, 0) * std::conj(q(1, 1));
    double scale = g.norm();
    rep.qdagq_diagonal = std::abs(rep.z) <= 1e-12 * std::max(1.0, scale);
    double hmax = h.cwiseAbs().maxCoeff();
    // diagonal entries are products of the positive reals x and y; no
    // cancellation is possible, so positivity is the right test even when Q
    // is badly conditioned and the entries span many orders of magnitude
    rep.min_h_diag = h.diagonal().real().minCoeff();
    rep.h_diag_nonzero = rep.min_h_diag > 0.0;
    rep.offdiag_total = 0;
    rep.offdiag_zero_count = 0;
    for (Eigen::Index i = 0; i < 8; ++i)
        for (Eigen::Index j = 0; j < 8; ++j) {
            if (i == j) continue;
            ++rep.offdiag_total;
            if (std::abs(h(i, j)) <= 1e-13 * hmax) ++rep.offdiag_zero_count;
        }
    rep.h_offdiag_all_or_none =
        rep.offdiag_zero_count == 0 || rep.offdiag_zero_count == rep.offdiag_total;
    return rep;
}

namespace {

cx get_param(const UnitaryFamilyPoint& pt, const std::string& name) {
    auto it = pt.params.find(name);
    if (it == pt.params.end()) violated("missing parameter " + name);
    return it->second;
}

Mat h14_vertex(cx p, cx q) {
    Mat m = Mat::Zero(4, 4);
    m(0, 3) = p;
    m(1, 2) = 1;
    m(2, 1) = 1;
    m(3, 0) = q;
    return m;
}

void require_q_form(const Mat& q, const std::string& row) {
    // q3 = -q1 conj(q2) / conj(q4)
    if (std::abs(q(1, 1)) < 1e-12) violated(row + ": q4 must be nonzero");
    cx expect = -q(0, 0) * std::conj(q(0, 1)) / std::conj(q(1, 1));
    if (std::abs(q(1, 0) - expect) > 1e-12 * std::max(1.0, std::abs(expect)))
        violated(row + ": q3 = -q1*conj(q2)/conj(q4)");
}

struct FamilyBuild {
    Mat y;  // vertex form
    Mat m;
};

FamilyBuild build_family_operator(const UnitaryFamilyPoint& pt) {
    FamilyBuild fb;
    switch (pt.row) {
        case 2: {
            cx p = get_param(pt, "p"), q = get_param(pt, "q"), r = get_param(pt, "r");
            require(near(std::abs(p), 1.0), "row2: |p| = 1");
            require(near(std::abs(q), 1.0), "row2: |q| = 1");
            require(near(std::abs(r), 1.0), "row2: |r| = 1");
            require_q_form(pt.q, "row2");
            fb.y = Mat::Zero(4, 4);
            fb.y(0, 0) = 1;
            fb.y(1, 1) = p;
            fb.y(2, 2) = q;
            fb.y(3, 3) = r;
            fb.m = pauli_z();
            break;
        }
        case 3: {
            require_q_form(pt.q, "row3");
            require(near(std::abs(pt.q(0, 0)), std::abs(pt.q(1, 1))), "row3: |q1| = |q4|");
            fb.y = vertex_form(HClassId::h02, build_yb(HClassId::h02) / std::sqrt(2.0));
            fb.m = pauli_z();
            break;
        }
        case 4: {
            cx p = get_param(pt, "p"), q = get_param(pt, "q");
            require_q_form(pt.q, "row4");
            double a1 = std::norm(pt.q(0, 0)), a4 = std::norm(pt.q(1, 1));
            require(near(a1, std::abs(q) * a4, 1e-12 * std::max(1.0, a1)), "row4: |q1|^2 = |q||q4|^2");
            require(near(a4, std::abs(p) * a1, 1e-12 * std::max(1.0, a4)), "row4: |q4|^2 = |p||q1|^2");
            fb.y = h14_vertex(p, q);
            fb.m = pauli_z();
            break;
        }
        case 5: {
            cx tp = get_param(pt, "thetap"), tq = get_param(pt, "thetaq");
            require(near(tp.imag(), 0.0) && near(tq.imag(), 0.0), "row5: thetap, thetaq real");
            require_q_form(pt.q, "row5");
            require(near(std::abs(pt.q(0, 0)), std::abs(pt.q(1, 1))), "row5: |q1| = |q4|");
            fb.y = h14_vertex(std::polar(1.0, tp.real()), std::polar(1.0, tq.real()));
            fb.m = Mat::Zero(2, 2);
            fb.m(0, 1) = 1;
            fb.m(1, 0) = double(pt.sign_branch) * std::exp(kI * (tq.real() - tp.real()) / 2.0);
            break;
        }
        case 6: {
            Mat g = pt.q.adjoint() * pt.q;
            require(near(g(0, 0).real(), g(1, 1).real(), 1e-12 * std::max(1.0, g.norm())),
                    "row6: |q1|^2+|q3|^2 = |q2|^2+|q4|^2");
            cx z = g(1, 0);
            double scale = std::max(1.0, g.norm());
            double sgn = double(pt.sign_branch);
            if (pt.sign_branch > 0)
                require(std::abs(z.imag()) <= 1e-12 * scale, "row6(+): z real");
            else
                require(std::abs(z.real()) <= 1e-12 * scale, "row6(-): z imaginary");
            fb.y = h14_vertex(sgn, sgn);
            fb.m = Mat::Zero(2, 2);
            fb.m(0, 1) = 1;
            fb.m(1, 0) = sgn;
            break;
        }
        case 7: {
            Mat m(2, 2);
            m << get_param(pt, "m1"), get_param(pt, "m2"), get_param(pt, "m3"), get_param(pt, "m4");
            require(residual(m.adjoint() * m, Mat::Identity(2, 2)) <= 1e-12, "row7: M in U(2)");
            require(residual(pt.q.adjoint() * pt.q, Mat::Identity(2, 2)) <= 1e-12, "row7: Q in U(2)");
            fb.y = perm_p();
            fb.m = m;
            break;
        }
        default:
            violated("row must be 2..7");
    }
    return fb;
}

}  // namespace

std::vector<cx> family_eigenvalues(const UnitaryFamilyPoint& pt) {
    std::vector<cx> half;
    switch (pt.row) {
        case 2:
            half = {1.0, get_param(pt, "p"), get_param(pt, "q"), get_param(pt, "r")};
            break;
        case 3:
            half = {1.0, 1.0, cx(1, 1) / std::sqrt(2.0), cx(1, -1) / std::sqrt(2.0)};
            break;
        case 4: {
            cx sq = std::sqrt(get_param(pt, "p") * get_param(pt, "q"));
            half = {1.0, 1.0, sq, sq};
            break;
        }
        case 5: {
            double tp = get_param(pt, "thetap").real(), tq = get_param(pt, "thetaq").real();
            cx branch = pt.sign_branch > 0 ? cx(1.0) : kI;
            cx e1 = branch * std::exp(-kI * (tp - tq) / 4.0);
            cx e2 = branch * std::exp(kI * (tp + 3.0 * tq) / 4.0);
            half = {e1, e1, e2, e2};
            break;
        }
        case 6: {
            cx v = pt.sign_branch > 0 ? cx(1.0) : kI;
            half = {v, v, v, v};
            break;
        }
        case 7: {
            cx m1 = get_param(pt, "m1"), m2 = get_param(pt, "m2"), m3 = get_param(pt, "m3"),
               m4 = get_param(pt, "m4");
            cx disc = std::sqrt((m1 - m4) * (m1 - m4) + 4.0 * m2 * m3);
            cx x1p = 0.5 * (disc + m1 + m4), x1m = 0.5 * (-disc + m1 + m4);
            cx x2p = 0.5 * (disc - m1 - m4), x2m = 0.5 * (-disc - m1 - m4);
            std::vector<cx> out = {x1p, x1p, x1p, x1m, x1m, x1m, x2p, x2m};
            for (cx& v : out) v *= pt.kappa;
            return out;
        }
        default:
            violated("row must be 2..7");
    }
    std::vector<cx> out;
    out.reserve(8);
    for (const cx& v : half) {
        out.push_back(pt.kappa * v);
        out.push_back(-pt.kappa * v);
    }
    return out;
}

std::vector<cx> row1_eigenvalues(const CliffordCoeffs& c) {
    const auto& a = c.alpha;
    std::vector<cx> out;
    for (int j = 0; j < 4; ++j) {
        cx v = 2.0 * a[j] - (a[0] + a[1] + a[2] + a[3]);
        out.push_back(v);
        out.push_back(-v);
    }
    return out;
}

FamilyCertificate unitary_family(const UnitaryFamilyPoint& pt) {
    require(near(std::abs(pt.kappa), 1.0), "kappa must be a phase");
    if (std::abs(pt.q.determinant()) <= 1e-12) violated("Q invertible");
    FamilyBuild fb = build_family_operator(pt);
    Mat t0 = lift(fb.y, fb.m, pt.placement);
    Mat t = gauge_conjugate(t0, GaugeTransform{pt.q, pt.kappa});

    FamilyCertificate cert;
    cert.t = t;
    cert.unitarity = residual(t.adjoint() * t, Mat::Identity(8, 8));
    cert.vertex_residual = tetra_vertex(t);
    cert.edge_residual = tetra_edge(t);
    cert.expected_eigenvalues = family_eigenvalues(pt);
    cert.eigen_match = multiset_distance(spectrum(t), cert.expected_eigenvalues);
    cert.constraint_residuals["unitarity"] = cert.unitarity;
    cert.constraint_residuals["tetra_vertex"] = cert.vertex_residual;
    cert.constraint_residuals["tetra_edge"] = cert.edge_residual;
    cert.constraint_residuals["eigen_match"] = cert.eigen_match;
    return cert;
}

UnitaryFamilyPoint sample_family_point(int row, Placement placement, int sign_branch, Rng& rng) {
    UnitaryFamilyPoint pt;
    pt.row = row;
    pt.placement = placement;
    pt.sign_branch = sign_branch;
    pt.kappa = sample_phase(rng);

    auto q_form = [&](double mod1, double mod4) {
        cx q1 = std::polar(mod1, rng.uniform(0.0, 2.0 * kPi));
        cx q4 = std::polar(mod4, rng.uniform(0.0, 2.0 * kPi));
        cx q2 = sample_unit_range(rng, 0.0, 1.0);
        Mat q(2, 2);
        q << q1, q2, -q1 * std::conj(q2) / std::conj(q4), q4;
        return q;
    };

    switch (row) {
        case 2:
            pt.params["p"] = sample_phase(rng);
            pt.params["q"] = sample_phase(rng);
            pt.params["r"] = sample_phase(rng);
            pt.q = q_form(rng.uniform(0.4, 1.4), rng.uniform(0.4, 1.4));
            break;
        case 3: {
            double m = rng.uniform(0.4, 1.4);
            pt.q = q_form(m, m);
            break;
        }
        case 4: {
            double u = rng.uniform(-0.4, 0.4);
            pt.params["p"] = std::polar(std::exp(u), rng.uniform(0.0, 2.0 * kPi));
            pt.params["q"] = std::polar(std::exp(-u), rng.uniform(0.0, 2.0 * kPi));
            double m4 = rng.uniform(0.4, 1.4);
            double m1 = std::sqrt(std::abs(pt.params["q"])) * m4;
            pt.q = q_form(m1, m4);
            break;
        }
        case 5: {
            pt.params["thetap"] = rng.uniform(-kPi, kPi);
            pt.params["thetaq"] = rng.uniform(-kPi, kPi);
            double m = rng.uniform(0.4, 1.4);
            pt.q = q_form(m, m);
            break;
        }
        case 6: {
            Vec c1 = rng.gaussian_vector(2);
            c1 *= rng.uniform(0.5, 1.2) / c1.norm();
            Vec w(2);
            w << -std::conj(c1(1)), std::conj(c1(0));
            w *= c1.norm() / w.norm();
            double tt = rng.uniform(0.3, 1.2);
            cx a = std::cos(tt);
            if (sign_branch < 0) a *= kI;
            Vec c2 = a * c1 + std::sin(tt) * std::polar(1.0, rng.uniform(0.0, 2.0 * kPi)) * w;
            pt.q.resize(2, 2);
            pt.q << c1(0), c2(0), c1(1), c2(1);
            break;
        }
        case 7: {
            Mat m = rng.random_unitary(2);
            pt.params["m1"] = m(0, 0);
            pt.params["m2"] = m(0, 1);
            pt.params["m3"] = m(1, 0);
            pt.params["m4"] = m(1, 1);
            pt.q = rng.random_unitary(2);
            break;
        }
        default:
            throw std::invalid_argument("sample_family_point: row must be 2..7");
    }
    return pt;
}

Remark41Report remark41_equivalences(cx alpha, cx beta, cx p, const std::array<cx, 9>& proj_alpha) {
    if (alpha == beta) throw std::domain_error("branch singularity");
    Remark41Report rep;

    // (i) alpha XX + beta ZZ -> H1,4-class matrix; the appended Y -> -Z.
    Mat y_ab = alpha * kron(pauli_x(), pauli_x()) + beta * kron(pauli_z(), pauli_z());
    cx root = std::sqrt(p / (alpha - beta));
    Mat q(2, 2);
    q << 0.5 * root, 0.5 * kI * root, 0.5 * kI, 0.5;
    Mat q2 = kron(q, q);
    Mat target = Mat::Zero(4, 4);
    target(0, 3) = p;
    target(1, 2) = alpha + beta;
    target(2, 1) = alpha + beta;
    target(3, 0) = (alpha - beta) * (alpha - beta) / p;
    rep.h14_conj_residual = residual(q2 * y_ab * q2.inverse(), target);
    rep.appended_minus_z_residual = residual(q * pauli_y() * q.inverse(), Mat(-pauli_z()));

    // (ii) projector Yang-Baxter vs the two H3,1 diagonals.
    const Mat pp = proj_plus(), pm = proj_minus(), id2 = identity(2);
    const auto& a = proj_alpha;  // a[0] = alpha_1 ... a[8] = alpha_9
    Mat y_proj = a[0] * identity(4) + a[1] * kron(pp, id2) + a[2] * kron(id2, pp) +
                 a[3] * kron(pm, id2) + a[4] * kron(id2, pm) + a[5] * kron(pp, pp) +
                 a[6] * kron(pm, pm) + a[7] * kron(pp, pm) + a[8] * kron(pm, pp);
    Mat q_anti(2, 2);
    q_anti << 0.0, cx(1.3, 0.2), cx(0.7, -0.4), 0.0;
    Mat t_anti = Mat::Zero(4, 4);
    t_anti(0, 0) = a[0] + a[3] + a[4] + a[6];
    t_anti(1, 1) = a[0] + a[2] + a[3] + a[8];
    t_anti(2, 2) = a[0] + a[1] + a[4] + a[7];
    t_anti(3, 3) = a[0] + a[1] + a[2] + a[5];
    Mat qa2 = kron(q_anti, q_anti);
    rep.h31_antidiag_residual = residual(qa2 * y_proj * qa2.inverse(), t_anti);

    Mat q_diag = diag_m(cx(0.9, 0.3), cx(-0.5, 1.1));
    Mat t_diag = Mat::Zero(4, 4);
    t_diag(0, 0) = a[0] + a[1] + a[2] + a[5];
    t_diag(1, 1) = a[0] + a[1] + a[4] + a[7];
    t_diag(2, 2) = a[0] + a[2] + a[3] + a[8];
    t_diag(3, 3) = a[0] + a[3] + a[4] + a[6];
    Mat qd2 = kron(q_diag, q_diag);
    rep.h31_diag_residual = residual(qd2 * y_proj * qd2.inverse(), t_diag);
    return rep;
}

}  // namespace qsx
