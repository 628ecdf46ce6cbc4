#include "qsimplex/catalog.hpp"

namespace qsx {

namespace {

CatalogRecord unitary_row(std::string id, std::string aliases, std::string placement,
                          std::string parameters, std::string constraints, std::string eigenvalues,
                          std::string reference) {
    return CatalogRecord{std::move(id),          "unitary",
                         std::move(aliases),     std::move(placement),
                         std::move(parameters),  std::move(constraints),
                         std::move(eigenvalues), std::move(reference)};
}

CatalogRecord construction(std::string id, std::string parameters, std::string constraints,
                           std::string reference) {
    return CatalogRecord{std::move(id),         "construction", "", "-", std::move(parameters),
                         std::move(constraints), "-",            std::move(reference)};
}

void add_both_placements(std::vector<CatalogRecord>& out, const std::string& row,
                         const std::string& aliases, const std::string& parameters,
                         const std::string& constraints, const std::string& eigenvalues,
                         const std::string& reference) {
    out.push_back(
        unitary_row(row + "-ym", aliases, "Y@M", parameters, constraints, eigenvalues, reference));
    out.push_back(
        unitary_row(row + "-my", aliases, "M@Y", parameters, constraints, eigenvalues, reference));
}

}  // namespace

std::vector<CatalogRecord> unitary_catalog() {
    std::vector<CatalogRecord> out;
    out.push_back(unitary_row(
        "row1", "clifford-case1", "-",
        "alpha0..alpha3 complex; anticommuting Hermitian pair (A,B), A^2 = B^2 = 1",
        "2Re(a0 conj a1) = 2Re(a2 conj a3) and cyclic pairings; sum |a_t|^2 = 1",
        "{+-(a0-a1-a2-a3), +-(a1-a0-a2-a3), +-(a2-a0-a1-a3), +-(a3-a0-a1-a2)}",
        "Clifford construction, case 1"));
    add_both_placements(out, "row2", "family1,H3-1-lift", "p,q,r unit-modulus; Q = (q1,q2;-q1 conj(q2)/conj(q4),q4)",
                        "|p| = |q| = |r| = 1", "{+-1, +-p, +-q, +-r}", "diagonal Yang-Baxter lift");
    add_both_placements(out, "row3", "family2,H0-2-lift", "Q as row2 with |q1| = |q4|",
                        "|q1| = |q4|", "{+-1, +-1, +-(1+i)/sqrt2, +-(1-i)/sqrt2}",
                        "scaled H0,2 lift");
    add_both_placements(out, "row4", "family3,H1-4-lift-Z",
                        "p,q with |pq| = 1; Q as row2 with |q1|^2 = |q||q4|^2, |q4|^2 = |p||q1|^2",
                        "|q1|^2 = |q||q4|^2 and |q4|^2 = |p||q1|^2",
                        "{+-1, +-1, +-sqrt(pq), +-sqrt(pq)}", "H1,4 lift with M = Z");
    add_both_placements(out, "row5", "family3,H1-4-lift-offdiag",
                        "thetap, thetaq real; sign branch; Q as row3",
                        "|q1| = |q4|; M = (0,1; +-e^{i(thetaq-thetap)/2}, 0)",
                        "branch+: {+-e^{-i(tp-tq)/4} x2, +-e^{+i(tp+3tq)/4} x2}; branch-: i times these",
                        "H1,4 lift with off-diagonal M");
    add_both_placements(out, "row6", "family4",
                        "sign branch; Q with |q1|^2+|q3|^2 = |q2|^2+|q4|^2 and z real (+) / imaginary (-)",
                        "branch+: Y(1,1), M=(0,1;1,0), Im z = 0; branch-: Y(-1,-1), M=(0,1;-1,0), Re z = 0",
                        "branch+: {+-1 x4}; branch-: {+-i x4}", "H1,4 lift at the permutation point");
    add_both_placements(out, "row7", "family5,permutation", "M = (m1,m2;m3,m4) in U(2); Q in U(2)",
                        "M, Q unitary",
                        "{X1+ x3, X1- x3, X2+, X2-}, X1+- = (+-sqrt((m1-m4)^2+4 m2 m3) + m1 + m4)/2, "
                        "X2+- = (+-sqrt((m1-m4)^2+4 m2 m3) - m1 - m4)/2",
                        "permutation lift");
    return out;
}

std::vector<CatalogRecord> full_catalog() {
    std::vector<CatalogRecord> out = unitary_catalog();
    out.push_back(construction("case2", "a,b,c,d moduli with phases over A = Z, B = X + iY",
                               "unitary only at a = b = c = 0, |d| = 1; bbb_aab variant nilpotent",
                               "Clifford construction, case 2"));
    out.push_back(construction("case3", "27 coefficients over (1, Pi-, Pi+)^3",
                               "diagonal; unitary iff all 8 diagonal entries unit-modulus",
                               "Clifford construction, case 3"));
    out.push_back(construction("abc-word", "alpha, beta over an anticommuting triple (A,B,C)",
                               "unitary iff |alpha|^2+|beta|^2 = 1 and cos(arg alpha - arg beta) = 0",
                               "three-operator tetrahedron words"));
    out.push_back(construction("signed-words", "alpha, beta; words ACA/BCB, ABC/BAC, ACB/BCA, CAB/CBA",
                               "satisfy signed/anti tetrahedron relations",
                               "generalized tetrahedron words"));
    out.push_back(construction("lift-4simplex", "base Y (vertex) or T; single-site M; position",
                               "[base, M x .. x M] = 0", "higher simplex lifts"));
    out.push_back(construction("lift-5simplex", "base Y (vertex) or T; single-site M; position",
                               "[base, M x .. x M] = 0; probe verification", "higher simplex lifts"));
    out.push_back(construction("anti4-word", "anticommuting triple (A,B,C)",
                               "A A A C + B B B C solves the anti-4-simplex relation",
                               "anti-simplex words"));
    out.push_back(construction("five-word", "anticommuting triple (A,B,C)",
                               "A A A A C + B B B B C solves the 5-simplex relation",
                               "higher simplex words"));
    out.push_back(construction("spectral-tetra", "Y(mu) family with [M x M, Y(mu)] = 0",
                               "T_ijk(mu) = Y_ij(mu) M_k inherits the spectral Yang-Baxter",
                               "partial Baxterization"));
    return out;
}

}  // namespace qsx
