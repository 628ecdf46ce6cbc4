#include "qsimplex/cli.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>

#include "qsimplex/archive.hpp"
#include "qsimplex/catalog.hpp"
#include "qsimplex/clifford.hpp"
#include "qsimplex/gates.hpp"
#include "qsimplex/hietarinta.hpp"
#include "qsimplex/simplex.hpp"
#include "qsimplex/unitary.hpp"

namespace qsx {

namespace {

constexpr const char* kUsage = R"(usage: qsimplex <verb> [options]

verbs:
  catalog list [--kind unitary|all]
      List the operator family catalog.
  build --family <id> [--params k=v,...] [--placement ym|my] [--branch +|-]
        [--out file]
      Construct and certify a family point. Families: row1 (params
      alpha0..alpha3), row2 (p,q,r), row3, row4 (p,q), row5 (thetap,thetaq),
      row6, row7 (m1..m4); rows 2-7 accept gauge params q1,q2,q4 (q3 is
      derived) or q1..q4, plus kappa.
  verify --relation <name> --input <file> [--probes N] [--seed S] [--tol T]
      Relations: vertex-tetra, edge-tetra, anti-tetra, ybe-braided,
      ybe-vertex, 4simplex, anti4, 5simplex (probe mode only).
  gate <name> [--params k=v,...] [--emit dir]
      Gates: cz, cnot, controlled-u (phi,psi), swap, iswap, ccz, toffoli,
      deutsch (lambda), margolus, fredkin, x, y, z, h (site).
  solve clifford-case1 [--seed S] [--tol T] [--max-iter N]
      Find coefficients satisfying the case-1 unitarity constraints.
  export --out <file> [--kind unitary|all]
      Write the catalog manifest.

Complex values are written as "a+bi" or polar "r@theta" (radians).
)";

struct Args {
    std::vector<std::string> positional;
    std::map<std::string, std::string> flags;
};

Args split_args(const std::vector<std::string>& argv) {
    Args a;
    for (std::size_t i = 0; i < argv.size(); ++i) {
        const std::string& tok = argv[i];
        if (tok.rfind("--", 0) == 0) {
            std::string key = tok.substr(2);
            if (i + 1 >= argv.size()) throw std::invalid_argument("missing value for --" + key);
            a.flags[key] = argv[++i];
        } else {
            a.positional.push_back(tok);
        }
    }
    return a;
}

std::string flag_or(const Args& a, const std::string& key, const std::string& fallback) {
    auto it = a.flags.find(key);
    return it == a.flags.end() ? fallback : it->second;
}

std::map<std::string, std::string> parse_kv_list(const std::string& text) {
    std::map<std::string, std::string> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        // a comma inside a complex value ("1+2i") never appears; values use
        // no commas by construction of the accepted forms
        std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        pos = comma == std::string::npos ? text.size() : comma + 1;
        if (item.empty()) continue;
        std::size_t eq = item.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("bad --params item '" + item + "'");
        out[item.substr(0, eq)] = item.substr(eq + 1);
    }
    return out;
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string fmt_cx(cx v) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.12g%+.12gi", v.real(), v.imag());
    return buf;
}

void print_record(std::ostream& out, const CatalogRecord& r) {
    out << "family_id: " << r.family_id << "\n"
        << "kind: " << r.kind << "\n"
        << "aliases: " << r.aliases << "\n"
        << "placement: " << r.placement << "\n"
        << "parameters: " << r.parameters << "\n"
        << "constraints: " << r.constraints << "\n"
        << "eigenvalues: " << r.eigenvalues << "\n"
        << "reference: " << r.reference << "\n";
}

int cmd_catalog(const Args& a, std::ostream& out, std::ostream& err) {
    if (a.positional.size() != 2 || a.positional[1] != "list") {
        err << kUsage;
        return 2;
    }
    std::string kind = flag_or(a, "kind", "all");
    std::vector<CatalogRecord> records;
    if (kind == "unitary")
        records = unitary_catalog();
    else if (kind == "all")
        records = full_catalog();
    else {
        err << "unknown --kind '" << kind << "'\n" << kUsage;
        return 2;
    }
    bool first = true;
    for (const auto& r : records) {
        if (!first) out << "\n";
        first = false;
        print_record(out, r);
    }
    return 0;
}

int report_and_exit_row1(const CliffordCoeffs& coeffs, const std::string& outfile, std::ostream& out) {
    auto resid = constraint_residual(coeffs);
    double worst = std::max(std::max(resid[0], resid[1]), std::max(resid[2], resid[3]));
    out << "family: row1\n";
    for (int i = 0; i < 4; ++i) out << "constraint_residual_" << i << ": " << fmt(resid[i]) << "\n";
    if (worst > 1e-10) {
        out << "pass: false\n";
        out << "violated: case-1 coefficient constraints\n";
        return 1;
    }
    Mat r = clifford_tetra(coeffs, pauli_x(), pauli_z());
    UnitarityReport u = certify(r);
    double vres = tetra_vertex(r), eres = tetra_edge(r);
    double eig = multiset_distance(spectrum(r), row1_eigenvalues(coeffs));
    out << "unitarity_residual: " << fmt(u.residual_rrdag) << "\n";
    out << "tetra_vertex_residual: " << fmt(vres) << "\n";
    out << "tetra_edge_residual: " << fmt(eres) << "\n";
    out << "eigen_match: " << fmt(eig) << "\n";
    for (const cx& v : spectrum(r)) out << "eigenvalue: " << fmt_cx(v) << "\n";
    bool pass = u.is_unitary && vres <= 1e-10 && eres <= 1e-10 && eig <= 1e-10;
    out << "pass: " << (pass ? "true" : "false") << "\n";
    if (!outfile.empty()) write_matrix(r, outfile);
    return pass ? 0 : 1;
}

int cmd_build(const Args& a, std::ostream& out, std::ostream& err) {
    std::string family = flag_or(a, "family", "");
    if (family.empty()) {
        err << kUsage;
        return 2;
    }
    auto kv = parse_kv_list(flag_or(a, "params", ""));
    std::string outfile = flag_or(a, "out", "");

    if (family == "row1") {
        CliffordCoeffs coeffs;
        for (int i = 0; i < 4; ++i) {
            std::string key = "alpha" + std::to_string(i);
            auto it = kv.find(key);
            if (it == kv.end()) {
                err << "row1 needs --params alpha0=..,alpha1=..,alpha2=..,alpha3=..\n";
                return 2;
            }
            coeffs.alpha[i] = parse_complex(it->second);
        }
        return report_and_exit_row1(coeffs, outfile, out);
    }

    static const std::map<std::string, int> rows = {{"row2", 2}, {"row3", 3}, {"row4", 4},
                                                    {"row5", 5}, {"row6", 6}, {"row7", 7}};
    auto row_it = rows.find(family);
    if (row_it == rows.end()) {
        err << "unknown family '" << family << "'\n" << kUsage;
        return 2;
    }

    UnitaryFamilyPoint pt;
    pt.row = row_it->second;
    std::string placement = flag_or(a, "placement", "ym");
    if (placement == "ym")
        pt.placement = Placement::y_m;
    else if (placement == "my")
        pt.placement = Placement::m_y;
    else {
        err << "unknown --placement '" << placement << "'\n";
        return 2;
    }
    std::string branch = flag_or(a, "branch", "+");
    if (branch == "+")
        pt.sign_branch = +1;
    else if (branch == "-")
        pt.sign_branch = -1;
    else {
        err << "unknown --branch '" << branch << "'\n";
        return 2;
    }

    cx q1{1.0}, q2{0.0}, q4{1.0};
    std::optional<cx> q3;
    for (const auto& [key, value] : kv) {
        cx v = parse_complex(value);
        if (key == "q1") q1 = v;
        else if (key == "q2") q2 = v;
        else if (key == "q3") q3 = v;
        else if (key == "q4") q4 = v;
        else if (key == "kappa") pt.kappa = v;
        else pt.params[key] = v;
    }
    pt.q.resize(2, 2);
    pt.q << q1, q2, q3 ? *q3 : -q1 * std::conj(q2) / std::conj(q4), q4;

    try {
        FamilyCertificate cert = unitary_family(pt);
        out << "family: " << family << "-" << (pt.placement == Placement::y_m ? "ym" : "my") << "\n";
        out << "placement: " << placement_name(pt.placement) << "\n";
        out << "unitarity_residual: " << fmt(cert.unitarity) << "\n";
        out << "tetra_vertex_residual: " << fmt(cert.vertex_residual) << "\n";
        out << "tetra_edge_residual: " << fmt(cert.edge_residual) << "\n";
        out << "eigen_match: " << fmt(cert.eigen_match) << "\n";
        for (const cx& v : spectrum(cert.t)) out << "eigenvalue: " << fmt_cx(v) << "\n";
        bool pass = cert.unitarity <= 1e-10 && cert.vertex_residual <= 1e-10 &&
                    cert.eigen_match <= 1e-10;
        out << "pass: " << (pass ? "true" : "false") << "\n";
        if (!outfile.empty()) write_matrix(cert.t, outfile);
        return pass ? 0 : 1;
    } catch (const std::invalid_argument& e) {
        out << "pass: false\n";
        out << "violated: " << e.what() << "\n";
        return 1;
    }
}

struct RelationEntry {
    const SimplexRelation* rel;
    bool probe_only;
    double default_tol;
};

std::optional<RelationEntry> find_relation(const std::string& name) {
    static const std::map<std::string, RelationEntry> table = {
        {"vertex-tetra", {&rel_tetra_vertex(), false, 1e-10}},
        {"tetra-vertex", {&rel_tetra_vertex(), false, 1e-10}},
        {"edge-tetra", {&rel_tetra_edge(), false, 1e-10}},
        {"tetra-edge", {&rel_tetra_edge(), false, 1e-10}},
        {"anti-tetra", {&rel_anti_tetra_vertex(), false, 1e-10}},
        {"ybe-braided", {&rel_ybe_braided(), false, 1e-10}},
        {"ybe-vertex", {&rel_ybe_vertex(), false, 1e-10}},
        {"4simplex", {&rel_four_simplex(), false, 1e-10}},
        {"anti4", {&rel_anti_four_simplex(), false, 1e-10}},
        {"5simplex", {&rel_five_simplex(), true, 1e-8}},
    };
    auto it = table.find(name);
    if (it == table.end()) return std::nullopt;
    return it->second;
}

int cmd_verify(const Args& a, std::ostream& out, std::ostream& err) {
    std::string name = flag_or(a, "relation", "");
    std::string input = flag_or(a, "input", "");
    if (name.empty() || input.empty()) {
        err << kUsage;
        return 2;
    }
    auto entry = find_relation(name);
    if (!entry) {
        err << "unknown relation '" << name << "'\n";
        return 2;
    }
    Mat m;
    try {
        m = read_matrix(input);
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return 2;
    }
    const Eigen::Index want = Eigen::Index(1) << entry->rel->lhs.front().sites.size();
    if (m.rows() != want || m.cols() != want) {
        err << "dimension mismatch: relation '" << name << "' needs a " << want << "x" << want
            << " operator\n";
        return 2;
    }
    bool use_probes = entry->probe_only || a.flags.count("probes") > 0;
    int probes = std::stoi(flag_or(a, "probes", "20"));
    std::uint64_t seed = std::stoull(flag_or(a, "seed", "0"));
    double tol = std::stod(flag_or(a, "tol", fmt(use_probes ? 1e-8 : entry->default_tol)));
    double res = use_probes ? check_relation(*entry->rel, SlotMap{{1, m}}, probes, seed)
                            : check_relation(*entry->rel, SlotMap{{1, m}});
    out << "relation: " << name << "\n";
    out << "mode: " << (use_probes ? "matrix-free" : "dense") << "\n";
    if (use_probes) {
        out << "probes: " << probes << "\n";
        out << "seed: " << seed << "\n";
    }
    out << "residual: " << fmt(res) << "\n";
    out << "tolerance: " << fmt(tol) << "\n";
    out << "pass: " << (res <= tol ? "true" : "false") << "\n";
    return res <= tol ? 0 : 1;
}

int cmd_gate(const Args& a, std::ostream& out, std::ostream& err) {
    if (a.positional.size() != 2) {
        err << kUsage;
        return 2;
    }
    const std::string& name = a.positional[1];
    auto kv = parse_kv_list(flag_or(a, "params", ""));
    auto param = [&](const std::string& key, double fallback) {
        auto it = kv.find(key);
        return it == kv.end() ? fallback : parse_complex(it->second).real();
    };

    GateRecipe recipe;
    if (name == "cz") recipe = cz();
    else if (name == "cnot") recipe = cnot();
    else if (name == "controlled-u") recipe = controlled_u(param("phi", 1.5707963267948966),
                                                           param("psi", -1.5707963267948966));
    else if (name == "swap") recipe = swap_gate();
    else if (name == "iswap") recipe = iswap();
    else if (name == "ccz") recipe = ccz();
    else if (name == "toffoli") recipe = toffoli();
    else if (name == "deutsch") recipe = deutsch(param("lambda", 0.0));
    else if (name == "margolus") recipe = margolus();
    else if (name == "fredkin") recipe = fredkin();
    else if (name == "x") recipe = single_qubit_gate(pauli_x(), int(param("site", 1)));
    else if (name == "y") recipe = single_qubit_gate(pauli_y(), int(param("site", 1)));
    else if (name == "z") recipe = single_qubit_gate(pauli_z(), int(param("site", 1)));
    else if (name == "h") recipe = single_qubit_gate(
            Mat((pauli_x() + pauli_z()) / std::sqrt(2.0)), int(param("site", 1)));
    else {
        err << "unknown gate '" << name << "'\n";
        return 2;
    }

    GateReport rep = verify(recipe);
    out << "gate: " << recipe.name << "\n";
    out << "factors: " << recipe.factors.size() << "\n";
    for (std::size_t i = 0; i < rep.factor_vertex.size(); ++i) {
        out << "factor_" << i << "_tetra_vertex: " << fmt(rep.factor_vertex[i]) << "\n";
        out << "factor_" << i << "_unitarity: " << fmt(rep.factor_unitary[i].residual_rrdag) << "\n";
    }
    out << "product_target_residual: " << fmt(rep.product_target_residual) << "\n";
    out << "pass: " << (rep.pass ? "true" : "false") << "\n";

    std::string emit = flag_or(a, "emit", "");
    if (!emit.empty()) {
        std::filesystem::create_directories(emit);
        write_matrix(compose(recipe), emit + "/" + recipe.name + ".mat");
        for (std::size_t i = 0; i < recipe.factors.size(); ++i)
            write_matrix(recipe.factors[i].op, emit + "/" + recipe.name + "_factor" +
                                                    std::to_string(i) + ".mat");
        std::ofstream report(emit + "/" + recipe.name + "_report.txt");
        report << "gate: " << recipe.name << "\n";
        report << "product_target_residual: " << fmt(rep.product_target_residual) << "\n";
        for (std::size_t i = 0; i < rep.factor_vertex.size(); ++i)
            report << "factor_" << i << "_tetra_vertex: " << fmt(rep.factor_vertex[i]) << "\n";
        report << "pass: " << (rep.pass ? "true" : "false") << "\n";
    }
    return rep.pass ? 0 : 1;
}

int cmd_solve(const Args& a, std::ostream& out, std::ostream& err) {
    if (a.positional.size() != 2 || a.positional[1] != "clifford-case1") {
        err << kUsage;
        return 2;
    }
    SolveOptions opt;
    opt.seed = std::stoull(flag_or(a, "seed", "1"));
    opt.tol = std::stod(flag_or(a, "tol", "1e-10"));
    opt.max_iter = std::stoi(flag_or(a, "max-iter", "200"));
    try {
        SolveResult result = solve_constraints(opt);
        out << "iterations: " << result.iterations << "\n";
        for (int i = 0; i < 4; ++i) {
            out << "alpha" << i << ": " << fmt(std::abs(result.coeffs.alpha[i])) << "@"
                << fmt(std::arg(result.coeffs.alpha[i])) << "\n";
        }
        for (int i = 0; i < 4; ++i)
            out << "constraint_residual_" << i << ": " << fmt(result.residuals[i]) << "\n";
        Mat r = clifford_tetra(result.coeffs, pauli_x(), pauli_z());
        out << "unitarity_residual: " << fmt(certify(r).residual_rrdag) << "\n";
        out << "pass: true\n";
        return 0;
    } catch (const std::runtime_error& e) {
        out << "pass: false\n";
        err << e.what() << "\n";
        return 1;
    }
}

int cmd_export(const Args& a, std::ostream& out, std::ostream& err) {
    std::string outfile = flag_or(a, "out", "");
    if (outfile.empty()) {
        err << kUsage;
        return 2;
    }
    std::string kind = flag_or(a, "kind", "all");
    std::vector<CatalogRecord> records;
    if (kind == "unitary")
        records = unitary_catalog();
    else if (kind == "all")
        records = full_catalog();
    else {
        err << "unknown --kind '" << kind << "'\n";
        return 2;
    }
    write_manifest(records, outfile);
    out << "records: " << records.size() << "\n";
    out << "path: " << outfile << "\n";
    return 0;
}

}  // namespace

cx parse_complex(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty complex literal");
    std::size_t at = text.find('@');
    if (at != std::string::npos) {
        double r = std::stod(text.substr(0, at));
        double theta = std::stod(text.substr(at + 1));
        return std::polar(r, theta);
    }
    std::string s = text;
    bool imag_unit = s.back() == 'i' || s.back() == 'I' || s.back() == 'j';
    // find a +/- separating real and imaginary parts (not leading, not an
    // exponent sign)
    std::size_t split = std::string::npos;
    for (std::size_t i = 1; i < s.size(); ++i) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E')
            split = i;  // keep the last one
    }
    auto parse_imag = [](std::string part) {
        if (!part.empty() && (part.back() == 'i' || part.back() == 'I' || part.back() == 'j'))
            part.pop_back();
        if (part.empty() || part == "+") return 1.0;
        if (part == "-") return -1.0;
        return std::stod(part);
    };
    if (imag_unit && split != std::string::npos)
        return {std::stod(s.substr(0, split)), parse_imag(s.substr(split))};
    if (imag_unit) return {0.0, parse_imag(s)};
    return {std::stod(s), 0.0};
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        if (args.empty() || args[0] == "--help" || args[0] == "help") {
            out << kUsage;
            return args.empty() ? 2 : 0;
        }
        Args a = split_args(args);
        if (a.positional.empty()) {
            err << kUsage;
            return 2;
        }
        const std::string& verb = a.positional[0];
        if (verb == "catalog") return cmd_catalog(a, out, err);
        if (verb == "build") return cmd_build(a, out, err);
        if (verb == "verify") return cmd_verify(a, out, err);
        if (verb == "gate") return cmd_gate(a, out, err);
        if (verb == "solve") return cmd_solve(a, out, err);
        if (verb == "export") return cmd_export(a, out, err);
        err << "unknown verb '" << verb << "'\n" << kUsage;
        return 2;
    } catch (const std::invalid_argument& e) {
        err << e.what() << "\n" << kUsage;
        return 2;
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return 1;
    }
}

}  // namespace qsx
