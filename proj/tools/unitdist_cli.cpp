#include "unitdist/catalog.hpp"
#include "unitdist/certificate.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace unitdist;

namespace {

// Exit codes: 0 success, 1 claim or verification failure, 2 usage error,
// 3 search or time budget exhausted.
constexpr int kExitOk = 0;
constexpr int kExitClaimFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FieldSpec {
    FieldKind kind = FieldKind::Q;
    long long m = 0;       // Quad
    long long m1 = 0, m2 = 0;  // BiQuad
};

FieldSpec parse_field_spec(const std::string& s) {
    FieldSpec fs;
    if (s == "q") {
        fs.kind = FieldKind::Q;
        return fs;
    }
    if (s.rfind("quad:", 0) == 0) {
        fs.kind = FieldKind::Quad;
        fs.m = std::stoll(s.substr(5));
        return fs;
    }
    if (s.rfind("biquad:", 0) == 0) {
        fs.kind = FieldKind::BiQuad;
        std::string rest = s.substr(7);
        auto comma = rest.find(',');
        if (comma == std::string::npos)
            throw UsageError("--field biquad takes two radicands, e.g. biquad:3,11");
        fs.m1 = std::stoll(rest.substr(0, comma));
        fs.m2 = std::stoll(rest.substr(comma + 1));
        return fs;
    }
    throw UsageError("unknown field '" + s + "' (expected q, quad:M, or biquad:M1,M2)");
}

// One point per line, coordinates separated by ';', comments with '#'.
std::vector<std::string> read_point_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open points file '" + path + "'");
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        bool blank = true;
        for (char c : line)
            if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
        if (!blank) lines.push_back(line);
    }
    return lines;
}

template <typename K, typename ParseCoord>
std::vector<PointT<K>> parse_points(const std::vector<std::string>& lines, ParseCoord&& coord) {
    std::vector<PointT<K>> pts;
    std::size_t dim = 0;
    for (std::size_t ln = 0; ln < lines.size(); ++ln) {
        PointT<K> p;
        try {
            for (const std::string& part : split_coordinates(lines[ln])) p.push_back(coord(part));
        } catch (const ParseError& e) {
            throw UsageError("points file, point " + std::to_string(ln + 1) + ": " + e.what());
        }
        if (dim == 0) dim = p.size();
        if (p.size() != dim || p.empty())
            throw UsageError("points file, point " + std::to_string(ln + 1) +
                             ": expected " + std::to_string(dim) + " coordinates");
        pts.push_back(std::move(p));
    }
    if (pts.empty()) throw UsageError("points file contains no points");
    return pts;
}

DiagForm make_form(const std::string& spec, int d) {
    if (spec.empty()) return DiagForm::euclidean(d);
    std::vector<long long> coeffs;
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ',')) coeffs.push_back(std::stoll(tok));
    if (static_cast<int>(coeffs.size()) != d)
        throw UsageError("--form has " + std::to_string(coeffs.size()) + " coefficients, expected " +
                         std::to_string(d));
    return DiagForm(coeffs);
}

UGraph build_points_graph(const std::string& field_str, const std::string& points_path,
                          const std::string& form_str) {
    FieldSpec fs = parse_field_spec(field_str);
    auto lines = read_point_lines(points_path);
    switch (fs.kind) {
        case FieldKind::Q: {
            auto pts = parse_points<Rat>(lines, [](const std::string& s) { return parse_rat_elem(s); });
            return build_exact_graph(pts, make_form(form_str, static_cast<int>(pts[0].size())));
        }
        case FieldKind::Quad: {
            auto pts = parse_points<QuadElem>(
                lines, [&](const std::string& s) { return parse_quad_elem(s, fs.m); });
            return build_exact_graph(pts, make_form(form_str, static_cast<int>(pts[0].size())));
        }
        case FieldKind::BiQuad: {
            auto pts = parse_points<BiQuadElem>(
                lines, [&](const std::string& s) { return parse_biquad_elem(s, fs.m1, fs.m2); });
            return build_exact_graph(pts, make_form(form_str, static_cast<int>(pts[0].size())));
        }
    }
    throw std::logic_error("unreachable");
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot write '" + path + "'");
    out << content;
}

int report_chi(const UGraph& g, std::uint64_t node_budget, const std::string& cert_path,
               const std::string& dimacs_path, bool print_counts) {
    if (!dimacs_path.empty()) write_text_file(dimacs_path, to_dimacs(g));
    if (print_counts) std::cout << "n = " << g.n << "\nm = " << g.edge_count() << "\n";
    KColorOptions opts;
    if (node_budget != 0) opts.node_budget = node_budget;
    ChiResult res = chi_exact(g, opts);
    if (!res.resolved()) {
        std::cout << "chi in [" << res.lower_bound << ", " << res.upper_bound
                  << "] (node budget exhausted after " << res.total_nodes << " nodes)\n";
        return kExitBudget;
    }
    std::cout << "chi = " << res.chi() << "\n";
    if (!cert_path.empty())
        write_text_file(cert_path, certificate_json(g, *res.certificate).dump(2) + "\n");
    return kExitOk;
}

int run_color(const std::string& oracle_name, const std::string& point_str, bool verbose) {
    OracleId id;
    if (oracle_name == "q2") id = OracleId::Q2COLOR;
    else if (oracle_name == "sqrt2") id = OracleId::SQRT2_2COLOR;
    else if (oracle_name == "sqrt3") id = OracleId::SQRT3_3COLOR;
    else if (oracle_name == "sqrt7") id = OracleId::SQRT7_3COLOR;
    else if (oracle_name == "sqrtneg5") id = OracleId::SQRTNEG5_3COLOR;
    else if (oracle_name == "biquad") id = OracleId::BIQUAD_5COLOR;
    else
        throw UsageError("unknown oracle '" + oracle_name +
                         "' (expected q2, sqrt2, sqrt3, sqrt7, sqrtneg5, or biquad)");

    auto parts = split_coordinates(point_str);
    OracleTrace trace;
    OracleTrace* tr = verbose ? &trace : nullptr;
    int color = -1;
    try {
        if (id == OracleId::Q2COLOR) {
            PointT<Rat> x;
            for (const auto& s : parts) x.push_back(parse_rat_elem(s));
            color = color_oracle(id, x, tr);
        } else if (id == OracleId::BIQUAD_5COLOR) {
            PrimeSpec spec = oracle_spec(id);
            PointT<BiQuadElem> x;
            for (const auto& s : parts) x.push_back(parse_biquad_elem(s, spec.field.m1, spec.field.m2));
            color = color_oracle(id, x, tr);
        } else {
            PrimeSpec spec = oracle_spec(id);
            PointT<QuadElem> x;
            for (const auto& s : parts) x.push_back(parse_quad_elem(s, spec.field.m));
            color = color_oracle(id, x, tr);
        }
    } catch (const ParseError& e) {
        throw UsageError(std::string("--point: ") + e.what());
    }
    if (verbose) {
        auto join = [](const std::vector<std::string>& v) {
            std::string s;
            for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "; " : "") + v[i];
            return s;
        };
        std::cout << "representative = " << join(trace.representative) << "\n";
        std::cout << "reduced        = " << join(trace.reduced) << "\n";
    }
    std::cout << color << "\n";
    return kExitOk;
}

int run_verify_paper(double budget, const std::string& json_path) {
    auto claims = verify_paper(budget);
    int pass = 0, fail = 0, skipped = 0;
    for (const auto& c : claims) {
        std::cout << "[" << claim_status_str(c.status) << "] " << c.id << "\n";
        std::cout << "    " << c.description << "\n";
        std::cout << "    " << c.evidence << "  [" << std::fixed << std::setprecision(3)
                  << c.elapsed_seconds << "s]\n" << std::defaultfloat;
        if (c.status == ClaimStatus::Pass) ++pass;
        else if (c.status == ClaimStatus::Fail) ++fail;
        else ++skipped;
    }
    std::cout << claims.size() << " claims: " << pass << " pass, " << fail << " fail, " << skipped
              << " skipped\n";
    if (!json_path.empty()) {
        nlohmann::ordered_json doc = nlohmann::ordered_json::array();
        for (const auto& c : claims)
            doc.push_back({{"id", c.id}, {"status", claim_status_str(c.status)}, {"evidence", c.evidence}});
        write_text_file(json_path, doc.dump(2) + "\n");
    }
    if (fail > 0) return kExitClaimFailed;
    if (skipped > 0) return kExitBudget;
    return kExitOk;
}

int run_scan_primes(int mod4, const std::string& qr_str, long long limit, bool verbose) {
    if (mod4 != 0 && mod4 != 3) throw UsageError("--mod4 only supports the residue 3");
    std::vector<long long> qr;
    if (!qr_str.empty()) {
        std::stringstream ss(qr_str);
        std::string tok;
        while (std::getline(ss, tok, ',')) qr.push_back(std::stoll(tok));
    }
    auto reports = scan_embedding_primes(mod4 == 3, qr, limit);
    for (const auto& rep : reports) {
        std::cout << rep.p;
        if (verbose) {
            std::cout << "  mod4=" << (rep.mod4_is_3 ? 3 : 1);
            for (const auto& [a, s] : rep.qr) std::cout << " qr(" << a << ")=" << qr_status_str(s);
        }
        std::cout << "\n";
    }
    return kExitOk;
}

int run_probe(const UGraph& g, const std::string& cert_path) {
    StructureReport rep = structure_probe(g);
    std::cout << "n = " << g.n << "\n";
    std::cout << "m = " << g.edge_count() << "\n";
    std::cout << "bipartite = " << (rep.is_bipartite ? "yes" : "no") << "\n";
    std::cout << "triangles = " << rep.triangle_count << "\n";
    std::cout << "odd_girth = ";
    if (rep.shortest_odd_cycle) std::cout << *rep.shortest_odd_cycle << "\n";
    else std::cout << "none\n";
    std::cout << "sha256 = " << dimacs_sha256(g) << "\n";
    if (!cert_path.empty()) {
        std::ifstream in(cert_path);
        if (!in) throw UsageError("cannot open certificate '" + cert_path + "'");
        nlohmann::json doc;
        try {
            in >> doc;
        } catch (const nlohmann::json::exception& e) {
            std::cout << "certificate = invalid (" << e.what() << ")\n";
            return kExitClaimFailed;
        }
        CertCheckReport check = check_certificate(g, doc);
        std::cout << "certificate = " << (check.ok ? "ok" : "invalid (" + check.message + ")") << "\n";
        if (!check.ok) return kExitClaimFailed;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact unit-distance graphs over finite planes and quadratic fields"};
    app.require_subcommand(1);

    // chi-fp
    auto* chi_fp = app.add_subcommand("chi-fp", "chromatic number of the unit-distance graph on F_p^d");
    long long fp_p = 0;
    int fp_d = 2;
    std::string fp_form, fp_cert, fp_dimacs;
    std::uint64_t fp_budget = 0;
    chi_fp->add_option("--p", fp_p, "prime modulus")->required();
    chi_fp->add_option("--d", fp_d, "dimension (default 2)");
    chi_fp->add_option("--form", fp_form, "diagonal form coefficients c1,c2,... (default all 1)");
    chi_fp->add_option("--certificate", fp_cert, "write the chi certificate to this JSON file");
    chi_fp->add_option("--dimacs", fp_dimacs, "write the graph in DIMACS format to this file");
    chi_fp->add_option("--node-budget", fp_budget, "search node budget (0 = unlimited)");

    // chi-points
    auto* chi_pts = app.add_subcommand("chi-points", "chromatic number of the exact unit-distance graph on listed points");
    std::string pts_field, pts_file, pts_form, pts_cert, pts_dimacs;
    std::uint64_t pts_budget = 0;
    chi_pts->add_option("--field", pts_field, "coordinate field: q, quad:M, or biquad:M1,M2")->required();
    chi_pts->add_option("--points", pts_file, "points file (one point per line, coordinates ';'-separated)")->required();
    chi_pts->add_option("--form", pts_form, "diagonal form coefficients (default all 1)");
    chi_pts->add_option("--certificate", pts_cert, "write the chi certificate to this JSON file");
    chi_pts->add_option("--dimacs", pts_dimacs, "write the graph in DIMACS format to this file");
    chi_pts->add_option("--node-budget", pts_budget, "search node budget (0 = unlimited)");

    // color
    auto* color = app.add_subcommand("color", "apply a plane coloring oracle to one exact point");
    std::string col_oracle, col_point;
    bool col_verbose = false;
    color->add_option("--oracle", col_oracle, "q2, sqrt2, sqrt3, sqrt7, sqrtneg5, or biquad")->required();
    color->add_option("--point", col_point, "exact point, e.g. \"1/2; 1/2*sqrt(3)\"")->required();
    color->add_flag("--verbose", col_verbose, "print the representative and reduced residues");

    // verify-paper
    auto* verify = app.add_subcommand("verify-paper", "run the full claim suite");
    std::string ver_json;
    double ver_budget = 3600.0;
    verify->add_option("--json", ver_json, "also write the report as JSON to this file");
    verify->add_option("--budget", ver_budget, "time budget in seconds (default 3600)");

    // scan-primes
    auto* scan = app.add_subcommand("scan-primes", "list odd primes satisfying congruence and residue criteria");
    int scan_mod4 = 0;
    std::string scan_qr;
    long long scan_limit = 0;
    bool scan_verbose = false;
    scan->add_option("--mod4", scan_mod4, "require p = 3 (mod 4)");
    scan->add_option("--qr", scan_qr, "comma-separated values that must be squares mod p");
    scan->add_option("--limit", scan_limit, "scan primes up to this bound")->required();
    scan->add_flag("--verbose", scan_verbose, "print the per-criterion report");

    // export-dimacs
    auto* exp = app.add_subcommand("export-dimacs", "write a graph in DIMACS format");
    long long exp_p = 0;
    int exp_d = 2;
    std::string exp_form, exp_field, exp_points, exp_out;
    exp->add_option("--p", exp_p, "prime modulus (finite-plane source)");
    exp->add_option("--d", exp_d, "dimension (default 2)");
    exp->add_option("--field", exp_field, "coordinate field for a points-file source");
    exp->add_option("--points", exp_points, "points file source");
    exp->add_option("--form", exp_form, "diagonal form coefficients (default all 1)");
    exp->add_option("--out", exp_out, "output file (default stdout)");

    // probe
    auto* probe = app.add_subcommand("probe", "structure report (and certificate check) for a graph");
    long long probe_p = 0;
    int probe_d = 2;
    std::string probe_form, probe_field, probe_points, probe_dimacs_in, probe_cert;
    probe->add_option("--p", probe_p, "prime modulus (finite-plane source)");
    probe->add_option("--d", probe_d, "dimension (default 2)");
    probe->add_option("--field", probe_field, "coordinate field for a points-file source");
    probe->add_option("--points", probe_points, "points file source");
    probe->add_option("--form", probe_form, "diagonal form coefficients (default all 1)");
    probe->add_option("--dimacs-in", probe_dimacs_in, "read the graph from a DIMACS file");
    probe->add_option("--check-certificate", probe_cert, "validate this certificate JSON against the graph");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (chi_fp->parsed()) {
            UGraph g = build_fp_graph(fp_p, fp_d, make_form(fp_form, fp_d));
            return report_chi(g, fp_budget, fp_cert, fp_dimacs, false);
        }
        if (chi_pts->parsed()) {
            UGraph g = build_points_graph(pts_field, pts_file, pts_form);
            return report_chi(g, pts_budget, pts_cert, pts_dimacs, true);
        }
        if (color->parsed()) return run_color(col_oracle, col_point, col_verbose);
        if (verify->parsed()) return run_verify_paper(ver_budget, ver_json);
        if (scan->parsed()) return run_scan_primes(scan_mod4, scan_qr, scan_limit, scan_verbose);
        if (exp->parsed()) {
            UGraph g;
            if (!exp_points.empty()) {
                if (exp_field.empty()) throw UsageError("--points requires --field");
                g = build_points_graph(exp_field, exp_points, exp_form);
            } else if (exp_p != 0) {
                g = build_fp_graph(exp_p, exp_d, make_form(exp_form, exp_d));
            } else {
                throw UsageError("export-dimacs needs either --p or --field/--points");
            }
            if (exp_out.empty()) std::cout << to_dimacs(g);
            else write_text_file(exp_out, to_dimacs(g));
            return kExitOk;
        }
        if (probe->parsed()) {
            UGraph g;
            if (!probe_dimacs_in.empty()) {
                std::ifstream in(probe_dimacs_in, std::ios::binary);
                if (!in) throw UsageError("cannot open '" + probe_dimacs_in + "'");
                std::ostringstream buf;
                buf << in.rdbuf();
                g = parse_dimacs(buf.str());
            } else if (!probe_points.empty()) {
                if (probe_field.empty()) throw UsageError("--points requires --field");
                g = build_points_graph(probe_field, probe_points, probe_form);
            } else if (probe_p != 0) {
                g = build_fp_graph(probe_p, probe_d, make_form(probe_form, probe_d));
            } else {
                throw UsageError("probe needs --p, --field/--points, or --dimacs-in");
            }
            return run_probe(g, probe_cert);
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
