#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lca/derivspaces.hpp"
#include "lca/report.hpp"
#include "lca/triplehom.hpp"

using json = nlohmann::ordered_json;
using namespace lca;

namespace {

constexpr const char* kToolVersion = "0.1.0";
constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitParse = 2;
constexpr int kExitFlags = 3;
constexpr int kExitPrecondition = 4;

struct Loaded {
    SourceFile file;
    std::string text;
};

int default_bound() {
    if (const char* s = std::getenv("LCA_DEG_DEFAULT")) {
        char* end = nullptr;
        long v = std::strtol(s, &end, 10);
        if (end && *end == '\0' && v >= 0 && v <= 16) return static_cast<int>(v);
        std::cerr << "warning: ignoring invalid LCA_DEG_DEFAULT\n";
    }
    return 3;
}

json diag_json(const Diagnostic& d) {
    return json{{"severity", d.severity == Diagnostic::ERROR ? "error" : "warning"},
                {"message", d.message},
                {"line", d.line},
                {"column", d.column},
                {"snippet", d.snippet}};
}

// Parse failures print the diagnostics and exit 2 through this exception.
struct ExitWith {
    int code;
};

Loaded load(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        json out{{"error", "cannot open file: " + path}};
        std::cout << out.dump(2) << "\n";
        throw ExitWith{kExitParse};
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    ParseResult r = parse_source(ss.str());
    for (const auto& d : r.diagnostics) std::cerr << d.to_string() << "\n";
    if (!r.ok()) {
        json out{{"error", "parse failed"}, {"diagnostics", json::array()}};
        for (const auto& d : r.diagnostics) out["diagnostics"].push_back(diag_json(d));
        std::cout << out.dump(2) << "\n";
        throw ExitWith{kExitParse};
    }
    return Loaded{std::move(*r.file), ss.str()};
}

const ConformalAlgebra& pick_algebra(const SourceFile& f, std::string& name) {
    if (name.empty()) {
        for (const auto& d : f.order)
            if (d.kind == SourceFile::Declaration::CONFALG) {
                name = d.name;
                return *f.confalg(name);
            }
        std::cerr << "error: the file declares no conformal algebra\n";
        throw ExitWith{kExitFlags};
    }
    const ConformalAlgebra* a = f.confalg(name);
    if (!a) {
        std::cerr << "error: no conformal algebra named '" << name << "'\n";
        throw ExitWith{kExitFlags};
    }
    return *a;
}

json witness_json(const CheckResult& r) {
    json out{{"ok", r.ok}};
    if (r.witness) {
        out["witness"] = {{"generators", r.witness->generators}, {"residual", json::array()}};
        for (const auto& p : r.witness->residual.comps)
            out["witness"]["residual"].push_back(p.to_string());
    }
    return out;
}

json map_json(const ConformalMap& m) {
    json rows = json::array();
    for (int i = 0; i < m.rank; ++i) {
        json row = json::array();
        for (int j = 0; j < m.rank; ++j) row.push_back(m.mat[i][j].to_string());
        rows.push_back(row);
    }
    return rows;
}

json modmap_json(const ModuleMap& m) {
    json rows = json::array();
    for (int i = 0; i < m.out_rank; ++i) {
        json row = json::array();
        for (int j = 0; j < m.in_rank; ++j) row.push_back(m.mat[i][j].to_string());
        rows.push_back(row);
    }
    return rows;
}

json submodule_json(const SubmoduleBasis& b) {
    json gens = json::array();
    for (const auto& g : b.gens) {
        json col = json::array();
        for (const auto& p : g) col.push_back(p.to_string());
        gens.push_back(col);
    }
    return gens;
}

int cmd_check_axioms(const std::string& path, std::string algebra) {
    Loaded in = load(path);
    const ConformalAlgebra& a = pick_algebra(in.file, algebra);
    CheckResult skew = a.check_skew();
    CheckResult jacobi = a.check_jacobi();
    json out{{"command", "check-axioms"},
             {"algebra", algebra},
             {"rank", a.rank()},
             {"skew", witness_json(skew)},
             {"jacobi", witness_json(jacobi)}};
    std::cout << out.dump(2) << "\n";
    return skew.ok && jacobi.ok ? kExitOk : kExitVerification;
}

int cmd_solve(const std::string& path, std::string algebra, const std::string& space, int deg_d,
              int deg_x) {
    std::string lower = space;
    for (auto& c : lower) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    auto kind = equation_kind_from_string(lower);
    if (!kind || *kind == EquationKind::CINN_MEMBER) {
        std::cerr << "error: unknown space '" << space << "'\n";
        return kExitFlags;
    }
    if (deg_d < 0 || deg_x < 0) {
        std::cerr << "error: degree bounds must be nonnegative\n";
        return kExitFlags;
    }
    Loaded in = load(path);
    const ConformalAlgebra& a = pick_algebra(in.file, algebra);
    SolutionSpace s = solve_space(a, *kind, deg_d, deg_x);
    SolutionSpace inner = inner_space(a, deg_x);
    json out{{"command", "solve"},
             {"algebra", algebra},
             {"kind", equation_kind_name(*kind)},
             {"deg_d", deg_d},
             {"deg_x", deg_x},
             {"dimension", s.dimension()},
             {"basis", json::array()},
             {"inner_quotient_dimension", quotient_dimension(s, inner)}};
    for (const auto& m : s.basis) out["basis"].push_back(map_json(m));
    if (*kind == EquationKind::GCTDER) {
        out["tau_basis"] = json::array();
        for (const auto& m : s.tau_basis) out["tau_basis"].push_back(map_json(m));
    }
    std::cout << out.dump(2) << "\n";
    return kExitOk;
}

int cmd_triple_hom(const std::string& path, const std::string& map_name, bool decompose) {
    Loaded in = load(path);
    const SourceFile::ModMapDecl* d = in.file.modmap(map_name);
    if (!d) {
        std::cerr << "error: no modmap named '" << map_name << "'\n";
        return kExitFlags;
    }
    const ConformalAlgebra& A = *in.file.confalg(d->from);
    const ConformalAlgebra& B = *in.file.confalg(d->to);
    json out{{"command", "triple-hom"},
             {"map", map_name},
             {"from", d->from},
             {"to", d->to},
             {"kinds",
              {{"hom", modmap_kind(A, B, d->map, MapKind::HOM).ok},
               {"antihom", modmap_kind(A, B, d->map, MapKind::ANTIHOM).ok},
               {"triplehom", modmap_kind(A, B, d->map, MapKind::TRIPLEHOM).ok}}}};
    int code = kExitOk;
    if (decompose) {
        try {
            Decomposition dec = split_decompose(A, B, d->map);
            out["decomposition"] = {{"label", split_label_name(dec.label)},
                                    {"delta", modmap_json(dec.delta)},
                                    {"f_I", modmap_json(dec.f_I)},
                                    {"f_J", modmap_json(dec.f_J)},
                                    {"E_plus", submodule_json(dec.E_plus)},
                                    {"E_minus", submodule_json(dec.E_minus)}};
        } catch (const Error& e) {
            out["decomposition"] = {{"failed_check", error_code_name(e.code())},
                                    {"message", e.what()}};
            code = kExitPrecondition;
        }
    }
    std::cout << out.dump(2) << "\n";
    return code;
}

int cmd_report(const std::string& path, int deg_d, int deg_x) {
    Loaded in = load(path);
    ReportOptions opt{deg_d, deg_x};
    std::vector<LedgerEntry> ledger = run_ledger(in.file, opt);
    bool all_pass = true;
    json out{{"schema_version", 1},
             {"tool_version", kToolVersion},
             {"input_digest", source_digest(in.text)},
             {"ledger", json::array()}};
    for (const auto& e : ledger) {
        all_pass = all_pass && e.pass;
        out["ledger"].push_back({{"claim", e.claim},
                                 {"paper_anchor", e.paper_anchor},
                                 {"status", e.pass ? "PASS" : "FAIL"},
                                 {"bounds", e.bounds}});
    }
    std::cout << out.dump(2) << "\n";
    return all_pass ? kExitOk : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact solver for finite Lie conformal algebras"};
    app.require_subcommand(1);
    int dflt = default_bound();

    std::string file, algebra, space = "cder", map_name, format = "json";
    int deg_d = dflt, deg_x = dflt;
    bool decompose = false;

    auto* check = app.add_subcommand("check-axioms", "Verify skew symmetry and Jacobi");
    check->add_option("file", file, "input .lca file")->required();
    check->add_option("--algebra", algebra, "conformal algebra name");

    auto* solve = app.add_subcommand("solve", "Solve a derivation-type equation space");
    solve->add_option("file", file, "input .lca file")->required();
    solve->add_option("--algebra", algebra, "conformal algebra name");
    solve->add_option("--space", space, "cder|ctder|gctder|tc|tqc|ztder");
    solve->add_option("--deg-d", deg_d, "ansatz degree bound in D");
    solve->add_option("--deg-x", deg_x, "ansatz degree bound in x");
    solve->add_option("--format", format, "output format (json)");

    auto* th = app.add_subcommand("triple-hom", "Classify a module map");
    th->add_option("file", file, "input .lca file")->required();
    th->add_option("--map", map_name, "modmap name")->required();
    th->add_flag("--decompose", decompose, "split into hom + anti-hom parts");

    auto* rep = app.add_subcommand("report", "Run the verification ledger");
    rep->add_option("file", file, "input .lca file")->required();
    rep->add_option("--deg-d", deg_d, "solver degree bound in D");
    rep->add_option("--deg-x", deg_x, "solver degree bound in x");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitFlags;
    }
    if (format != "json") {
        std::cerr << "error: unsupported format '" << format << "'\n";
        return kExitFlags;
    }

    try {
        if (check->parsed()) return cmd_check_axioms(file, algebra);
        if (solve->parsed()) return cmd_solve(file, algebra, space, deg_d, deg_x);
        if (th->parsed()) return cmd_triple_hom(file, map_name, decompose);
        if (rep->parsed()) return cmd_report(file, deg_d, deg_x);
    } catch (const ExitWith& e) {
        return e.code;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitVerification;
    }
    return kExitFlags;
}
