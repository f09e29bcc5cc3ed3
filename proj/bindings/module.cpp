#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lca/derivspaces.hpp"
#include "lca/report.hpp"
#include "lca/triplehom.hpp"

namespace py = pybind11;
using namespace lca;

namespace {

EquationKind kind_arg(const std::string& s) {
    auto k = equation_kind_from_string(s);
    if (!k || *k == EquationKind::CINN_MEMBER)
        throw py::value_error("unknown equation kind: " + s);
    return *k;
}

std::vector<std::vector<std::string>> map_strings(const ConformalMap& m) {
    std::vector<std::vector<std::string>> out(m.rank);
    for (int i = 0; i < m.rank; ++i)
        for (int j = 0; j < m.rank; ++j) out[i].push_back(m.mat[i][j].to_string());
    return out;
}

SourceFile parse_or_throw(const std::string& text) {
    ParseResult r = parse_source(text);
    if (!r.ok()) {
        std::string msg;
        for (const auto& d : r.diagnostics) msg += d.to_string() + "\n";
        throw py::value_error(msg);
    }
    return std::move(*r.file);
}

}  // namespace

PYBIND11_MODULE(_lca, m) {
    m.doc() = "Exact symbolic engine for finite Lie conformal algebras";

    py::class_<ConformalAlgebra>(m, "ConformalAlgebra")
        .def_property_readonly("rank", &ConformalAlgebra::rank)
        .def_property_readonly("generators",
                               [](const ConformalAlgebra& a) { return a.gen_names(); })
        .def_property_readonly("is_current", &ConformalAlgebra::is_current)
        .def("check_skew", [](const ConformalAlgebra& a) { return a.check_skew().ok; })
        .def("check_jacobi", [](const ConformalAlgebra& a) { return a.check_jacobi().ok; })
        .def(
            "bracket",
            [](const ConformalAlgebra& a, int i, int j) {
                if (i < 0 || j < 0 || i >= a.rank() || j >= a.rank())
                    throw py::index_error("generator index out of range");
                return a.table(i, j).to_string(a.gen_names());
            },
            py::arg("i"), py::arg("j"),
            "Rendered lambda-bracket [e_i ~ e_j] as a string")
        .def("__repr__", [](const ConformalAlgebra& a) {
            return "<ConformalAlgebra rank=" + std::to_string(a.rank()) + ">";
        });

    py::class_<SolutionSpace>(m, "SolutionSpace")
        .def_property_readonly("kind",
                               [](const SolutionSpace& s) {
                                   return std::string(equation_kind_name(s.kind));
                               })
        .def_property_readonly("deg_d", [](const SolutionSpace& s) { return s.deg_d; })
        .def_property_readonly("deg_x", [](const SolutionSpace& s) { return s.deg_x; })
        .def_property_readonly("dimension", &SolutionSpace::dimension)
        .def_property_readonly("basis", [](const SolutionSpace& s) {
            std::vector<std::vector<std::vector<std::string>>> out;
            for (const auto& b : s.basis) out.push_back(map_strings(b));
            return out;
        });

    m.def("vir", &make_vir, "The rank-1 Virasoro conformal algebra");
    m.def(
        "cur_sl2", [] { return make_cur(make_sl2()); }, "Current algebra over sl2");
    m.def(
        "cur_sl3", [] { return make_cur(make_sl3()); }, "Current algebra over sl3");
    m.def("direct_sum", &direct_sum);

    m.def(
        "parse_algebras",
        [](const std::string& text) {
            SourceFile f = parse_or_throw(text);
            std::map<std::string, ConformalAlgebra> out(f.confalgs.begin(), f.confalgs.end());
            return out;
        },
        py::arg("text"), "Parse source text and return its conformal algebras by name");

    m.def(
        "solve",
        [](const ConformalAlgebra& a, const std::string& kind, int deg_d, int deg_x) {
            return solve_space(a, kind_arg(kind), deg_d, deg_x);
        },
        py::arg("algebra"), py::arg("kind"), py::arg("deg_d") = 3, py::arg("deg_x") = 3);

    m.def(
        "inner_quotient_dimension",
        [](const ConformalAlgebra& a, const std::string& kind, int deg_d, int deg_x) {
            SolutionSpace s = solve_space(a, kind_arg(kind), deg_d, deg_x);
            return quotient_dimension(s, inner_space(a, deg_x));
        },
        py::arg("algebra"), py::arg("kind"), py::arg("deg_d") = 3, py::arg("deg_x") = 3);

    m.def(
        "ledger",
        [](const std::string& text, int deg_d, int deg_x) {
            SourceFile f = parse_or_throw(text);
            std::vector<std::tuple<std::string, std::string, std::string, bool>> out;
            for (const auto& e : run_ledger(f, ReportOptions{deg_d, deg_x}))
                out.emplace_back(e.claim, e.paper_anchor, e.bounds, e.pass);
            return out;
        },
        py::arg("text"), py::arg("deg_d") = 3, py::arg("deg_x") = 3,
        "Run the verification ledger; returns (claim, anchor, bounds, pass) tuples");

    m.def(
        "triple_hom_kinds",
        [](const std::string& text, const std::string& map_name) {
            SourceFile f = parse_or_throw(text);
            const SourceFile::ModMapDecl* d = f.modmap(map_name);
            if (!d) throw py::value_error("no modmap named " + map_name);
            const ConformalAlgebra& A = *f.confalg(d->from);
            const ConformalAlgebra& B = *f.confalg(d->to);
            py::dict out;
            out["hom"] = modmap_kind(A, B, d->map, MapKind::HOM).ok;
            out["antihom"] = modmap_kind(A, B, d->map, MapKind::ANTIHOM).ok;
            out["triplehom"] = modmap_kind(A, B, d->map, MapKind::TRIPLEHOM).ok;
            return out;
        },
        py::arg("text"), py::arg("map_name"));
}
