#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fingeo/canon.hpp"
#include "fingeo/constructions.hpp"
#include "fingeo/gf.hpp"
#include "fingeo/incfile.hpp"
#include "fingeo/incidence.hpp"
#include "fingeo/inversive.hpp"
#include "fingeo/projective.hpp"
#include "fingeo/reconstruct.hpp"

namespace py = pybind11;
using namespace fingeo;

namespace {

std::vector<int> bits_to_list(const Bitset& b) {
    std::vector<int> out;
    for (size_t i = b.find_first(); i != Bitset::npos; i = b.find_next(i))
        out.push_back(static_cast<int>(i));
    return out;
}

OvoidSearchMode mode_from_string(const std::string& s) {
    if (s == "find_one") return OvoidSearchMode::find_one;
    if (s == "count_all") return OvoidSearchMode::count_all;
    if (s == "enumerate") return OvoidSearchMode::enumerate;
    throw std::invalid_argument("search mode must be find_one, count_all or enumerate");
}

}  // namespace

PYBIND11_MODULE(_fingeo, m) {
    m.doc() = "finite geometry workbench: GF(q), PG(3,q), designs, generalized "
              "quadrangles, inversive planes";

    py::register_exception<NotAPrimePower>(m, "NotAPrimePower", PyExc_ValueError);
    py::register_exception<UnsupportedOrder>(m, "UnsupportedOrder", PyExc_ValueError);
    py::register_exception<DivisionByZero>(m, "DivisionByZero", PyExc_ZeroDivisionError);
    py::register_exception<OddOrder>(m, "OddOrder", PyExc_ValueError);
    py::register_exception<Budget>(m, "Budget", PyExc_RuntimeError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    py::class_<Field>(m, "Field")
        .def(py::init<int>(), py::arg("q"))
        .def_property_readonly("q", &Field::q)
        .def_property_readonly("p", &Field::p)
        .def_property_readonly("e", &Field::e)
        .def("add", &Field::add)
        .def("mul", &Field::mul)
        .def("neg", &Field::neg)
        .def("inv", &Field::inv)
        .def("pow", &Field::pow)
        .def("frobenius", &Field::frobenius)
        .def("reduction_poly", &Field::reduction_poly)
        .def("__repr__",
             [](const Field& F) { return "Field(" + std::to_string(F.q()) + ")"; });

    py::class_<PG3>(m, "PG3")
        .def(py::init<const Field&>(), py::arg("field"), py::keep_alive<1, 2>())
        .def_property_readonly("num_points",
                               [](const PG3& pg) { return pg.points().size(); })
        .def_property_readonly("num_lines",
                               [](const PG3& pg) { return pg.lines().size(); })
        .def_property_readonly("num_planes",
                               [](const PG3& pg) { return pg.planes().size(); })
        .def("points", &PG3::points)
        .def("lines", &PG3::lines)
        .def("planes", &PG3::planes)
        .def("point_index", &PG3::point_index)
        .def("plane_points", &PG3::plane_points)
        .def("symplectic_form",
             py::overload_cast<int, int>(&PG3::symplectic_form, py::const_))
        .def("null_polarity_image", &PG3::null_polarity_image)
        .def("null_polarity_preimage", &PG3::null_polarity_preimage);

    py::class_<IncidenceStructure>(m, "IncidenceStructure")
        .def(py::init<int, std::vector<Block>>(), py::arg("num_points"),
             py::arg("blocks"))
        .def_property_readonly("num_points", &IncidenceStructure::num_points)
        .def_property_readonly("num_blocks", &IncidenceStructure::num_blocks)
        .def("blocks", &IncidenceStructure::blocks)
        .def("block", &IncidenceStructure::block)
        .def("incident", &IncidenceStructure::incident)
        .def("__eq__", [](const IncidenceStructure& a,
                          const IncidenceStructure& b) { return a == b; })
        .def("__repr__", [](const IncidenceStructure& S) {
            return "IncidenceStructure(points=" + std::to_string(S.num_points()) +
                   ", blocks=" + std::to_string(S.num_blocks()) + ")";
        });

    py::class_<DesignParams>(m, "DesignParams")
        .def_readonly("t", &DesignParams::t)
        .def_readonly("v", &DesignParams::v)
        .def_readonly("k", &DesignParams::k)
        .def_readonly("lambda_", &DesignParams::lambda)
        .def_readonly("lambda_s", &DesignParams::lambda_s)
        .def_readonly("b", &DesignParams::b)
        .def_readonly("r", &DesignParams::r)
        .def_readonly("is_symmetric", &DesignParams::is_symmetric)
        .def_readonly("fisher_ok", &DesignParams::fisher_ok);

    m.def("verify_t_design", &verify_t_design, py::arg("structure"), py::arg("t"));
    m.def("contract", &contract, py::arg("structure"), py::arg("point"));
    m.def("dual", &dual);
    m.def("design_line", &design_line);

    py::class_<DembowskiWagnerReport>(m, "DembowskiWagnerReport")
        .def_readonly("is_symmetric", &DembowskiWagnerReport::is_symmetric)
        .def_readonly("balance_gt_one", &DembowskiWagnerReport::balance_gt_one)
        .def_readonly("all_lines_meet_all_blocks",
                      &DembowskiWagnerReport::all_lines_meet_all_blocks)
        .def_readonly("hypothesis_holds", &DembowskiWagnerReport::hypothesis_holds)
        .def_readonly("num_lines", &DembowskiWagnerReport::num_lines);
    m.def("check_dembowski_wagner", &check_dembowski_wagner);

    py::class_<GQView>(m, "GQView")
        .def_property_readonly("s", &GQView::s)
        .def_property_readonly("t", &GQView::t)
        .def_property_readonly("num_points", &GQView::num_points)
        .def_property_readonly("num_lines", &GQView::num_lines)
        .def("structure", &GQView::structure)
        .def("collinear", &GQView::collinear)
        .def("star", [](const GQView& G, int x) { return bits_to_list(G.star(x)); })
        .def("lines_through", &GQView::lines_through);
    m.def("verify_gq", &verify_gq);

    py::class_<TraceSpan>(m, "TraceSpan")
        .def_readonly("trace", &TraceSpan::trace)
        .def_readonly("span", &TraceSpan::span)
        .def("regular", &TraceSpan::regular);
    m.def("trace_span", &trace_span);

    py::class_<RegularityReport>(m, "RegularityReport")
        .def_readonly("regular", &RegularityReport::regular)
        .def_readonly("regular_pairs", &RegularityReport::regular_pairs)
        .def_readonly("total_pairs", &RegularityReport::total_pairs);
    m.def("verify_regularity", &verify_regularity);

    py::class_<BipartiteCount>(m, "BipartiteCount")
        .def_readonly("n", &BipartiteCount::n)
        .def_readonly("bound", &BipartiteCount::bound)
        .def_readonly("attains_bound", &BipartiteCount::attains_bound);
    m.def("count_complete_bipartite", &count_complete_bipartite);

    py::class_<LineSpanStarReport>(m, "LineSpanStarReport")
        .def_readonly("lines_meet_stars", &LineSpanStarReport::lines_meet_stars)
        .def_readonly("spans_meet_stars", &LineSpanStarReport::spans_meet_stars)
        .def_readonly("star_partition_ok", &LineSpanStarReport::star_partition_ok)
        .def_readonly("violations", &LineSpanStarReport::violations)
        .def("all_ok", &LineSpanStarReport::all_ok);
    m.def("verify_line_span_star_meets", &verify_line_span_star_meets);

    m.def("verify_gq_ovoid", &verify_gq_ovoid);

    py::class_<OvoidSearchResult>(m, "OvoidSearchResult")
        .def_readonly("count", &OvoidSearchResult::count)
        .def_readonly("first", &OvoidSearchResult::first)
        .def_readonly("all", &OvoidSearchResult::all)
        .def_readonly("nodes", &OvoidSearchResult::nodes)
        .def_readonly("budget_exhausted", &OvoidSearchResult::budget_exhausted);
    m.def(
        "search_gq_ovoids",
        [](const GQView& G, const std::string& mode, int jobs, long long budget) {
            return search_gq_ovoids(G, mode_from_string(mode), jobs, budget);
        },
        py::arg("gq"), py::arg("mode") = "enumerate", py::arg("jobs") = 1,
        py::arg("node_budget") = -1, py::call_guard<py::gil_scoped_release>());

    py::class_<OvoidPG>(m, "OvoidPG")
        .def_readonly("point_ids", &OvoidPG::point_ids)
        .def_property_readonly("kind", [](const OvoidPG& O) {
            return O.kind == OvoidKind::elliptic     ? "elliptic"
                   : O.kind == OvoidKind::suzuki_tits ? "suzuki_tits"
                                                      : "custom";
        });
    m.def("build_wq", &build_wq, py::arg("pg"));
    m.def("elliptic_quadric", &elliptic_quadric, py::arg("pg"));
    m.def("suzuki_tits", &suzuki_tits, py::arg("pg"));

    py::class_<OvoidReport>(m, "OvoidReport")
        .def_readonly("ok", &OvoidReport::ok)
        .def_readonly("tangent_planes", &OvoidReport::tangent_planes)
        .def_readonly("secant_planes", &OvoidReport::secant_planes)
        .def_readonly("tangent_lines", &OvoidReport::tangent_lines)
        .def_readonly("line_sections_ok", &OvoidReport::line_sections_ok)
        .def_readonly("unique_tangent_per_point", &OvoidReport::unique_tangent_per_point)
        .def_readonly("dual_ovoid_ok", &OvoidReport::dual_ovoid_ok)
        .def_readonly("witness", &OvoidReport::witness);
    m.def("verify_pg_ovoid", &verify_pg_ovoid);
    m.def("build_inversive_from_ovoid", &build_inversive_from_ovoid);
    m.def("build_tangent_line_gq", &build_tangent_line_gq);
    m.def("pg_hyperplane_design", &pg_hyperplane_design, py::arg("n"), py::arg("pg"));

    py::class_<InversivePlane>(m, "InversivePlane")
        .def_property_readonly("q", &InversivePlane::q)
        .def_property_readonly("num_points", &InversivePlane::num_points)
        .def_property_readonly("num_circles", &InversivePlane::num_circles)
        .def("structure", &InversivePlane::structure)
        .def("params", &InversivePlane::params)
        .def("circles_through", &InversivePlane::circles_through)
        .def("circle_through", &InversivePlane::circle_through);
    m.def("verify_inversive", [](const IncidenceStructure& S) {
        return verify_inversive(S);
    });

    py::class_<Pencil>(m, "Pencil")
        .def_readonly("carrier", &Pencil::carrier)
        .def_readonly("circles", &Pencil::circles);
    m.def("parallel_classes", &parallel_classes);

    py::class_<ProjectiveClosure>(m, "ProjectiveClosure")
        .def_readonly("affine", &ProjectiveClosure::affine)
        .def_readonly("plane", &ProjectiveClosure::plane)
        .def_readonly("order", &ProjectiveClosure::order)
        .def_readonly("classes", &ProjectiveClosure::classes)
        .def_readonly("infinity_points", &ProjectiveClosure::infinity_points)
        .def_readonly("line_at_infinity", &ProjectiveClosure::line_at_infinity)
        .def_readonly("extended_line", &ProjectiveClosure::extended_line);
    m.def("projective_closure", &projective_closure);

    m.def("pencils", &pencils);
    m.def("tangent_in_pencil", &tangent_in_pencil);
    m.def("common_tangent_circles", &common_tangent_circles);
    m.def("nucleus", &nucleus);

    py::class_<CanonicalForm>(m, "CanonicalForm")
        .def_readonly("point_labels", &CanonicalForm::point_labels)
        .def_readonly("block_labels", &CanonicalForm::block_labels)
        .def("hex", &CanonicalForm::hex)
        .def("__eq__", [](const CanonicalForm& a, const CanonicalForm& b) {
            return a == b;
        });
    m.def("canonical_form", &canonical_form, py::arg("structure"),
          py::arg("node_budget") = -1, py::call_guard<py::gil_scoped_release>());

    py::class_<IsomorphismResult>(m, "IsomorphismResult")
        .def_readonly("isomorphic", &IsomorphismResult::isomorphic)
        .def_readonly("point_map", &IsomorphismResult::point_map)
        .def_readonly("block_map", &IsomorphismResult::block_map)
        .def("__bool__", [](const IsomorphismResult& r) { return r.isomorphic; });
    m.def("isomorphic", &isomorphic, py::arg("a"), py::arg("b"),
          py::arg("node_budget") = -1, py::call_guard<py::gil_scoped_release>());

    py::class_<PipelineReport>(m, "PipelineReport")
        .def_readonly("q", &PipelineReport::q)
        .def_readonly("valid_inversive", &PipelineReport::valid_inversive)
        .def_readonly("even_order", &PipelineReport::even_order)
        .def_readonly("is_gq", &PipelineReport::is_gq)
        .def_readonly("is_regular", &PipelineReport::is_regular)
        .def_readonly("k_count", &PipelineReport::k_count)
        .def_readonly("k_bound", &PipelineReport::k_bound)
        .def_readonly("k_count_attains_bound", &PipelineReport::k_count_attains_bound)
        .def_readonly("stars_params", &PipelineReport::stars_params)
        .def_readonly("stars_design_ok", &PipelineReport::stars_design_ok)
        .def_readonly("dw_hypothesis", &PipelineReport::dw_hypothesis)
        .def_readonly("polarity_ok", &PipelineReport::polarity_ok)
        .def_readonly("roundtrip_ok", &PipelineReport::roundtrip_ok)
        .def_readonly("iso_checked", &PipelineReport::iso_checked)
        .def_readonly("iso_to_canonical_wq", &PipelineReport::iso_to_canonical_wq)
        .def_readonly("iso_budget_exhausted", &PipelineReport::iso_budget_exhausted)
        .def_readonly("failures", &PipelineReport::failures)
        .def("all_ok", &PipelineReport::all_ok);
    m.def("dembowski_pipeline", &dembowski_pipeline, py::arg("structure"),
          py::arg("check_iso") = true, py::arg("iso_budget") = -1,
          py::call_guard<py::gil_scoped_release>());
    m.def("format_report", &format_report);
    m.def("stars_design", &stars_design);
    m.def("verify_star_polarity", &verify_star_polarity);

    py::class_<IncFile>(m, "IncFile")
        .def_readonly("structure", &IncFile::structure)
        .def_readonly("metadata", &IncFile::metadata);
    m.def("parse_inc", &parse_inc);
    m.def("read_inc_file", &read_inc_file);
    m.def("write_inc", &write_inc, py::arg("structure"),
          py::arg("metadata") = std::map<std::string, std::string>{});
    m.def("write_inc_file", &write_inc_file, py::arg("path"), py::arg("structure"),
          py::arg("metadata") = std::map<std::string, std::string>{});
}
