#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "flagwitt/parse.hpp"
#include "flagwitt/report.hpp"
#include "flagwitt/selfcheck.hpp"

namespace py = pybind11;
using namespace flagwitt;

namespace {

std::shared_ptr<DynkinDiagram> diagram_from_spec(const std::string& spec) {
  return std::make_shared<DynkinDiagram>(parse_diagram_spec(spec));
}

std::string verdict_status(const VanishingVerdict& v) {
  return v.vanishes() ? "vanishes" : "inconclusive";
}

py::object verdict_rule(const VanishingVerdict& v) {
  if (!v.rule) return py::none();
  if (std::holds_alternative<MainTheoremRule>(*v.rule))
    return py::str("main_theorem");
  return py::str("grassmannian_odd_odd");
}

py::object verdict_witness(const VanishingVerdict& v) {
  if (v.rule)
    if (const auto* mt = std::get_if<MainTheoremRule>(&*v.rule))
      return py::int_(mt->witness);
  return py::none();
}

}  // namespace

PYBIND11_MODULE(flagwitt, m) {
  m.doc() =
      "Witt-group vanishing for split projective homogeneous varieties, "
      "decided from Dynkin-diagram combinatorics";

  py::register_exception<Error>(m, "FlagwittError", PyExc_ValueError);

  py::class_<DynkinDiagram, std::shared_ptr<DynkinDiagram>>(m, "Diagram")
      .def(py::init(&diagram_from_spec), py::arg("spec"),
           "Build a diagram from a spec string such as 'D4' or 'A3xB2'")
      .def_property_readonly("rank", &DynkinDiagram::rank)
      .def_property_readonly("name", &DynkinDiagram::name)
      .def("cartan_matrix", [](const DynkinDiagram& d) { return cartan_matrix(d); })
      .def("adjacent", &DynkinDiagram::adjacent, py::arg("i"), py::arg("j"))
      .def("orthogonal_to_set", &DynkinDiagram::orthogonal_to_set,
           py::arg("alpha"), py::arg("theta"))
      .def("edges", &DynkinDiagram::edges)
      .def("__repr__",
           [](const DynkinDiagram& d) { return "Diagram('" + d.name() + "')"; });

  py::class_<VanishingVerdict>(m, "Verdict")
      .def_property_readonly("status", &verdict_status)
      .def_property_readonly("rule", &verdict_rule)
      .def_property_readonly("witness", &verdict_witness)
      .def_property_readonly("vanishes", &VanishingVerdict::vanishes)
      .def_property_readonly("theta_prime",
                             [](const VanishingVerdict& v) -> py::object {
                               if (!v.reduction) return py::none();
                               return py::cast(v.reduction->theta_prime);
                             })
      .def_property_readonly_static(
          "caveat", [](py::object) { return VanishingVerdict::caveat; })
      .def("__repr__", [](const VanishingVerdict& v) {
        return "Verdict(" + verdict_status(v) + ")";
      });

  m.def(
      "classify",
      [](DiagramPtr d, const VertexSet& theta, std::optional<VertexSet> lambda,
         std::optional<std::vector<std::int64_t>> bundle) {
        ParabolicSubset p = make_parabolic(d, theta);
        if (lambda && bundle)
          throw Error("pass either lambda or bundle, not both");
        LineBundleClass l = bundle
                                ? line_bundle(p, Weight{d, *bundle})
                                : lambda_to_class(p, LambdaSet{lambda.value_or(VertexSet{})});
        return classify(l);
      },
      py::arg("diagram"), py::arg("theta") = VertexSet{},
      py::arg("lambda_") = py::none(), py::arg("bundle") = py::none());

  m.def("picard_basis", [](DiagramPtr d, const VertexSet& theta) {
    return picard_basis(make_parabolic(d, theta));
  });

  m.def("lambda_of", [](DiagramPtr d, const VertexSet& theta,
                        const std::vector<std::int64_t>& bundle) {
    ParabolicSubset p = make_parabolic(d, theta);
    return lambda_of(line_bundle(p, Weight{d, bundle})).lambda;
  });

  m.def("criterion_witnesses",
        [](DiagramPtr d, const VertexSet& theta, const VertexSet& lambda) {
          return criterion_witnesses(*d, theta, lambda);
        });

  m.def("enumerate_decorations",
        [](DiagramPtr d, int rank_limit) {
          const ClassificationTable t = enumerate_decorations(d, rank_limit);
          py::list rows;
          for (const auto& row : t.rows)
            rows.append(py::make_tuple(row.theta, row.lambda, row.verdict));
          return rows;
        },
        py::arg("diagram"), py::arg("rank_limit") = kDefaultRankLimit);

  m.def("render_dot",
        [](DiagramPtr d, const VertexSet& theta, const VertexSet& lambda) {
          return render_dot(*d, theta, lambda);
        },
        py::arg("diagram"), py::arg("theta") = VertexSet{},
        py::arg("lambda_") = VertexSet{});

  m.def("selfcheck", &run_selfcheck);
}
