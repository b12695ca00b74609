// Python bindings for the core operations: free-group and braid arithmetic,
// the surface representations with their certificates, and the homology
// tables, thresholds and oracle.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "braidhom/braid.hpp"
#include "braidhom/corpus.hpp"
#include "braidhom/homology.hpp"
#include "braidhom/oracle.hpp"
#include "braidhom/surface_reps.hpp"

namespace py = pybind11;
using namespace braidhom;

namespace {

std::vector<std::vector<long long>> matrix_rows(const IntMatrix& m) {
  std::vector<std::vector<long long>> rows(m.rows(), std::vector<long long>(m.cols()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) rows[i][j] = m.at(i, j);
  return rows;
}

py::dict entry_dict(const VanishEntry& e) {
  py::dict d;
  d["generator"] = e.generator.label();
  d["degree"] = e.generator.degree();
  d["weight"] = e.generator.weight();
  d["nonzero_in_source"] = e.nonzero_in_source;
  d["killed_by"] = e.killed_by;
  d["status"] = e.status;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "braid groups, surface representations, and their homology";
  m.attr("__version__") = "0.1.0";

  py::class_<GroupWord>(m, "GroupWord")
      .def(py::init<int, std::vector<int>>(), py::arg("rank"), py::arg("letters"))
      .def_static("parse", &GroupWord::parse)
      .def_property_readonly("rank", &GroupWord::rank)
      .def_property_readonly("letters",
                             [](const GroupWord& w) { return w.letters(); })
      .def("is_identity", &GroupWord::is_identity)
      .def("inverse", &GroupWord::inverse)
      .def("exponent_vector", &GroupWord::exponent_vector)
      .def("__mul__", &GroupWord::operator*)
      .def("__eq__", [](const GroupWord& a, const GroupWord& b) { return a == b; })
      .def("__len__", &GroupWord::length)
      .def("__str__", &GroupWord::str)
      .def("__repr__",
           [](const GroupWord& w) { return "GroupWord(rank=" + std::to_string(w.rank()) +
                                            ", '" + w.str() + "')"; });

  py::class_<FreeMap>(m, "FreeMap")
      .def(py::init<int, int, std::vector<GroupWord>>(), py::arg("source_rank"),
           py::arg("target_rank"), py::arg("images"))
      .def_static("identity", &FreeMap::identity)
      .def_static("automorphism", &FreeMap::automorphism)
      .def_property_readonly("source_rank", &FreeMap::source_rank)
      .def_property_readonly("target_rank", &FreeMap::target_rank)
      .def("image", &FreeMap::image)
      .def("apply", &FreeMap::apply)
      .def("has_inverse", &FreeMap::has_inverse)
      .def("inverse", &FreeMap::inverse)
      .def("verifies_inverse", &FreeMap::verifies_inverse)
      .def("is_identity", &FreeMap::is_identity)
      .def("__eq__", [](const FreeMap& a, const FreeMap& b) { return a == b; });
  m.def("compose", &compose, "composition f after g");
  m.def("projection_map", &projection_map);
  m.def("inclusion_map", &inclusion_map);

  py::class_<BraidWord>(m, "BraidWord")
      .def(py::init<int, std::vector<int>>(), py::arg("strands"),
           py::arg("letters") = std::vector<int>{})
      .def_static("parse", &BraidWord::parse)
      .def_property_readonly("strands", &BraidWord::strands)
      .def_property_readonly("letters", [](const BraidWord& w) { return w.letters(); })
      .def("inverse", &BraidWord::inverse)
      .def("__mul__", &BraidWord::operator*)
      .def("__eq__", [](const BraidWord& a, const BraidWord& b) { return a == b; })
      .def("__len__", &BraidWord::length)
      .def("__str__", &BraidWord::str)
      .def("__repr__", [](const BraidWord& w) {
        return "BraidWord(strands=" + std::to_string(w.strands()) + ", '" + w.str() + "')";
      });

  m.def("braid_cancel", &braid_cancel);
  m.def("permutation_of", [](const BraidWord& w) {
    Permutation p = permutation_of(w);
    std::vector<int> images;
    for (int i = 1; i <= p.degree(); ++i) images.push_back(p.apply(i));
    return images;
  });
  m.def("exponent_sum", &exponent_sum);
  m.def("artin", &artin);
  m.def("is_trivial", &is_trivial);
  m.def("braids_equal", &braids_equal);

  py::class_<RibbonBraid>(m, "RibbonBraid")
      .def(py::init<std::vector<long long>, BraidWord>(), py::arg("twists"), py::arg("braid"))
      .def_readonly("twists", &RibbonBraid::twists)
      .def_readonly("braid", &RibbonBraid::braid)
      .def_property_readonly("strands", &RibbonBraid::strands);
  m.def("ribbon_multiply", &ribbon_multiply);
  m.def("ribbon_invert", &ribbon_invert);
  m.def("ribbon_equal", &ribbon_equal);
  m.def("gamma", &braidhom::gamma);
  m.def("is_pure", &braidhom::is_pure);
  m.def("cable", &cable, py::arg("outer"), py::arg("inner"));
  m.def("cable_ribbon", &cable_ribbon, py::arg("outer"), py::arg("inner"));

  py::class_<Certificate>(m, "Certificate")
      .def_readonly("kind", &Certificate::kind)
      .def_readonly("subject", &Certificate::subject)
      .def_readonly("verdict", &Certificate::verdict)
      .def_readonly("witness", &Certificate::witness)
      .def("__repr__", [](const Certificate& c) {
        return "Certificate(" + c.kind + ", verdict=" + (c.verdict ? "True" : "False") + ")";
      });

  py::class_<SurfaceRep>(m, "SurfaceRep")
      .def_static("artin", &SurfaceRep::artin_rep)
      .def_static("mirror", &SurfaceRep::mirror_rep)
      .def_static("szepietowski", &SurfaceRep::szepietowski_rep)
      .def_static("operadic", &SurfaceRep::operadic_rep)
      .def_static("symplectic", &SurfaceRep::symplectic_rep)
      .def_property_readonly("name", &SurfaceRep::name)
      .def_property_readonly("strands", &SurfaceRep::strands)
      .def_property_readonly("target_rank", &SurfaceRep::target_rank)
      .def_property_readonly("is_matrix_rep",
                             [](const SurfaceRep& r) { return r.kind() == SurfaceRep::Kind::matrices; })
      .def("generator_labels", &SurfaceRep::generator_labels)
      .def("eval_words", &SurfaceRep::eval_words)
      .def("eval_matrix", [](const SurfaceRep& r, const BraidWord& w) {
        return matrix_rows(r.eval_matrix(w));
      })
      .def("eval_is_identity", &SurfaceRep::eval_is_identity);
  m.def("make_rep", &make_rep);

  m.def("check_braid_relations", &check_braid_relations);
  m.def("check_detection_diagram", &check_detection_diagram);
  m.def("check_squares_compatibility", &check_squares_compatibility);
  m.def("check_disjoint_alphabets", &check_disjoint_alphabets);
  m.def("faithfulness_sample", &faithfulness_sample);
  m.def("check_J_equivariance", &check_J_equivariance);
  m.def("check_purity_violation", &check_purity_violation);
  m.def("h1_action",
        [](const SurfaceRep& r, const BraidWord& w) { return matrix_rows(h1_action(r, w)); });
  m.def("h1_det", &h1_det);

  py::class_<GeneratorSpec>(m, "GeneratorSpec")
      .def_static("x", &GeneratorSpec::x)
      .def_static("lam", &GeneratorSpec::lambda)
      .def_static("y", &GeneratorSpec::y)
      .def_static("beta_y", &GeneratorSpec::beta_y)
      .def_property_readonly("degree", &GeneratorSpec::degree)
      .def_property_readonly("weight", &GeneratorSpec::weight)
      .def_property_readonly("label", &GeneratorSpec::label)
      .def("__repr__", [](const GeneratorSpec& g) { return g.label(); });
  m.def("q_on_generator", &q_on_generator);

  m.def("f2_dims", [](int mm, int max_deg) { return f2_dims(mm, max_deg).dims; });
  m.def("fp_dims", [](int mm, int p, int max_deg) { return fp_dims(mm, p, max_deg).dims; });
  m.def("rational_dims", [](int mm, int max_deg) { return rational_dims(mm, max_deg).dims; });
  m.def("homology_dims", [](int mm, int p, int max_deg) { return homology_dims(mm, p, max_deg).dims; });
  m.def("poincare_series",
        [](int mm, int p, int max_deg) { return homology_dims(mm, p, max_deg).poincare(); });
  m.def("f2_basis", [](int mm, int max_deg) {
    std::vector<std::string> out;
    for (const Monomial& mono : f2_basis(mm, max_deg)) out.push_back(mono.str());
    return out;
  });
  m.def("fp_basis", [](int mm, int p, int max_deg) {
    std::vector<std::string> out;
    for (const Monomial& mono : fp_basis(mm, p, max_deg)) out.push_back(mono.str());
    return out;
  });
  m.def("oracle_homology", [](int mm, int p, int max_deg) {
    return oracle_homology(mm, p, max_deg).dims;
  });

  m.def("stable_range", &stable_range);
  m.def("nonorientable_stable_range", &nonorientable_stable_range);
  m.def("stable_kill_threshold", &stable_kill_threshold);
  m.def("operadic_threshold", &operadic_threshold);
  m.def("geometric_threshold", &geometric_threshold);
  m.def("nonvanishing_in_source", &nonvanishing_in_source);

  m.def("vanishing_report", [](const std::string& embedding, int p, int g, const std::string& view) {
    VanishingReport report = vanishing_report(
        parse_embedding(embedding), p, g,
        view == "paper" ? ReportView::paper : ReportView::combined);
    py::dict d;
    d["embedding"] = report.embedding;
    d["view"] = report.view;
    d["p"] = report.p;
    d["g"] = report.g;
    d["source_strands"] = report.source_strands;
    py::list entries;
    for (const VanishEntry& e : report.entries) entries.append(entry_dict(e));
    d["entries"] = entries;
    d["undetermined"] = report.undetermined();
    return d;
  }, py::arg("embedding"), py::arg("p"), py::arg("g"), py::arg("view") = "combined");

  m.def("h1_table", [](const std::string& family, int g, int b, int coeff) {
    H1Entry e = h1_table(family, g, b, coeff);
    py::dict d;
    d["family"] = e.family;
    d["g"] = e.genus;
    d["b"] = e.boundaries;
    d["coeff"] = e.coefficient_prime;
    d["value"] = e.value;
    return d;
  }, py::arg("family"), py::arg("g"), py::arg("b") = 1, py::arg("coeff") = 0);

  m.def("theorem_expectation", [](const std::string& embedding, int field_p, int degree, int g) {
    return expectation_name(theorem_expectation(embedding, field_p, degree, g));
  });

  m.def("exhaustive_words", &exhaustive_words);
  m.def("random_words", &random_words, py::arg("strands"), py::arg("count"), py::arg("length"),
        py::arg("seed"), py::arg("nonzero_exponent_sum") = false);
}
