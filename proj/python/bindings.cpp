// Thin bindings. Structured results cross the boundary as JSON text and are
// decoded on the Python side.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "infalg/embedding.hpp"
#include "infalg/io.hpp"
#include "infalg/separoid.hpp"

namespace py = pybind11;
using namespace infalg;

namespace {

GeneratingKind kind_from(const std::string& s) {
  if (s == "full") return GeneratingKind::full;
  if (s == "atoms") return GeneratingKind::atoms;
  if (s == "meet-irreducible") return GeneratingKind::meet_irreducibles;
  throw InvalidArgument("unknown generating kind '" + s + "'");
}

std::size_t domain(const InfoAlgebra& a, const std::string& name) {
  auto x = a.domain_index(name);
  if (x == npos) throw InvalidArgument("unknown domain '" + name + "'");
  return x;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Finite information algebras: axioms, embeddings and conditional independence";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);
  py::register_exception<BoundExceeded>(m, "BoundExceeded", PyExc_OverflowError);

  py::class_<InfoAlgebra>(m, "Algebra")
      .def_property_readonly("size", &InfoAlgebra::size)
      .def_property_readonly("names", &InfoAlgebra::names)
      .def_property_readonly("unit", &InfoAlgebra::unit)
      .def_property_readonly("null", &InfoAlgebra::null)
      .def_property_readonly("domain_names", [](const InfoAlgebra& a) { return a.domains().poset().names(); })
      .def("combine", &InfoAlgebra::combine)
      .def("extract", [](const InfoAlgebra& a, const std::string& x, std::size_t psi) { return a.extract(domain(a, x), psi); })
      .def("leq", &InfoAlgebra::leq)
      .def("index", [](const InfoAlgebra& a, const std::string& name) {
        auto i = a.index_of(name);
        if (i == npos) throw py::key_error(name);
        return i;
      })
      .def("digest", &instance_digest)
      .def("to_json", [](const InfoAlgebra& a) { return instance_to_json(a).dump(); })
      .def("__len__", &InfoAlgebra::size)
      .def("__repr__", [](const InfoAlgebra& a) {
        return "<Algebra size=" + std::to_string(a.size()) + " domains=" + std::to_string(a.domain_count()) + ">";
      });

  m.def("_load_text", [](const std::string& text, std::size_t max_carrier) {
    return instance_from_json(parse_json(text), LoadOptions{max_carrier});
  });
  m.def("_load_file", [](const std::string& path, std::size_t max_carrier) {
    return load_instance(path, LoadOptions{max_carrier});
  });
  m.def("fixture_names", [] {
    std::vector<std::string> out;
    for (const auto& f : bundled_fixtures()) out.push_back(f.name);
    return out;
  });
  m.def("random_instance", &random_instance, py::arg("seed"), py::arg("max_universe") = 5);

  m.def("_verify", [](const InfoAlgebra& a, bool strict_e4) {
    Report r;
    auto axioms = verify_axioms(a, {strict_e4});
    r.merge("axioms", axioms);
    if (axioms.passed()) r.merge("support", support_lemma_check(a));
    return report_to_json(r, false).dump();
  });
  m.def("_embed", [](const InfoAlgebra& a, const std::string& kind) {
    return embedding_to_json(build_embedding(a, make_generating_set(a, kind_from(kind))), false).dump();
  });
  m.def("atoms", [](const InfoAlgebra& a) { return members_of(compute_atoms(a).atoms); });
  m.def("atom_class", [](const InfoAlgebra& a) { return std::string(to_string(compute_atoms(a).classification)); });
  m.def("is_commutative", [](const InfoAlgebra& a) { return is_commutative(a).commutative; });
  m.def("independent", [](const InfoAlgebra& a, const std::string& x, const std::string& y, const std::string& z,
                          const std::string& kind) {
    auto e = build_embedding(a, make_generating_set(a, kind_from(kind)));
    return partition_relation(a, e).contains(domain(a, x), domain(a, y), domain(a, z));
  }, py::arg("algebra"), py::arg("x"), py::arg("y"), py::arg("z"), py::arg("generating") = "atoms");

  m.def("_separoid", [](const std::string& lattice, const std::string& relation) {
    if (relation != "dawid" && relation != "lattice") throw InvalidArgument("unknown relation '" + relation + "'");
    auto l = builtin_lattice(lattice);
    CIRelation r = relation == "dawid" ? dawid_relation(l) : lattice_relation(l);
    Report rep = check_all_axioms(r);
    rep.merge("basic", check_basic(r));
    return report_to_json(rep, false).dump();
  });
}
