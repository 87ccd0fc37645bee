// Python bindings. Values cross the boundary as strings and JSON documents,
// so Python code never holds raw ring elements.

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "splitring/finite_ring.hpp"
#include "splitring/job.hpp"
#include "splitring/realization.hpp"
#include "splitring/relations.hpp"
#include "splitring/symmetry.hpp"

namespace py = pybind11;
using namespace splitring;

namespace {

py::object to_python(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

Poly make_poly(const std::string& ring, const std::string& coeffs, const std::string& convention,
               std::optional<int> n) {
  JobSpec job;
  job.ring = ring;
  job.coeffs = coeffs;
  job.n = n;
  if (convention == "a")
    job.convention = CoeffConvention::A;
  else if (convention == "b")
    job.convention = CoeffConvention::B;
  else if (convention == "full")
    job.convention = CoeffConvention::Full;
  else
    throw Error(ErrorKind::Parse, "convention must be 'a', 'b' or 'full'");
  return build_job_poly(job);
}

std::vector<std::vector<std::string>> matrix_rows(const SqMatrix& m) {
  std::vector<std::vector<std::string>> out(static_cast<std::size_t>(m.size()));
  for (int i = 0; i < m.size(); ++i)
    for (int j = 0; j < m.size(); ++j) out[static_cast<std::size_t>(i)].push_back(m(i, j).str());
  return out;
}

}  // namespace

PYBIND11_MODULE(_splitring, m) {
  m.doc() = "Universal splitting rings, their matrix realizations and automorphisms";

  static py::exception<Error> error(m, "SplitringError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::handle(error.ptr())(e.what());
      exc.attr("kind") = to_string(e.kind());
      PyErr_SetObject(error.ptr(), exc.ptr());
    }
  });

  m.def("default_cap", &default_cap);

  py::class_<Poly>(m, "Poly")
      .def(py::init(&make_poly), py::arg("ring") = "Z", py::arg("coeffs"), py::arg("convention") = "b",
           py::arg("n") = py::none())
      .def_property_readonly("degree", &Poly::degree)
      .def_property_readonly("ring", [](const Poly& f) { return f.ring()->spec(); })
      .def_property_readonly("coefficients",
                             [](const Poly& f) {
                               std::vector<std::string> out;
                               for (const auto& c : f.coeffs()) out.push_back(c.str());
                               return out;
                             })
      .def("__str__", [](const Poly& f) { return f.str(); })
      .def("__repr__", [](const Poly& f) { return "Poly(" + f.str() + " over " + f.ring()->spec() + ")"; });

  m.def(
      "relations",
      [](const Poly& f, bool recursive) {
        std::vector<std::string> out;
        for (const auto& p : recursive ? build_relations_recursive(f) : build_relations_closed(f))
          out.push_back(p.grouped_str());
        return out;
      },
      py::arg("f"), py::arg("recursive") = false, "Generators f_1..f_n as text.");
  m.def("relations_agree", [](const Poly& f) { return build_relations_recursive(f) == build_relations_closed(f); });
  m.def("sigma_expansion_holds", [](const Poly& f) { return verify_sigma_expansion(f).holds; });

  py::class_<SqMatrix>(m, "Matrix")
      .def_property_readonly("size", &SqMatrix::size)
      .def_property_readonly("rows", &matrix_rows)
      .def("to_json", [](const SqMatrix& a) { return to_python(a.to_json()); })
      .def("__eq__", [](const SqMatrix& a, const SqMatrix& b) { return a == b; })
      .def("__str__", &SqMatrix::pretty);

  m.def(
      "build_realization", [](const Poly& f, std::optional<int> cap) { return build_realization(f, cap.value_or(default_cap())); },
      py::arg("f"), py::arg("cap") = py::none());
  m.def(
      "verify_realization",
      [](const Poly& f, std::optional<std::vector<SqMatrix>> matrices, const std::string& checks, std::uint64_t seed) {
        auto a = matrices ? *matrices : build_realization(f);
        return to_python(verify_realization(f, a, parse_checks(checks), nullptr, seed).to_json());
      },
      py::arg("f"), py::arg("matrices") = py::none(), py::arg("checks") = "all", py::arg("seed") = 1,
      "Verification report as a dict.");
  m.def(
      "matrix_from_json",
      [](py::object doc, const Poly& f) {
        std::string text = py::module_::import("json").attr("dumps")(doc).cast<std::string>();
        return matrix_from_json(nlohmann::json::parse(text), f.ring());
      },
      py::arg("doc"), py::arg("f"));

  py::class_<SplitElem>(m, "SplitElem")
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def("__pow__", [](const SplitElem& x, unsigned e) { return x.pow(e); })
      .def("is_zero", &SplitElem::is_zero)
      .def_property_readonly("coords",
                             [](const SplitElem& x) {
                               std::vector<std::string> out;
                               for (const auto& c : x.coords()) out.push_back(c.str());
                               return out;
                             })
      .def("__str__", &SplitElem::str)
      .def("__repr__", [](const SplitElem& x) { return "SplitElem(" + x.str() + ")"; });

  py::class_<SplitRing, std::shared_ptr<SplitRing>>(m, "SplitRing")
      .def(py::init([](const Poly& f, std::optional<int> cap) {
             return std::const_pointer_cast<SplitRing>(SplitRing::create(f, cap.value_or(default_cap())));
           }),
           py::arg("f"), py::arg("cap") = py::none())
      .def_property_readonly("n", &SplitRing::n)
      .def_property_readonly("dim", &SplitRing::dim)
      .def("root", &SplitRing::root)
      .def("one", &SplitRing::one)
      .def("scalar", [](const SplitRing& s, const std::string& c) { return s.scalar(parse_elem(s.base(), c)); })
      .def("universal_factorization_check", &SplitRing::universal_factorization_check)
      .def("gamma_injectivity_check", [](const SplitRing& s) { return s.gamma_injectivity_check(); })
      .def("regular_representation", &SplitRing::regular_representation)
      .def("theta_injectivity", [](const std::shared_ptr<SplitRing>& s) { return theta_injectivity(s); })
      .def(
          "permutation_certificate",
          [](const std::shared_ptr<SplitRing>& s, const std::vector<int>& images) {
            return to_python(is_automorphism_system(permutation_system(s, Perm(images))).to_json());
          },
          py::arg("images"))
      .def(
          "scaling_certificate",
          [](const std::shared_ptr<SplitRing>& s, const std::string& u, int d) {
            return to_python(is_automorphism_system(scaling_system(s, parse_elem(s->base(), u), d)).to_json());
          },
          py::arg("u"), py::arg("d"));

  m.def(
      "central_quotient",
      [](const Poly& f) {
        CentralQuotient q = central_quotient(f.ring(), f);
        Poly g = q.project(f);
        py::dict out;
        out["L_f_size"] = q.ideal.size();
        out["T_f_order"] = q.quotient->table_data().order;
        out["zero_ring"] = q.zero_ring;
        out["T_f_commutative"] = q.quotient->is_commutative();
        out["f"] = g;
        return out;
      },
      py::arg("f"), "Reduce f by the commutator ideal of its coefficients.");
}
