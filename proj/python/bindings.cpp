// Python bindings: parsing, certification, exact expansion and the empirical comparison.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "lclt/errors.hpp"
#include "lclt/examples.hpp"
#include "lclt/gfparse.hpp"
#include "lclt/oracle.hpp"
#include "lclt/report.hpp"
#include "lclt/smoothacsv.hpp"

namespace py = pybind11;
using namespace lclt;

namespace {

PyObject* lcl_error = nullptr;

Rational precision_of(const std::string& text) {
  Rational p = parse_rational(text);
  if (sgn(p) <= 0) throw Error(ErrorCode::InvalidArgument, "precision must be positive");
  return p;
}

py::tuple fraction_parts(const Rational& q) { return py::make_tuple(q.get_num().get_str(), q.get_den().get_str()); }

// Certificate together with the generating function it was built from.
struct Certified {
  RationalGF gf;
  LCLTCertificate cert;
};

}  // namespace

PYBIND11_MODULE(_lclt, m) {
  m.doc() = "Certified local central limit theorems for rational generating functions";

  lcl_error = PyErr_NewException("lclt._lclt.LclError", PyExc_ValueError, nullptr);
  m.attr("LclError") = py::handle(lcl_error);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const SyntaxError& e) {
      py::tuple args = py::make_tuple(std::string(error_code_name(e.code())), e.what(), e.position());
      PyErr_SetObject(lcl_error, args.ptr());
    } catch (const Error& e) {
      py::tuple args = py::make_tuple(std::string(error_code_name(e.code())), e.what(), py::none());
      PyErr_SetObject(lcl_error, args.ptr());
    }
  });

  py::class_<RationalGF>(m, "GF")
      .def_static("parse", &parse_gf, py::arg("expression"))
      .def_static(
          "example",
          [](const std::string& family, long d, long l, std::vector<long> omega, std::vector<long> lambda, bool set_z1) {
            ExampleSpec spec;
            spec.family = family;
            spec.d = d;
            spec.l = l;
            spec.omega = std::move(omega);
            spec.lambda = std::move(lambda);
            spec.set_z1 = set_z1;
            return build_example(spec);
          },
          py::arg("family"), py::arg("d") = 1, py::arg("l") = 2, py::arg("omega") = std::vector<long>{},
          py::arg("lambda_") = std::vector<long>{}, py::arg("set_z1") = true)
      .def_property_readonly("numerator", [](const RationalGF& g) { return g.G.to_string(); })
      .def_property_readonly("denominator", [](const RationalGF& g) { return g.H.to_string(); })
      .def_property_readonly("tracked", [](const RationalGF& g) { return g.tracked; })
      .def_property_readonly("is_linear_family", [](const RationalGF& g) { return g.linear_family.has_value(); })
      .def_property(
          "combinatorial", [](const RationalGF& g) { return g.combinatorial; },
          [](RationalGF& g, bool v) {
            g.combinatorial = v;
            g.combinatorial_inferred = false;
          })
      .def("__str__", &RationalGF::to_string)
      .def("__repr__", [](const RationalGF& g) { return "GF('" + g.to_string() + "')"; });

  py::class_<Certified>(m, "Certificate")
      .def_property_readonly("verdict", [](const Certified& c) { return to_string(c.cert.verdict); })
      .def_property_readonly("d", [](const Certified& c) { return c.cert.d(); })
      .def("json", [](const Certified& c) { return certificate_json(c.gf, c.cert, lu_report(c.gf, c.cert)).dump(); })
      .def("summary", [](const Certified& c) { return certificate_summary(c.gf, c.cert); })
      .def("amplitude",
           [](const Certified& c, long n) {
             LogValue a = amplitude(c.cert, n);
             return py::make_tuple(a.sign, a.log_abs, a.rel_error);
           },
           py::arg("n"))
      .def("density",
           [](const Certified& c, const std::vector<long>& s, long n) {
             LogValue v = density_at(c.cert, s, n);
             return py::make_tuple(v.sign, v.log_abs, v.rel_error);
           },
           py::arg("s"), py::arg("n"));

  m.def(
      "certify",
      [](const RationalGF& gf, const std::string& precision) {
        return Certified{gf, assemble_certificate(gf, precision_of(precision))};
      },
      py::arg("gf"), py::arg("precision") = "1e-30");

  py::class_<CoefficientTensor>(m, "Expansion")
      .def_property_readonly("N", &CoefficientTensor::N)
      .def_property_readonly("variables", &CoefficientTensor::variables)
      .def("bounds", &CoefficientTensor::bounds, py::arg("n"))
      .def("coefficient", [](const CoefficientTensor& t, long n,
                             const std::vector<long>& s) { return fraction_parts(t.coefficient(n, s)); },
           py::arg("n"), py::arg("s"))
      .def("slice_total", [](const CoefficientTensor& t, long n) { return fraction_parts(t.slice_total(n)); },
           py::arg("n"))
      .def("slice",
           [](const CoefficientTensor& t, long n) {
             py::list out;
             for (std::size_t i = 0; i < t.slice_size(n); ++i) {
               Rational c = t.coefficient_at(n, i);
               if (sgn(c) != 0) out.append(py::make_tuple(t.index_of(n, i), fraction_parts(c)));
             }
             return out;
           },
           py::arg("n"))
      .def("stats",
           [](const CoefficientTensor& t, long n) {
             EmpiricalStats s = empirical_stats(t, n);
             py::dict out;
             out["peak"] = s.peak_index;
             out["tie_count"] = s.tie_count;
             out["mean"] = s.mean;
             out["covariance"] = s.covariance;
             return out;
           },
           py::arg("n"))
      .def("gap",
           [](const CoefficientTensor& t, const Certified& c, long n) {
             GapValue g = lclt_gap(t, c.cert, n);
             return py::make_tuple(g.value, g.rounding_bound, g.argmax);
           },
           py::arg("certificate"), py::arg("n"))
      .def("write_csv", &emit_expansion, py::arg("path"))
      .def("write_plot_data",
           [](const CoefficientTensor& t, const Certified* c, long n, const std::string& path) {
             emit_plot_data(t, c ? &c->cert : nullptr, n, path);
           },
           py::arg("certificate"), py::arg("n"), py::arg("path"));

  m.def("expand", &expand, py::arg("gf"), py::arg("N"));
  m.def("example_families", &example_families);
  m.def("list_examples", &list_examples);
}
