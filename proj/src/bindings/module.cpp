#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bergtop/errors.hpp"
#include "bergtop/expint.hpp"
#include "bergtop/figures.hpp"
#include "bergtop/io.hpp"
#include "bergtop/lattice.hpp"
#include "bergtop/moments.hpp"
#include "bergtop/toeplitz.hpp"
#include "bergtop/verify.hpp"

namespace py = pybind11;
using namespace bergtop;

namespace {

MultiIndex as_index(std::pair<int, int> p) { return MultiIndex{p.first, p.second}; }
py::tuple as_tuple(MultiIndex idx) { return py::make_tuple(idx.a1, idx.a2); }

py::dict weight_dict(const toeplitz::WeightResult& w) {
  py::dict d;
  switch (w.status) {
    case toeplitz::WeightStatus::valid: d["status"] = "valid"; break;
    case toeplitz::WeightStatus::no_target: d["status"] = "no_target"; break;
    case toeplitz::WeightStatus::undefined: d["status"] = "undefined"; break;
  }
  d["value"] = w.value;
  return d;
}

py::dict vector_dict(const toeplitz::CoefficientVector& v) {
  py::dict d;
  for (const auto& [idx, c] : v) d[as_tuple(idx)] = c;
  return d;
}

toeplitz::CoefficientVector vector_from(const py::dict& d) {
  toeplitz::CoefficientVector v;
  for (const auto& [key, value] : d) {
    const auto idx = key.cast<std::pair<int, int>>();
    v.add(as_index(idx), value.cast<std::complex<double>>());
  }
  return v;
}

py::dict moment_dict(const moments::MomentValue& v) {
  py::dict d;
  d["finite"] = v.finite;
  d["total"] = v.finite ? py::object(py::float_(v.total)) : py::none();
  d["x_part"] = v.x_finite ? py::object(py::float_(v.x_part)) : py::none();
  d["y_part"] = v.y_finite ? py::object(py::float_(v.y_part)) : py::none();
  d["z_part"] = v.z_part;
  d["abs_error_bound"] = v.finite ? py::object(py::float_(v.abs_error_bound)) : py::none();
  py::dict exact;
  exact["scale"] = "4*pi^2";
  exact["x_part"] = v.exact.x_rational_known
                        ? py::object(py::str(io::rational_string(v.exact.x_rational)))
                        : py::none();
  exact["y_part"] = v.exact.y_finite
                        ? py::object(py::str(io::rational_string(v.exact.y_rational)))
                        : py::none();
  py::dict z;
  z["rational"] = io::rational_string(v.exact.z_rational);
  z["e_power"] = v.exact.z_e_power;
  z["two_power"] = v.exact.z_two_power;
  exact["z_part"] = z;
  d["exact_forms"] = exact;
  return d;
}

moments::Region region_from(const std::string& name) {
  if (name == "x" || name == "X") return moments::Region::X;
  if (name == "y" || name == "Y") return moments::Region::Y;
  if (name == "z" || name == "Z") return moments::Region::Z;
  throw std::invalid_argument("region must be one of x, y, z");
}

py::dict report_dict(const verify::PropositionReport& rep) {
  py::dict d;
  d["m"] = rep.m;
  d["window"] = rep.window;
  d["nonzero_witness"] =
      rep.nonzero_witness ? py::object(as_tuple(*rep.nonzero_witness)) : py::none();
  d["nonzero_weight"] = rep.nonzero_weight;
  py::list witnesses;
  for (const MultiIndex w : rep.rank_witnesses) witnesses.append(as_tuple(w));
  d["rank_witnesses"] = witnesses;
  d["norm_bound"] = rep.norm_bound;
  d["bound_constant"] = rep.bound_constant;
  d["degree_lattice"] = rep.degree_lattice;
  d["degree_floor_m_over_4"] = rep.degree_floor_m_over_4;
  d["degrees_agree"] = rep.degrees_agree;
  py::dict checks;
  checks["nonzero"] = rep.checks.nonzero;
  checks["infinite_rank"] = rep.checks.infinite_rank;
  checks["bounded"] = rep.checks.bounded;
  checks["degree"] = rep.checks.degree;
  d["checks"] = checks;
  d["ok"] = rep.checks.all();
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
  mod.doc() =
      "weighted-shift Toeplitz operators on Bergman spaces of a family of "
      "unbounded Reinhardt domains in C^2";
  mod.attr("__version__") = BERGTOP_VERSION;

  py::register_exception<BudgetExceeded>(mod, "BudgetExceeded", PyExc_RuntimeError);
  py::register_exception<WindowTooSmall>(mod, "WindowTooSmall", PyExc_ValueError);
  py::register_exception<PointOutsideSupportedRegion>(mod, "PointOutsideSupportedRegion",
                                                      PyExc_ValueError);
  py::register_exception<toeplitz::UndefinedWeightError>(mod, "UndefinedWeightError",
                                                         PyExc_RuntimeError);

  py::class_<DomainSpec>(mod, "DomainSpec")
      .def(py::init<int>(), py::arg("m"))
      .def_property_readonly("m", &DomainSpec::m)
      .def_property_readonly("diagonal_count", &DomainSpec::diagonal_count)
      .def_property_readonly("max_offset", &DomainSpec::max_offset)
      .def("__repr__", [](const DomainSpec& s) {
        return "DomainSpec(m=" + std::to_string(s.m()) + ")";
      });

  mod.def(
      "member", [](int m, int a1, int a2) { return lattice::member(DomainSpec(m), {a1, a2}); },
      py::arg("m"), py::arg("a1"), py::arg("a2"),
      "admissibility of the exponent pair (a1, a2)");
  mod.def(
      "diagonal_count", [](int m) { return DomainSpec(m).diagonal_count(); }, py::arg("m"));
  mod.def(
      "shift_stays",
      [](int m, int a1, int a2, int s) {
        return lattice::shift_stays(DomainSpec(m), {a1, a2}, s);
      },
      py::arg("m"), py::arg("a1"), py::arg("a2"), py::arg("s"));
  mod.def(
      "lattice_window",
      [](int m, int n) {
        py::list out;
        for (const MultiIndex idx : lattice::window(DomainSpec(m), n)) out.append(as_tuple(idx));
        return out;
      },
      py::arg("m"), py::arg("n"));
  mod.def(
      "nilpotency_degree",
      [](int m, int step) { return lattice::nilpotency_degree(DomainSpec(m), step); },
      py::arg("m"), py::arg("step") = 2);

  mod.def(
      "mu_z", [](int s, int t) { return moments::mu_z({s, t}); }, py::arg("s"), py::arg("t"));
  mod.def(
      "mu_x",
      [](int s, int t) {
        const auto r = moments::mu_x({s, t});
        return py::make_tuple(r.finite, r.finite ? py::object(py::float_(r.value)) : py::none());
      },
      py::arg("s"), py::arg("t"), "returns (finite, value)");
  mod.def(
      "mu_y",
      [](int m, int s, int t) {
        const auto r = moments::mu_y({s, t}, DomainSpec(m));
        return py::make_tuple(r.finite, r.finite ? py::object(py::float_(r.value)) : py::none());
      },
      py::arg("m"), py::arg("s"), py::arg("t"), "returns (finite, value)");
  mod.def(
      "moment",
      [](int m, int s, int t) { return moment_dict(moments::moment({s, t}, DomainSpec(m))); },
      py::arg("m"), py::arg("s"), py::arg("t"));
  mod.def("expint_en", &expint_en, py::arg("n"), py::arg("x"));
  mod.def(
      "quadrature_oracle",
      [](int m, int s, int t, const std::string& region, double rel_tol, long budget) {
        const auto r =
            moments::quadrature_oracle({s, t}, DomainSpec(m), region_from(region), rel_tol, budget);
        py::dict d;
        d["finite"] = r.finite;
        d["value"] = r.finite ? py::object(py::float_(r.value)) : py::none();
        d["abs_error"] = r.abs_error;
        d["evaluations"] = r.evaluations;
        return d;
      },
      py::arg("m"), py::arg("s"), py::arg("t"), py::arg("region"), py::arg("rel_tol") = 1.0e-10,
      py::arg("budget") = 1000000L);
  mod.def(
      "bound_constant",
      [](int m, int window) { return moments::bound_constant(DomainSpec(m), window); },
      py::arg("m"), py::arg("window"));

  py::class_<toeplitz::Symbol>(mod, "Symbol")
      .def(py::init([](int a, int b, int c, int d) { return toeplitz::Symbol{a, b, c, d}; }),
           py::arg("a"), py::arg("b") = 0, py::arg("c") = 0, py::arg("d") = 0)
      .def_readonly("a", &toeplitz::Symbol::a)
      .def_readonly("b", &toeplitz::Symbol::b)
      .def_readonly("c", &toeplitz::Symbol::c)
      .def_readonly("d", &toeplitz::Symbol::d)
      .def_property_readonly("shift", &toeplitz::Symbol::shift)
      .def_property_readonly("radial_degree", &toeplitz::Symbol::radial_degree)
      .def_static("phi", &toeplitz::Symbol::phi)
      .def("__repr__", [](const toeplitz::Symbol& s) {
        return "Symbol(a=" + std::to_string(s.a) + ", b=" + std::to_string(s.b) +
               ", c=" + std::to_string(s.c) + ", d=" + std::to_string(s.d) + ")";
      });

  py::class_<toeplitz::TruncatedMatrix>(mod, "TruncatedMatrix")
      .def_property_readonly("basis",
                             [](const toeplitz::TruncatedMatrix& m) {
                               py::list out;
                               for (const MultiIndex idx : m.basis) out.append(as_tuple(idx));
                               return out;
                             })
      .def_property_readonly("entries",
                             [](const toeplitz::TruncatedMatrix& m) {
                               py::list out;
                               for (const toeplitz::MatrixEntry& e : m.entries) {
                                 out.append(py::make_tuple(e.row, e.col, e.value));
                               }
                               return out;
                             })
      .def_property_readonly("dim", &toeplitz::TruncatedMatrix::dim)
      .def_property_readonly("nnz", &toeplitz::TruncatedMatrix::nnz);
  mod.def("matrix_power", &toeplitz::matrix_power, py::arg("matrix"), py::arg("k"));
  mod.def("matrix_multiply", &toeplitz::multiply, py::arg("lhs"), py::arg("rhs"));

  py::class_<toeplitz::ShiftOperator>(mod, "ShiftOperator")
      .def(py::init([](int m, toeplitz::Symbol sym) {
             return toeplitz::ShiftOperator(DomainSpec(m), sym);
           }),
           py::arg("m"), py::arg("symbol"))
      .def_property_readonly("symbol", &toeplitz::ShiftOperator::symbol)
      .def_property_readonly("m",
                             [](const toeplitz::ShiftOperator& op) { return op.domain().m(); })
      .def(
          "target",
          [](const toeplitz::ShiftOperator& op, int a1, int a2) -> py::object {
            const auto g = op.target({a1, a2});
            return g ? py::object(as_tuple(*g)) : py::none();
          },
          py::arg("a1"), py::arg("a2"))
      .def(
          "weight",
          [](const toeplitz::ShiftOperator& op, int a1, int a2) {
            return weight_dict(op.weight({a1, a2}));
          },
          py::arg("a1"), py::arg("a2"))
      .def(
          "apply",
          [](const toeplitz::ShiftOperator& op, const py::dict& v) {
            return vector_dict(op.apply(vector_from(v)));
          },
          py::arg("vector"), "vector: dict mapping (a1, a2) to a complex coefficient")
      .def(
          "power_apply",
          [](const toeplitz::ShiftOperator& op, int k, const py::dict& v) {
            return vector_dict(op.power_apply(k, vector_from(v)));
          },
          py::arg("k"), py::arg("vector"))
      .def("truncated_matrix", &toeplitz::ShiftOperator::truncated_matrix, py::arg("n"))
      .def("norm_estimate", &toeplitz::ShiftOperator::norm_estimate, py::arg("n"));

  py::class_<toeplitz::ComposedOperator>(mod, "ComposedOperator")
      .def_readonly("is_zero", &toeplitz::ComposedOperator::is_zero)
      .def("apply", [](const toeplitz::ComposedOperator& op, const py::dict& v) {
        return vector_dict(op.apply(vector_from(v)));
      });
  mod.def("compose", &toeplitz::compose, py::arg("first"), py::arg("second"),
          "composition first o second (second acts first)");

  mod.def(
      "kernel_partial_sum",
      [](int m, std::complex<double> z1, std::complex<double> z2, std::complex<double> w1,
         std::complex<double> w2, int n) {
        return toeplitz::kernel_partial_sum(DomainSpec(m), {z1, z2}, {w1, w2}, n);
      },
      py::arg("m"), py::arg("z1"), py::arg("z2"), py::arg("w1"), py::arg("w2"), py::arg("n"));

  py::class_<verify::ZeroProductCertificate>(mod, "ZeroProductCertificate")
      .def_readonly("u", &verify::ZeroProductCertificate::u)
      .def_readonly("v", &verify::ZeroProductCertificate::v)
      .def_property_readonly("witness_u",
                             [](const verify::ZeroProductCertificate& c) {
                               return as_tuple(c.witness_u);
                             })
      .def_property_readonly("witness_v",
                             [](const verify::ZeroProductCertificate& c) {
                               return as_tuple(c.witness_v);
                             })
      .def_readonly("weight_u", &verify::ZeroProductCertificate::weight_u)
      .def_readonly("weight_v", &verify::ZeroProductCertificate::weight_v);

  mod.def(
      "verify_proposition",
      [](int m, int window) { return report_dict(verify::verify_proposition(DomainSpec(m), window)); },
      py::arg("m"), py::arg("window"));
  mod.def(
      "degree_scan",
      [](int m_from, int m_to) {
        py::list out;
        for (const verify::DegreeScanRow& row : verify::degree_scan(m_from, m_to)) {
          py::dict d;
          d["m"] = row.m;
          d["r"] = row.r;
          d["degree_lattice"] = row.degree_lattice;
          d["floor_m_over_4"] = row.floor_m_over_4;
          d["agree"] = row.agree;
          out.append(d);
        }
        return out;
      },
      py::arg("m_from"), py::arg("m_to"));
  mod.def(
      "zero_product_search",
      [](int m, int max_degree) {
        return verify::zero_product_search(DomainSpec(m), max_degree);
      },
      py::arg("m"), py::arg("max_degree"));
  mod.def(
      "validate_certificate",
      [](const verify::ZeroProductCertificate& cert, int m, int window) {
        return verify::validate_certificate(cert, DomainSpec(m), window);
      },
      py::arg("certificate"), py::arg("m"), py::arg("window"));

  mod.def(
      "domain_svg",
      [](int m, double extent) { return figures::domain_svg(DomainSpec(m), extent); },
      py::arg("m"), py::arg("extent") = 6.0);
  mod.def(
      "lattice_svg",
      [](int m, int extent) { return figures::lattice_svg(DomainSpec(m), extent); },
      py::arg("m"), py::arg("extent"));
}
