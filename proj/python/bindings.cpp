#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "yangbax/elliptic.hpp"
#include "yangbax/families.hpp"

namespace py = pybind11;
using namespace yangbax;

namespace {

py::object fraction_type() {
  static py::object f = py::module_::import("fractions").attr("Fraction");
  return f;
}

bool is_exact_input(const py::handle& h) {
  return py::isinstance<py::int_>(h) || py::isinstance(h, fraction_type());
}

Scalar to_scalar(const py::handle& h, Field mode) {
  if (mode == Field::rational) {
    if (!is_exact_input(h)) throw py::type_error("exact mode takes int or Fraction values");
    return Scalar::parse_rational(py::str(h).cast<std::string>());
  }
  if (is_exact_input(h)) return Scalar::parse_rational(py::str(h).cast<std::string>()).in_field(Field::complex);
  return Scalar(h.cast<std::complex<double>>());
}

Field mode_of(std::initializer_list<py::handle> values) {
  for (const auto& v : values) {
    if (!is_exact_input(v)) return Field::complex;
  }
  return Field::rational;
}

py::object from_scalar(const Scalar& s) {
  if (s.is_exact()) return fraction_type()(s.to_string());
  return py::cast(s.to_complex());
}

py::list matrix_to_py(const VertexMatrix& m) {
  py::list rows;
  for (std::size_t r = 0; r < 4; ++r) {
    py::list row;
    for (std::size_t c = 0; c < 4; ++c) row.append(from_scalar(m(r, c)));
    rows.append(row);
  }
  return rows;
}

VertexMatrix matrix_from_py(const py::sequence& rows, Field mode) {
  if (py::len(rows) != 4) throw py::value_error("vertex matrix needs 4 rows");
  VertexMatrix m = VertexMatrix::zero(mode);
  for (std::size_t r = 0; r < 4; ++r) {
    const py::sequence row = rows[r];
    if (py::len(row) != 4) throw py::value_error("vertex matrix rows need 4 entries");
    for (std::size_t c = 0; c < 4; ++c) m(r, c) = to_scalar(row[c], mode);
  }
  return m;
}

Field sequence_mode(const py::sequence& rows) {
  for (const auto& row : rows) {
    for (const auto& x : py::reinterpret_borrow<py::sequence>(row)) {
      if (!is_exact_input(x)) return Field::complex;
    }
  }
  return Field::rational;
}

Generator generator(const std::string& name) {
  const AutWord w = parse_word(name);
  if (w.size() != 1) throw py::value_error("expected one generator, got '" + name + "'");
  return w.front();
}

py::dict invariants_dict(const VertexMatrix& m) {
  py::dict d;
  const PVector p = p_polys(m);
  d["p1"] = from_scalar(p.p1);
  d["p2"] = from_scalar(p.p2);
  d["p5"] = from_scalar(p.p5);
  d["p6"] = from_scalar(p.p6);
  d["p9"] = from_scalar(p.p9);
  const SixVertexInvariants six = six_vertex_invariants(m);
  d["Delta"] = six.Delta ? from_scalar(*six.Delta) : py::none();
  d["delta"] = six.delta ? from_scalar(*six.delta) : py::none();
  d["delta_prime"] = six.delta_prime ? from_scalar(*six.delta_prime) : py::none();
  d["free_fermion"] = is_free_fermion(m);
  return d;
}

EightVertexParams params_8v(const py::object& x, const py::object& y, const py::object& z, const py::object& v,
                            const py::object& a, const py::object& b, const py::object& c) {
  const Field f = mode_of({x, y, z, v, a, b, c});
  return {to_scalar(a, f), to_scalar(b, f), to_scalar(c, f), to_scalar(x, f),
          to_scalar(y, f), to_scalar(z, f), to_scalar(v, f)};
}

py::dict params_to_py(const EightVertexParams& p) {
  py::dict d;
  d["a"] = from_scalar(p.a);
  d["b"] = from_scalar(p.b);
  d["c"] = from_scalar(p.c);
  d["x"] = from_scalar(p.x);
  d["y"] = from_scalar(p.y);
  d["z"] = from_scalar(p.z);
  d["v"] = from_scalar(p.v);
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Yang-Baxter triplets: construction, verification and symmetries";

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<ConstraintViolation>(m, "ConstraintViolation", base);
  py::register_exception<SingularMatrix>(m, "SingularMatrix", base);
  py::register_exception<NoExactRoot>(m, "NoExactRoot", base);
  py::register_exception<ScalarMismatch>(m, "ScalarMismatch", base);
  py::register_exception<ParseError>(m, "ParseError", base);

  py::class_<Triplet>(m, "Triplet")
      .def(py::init([](const py::sequence& a, const py::sequence& b, const py::sequence& c) {
             const Field f = sequence_mode(a) == Field::rational && sequence_mode(b) == Field::rational &&
                                     sequence_mode(c) == Field::rational
                                 ? Field::rational
                                 : Field::complex;
             return Triplet{matrix_from_py(a, f), matrix_from_py(b, f), matrix_from_py(c, f)};
           }),
           py::arg("a"), py::arg("b"), py::arg("c"))
      .def_property_readonly("a", [](const Triplet& t) { return matrix_to_py(t.a); })
      .def_property_readonly("b", [](const Triplet& t) { return matrix_to_py(t.b); })
      .def_property_readonly("c", [](const Triplet& t) { return matrix_to_py(t.c); })
      .def_property_readonly("exact", [](const Triplet& t) { return t.field() == Field::rational; })
      .def("residual", [](const Triplet& t) { return ybe_residual(t).max_abs(); })
      .def("solves", [](const Triplet& t, double atol) { return solves_ybe(t, atol); }, py::arg("atol") = kDefaultTolerance)
      .def("projectively_equal", [](const Triplet& s, const Triplet& t, double atol) { return projective_eq(s, t, atol); },
           py::arg("other"), py::arg("atol") = kDefaultTolerance)
      .def("invariants", [](const Triplet& t) { return py::make_tuple(invariants_dict(t.a), invariants_dict(t.b), invariants_dict(t.c)); })
      .def("__eq__", [](const Triplet& s, const Triplet& t) { return s == t; });

  m.def("build_5v", [](const py::object& d, const py::object& q1, const py::object& q2, const py::object& q3) {
    const Field f = mode_of({d, q1, q2, q3});
    return build_5v_first({to_scalar(d, f), to_scalar(q1, f), to_scalar(q2, f), to_scalar(q3, f),
                           Scalar::from_long(1, f), Scalar::from_long(1, f), Scalar::from_long(1, f)});
  }, py::arg("d"), py::arg("q1"), py::arg("q2"), py::arg("q3"));

  m.def("build_6v_rational", [](const py::object& a, const py::object& b, const py::object& c, const py::object& d,
                                const py::object& e, const py::object& f) {
    const Field fl = mode_of({a, b, c, d, e, f});
    return build_6v_asym(SixVertexRational{to_scalar(a, fl), to_scalar(b, fl), to_scalar(c, fl), to_scalar(d, fl),
                                           to_scalar(e, fl), to_scalar(f, fl)});
  });

  m.def("build_6v_trig", [](double gamma, double lambda_a, double lambda_c, std::complex<double> q1,
                            std::complex<double> q2, std::complex<double> q3) {
    return build_6v_asym(SixVertexTrig{gamma, q1, q2, q3, lambda_a, lambda_c});
  }, py::arg("gamma"), py::arg("lambda_a"), py::arg("lambda_c"), py::arg("q1") = 1.0, py::arg("q2") = 1.0,
     py::arg("q3") = 1.0);

  m.def("build_8v", [](const py::object& x, const py::object& y, const py::object& z, const py::object& v,
                       const py::object& a, const py::object& b, const py::object& c) {
    return build_8v(params_8v(x, y, z, v, a, b, c));
  }, py::arg("x"), py::arg("y"), py::arg("z"), py::arg("v"), py::arg("a") = 1, py::arg("b") = 1, py::arg("c") = 1);

  m.def("build_8v_baxter", [](double sigma, double chi, double gamma, double k) {
    return build_8v_baxter({sigma, chi, gamma, k});
  }, py::arg("sigma"), py::arg("chi"), py::arg("gamma"), py::arg("k"));

  m.def("eight_vertex_invariants", [](const py::object& x, const py::object& y, const py::object& z, const py::object& v) {
    const EightVertexInvariants e = eight_vertex_invariants_from_params(params_8v(x, y, z, v, py::int_(1), py::int_(1), py::int_(1)));
    return py::make_tuple(from_scalar(e.Delta1), from_scalar(e.Delta2));
  }, py::arg("x"), py::arg("y"), py::arg("z"), py::arg("v"));

  m.def("k_map_8v", [](const std::string& gen, const py::object& x, const py::object& y, const py::object& z,
                       const py::object& v, const py::object& a, const py::object& b, const py::object& c) {
    return params_to_py(k_map_8v(generator(gen), params_8v(x, y, z, v, a, b, c)));
  }, py::arg("gen"), py::arg("x"), py::arg("y"), py::arg("z"), py::arg("v"), py::arg("a") = 1, py::arg("b") = 1,
     py::arg("c") = 1);

  m.def("apply_K", [](const std::string& gen, const Triplet& t) { return apply_K(generator(gen), t); });
  m.def("apply_word", [](const std::string& word, const Triplet& t) { return apply_aut_word(parse_word(word), t); });
  m.def("apply_diagonal_gauge", [](const Triplet& t, const py::object& t1, const py::object& t2, const py::object& t3) {
    const Field f = t.field();
    return apply_gauge(DiagonalGauge{to_scalar(t1, f), to_scalar(t2, f), to_scalar(t3, f)}.to_gauge(), t);
  });
  m.def("orbit_period", [](const Triplet& t, const std::string& word, std::size_t max_iter, double atol) -> py::object {
    const OrbitResult r = orbit(t, parse_word(word), max_iter, atol);
    if (r.period) return py::int_(*r.period);
    return py::none();
  }, py::arg("triplet"), py::arg("word"), py::arg("max_iter") = kDefaultOrbitIterations,
     py::arg("atol") = kDefaultTolerance);

  m.def("jacobi", [](double u, double k) {
    const auto j = elliptic::jacobi(u, k);
    return py::make_tuple(j.sn, j.cn, j.dn);
  }, py::arg("u"), py::arg("k"));
  m.def("complete_K", &elliptic::complete_K, py::arg("k"));
}
