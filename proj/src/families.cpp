#include "yangbax/families.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Eigenvalues>

#include "yangbax/elliptic.hpp"

namespace yangbax {

namespace {

Scalar one(Field f) { return Scalar::from_long(1, f); }

void require_nonzero(const Scalar& s, const std::string& name) {
  if (s.is_zero(0.0)) throw ConstraintViolation(name + " must be nonzero");
}

void require_denominator(const Scalar& s, const std::string& factor) {
  if (s.is_zero(0.0)) throw ConstraintViolation("denominator factor " + factor + " vanishes");
}

VertexMatrix from_rows(std::array<std::array<Scalar, 4>, 4> rows) {
  VertexMatrix m;
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) m(r, c) = std::move(rows[r][c]);
  return m;
}

Scalar cx(std::complex<double> z) { return Scalar(z); }

}  // namespace

// ---------------------------------------------------------------------------
// Five-vertex

VertexMatrix r5a(const Scalar& d, const Scalar& qi, const Scalar& qj, const Scalar& gi, const Scalar& gj) {
  const Field f = d.field();
  const Scalar o = one(f);
  const Scalar z = Scalar::from_long(0, f);
  return from_rows({{{o, z, z, z}, {z, d * qi, (o - d * d) * gi / gj, z}, {z, z, d / qj, z}, {z, z, z, qi / qj}}})
      .with_ansatz(Ansatz::five_vertex);
}

Triplet build_5v_first(const FiveVertex1Params& p, Warnings* warnings) {
  require_nonzero(p.d, "d");
  require_nonzero(p.q1, "q1");
  require_nonzero(p.q2, "q2");
  require_nonzero(p.q3, "q3");
  require_nonzero(p.g1, "g1");
  require_nonzero(p.g2, "g2");
  require_nonzero(p.g3, "g3");
  if (warnings != nullptr && approx_equal(p.d * p.d, one(p.d.field()))) {
    warnings->push_back("d^2 = 1: the off-diagonal entries vanish and the triplet is diagonal");
  }
  return {r5a(p.d, p.q1, p.q2, p.g1, p.g2), r5a(p.d, p.q1, p.q3, p.g1, p.g3), r5a(p.d, p.q2, p.q3, p.g2, p.g3)};
}

Triplet build_5v_raw(const FiveVertexRawParams& p, double atol) {
  require_nonzero(p.x2, "x2");
  require_nonzero(p.x3, "x3");
  require_nonzero(p.x4, "x4");
  require_nonzero(p.y3, "y3");
  const Field f = p.x2.field();
  const Scalar o = one(f);
  const Scalar z = Scalar::from_long(0, f);
  const Scalar residual = p.a * p.c - p.b * (o - p.x2 * p.x3 / p.x4);
  if (!residual.is_zero(atol)) {
    throw ConstraintViolation("a*c != b*(1-x2*x3/x4) (residual " + residual.to_string() + ")");
  }
  const auto m = [&](const Scalar& d1, const Scalar& d2, const Scalar& d3, const Scalar& off) {
    return from_rows({{{o, z, z, z}, {z, d1, off, z}, {z, z, d2, z}, {z, z, z, d3}}}).with_ansatz(Ansatz::five_vertex);
  };
  return {m(p.x2, p.x3, p.x4, p.a), m(p.x2, p.y3, p.x4 * p.y3 / p.x3, p.b), m(p.x2 / p.x4, p.y3, p.y3 / p.x3, p.c)};
}

VertexMatrix five_vertex_constant(const Scalar& p, const Scalar& q) {
  const Field f = p.field();
  const Scalar o = one(f);
  const Scalar z = Scalar::from_long(0, f);
  return from_rows({{{o, z, z, z}, {z, p, o - p * q, z}, {z, z, q, z}, {z, z, z, o}}}).with_ansatz(Ansatz::five_vertex);
}

VertexMatrix r5b(const Scalar& pi, const Scalar& qj, const Scalar& gij) {
  const Field f = pi.field();
  const Scalar o = one(f);
  const Scalar z = Scalar::from_long(0, f);
  return from_rows({{{o, z, z, z}, {z, pi, gij, z}, {z, z, qj, z}, {z, z, z, -(pi * qj)}}})
      .with_ansatz(Ansatz::five_vertex);
}

ExplicitGauge uniform_gauge_values(const FiveVertexFFParams& p, const UniformGauge& u) {
  const Field f = p.p1.field();
  const Scalar o = one(f);
  const std::array<Scalar, 3> w{o - p.p1 * u.q1, o - p.p2 * p.q2, o - u.p3 * p.q3};
  for (std::size_t i = 0; i < 3; ++i) require_nonzero(w[i], "1-p" + std::to_string(i + 1) + "*q" + std::to_string(i + 1));
  const Scalar beta = o - u.alpha;
  const auto g = [&](std::size_t i, std::size_t j) { return pow(w[i], u.alpha) * pow(w[j], beta); };
  return {g(0, 1), g(0, 2), g(1, 2)};
}

Triplet build_5v_ff(const FiveVertexFFParams& p, double atol) {
  const ExplicitGauge g = std::holds_alternative<ExplicitGauge>(p.gauge)
                              ? std::get<ExplicitGauge>(p.gauge)
                              : uniform_gauge_values(p, std::get<UniformGauge>(p.gauge));
  const Scalar residual = g.g12 * g.g23 - g.g13 * (one(p.p1.field()) - p.p2 * p.q2);
  if (!residual.is_zero(atol)) {
    throw ConstraintViolation("g12*g23 != g13*(1-p2*q2) (residual " + residual.to_string() + ")");
  }
  return {r5b(p.p1, p.q2, g.g12), r5b(p.p1, p.q3, g.g13), r5b(p.p2, p.q3, g.g23)};
}

// ---------------------------------------------------------------------------
// Six-vertex

VertexMatrix six_vertex(const std::array<Scalar, 4>& diag) {
  const Field f = diag[0].field();
  const Scalar o = one(f);
  const Scalar z = Scalar::from_long(0, f);
  return from_rows({{{diag[0], z, z, z}, {z, diag[1], o, z}, {z, o, diag[2], z}, {z, z, z, diag[3]}}})
      .with_ansatz(Ansatz::six_vertex);
}

Scalar six_vertex_h(const SixVertexRational& p) {
  return p.e * p.f + (p.a * p.d * p.e - p.b * p.c * p.f) * (p.e - p.f);
}

VertexMatrix r6v_trig(double gamma, std::complex<double> q_prime, std::complex<double> q, double lambda) {
  const double sg = std::sin(gamma);
  if (std::abs(sg) < std::numeric_limits<double>::epsilon()) throw ConstraintViolation("sin(gamma) = 0");
  const double u = std::sin(gamma - lambda) / sg;
  const double v = std::sin(lambda) / sg;
  return six_vertex({cx(q / q_prime * u), cx(q * q_prime * v), cx(v / (q * q_prime)), cx(q_prime / q * u)});
}

Triplet build_6v_asym(const SixVertexAsymParams& params) {
  if (const auto* t = std::get_if<SixVertexTrig>(&params)) {
    return {r6v_trig(t->gamma, t->q1, t->q2, t->lambda_a), r6v_trig(t->gamma, t->q1, t->q3, t->lambda_a + t->lambda_c),
            r6v_trig(t->gamma, t->q2, t->q3, t->lambda_c)};
  }
  const auto& p = std::get<SixVertexRational>(params);
  for (const auto& [s, name] : {std::pair{&p.a, "a"}, {&p.b, "b"}, {&p.c, "c"}, {&p.d, "d"}, {&p.e, "e"}, {&p.f, "f"}})
    require_nonzero(*s, name);
  const Scalar h = six_vertex_h(p);
  if (h.is_zero(0.0)) throw ConstraintViolation("h = e*f + (a*d*e - b*c*f)*(e - f) vanishes");
  const Scalar fe = p.f - p.e;
  const Scalar a1 = p.e + p.b * p.c * fe;
  return {six_vertex({a1, p.b * p.d * fe / h, p.c * p.a * fe, a1 / h}),
          six_vertex({p.a * p.e, p.b * p.f / h, p.c * p.f, p.d * p.e / h}), six_vertex({p.a, p.b, p.c, p.d})};
}

std::pair<Scalar, Scalar> six_vertex_factors(const Triplet& t) {
  for (std::size_t s = 1; s < 3; ++s) {
    const auto& m = t[s];
    const Scalar o = one(m.field());
    if (!approx_equal(m(1, 2), o) || !approx_equal(m(2, 1), o)) {
      throw ConstraintViolation("six-vertex factors need unit off-diagonal entries in B and C");
    }
  }
  const auto& B = t.b;
  const auto& C = t.c;
  const Scalar &b1 = B(0, 0), &b2 = B(1, 1), &b3 = B(2, 2);
  const Scalar &c1 = C(0, 0), &c2 = C(1, 1), &c3 = C(2, 2), &c4 = C(3, 3);
  const Scalar first = b1 * b2 * b3 + c3 * c4 * b1 * b1 * b2 - c2 * c3 * b1 * b2 * b3 - c1 * c4 * b1 * b2 * b3 -
                       c1 * c2 * b3 + c1 * c2 * b2 * b3 * b3;
  const Scalar second = one(C.field()) - c2 * c3 - c1 * c4;
  return {first, second};
}

double TrigRelationResiduals::max() const {
  double m = std::max({curve_spread, v_a, u_b});
  for (const double c : curve) m = std::max(m, c);
  return m;
}

TrigRelationResiduals trig_relations_check(const Triplet& t) {
  using C = std::complex<double>;
  std::array<C, 3> u{};
  std::array<C, 3> v{};
  std::array<C, 3> g{};
  TrigRelationResiduals out;
  for (std::size_t s = 0; s < 3; ++s) {
    const VertexMatrix m = t[s].in_field(Field::complex);
    const SixVertexInvariants inv = six_vertex_invariants(m);
    if (!inv.Delta || !inv.delta || !inv.delta_prime) {
      throw ConstraintViolation("trig relations need Delta, delta and delta' on every slot");
    }
    const C d = inv.delta->to_complex();
    const C dp = inv.delta_prime->to_complex();
    if (std::abs(d) == 0.0 || std::abs(dp) == 0.0) throw ConstraintViolation("vanishing fourth-root base");
    u[s] = m(0, 0).to_complex() * std::pow(dp / d, 0.25);
    v[s] = m(1, 1).to_complex() * std::pow(d * dp, -0.25);
    g[s] = 2.0 * u[s] * v[s] / (u[s] * u[s] + v[s] * v[s] - 1.0);
    const C root = std::sqrt(inv.Delta->to_complex());
    const double direct = std::abs(root - g[s]);
    const double flipped = std::abs(root + g[s]);
    out.curve[s] = std::min(direct, flipped);
    out.sign_flipped[s] = flipped < direct;
  }
  out.curve_spread = std::max(std::abs(g[1] - g[0]), std::abs(g[2] - g[0]));
  out.v_a = std::abs(v[0] - (v[1] * u[2] - v[2] * u[1]));
  out.u_b = std::abs(u[1] - (u[0] * u[2] - v[0] * v[2]));
  return out;
}

VertexMatrix sl2_embed(const Mat2& hat) { return six_vertex({hat(0, 0), -hat(0, 1), hat(1, 0), hat(1, 1)}); }

Triplet build_6v_ff(const SL2Pair& p, double atol) {
  for (const auto& [m, name] : {std::pair{&p.hat_b, "hatB"}, {&p.hat_c, "hatC"}}) {
    const Scalar det = m->determinant();
    if (!approx_equal(det, one(det.field()), atol)) {
      throw ConstraintViolation("det " + std::string(name) + " = " + det.to_string() + " != 1");
    }
  }
  return {sl2_embed(p.hat_c.inverse() * p.hat_b), sl2_embed(p.hat_b), sl2_embed(p.hat_c)};
}

Mat2 euler_sl2(std::complex<double> q, double theta, std::complex<double> q_prime) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const Mat2 left = Mat2::diagonal({cx(q), cx(1.0 / q)});
  const Mat2 rot{{cx(c), cx(-s)}, {cx(s), cx(c)}};
  const Mat2 right = Mat2::diagonal({cx(1.0 / q_prime), cx(q_prime)});
  return left * rot * right;
}

// ---------------------------------------------------------------------------
// Eight-vertex

Triplet build_8v(const EightVertexParams& p, Warnings* warnings) {
  const auto& [a, b, c, x, y, z, v] = p;
  const std::array<std::pair<Scalar, const char*>, 9> dens{{{c * y, "c*y"},
                                                             {b * z, "b*z"},
                                                             {a * y * z, "a*y*z"},
                                                             {c * x, "c*x"},
                                                             {a * z, "a*z"},
                                                             {b * x * z, "b*x*z"},
                                                             {b * x, "b*x"},
                                                             {a * y, "a*y"},
                                                             {c * x * y, "c*x*y"}}};
  for (const auto& [d, name] : dens) require_denominator(d, name);
  const Scalar xyz = x * y * z;
  if (warnings != nullptr) {
    for (const auto& [w, name] : {std::pair{&x, "x"}, {&y, "y"}, {&z, "z"}, {&xyz, "xyz"}}) {
      if (approx_equal(v, *w)) warnings->push_back(std::string("v = ") + name + ": an anti-diagonal entry vanishes");
    }
  }
  const Scalar o = one(x.field());
  const Scalar n = Scalar::from_long(0, x.field());
  const Scalar E = v - xyz;
  const VertexMatrix A = from_rows({{{o, n, n, a},
                                     {n, x, b * (v - x) / (c * y), n},
                                     {n, c * E / (b * z), x, n},
                                     {(v - y) * (v - z) / (a * y * z), n, n, o}}});
  const VertexMatrix B = from_rows({{{o, n, n, b},
                                     {n, y, a * (v - x) / (c * x), n},
                                     {n, c * (v - z) / (a * z), y, n},
                                     {(v - y) * E / (b * x * z), n, n, o}}});
  const VertexMatrix C = from_rows({{{o, n, n, c},
                                     {n, z, a * E / (b * x), n},
                                     {n, b * (v - z) / (a * y), z, n},
                                     {(v - y) * (v - x) / (c * x * y), n, n, o}}});
  return {A.with_ansatz(Ansatz::eight_vertex), B.with_ansatz(Ansatz::eight_vertex),
          C.with_ansatz(Ansatz::eight_vertex)};
}

EightVertexParams k_map_8v(Generator gen, const EightVertexParams& p) {
  const auto& [a, b, c, x, y, z, v] = p;
  const Scalar xyz = x * y * z;
  switch (gen) {
    case Generator::ka: {
      require_denominator(a * y * z, "a*y*z");
      const Scalar den = v - x - xyz;
      require_denominator(den, "v-x-xyz");
      return {-((v - y) * (v - z)) / (a * y * z), c * (v - z) / (a * z), b * (v - z) / (a * y), (v - z - y) * x / den,
              y, z, z - v + y};
    }
    case Generator::kb: {
      require_denominator(b * x * z, "b*x*z");
      const Scalar den = v - xyz - y;
      require_denominator(den, "v-xyz-y");
      return {c * (v - xyz) / (b * z), -((v - z - x) * (v - y) * (v - xyz)) / (b * x * z * den), a * (v - xyz) / (b * x),
              x, (v - z - x) * y / den, z, z - v + x};
    }
    case Generator::kc: {
      require_denominator(c * x * y, "c*x*y");
      const Scalar den = v - xyz - z;
      require_denominator(den, "v-xyz-z");
      return {b * (v - x) / (c * y), a * (v - x) / (c * x), -((v - y) * (v - x)) / (c * x * y), x, y,
              (v - x - y) * z / den, x - v + y};
    }
  }
  throw Error("unknown generator");
}

std::array<std::complex<double>, 4> lambda_roots(const std::array<Scalar, 4>& q) {
  using C = std::complex<double>;
  // Coefficients of prod (L - q_i), highest degree first.
  std::array<C, 5> poly{1.0, 0.0, 0.0, 0.0, 0.0};
  for (const auto& qi : q) {
    const C r = qi.to_complex();
    for (std::size_t k = 4; k > 0; --k) poly[k] -= r * poly[k - 1];
  }
  poly[4] -= 1.0;
  Eigen::Matrix4cd companion = Eigen::Matrix4cd::Zero();
  for (int i = 0; i < 4; ++i) companion(0, i) = -poly[static_cast<std::size_t>(i + 1)];
  for (int i = 1; i < 4; ++i) companion(i, i - 1) = 1.0;
  const Eigen::ComplexEigenSolver<Eigen::Matrix4cd> solver(companion, false);
  std::array<C, 4> roots{};
  for (int i = 0; i < 4; ++i) {
    C r = solver.eigenvalues()(i);
    for (int it = 0; it < 3; ++it) {
      C f = poly[0];
      C df = 0.0;
      for (std::size_t k = 1; k < 5; ++k) {
        df = df * r + f;
        f = f * r + poly[k];
      }
      if (std::abs(df) == 0.0) break;
      r -= f / df;
    }
    roots[static_cast<std::size_t>(i)] = r;
  }
  return roots;
}

EightVertexDerived derived_8v(const EightVertexParams& p) {
  const Scalar xyz = p.x * p.y * p.z;
  require_denominator(xyz, "xyz");
  EightVertexDerived out;
  out.sqrt_xyz = sqrt(xyz);
  const Scalar& s = out.sqrt_xyz;
  out.q = {(p.v - p.x) / s, (p.v - xyz) / s, (p.v - p.z) / s, (p.v - p.y) / s};
  const EightVertexInvariants inv = eight_vertex_invariants_from_params(p);
  out.Delta1 = inv.Delta1;
  out.Delta2 = inv.Delta2;
  if (p.field() == Field::rational) {
    out.Lambda = p.v / s;
    return out;
  }
  const auto roots = lambda_roots(out.q);
  const std::complex<double> x = p.x.to_complex();
  const std::complex<double> q1 = out.q[0].to_complex();
  const std::complex<double> q2 = out.q[1].to_complex();
  double best = std::numeric_limits<double>::infinity();
  for (const auto& r : roots) {
    const double res = std::abs(x - (r - q1) * (r - q2));
    if (res < best) {
      best = res;
      out.Lambda = cx(r);
    }
  }
  return out;
}

EightVertexParams xyzv_from_q(const Scalar& L, const std::array<Scalar, 4>& q) {
  const Scalar o = one(L.field());
  const Scalar l2 = L - q[1];
  return {o, o, o, (L - q[0]) * l2, (L - q[3]) * l2, (L - q[2]) * l2, L * l2};
}

std::string_view to_string(GaugeFunction f) {
  switch (f) {
    case GaugeFunction::unit: return "unit";
    case GaugeFunction::tau: return "tau";
    case GaugeFunction::baxter: return "baxter";
  }
  return "?";
}

GaugeFunction gauge_function_from_string(std::string_view s) {
  if (s == "unit" || s == "1") return GaugeFunction::unit;
  if (s == "tau") return GaugeFunction::tau;
  if (s == "baxter") return GaugeFunction::baxter;
  throw ParseError("unknown gauge function '" + std::string(s) + "' (expected unit, tau or baxter)");
}

Scalar q_root(const Scalar& tau, const Scalar& Delta1, const Scalar& Delta2, QBranch branch) {
  require_nonzero(tau, "tau");
  const Field f = tau.field();
  const Scalar lin = tau * tau + tau * Delta1 + one(f);
  const Scalar disc = lin * lin - Scalar::from_long(4, f) * tau * tau * Delta2;
  const Scalar root = sqrt(disc);
  const Scalar num = branch == QBranch::plus ? lin + root : lin - root;
  return num / (Scalar::from_long(2, f) * tau);
}

VertexMatrix r8v_gaugefixed(const Scalar& tau, const Scalar& Delta1, const Scalar& Delta2, GaugeFunction gf,
                            const Scalar& omega, QBranch branch) {
  const Scalar Q = q_root(tau, Delta1, Delta2, branch);
  if (Q.is_zero(0.0)) throw ConstraintViolation("Q = 0");
  require_nonzero(omega, "omega");
  const Field fld = tau.field();
  Scalar f;
  switch (gf) {
    case GaugeFunction::unit: f = one(fld); break;
    case GaugeFunction::tau: f = tau; break;
    case GaugeFunction::baxter: f = sqrt(tau * Delta2 / Q); break;
  }
  if (f.is_zero(0.0)) throw ConstraintViolation("f(tau) = 0");
  const Scalar o = one(fld);
  const Scalar n = Scalar::from_long(0, fld);
  return from_rows({{{o, n, n, f}, {n, tau, omega * f * Q, n}, {n, tau / (omega * f), tau, n},
                     {tau * Delta2 / (f * Q), n, n, o}}})
      .with_ansatz(Ansatz::eight_vertex);
}

std::array<Scalar, 3> symmetric_gauge_abc(const Scalar& x, const Scalar& y, const Scalar& z, const Scalar& v,
                                          const Scalar& phi1, const Scalar& phi2, const Scalar& phi3) {
  const Scalar xyz = x * y * z;
  require_denominator(xyz, "xyz");
  const Scalar q1q2 = (v - x) * (v - xyz) / xyz;
  const Scalar q1q3 = (v - x) * (v - z) / xyz;
  const Scalar q2q3 = (v - xyz) * (v - z) / xyz;
  require_nonzero(q1q2, "q1*q2");
  require_nonzero(q1q3, "q1*q3");
  require_nonzero(q2q3, "q2*q3");
  return {sqrt(x / q1q2) * phi1 * phi2, sqrt(y / q1q3) * phi1 * phi3, sqrt(z / q2q3) * phi2 * phi3};
}

// ---------------------------------------------------------------------------
// Baxter

VertexMatrix r_baxter(double alpha, double gamma, double k) {
  using elliptic::sn;
  const double a = sn(gamma - alpha, k);
  const double b = sn(alpha, k);
  const double c = sn(gamma, k);
  const double d = k * b * c * a;
  const Scalar n = Scalar::complex(0.0);
  const Scalar A = Scalar::complex(a), B = Scalar::complex(b), C = Scalar::complex(c), D = Scalar::complex(d);
  return from_rows({{{A, n, n, D}, {n, B, C, n}, {n, C, B, n}, {D, n, n, A}}}).with_ansatz(Ansatz::eight_vertex);
}

Triplet build_8v_baxter(const BaxterParams& p) {
  return {r_baxter(p.chi, p.gamma, p.k), r_baxter(p.rho(), p.gamma, p.k), r_baxter(p.sigma, p.gamma, p.k)};
}

namespace {

/// (sn u, sn(g - u)) up to a common factor per pair.
using SnPair = std::pair<double, double>;

SnPair sn_pair(double u, double gamma, double k) { return {elliptic::sn(u, k), elliptic::sn(gamma - u, k)}; }

/// u -> u + g + iK', rescaled by k so that k = 0 stays finite.
SnPair shifted_pair(double u, double gamma, double k) {
  return {1.0 / elliptic::sn(u + gamma, k), -1.0 / elliptic::sn(u, k)};
}

std::array<double, 4> eta_from_pairs(const SnPair& chi, const SnPair& rho, const SnPair& sigma, double sn_gamma) {
  const double v =
      rho.first * (sigma.first * chi.first + sn_gamma * rho.second) / (chi.second * rho.second * sigma.second);
  return {chi.first / chi.second, rho.first / rho.second, sigma.first / sigma.second, v};
}

EightVertexParams params_from_eta(const std::array<double, 4>& e) {
  const Scalar o = Scalar::complex(1.0);
  return {o, o, o, Scalar::complex(e[0]), Scalar::complex(e[1]), Scalar::complex(e[2]), Scalar::complex(e[3])};
}

double eta_distance(const EightVertexParams& got, const std::array<double, 4>& want) {
  const std::array<const Scalar*, 4> g{&got.x, &got.y, &got.z, &got.v};
  double err = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    err = std::max(err, std::abs(g[i]->to_complex() - want[i]) / (1.0 + std::abs(want[i])));
  }
  return err;
}

}  // namespace

EightVertexParams baxter_to_xyzv(const BaxterParams& p) {
  return params_from_eta(eta_from_pairs(sn_pair(p.chi, p.gamma, p.k), sn_pair(p.rho(), p.gamma, p.k),
                                        sn_pair(p.sigma, p.gamma, p.k), elliptic::sn(p.gamma, p.k)));
}

EightVertexInvariants baxter_invariants(double gamma, double k) {
  const auto j = elliptic::jacobi(gamma, k);
  return {Scalar::complex(2.0 * j.cn * j.dn), Scalar::complex(k * k * std::pow(j.sn, 4))};
}

double elliptic_Q(double alpha, double gamma, double k) {
  const double sg = elliptic::sn(gamma, k);
  return sg * sg / (elliptic::sn(alpha, k) * elliptic::sn(gamma - alpha, k));
}

EightVertexParams eta_coordinates(const Triplet& t, double atol) {
  std::array<VertexMatrix, 3> m;
  for (std::size_t s = 0; s < 3; ++s) {
    const Scalar& n = t[s](0, 0);
    if (n.is_zero(0.0)) throw ConstraintViolation("eta coordinates need a nonzero (0,0) entry");
    m[s] = inverse(n) * t[s];
    if (!approx_equal(m[s](3, 3), m[s](0, 0), atol) || !approx_equal(m[s](2, 2), m[s](1, 1), atol)) {
      throw ConstraintViolation("matrix is not of the symmetric eight-vertex form diag(1,x,x,1)");
    }
  }
  const Scalar& x = m[0](1, 1);
  const Scalar& y = m[1](1, 1);
  const Scalar& z = m[2](1, 1);
  const Scalar xyz = x * y * z;
  // Each pair of gauge-invariant products differs by a factor linear in v.
  struct Candidate {
    Scalar base;
    Scalar diff;
    Scalar den;
  };
  const std::array<Candidate, 3> cands{{
      {z, y * z * m[0](0, 3) * m[0](3, 0) - x * z * m[1](1, 2) * m[1](2, 1), x - y},
      {x, x * y * m[2](0, 3) * m[2](3, 0) - y * z * m[0](1, 2) * m[0](2, 1), xyz - y},
      {xyz, x * z * m[1](0, 3) * m[1](3, 0) - x * y * m[2](1, 2) * m[2](2, 1), z - y},
  }};
  const Candidate* best = nullptr;
  for (const auto& c : cands) {
    if (c.den.is_zero(0.0)) continue;
    if (best == nullptr || c.den.abs() > best->den.abs()) best = &c;
  }
  if (best == nullptr) throw ConstraintViolation("v is not determined: x = y = z = xyz");
  return {m[0](0, 3), m[1](0, 3), m[2](0, 3), x, y, z, best->base + best->diff / best->den};
}

EllipticActionReport aut_elliptic_action_check(const BaxterParams& p, double atol) {
  const Triplet t = build_8v_baxter(p);
  const double sg = elliptic::sn(p.gamma, p.k);
  const SnPair chi = sn_pair(p.chi, p.gamma, p.k);
  const SnPair sigma = sn_pair(p.sigma, p.gamma, p.k);

  EllipticActionReport out;
  const Triplet ab = apply_K(Generator::kb, apply_K(Generator::ka, t));
  out.ka_kb_error = eta_distance(eta_coordinates(ab, 1e-8),
                                 eta_from_pairs(shifted_pair(p.chi, p.gamma, p.k),
                                                shifted_pair(p.rho(), p.gamma, p.k), sigma, sg));
  const Triplet bc = apply_K(Generator::kb, apply_K(Generator::kc, t));
  out.kb_kc_error = eta_distance(eta_coordinates(bc, 1e-8),
                                 eta_from_pairs(chi, shifted_pair(p.rho(), p.gamma, p.k),
                                                shifted_pair(p.sigma, p.gamma, p.k), sg));
  out.passed = out.ka_kb_error <= atol && out.kb_kc_error <= atol;
  return out;
}

}  // namespace yangbax
