#pragma once

#include <array>
#include <complex>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "yangbax/invariants.hpp"
#include "yangbax/symmetry.hpp"

namespace yangbax {

/// Non-fatal diagnostics (degenerate strata, limits) appended by builders.
using Warnings = std::vector<std::string>;

// ---------------------------------------------------------------------------
// Five-vertex, first solution

struct FiveVertex1Params {
  Scalar d;
  Scalar q1;
  Scalar q2;
  Scalar q3;
  Scalar g1{1};
  Scalar g2{1};
  Scalar g3{1};
};

/// diag(1, d q_i, d / q_j, q_i / q_j) with (1 - d^2) g_i / g_j at (1,2).
VertexMatrix r5a(const Scalar& d, const Scalar& qi, const Scalar& qj, const Scalar& gi, const Scalar& gj);

/// A = R5a(1,2), B = R5a(1,3), C = R5a(2,3). Warns when d^2 = 1.
Triplet build_5v_first(const FiveVertex1Params& p, Warnings* warnings = nullptr);

/// Raw form before the color variables are introduced:
///   A = diag(1, x2, x3, x4) + a E_12,  B = diag(1, x2, y3, x4 y3 / x3) + b E_12,
///   C = diag(1, x2 / x4, y3, y3 / x3) + c E_12,
/// subject to a c = b (1 - x2 x3 / x4).
struct FiveVertexRawParams {
  Scalar x2;
  Scalar x3;
  Scalar x4;
  Scalar y3;
  Scalar a;
  Scalar b;
  Scalar c;
};

Triplet build_5v_raw(const FiveVertexRawParams& p, double atol = kDefaultTolerance);

/// The constant solution [[1,0,0,0],[0,p,1-pq,0],[0,0,q,0],[0,0,0,1]].
VertexMatrix five_vertex_constant(const Scalar& p, const Scalar& q);

// ---------------------------------------------------------------------------
// Five-vertex, free-fermion solution

struct ExplicitGauge {
  Scalar g12;
  Scalar g13;
  Scalar g23;
};

/// g_ij = (1 - p_i q_i)^alpha (1 - p_j q_j)^(1 - alpha). p3 and q1 enter only
/// through the gauge. Exact mode needs an integer alpha.
struct UniformGauge {
  Scalar alpha;
  Scalar p3{1};
  Scalar q1{1};
};

struct FiveVertexFFParams {
  Scalar p1;
  Scalar p2;
  Scalar q2;
  Scalar q3;
  std::variant<ExplicitGauge, UniformGauge> gauge;
};

/// diag(1, p_i, q_j, -p_i q_j) with g_ij at (1,2).
VertexMatrix r5b(const Scalar& pi, const Scalar& qj, const Scalar& gij);

/// A = R5b(1,2), B = R5b(1,3), C = R5b(2,3). Throws ConstraintViolation
/// unless g12 g23 = g13 (1 - p2 q2).
Triplet build_5v_ff(const FiveVertexFFParams& p, double atol = kDefaultTolerance);

ExplicitGauge uniform_gauge_values(const FiveVertexFFParams& p, const UniformGauge& u);

// ---------------------------------------------------------------------------
// Six-vertex, asymmetric solution

struct SixVertexRational {
  Scalar a;
  Scalar b;
  Scalar c;
  Scalar d;
  Scalar e;
  Scalar f;
};

struct SixVertexTrig {
  double gamma;
  std::complex<double> q1;
  std::complex<double> q2;
  std::complex<double> q3;
  double lambda_a;
  double lambda_c;
};

using SixVertexAsymParams = std::variant<SixVertexRational, SixVertexTrig>;

/// Six-vertex matrix with the given diagonal and unit off-diagonal pair.
VertexMatrix six_vertex(const std::array<Scalar, 4>& diag);

/// h = e f + (a d e - b c f)(e - f)
Scalar six_vertex_h(const SixVertexRational& p);

/// R(gamma, q', q, lambda):
///   diag(q/q' s(g-l)/s(g), q q' s(l)/s(g), s(l)/(q q' s(g)), q'/q s(g-l)/s(g)),
/// with s = sin and unit off-diagonal pair.
VertexMatrix r6v_trig(double gamma, std::complex<double> q_prime, std::complex<double> q, double lambda);

/// Rational: dp(C) = [a,b,c,d], dp(B) = [ae, bf/h, cf, de/h],
///           dp(A) = [e + bc(f-e), bd(f-e)/h, ca(f-e), (e + bc(f-e))/h].
/// Trig:     A = R(g,q1,q2,lA), B = R(g,q1,q3,lA+lC), C = R(g,q2,q3,lC).
Triplet build_6v_asym(const SixVertexAsymParams& p);

/// The two factors of the residual six-vertex equation, evaluated on the
/// diagonals of B and C (off-diagonal pairs must be 1):
///   first  = b1 b2 b3 + c3 c4 b1^2 b2 - c2 c3 b1 b2 b3 - c1 c4 b1 b2 b3 - c1 c2 b3 + c1 c2 b2 b3^2
///   second = 1 - c2 c3 - c1 c4
std::pair<Scalar, Scalar> six_vertex_factors(const Triplet& t);

/// Residuals of the circle relations after writing each slot as
///   R11 = u (d/d')^(1/4), R22 = v (d d')^(1/4), R33 = v (d d')^(-1/4), R44 = u (d'/d)^(1/4)
/// with principal fourth roots.
struct TrigRelationResiduals {
  /// |sqrt(Delta) -+ 2uv/(u^2+v^2-1)| per slot, the smaller of the two signs.
  std::array<double, 3> curve{};
  /// True where only the opposite sign of sqrt(Delta) matches.
  std::array<bool, 3> sign_flipped{};
  /// max |2uv/(u^2+v^2-1) over slots - value on A|.
  double curve_spread = 0.0;
  double v_a = 0.0;  ///< |v_A - (v_B u_C - v_C u_B)|
  double u_b = 0.0;  ///< |u_B - (u_A u_C - v_A v_C)|

  double max() const;
};

TrigRelationResiduals trig_relations_check(const Triplet& t);

// ---------------------------------------------------------------------------
// Six-vertex, free-fermion solution

using Mat2 = SquareMatrix<2>;

struct SL2Pair {
  Mat2 hat_b;
  Mat2 hat_c;
};

/// [[u,w],[s,t]] -> diag(u, -w, s, t) with unit off-diagonal pair.
VertexMatrix sl2_embed(const Mat2& hat);

/// (sl2_embed(C^-1 B), sl2_embed(B), sl2_embed(C)). Throws
/// ConstraintViolation unless det = 1 for both inputs.
Triplet build_6v_ff(const SL2Pair& p, double atol = kDefaultTolerance);

/// diag(q, 1/q) rot(theta) diag(1/q', q').
Mat2 euler_sl2(std::complex<double> q, double theta, std::complex<double> q_prime);

// ---------------------------------------------------------------------------
// Eight-vertex

/// With E = v - xyz:
///   A = [[1,0,0,a],[0,x,b(v-x)/(cy),0],[0,cE/(bz),x,0],[(v-y)(v-z)/(ayz),0,0,1]]
///   B = [[1,0,0,b],[0,y,a(v-x)/(cx),0],[0,c(v-z)/(az),y,0],[(v-y)E/(bxz),0,0,1]]
///   C = [[1,0,0,c],[0,z,aE/(bx),0],[0,b(v-z)/(ay),z,0],[(v-y)(v-x)/(cxy),0,0,1]]
/// Throws ConstraintViolation naming a vanishing denominator factor. Warns
/// when v hits x, y, z or xyz (an anti-diagonal entry vanishes).
Triplet build_8v(const EightVertexParams& p, Warnings* warnings = nullptr);

/// Parameter maps induced by the generators, so that
/// build_8v(k_map_8v(g, p)) ~ apply_K(g, build_8v(p)) slot by slot.
EightVertexParams k_map_8v(Generator gen, const EightVertexParams& p);

struct EightVertexDerived {
  Scalar sqrt_xyz;
  std::array<Scalar, 4> q;  ///< (v-x, v-xyz, v-z, v-y) / sqrt(xyz)
  Scalar Lambda;            ///< root of prod(Lambda - q_i) = 1
  Scalar Delta1;
  Scalar Delta2;
};

/// Complex mode takes the principal sqrt(xyz) and picks Lambda among the
/// quartic roots by the residual of x = (Lambda - q1)(Lambda - q2). Exact
/// mode needs xyz to be a perfect square and uses Lambda = v / sqrt(xyz).
EightVertexDerived derived_8v(const EightVertexParams& p);

/// The four roots of prod(L - q_i) - 1, from companion-matrix eigenvalues.
std::array<std::complex<double>, 4> lambda_roots(const std::array<Scalar, 4>& q);

/// x = (L-q1)(L-q2), y = (L-q4)(L-q2), z = (L-q3)(L-q2), v = L(L-q2);
/// a = b = c = 1.
EightVertexParams xyzv_from_q(const Scalar& Lambda, const std::array<Scalar, 4>& q);

enum class GaugeFunction { unit, tau, baxter };
enum class QBranch { plus, minus };

std::string_view to_string(GaugeFunction f);
GaugeFunction gauge_function_from_string(std::string_view s);

/// Roots of tau Q^2 - (tau^2 + tau Delta1 + 1) Q + tau Delta2 = 0; plus adds
/// the principal square root of the discriminant.
Scalar q_root(const Scalar& tau, const Scalar& Delta1, const Scalar& Delta2, QBranch branch);

/// [[1,0,0,f],[0,tau,w f Q,0],[0,tau/(w f),tau,0],[tau Delta2/(f Q),0,0,1]]
/// with f(tau) in {1, tau, sqrt(tau Delta2 / Q)}.
VertexMatrix r8v_gaugefixed(const Scalar& tau, const Scalar& Delta1, const Scalar& Delta2, GaugeFunction f,
                            const Scalar& omega, QBranch branch = QBranch::plus);

/// a = sqrt(x/(q1 q2)) phi1 phi2, b = sqrt(y/(q1 q3)) phi1 phi3,
/// c = sqrt(z/(q2 q3)) phi2 phi3.
std::array<Scalar, 3> symmetric_gauge_abc(const Scalar& x, const Scalar& y, const Scalar& z, const Scalar& v,
                                          const Scalar& phi1, const Scalar& phi2, const Scalar& phi3);

// ---------------------------------------------------------------------------
// Baxter's elliptic parametrization

struct BaxterParams {
  double sigma;
  double chi;
  double gamma;
  double k;

  double rho() const { return sigma + chi; }
};

/// [[s(g-a),0,0,k s(a)s(g)s(g-a)],[0,s(a),s(g),0],[0,s(g),s(a),0],[k s(a)s(g)s(g-a),0,0,s(g-a)]]
/// with s = sn(., k). Throws Error unless 0 <= k < 1.
VertexMatrix r_baxter(double alpha, double gamma, double k);

/// A = R(chi), B = R(sigma + chi), C = R(sigma).
Triplet build_8v_baxter(const BaxterParams& p);

/// x = s(chi)/s(g-chi), y = s(rho)/s(g-rho), z = s(sigma)/s(g-sigma),
/// v = s(rho)[s(sigma)s(chi) + s(g)s(g-rho)] / [s(g-chi)s(g-rho)s(g-sigma)],
/// a = b = c = 1.
EightVertexParams baxter_to_xyzv(const BaxterParams& p);

/// Delta1 = 2 cn(g) dn(g), Delta2 = k^2 sn(g)^4 at the Baxter point.
EightVertexInvariants baxter_invariants(double gamma, double k);

/// sn(g)^2 / (sn(a) sn(g-a)).
double elliptic_Q(double alpha, double gamma, double k);

/// Gauge-invariant coordinates of an eight-vertex triplet. Each matrix is
/// normalized by its (0,0) entry; a, b, c are the normalized (0,3) entries
/// and v is recovered from the best conditioned of three anti-diagonal
/// product identities.
EightVertexParams eta_coordinates(const Triplet& t, double atol = kDefaultTolerance);

struct EllipticActionReport {
  /// max |eta(K_b K_a T) - eta(prediction)| with chi, rho shifted by g + iK'.
  double ka_kb_error = 0.0;
  /// Same for K_c then K_b, with sigma and rho shifted.
  double kb_kc_error = 0.0;
  bool passed = false;
};

/// Applies K_a then K_b (and K_c then K_b) to the Baxter triplet and compares
/// eta coordinates with the shifted elliptic parameters, using
/// sn(u + g + iK') = 1/(k sn(u + g)) and sn(-u - iK') = -1/(k sn u).
EllipticActionReport aut_elliptic_action_check(const BaxterParams& p, double atol = 1e-8);

}  // namespace yangbax
