// Acceptance run: one PASS/FAIL line per criterion, details indented below it.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "../support/elliptic_oracle.hpp"
#include "yangbax/cli.hpp"
#include "yangbax/document.hpp"
#include "yangbax/elliptic.hpp"
#include "yangbax/families.hpp"

using namespace yangbax;

namespace {

constexpr int kSamples = 100;
constexpr double kFloatResidual = 1e-9;

std::mt19937 rng(20240601);

long draw() {
  std::uniform_int_distribution<long> d(1, 18);
  const long n = d(rng) - 10;
  return n >= 0 ? n + 1 : n;
}

double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

Mat2 unimodular() {
  for (;;) {
    const Scalar a = draw(), b = draw(), c = draw();
    const Scalar d = (Scalar(1) + b * c) / a;
    if (!d.is_zero(0.0)) return Mat2{{a, b}, {c, d}};
  }
}

VertexMatrix invertible() {
  for (;;) {
    VertexMatrix m = VertexMatrix::zero(Field::rational);
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 4; ++c) m(r, c) = draw();
    if (!m.determinant().is_zero(0.0)) return m;
  }
}

struct Family {
  std::string name;
  bool exact;
  std::function<Triplet()> sample;
};

Triplet sample_5v1() { return build_5v_first({draw(), draw(), draw(), draw(), draw(), draw(), draw()}); }

Triplet sample_5vff_explicit() {
  const Scalar p1 = draw(), p2 = draw(), q2 = draw(), q3 = draw(), g12 = draw(), g13 = draw();
  return build_5v_ff({p1, p2, q2, q3, ExplicitGauge{g12, g13, g13 * (Scalar(1) - p2 * q2) / g12}}, 0.0);
}

Triplet sample_5vff_uniform() {
  std::uniform_int_distribution<long> alpha(-2, 3);
  return build_5v_ff({draw(), draw(), draw(), draw(), UniformGauge{alpha(rng), draw(), draw()}}, 0.0);
}

Triplet sample_6v_rational() {
  return build_6v_asym(SixVertexRational{draw(), draw(), draw(), draw(), draw(), draw()});
}

Triplet sample_6vff() { return build_6v_ff({unimodular(), unimodular()}, 0.0); }

EightVertexParams sample_8v_params() { return {draw(), draw(), draw(), draw(), draw(), draw(), draw()}; }

Triplet sample_8v() { return build_8v(sample_8v_params()); }

Triplet sample_6v_trig() {
  return build_6v_asym(SixVertexTrig{uniform(0.1, std::numbers::pi - 0.1), uniform(0.5, 2.0), uniform(0.5, 2.0),
                                     uniform(0.5, 2.0), uniform(-3.0, 3.0), uniform(-3.0, 3.0)});
}

BaxterParams sample_baxter_params() { return {uniform(0.05, 1.0), uniform(0.05, 1.0), uniform(0.2, 2.0), uniform(0.0, 0.95)}; }

Triplet sample_baxter() { return build_8v_baxter(sample_baxter_params()); }

std::vector<Family> rational_families() {
  return {{"5v1", true, sample_5v1},
          {"5vff explicit", true, sample_5vff_explicit},
          {"5vff uniform", true, sample_5vff_uniform},
          {"6v-asym rational", true, sample_6v_rational},
          {"6vff", true, sample_6vff},
          {"8v", true, sample_8v}};
}

std::vector<Family> float_families() {
  return {{"6v-asym trig", false, sample_6v_trig}, {"8v-baxter", false, sample_baxter}};
}

// Draws until a non-degenerate sample is found; rejections are counted.
template <typename F>
auto draw_valid(F&& f, int& rejected) {
  for (;;) {
    try {
      return f();
    } catch (const Error&) {
      ++rejected;
    }
  }
}

Triplet normalized(const Triplet& t) {
  return {projective_normal_form(t.a), projective_normal_form(t.b), projective_normal_form(t.c)};
}

bool residual_ok(const Triplet& t, bool exact) {
  if (exact) return ybe_residual(t).is_zero(0.0);
  return ybe_residual(normalized(t)).max_abs() < kFloatResidual;
}

struct Report {
  std::vector<std::string> lines;
  bool ok = true;

  void note(const std::string& s) { lines.push_back(s); }
  void check(bool cond, const std::string& s) {
    ok = ok && cond;
    lines.push_back(std::string(cond ? "ok    " : "FAIL  ") + s);
  }
};

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

Report criterion1() {
  Report r;
  const auto start = std::chrono::steady_clock::now();
  for (const auto& fam : rational_families()) {
    int rejected = 0, good = 0;
    for (int i = 0; i < kSamples; ++i) {
      const Triplet t = draw_valid(fam.sample, rejected);
      good += ybe_residual(t).is_zero(0.0) ? 1 : 0;
    }
    r.check(good == kSamples, fam.name + ": " + std::to_string(good) + "/" + std::to_string(kSamples) +
                                  " exact zero (rejected " + std::to_string(rejected) + ")");
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.check(secs < 5.0, "runtime " + fmt(secs) + " s");
  return r;
}

Report criterion2() {
  Report r;
  for (const auto& fam : float_families()) {
    int rejected = 0;
    double worst = 0.0;
    for (int i = 0; i < kSamples; ++i) {
      const Triplet t = draw_valid(fam.sample, rejected);
      worst = std::max(worst, ybe_residual(t).max_abs());
    }
    r.check(worst < kFloatResidual, fam.name + ": max residual " + fmt(worst) + " (rejected " + std::to_string(rejected) + ")");
  }
  return r;
}

Report criterion3() {
  Report r;
  constexpr int n = 20;
  bool order_matters = false;
  auto families = rational_families();
  for (const auto& f : float_families()) families.push_back(f);
  for (const auto& fam : families) {
    int rejected = 0, good = 0, involutive = 0;
    for (int i = 0; i < n; ++i) {
      const auto sample = [&] {
        const Triplet t = fam.sample();
        std::array<Triplet, 3> k{apply_K(Generator::ka, t), apply_K(Generator::kb, t), apply_K(Generator::kc, t)};
        return std::pair{t, k};
      };
      const auto [t, k] = draw_valid(sample, rejected);
      bool all = true, inv = true;
      for (std::size_t g = 0; g < 3; ++g) {
        const auto gen = static_cast<Generator>(g);
        all = all && residual_ok(k[g], fam.exact);
        inv = inv && projective_eq(apply_K(gen, k[g]), t, 1e-9);
        const Triplet other = apply_K(gen, t, Composition::left_to_right);
        if (!projective_eq(other, k[g], 1e-9) || !residual_ok(other, fam.exact)) order_matters = true;
      }
      good += all ? 1 : 0;
      involutive += inv ? 1 : 0;
    }
    r.check(good == n && involutive == n, fam.name + ": " + std::to_string(good) + "/" + std::to_string(n) +
                                              " preserved, " + std::to_string(involutive) + "/" + std::to_string(n) +
                                              " involutive (rejected " + std::to_string(rejected) + ")");
  }
  r.check(order_matters,
          "left-to-right reading fails somewhere: t_r I t_l = t_l I t_r identically, so both readings agree");
  return r;
}

Report criterion4() {
  Report r;
  int good = 0;
  for (int i = 0; i < 50; ++i) {
    const GaugeElement g(unimodular(), unimodular(), unimodular(), 0.0);
    const Triplet t{invertible(), invertible(), invertible()};
    bool all = true;
    for (const Generator k : {Generator::ka, Generator::kb, Generator::kc}) {
      all = all && projective_eq(apply_K(k, apply_gauge(g, t)), apply_gauge(conjugate_gauge(k, g), apply_K(k, t)));
    }
    good += all ? 1 : 0;
  }
  r.check(good == 50, std::to_string(good) + "/50 gauge elements intertwine on random triplets");
  return r;
}

Report criterion5() {
  Report r;
  int rejected = 0, good = 0;
  for (int i = 0; i < kSamples; ++i) {
    const auto sample = [&] {
      const EightVertexParams p = sample_8v_params();
      const EightVertexInvariants e = eight_vertex_invariants_from_params(p);
      std::array<EightVertexInvariants, 3> m{};
      for (std::size_t g = 0; g < 3; ++g) {
        m[g] = eight_vertex_invariants_from_params(k_map_8v(static_cast<Generator>(g), p));
      }
      return std::tuple{p, e, m};
    };
    const auto [p, e, m] = draw_valid(sample, rejected);
    bool all = true;
    for (const auto& x : m) all = all && x.Delta1 == e.Delta1 && x.Delta2 == e.Delta2;
    for (const auto& q : {EightVertexParams{p.a, p.b, p.c, p.y, p.x, p.z, p.v},
                          EightVertexParams{p.a, p.b, p.c, p.z, p.y, p.x, p.v},
                          EightVertexParams{p.a, p.b, p.c, p.y, p.z, p.x, p.v}}) {
      const EightVertexInvariants f = eight_vertex_invariants_from_params(q);
      all = all && f.Delta1 == e.Delta1 && f.Delta2 == e.Delta2;
    }
    good += all ? 1 : 0;
  }
  r.check(good == kSamples, std::to_string(good) + "/" + std::to_string(kSamples) +
                                " samples invariant under K-maps and permutations (rejected " + std::to_string(rejected) + ")");
  const EightVertexParams ref{1, 1, 1, 2, 3, 5, 7};
  const EightVertexInvariants e = eight_vertex_invariants_from_params(ref);
  const Scalar d1 = Scalar::rational(-91, 15), d2 = Scalar::rational(-46, 45);
  r.check(e.Delta1 == d1 && e.Delta2 == d2, "parameters give Delta1 = " + e.Delta1.to_string() + ", Delta2 = " + e.Delta2.to_string());
  const Triplet t = build_8v(ref);
  for (std::size_t s = 0; s < 3; ++s) {
    const EightVertexInvariants m = eight_vertex_invariants_from_matrix(t[s]);
    r.check(m.Delta1 == d1 && m.Delta2 == d2, std::string("matrix ") + "ABC"[s] + " gives " + m.Delta1.to_string() +
                                                  ", " + m.Delta2.to_string());
  }
  return r;
}

Report criterion6() {
  Report r;
  int rejected = 0, delta_equal = 0, cross = 0, factor = 0;
  for (int i = 0; i < kSamples; ++i) {
    const auto sample = [&] {
      const Triplet t = sample_6v_rational();
      std::array<SixVertexInvariants, 3> inv{six_vertex_invariants(t.a), six_vertex_invariants(t.b),
                                             six_vertex_invariants(t.c)};
      for (const auto& x : inv) {
        if (!x.Delta || !x.delta || !x.delta_prime) throw Error("degenerate invariants");
      }
      return std::pair{t, inv};
    };
    const auto [t, inv] = draw_valid(sample, rejected);
    delta_equal += (*inv[0].Delta == *inv[1].Delta && *inv[1].Delta == *inv[2].Delta) ? 1 : 0;
    cross += (*inv[2].delta == *inv[1].delta && *inv[2].delta_prime == *inv[0].delta &&
              *inv[1].delta_prime == *inv[0].delta_prime)
                 ? 1
                 : 0;
    factor += six_vertex_factors(t).first.is_zero(0.0) ? 1 : 0;
  }
  const std::string n = "/" + std::to_string(kSamples);
  r.check(delta_equal == kSamples, "Delta(A) = Delta(B) = Delta(C): " + std::to_string(delta_equal) + n +
                                       " (rejected " + std::to_string(rejected) + ")");
  r.check(cross == kSamples, "delta(C) = delta(B), delta'(C) = delta(A), delta'(B) = delta'(A): " + std::to_string(cross) + n);
  r.check(factor == kSamples, "asymmetric family: first factor vanishes " + std::to_string(factor) + n);
  int ff = 0, ff_rejected = 0;
  for (int i = 0; i < kSamples; ++i) {
    const Triplet t = draw_valid(sample_6vff, ff_rejected);
    ff += six_vertex_factors(t).second.is_zero(0.0) ? 1 : 0;
  }
  r.check(ff == kSamples, "free-fermion family: second factor vanishes " + std::to_string(ff) + n);
  const Triplet ref = build_6v_asym(SixVertexRational{1, 2, 3, 4, 5, 6});
  bool ref_ok = true;
  for (std::size_t s = 0; s < 3; ++s) ref_ok = ref_ok && *six_vertex_invariants(ref[s]).Delta == Scalar::rational(32, 27);
  r.check(ref_ok, "(1,2,3,4,5,6) gives Delta = " + six_vertex_invariants(ref.c).Delta->to_string() + " on every slot");
  return r;
}

Report criterion7() {
  Report r;
  int good = 0;
  for (int i = 0; i < kSamples; ++i) {
    const double gamma = uniform(0.1, std::numbers::pi - 0.1), lambda = uniform(-3.0, 3.0);
    const std::complex<double> q(uniform(0.5, 2.0)), qp(uniform(0.5, 2.0));
    const VertexMatrix m = r6v_trig(gamma, qp, q, lambda);
    const auto step = [](const VertexMatrix& x) { return transpose_left(projective_inverse(x)); };
    good += projective_eq(step(step(m)), r6v_trig(gamma, qp, q, lambda + 2 * gamma), 1e-10) ? 1 : 0;
  }
  r.check(good == kSamples, "(t_l I)^2 shifts lambda by 2 gamma: " + std::to_string(good) + "/" + std::to_string(kSamples));
  const auto trig = [](double gamma) { return build_6v_asym(SixVertexTrig{gamma, 1.0, 1.0, 1.0, 0.3, 0.2}); };
  const OrbitResult closed = orbit(trig(std::numbers::pi / 4), parse_word("a,b,a,b"));
  r.check(closed.period && *closed.period == 4,
          "gamma = pi/4: period " + (closed.period ? std::to_string(*closed.period) : std::string("none")));
  const OrbitResult open = orbit(trig(1.0), parse_word("a,b,a,b"), 512);
  r.check(!open.period, "gamma = 1: " + (open.period ? "period " + std::to_string(*open.period) : std::string("no period within 512")));
  return r;
}

Report criterion8() {
  Report r;
  using elliptic::cn;
  using elliptic::dn;
  using elliptic::sn;
  const BaxterParams p{0.3, 0.5, 1.1, 0.6};
  const EightVertexInvariants e = eight_vertex_invariants_from_params(baxter_to_xyzv(p));
  const double d1 = e.Delta1.to_complex().real(), d2 = e.Delta2.to_complex().real();
  const double target1 = -2 * cn(p.gamma, p.k) * dn(p.gamma, p.k);
  const double s = sn(p.gamma, p.k);
  const double target2 = s * s * s * s * p.k * p.k;
  r.check(std::abs(d1 - target1) < 1e-10,
          "Delta1 = " + fmt(d1) + " vs -2 cn dn = " + fmt(target1) + " (+2 cn dn off by " + fmt(std::abs(d1 + target1)) + ")");
  r.check(std::abs(d2 - target2) < 1e-10, "Delta2 = k^2 sn^4: error " + fmt(std::abs(d2 - target2)));
  const double res = ybe_residual(build_8v_baxter(p)).max_abs();
  r.check(res < kFloatResidual, "Baxter triplet residual " + fmt(res));
  const EllipticActionReport act = aut_elliptic_action_check(p, 1e-8);
  r.check(act.passed, "K_a K_b shift: errors " + fmt(act.ka_kb_error) + ", " + fmt(act.kb_kc_error));
  const Triplet zero = build_8v_baxter({p.sigma, p.chi, p.gamma, 0.0});
  double corner = 0.0;
  for (std::size_t i = 0; i < 3; ++i) corner = std::max({corner, zero[i](0, 3).abs(), zero[i](3, 0).abs()});
  r.check(corner < 1e-14, "k = 0 anti-corners " + fmt(corner));
  return r;
}

Report criterion9() {
  Report r;
  double pyth = 0.0, add = 0.0, quarter = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double u = uniform(-10.0, 10.0), v = uniform(-10.0, 10.0), k = uniform(0.0, 0.99);
    const auto a = elliptic::jacobi(u, k), b = elliptic::jacobi(v, k);
    pyth = std::max({pyth, std::abs(a.sn * a.sn + a.cn * a.cn - 1), std::abs(a.dn * a.dn + k * k * a.sn * a.sn - 1)});
    const double rhs = (a.sn * b.cn * b.dn + b.sn * a.cn * a.dn) / (1 - k * k * a.sn * a.sn * b.sn * b.sn);
    add = std::max(add, std::abs(elliptic::sn(u + v, k) - rhs));
    const double K = elliptic::complete_K(k);
    const auto q = elliptic::jacobi(K, k);
    quarter = std::max({quarter, std::abs(q.sn - 1), std::abs(q.dn - std::sqrt(1 - k * k)),
                        std::abs(elliptic::sn(2 * K, k)), std::abs(elliptic::cn(2 * K, k) + 1)});
  }
  r.check(pyth < 1e-11, "sn^2 + cn^2, dn^2 + k^2 sn^2: " + fmt(pyth));
  r.check(add < 1e-11, "addition theorem: " + fmt(add));
  r.check(quarter < 1e-11, "quarter and half periods: " + fmt(quarter));
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const double u = uniform(-3.0, 3.0), k = uniform(0.0, 0.9);
    const auto a = elliptic::jacobi(u, k), o = oracle::jacobi(u, k);
    worst = std::max({worst, std::abs(a.sn - o.sn), std::abs(a.cn - o.cn), std::abs(a.dn - o.dn)});
  }
  r.check(worst < 1e-10, "quadrature inversion oracle: " + fmt(worst));
  return r;
}

std::string read(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Report criterion10() {
  Report r;
  const std::string dir = YANGBAX_GOLDEN_DIR;
  const auto in = [&](const char* name) { return dir + "/" + name; };
  struct Golden {
    std::vector<std::string> args;
    const char* file;
  };
  const std::vector<Golden> goldens{
      {{"build", "8v", "x=2", "y=3", "z=5", "v=7"}, "build_8v.json"},
      {{"build", "6v-asym-rational", "a=1", "b=2", "c=3", "d=4", "e=5", "f=6"}, "build_6v_rational.json"},
      {{"build", "5v1", "d=2", "q1=3", "q2=5", "q3=7"}, "build_5v1.json"},
      {{"verify", "--in", in("build_8v.json")}, "verify_8v.txt"},
      {{"invariants", "--in", in("build_8v.json")}, "invariants_8v.json"},
      {{"invariants", "--in", in("build_6v_rational.json")}, "invariants_6v.json"},
      {{"transform", "--in", in("build_8v.json"), "--word", "a"}, "transform_word_a.json"},
      {{"transform", "--in", in("build_8v.json"), "--gauge", "t1=2,t2=3,t3=1/5"}, "transform_gauge.json"},
      {{"orbit", "--in", in("build_8v.json"), "--word", "a"}, "orbit_8v.csv"},
      {{"orbit", "--in", in("build_5v1.json"), "--word", "b,a,b,a", "--max-iter", "3"}, "orbit_5v1.csv"},
      {{"convert", "--from", "xyzv", "--to", "q", "x=1", "y=4", "z=9", "v=10"}, "convert_xyzv_q.json"},
      {{"convert", "--from", "q", "--to", "xyzv", "--in", in("convert_xyzv_q.json")}, "convert_q_xyzv.json"},
  };
  int matched = 0;
  for (const auto& g : goldens) {
    std::ostringstream out, err;
    const int code = cli::run(g.args, out, err);
    const bool ok = code == cli::kSuccess && out.str() == read(in(g.file));
    if (!ok) r.note("mismatch: " + std::string(g.file));
    matched += ok ? 1 : 0;
  }
  r.check(matched == static_cast<int>(goldens.size()),
          "golden files: " + std::to_string(matched) + "/" + std::to_string(goldens.size()));
  {
    std::ostringstream out, err;
    r.check(cli::run({"selftest", "--seed", "1", "--samples", "20"}, out, err) == cli::kSuccess, "selftest command");
  }
  int round = 0;
  const std::vector<const char*> docs{"build_8v.json", "build_6v_rational.json", "build_5v1.json",
                                      "transform_word_a.json", "transform_gauge.json"};
  for (const char* name : docs) {
    const std::string text = read(in(name));
    round += dump_document(parse_document(text)) == text ? 1 : 0;
  }
  r.check(round == static_cast<int>(docs.size()),
          "rational JSON round trip bit-exact: " + std::to_string(round) + "/" + std::to_string(docs.size()));
  struct Code {
    std::vector<std::string> args;
    int expected;
  };
  const std::vector<Code> codes{
      {{"build", "5v1", "d=1", "q1=3", "q2=5", "q3=7"}, cli::kSuccess},
      {{"build", "5vff", "p1=2", "p2=3", "q2=5", "q3=7", "g12=1", "g13=1", "g23=1"}, cli::kConstraintViolation},
      {{"build", "unknown"}, cli::kUsageError},
      {{"build", "8v", "x=2"}, cli::kUsageError},
      {{"transform", "--in", in("build_8v.json"), "--word", "b"}, cli::kConstraintViolation},
      {{"convert", "--from", "xyzv", "--to", "q", "x=2", "y=3", "z=5", "v=7"}, cli::kConstraintViolation},
  };
  int honored = 0;
  for (const auto& c : codes) {
    std::ostringstream out, err;
    honored += cli::run(c.args, out, err) == c.expected ? 1 : 0;
  }
  {
    TripletDocument doc = parse_document(read(in("build_8v.json")));
    doc.triplet.a(0, 0) = 2;
    const std::string tmp = (std::filesystem::temp_directory_path() / "yangbax_acceptance_bad.json").string();
    std::ofstream(tmp) << dump_document(doc);
    std::ostringstream out, err;
    honored += cli::run({"verify", "--in", tmp}, out, err) == cli::kVerificationFailed ? 1 : 0;
    std::filesystem::remove(tmp);
  }
  r.check(honored == static_cast<int>(codes.size()) + 1,
          "exit codes honored: " + std::to_string(honored) + "/" + std::to_string(codes.size() + 1));
  return r;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, Report (*)()>> criteria{
      {"exact zero residual, rational families", criterion1},
      {"float residual, trig and Baxter families", criterion2},
      {"inversion group preserves solutions", criterion3},
      {"gauge compatibility", criterion4},
      {"eight-vertex invariant constancy", criterion5},
      {"six-vertex structure", criterion6},
      {"spectral shift and orbit periods", criterion7},
      {"elliptic consistency", criterion8},
      {"elliptic function quality", criterion9},
      {"command line", criterion10},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Report r;
    try {
      r = criteria[i].second();
    } catch (const std::exception& e) {
      r.check(false, std::string("exception: ") + e.what());
    }
    std::cout << (r.ok ? "PASS" : "FAIL") << "  " << i + 1 << "  " << criteria[i].first << "\n";
    for (const auto& line : r.lines) std::cout << "        " << line << "\n";
    failed += r.ok ? 0 : 1;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
