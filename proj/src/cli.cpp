#include "yangbax/cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <numbers>
#include <optional>
#include <random>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "yangbax/document.hpp"
#include "yangbax/elliptic.hpp"
#include "yangbax/families.hpp"

namespace yangbax::cli {

using nlohmann::ordered_json;

namespace {

struct UsageError : Error {
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw UsageError("cannot write '" + path + "'");
  f << text;
}

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

/// Rationals as "p/q"; complex values as a plain real when the imaginary part
/// is negligible, otherwise "re+imi".
std::string format_scalar(const Scalar& s) {
  if (s.is_exact()) return s.to_string();
  const auto z = s.to_complex();
  if (std::abs(z.imag()) <= 1e-12 * (1.0 + std::abs(z.real()))) return format_double(z.real());
  return format_double(z.real()) + (z.imag() < 0 ? "" : "+") + format_double(z.imag()) + "i";
}

/// key=value arguments with bookkeeping of unused keys.
class ParamMap {
 public:
  explicit ParamMap(const std::vector<std::string>& items) {
    for (const auto& item : items) {
      const auto eq = item.find('=');
      if (eq == std::string::npos || eq == 0) throw UsageError("expected key=value, got '" + item + "'");
      kv_[item.substr(0, eq)] = item.substr(eq + 1);
    }
  }

  void merge_json(const ordered_json& j) {
    if (!j.is_object()) throw UsageError("parameter file must hold a JSON object");
    for (const auto& [k, v] : j.items()) {
      if (kv_.count(k) != 0) continue;
      kv_[k] = v.is_string() ? v.get<std::string>() : v.dump();
    }
  }

  bool has(const std::string& key) const { return kv_.count(key) != 0; }

  /// Marks derived keys from a previous convert output as consumed.
  void ignore(std::initializer_list<const char*> keys) {
    for (const char* k : keys) used_.insert(k);
  }

  const std::string& text(const std::string& key) {
    const auto it = kv_.find(key);
    if (it == kv_.end()) throw UsageError("missing parameter '" + key + "'");
    used_.insert(key);
    return it->second;
  }

  Scalar scalar(const std::string& key, Field mode) {
    const std::string& t = text(key);
    if (mode == Field::rational) {
      if (t.find("pi") != std::string::npos) throw UsageError("'" + key + "' is not rational; use --mode complex");
      try {
        return Scalar::parse_rational(t);
      } catch (const ParseError& e) {
        throw UsageError(key + ": " + e.what());
      }
    }
    return Scalar::complex(parse_real(t));
  }

  Scalar scalar_or(const std::string& key, Field mode, long fallback) {
    return has(key) ? scalar(key, mode) : Scalar::from_long(fallback, mode);
  }

  double real(const std::string& key) { return parse_real(text(key)); }

  double real_or(const std::string& key, double fallback) { return has(key) ? real(key) : fallback; }

  void check_all_used() const {
    for (const auto& [k, v] : kv_) {
      if (used_.count(k) == 0) throw UsageError("unknown parameter '" + k + "'");
    }
  }

  ordered_json to_json() const {
    ordered_json j = ordered_json::object();
    for (const auto& [k, v] : kv_) j[k] = v;
    return j;
  }

 private:
  std::map<std::string, std::string> kv_;
  std::set<std::string> used_;
};

const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names{"5v1", "5vff", "6v-asym-rational", "6v-asym-trig", "6vff", "8v", "8v-baxter"};
  return names;
}

TripletDocument build_family(const std::string& family, ParamMap& p, Field mode, Warnings& warnings, double tol) {
  TripletDocument doc;
  doc.scalar_mode = mode;
  if (family == "5v1") {
    doc.triplet = build_5v_first({p.scalar("d", mode), p.scalar("q1", mode), p.scalar("q2", mode), p.scalar("q3", mode),
                                  p.scalar_or("g1", mode, 1), p.scalar_or("g2", mode, 1), p.scalar_or("g3", mode, 1)},
                                 &warnings);
  } else if (family == "5vff") {
    FiveVertexFFParams f{p.scalar("p1", mode), p.scalar("p2", mode), p.scalar("q2", mode), p.scalar("q3", mode),
                         ExplicitGauge{}};
    if (p.has("alpha")) {
      f.gauge = UniformGauge{p.scalar("alpha", mode), p.scalar_or("p3", mode, 1), p.scalar_or("q1", mode, 1)};
    } else {
      f.gauge = ExplicitGauge{p.scalar("g12", mode), p.scalar("g13", mode), p.scalar("g23", mode)};
    }
    doc.triplet = build_5v_ff(f, tol);
  } else if (family == "6v-asym-rational") {
    doc.triplet = build_6v_asym(SixVertexRational{p.scalar("a", mode), p.scalar("b", mode), p.scalar("c", mode),
                                                  p.scalar("d", mode), p.scalar("e", mode), p.scalar("f", mode)});
  } else if (family == "6v-asym-trig") {
    doc.scalar_mode = Field::complex;
    doc.triplet = build_6v_asym(SixVertexTrig{p.real("gamma"), p.real_or("q1", 1.0), p.real_or("q2", 1.0),
                                              p.real_or("q3", 1.0), p.real("lambdaA"), p.real("lambdaC")});
  } else if (family == "6vff") {
    const auto m = [&](const char* prefix) {
      const std::string s(prefix);
      return Mat2{{p.scalar(s + "11", mode), p.scalar(s + "12", mode)}, {p.scalar(s + "21", mode), p.scalar(s + "22", mode)}};
    };
    doc.triplet = build_6v_ff({m("b"), m("c")}, tol);
  } else if (family == "8v") {
    doc.triplet = build_8v({p.scalar_or("a", mode, 1), p.scalar_or("b", mode, 1), p.scalar_or("c", mode, 1),
                            p.scalar("x", mode), p.scalar("y", mode), p.scalar("z", mode), p.scalar("v", mode)},
                           &warnings);
  } else if (family == "8v-baxter") {
    doc.scalar_mode = Field::complex;
    doc.triplet = build_8v_baxter({p.real("sigma"), p.real("chi"), p.real("gamma"), p.real("k")});
  } else {
    std::string names;
    for (const auto& n : family_names()) names += (names.empty() ? "" : ", ") + n;
    throw UsageError("unknown family '" + family + "' (expected one of " + names + ")");
  }
  p.check_all_used();
  doc.provenance = {{"family", family}, {"params", p.to_json()}};
  return doc;
}

ordered_json matrix_invariants(const VertexMatrix& m, double tol) {
  ordered_json j;
  const PVector p = p_polys(m);
  j["p1"] = scalar_to_json(p.p1);
  j["p2"] = scalar_to_json(p.p2);
  j["p5"] = scalar_to_json(p.p5);
  j["p6"] = scalar_to_json(p.p6);
  j["p9"] = scalar_to_json(p.p9);
  const SixVertexInvariants six = six_vertex_invariants(m, tol);
  if (six.Delta) j["Delta"] = scalar_to_json(*six.Delta);
  if (six.delta) j["delta"] = scalar_to_json(*six.delta);
  if (six.delta_prime) j["delta_prime"] = scalar_to_json(*six.delta_prime);
  if (!m(0, 3).is_zero(0.0) || !m(3, 0).is_zero(0.0)) {
    try {
      const EightVertexInvariants e = eight_vertex_invariants_from_matrix(m, tol);
      j["Delta1"] = scalar_to_json(e.Delta1);
      j["Delta2"] = scalar_to_json(e.Delta2);
    } catch (const ConstraintViolation&) {
    }
  }
  j["free_fermion"] = is_free_fermion(m);
  return j;
}

std::optional<EightVertexInvariants> try_eight_vertex(const VertexMatrix& m, double tol) {
  if (m(0, 3).is_zero(0.0) && m(3, 0).is_zero(0.0)) return std::nullopt;
  try {
    return eight_vertex_invariants_from_matrix(m, tol);
  } catch (const ConstraintViolation&) {
    return std::nullopt;
  }
}

GaugeElement parse_gauge(const std::string& spec, Field mode) {
  std::vector<std::string> items;
  std::stringstream ss(spec);
  for (std::string item; std::getline(ss, item, ',');) {
    if (!item.empty()) items.push_back(item);
  }
  ParamMap p(items);
  DiagonalGauge g{p.scalar("t1", mode), p.scalar("t2", mode), p.scalar("t3", mode)};
  p.check_all_used();
  return g.to_gauge();
}

ordered_json eight_vertex_json(const EightVertexParams& p) {
  const EightVertexInvariants inv = eight_vertex_invariants_from_params(p);
  return {{"x", scalar_to_json(p.x)},          {"y", scalar_to_json(p.y)},
          {"z", scalar_to_json(p.z)},          {"v", scalar_to_json(p.v)},
          {"Delta1", scalar_to_json(inv.Delta1)}, {"Delta2", scalar_to_json(inv.Delta2)}};
}

ordered_json q_json(const EightVertexDerived& d) {
  return {{"sqrt_xyz", scalar_to_json(d.sqrt_xyz)}, {"q1", scalar_to_json(d.q[0])},
          {"q2", scalar_to_json(d.q[1])},           {"q3", scalar_to_json(d.q[2])},
          {"q4", scalar_to_json(d.q[3])},           {"Lambda", scalar_to_json(d.Lambda)},
          {"Delta1", scalar_to_json(d.Delta1)},     {"Delta2", scalar_to_json(d.Delta2)}};
}

int cmd_selftest(unsigned long seed, int samples, std::ostream& out, std::ostream& err) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(1, 18);
  const auto draw = [&] {
    const int n = dist(rng) - 10;
    return Scalar(static_cast<long>(n >= 0 ? n + 1 : n));
  };
  int accepted = 0;
  int rejected = 0;
  int failures = 0;
  while (accepted < samples) {
    EightVertexParams p{draw(), draw(), draw(), draw(), draw(), draw(), draw()};
    Triplet t;
    std::vector<Triplet> images;
    std::vector<Triplet> rebuilt;
    std::vector<EightVertexParams> mapped;
    try {
      t = build_8v(p);
      for (const auto g : {Generator::ka, Generator::kb, Generator::kc}) {
        mapped.push_back(k_map_8v(g, p));
        images.push_back(apply_K(g, t));
        rebuilt.push_back(build_8v(mapped.back()));
      }
    } catch (const Error&) {
      ++rejected;
      continue;
    }
    ++accepted;
    const EightVertexInvariants inv = eight_vertex_invariants_from_params(p);
    bool ok = solves_ybe(t);
    for (std::size_t i = 0; i < 3; ++i) {
      ok = ok && solves_ybe(images[i]) && projective_eq(images[i], rebuilt[i]);
      const EightVertexInvariants e = eight_vertex_invariants_from_params(mapped[i]);
      ok = ok && e.Delta1 == inv.Delta1 && e.Delta2 == inv.Delta2;
    }
    if (!ok) {
      ++failures;
      err << "selftest failure at (a,b,c,x,y,z,v) = (" << p.a << "," << p.b << "," << p.c << "," << p.x << "," << p.y
          << "," << p.z << "," << p.v << ")\n";
    }
  }
  out << "selftest seed=" << seed << " samples=" << accepted << " rejected=" << rejected << " failures=" << failures
      << "\n";
  out << (failures == 0 ? "PASS" : "FAIL") << "\n";
  return failures == 0 ? kSuccess : kVerificationFailed;
}

}  // namespace

double parse_real(const std::string& text) {
  std::string s;
  for (const char c : text) {
    if (c != ' ') s += c;
  }
  const auto pi = s.find("pi");
  try {
    if (pi == std::string::npos) {
      if (s.find('/') == std::string::npos) {
        double value = 0.0;
        const char* end = s.data() + s.size();
        const auto [ptr, ec] = std::from_chars(s.data() + (!s.empty() && s[0] == '+'), end, value);
        if (ec == std::errc() && ptr == end) return value;
      }
      return Scalar::parse_rational(s).to_complex().real();
    }
    std::string coef = s.substr(0, pi);
    std::string rest = s.substr(pi + 2);
    if (!coef.empty() && coef.back() == '*') coef.pop_back();
    double value = std::numbers::pi;
    if (coef == "-") {
      value = -value;
    } else if (!coef.empty() && coef != "+") {
      value *= Scalar::parse_rational(coef).to_complex().real();
    }
    if (!rest.empty()) {
      if (rest[0] != '/') throw ParseError("");
      value /= Scalar::parse_rational(rest.substr(1)).to_complex().real();
    }
    return value;
  } catch (const Error&) {
    throw UsageError("cannot parse real number '" + text + "'");
  }
}

double resolve_tolerance(const double* flag) {
  if (flag != nullptr) return *flag;
  if (const char* env = std::getenv("YANGBAX_TOL"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end != env && *end == '\0' && v >= 0.0) return v;
    throw UsageError(std::string("YANGBAX_TOL is not a nonnegative number: '") + env + "'");
  }
  return kDefaultTolerance;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Construct, verify and transform two-state Yang-Baxter solution triplets", "yangbax"};
  app.require_subcommand(1);

  std::optional<double> tol_flag;
  const auto add_tol = [&](CLI::App* sub) {
    sub->add_option_function<double>(
        "--tol", [&](const double& t) { tol_flag = t; }, "absolute tolerance for complex mode (env YANGBAX_TOL)");
  };

  std::string family;
  std::vector<std::string> params;
  std::string in_path;
  std::string out_path;
  std::string mode_name;
  auto* build = app.add_subcommand("build", "build a solution family and write a triplet document");
  build->add_option("family", family, "5v1, 5vff, 6v-asym-rational, 6v-asym-trig, 6vff, 8v, 8v-baxter")->required();
  build->add_option("params", params, "key=value parameters");
  build->add_option("--out", out_path, "output file (default stdout)");
  build->add_option("--mode", mode_name, "rational or complex (rational families only)");
  add_tol(build);

  auto* verify = app.add_subcommand("verify", "print the Yang-Baxter residual and PASS/FAIL");
  verify->add_option("--in", in_path, "triplet document")->required();
  add_tol(verify);

  auto* invariants = app.add_subcommand("invariants", "p-polynomials and invariants of each matrix");
  invariants->add_option("--in", in_path, "triplet document")->required();
  add_tol(invariants);

  std::string word_text;
  std::string gauge_spec;
  auto* transform = app.add_subcommand("transform", "apply an inversion-group word or a diagonal gauge");
  transform->add_option("--in", in_path, "triplet document")->required();
  auto* word_opt = transform->add_option("--word", word_text, "generators applied left to right, e.g. \"a,b,c\"");
  auto* gauge_opt = transform->add_option("--gauge", gauge_spec, "diagonal gauge, e.g. \"t1=2,t2=3,t3=5\"");
  word_opt->excludes(gauge_opt);
  transform->add_option("--out", out_path, "output file (default stdout)");

  std::size_t max_iter = kDefaultOrbitIterations;
  std::string csv_path;
  auto* orbit_cmd = app.add_subcommand("orbit", "iterate a word and export invariants along the orbit");
  orbit_cmd->add_option("--in", in_path, "triplet document")->required();
  orbit_cmd->add_option("--word", word_text, "step word")->required();
  orbit_cmd->add_option("--max-iter", max_iter, "maximum number of steps");
  orbit_cmd->add_option("--csv", csv_path, "CSV output file (default stdout)");
  add_tol(orbit_cmd);

  std::string from_form;
  std::string to_form;
  auto* convert = app.add_subcommand("convert", "convert eight-vertex parametrizations");
  convert->add_option("--from", from_form, "xyzv, q or baxter")->required();
  convert->add_option("--to", to_form, "xyzv or q")->required();
  convert->add_option("--in", in_path, "JSON object of parameters");
  convert->add_option("params", params, "key=value parameters");
  convert->add_option("--mode", mode_name, "rational or complex (xyzv and q forms)");

  unsigned long seed = 1;
  int samples = 100;
  auto* selftest = app.add_subcommand("selftest", "randomized eight-vertex consistency checks");
  selftest->add_option("--seed", seed, "random seed");
  selftest->add_option("--samples", samples, "number of accepted samples");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    const double tol = resolve_tolerance(tol_flag ? &*tol_flag : nullptr);
    if (*build) {
      ParamMap p(params);
      Field mode = Field::rational;
      if (!mode_name.empty()) mode = field_from_string(mode_name);
      Warnings warnings;
      const TripletDocument doc = build_family(family, p, mode, warnings, tol);
      for (const auto& w : warnings) err << "warning: " << w << "\n";
      write_output(out_path, dump_document(doc), out);
      return kSuccess;
    }
    if (*verify) {
      const TripletDocument doc = parse_document(read_file(in_path));
      const TripleSpaceMatrix r = ybe_residual(doc.triplet);
      const bool pass = doc.scalar_mode == Field::rational ? r.is_zero() : r.max_abs() <= tol;
      if (doc.scalar_mode == Field::rational) {
        out << "max_residual: " << (pass ? "0" : format_double(r.max_abs())) << "\n";
      } else {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.3e (tol %.1e)", r.max_abs(), tol);
        out << "max_residual: " << buf << "\n";
      }
      out << (pass ? "PASS" : "FAIL") << "\n";
      return pass ? kSuccess : kVerificationFailed;
    }
    if (*invariants) {
      const TripletDocument doc = parse_document(read_file(in_path));
      ordered_json j;
      j["A"] = matrix_invariants(doc.triplet.a, tol);
      j["B"] = matrix_invariants(doc.triplet.b, tol);
      j["C"] = matrix_invariants(doc.triplet.c, tol);
      out << j.dump(2) << "\n";
      return kSuccess;
    }
    if (*transform) {
      if (word_opt->count() == 0 && gauge_opt->count() == 0) throw UsageError("transform needs --word or --gauge");
      TripletDocument doc = parse_document(read_file(in_path));
      std::string step;
      if (word_opt->count() != 0) {
        const AutWord w = parse_word(word_text);
        doc.triplet = apply_aut_word(w, doc.triplet);
        step = "word:" + to_string(w);
      } else {
        doc.triplet = apply_gauge(parse_gauge(gauge_spec, doc.scalar_mode), doc.triplet);
        step = "gauge:" + gauge_spec;
      }
      if (!doc.provenance.is_object()) doc.provenance = ordered_json::object();
      doc.provenance["transforms"].push_back(step);
      write_output(out_path, dump_document(doc), out);
      return kSuccess;
    }
    if (*orbit_cmd) {
      const TripletDocument doc = parse_document(read_file(in_path));
      const AutWord w = parse_word(word_text);
      const OrbitResult res = orbit(doc.triplet, w, max_iter, tol);
      std::ostringstream csv;
      csv << "step,slot,p1,p2,p5,p6,p9,Delta1,Delta2,period_flag\n";
      for (std::size_t n = 0; n < res.points.size(); ++n) {
        const bool closing = res.period && n + 1 == res.points.size();
        for (std::size_t s = 0; s < 3; ++s) {
          const VertexMatrix& m = res.points[n][s];
          const PVector p = p_polys(m);
          const auto e = try_eight_vertex(m, tol);
          csv << n << "," << "ABC"[s] << "," << format_scalar(p.p1) << "," << format_scalar(p.p2) << ","
              << format_scalar(p.p5) << "," << format_scalar(p.p6) << "," << format_scalar(p.p9) << ","
              << (e ? format_scalar(e->Delta1) : "") << "," << (e ? format_scalar(e->Delta2) : "") << ","
              << (closing ? *res.period : 0) << "\n";
        }
      }
      std::ostream& summary = csv_path.empty() ? err : out;
      write_output(csv_path, csv.str(), out);
      if (res.period) {
        summary << "period " << *res.period << " (cycle starts at step " << *res.cycle_start << ")\n";
      } else {
        summary << "no period within " << max_iter << " steps\n";
      }
      return kSuccess;
    }
    if (*convert) {
      ParamMap p(params);
      if (!in_path.empty()) {
        p.merge_json(ordered_json::parse(read_file(in_path)));
        p.ignore({"form", "sqrt_xyz", "Delta1", "Delta2", "elliptic_Delta1", "elliptic_Delta2"});
      }
      Field mode = Field::rational;
      if (!mode_name.empty()) mode = field_from_string(mode_name);
      for (const auto* f : {&from_form, &to_form}) {
        if (*f != "xyzv" && *f != "q" && *f != "baxter") throw UsageError("unknown form '" + *f + "'");
      }
      if (to_form == "baxter") throw UsageError("conversion to the baxter form is not supported");
      ordered_json j{{"form", to_form}};
      EightVertexParams xyzv;
      if (from_form == "baxter") {
        const BaxterParams b{p.real("sigma"), p.real("chi"), p.real("gamma"), p.real("k")};
        p.check_all_used();
        xyzv = baxter_to_xyzv(b);
        const EightVertexInvariants ell = baxter_invariants(b.gamma, b.k);
        j["elliptic_Delta1"] = scalar_to_json(ell.Delta1);
        j["elliptic_Delta2"] = scalar_to_json(ell.Delta2);
      } else if (from_form == "q") {
        const Scalar L = p.scalar("Lambda", mode);
        xyzv = xyzv_from_q(L, {p.scalar("q1", mode), p.scalar("q2", mode), p.scalar("q3", mode), p.scalar("q4", mode)});
        p.check_all_used();
      } else {
        xyzv = EightVertexParams{Scalar::from_long(1, mode), Scalar::from_long(1, mode), Scalar::from_long(1, mode),
                                 p.scalar("x", mode),        p.scalar("y", mode),        p.scalar("z", mode),
                                 p.scalar("v", mode)};
        p.check_all_used();
      }
      if (to_form == "xyzv") {
        j.update(eight_vertex_json(xyzv));
      } else {
        j.update(q_json(derived_8v(xyzv)));
      }
      out << j.dump(2) << "\n";
      return kSuccess;
    }
    if (*selftest) return cmd_selftest(seed, samples, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const ConstraintViolation& e) {
    err << "constraint violation: " << e.what() << "\n";
    return kConstraintViolation;
  } catch (const NoExactRoot& e) {
    err << "constraint violation: " << e.what() << " (try --mode complex)\n";
    return kConstraintViolation;
  } catch (const SingularMatrix& e) {
    err << "constraint violation: " << e.what() << "\n";
    return kConstraintViolation;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kVerificationFailed;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace yangbax::cli
