#include "yangbax/symmetry.hpp"

#include <cctype>

namespace yangbax {

VertexMatrix projective_inverse(const VertexMatrix& m) { return m.inverse(); }

VertexMatrix transpose_full(const VertexMatrix& m) { return m.transposed(); }

VertexMatrix transpose_left(const VertexMatrix& m) {
  VertexMatrix out;
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j)
      for (int k = 1; k <= 2; ++k)
        for (int l = 1; l <= 2; ++l) out(pair_index(i, j), pair_index(k, l)) = double_index(m, k, j, i, l);
  return out;
}

VertexMatrix transpose_right(const VertexMatrix& m) {
  VertexMatrix out;
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j)
      for (int k = 1; k <= 2; ++k)
        for (int l = 1; l <= 2; ++l) out(pair_index(i, j), pair_index(k, l)) = double_index(m, i, l, k, j);
  return out;
}

char to_char(Generator g) {
  switch (g) {
    case Generator::ka: return 'a';
    case Generator::kb: return 'b';
    case Generator::kc: return 'c';
  }
  return '?';
}

Generator generator_from_char(char c) {
  switch (std::tolower(static_cast<unsigned char>(c))) {
    case 'a': return Generator::ka;
    case 'b': return Generator::kb;
    case 'c': return Generator::kc;
    default: throw ParseError(std::string("unknown generator '") + c + "'");
  }
}

Triplet apply_K(Generator gen, const Triplet& t, Composition order) {
  const auto t_inv = [](const VertexMatrix& m) { return transpose_full(projective_inverse(m)); };
  switch (gen) {
    case Generator::ka:
      return {t_inv(t.a), transpose_left(t.b), transpose_left(t.c)};
    case Generator::kb: {
      VertexMatrix mid = order == Composition::right_to_left
                             ? transpose_right(projective_inverse(transpose_left(t.b)))
                             : transpose_left(projective_inverse(transpose_right(t.b)));
      return {transpose_left(t.a), std::move(mid), transpose_right(t.c)};
    }
    case Generator::kc:
      return {transpose_right(t.a), transpose_right(t.b), t_inv(t.c)};
  }
  throw Error("unknown generator");
}

AutWord parse_word(std::string_view text) {
  AutWord w;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    if (ch == ',' || ch == ' ' || ch == '\t') continue;
    if (ch == 'K' || ch == 'k') {
      // "Ka" spelling: the generator letter follows.
      if (i + 1 < text.size() && std::isalpha(static_cast<unsigned char>(text[i + 1]))) continue;
    }
    w.push_back(generator_from_char(ch));
  }
  return w;
}

std::string to_string(const AutWord& w) {
  std::string s;
  for (const auto g : w) {
    if (!s.empty()) s += ',';
    s += to_char(g);
  }
  return s;
}

Triplet apply_aut_word(const AutWord& w, const Triplet& t) {
  Triplet cur = t;
  for (const auto g : w) cur = apply_K(g, cur);
  return cur;
}

namespace {

struct NormalForm {
  std::array<VertexMatrix, 3> slots;
};

NormalForm normal_form(const Triplet& t) {
  return {{projective_normal_form(t.a), projective_normal_form(t.b), projective_normal_form(t.c)}};
}

bool same_point(const NormalForm& x, const NormalForm& y, Field f, double atol) {
  for (std::size_t s = 0; s < 3; ++s) {
    if (f == Field::rational) {
      if (!(x.slots[s] == y.slots[s])) return false;
    } else {
      if (!(x.slots[s] - y.slots[s]).is_zero(atol)) return false;
    }
  }
  return true;
}

}  // namespace

OrbitResult orbit(const Triplet& t, const AutWord& step, std::size_t max_iter, double atol) {
  if (step.empty()) throw Error("orbit step must be a nonempty word");
  OrbitResult out;
  out.points.push_back(t);
  std::vector<NormalForm> seen{normal_form(t)};
  Triplet cur = t;
  for (std::size_t n = 1; n <= max_iter; ++n) {
    cur = apply_aut_word(step, cur);
    out.points.push_back(cur);
    NormalForm nf = normal_form(cur);
    for (std::size_t m = 0; m < seen.size(); ++m) {
      if (same_point(nf, seen[m], t.field(), atol)) {
        out.period = n - m;
        out.cycle_start = m;
        return out;
      }
    }
    seen.push_back(std::move(nf));
  }
  return out;
}

GaugeElement::GaugeElement(Mat2 g1, Mat2 g2, Mat2 g3, double atol) : g_{std::move(g1), std::move(g2), std::move(g3)} {
  for (std::size_t i = 0; i < 3; ++i) {
    const Scalar det = g_[i].determinant();
    if (!approx_equal(det, Scalar::from_long(1, det.field()), atol)) {
      throw ConstraintViolation("gauge factor g" + std::to_string(i + 1) + " has det " + det.to_string() +
                                " != 1");
    }
  }
}

GaugeElement GaugeElement::identity(Field f) { return {Mat2::identity(f), Mat2::identity(f), Mat2::identity(f)}; }

GaugeElement DiagonalGauge::to_gauge() const {
  const auto diag = [](const Scalar& t, int i) {
    if (t.is_zero(0.0)) throw ConstraintViolation("diagonal gauge t" + std::to_string(i) + " must be nonzero");
    return Mat2::diagonal({t, inverse(t)});
  };
  return {diag(t1, 1), diag(t2, 2), diag(t3, 3)};
}

Triplet apply_gauge(const GaugeElement& g, const Triplet& t) {
  const auto conj = [](const Mat2& x, const Mat2& y, const VertexMatrix& m) {
    const VertexMatrix h = kron(x, y);
    return h.inverse() * m * h;
  };
  return {conj(g.g1(), g.g2(), t.a), conj(g.g1(), g.g3(), t.b), conj(g.g2(), g.g3(), t.c)};
}

GaugeElement conjugate_gauge(Generator gen, const GaugeElement& g) {
  const auto inv_t = [](const Mat2& m) { return m.inverse().transposed(); };
  switch (gen) {
    case Generator::ka: return {inv_t(g.g1()), inv_t(g.g2()), g.g3()};
    case Generator::kb: return {inv_t(g.g1()), g.g2(), inv_t(g.g3())};
    case Generator::kc: return {g.g1(), inv_t(g.g2()), inv_t(g.g3())};
  }
  throw Error("unknown generator");
}

}  // namespace yangbax
