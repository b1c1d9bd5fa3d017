#include "wordmap/sl2.hpp"

#include <array>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "wordmap/number_theory.hpp"

namespace wordmap {

SL2Elem::SL2Elem(FqElem a, FqElem b, FqElem c, FqElem d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  if (!(a_ * d_ - b_ * c_).is_one()) throw std::invalid_argument("SL2Elem: determinant is not 1");
}

SL2Elem::SL2Elem(FqElem a, FqElem b, FqElem c, FqElem d, Unchecked)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {}

SL2Elem SL2Elem::identity(const Field& f) { return SL2Elem(f.one(), f.zero(), f.zero(), f.one(), Unchecked{}); }
SL2Elem SL2Elem::lower_unipotent(const FqElem& u) {
  Field f = u.field();
  return SL2Elem(f.one(), f.zero(), u, f.one(), Unchecked{});
}
SL2Elem SL2Elem::upper_unipotent(const FqElem& u) {
  Field f = u.field();
  return SL2Elem(f.one(), u, f.zero(), f.one(), Unchecked{});
}

bool SL2Elem::is_central() const { return b_.is_zero() && c_.is_zero() && a_ == d_; }

SL2Elem SL2Elem::operator*(const SL2Elem& o) const {
  return SL2Elem(a_ * o.a_ + b_ * o.c_, a_ * o.b_ + b_ * o.d_, c_ * o.a_ + d_ * o.c_, c_ * o.b_ + d_ * o.d_,
                 Unchecked{});
}

SL2Elem SL2Elem::inverse() const { return SL2Elem(d_, -b_, -c_, a_, Unchecked{}); }

SL2Elem SL2Elem::pow(std::int64_t k) const {
  SL2Elem base = k < 0 ? inverse() : *this;
  std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-(k + 1)) + 1 : static_cast<std::uint64_t>(k);
  SL2Elem r = identity(field());
  while (e) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

SL2Elem SL2Elem::map(const Embedding& emb) const { return SL2Elem(emb(a_), emb(b_), emb(c_), emb(d_), Unchecked{}); }

bool SL2Elem::operator==(const SL2Elem& o) const { return a_ == o.a_ && b_ == o.b_ && c_ == o.c_ && d_ == o.d_; }

std::string SL2Elem::str() const {
  return "[[" + a_.str() + "," + b_.str() + "],[" + c_.str() + "," + d_.str() + "]]";
}

SL2Elem evaluate_sl2(const Word& w, const SL2Elem& g, const SL2Elem& h) {
  return evaluate(w, g, h, SL2Elem::identity(g.field()));
}

std::uint32_t ProjLine::index_of(const FqElem& x0, const FqElem& x1) const {
  if (x1.is_zero()) {
    if (x0.is_zero()) throw std::invalid_argument("ProjLine: zero vector");
    return 0;
  }
  return static_cast<std::uint32_t>(1 + (x0 / x1).index());
}

std::pair<FqElem, FqElem> ProjLine::point(std::size_t i) const {
  if (i == 0) return {f_.one(), f_.zero()};
  return {f_.element(i - 1), f_.one()};
}

Permutation projective_permutation(const SL2Elem& g) {
  Field f = g.field();
  ProjLine line(f);
  std::vector<std::uint32_t> img(line.size());
  img[0] = line.index_of(g.a(), g.b());
  for (std::uint64_t i = 0; i < f.q(); ++i) {
    FqElem x = f.element(i);
    img[1 + i] = line.index_of(x * g.a() + g.c(), x * g.b() + g.d());
  }
  return Permutation(std::move(img));
}

namespace {

CycleType closed_form(std::uint64_t q, std::uint64_t o, bool split) {
  CycleType t;
  std::uint64_t len = (o % 2 == 0) ? o / 2 : o;
  std::uint64_t moved = split ? q - 1 : q + 1;
  if (split) t.counts[1] = 2;
  if (len == 1) {
    t.counts[1] += moved;
  } else {
    t.counts[len] = moved / len;
  }
  return t;
}

}  // namespace

namespace {

// Order of a non-central, non-unipotent g and whether it divides q-1.
std::pair<std::uint64_t, bool> semisimple_order(const SL2Elem& g) {
  Field f = g.field();
  std::uint64_t q = f.q();
  SL2Elem one = SL2Elem::identity(f);
  for (std::uint64_t n : {q - 1, q + 1}) {
    if (!(g.pow(static_cast<std::int64_t>(n)) == one)) continue;
    std::uint64_t o = n;
    for (auto [r, e] : factorize(n)) {
      for (int j = 0; j < e; ++j) {
        if (g.pow(static_cast<std::int64_t>(o / r)) == one) o /= r;
        else break;
      }
    }
    return {o, n == q - 1};
  }
  throw std::logic_error("semisimple_order: order divides neither q-1 nor q+1");
}

}  // namespace

CycleType classify_cycle_type(const SL2Elem& g) {
  Field f = g.field();
  std::uint64_t q = f.q();
  CycleType t;
  if (g.is_central()) {
    t.counts[1] = q + 1;
    return t;
  }
  FqElem tr = g.trace();
  FqElem two = f.from_int(2);
  if (tr == two || tr == -two) {
    // Unipotent up to sign: one fixed point, the rest in p-cycles.
    t.counts[1] = 1;
    t.counts[f.p()] = q / f.p();
    return t;
  }
  // Semisimple: the order equals the eigenvalue order and divides q-1 exactly when split.
  auto [o, split] = semisimple_order(g);
  return closed_form(q, o, split);
}

FqPoly unipotent_trace_poly(const Word& w, const Field& f) {
  SyllableForm form = classify(w);
  if (form.kind != SyllableForm::Kind::alternating)
    throw std::invalid_argument("unipotent_trace_poly: word is not alternating");
  std::int64_t p = static_cast<std::int64_t>(f.p());
  for (auto [a, b] : form.pairs) {
    if (a % p == 0 || b % p == 0)
      throw std::invalid_argument("unipotent_trace_poly: characteristic divides a syllable exponent");
  }
  // 2x2 matrices over F[U]; x^a = [[1,0],[aU,1]], y^b = [[1,b],[0,1]].
  using M = std::array<FqPoly, 4>;
  auto mul = [](const M& A, const M& B) {
    return M{A[0] * B[0] + A[1] * B[2], A[0] * B[1] + A[1] * B[3], A[2] * B[0] + A[3] * B[2],
             A[2] * B[1] + A[3] * B[3]};
  };
  FqPoly one = FqPoly::constant(f.one()), zero(f);
  M acc{one, zero, zero, one};
  for (const auto& s : w.syllables()) {
    FqElem e = f.from_int(s.exp);
    if (s.gen == Gen::x) {
      acc = mul(acc, M{one, zero, FqPoly::monomial(e, 1), one});
    } else {
      acc = mul(acc, M{one, FqPoly::constant(e), zero, one});
    }
  }
  return acc[0] + acc[3];
}

namespace {

// Coefficients of r live in the prime field; lift them into fq.
FqPoly lift_prime(const FqPoly& r, const Field& fq) {
  std::vector<FqElem> c;
  for (const auto& x : r.coeffs()) c.push_back(fq.from_int(static_cast<std::int64_t>(x.index())));
  return FqPoly(fq, c);
}

FqPoly trace_poly_over(const Word& w, const Field& fq) {
  return lift_prime(unipotent_trace_poly(w, make_field(fq.p(), 1)), fq);
}

}  // namespace

TraceSolution solve_trace(const Word& w, const Field& fq, const FqElem& t) {
  if (!(t.field() == fq)) throw std::invalid_argument("solve_trace: target not in the given field");
  FqPoly r = trace_poly_over(w, fq);
  int l = static_cast<int>(classify(w).l());
  auto er = min_extension_root(r - FqPoly::constant(t), l);
  if (!er) throw std::runtime_error("solve_trace: internal error, no root of r(U) - t in F_{q^m}, m <= l");
  TraceSolution s;
  s.m = er->m;
  s.field = er->field;
  s.U = er->root;
  s.g = SL2Elem::lower_unipotent(s.U);
  s.h = SL2Elem::upper_unipotent(s.field.one());
  Embedding emb(fq, s.field);
  if (!(evaluate_sl2(w, s.g, s.h).trace() == emb(t)))
    throw std::logic_error("solve_trace: verification of tr w(g,h) = t failed");
  return s;
}

namespace {

template <class V>
class Memo {
 public:
  template <class F>
  V get(const std::string& key, F&& make) {
    {
      std::lock_guard<std::mutex> lock(m_);
      auto it = map_.find(key);
      if (it != map_.end()) return it->second;
    }
    V v = make();
    std::lock_guard<std::mutex> lock(m_);
    return map_.emplace(key, std::move(v)).first->second;
  }

 private:
  std::mutex m_;
  std::map<std::string, V> map_;
};

Memo<IsotypicValue>& isotypic_memo() {
  static Memo<IsotypicValue> m;
  return m;
}
Memo<NearCycleValue>& near_cycle_memo() {
  static Memo<NearCycleValue> m;
  return m;
}
Memo<int>& extension_memo() {
  static Memo<int> m;
  return m;
}

void check_isotypic_field(std::uint64_t k, const Field& fq) {
  if (k < 2) throw std::invalid_argument("isotypic_word_value: k must be >= 2");
  std::uint64_t need = (k % 2 == 0) ? 2 * k : k;
  if ((fq.q() - 1) % need != 0)
    throw std::invalid_argument("isotypic_word_value: " + std::to_string(need) + " does not divide q-1 = " +
                                std::to_string(fq.q() - 1));
}

}  // namespace

int isotypic_extension_degree(const Word& w, std::uint64_t k, const Field& fq) {
  check_isotypic_field(k, fq);
  std::string key = w.str() + "|" + std::to_string(k) + "|" + std::to_string(fq.q());
  return extension_memo().get(key, [&] {
    FqElem lambda = element_of_order(fq, k % 2 == 0 ? 2 * k : k);
    FqElem t = lambda + lambda.inverse();
    int l = static_cast<int>(classify(w).l());
    auto er = min_extension_root(trace_poly_over(w, fq) - FqPoly::constant(t), l);
    if (!er) throw std::runtime_error("isotypic_extension_degree: internal error, no root found");
    return er->m;
  });
}

IsotypicValue isotypic_word_value(const Word& w, std::uint64_t k, const Field& fq, int i) {
  check_isotypic_field(k, fq);
  if (i < 1) throw std::invalid_argument("isotypic_word_value: i must be >= 1");
  std::string key = w.str() + "|" + std::to_string(k) + "|" + std::to_string(fq.q()) + "|" + std::to_string(i);
  return isotypic_memo().get(key, [&] {
    IsotypicValue v;
    v.lambda = element_of_order(fq, k % 2 == 0 ? 2 * k : k);
    v.t = v.lambda + v.lambda.inverse();
    TraceSolution sol = solve_trace(w, fq, v.t);
    v.m = sol.m;
    v.field = make_field(fq.p(), fq.e() * i * sol.m);
    Embedding emb(sol.field, v.field);
    v.U = emb(sol.U);
    SL2Elem g = SL2Elem::lower_unipotent(v.U);
    SL2Elem h = SL2Elem::upper_unipotent(v.field.one());
    v.pg = projective_permutation(g);
    v.ph = projective_permutation(h);
    v.sigma = projective_permutation(evaluate_sl2(w, g, h));
    if (!(v.sigma == evaluate(w, v.pg, v.ph, Permutation::identity(v.pg.size()))))
      throw std::logic_error("isotypic_word_value: projective action is not a homomorphism");
    std::uint64_t Q = v.field.q();
    CycleType expect;
    expect.counts[1] = 2;
    expect.counts[k] = (Q - 1) / k;
    if (!(v.sigma.cycle_type() == expect))
      throw std::logic_error("isotypic_word_value: unexpected cycle type " + v.sigma.cycle_type().str());
    return v;
  });
}

std::uint64_t companion_order(const FqElem& t) {
  Field f = t.field();
  SL2Elem c(f.zero(), -f.one(), f.one(), t);
  if (c.is_central()) return c.a().is_one() ? 1 : 2;
  FqElem two = f.from_int(2);
  if (t == two) return f.p();
  if (t == -two) return f.p() == 2 ? 2 : 2 * f.p();
  return semisimple_order(c).first;
}

std::uint64_t near_cycle_defect_cap(std::uint64_t q, std::uint64_t l) {
  std::uint64_t ql = q * l;
  std::uint64_t s = isqrt(ql);
  return s * s == ql ? s + 1 : s + 2;
}

NearCycleValue near_cycle_word_value(const Word& w, const Field& fq) {
  SyllableForm form = classify(w);
  if (form.kind != SyllableForm::Kind::alternating)
    throw std::invalid_argument("near_cycle_word_value: word is not alternating");
  std::uint64_t l = form.l();
  if (fq.q() <= 4 * l)
    throw std::invalid_argument("near_cycle_word_value: need q > 4l, got q = " + std::to_string(fq.q()));
  std::string key = w.str() + "|" + std::to_string(fq.q());
  return near_cycle_memo().get(key, [&] {
    Field f = fq;
    SL2Elem h = SL2Elem::upper_unipotent(f.one());
    FqElem two = f.from_int(2);
    // Minimise the closed-form cycle count over the sweep; ties go to the least U.
    std::uint64_t best_cycles = UINT64_MAX, best_order = 0, best_idx = 0;
    (void)unipotent_trace_poly(w, make_field(f.p(), 1));  // validates p against the exponents
    const std::uint64_t q = f.q();
    for (std::uint64_t i = 0; i < q; ++i) {
      SL2Elem val = evaluate_sl2(w, SL2Elem::lower_unipotent(f.element(i)), h);
      std::uint64_t o, cyc;
      if (val.is_central()) {
        o = val.a().is_one() ? 1 : 2;
        cyc = q + 1;
      } else if (val.trace() == two || val.trace() == -two) {
        o = f.p();
        cyc = 1 + q / f.p();
      } else {
        o = companion_order(val.trace());
        std::uint64_t len = o % 2 == 0 ? o / 2 : o;
        cyc = (q - 1) % o == 0 ? 2 + (q - 1) / len : (q + 1) / len;
      }
      if (cyc < best_cycles) {
        best_cycles = cyc;
        best_order = o;
        best_idx = i;
      }
    }
    NearCycleValue v;
    v.U = f.element(best_idx);
    v.eigen_order = best_order;
    v.pg = projective_permutation(SL2Elem::lower_unipotent(v.U));
    v.ph = projective_permutation(h);
    v.sigma = evaluate(w, v.pg, v.ph, Permutation::identity(v.pg.size()));
    if (!(v.sigma == projective_permutation(evaluate_sl2(w, SL2Elem::lower_unipotent(v.U), h))))
      throw std::logic_error("near_cycle_word_value: projective action is not a homomorphism");
    v.cycles = v.sigma.num_cycles();
    v.defect = v.cycles >= 2 ? v.cycles : 0;
    if (v.defect > near_cycle_defect_cap(f.q(), l))
      throw std::logic_error("near_cycle_word_value: defect " + std::to_string(v.defect) + " violates 2+sqrt(ql)");
    return v;
  });
}

}  // namespace wordmap
