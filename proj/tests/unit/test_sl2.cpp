#include "doctest.h"

#include <map>
#include <random>

#include "wordmap/sl2.hpp"

using namespace wordmap;

namespace {

// Independent orbit count on normalized points of L_q.
CycleType orbit_cycle_type(const SL2Elem& g) {
  Field f = g.field();
  using Pt = std::pair<std::uint64_t, std::uint64_t>;
  auto normalize = [&](FqElem a, FqElem b) -> Pt {
    if (b.is_zero()) return {1, 0};
    return {(a / b).index(), 1};
  };
  std::vector<Pt> pts{{1, 0}};
  for (std::uint64_t i = 0; i < f.q(); ++i) pts.push_back({i, 1});
  std::map<Pt, bool> seen;
  std::vector<std::uint64_t> lengths;
  for (auto start : pts) {
    if (seen[start]) continue;
    std::uint64_t len = 0;
    Pt cur = start;
    while (!seen[cur]) {
      seen[cur] = true;
      ++len;
      FqElem a = f.element(cur.first), b = f.element(cur.second);
      cur = normalize(a * g.a() + b * g.c(), a * g.b() + b * g.d());
    }
    lengths.push_back(len);
  }
  return CycleType::from_lengths(lengths);
}

SL2Elem random_sl2(const Field& f, std::mt19937_64& rng) {
  for (;;) {
    FqElem a = f.element(rng() % f.q()), b = f.element(rng() % f.q()), c = f.element(rng() % f.q());
    if (a.is_zero()) continue;
    return SL2Elem(a, b, c, (f.one() + b * c) / a);
  }
}

}  // namespace

TEST_CASE("determinant is checked") {
  Field f = make_field(5, 1);
  CHECK_THROWS(SL2Elem(f.one(), f.one(), f.one(), f.one()));
}

TEST_CASE("closed-form cycle type equals orbit enumeration") {
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9}) {
    Field f = make_field_of_order(q);
    std::mt19937_64 rng(q);
    for (int t = 0; t < 60; ++t) {
      SL2Elem g = random_sl2(f, rng);
      CHECK(classify_cycle_type(g) == orbit_cycle_type(g));
      CHECK(projective_permutation(g).cycle_type() == orbit_cycle_type(g));
    }
  }
}

TEST_CASE("known cycle types") {
  Field f = make_field(5, 1);
  SL2Elem u = SL2Elem::upper_unipotent(f.one());
  CHECK(classify_cycle_type(u).str() == "(1^1, 5^1)");
  SL2Elem d(f.from_int(2), f.zero(), f.zero(), f.from_int(3));
  CHECK(classify_cycle_type(d).str() == "(1^2, 2^2)");
  CHECK(classify_cycle_type(SL2Elem::identity(f)).str() == "(1^6)");
}

TEST_CASE("projective action is a right action") {
  Field f = make_field(7, 1);
  std::mt19937_64 rng(1);
  for (int t = 0; t < 50; ++t) {
    SL2Elem g = random_sl2(f, rng), h = random_sl2(f, rng);
    CHECK(projective_permutation(g * h) == projective_permutation(g) * projective_permutation(h));
  }
}

TEST_CASE("word evaluation matches letter-by-letter products") {
  Field f = make_field(3, 2);
  std::mt19937_64 rng(2);
  Word w = parse_word("x^2 y^-1 x^-3 y^2");
  for (int t = 0; t < 20; ++t) {
    SL2Elem g = random_sl2(f, rng), h = random_sl2(f, rng);
    SL2Elem acc = SL2Elem::identity(f);
    for (auto [gen, s] : w.letters()) {
      SL2Elem m = gen == Gen::x ? g : h;
      acc = acc * (s > 0 ? m : m.inverse());
    }
    CHECK(evaluate_sl2(w, g, h) == acc);
  }
}

TEST_CASE("unipotent trace polynomial agrees with evaluation") {
  Field f = make_field(7, 1);
  Word w = parse_word("x^2 y x^-1 y^3");
  FqPoly tp = unipotent_trace_poly(w, f);
  CHECK(tp.degree() == 2);
  // leading coefficient a1 b1 a2 b2 = 2*1*(-1)*3
  CHECK(tp.lead() == f.from_int(-6));
  for (std::uint64_t u = 0; u < 7; ++u) {
    auto U = f.element(u);
    auto v = evaluate_sl2(w, SL2Elem::lower_unipotent(U), SL2Elem::upper_unipotent(f.one()));
    CHECK(tp.eval(U) == v.trace());
  }
  CHECK(unipotent_trace_poly(parse_word("[x,y]"), make_field(5, 1)) == FqPoly::from_ints(make_field(5, 1), {2, 0, 1}));
  CHECK_THROWS(unipotent_trace_poly(parse_word("x^7 y"), f));
  CHECK_THROWS(unipotent_trace_poly(parse_word("x^3"), f));
}

TEST_CASE("solve_trace for the commutator over F_5") {
  Field f = make_field(5, 1);
  Word w = parse_word("[x,y]");
  for (std::uint64_t t = 0; t < 5; ++t) {
    auto s = solve_trace(w, f, f.element(t));
    CHECK(s.m <= 2);
    Embedding emb(f, s.field);
    CHECK(evaluate_sl2(w, s.g, s.h).trace() == emb(f.element(t)));
  }
  CHECK(solve_trace(w, f, f.element(0)).m == 2);
  CHECK(solve_trace(w, f, f.element(2)).m == 1);
}

TEST_CASE("isotypic word values") {
  auto v = isotypic_word_value(parse_word("[x,y]"), 2, make_field(5, 1), 1);
  CHECK(v.m == 2);
  CHECK(v.sigma.cycle_type().str() == "(1^2, 2^12)");
  CHECK(evaluate(parse_word("[x,y]"), v.pg, v.ph, Permutation::identity(v.pg.size())) == v.sigma);
  auto v3 = isotypic_word_value(parse_word("[x,y]"), 3, make_field(7, 1), 1);
  CHECK(v3.sigma.cycle_type().str() == "(1^2, 3^2)");
}

TEST_CASE("near-cycle word values stay under the defect cap") {
  Word w = parse_word("[x,y]");
  for (std::uint64_t p : {11, 13, 29, 31}) {
    auto v = near_cycle_word_value(w, make_field(p, 1));
    CHECK(v.sigma.size() == p + 1);
    CHECK(v.defect <= near_cycle_defect_cap(p, 2));
    CHECK(evaluate(w, v.pg, v.ph, Permutation::identity(p + 1)) == v.sigma);
  }
  auto v29 = near_cycle_word_value(w, make_field(29, 1));
  CHECK(v29.cycles == 2);
  CHECK(near_cycle_defect_cap(29, 2) == 9);
}
