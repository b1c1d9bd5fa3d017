#include "doctest.h"

#include <numbers>
#include <random>
#include <sstream>

#include "wordmap/cayley.hpp"
#include "wordmap/fox.hpp"

using namespace wordmap;

namespace {

std::vector<std::complex<double>> random_su_diagonal(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0, 2 * std::numbers::pi);
  std::vector<double> a(n);
  double s = 0;
  for (auto& x : a) s += (x = u(rng));
  std::vector<std::complex<double>> t;
  for (auto x : a) t.push_back(std::polar(1.0, x - s / static_cast<double>(n)));
  return t;
}

}  // namespace

TEST_CASE("quotient checks") {
  CHECK_NOTHROW(cyclic_quotient(5).check());
  CHECK_THROWS(cyclic_quotient(6, 2, 4));
  CHECK(dihedral_quotient(5).order() == 10);
  CHECK(symmetric_quotient(3).order() == 6);
  CHECK(symmetric_quotient(4).order() == 24);
  CHECK_THROWS(build_d2(Word::x(), cyclic_quotient(5)));
}

TEST_CASE("quotients load from text") {
  std::istringstream in("3\n1 2 0\n0 1 2\n");
  auto q = read_quotient(in);
  CHECK(q.order() == 3);
  CHECK(q.g == Permutation::long_cycle(3));
  std::istringstream bad("3\n1 1 0\n0 1 2\n");
  CHECK_THROWS(read_quotient(bad));
}

TEST_CASE("loop walk equals Fox pushforward") {
  std::vector<FiniteQuotient> qs;
  for (std::size_t m = 1; m <= 30; ++m) qs.push_back(cyclic_quotient(m));
  for (std::size_t n = 3; n <= 6; ++n) qs.push_back(dihedral_quotient(n));
  qs.push_back(symmetric_quotient(3));
  qs.push_back(symmetric_quotient(4));
  for (const char* text : {"[x,y]", "[x^2,y^3]", "x^-1 y^-1 x y^2 x^-1 y x y^-2", "[[x,y],[x,y^2]]", "[[x,y],x]"}) {
    Word w = parse_word(text);
    for (const auto& q : qs) {
      bool relation = evaluate(w, q.g, q.h, Permutation::identity(q.order())).is_identity();
      if (!relation) continue;
      CHECK(d2_loop_walk(w, q) == d2_fox_pushforward(w, q));
    }
  }
}

TEST_CASE("d2 examples") {
  auto zero = build_d2(parse_word("[[x,y],[x,y^2]]"), cyclic_quotient(3));
  for (const auto& row : zero)
    for (const auto& v : row) CHECK(v == 0);
  CHECK(cohomology_defect(zero).defect == 3);

  auto c5 = build_d2(parse_word("[x,y]"), cyclic_quotient(5));
  bool nonzero = false;
  for (const auto& row : c5) {
    BigInt s = 0;
    for (const auto& v : row) {
      s += v;
      if (v != 0) nonzero = true;
    }
    CHECK(s == 0);
  }
  CHECK(nonzero);
  CHECK(cohomology_defect(c5).defect == 1);

  FiniteQuotient gx{"x trivial", Permutation::identity(4), Permutation::long_cycle(4)};
  auto dx = build_d2(Word::x(), gx);
  for (std::size_t c = 0; c < 4; ++c) {
    CHECK(dx[c][c] == 1);
    int nz = 0;
    for (const auto& v : dx[c]) nz += v != 0;
    CHECK(nz == 1);
  }

  FiniteQuotient trivial{"1", Permutation::identity(1), Permutation::identity(1)};
  CHECK(cohomology_defect(build_d2(Word::x(), trivial)).defect == 0);
}

TEST_CASE("rows are translates of row 0") {
  Word w = parse_word("[x^2,y]");
  auto q = cyclic_quotient(7, 1, 3);
  auto m = build_d2(w, q);
  // vertex c = 0 . g^c, right translation by g^c shifts columns by c
  for (std::size_t c = 0; c < 7; ++c)
    for (std::size_t v = 0; v < 7; ++v) {
      CHECK(m[c][(v + c) % 7] == m[0][v]);
      CHECK(m[c][7 + (v + c) % 7] == m[0][7 + v]);
    }
}

TEST_CASE("defect is positive for commutator words") {
  std::mt19937_64 rng(3);
  for (const char* text : {"[x,y]", "[x^2,y^3]", "[[x,y],x]"}) {
    Word w = parse_word(text);
    for (std::size_t m = 2; m <= 12; ++m) CHECK(cohomology_defect(build_d2(w, cyclic_quotient(m))).defect >= 1);
  }
  CHECK(cohomology_defect(build_d2(parse_word("[[x,y],[x,y^2]]"), symmetric_quotient(3))).defect >= 1);
}

TEST_CASE("defect over Z/n matches roots of p_w") {
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b) {
      Word w = commutator(Word::x(a), Word::y(b));
      auto s = specialize_pw(w);
      for (std::size_t n = 1; n <= 20; ++n) {
        auto q = cyclic_quotient(n, s.dir.alpha, s.dir.beta);
        CHECK(cohomology_defect(build_d2(w, q)).defect == count_Wn(s.p, n));
      }
    }
}

TEST_CASE("monomial witness") {
  Word w = parse_word("[x,y]");
  auto q = cyclic_quotient(5);
  std::vector<std::complex<double>> ones(5, 1.0);
  auto triv = monomial_witness(w, q, ones);
  CHECK(triv.matched == 5);

  std::mt19937_64 rng(10);
  for (int t = 0; t < 10; ++t) {
    auto target = random_su_diagonal(5, rng);
    auto mw = monomial_witness(w, q, target);
    CHECK(mw.matched >= 4);
    CHECK(mw.max_offdiag <= 1e-9);
    to_special_unitary(mw, w);
    CHECK(std::abs(mw.Mg.determinant() - 1.0) < 1e-9);
    CHECK(mw.max_residual <= 1e-8);
  }
  std::vector<std::complex<double>> bad(5, 1.0);
  bad[0] = std::polar(1.0, 0.5);
  CHECK_THROWS_AS(monomial_witness(w, q, bad), std::invalid_argument);
}

TEST_CASE("monomial witness in the second derived subgroup") {
  Word w = parse_word("[[x,y],[x,y^2]]");
  std::mt19937_64 rng(11);
  auto target = random_su_diagonal(4, rng);
  auto mw = monomial_witness(w, cyclic_quotient(4), target);
  CHECK(mw.report.defect == 4);
  CHECK(mw.matched <= 4);
}

TEST_CASE("monomial witness on a nonabelian quotient") {
  Word w = parse_word("[x^2,y^3]");
  auto q = symmetric_quotient(3);
  q.check_relation(w);
  std::mt19937_64 rng(12);
  auto mw = monomial_witness(w, q, random_su_diagonal(6, rng));
  CHECK(mw.matched + mw.report.defect >= 6);
}

TEST_CASE("solve in abelian groups") {
  IntMatrix m{{2}};
  auto ok = solve_in_abelian(m, {4}, {{2}});
  CHECK(ok.solvable);
  CHECK(ok.psi[0][0] == 1);
  auto no = solve_in_abelian(m, {4}, {{1}});
  CHECK_FALSE(no.solvable);
  CHECK(no.multiplier == 2);
  CHECK(solve_in_abelian(m, {4}, {{no.multiplier * 1}}).solvable);
}

TEST_CASE("achievable subgroup index for the commutator over Z/5") {
  IntMatrix d2 = build_d2(parse_word("[x,y]"), cyclic_quotient(5));
  std::vector<std::vector<BigInt>> target(5, std::vector<BigInt>{0});
  auto r = solve_in_abelian(d2, {6}, target);
  CHECK(r.solvable);
  BigInt index = 1;
  for (std::size_t i = 0; i < 5; ++i) index *= i < r.divisors.size() ? BigInt(boost::multiprecision::gcd(r.divisors[i], BigInt(6))) : BigInt(6);
  CHECK(r.image_index[0] == index);
  // brute force count of the image inside (Z/6)^5 through the columns
  std::set<std::vector<int>> image{{0, 0, 0, 0, 0}};
  bool grew = true;
  while (grew) {
    grew = false;
    auto cur = image;
    for (const auto& v : cur)
      for (std::size_t c = 0; c < 10; ++c) {
        std::vector<int> u = v;
        for (std::size_t i = 0; i < 5; ++i) u[i] = static_cast<int>((u[i] + static_cast<int>(d2[i][c]) + 6) % 6);
        if (image.insert(u).second) grew = true;
      }
  }
  CHECK(BigInt(7776) / BigInt(image.size()) == r.image_index[0]);
}

TEST_CASE("width two shift") {
  using R = BigRational;
  RatMatrix u{{R(1), R(-1), R(0)}};
  auto res = width_two_shift(u, u, 3);
  RatMatrix m = u;
  m.push_back(permute_coordinates(u[0], res.sigma));
  CHECK(rank_q(m) == 2);
  CHECK_FALSE(res.sigma.is_identity());

  RatMatrix v0{{R(1), R(-1), R(0)}, {R(0), R(1), R(-1)}};
  CHECK(width_two_shift(v0, {}, 3).sigma.is_identity());
  CHECK_THROWS(width_two_shift(u, {}, 3));
  CHECK_THROWS(width_two_shift(RatMatrix{{R(1), R(0), R(0)}}, v0, 3));
}
