#include "doctest.h"

#include <random>

#include "wordmap/matrix_fq.hpp"

using namespace wordmap;

namespace {

MatrixFq random_matrix(const Field& f, std::size_t n, std::mt19937_64& rng) {
  MatrixFq m(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = f.element(rng() % f.q());
  return m;
}

MatrixFq random_invertible(const Field& f, std::size_t n, std::mt19937_64& rng) {
  for (;;) {
    MatrixFq m = random_matrix(f, n, rng);
    if (m.is_invertible()) return m;
  }
}

FqPoly char_poly_2x2(const MatrixFq& a) {
  Field f = a.field();
  return FqPoly(f, {a.det(), -(a.at(0, 0) + a.at(1, 1)), f.one()});
}

}  // namespace

TEST_CASE("rank, determinant, inverse") {
  Field f = make_field(5, 1);
  auto a = MatrixFq::from_ints(f, {{1, 2}, {3, 4}});
  CHECK(a.det() == f.from_int(-2));
  CHECK(a.rank() == 2);
  CHECK(*a.inverse() * a == MatrixFq::identity(f, 2));
  auto s = MatrixFq::from_ints(f, {{1, 2}, {2, 4}});
  CHECK(s.rank() == 1);
  CHECK_FALSE(s.inverse());
  CHECK(s.left_kernel().size() == 1);
  auto k = s.left_kernel()[0];
  for (auto& x : s.row_times(k)) CHECK(x.is_zero());
}

TEST_CASE("determinant is multiplicative") {
  Field f = make_field(3, 2);
  std::mt19937_64 rng(1);
  for (int t = 0; t < 50; ++t) {
    auto a = random_matrix(f, 3, rng), b = random_matrix(f, 3, rng);
    CHECK((a * b).det() == a.det() * b.det());
  }
}

TEST_CASE("permutation matrices") {
  Field f = make_field(2, 1);
  std::mt19937_64 rng(2);
  for (int t = 0; t < 50; ++t) {
    auto n = 2 + static_cast<std::size_t>(rng() % 8);
    Permutation s = random_permutation(n, rng), u = random_permutation(n, rng);
    CHECK(MatrixFq::permutation_matrix(f, s) * MatrixFq::permutation_matrix(f, u) ==
          MatrixFq::permutation_matrix(f, s * u));
    std::size_t disagree = hamming_count(s, u);
    std::size_t r = (MatrixFq::permutation_matrix(f, s) - MatrixFq::permutation_matrix(f, u)).rank();
    CHECK(2 * r >= disagree);
    CHECK(r <= disagree);
  }
}

TEST_CASE("companion convention") {
  Field f = make_field(3, 1);
  auto chi = FqPoly::from_ints(f, {1, 0, 1});  // X^2 + 1
  auto c = companion(chi);
  CHECK(c == MatrixFq::from_ints(f, {{0, 1}, {-1, 0}}));
  CHECK(char_poly_2x2(c) == chi);
  CHECK(eval_poly(chi, c) == MatrixFq(f, 2, 2));
  // X^k - 1 gives the k-cycle permutation matrix
  auto cyc = companion(FqPoly::from_ints(f, {-1, 0, 0, 0, 1}));
  CHECK(cyc == MatrixFq::permutation_matrix(f, Permutation::long_cycle(4)));
}

TEST_CASE("rational canonical form examples") {
  Field f3 = make_field(3, 1), f5 = make_field(5, 1);
  CHECK(rational_canonical_form(MatrixFq::identity(f3, 2)) ==
        std::vector<FqPoly>{FqPoly::from_ints(f3, {-1, 1}), FqPoly::from_ints(f3, {-1, 1})});
  CHECK(rational_canonical_form(companion(FqPoly::from_ints(f3, {1, 0, 1}))) ==
        std::vector<FqPoly>{FqPoly::from_ints(f3, {1, 0, 1})});
  auto d = MatrixFq::from_ints(f5, {{1, 0}, {0, 2}});
  CHECK(rational_canonical_form(d) == std::vector<FqPoly>{FqPoly::from_ints(f5, {-1, 1}) * FqPoly::from_ints(f5, {-2, 1})});
}

TEST_CASE("invariant factors of 2x2 matrices agree with the characteristic polynomial") {
  Field f = make_field(5, 1);
  std::mt19937_64 rng(3);
  for (int t = 0; t < 200; ++t) {
    auto a = random_matrix(f, 2, rng);
    auto inv = rational_canonical_form(a);
    bool scalar = a.at(0, 1).is_zero() && a.at(1, 0).is_zero() && a.at(0, 0) == a.at(1, 1);
    if (scalar) {
      CHECK(inv.size() == 2);
    } else {
      REQUIRE(inv.size() == 1);
      CHECK(inv[0] == char_poly_2x2(a));
    }
  }
}

TEST_CASE("invariant factors form a chain and survive conjugation") {
  std::mt19937_64 rng(4);
  for (auto [p, e] : {std::pair{2ULL, 1}, {3ULL, 1}, {2ULL, 2}, {5ULL, 1}}) {
    Field f = make_field(p, e);
    for (int t = 0; t < 25; ++t) {
      auto n = 1 + static_cast<std::size_t>(rng() % 6);
      auto a = random_matrix(f, n, rng);
      if (rng() % 3 == 0) a = MatrixFq::identity(f, n) * f.element(rng() % f.q());
      auto inv = rational_canonical_form(a);
      int total = 0;
      for (std::size_t i = 0; i < inv.size(); ++i) {
        total += inv[i].degree();
        CHECK(inv[i].lead().is_one());
        if (i) CHECK((inv[i] % inv[i - 1]).is_zero());
      }
      CHECK(total == static_cast<int>(n));
      auto pm = random_invertible(f, n, rng);
      CHECK(rational_canonical_form(*pm.inverse() * a * pm) == inv);
    }
  }
}

TEST_CASE("Frobenius decomposition conjugates to the block sum") {
  std::mt19937_64 rng(5);
  Field f = make_field(2, 1);
  for (int t = 0; t < 40; ++t) {
    auto n = 1 + static_cast<std::size_t>(rng() % 9);
    auto a = random_matrix(f, n, rng);
    auto fd = frobenius_decomposition(a);
    std::vector<MatrixFq> blocks;
    for (const auto& c : fd.invariant_factors) blocks.push_back(companion(c));
    CHECK(fd.Q * a * *fd.Q.inverse() == direct_sum(blocks));
  }
}

TEST_CASE("rank distance") {
  Field f = make_field(7, 1);
  auto i4 = MatrixFq::identity(f, 4);
  CHECK(rank_distance(i4, i4) == Fraction(0));
  auto d = i4;
  d.at(0, 0) = f.from_int(3);
  CHECK(rank_distance(i4, d) == Fraction(1, 4));
  auto chi = FqPoly::from_ints(f, {2, 5, 1, 3, 1});
  auto cyc = FqPoly::from_ints(f, {-1, 0, 0, 0, 1});
  CHECK(rank_distance(companion(chi), companion(cyc)) <= Fraction(1, 4));
}
