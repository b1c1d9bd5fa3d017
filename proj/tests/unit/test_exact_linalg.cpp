#include "doctest.h"

#include <random>

#include "wordmap/exact_linalg.hpp"

using namespace wordmap;

namespace {

IntMatrix random_int(std::mt19937_64& rng, std::size_t r, std::size_t c, int span) {
  IntMatrix m = int_matrix(r, c);
  for (auto& row : m)
    for (auto& x : row) x = static_cast<int>(rng() % (2 * span + 1)) - span;
  return m;
}

BigInt det2(const IntMatrix& m) { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }

}  // namespace

TEST_CASE("rank of small matrices") {
  CHECK(rank_q(IntMatrix{{1, 2}, {2, 4}}) == 1);
  CHECK(rank_q(IntMatrix{{1, 2}, {3, 4}}) == 2);
  CHECK(rank_q(int_matrix(3, 4)) == 0);
}

TEST_CASE("independent rows are earliest and pivot block is invertible") {
  IntMatrix m{{1, 1, 0}, {2, 2, 0}, {0, 1, 1}, {1, 2, 1}};
  auto ir = independent_rows(m);
  CHECK(ir.rows == std::vector<std::size_t>{0, 2});
  RatMatrix sub(2, std::vector<BigRational>(2));
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) sub[i][j] = BigRational(m[ir.rows[i]][ir.pivot_cols[j]]);
  CHECK_NOTHROW(inverse(sub));
}

TEST_CASE("Smith normal form of 2x2 matches gcd and determinant") {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 200; ++t) {
    IntMatrix m = random_int(rng, 2, 2, 9);
    auto s = smith_normal_form(m);
    BigInt g = 0;
    for (auto& row : m)
      for (auto& x : row) g = boost::multiprecision::gcd(g, x);
    BigInt d = abs(det2(m));
    if (g == 0) {
      CHECK(s.divisors.empty());
    } else if (d == 0) {
      REQUIRE(s.divisors.size() == 1);
      CHECK(s.divisors[0] == g);
    } else {
      REQUIRE(s.divisors.size() == 2);
      CHECK(s.divisors[0] == g);
      CHECK(s.divisors[0] * s.divisors[1] == d);
    }
  }
}

TEST_CASE("Smith transforms reproduce the diagonal") {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 60; ++t) {
    auto r = 1 + rng() % 5, c = 1 + rng() % 6;
    IntMatrix m = random_int(rng, r, c, 4);
    auto s = smith_normal_form(m);
    IntMatrix d = multiply(multiply(s.U, m), s.V);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) {
        BigInt want = (i == j && i < s.divisors.size()) ? s.divisors[i] : BigInt(0);
        CHECK(d[i][j] == want);
      }
    for (std::size_t i = 1; i < s.divisors.size(); ++i) CHECK(s.divisors[i] % s.divisors[i - 1] == 0);
    CHECK(s.divisors.size() == rank_q(m));
  }
}

TEST_CASE("inverse") {
  RatMatrix a{{BigRational(2), BigRational(1)}, {BigRational(1), BigRational(1)}};
  RatMatrix inv = inverse(a);
  CHECK(inv[0][0] == 1);
  CHECK(inv[0][1] == -1);
  CHECK(inv[1][1] == 2);
  CHECK_THROWS_AS(inverse(RatMatrix{{BigRational(1), BigRational(2)}, {BigRational(2), BigRational(4)}}),
                  std::domain_error);
}
