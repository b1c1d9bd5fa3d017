#include "doctest.h"

#include <random>
#include <stdexcept>

#include "wordmap/finite_field.hpp"
#include "wordmap/number_theory.hpp"

using namespace wordmap;

namespace {

// Schoolbook product of coefficient vectors reduced by the defining modulus.
std::vector<std::uint64_t> naive_mul(const Field& f, std::vector<std::uint64_t> a, std::vector<std::uint64_t> b) {
  std::uint64_t p = f.p();
  auto e = static_cast<std::size_t>(f.e());
  std::vector<std::uint64_t> c(2 * e, 0);
  for (std::size_t i = 0; i < e; ++i)
    for (std::size_t j = 0; j < e; ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  const auto& m = f.modulus();
  for (std::size_t d = 2 * e; d-- > e;) {
    std::uint64_t t = c[d];
    if (!t) continue;
    for (std::size_t i = 0; i <= e; ++i) c[d - e + i] = (c[d - e + i] + (p - t) * m[i]) % p;
  }
  c.resize(e);
  return c;
}

}  // namespace

TEST_CASE("prime field arithmetic matches integers mod p") {
  for (std::uint64_t p : {2, 3, 5, 7, 13}) {
    Field f = make_field(p, 1);
    for (std::uint64_t a = 0; a < p; ++a)
      for (std::uint64_t b = 0; b < p; ++b) {
        CHECK((f.element(a) + f.element(b)).index() == (a + b) % p);
        CHECK((f.element(a) * f.element(b)).index() == (a * b) % p);
        CHECK((f.element(a) - f.element(b)).index() == (a + p - b) % p);
      }
  }
}

TEST_CASE("extension multiplication matches schoolbook reduction") {
  for (auto [p, e] : {std::pair{2ULL, 3}, {3ULL, 2}, {5ULL, 2}, {2ULL, 5}, {3ULL, 3}}) {
    Field f = make_field(p, e);
    CHECK(f.q() == checked_pow(p, e));
    for (std::uint64_t a = 0; a < f.q(); a += 1 + f.q() / 40)
      for (std::uint64_t b = 0; b < f.q(); b += 1 + f.q() / 30) {
        auto x = f.element(a), y = f.element(b);
        CHECK((x * y).coeffs() == naive_mul(f, x.coeffs(), y.coeffs()));
      }
  }
}

TEST_CASE("canonical moduli") {
  CHECK(make_field(5, 2).modulus() == std::vector<std::uint64_t>{2, 0, 1});
  CHECK(make_field(2, 2).modulus() == std::vector<std::uint64_t>{1, 1, 1});
  CHECK(make_field_of_order(9) == make_field(3, 2));
  CHECK_THROWS(make_field_of_order(12));
}

TEST_CASE("field axioms and inverses in F_27") {
  Field f = make_field(3, 3);
  for (std::uint64_t a = 1; a < f.q(); ++a) {
    auto x = f.element(a);
    CHECK((x * x.inverse()).is_one());
    CHECK(x.pow(f.q() - 1).is_one());
    CHECK(x.frobenius() == x.pow(3));
    CHECK((f.q() - 1) % x.order() == 0);
  }
  CHECK_THROWS(f.zero().inverse());
}

TEST_CASE("primitive element and element_of_order") {
  Field f = make_field(5, 2);
  CHECK(f.primitive_element().order() == 24);
  CHECK(element_of_order(make_field(5, 1), 4).index() == 2);
  for (std::uint64_t k : {1, 2, 3, 4, 6, 8, 12, 24}) CHECK(element_of_order(f, k).order() == k);
  CHECK_THROWS(element_of_order(f, 5));
}

TEST_CASE("polynomial division identity") {
  Field f = make_field(7, 1);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    std::vector<std::int64_t> a(1 + rng() % 8), b(1 + rng() % 5);
    for (auto& c : a) c = static_cast<std::int64_t>(rng() % 7);
    for (auto& c : b) c = static_cast<std::int64_t>(rng() % 7);
    FqPoly pa = FqPoly::from_ints(f, a), pb = FqPoly::from_ints(f, b);
    if (pb.is_zero()) continue;
    auto [q, r] = pa.divmod(pb);
    CHECK(q * pb + r == pa);
    CHECK(r.degree() < pb.degree());
  }
}

TEST_CASE("roots agree with exhaustive evaluation") {
  for (auto [p, e] : {std::pair{5ULL, 1}, {3ULL, 2}, {2ULL, 4}, {7ULL, 2}}) {
    Field f = make_field(p, e);
    std::mt19937_64 rng(p * 10 + e);
    for (int t = 0; t < 20; ++t) {
      std::vector<FqElem> c;
      for (int i = 0; i < 4; ++i) c.push_back(f.element(rng() % f.q()));
      c.push_back(f.one());
      FqPoly poly(f, c);
      std::vector<FqElem> brute;
      for (std::uint64_t a = 0; a < f.q(); ++a)
        if (poly.eval(f.element(a)).is_zero()) brute.push_back(f.element(a));
      CHECK(roots(poly) == brute);
    }
  }
}

TEST_CASE("min_extension_root") {
  Field f5 = make_field(5, 1);
  auto r = min_extension_root(FqPoly::from_ints(f5, {2, 0, 1}), 2);  // X^2 + 2
  REQUIRE(r);
  CHECK(r->m == 2);
  CHECK(r->field.q() == 25);
  Embedding emb(f5, r->field);
  CHECK(emb(FqPoly::from_ints(f5, {2, 0, 1})).eval(r->root).is_zero());
  CHECK_FALSE(min_extension_root(FqPoly::from_ints(make_field(7, 1), {1, 0, 1}), 1));
  CHECK_THROWS_AS(min_extension_root(FqPoly::from_ints(f5, {3}), 2), std::invalid_argument);
}

TEST_CASE("embeddings are ring homomorphisms") {
  Field small = make_field(2, 2), big = make_field(2, 4);
  Embedding emb(small, big);
  for (std::uint64_t a = 0; a < 4; ++a)
    for (std::uint64_t b = 0; b < 4; ++b) {
      auto x = small.element(a), y = small.element(b);
      CHECK(emb(x * y) == emb(x) * emb(y));
      CHECK(emb(x + y) == emb(x) + emb(y));
    }
}
