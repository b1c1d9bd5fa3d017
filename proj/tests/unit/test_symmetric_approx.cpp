#include "doctest.h"

#include <random>

#include "wordmap/brute_oracle.hpp"
#include "wordmap/symmetric_approx.hpp"

using namespace wordmap;

namespace {

// Re-derive the witness numbers without trusting its fields.
void check_witness(const Witness& wit, const Word& w) {
  Permutation v = evaluate(w, wit.g, wit.h, Permutation::identity(wit.g.size()));
  CHECK(v == wit.value);
  CHECK(hamming_distance(v, wit.target) == wit.achieved);
  CHECK(wit.achieved <= wit.bound);
}

}  // namespace

TEST_CASE("hamming distance examples") {
  CHECK(hamming_distance(Permutation::identity(4), Permutation::identity(4)) == Fraction(0));
  CHECK(hamming_distance(Permutation::identity(6), Permutation::long_cycle(6)) == Fraction(1));
  CHECK(hamming_distance(parse_permutation("(0 1)", 3), parse_permutation("(0 1 2)", 3)) == Fraction(2, 3));
}

TEST_CASE("greedy decomposition") {
  auto d = greedy_decomposition(100, 5);
  CHECK(d.coeffs == std::vector<std::uint64_t>{4, 3, 3});
  CHECK(d.satisfies_invariants());
  CHECK(greedy_decomposition(6, 5).coeffs == std::vector<std::uint64_t>{0, 1});
  CHECK(greedy_decomposition(4, 5).coeffs == std::vector<std::uint64_t>{4});
  for (std::uint64_t n = 1; n < 2000; n += 7)
    for (std::uint64_t q : {2, 3, 5, 7, 9, 29}) {
      auto g = greedy_decomposition(n, q);
      CHECK(g.satisfies_invariants());
      std::uint64_t total = g.n0(), qi = 1;
      for (std::size_t i = 1; i < g.coeffs.size(); ++i) {
        qi *= q;
        total += g.coeffs[i] * (qi + 1);
      }
      CHECK(total == n);
    }
}

TEST_CASE("isotypic witnesses") {
  Word w = parse_word("[x,y]");
  auto id = approx_isotypic(w, 1, 10);
  CHECK(id.achieved == Fraction(0));

  auto small = approx_isotypic(w, 2, 50);
  check_witness(small, w);
  REQUIRE(small.trace.size() == 1);
  CHECK(small.trace[0].path == "small-k");
  const auto& dec = small.trace[0].decomposition;
  std::uint64_t blocks = 0;
  for (std::size_t i = 1; i < dec.size(); ++i) blocks += dec[i];
  CHECK(small.achieved <= Fraction(static_cast<std::int64_t>(dec[0] + 2 * blocks), 100));

  auto large = approx_isotypic(w, 30, 4);
  check_witness(large, w);
  CHECK(large.trace[0].path == "large-k");
}

TEST_CASE("power words") {
  auto odd = approx_power_word(2, Permutation::long_cycle(7));
  CHECK(odd.achieved == Fraction(0));
  CHECK(odd.value == Permutation::long_cycle(7));

  auto s2 = approx_power_word(2, Permutation::long_cycle(2));
  CHECK(s2.achieved == Fraction(1));

  auto two = approx_power_word(2, parse_permutation("(0 1)(2 3)", 4));
  CHECK(two.achieved == Fraction(0));

  auto x2 = approx(parse_word("x^2"), parse_permutation("(0 1)", 5));
  CHECK(x2.achieved == Fraction(2, 5));
}

TEST_CASE("mixed targets are verified globally") {
  Word w = parse_word("[x,y]");
  auto sigma = permutation_of_type(CycleType::from_lengths({2, 2, 2, 3, 3}));
  auto wit = approx(w, sigma);
  check_witness(wit, w);
  CHECK_NOTHROW(wit.verify());
  CHECK(approx(w, Permutation::identity(9)).achieved == Fraction(0));
}

TEST_CASE("trivial word is rejected") {
  CHECK_THROWS_AS(approx(Word{}, Permutation::identity(3)), std::invalid_argument);
}

TEST_CASE("witnesses never beat the exhaustive oracle") {
  std::mt19937_64 rng(21);
  for (const char* text : {"[x,y]", "x^2", "x^-1 y^-1 x y^2", "[x^2,y]", "x y x^-2 y^3"}) {
    Word w = parse_word(text);
    for (std::size_t n : {3, 5, 6}) {
      auto image = word_image_sym(w, n);
      for (int t = 0; t < 15; ++t) {
        Permutation s = random_permutation(n, rng);
        auto wit = approx(w, s);
        check_witness(wit, w);
        CHECK(wit.achieved >= exact_distance_sym(image, s));
      }
    }
  }
}

TEST_CASE("random words and targets stay sound") {
  std::mt19937_64 rng(22);
  for (int t = 0; t < 40; ++t) {
    std::vector<Syllable> syl;
    int len = 1 + static_cast<int>(rng() % 6);
    for (int i = 0; i < len; ++i) syl.push_back({i % 2 ? Gen::y : Gen::x, static_cast<std::int64_t>(rng() % 7) - 3});
    Word w = Word::from_syllables(syl);
    if (w.is_trivial()) continue;
    auto n = 1 + static_cast<std::size_t>(rng() % 300);
    auto wit = approx(w, random_permutation(n, rng));
    check_witness(wit, w);
  }
}

TEST_CASE("mean distance falls with n") {
  Word w = parse_word("[x,y]");
  auto mean = [&](std::size_t n) {
    std::mt19937_64 rng(n);
    double s = 0;
    for (int t = 0; t < 10; ++t) s += to_double(approx(w, random_permutation(n, rng)).achieved);
    return s / 10;
  };
  CHECK(mean(2000) < mean(50));
}
