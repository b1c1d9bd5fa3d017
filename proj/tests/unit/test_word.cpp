#include "doctest.h"

#include <random>

#include "wordmap/word.hpp"

using namespace wordmap;

namespace {

Word random_word(std::mt19937_64& rng, int syllables) {
  std::vector<Syllable> s;
  for (int i = 0; i < syllables; ++i) {
    auto e = static_cast<std::int64_t>(rng() % 7) - 3;
    s.push_back({rng() % 2 ? Gen::x : Gen::y, e});
  }
  return Word::from_syllables(s);
}

}  // namespace

TEST_CASE("commutator text") {
  CHECK(parse_word("[x,y]").str() == "x^-1 y^-1 x^1 y^1");
  CHECK(parse_word("[x,y]") == commutator(Word::x(), Word::y()));
}

TEST_CASE("exponent syntax") {
  Word w = parse_word("x^2 y^-3");
  REQUIRE(w.syllables().size() == 2);
  CHECK(w.syllables()[0] == Syllable{Gen::x, 2});
  CHECK(w.syllables()[1] == Syllable{Gen::y, -3});
  CHECK(parse_word("x^(2)y^{-3}") == w);
  CHECK(parse_word("x x Y Y Y") == w);
  CHECK(parse_word("(x y)^2") == parse_word("x y x y"));
  CHECK(parse_word("[x,y,x]") == commutator(commutator(Word::x(), Word::y()), Word::x()));
}

TEST_CASE("free reduction and empty input") {
  CHECK(parse_word("x y y^-1 x^-1").is_trivial());
  CHECK(parse_word("").is_trivial());
  CHECK(parse_word("   ").is_trivial());
  CHECK(parse_word("1").is_trivial());
  CHECK(parse_word("1").str() == "1");
}

TEST_CASE("parse errors carry a position") {
  try {
    parse_word("x^");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position() == 2);
  }
  CHECK_THROWS_AS(parse_word("[x,y"), ParseError);
  CHECK_THROWS_AS(parse_word("z"), ParseError);
  CHECK_THROWS_AS(parse_word("x)"), ParseError);
}

TEST_CASE("print then parse is a fixed point") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    Word w = random_word(rng, 1 + static_cast<int>(rng() % 8));
    CHECK(parse_word(w.str()) == w);
  }
}

TEST_CASE("stored words are freely reduced") {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 300; ++i) {
    Word w = random_word(rng, 10) * random_word(rng, 10);
    const auto& s = w.syllables();
    for (std::size_t j = 0; j < s.size(); ++j) {
      CHECK(s[j].exp != 0);
      if (j) CHECK(s[j].gen != s[j - 1].gen);
    }
    CHECK((w * w.inverse()).is_trivial());
  }
}

TEST_CASE("cyclic reduction") {
  CHECK(cyclic_reduce(parse_word("x y x^-1")) == Word::y());
  std::mt19937_64 rng(13);
  for (int i = 0; i < 300; ++i) {
    Word w = random_word(rng, 9);
    auto cr = cyclic_reduction(w);
    CHECK(cyclic_reduce(cr.core) == cr.core);
    CHECK(cr.conjugator * cr.core * cr.conjugator.inverse() == w);
  }
}

TEST_CASE("classify") {
  auto f = classify(parse_word("[x,y]"));
  CHECK(f.kind == SyllableForm::Kind::alternating);
  CHECK(f.l() == 2);
  CHECK(f.pairs == std::vector<std::pair<std::int64_t, std::int64_t>>{{-1, -1}, {1, 1}});

  auto p = classify(parse_word("y^3"));
  CHECK(p.kind == SyllableForm::Kind::power);
  CHECK(p.exponent == 3);
  CHECK(p.swapped);

  auto g = classify(parse_word("x^2 y x^-1 y^2"));
  CHECK(g.pairs == std::vector<std::pair<std::int64_t, std::int64_t>>{{2, 1}, {-1, 2}});
  CHECK(classify(Word{}).kind == SyllableForm::Kind::trivial);
}

TEST_CASE("classify reconstructs the word") {
  std::mt19937_64 rng(14);
  for (int i = 0; i < 300; ++i) {
    Word w = random_word(rng, 1 + static_cast<int>(rng() % 9));
    if (w.is_trivial()) continue;
    auto f = classify(w);
    CHECK(f.conjugator * f.realized() * f.conjugator.inverse() == w);
    if (f.kind == SyllableForm::Kind::alternating)
      for (auto [a, b] : f.pairs) CHECK((a != 0 && b != 0));
  }
}

TEST_CASE("abelianization") {
  CHECK(abelianization(parse_word("[x,y]")) == std::make_pair(std::int64_t{0}, std::int64_t{0}));
  CHECK(abelianization(parse_word("x^2 y x^-5")) == std::make_pair(std::int64_t{-3}, std::int64_t{1}));
}

TEST_CASE("lower central degree") {
  CHECK(lcs_degree(parse_word("x^3")) == 0);
  CHECK(lcs_degree(parse_word("[x,y]")) == 1);
  CHECK(lcs_degree(parse_word("[[x,y],x]")) == 2);
  // [x,y^2] = [x,y]^2 mod gamma_3, so this lands in gamma_5
  CHECK(lcs_degree(parse_word("[[x,y],[x,y^2]]")) == 4);
  CHECK(lcs_degree(parse_word("[x^2,y^3]")) == 1);
  CHECK_THROWS_AS(lcs_degree(Word{}), std::invalid_argument);
}

TEST_CASE("lower central degree is at most 2l for alternating words") {
  std::mt19937_64 rng(15);
  for (int i = 0; i < 60; ++i) {
    Word w = cyclic_reduce(random_word(rng, 6));
    if (w.is_trivial()) continue;
    auto f = classify(w);
    if (f.kind != SyllableForm::Kind::alternating) continue;
    CHECK(lcs_degree(w) <= static_cast<int>(2 * f.l()));
  }
}
