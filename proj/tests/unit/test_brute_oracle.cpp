#include "doctest.h"

#include <random>

#include "wordmap/brute_oracle.hpp"

using namespace wordmap;

namespace {

std::set<std::string> labels_of(std::initializer_list<std::vector<std::uint64_t>> types) {
  std::set<std::string> s;
  for (const auto& t : types) s.insert(CycleType::from_lengths(t).str());
  return s;
}

}  // namespace

TEST_CASE("partitions") {
  CHECK(cycle_types_of(5).size() == 7);
  CHECK(cycle_types_of(8).size() == 22);
}

TEST_CASE("image of x^2 in S_3") {
  auto r = word_image_sym(parse_word("x^2"), 3);
  CHECK(r.labels == labels_of({{1, 1, 1}, {3}}));
  CHECK(r.exhaustive);
}

TEST_CASE("image in S_1 is trivial") {
  CHECK(word_image_sym(parse_word("[x,y]"), 1).labels == labels_of({{1}}));
}

TEST_CASE("commutators in S_5 are exactly A_5") {
  auto r = word_image_sym(parse_word("[x,y]"), 5);
  CHECK(r.labels == labels_of({{1, 1, 1, 1, 1}, {2, 2, 1}, {3, 1, 1}, {5}}));
}

TEST_CASE("images are closed under sampled evaluation") {
  std::mt19937_64 rng(4);
  Word w = parse_word("x^2 y^-1 x y");
  auto r = word_image_sym(w, 6);
  for (int t = 0; t < 500; ++t) {
    auto g = random_permutation(6, rng), h = random_permutation(6, rng);
    CHECK(r.cycle_types.count(evaluate(w, g, h, Permutation::identity(6)).cycle_type()) == 1);
  }
}

TEST_CASE("non-powers have nontrivial images") {
  for (std::size_t n : {5, 6, 7})
    for (const char* text : {"[x,y]", "x^2 y^3", "[x^2,y]"}) CHECK(word_image_sym(parse_word(text), n).labels.size() > 1);
}

TEST_CASE("exact distances") {
  CHECK(exact_distance_sym(parse_word("[x,y]"), parse_permutation("(0 1)", 5)) == Fraction(2, 5));
  CHECK(exact_distance_sym(parse_word("x^3 y"), Permutation::identity(4)) == Fraction(0));
  CHECK(exact_distance_sym(parse_word("x^2"), parse_permutation("(0 1)", 2)) == Fraction(1));
  CHECK_THROWS(exact_distance_sym(parse_word("x"), Permutation::identity(8)));
  CHECK_THROWS(word_image_sym(parse_word("x"), 9));
}

TEST_CASE("matrix group sizes") {
  CHECK((MatrixGroup{MatrixGroup::Kind::GL, 2, make_field(2, 1)}).order() == 6);
  CHECK((MatrixGroup{MatrixGroup::Kind::GL, 3, make_field(2, 1)}).order() == 168);
  CHECK((MatrixGroup{MatrixGroup::Kind::SL, 2, make_field(3, 1)}).order() == 24);
  MatrixGroup g{MatrixGroup::Kind::SL, 2, make_field(5, 1)};
  CHECK(enumerate_group(g).size() == g.order());
}

TEST_CASE("GL_2(2) commutators match S_3") {
  MatrixGroup g{MatrixGroup::Kind::GL, 2, make_field(2, 1)};
  auto r = word_image_matrix(parse_word("[x,y]"), g);
  CHECK(r.exhaustive);
  // A_3 = {1, two 3-cycles}: identity and the order-3 class
  CHECK(r.labels == std::set<std::string>{"[X + 1, X + 1]", "[X^2 + X + 1]"});
  CHECK(r.labels.size() == word_image_sym(parse_word("[x,y]"), 3).labels.size());
}

TEST_CASE("the identity word hits every class") {
  MatrixGroup g{MatrixGroup::Kind::GL, 2, make_field(3, 1)};
  std::set<std::string> all;
  for (const auto& m : enumerate_group(g)) all.insert(invariant_factor_label(rational_canonical_form(m)));
  CHECK(word_image_matrix(parse_word("x"), g).labels == all);
}

TEST_CASE("squares in SL_2(3)") {
  MatrixGroup g{MatrixGroup::Kind::SL, 2, make_field(3, 1)};
  std::set<std::string> squares;
  for (const auto& m : enumerate_group(g)) squares.insert(invariant_factor_label(rational_canonical_form(m * m)));
  CHECK(word_image_matrix(parse_word("x^2"), g).labels == squares);
}

TEST_CASE("sampled matrix images record their seed") {
  MatrixGroup g{MatrixGroup::Kind::GL, 3, make_field(3, 1)};
  auto r = word_image_matrix(parse_word("[x,y]"), g, 300, 17);
  CHECK_FALSE(r.exhaustive);
  CHECK(r.seed == 17);
  CHECK(r.evaluations == 300);
}
