#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wordmap {

enum class Gen : std::uint8_t { x = 0, y = 1 };

inline Gen other(Gen g) { return g == Gen::x ? Gen::y : Gen::x; }

struct Syllable {
  Gen gen;
  std::int64_t exp;
  auto operator<=>(const Syllable&) const = default;
};

// Freely reduced word in x, y, stored as maximal syllables.
class Word {
 public:
  Word() = default;
  static Word from_syllables(const std::vector<Syllable>& s);
  static Word generator(Gen g, std::int64_t exp = 1);
  static Word x(std::int64_t exp = 1) { return generator(Gen::x, exp); }
  static Word y(std::int64_t exp = 1) { return generator(Gen::y, exp); }

  const std::vector<Syllable>& syllables() const { return syl_; }
  bool is_trivial() const { return syl_.empty(); }
  std::size_t letter_length() const;

  Word inverse() const;
  Word power(std::int64_t k) const;
  Word swap_generators() const;
  Word operator*(const Word& o) const;

  // Letters one by one as (gen, +1/-1).
  std::vector<std::pair<Gen, int>> letters() const;

  // Canonical text: "x^-1 y^-1 x^1 y^1"; trivial word prints as "1".
  std::string str() const;

  auto operator<=>(const Word&) const = default;
  bool operator==(const Word&) const = default;

 private:
  std::vector<Syllable> syl_;
  void push(Gen g, std::int64_t e);
};

Word commutator(const Word& u, const Word& v);  // u^-1 v^-1 u v

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t pos);
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

// Grammar: generators x,y (X,Y accepted as inverses), "1" for the identity,
// exponents ^n / ^-n / ^(n) / ^{n}, parentheses, commutators [u,v] = u^-1 v^-1 u v.
// Whitespace is ignored; empty input is the trivial word.
Word parse_word(std::string_view text);

// w = conjugator * core * conjugator^-1 with core cyclically reduced.
struct CyclicReduction {
  Word core;
  Word conjugator;
};
CyclicReduction cyclic_reduction(const Word& w);
Word cyclic_reduce(const Word& w);

struct SyllableForm {
  enum class Kind { trivial, power, alternating };
  Kind kind = Kind::trivial;
  std::int64_t exponent = 0;                                   // power kind
  std::vector<std::pair<std::int64_t, std::int64_t>> pairs;    // alternating (a_i, b_i)
  bool swapped = false;  // generator roles were exchanged
  Word conjugator;       // w = conjugator * realized() * conjugator^-1

  std::size_t l() const { return pairs.size(); }
  // x^a or x^a1 y^b1 ... in the form's own coordinates (no swap).
  Word form_word() const;
  // form_word with the swap applied; conjugate to the classified word.
  Word realized() const;
};

SyllableForm classify(const Word& w);

std::pair<std::int64_t, std::int64_t> abelianization(const Word& w);

// c with w in gamma_{c+1} \ gamma_{c+2}; throws std::invalid_argument on the trivial word.
int lcs_degree(const Word& w);

// Generic evaluation; T needs operator* and power(const T&, int64) via ADL.
template <class T>
T evaluate(const Word& w, const T& g, const T& h, T identity) {
  T acc = std::move(identity);
  for (const auto& s : w.syllables()) {
    acc = acc * power(s.gen == Gen::x ? g : h, s.exp);
  }
  return acc;
}

}  // namespace wordmap
