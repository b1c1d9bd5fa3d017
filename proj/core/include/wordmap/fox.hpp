#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wordmap/number_theory.hpp"
#include "wordmap/word.hpp"

namespace wordmap {

// Element of Z[F_2]; zero coefficients are never stored.
class GroupRingElem {
 public:
  GroupRingElem() = default;
  static GroupRingElem of(const Word& w, BigInt c = 1);
  static GroupRingElem one() { return of(Word{}); }

  const std::map<Word, BigInt>& terms() const& { return t_; }
  std::map<Word, BigInt> terms() && { return std::move(t_); }
  bool is_zero() const { return t_.empty(); }
  BigInt coeff(const Word& w) const;

  GroupRingElem operator+(const GroupRingElem& o) const;
  GroupRingElem operator-(const GroupRingElem& o) const;
  GroupRingElem operator-() const;
  GroupRingElem operator*(const GroupRingElem& o) const;
  GroupRingElem operator*(const BigInt& s) const;
  GroupRingElem& operator+=(const GroupRingElem& o);
  bool operator==(const GroupRingElem& o) const { return t_ == o.t_; }

  std::string str() const;

 private:
  std::map<Word, BigInt> t_;
  void add(const Word& w, const BigInt& c);
};

GroupRingElem fox_derivative(const Word& w, Gen var);

// Z[X^+-1, Y^+-1]
class LaurentPoly2 {
 public:
  using Key = std::pair<std::int64_t, std::int64_t>;
  LaurentPoly2() = default;
  static LaurentPoly2 monomial(std::int64_t i, std::int64_t j, BigInt c = 1);

  const std::map<Key, BigInt>& terms() const& { return t_; }
  std::map<Key, BigInt> terms() && { return std::move(t_); }
  bool is_zero() const { return t_.empty(); }
  BigInt coeff(std::int64_t i, std::int64_t j) const;

  LaurentPoly2 operator+(const LaurentPoly2& o) const;
  LaurentPoly2 operator-(const LaurentPoly2& o) const;
  LaurentPoly2 operator*(const LaurentPoly2& o) const;
  bool operator==(const LaurentPoly2& o) const { return t_ == o.t_; }
  LaurentPoly2 star() const;  // exponent negation
  std::string str() const;

  void add(std::int64_t i, std::int64_t j, const BigInt& c);

 private:
  std::map<Key, BigInt> t_;
};

// Z[X^+-1]
class LaurentPoly1 {
 public:
  LaurentPoly1() = default;
  static LaurentPoly1 monomial(std::int64_t i, BigInt c = 1);
  static LaurentPoly1 from_coeffs(std::int64_t low, const std::vector<std::int64_t>& c);

  const std::map<std::int64_t, BigInt>& terms() const& { return t_; }
  std::map<std::int64_t, BigInt> terms() && { return std::move(t_); }
  bool is_zero() const { return t_.empty(); }
  BigInt coeff(std::int64_t i) const;
  std::int64_t min_exp() const;
  std::int64_t max_exp() const;

  LaurentPoly1 operator+(const LaurentPoly1& o) const;
  LaurentPoly1 operator-(const LaurentPoly1& o) const;
  LaurentPoly1 operator*(const LaurentPoly1& o) const;
  bool operator==(const LaurentPoly1& o) const { return t_ == o.t_; }
  LaurentPoly1 star() const;
  // Strip the unit +-X^k: shift to min exponent 0 and make the top coefficient positive.
  LaurentPoly1 normalized() const;
  bool equal_up_to_units(const LaurentPoly1& o) const { return normalized() == o.normalized(); }
  std::string str() const;

  void add(std::int64_t i, const BigInt& c);

 private:
  std::map<std::int64_t, BigInt> t_;
};

LaurentPoly2 abelianize(const GroupRingElem& e);

// (pi(dw/dx)^*, pi(dw/dy)^*)
std::pair<LaurentPoly2, LaurentPoly2> abelianized_derivatives(const Word& w);

enum class Membership { not_in_F2prime, in_F2prime_not_F2second, in_F2second };
std::string to_string(Membership m);
Membership derived_membership(const Word& w);

struct Direction {
  std::int64_t alpha = 0, beta = 0;
};
// (1,0),(0,1),(1,1),(1,-1),(2,1),(1,2),(2,-1),(1,-2),... coprime, by max norm.
std::vector<Direction> spiral_directions(std::size_t count);

struct Specialization {
  LaurentPoly1 p;
  Direction dir;
  Gen component = Gen::y;   // which derivative z came from
  bool injective = false;   // direction separates supp(z)
};
// Throws std::invalid_argument unless w is in F2' \ F2''.
Specialization specialize_pw(const Word& w);

// Distinct n-th roots of unity annihilating p; throws on p = 0.
std::uint64_t count_Wn(const LaurentPoly1& p, std::uint64_t n);

enum class SUVerdict { surjective, surjective_trivially, unknown };
std::string to_string(SUVerdict v);

struct SUCertificate {
  Word word;
  std::uint64_t n = 0;
  Membership membership = Membership::not_in_F2prime;
  std::optional<Specialization> pw;
  std::optional<std::uint64_t> Wn;
  SUVerdict verdict = SUVerdict::unknown;
};
SUCertificate su_certificate(const Word& w, std::uint64_t n);

}  // namespace wordmap
