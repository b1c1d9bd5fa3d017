#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace wordmap {

namespace detail {
struct FieldImpl;
}

class FqElem;

// Handle to an interned finite field F_{p^e}.  Elements are coded as base-p
// digit strings of their coefficient vector (c_0 least significant), so the
// code doubles as the canonical enumeration index.
class Field {
 public:
  Field() = default;
  explicit Field(const detail::FieldImpl* impl) : impl_(impl) {}

  std::uint64_t p() const;
  int e() const;
  std::uint64_t q() const;
  // Defining monic polynomial over F_p, coefficients low to high (size e+1).
  const std::vector<std::uint64_t>& modulus() const;

  FqElem zero() const;
  FqElem one() const;
  FqElem element(std::uint64_t index) const;
  FqElem from_int(std::int64_t v) const;
  FqElem from_coeffs(const std::vector<std::uint64_t>& c) const;
  FqElem gen() const;  // class of X
  FqElem primitive_element() const;
  const std::vector<std::pair<std::uint64_t, int>>& unit_group_factorization() const;

  std::string str() const;
  bool valid() const { return impl_ != nullptr; }
  const detail::FieldImpl* impl() const { return impl_; }
  bool operator==(const Field& o) const { return impl_ == o.impl_; }

 private:
  const detail::FieldImpl* impl_ = nullptr;
};

// Canonical field: modulus is the least monic irreducible of degree e under
// the index order (c_{e-1} most significant); e = 1 uses modulus X.
Field make_field(std::uint64_t p, int e);
Field make_field_of_order(std::uint64_t q);

class FqElem {
 public:
  FqElem() = default;
  FqElem(const detail::FieldImpl* f, std::uint64_t code) : f_(f), code_(code) {}

  Field field() const { return Field(f_); }
  std::uint64_t index() const { return code_; }
  std::vector<std::uint64_t> coeffs() const;
  bool is_zero() const { return code_ == 0; }
  bool is_one() const { return code_ == 1; }

  FqElem operator+(const FqElem& o) const;
  FqElem operator-(const FqElem& o) const;
  FqElem operator-() const;
  FqElem operator*(const FqElem& o) const;
  FqElem operator/(const FqElem& o) const;
  FqElem& operator+=(const FqElem& o) { return *this = *this + o; }
  FqElem& operator-=(const FqElem& o) { return *this = *this - o; }
  FqElem& operator*=(const FqElem& o) { return *this = *this * o; }

  FqElem inverse() const;
  FqElem pow(std::uint64_t e) const;
  FqElem pow_signed(std::int64_t e) const;
  FqElem frobenius() const;
  std::uint64_t order() const;  // multiplicative order; throws on zero

  bool operator==(const FqElem& o) const { return f_ == o.f_ && code_ == o.code_; }
  bool operator<(const FqElem& o) const { return code_ < o.code_; }

  std::string str() const;

 private:
  const detail::FieldImpl* f_ = nullptr;
  std::uint64_t code_ = 0;
};

FqElem element_of_order(const Field& f, std::uint64_t k);

// Polynomial over a field, coefficients low to high, no trailing zeros.
class FqPoly {
 public:
  FqPoly() = default;
  explicit FqPoly(Field f) : f_(f) {}
  FqPoly(Field f, std::vector<FqElem> c);
  static FqPoly constant(const FqElem& c);
  static FqPoly X(Field f);
  static FqPoly monomial(const FqElem& c, std::size_t deg);
  static FqPoly from_ints(Field f, const std::vector<std::int64_t>& c);

  Field field() const { return f_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<FqElem>& coeffs() const { return c_; }
  FqElem coeff(std::size_t i) const;
  FqElem lead() const;

  FqPoly operator+(const FqPoly& o) const;
  FqPoly operator-(const FqPoly& o) const;
  FqPoly operator-() const;
  FqPoly operator*(const FqPoly& o) const;
  FqPoly operator*(const FqElem& s) const;
  FqPoly operator/(const FqPoly& o) const;
  FqPoly operator%(const FqPoly& o) const;
  std::pair<FqPoly, FqPoly> divmod(const FqPoly& o) const;

  FqPoly monic() const;
  FqElem eval(const FqElem& x) const;  // x in the same field
  FqPoly compose_power(std::size_t c) const;  // p(X^c)
  FqPoly derivative() const;

  bool operator==(const FqPoly& o) const { return f_ == o.f_ && c_ == o.c_; }
  std::string str(char var = 'X') const;

 private:
  Field f_;
  std::vector<FqElem> c_;
  void trim();
};

FqPoly gcd(FqPoly a, FqPoly b);  // monic, or zero
FqPoly powmod(const FqPoly& base, std::uint64_t e, const FqPoly& mod);

// Field embedding small -> big sending the generator of small to the least
// (by index) root of its modulus in big.
class Embedding {
 public:
  Embedding(Field small, Field big);
  FqElem operator()(const FqElem& a) const;
  FqPoly operator()(const FqPoly& f) const;
  Field source() const { return small_; }
  Field target() const { return big_; }

 private:
  Field small_, big_;
  std::vector<FqElem> basis_;  // images of gen^i
};
Embedding embedding(const Field& small, const Field& big);

// Distinct roots in the coefficient field, sorted by index.
std::vector<FqElem> roots(const FqPoly& f);

struct ExtensionRoot {
  int m;          // least degree with a root in F_{q^m}
  Field field;    // F_{q^m}
  FqElem root;    // least-index root there
};
// Least m <= l such that f has a root in F_{q^m}; nullopt if none.
// Throws std::invalid_argument on constant f.
std::optional<ExtensionRoot> min_extension_root(const FqPoly& f, int l);

}  // namespace wordmap
