#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wordmap/finite_field.hpp"
#include "wordmap/number_theory.hpp"
#include "wordmap/permutation.hpp"

namespace wordmap {

// Dense matrix over a finite field; vectors are rows and act on the right.
class MatrixFq {
 public:
  MatrixFq() = default;
  MatrixFq(Field f, std::size_t rows, std::size_t cols);
  static MatrixFq identity(Field f, std::size_t n);
  static MatrixFq from_ints(Field f, const std::vector<std::vector<std::int64_t>>& rows);
  // e_i P = e_{sigma(i)}
  static MatrixFq permutation_matrix(Field f, const Permutation& sigma);

  Field field() const { return f_; }
  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  const FqElem& at(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }
  FqElem& at(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }

  MatrixFq operator*(const MatrixFq& o) const;
  MatrixFq operator+(const MatrixFq& o) const;
  MatrixFq operator-(const MatrixFq& o) const;
  MatrixFq operator*(const FqElem& s) const;
  MatrixFq transpose() const;
  MatrixFq pow(std::int64_t k) const;  // negative k needs invertibility

  std::size_t rank() const;
  FqElem det() const;
  std::optional<MatrixFq> inverse() const;
  bool is_invertible() const { return !det().is_zero(); }
  // Basis (as rows) of {v : v M = 0}.
  std::vector<std::vector<FqElem>> left_kernel() const;
  std::vector<FqElem> row_times(const std::vector<FqElem>& v) const;  // v M

  MatrixFq block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const MatrixFq& b);

  bool operator==(const MatrixFq& o) const;
  std::string str() const;

 private:
  Field f_;
  std::size_t r_ = 0, c_ = 0;
  std::vector<FqElem> a_;
};

inline MatrixFq power(const MatrixFq& m, std::int64_t k) { return m.pow(k); }
MatrixFq direct_sum(const std::vector<MatrixFq>& blocks);

// Frobenius block: companion matrix with the coefficient row last,
// rows e_i -> e_{i+1}, last row (-c_0, ..., -c_{k-1}).
MatrixFq companion(const FqPoly& chi);

// p(M) for square M.
MatrixFq eval_poly(const FqPoly& p, const MatrixFq& m);

// Invariant factors chi_1 | chi_2 | ... (monic, nonconstant), degrees sum to n.
std::vector<FqPoly> rational_canonical_form(const MatrixFq& a);

struct FrobeniusDecomposition {
  std::vector<FqPoly> invariant_factors;
  MatrixFq Q;  // Q A Q^-1 = direct sum of companion(invariant_factors)
};
FrobeniusDecomposition frobenius_decomposition(const MatrixFq& a);

Fraction rank_distance(const MatrixFq& a, const MatrixFq& b);

// Label "[X + 1, X^2 + 1]" for a conjugacy class.
std::string invariant_factor_label(const std::vector<FqPoly>& f);

}  // namespace wordmap
