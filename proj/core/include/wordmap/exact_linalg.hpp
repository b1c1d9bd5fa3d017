#pragma once

#include <cstddef>
#include <vector>

#include "wordmap/number_theory.hpp"

namespace wordmap {

using IntMatrix = std::vector<std::vector<BigInt>>;
using RatMatrix = std::vector<std::vector<BigRational>>;

IntMatrix int_matrix(std::size_t rows, std::size_t cols);
RatMatrix to_rational(const IntMatrix& m);
IntMatrix identity_int(std::size_t n);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);

// Rows chosen greedily by increasing index; each is independent of the rows
// chosen before it.  rows.size() is the rank over Q.
struct IndependentRows {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> pivot_cols;
  std::size_t rank() const { return rows.size(); }
};
IndependentRows independent_rows(const RatMatrix& m);
IndependentRows independent_rows(const IntMatrix& m);
std::size_t rank_q(const RatMatrix& m);
std::size_t rank_q(const IntMatrix& m);

// Throws std::domain_error when singular.
RatMatrix inverse(const RatMatrix& m);

// U * M * V = diag(d_1, ..., d_r, 0, ...), d_i > 0, d_i | d_{i+1}; U, V unimodular.
struct SmithForm {
  std::vector<BigInt> divisors;  // nonzero diagonal entries
  IntMatrix U, V;
};
SmithForm smith_normal_form(const IntMatrix& m);

}  // namespace wordmap
