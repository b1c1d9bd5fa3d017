#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wordmap/matrix_fq.hpp"
#include "wordmap/number_theory.hpp"
#include "wordmap/symmetric_approx.hpp"
#include "wordmap/word.hpp"

namespace wordmap {

// F(chi(X^c))^c against F(chi)^{+c}.
struct PowerSplitCertificate {
  FqPoly chi;
  std::size_t c = 0;
  std::vector<FqPoly> lhs_factors;  // invariant factors of F(chi(X^c))^c
  std::vector<FqPoly> rhs_factors;  // invariant factors of F(chi)^{+c}
  bool similar = false;
};
// Throws std::invalid_argument for constant chi or chi(0) = 0.
PowerSplitCertificate power_block_split(const FqPoly& chi, std::size_t c);

struct GLSummand {
  FqPoly chi;
  std::size_t degree = 0;
  std::size_t copies = 0;
  std::size_t offset = 0;  // first coordinate in the Frobenius basis
  std::string path;        // monomial | permutation
};

struct GLWitness {
  Word word;
  MatrixFq g, h, value, target;
  Fraction achieved{0};
  MatrixFq Q;  // Q target Q^-1 is the Frobenius normal form
  std::vector<GLSummand> trace;
  std::optional<Witness> embedded;  // symmetric witness on the permutation coordinates
  std::size_t embedded_mismatches = 0;

  // Re-evaluates w(g,h) and the rank distance; throws std::logic_error on mismatch.
  void verify() const;
};

// Throws std::invalid_argument for the trivial word or a singular target.
GLWitness approx_gl(const Word& w, const MatrixFq& a);

}  // namespace wordmap
