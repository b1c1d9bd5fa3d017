#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "wordmap/exact_linalg.hpp"
#include "wordmap/number_theory.hpp"
#include "wordmap/permutation.hpp"
#include "wordmap/word.hpp"

namespace wordmap {

// Finite quotient of F_2 given by right translation of its generators on
// {0..N-1}; vertex 0 plays the identity.
struct FiniteQuotient {
  std::string name;
  Permutation g, h;

  std::size_t order() const { return g.size(); }
  // Throws std::invalid_argument when <g,h> is not transitive.
  void check() const;
  // Throws std::invalid_argument when w(g,h) is not the identity.
  void check_relation(const Word& w) const;
};

FiniteQuotient cyclic_quotient(std::size_t m, std::int64_t gx = 1, std::int64_t gy = 1);
// Z/m x Z/m2 with g = (1,0), h = (0,1).
FiniteQuotient abelian_quotient(std::size_t m, std::size_t m2);
// Regular representation of the group generated by a and b.
FiniteQuotient regular_quotient(std::string name, const Permutation& a, const Permutation& b);
FiniteQuotient dihedral_quotient(std::size_t n);
FiniteQuotient symmetric_quotient(std::size_t n);
// Text: N, then N images of x, then N images of y (0-based).
FiniteQuotient read_quotient(std::istream& in);

// N x 2N; column v is the edge (v,x), column N+v the edge (v,y).
IntMatrix d2_loop_walk(const Word& w, const FiniteQuotient& q);
IntMatrix d2_fox_pushforward(const Word& w, const FiniteQuotient& q);
// Both constructions, asserted equal.
IntMatrix build_d2(const Word& w, const FiniteQuotient& q);

struct CohomReport {
  std::size_t N = 0;
  std::size_t rank = 0;
  std::size_t defect = 0;  // d(pi)
  Fraction epsilon{0};
  std::vector<std::size_t> pivot_rows;
  std::vector<std::size_t> pivot_cols;
};
CohomReport cohomology_defect(const IntMatrix& d2);

struct MonomialWitness {
  Eigen::MatrixXcd Mg, Mh, value;
  std::vector<std::complex<double>> target;
  std::vector<double> psi;  // 1-cochain in units of full turns
  CohomReport report;
  std::size_t matched = 0;
  double max_offdiag = 0;
  double max_matched_residual = 0;
  double max_residual = 0;  // over all diagonal entries
};

Eigen::MatrixXcd evaluate_unitary(const Word& w, const Eigen::MatrixXcd& g, const Eigen::MatrixXcd& h);

// Throws std::invalid_argument on the SU constraint, std::logic_error when
// the numerical check fails.
MonomialWitness monomial_witness(const Word& w, const FiniteQuotient& q,
                                 const std::vector<std::complex<double>>& target, double tol = 1e-9);

// Rescales M_g, M_h into SU_N (w in F_2' only) and re-evaluates.
void to_special_unitary(MonomialWitness& mw, const Word& w);

// Coefficients in A = prod Z/m_i (m_i = 0 means Z).
struct AbelianSolution {
  bool solvable = false;
  std::vector<std::vector<BigInt>> psi;   // per column, per component
  std::vector<std::size_t> rows;          // rows that were solved
  std::vector<BigInt> divisors;           // Smith divisors of M restricted to rows
  BigInt multiplier = 1;                  // c: c * (anything on rows) is achievable
  std::vector<BigInt> image_index;        // per component, 0 when infinite
};
AbelianSolution solve_in_abelian(const IntMatrix& m, const std::vector<BigInt>& moduli,
                                 const std::vector<std::vector<BigInt>>& target,
                                 std::optional<std::vector<std::size_t>> rows = std::nullopt);

struct WidthTwoResult {
  Permutation sigma;
  std::size_t trials = 0;
  bool exhaustive = false;
};
// U1, U2 are lists of row vectors of length n in the zero-sum hyperplane.
WidthTwoResult width_two_shift(const RatMatrix& U1, const RatMatrix& U2, std::size_t n,
                               std::uint64_t seed = 1);
// u sigma: coordinate i moves to sigma(i).
std::vector<BigRational> permute_coordinates(const std::vector<BigRational>& u, const Permutation& sigma);

}  // namespace wordmap
