#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wordmap/number_theory.hpp"
#include "wordmap/permutation.hpp"
#include "wordmap/word.hpp"

namespace wordmap {

// n = sum_{i>=1} n_i (q^i + 1) + n_0, built largest summand first with
// maximal multiplicity.
struct GreedyDecomposition {
  std::uint64_t n = 0;
  std::uint64_t q = 0;
  std::vector<std::uint64_t> coeffs;  // coeffs[i] = n_i, coeffs[0] = n_0

  std::uint64_t n0() const { return coeffs.empty() ? 0 : coeffs[0]; }
  std::size_t s() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  std::uint64_t sum_blocks() const;  // sum_{i>=1} n_i
  bool satisfies_invariants() const;
  std::string str() const;
};
GreedyDecomposition greedy_decomposition(std::uint64_t n, std::uint64_t q);

struct BlockTrace {
  std::uint64_t k = 0;       // cycle length of the isotypic block
  std::uint64_t points = 0;  // k * c_k
  std::string path;          // identity | exact | small-k | large-k | power
  std::uint64_t p = 0;
  int m = 0;
  std::uint64_t q = 0;  // decomposition base
  std::vector<std::uint64_t> decomposition;
  Fraction bound{0};
  std::uint64_t mismatches = 0;
};

struct Witness {
  Word word;
  Permutation g, h, value, target;
  Fraction achieved{0};
  Fraction bound{0};
  std::vector<BlockTrace> trace;

  // Re-evaluates w(g,h) and the distance; throws std::logic_error on mismatch.
  void verify() const;
};

Fraction hamming_distance_checked(const Permutation& a, const Permutation& b);

// Witness for the canonical k-isotypic target on k*c_k points.
Witness approx_isotypic(const Word& w, std::uint64_t k, std::uint64_t c_k);

// Witness for x^a.
Witness approx_power_word(std::int64_t a, const Permutation& sigma);

// Main entry; throws std::invalid_argument for the trivial word.
Witness approx(const Word& w, const Permutation& sigma);

// Relabels value so that it agrees with target on as many points as the
// cycle matching + linear layout heuristic finds; returns pi with
// value.relabel(pi) the aligned permutation.
Permutation align_to_target(const Permutation& value, const Permutation& target);

}  // namespace wordmap
