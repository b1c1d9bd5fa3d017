#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "wordmap/number_theory.hpp"

namespace wordmap {

// Multiset of cycle lengths: length -> count.
struct CycleType {
  std::map<std::uint64_t, std::uint64_t> counts;

  static CycleType from_lengths(const std::vector<std::uint64_t>& lengths);
  std::uint64_t degree() const;
  std::uint64_t num_cycles() const;
  std::string str() const;  // "(1^2, 2^12)"
  bool operator==(const CycleType&) const = default;
  auto operator<=>(const CycleType&) const = default;
};

// Bijection of {0..n-1}; composition follows the right action:
// i.(s*t) = (i.s).t, i.e. (s*t)[i] = t[s[i]].
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::size_t n);  // identity
  explicit Permutation(std::vector<std::uint32_t> image);

  static Permutation identity(std::size_t n) { return Permutation(n); }
  static Permutation from_cycles(std::size_t n, const std::vector<std::vector<std::uint32_t>>& cycles);
  static Permutation long_cycle(std::size_t n);  // (0 1 ... n-1)

  std::size_t size() const { return img_.size(); }
  std::uint32_t operator[](std::size_t i) const { return img_[i]; }
  const std::vector<std::uint32_t>& images() const { return img_; }

  Permutation operator*(const Permutation& o) const;
  Permutation inverse() const;
  Permutation pow(std::int64_t k) const;
  // pi^-1 * this * pi: the same permutation with points relabelled by pi.
  Permutation relabel(const Permutation& pi) const;

  std::vector<std::vector<std::uint32_t>> cycles() const;  // each starts at its least point
  CycleType cycle_type() const;
  std::size_t num_cycles() const;
  bool is_identity() const;

  std::string str() const;  // cycle notation, "()" for identity
  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<std::uint32_t> img_;
};

inline Permutation power(const Permutation& p, std::int64_t k) { return p.pow(k); }

// Cycle notation "(0 1)(2 3 4)"; points outside all cycles are fixed.
Permutation parse_permutation(const std::string& text, std::size_t n);

Permutation direct_sum(const std::vector<Permutation>& blocks);

std::size_t hamming_count(const Permutation& a, const Permutation& b);
Fraction hamming_distance(const Permutation& a, const Permutation& b);

// A permutation with the given cycle type, cycles laid out on consecutive points
// in decreasing length order.
Permutation permutation_of_type(const CycleType& t);

// Portable uniform draw in [0, bound).
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);
Permutation random_permutation(std::size_t n, std::mt19937_64& rng);

}  // namespace wordmap
