#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "wordmap/matrix_fq.hpp"
#include "wordmap/number_theory.hpp"
#include "wordmap/permutation.hpp"
#include "wordmap/word.hpp"

namespace wordmap {

struct ImageReport {
  std::string group;
  std::set<std::string> labels;       // conjugacy class labels
  std::set<CycleType> cycle_types;    // symmetric groups only
  bool exhaustive = true;
  std::uint64_t seed = 0;
  std::uint64_t evaluations = 0;
};

// Partitions of n as cycle types, in the canonical order of CycleType.
std::vector<CycleType> cycle_types_of(std::size_t n);

// Exhaustive; n <= 8.
ImageReport word_image_sym(const Word& w, std::size_t n);

// min d_H(sigma, tau) over tau in w(S_n); n <= 7.
Fraction exact_distance_sym(const Word& w, const Permutation& sigma);
Fraction exact_distance_sym(const ImageReport& image, const Permutation& sigma);

struct MatrixGroup {
  enum class Kind { GL, SL };
  Kind kind = Kind::GL;
  std::size_t d = 1;
  Field field;

  std::uint64_t order() const;
  std::string str() const;  // "GL_2(4)"
  bool contains(const MatrixFq& m) const;
};

// All elements, in index order of their entry codes; |G| <= 10^6.
std::vector<MatrixFq> enumerate_group(const MatrixGroup& g);

// Exhaustive when |G|^2 <= 10^8, otherwise `budget` seeded random pairs.
ImageReport word_image_matrix(const Word& w, const MatrixGroup& g, std::uint64_t budget = 200000,
                              std::uint64_t seed = 1);

// min rank distance from a to the classes in the image.
Fraction exact_distance_matrix(const ImageReport& image, const MatrixGroup& g, const MatrixFq& a);

}  // namespace wordmap
