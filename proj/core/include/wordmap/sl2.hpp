#pragma once

#include <cstdint>
#include <string>

#include "wordmap/finite_field.hpp"
#include "wordmap/permutation.hpp"
#include "wordmap/word.hpp"

namespace wordmap {

// Element of SL_2(q); the determinant is checked at construction.
class SL2Elem {
 public:
  SL2Elem() = default;
  SL2Elem(FqElem a, FqElem b, FqElem c, FqElem d);
  static SL2Elem identity(const Field& f);
  static SL2Elem lower_unipotent(const FqElem& u);  // [[1,0],[u,1]]
  static SL2Elem upper_unipotent(const FqElem& u);  // [[1,u],[0,1]]

  const FqElem& a() const { return a_; }
  const FqElem& b() const { return b_; }
  const FqElem& c() const { return c_; }
  const FqElem& d() const { return d_; }
  Field field() const { return a_.field(); }
  FqElem trace() const { return a_ + d_; }
  bool is_central() const;  // +-identity

  SL2Elem operator*(const SL2Elem& o) const;
  SL2Elem inverse() const;
  SL2Elem pow(std::int64_t k) const;
  SL2Elem map(const Embedding& emb) const;

  bool operator==(const SL2Elem& o) const;
  std::string str() const;

 private:
  struct Unchecked {};
  SL2Elem(FqElem a, FqElem b, FqElem c, FqElem d, Unchecked);
  FqElem a_, b_, c_, d_;
};

inline SL2Elem power(const SL2Elem& g, std::int64_t k) { return g.pow(k); }
SL2Elem evaluate_sl2(const Word& w, const SL2Elem& g, const SL2Elem& h);

// Points of L_q: index 0 is [1:0], index 1+i is [x_i:1] with x_i = element(i).
class ProjLine {
 public:
  explicit ProjLine(Field f) : f_(f) {}
  std::size_t size() const { return static_cast<std::size_t>(f_.q() + 1); }
  std::uint32_t index_of(const FqElem& x0, const FqElem& x1) const;  // normalized [x0:x1]
  std::pair<FqElem, FqElem> point(std::size_t i) const;

 private:
  Field f_;
};

// Right action [a:b] -> [(a,b) g] on row vectors.
Permutation projective_permutation(const SL2Elem& g);

// Closed-form cycle type from the eigenvalue order.
CycleType classify_cycle_type(const SL2Elem& g);

// Trace of w([[1,0],[U,1]], [[1,1],[0,1]]) in F_p[U]; throws if w is not
// alternating or p divides a syllable exponent.
FqPoly unipotent_trace_poly(const Word& w, const Field& f);

struct TraceSolution {
  int m = 0;
  Field field;  // F_{q^m}
  FqElem U;
  SL2Elem g, h;
};
TraceSolution solve_trace(const Word& w, const Field& fq, const FqElem& t);

struct IsotypicValue {
  Permutation sigma;  // w(pg, ph) on q^{im}+1 points
  Permutation pg, ph;
  int m = 0;
  Field field;  // F_{q^{im}}
  FqElem lambda, t, U;
};
// Cycle type (1^2, k^{(q^{im}-1)/k}); result is memoized.
IsotypicValue isotypic_word_value(const Word& w, std::uint64_t k, const Field& fq, int i);
// The m used by isotypic_word_value for base field fq (i = 1).
int isotypic_extension_degree(const Word& w, std::uint64_t k, const Field& fq);

struct NearCycleValue {
  Permutation sigma;  // w(pg, ph) on q+1 points
  Permutation pg, ph;
  FqElem U;
  std::uint64_t eigen_order = 0;
  std::size_t cycles = 0;
  std::size_t defect = 0;  // points off a (q+1)-cycle: number of cycles if >= 2, else 0
};
NearCycleValue near_cycle_word_value(const Word& w, const Field& fq);

// Order of the companion matrix [[0,-1],[1,t]] in SL_2(q).
std::uint64_t companion_order(const FqElem& t);
// Largest integer strictly below 2 + sqrt(q*l).
std::uint64_t near_cycle_defect_cap(std::uint64_t q, std::uint64_t l);

}  // namespace wordmap
