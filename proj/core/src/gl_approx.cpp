#include "wordmap/gl_approx.hpp"

#include <numeric>
#include <stdexcept>

#include "wordmap/cayley.hpp"

namespace wordmap {

PowerSplitCertificate power_block_split(const FqPoly& chi, std::size_t c) {
  if (chi.degree() < 1) throw std::invalid_argument("power_block_split: chi must be nonconstant");
  if (chi.coeff(0).is_zero()) throw std::invalid_argument("power_block_split: chi(0) = 0");
  if (c == 0) throw std::invalid_argument("power_block_split: c must be >= 1");
  PowerSplitCertificate cert;
  cert.chi = chi.monic();
  cert.c = c;
  MatrixFq lhs = companion(cert.chi.compose_power(c)).pow(static_cast<std::int64_t>(c));
  std::vector<MatrixFq> copies(c, companion(cert.chi));
  cert.lhs_factors = rational_canonical_form(lhs);
  cert.rhs_factors = rational_canonical_form(direct_sum(copies));
  cert.similar = cert.lhs_factors == cert.rhs_factors;
  return cert;
}

void GLWitness::verify() const {
  MatrixFq id = MatrixFq::identity(target.field(), target.rows());
  if (!(evaluate(word, g, h, id) == value)) throw std::logic_error("GL witness value is not w(g,h)");
  if (rank_distance(target, value) != achieved) throw std::logic_error("GL witness distance mismatch");
}

namespace {

// Exact block-monomial realization of F(chi)^{+c} over the cyclic quotient
// Z/c with coefficients in <X> inside (F_q[X]/chi)^x.
std::optional<std::pair<MatrixFq, MatrixFq>> monomial_summand(const Word& w, const FqPoly& chi, std::size_t c) {
  Field f = chi.field();
  auto k = static_cast<std::size_t>(chi.degree());
  std::uint64_t size = 1;
  for (std::size_t i = 0; i < k; ++i) {
    size *= f.q();
    if (size > (1u << 16)) return std::nullopt;
  }
  FqPoly x = FqPoly::X(f) % chi, one = FqPoly::constant(f.one()) % chi, t = x;
  std::uint64_t ord = 1;
  while (!(t == one)) {
    t = (t * x) % chi;
    if (++ord > size) return std::nullopt;
  }
  MatrixFq block = companion(chi);
  std::vector<MatrixFq> powers;
  for (std::uint64_t e = 0; e < ord; ++e) powers.push_back(block.pow(static_cast<std::int64_t>(e)));
  MatrixFq want = direct_sum(std::vector<MatrixFq>(c, block));
  MatrixFq id = MatrixFq::identity(f, k * c);

  auto [ax, ay] = abelianization(w);
  auto cc = static_cast<std::int64_t>(c);
  int tried = 0;
  for (std::int64_t i = 0; i < cc; ++i)
    for (std::int64_t j = 0; j < cc; ++j) {
      if (std::gcd(std::gcd(i, j), cc) != 1) continue;
      if (((ax % cc) * i + (ay % cc) * j) % cc != 0) continue;
      if (++tried > 64) return std::nullopt;
      FiniteQuotient q = cyclic_quotient(c, i, j);
      IntMatrix d2 = build_d2(w, q);
      std::vector<std::vector<BigInt>> ones(c, std::vector<BigInt>{1});
      AbelianSolution sol = solve_in_abelian(d2, {BigInt(ord)}, ones);
      if (!sol.solvable) continue;
      MatrixFq G(f, k * c, k * c), H(f, k * c, k * c);
      for (std::size_t v = 0; v < c; ++v) {
        G.set_block(v * k, q.g[v] * k, powers[static_cast<std::size_t>(sol.psi[v][0])]);
        H.set_block(v * k, q.h[v] * k, powers[static_cast<std::size_t>(sol.psi[c + v][0])]);
      }
      if (evaluate(w, G, H, id) == want) return std::make_pair(G, H);
    }
  return std::nullopt;
}

}  // namespace

GLWitness approx_gl(const Word& w, const MatrixFq& a) {
  if (w.is_trivial()) throw std::invalid_argument("approx_gl: trivial word");
  if (a.rows() != a.cols() || a.rows() == 0) throw std::invalid_argument("approx_gl: target must be square");
  if (!a.is_invertible()) throw std::invalid_argument("approx_gl: singular target");
  Field f = a.field();
  std::size_t n = a.rows();

  GLWitness wit;
  wit.word = w;
  wit.target = a;
  FrobeniusDecomposition fd = frobenius_decomposition(a);
  wit.Q = fd.Q;

  // isotypic summands: equal neighbours in the divisibility chain
  std::size_t off = 0;
  for (std::size_t i = 0; i < fd.invariant_factors.size();) {
    std::size_t j = i;
    while (j < fd.invariant_factors.size() && fd.invariant_factors[j] == fd.invariant_factors[i]) ++j;
    GLSummand s;
    s.chi = fd.invariant_factors[i];
    s.degree = static_cast<std::size_t>(s.chi.degree());
    s.copies = j - i;
    s.offset = off;
    off += s.degree * s.copies;
    wit.trace.push_back(s);
    i = j;
  }

  MatrixFq G(f, n, n), H(f, n, n);
  std::vector<std::uint32_t> perm_coords;
  std::vector<std::vector<std::uint32_t>> cycles;
  for (auto& s : wit.trace) {
    if (auto mono = monomial_summand(w, s.chi, s.copies)) {
      s.path = "monomial";
      G.set_block(s.offset, s.offset, mono->first);
      H.set_block(s.offset, s.offset, mono->second);
      continue;
    }
    s.path = "permutation";
    // F(chi) -> F(X^k - 1), the k-cycle on the block's coordinates
    for (std::size_t b = 0; b < s.copies; ++b) {
      std::vector<std::uint32_t> cyc;
      for (std::size_t t = 0; t < s.degree; ++t) {
        cyc.push_back(static_cast<std::uint32_t>(perm_coords.size()));
        perm_coords.push_back(static_cast<std::uint32_t>(s.offset + b * s.degree + t));
      }
      cycles.push_back(std::move(cyc));
    }
  }
  if (!perm_coords.empty()) {
    Permutation pi = Permutation::from_cycles(perm_coords.size(), cycles);
    Witness sw = approx(w, pi);
    wit.embedded_mismatches = hamming_count(sw.value, sw.target);
    for (std::size_t u = 0; u < perm_coords.size(); ++u) {
      G.at(perm_coords[u], perm_coords[sw.g[u]]) = f.one();
      H.at(perm_coords[u], perm_coords[sw.h[u]]) = f.one();
    }
    wit.embedded = std::move(sw);
  }

  MatrixFq qinv = *fd.Q.inverse();
  wit.g = qinv * G * fd.Q;
  wit.h = qinv * H * fd.Q;
  wit.value = evaluate(w, wit.g, wit.h, MatrixFq::identity(f, n));
  wit.achieved = rank_distance(a, wit.value);
  wit.verify();
  return wit;
}

}  // namespace wordmap
