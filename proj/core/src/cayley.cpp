#include "wordmap/cayley.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <map>
#include <numbers>
#include <numeric>
#include <random>
#include <stdexcept>

#include "wordmap/fox.hpp"

namespace wordmap {

void FiniteQuotient::check() const {
  std::size_t n = g.size();
  if (n == 0 || h.size() != n) throw std::invalid_argument("quotient generators must act on the same N >= 1 points");
  std::vector<bool> seen(n, false);
  std::vector<std::uint32_t> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    for (auto u : {g[v], h[v]}) {
      if (!seen[u]) {
        seen[u] = true;
        ++count;
        stack.push_back(u);
      }
    }
  }
  if (count != n) throw std::invalid_argument("quotient generators are not transitive");
}

void FiniteQuotient::check_relation(const Word& w) const {
  if (!evaluate(w, g, h, Permutation::identity(g.size())).is_identity())
    throw std::invalid_argument("w(g,h) is not the identity in the quotient");
}

FiniteQuotient cyclic_quotient(std::size_t m, std::int64_t gx, std::int64_t gy) {
  if (m == 0) throw std::invalid_argument("cyclic quotient of order 0");
  Permutation s = Permutation::long_cycle(m);
  FiniteQuotient q{"Z/" + std::to_string(m), s.pow(gx), s.pow(gy)};
  q.check();
  return q;
}

FiniteQuotient abelian_quotient(std::size_t m, std::size_t m2) {
  if (m == 0 || m2 == 0) throw std::invalid_argument("abelian quotient of order 0");
  std::vector<std::uint32_t> gi(m * m2), hi(m * m2);
  for (std::size_t b = 0; b < m2; ++b)
    for (std::size_t a = 0; a < m; ++a) {
      gi[a + m * b] = static_cast<std::uint32_t>((a + 1) % m + m * b);
      hi[a + m * b] = static_cast<std::uint32_t>(a + m * ((b + 1) % m2));
    }
  FiniteQuotient q{"Z/" + std::to_string(m) + " x Z/" + std::to_string(m2), Permutation(gi), Permutation(hi)};
  q.check();
  return q;
}

FiniteQuotient regular_quotient(std::string name, const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw std::invalid_argument("generators act on different sets");
  std::vector<Permutation> elems{Permutation::identity(a.size())};
  std::map<Permutation, std::uint32_t> index{{elems[0], 0}};
  std::vector<std::uint32_t> gi, hi;
  for (std::size_t v = 0; v < elems.size(); ++v) {
    for (int k = 0; k < 2; ++k) {
      Permutation u = elems[v] * (k == 0 ? a : b);
      auto [it, fresh] = index.try_emplace(u, static_cast<std::uint32_t>(elems.size()));
      if (fresh) elems.push_back(u);
      (k == 0 ? gi : hi).push_back(it->second);
    }
  }
  FiniteQuotient q{std::move(name), Permutation(gi), Permutation(hi)};
  q.check();
  return q;
}

FiniteQuotient dihedral_quotient(std::size_t n) {
  if (n < 3) throw std::invalid_argument("dihedral quotient needs n >= 3");
  std::vector<std::uint32_t> refl(n);
  for (std::size_t i = 0; i < n; ++i) refl[i] = static_cast<std::uint32_t>((n - i) % n);
  return regular_quotient("D" + std::to_string(n), Permutation::long_cycle(n), Permutation(refl));
}

FiniteQuotient symmetric_quotient(std::size_t n) {
  if (n < 2) throw std::invalid_argument("symmetric quotient needs n >= 2");
  return regular_quotient("S" + std::to_string(n), Permutation::from_cycles(n, {{0, 1}}),
                          Permutation::long_cycle(n));
}

FiniteQuotient read_quotient(std::istream& in) {
  std::size_t n = 0;
  if (!(in >> n) || n == 0) throw std::invalid_argument("quotient: expected order N >= 1");
  std::vector<std::uint32_t> gi(n), hi(n);
  for (auto* v : {&gi, &hi})
    for (auto& x : *v) {
      std::int64_t t;
      if (!(in >> t) || t < 0 || static_cast<std::size_t>(t) >= n)
        throw std::invalid_argument("quotient: bad image entry");
      x = static_cast<std::uint32_t>(t);
    }
  for (auto* v : {&gi, &hi}) {
    std::vector<std::uint32_t> s = *v;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
      throw std::invalid_argument("quotient: images are not a permutation");
  }
  FiniteQuotient q{"file", Permutation(gi), Permutation(hi)};
  q.check();
  return q;
}

IntMatrix d2_loop_walk(const Word& w, const FiniteQuotient& q) {
  q.check_relation(w);
  std::size_t n = q.order();
  Permutation gi = q.g.inverse(), hi = q.h.inverse();
  IntMatrix m = int_matrix(n, 2 * n);
  auto letters = w.letters();
  for (std::size_t c = 0; c < n; ++c) {
    std::uint32_t v = static_cast<std::uint32_t>(c);
    for (auto [gen, s] : letters) {
      std::size_t off = gen == Gen::x ? 0 : n;
      const Permutation& fwd = gen == Gen::x ? q.g : q.h;
      const Permutation& back = gen == Gen::x ? gi : hi;
      if (s > 0) {
        m[c][off + v] += 1;
        v = fwd[v];
      } else {
        v = back[v];
        m[c][off + v] -= 1;
      }
    }
  }
  return m;
}

IntMatrix d2_fox_pushforward(const Word& w, const FiniteQuotient& q) {
  q.check_relation(w);
  std::size_t n = q.order();
  IntMatrix m = int_matrix(n, 2 * n);
  Permutation id = Permutation::identity(n);
  for (Gen var : {Gen::x, Gen::y}) {
    std::size_t off = var == Gen::x ? 0 : n;
    GroupRingElem d = fox_derivative(w, var);
    for (const auto& [u, coef] : d.terms()) {
      Permutation pu = evaluate(u, q.g, q.h, id);
      for (std::size_t c = 0; c < n; ++c) m[c][off + pu[c]] += coef;
    }
  }
  return m;
}

IntMatrix build_d2(const Word& w, const FiniteQuotient& q) {
  IntMatrix a = d2_loop_walk(w, q);
  if (a != d2_fox_pushforward(w, q)) throw std::logic_error("loop walk and Fox pushforward disagree");
  return a;
}

CohomReport cohomology_defect(const IntMatrix& d2) {
  CohomReport r;
  r.N = d2.size();
  auto ir = independent_rows(d2);
  r.rank = ir.rank();
  r.defect = r.N - r.rank;
  r.epsilon = r.N ? Fraction(static_cast<std::int64_t>(r.defect), static_cast<std::int64_t>(r.N)) : Fraction(0);
  r.pivot_rows = ir.rows;
  r.pivot_cols = ir.pivot_cols;
  return r;
}

Eigen::MatrixXcd evaluate_unitary(const Word& w, const Eigen::MatrixXcd& g, const Eigen::MatrixXcd& h) {
  Eigen::MatrixXcd gi = g.adjoint(), hi = h.adjoint();
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Identity(g.rows(), g.cols());
  for (auto [gen, s] : w.letters()) {
    const Eigen::MatrixXcd& m = gen == Gen::x ? (s > 0 ? g : gi) : (s > 0 ? h : hi);
    acc = acc * m;
  }
  return acc;
}

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;

void measure(MonomialWitness& mw, const Word& w, double tol) {
  mw.value = evaluate_unitary(w, mw.Mg, mw.Mh);
  auto n = static_cast<std::size_t>(mw.value.rows());
  mw.max_offdiag = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) mw.max_offdiag = std::max(mw.max_offdiag, std::abs(mw.value(i, j)));
  mw.matched = 0;
  mw.max_matched_residual = 0;
  mw.max_residual = 0;
  for (std::size_t i = 0; i < n; ++i) {
    double r = std::abs(mw.value(i, i) - mw.target[i]);
    mw.max_residual = std::max(mw.max_residual, r);
    if (r <= tol) {
      ++mw.matched;
      mw.max_matched_residual = std::max(mw.max_matched_residual, r);
    }
  }
}

}  // namespace

MonomialWitness monomial_witness(const Word& w, const FiniteQuotient& q,
                                 const std::vector<std::complex<double>>& target, double tol) {
  std::size_t n = q.order();
  if (target.size() != n) throw std::invalid_argument("target length differs from |Q|");
  auto ab = abelianization(w);
  if (ab.first == 0 && ab.second == 0) {
    std::complex<double> prod = 1;
    for (const auto& t : target) prod *= t / std::abs(t);
    if (std::abs(prod - 1.0) > 1e-9) throw std::invalid_argument("SU constraint violation: target phases do not multiply to 1");
  }
  MonomialWitness mw;
  mw.target = target;
  IntMatrix d2 = build_d2(w, q);
  mw.report = cohomology_defect(d2);

  // psi on pivot columns from the exact inverse of the pivot block
  std::size_t r = mw.report.rank;
  RatMatrix sub(r, std::vector<BigRational>(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) sub[i][j] = BigRational(d2[mw.report.pivot_rows[i]][mw.report.pivot_cols[j]]);
  RatMatrix inv = r ? inverse(sub) : RatMatrix{};
  std::vector<double> theta(r);
  for (std::size_t i = 0; i < r; ++i) theta[i] = std::arg(target[mw.report.pivot_rows[i]]) / kTwoPi;
  mw.psi.assign(2 * n, 0.0);
  for (std::size_t j = 0; j < r; ++j) {
    double s = 0;
    for (std::size_t i = 0; i < r; ++i) s += inv[j][i].convert_to<double>() * theta[i];
    mw.psi[mw.report.pivot_cols[j]] = s;
  }

  mw.Mg = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  mw.Mh = mw.Mg;
  for (std::size_t v = 0; v < n; ++v) {
    mw.Mg(static_cast<Eigen::Index>(v), q.g[v]) = std::polar(1.0, kTwoPi * mw.psi[v]);
    mw.Mh(static_cast<Eigen::Index>(v), q.h[v]) = std::polar(1.0, kTwoPi * mw.psi[n + v]);
  }
  measure(mw, w, tol);
  if (mw.max_offdiag > tol) throw std::logic_error("monomial witness value is not diagonal");
  for (auto v : mw.report.pivot_rows)
    if (std::abs(mw.value(static_cast<Eigen::Index>(v), static_cast<Eigen::Index>(v)) - target[v]) > tol)
      throw std::logic_error("monomial witness misses a pivot cell");
  if (mw.matched + mw.report.defect < n) throw std::logic_error("monomial witness matched fewer than N - d cells");
  return mw;
}

void to_special_unitary(MonomialWitness& mw, const Word& w) {
  auto ab = abelianization(w);
  if (ab.first != 0 || ab.second != 0) throw std::invalid_argument("determinant correction needs w in F2'");
  double n = static_cast<double>(mw.Mg.rows());
  for (auto* m : {&mw.Mg, &mw.Mh}) {
    std::complex<double> d = m->determinant();
    *m *= std::polar(1.0, -std::arg(d) / n);
  }
  measure(mw, w, 1e-9);
}

namespace {

BigInt mod_floor(const BigInt& a, const BigInt& m) {
  BigInt r = a % m;
  if (r < 0) r += m;
  return r;
}

}  // namespace

AbelianSolution solve_in_abelian(const IntMatrix& m, const std::vector<BigInt>& moduli,
                                 const std::vector<std::vector<BigInt>>& target,
                                 std::optional<std::vector<std::size_t>> rows) {
  AbelianSolution out;
  std::size_t nrows = m.size();
  std::size_t ncols = nrows ? m[0].size() : 0;
  if (target.size() != nrows) throw std::invalid_argument("target has the wrong number of rows");
  for (const auto& t : target)
    if (t.size() != moduli.size()) throw std::invalid_argument("target has the wrong number of components");
  if (rows) {
    out.rows = *rows;
  } else {
    out.rows.resize(nrows);
    std::iota(out.rows.begin(), out.rows.end(), 0);
  }
  IntMatrix sub;
  for (auto r : out.rows) sub.push_back(m[r]);
  std::size_t sr = sub.size();
  out.psi.assign(ncols, std::vector<BigInt>(moduli.size(), 0));
  if (sr == 0) {
    out.solvable = true;
    out.image_index.assign(moduli.size(), 1);
    return out;
  }
  SmithForm snf = smith_normal_form(sub);
  out.divisors = snf.divisors;
  std::size_t rank = snf.divisors.size();
  out.multiplier = rank ? snf.divisors.back() : BigInt(1);
  if (rank < sr) out.multiplier = 0;  // rows dependent: no scalar suffices in general

  out.solvable = true;
  for (std::size_t comp = 0; comp < moduli.size(); ++comp) {
    const BigInt& mod = moduli[comp];
    BigInt index = 1;
    for (std::size_t i = 0; i < sr; ++i) {
      if (i < rank) {
        index *= mod == 0 ? BigInt(1) : BigInt(boost::multiprecision::gcd(snf.divisors[i], mod));
      } else {
        index = mod == 0 ? BigInt(0) : BigInt(index * mod);
      }
    }
    out.image_index.push_back(index);

    std::vector<BigInt> b(sr, 0);
    for (std::size_t i = 0; i < sr; ++i)
      for (std::size_t j = 0; j < sr; ++j) b[i] += snf.U[i][j] * target[out.rows[j]][comp];
    std::vector<BigInt> y(ncols, 0);
    for (std::size_t i = 0; i < sr; ++i) {
      if (i >= rank) {
        if ((mod == 0 && b[i] != 0) || (mod != 0 && mod_floor(b[i], mod) != 0)) out.solvable = false;
        continue;
      }
      const BigInt& d = snf.divisors[i];
      if (mod == 0) {
        if (b[i] % d != 0) out.solvable = false;
        else y[i] = b[i] / d;
      } else {
        BigInt g = boost::multiprecision::gcd(d, mod);
        BigInt bi = mod_floor(b[i], mod);
        if (bi % g != 0) {
          out.solvable = false;
          continue;
        }
        BigInt mg = mod / g;
        if (mg == 1) continue;
        BigInt dg = mod_floor(d / g, mg);
        // inverse of dg mod mg via extended Euclid
        BigInt r0 = mg, r1 = dg, s0 = 0, s1 = 1;
        while (r1 != 0) {
          BigInt qq = r0 / r1;
          BigInt t = r0 - qq * r1;
          r0 = r1;
          r1 = t;
          t = s0 - qq * s1;
          s0 = s1;
          s1 = t;
        }
        y[i] = mod_floor((bi / g) * s0, mg);
      }
    }
    for (std::size_t c = 0; c < ncols; ++c) {
      BigInt s = 0;
      for (std::size_t j = 0; j < ncols; ++j) s += snf.V[c][j] * y[j];
      out.psi[c][comp] = mod == 0 ? s : mod_floor(s, mod);
    }
  }
  if (!out.solvable) {
    for (auto& v : out.psi) std::fill(v.begin(), v.end(), BigInt(0));
  } else {
    // independent check
    for (std::size_t comp = 0; comp < moduli.size(); ++comp)
      for (std::size_t i = 0; i < sr; ++i) {
        BigInt s = 0;
        for (std::size_t c = 0; c < ncols; ++c) s += sub[i][c] * out.psi[c][comp];
        BigInt diff = s - target[out.rows[i]][comp];
        if (moduli[comp] == 0 ? diff != 0 : mod_floor(diff, moduli[comp]) != 0)
          throw std::logic_error("abelian solution check failed");
      }
  }
  return out;
}

std::vector<BigRational> permute_coordinates(const std::vector<BigRational>& u, const Permutation& sigma) {
  std::vector<BigRational> v(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) v[sigma[i]] = u[i];
  return v;
}

WidthTwoResult width_two_shift(const RatMatrix& U1, const RatMatrix& U2, std::size_t n, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("width_two_shift needs n >= 1");
  for (const auto* u : {&U1, &U2})
    for (const auto& row : *u) {
      if (row.size() != n) throw std::invalid_argument("subspace vector has the wrong length");
      BigRational s = 0;
      for (const auto& x : row) s += x;
      if (s != 0) throw std::invalid_argument("subspace vector is not in the zero-sum hyperplane");
    }
  if (rank_q(U1) + rank_q(U2) + 1 < n) throw std::invalid_argument("dim U1 + dim U2 < n - 1");

  WidthTwoResult res;
  auto works = [&](const Permutation& s) {
    ++res.trials;
    RatMatrix m = U1;
    for (const auto& row : U2) m.push_back(permute_coordinates(row, s));
    return rank_q(m) + 1 == n;
  };
  Permutation id = Permutation::identity(n);
  if (works(id)) {
    res.sigma = id;
    return res;
  }
  std::mt19937_64 rng(seed);
  for (int t = 0; t < 256; ++t) {
    Permutation s = random_permutation(n, rng);
    if (works(s)) {
      res.sigma = s;
      return res;
    }
  }
  if (n <= 8) {
    res.exhaustive = true;
    std::vector<std::uint32_t> img(n);
    std::iota(img.begin(), img.end(), 0);
    do {
      Permutation s(img);
      if (works(s)) {
        res.sigma = s;
        return res;
      }
    } while (std::next_permutation(img.begin(), img.end()));
  }
  throw std::runtime_error("width_two_shift: no shift found");
}

}  // namespace wordmap
