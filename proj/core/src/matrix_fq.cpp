#include "wordmap/matrix_fq.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace wordmap {

MatrixFq::MatrixFq(Field f, std::size_t rows, std::size_t cols)
    : f_(f), r_(rows), c_(cols), a_(rows * cols, f.zero()) {}

MatrixFq MatrixFq::identity(Field f, std::size_t n) {
  MatrixFq m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = f.one();
  return m;
}

MatrixFq MatrixFq::from_ints(Field f, const std::vector<std::vector<std::int64_t>>& rows) {
  std::size_t nc = rows.empty() ? 0 : rows[0].size();
  MatrixFq m(f, rows.size(), nc);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != nc) throw std::invalid_argument("ragged matrix");
    for (std::size_t j = 0; j < nc; ++j) m.at(i, j) = f.from_int(rows[i][j]);
  }
  return m;
}

MatrixFq MatrixFq::permutation_matrix(Field f, const Permutation& sigma) {
  std::size_t n = sigma.size();
  MatrixFq m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, sigma[i]) = f.one();
  return m;
}

MatrixFq MatrixFq::operator*(const MatrixFq& o) const {
  if (c_ != o.r_) throw std::invalid_argument("matrix shape mismatch");
  MatrixFq m(f_, r_, o.c_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t k = 0; k < c_; ++k) {
      const FqElem& a = at(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.c_; ++j) {
        const FqElem& b = o.at(k, j);
        if (!b.is_zero()) m.at(i, j) += a * b;
      }
    }
  return m;
}

MatrixFq MatrixFq::operator+(const MatrixFq& o) const {
  if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("matrix shape mismatch");
  MatrixFq m = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] += o.a_[i];
  return m;
}

MatrixFq MatrixFq::operator-(const MatrixFq& o) const {
  if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("matrix shape mismatch");
  MatrixFq m = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] -= o.a_[i];
  return m;
}

MatrixFq MatrixFq::operator*(const FqElem& s) const {
  MatrixFq m = *this;
  for (auto& x : m.a_) x *= s;
  return m;
}

MatrixFq MatrixFq::transpose() const {
  MatrixFq m(f_, c_, r_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j) m.at(j, i) = at(i, j);
  return m;
}

MatrixFq MatrixFq::pow(std::int64_t k) const {
  if (r_ != c_) throw std::invalid_argument("pow of non-square matrix");
  MatrixFq base = *this;
  if (k < 0) {
    auto inv = inverse();
    if (!inv) throw std::domain_error("negative power of singular matrix");
    base = *inv;
    k = -k;
  }
  MatrixFq acc = identity(f_, r_);
  auto e = static_cast<std::uint64_t>(k);
  while (e) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return acc;
}

namespace {

// Row echelon in place; returns pivot columns and the determinant factor.
std::vector<std::size_t> echelon(MatrixFq& m, FqElem* det) {
  Field f = m.field();
  std::vector<std::size_t> piv;
  FqElem d = f.one();
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m.at(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(r, j));
      d = -d;
    }
    FqElem inv = m.at(r, c).inverse();
    d *= m.at(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      FqElem t = m.at(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m.at(i, j) -= t * m.at(r, j);
    }
    piv.push_back(c);
    ++r;
  }
  if (det) *det = d;
  return piv;
}

}  // namespace

std::size_t MatrixFq::rank() const {
  MatrixFq m = *this;
  return echelon(m, nullptr).size();
}

FqElem MatrixFq::det() const {
  if (r_ != c_) throw std::invalid_argument("det of non-square matrix");
  MatrixFq m = *this;
  FqElem d;
  if (echelon(m, &d).size() < r_) return f_.zero();
  return d;
}

std::optional<MatrixFq> MatrixFq::inverse() const {
  if (r_ != c_) throw std::invalid_argument("inverse of non-square matrix");
  MatrixFq aug(f_, r_, 2 * r_);
  for (std::size_t i = 0; i < r_; ++i) {
    for (std::size_t j = 0; j < r_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, r_ + i) = f_.one();
  }
  auto piv = echelon(aug, nullptr);
  if (piv.size() < r_ || piv[r_ - 1] >= r_) return std::nullopt;
  return aug.block(0, r_, r_, r_);
}

std::vector<std::vector<FqElem>> MatrixFq::left_kernel() const {
  // v M = 0  <=>  M^T v^T = 0
  MatrixFq t = transpose();
  auto piv = echelon(t, nullptr);
  std::vector<bool> is_piv(t.cols(), false);
  for (auto c : piv) is_piv[c] = true;
  std::vector<std::vector<FqElem>> basis;
  for (std::size_t free = 0; free < t.cols(); ++free) {
    if (is_piv[free]) continue;
    std::vector<FqElem> v(t.cols(), f_.zero());
    v[free] = f_.one();
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -t.at(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<FqElem> MatrixFq::row_times(const std::vector<FqElem>& v) const {
  if (v.size() != r_) throw std::invalid_argument("vector length mismatch");
  std::vector<FqElem> out(c_, f_.zero());
  for (std::size_t i = 0; i < r_; ++i) {
    if (v[i].is_zero()) continue;
    for (std::size_t j = 0; j < c_; ++j) out[j] += v[i] * at(i, j);
  }
  return out;
}

MatrixFq MatrixFq::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  MatrixFq m(f_, nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) m.at(i, j) = at(r0 + i, c0 + j);
  return m;
}

void MatrixFq::set_block(std::size_t r0, std::size_t c0, const MatrixFq& b) {
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) at(r0 + i, c0 + j) = b.at(i, j);
}

bool MatrixFq::operator==(const MatrixFq& o) const {
  return f_ == o.f_ && r_ == o.r_ && c_ == o.c_ && a_ == o.a_;
}

std::string MatrixFq::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < r_; ++i) {
    for (std::size_t j = 0; j < c_; ++j) os << (j ? " " : "") << at(i, j).str();
    os << '\n';
  }
  return os.str();
}

MatrixFq direct_sum(const std::vector<MatrixFq>& blocks) {
  if (blocks.empty()) throw std::invalid_argument("empty direct sum");
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.rows();
  MatrixFq m(blocks[0].field(), n, n);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    m.set_block(off, off, b);
    off += b.rows();
  }
  return m;
}

MatrixFq companion(const FqPoly& chi) {
  if (chi.degree() < 1) throw std::invalid_argument("companion of constant polynomial");
  FqPoly c = chi.monic();
  auto k = static_cast<std::size_t>(c.degree());
  MatrixFq m(c.field(), k, k);
  for (std::size_t i = 0; i + 1 < k; ++i) m.at(i, i + 1) = c.field().one();
  for (std::size_t j = 0; j < k; ++j) m.at(k - 1, j) = -c.coeff(j);
  return m;
}

MatrixFq eval_poly(const FqPoly& p, const MatrixFq& m) {
  MatrixFq acc(m.field(), m.rows(), m.cols());
  for (int i = p.degree(); i >= 0; --i) {
    acc = acc * m;
    for (std::size_t d = 0; d < m.rows(); ++d) acc.at(d, d) += p.coeff(static_cast<std::size_t>(i));
  }
  return acc;
}

namespace {

using PolyMat = std::vector<std::vector<FqPoly>>;

// Diagonalizes XI - A over F_q[X] with row and column operations.  Row
// operations are mirrored as inverse column operations on uinv, so that
// U (XI - A) V = D with uinv = U^-1.
std::vector<FqPoly> poly_smith(PolyMat a, PolyMat* uinv) {
  std::size_t n = a.size();
  Field f = n ? a[0][0].field() : Field();
  auto row_axpy = [&](std::size_t i, std::size_t j, const FqPoly& q) {
    // row_i -= q row_j; uinv column_j += q column_i
    for (std::size_t c = 0; c < n; ++c) a[i][c] = a[i][c] - q * a[j][c];
    if (uinv)
      for (std::size_t r = 0; r < n; ++r) (*uinv)[r][j] = (*uinv)[r][j] + q * (*uinv)[r][i];
  };
  auto row_swap = [&](std::size_t i, std::size_t j) {
    std::swap(a[i], a[j]);
    if (uinv)
      for (std::size_t r = 0; r < n; ++r) std::swap((*uinv)[r][i], (*uinv)[r][j]);
  };
  auto col_axpy = [&](std::size_t i, std::size_t j, const FqPoly& q) {
    for (std::size_t r = 0; r < n; ++r) a[r][i] = a[r][i] - q * a[r][j];
  };
  auto col_swap = [&](std::size_t i, std::size_t j) {
    for (std::size_t r = 0; r < n; ++r) std::swap(a[r][i], a[r][j]);
  };

  for (std::size_t t = 0; t < n; ++t) {
    for (;;) {
      // pivot of least degree in the trailing block
      std::size_t bi = n, bj = n;
      int best = -1;
      for (std::size_t i = t; i < n; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (!a[i][j].is_zero() && (best < 0 || a[i][j].degree() < best)) {
            best = a[i][j].degree();
            bi = i;
            bj = j;
          }
      if (best < 0) break;
      if (bi != t) row_swap(bi, t);
      if (bj != t) col_swap(bj, t);
      bool clean = true;
      for (std::size_t i = t + 1; i < n; ++i) {
        if (a[i][t].is_zero()) continue;
        row_axpy(i, t, a[i][t] / a[t][t]);
        if (!a[i][t].is_zero()) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a[t][j].is_zero()) continue;
        col_axpy(j, t, a[t][j] / a[t][t]);
        if (!a[t][j].is_zero()) clean = false;
      }
      if (!clean) continue;
      std::size_t bad = n;
      for (std::size_t i = t + 1; i < n && bad == n; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!(a[i][j] % a[t][t]).is_zero()) {
            bad = i;
            break;
          }
      if (bad == n) break;
      // row_t += row_bad
      row_axpy(t, bad, FqPoly::constant(-f.one()));
    }
    if (!a[t][t].is_zero()) {
      FqElem lc = a[t][t].lead();
      FqElem inv = lc.inverse();
      for (std::size_t c = 0; c < n; ++c) a[t][c] = a[t][c] * inv;
      if (uinv)
        for (std::size_t r = 0; r < n; ++r) (*uinv)[r][t] = (*uinv)[r][t] * lc;
    }
  }
  std::vector<FqPoly> d;
  for (std::size_t t = 0; t < n; ++t) d.push_back(a[t][t]);
  return d;
}

PolyMat char_matrix(const MatrixFq& a) {
  std::size_t n = a.rows();
  Field f = a.field();
  PolyMat m(n, std::vector<FqPoly>(n, FqPoly(f)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      m[i][j] = FqPoly::constant(-a.at(i, j));
      if (i == j) m[i][j] = m[i][j] + FqPoly::X(f);
    }
  return m;
}

}  // namespace

std::vector<FqPoly> rational_canonical_form(const MatrixFq& a) {
  if (a.rows() != a.cols() || a.rows() == 0) throw std::invalid_argument("RCF needs a square matrix");
  auto d = poly_smith(char_matrix(a), nullptr);
  std::vector<FqPoly> out;
  for (auto& p : d)
    if (p.degree() >= 1) out.push_back(p);
  return out;
}

FrobeniusDecomposition frobenius_decomposition(const MatrixFq& a) {
  if (a.rows() != a.cols() || a.rows() == 0) throw std::invalid_argument("RCF needs a square matrix");
  std::size_t n = a.rows();
  Field f = a.field();
  // Column convention on A^T: generators u_i = sum_j Uinv[j][i](A^T) e_j.
  MatrixFq at = a.transpose();
  PolyMat uinv(n, std::vector<FqPoly>(n, FqPoly(f)));
  for (std::size_t i = 0; i < n; ++i) uinv[i][i] = FqPoly::constant(f.one());
  auto d = poly_smith(char_matrix(at), &uinv);

  FrobeniusDecomposition out;
  out.Q = MatrixFq(f, n, n);
  std::size_t row = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (d[i].degree() < 1) continue;
    out.invariant_factors.push_back(d[i]);
    // x = u_i^T; rows x, xA, xA^2, ...
    std::vector<FqElem> x(n, f.zero());
    for (std::size_t j = 0; j < n; ++j) {
      // p(A^T) e_j as a row vector is e_j p(A)
      std::vector<FqElem> acc(n, f.zero());
      const FqPoly& p = uinv[j][i];
      for (int e = p.degree(); e >= 0; --e) {
        acc = a.row_times(acc);
        acc[j] += p.coeff(static_cast<std::size_t>(e));
      }
      for (std::size_t c = 0; c < n; ++c) x[c] += acc[c];
    }
    for (int e = 0; e < d[i].degree(); ++e) {
      for (std::size_t c = 0; c < n; ++c) out.Q.at(row, c) = x[c];
      ++row;
      x = a.row_times(x);
    }
  }
  if (row != n) throw std::logic_error("invariant factor degrees do not sum to n");
  std::vector<MatrixFq> blocks;
  for (const auto& p : out.invariant_factors) blocks.push_back(companion(p));
  auto qinv = out.Q.inverse();
  if (!qinv || !(out.Q * a * *qinv == direct_sum(blocks)))
    throw std::logic_error("Frobenius decomposition check failed");
  return out;
}

Fraction rank_distance(const MatrixFq& a, const MatrixFq& b) {
  if (a.rows() == 0) throw std::invalid_argument("empty matrix");
  return Fraction(static_cast<std::int64_t>((a - b).rank()), static_cast<std::int64_t>(a.rows()));
}

std::string invariant_factor_label(const std::vector<FqPoly>& f) {
  std::string s = "[";
  for (std::size_t i = 0; i < f.size(); ++i) s += (i ? ", " : "") + f[i].str();
  return s + "]";
}

}  // namespace wordmap
