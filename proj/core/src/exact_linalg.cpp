#include "wordmap/exact_linalg.hpp"

#include <stdexcept>
#include <utility>

namespace wordmap {

IntMatrix int_matrix(std::size_t rows, std::size_t cols) {
  return IntMatrix(rows, std::vector<BigInt>(cols, BigInt(0)));
}

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    r[i].reserve(m[i].size());
    for (const auto& v : m[i]) r[i].emplace_back(v);
  }
  return r;
}

IntMatrix identity_int(std::size_t n) {
  IntMatrix r = int_matrix(n, n);
  for (std::size_t i = 0; i < n; ++i) r[i][i] = 1;
  return r;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  IntMatrix r = int_matrix(n, m);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != k) throw std::invalid_argument("multiply: shape mismatch");
    for (std::size_t t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) r[i][j] += a[i][t] * b[t][j];
    }
  }
  return r;
}

IndependentRows independent_rows(const RatMatrix& m) {
  IndependentRows out;
  // Accepted rows kept in reduced form, each with its pivot column.
  std::vector<std::vector<BigRational>> basis;
  for (std::size_t i = 0; i < m.size(); ++i) {
    std::vector<BigRational> v = m[i];
    for (std::size_t b = 0; b < basis.size(); ++b) {
      std::size_t pc = out.pivot_cols[b];
      if (v[pc] == 0) continue;
      BigRational f = v[pc] / basis[b][pc];
      for (std::size_t j = 0; j < v.size(); ++j) {
        if (basis[b][j] != 0) v[j] -= f * basis[b][j];
      }
    }
    std::size_t pc = v.size();
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (v[j] != 0) {
        pc = j;
        break;
      }
    }
    if (pc == v.size()) continue;
    // Keep earlier basis rows reduced in the new pivot column.
    for (std::size_t b = 0; b < basis.size(); ++b) {
      if (basis[b][pc] == 0) continue;
      BigRational f = basis[b][pc] / v[pc];
      for (std::size_t j = 0; j < v.size(); ++j) {
        if (v[j] != 0) basis[b][j] -= f * v[j];
      }
    }
    basis.push_back(std::move(v));
    out.rows.push_back(i);
    out.pivot_cols.push_back(pc);
  }
  return out;
}

IndependentRows independent_rows(const IntMatrix& m) { return independent_rows(to_rational(m)); }
std::size_t rank_q(const RatMatrix& m) { return independent_rows(m).rank(); }
std::size_t rank_q(const IntMatrix& m) { return independent_rows(m).rank(); }

RatMatrix inverse(const RatMatrix& m) {
  std::size_t n = m.size();
  RatMatrix a = m;
  RatMatrix inv(n, std::vector<BigRational>(n, BigRational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) throw std::invalid_argument("inverse: matrix not square");
    inv[i][i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = n;
    for (std::size_t r = c; r < n; ++r) {
      if (a[r][c] != 0) {
        piv = r;
        break;
      }
    }
    if (piv == n) throw std::domain_error("inverse: singular matrix");
    std::swap(a[c], a[piv]);
    std::swap(inv[c], inv[piv]);
    BigRational s = 1 / a[c][c];
    for (std::size_t j = 0; j < n; ++j) {
      a[c][j] *= s;
      inv[c][j] *= s;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      BigRational f = a[r][c];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[c][j];
        inv[r][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

namespace {

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m0) {
  IntMatrix a = m0;
  std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  SmithForm sf;
  sf.U = identity_int(rows);
  sf.V = identity_int(cols);

  auto swap_rows = [&](std::size_t i, std::size_t j) {
    std::swap(a[i], a[j]);
    std::swap(sf.U[i], sf.U[j]);
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    for (auto& r : a) std::swap(r[i], r[j]);
    for (auto& r : sf.V) std::swap(r[i], r[j]);
  };
  auto add_row = [&](std::size_t dst, std::size_t src, const BigInt& f) {  // row dst += f*row src
    for (std::size_t j = 0; j < cols; ++j) a[dst][j] += f * a[src][j];
    for (std::size_t j = 0; j < rows; ++j) sf.U[dst][j] += f * sf.U[src][j];
  };
  auto add_col = [&](std::size_t dst, std::size_t src, const BigInt& f) {
    for (std::size_t i = 0; i < rows; ++i) a[i][dst] += f * a[i][src];
    for (std::size_t i = 0; i < cols; ++i) sf.V[i][dst] += f * sf.V[i][src];
  };

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    while (true) {
      // Smallest nonzero entry in the trailing block becomes the pivot.
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          if (a[i][j] == 0) continue;
          if (pi == rows || abs(a[i][j]) < abs(a[pi][pj])) {
            pi = i;
            pj = j;
          }
        }
      }
      if (pi == rows) return sf;
      if (pi != t) swap_rows(t, pi);
      if (pj != t) swap_cols(t, pj);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        add_row(i, t, -floor_div(a[i][t], a[t][t]));
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        add_col(j, t, -floor_div(a[t][j], a[t][t]));
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      // Divisibility: fold a non-divisible row into row t and retry.
      bool divisible = true;
      for (std::size_t i = t + 1; i < rows && divisible; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (a[i][j] % a[t][t] != 0) {
            add_row(t, i, BigInt(1));
            divisible = false;
            break;
          }
        }
      }
      if (divisible) break;
    }
    if (a[t][t] < 0) {
      for (std::size_t j = 0; j < cols; ++j) a[t][j] = -a[t][j];
      for (std::size_t j = 0; j < rows; ++j) sf.U[t][j] = -sf.U[t][j];
    }
    sf.divisors.push_back(a[t][t]);
  }
  return sf;
}

}  // namespace wordmap
