// Copyright 2026 The ceorb Authors
// SPDX-License-Identifier: Apache-2.0

// Exact linear algebra over Q and Z on small dense matrices.

#pragma once

#include "ceorb/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

namespace ceorb::linalg {

inline Rational dot(const RatVec& a, const RatVec& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline BigInt dot(const BigVec& a, const BigVec& b) {
  BigInt s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline RatVec mat_vec(const RatMatrix& m, const RatVec& v) {
  RatVec out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) out[i] = dot(m[i], v);
  return out;
}

/// Row vector times matrix: (v^T M)^T.
inline RatVec vec_mat(const RatVec& v, const RatMatrix& m) {
  const std::size_t cols = m.empty() ? 0 : m.front().size();
  RatVec out(cols, Rational(0));
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < cols; ++j) out[j] += v[i] * m[i][j];
  }
  return out;
}

inline RatMatrix transpose(const RatMatrix& m) {
  if (m.empty()) return {};
  RatMatrix t(m.front().size(), RatVec(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  }
  return t;
}

inline RatMatrix multiply(const RatMatrix& a, const RatMatrix& b) {
  RatMatrix out;
  out.reserve(a.size());
  for (const auto& row : a) out.push_back(vec_mat(row, b));
  return out;
}

inline RatMatrix identity(std::size_t n) {
  RatMatrix m(n, RatVec(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

struct Echelon {
  RatMatrix rows;                    // reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivots;  // pivot column of each row
};

/// Reduced row echelon form of the rows of `m` (each of width `cols`).
inline Echelon rref(RatMatrix m, std::size_t cols) {
  Echelon e;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    const Rational inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rational f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    e.pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  e.rows = std::move(m);
  return e;
}

inline std::size_t rank(const RatMatrix& m, std::size_t cols) {
  return rref(m, cols).pivots.size();
}

/// Basis of {x : m x = 0}.
inline RatMatrix nullspace(const RatMatrix& m, std::size_t cols) {
  const Echelon e = rref(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  RatMatrix basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RatVec v(cols, Rational(0));
    v[f] = 1;
    for (std::size_t r = 0; r < e.rows.size(); ++r) v[e.pivots[r]] = -e.rows[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Canonical basis (RREF rows) of the span of `vectors`.
inline RatMatrix span_basis(const RatMatrix& vectors, std::size_t dim) {
  return rref(vectors, dim).rows;
}

inline bool in_span(const RatMatrix& basis, const RatVec& v, std::size_t dim) {
  RatMatrix m = basis;
  m.push_back(v);
  return rank(m, dim) == rank(basis, dim);
}

/// Annihilator under the standard dot product.
inline RatMatrix annihilator(const RatMatrix& basis, std::size_t dim) {
  return nullspace(basis, dim);
}

inline RatMatrix intersect(const RatMatrix& u, const RatMatrix& w, std::size_t dim) {
  RatMatrix ann = annihilator(u, dim);
  for (auto& row : annihilator(w, dim)) ann.push_back(std::move(row));
  return span_basis(nullspace(ann, dim), dim);
}

inline RatMatrix subspace_sum(const RatMatrix& u, const RatMatrix& w, std::size_t dim) {
  RatMatrix all = u;
  all.insert(all.end(), w.begin(), w.end());
  return span_basis(all, dim);
}

inline bool same_subspace(const RatMatrix& u, const RatMatrix& w, std::size_t dim) {
  return span_basis(u, dim) == span_basis(w, dim);
}

inline RatMatrix inverse(const RatMatrix& m) {
  const std::size_t n = m.size();
  RatMatrix aug(n, RatVec(2 * n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
    aug[i][n + i] = 1;
  }
  const Echelon e = rref(aug, 2 * n);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) {
    throw InvariantError("matrix is singular");
  }
  RatMatrix inv(n, RatVec(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = e.rows[i][n + j];
  }
  return inv;
}

/// Orthogonal projection onto span(basis) under the standard dot product.
inline RatVec project(const RatMatrix& basis, const RatVec& v, std::size_t dim) {
  if (basis.empty()) return RatVec(dim, Rational(0));
  // Solve (B B^T) c = B v, return B^T c.
  const std::size_t k = basis.size();
  RatMatrix gram(k, RatVec(k + 1));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) gram[i][j] = dot(basis[i], basis[j]);
    gram[i][k] = dot(basis[i], v);
  }
  const Echelon e = rref(gram, k + 1);
  RatVec out(dim, Rational(0));
  for (std::size_t r = 0; r < e.rows.size(); ++r) {
    const Rational& c = e.rows[r][k];
    if (c == 0) continue;
    for (std::size_t j = 0; j < dim; ++j) out[j] += c * basis[e.pivots[r]][j];
  }
  return out;
}

// ---------------------------------------------------------------------------
// Integer lattices.

/// Hermite normal form of the lattice spanned by integer rows: positive
/// pivots, entries above each pivot reduced into [0, pivot).
inline std::vector<BigVec> hermite_basis(std::vector<BigVec> rows, std::size_t cols) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    // Euclid on column c among rows r..end.
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t i = r; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        if (best == rows.size() ||
            boost::multiprecision::abs(rows[i][c]) < boost::multiprecision::abs(rows[best][c])) {
          best = i;
        }
      }
      if (best == rows.size()) break;
      std::swap(rows[r], rows[best]);
      bool done = true;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        const BigInt q = rows[i][c] / rows[r][c];
        for (std::size_t j = c; j < cols; ++j) rows[i][j] -= q * rows[r][j];
        if (rows[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (r < rows.size() && rows[r][c] != 0) {
      if (rows[r][c] < 0) {
        for (auto& x : rows[r]) x = -x;
      }
      for (std::size_t i = 0; i < r; ++i) {
        BigInt q = rows[i][c] / rows[r][c];
        if (rows[i][c] - q * rows[r][c] < 0) q -= 1;
        if (q != 0) {
          for (std::size_t j = c; j < cols; ++j) rows[i][j] -= q * rows[r][j];
        }
      }
      ++r;
    }
  }
  rows.resize(r);
  return rows;
}

/// Z-basis of {c in Z^n : m c = 0} for an integer matrix m with n columns.
inline std::vector<BigVec> integer_kernel(const std::vector<BigVec>& m, std::size_t n) {
  const std::size_t k = m.size();
  // Rows of [m^T | I]; integer row reduction on the first k columns.
  std::vector<BigVec> aug(n, BigVec(k + n, BigInt(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) aug[i][j] = m[j][i];
    aug[i][k + i] = 1;
  }
  std::size_t r = 0;
  for (std::size_t c = 0; c < k && r < n; ++c) {
    while (true) {
      std::size_t best = n;
      for (std::size_t i = r; i < n; ++i) {
        if (aug[i][c] == 0) continue;
        if (best == n ||
            boost::multiprecision::abs(aug[i][c]) < boost::multiprecision::abs(aug[best][c])) {
          best = i;
        }
      }
      if (best == n) break;
      std::swap(aug[r], aug[best]);
      bool done = true;
      for (std::size_t i = r + 1; i < n; ++i) {
        if (aug[i][c] == 0) continue;
        const BigInt q = aug[i][c] / aug[r][c];
        for (std::size_t j = 0; j < k + n; ++j) aug[i][j] -= q * aug[r][j];
        if (aug[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (aug[r][c] != 0) ++r;
  }
  std::vector<BigVec> kernel;
  for (std::size_t i = r; i < n; ++i) {
    kernel.emplace_back(aug[i].begin() + static_cast<std::ptrdiff_t>(k), aug[i].end());
  }
  return hermite_basis(std::move(kernel), n);
}

/// True iff the lattice spanned by `rows` equals its rational span intersected with Z^n.
inline bool is_saturated(const std::vector<BigVec>& rows, std::size_t n) {
  RatMatrix rat;
  for (const auto& r : rows) rat.push_back(to_rational(r));
  std::vector<BigVec> ann;
  for (const auto& a : annihilator(span_basis(rat, n), n)) ann.push_back(primitive(a));
  std::vector<BigVec> full;
  if (ann.empty()) {
    for (std::size_t i = 0; i < n; ++i) {
      BigVec e(n, BigInt(0));
      e[i] = 1;
      full.push_back(std::move(e));
    }
    full = hermite_basis(std::move(full), n);
  } else {
    full = integer_kernel(ann, n);
  }
  return hermite_basis(rows, n) == full;
}

}  // namespace ceorb::linalg
