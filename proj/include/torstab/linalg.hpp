#pragma once

// Small exact linear algebra over the rationals and the integer lattice.
// Matrices are tiny (the ambient dimension at desk scale), so everything is
// plain fraction-free-enough Gaussian elimination with exact pivots.

#include "torstab/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <utility>

namespace torstab {

inline Rat dot(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw InputError("dimension mismatch in dot product");
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Int dot(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw InputError("dimension mismatch in dot product");
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Rat dot(const RatVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw InputError("dimension mismatch in dot product");
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * Rat(b[i]);
  return s;
}

inline RatVec to_rational(const IntVec& v) {
  RatVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
  return r;
}

inline bool is_zero(const IntVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

// Strips the gcd: returns (v/g, g). The direction of a nonzero lattice vector.
inline std::pair<IntVec, Int> primitivize(const IntVec& v) {
  Int g = 0;
  for (const Int& x : v) g = gcd(g, x);
  if (g == 0) throw MathError("zero vector has no direction");
  IntVec w(v.size());
  for (size_t i = 0; i < v.size(); ++i) w[i] = v[i] / g;
  return {w, g};
}

inline bool is_primitive(const IntVec& v) {
  if (is_zero(v)) return false;
  Int g = 0;
  for (const Int& x : v) g = gcd(g, x);
  return g == 1;
}

inline Rat determinant(RatMat m) {
  size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw InputError("determinant requires a square matrix");
  Rat det = 1;
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return Rat(0);
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      Rat f = m[r][col] / m[col][col];
      for (size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

inline Rat determinant_of_int_rows(const std::vector<IntVec>& rows) {
  RatMat m;
  m.reserve(rows.size());
  for (const auto& r : rows) m.push_back(to_rational(r));
  return determinant(std::move(m));
}

// Solves A x = b for square invertible A.
inline RatVec solve_linear(RatMat a, RatVec b) {
  size_t n = a.size();
  if (b.size() != n) throw InputError("dimension mismatch in linear solve");
  for (const auto& row : a)
    if (row.size() != n) throw InputError("linear solve requires a square matrix");
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) throw MathError("singular system");
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rat f = a[r][col] / a[col][col];
      for (size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  RatVec x(n);
  for (size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

// Rank of the span of the given rational vectors.
inline size_t rank(std::vector<RatVec> rows) {
  if (rows.empty()) return 0;
  size_t n = rows[0].size(), r = 0;
  for (size_t col = 0; col < n && r < rows.size(); ++col) {
    size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[r]);
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][col] == 0) continue;
      Rat f = rows[i][col] / rows[r][col];
      for (size_t c = col; c < n; ++c) rows[i][c] -= f * rows[r][c];
    }
    ++r;
  }
  return r;
}

inline size_t affine_dimension(const std::vector<RatVec>& points) {
  if (points.empty()) throw InputError("affine dimension of an empty point set");
  std::vector<RatVec> diffs;
  for (size_t i = 1; i < points.size(); ++i) {
    RatVec d(points[i].size());
    for (size_t c = 0; c < d.size(); ++c) d[c] = points[i][c] - points[0][c];
    diffs.push_back(std::move(d));
  }
  return rank(std::move(diffs));
}

// Unimodular completion: returns an n x n integer matrix W with det +-1 whose
// rows w_1..w_n satisfy <w_1, u> = 1 and <w_i, u> = 0 for i >= 2. Rows 2..n
// are a lattice basis of the hyperplane lattice u-perp in M.
inline std::vector<IntVec> unimodular_completion(const IntVec& u) {
  if (!is_primitive(u)) throw MathError("unimodular completion requires a primitive vector");
  size_t n = u.size();
  std::vector<IntVec> w(n, IntVec(n, 0));
  for (size_t i = 0; i < n; ++i) w[i][i] = 1;
  IntVec v = u;
  // Fold each coordinate into the first with extended-gcd row operations.
  for (size_t i = 1; i < n; ++i) {
    Int a = v[0], b = v[i];
    if (b == 0) continue;
    // g = x a + y b
    Int g = a, x = 1, y = 0;
    {
      Int old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
      while (r != 0) {
        Int q = old_r / r;  // truncated division is fine for Bezout
        Int tmp = old_r - q * r; old_r = r; r = tmp;
        tmp = old_s - q * s; old_s = s; s = tmp;
        tmp = old_t - q * t; old_t = t; t = tmp;
      }
      g = old_r; x = old_s; y = old_t;
      if (g < 0) { g = -g; x = -x; y = -y; }
    }
    IntVec r0(n), ri(n);
    for (size_t c = 0; c < n; ++c) {
      r0[c] = x * w[0][c] + y * w[i][c];
      ri[c] = -(b / g) * w[0][c] + (a / g) * w[i][c];
    }
    w[0] = std::move(r0);
    w[i] = std::move(ri);
    v[0] = g;
    v[i] = 0;
  }
  // Primitivity gives v = (1, 0, ..., 0) up to sign.
  if (v[0] == -1)
    for (size_t c = 0; c < n; ++c) w[0][c] = -w[0][c];
  return w;
}

// Basis e_2..e_n of the lattice {m : <m,u> = 0}; together with any m_0 having
// <m_0,u> = 1 it completes to a basis of M. Carries the hyperplane measure
// normalized against the ambient lattice volume form.
inline std::vector<IntVec> facet_lattice_basis(const IntVec& u) {
  if (u.size() < 2) throw MathError("facet basis needs ambient dimension >= 2");
  auto w = unimodular_completion(u);
  return {w.begin() + 1, w.end()};
}

}  // namespace torstab
