#include "hankelff/linalg.hpp"

#include <algorithm>

namespace hankelff {

size_t rref_in_place(const Field& f, Mat& m, std::vector<size_t>* pivots) {
  size_t r = 0;
  for (size_t col = 0; col < m.cols && r < m.rows; ++col) {
    size_t piv = r;
    while (piv < m.rows && m.at(piv, col) == 0) ++piv;
    if (piv == m.rows) continue;
    if (piv != r)
      for (size_t j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
    uint32_t s = f.inv(m.at(r, col));
    if (s != 1)
      for (size_t j = col; j < m.cols; ++j) m.at(r, j) = f.mul(m.at(r, j), s);
    for (size_t i = 0; i < m.rows; ++i) {
      if (i == r) continue;
      uint32_t c = m.at(i, col);
      if (c == 0) continue;
      for (size_t j = col; j < m.cols; ++j)
        m.at(i, j) = f.sub(m.at(i, j), f.mul(c, m.at(r, j)));
    }
    if (pivots) pivots->push_back(col);
    ++r;
  }
  return r;
}

size_t mat_rank(const Field& f, Mat m) { return rref_in_place(f, m); }

uint32_t mat_det(const Field& f, Mat m) {
  if (m.rows != m.cols) fail(Errc::invalid_argument, "determinant of a non-square matrix");
  uint32_t det = 1;
  for (size_t col = 0; col < m.cols; ++col) {
    size_t piv = col;
    while (piv < m.rows && m.at(piv, col) == 0) ++piv;
    if (piv == m.rows) return 0;
    if (piv != col) {
      for (size_t j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(col, j));
      det = f.neg(det);
    }
    uint32_t d = m.at(col, col);
    det = f.mul(det, d);
    uint32_t dinv = f.inv(d);
    for (size_t i = col + 1; i < m.rows; ++i) {
      uint32_t c = m.at(i, col);
      if (c == 0) continue;
      uint32_t s = f.mul(c, dinv);
      for (size_t j = col; j < m.cols; ++j)
        m.at(i, j) = f.sub(m.at(i, j), f.mul(s, m.at(col, j)));
    }
  }
  return det;
}

std::vector<std::vector<uint32_t>> kernel_basis(const Field& f, Mat m) {
  std::vector<size_t> pivots;
  size_t cols = m.cols;
  rref_in_place(f, m, &pivots);
  std::vector<bool> is_pivot(cols, false);
  for (size_t c : pivots) is_pivot[c] = true;
  std::vector<std::vector<uint32_t>> basis;
  for (size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<uint32_t> v(cols, 0);
    v[free] = 1;
    for (size_t k = 0; k < pivots.size(); ++k)
      v[pivots[k]] = f.neg(m.at(k, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<uint32_t>> solve_square(const Field& f, Mat m,
                                                  std::vector<uint32_t> b) {
  if (m.rows != m.cols || b.size() != m.rows)
    fail(Errc::invalid_argument, "solve expects a square system");
  size_t n = m.rows;
  Mat aug(n, n + 1);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n) = b[i];
  }
  std::vector<size_t> pivots;
  size_t rank = rref_in_place(f, aug, &pivots);
  if (rank != n || pivots.back() >= n) return std::nullopt;
  std::vector<uint32_t> x(n);
  for (size_t i = 0; i < n; ++i) x[i] = aug.at(i, n);
  return x;
}

bool in_span(const Field& f, const std::vector<uint32_t>& v,
             const std::vector<std::vector<uint32_t>>& basis) {
  Mat m(basis.size() + 1, v.size());
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j) m.at(i, j) = basis[i][j];
  for (size_t j = 0; j < v.size(); ++j) m.at(basis.size(), j) = v[j];
  Mat base(basis.size(), v.size());
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j) base.at(i, j) = basis[i][j];
  return mat_rank(f, m) == mat_rank(f, base);
}

bool span_equal(const Field& f, const std::vector<std::vector<uint32_t>>& a,
                const std::vector<std::vector<uint32_t>>& b, size_t dim) {
  auto canon = [&](const std::vector<std::vector<uint32_t>>& vs) {
    Mat m(vs.size(), dim);
    for (size_t i = 0; i < vs.size(); ++i) {
      if (vs[i].size() != dim) fail(Errc::invalid_argument, "span vector of wrong length");
      for (size_t j = 0; j < dim; ++j) m.at(i, j) = vs[i][j];
    }
    size_t r = rref_in_place(f, m);
    m.a.resize(r * dim);
    m.rows = r;
    return m;
  };
  Mat ca = canon(a), cb = canon(b);
  return ca.rows == cb.rows && ca.a == cb.a;
}

}  // namespace hankelff
