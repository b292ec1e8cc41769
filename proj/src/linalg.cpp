#include "qdiv/linalg.hpp"

namespace qdiv::linalg {

Mat zeros(std::size_t rows, std::size_t cols) {
  return Mat(rows, Vec(cols, Rational(0)));
}

Mat identity(std::size_t n) {
  Mat m = zeros(n, n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Mat mul(const Mat& a, const Mat& b) {
  if (a.empty() || b.empty() || a[0].size() != b.size())
    throw std::invalid_argument("linalg::mul: shape mismatch");
  Mat r = zeros(a.size(), b[0].size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < b[0].size(); ++j)
        r[i][j] += a[i][k] * b[k][j];
    }
  return r;
}

Vec apply(const Mat& m, const Vec& v) {
  if (m.empty() || m[0].size() != v.size())
    throw std::invalid_argument("linalg::apply: shape mismatch");
  Vec r(m.size(), Rational(0));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) r[i] += m[i][j] * v[j];
  return r;
}

std::size_t rref(Mat& m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[rank], m[pivot]);
    Rational inv = Rational(1) / m[rank][col];
    for (std::size_t j = col; j < cols; ++j) m[rank][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || m[i][col] == 0) continue;
      Rational f = m[i][col];
      for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

std::vector<Vec> nullspace(Mat m) {
  if (m.empty()) return {};
  const std::size_t cols = m[0].size();
  rref(m);
  // Locate pivot columns.
  std::vector<long> pivot_row(cols, -1);
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < m.size(); ++col) {
    if (m[r][col] == 1) {
      bool is_pivot = true;
      for (std::size_t i = 0; i < m.size(); ++i)
        if (i != r && m[i][col] != 0) is_pivot = false;
      if (is_pivot) {
        pivot_row[col] = static_cast<long>(r);
        ++r;
      }
    }
  }
  std::vector<Vec> basis;
  for (std::size_t free_col = 0; free_col < cols; ++free_col) {
    if (pivot_row[free_col] >= 0) continue;
    Vec v(cols, Rational(0));
    v[free_col] = 1;
    for (std::size_t col = 0; col < cols; ++col)
      if (pivot_row[col] >= 0)
        v[col] = -m[static_cast<std::size_t>(pivot_row[col])][free_col];
    basis.push_back(std::move(v));
  }
  return basis;
}

Rational det(Mat m) {
  if (m.empty() || m.size() != m[0].size())
    throw std::invalid_argument("linalg::det: not square");
  const std::size_t n = m.size();
  Rational d(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      d = -d;
    }
    d *= m[col][col];
    Rational inv = Rational(1) / m[col][col];
    for (std::size_t i = col + 1; i < n; ++i) {
      if (m[i][col] == 0) continue;
      Rational f = m[i][col] * inv;
      for (std::size_t j = col; j < n; ++j) m[i][j] -= f * m[col][j];
    }
  }
  return d;
}

}  // namespace qdiv::linalg
