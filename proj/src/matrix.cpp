#include "stralg/matrix.hpp"

#include <algorithm>

namespace stralg {

Mat make_matrix(int rows, int cols) { return Mat(rows, Vec(cols, Rat(0))); }

Mat identity_matrix(int n) {
  Mat m = make_matrix(n, n);
  for (int i = 0; i < n; ++i) m[i][i] = Rat(1);
  return m;
}

Mat mat_mul(const Mat& a, const Mat& b) {
  int n = (int)a.size();
  int k = n ? (int)a[0].size() : 0;
  int m = b.empty() ? 0 : (int)b[0].size();
  Mat out = make_matrix(n, m);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) {
      Rat s(0);
      for (int t = 0; t < k; ++t)
        if (!a[i][t].is_zero() && !b[t][j].is_zero()) s += a[i][t] * b[t][j];
      out[i][j] = s;
    }
  return out;
}

bool mat_is_zero(const Mat& m) {
  for (const auto& row : m)
    for (const auto& x : row)
      if (!x.is_zero()) return false;
  return true;
}

bool mat_equal(const Mat& a, const Mat& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

// Row echelon; returns pivot columns. Destroys m.
static std::vector<int> echelon(Mat& m) {
  std::vector<int> pivots;
  int rows = (int)m.size();
  int cols = rows ? (int)m[0].size() : 0;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int sel = -1;
    for (int i = r; i < rows; ++i)
      if (!m[i][c].is_zero()) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    std::swap(m[r], m[sel]);
    Rat inv = Rat(1) / m[r][c];
    for (int j = c; j < cols; ++j) m[r][j] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      Rat f = m[i][c];
      for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  return pivots;
}

int mat_rank(Mat m) {
  if (m.empty()) return 0;
  return (int)echelon(m).size();
}

std::vector<Vec> nullspace_basis(const Mat& m_in, int cols) {
  Mat m = m_in;
  std::vector<int> pivots = echelon(m);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (int c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    Vec v(cols, Rat(0));
    v[c] = Rat(1);
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][c];
    basis.push_back(std::move(v));
  }
  return basis;
}

Rat mat_det(Mat m) {
  int n = (int)m.size();
  Rat det(1);
  for (int c = 0; c < n; ++c) {
    int sel = -1;
    for (int i = c; i < n; ++i)
      if (!m[i][c].is_zero()) {
        sel = i;
        break;
      }
    if (sel < 0) return Rat(0);
    if (sel != c) {
      std::swap(m[c], m[sel]);
      det = -det;
    }
    det *= m[c][c];
    Rat inv = Rat(1) / m[c][c];
    for (int i = c + 1; i < n; ++i) {
      if (m[i][c].is_zero()) continue;
      Rat f = m[i][c] * inv;
      for (int j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return det;
}

bool mat_invertible(const Mat& m) {
  if (m.empty()) return true;  // 0x0
  if (m.size() != m[0].size()) return false;
  return !mat_det(m).is_zero();
}

}  // namespace stralg
