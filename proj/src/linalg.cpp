#include "kstab/linalg.hpp"

#include <utility>

namespace kstab::linalg {

namespace {

// Reduces `m` in place to reduced row echelon form; returns pivot columns.
// If `aug` is set, the last column is treated as a right-hand side and never
// chosen as a pivot.
std::vector<std::size_t> rref(Matrix& m, std::size_t cols, bool aug = false) {
  std::vector<std::size_t> pivots;
  const std::size_t usable = aug ? cols - 1 : cols;
  std::size_t row = 0;
  for (std::size_t c = 0; c < usable && row < m.size(); ++c) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][c] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    const Rat inv = 1 / m[row][c];
    for (std::size_t j = c; j < cols; ++j) m[row][j] *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][c] == 0) continue;
      const Rat f = m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[r][j] -= f * m[row][j];
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(Matrix rows) {
  if (rows.empty()) return 0;
  const auto cols = rows.front().size();
  return rref(rows, cols).size();
}

std::vector<RatVec> nullspace(Matrix rows, std::size_t cols) {
  std::vector<std::size_t> pivots = rows.empty() ? std::vector<std::size_t>{} : rref(rows, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RatVec> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RatVec v(cols, Rat(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -rows[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

Rat determinant(Matrix m) {
  const std::size_t n = m.size();
  Rat det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t sel = c;
    while (sel < n && m[sel][c] == 0) ++sel;
    if (sel == n) return 0;
    if (sel != c) {
      std::swap(m[sel], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      const Rat f = m[r][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[r][j] -= f * m[c][j];
    }
  }
  return det;
}

std::optional<RatVec> solve(Matrix rows, RatVec rhs) {
  if (rows.empty()) return RatVec{};
  const std::size_t cols = rows.front().size();
  for (std::size_t r = 0; r < rows.size(); ++r) rows[r].push_back(rhs[r]);
  const auto pivots = rref(rows, cols + 1, /*aug=*/true);
  for (std::size_t r = pivots.size(); r < rows.size(); ++r) {
    if (rows[r][cols] != 0) return std::nullopt;
  }
  RatVec x(cols, Rat(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = rows[r][cols];
  return x;
}

int affine_dim(const std::vector<const RatVec*>& points) {
  if (points.empty()) return -1;
  Matrix diffs;
  diffs.reserve(points.size() - 1);
  const RatVec& base = *points.front();
  for (std::size_t i = 1; i < points.size(); ++i) {
    RatVec d(base.size());
    for (std::size_t j = 0; j < base.size(); ++j) d[j] = (*points[i])[j] - base[j];
    diffs.push_back(std::move(d));
  }
  return static_cast<int>(rank(std::move(diffs)));
}

}  // namespace kstab::linalg
