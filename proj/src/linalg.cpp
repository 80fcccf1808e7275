#include "wv/linalg.hpp"

#include <stdexcept>

namespace wv {

std::vector<size_t> rref(RatMat& a) {
  std::vector<size_t> pivots;
  if (a.empty()) return pivots;
  size_t rows = a.size(), cols = a[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t sel = r;
    while (sel < rows && a[sel][c] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(a[sel], a[r]);
    Rational inv = Rational(1) / a[r][c];
    for (size_t j = c; j < cols; ++j) a[r][j] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational factor = a[i][c];
      for (size_t j = c; j < cols; ++j) a[i][j] -= factor * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<RatVec> nullspace(const RatMat& a, size_t ncols) {
  RatMat m = a;
  for (auto& row : m)
    if (row.size() != ncols) throw std::invalid_argument("nullspace: ragged matrix");
  auto pivots = rref(m);
  std::vector<bool> is_pivot(ncols, false);
  for (size_t c : pivots) is_pivot[c] = true;
  std::vector<RatVec> basis;
  for (size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    RatVec v(ncols, Rational(0));
    v[free] = Rational(1);
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RatVec> solve(const RatMat& a, const RatVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("solve: size mismatch");
  size_t ncols = a.empty() ? 0 : a[0].size();
  RatMat m = a;
  for (size_t i = 0; i < m.size(); ++i) m[i].push_back(b[i]);
  auto pivots = rref(m);
  // Inconsistent iff the augmented column is a pivot.
  if (!pivots.empty() && pivots.back() == ncols) return std::nullopt;
  RatVec x(ncols, Rational(0));
  for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = m[r][ncols];
  return x;
}

bool in_span(const std::vector<RatVec>& basis, const RatVec& v) {
  if (basis.empty()) {
    for (const auto& e : v)
      if (e != 0) return false;
    return true;
  }
  // Columns of A are the basis vectors.
  size_t dim = v.size();
  RatMat a(dim, RatVec(basis.size(), Rational(0)));
  for (size_t k = 0; k < basis.size(); ++k) {
    if (basis[k].size() != dim) throw std::invalid_argument("in_span: size mismatch");
    for (size_t i = 0; i < dim; ++i) a[i][k] = basis[k][i];
  }
  return solve(a, v).has_value();
}

}  // namespace wv
