#include "hcyc/exactlin/linalg.hpp"

#include <algorithm>
#include <string>

namespace hcyc {

int rank(const Matrix& m) {
  if (m.rows() < m.cols()) return rref(m.transpose()).rank();
  return rref(m).rank();
}

Matrix kernel(const Matrix& m) {
  RowEchelon e = rref(m);
  const FieldSpec& f = m.field();
  std::vector<char> is_piv(m.cols(), 0);
  for (int c : e.pivots) is_piv[c] = 1;
  // column of free variable c in the kernel basis
  std::vector<int> free_cols;
  for (int c = 0; c < m.cols(); ++c)
    if (!is_piv[c]) free_cols.push_back(c);
  std::vector<int> free_index(m.cols(), -1);
  for (std::size_t k = 0; k < free_cols.size(); ++k) free_index[free_cols[k]] = int(k);
  std::vector<Vec> basis(free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) basis[k].emplace_back(free_cols[k], Scalar(1));
  for (int r = 0; r < e.rank(); ++r)
    for (auto& [c, v] : e.rows[r]) {
      if (free_index[c] < 0) continue;
      basis[free_index[c]].emplace_back(e.pivots[r], f.neg(v));
    }
  for (auto& b : basis) std::sort(b.begin(), b.end(), [](const Entry& x, const Entry& y) { return x.first < y.first; });
  return Matrix::from_columns(f, m.cols(), std::move(basis));
}

Matrix image_basis(const Matrix& m) {
  RowEchelon e = rref(m.transpose());
  return Matrix::from_columns(m.field(), m.rows(), std::move(e.rows));
}

namespace {

// Solve using the echelon form of [m | b].
std::vector<std::optional<Vec>> solve_many(const Matrix& m, const Matrix& b) {
  const FieldSpec& f = m.field();
  Matrix aug = m.hstack(b);
  RowEchelon e = rref(aug);
  std::vector<std::optional<Vec>> out(b.cols());
  std::vector<char> bad(b.cols(), 0);
  for (int r = 0; r < e.rank(); ++r)
    if (e.pivots[r] >= m.cols()) bad[e.pivots[r] - m.cols()] = 1;
  // a pivot in an earlier rhs column makes later rhs columns look solvable in
  // terms of it; handle columns independently when that happens
  bool mixed = false;
  for (int r = 0; r < e.rank(); ++r)
    if (e.pivots[r] >= m.cols()) mixed = true;
  if (mixed && b.cols() > 1) {
    for (int j = 0; j < b.cols(); ++j) {
      auto one = solve_many(m, b.select_cols({j}));
      out[j] = std::move(one[0]);
    }
    return out;
  }
  for (int j = 0; j < b.cols(); ++j) {
    if (bad[j]) continue;
    Vec x;
    int cj = m.cols() + j;
    for (int r = 0; r < e.rank(); ++r) {
      if (e.pivots[r] >= m.cols()) break;
      Scalar v = vec_at(e.rows[r], cj);
      if (v != 0) x.emplace_back(e.pivots[r], v);
    }
    out[j] = std::move(x);
  }
  (void)f;
  return out;
}

}  // namespace

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
  Matrix bm = Matrix::from_columns(m.field(), m.rows(), {b});
  return solve_many(m, bm)[0];
}

Matrix solve_columns(const Matrix& m, const Matrix& b) {
  if (m.rows() != b.rows()) throw DimensionMismatch("solve: row counts differ");
  auto xs = solve_many(m, b);
  Matrix x(m.field(), m.cols(), b.cols());
  for (int j = 0; j < b.cols(); ++j) {
    if (!xs[j]) {
      NoSolution e("no solution for column " + std::to_string(j));
      e.column = j;
      throw e;
    }
    x.set_col(j, std::move(*xs[j]));
  }
  return x;
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw NotInvertible("non-square matrix");
  if (rank(m) != m.rows()) throw NotInvertible("singular matrix");
  return solve_columns(m, Matrix::identity(m.field(), m.rows()));
}

bool in_column_space(const Matrix& m, const Vec& v) { return solve(m, v).has_value(); }

}  // namespace hcyc
