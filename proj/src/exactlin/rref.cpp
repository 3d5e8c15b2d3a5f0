#include "hcyc/exactlin/rref.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <numeric>

namespace hcyc {

namespace {

std::atomic<int> g_mode{int(ElimMode::Auto)};

constexpr int kParallelMin = 48;
constexpr int kBlock = 32;

bool mostly_dense(const std::vector<Vec>& rows, int ncols) {
  if (rows.empty() || ncols == 0) return false;
  std::size_t nnz = 0;
  for (auto& r : rows) nnz += r.size();
  return 2 * nnz > std::size_t(rows.size()) * std::size_t(ncols) && rows.size() * std::size_t(ncols) <= (1u << 22);
}

RowEchelon finish(std::vector<Vec> piv_rows, std::vector<int> piv_cols, int ncols) {
  std::vector<int> order(piv_cols.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return piv_cols[a] < piv_cols[b]; });
  RowEchelon e;
  e.ncols = ncols;
  for (int k : order) {
    e.rows.push_back(std::move(piv_rows[k]));
    e.pivots.push_back(piv_cols[k]);
  }
  return e;
}

void normalize(Vec& r, const FieldSpec& f) {
  Scalar inv = f.inverse(r.front().second);
  for (auto& [c, v] : r) v = f.mul(v, inv);
}

// Subtract from r its components along the given pivots (which must be
// zero at each other's pivot columns).
Vec reduce_against(const Vec& r, const std::vector<int>& col_piv, const std::vector<Vec>& piv_rows, int first_piv,
                   Accumulator& acc, const FieldSpec& f) {
  bool touched = false;
  for (auto& [c, v] : r) {
    int k = col_piv[c];
    if (k >= first_piv) {
      if (!touched) {
        acc.add_vec(r, Scalar(1), f);
        touched = true;
      }
      acc.add_vec(piv_rows[k], f.neg(v), f);
    }
  }
  if (!touched) return r;
  return acc.take();
}

void back_eliminate(std::vector<Vec>& piv_rows, const Vec& nr, int c, const FieldSpec& f, bool par) {
  int n = int(piv_rows.size());
#pragma omp parallel for schedule(dynamic, 4) if (par && n > kParallelMin)
  for (int k = 0; k < n; ++k) {
    Scalar v = vec_at(piv_rows[k], c);
    if (v != 0) axpy(piv_rows[k], f.neg(v), nr, f);
  }
}

RowEchelon dense_rref(const std::vector<Vec>& rows, int ncols, const FieldSpec& f, bool par) {
  int nrows = int(rows.size());
  std::vector<std::vector<Scalar>> a(nrows, std::vector<Scalar>(ncols));
  for (int i = 0; i < nrows; ++i)
    for (auto& [c, v] : rows[i]) a[i][c] = v;
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < ncols && r < nrows; ++c) {
    int p = -1;
    for (int i = r; i < nrows; ++i)
      if (a[i][c] != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(a[p], a[r]);
    Scalar inv = f.inverse(a[r][c]);
    for (int j = c; j < ncols; ++j) a[r][j] = f.mul(a[r][j], inv);
#pragma omp parallel for schedule(static) if (par && nrows > kParallelMin)
    for (int i = 0; i < nrows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Scalar m = a[i][c];
      for (int j = c; j < ncols; ++j)
        if (a[r][j] != 0) {
          a[i][j] -= m * a[r][j];
          if (!f.is_rational()) f.reduce_inplace(a[i][j]);
        }
    }
    pivots.push_back(c);
    ++r;
  }
  RowEchelon e;
  e.ncols = ncols;
  e.pivots = pivots;
  for (int i = 0; i < r; ++i) {
    Vec v;
    for (int j = 0; j < ncols; ++j)
      if (a[i][j] != 0) v.emplace_back(j, a[i][j]);
    e.rows.push_back(std::move(v));
  }
  return e;
}

}  // namespace

void set_default_elim_mode(ElimMode mode) { g_mode = int(mode); }
ElimMode default_elim_mode() { return ElimMode(g_mode.load()); }

RowEchelon rref_serial(std::vector<Vec> rows, int ncols, const FieldSpec& f) {
  if (mostly_dense(rows, ncols)) return dense_rref(rows, ncols, f, false);
  std::vector<int> col_piv(ncols, -1);
  std::vector<Vec> piv_rows;
  std::vector<int> piv_cols;
  Accumulator acc(ncols);
  for (auto& r0 : rows) {
    Vec r = reduce_against(r0, col_piv, piv_rows, 0, acc, f);
    if (r.empty()) continue;
    normalize(r, f);
    int c = r.front().first;
    back_eliminate(piv_rows, r, c, f, false);
    col_piv[c] = int(piv_rows.size());
    piv_rows.push_back(std::move(r));
    piv_cols.push_back(c);
  }
  return finish(std::move(piv_rows), std::move(piv_cols), ncols);
}

// Incoming rows are reduced a block at a time against the current pivots in
// parallel; the block is then folded in sequentially.
RowEchelon rref_parallel(std::vector<Vec> rows, int ncols, const FieldSpec& f) {
  if (mostly_dense(rows, ncols)) return dense_rref(rows, ncols, f, true);
  std::vector<int> col_piv(ncols, -1);
  std::vector<Vec> piv_rows;
  std::vector<int> piv_cols;
  Accumulator acc(ncols);
  int n = int(rows.size());
  for (int b0 = 0; b0 < n; b0 += kBlock) {
    int b1 = std::min(n, b0 + kBlock);
    int first_new = int(piv_rows.size());
#pragma omp parallel if (b1 - b0 > 1 && ncols > kParallelMin)
    {
      Accumulator local(ncols);
#pragma omp for schedule(dynamic, 1)
      for (int i = b0; i < b1; ++i) rows[i] = reduce_against(rows[i], col_piv, piv_rows, 0, local, f);
    }
    for (int i = b0; i < b1; ++i) {
      Vec r = reduce_against(rows[i], col_piv, piv_rows, first_new, acc, f);
      if (r.empty()) continue;
      normalize(r, f);
      int c = r.front().first;
      back_eliminate(piv_rows, r, c, f, true);
      col_piv[c] = int(piv_rows.size());
      piv_rows.push_back(std::move(r));
      piv_cols.push_back(c);
    }
  }
  return finish(std::move(piv_rows), std::move(piv_cols), ncols);
}

RowEchelon rref_rows(std::vector<Vec> rows, int ncols, const FieldSpec& f, ElimMode mode) {
  if (mode == ElimMode::Auto) mode = default_elim_mode();
  if (mode == ElimMode::Auto)
    mode = (omp_get_max_threads() > 1 && rows.size() > std::size_t(4 * kParallelMin)) ? ElimMode::Parallel
                                                                                       : ElimMode::Serial;
  return mode == ElimMode::Parallel ? rref_parallel(std::move(rows), ncols, f) : rref_serial(std::move(rows), ncols, f);
}

RowEchelon rref(const Matrix& m, ElimMode mode) {
  Matrix t = m.transpose();
  return rref_rows(t.columns(), m.cols(), m.field(), mode);
}

}  // namespace hcyc
