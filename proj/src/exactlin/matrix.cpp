#include "hcyc/exactlin/matrix.hpp"

#include <algorithm>
#include <string>

namespace hcyc {

void require_same_field(const FieldSpec& a, const FieldSpec& b) {
  if (a != b) throw DimensionMismatch("mixed fields " + a.name() + " and " + b.name());
}

Vec unit_vec(int i) { return Vec{{i, Scalar(1)}}; }

Scalar vec_at(const Vec& x, int i) {
  auto it = std::lower_bound(x.begin(), x.end(), i, [](const Entry& e, int k) { return e.first < k; });
  if (it != x.end() && it->first == i) return it->second;
  return 0;
}

void axpy(Vec& y, const Scalar& a, const Vec& x, const FieldSpec& f) {
  if (a == 0 || x.empty()) return;
  Vec out;
  out.reserve(y.size() + x.size());
  std::size_t i = 0, j = 0;
  while (i < y.size() || j < x.size()) {
    if (j == x.size() || (i < y.size() && y[i].first < x[j].first)) {
      out.push_back(std::move(y[i++]));
    } else if (i == y.size() || x[j].first < y[i].first) {
      out.emplace_back(x[j].first, f.mul(a, x[j].second));
      ++j;
    } else {
      Scalar v = y[i].second;
      f.add_mul(v, a, x[j].second);
      if (v != 0) out.emplace_back(y[i].first, std::move(v));
      ++i, ++j;
    }
  }
  y = std::move(out);
}

Vec scaled(const Vec& x, const Scalar& a, const FieldSpec& f) {
  Vec out;
  if (a == 0) return out;
  out.reserve(x.size());
  for (auto& [i, v] : x) out.emplace_back(i, f.mul(a, v));
  return out;
}

Vec vec_sub(const Vec& x, const Vec& y, const FieldSpec& f) {
  Vec r = x;
  axpy(r, Scalar(-1), y, f);
  return r;
}

void Accumulator::add(int i, const Scalar& v, const FieldSpec& f) {
  if (!live_[i]) {
    live_[i] = 1;
    touched_.push_back(i);
    vals_[i] = v;
  } else {
    vals_[i] += v;
  }
  if (!f.is_rational()) f.reduce_inplace(vals_[i]);
}

void Accumulator::add_vec(const Vec& v, const Scalar& s, const FieldSpec& f) {
  if (s == 0) return;
  for (auto& [i, x] : v) {
    if (!live_[i]) {
      live_[i] = 1;
      touched_.push_back(i);
      vals_[i] = s * x;
    } else {
      vals_[i] += s * x;
    }
    if (!f.is_rational()) f.reduce_inplace(vals_[i]);
  }
}

Vec Accumulator::take() {
  std::sort(touched_.begin(), touched_.end());
  Vec out;
  out.reserve(touched_.size());
  for (int i : touched_) {
    if (vals_[i] != 0) out.emplace_back(i, vals_[i]);
    vals_[i] = 0;
    live_[i] = 0;
  }
  touched_.clear();
  return out;
}

Matrix Matrix::identity(FieldSpec f, int n) {
  Matrix m(f, n, n);
  for (int i = 0; i < n; ++i) m.c_[i] = unit_vec(i);
  return m;
}

Matrix Matrix::from_dense(FieldSpec f, const std::vector<std::vector<Scalar>>& rows) {
  int r = int(rows.size());
  int c = r ? int(rows[0].size()) : 0;
  Matrix m(f, r, c);
  for (int j = 0; j < c; ++j)
    for (int i = 0; i < r; ++i) {
      Scalar v = f.reduce(rows[i][j]);
      if (v != 0) m.c_[j].emplace_back(i, v);
    }
  return m;
}

Matrix Matrix::from_columns(FieldSpec f, int rows, std::vector<Vec> cols) {
  Matrix m(f, rows, int(cols.size()));
  m.c_ = std::move(cols);
  return m;
}

void Matrix::set(int i, int j, const Scalar& v0) {
  Scalar v = f_.reduce(v0);
  Vec& c = c_[j];
  auto it = std::lower_bound(c.begin(), c.end(), i, [](const Entry& e, int k) { return e.first < k; });
  if (it != c.end() && it->first == i) {
    if (v == 0)
      c.erase(it);
    else
      it->second = v;
  } else if (v != 0) {
    c.insert(it, Entry(i, v));
  }
}

Vec Matrix::apply(const Vec& x) const {
  if (x.size() == 1) return hcyc::scaled(c_[x[0].first], x[0].second, f_);
  Accumulator acc(rows_);
  for (auto& [j, v] : x) acc.add_vec(c_[j], v, f_);
  return acc.take();
}

Matrix Matrix::operator*(const Matrix& o) const {
  require_same_field(f_, o.f_);
  if (cols_ != o.rows_)
    throw DimensionMismatch("compose " + std::to_string(rows_) + "x" + std::to_string(cols_) + " with " +
                            std::to_string(o.rows_) + "x" + std::to_string(o.cols_));
  Matrix m(f_, rows_, o.cols_);
  Accumulator acc(rows_);
  for (int j = 0; j < o.cols_; ++j) {
    for (auto& [k, v] : o.c_[j]) acc.add_vec(c_[k], v, f_);
    m.c_[j] = acc.take();
  }
  return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
  require_same_field(f_, o.f_);
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sum shape");
  Matrix m = *this;
  for (int j = 0; j < cols_; ++j) axpy(m.c_[j], Scalar(1), o.c_[j], f_);
  return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
  require_same_field(f_, o.f_);
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix difference shape");
  Matrix m = *this;
  for (int j = 0; j < cols_; ++j) axpy(m.c_[j], Scalar(-1), o.c_[j], f_);
  return m;
}

Matrix Matrix::scaled(const Scalar& a) const {
  Matrix m(f_, rows_, cols_);
  Scalar b = f_.reduce(a);
  for (int j = 0; j < cols_; ++j) m.c_[j] = hcyc::scaled(c_[j], b, f_);
  return m;
}

Matrix Matrix::transpose() const {
  Matrix m(f_, cols_, rows_);
  for (int j = 0; j < cols_; ++j)
    for (auto& [i, v] : c_[j]) m.c_[i].emplace_back(j, v);
  return m;
}

Matrix Matrix::select_cols(const std::vector<int>& js) const {
  Matrix m(f_, rows_, int(js.size()));
  for (std::size_t k = 0; k < js.size(); ++k) m.c_[k] = c_[js[k]];
  return m;
}

Matrix Matrix::hstack(const Matrix& o) const {
  require_same_field(f_, o.f_);
  if (rows_ != o.rows_) throw DimensionMismatch("hstack rows");
  Matrix m(f_, rows_, cols_ + o.cols_);
  for (int j = 0; j < cols_; ++j) m.c_[j] = c_[j];
  for (int j = 0; j < o.cols_; ++j) m.c_[cols_ + j] = o.c_[j];
  return m;
}

Matrix Matrix::vstack(const Matrix& o) const {
  require_same_field(f_, o.f_);
  if (cols_ != o.cols_) throw DimensionMismatch("vstack cols");
  Matrix m(f_, rows_ + o.rows_, cols_);
  for (int j = 0; j < cols_; ++j) {
    m.c_[j] = c_[j];
    for (auto& [i, v] : o.c_[j]) m.c_[j].emplace_back(rows_ + i, v);
  }
  return m;
}

bool Matrix::is_zero() const {
  for (auto& c : c_)
    if (!c.empty()) return false;
  return true;
}

std::size_t Matrix::nnz() const {
  std::size_t n = 0;
  for (auto& c : c_) n += c.size();
  return n;
}

bool Matrix::operator==(const Matrix& o) const {
  return f_ == o.f_ && rows_ == o.rows_ && cols_ == o.cols_ && c_ == o.c_;
}

std::optional<int> Matrix::first_diff_col(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("compare shapes differ");
  for (int j = 0; j < cols_; ++j)
    if (c_[j] != o.c_[j]) return j;
  return std::nullopt;
}

std::vector<std::vector<Scalar>> Matrix::dense() const {
  std::vector<std::vector<Scalar>> d(rows_, std::vector<Scalar>(cols_));
  for (int j = 0; j < cols_; ++j)
    for (auto& [i, v] : c_[j]) d[i][j] = v;
  return d;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  require_same_field(a.field(), b.field());
  const FieldSpec& f = a.field();
  Matrix m(f, a.rows() * b.rows(), a.cols() * b.cols());
  for (int ja = 0; ja < a.cols(); ++ja)
    for (int jb = 0; jb < b.cols(); ++jb) {
      Vec c;
      c.reserve(a.col(ja).size() * b.col(jb).size());
      for (auto& [ia, va] : a.col(ja))
        for (auto& [ib, vb] : b.col(jb)) c.emplace_back(ia * b.rows() + ib, f.mul(va, vb));
      m.set_col(ja * b.cols() + jb, std::move(c));
    }
  return m;
}

Matrix kron_all(const std::vector<Matrix>& ms) {
  if (ms.empty()) throw DimensionMismatch("kron of nothing");
  Matrix m = ms[0];
  for (std::size_t k = 1; k < ms.size(); ++k) m = kron(m, ms[k]);
  return m;
}

}  // namespace hcyc
