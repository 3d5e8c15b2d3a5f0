#pragma once

#include "hcyc/exactlin/field.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace hcyc {

using Entry = std::pair<int, Scalar>;
using Vec = std::vector<Entry>;  // sorted by index, no zeros

struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

Vec unit_vec(int i);
void axpy(Vec& y, const Scalar& a, const Vec& x, const FieldSpec& f);
Vec scaled(const Vec& x, const Scalar& a, const FieldSpec& f);
Vec vec_sub(const Vec& x, const Vec& y, const FieldSpec& f);
Scalar vec_at(const Vec& x, int i);

// Scratch buffer for building one sparse vector from many contributions.
class Accumulator {
 public:
  explicit Accumulator(int n) : vals_(n), live_(n, 0) {}
  void add(int i, const Scalar& v, const FieldSpec& f);
  void add_vec(const Vec& v, const Scalar& s, const FieldSpec& f);
  Vec take();
  int size() const { return int(vals_.size()); }

 private:
  std::vector<Scalar> vals_;
  std::vector<char> live_;
  std::vector<int> touched_;
};

// Column-sparse matrix; column j is the image of basis vector j.
class Matrix {
 public:
  Matrix() = default;
  Matrix(FieldSpec f, int rows, int cols) : f_(f), rows_(rows), cols_(cols), c_(cols) {}

  static Matrix identity(FieldSpec f, int n);
  static Matrix from_dense(FieldSpec f, const std::vector<std::vector<Scalar>>& rows);
  static Matrix from_columns(FieldSpec f, int rows, std::vector<Vec> cols);

  const FieldSpec& field() const { return f_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Vec& col(int j) const { return c_[j]; }
  const std::vector<Vec>& columns() const { return c_; }
  void set_col(int j, Vec v) { c_[j] = std::move(v); }
  Scalar at(int i, int j) const { return vec_at(c_[j], i); }
  void set(int i, int j, const Scalar& v);

  Vec apply(const Vec& x) const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Scalar& a) const;
  Matrix transpose() const;
  Matrix select_cols(const std::vector<int>& js) const;
  Matrix hstack(const Matrix& o) const;
  Matrix vstack(const Matrix& o) const;

  bool is_zero() const;
  std::size_t nnz() const;
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }
  std::optional<int> first_diff_col(const Matrix& o) const;
  std::vector<std::vector<Scalar>> dense() const;

 private:
  FieldSpec f_;
  int rows_ = 0, cols_ = 0;
  std::vector<Vec> c_;
};

Matrix kron(const Matrix& a, const Matrix& b);
Matrix kron_all(const std::vector<Matrix>& ms);

void require_same_field(const FieldSpec& a, const FieldSpec& b);

}  // namespace hcyc
