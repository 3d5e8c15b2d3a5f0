#pragma once

#include "hcyc/exactlin/rref.hpp"

#include <optional>

namespace hcyc {

struct NoSolution : std::runtime_error {
  using std::runtime_error::runtime_error;
  int column = -1;
};

int rank(const Matrix& m);
// Columns form a basis of ker m.
Matrix kernel(const Matrix& m);
// Columns form a basis of the column space of m (echelon basis).
Matrix image_basis(const Matrix& m);
std::optional<Vec> solve(const Matrix& m, const Vec& b);
// X with m X = b, column by column; throws NoSolution naming the first bad column.
Matrix solve_columns(const Matrix& m, const Matrix& b);
Matrix inverse(const Matrix& m);
bool in_column_space(const Matrix& m, const Vec& v);

}  // namespace hcyc
