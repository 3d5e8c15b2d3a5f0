#pragma once

#include "hcyc/exactlin/matrix.hpp"

namespace hcyc {

// Reduced row echelon form; rows sorted by pivot column, pivot entries 1.
struct RowEchelon {
  std::vector<Vec> rows;
  std::vector<int> pivots;
  int ncols = 0;
  int rank() const { return int(pivots.size()); }
};

enum class ElimMode { Auto, Serial, Parallel };

RowEchelon rref_serial(std::vector<Vec> rows, int ncols, const FieldSpec& f);
RowEchelon rref_parallel(std::vector<Vec> rows, int ncols, const FieldSpec& f);
RowEchelon rref_rows(std::vector<Vec> rows, int ncols, const FieldSpec& f, ElimMode mode = ElimMode::Auto);

// Echelon form of the rows of m.
RowEchelon rref(const Matrix& m, ElimMode mode = ElimMode::Auto);

void set_default_elim_mode(ElimMode mode);
ElimMode default_elim_mode();

}  // namespace hcyc
