#include "hcyc/exactlin/quotient.hpp"

#include <atomic>
#include <random>

namespace hcyc {

Space Space::make(int dim, std::string label) {
  static std::atomic<std::uint64_t> next{1};
  return Space{next++, dim, std::move(label)};
}

QuotientPresentation QuotientPresentation::free(const FieldSpec& f, int dim, std::string label) {
  QuotientPresentation q;
  q.field = f;
  q.ambient = Space::make(dim, label);
  q.quotient = Space::make(dim, label);
  q.relations = Matrix(f, dim, 0);
  q.projection = Matrix::identity(f, dim);
  q.section = Matrix::identity(f, dim);
  for (int i = 0; i < dim; ++i) q.kept.push_back(i);
  return q;
}

QuotientPresentation quotient_by(const FieldSpec& f, int ambient_dim, const Matrix& relations, std::string label) {
  if (relations.rows() != ambient_dim) throw DimensionMismatch("relations do not live in the ambient space");
  RowEchelon e = rref_rows(relations.columns(), ambient_dim, f);
  QuotientPresentation q;
  q.field = f;
  q.ambient = Space::make(ambient_dim, label);
  std::vector<int> piv_row(ambient_dim, -1);
  for (int r = 0; r < e.rank(); ++r) piv_row[e.pivots[r]] = r;
  std::vector<int> qidx(ambient_dim, -1);
  for (int i = 0; i < ambient_dim; ++i)
    if (piv_row[i] < 0) {
      qidx[i] = int(q.kept.size());
      q.kept.push_back(i);
    }
  int qd = int(q.kept.size());
  q.quotient = Space::make(qd, label + "/~");
  q.projection = Matrix(f, qd, ambient_dim);
  for (int i = 0; i < ambient_dim; ++i) {
    if (qidx[i] >= 0) {
      q.projection.set_col(i, unit_vec(qidx[i]));
      continue;
    }
    // e_p = row_p - (row_p minus its pivot); row_p projects to 0
    Vec v;
    for (auto& [c, x] : e.rows[piv_row[i]])
      if (c != i) v.emplace_back(qidx[c], f.neg(x));
    q.projection.set_col(i, std::move(v));
  }
  q.section = Matrix(f, ambient_dim, qd);
  for (int k = 0; k < qd; ++k) q.section.set_col(k, unit_vec(q.kept[k]));
  q.relations = Matrix::from_columns(f, ambient_dim, std::move(e.rows));
  return q;
}

QuotientPresentation tensor_presentation(const QuotientPresentation& a, const QuotientPresentation& b) {
  const FieldSpec& f = a.field;
  QuotientPresentation q;
  q.field = f;
  q.ambient = Space::make(a.ambient_dim() * b.ambient_dim(), a.ambient.label + "(x)" + b.ambient.label);
  q.quotient = Space::make(a.dim() * b.dim(), a.quotient.label + "(x)" + b.quotient.label);
  Matrix ia = Matrix::identity(f, a.ambient_dim()), ib = Matrix::identity(f, b.ambient_dim());
  q.relations = kron(a.relations, ib).hstack(kron(ia, b.relations));
  q.projection = kron(a.projection, b.projection);
  q.section = kron(a.section, b.section);
  for (int i : a.kept)
    for (int j : b.kept) q.kept.push_back(i * b.ambient_dim() + j);
  q.convention = a.convention + "|" + b.convention;
  return q;
}

Matrix descend_to(const Matrix& f_free, const QuotientPresentation& src, const Matrix& dst_projection) {
  if (f_free.cols() != src.ambient_dim()) throw DimensionMismatch("descend: map domain is not the source ambient");
  Matrix pf = dst_projection * f_free;
  Matrix leak = pf * src.relations;
  for (int j = 0; j < leak.cols(); ++j)
    if (!leak.col(j).empty())
      throw DescentFailure("map does not respect the relations of " + src.ambient.label, j,
                           leak.col(j).front().first);
  return pf * src.section;
}

Matrix descend(const Matrix& f_free, const QuotientPresentation& src, const QuotientPresentation& dst) {
  if (f_free.rows() != dst.ambient_dim()) throw DimensionMismatch("descend: map codomain is not the target ambient");
  return descend_to(f_free, src, dst.projection);
}

Matrix perturb_lifts(const QuotientPresentation& q, const Matrix& lifts, unsigned seed) {
  if (q.relations.cols() == 0) return lifts;
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> dist(-2, 2);
  Matrix c(q.field, q.relations.cols(), lifts.cols());
  for (int j = 0; j < lifts.cols(); ++j)
    for (int i = 0; i < q.relations.cols(); ++i) {
      int v = dist(rng);
      if (v) c.set(i, j, Scalar(v));
    }
  return lifts + q.relations * c;
}

}  // namespace hcyc
