#include "hcyc/exactlin/tensor.hpp"

namespace hcyc {

void add_outer(Accumulator& acc, const Scalar& s, const std::vector<const Vec*>& factors, const TensorShape& shape,
               const FieldSpec& f) {
  int n = int(factors.size());
  for (auto* v : factors)
    if (v->empty()) return;
  std::vector<std::size_t> pos(n, 0);
  while (true) {
    int k = 0;
    Scalar c = s;
    for (int i = 0; i < n; ++i) {
      const Entry& e = (*factors[i])[pos[i]];
      k = k * shape.dims[i] + e.first;
      c *= e.second;
    }
    acc.add(k, c, f);
    int i = n - 1;
    while (i >= 0 && ++pos[i] == factors[i]->size()) pos[i--] = 0;
    if (i < 0) break;
  }
}

Vec outer(const std::vector<const Vec*>& factors, const TensorShape& shape, const FieldSpec& f) {
  Accumulator acc(shape.size());
  add_outer(acc, Scalar(1), factors, shape, f);
  return acc.take();
}

Vec outer(const std::vector<Vec>& factors, const TensorShape& shape, const FieldSpec& f) {
  std::vector<const Vec*> ps;
  for (auto& v : factors) ps.push_back(&v);
  return outer(ps, shape, f);
}

Matrix slot_map(const TensorShape& in, int slot, int width, const Matrix& g, const FieldSpec& f) {
  int left = 1, mid = 1, right = 1;
  for (int i = 0; i < slot; ++i) left *= in.dims[i];
  for (int i = slot; i < slot + width; ++i) mid *= in.dims[i];
  for (int i = slot + width; i < in.order(); ++i) right *= in.dims[i];
  if (g.cols() != mid) throw DimensionMismatch("slot_map: inner map has wrong domain");
  std::vector<Matrix> parts;
  if (left > 1) parts.push_back(Matrix::identity(f, left));
  parts.push_back(g);
  if (right > 1) parts.push_back(Matrix::identity(f, right));
  return kron_all(parts);
}

}  // namespace hcyc
