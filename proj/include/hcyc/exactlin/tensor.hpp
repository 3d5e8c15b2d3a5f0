#pragma once

#include "hcyc/exactlin/matrix.hpp"

#include <span>

namespace hcyc {

// Free tensor product V1 (x) ... (x) Vn, left-major lexicographic basis order.
struct TensorShape {
  std::vector<int> dims;

  TensorShape() = default;
  explicit TensorShape(std::vector<int> d) : dims(std::move(d)) {}
  static TensorShape power(int d, int n) { return TensorShape(std::vector<int>(n, d)); }

  int order() const { return int(dims.size()); }
  int size() const {
    int s = 1;
    for (int d : dims) s *= d;
    return s;
  }
  int encode(std::span<const int> idx) const {
    int k = 0;
    for (std::size_t i = 0; i < dims.size(); ++i) k = k * dims[i] + idx[i];
    return k;
  }
  std::vector<int> decode(int k) const {
    std::vector<int> idx(dims.size());
    for (int i = int(dims.size()) - 1; i >= 0; --i) {
      idx[i] = k % dims[i];
      k /= dims[i];
    }
    return idx;
  }
};

// Outer product of vectors, one per tensor factor.
Vec outer(const std::vector<const Vec*>& factors, const TensorShape& shape, const FieldSpec& f);
Vec outer(const std::vector<Vec>& factors, const TensorShape& shape, const FieldSpec& f);
// Accumulate s * outer(factors) into acc.
void add_outer(Accumulator& acc, const Scalar& s, const std::vector<const Vec*>& factors, const TensorShape& shape,
               const FieldSpec& f);

// id (x) ... (x) g (x) ... (x) id with g acting on factors [slot, slot+g_in.order()).
Matrix slot_map(const TensorShape& in, int slot, int width, const Matrix& g, const FieldSpec& f);

}  // namespace hcyc
