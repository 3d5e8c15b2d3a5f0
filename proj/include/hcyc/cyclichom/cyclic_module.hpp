#pragma once

#include "hcyc/algcore/algebra.hpp"

#include <functional>

namespace hcyc {

enum class Direction { Cyclic, Cocyclic };

struct CertificateFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Degrees 0..top.
// Cyclic:   face[n][i] : C_n -> C_{n-1} (1 <= n <= top, 0 <= i <= n),
//           degen[n][i] : C_n -> C_{n+1} (0 <= n < top, 0 <= i <= n).
// Cocyclic: face[n][i] : C^{n-1} -> C^n (1 <= n <= top, 0 <= i <= n),
//           degen[n][i] : C^{n+1} -> C^n (0 <= n < top, 0 <= i <= n).
// cyclic[n] is t_n (resp. tau_n).
struct CyclicModuleData {
  std::string name;
  FieldSpec field;
  Direction direction = Direction::Cyclic;
  int top = 0;
  std::vector<QuotientPresentation> spaces;
  std::vector<std::vector<Matrix>> face, degen;
  std::vector<Matrix> cyclic;

  int dim(int n) const { return spaces[n].dim(); }
  void resize(int top_degree);
};

Report check_cyclic_module(const CyclicModuleData& m);

// every space k, every map the identity
CyclicModuleData point_module(FieldSpec f, Direction dir, int top);

// d'_i = d_{n-i}, s'_i = s_{n-i}, t' = t^{-1}
CyclicModuleData reindexed(const CyclicModuleData& m);

// cyclic dual of a cocyclic module: d_0 = sigma_{n-1} tau, d_i = sigma_{i-1}, s_i = delta_i, t = tau^{-1}
CyclicModuleData cyclic_dual(const CyclicModuleData& cocyclic);

// f_n : m.spaces[n] -> m2.spaces[n]; exact commutation with every structure map
Report certify_chain_map(const CyclicModuleData& m, const CyclicModuleData& m2, const std::vector<Matrix>& f,
                         const std::string& label);

// Free-level operator: column for each multi-index of `in` produced by fn into an accumulator of size out_dim.
using ColumnFn = std::function<void(const std::vector<int>&, Accumulator&)>;
Matrix build_free(const FieldSpec& f, const TensorShape& in, int out_dim, const ColumnFn& fn);
// columns `which` of the free map only
Matrix build_free_on(const FieldSpec& f, const TensorShape& in, const std::vector<int>& which, int out_dim,
                     const ColumnFn& fn);
// dst.projection * free * src.section, evaluating the free map only on the support of the section;
// well-definedness on src is not checked
Matrix descend_lazily(const FieldSpec& f, const TensorShape& in, const QuotientPresentation& src,
                      const QuotientPresentation& dst, const ColumnFn& fn);

}  // namespace hcyc
