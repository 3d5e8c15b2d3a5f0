#pragma once

#include "hcyc/cyclichom/induced.hpp"

namespace hcyc {

struct NotCommutative : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

bool is_commutative(const HopfAlgebroid& h);

// sh_pq : C_p(U) (x) C_q(U) -> C_{p+q}(U) on quotient coordinates of C_p (x) C_q; cu = build_cyclic_CU(h, N)
Matrix shuffle_product(const HopfAlgebroid& h, const CyclicModuleData& cu, int p, int q);

// b sh = sh (b (x) 1 + (-1)^p 1 (x) b) for p + q <= cu.top
Report check_shuffle_chain_map(const HopfAlgebroid& h, const CyclicModuleData& cu);

// x(sh(a (x) b)) = sh(x(1)a (x) x(2)b) for p + q <= top, at chain level and on HH representatives
// (degrees p + q < top); x(1) = eps(x) 1 on C_0.
Report check_shuffle_measuring(const MeasuringData& m, const Vec& x, int top);

}  // namespace hcyc
