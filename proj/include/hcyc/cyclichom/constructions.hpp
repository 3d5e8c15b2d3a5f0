#pragma once

#include "hcyc/cyclichom/cyclic_module.hpp"
#include "hcyc/hopfalgebroid/sayd.hpp"

namespace hcyc {

// C^n(U) = U (x)_A ... (x)_A U, C^0 = A
CyclicModuleData build_cocyclic_CU(const HopfAlgebroid& h, int top);
// C_n(U) = U (x)_{A^op} ... (x)_{A^op} U, C_0 = A^op
CyclicModuleData build_cyclic_CU(const HopfAlgebroid& h, int top);
// C_n(U;P) = P (x)_{A^op} U^{(x) n}, d_0 acting on the last factor; throws StabilityFailure unless P is stable.
CyclicModuleData build_cyclic_with_coeffs(const HopfAlgebroid& h, const SaydModule& p, int top);
// C^n(U;P) = U^{(x)_A n} (x)_A P
CyclicModuleData build_cocyclic_with_coeffs(const HopfAlgebroid& h, const SaydModule& p, int top);

struct HopfGaloisMaps {
  std::vector<Matrix> xi, xi_inv;
};
// xi_n : C_n -> C^n (with coefficients when p is given)
HopfGaloisMaps hopf_galois_chain_map(const HopfAlgebroid& h, const SaydModule* p, int top);

}  // namespace hcyc
