#pragma once

#include "hcyc/hopfalgebroid/hopf_algebroid.hpp"

namespace hcyc {

struct StabilityFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Right U-module with a left U-comodule structure P -> U_< (x)_A P.
// The left A-action underlying the comodule is a.p = p t_L(a).
struct SaydModule {
  std::string name;
  int dim = 0;
  Matrix action;         // dim x (dim*d), column p*d+u is p.u
  Matrix coaction_lift;  // (d*dim) x dim, p -> p(-1) (x) p(0) in U (x)_k P

  Vec act(const Vec& p, const Vec& u, const HopfAlgebroid& h) const;
  Matrix act_by(const Vec& u, const HopfAlgebroid& h) const;  // p -> p.u
  TowerFactor left_factor(const HopfAlgebroid& h) const;      // a > p = p t(a)
  TowerFactor right_factor(const HopfAlgebroid& h) const;     // p < a = p t(a)
  QuotientPresentation coaction_tower(const HopfAlgebroid& h) const;  // U (x)_A P
  SaydModule perturbed(const HopfAlgebroid& h, unsigned seed) const;
};

Report check_sayd(const SaydModule& p, const HopfAlgebroid& h, bool require_stable = true);
// intertwines actions and coactions
Report check_ayd_morphism(const SaydModule& p, const SaydModule& q, const Matrix& m, const HopfAlgebroid& h);

// Left U-module, left U-comodule Z -> U_< (x)_A Z (with a.z = s_L(a) z), algebra.
struct YdAlgebra {
  std::string name;
  AlgebraData Z;
  Matrix action;         // dimZ x (d*dimZ), column u*dimZ+z is u z
  Matrix coaction_lift;  // (d*dimZ) x dimZ
  bool braided_commutative = false;  // set by check_yd_algebra

  int dim() const { return Z.dim; }
  Vec act(const Vec& u, const Vec& z, const HopfAlgebroid& h) const;
  QuotientPresentation coaction_tower(const HopfAlgebroid& h) const;
};

Report check_yd_algebra(YdAlgebra& z, const HopfAlgebroid& h);

}  // namespace hcyc
