#pragma once

#include "hcyc/hopfalgebroid/sayd.hpp"

namespace hcyc::gallery {

AlgebraData dual_numbers(FieldSpec f);     // k[e]/(e^2), basis 1, e
AlgebraData split_pair(FieldSpec f);       // k x k, basis e1, e2
AlgebraData group_ring(FieldSpec f, int n);  // k[C_n], basis g^0..g^{n-1}

HopfPtr trivial(FieldSpec f);
HopfPtr group_algebra(FieldSpec f, int n);
// U = A (x) A^op, s(a) = a (x) 1, t(b) = 1 (x) b, Delta(a (x) b) = (a (x) 1) (x)_A (1 (x) b),
// eps(a (x) b) = ab, S(a (x) b) = b (x) a
HopfPtr pair(const AlgebraData& A);

// k with counit action and trivial coaction (A = k)
SaydModule counit_module(const HopfAlgebroid& h);
// k over k[C_2] with g acting by -1, trivial coaction
SaydModule sign_module(const HopfAlgebroid& c2);
// k over k[C_2] with g acting by -1 and p -> g (x) p: AYD, not stable
SaydModule sign_unstable(const HopfAlgebroid& c2);
// span{p0, p1} over k[C_2], g swaps, p0 -> 1 (x) p0, p1 -> g (x) p1: not AYD
SaydModule swap_module(const HopfAlgebroid& c2);
// A over pair(A) for commutative A: p.(a (x) b) = pab, p -> s(p) (x) 1
SaydModule base_module(const HopfAlgebroid& pair);

// k over a Hopf algebra with counit action, trivial coaction, multiplication of k
YdAlgebra trivial_yd(const HopfAlgebroid& h);
// k[C_n] over k[C_n] with trivial action; coaction g -> g (x) g if graded, else 1 (x) g
YdAlgebra group_yd(const HopfAlgebroid& cn, bool graded);
// A over pair(A): (a (x) b) z = azb, z -> s(z) (x) 1
YdAlgebra base_yd(const HopfAlgebroid& pair);

struct Example {
  std::string key;
  HopfPtr h;
  std::vector<SaydModule> coefficients;
};
std::vector<Example> all(FieldSpec f);

}  // namespace hcyc::gallery
