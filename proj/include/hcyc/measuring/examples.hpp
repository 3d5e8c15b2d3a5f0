#pragma once

#include "hcyc/hopfalgebroid/gallery.hpp"
#include "hcyc/measuring/measuring.hpp"

namespace hcyc::gallery {

// Euler derivation of k[e]/(e^2): 1 -> 0, e -> e
Matrix euler_derivation(FieldSpec f);

// C = k grouplike, Psi = psi = id
MeasuringData identity_measuring(HopfPtr h);
// pair(k[e]/(e^2)), C = span{g, x}: g -> id, x -> (delta (x) 1 + 1 (x) delta, delta)
MeasuringData euler_pair(FieldSpec f);
// same with Psi(x) = delta (x) 1 only
MeasuringData euler_pair_broken(FieldSpec f);
// pair(k x k), C = k: the swap e1 <-> e2 on both factors
MeasuringData swap_split(FieldSpec f);

// D = C = k, identity throughout, P = P' = k over the trivial algebroid
ComoduleMeasuringData identity_comodule(FieldSpec f);
// k[C_2], C = D = span{g, x}, Psi(x) = psi(x) = 0, P = P' = k; Omega(g) = id, Omega(x) = omega_x
ComoduleMeasuringData c2_comodule(FieldSpec f, const Scalar& omega_x);
// as above but P' = sign module: fails (2)
ComoduleMeasuringData c2_counit_to_sign(FieldSpec f);
// euler_pair with P = P' = A (base module), Omega(g) = id, Omega(x) = delta
ComoduleMeasuringData euler_pair_comodule(FieldSpec f);

// k over k[C_2], C = span{g, x}, psi(c) = eps(c) id
YdMeasuringData c2_trivial_yd(FieldSpec f);
// base_yd over pair(k[e]/(e^2)) with the Euler measuring
YdMeasuringData euler_base_yd(FieldSpec f);
// identity from graded k[C_2] to k[C_2] with trivial coaction
YdMeasuringData c2_regraded_yd(FieldSpec f);

}  // namespace hcyc::gallery
