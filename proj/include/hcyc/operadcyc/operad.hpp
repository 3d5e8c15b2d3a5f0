#pragma once

#include "hcyc/cyclichom/homology.hpp"
#include "hcyc/cyclichom/induced.hpp"

#include <array>
#include <map>

namespace hcyc {

struct UnsupportedBase : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Non-Sigma operad with multiplication, arities 0..top.
// comp {p, q, i}: O(p) (x) O(q) -> O(p+q-1) for 1 <= i <= p, p+q-1 <= top; column a * dim(q) + b.
struct OperadData {
  std::string name;
  FieldSpec field;
  int top = 0;
  std::vector<int> dims;
  std::map<std::array<int, 3>, Matrix> comp;
  Vec one, m, e;

  int dim(int n) const { return dims[n]; }
  const Matrix* circ(int p, int q, int i) const;
};

// Cyclic unital comp module, degrees 0..top.
// bullet {p, n, i}: O(p) (x) L(n) -> L(n-p+1) for 0 <= i <= n+1-p; absent entries are outside the table.
struct CompModuleData {
  std::string name;
  int top = 0;
  std::vector<int> dims;
  std::map<std::array<int, 3>, Matrix> bullet;
  std::vector<Matrix> t;

  int dim(int n) const { return dims[n]; }
  const Matrix* at(int p, int n, int i) const;
};

Report check_operad(const OperadData& o);
Report check_comp_module(const OperadData& o, const CompModuleData& l);

// d_i = m . i (i < n), d_n = m . 0 t, s_j = e . (j+1)
CyclicModuleData comp_cyclic_module(const OperadData& o, const CompModuleData& l, int top);

// O(n) = k, every composition 1
OperadData one_dimensional_operad(FieldSpec f, int top);
// L(n) = k, every action 1, t = id
CompModuleData point_comp_module(const OperadData& o, int top);

struct OperadMeasuringData {
  std::string name;
  CoalgebraData C;
  std::shared_ptr<const OperadData> src, dst;
  std::vector<std::vector<Matrix>> Psi;  // Psi[n][x]
};

struct CompComoduleMeasuringData {
  std::string name;
  OperadMeasuringData base;
  ComoduleData D;  // Left: y -> y(0) (x) y(1) in C (x) D
  std::shared_ptr<const CompModuleData> src, dst;
  std::vector<std::vector<Matrix>> Omega;  // Omega[n][y]
};

Report check_operad_measuring(const OperadMeasuringData& om);
Report check_comp_comodule_measuring(const CompComoduleMeasuringData& cm);

struct CompInducedMap {
  InducedMap chain;
  std::vector<Matrix> on_hh, on_hc;  // on_hc empty outside characteristic 0
  HomologyReport hh, hh2, hc, hc2;
};
CompInducedMap induced_comp_map(const CompComoduleMeasuringData& cm, const Vec& y, int top, bool strict = true);

// C^n(U, Z) = Hom(U^{(x) n}, Z) for A = k; f at index j * dim Z + z for the tuple j of U^{(x) n}
OperadData build_yd_operad(const HopfAlgebroid& h, const YdAlgebra& z, int top);
// L (x) Z with (l (x) z) u = l u_+ (x) u_- z and l (x) z -> z(-1) l(-1) (x) l(0) (x) z(0)
SaydModule tensor_with_yd(const HopfAlgebroid& h, const SaydModule& l, const YdAlgebra& z);
// C_n(U, L (x) Z) = L (x) Z (x) U^{(x) n}; throws StabilityFailure
CompModuleData build_yd_comp_module(const HopfAlgebroid& h, const SaydModule& l, const YdAlgebra& z, int top);

struct YdInduced {
  Report preconditions;
  std::shared_ptr<const OperadData> O, O2;
  std::shared_ptr<const CompModuleData> L, L2;
  OperadMeasuringData operads;
  CompComoduleMeasuringData comp;
};
struct InputRejected : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
// Psi_n(x)(f) = psi(x) f; Omega_n(x) = hmorph (x) psi(x) (x) id with D = C; throws InputRejected
YdInduced induce_from_yd(const YdMeasuringData& ym, const SaydModule& l, const SaydModule& l2, const Matrix& hmorph,
                         int top);

}  // namespace hcyc
