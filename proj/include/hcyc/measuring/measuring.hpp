#pragma once

#include "hcyc/hopfalgebroid/sayd.hpp"

namespace hcyc {

struct NotCocommutative : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

bool is_cocommutative(const CoalgebraData& c);

// C-measuring (Psi, psi) from src to dst; Psi[x] : U -> U', psi[x] : A -> A' per basis x of C.
struct MeasuringData {
  std::string name;
  CoalgebraData C;
  HopfPtr src, dst;
  std::vector<Matrix> Psi, psi;

  Matrix Psi_at(const Vec& x) const;
  Matrix psi_at(const Vec& x) const;
};

// Omega[y] : P -> P' per basis y of the right C-comodule D.
struct ComoduleMeasuringData {
  std::string name;
  MeasuringData base;
  ComoduleData D;
  SaydModule P, P2;
  std::vector<Matrix> Omega;

  Matrix Omega_at(const Vec& y) const;
};

struct YdMeasuringData {
  std::string name;
  CoalgebraData C;
  HopfPtr h;
  YdAlgebra Z, Z2;
  std::vector<Matrix> psi;
};

Report check_hopf_algebroid_measuring(const MeasuringData& m);
// x(1) (x) x(2) on U (x)_A U -> U' (x)_A' U'; throws DescentFailure
Matrix descended_pair(const MeasuringData& m, int x);

MeasuringData compose_measurings(const MeasuringData& m, const MeasuringData& m2);

struct EnvelopingMeasuring {
  AlgebraData Ae, Ae2;
  std::vector<Matrix> psi;
};
EnvelopingMeasuring enveloping_measuring(const CoalgebraData& c, const AlgebraData& a, const AlgebraData& a2,
                                         const std::vector<Matrix>& psi);

// y (x) c terms of the coaction of basis element y
std::vector<Term> coaction_terms(const ComoduleData& d, int y, int cdim);

Report check_sayd_comodule_measuring(const ComoduleMeasuringData& cm);
// y(1)(u) (x) y(0)(p) on U_< (x)_A P -> U'_< (x)_A' P'; throws DescentFailure
Matrix descended_mixed(const ComoduleMeasuringData& cm, int y);

ComoduleMeasuringData compose_comodule_measurings(const ComoduleMeasuringData& cm, const ComoduleMeasuringData& cm2);

Report check_yd_measuring(const YdMeasuringData& ym);

}  // namespace hcyc
