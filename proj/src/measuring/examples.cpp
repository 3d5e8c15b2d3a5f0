#include "hcyc/measuring/examples.hpp"

namespace hcyc::gallery {

Matrix euler_derivation(FieldSpec f) {
  Matrix m(f, 2, 2);
  m.set(1, 1, 1);
  return m;
}

MeasuringData identity_measuring(HopfPtr h) {
  return MeasuringData{"id", CoalgebraData::grouplike(h->field), h, h,
                       {Matrix::identity(h->field, h->d())}, {Matrix::identity(h->field, h->a())}};
}

namespace {

MeasuringData euler(FieldSpec f, bool broken) {
  HopfPtr h = pair(dual_numbers(f));
  Matrix dl = euler_derivation(f), id = Matrix::identity(f, 2);
  Matrix dU = kron(dl, id);
  if (!broken) dU = dU + kron(id, dl);
  return MeasuringData{broken ? "euler-broken" : "euler", CoalgebraData::grouplike_primitive(f), h, h,
                       {Matrix::identity(f, 4), dU}, {id, dl}};
}

}  // namespace

MeasuringData euler_pair(FieldSpec f) { return euler(f, false); }
MeasuringData euler_pair_broken(FieldSpec f) { return euler(f, true); }

MeasuringData swap_split(FieldSpec f) {
  HopfPtr h = pair(split_pair(f));
  Matrix sw(f, 2, 2);
  sw.set(0, 1, 1);
  sw.set(1, 0, 1);
  return MeasuringData{"swap", CoalgebraData::grouplike(f), h, h, {kron(sw, sw)}, {sw}};
}

namespace {

ComoduleData self_comodule(const CoalgebraData& c) { return ComoduleData{c.name, Side::Right, c.dim, c.comul}; }

}  // namespace

ComoduleMeasuringData identity_comodule(FieldSpec f) {
  HopfPtr h = trivial(f);
  MeasuringData m = identity_measuring(h);
  SaydModule p = counit_module(*h);
  return ComoduleMeasuringData{"id", m, self_comodule(m.C), p, p, {Matrix::identity(f, 1)}};
}

namespace {

MeasuringData c2_base(FieldSpec f) {
  HopfPtr h = group_algebra(f, 2);
  return MeasuringData{"c2-grouplike", CoalgebraData::grouplike_primitive(f), h, h,
                       {Matrix::identity(f, 2), Matrix(f, 2, 2)}, {Matrix::identity(f, 1), Matrix(f, 1, 1)}};
}

}  // namespace

ComoduleMeasuringData c2_comodule(FieldSpec f, const Scalar& omega_x) {
  MeasuringData m = c2_base(f);
  SaydModule p = counit_module(*m.src);
  Matrix ox(f, 1, 1);
  ox.set(0, 0, omega_x);
  return ComoduleMeasuringData{"c2", m, self_comodule(m.C), p, p, {Matrix::identity(f, 1), ox}};
}

ComoduleMeasuringData c2_counit_to_sign(FieldSpec f) {
  MeasuringData m = c2_base(f);
  return ComoduleMeasuringData{"c2-counit-to-sign", m, self_comodule(m.C), counit_module(*m.src),
                               sign_module(*m.src), {Matrix::identity(f, 1), Matrix(f, 1, 1)}};
}

ComoduleMeasuringData euler_pair_comodule(FieldSpec f) {
  MeasuringData m = euler_pair(f);
  SaydModule p = base_module(*m.src);
  return ComoduleMeasuringData{"euler", m, self_comodule(m.C), p, p, {Matrix::identity(f, 2), euler_derivation(f)}};
}

YdMeasuringData c2_trivial_yd(FieldSpec f) {
  HopfPtr h = group_algebra(f, 2);
  YdAlgebra z = trivial_yd(*h);
  Matrix zero(f, 1, 1);
  return YdMeasuringData{"counit", CoalgebraData::grouplike_primitive(f), h, z, z, {Matrix::identity(f, 1), zero}};
}

YdMeasuringData euler_base_yd(FieldSpec f) {
  MeasuringData m = euler_pair(f);
  YdAlgebra z = base_yd(*m.src);
  return YdMeasuringData{"euler", m.C, m.src, z, z, m.psi};
}

YdMeasuringData c2_regraded_yd(FieldSpec f) {
  HopfPtr h = group_algebra(f, 2);
  return YdMeasuringData{"regrade", CoalgebraData::grouplike(f), h, group_yd(*h, true), group_yd(*h, false),
                         {Matrix::identity(f, 2)}};
}

}  // namespace hcyc::gallery
