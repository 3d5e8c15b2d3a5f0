#include "hcyc/hopfalgebroid/gallery.hpp"

namespace hcyc::gallery {

AlgebraData dual_numbers(FieldSpec f) {
  return AlgebraData::from_table("k[e]", f, 2, {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 1}}, unit_vec(0));
}

AlgebraData split_pair(FieldSpec f) {
  return AlgebraData::from_table("kxk", f, 2, {{0, 0, 0, 1}, {1, 1, 1, 1}}, Vec{{0, Scalar(1)}, {1, Scalar(1)}});
}

AlgebraData group_ring(FieldSpec f, int n) {
  std::vector<std::tuple<int, int, int, Scalar>> tab;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) tab.emplace_back(i, j, (i + j) % n, Scalar(1));
  return AlgebraData::from_table("k[C" + std::to_string(n) + "]", f, n, tab, unit_vec(0));
}

namespace {

HopfPtr hopf_algebra(std::string name, AlgebraData U, Matrix delta, Matrix eps, Matrix S) {
  auto h = std::make_shared<HopfAlgebroid>();
  FieldSpec f = U.field;
  h->name = std::move(name);
  h->field = f;
  h->A = AlgebraData::ground(f);
  h->s = U.unit_map();
  h->t = U.unit_map();
  h->U = std::move(U);
  h->delta_lift = std::move(delta);
  h->eps = std::move(eps);
  h->S = std::move(S);
  return h;
}

}  // namespace

HopfPtr trivial(FieldSpec f) {
  return hopf_algebra("k", AlgebraData::ground(f), Matrix::identity(f, 1), Matrix::identity(f, 1),
                      Matrix::identity(f, 1));
}

HopfPtr group_algebra(FieldSpec f, int n) {
  AlgebraData U = group_ring(f, n);
  Matrix delta(f, n * n, n), eps(f, 1, n), S(f, n, n);
  for (int i = 0; i < n; ++i) {
    delta.set_col(i, unit_vec(i * n + i));
    eps.set(0, i, 1);
    S.set_col(i, unit_vec((n - i) % n));
  }
  return hopf_algebra("k[C" + std::to_string(n) + "]", std::move(U), delta, eps, S);
}

HopfPtr pair(const AlgebraData& A) {
  auto h = std::make_shared<HopfAlgebroid>();
  FieldSpec f = A.field;
  int a = A.dim, d = a * a;
  h->name = "pair(" + A.name + ")";
  h->field = f;
  h->A = A;
  h->U = tensor_algebra(A, A.opposite());
  h->U.name = A.name + "^e";
  TensorShape sh({a, a});
  h->s = Matrix(f, d, a);
  h->t = Matrix(f, d, a);
  for (int k = 0; k < a; ++k) {
    h->s.set_col(k, outer(std::vector<Vec>{unit_vec(k), A.unit}, sh, f));
    h->t.set_col(k, outer(std::vector<Vec>{A.unit, unit_vec(k)}, sh, f));
  }
  h->delta_lift = Matrix(f, d * d, d);
  h->eps = Matrix(f, a, d);
  h->S = Matrix(f, d, d);
  TensorShape s2({d, d});
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < a; ++j) {
      int u = i * a + j;
      Vec left = h->s.col(i), right = h->t.col(j);
      h->delta_lift.set_col(u, outer(std::vector<Vec>{left, right}, s2, f));
      h->eps.set_col(u, A.basis_product(i, j));
      h->S.set_col(u, unit_vec(j * a + i));
    }
  return h;
}

SaydModule counit_module(const HopfAlgebroid& h) {
  SaydModule p;
  p.name = "k_eps";
  p.dim = 1;
  p.action = h.eps;
  p.coaction_lift = h.U.unit_map();
  return p;
}

SaydModule sign_module(const HopfAlgebroid& c2) {
  SaydModule p = counit_module(c2);
  p.name = "k_sign";
  p.action.set(0, 1, -1);
  return p;
}

SaydModule sign_unstable(const HopfAlgebroid& c2) {
  SaydModule p = sign_module(c2);
  p.name = "k_sign_g";
  p.coaction_lift = Matrix::from_columns(c2.field, 2, {unit_vec(1)});
  return p;
}

SaydModule swap_module(const HopfAlgebroid& c2) {
  FieldSpec f = c2.field;
  SaydModule p;
  p.name = "k^2_swap";
  p.dim = 2;
  p.action = Matrix(f, 2, 4);
  p.action.set_col(0 * 2 + 0, unit_vec(0));
  p.action.set_col(0 * 2 + 1, unit_vec(1));
  p.action.set_col(1 * 2 + 0, unit_vec(1));
  p.action.set_col(1 * 2 + 1, unit_vec(0));
  p.coaction_lift = Matrix(f, 4, 2);
  p.coaction_lift.set_col(0, unit_vec(0 * 2 + 0));
  p.coaction_lift.set_col(1, unit_vec(1 * 2 + 1));
  return p;
}

SaydModule base_module(const HopfAlgebroid& pr) {
  FieldSpec f = pr.field;
  int a = pr.a(), d = pr.d();
  SaydModule p;
  p.name = pr.A.name;
  p.dim = a;
  p.action = Matrix(f, a, a * d);
  for (int i = 0; i < a; ++i)
    for (int u = 0; u < d; ++u) p.action.set_col(i * d + u, pr.A.product(unit_vec(i), pr.eps.col(u)));
  p.coaction_lift = Matrix(f, d * a, a);
  TensorShape sh({d, a});
  for (int i = 0; i < a; ++i) p.coaction_lift.set_col(i, outer(std::vector<Vec>{pr.s.col(i), pr.A.unit}, sh, f));
  return p;
}

YdAlgebra trivial_yd(const HopfAlgebroid& h) {
  FieldSpec f = h.field;
  YdAlgebra z;
  z.name = "k";
  z.Z = AlgebraData::ground(f);
  z.action = h.eps;
  z.coaction_lift = h.U.unit_map();
  return z;
}

YdAlgebra group_yd(const HopfAlgebroid& h, bool graded) {
  FieldSpec f = h.field;
  int n = h.d();
  YdAlgebra z;
  z.name = graded ? "k[C" + std::to_string(n) + "]gr" : "k[C" + std::to_string(n) + "]";
  z.Z = group_ring(f, n);
  z.action = Matrix(f, n, n * n);
  for (int u = 0; u < n; ++u)
    for (int k = 0; k < n; ++k) z.action.set_col(u * n + k, unit_vec(k));
  z.coaction_lift = Matrix(f, n * n, n);
  for (int k = 0; k < n; ++k) z.coaction_lift.set_col(k, unit_vec((graded ? k : 0) * n + k));
  return z;
}

YdAlgebra base_yd(const HopfAlgebroid& pr) {
  FieldSpec f = pr.field;
  int a = pr.a(), d = pr.d();
  YdAlgebra z;
  z.name = pr.A.name;
  z.Z = pr.A;
  z.action = Matrix(f, a, d * a);
  TensorShape sh({a, a});
  for (int u = 0; u < d; ++u) {
    auto ij = sh.decode(u);
    for (int k = 0; k < a; ++k)
      z.action.set_col(u * a + k, pr.A.product(pr.A.basis_product(ij[0], k), unit_vec(ij[1])));
  }
  z.coaction_lift = Matrix(f, d * a, a);
  TensorShape sz({d, a});
  for (int k = 0; k < a; ++k) z.coaction_lift.set_col(k, outer(std::vector<Vec>{pr.s.col(k), pr.A.unit}, sz, f));
  return z;
}

std::vector<Example> all(FieldSpec f) {
  std::vector<Example> out;
  auto t = trivial(f);
  out.push_back({"trivial", t, {counit_module(*t)}});
  auto c2 = group_algebra(f, 2);
  out.push_back({"group_algebra_c2", c2, {counit_module(*c2), sign_module(*c2)}});
  auto c3 = group_algebra(f, 3);
  out.push_back({"group_algebra_c3", c3, {counit_module(*c3)}});
  auto pd = pair(dual_numbers(f));
  out.push_back({"pair_dual_numbers", pd, {base_module(*pd)}});
  auto ps = pair(split_pair(f));
  out.push_back({"pair_split", ps, {base_module(*ps)}});
  return out;
}

}  // namespace hcyc::gallery
