#include "doctest.h"

#include "hcyc/cyclichom/constructions.hpp"
#include "hcyc/measuring/examples.hpp"
#include "hcyc/operadcyc/operad.hpp"

#include <gmpxx.h>

using namespace hcyc;

namespace {

const FieldSpec Q = FieldSpec::rationals();

// constant cyclic object k: all faces are the identity, so b on C_n is sum_{i<=n} (-1)^i: 1 for n even, 0 for n odd.
// Hochschild: H_0 = k, the rest vanish. Cyclic (Connes' double complex over Q): k in even degrees.
std::vector<int> point_hh(int n) {
  std::vector<int> b(n + 2, 0);  // rank of b : C_k -> C_{k-1}
  for (int k = 1; k <= n + 1; ++k) b[k] = (k % 2 == 0) ? 1 : 0;
  std::vector<int> out;
  for (int k = 0; k < n; ++k) out.push_back(1 - b[k] - b[k + 1]);
  return out;
}
std::vector<int> point_hc(int n) {
  std::vector<int> out;
  for (int k = 0; k < n; ++k) out.push_back(k % 2 == 0 ? 1 : 0);
  return out;
}

void require_pass(const Report& r) { CHECK_MESSAGE(r.passed(), r.summary()); }

bool failed_with_prefix(const Report& r, const std::string& prefix) {
  for (auto& e : r.entries())
    if (!e.passed && e.axiom.rfind(prefix, 0) == 0) return true;
  return false;
}

}  // namespace

TEST_CASE("one-dimensional operad and point module") {
  auto o = one_dimensional_operad(Q, 4);
  require_pass(check_operad(o));
  auto pt = point_comp_module(o, 4);
  require_pass(check_comp_module(o, pt));
  auto c = comp_cyclic_module(o, pt, 4);
  require_pass(check_cyclic_module(c));
  CHECK(homology(hochschild_complex(c), Theory::HH, "pt").dims == point_hh(4));
  CHECK(homology(connes_complex(c), Theory::HC, "pt").dims == point_hc(4));
  CHECK(point_hh(4) == std::vector<int>{1, 0, 0, 0});
}

TEST_CASE("YD operad over k[C2] with coefficients in k") {
  auto h = gallery::group_algebra(Q, 2);
  auto z = gallery::trivial_yd(*h);
  auto o = build_yd_operad(*h, z, 3);
  for (int n = 0; n <= 3; ++n) CHECK(o.dim(n) == (1 << n));
  Report r = check_operad(o);
  require_pass(r);
  CHECK(r.find("m o_1 m = m o_2 m")->passed);
  CHECK(r.find("associativity i<=j<q+i")->passed);
}

TEST_CASE("trivial algebroid gives the one-dimensional operad") {
  auto h = gallery::trivial(Q);
  auto o = build_yd_operad(*h, gallery::trivial_yd(*h), 3);
  auto one = one_dimensional_operad(Q, 3);
  CHECK(o.dims == one.dims);
  for (auto& [k, mtx] : one.comp) {
    REQUIRE(o.circ(k[0], k[1], k[2]));
    CHECK(*o.circ(k[0], k[1], k[2]) == mtx);
  }
}

TEST_CASE("group algebra as YD algebra over itself") {
  auto h = gallery::group_algebra(Q, 2);
  for (bool graded : {false, true}) {
    auto z = gallery::group_yd(*h, graded);
    auto o = build_yd_operad(*h, z, 3);
    require_pass(check_operad(o));
    auto L = build_yd_comp_module(*h, gallery::counit_module(*h), z, 3);
    require_pass(check_comp_module(o, L));
    require_pass(check_cyclic_module(comp_cyclic_module(o, L, 3)));
  }
}

TEST_CASE("perturbed compositions are caught") {
  auto h = gallery::group_algebra(Q, 2);
  auto z = gallery::trivial_yd(*h);
  auto o = build_yd_operad(*h, z, 3);
  o.comp[{2, 2, 1}].set(0, 0, Scalar(5));
  Report r = check_operad(o);
  CHECK_FALSE(r.passed());
  CHECK(failed_with_prefix(r, "associativity"));

  auto o2 = build_yd_operad(*h, z, 3);
  auto L = build_yd_comp_module(*h, gallery::counit_module(*h), z, 3);
  L.bullet[{1, 1, 1}].set(0, 0, Scalar(3));
  Report rl = check_comp_module(o2, L);
  CHECK_FALSE(rl.passed());
  CHECK(failed_with_prefix(rl, "comp"));
}

TEST_CASE("YD comp modules and their cyclic modules") {
  auto h = gallery::group_algebra(Q, 2);
  auto z = gallery::trivial_yd(*h);
  auto o = build_yd_operad(*h, z, 3);
  for (const SaydModule& l : {gallery::counit_module(*h), gallery::sign_module(*h)}) {
    auto L = build_yd_comp_module(*h, l, z, 3);
    Report r = check_comp_module(o, L);
    require_pass(r);
    CHECK(r.find("t^{n+1} = id")->passed);
    CHECK(L.t[1] * L.t[1] == Matrix::identity(Q, L.dim(1)));
    auto c = comp_cyclic_module(o, L, 3);
    require_pass(check_cyclic_module(c));
    // same cyclic module as C_*(U; L (x) Z)
    auto ref = build_cyclic_with_coeffs(*h, tensor_with_yd(*h, l, z), 3);
    for (int n = 1; n <= 3; ++n)
      for (int i = 0; i <= n; ++i) CHECK(ref.face[n][i] == c.face[n][i]);
    for (int n = 0; n < 3; ++n)
      for (int j = 0; j <= n; ++j) CHECK(ref.degen[n][j] == c.degen[n][j]);
    for (int n = 0; n <= 3; ++n) CHECK(ref.cyclic[n] == c.cyclic[n]);
  }
  CHECK_THROWS_AS(build_yd_comp_module(*h, gallery::sign_unstable(*h), z, 3), StabilityFailure);
}

TEST_CASE("only the base A = k is supported") {
  auto h = gallery::pair(gallery::dual_numbers(Q));
  CHECK_THROWS_AS(build_yd_operad(*h, gallery::base_yd(*h), 2), UnsupportedBase);
}

TEST_CASE("morphisms induced from a YD measuring") {
  auto ym = gallery::c2_trivial_yd(Q);
  auto l = gallery::counit_module(*ym.h);
  YdInduced y = induce_from_yd(ym, l, l, Matrix::identity(Q, 1), 3);
  require_pass(y.preconditions);
  require_pass(check_operad_measuring(y.operads));
  require_pass(check_comp_comodule_measuring(y.comp));
  // psi(c) = eps(c) id: g induces the identity, x the zero map
  CompInducedMap g = induced_comp_map(y.comp, unit_vec(0), 3);
  CHECK(g.chain.certificate.passed());
  for (int n = 0; n < int(g.on_hc.size()); ++n) CHECK(g.on_hc[n] == Matrix::identity(Q, g.hc.dims[n]));
  CompInducedMap x = induced_comp_map(y.comp, unit_vec(1), 3);
  for (auto& f : x.on_hc) CHECK(f.is_zero());
  for (auto& f : x.on_hh) CHECK(f.is_zero());
  CompInducedMap zero = induced_comp_map(y.comp, Vec{}, 3);
  for (auto& f : zero.chain.maps) CHECK(f.is_zero());

  CHECK_THROWS_AS(induce_from_yd(ym, l, gallery::sign_module(*ym.h), Matrix::identity(Q, 1), 3), InputRejected);

  YdInduced broken = induce_from_yd(ym, l, l, Matrix::identity(Q, 1), 3);
  broken.operads.Psi[2][0] = broken.operads.Psi[2][0].scaled(Scalar(2));
  CHECK_FALSE(check_operad_measuring(broken.operads).passed());
}
