#include "doctest.h"

#include "hcyc/hopfalgebroid/gallery.hpp"

#include <iostream>

using namespace hcyc;

TEST_CASE("gallery structures validate") {
  for (auto& ex : gallery::all(FieldSpec::rationals())) {
    Report r = check_hopf_algebroid(*ex.h);
    INFO(r.summary());
    CHECK(r.passed());
    for (auto& p : ex.coefficients) {
      Report rp = check_sayd(p, *ex.h);
      INFO(rp.summary());
      CHECK(rp.passed());
    }
  }
}

TEST_CASE("balanced tensor dimensions") {
  FieldSpec q = FieldSpec::rationals();
  auto pd = gallery::pair(gallery::dual_numbers(q));
  CHECK(pd->tower(Convention::Left, 2).dim() == 8);
  CHECK(pd->tower(Convention::Opposite, 2).dim() == 8);
  CHECK(pd->tower(Convention::Left, 3).dim() == 16);
  auto ps = gallery::pair(gallery::split_pair(q));
  CHECK(ps->tower(Convention::Left, 2).dim() == 8);
}

TEST_CASE("SAYD negative controls") {
  FieldSpec q = FieldSpec::rationals();
  auto c2 = gallery::group_algebra(q, 2);
  Report sw = check_sayd(gallery::swap_module(*c2), *c2);
  REQUIRE(sw.find("anti-Yetter-Drinfeld"));
  CHECK_FALSE(sw.find("anti-Yetter-Drinfeld")->passed);
  Report un = check_sayd(gallery::sign_unstable(*c2), *c2);
  CHECK(un.find("anti-Yetter-Drinfeld")->passed);
  CHECK_FALSE(un.find("stability")->passed);
}

TEST_CASE("broken antipode is detected") {
  auto c3 = gallery::group_algebra(FieldSpec::rationals(), 3);
  HopfAlgebroid h = *c3;
  h.S = Matrix::identity(h.field, 3);
  CHECK_FALSE(check_hopf_algebroid(h).passed());
}

TEST_CASE("YD algebras") {
  FieldSpec q = FieldSpec::rationals();
  auto c2 = gallery::group_algebra(q, 2);
  YdAlgebra z = gallery::trivial_yd(*c2);
  Report r = check_yd_algebra(z, *c2);
  INFO(r.summary());
  CHECK(r.passed());
  CHECK(z.braided_commutative);
  auto pd = gallery::pair(gallery::dual_numbers(q));
  YdAlgebra za = gallery::base_yd(*pd);
  Report ra = check_yd_algebra(za, *pd);
  INFO(ra.summary());
  CHECK(ra.passed());
}
