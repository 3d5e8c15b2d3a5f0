#include "doctest.h"

#include "hcyc/cyclichom/homology.hpp"
#include "hcyc/cyclichom/shuffle.hpp"
#include "hcyc/measuring/examples.hpp"

using namespace hcyc;

namespace {

const FieldSpec Q = FieldSpec::rationals();

std::vector<int> dims_of(const HomologyReport& h) { return h.dims; }

// every (co)cyclic module the gallery offers, at the given truncation
std::vector<CyclicModuleData> gallery_modules(const FieldSpec& f, int top) {
  std::vector<CyclicModuleData> out;
  for (auto& ex : gallery::all(f)) {
    out.push_back(build_cocyclic_CU(*ex.h, top));
    out.push_back(build_cyclic_CU(*ex.h, top));
    for (auto& p : ex.coefficients) {
      out.push_back(build_cyclic_with_coeffs(*ex.h, p, top));
      out.push_back(build_cocyclic_with_coeffs(*ex.h, p, top));
    }
  }
  return out;
}

const gallery::Example& find(const std::vector<gallery::Example>& all, const std::string& key) {
  for (auto& ex : all)
    if (ex.key == key) return ex;
  throw std::out_of_range(key);
}

// Oracle for the point module: C_n = k, every face the identity, t = id. b_n = sum (-1)^i
// is 1 for even n >= 2 and 0 for odd n; on the lambda-quotient only even degrees survive.
std::vector<int> point_hh_oracle(int top) {
  std::vector<int> b(top + 1, 0);
  for (int n = 1; n <= top; ++n) b[n] = n % 2 == 0 ? 1 : 0;
  std::vector<int> out;
  for (int n = 0; n < top; ++n) out.push_back(1 - b[n] - b[n + 1]);
  return out;
}

std::vector<int> point_hc_oracle(int top) {
  std::vector<int> out;
  for (int n = 0; n < top; ++n) out.push_back(n % 2 == 0 ? 1 : 0);
  return out;
}

// HC through the (b, B) bicomplex: Tot_n = C_n + C_{n-2} + ...
std::vector<int> hc_from_bicomplex(const MixedComplexData& m) {
  auto offsets = [&](int n) {
    std::vector<int> off;
    int acc = 0;
    for (int j = n; j >= 0; j -= 2) off.push_back(acc), acc += m.dims[j];
    off.push_back(acc);
    return off;
  };
  auto diff = [&](int n) {
    auto src = offsets(n), dst = offsets(n - 1);
    Matrix d(m.field, dst.back(), src.back());
    for (int k = 0; n - 2 * k >= 0; ++k) {
      int j = n - 2 * k;
      if (j >= 1)
        for (int c = 0; c < m.dims[j]; ++c)
          for (auto& [i, v] : m.b[j].col(c)) d.set(dst[k] + i, src[k] + c, v);
      if (k >= 1)
        for (int c = 0; c < m.dims[j]; ++c)
          for (auto& [i, v] : m.B[j].col(c)) {
            Scalar old = d.at(dst[k - 1] + i, src[k] + c);
            d.set(dst[k - 1] + i, src[k] + c, old + v);
          }
    }
    return d;
  };
  std::vector<int> out;
  for (int n = 0; n < m.top; ++n) {
    int total = offsets(n).back();
    int r_out = n == 0 ? 0 : rank(diff(n));
    out.push_back(total - r_out - rank(diff(n + 1)));
  }
  return out;
}

}  // namespace

TEST_CASE("point module against the one-dimensional oracle") {
  for (Direction dir : {Direction::Cyclic, Direction::Cocyclic}) {
    CyclicModuleData m = point_module(Q, dir, 4);
    CHECK(check_cyclic_module(m).passed());
    CHECK(dims_of(hochschild_homology(m)) == point_hh_oracle(4));
    CHECK(dims_of(cyclic_homology_char0(m)) == point_hc_oracle(4));
    CHECK(point_hh_oracle(4) == std::vector<int>{1, 0, 0, 0});
    CHECK(point_hc_oracle(4) == std::vector<int>{1, 0, 1, 0});
  }
}

TEST_CASE("all gallery constructions satisfy the cyclic identities up to degree 4") {
  for (auto& m : gallery_modules(Q, 4)) {
    Report r = check_cyclic_module(m);
    INFO(r.summary());
    CHECK(r.passed());
  }
}

TEST_CASE("C2 values") {
  auto all = gallery::all(Q);
  const auto& c2 = *find(all, "group_algebra_c2").h;
  CyclicModuleData cu = build_cyclic_CU(c2, 2), co = build_cocyclic_CU(c2, 2);
  // t_1(g) = S(g) = g, tau_1(g) = g
  CHECK(cu.cyclic[1].col(1) == unit_vec(1));
  CHECK(co.cyclic[1].col(1) == unit_vec(1));
  SaydModule k_eps = gallery::counit_module(c2);
  CyclicModuleData cp = build_cyclic_with_coeffs(c2, k_eps, 2);
  CHECK(cp.cyclic[1].col(1) == unit_vec(1));
  HopfGaloisMaps xs = hopf_galois_chain_map(c2, nullptr, 2);
  CHECK(xs.xi[1] == Matrix::identity(Q, 2));
  // n = 0 cofaces with coefficients: delta_0(p) = 1 (x) p, delta_1(p) = p(-1) (x) p(0)
  CyclicModuleData cop = build_cocyclic_with_coeffs(c2, k_eps, 2);
  CHECK(cop.face[1][0].col(0) == unit_vec(0));
  CHECK(cop.face[1][1].col(0) == unit_vec(0));
}

TEST_CASE("unstable coefficients are rejected") {
  auto all = gallery::all(Q);
  const auto& c2 = *find(all, "group_algebra_c2").h;
  CHECK_THROWS_AS(build_cyclic_with_coeffs(c2, gallery::sign_unstable(c2), 2), StabilityFailure);
  CHECK_THROWS_AS(build_cocyclic_with_coeffs(c2, gallery::sign_unstable(c2), 2), StabilityFailure);
}

TEST_CASE("a single-entry mutation of a face is detected") {
  auto all = gallery::all(Q);
  CyclicModuleData m = build_cyclic_CU(*find(all, "pair_dual_numbers").h, 3);
  m.face[2][1].set(0, 0, m.face[2][1].at(0, 0) + 1);
  Report r = check_cyclic_module(m);
  CHECK_FALSE(r.passed());
  bool witnessed = false;
  for (auto& e : r.entries())
    if (!e.passed && !e.witness.empty()) witnessed = true;
  CHECK(witnessed);
}

TEST_CASE("operators do not depend on the chosen lifts") {
  for (auto& ex : gallery::all(Q)) {
    HopfAlgebroid h2 = ex.h->perturbed(7);
    CyclicModuleData a = build_cyclic_CU(*ex.h, 3), b = build_cyclic_CU(h2, 3);
    CyclicModuleData c = build_cocyclic_CU(*ex.h, 3), d = build_cocyclic_CU(h2, 3);
    for (int n = 0; n <= 3; ++n) {
      CHECK(a.cyclic[n] == b.cyclic[n]);
      CHECK(c.cyclic[n] == d.cyclic[n]);
      for (int i = 0; n > 0 && i <= n; ++i) {
        CHECK(a.face[n][i] == b.face[n][i]);
        CHECK(c.face[n][i] == d.face[n][i]);
      }
    }
  }
}

TEST_CASE("normalized and unnormalized Hochschild homology agree") {
  for (auto& m : gallery_modules(Q, 4)) {
    INFO(m.name);
    CHECK(hochschild_homology(m).dims == homology(normalized_complex(m), Theory::HH, m.name).dims);
  }
}

TEST_CASE("known Hochschild and cyclic homology") {
  auto all = gallery::all(Q);
  // HH_n(k[e]/e^2) = 2, 1, 1, ... and HC_n = 2, 0, 2, 0 in characteristic 0
  CyclicModuleData dual = build_cyclic_CU(*find(all, "pair_dual_numbers").h, 4);
  CHECK(hochschild_homology(dual).dims == std::vector<int>{2, 1, 1, 1});
  CHECK(cyclic_homology_char0(dual).dims == std::vector<int>{2, 0, 2, 0});
  // k x k is separable
  CyclicModuleData split = build_cyclic_CU(*find(all, "pair_split").h, 4);
  CHECK(hochschild_homology(split).dims == std::vector<int>{2, 0, 0, 0});
  CHECK(cyclic_homology_char0(split).dims == std::vector<int>{2, 0, 2, 0});
  // H_n(C3; F3) = F3 in every degree
  auto f3 = gallery::all(FieldSpec::prime(3));
  CyclicModuleData c3 = build_cyclic_CU(*find(f3, "group_algebra_c3").h, 4);
  CHECK(hochschild_homology(c3).dims == std::vector<int>{1, 1, 1, 1});
  CHECK_THROWS_AS(cyclic_homology_char0(c3), CharNotZero);
}

TEST_CASE("mixed complex and the (b, B) bicomplex") {
  for (auto& m : gallery_modules(Q, 4)) {
    if (m.direction != Direction::Cyclic) continue;
    INFO(m.name);
    MixedComplexData mx = mixed_complex(m);
    CHECK(check_mixed_complex(mx).passed());
    CHECK(hc_from_bicomplex(mx) == cyclic_homology_char0(m).dims);
  }
}

TEST_CASE("Hopf-Galois maps identify C_* with the cyclic dual of C^*") {
  for (auto& ex : gallery::all(Q)) {
    HopfGaloisMaps xs = hopf_galois_chain_map(*ex.h, nullptr, 4);
    for (int n = 0; n <= 3; ++n) CHECK(xs.xi[n] * xs.xi_inv[n] == Matrix::identity(Q, xs.xi[n].rows()));
    CyclicModuleData cyc = build_cyclic_CU(*ex.h, 4), dual = cyclic_dual(build_cocyclic_CU(*ex.h, 4));
    CHECK(check_cyclic_module(dual).passed());
    CHECK(certify_chain_map(cyc, dual, xs.xi, "xi").passed());
    CHECK(hochschild_homology(cyc).dims == hochschild_homology(dual).dims);
    for (auto& p : ex.coefficients) {
      HopfGaloisMaps xp = hopf_galois_chain_map(*ex.h, &p, 4);
      CyclicModuleData cp = reindexed(build_cyclic_with_coeffs(*ex.h, p, 4));
      CyclicModuleData dp = cyclic_dual(build_cocyclic_with_coeffs(*ex.h, p, 4));
      CHECK(certify_chain_map(cp, dp, xp.xi, "xi").passed());
      CHECK(hochschild_homology(cp).dims == hochschild_homology(dp).dims);
    }
  }
}

TEST_CASE("induced maps of the Euler measuring") {
  MeasuringData m = gallery::euler_pair(Q);
  const HopfAlgebroid& h = *m.src;
  for (int x = 0; x < 2; ++x) {
    CHECK(induced_map(m, unit_vec(x), build_cyclic_CU(h, 3), build_cyclic_CU(h, 3)).certificate.passed());
    CHECK(induced_map(m, unit_vec(x), build_cocyclic_CU(h, 3), build_cocyclic_CU(h, 3)).certificate.passed());
    CHECK(hopf_galois_square(m, unit_vec(x), 3).passed());
  }
  // degree 2 on lifts: D (x) 1 + 1 (x) D
  CyclicModuleData cu = build_cyclic_CU(h, 2);
  Matrix D = m.Psi[1], I = Matrix::identity(Q, h.d());
  Matrix expected = descend(kron(D, I) + kron(I, D), cu.spaces[2], cu.spaces[2]);
  CHECK(induced_map(m, unit_vec(1), cu, cu).maps[2] == expected);
  // the grouplike acts as the identity
  InducedMap g = induced_map(m, unit_vec(0), cu, cu);
  for (int n = 0; n <= 2; ++n) CHECK(g.maps[n] == Matrix::identity(Q, cu.dim(n)));
}

TEST_CASE("a broken measuring fails its chain-map certificate") {
  MeasuringData m = gallery::euler_pair_broken(Q);
  CyclicModuleData cu = build_cyclic_CU(*m.src, 3);
  InducedMap im = induced_map(m, unit_vec(1), cu, cu, false);
  CHECK_FALSE(im.certificate.passed());
  CHECK_THROWS_AS(induced_map(m, unit_vec(1), cu, cu), CertificateFailure);
}

TEST_CASE("SAYD comodule measurings induce morphisms") {
  for (auto cm : {gallery::c2_comodule(Q, 1), gallery::c2_comodule(Q, 0), gallery::euler_pair_comodule(Q),
                  gallery::identity_comodule(Q)}) {
    INFO(cm.name);
    REQUIRE(check_sayd_comodule_measuring(cm).passed());
    const HopfAlgebroid& h = *cm.base.src;
    const HopfAlgebroid& h2 = *cm.base.dst;
    for (int y = 0; y < cm.D.dim; ++y) {
      CHECK(induced_map(cm, unit_vec(y), build_cyclic_with_coeffs(h, cm.P, 3), build_cyclic_with_coeffs(h2, cm.P2, 3))
                .certificate.passed());
      CHECK(induced_map(cm, unit_vec(y), build_cocyclic_with_coeffs(h, cm.P, 3),
                        build_cocyclic_with_coeffs(h2, cm.P2, 3))
                .certificate.passed());
      CHECK(hopf_galois_square(cm, unit_vec(y), 3).passed());
    }
  }
}

TEST_CASE("Omega(x) = 0 induces the zero map") {
  ComoduleMeasuringData cm = gallery::c2_comodule(Q, 0);
  const HopfAlgebroid& h = *cm.base.src;
  InducedMap im = induced_map(cm, unit_vec(1), build_cyclic_with_coeffs(h, cm.P, 3), build_cyclic_with_coeffs(h, cm.P2, 3));
  for (auto& f : im.maps) CHECK(f.is_zero());
}

TEST_CASE("composition is functorial on homology") {
  MeasuringData m = gallery::euler_pair(Q);
  MeasuringData mm = compose_measurings(m, m);
  const HopfAlgebroid& h = *m.src;
  CyclicModuleData cu = build_cyclic_CU(h, 4);
  Complex c = hochschild_complex(cu);
  HomologyReport hh = hochschild_homology(cu);
  for (int x = 0; x < 2; ++x)
    for (int x2 = 0; x2 < 2; ++x2) {
      InducedMap a = induced_map(m, unit_vec(x), cu, cu), b = induced_map(m, unit_vec(x2), cu, cu);
      InducedMap ab = induced_map(mm, unit_vec(x * 2 + x2), cu, cu);
      for (int n = 0; n < 4; ++n) {
        Matrix composite = induced_on_homology(hh, c, hh, c, n, ab.maps[n]);
        Matrix product = induced_on_homology(hh, c, hh, c, n, b.maps[n]) * induced_on_homology(hh, c, hh, c, n, a.maps[n]);
        CHECK(composite == product);
      }
    }
}

TEST_CASE("shuffle products") {
  MeasuringData m = gallery::euler_pair(Q);
  const HopfAlgebroid& h = *m.src;
  REQUIRE(is_commutative(h));
  CyclicModuleData cu = build_cyclic_CU(h, 4);
  // sh_11(u (x) v) = u (x) v - v (x) u
  const QuotientPresentation& q1 = cu.spaces[1];
  const QuotientPresentation& q2 = cu.spaces[2];
  Matrix sh = shuffle_product(h, cu, 1, 1);
  int d = h.d();
  for (int u = 0; u < d; ++u)
    for (int v = 0; v < d; ++v) {
      Vec in = kron(q1.projection, q1.projection).apply(unit_vec(u * d + v));
      Vec free = vec_sub(unit_vec(u * d + v), unit_vec(v * d + u), Q);
      CHECK(sh.apply(in) == q2.projection.apply(free));
    }
  // sh_p0 with a = 1 is the identity
  for (int p = 1; p <= 3; ++p) {
    Matrix s = shuffle_product(h, cu, p, 0);
    Matrix with_one = kron(Matrix::identity(Q, cu.dim(p)), Matrix::from_columns(Q, h.a(), {h.A.unit}));
    CHECK(s * with_one == Matrix::identity(Q, cu.dim(p)));
  }
  CHECK(check_shuffle_chain_map(h, cu).passed());
  for (int x = 0; x < 2; ++x) {
    Report r = check_shuffle_measuring(m, unit_vec(x), 4);
    INFO(r.summary());
    CHECK(r.passed());
  }
  // upper triangular 2 x 2 matrices: e11, e12, e22
  AlgebraData tri = AlgebraData::from_table("T2", Q, 3, {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 2, 1, 1}, {2, 2, 2, 1}},
                                            Vec{{0, Scalar(1)}, {2, Scalar(1)}});
  HopfPtr ht = gallery::pair(tri);
  CHECK_FALSE(is_commutative(*ht));
  CHECK_THROWS_AS(shuffle_product(*ht, build_cyclic_CU(*ht, 2), 1, 1), NotCommutative);
}
