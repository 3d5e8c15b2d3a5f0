#include "hcyc/cyclichom/induced.hpp"

namespace hcyc {

namespace {

Matrix coalgebra_kron(const CoalgebraData& c, const Vec& x, int n, const std::vector<Matrix>& ms, int rows, int cols) {
  Matrix out(c.field, rows, cols);
  for (auto& [k, coef] : x) out = out + sweedler_kron(c, k, n, ms).scaled(coef);
  return out;
}

Scalar counit_at(const CoalgebraData& c, const Vec& x) {
  Scalar s = 0;
  for (auto& [k, coef] : x) s += coef * c.counit.at(0, k);
  return c.field.reduce(s);
}

std::string element_label(const std::string& name, const Vec& x) {
  std::string s = name + "[";
  bool first = true;
  for (auto& [k, c] : x) {
    if (!first) s += "+";
    first = false;
    s += c.get_str() + "*" + std::to_string(k);
  }
  return s + "]";
}

void finish(InducedMap& im, const CyclicModuleData& src, const CyclicModuleData& dst, bool strict) {
  im.certificate = certify_chain_map(src, dst, im.maps, im.label);
  if (strict && !im.certificate.passed()) {
    for (auto& e : im.certificate.entries())
      if (!e.passed) throw CertificateFailure(im.label + ": " + e.axiom);
  }
}

}  // namespace

InducedMap induced_map(const MeasuringData& m, const Vec& x, const CyclicModuleData& src, const CyclicModuleData& dst,
                       bool strict) {
  InducedMap im;
  im.label = element_label(m.name, x);
  int top = std::min(src.top, dst.top);
  int d = m.src->d(), d2 = m.dst->d();
  for (int n = 0; n <= top; ++n) {
    if (n == 0) {
      im.maps.push_back(m.psi_at(x));
      continue;
    }
    int rows = 1, cols = 1;
    for (int i = 0; i < n; ++i) rows *= d2, cols *= d;
    Matrix free = coalgebra_kron(m.C, x, n, m.Psi, rows, cols);
    im.maps.push_back(descend(free, src.spaces[n], dst.spaces[n]));
  }
  finish(im, src, dst, strict);
  return im;
}

InducedMap induced_map(const ComoduleMeasuringData& cm, const Vec& y, const CyclicModuleData& src,
                       const CyclicModuleData& dst, bool strict) {
  const MeasuringData& m = cm.base;
  const FieldSpec& f = m.C.field;
  InducedMap im;
  im.label = element_label(cm.name, y);
  int top = std::min(src.top, dst.top);
  int d = m.src->d(), d2 = m.dst->d();
  bool p_first = src.direction == Direction::Cyclic;
  for (int n = 0; n <= top; ++n) {
    int rows = cm.P2.dim, cols = cm.P.dim;
    for (int i = 0; i < n; ++i) rows *= d2, cols *= d;
    Matrix free(f, rows, cols);
    for (auto& [yk, yc] : y)
      for (const Term& t : coaction_terms(cm.D, yk, m.C.dim)) {
        const Matrix& om = cm.Omega[t.idx[0]];
        Vec c1 = unit_vec(t.idx[1]);
        Scalar coef = f.reduce(yc * t.c);
        Matrix part;
        if (n == 0) {
          part = om.scaled(counit_at(m.C, c1));
        } else {
          Matrix u = sweedler_kron(m.C, t.idx[1], n, m.Psi);
          part = p_first ? kron(om, u) : kron(u, om);
        }
        free = free + part.scaled(coef);
      }
    im.maps.push_back(n == 0 ? free : descend(free, src.spaces[n], dst.spaces[n]));
  }
  finish(im, src, dst, strict);
  return im;
}

namespace {

Report square_report(const std::string& label, const HopfGaloisMaps& xs, const HopfGaloisMaps& xs2,
                     const InducedMap& cyc, const InducedMap& cocyc, int top) {
  Report r("Hopf-Galois square " + label);
  for (int n = 0; n <= top; ++n)
    r.expect_equal("xi' f = g xi n=" + std::to_string(n), xs2.xi[n] * cyc.maps[n], cocyc.maps[n] * xs.xi[n],
                   TensorShape({cyc.maps[n].cols()}));
  return r;
}

}  // namespace

Report hopf_galois_square(const MeasuringData& m, const Vec& x, int top) {
  const HopfAlgebroid& h = *m.src;
  const HopfAlgebroid& h2 = *m.dst;
  InducedMap cyc = induced_map(m, x, build_cyclic_CU(h, top), build_cyclic_CU(h2, top));
  InducedMap cocyc = induced_map(m, x, build_cocyclic_CU(h, top), build_cocyclic_CU(h2, top));
  return square_report(cyc.label, hopf_galois_chain_map(h, nullptr, top), hopf_galois_chain_map(h2, nullptr, top), cyc,
                       cocyc, top);
}

Report hopf_galois_square(const ComoduleMeasuringData& cm, const Vec& y, int top) {
  const HopfAlgebroid& h = *cm.base.src;
  const HopfAlgebroid& h2 = *cm.base.dst;
  InducedMap cyc = induced_map(cm, y, build_cyclic_with_coeffs(h, cm.P, top), build_cyclic_with_coeffs(h2, cm.P2, top));
  InducedMap cocyc =
      induced_map(cm, y, build_cocyclic_with_coeffs(h, cm.P, top), build_cocyclic_with_coeffs(h2, cm.P2, top));
  return square_report(cyc.label, hopf_galois_chain_map(h, &cm.P, top), hopf_galois_chain_map(h2, &cm.P2, top), cyc,
                       cocyc, top);
}

}  // namespace hcyc
