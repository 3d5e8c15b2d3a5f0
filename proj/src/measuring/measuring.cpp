#include "hcyc/measuring/measuring.hpp"

namespace hcyc {

bool is_cocommutative(const CoalgebraData& c) {
  Matrix flip = permute_factors(TensorShape({c.dim, c.dim}), {1, 0}, c.field);
  return flip * c.comul == c.comul;
}

Matrix MeasuringData::Psi_at(const Vec& x) const { return combine(Psi, x, dst->d(), src->d(), C.field); }
Matrix MeasuringData::psi_at(const Vec& x) const { return combine(psi, x, dst->a(), src->a(), C.field); }
Matrix ComoduleMeasuringData::Omega_at(const Vec& y) const { return combine(Omega, y, P2.dim, P.dim, D.coaction.field()); }

namespace {

bool try_descend(Report& r, const std::string& axiom, const Matrix& free, const QuotientPresentation& src,
                 const QuotientPresentation& dst, Matrix& out) {
  try {
    out = descend(free, src, dst);
    return true;
  } catch (const DescentFailure& e) {
    r.fail(axiom, {e.relation, e.coordinate}, e.what());
    return false;
  }
}

std::string at(const std::string& s, int x) { return s + "[" + std::to_string(x) + "]"; }

}  // namespace

Matrix descended_pair(const MeasuringData& m, int x) {
  return descend(sweedler_pair(m.C, x, m.Psi, m.Psi), m.src->tower(Convention::Left, 2),
                 m.dst->tower(Convention::Left, 2));
}

Report check_hopf_algebroid_measuring(const MeasuringData& m) {
  const HopfAlgebroid &h = *m.src, &h2 = *m.dst;
  Report r("measuring " + m.name + ": " + h.name + " -> " + h2.name);
  r.record("C cocommutative", is_cocommutative(m.C));
  r.merge(check_sweedler_measuring(m.C, h.U, h2.U, m.Psi), "Psi ");
  r.merge(check_sweedler_measuring(m.C, h.A, h2.A, m.psi), "psi ");
  TensorShape su({h.d()}), sa({h.a()});
  for (int x = 0; x < m.C.dim; ++x) {
    const Matrix &F = m.Psi[x], &g = m.psi[x];
    r.expect_equal(at("x s = s' x", x), F * h.s, h2.s * g, sa);
    r.expect_equal(at("x t = t' x", x), F * h.t, h2.t * g, sa);
    r.expect_equal(at("x S = S' x", x), F * h.S, h2.S * F, su);
    r.expect_equal(at("x eps = eps' x", x), g * h.eps, h2.eps * F, su);
    Matrix xx;
    if (try_descend(r, at("x(1) (x) x(2) well defined on U (x)_A U", x), sweedler_pair(m.C, x, m.Psi, m.Psi),
                    h.tower(Convention::Left, 2), h2.tower(Convention::Left, 2), xx))
      r.expect_equal(at("Delta' x = (x(1) (x) x(2)) Delta", x), h2.delta() * F, xx * h.delta(), su);
    // right structure: s_R = t_L, t_R = S t_L, eps_R = eps_L S
    r.expect_equal(at("x s_R = s_R' x", x), F * h.t, h2.t * g, sa);
    r.expect_equal(at("x t_R = t_R' x", x), F * h.S * h.t, h2.S * h2.t * g, sa);
    r.expect_equal(at("x eps_R = eps_R' x", x), g * h.eps_R(), h2.eps_R() * F, su);
  }
  return r;
}

MeasuringData compose_measurings(const MeasuringData& m, const MeasuringData& m2) {
  if (m.dst != m2.src && !(m.dst->U.mul == m2.src->U.mul && m.dst->delta_lift == m2.src->delta_lift))
    throw std::invalid_argument("compose_measurings: middle algebroids differ");
  MeasuringData out;
  out.name = m2.name + " o " + m.name;
  out.C = tensor_coalgebra(m.C, m2.C);
  out.src = m.src;
  out.dst = m2.dst;
  for (int x = 0; x < m.C.dim; ++x)
    for (int y = 0; y < m2.C.dim; ++y) {
      out.Psi.push_back(m2.Psi[y] * m.Psi[x]);
      out.psi.push_back(m2.psi[y] * m.psi[x]);
    }
  return out;
}

EnvelopingMeasuring enveloping_measuring(const CoalgebraData& c, const AlgebraData& a, const AlgebraData& a2,
                                         const std::vector<Matrix>& psi) {
  if (!is_cocommutative(c)) throw NotCocommutative("enveloping_measuring: " + c.name + " is not cocommutative");
  EnvelopingMeasuring e{tensor_algebra(a, a.opposite()), tensor_algebra(a2, a2.opposite()), {}};
  for (int x = 0; x < c.dim; ++x) e.psi.push_back(sweedler_pair(c, x, psi, psi));
  return e;
}

std::vector<Term> coaction_terms(const ComoduleData& d, int y, int cdim) {
  return terms(d.coaction.col(y), TensorShape({d.dim, cdim}));
}

Matrix descended_mixed(const ComoduleMeasuringData& cm, int y) {
  const MeasuringData& m = cm.base;
  const FieldSpec& f = m.C.field;
  Matrix free(f, m.dst->d() * cm.P2.dim, m.src->d() * cm.P.dim);
  for (auto& [c, yc] : coaction_terms(cm.D, y, m.C.dim))
    free = free + kron(m.Psi[yc[1]], cm.Omega[yc[0]]).scaled(c);
  return descend(free, cm.P.coaction_tower(*m.src), cm.P2.coaction_tower(*m.dst));
}

Report check_sayd_comodule_measuring(const ComoduleMeasuringData& cm) {
  const MeasuringData& m = cm.base;
  const HopfAlgebroid &h = *m.src, &h2 = *m.dst;
  const FieldSpec& f = m.C.field;
  Report r("comodule measuring " + cm.name + ": " + cm.P.name + " -> " + cm.P2.name);
  r.merge(check_comodule(m.C, cm.D));
  r.merge(check_hopf_algebroid_measuring(m), "(1) ");
  int n = cm.P.dim, a = h.a();
  TensorShape spu({n, h.d()}), sp({n}), spaa({n, a, a});

  // right A^e-actions p (a (x) b) = p s(a) t(b)
  auto ae_action = [&](const SaydModule& p, const HopfAlgebroid& hh) {
    Matrix act(f, p.dim, p.dim * hh.a() * hh.a());
    for (int i = 0; i < p.dim; ++i)
      for (int x = 0; x < hh.a(); ++x)
        for (int z = 0; z < hh.a(); ++z)
          act.set_col((i * hh.a() + x) * hh.a() + z,
                      p.act(unit_vec(i), hh.mul(hh.s_of(x), hh.t_of(z)), hh));
    return act;
  };
  Matrix ae = ae_action(cm.P, h), ae2 = ae_action(cm.P2, h2);
  EnvelopingMeasuring env = enveloping_measuring(m.C, h.A, h2.A, m.psi);
  Matrix coact = cm.P.coaction_tower(h).projection * cm.P.coaction_lift;
  Matrix coact2 = cm.P2.coaction_tower(h2).projection * cm.P2.coaction_lift;

  for (int y = 0; y < cm.D.dim; ++y) {
    auto co = coaction_terms(cm.D, y, m.C.dim);
    Matrix rhs(f, cm.P2.dim * h2.d(), n * h.d());
    Matrix rhs_e(f, cm.P2.dim * h2.a() * h2.a(), n * a * a);
    for (auto& [c, yc] : co) {
      rhs = rhs + kron(cm.Omega[yc[0]], m.Psi[yc[1]]).scaled(c);
      rhs_e = rhs_e + kron(cm.Omega[yc[0]], env.psi[yc[1]]).scaled(c);
    }
    r.expect_equal(at("(2) Omega(y)(pu) = Omega(y0)(p) Psi(y1)(u)", y), cm.Omega[y] * cm.P.action,
                   cm.P2.action * rhs, spu);
    r.expect_equal(at("(a) Omega(y)(p(a (x) b)) = Omega(y0)(p) psi^e(y1)(a (x) b)", y), cm.Omega[y] * ae,
                   ae2 * rhs_e, spaa);
    Matrix mixed;
    if (try_descend(r, at("(b) mixed map well defined", y), [&] {
          Matrix free(f, h2.d() * cm.P2.dim, h.d() * n);
          for (auto& [c, yc] : co) free = free + kron(m.Psi[yc[1]], cm.Omega[yc[0]]).scaled(c);
          return free;
        }(), cm.P.coaction_tower(h), cm.P2.coaction_tower(h2), mixed))
      r.expect_equal(at("(3) Delta_P' Omega(y) = y Delta_P", y), coact2 * cm.Omega[y], mixed * coact, sp);
  }
  return r;
}

ComoduleMeasuringData compose_comodule_measurings(const ComoduleMeasuringData& cm,
                                                  const ComoduleMeasuringData& cm2) {
  if (!(cm.P2.action == cm2.P.action && cm.P2.coaction_lift == cm2.P.coaction_lift))
    throw std::invalid_argument("compose_comodule_measurings: middle modules differ");
  ComoduleMeasuringData out;
  out.name = cm2.name + " o " + cm.name;
  out.base = compose_measurings(cm.base, cm2.base);
  out.P = cm.P;
  out.P2 = cm2.P2;
  const FieldSpec& f = out.base.C.field;
  int c1 = cm.base.C.dim, c2 = cm2.base.C.dim, d1 = cm.D.dim, d2 = cm2.D.dim;
  out.D = ComoduleData{cm.D.name + "(x)" + cm2.D.name, Side::Right, d1 * d2, Matrix(f, d1 * d2 * c1 * c2, d1 * d2)};
  TensorShape sh({d1, d2, c1, c2});
  for (int y = 0; y < d1; ++y)
    for (int z = 0; z < d2; ++z) {
      Accumulator acc(sh.size());
      for (auto& [a, yc] : coaction_terms(cm.D, y, c1))
        for (auto& [b, zc] : coaction_terms(cm2.D, z, c2)) {
          int idx[4] = {yc[0], zc[0], yc[1], zc[1]};
          acc.add(sh.encode(idx), a * b, f);
        }
      out.D.coaction.set_col(y * d2 + z, acc.take());
      out.Omega.push_back(cm2.Omega[z] * cm.Omega[y]);
    }
  return out;
}

Report check_yd_measuring(const YdMeasuringData& ym) {
  const HopfAlgebroid& h = *ym.h;
  const FieldSpec& f = h.field;
  Report r("YD measuring " + ym.name + ": " + ym.Z.name + " -> " + ym.Z2.name);
  r.record("C cocommutative", is_cocommutative(ym.C));
  r.merge(check_sweedler_measuring(ym.C, ym.Z.Z, ym.Z2.Z, ym.psi));
  int n = ym.Z.dim();
  Matrix idu = Matrix::identity(f, h.d());
  QuotientPresentation q = ym.Z.coaction_tower(h), q2 = ym.Z2.coaction_tower(h);
  Matrix coact = q.projection * ym.Z.coaction_lift, coact2 = q2.projection * ym.Z2.coaction_lift;
  for (int x = 0; x < ym.C.dim; ++x) {
    r.expect_equal(at("x(uz) = u x(z)", x), ym.psi[x] * ym.Z.action, ym.Z2.action * kron(idu, ym.psi[x]),
                   TensorShape({h.d(), n}));
    Matrix idx;
    if (try_descend(r, at("id (x) x well defined on U (x)_A Z", x), kron(idu, ym.psi[x]), q, q2, idx))
      r.expect_equal(at("x(z)(-1) (x) x(z)(0) = z(-1) (x) x(z(0))", x), coact2 * ym.psi[x], idx * coact,
                     TensorShape({n}));
  }
  return r;
}

}  // namespace hcyc
