#include "hcyc/operadcyc/operad.hpp"

#include "hcyc/measuring/measuring.hpp"

#include <functional>

namespace hcyc {

namespace {

// every choice of one entry from each vector, with the product of coefficients
void for_each_combo(const std::vector<const Vec*>& vs, const std::function<void(const std::vector<int>&, const Scalar&)>& fn) {
  std::vector<int> idx(vs.size());
  std::function<void(size_t, const Scalar&)> rec = [&](size_t k, const Scalar& c) {
    if (k == vs.size()) return fn(idx, c);
    for (auto& [i, v] : *vs[k]) {
      idx[k] = i;
      rec(k + 1, c * v);
    }
  };
  rec(0, Scalar(1));
}

// f in Hom(U^{(x) n}, Z) by tuple
struct Cochain {
  std::map<int, Vec> at;
  Cochain(const Vec& f, int dz) {
    for (auto& [k, c] : f) at[k / dz].emplace_back(k % dz, c);
  }
  const Vec* eval(int tuple) const {
    auto it = at.find(tuple);
    return it == at.end() ? nullptr : &it->second;
  }
};

struct Ctx {
  const HopfAlgebroid& h;
  const YdAlgebra& z;
  FieldSpec f;
  int d, dz;
  Matrix trans;

  Ctx(const HopfAlgebroid& h_, const YdAlgebra& z_) : h(h_), z(z_), f(h_.field), d(h_.d()), dz(z_.dim()) {
    if (h.a() != 1) throw UnsupportedBase("YD operad over " + h.name + ": only A = k is supported");
    trans = h.translation_lift();
  }
  Vec prod(const std::vector<int>& us) const {
    Vec r = h.one();
    for (int u : us) r = h.U.product(r, unit_vec(u));
    return r;
  }
  int encode(const std::vector<int>& t) const {
    int k = 0;
    for (int u : t) k = k * d + u;
    return k;
  }
  std::vector<int> decode(int k, int n) const {
    std::vector<int> t(n);
    for (int i = n - 1; i >= 0; --i) t[i] = k % d, k /= d;
    return t;
  }
  const Vec& delta(int u) const { return h.delta_lift.col(u); }
  // f(args) with args basis elements except one general slot
  Vec eval_with(const Cochain& fc, std::vector<int> args, int slot, const Vec& general) const {
    Accumulator acc(dz);
    for (auto& [u, c] : general) {
      args[slot] = u;
      if (const Vec* v = fc.eval(encode(args))) acc.add_vec(*v, c, f);
    }
    return acc.take();
  }
};

// (f o_i g)(u^1 ... u^{p+q-1})
Vec compose(const Ctx& cx, const Vec& fv, int p, const Vec& gv, int q, int i) {
  Cochain fc(fv, cx.dz), gc(gv, cx.dz);
  int P = p + q - 1, a = p - i;
  int tuples = 1;
  for (int k = 0; k < P; ++k) tuples *= cx.d;
  Accumulator acc(tuples * cx.dz);
  for (int T = 0; T < tuples; ++T) {
    std::vector<int> u = cx.decode(T, P);
    std::vector<const Vec*> cos;
    for (int k = 0; k < a + q; ++k) cos.push_back(&cx.delta(u[k]));
    for_each_combo(cos, [&](const std::vector<int>& idx, const Scalar& c) {
      std::vector<int> first(a + q), second(a + q);
      for (int k = 0; k < a + q; ++k) first[k] = idx[k] / cx.d, second[k] = idx[k] % cx.d;
      const Vec* gz = gc.eval(cx.encode(std::vector<int>(first.begin() + a, first.end())));
      if (!gz) return;
      Vec left = cx.prod(std::vector<int>(second.begin(), second.begin() + a));
      Vec block = cx.prod(std::vector<int>(second.begin() + a, second.end()));
      std::vector<int> args(p);
      for (int k = 0; k < a; ++k) args[k] = first[k];
      for (int k = a + q; k < P; ++k) args[k - q + 1] = u[k];
      for (auto& [zi, zc] : *gz)
        for (auto& [ci, cc] : cx.z.coaction_lift.col(zi)) {
          int hh = ci / cx.dz, z0 = ci % cx.dz;
          Vec ins = cx.h.U.product(unit_vec(hh), block);
          Vec fval = cx.eval_with(fc, args, a, ins);
          if (fval.empty()) continue;
          Vec r = cx.z.Z.product(fval, cx.z.act(left, unit_vec(z0), cx.h));
          for (auto& [k, v] : r) acc.add(T * cx.dz + k, c * zc * cc * v, cx.f);
        }
    });
  }
  return acc.take();
}

}  // namespace

OperadData build_yd_operad(const HopfAlgebroid& h, const YdAlgebra& z, int top) {
  Ctx cx(h, z);
  OperadData o;
  o.name = "C(" + h.name + ", " + z.name + ")";
  o.field = cx.f;
  o.top = top;
  int pw = 1;
  for (int n = 0; n <= top; ++n, pw *= cx.d) o.dims.push_back(pw * cx.dz);
  for (int p = 1; p <= top; ++p)
    for (int q = 0; p + q - 1 <= top; ++q)
      for (int i = 1; i <= p; ++i) {
        Matrix c(cx.f, o.dims[p + q - 1], o.dims[p] * o.dims[q]);
        for (int x = 0; x < o.dims[p]; ++x)
          for (int y = 0; y < o.dims[q]; ++y) c.set_col(x * o.dims[q] + y, compose(cx, unit_vec(x), p, unit_vec(y), q, i));
        o.comp[{p, q, i}] = c;
      }
  const Vec& one = z.Z.unit;
  Vec onev;
  for (int u = 0; u < cx.d; ++u)
    for (auto& [k, c] : one) axpy(onev, h.eps.at(0, u) * c, unit_vec(u * cx.dz + k), cx.f);
  o.one = onev;
  if (top >= 2) {
    Vec mv;
    for (int u = 0; u < cx.d; ++u)
      for (int v = 0; v < cx.d; ++v) {
        Scalar ev;
        for (auto& [k, c] : h.U.product(unit_vec(u), unit_vec(v))) ev += c * h.eps.at(0, k);
        if (ev == 0) continue;
        for (auto& [k, c] : one) axpy(mv, ev * c, unit_vec((u * cx.d + v) * cx.dz + k), cx.f);
      }
    o.m = mv;
  }
  o.e = one;
  return o;
}

SaydModule tensor_with_yd(const HopfAlgebroid& h, const SaydModule& l, const YdAlgebra& z) {
  Ctx cx(h, z);
  int dl = l.dim, dz = cx.dz, d = cx.d, dp = dl * dz;
  SaydModule p;
  p.name = l.name + " (x) " + z.name;
  p.dim = dp;
  p.action = Matrix(cx.f, dp, dp * d);
  p.coaction_lift = Matrix(cx.f, d * dp, dp);
  for (int li = 0; li < dl; ++li)
    for (int zi = 0; zi < dz; ++zi) {
      int pi = li * dz + zi;
      for (int u = 0; u < d; ++u) {
        Accumulator acc(dp);
        for (auto& [t, c] : cx.trans.col(u)) {
          Vec lp = l.act(unit_vec(li), unit_vec(t / d), h);
          Vec zm = z.act(unit_vec(t % d), unit_vec(zi), h);
          for (auto& [a, ca] : lp)
            for (auto& [b, cb] : zm) acc.add(a * dz + b, c * ca * cb, cx.f);
        }
        p.action.set_col(pi * d + u, acc.take());
      }
      Accumulator acc(d * dp);
      for (auto& [lc, c1] : l.coaction_lift.col(li))
        for (auto& [zc, c2] : z.coaction_lift.col(zi)) {
          Vec x = h.U.product(unit_vec(zc / dz), unit_vec(lc / dl));
          for (auto& [k, c3] : x) acc.add(k * dp + (lc % dl) * dz + zc % dz, c1 * c2 * c3, cx.f);
        }
      p.coaction_lift.set_col(pi, acc.take());
    }
  return p;
}

namespace {

int power(int d, int n) {
  int r = 1;
  for (int k = 0; k < n; ++k) r *= d;
  return r;
}

struct CompCtx : Ctx {
  const SaydModule& l;
  int dl;
  CompCtx(const HopfAlgebroid& h_, const SaydModule& l_, const YdAlgebra& z_) : Ctx(h_, z_), l(l_), dl(l_.dim) {}

  // l (x) z (x) tuple with one general slot
  void emit(Accumulator& acc, const Scalar& c, int li, const Vec& zv, std::vector<int> tuple, int slot,
            const Vec& general) const {
    int n = int(tuple.size()), pw = power(d, n);
    auto put = [&](const Scalar& c2) {
      int code = encode(tuple);
      for (auto& [zk, zc] : zv) acc.add((li * dz + zk) * pw + code, c2 * zc, f);
    };
    if (slot < 0) return put(c);
    for (auto& [u, gc] : general) {
      tuple[slot] = u;
      put(c * gc);
    }
  }

  // f ._i (l (x) z (x) u), i >= 1
  Vec act_pos(const Cochain& fc, int p, int li, int zi, const std::vector<int>& u, int i) const {
    int k = int(u.size()), a = k - p - i + 1, outn = k - p + 1;
    Accumulator acc(dl * dz * power(d, outn));
    std::vector<const Vec*> cos;
    for (int j = 0; j < a + p; ++j) cos.push_back(&delta(u[j]));
    for_each_combo(cos, [&](const std::vector<int>& idx, const Scalar& c) {
      std::vector<int> first(a + p), second(a + p);
      for (int j = 0; j < a + p; ++j) first[j] = idx[j] / d, second[j] = idx[j] % d;
      const Vec* fz = fc.eval(encode(std::vector<int>(first.begin() + a, first.end())));
      if (!fz) return;
      Vec left = prod(std::vector<int>(second.begin(), second.begin() + a));
      Vec block = prod(std::vector<int>(second.begin() + a, second.end()));
      std::vector<int> tuple(outn);
      for (int j = 0; j < a; ++j) tuple[j] = first[j];
      for (int j = a + p; j < k; ++j) tuple[j - p + 1] = u[j];
      for (auto& [zf, cf] : *fz)
        for (auto& [ci, cc] : z.coaction_lift.col(zf)) {
          Vec nz = z.Z.product(z.act(left, unit_vec(ci % dz), h), unit_vec(zi));
          emit(acc, c * cf * cc, li, nz, tuple, a, h.U.product(unit_vec(ci / dz), block));
        }
    });
    return acc.take();
  }

  // f ._0 (l (x) z (x) u), 1 <= p <= k + 1
  Vec act_zero(const Cochain& fc, int p, int li, int zi, const std::vector<int>& u) const {
    int k = int(u.size()), lead = k - p + 1;
    Accumulator acc(dl * dz * power(d, lead));
    std::vector<const Vec*> cos{&l.coaction_lift.col(li), &z.coaction_lift.col(zi)};
    for (int j = 0; j < k; ++j) cos.push_back(&trans.col(u[j]));
    for_each_combo(cos, [&](const std::vector<int>& idx, const Scalar& c) {
      int lm = idx[0] / dl, l0 = idx[0] % dl, zm = idx[1] / dz, z0 = idx[1] % dz;
      std::vector<int> plus(k), minus;
      for (int j = 0; j < k; ++j) plus[j] = idx[2 + j] / d;
      for (int j = k - 1; j >= 0; --j) minus.push_back(idx[2 + j] % d);
      minus.push_back(zm);
      minus.push_back(lm);
      std::vector<int> args(p);
      for (int j = lead; j < k; ++j) args[j - lead] = plus[j];
      Vec fval = eval_with(fc, args, p - 1, prod(minus));
      if (fval.empty()) return;
      std::vector<const Vec*> cos2;
      for (int j = 0; j < lead; ++j) cos2.push_back(&delta(plus[j]));
      for_each_combo(cos2, [&](const std::vector<int>& idx2, const Scalar& c2) {
        std::vector<int> first(lead), second(lead);
        for (int j = 0; j < lead; ++j) first[j] = idx2[j] / d, second[j] = idx2[j] % d;
        Vec nz = z.Z.product(z.act(prod(second), fval, h), unit_vec(z0));
        emit(acc, c * c2, l0, nz, first, -1, {});
      });
    });
    return acc.take();
  }

  Vec cyclic_op(int li, int zi, const std::vector<int>& u) const {
    int k = int(u.size());
    Accumulator acc(dl * dz * power(d, k));
    std::vector<const Vec*> cos{&l.coaction_lift.col(li), &z.coaction_lift.col(zi)};
    for (int j = 0; j < k; ++j) cos.push_back(&trans.col(u[j]));
    for_each_combo(cos, [&](const std::vector<int>& idx, const Scalar& c) {
      int lm = idx[0] / dl, l0 = idx[0] % dl, zm = idx[1] / dz, z0 = idx[1] % dz;
      std::vector<int> tuple(k), minus;
      for (int j = 1; j < k; ++j) tuple[j - 1] = idx[2 + j] / d;
      for (int j = k - 1; j >= 0; --j) minus.push_back(idx[2 + j] % d);
      minus.push_back(zm);
      minus.push_back(lm);
      Vec last = prod(minus);
      for (auto& [pp, c2] : trans.col(idx[2] / d)) {
        Vec nl = l.act(unit_vec(l0), unit_vec(pp / d), h);
        Vec nz = z.act(unit_vec(pp % d), unit_vec(z0), h);
        for (auto& [lk, lc] : nl) emit(acc, c * c2 * lc, lk, nz, tuple, k - 1, last);
      }
    });
    return acc.take();
  }
};

}  // namespace

CompModuleData build_yd_comp_module(const HopfAlgebroid& h, const SaydModule& l, const YdAlgebra& z, int top) {
  CompCtx cx(h, l, z);
  SaydModule pz = tensor_with_yd(h, l, z);
  Report st = check_sayd(pz, h, true);
  if (const CheckEntry* e = st.find("stability"); e && !e->passed) throw StabilityFailure(pz.name + " is not stable");
  int d = cx.d, dz = cx.dz, dp = l.dim * dz;
  CompModuleData m;
  m.name = "C(" + h.name + ", " + pz.name + ")";
  m.top = top;
  for (int n = 0; n <= top; ++n) m.dims.push_back(dp * power(d, n));
  auto basis = [&](int n, int b, int& li, int& zi) {
    int pw = power(d, n);
    li = (b / pw) / dz, zi = (b / pw) % dz;
    return cx.decode(b % pw, n);
  };
  for (int n = 0; n <= top; ++n) {
    Matrix t(cx.f, m.dims[n], m.dims[n]);
    for (int b = 0; b < m.dims[n]; ++b) {
      int li, zi;
      std::vector<int> u = basis(n, b, li, zi);
      t.set_col(b, n == 0 ? unit_vec(b) : cx.cyclic_op(li, zi, u));
    }
    m.t.push_back(t);
    for (int p = 0; p <= std::min(top, n + 1); ++p) {
      int out = n - p + 1;
      if (out > top) continue;
      int od = dz * power(d, p);
      for (int i = p == 0 ? 1 : 0; i <= n + 1 - p; ++i) {
        Matrix bm(cx.f, m.dims[out], od * m.dims[n]);
        for (int fb = 0; fb < od; ++fb) {
          Cochain fc(unit_vec(fb), dz);
          for (int b = 0; b < m.dims[n]; ++b) {
            int li, zi;
            std::vector<int> u = basis(n, b, li, zi);
            bm.set_col(fb * m.dims[n] + b, i == 0 ? cx.act_zero(fc, p, li, zi, u) : cx.act_pos(fc, p, li, zi, u, i));
          }
        }
        m.bullet[{p, n, i}] = bm;
      }
    }
  }
  return m;
}

YdInduced induce_from_yd(const YdMeasuringData& ym, const SaydModule& l, const SaydModule& l2, const Matrix& hmorph,
                         int top) {
  const HopfAlgebroid& h = *ym.h;
  const FieldSpec& f = h.field;
  YdInduced out;
  out.preconditions = Report("induce from YD " + ym.name);
  out.preconditions.merge(check_yd_measuring(ym), "(psi) ");
  out.preconditions.merge(check_ayd_morphism(l, l2, hmorph, h), "(h) ");
  if (!out.preconditions.passed()) throw InputRejected(out.preconditions.summary());
  out.O = std::make_shared<OperadData>(build_yd_operad(h, ym.Z, top));
  out.O2 = std::make_shared<OperadData>(build_yd_operad(h, ym.Z2, top));
  out.L = std::make_shared<CompModuleData>(build_yd_comp_module(h, l, ym.Z, top));
  out.L2 = std::make_shared<CompModuleData>(build_yd_comp_module(h, l2, ym.Z2, top));
  OperadMeasuringData& om = out.operads;
  om.name = ym.name;
  om.C = ym.C;
  om.src = out.O;
  om.dst = out.O2;
  om.Psi.resize(top + 1);
  std::vector<std::vector<Matrix>> omega(top + 1);
  for (int n = 0; n <= top; ++n)
    for (int x = 0; x < ym.C.dim; ++x) {
      Matrix id = Matrix::identity(f, power(h.d(), n));
      om.Psi[n].push_back(kron(id, ym.psi[x]));
      omega[n].push_back(kron(kron(hmorph, ym.psi[x]), id));
    }
  CompComoduleMeasuringData& cm = out.comp;
  cm.name = ym.name + " with " + l.name + " -> " + l2.name;
  cm.base = om;
  cm.D = ComoduleData{ym.C.name, Side::Left, ym.C.dim, ym.C.comul};
  cm.src = out.L;
  cm.dst = out.L2;
  cm.Omega = std::move(omega);
  return out;
}

}  // namespace hcyc
