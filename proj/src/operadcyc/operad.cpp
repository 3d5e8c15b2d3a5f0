#include "hcyc/operadcyc/operad.hpp"

#include "hcyc/measuring/measuring.hpp"

#include <algorithm>

namespace hcyc {

const Matrix* OperadData::circ(int p, int q, int i) const {
  auto it = comp.find({p, q, i});
  return it == comp.end() ? nullptr : &it->second;
}

const Matrix* CompModuleData::at(int p, int n, int i) const {
  auto it = bullet.find({p, n, i});
  return it == bullet.end() ? nullptr : &it->second;
}

namespace {

Matrix column(const FieldSpec& f, int rows, const Vec& v) { return Matrix::from_columns(f, rows, {v}); }

int first_diff(const Matrix& a, const Matrix& b) {
  for (int j = 0; j < a.cols(); ++j)
    if (a.col(j) != b.col(j)) return j;
  return -1;
}

// one entry per axiom: first failure wins, passes recorded at the end
struct Tally {
  explicit Tally(Report& r) : rep(r) {}
  Report& rep;
  std::map<std::string, int> unchecked;
  std::vector<std::string> seen;

  void note(const std::string& axiom) {
    if (std::find(seen.begin(), seen.end(), axiom) == seen.end()) seen.push_back(axiom);
  }
  void compare(const std::string& axiom, const Matrix& lhs, const Matrix& rhs, std::vector<int> w,
               const std::string& detail) {
    note(axiom);
    if (rep.find(axiom)) return;
    int c = lhs.rows() == rhs.rows() && lhs.cols() == rhs.cols() ? first_diff(lhs, rhs) : 0;
    if (c >= 0) {
      w.push_back(c);
      rep.fail(axiom, std::move(w), detail);
    }
  }
  void skip(const std::string& axiom) {
    note(axiom);
    ++unchecked[axiom];
  }
  void finish() {
    for (auto& a : seen)
      if (!rep.find(a)) rep.pass(a);
    for (auto& [a, k] : unchecked) rep.unchecked(a + " outside the table", std::to_string(k) + " index combinations");
  }
};

std::string indices(std::initializer_list<std::pair<const char*, int>> kv) {
  std::string s;
  for (auto& [k, v] : kv) s += (s.empty() ? "" : " ") + std::string(k) + "=" + std::to_string(v);
  return s;
}

}  // namespace

Report check_operad(const OperadData& o) {
  const FieldSpec& f = o.field;
  Report rep("operad " + o.name);
  Tally tl{rep};
  auto I = [&](int n) { return Matrix::identity(f, o.dim(n)); };
  for (int p = 1; p <= o.top; ++p)
    for (int q = 0; q <= o.top; ++q)
      for (int r = 0; r <= o.top; ++r) {
        if (p + q - 1 > o.top || p + q + r - 2 > o.top || p + q - 1 < 1) continue;
        TensorShape sh({o.dim(p), o.dim(q), o.dim(r)});
        Matrix swap = permute_factors(sh, {0, 2, 1}, f);
        for (int i = 1; i <= p; ++i)
          for (int j = 1; j <= p + q - 1; ++j) {
            const Matrix* uv = o.circ(p, q, i);
            const Matrix* uvw = o.circ(p + q - 1, r, j);
            std::string det = indices({{"p", p}, {"q", q}, {"r", r}, {"i", i}, {"j", j}});
            std::string label;
            const Matrix *a = nullptr, *b = nullptr;
            bool inner = false;
            if (j < i) {
              label = "associativity j<i";
              a = o.circ(p, r, j), b = o.circ(p + r - 1, q, i + r - 1);
            } else if (j < q + i) {
              label = "associativity i<=j<q+i";
              a = o.circ(q, r, j - i + 1), b = o.circ(p, q + r - 1, i);
              inner = true;
            } else {
              label = "associativity j>=q+i";
              a = o.circ(p, r, j - q + 1), b = o.circ(p + r - 1, q, i);
            }
            if (!uv || !uvw || !a || !b) {
              tl.skip(label);
              continue;
            }
            Matrix lhs = *uvw * kron(*uv, I(r));
            Matrix rhs = inner ? *b * kron(I(p), *a) : *b * kron(*a, I(q)) * swap;
            tl.compare(label, lhs, rhs, {p, q, r, i, j}, det);
          }
      }
  Matrix one = column(f, o.dim(1), o.one);
  for (int p = 0; p <= o.top; ++p) {
    for (int i = 1; i <= p; ++i) {
      const Matrix* c = o.circ(p, 1, i);
      if (!c) {
        tl.skip("u o_i 1 = u");
        continue;
      }
      tl.compare("u o_i 1 = u", *c * kron(I(p), one), I(p), {p, i}, indices({{"p", p}, {"i", i}}));
    }
    if (const Matrix* c = o.circ(1, p, 1))
      tl.compare("1 o_1 u = u", *c * kron(one, I(p)), I(p), {p}, indices({{"p", p}}));
    else
      tl.skip("1 o_1 u = u");
  }
  if (o.top >= 2) {
    Matrix mm = column(f, o.dim(2), o.m), e = column(f, o.dim(0), o.e);
    if (o.top >= 3)
      tl.compare("m o_1 m = m o_2 m", *o.circ(2, 2, 1) * kron(mm, mm), *o.circ(2, 2, 2) * kron(mm, mm), {}, "");
    else
      tl.skip("m o_1 m = m o_2 m");
    tl.compare("m o_1 e = 1", *o.circ(2, 0, 1) * kron(mm, e), one, {1}, "");
    tl.compare("m o_2 e = 1", *o.circ(2, 0, 2) * kron(mm, e), one, {2}, "");
  }
  tl.finish();
  return rep;
}

namespace {

enum class Slot { Defined, Zero, Undefined };

Slot lookup(const CompModuleData& l, int p, int n, int i, const Matrix*& out) {
  out = nullptr;
  if (n < 0 || n > l.top) return Slot::Undefined;
  if (p > n + 1) return Slot::Zero;
  out = l.at(p, n, i);
  return out ? Slot::Defined : Slot::Undefined;
}

}  // namespace

Report check_comp_module(const OperadData& o, const CompModuleData& l) {
  const FieldSpec& f = o.field;
  Report rep("comp module " + l.name + " over " + o.name);
  Tally tl{rep};
  auto I = [&](int n) { return Matrix::identity(f, o.dim(n)); };
  auto IL = [&](int n) { return Matrix::identity(f, l.dim(n)); };
  for (int p = 0; p <= o.top; ++p)
    for (int q = 0; q <= o.top; ++q)
      for (int n = 0; n <= l.top; ++n) {
        TensorShape sh({o.dim(p), o.dim(q), l.dim(n)});
        Matrix swap;
        for (int j = 0; j <= n + 1 - q; ++j) {
          const Matrix* vj;
          if (lookup(l, q, n, j, vj) != Slot::Defined) continue;
          int n1 = n - q + 1;
          for (int i = 0; i <= n1 + 1 - p; ++i) {
            const Matrix* ui;
            if (lookup(l, p, n1, i, ui) != Slot::Defined) continue;
            if (swap.cols() == 0) swap = permute_factors(sh, {1, 0, 2}, f);
            Matrix lhs = *ui * kron(I(p), *vj);
            std::string det = indices({{"p", p}, {"q", q}, {"n", n}, {"i", i}, {"j", j}});
            std::string label;
            Matrix rhs;
            bool ok = true;
            auto outer_after = [&](int pi, int ii, int qo, int jo) {
              // v ._jo (u ._ii l), u in O(pi)
              const Matrix *in, *out;
              Slot s1 = lookup(l, pi, n, ii, in);
              if (s1 == Slot::Undefined) return false;
              if (s1 == Slot::Zero) {
                rhs = Matrix(f, lhs.rows(), lhs.cols());
                return true;
              }
              Slot s2 = lookup(l, qo, n - pi + 1, jo, out);
              if (s2 == Slot::Undefined) return false;
              rhs = s2 == Slot::Zero ? Matrix(f, lhs.rows(), lhs.cols()) : *out * kron(I(qo), *in) * swap;
              return true;
            };
            if (j < i) {
              label = "comp j<i";
              ok = outer_after(p, i + q - 1, q, j);
            } else if (p > 0 && j - p < i) {
              label = "comp j-p<i<=j";
              const Matrix* c = o.circ(p, q, j - i + 1);
              const Matrix* b;
              Slot s = lookup(l, p + q - 1, n, i, b);
              if (!c || s == Slot::Undefined)
                ok = false;
              else
                rhs = s == Slot::Zero ? Matrix(f, lhs.rows(), lhs.cols()) : *b * kron(*c, IL(n));
            } else if (p > 0) {
              label = "comp 0<=i<=j-p";
              ok = outer_after(p, i, q, j - p + 1);
            } else {
              label = "comp p=0 0<=i<=j";
              ok = outer_after(0, i, q, j + 1);
            }
            if (!ok) {
              tl.skip(label);
              continue;
            }
            tl.compare(label, lhs, rhs, {p, q, n, i, j}, det);
          }
        }
      }
  Matrix one = column(f, o.dim(1), o.one);
  for (int n = 0; n <= l.top; ++n) {
    for (int i = 0; i <= n; ++i) {
      const Matrix* b = l.at(1, n, i);
      if (!b) {
        tl.skip("1 ._i l = l");
        continue;
      }
      tl.compare("1 ._i l = l", *b * kron(one, IL(n)), IL(n), {n, i}, indices({{"n", n}, {"i", i}}));
    }
    Matrix pw = IL(n);
    for (int k = 0; k <= n; ++k) pw = l.t[n] * pw;
    tl.compare("t^{n+1} = id", pw, IL(n), {n}, indices({{"n", n}}));
    for (int p = 0; p <= o.top; ++p)
      for (int i = 0; i <= n - p; ++i) {
        const Matrix *a = l.at(p, n, i), *b = l.at(p, n, i + 1);
        if (!a || !b) {
          tl.skip("t(u ._i l) = u ._{i+1} t(l)");
          continue;
        }
        tl.compare("t(u ._i l) = u ._{i+1} t(l)", l.t[n - p + 1] * *a, *b * kron(I(p), l.t[n]), {p, n, i},
                   indices({{"p", p}, {"n", n}, {"i", i}}));
      }
  }
  tl.finish();
  return rep;
}

CyclicModuleData comp_cyclic_module(const OperadData& o, const CompModuleData& l, int top) {
  const FieldSpec& f = o.field;
  if (top > l.top || top > o.top + 1) throw std::invalid_argument("comp_cyclic_module: degree above the truncation");
  CyclicModuleData c;
  c.name = "C(" + o.name + ", " + l.name + ")";
  c.field = f;
  c.direction = Direction::Cyclic;
  c.resize(top);
  for (int n = 0; n <= top; ++n) c.spaces[n] = QuotientPresentation::free(f, l.dim(n), "L(" + std::to_string(n) + ")");
  Matrix m = column(f, o.dim(2), o.m), e = column(f, o.dim(0), o.e);
  auto need = [&](int p, int n, int i) -> const Matrix& {
    const Matrix* b = l.at(p, n, i);
    if (!b) throw std::invalid_argument("comp_cyclic_module: missing action " + indices({{"p", p}, {"n", n}, {"i", i}}));
    return *b;
  };
  for (int n = 0; n <= top; ++n) {
    c.cyclic[n] = l.t[n];
    Matrix IL = Matrix::identity(f, l.dim(n));
    if (n >= 1) {
      for (int i = 0; i < n; ++i) c.face[n][i] = need(2, n, i) * kron(m, IL);
      c.face[n][n] = need(2, n, 0) * kron(m, IL) * l.t[n];
    }
    if (n < top)
      for (int j = 0; j <= n; ++j) c.degen[n][j] = need(0, n, j + 1) * kron(e, IL);
  }
  return c;
}

OperadData one_dimensional_operad(FieldSpec f, int top) {
  OperadData o;
  o.name = "k";
  o.field = f;
  o.top = top;
  o.dims.assign(top + 1, 1);
  Matrix one = Matrix::identity(f, 1);
  for (int p = 1; p <= top; ++p)
    for (int q = 0; p + q - 1 <= top; ++q)
      for (int i = 1; i <= p; ++i) o.comp[{p, q, i}] = one;
  o.one = o.m = o.e = unit_vec(0);
  return o;
}

CompModuleData point_comp_module(const OperadData& o, int top) {
  CompModuleData l;
  l.name = "k";
  l.top = top;
  l.dims.assign(top + 1, 1);
  Matrix one = Matrix::identity(o.field, 1);
  for (int n = 0; n <= top; ++n) {
    l.t.push_back(one);
    for (int p = 0; p <= std::min(o.top, n + 1); ++p) {
      if (n - p + 1 > top) continue;
      for (int i = 0; i <= n + 1 - p; ++i) l.bullet[{p, n, i}] = one;
    }
  }
  return l;
}

Report check_operad_measuring(const OperadMeasuringData& om) {
  if (!is_cocommutative(om.C)) throw NotCocommutative(om.C.name + " is not cocommutative");
  const OperadData &o = *om.src, &o2 = *om.dst;
  const FieldSpec& f = o.field;
  Report rep("operad measuring " + om.name);
  Tally tl{rep};
  for (int x = 0; x < om.C.dim; ++x) {
    Scalar ex = om.C.counit.at(0, x);
    for (auto& [key, c] : o.comp) {
      auto [p, q, i] = key;
      const Matrix* c2 = o2.circ(p, q, i);
      if (!c2) {
        tl.skip("x(u o_i v) = x(1)(u) o_i x(2)(v)");
        continue;
      }
      tl.compare("x(u o_i v) = x(1)(u) o_i x(2)(v)", om.Psi[p + q - 1][x] * c,
                 *c2 * sweedler_pair(om.C, x, om.Psi[p], om.Psi[q]), {x, p, q, i},
                 indices({{"x", x}, {"p", p}, {"q", q}, {"i", i}}));
    }
    if (o.top >= 2)
      tl.compare("x(m) = eps(x) m'", column(f, o2.dim(2), om.Psi[2][x].apply(o.m)),
                 column(f, o2.dim(2), scaled(o2.m, ex, f)), {x}, "");
    tl.compare("x(e) = eps(x) e'", column(f, o2.dim(0), om.Psi[0][x].apply(o.e)),
               column(f, o2.dim(0), scaled(o2.e, ex, f)), {x}, "");
  }
  tl.finish();
  return rep;
}

namespace {

std::vector<std::pair<Scalar, std::pair<int, int>>> comodule_terms(const ComoduleData& d, int y, int cdim) {
  std::vector<std::pair<Scalar, std::pair<int, int>>> out;
  bool left = d.side == Side::Left;
  TensorShape sh(left ? std::vector<int>{cdim, d.dim} : std::vector<int>{d.dim, cdim});
  for (const Term& t : terms(d.coaction.col(y), sh))
    out.push_back({t.c, left ? std::pair{t.idx[0], t.idx[1]} : std::pair{t.idx[1], t.idx[0]}});
  return out;
}

}  // namespace

Report check_comp_comodule_measuring(const CompComoduleMeasuringData& cm) {
  const OperadMeasuringData& om = cm.base;
  const CompModuleData &l = *cm.src, &l2 = *cm.dst;
  const FieldSpec& f = om.src->field;
  Report rep("comp comodule measuring " + cm.name);
  rep.merge(check_operad_measuring(om), "(operad) ");
  rep.merge(check_comodule(om.C, cm.D));
  Tally tl{rep};
  for (int y = 0; y < cm.D.dim; ++y) {
    auto co = comodule_terms(cm.D, y, om.C.dim);
    for (auto& [key, b] : l.bullet) {
      auto [p, n, i] = key;
      const Matrix* b2 = l2.at(p, n, i);
      if (!b2) {
        tl.skip("y(u ._i l) = y(0)(u) ._i y(1)(l)");
        continue;
      }
      Matrix mix(f, om.dst->dim(p) * l2.dim(n), om.src->dim(p) * l.dim(n));
      for (auto& [c, cd] : co) mix = mix + kron(om.Psi[p][cd.first], cm.Omega[n][cd.second]).scaled(c);
      tl.compare("y(u ._i l) = y(0)(u) ._i y(1)(l)", cm.Omega[n - p + 1][y] * b, *b2 * mix, {y, p, n, i},
                 indices({{"y", y}, {"p", p}, {"n", n}, {"i", i}}));
    }
    for (int n = 0; n <= l.top; ++n)
      tl.compare("y(t(l)) = t'(y(l))", cm.Omega[n][y] * l.t[n], l2.t[n] * cm.Omega[n][y], {y, n}, "");
  }
  tl.finish();
  return rep;
}

CompInducedMap induced_comp_map(const CompComoduleMeasuringData& cm, const Vec& y, int top, bool strict) {
  const FieldSpec& f = cm.base.src->field;
  CyclicModuleData c = comp_cyclic_module(*cm.base.src, *cm.src, top);
  CyclicModuleData c2 = comp_cyclic_module(*cm.base.dst, *cm.dst, top);
  CompInducedMap out;
  out.chain.label = cm.name;
  for (int n = 0; n <= top; ++n) {
    Matrix s(f, cm.dst->dim(n), cm.src->dim(n));
    for (auto& [k, v] : y) s = s + cm.Omega[n][k].scaled(v);
    out.chain.maps.push_back(s);
  }
  out.chain.certificate = certify_chain_map(c, c2, out.chain.maps, cm.name);
  if (strict && !out.chain.certificate.passed())
    throw CertificateFailure(cm.name + ": induced map does not commute with the cyclic structure");
  Complex h = hochschild_complex(c), h2 = hochschild_complex(c2);
  out.hh = homology(h, Theory::HH, c.name);
  out.hh2 = homology(h2, Theory::HH, c2.name);
  for (int n = 0; n < top; ++n) out.on_hh.push_back(induced_on_homology(out.hh, h, out.hh2, h2, n, out.chain.maps[n]));
  if (f.characteristic() == 0) {
    Complex k = connes_complex(c), k2 = connes_complex(c2);
    out.hc = homology(k, Theory::HC, c.name);
    out.hc2 = homology(k2, Theory::HC, c2.name);
    for (int n = 0; n < top; ++n)
      out.on_hc.push_back(induced_on_homology(out.hc, k, out.hc2, k2, n, out.chain.maps[n]));
  }
  return out;
}

}  // namespace hcyc
