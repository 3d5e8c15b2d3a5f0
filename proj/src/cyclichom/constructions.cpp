#include "hcyc/cyclichom/constructions.hpp"

namespace hcyc {

namespace {

using Combo = std::vector<const Term*>;

void for_each_combo(const std::vector<std::vector<Term>>& lists, const std::function<void(const Scalar&, const Combo&)>& fn) {
  Combo cur(lists.size());
  std::function<void(std::size_t, const Scalar&)> rec = [&](std::size_t k, const Scalar& c) {
    if (k == lists.size()) {
      fn(c, cur);
      return;
    }
    for (const Term& t : lists[k]) {
      cur[k] = &t;
      rec(k + 1, c * t.c);
    }
  };
  rec(0, Scalar(1));
}

std::vector<int> repeat(int d, int n) { return std::vector<int>(n, d); }

// d x d^2 map (x, y) -> g(x, y)
Matrix binary(const HopfAlgebroid& h, const std::function<Vec(int, int)>& g) {
  int d = h.d();
  Matrix m(h.field, d, d * d);
  for (int x = 0; x < d; ++x)
    for (int y = 0; y < d; ++y) m.set_col(x * d + y, g(x, y));
  return m;
}

Vec s_eps(const HopfAlgebroid& h, const Vec& x) { return h.s.apply(h.eps.apply(x)); }
Vec t_eps(const HopfAlgebroid& h, const Vec& x) { return h.t.apply(h.eps.apply(x)); }

// inserts `v` as a new factor at position pos
Matrix insert_factor(const FieldSpec& f, const TensorShape& in, int pos, const Vec& v, int vdim) {
  std::vector<int> od = in.dims;
  od.insert(od.begin() + pos, vdim);
  TensorShape out(od);
  return build_free(f, in, out.size(), [&](const std::vector<int>& idx, Accumulator& acc) {
    std::vector<int> o = idx;
    o.insert(o.begin() + pos, 0);
    for (auto& [k, c] : v) {
      o[pos] = k;
      acc.add(out.encode(o), c, f);
    }
  });
}

QuotientPresentation cu_space(const HopfAlgebroid& h, Convention c, int n) {
  if (n == 0) return QuotientPresentation::free(h.field, h.a(), h.A.name);
  return h.tower(c, n);
}

}  // namespace

CyclicModuleData build_cocyclic_CU(const HopfAlgebroid& h, int top) {
  const FieldSpec& f = h.field;
  int d = h.d();
  CyclicModuleData m;
  m.name = "C^*(" + h.name + ")";
  m.field = f;
  m.direction = Direction::Cocyclic;
  m.resize(top);
  for (int n = 0; n <= top; ++n) m.spaces[n] = cu_space(h, Convention::Left, n);
  auto desc = [&](const Matrix& free, int from, int to) { return descend(free, m.spaces[from], m.spaces[to]); };

  for (int n = 1; n <= top; ++n) {
    if (n == 1) {
      m.face[1][0] = desc(h.t, 0, 1);
      m.face[1][1] = desc(h.s, 0, 1);
      continue;
    }
    TensorShape in = TensorShape::power(d, n - 1);
    m.face[n][0] = desc(insert_factor(f, in, 0, h.one(), d), n - 1, n);
    for (int i = 1; i < n; ++i) m.face[n][i] = desc(slot_map(in, i - 1, 1, h.delta_lift, f), n - 1, n);
    m.face[n][n] = desc(insert_factor(f, in, n - 1, h.one(), d), n - 1, n);
  }
  Matrix left = binary(h, [&](int x, int y) { return h.mul(s_eps(h, unit_vec(x)), unit_vec(y)); });
  Matrix right = binary(h, [&](int x, int y) { return h.mul(t_eps(h, unit_vec(y)), unit_vec(x)); });
  for (int n = 0; n < top; ++n) {
    if (n == 0) {
      m.degen[0][0] = desc(h.eps, 1, 0);
      continue;
    }
    TensorShape in = TensorShape::power(d, n + 1);
    for (int i = 0; i < n; ++i) m.degen[n][i] = desc(slot_map(in, i, 2, left, f), n + 1, n);
    m.degen[n][n] = desc(slot_map(in, n - 1, 2, right, f), n + 1, n);
  }
  m.cyclic[0] = Matrix::identity(f, h.a());
  for (int n = 1; n <= top; ++n) {
    TensorShape in = TensorShape::power(d, n);
    Matrix dn = h.delta_iter(n);
    Matrix free = build_free(f, in, in.size(), [&](const std::vector<int>& u, Accumulator& acc) {
      for (auto& [c, k] : terms(dn.apply(h.S.col(u[0])), in)) {
        std::vector<Vec> fac(n);
        for (int j = 0; j + 1 < n; ++j) fac[j] = h.mul(k[j], unit_vec(u[j + 1]));
        fac[n - 1] = unit_vec(k[n - 1]);
        std::vector<const Vec*> ptr;
        for (auto& v : fac) ptr.push_back(&v);
        add_outer(acc, c, ptr, in, f);
      }
    });
    m.cyclic[n] = desc(free, n, n);
  }
  return m;
}

CyclicModuleData build_cyclic_CU(const HopfAlgebroid& h, int top) {
  const FieldSpec& f = h.field;
  int d = h.d();
  CyclicModuleData m;
  m.name = "C_*(" + h.name + ")";
  m.field = f;
  m.direction = Direction::Cyclic;
  m.resize(top);
  for (int n = 0; n <= top; ++n) m.spaces[n] = cu_space(h, Convention::Opposite, n);
  auto desc = [&](const Matrix& free, int from, int to) { return descend(free, m.spaces[from], m.spaces[to]); };
  Matrix epsR = h.eps_R();

  Matrix first = binary(h, [&](int x, int y) { return h.mul(h.t.apply(epsR.col(x)), unit_vec(y)); });
  Matrix last = binary(h, [&](int x, int y) { return h.mul(unit_vec(x), h.t.apply((epsR * h.S).col(y))); });
  for (int n = 1; n <= top; ++n) {
    if (n == 1) {
      m.face[1][0] = desc(epsR, 1, 0);
      m.face[1][1] = desc(epsR * h.S, 1, 0);
      continue;
    }
    TensorShape in = TensorShape::power(d, n);
    m.face[n][0] = desc(slot_map(in, 0, 2, first, f), n, n - 1);
    for (int i = 1; i < n; ++i) m.face[n][i] = desc(slot_map(in, i - 1, 2, h.U.mul, f), n, n - 1);
    m.face[n][n] = desc(slot_map(in, n - 2, 2, last, f), n, n - 1);
  }
  for (int n = 0; n < top; ++n) {
    if (n == 0) {
      m.degen[0][0] = desc(h.t, 0, 1);
      continue;
    }
    TensorShape in = TensorShape::power(d, n);
    for (int i = 0; i <= n; ++i) m.degen[n][i] = desc(insert_factor(f, in, i, h.one(), d), n, n + 1);
  }
  m.cyclic[0] = Matrix::identity(f, h.a());
  TensorShape s2 = TensorShape::power(d, 2);
  for (int n = 1; n <= top; ++n) {
    TensorShape in = TensorShape::power(d, n);
    Matrix free = build_free(f, in, in.size(), [&](const std::vector<int>& u, Accumulator& acc) {
      std::vector<std::vector<Term>> lists;
      for (int j = 0; j + 1 < n; ++j) lists.push_back(terms(h.delta_lift.col(u[j]), s2));
      for_each_combo(lists, [&](const Scalar& c, const Combo& cb) {
        Vec prod = unit_vec(u[n - 1]);
        for (int j = n - 2; j >= 0; --j) prod = h.mul(unit_vec(cb[j]->idx[1]), prod);
        std::vector<Vec> fac(n);
        fac[0] = h.S.apply(prod);
        for (int j = 0; j + 1 < n; ++j) fac[j + 1] = unit_vec(cb[j]->idx[0]);
        std::vector<const Vec*> ptr;
        for (auto& v : fac) ptr.push_back(&v);
        add_outer(acc, c, ptr, in, f);
      });
    });
    m.cyclic[n] = desc(free, n, n);
  }
  return m;
}

namespace {

QuotientPresentation p_cyclic_space(const HopfAlgebroid& h, const SaydModule& p, int n) {
  if (n == 0) return QuotientPresentation::free(h.field, p.dim, p.name);
  std::vector<TowerFactor> fs{p.right_factor(h)};
  for (int i = 0; i < n; ++i) fs.push_back(h.factor(Convention::Opposite));
  return balanced_tower(h.field, h.a(), fs, p.name + "(x)" + h.name + "^" + std::to_string(n), "A^op");
}

QuotientPresentation p_cocyclic_space(const HopfAlgebroid& h, const SaydModule& p, int n) {
  if (n == 0) return QuotientPresentation::free(h.field, p.dim, p.name);
  std::vector<TowerFactor> fs;
  for (int i = 0; i < n; ++i) fs.push_back(h.factor(Convention::Left));
  fs.push_back(p.left_factor(h));
  return balanced_tower(h.field, h.a(), fs, h.name + "^" + std::to_string(n) + "(x)" + p.name, "A");
}

void require_stable(const HopfAlgebroid& h, const SaydModule& p) {
  Report r = check_sayd(p, h, true);
  const CheckEntry* e = r.find("stability");
  if (!e || !e->passed) throw StabilityFailure(p.name + " is not stable over " + h.name);
}

}  // namespace

CyclicModuleData build_cyclic_with_coeffs(const HopfAlgebroid& h, const SaydModule& p, int top) {
  require_stable(h, p);
  const FieldSpec& f = h.field;
  int d = h.d(), np = p.dim;
  CyclicModuleData m;
  m.name = "C_*(" + h.name + ";" + p.name + ")";
  m.field = f;
  m.direction = Direction::Cyclic;
  m.resize(top);
  for (int n = 0; n <= top; ++n) m.spaces[n] = p_cyclic_space(h, p, n);
  auto desc = [&](const Matrix& free, int from, int to) { return descend(free, m.spaces[from], m.spaces[to]); };
  auto shape = [&](int n) {
    std::vector<int> dims{np};
    for (int i = 0; i < n; ++i) dims.push_back(d);
    return TensorShape(dims);
  };

  Matrix last = binary(h, [&](int x, int y) { return h.mul(unit_vec(x), t_eps(h, unit_vec(y))); });
  Matrix p_last(f, np, np * d);
  for (int q = 0; q < np; ++q)
    for (int x = 0; x < d; ++x) p_last.set_col(q * d + x, p.act(unit_vec(q), t_eps(h, unit_vec(x)), h));
  for (int n = 1; n <= top; ++n) {
    TensorShape in = shape(n);
    m.face[n][0] = desc(n == 1 ? p_last : slot_map(in, n - 1, 2, last, f), n, n - 1);
    for (int i = 1; i < n; ++i) m.face[n][i] = desc(slot_map(in, n - i, 2, h.U.mul, f), n, n - 1);
    m.face[n][n] = desc(slot_map(in, 0, 2, p.action, f), n, n - 1);
  }
  for (int n = 0; n < top; ++n) {
    TensorShape in = shape(n);
    for (int i = 0; i <= n; ++i) m.degen[n][i] = desc(insert_factor(f, in, n - i + 1, h.one(), d), n, n + 1);
  }
  Matrix tr = h.translation_lift();
  TensorShape s2 = TensorShape::power(d, 2), sp({d, np});
  {
    Matrix t0(f, np, np);
    for (int q = 0; q < np; ++q) {
      Accumulator acc(np);
      for (auto& [c, xq] : terms(p.coaction_lift.col(q), sp)) acc.add_vec(p.act(unit_vec(xq[1]), unit_vec(xq[0]), h), c, f);
      t0.set_col(q, acc.take());
    }
    m.cyclic[0] = t0;
  }
  for (int n = 1; n <= top; ++n) {
    TensorShape in = shape(n);
    Matrix free = build_free(f, in, in.size(), [&](const std::vector<int>& idx, Accumulator& acc) {
      std::vector<std::vector<Term>> lists{terms(p.coaction_lift.col(idx[0]), sp)};
      for (int j = 1; j <= n; ++j) lists.push_back(terms(tr.col(idx[j]), s2));
      for_each_combo(lists, [&](const Scalar& c, const Combo& cb) {
        // cb[0] = (p(-1), p(0)), cb[j] = (u^j_+, u^j_-)
        std::vector<Vec> fac(n + 1);
        fac[0] = p.act(unit_vec(cb[0]->idx[1]), unit_vec(cb[1]->idx[0]), h);
        for (int j = 2; j <= n; ++j) fac[j - 1] = unit_vec(cb[j]->idx[0]);
        Vec prod = unit_vec(cb[0]->idx[0]);
        for (int j = 1; j <= n; ++j) prod = h.mul(unit_vec(cb[j]->idx[1]), prod);
        fac[n] = prod;
        std::vector<const Vec*> ptr;
        for (auto& v : fac) ptr.push_back(&v);
        add_outer(acc, c, ptr, in, f);
      });
    });
    m.cyclic[n] = desc(free, n, n);
  }
  return m;
}

CyclicModuleData build_cocyclic_with_coeffs(const HopfAlgebroid& h, const SaydModule& p, int top) {
  require_stable(h, p);
  const FieldSpec& f = h.field;
  int d = h.d(), np = p.dim;
  CyclicModuleData m;
  m.name = "C^*(" + h.name + ";" + p.name + ")";
  m.field = f;
  m.direction = Direction::Cocyclic;
  m.resize(top);
  for (int n = 0; n <= top; ++n) m.spaces[n] = p_cocyclic_space(h, p, n);
  auto desc = [&](const Matrix& free, int from, int to) { return descend(free, m.spaces[from], m.spaces[to]); };
  auto shape = [&](int n) {
    std::vector<int> dims(n, d);
    dims.push_back(np);
    return TensorShape(dims);
  };
  for (int n = 1; n <= top; ++n) {
    TensorShape in = shape(n - 1);
    m.face[n][0] = desc(insert_factor(f, in, 0, h.one(), d), n - 1, n);
    for (int i = 1; i < n; ++i) m.face[n][i] = desc(slot_map(in, i - 1, 1, h.delta_lift, f), n - 1, n);
    m.face[n][n] = desc(slot_map(in, n - 1, 1, p.coaction_lift, f), n - 1, n);
  }
  Matrix left = binary(h, [&](int x, int y) { return h.mul(s_eps(h, unit_vec(x)), unit_vec(y)); });
  Matrix into_p(f, np, d * np);
  for (int x = 0; x < d; ++x)
    for (int q = 0; q < np; ++q) into_p.set_col(x * np + q, p.act(unit_vec(q), t_eps(h, unit_vec(x)), h));
  for (int n = 0; n < top; ++n) {
    TensorShape in = shape(n + 1);
    for (int i = 0; i < n; ++i) m.degen[n][i] = desc(slot_map(in, i, 2, left, f), n + 1, n);
    m.degen[n][n] = desc(slot_map(in, n, 2, into_p, f), n + 1, n);
  }
  m.cyclic[0] = Matrix::identity(f, np);
  Matrix tr = h.translation_lift();
  TensorShape s2 = TensorShape::power(d, 2), sp({d, np});
  for (int n = 1; n <= top; ++n) {
    TensorShape in = shape(n), un = TensorShape::power(d, n);
    Matrix dn = h.delta_iter(n);
    Matrix free = build_free(f, in, in.size(), [&](const std::vector<int>& idx, Accumulator& acc) {
      for (auto& [c1, pm] : terms(tr.col(idx[0]), s2))
        for (auto& [c2, k] : terms(dn.col(pm[1]), un))
          for (auto& [c3, xq] : terms(p.coaction_lift.col(idx[n]), sp)) {
            std::vector<Vec> fac(n + 1);
            for (int j = 0; j + 1 < n; ++j) fac[j] = h.mul(k[j], unit_vec(idx[j + 1]));
            fac[n - 1] = h.mul(k[n - 1], unit_vec(xq[0]));
            fac[n] = p.act(unit_vec(xq[1]), unit_vec(pm[0]), h);
            std::vector<const Vec*> ptr;
            for (auto& v : fac) ptr.push_back(&v);
            add_outer(acc, c1 * c2 * c3, ptr, in, f);
          }
    });
    m.cyclic[n] = desc(free, n, n);
  }
  return m;
}

constexpr int kXiCheckedDegree = 3;

HopfGaloisMaps hopf_galois_chain_map(const HopfAlgebroid& h, const SaydModule* p, int top) {
  const FieldSpec& f = h.field;
  int d = h.d(), np = p ? p->dim : 0;
  HopfGaloisMaps out;
  std::vector<Matrix> iters{Matrix()};
  for (int k = 1; k <= top; ++k) iters.push_back(h.delta_iter(k));
  for (int n = 0; n <= top; ++n) {
    QuotientPresentation src = p ? p_cyclic_space(h, *p, n) : cu_space(h, Convention::Opposite, n);
    QuotientPresentation dst = p ? p_cocyclic_space(h, *p, n) : cu_space(h, Convention::Left, n);
    if (n == 0) {
      out.xi.push_back(Matrix::identity(f, src.dim()));
      out.xi_inv.push_back(Matrix::identity(f, src.dim()));
      continue;
    }
    std::vector<int> sd = repeat(d, n), td = repeat(d, n);
    if (p) {
      sd.insert(sd.begin(), np);
      td.push_back(np);
    }
    TensorShape in(sd), outsh(td);
    int off = p ? 1 : 0;
    ColumnFn fn = [&](const std::vector<int>& idx, Accumulator& acc) {
      // slot k collects u^{j+1}_(k-j+1) for j <= k; partial products are built factor by factor
      std::vector<Vec> slot(n + (p ? 1 : 0), h.one());
      if (p) slot[n] = unit_vec(idx[0]);
      std::vector<const Vec*> ptr;
      for (auto& v : slot) ptr.push_back(&v);
      std::function<void(int, const Scalar&)> rec = [&](int j, const Scalar& c) {
        if (j == n) {
          add_outer(acc, c, ptr, outsh, f);
          return;
        }
        std::vector<Vec> saved(slot.begin() + j, slot.begin() + n);
        for (const Term& t : terms(iters[n - j].col(idx[off + j]), TensorShape::power(d, n - j))) {
          for (int k = j; k < n; ++k) slot[k] = h.mul(saved[k - j], unit_vec(t.idx[k - j]));
          rec(j + 1, c * t.c);
        }
        for (int k = j; k < n; ++k) slot[k] = saved[k - j];
      };
      rec(0, Scalar(1));
    };
    Matrix xi = n <= kXiCheckedDegree ? descend(build_free(f, in, outsh.size(), fn), src, dst)
                                      : descend_lazily(f, in, src, dst, fn);
    out.xi.push_back(xi);
    out.xi_inv.push_back(inverse(xi));
  }
  return out;
}

}  // namespace hcyc
