#include "hcyc/lierinehart/lie_rinehart.hpp"
#include "hcyc/measuring/examples.hpp"

#include <algorithm>
#include <functional>

namespace hcyc {

namespace {

Vec add(const Vec& x, const Vec& y, const FieldSpec& f) { return vec_sub(x, scaled(y, Scalar(-1), f), f); }

// r . (element of L)
Vec r_times(const LieRinehartData& d, const Vec& r, const Vec& z) {
  const FieldSpec& f = d.R.field;
  Accumulator acc(d.ldim());
  for (auto& [li, c] : z) {
    int a = li / d.R.dim, i = li % d.R.dim;
    for (auto& [k, c2] : d.R.product(r, unit_vec(i))) acc.add(d.lindex(a, k), c * c2, f);
  }
  return acc.take();
}

Vec generator(const LieRinehartData& d, int a) {
  Vec z;
  for (auto& [k, c] : d.R.unit) z.emplace_back(d.lindex(a, k), c);
  return z;
}

Vec bilinear(const Matrix& m, int rdim, const Vec& x, const Vec& y, const FieldSpec& f) {
  Accumulator acc(m.rows());
  for (auto& [i, c] : x)
    for (auto& [j, c2] : y) acc.add_vec(m.col(i * rdim + j), c * c2, f);
  return acc.take();
}

}  // namespace

LieRinehartData free_lie_rinehart(std::string name, const AlgebraData& R, int m,
                                  const std::vector<std::vector<Vec>>& gen_bracket,
                                  const std::vector<Matrix>& gen_anchor, const std::vector<Vec>& theta) {
  const FieldSpec& f = R.field;
  LieRinehartData d;
  d.name = std::move(name);
  d.R = R;
  d.m = m;
  int r = R.dim, l = d.ldim();
  d.bracket = Matrix(f, l, l * l);
  d.anchor = Matrix(f, r, l * r);
  d.nabla = Matrix(f, r, l * r);
  d.act = Matrix(f, l, r * l);
  auto anchor_of = [&](int a, const Vec& x) { return gen_anchor[a].apply(x); };
  for (int a = 0; a < m; ++a)
    for (int i = 0; i < r; ++i) {
      int z = d.lindex(a, i);
      Vec ri = unit_vec(i);
      // nabla_{r_i Z_a}(1) = r_i theta_a - Z_a(r_i)
      Vec n1 = vec_sub(R.product(ri, theta[a]), anchor_of(a, ri), f);
      for (int j = 0; j < r; ++j) {
        Vec rj = unit_vec(j);
        d.anchor.set_col(z * r + j, R.product(ri, anchor_of(a, rj)));
        d.nabla.set_col(z * r + j, vec_sub(R.product(rj, n1), R.product(ri, anchor_of(a, rj)), f));
        d.act.set_col(j * l + z, r_times(d, rj, unit_vec(z)));
      }
      for (int b = 0; b < m; ++b)
        for (int j = 0; j < r; ++j) {
          Vec rj = unit_vec(j);
          // [r_i Z_a, r_j Z_b] = r_i r_j [Z_a, Z_b] + r_i Z_a(r_j) Z_b - r_j Z_b(r_i) Z_a
          Vec v = r_times(d, R.product(ri, rj), gen_bracket[a][b]);
          v = add(v, r_times(d, R.product(ri, anchor_of(a, rj)), generator(d, b)), f);
          v = vec_sub(v, r_times(d, R.product(rj, anchor_of(b, ri)), generator(d, a)), f);
          d.bracket.set_col(z * l + d.lindex(b, j), v);
        }
    }
  return d;
}

Report check_lie_rinehart(const LieRinehartData& d) {
  Report rep("Lie-Rinehart " + d.name);
  const FieldSpec& f = d.R.field;
  int r = d.R.dim, l = d.ldim();
  rep.record("k contains Q", f.characteristic() == 0);
  rep.record("R commutative", d.R.is_commutative());
  auto br = [&](const Vec& x, const Vec& y) { return bilinear(d.bracket, l, x, y, f); };
  auto anc = [&](const Vec& z, const Vec& x) { return bilinear(d.anchor, r, z, x, f); };
  auto nab = [&](const Vec& z, const Vec& x) { return bilinear(d.nabla, r, z, x, f); };
  auto act = [&](const Vec& x, const Vec& z) { return bilinear(d.act, l, x, z, f); };
  auto mulR = [&](const Vec& x, const Vec& y) { return d.R.product(x, y); };
  auto check = [&](const std::string& axiom, std::vector<int> w, const Vec& lhs, const Vec& rhs) {
    if (lhs != rhs) {
      if (!rep.find(axiom) || rep.find(axiom)->passed) rep.fail(axiom, std::move(w));
    }
  };
  std::vector<std::string> axioms{"antisymmetry", "Jacobi", "anchor derivation", "anchor Lie map", "anchor R-linear",
                                  "Leibniz", "R-module", "connection nabla_Z(r'r) = r' nabla_Z(r) - Z(r')r",
                                  "connection nabla_{r'Z}(r) = r' nabla_Z(r) - Z(r')r", "flatness"};
  for (int x = 0; x < l; ++x)
    for (int y = 0; y < l; ++y) {
      Vec X = unit_vec(x), Y = unit_vec(y);
      check("antisymmetry", {x, y}, br(X, Y), scaled(br(Y, X), Scalar(-1), f));
      for (int z = 0; z < l; ++z) {
        Vec Z = unit_vec(z);
        Vec j = add(add(br(X, br(Y, Z)), br(Y, br(Z, X)), f), br(Z, br(X, Y)), f);
        check("Jacobi", {x, y, z}, j, Vec());
      }
      for (int s = 0; s < r; ++s) {
        Vec S = unit_vec(s);
        check("anchor Lie map", {x, y, s}, anc(br(X, Y), S), vec_sub(anc(X, anc(Y, S)), anc(Y, anc(X, S)), f));
        check("Leibniz", {x, y, s}, br(X, act(S, Y)), add(act(S, br(X, Y)), act(anc(X, S), Y), f));
        check("flatness", {x, y, s}, vec_sub(nab(X, nab(Y, S)), nab(Y, nab(X, S)), f), nab(br(Y, X), S));
      }
    }
  for (int x = 0; x < l; ++x)
    for (int s = 0; s < r; ++s)
      for (int u = 0; u < r; ++u) {
        Vec X = unit_vec(x), S = unit_vec(s), U = unit_vec(u);
        check("anchor derivation", {x, s, u}, anc(X, mulR(S, U)), add(mulR(anc(X, S), U), mulR(S, anc(X, U)), f));
        check("anchor R-linear", {s, x, u}, anc(act(S, X), U), mulR(S, anc(X, U)));
        check("R-module", {s, u, x}, act(mulR(S, U), X), act(S, act(U, X)));
        // nabla_Z(r'r) with r' = S, r = U
        Vec rhs = vec_sub(mulR(S, nab(X, U)), mulR(anc(X, S), U), f);
        check("connection nabla_Z(r'r) = r' nabla_Z(r) - Z(r')r", {x, s, u}, nab(X, mulR(S, U)), rhs);
        check("connection nabla_{r'Z}(r) = r' nabla_Z(r) - Z(r')r", {x, s, u}, nab(act(S, X), U), rhs);
      }
  for (int x = 0; x < l; ++x) check("R-module", {x}, act(d.R.unit, unit_vec(x)), unit_vec(x));
  for (auto& a : axioms)
    if (!rep.find(a)) rep.pass(a);
  return rep;
}

int WedgeBasis::index(int n, int r, const std::vector<int>& s) const {
  const auto& subs = subsets[n];
  int k = int(std::lower_bound(subs.begin(), subs.end(), s) - subs.begin());
  return r * int(subs.size()) + k;
}

WedgeBasis wedge_basis(const LieRinehartData& d, int top) {
  WedgeBasis wb;
  wb.m = d.m;
  wb.rdim = d.R.dim;
  wb.subsets.resize(top + 1);
  for (int n = 0; n <= top; ++n) {
    std::vector<bool> pick(d.m, false);
    if (n > d.m) continue;
    std::fill(pick.begin(), pick.begin() + n, true);
    do {
      std::vector<int> s;
      for (int a = 0; a < d.m; ++a)
        if (pick[a]) s.push_back(a);
      wb.subsets[n].push_back(s);
    } while (std::prev_permutation(pick.begin(), pick.end()));
    std::sort(wb.subsets[n].begin(), wb.subsets[n].end());
  }
  return wb;
}

Vec wedge_of(const LieRinehartData& d, const WedgeBasis& wb, const std::vector<Vec>& elems) {
  const FieldSpec& f = d.R.field;
  int n = int(elems.size());
  Accumulator acc(wb.dim(n));
  std::vector<int> gens(n);
  std::function<void(int, const Vec&, const Scalar&)> rec = [&](int k, const Vec& coef, const Scalar& c) {
    if (k == n) {
      std::vector<int> s = gens;
      int inv = 0;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          if (s[i] == s[j]) return;
          if (s[i] > s[j]) ++inv;
        }
      std::sort(s.begin(), s.end());
      Scalar sc = inv % 2 ? -c : c;
      for (auto& [i, v] : coef) acc.add(wb.index(n, i, s), sc * v, f);
      return;
    }
    for (auto& [li, v] : elems[k]) {
      gens[k] = li / d.R.dim;
      rec(k + 1, d.R.product(coef, unit_vec(li % d.R.dim)), c * v);
    }
  };
  rec(0, d.R.unit, Scalar(1));
  return acc.take();
}

namespace {

Vec r_times_wedge(const LieRinehartData& d, const WedgeBasis& wb, int n, const Vec& r, const Vec& w) {
  const FieldSpec& f = d.R.field;
  int c = int(wb.subsets[n].size());
  Accumulator acc(wb.dim(n));
  for (auto& [idx, v] : w)
    for (auto& [k, v2] : d.R.product(r, unit_vec(idx / c))) acc.add(k * c + idx % c, v * v2, f);
  return acc.take();
}

Vec boundary_of(const LieRinehartData& d, const WedgeBasis& wb, const std::vector<Vec>& z) {
  const FieldSpec& f = d.R.field;
  int n = int(z.size()), r = d.R.dim, l = d.ldim();
  Vec out;
  for (int k = 0; k < n; ++k) {
    std::vector<Vec> rest;
    for (int i = 0; i < n; ++i)
      if (i != k) rest.push_back(z[i]);
    Vec nab1 = bilinear(d.nabla, r, z[k], d.R.unit, f);
    Vec term = r_times_wedge(d, wb, n - 1, nab1, wedge_of(d, wb, rest));
    out = k % 2 ? vec_sub(out, term, f) : add(out, term, f);
  }
  for (int k = 0; k < n; ++k)
    for (int j = k + 1; j < n; ++j) {
      std::vector<Vec> rest{bilinear(d.bracket, l, z[k], z[j], f)};
      for (int i = 0; i < n; ++i)
        if (i != k && i != j) rest.push_back(z[i]);
      Vec term = wedge_of(d, wb, rest);
      out = (k + j) % 2 ? vec_sub(out, term, f) : add(out, term, f);
    }
  return out;
}

// basis element (r_i, S) as a tuple with r_i placed in slot `slot`
std::vector<Vec> tuple_of(const LieRinehartData& d, int ri, const std::vector<int>& s, int slot) {
  std::vector<Vec> z;
  for (int k = 0; k < int(s.size()); ++k)
    z.push_back(k == slot ? unit_vec(d.lindex(s[k], ri)) : generator(d, s[k]));
  return z;
}

}  // namespace

Complex lr_complex(const LieRinehartData& d, int top) {
  const FieldSpec& f = d.R.field;
  WedgeBasis wb = wedge_basis(d, top);
  Complex c;
  c.field = f;
  c.top = top;
  for (int n = 0; n <= top; ++n) c.dims.push_back(wb.dim(n));
  c.diff.push_back(Matrix(f, 0, c.dims[0]));
  for (int n = 1; n <= top; ++n) {
    Matrix m(f, c.dims[n - 1], c.dims[n]);
    int cnt = int(wb.subsets[n].size());
    for (int i = 0; i < d.R.dim; ++i)
      for (int k = 0; k < cnt; ++k) m.set_col(i * cnt + k, boundary_of(d, wb, tuple_of(d, i, wb.subsets[n][k], 0)));
    c.diff.push_back(m);
  }
  return c;
}

HomologyReport lr_homology(const LieRinehartData& d, int top) {
  return homology(lr_complex(d, top), Theory::HH, d.name);
}

Report check_lr_balanced(const LieRinehartData& d, int top) {
  Report rep("balanced boundary " + d.name);
  WedgeBasis wb = wedge_basis(d, top);
  Complex c = lr_complex(d, top);
  for (int n = 2; n <= top; ++n) {
    int cnt = int(wb.subsets[n].size());
    for (int slot = 1; slot < n; ++slot) {
      Matrix m(d.R.field, c.dims[n - 1], c.dims[n]);
      for (int i = 0; i < d.R.dim; ++i)
        for (int k = 0; k < cnt; ++k)
          m.set_col(i * cnt + k, boundary_of(d, wb, tuple_of(d, i, wb.subsets[n][k], slot)));
      rep.expect_equal("r in slot " + std::to_string(slot) + " n=" + std::to_string(n), m, c.diff[n]);
    }
    rep.expect_equal("d d = 0 n=" + std::to_string(n), c.diff[n - 1] * c.diff[n], Matrix(d.R.field, c.dims[n - 2], c.dims[n]));
  }
  return rep;
}

Report check_lr_measuring(const LrMeasuringData& m) {
  if (!is_cocommutative(m.C)) throw NotCocommutative(m.C.name + " is not cocommutative");
  const LieRinehartData& d = *m.src;
  const LieRinehartData& d2 = *m.dst;
  Report rep("Lie-Rinehart measuring " + m.name);
  rep.merge(check_sweedler_measuring(m.C, d.R, d2.R, m.psi), "(a) ");
  for (int x = 0; x < m.C.dim; ++x) {
    std::string tag = "[" + std::to_string(x) + "]";
    TensorShape ll({d.ldim(), d.ldim()}), lr({d.ldim(), d.R.dim}), rl({d.R.dim, d.ldim()});
    rep.expect_equal("(b) x[Z1, Z2] = [x(1)Z1, x(2)Z2]" + tag, m.Psi[x] * d.bracket,
                     d2.bracket * sweedler_pair(m.C, x, m.Psi, m.Psi), ll);
    rep.expect_equal("(c) x(Z(r)) = x(1)(Z)(x(2)(r))" + tag, m.psi[x] * d.anchor,
                     d2.anchor * sweedler_pair(m.C, x, m.Psi, m.psi), lr);
    rep.expect_equal("(c) x(nabla_Z(r)) = nabla_{x(1)Z}(x(2)r)" + tag, m.psi[x] * d.nabla,
                     d2.nabla * sweedler_pair(m.C, x, m.Psi, m.psi), lr);
    rep.expect_equal("(c) x(rZ) = x(1)(r) x(2)(Z)" + tag, m.Psi[x] * d.act,
                     d2.act * sweedler_pair(m.C, x, m.psi, m.Psi), rl);
  }
  return rep;
}

InducedMap induced_lr_chain_map(const LrMeasuringData& m, const Vec& x, int top, bool strict) {
  const LieRinehartData& d = *m.src;
  const LieRinehartData& d2 = *m.dst;
  const FieldSpec& f = d.R.field;
  WedgeBasis wb = wedge_basis(d, top), wb2 = wedge_basis(d2, top);
  InducedMap im;
  im.label = m.name;
  for (int n = 0; n <= top; ++n) {
    if (n == 0) {
      Matrix p(f, d2.R.dim, d.R.dim);
      for (auto& [k, c] : x) p = p + m.psi[k].scaled(c);
      im.maps.push_back(p);
      continue;
    }
    Matrix it = iterated(m.C.comul, m.C.counit, m.C.dim, n);
    TensorShape sh = TensorShape::power(m.C.dim, n);
    Matrix out(f, wb2.dim(n), wb.dim(n));
    int cnt = int(wb.subsets[n].size());
    for (int i = 0; i < d.R.dim; ++i)
      for (int k = 0; k < cnt; ++k) {
        std::vector<Vec> z = tuple_of(d, i, wb.subsets[n][k], 0);
        Accumulator acc(wb2.dim(n));
        for (auto& [xk, xc] : x)
          for (const Term& t : terms(it.col(xk), sh)) {
            std::vector<Vec> imgs;
            for (int s = 0; s < n; ++s) imgs.push_back(m.Psi[t.idx[s]].apply(z[s]));
            acc.add_vec(wedge_of(d2, wb2, imgs), xc * t.c, f);
          }
        out.set_col(i * cnt + k, acc.take());
      }
    im.maps.push_back(out);
  }
  Complex c = lr_complex(d, top), c2 = lr_complex(d2, top);
  im.certificate = Report("chain map " + m.name);
  for (int n = 1; n <= top; ++n)
    im.certificate.expect_equal("d' f = f d n=" + std::to_string(n), c2.diff[n] * im.maps[n],
                                im.maps[n - 1] * c.diff[n]);
  if (strict && !im.certificate.passed()) throw CertificateFailure(m.name + ": induced map is not a chain map");
  return im;
}

Matrix semidirect_bracket(const LieRinehartData& d) {
  const FieldSpec& f = d.R.field;
  int r = d.R.dim, l = d.ldim(), n = r + l;
  Matrix out(f, n, n * n);
  auto split = [&](int i) { return i < r ? std::pair<Vec, Vec>{unit_vec(i), {}} : std::pair<Vec, Vec>{{}, unit_vec(i - r)}; };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto [r1, z1] = split(i);
      auto [r2, z2] = split(j);
      Vec rp = vec_sub(bilinear(d.anchor, r, z1, r2, f), bilinear(d.anchor, r, z2, r1, f), f);
      Vec zp = bilinear(d.bracket, l, z1, z2, f);
      Vec v = rp;
      for (auto& [k, c] : zp) v.emplace_back(r + k, c);
      out.set_col(i * n + j, v);
    }
  return out;
}

namespace gallery {

namespace {

AlgebraData ground(FieldSpec f) { return AlgebraData::from_table("k", f, 1, {{0, 0, 0, 1}}, unit_vec(0)); }

std::vector<std::vector<Vec>> zero_brackets(int m) { return std::vector<std::vector<Vec>>(m, std::vector<Vec>(m)); }

std::vector<Matrix> zero_anchors(FieldSpec f, int m, int r) { return std::vector<Matrix>(m, Matrix(f, r, r)); }

}  // namespace

std::shared_ptr<const LieRinehartData> abelian_lr(FieldSpec f, int m) {
  return std::make_shared<LieRinehartData>(free_lie_rinehart("abelian" + std::to_string(m), ground(f), m,
                                                             zero_brackets(m), zero_anchors(f, m, 1),
                                                             std::vector<Vec>(m)));
}

std::shared_ptr<const LieRinehartData> affine_lr(FieldSpec f) {
  auto br = zero_brackets(2);
  br[0][1] = unit_vec(1);
  br[1][0] = Vec{{1, Scalar(-1)}};
  return std::make_shared<LieRinehartData>(
      free_lie_rinehart("aff", ground(f), 2, br, zero_anchors(f, 2, 1), std::vector<Vec>(2)));
}

std::shared_ptr<const LieRinehartData> sl2_lr(FieldSpec f) {
  auto br = zero_brackets(3);
  br[0][1] = Vec{{1, Scalar(2)}};
  br[1][0] = Vec{{1, Scalar(-2)}};
  br[0][2] = Vec{{2, Scalar(-2)}};
  br[2][0] = Vec{{2, Scalar(2)}};
  br[1][2] = Vec{{0, Scalar(1)}};
  br[2][1] = Vec{{0, Scalar(-1)}};
  return std::make_shared<LieRinehartData>(
      free_lie_rinehart("sl2", ground(f), 3, br, zero_anchors(f, 3, 1), std::vector<Vec>(3)));
}

std::shared_ptr<const LieRinehartData> euler_lr(FieldSpec f) {
  AlgebraData R = dual_numbers(f);
  return std::make_shared<LieRinehartData>(
      free_lie_rinehart("euler", R, 1, zero_brackets(1), {euler_derivation(f)}, std::vector<Vec>(1)));
}

LrMeasuringData identity_lr_measuring(std::shared_ptr<const LieRinehartData> d) {
  FieldSpec f = d->R.field;
  LrMeasuringData m;
  m.name = "id";
  m.C = CoalgebraData::grouplike(f);
  m.src = m.dst = d;
  m.Psi = {Matrix::identity(f, d->ldim())};
  m.psi = {Matrix::identity(f, d->R.dim)};
  return m;
}

namespace {

LrMeasuringData affine_with(FieldSpec f, const Vec& df) {
  LrMeasuringData m;
  m.C = CoalgebraData::grouplike_primitive(f);
  m.src = m.dst = affine_lr(f);
  Matrix D(f, 2, 2);
  D.set_col(1, df);
  m.Psi = {Matrix::identity(f, 2), D};
  m.psi = {Matrix::identity(f, 1), Matrix(f, 1, 1)};
  return m;
}

}  // namespace

LrMeasuringData affine_derivation(FieldSpec f) {
  LrMeasuringData m = affine_with(f, unit_vec(1));
  m.name = "aff-derivation";
  return m;
}

LrMeasuringData affine_derivation_broken(FieldSpec f) {
  LrMeasuringData m = affine_with(f, unit_vec(0));
  m.name = "aff-derivation-broken";
  return m;
}

LrMeasuringData euler_lr_measuring(FieldSpec f) {
  LrMeasuringData m;
  m.name = "euler";
  m.C = CoalgebraData::grouplike_primitive(f);
  m.src = m.dst = euler_lr(f);
  Matrix D = euler_derivation(f);
  m.Psi = {Matrix::identity(f, 2), D};
  m.psi = {Matrix::identity(f, 2), D};
  return m;
}

}  // namespace gallery

}  // namespace hcyc
