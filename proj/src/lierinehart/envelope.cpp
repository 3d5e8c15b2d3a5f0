#include "hcyc/lierinehart/lie_rinehart.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace hcyc {

namespace {

struct Tok {
  bool is_r;
  int idx;
};

void all_words(int m, int W, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  out.push_back(cur);
  if (int(cur.size()) == W) return;
  for (int a = cur.empty() ? 0 : cur.back(); a < m; ++a) {
    cur.push_back(a);
    all_words(m, W, cur, out);
    cur.pop_back();
  }
}

Vec bilinear(const Matrix& m, int rdim, const Vec& x, const Vec& y, const FieldSpec& f) {
  Accumulator acc(m.rows());
  for (auto& [i, c] : x)
    for (auto& [j, c2] : y) acc.add_vec(m.col(i * rdim + j), c * c2, f);
  return acc.take();
}

}  // namespace

TruncatedEnvelope::TruncatedEnvelope(std::shared_ptr<const LieRinehartData> d, int W) : d_(std::move(d)), W_(W) {
  std::vector<int> cur;
  all_words(d_->m, W, cur, words_);
  std::sort(words_.begin(), words_.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  for (int i = 0; i < int(words_.size()); ++i) lookup_[words_[i]] = i;
}

int TruncatedEnvelope::word_index(const std::vector<int>& w) const {
  auto it = lookup_.find(w);
  if (it == lookup_.end()) throw CutoffExceeded("word of length " + std::to_string(w.size()) + " above cutoff");
  return it->second;
}

Vec TruncatedEnvelope::from_r(const Vec& r) const {
  Vec out;
  for (auto& [k, c] : r) out.emplace_back(index(k, 0), c);
  return out;
}

Vec TruncatedEnvelope::unit() const { return from_r(d_->R.unit); }

Vec TruncatedEnvelope::from_l(const Vec& z) const {
  const FieldSpec& f = d_->R.field;
  Accumulator acc(dim());
  for (auto& [li, c] : z) acc.add(index(li % d_->R.dim, word_index({li / d_->R.dim})), c, f);
  return acc.take();
}

Vec TruncatedEnvelope::mul(const Vec& u, const Vec& v) const {
  const LieRinehartData& d = *d_;
  const FieldSpec& f = d.R.field;
  int rd = d.R.dim;
  Accumulator acc(dim());
  std::function<void(std::vector<Tok>, Scalar)> reduce = [&](std::vector<Tok> t, Scalar c) {
    for (int p = 0; p + 1 < int(t.size()); ++p) {
      Tok a = t[p], b = t[p + 1];
      if (a.is_r && b.is_r) {
        for (auto& [k, c2] : d.R.product(unit_vec(a.idx), unit_vec(b.idx))) {
          std::vector<Tok> s = t;
          s[p] = {true, k};
          s.erase(s.begin() + p + 1);
          reduce(s, c * c2);
        }
        return;
      }
      if (!a.is_r && b.is_r) {
        // Z r = r Z + Z(r)
        std::vector<Tok> s = t;
        std::swap(s[p], s[p + 1]);
        reduce(s, c);
        Vec gen;
        for (auto& [k, c2] : d.R.unit) gen.emplace_back(d.lindex(a.idx, k), c2);
        for (auto& [k, c2] : bilinear(d.anchor, rd, gen, unit_vec(b.idx), f)) {
          std::vector<Tok> s2 = t;
          s2[p] = {true, k};
          s2.erase(s2.begin() + p + 1);
          reduce(s2, c * c2);
        }
        return;
      }
      if (!a.is_r && !b.is_r && a.idx > b.idx) {
        // Z_a Z_b = Z_b Z_a + [Z_a, Z_b]
        std::vector<Tok> s = t;
        std::swap(s[p], s[p + 1]);
        reduce(s, c);
        Vec ga, gb;
        for (auto& [k, c2] : d.R.unit) {
          ga.emplace_back(d.lindex(a.idx, k), c2);
          gb.emplace_back(d.lindex(b.idx, k), c2);
        }
        std::sort(ga.begin(), ga.end());
        std::sort(gb.begin(), gb.end());
        for (auto& [li, c2] : bilinear(d.bracket, d.ldim(), ga, gb, f)) {
          std::vector<Tok> s2 = t;
          s2[p] = {true, li % rd};
          s2[p + 1] = {false, li / rd};
          reduce(s2, c * c2);
        }
        return;
      }
    }
    std::vector<int> w;
    for (auto& tk : t)
      if (!tk.is_r) w.push_back(tk.idx);
    int wi = word_index(w);
    if (!t.empty() && t[0].is_r)
      acc.add(index(t[0].idx, wi), c, f);
    else
      for (auto& [k, c2] : d.R.unit) acc.add(index(k, wi), c * c2, f);
  };
  auto tokens = [&](int basis) {
    std::vector<Tok> t{{true, basis % rd}};
    for (int a : words_[basis / rd]) t.push_back({false, a});
    return t;
  };
  for (auto& [i, c] : u)
    for (auto& [j, c2] : v) {
      std::vector<Tok> t = tokens(i), t2 = tokens(j);
      if (int(words_[i / rd].size() + words_[j / rd].size()) > W_)
        throw CutoffExceeded("product of degree " + std::to_string(words_[i / rd].size() + words_[j / rd].size()) +
                             " above cutoff " + std::to_string(W_));
      t.insert(t.end(), t2.begin(), t2.end());
      reduce(t, c * c2);
    }
  return acc.take();
}

Matrix TruncatedEnvelope::s() const {
  Matrix out(d_->R.field, dim(), d_->R.dim);
  for (int i = 0; i < d_->R.dim; ++i) out.set_col(i, from_r(unit_vec(i)));
  return out;
}

Matrix TruncatedEnvelope::eps() const {
  Matrix out(d_->R.field, d_->R.dim, dim());
  for (int i = 0; i < d_->R.dim; ++i) out.set_col(index(i, 0), unit_vec(i));
  return out;
}

Matrix TruncatedEnvelope::delta_on_generators() const {
  const FieldSpec& f = d_->R.field;
  int n = dim(), rd = d_->R.dim;
  Vec one = unit();
  auto kron = [&](const Vec& x, const Vec& y) {
    Accumulator acc(n * n);
    for (auto& [i, c] : x)
      for (auto& [j, c2] : y) acc.add(i * n + j, c * c2, f);
    return acc.take();
  };
  Matrix out(f, n * n, rd + d_->ldim());
  for (int i = 0; i < rd; ++i) out.set_col(i, kron(from_r(unit_vec(i)), one));
  for (int z = 0; z < d_->ldim(); ++z) {
    Vec lz = from_l(unit_vec(z));
    Vec ri = from_r(unit_vec(z % rd));
    Vec za;
    for (auto& [k, c] : d_->R.unit) za.emplace_back(index(k, word_index({z / rd})), c);
    std::sort(za.begin(), za.end());
    Vec v = kron(lz, one);
    axpy(v, Scalar(1), kron(ri, za), f);
    out.set_col(rd + z, v);
  }
  return out;
}

namespace {

// x acting on V on basis r_i Z_{a_1} ... Z_{a_k}: x(0)(r_i) x(1)(Z_{a_1}) ... x(k)(Z_{a_k})
std::vector<Matrix> envelope_maps(const LrMeasuringData& m, const TruncatedEnvelope& v, const TruncatedEnvelope& v2) {
  const LieRinehartData& d = v.lr();
  const FieldSpec& f = d.R.field;
  int rd = d.R.dim;
  int W = v.cutoff();
  std::vector<Matrix> its;
  for (int k = 0; k <= W; ++k) its.push_back(iterated(m.C.comul, m.C.counit, m.C.dim, k + 1));
  std::vector<Matrix> out;
  for (int x = 0; x < m.C.dim; ++x) {
    Matrix mx(f, v2.dim(), v.dim());
    for (int b = 0; b < v.dim(); ++b) {
      const std::vector<int>& w = v.word(b / rd);
      int k = int(w.size());
      Accumulator acc(v2.dim());
      for (const Term& t : terms(its[k].col(x), TensorShape::power(m.C.dim, k + 1))) {
        Vec cur = v2.from_r(m.psi[t.idx[0]].apply(unit_vec(b % rd)));
        for (int s = 0; s < k; ++s) {
          Vec g;
          for (auto& [kk, c] : d.R.unit) g.emplace_back(d.lindex(w[s], kk), c);
          std::sort(g.begin(), g.end());
          cur = v2.mul(cur, v2.from_l(m.Psi[t.idx[s + 1]].apply(g)));
        }
        acc.add_vec(cur, t.c, f);
      }
      mx.set_col(b, acc.take());
    }
    out.push_back(mx);
  }
  return out;
}

// r . u for the right V-module R, r . Z = nabla_Z(r)
Vec right_action(const TruncatedEnvelope& v, const Vec& r, int basis) {
  const LieRinehartData& d = v.lr();
  const FieldSpec& f = d.R.field;
  int rd = d.R.dim;
  Vec cur = d.R.product(r, unit_vec(basis % rd));
  for (int a : v.word(basis / rd)) {
    Vec g;
    for (auto& [k, c] : d.R.unit) g.emplace_back(d.lindex(a, k), c);
    std::sort(g.begin(), g.end());
    cur = bilinear(d.nabla, rd, g, cur, f);
  }
  return cur;
}

}  // namespace

EnvelopeMeasuringReport envelope_measuring(const LrMeasuringData& m, const TruncatedEnvelope& v,
                                           const TruncatedEnvelope& v2) {
  const LieRinehartData& d = v.lr();
  const LieRinehartData& d2 = v2.lr();
  const FieldSpec& f = d.R.field;
  int rd = d.R.dim, rd2 = d2.R.dim;
  EnvelopeMeasuringReport out;
  out.maps = envelope_maps(m, v, v2);
  Report& rep = out.report;
  rep = Report("envelope measuring " + m.name + " W=" + std::to_string(v.cutoff()));
  auto image = [&](int x, const Vec& u) { return out.maps[x].apply(u); };
  auto first_fail = [&](const std::string& axiom, std::vector<int> w) {
    if (!rep.find(axiom)) rep.fail(axiom, std::move(w));
  };
  const std::string unit_ax = "x(1) = eps(x) 1", mul_ax = "x(uv) = x(1)(u) x(2)(v)";
  const std::string ideal_ax = "x(r1 r2 + r1 Z) = x(1)(r1) x(2)(r2 + Z)", rmod_ax = "R is a right V-module",
                    lem_ax = "x(r . u) = x(1)(r) . x(2)(u)";
  Matrix c1 = iterated(m.C.comul, m.C.counit, m.C.dim, 2);
  TensorShape cc = TensorShape::power(m.C.dim, 2);
  int skipped = 0;
  for (int x = 0; x < m.C.dim; ++x) {
    Vec e = scaled(v2.unit(), m.C.counit.at(0, x), f);
    if (image(x, v.unit()) != e) first_fail(unit_ax, {x});
    auto terms_x = terms(c1.col(x), cc);
    for (int a = 0; a < v.dim(); ++a)
      for (int b = 0; b < v.dim(); ++b) {
        if (v.degree(a) + v.degree(b) > v.cutoff()) {
          ++skipped;
          continue;
        }
        Vec lhs = image(x, v.mul(unit_vec(a), unit_vec(b)));
        Accumulator acc(v2.dim());
        for (const Term& t : terms_x) acc.add_vec(v2.mul(image(t.idx[0], unit_vec(a)), image(t.idx[1], unit_vec(b))), t.c, f);
        if (lhs != acc.take()) first_fail(mul_ax, {x, a, b});
      }
    // ideal: r1 in R, (r2, Z) in R + L
    for (int r1 = 0; r1 < rd; ++r1)
      for (int j = 0; j < rd + d.ldim(); ++j) {
        Vec u = j < rd ? v.from_r(d.R.product(unit_vec(r1), unit_vec(j)))
                       : v.from_l(bilinear(d.act, d.ldim(), unit_vec(r1), unit_vec(j - rd), f));
        Vec lhs = image(x, u);
        Accumulator acc(v2.dim());
        for (const Term& t : terms_x) {
          Vec left = v2.from_r(m.psi[t.idx[0]].apply(unit_vec(r1)));
          Vec right = j < rd ? v2.from_r(m.psi[t.idx[1]].apply(unit_vec(j)))
                             : v2.from_l(m.Psi[t.idx[1]].apply(unit_vec(j - rd)));
          acc.add_vec(v2.mul(left, right), t.c, f);
        }
        if (lhs != acc.take()) first_fail(ideal_ax, {x, r1, j});
      }
    // comodule measuring for the right V-module R
    for (int r = 0; r < rd; ++r)
      for (int b = 0; b < v.dim(); ++b) {
        Vec lhs = m.psi[x].apply(right_action(v, unit_vec(r), b));
        Accumulator acc(rd2);
        for (const Term& t : terms_x)
          for (auto& [bb, c] : image(t.idx[1], unit_vec(b)))
            acc.add_vec(right_action(v2, m.psi[t.idx[0]].apply(unit_vec(r)), bb), t.c * c, f);
        if (lhs != acc.take()) first_fail(lem_ax, {x, r, b});
      }
    // coaction r -> 1 (x) r: x(1)(1) (x) x(2)(r) = 1 (x) x(r)
    for (int r = 0; r < rd; ++r) {
      Accumulator acc(v2.dim() * rd2);
      for (const Term& t : terms_x)
        for (auto& [i, c] : image(t.idx[0], v.unit()))
          for (auto& [j, c2] : m.psi[t.idx[1]].apply(unit_vec(r))) acc.add(i * rd2 + j, t.c * c * c2, f);
      Accumulator acc2(v2.dim() * rd2);
      for (auto& [i, c] : v2.unit())
        for (auto& [j, c2] : m.psi[x].apply(unit_vec(r))) acc2.add(i * rd2 + j, c * c2, f);
      if (acc.take() != acc2.take()) first_fail("x(1)(1) (x) x(2)(r) = 1 (x) x(r)", {x, r});
    }
  }
  if (!rep.find(unit_ax)) rep.pass(unit_ax);
  if (!rep.find(mul_ax)) rep.pass(mul_ax);
  if (skipped) rep.unchecked(mul_ax + " above cutoff", std::to_string(skipped) + " pairs above cutoff");
  if (!rep.find(ideal_ax)) rep.pass(ideal_ax);
  if (!rep.find(lem_ax)) rep.pass(lem_ax);
  if (!rep.find("x(1)(1) (x) x(2)(r) = 1 (x) x(r)")) rep.pass("x(1)(1) (x) x(2)(r) = 1 (x) x(r)");
  // right module: r . (u v) = (r . u) . v
  bool rmod = true;
  for (int r = 0; r < rd && rmod; ++r)
    for (int a = 0; a < v.dim() && rmod; ++a)
      for (int b = 0; b < v.dim() && rmod; ++b) {
        if (v.degree(a) + v.degree(b) > v.cutoff()) continue;
        Vec lhs;
        for (auto& [k, c] : v.mul(unit_vec(a), unit_vec(b))) axpy(lhs, c, right_action(v, unit_vec(r), k), f);
        Vec rhs;
        for (auto& [k, c] : right_action(v, unit_vec(r), a)) axpy(rhs, c, right_action(v, unit_vec(k), b), f);
        if (lhs != rhs) {
          rep.fail(rmod_ax, {r, a, b});
          rmod = false;
        }
      }
  if (rmod) rep.pass(rmod_ax);
  // R + L bracket compatibility
  int sd = rd + d.ldim(), sd2 = rd2 + d2.ldim();
  std::vector<Matrix> sums;
  for (int x = 0; x < m.C.dim; ++x) {
    Matrix s(f, sd2, sd);
    for (int i = 0; i < rd; ++i) s.set_col(i, m.psi[x].col(i));
    for (int z = 0; z < d.ldim(); ++z) {
      Vec c;
      for (auto& [k, v0] : m.Psi[x].col(z)) c.emplace_back(rd2 + k, v0);
      s.set_col(rd + z, c);
    }
    sums.push_back(s);
  }
  Matrix sb = semidirect_bracket(d), sb2 = semidirect_bracket(d2);
  for (int x = 0; x < m.C.dim; ++x)
    rep.expect_equal("x[a, b] = [x(1)a, x(2)b] on R + L [" + std::to_string(x) + "]", sums[x] * sb,
                     sb2 * sweedler_pair(m.C, x, sums, sums), TensorShape({sd, sd}));
  return out;
}

Matrix alt_map(const TruncatedEnvelope& v, const WedgeBasis& wb, int n) {
  const LieRinehartData& d = v.lr();
  const FieldSpec& f = d.R.field;
  f.require_char_zero("Alt_n");
  int wc = v.word_count(), rd = d.R.dim;
  int tuples = 1;
  for (int i = 0; i < n; ++i) tuples *= wc;
  Scalar fact(1);
  for (int i = 2; i <= n; ++i) fact *= i;
  Scalar inv = Scalar(1) / fact;
  int cnt = int(wb.subsets[n].size());
  Matrix out(f, rd * tuples, wb.dim(n));
  for (int i = 0; i < rd; ++i)
    for (int k = 0; k < cnt; ++k) {
      std::vector<int> s = wb.subsets[n][k];
      std::vector<int> p(n);
      std::iota(p.begin(), p.end(), 0);
      Accumulator acc(rd * tuples);
      do {
        int inv_count = 0;
        for (int a = 0; a < n; ++a)
          for (int b = a + 1; b < n; ++b)
            if (p[a] > p[b]) ++inv_count;
        int code = 0;
        for (int a = 0; a < n; ++a) code = code * wc + v.word_index({s[p[a]]});
        acc.add(i * tuples + code, inv_count % 2 ? -inv : inv, f);
      } while (std::next_permutation(p.begin(), p.end()));
      out.set_col(i * cnt + k, acc.take());
    }
  return out;
}

Report check_alt_intertwines(const LrMeasuringData& m, const TruncatedEnvelope& v, const TruncatedEnvelope& v2,
                             const Vec& x, int n) {
  const LieRinehartData& d = v.lr();
  const LieRinehartData& d2 = v2.lr();
  const FieldSpec& f = d.R.field;
  Report rep("Alt intertwining " + m.name + " n=" + std::to_string(n));
  WedgeBasis wb = wedge_basis(d, n), wb2 = wedge_basis(d2, n);
  InducedMap im = induced_lr_chain_map(m, x, n, false);
  Matrix a = alt_map(v, wb, n), a2 = alt_map(v2, wb2, n);
  std::vector<Matrix> maps = envelope_maps(m, v, v2);
  int wc = v.word_count(), wc2 = v2.word_count(), rd2 = d2.R.dim;
  int tuples = 1, tuples2 = 1;
  for (int i = 0; i < n; ++i) tuples *= wc, tuples2 *= wc2;
  Matrix it = iterated(m.C.comul, m.C.counit, m.C.dim, n);
  TensorShape sh = TensorShape::power(m.C.dim, n);
  // x on V^{(x)_R n}, only on the columns that Alt_n reaches
  auto on_tensor = [&](const Vec& u) {
    Accumulator acc(rd2 * tuples2);
    for (auto& [col, cu] : u) {
      int ri = col / tuples, code = col % tuples;
      std::vector<int> ws(n);
      for (int s = n - 1; s >= 0; --s) ws[s] = code % wc, code /= wc;
      for (auto& [xk, xc] : x)
        for (const Term& t : terms(it.col(xk), sh)) {
          // slot images, R-coefficients collected to the front
          std::vector<std::pair<Vec, int>> partial{{d2.R.unit, 0}};
          std::vector<Scalar> pc{Scalar(1)};
          for (int s = 0; s < n; ++s) {
            Vec src;
            if (s == 0)
              src = unit_vec(v.index(ri, ws[0]));
            else
              for (auto& [k, c] : d.R.unit) src.emplace_back(v.index(k, ws[s]), c);
            Vec img = maps[t.idx[s]].apply(src);
            std::vector<std::pair<Vec, int>> next;
            std::vector<Scalar> nc;
            for (size_t q = 0; q < partial.size(); ++q)
              for (auto& [b, c] : img) {
                next.push_back({d2.R.product(partial[q].first, unit_vec(b % rd2)), partial[q].second * wc2 + b / rd2});
                nc.push_back(pc[q] * c);
              }
            partial = std::move(next);
            pc = std::move(nc);
          }
          for (size_t q = 0; q < partial.size(); ++q)
            for (auto& [k, c] : partial[q].first) acc.add(k * tuples2 + partial[q].second, cu * xc * t.c * pc[q] * c, f);
        }
    }
    return acc.take();
  };
  Matrix lhs(f, rd2 * tuples2, wb.dim(n)), rhs = a2 * im.maps[n];
  for (int j = 0; j < wb.dim(n); ++j) lhs.set_col(j, on_tensor(a.col(j)));
  rep.expect_equal("x Alt_n = Alt_n x", lhs, rhs);
  return rep;
}

}  // namespace hcyc
