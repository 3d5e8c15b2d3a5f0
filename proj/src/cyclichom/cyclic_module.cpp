#include "hcyc/cyclichom/cyclic_module.hpp"

#include <algorithm>

namespace hcyc {

void CyclicModuleData::resize(int top_degree) {
  top = top_degree;
  spaces.resize(top + 1);
  face.assign(top + 1, {});
  degen.assign(top + 1, {});
  cyclic.assign(top + 1, Matrix());
  for (int n = 1; n <= top; ++n) face[n].resize(n + 1);
  for (int n = 0; n < top; ++n) degen[n].resize(n + 1);
}

namespace {

std::string tag(const std::string& s, int n, int i = -1, int j = -1) {
  std::string out = s + " n=" + std::to_string(n);
  if (i >= 0) out += " i=" + std::to_string(i);
  if (j >= 0) out += " j=" + std::to_string(j);
  return out;
}

Matrix power(const Matrix& t, int k) {
  Matrix r = Matrix::identity(t.field(), t.cols());
  for (int i = 0; i < k; ++i) r = t * r;
  return r;
}

}  // namespace

Report check_cyclic_module(const CyclicModuleData& m) {
  Report r((m.direction == Direction::Cyclic ? "cyclic module " : "cocyclic module ") + m.name);
  const auto& D = m.face;
  const auto& S = m.degen;
  const auto& T = m.cyclic;
  auto dom = [&](int n) { return TensorShape({m.dim(n)}); };
  auto id = [&](int n) { return Matrix::identity(m.field, m.dim(n)); };

  for (int n = 0; n <= m.top; ++n) r.expect_equal(tag("t^(n+1) = id", n), power(T[n], n + 1), id(n), dom(n));

  if (m.direction == Direction::Cyclic) {
    for (int n = 2; n <= m.top; ++n)
      for (int j = 1; j <= n; ++j)
        for (int i = 0; i < j; ++i)
          r.expect_equal(tag("d_i d_j = d_{j-1} d_i", n, i, j), D[n - 1][i] * D[n][j], D[n - 1][j - 1] * D[n][i],
                         dom(n));
    for (int n = 0; n + 2 <= m.top; ++n)
      for (int j = 0; j <= n; ++j)
        for (int i = 0; i <= j; ++i)
          r.expect_equal(tag("s_i s_j = s_{j+1} s_i", n, i, j), S[n + 1][i] * S[n][j], S[n + 1][j + 1] * S[n][i],
                         dom(n));
    for (int n = 0; n < m.top; ++n)
      for (int j = 0; j <= n; ++j)
        for (int i = 0; i <= n + 1; ++i) {
          Matrix lhs = D[n + 1][i] * S[n][j], rhs;
          if (i < j)
            rhs = S[n - 1][j - 1] * D[n][i];
          else if (i == j || i == j + 1)
            rhs = id(n);
          else
            rhs = S[n - 1][j] * D[n][i - 1];
          r.expect_equal(tag("d_i s_j", n, i, j), lhs, rhs, dom(n));
        }
    for (int n = 1; n <= m.top; ++n) {
      r.expect_equal(tag("d_0 t = d_n", n), D[n][0] * T[n], D[n][n], dom(n));
      for (int i = 1; i <= n; ++i)
        r.expect_equal(tag("d_i t = t d_{i-1}", n, i), D[n][i] * T[n], T[n - 1] * D[n][i - 1], dom(n));
    }
    for (int n = 0; n < m.top; ++n) {
      r.expect_equal(tag("s_0 t = t^2 s_n", n), S[n][0] * T[n], T[n + 1] * T[n + 1] * S[n][n], dom(n));
      for (int i = 1; i <= n; ++i)
        r.expect_equal(tag("s_i t = t s_{i-1}", n, i), S[n][i] * T[n], T[n + 1] * S[n][i - 1], dom(n));
    }
  } else {
    for (int n = 2; n <= m.top; ++n)
      for (int j = 1; j <= n; ++j)
        for (int i = 0; i < j; ++i)
          r.expect_equal(tag("delta_j delta_i = delta_i delta_{j-1}", n, i, j), D[n][j] * D[n - 1][i],
                         D[n][i] * D[n - 1][j - 1], dom(n - 2));
    for (int n = 0; n + 2 <= m.top; ++n)
      for (int j = 0; j <= n; ++j)
        for (int i = 0; i <= j; ++i)
          r.expect_equal(tag("sigma_j sigma_i = sigma_i sigma_{j+1}", n, i, j), S[n][j] * S[n + 1][i],
                         S[n][i] * S[n + 1][j + 1], dom(n + 2));
    for (int n = 0; n < m.top; ++n)
      for (int j = 0; j <= n; ++j)
        for (int i = 0; i <= n + 1; ++i) {
          Matrix lhs = S[n][j] * D[n + 1][i], rhs;
          if (i < j)
            rhs = D[n][i] * S[n - 1][j - 1];
          else if (i == j || i == j + 1)
            rhs = id(n);
          else
            rhs = D[n][i - 1] * S[n - 1][j];
          r.expect_equal(tag("sigma_j delta_i", n, i, j), lhs, rhs, dom(n));
        }
    for (int n = 1; n <= m.top; ++n) {
      r.expect_equal(tag("tau delta_0 = delta_n", n), T[n] * D[n][0], D[n][n], dom(n - 1));
      for (int i = 1; i <= n; ++i)
        r.expect_equal(tag("tau delta_i = delta_{i-1} tau", n, i), T[n] * D[n][i], D[n][i - 1] * T[n - 1],
                       dom(n - 1));
    }
    for (int n = 0; n < m.top; ++n) {
      r.expect_equal(tag("tau sigma_0 = sigma_n tau^2", n), T[n] * S[n][0], S[n][n] * T[n + 1] * T[n + 1],
                     dom(n + 1));
      for (int i = 1; i <= n; ++i)
        r.expect_equal(tag("tau sigma_i = sigma_{i-1} tau", n, i), T[n] * S[n][i], S[n][i - 1] * T[n + 1],
                       dom(n + 1));
    }
  }
  return r;
}

CyclicModuleData point_module(FieldSpec f, Direction dir, int top) {
  CyclicModuleData m;
  m.name = "point";
  m.field = f;
  m.direction = dir;
  m.resize(top);
  Matrix one = Matrix::identity(f, 1);
  for (int n = 0; n <= top; ++n) {
    m.spaces[n] = QuotientPresentation::free(f, 1, "k");
    m.cyclic[n] = one;
    if (n >= 1)
      for (auto& x : m.face[n]) x = one;
    if (n < top)
      for (auto& x : m.degen[n]) x = one;
  }
  return m;
}

CyclicModuleData reindexed(const CyclicModuleData& m) {
  CyclicModuleData out = m;
  for (int n = 1; n <= m.top; ++n) {
    int k = int(m.face[n].size()) - 1;
    for (int i = 0; i <= k; ++i) out.face[n][i] = m.face[n][k - i];
  }
  for (int n = 0; n < m.top; ++n) {
    int k = int(m.degen[n].size()) - 1;
    for (int i = 0; i <= k; ++i) out.degen[n][i] = m.degen[n][k - i];
  }
  for (int n = 0; n <= m.top; ++n) out.cyclic[n] = inverse(m.cyclic[n]);
  return out;
}

CyclicModuleData cyclic_dual(const CyclicModuleData& m) {
  if (m.direction != Direction::Cocyclic) throw std::invalid_argument("cyclic_dual needs a cocyclic module");
  CyclicModuleData out;
  out.name = "dual " + m.name;
  out.field = m.field;
  out.direction = Direction::Cyclic;
  out.resize(m.top);
  out.spaces = m.spaces;
  for (int n = 0; n <= m.top; ++n) out.cyclic[n] = inverse(m.cyclic[n]);
  for (int n = 1; n <= m.top; ++n) {
    out.face[n][0] = m.degen[n - 1][n - 1] * m.cyclic[n];
    for (int i = 1; i <= n; ++i) out.face[n][i] = m.degen[n - 1][i - 1];
  }
  for (int n = 0; n < m.top; ++n)
    for (int i = 0; i <= n; ++i) out.degen[n][i] = m.face[n + 1][i];
  return out;
}

Report certify_chain_map(const CyclicModuleData& m, const CyclicModuleData& m2, const std::vector<Matrix>& f,
                         const std::string& label) {
  Report r("chain map " + label);
  int top = std::min(m.top, m2.top);
  auto dom = [&](int n) { return TensorShape({m.dim(n)}); };
  for (int n = 0; n <= top; ++n) r.expect_equal(tag("f t = t' f", n), f[n] * m.cyclic[n], m2.cyclic[n] * f[n], dom(n));
  bool cyc = m.direction == Direction::Cyclic;
  for (int n = 1; n <= top; ++n)
    for (int i = 0; i <= n; ++i) {
      if (cyc)
        r.expect_equal(tag("f d_i = d_i' f", n, i), f[n - 1] * m.face[n][i], m2.face[n][i] * f[n], dom(n));
      else
        r.expect_equal(tag("f delta_i = delta_i' f", n, i), f[n] * m.face[n][i], m2.face[n][i] * f[n - 1],
                       dom(n - 1));
    }
  for (int n = 0; n < top; ++n)
    for (int i = 0; i <= n; ++i) {
      if (cyc)
        r.expect_equal(tag("f s_i = s_i' f", n, i), f[n + 1] * m.degen[n][i], m2.degen[n][i] * f[n], dom(n));
      else
        r.expect_equal(tag("f sigma_i = sigma_i' f", n, i), f[n] * m.degen[n][i], m2.degen[n][i] * f[n + 1],
                       dom(n + 1));
    }
  return r;
}

Matrix build_free(const FieldSpec& f, const TensorShape& in, int out_dim, const ColumnFn& fn) {
  int ncols = in.size();
  std::vector<Vec> cols(ncols);
#pragma omp parallel
  {
    Accumulator acc(out_dim);
#pragma omp for schedule(dynamic, 4)
    for (int c = 0; c < ncols; ++c) {
      fn(in.decode(c), acc);
      cols[c] = acc.take();
    }
  }
  return Matrix::from_columns(f, out_dim, std::move(cols));
}

Matrix build_free_on(const FieldSpec& f, const TensorShape& in, const std::vector<int>& which, int out_dim,
                     const ColumnFn& fn) {
  std::vector<Vec> cols(which.size());
#pragma omp parallel
  {
    Accumulator acc(out_dim);
#pragma omp for schedule(dynamic, 1)
    for (int c = 0; c < int(which.size()); ++c) {
      fn(in.decode(which[c]), acc);
      cols[c] = acc.take();
    }
  }
  return Matrix::from_columns(f, out_dim, std::move(cols));
}

Matrix descend_lazily(const FieldSpec& f, const TensorShape& in, const QuotientPresentation& src,
                      const QuotientPresentation& dst, const ColumnFn& fn) {
  std::vector<int> support;
  for (auto& c : src.section.columns())
    for (auto& [i, v] : c) support.push_back(i);
  std::sort(support.begin(), support.end());
  support.erase(std::unique(support.begin(), support.end()), support.end());
  Matrix part = build_free_on(f, in, support, dst.ambient_dim(), fn);
  Matrix restrict(f, int(support.size()), src.dim());
  for (int j = 0; j < src.dim(); ++j) {
    Vec v;
    for (auto& [i, c] : src.section.col(j))
      v.emplace_back(int(std::lower_bound(support.begin(), support.end(), i) - support.begin()), c);
    restrict.set_col(j, std::move(v));
  }
  return dst.projection * part * restrict;
}

}  // namespace hcyc
