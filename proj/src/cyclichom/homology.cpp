#include "hcyc/cyclichom/homology.hpp"

namespace hcyc {

std::string theory_name(Theory t) {
  switch (t) {
    case Theory::HH: return "HH";
    case Theory::HC: return "HC";
    case Theory::HHco: return "HH^";
    case Theory::HCco: return "HC^";
  }
  return "?";
}

Matrix Complex::restrict_map(int n, const Complex& dst, const Matrix& f) const {
  Matrix g = kind == Kind::Whole ? f : f * lift[n];
  switch (dst.kind) {
    case Kind::Whole: return g;
    case Kind::Quotient: return dst.proj[n] * g;
    case Kind::Sub: return solve_columns(dst.lift[n], g);
  }
  return g;
}

Matrix Complex::to_work(int n, const Matrix& v) const {
  switch (kind) {
    case Kind::Whole: return v;
    case Kind::Quotient: return proj[n] * v;
    case Kind::Sub: return solve_columns(lift[n], v);
  }
  return v;
}

Matrix Complex::from_work(int n, const Matrix& w) const { return kind == Kind::Whole ? w : lift[n] * w; }

namespace {

Matrix alternating(const std::vector<Matrix>& maps) {
  Matrix s = maps[0];
  for (std::size_t i = 1; i < maps.size(); ++i) s = i % 2 ? s - maps[i] : s + maps[i];
  return s;
}

}  // namespace

Complex hochschild_complex(const CyclicModuleData& m) {
  Complex c;
  c.field = m.field;
  c.cochain = m.direction == Direction::Cocyclic;
  c.top = m.top;
  for (int n = 0; n <= m.top; ++n) c.dims.push_back(m.dim(n));
  c.diff.resize(m.top + 1);
  for (int n = 0; n <= m.top; ++n) {
    if (!c.cochain)
      c.diff[n] = n == 0 ? Matrix(m.field, 0, m.dim(0)) : alternating(m.face[n]);
    else
      c.diff[n] = n == m.top ? Matrix(m.field, 0, m.dim(n)) : alternating(m.face[n + 1]);
  }
  return c;
}

namespace {

Complex as_quotient(const Complex& whole, const std::vector<Matrix>& relations) {
  Complex c = whole;
  c.kind = Complex::Kind::Quotient;
  std::vector<QuotientPresentation> q;
  for (int n = 0; n <= whole.top; ++n) q.push_back(quotient_by(whole.field, whole.dims[n], relations[n], "W"));
  c.dims.clear();
  for (auto& x : q) {
    c.dims.push_back(x.dim());
    c.proj.push_back(x.projection);
    c.lift.push_back(x.section);
  }
  for (int n = 0; n <= whole.top; ++n) {
    int to = whole.cochain ? n + 1 : n - 1;
    if (to < 0 || to > whole.top)
      c.diff[n] = Matrix(whole.field, 0, c.dims[n]);
    else
      c.diff[n] = descend(whole.diff[n], q[n], q[to]);
  }
  return c;
}

Complex as_sub(const Complex& whole, const std::vector<Matrix>& inclusions) {
  Complex c = whole;
  c.kind = Complex::Kind::Sub;
  c.lift = inclusions;
  c.dims.clear();
  for (auto& x : inclusions) c.dims.push_back(x.cols());
  for (int n = 0; n <= whole.top; ++n) {
    int to = whole.cochain ? n + 1 : n - 1;
    if (to < 0 || to > whole.top)
      c.diff[n] = Matrix(whole.field, 0, c.dims[n]);
    else
      c.diff[n] = solve_columns(inclusions[to], whole.diff[n] * inclusions[n]);
  }
  return c;
}

Matrix hstack_all(const FieldSpec& f, int rows, const std::vector<Matrix>& ms) {
  Matrix out(f, rows, 0);
  for (auto& m : ms) out = out.hstack(m);
  return out;
}

Matrix signed_cyclic(const CyclicModuleData& m, int n) { return n % 2 ? m.cyclic[n].scaled(-1) : m.cyclic[n]; }

}  // namespace

Complex normalized_complex(const CyclicModuleData& m) {
  Complex whole = hochschild_complex(m);
  const FieldSpec& f = m.field;
  if (m.direction == Direction::Cyclic) {
    std::vector<Matrix> rel;
    for (int n = 0; n <= m.top; ++n)
      rel.push_back(n == 0 ? Matrix(f, m.dim(0), 0) : image_basis(hstack_all(f, m.dim(n), m.degen[n - 1])));
    return as_quotient(whole, rel);
  }
  std::vector<Matrix> inc;
  for (int n = 0; n <= m.top; ++n) {
    if (n == 0) {
      inc.push_back(Matrix::identity(f, m.dim(0)));
      continue;
    }
    Matrix stacked(f, 0, m.dim(n));
    for (auto& s : m.degen[n - 1]) stacked = stacked.vstack(s);
    inc.push_back(kernel(stacked));
  }
  return as_sub(whole, inc);
}

Complex connes_complex(const CyclicModuleData& m) {
  m.field.require_char_zero("cyclic homology");
  Complex whole = hochschild_complex(m);
  std::vector<Matrix> w;
  for (int n = 0; n <= m.top; ++n) {
    Matrix one_minus = Matrix::identity(m.field, m.dim(n)) - signed_cyclic(m, n);
    w.push_back(m.direction == Direction::Cyclic ? image_basis(one_minus) : kernel(one_minus));
  }
  return m.direction == Direction::Cyclic ? as_quotient(whole, w) : as_sub(whole, w);
}

Matrix HomologyReport::coords(int n, const Matrix& cycles) const {
  Matrix sol = solve_columns(bounds[n].hstack(reps[n]), cycles);
  int nb = bounds[n].cols();
  std::vector<int> keep;
  for (int i = 0; i < reps[n].cols(); ++i) keep.push_back(nb + i);
  return sol.transpose().select_cols(keep).transpose();
}

HomologyReport homology(const Complex& c, Theory theory, const std::string& label) {
  HomologyReport h;
  h.theory = theory;
  h.module = label;
  h.max_degree = c.top - 1;
  int count = std::max(c.top, 0);
  h.dims.assign(count, 0);
  h.reps.resize(count);
  h.bounds.resize(count);
  const FieldSpec& f = c.field;
#pragma omp parallel for schedule(dynamic, 1)
  for (int n = 0; n < count; ++n) {
    Matrix z = c.diff[n].rows() == 0 ? Matrix::identity(f, c.dims[n]) : kernel(c.diff[n]);
    Matrix b;
    if (!c.cochain)
      b = image_basis(c.diff[n + 1]);
    else
      b = n == 0 ? Matrix(f, c.dims[0], 0) : image_basis(c.diff[n - 1]);
    RowEchelon e = rref(b.hstack(z));
    std::vector<int> pick;
    for (int p : e.pivots)
      if (p >= b.cols()) pick.push_back(p - b.cols());
    h.bounds[n] = b;
    h.reps[n] = z.select_cols(pick);
    h.dims[n] = int(pick.size());
  }
  return h;
}

HomologyReport hochschild_homology(const CyclicModuleData& m) {
  return homology(hochschild_complex(m), m.direction == Direction::Cyclic ? Theory::HH : Theory::HHco, m.name);
}

HomologyReport cyclic_homology_char0(const CyclicModuleData& m) {
  return homology(connes_complex(m), m.direction == Direction::Cyclic ? Theory::HC : Theory::HCco, m.name);
}

Matrix induced_on_homology(const HomologyReport& h, const Complex& c, const HomologyReport& h2, const Complex& c2,
                           int n, const Matrix& f) {
  Matrix g = c.restrict_map(n, c2, f);
  return h2.coords(n, g * h.reps[n]);
}

MixedComplexData mixed_complex(const CyclicModuleData& m) {
  if (m.direction != Direction::Cyclic) throw std::invalid_argument("mixed_complex needs a cyclic module");
  MixedComplexData x;
  x.field = m.field;
  x.top = m.top;
  Complex hc = hochschild_complex(m);
  x.dims = hc.dims;
  x.b = hc.diff;
  for (int n = 0; n < m.top; ++n) {
    Matrix lam = signed_cyclic(m, n), lam1 = signed_cyclic(m, n + 1);
    Matrix N = Matrix::identity(m.field, m.dim(n)), p = N;
    for (int i = 1; i <= n; ++i) {
      p = lam * p;
      N = N + p;
    }
    Matrix s = m.cyclic[n + 1] * m.degen[n][n];
    x.B.push_back((Matrix::identity(m.field, m.dim(n + 1)) - lam1) * s * N);
  }
  return x;
}

Report check_mixed_complex(const MixedComplexData& m) {
  Report r("mixed complex");
  for (int n = 2; n <= m.top; ++n)
    r.expect_equal("b b = 0 n=" + std::to_string(n), m.b[n - 1] * m.b[n], Matrix(m.field, m.dims[n - 2], m.dims[n]));
  for (int n = 0; n + 2 <= m.top; ++n)
    r.expect_equal("B B = 0 n=" + std::to_string(n), m.B[n + 1] * m.B[n], Matrix(m.field, m.dims[n + 2], m.dims[n]));
  for (int n = 0; n < m.top; ++n) {
    Matrix bB = m.b[n + 1] * m.B[n];
    Matrix Bb = n == 0 ? Matrix(m.field, m.dims[n], m.dims[n]) : m.B[n - 1] * m.b[n];
    r.expect_equal("bB + Bb = 0 n=" + std::to_string(n), bB + Bb, Matrix(m.field, m.dims[n], m.dims[n]));
  }
  return r;
}

}  // namespace hcyc
