#include "hcyc/algcore/algebra.hpp"

namespace hcyc {

Vec AlgebraData::product(const Vec& a, const Vec& b) const {
  Accumulator acc(dim);
  for (auto& [i, x] : a)
    for (auto& [j, y] : b) acc.add_vec(basis_product(i, j), field.mul(x, y), field);
  return acc.take();
}

Matrix AlgebraData::left_mult(const Vec& a) const {
  Matrix m(field, dim, dim);
  for (int j = 0; j < dim; ++j) m.set_col(j, product(a, unit_vec(j)));
  return m;
}

Matrix AlgebraData::right_mult(const Vec& a) const {
  Matrix m(field, dim, dim);
  for (int j = 0; j < dim; ++j) m.set_col(j, product(unit_vec(j), a));
  return m;
}

Matrix AlgebraData::unit_map() const { return Matrix::from_columns(field, dim, {unit}); }

AlgebraData AlgebraData::opposite() const {
  AlgebraData o = *this;
  o.name = name + "^op";
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) o.mul.set_col(i * dim + j, basis_product(j, i));
  return o;
}

bool AlgebraData::is_commutative() const {
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j)
      if (basis_product(i, j) != basis_product(j, i)) return false;
  return true;
}

AlgebraData AlgebraData::ground(FieldSpec f) {
  AlgebraData a;
  a.name = f.name();
  a.field = f;
  a.dim = 1;
  a.mul = Matrix::identity(f, 1);
  a.unit = unit_vec(0);
  return a;
}

AlgebraData AlgebraData::from_table(std::string name, FieldSpec f, int dim,
                                    const std::vector<std::tuple<int, int, int, Scalar>>& table, Vec unit) {
  AlgebraData a;
  a.name = std::move(name);
  a.field = f;
  a.dim = dim;
  a.mul = Matrix(f, dim, dim * dim);
  for (auto& [i, j, k, c] : table) a.mul.set(k, i * dim + j, a.mul.at(k, i * dim + j) + c);
  for (auto& [i, v] : unit) v = f.reduce(v);
  a.unit = std::move(unit);
  return a;
}

AlgebraData tensor_algebra(const AlgebraData& a, const AlgebraData& b) {
  AlgebraData t;
  t.name = a.name + "(x)" + b.name;
  t.field = a.field;
  t.dim = a.dim * b.dim;
  TensorShape sh({a.dim, b.dim, a.dim, b.dim});
  // (a1 b1)(a2 b2) = a1 a2 (x) b1 b2
  Matrix swap(a.field, t.dim * t.dim, t.dim * t.dim);
  for (int k = 0; k < t.dim * t.dim; ++k) {
    auto ix = sh.decode(k);
    swap.set_col(k, unit_vec(((ix[0] * a.dim + ix[2]) * b.dim + ix[1]) * b.dim + ix[3]));
  }
  t.mul = kron(a.mul, b.mul) * swap;
  t.unit = outer(std::vector<Vec>{a.unit, b.unit}, TensorShape({a.dim, b.dim}), a.field);
  return t;
}

CoalgebraData CoalgebraData::ground(FieldSpec f) {
  CoalgebraData c;
  c.name = "k";
  c.field = f;
  c.dim = 1;
  c.comul = Matrix::identity(f, 1);
  c.counit = Matrix::identity(f, 1);
  return c;
}

CoalgebraData CoalgebraData::grouplike(FieldSpec f) {
  CoalgebraData c = ground(f);
  c.name = "<g>";
  return c;
}

CoalgebraData CoalgebraData::grouplike_primitive(FieldSpec f) {
  CoalgebraData c;
  c.name = "<g,x>";
  c.field = f;
  c.dim = 2;
  c.comul = Matrix(f, 4, 2);
  c.comul.set(0, 0, 1);  // g -> g g
  c.comul.set(1, 1, 1);  // x -> g x + x g
  c.comul.set(2, 1, 1);
  c.counit = Matrix(f, 1, 2);
  c.counit.set(0, 0, 1);
  return c;
}

CoalgebraData tensor_coalgebra(const CoalgebraData& a, const CoalgebraData& b) {
  CoalgebraData t;
  t.name = a.name + "(x)" + b.name;
  t.field = a.field;
  t.dim = a.dim * b.dim;
  TensorShape sh({a.dim, a.dim, b.dim, b.dim});
  Matrix swap(a.field, t.dim * t.dim, t.dim * t.dim);
  for (int k = 0; k < t.dim * t.dim; ++k) {
    auto ix = sh.decode(k);  // (a1 a2 b1 b2) -> (a1 b1 a2 b2)
    swap.set_col(k, unit_vec(((ix[0] * b.dim + ix[2]) * a.dim + ix[1]) * b.dim + ix[3]));
  }
  t.comul = swap * kron(a.comul, b.comul);
  t.counit = kron(a.counit, b.counit);
  return t;
}

Matrix iterated(const Matrix& comul, const Matrix& counit, int dim, int n) {
  const FieldSpec& f = comul.field();
  if (n == 0) return counit;
  Matrix m = Matrix::identity(f, dim);
  for (int k = 2; k <= n; ++k) m = slot_map(TensorShape::power(dim, k - 1), 0, 1, comul, f) * m;
  return m;
}

Matrix combine(const std::vector<Matrix>& per_basis, const Vec& x, int rows, int cols, const FieldSpec& f) {
  Matrix m(f, rows, cols);
  for (auto& [i, c] : x) m = m + per_basis[i].scaled(c);
  return m;
}

Matrix sweedler_kron(const CoalgebraData& c, int x, const std::vector<const std::vector<Matrix>*>& per_slot) {
  int n = int(per_slot.size());
  const FieldSpec& f = c.field;
  Vec terms = iterated(c.comul, c.counit, c.dim, n).col(x);
  TensorShape sh = TensorShape::power(c.dim, n);
  int rows = 1, cols = 1;
  for (auto* s : per_slot) rows *= (*s)[0].rows(), cols *= (*s)[0].cols();
  Matrix out(f, rows, cols);
  for (auto& [k, coef] : terms) {
    auto ix = sh.decode(k);
    std::vector<Matrix> parts;
    for (int i = 0; i < n; ++i) parts.push_back((*per_slot[i])[ix[i]]);
    out = out + kron_all(parts).scaled(coef);
  }
  return out;
}

Matrix sweedler_kron(const CoalgebraData& c, int x, int n, const std::vector<Matrix>& ms) {
  std::vector<const std::vector<Matrix>*> slots(n, &ms);
  return sweedler_kron(c, x, slots);
}

Matrix sweedler_pair(const CoalgebraData& c, int x, const std::vector<Matrix>& m1, const std::vector<Matrix>& m2) {
  return sweedler_kron(c, x, {&m1, &m2});
}

Report check_algebra(const AlgebraData& a) {
  Report r("algebra " + a.name);
  const FieldSpec& f = a.field;
  Matrix id = Matrix::identity(f, a.dim);
  TensorShape s3 = TensorShape::power(a.dim, 3);
  r.expect_equal("associativity", a.mul * kron(a.mul, id), a.mul * kron(id, a.mul), s3);
  r.expect_equal("left unit", a.left_mult(a.unit), id, TensorShape({a.dim}));
  r.expect_equal("right unit", a.right_mult(a.unit), id, TensorShape({a.dim}));
  return r;
}

Report check_coalgebra(const CoalgebraData& c) {
  Report r("coalgebra " + c.name);
  const FieldSpec& f = c.field;
  Matrix id = Matrix::identity(f, c.dim);
  TensorShape s1({c.dim});
  r.expect_equal("coassociativity", kron(c.comul, id) * c.comul, kron(id, c.comul) * c.comul, s1);
  r.expect_equal("left counit", kron(c.counit, id) * c.comul, id, s1);
  r.expect_equal("right counit", kron(id, c.counit) * c.comul, id, s1);
  return r;
}

Report check_module(const AlgebraData& a, const ModuleActionData& m) {
  Report r("module " + m.name);
  const FieldSpec& f = a.field;
  Matrix ia = Matrix::identity(f, a.dim), im = Matrix::identity(f, m.dim);
  if (m.side == Side::Right) {
    TensorShape sh({m.dim, a.dim, a.dim});
    r.expect_equal("right action associativity", m.action * kron(m.action, ia), m.action * kron(im, a.mul), sh);
    r.expect_equal("right unit", m.action * kron(im, a.unit_map()), im, TensorShape({m.dim}));
  } else {
    TensorShape sh({a.dim, a.dim, m.dim});
    r.expect_equal("left action associativity", m.action * kron(ia, m.action), m.action * kron(a.mul, im), sh);
    r.expect_equal("left unit", m.action * kron(a.unit_map(), im), im, TensorShape({m.dim}));
  }
  return r;
}

Report check_comodule(const CoalgebraData& c, const ComoduleData& m) {
  Report r("comodule " + m.name);
  const FieldSpec& f = c.field;
  Matrix ic = Matrix::identity(f, c.dim), im = Matrix::identity(f, m.dim);
  TensorShape s1({m.dim});
  if (m.side == Side::Right) {
    r.expect_equal("right coaction coassociativity", kron(m.coaction, ic) * m.coaction,
                   kron(im, c.comul) * m.coaction, s1);
    r.expect_equal("right coaction counit", kron(im, c.counit) * m.coaction, im, s1);
  } else {
    r.expect_equal("left coaction coassociativity", kron(ic, m.coaction) * m.coaction,
                   kron(c.comul, im) * m.coaction, s1);
    r.expect_equal("left coaction counit", kron(c.counit, im) * m.coaction, im, s1);
  }
  return r;
}

Report check_algebra_map(const AlgebraData& src, const AlgebraData& dst, const Matrix& f, const std::string& label,
                         bool anti) {
  Report r(label);
  TensorShape s2 = TensorShape::power(src.dim, 2);
  Matrix lhs = f * src.mul;
  Matrix rhs = dst.mul * kron(f, f);
  if (anti) {
    Matrix sw(src.field, src.dim * src.dim, src.dim * src.dim);
    for (int i = 0; i < src.dim; ++i)
      for (int j = 0; j < src.dim; ++j) sw.set_col(i * src.dim + j, unit_vec(j * src.dim + i));
    rhs = rhs * sw;
  }
  r.expect_equal(label + (anti ? " anti-multiplicative" : " multiplicative"), lhs, rhs, s2);
  r.expect_equal(label + " unital", f * src.unit_map(), dst.unit_map());
  return r;
}

Report check_sweedler_measuring(const CoalgebraData& c, const AlgebraData& r1, const AlgebraData& r2,
                                const std::vector<Matrix>& psi) {
  Report r("measuring " + c.name + " on " + r1.name + " -> " + r2.name);
  TensorShape s2 = TensorShape::power(r1.dim, 2);
  for (int x = 0; x < c.dim; ++x) {
    Matrix lhs = psi[x] * r1.mul;
    Matrix rhs = r2.mul * sweedler_pair(c, x, psi, psi);
    r.expect_equal("multiplicativity[" + std::to_string(x) + "]", lhs, rhs, s2);
    Matrix unit_img = psi[x] * r1.unit_map();
    Matrix want = r2.unit_map().scaled(c.counit.at(0, x));
    r.expect_equal("unit[" + std::to_string(x) + "]", unit_img, want);
  }
  return r;
}

QuotientPresentation balanced_tower(const FieldSpec& f, int adim, const std::vector<TowerFactor>& factors,
                                    std::string label, std::string convention) {
  std::vector<int> dims;
  for (auto& t : factors) dims.push_back(t.dim);
  TensorShape amb(dims);
  Matrix rel(f, amb.size(), 0);
  for (std::size_t k = 0; k + 1 < factors.size(); ++k) {
    std::vector<int> wd = dims;
    wd.insert(wd.begin() + k + 1, adim);
    TensorShape w(wd);
    Matrix a = slot_map(w, int(k), 2, factors[k].right_act, f);
    Matrix b = slot_map(w, int(k) + 1, 2, factors[k + 1].left_act, f);
    rel = rel.hstack(a - b);
  }
  QuotientPresentation q = quotient_by(f, amb.size(), rel, std::move(label));
  q.convention = std::move(convention);
  return q;
}

}  // namespace hcyc
