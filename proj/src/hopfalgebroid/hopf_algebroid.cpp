#include "hcyc/hopfalgebroid/hopf_algebroid.hpp"

#include <functional>

namespace hcyc {

std::vector<Term> terms(const Vec& v, const TensorShape& sh) {
  std::vector<Term> out;
  out.reserve(v.size());
  for (auto& [k, c] : v) out.push_back({c, sh.decode(k)});
  return out;
}

Matrix permute_factors(const TensorShape& in, const std::vector<int>& perm, const FieldSpec& f) {
  std::vector<int> od;
  for (int p : perm) od.push_back(in.dims[p]);
  TensorShape out(od);
  Matrix m(f, out.size(), in.size());
  std::vector<int> oi(perm.size());
  for (int k = 0; k < in.size(); ++k) {
    auto ii = in.decode(k);
    for (std::size_t j = 0; j < perm.size(); ++j) oi[j] = ii[perm[j]];
    m.set_col(k, unit_vec(out.encode(oi)));
  }
  return m;
}

namespace {

Matrix bilinear(const FieldSpec& f, int dx, int dy, int rows, const std::function<Vec(int, int)>& g) {
  Matrix m(f, rows, dx * dy);
  for (int i = 0; i < dx; ++i)
    for (int j = 0; j < dy; ++j) m.set_col(i * dy + j, g(i, j));
  return m;
}

}  // namespace

HopfAlgebroid::HopfAlgebroid() : cache_(std::make_shared<Cache>()) {}

TowerFactor HopfAlgebroid::factor(Convention c) const {
  TowerFactor tf;
  tf.dim = d();
  tf.right_act = Matrix(field, d(), d() * a());
  tf.left_act = Matrix(field, d(), a() * d());
  for (int u = 0; u < d(); ++u)
    for (int k = 0; k < a(); ++k) {
      if (c == Convention::Left) {
        tf.right_act.set_col(u * a() + k, U.product(t_of(k), unit_vec(u)));
        tf.left_act.set_col(k * d() + u, U.product(s_of(k), unit_vec(u)));
      } else {
        tf.right_act.set_col(u * a() + k, U.product(unit_vec(u), t_of(k)));
        tf.left_act.set_col(k * d() + u, U.product(t_of(k), unit_vec(u)));
      }
    }
  return tf;
}

const QuotientPresentation& HopfAlgebroid::tower(Convention c, int n) const {
  std::lock_guard<std::mutex> lock(cache_->mu);
  auto key = std::make_pair(int(c), n);
  auto it = cache_->towers.find(key);
  if (it != cache_->towers.end()) return *it->second;
  std::string conv = c == Convention::Left ? "A" : "A^op";
  std::shared_ptr<const QuotientPresentation> q;
  if (n == 1) {
    auto p = std::make_shared<QuotientPresentation>(QuotientPresentation::free(field, d(), name));
    p->convention = conv;
    q = p;
  } else {
    std::vector<TowerFactor> fs(n, factor(c));
    q = std::make_shared<const QuotientPresentation>(
        balanced_tower(field, a(), fs, name + "^(x)" + conv + std::to_string(n), conv));
  }
  cache_->towers[key] = q;
  return *q;
}

Matrix HopfAlgebroid::delta() const { return tower(Convention::Left, 2).projection * delta_lift; }

Matrix HopfAlgebroid::delta_iter(int n) const {
  if (n < 1) throw std::invalid_argument("delta_iter needs n >= 1");
  return iterated(delta_lift, Matrix(), d(), n);
}

Matrix HopfAlgebroid::beta() const {
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    if (cache_->beta) return *cache_->beta;
  }
  TensorShape sh = TensorShape::power(d(), 3);
  Matrix free = slot_map(sh, 1, 2, U.mul, field) * kron(delta_lift, Matrix::identity(field, d()));
  Matrix b = descend(free, tower(Convention::Opposite, 2), tower(Convention::Left, 2));
  std::lock_guard<std::mutex> lock(cache_->mu);
  cache_->beta = b;
  return b;
}

Matrix HopfAlgebroid::translation_lift() const {
  if (translation_override_) return *translation_override_;
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    if (cache_->translation) return *cache_->translation;
  }
  const auto& ql = tower(Convention::Left, 2);
  const auto& qo = tower(Convention::Opposite, 2);
  Matrix u1 = ql.projection * kron(Matrix::identity(field, d()), U.unit_map());
  Matrix tr = qo.section * solve_columns(beta(), u1);
  std::lock_guard<std::mutex> lock(cache_->mu);
  cache_->translation = tr;
  return tr;
}

HopfAlgebroid HopfAlgebroid::perturbed(unsigned seed) const {
  HopfAlgebroid h = *this;
  h.cache_ = std::make_shared<Cache>();
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    h.cache_->towers = cache_->towers;
  }
  h.delta_lift = perturb_lifts(tower(Convention::Left, 2), delta_lift, seed);
  h.translation_override_ = perturb_lifts(tower(Convention::Opposite, 2), translation_lift(), seed + 1);
  return h;
}

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

Matrix multiplicativity_free(const HopfAlgebroid& h, const Matrix& lift) {
  // u (x) v -> Delta~(u) Delta~(v) componentwise
  const FieldSpec& f = h.field;
  int d = h.d();
  TensorShape s4 = TensorShape::power(d, 4);
  Matrix mm = kron(h.U.mul, h.U.mul) * permute_factors(s4, {0, 2, 1, 3}, f);
  return mm * kron(lift, lift);
}

}  // namespace

Report check_left_bialgebroid(const HopfAlgebroid& h) {
  Report r("left bialgebroid " + h.name);
  const FieldSpec& f = h.field;
  int d = h.d(), a = h.a();
  Matrix id = Matrix::identity(f, d);
  r.merge(check_algebra(h.U));
  r.merge(check_algebra(h.A));
  r.merge(check_algebra_map(h.A, h.U, h.s, "s_L"));
  r.merge(check_algebra_map(h.A, h.U, h.t, "t_L", true));
  TensorShape saa({a, a});
  Matrix st = bilinear(f, a, a, d, [&](int i, int j) { return h.U.product(h.s_of(i), h.t_of(j)); });
  Matrix ts = bilinear(f, a, a, d, [&](int i, int j) { return h.U.product(h.t_of(j), h.s_of(i)); });
  r.expect_equal("s_L and t_L commute", st, ts, saa);

  const auto& q1 = h.tower(Convention::Left, 1);
  const auto& q2 = h.tower(Convention::Left, 2);
  const auto& q3 = h.tower(Convention::Left, 3);
  Matrix D = h.delta();
  TensorShape sd({d});

  bool bimod = true;
  for (int k = 0; k < a; ++k) {
    Matrix ls = h.U.left_mult(h.s_of(k)), lt = h.U.left_mult(h.t_of(k));
    bimod &= r.expect_equal("Delta_L left A-linear[" + std::to_string(k) + "]", D * ls,
                            q2.projection * kron(ls, id) * h.delta_lift, sd);
    bimod &= r.expect_equal("Delta_L right A-linear[" + std::to_string(k) + "]", D * lt,
                            q2.projection * kron(id, lt) * h.delta_lift, sd);
    r.expect_equal("eps_L left A-linear[" + std::to_string(k) + "]", h.eps * ls,
                   h.A.left_mult(unit_vec(k)) * h.eps, sd);
    r.expect_equal("eps_L right A-linear[" + std::to_string(k) + "]", h.eps * lt,
                   h.A.right_mult(unit_vec(k)) * h.eps, sd);
  }

  Matrix d_id, id_d;
  bool ok1 = try_descend(r, "Delta_L (x) id well defined", kron(h.delta_lift, id), q2, q3, d_id);
  bool ok2 = try_descend(r, "id (x) Delta_L well defined", kron(id, h.delta_lift), q2, q3, id_d);
  if (ok1 && ok2) r.expect_equal("coassociativity", d_id * D, id_d * D, sd);

  Matrix cl, cr;
  Matrix sl_free = h.U.mul * kron(h.s * h.eps, id);
  Matrix tr_free = h.U.mul * kron(h.t * h.eps, id) * permute_factors(TensorShape({d, d}), {1, 0}, f);
  if (try_descend(r, "left counit well defined", sl_free, q2, q1, cl)) r.expect_equal("left counit", cl * D, id, sd);
  if (try_descend(r, "right counit well defined", tr_free, q2, q1, cr)) r.expect_equal("right counit", cr * D, id, sd);

  for (int k = 0; k < a; ++k) {
    Matrix lhs = q2.projection * kron(h.U.right_mult(h.t_of(k)), id) * h.delta_lift;
    Matrix rhs = q2.projection * kron(id, h.U.right_mult(h.s_of(k))) * h.delta_lift;
    r.expect_equal("Takeuchi[" + std::to_string(k) + "]", lhs, rhs, sd);
  }

  TensorShape s2({d, d});
  r.expect_equal("Delta_L multiplicative", D * h.U.mul, q2.projection * multiplicativity_free(h, h.delta_lift), s2);
  Matrix pert = perturb_lifts(q2, h.delta_lift, 17);
  r.expect_equal("Delta_L product independent of lift", q2.projection * multiplicativity_free(h, h.delta_lift),
                 q2.projection * multiplicativity_free(h, pert), s2);
  r.expect_equal("Delta_L unital", D * h.U.unit_map(), q2.projection * kron(h.U.unit_map(), h.U.unit_map()));

  Matrix e_uu = h.eps * h.U.mul;
  Matrix e_us = bilinear(f, d, d, a, [&](int i, int j) {
    return h.eps.apply(h.U.product(unit_vec(i), h.s.apply(h.eps.col(j))));
  });
  Matrix e_ut = bilinear(f, d, d, a, [&](int i, int j) {
    return h.eps.apply(h.U.product(unit_vec(i), h.t.apply(h.eps.col(j))));
  });
  r.expect_equal("eps_L(u s(eps u')) = eps_L(u u')", e_us, e_uu, s2);
  r.expect_equal("eps_L(u t(eps u')) = eps_L(u u')", e_ut, e_uu, s2);
  r.expect_equal("eps_L unital", h.eps * h.U.unit_map(), h.A.unit_map());
  (void)bimod;
  return r;
}

namespace {

Matrix antipode_free_1(const HopfAlgebroid& h, const Matrix& lift) {
  const FieldSpec& f = h.field;
  int d = h.d();
  TensorShape s3 = TensorShape::power(d, 3);
  Matrix g = kron(lift * h.S, Matrix::identity(f, d));  // (a, b, y)
  Matrix m = slot_map(s3, 0, 2, h.U.mul, f) * permute_factors(s3, {0, 2, 1}, f) * g;
  return m * lift;
}

Matrix antipode_free_2(const HopfAlgebroid& h, const Matrix& lift) {
  const FieldSpec& f = h.field;
  int d = h.d();
  TensorShape s3 = TensorShape::power(d, 3);
  Matrix g = kron(Matrix::identity(f, d), lift * h.S);  // (x, a, b)
  Matrix m = slot_map(s3, 1, 2, h.U.mul, f) * permute_factors(s3, {1, 2, 0}, f) * g;
  return m * lift;
}

}  // namespace

Report check_hopf_algebroid(const HopfAlgebroid& h) {
  Report r("Hopf algebroid " + h.name);
  r.merge(check_left_bialgebroid(h));
  const FieldSpec& f = h.field;
  int d = h.d();
  TensorShape sd({d});
  r.merge(check_algebra_map(h.U, h.U, h.S, "S", true));
  r.record("S bijective", rank(h.S) == d);
  r.expect_equal("S t_L = s_L", h.S * h.t, h.s, TensorShape({h.a()}));
  const auto& q2 = h.tower(Convention::Left, 2);
  Matrix rhs1 = q2.projection * kron(h.U.unit_map(), h.S);
  Matrix rhs2 = q2.projection * kron(h.S, h.U.unit_map());
  r.expect_equal("antipode S(u(1))(1) u(2) (x) S(u(1))(2) = 1 (x) S(u)", q2.projection * antipode_free_1(h, h.delta_lift),
                 rhs1, sd);
  r.expect_equal("antipode S(u(2))(1) (x) S(u(2))(2) u(1) = S(u) (x) 1", q2.projection * antipode_free_2(h, h.delta_lift),
                 rhs2, sd);
  Matrix pert = perturb_lifts(q2, h.delta_lift, 23);
  r.expect_equal("antipode identities independent of lift",
                 q2.projection * (antipode_free_1(h, pert) - antipode_free_2(h, pert)),
                 q2.projection * (antipode_free_1(h, h.delta_lift) - antipode_free_2(h, h.delta_lift)), sd);
  r.merge(check_hopf_galois(h));
  (void)f;
  return r;
}

Report check_hopf_galois(const HopfAlgebroid& h) {
  Report r("Hopf-Galois " + h.name);
  Matrix b;
  try {
    b = h.beta();
  } catch (const DescentFailure& e) {
    r.fail("beta well defined", {e.relation, e.coordinate}, e.what());
    return r;
  }
  r.pass("beta well defined");
  bool bij = b.rows() == b.cols() && rank(b) == b.rows();
  r.record("beta bijective", bij, std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  if (!bij) return r;
  const FieldSpec& f = h.field;
  const auto& ql = h.tower(Convention::Left, 2);
  const auto& qo = h.tower(Convention::Opposite, 2);
  Matrix u1 = ql.projection * kron(Matrix::identity(f, h.d()), h.U.unit_map());
  r.expect_equal("beta(u+ (x) u-) = u (x) 1", b * qo.projection * h.translation_lift(), u1, TensorShape({h.d()}));
  return r;
}

}  // namespace hcyc
