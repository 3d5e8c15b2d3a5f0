#include "hcyc/cyclichom/shuffle.hpp"
#include "hcyc/cyclichom/homology.hpp"

#include <algorithm>

namespace hcyc {

bool is_commutative(const HopfAlgebroid& h) {
  for (int i = 0; i < h.d(); ++i)
    for (int j = i + 1; j < h.d(); ++j)
      if (h.mul(i, unit_vec(j)) != h.mul(j, unit_vec(i))) return false;
  for (int i = 0; i < h.a(); ++i)
    for (int j = i + 1; j < h.a(); ++j)
      if (h.A.product(unit_vec(i), unit_vec(j)) != h.A.product(unit_vec(j), unit_vec(i))) return false;
  return true;
}

namespace {

// positions[k] is the output slot of input factor k; first p increasing, last q increasing
void for_each_shuffle(int p, int q, const std::function<void(const std::vector<int>&, int)>& fn) {
  std::vector<bool> first(p + q, false);
  std::fill(first.begin(), first.begin() + p, true);
  do {
    std::vector<int> pos;
    for (int j = 0; j < p + q; ++j)
      if (first[j]) pos.push_back(j);
    for (int j = 0; j < p + q; ++j)
      if (!first[j]) pos.push_back(j);
    int inv = 0;
    for (int i = 0; i < p; ++i)
      for (int j = p; j < p + q; ++j)
        if (pos[i] > pos[j]) ++inv;
    fn(pos, inv % 2 ? -1 : 1);
  } while (std::prev_permutation(first.begin(), first.end()));
}

QuotientPresentation space(const CyclicModuleData& cu, int n) { return cu.spaces[n]; }

}  // namespace

Matrix shuffle_product(const HopfAlgebroid& h, const CyclicModuleData& cu, int p, int q) {
  if (!is_commutative(h)) throw NotCommutative(h.name + " is not commutative");
  if (p + q > cu.top) throw std::out_of_range("shuffle degree above truncation");
  const FieldSpec& f = h.field;
  int d = h.d(), a = h.a();
  QuotientPresentation src = tensor_presentation(space(cu, p), space(cu, q));
  const QuotientPresentation& dst = cu.spaces[p + q];
  Matrix free;
  if (p == 0 && q == 0) {
    free = h.A.mul;
  } else if (q == 0) {
    std::vector<int> dims(p, d);
    dims.push_back(a);
    free = build_free(f, TensorShape(dims), dst.ambient_dim(), [&](const std::vector<int>& idx, Accumulator& acc) {
      TensorShape out = TensorShape::power(d, p);
      std::vector<int> o(idx.begin(), idx.end() - 1);
      for (auto& [k, c] : h.mul(h.t_of(idx[p]), unit_vec(idx[0]))) {
        o[0] = k;
        acc.add(out.encode(o), c, f);
      }
    });
  } else if (p == 0) {
    std::vector<int> dims{a};
    for (int i = 0; i < q; ++i) dims.push_back(d);
    free = build_free(f, TensorShape(dims), dst.ambient_dim(), [&](const std::vector<int>& idx, Accumulator& acc) {
      TensorShape out = TensorShape::power(d, q);
      std::vector<int> o(idx.begin() + 1, idx.end());
      for (auto& [k, c] : h.mul(idx[q], h.t_of(idx[0]))) {
        o[q - 1] = k;
        acc.add(out.encode(o), c, f);
      }
    });
  } else {
    TensorShape in = TensorShape::power(d, p + q);
    free = Matrix(f, in.size(), in.size());
    for_each_shuffle(p, q, [&](const std::vector<int>& pos, int sign) {
      std::vector<int> perm(p + q);
      for (int k = 0; k < p + q; ++k) perm[pos[k]] = k;
      Matrix m = permute_factors(in, perm, f);
      free = sign > 0 ? free + m : free - m;
    });
  }
  return descend(free, src, dst);
}

Report check_shuffle_chain_map(const HopfAlgebroid& h, const CyclicModuleData& cu) {
  Report r("shuffle chain map " + h.name);
  const FieldSpec& f = h.field;
  Complex c = hochschild_complex(cu);
  for (int p = 0; p <= cu.top; ++p)
    for (int q = 0; p + q <= cu.top; ++q) {
      if (p + q == 0) continue;
      Matrix lhs = c.diff[p + q] * shuffle_product(h, cu, p, q);
      Matrix rhs(f, cu.dim(p + q - 1), cu.dim(p) * cu.dim(q));
      if (p > 0) rhs = rhs + shuffle_product(h, cu, p - 1, q) * kron(c.diff[p], Matrix::identity(f, cu.dim(q)));
      if (q > 0) {
        Matrix t = shuffle_product(h, cu, p, q - 1) * kron(Matrix::identity(f, cu.dim(p)), c.diff[q]);
        rhs = p % 2 ? rhs - t : rhs + t;
      }
      r.expect_equal("b sh = sh(b(x)1 +- 1(x)b) p=" + std::to_string(p) + " q=" + std::to_string(q), lhs, rhs,
                     TensorShape({cu.dim(p), cu.dim(q)}));
    }
  return r;
}

Report check_shuffle_measuring(const MeasuringData& m, const Vec& x, int top) {
  const HopfAlgebroid& h = *m.src;
  const HopfAlgebroid& h2 = *m.dst;
  const FieldSpec& f = h.field;
  Report r("shuffle measuring " + m.name);
  CyclicModuleData cu = build_cyclic_CU(h, top), cu2 = build_cyclic_CU(h2, top);
  std::vector<InducedMap> per_basis;
  for (int k = 0; k < m.C.dim; ++k) per_basis.push_back(induced_map(m, unit_vec(k), cu, cu2));
  InducedMap fx = induced_map(m, x, cu, cu2);

  Scalar ex = 0;
  for (auto& [k, c] : x) ex += c * m.C.counit.at(0, k);
  r.record("x(1) = eps(x) 1", fx.maps[0].apply(h.A.unit) == scaled(h2.A.unit, ex, f));

  HomologyReport hh = hochschild_homology(cu), hh2 = hochschild_homology(cu2);
  Complex c2 = hochschild_complex(cu2);
  TensorShape cc({m.C.dim, m.C.dim});
  for (int p = 0; p <= top; ++p)
    for (int q = 0; p + q <= top; ++q) {
      std::string tag = " p=" + std::to_string(p) + " q=" + std::to_string(q);
      Matrix lhs = fx.maps[p + q] * shuffle_product(h, cu, p, q);
      Matrix sh2 = shuffle_product(h2, cu2, p, q);
      Matrix rhs(f, cu2.dim(p + q), cu.dim(p) * cu.dim(q));
      for (auto& [k, xc] : x)
        for (const Term& t : terms(m.C.comul.col(k), cc))
          rhs = rhs + (sh2 * kron(per_basis[t.idx[0]].maps[p], per_basis[t.idx[1]].maps[q])).scaled(xc * t.c);
      r.expect_equal("x sh = sh(x(1) (x) x(2))" + tag, lhs, rhs, TensorShape({cu.dim(p), cu.dim(q)}));
      if (p + q >= top) continue;
      Matrix reps = kron(hh.reps[p], hh.reps[q]);
      Matrix il = lhs * reps, ir = rhs * reps;
      if (p + q > 0 && !(c2.diff[p + q] * il).is_zero()) {
        r.unchecked("on HH" + tag, "shuffle of cycles is not a cycle");
        continue;
      }
      r.expect_equal("on HH" + tag, hh2.coords(p + q, il), hh2.coords(p + q, ir));
    }
  return r;
}

}  // namespace hcyc
