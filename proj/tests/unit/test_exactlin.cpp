#include "doctest.h"

#include "hcyc/exactlin/quotient.hpp"
#include "hcyc/exactlin/tensor.hpp"

#include <random>

using namespace hcyc;

namespace {

Matrix dense(FieldSpec f, std::vector<std::vector<long>> rows) {
  std::vector<std::vector<Scalar>> r;
  for (auto& row : rows) {
    r.emplace_back();
    for (long v : row) r.back().emplace_back(v);
  }
  return Matrix::from_dense(f, r);
}

Matrix random_sparse(FieldSpec f, int rows, int cols, int fill_pct, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> pct(0, 99), val(-5, 5);
  Matrix m(f, rows, cols);
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i)
      if (pct(rng) < fill_pct) m.set(i, j, Scalar(val(rng)));
  return m;
}

}  // namespace

TEST_CASE("rank and kernel of the all-ones 2x2") {
  Matrix q = dense(FieldSpec::rationals(), {{1, 1}, {1, 1}});
  CHECK(rank(q) == 1);
  Matrix k = kernel(q);
  REQUIRE(k.cols() == 1);
  CHECK((q * k).is_zero());

  FieldSpec f2 = FieldSpec::prime(2);
  Matrix m = dense(f2, {{1, 1}, {1, 1}});
  Matrix k2 = kernel(m);
  REQUIRE(k2.cols() == 1);
  CHECK(k2.at(0, 0) == 1);
  CHECK(k2.at(1, 0) == 1);
}

TEST_CASE("prime field reduction") {
  FieldSpec f5 = FieldSpec::prime(5);
  CHECK(f5.reduce(Scalar(1, 2)) == 3);
  CHECK(f5.reduce(Scalar(-1)) == 4);
  CHECK(f5.inverse(Scalar(2)) == 3);
  CHECK_THROWS_AS(f5.reduce(Scalar(1, 5)), NotInvertible);
  CHECK_THROWS_AS(FieldSpec::prime(6), std::invalid_argument);
  CHECK(FieldSpec::parse("F7").characteristic() == 7);
}

TEST_CASE("serial and parallel elimination agree") {
  for (FieldSpec f : {FieldSpec::rationals(), FieldSpec::prime(7)}) {
    for (int fill : {5, 20, 70}) {
      Matrix m = random_sparse(f, 120, 90, fill, 11u + fill);
      Matrix t = m.transpose();
      RowEchelon a = rref_serial(t.columns(), m.cols(), f);
      RowEchelon b = rref_parallel(t.columns(), m.cols(), f);
      CHECK(a.pivots == b.pivots);
      CHECK(a.rows == b.rows);
    }
  }
}

TEST_CASE("kernel, image and solve are consistent") {
  FieldSpec f = FieldSpec::rationals();
  Matrix m = random_sparse(f, 30, 45, 15, 3);
  Matrix k = kernel(m);
  CHECK((m * k).is_zero());
  CHECK(k.cols() + rank(m) == m.cols());
  Matrix im = image_basis(m);
  CHECK(im.cols() == rank(m));
  Vec x = m.col(4);
  axpy(x, Scalar(3), m.col(9), f);
  auto sol = solve(m, x);
  REQUIRE(sol);
  CHECK(m.apply(*sol) == x);
  Matrix sq = dense(f, {{2, 1}, {1, 1}});
  CHECK(sq * inverse(sq) == Matrix::identity(f, 2));
  CHECK_THROWS_AS(inverse(dense(f, {{1, 1}, {1, 1}})), NotInvertible);
}

TEST_CASE("quotient presentation and descent") {
  FieldSpec f = FieldSpec::rationals();
  // R^3 / span(e0 - e1)
  Matrix rel(f, 3, 1);
  rel.set(0, 0, 1);
  rel.set(1, 0, -1);
  QuotientPresentation q = quotient_by(f, 3, rel, "V");
  CHECK(q.dim() == 2);
  CHECK(q.projection * q.section == Matrix::identity(f, 2));
  CHECK((q.projection * rel).is_zero());
  // swapping e0,e1 descends; e0 -> e2 does not
  Matrix swap(f, 3, 3);
  swap.set(1, 0, 1);
  swap.set(0, 1, 1);
  swap.set(2, 2, 1);
  CHECK(descend(swap, q, q) == Matrix::identity(f, 2));
  Matrix bad(f, 3, 3);
  bad.set(2, 0, 1);
  CHECK_THROWS_AS(descend(bad, q, q), DescentFailure);
  Matrix lifts = perturb_lifts(q, q.section, 5);
  CHECK(q.projection * lifts == Matrix::identity(f, 2));
}

TEST_CASE("tensor helpers") {
  FieldSpec f = FieldSpec::rationals();
  TensorShape s({2, 3, 2});
  CHECK(s.size() == 12);
  CHECK(s.encode(std::vector<int>{1, 2, 0}) == 10);
  CHECK(s.decode(10) == std::vector<int>{1, 2, 0});
  Vec a{{0, Scalar(1)}, {1, Scalar(2)}}, b{{2, Scalar(1)}}, c{{1, Scalar(-1)}};
  Vec o = outer(std::vector<Vec>{a, b, c}, s, f);
  CHECK(o.size() == 2);
  CHECK(vec_at(o, s.encode(std::vector<int>{1, 2, 1})) == -2);
  Matrix g = dense(f, {{0, 1, 0}, {1, 0, 0}, {0, 0, 1}});
  Matrix sm = slot_map(s, 1, 1, g, f);
  CHECK(sm == kron_all({Matrix::identity(f, 2), g, Matrix::identity(f, 2)}));
}
