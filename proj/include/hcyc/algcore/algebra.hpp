#pragma once

#include "hcyc/algcore/report.hpp"
#include "hcyc/exactlin/quotient.hpp"

namespace hcyc {

// Finite-dimensional unital associative algebra; mul column i*dim+j is e_i e_j.
struct AlgebraData {
  std::string name;
  FieldSpec field;
  int dim = 0;
  Matrix mul;
  Vec unit;

  const Vec& basis_product(int i, int j) const { return mul.col(i * dim + j); }
  Vec product(const Vec& a, const Vec& b) const;
  Matrix left_mult(const Vec& a) const;
  Matrix right_mult(const Vec& a) const;
  Matrix unit_map() const;  // ground field -> algebra
  AlgebraData opposite() const;
  bool is_commutative() const;

  static AlgebraData ground(FieldSpec f);
  static AlgebraData from_table(std::string name, FieldSpec f, int dim,
                                const std::vector<std::tuple<int, int, int, Scalar>>& table, Vec unit);
};

AlgebraData tensor_algebra(const AlgebraData& a, const AlgebraData& b);

struct CoalgebraData {
  std::string name;
  FieldSpec field;
  int dim = 0;
  Matrix comul;   // dim^2 x dim
  Matrix counit;  // 1 x dim

  static CoalgebraData ground(FieldSpec f);
  // span{g, x} with g grouplike and x (g,g)-primitive
  static CoalgebraData grouplike_primitive(FieldSpec f);
  static CoalgebraData grouplike(FieldSpec f);
};

CoalgebraData tensor_coalgebra(const CoalgebraData& a, const CoalgebraData& b);
// n-fold coproduct C -> C^{(x)n}; n = 0 gives the counit.
Matrix iterated(const Matrix& comul, const Matrix& counit, int dim, int n);

enum class Side { Left, Right };

// Module over a k-algebra. Right: column p*adim+a is p.a; left: column a*dim+p is a.p.
struct ModuleActionData {
  std::string name;
  Side side = Side::Right;
  int dim = 0;
  Matrix action;
};

// Comodule over a k-coalgebra. Right: y -> y(0) (x) y(1) in D (x) C; left: in C (x) D.
struct ComoduleData {
  std::string name;
  Side side = Side::Right;
  int dim = 0;
  Matrix coaction;
};

Report check_algebra(const AlgebraData& a);
Report check_coalgebra(const CoalgebraData& c);
Report check_module(const AlgebraData& a, const ModuleActionData& m);
Report check_comodule(const CoalgebraData& c, const ComoduleData& m);
Report check_algebra_map(const AlgebraData& src, const AlgebraData& dst, const Matrix& f, const std::string& label,
                         bool anti = false);

// Sweedler measuring C (x) R -> R': x(ab) = x(1)(a) x(2)(b), x(1) = eps(x) 1.
Report check_sweedler_measuring(const CoalgebraData& c, const AlgebraData& r, const AlgebraData& r2,
                                const std::vector<Matrix>& psi);

// Sum over the Sweedler terms of Delta(e_x): coefficient * (m1[x1] (x) m2[x2]).
Matrix sweedler_pair(const CoalgebraData& c, int x, const std::vector<Matrix>& m1, const std::vector<Matrix>& m2);
// Sum over terms of the n-fold coproduct of e_x: coefficient * kron(ms[x1],...,ms[xn]).
Matrix sweedler_kron(const CoalgebraData& c, int x, int n, const std::vector<Matrix>& ms);
Matrix sweedler_kron(const CoalgebraData& c, int x, const std::vector<const std::vector<Matrix>*>& per_slot);
Matrix combine(const std::vector<Matrix>& per_basis, const Vec& x, int rows, int cols, const FieldSpec& f);

// One factor in a balanced tensor tower. right_act: column x*adim+a is x<a;
// left_act: column a*dim+x is a>x. Unused sides may be left empty.
struct TowerFactor {
  int dim = 0;
  Matrix right_act;
  Matrix left_act;
};

// V_1 (x)_A ... (x)_A V_n as a quotient of the free tensor product, with relation
// (x<a) (x) y - x (x) (a>y) at every junction.
QuotientPresentation balanced_tower(const FieldSpec& f, int adim, const std::vector<TowerFactor>& factors,
                                    std::string label, std::string convention);

}  // namespace hcyc
