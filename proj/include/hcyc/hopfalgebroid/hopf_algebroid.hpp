#pragma once

#include "hcyc/algcore/algebra.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>

namespace hcyc {

// Left: U_< (x)_A >U with t(a)u (x) v = u (x) s(a)v.
// Opposite: U (x)_{A^op} U with u t(a) (x) v = u (x) t(a)v (the A_R-tensor of the
// cyclic module, equivalently >U (x)_{A^op} U<).
enum class Convention { Left, Opposite };

struct Term {
  Scalar c;
  std::vector<int> idx;
};
std::vector<Term> terms(const Vec& v, const TensorShape& sh);

class HopfAlgebroid {
 public:
  std::string name;
  FieldSpec field;
  AlgebraData U, A;
  Matrix s, t;        // d x a
  Matrix delta_lift;  // d^2 x d, a lift of Delta_L to U (x)_k U
  Matrix eps;         // a x d
  Matrix S;           // d x d
  bool has_antipode = true;

  HopfAlgebroid();
  int d() const { return U.dim; }
  int a() const { return A.dim; }

  TowerFactor factor(Convention c) const;
  // U^{(x) n}, n >= 1
  const QuotientPresentation& tower(Convention c, int n) const;
  Matrix delta() const;                       // U -> U (x)_A U
  Matrix delta_iter(int n) const;             // U -> U^{(x)_k n} lift of the n-fold coproduct
  Matrix beta() const;                        // >U (x)_{A^op} U<  ->  U_< (x)_A >U
  Matrix translation_lift() const;            // d^2 x d, u -> u_+ (x) u_- (free)
  HopfAlgebroid perturbed(unsigned seed) const;

  Vec mul(const Vec& x, const Vec& y) const { return U.product(x, y); }
  Vec mul(int i, const Vec& y) const { return U.product(unit_vec(i), y); }
  const Vec& s_of(int a) const { return s.col(a); }
  const Vec& t_of(int a) const { return t.col(a); }
  Vec one() const { return U.unit; }
  // right counit eps o S
  Matrix eps_R() const { return eps * S; }

 private:
  struct Cache {
    std::mutex mu;
    std::map<std::pair<int, int>, std::shared_ptr<const QuotientPresentation>> towers;
    std::optional<Matrix> beta, translation;
  };
  std::shared_ptr<Cache> cache_;
  std::optional<Matrix> translation_override_;
};

using HopfPtr = std::shared_ptr<const HopfAlgebroid>;

Report check_left_bialgebroid(const HopfAlgebroid& h);
Report check_hopf_algebroid(const HopfAlgebroid& h);
// beta bijective, beta(u_+ (x) u_-) = u (x) 1
Report check_hopf_galois(const HopfAlgebroid& h);

// Free-tensor permutation: output factor k is input factor perm[k].
Matrix permute_factors(const TensorShape& in, const std::vector<int>& perm, const FieldSpec& f);

}  // namespace hcyc
