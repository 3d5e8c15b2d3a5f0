#pragma once

#include "hcyc/cyclichom/cyclic_module.hpp"

namespace hcyc {

enum class Theory { HH, HC, HHco, HCco };
std::string theory_name(Theory t);

// A complex W_n derived from a (co)cyclic module: the whole space, a quotient or a subspace of C_n.
struct Complex {
  enum class Kind { Whole, Quotient, Sub };
  FieldSpec field;
  bool cochain = false;
  int top = 0;
  Kind kind = Kind::Whole;
  std::vector<int> dims;
  // chain: diff[n] : W_n -> W_{n-1} (n >= 1); cochain: diff[n] : W_n -> W_{n+1} (n < top)
  std::vector<Matrix> diff;
  std::vector<Matrix> proj;  // Quotient: C_n -> W_n
  std::vector<Matrix> lift;  // Quotient: section W_n -> C_n; Sub: inclusion W_n -> C_n

  // f : C_n -> C'_n (a chain map) restricted to W_n -> W'_n
  Matrix restrict_map(int n, const Complex& dst, const Matrix& f) const;
  // chain vectors of C_n to W_n (Quotient: project; Sub: solve)
  Matrix to_work(int n, const Matrix& v) const;
  Matrix from_work(int n, const Matrix& w) const;
};

// b = sum (-1)^i d_i, resp. sum (-1)^i delta_i
Complex hochschild_complex(const CyclicModuleData& m);
// quotient by degeneracy images (cyclic) or intersection of codegeneracy kernels (cocyclic)
Complex normalized_complex(const CyclicModuleData& m);
// Connes lambda-quotient C_n / im(1 - (-1)^n t_n), resp. lambda-subcomplex ker(1 - (-1)^n tau_n); char 0 only
Complex connes_complex(const CyclicModuleData& m);

struct HomologyReport {
  Theory theory = Theory::HH;
  std::string module;
  int max_degree = 0;  // top - 1
  std::vector<int> dims;
  std::vector<Matrix> reps;    // reps[n]: columns are cycles in W_n representing a basis
  std::vector<Matrix> bounds;  // bounds[n]: spanning set of boundaries in W_n

  // coordinates of the classes of the given cycles (columns in W_n) in the reps basis
  Matrix coords(int n, const Matrix& cycles) const;
};

HomologyReport homology(const Complex& c, Theory theory, const std::string& label);
HomologyReport hochschild_homology(const CyclicModuleData& m);
HomologyReport cyclic_homology_char0(const CyclicModuleData& m);

// degree-n map on homology induced by f_n : C_n -> C'_n
Matrix induced_on_homology(const HomologyReport& h, const Complex& c, const HomologyReport& h2, const Complex& c2,
                           int n, const Matrix& f);

struct MixedComplexData {
  FieldSpec field;
  int top = 0;
  std::vector<int> dims;
  std::vector<Matrix> b;  // b[n] : C_n -> C_{n-1}
  std::vector<Matrix> B;  // B[n] : C_n -> C_{n+1}, n < top
};
// B = (1 - lambda) s N with s = t_{n+1} s_n the extra degeneracy and lambda = (-1)^n t_n
MixedComplexData mixed_complex(const CyclicModuleData& cyclic);
Report check_mixed_complex(const MixedComplexData& m);

}  // namespace hcyc
