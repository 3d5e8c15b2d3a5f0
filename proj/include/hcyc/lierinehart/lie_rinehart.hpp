#pragma once

#include "hcyc/cyclichom/homology.hpp"
#include "hcyc/cyclichom/induced.hpp"

#include <map>

namespace hcyc {

// L free over the commutative algebra R on generators Z_0..Z_{m-1}; k-basis of L is r_i Z_a at a * dim R + i.
struct LieRinehartData {
  std::string name;
  AlgebraData R;
  int m = 0;
  Matrix bracket;  // L (x) L -> L
  Matrix anchor;   // L (x) R -> R, Z (x) r -> Z(r)
  Matrix nabla;    // L (x) R -> R, Z (x) r -> nabla_Z(r)
  Matrix act;      // R (x) L -> L

  int ldim() const { return R.dim * m; }
  int lindex(int gen, int r) const { return gen * R.dim + r; }
};

// Tables from generator data: [Z_a, Z_b] (L elements), Z_a as a derivation of R (dim R x dim R),
// theta_a = nabla_{Z_a}(1). Extended by Leibniz and nabla_Z(r) = r nabla_Z(1) - Z(r).
LieRinehartData free_lie_rinehart(std::string name, const AlgebraData& R, int m,
                                  const std::vector<std::vector<Vec>>& gen_bracket,
                                  const std::vector<Matrix>& gen_anchor, const std::vector<Vec>& theta);

Report check_lie_rinehart(const LieRinehartData& d);

// wedge^n_R L = R (x) wedge^n k^m; basis (r_i, S) at i * C(m, n) + rank of S among n-subsets (lexicographic)
struct WedgeBasis {
  int m = 0, rdim = 0;
  std::vector<std::vector<std::vector<int>>> subsets;  // subsets[n]
  int dim(int n) const { return rdim * int(subsets[n].size()); }
  int index(int n, int r, const std::vector<int>& s) const;
};
WedgeBasis wedge_basis(const LieRinehartData& d, int top);

// wedge of the given L elements (k-coordinates) in wedge^n_R L
Vec wedge_of(const LieRinehartData& d, const WedgeBasis& wb, const std::vector<Vec>& elems);

// (wedge_R L, d) for degrees 0..top; diff[n] : wedge^n -> wedge^{n-1}
Complex lr_complex(const LieRinehartData& d, int top);
HomologyReport lr_homology(const LieRinehartData& d, int top);
// r Z_1 ^ Z_2 ^ ... and Z_1 ^ r Z_2 ^ ... have the same boundary
Report check_lr_balanced(const LieRinehartData& d, int top);

struct LrMeasuringData {
  std::string name;
  CoalgebraData C;
  std::shared_ptr<const LieRinehartData> src, dst;
  std::vector<Matrix> Psi;  // L -> L'
  std::vector<Matrix> psi;  // R -> R'
};

Report check_lr_measuring(const LrMeasuringData& m);
InducedMap induced_lr_chain_map(const LrMeasuringData& m, const Vec& x, int top, bool strict = true);

// R + L with [(r, Z), (r', Z')] = (Z(r') - Z'(r), [Z, Z']); basis R first, then L
Matrix semidirect_bracket(const LieRinehartData& d);

struct CutoffExceeded : std::out_of_range {
  using std::out_of_range::out_of_range;
};

// V(R, L, nabla) truncated at word length W, PBW basis r_i Z_{a_1} ... Z_{a_k} with a_1 <= ... <= a_k, k <= W
class TruncatedEnvelope {
 public:
  TruncatedEnvelope(std::shared_ptr<const LieRinehartData> d, int W);

  const LieRinehartData& lr() const { return *d_; }
  int cutoff() const { return W_; }
  int dim() const { return int(words_.size()) * d_->R.dim; }
  int word_count() const { return int(words_.size()); }
  const std::vector<int>& word(int w) const { return words_[w]; }
  int word_index(const std::vector<int>& w) const;
  int index(int r, int w) const { return w * d_->R.dim + r; }
  int degree(int basis) const { return int(words_[basis / d_->R.dim].size()); }

  Vec unit() const;
  Vec from_r(const Vec& r) const;
  Vec from_l(const Vec& z) const;
  // throws CutoffExceeded when the product leaves the truncation
  Vec mul(const Vec& u, const Vec& v) const;

  Matrix s() const;    // R -> V, equal to t
  Matrix eps() const;  // V -> R
  // Delta on generators: Z -> 1 (x) Z + Z (x) 1, r -> r (x) 1; columns R basis then L basis, in V (x)_k V
  Matrix delta_on_generators() const;

 private:
  std::shared_ptr<const LieRinehartData> d_;
  int W_;
  std::vector<std::vector<int>> words_;
  std::map<std::vector<int>, int> lookup_;
};

struct EnvelopeMeasuringReport {
  std::vector<Matrix> maps;  // per basis of C: V -> V'
  Report report;
};
// Sweedler measuring on all word pairs under the cutoff (pairs above it reported unchecked), the ideal
// relation (r1 r2, r1 Z) = r1 (r2, Z), the R + L bracket compatibility, and x(r . Z) = x(1)(r) . x(2)(Z).
EnvelopeMeasuringReport envelope_measuring(const LrMeasuringData& m, const TruncatedEnvelope& v,
                                           const TruncatedEnvelope& v2);

// V^{(x)_R n} restricted to words, coordinates (r_i, w_1, ..., w_n) at i * wc^n + encoded word tuple
Matrix alt_map(const TruncatedEnvelope& v, const WedgeBasis& wb, int n);
// Alt_n o x = x o Alt_n on wedge^n, n <= W
Report check_alt_intertwines(const LrMeasuringData& m, const TruncatedEnvelope& v, const TruncatedEnvelope& v2,
                             const Vec& x, int n);

namespace gallery {

std::shared_ptr<const LieRinehartData> abelian_lr(FieldSpec f, int m);
// [e, f] = f over R = k
std::shared_ptr<const LieRinehartData> affine_lr(FieldSpec f);
// sl2 over R = k: [h, e] = 2e, [h, f] = -2f, [e, f] = h
std::shared_ptr<const LieRinehartData> sl2_lr(FieldSpec f);
// R = k[e]/e^2, L = R E with E(e) = e, nabla_E(1) = 0
std::shared_ptr<const LieRinehartData> euler_lr(FieldSpec f);

LrMeasuringData identity_lr_measuring(std::shared_ptr<const LieRinehartData> d);
// C = span{g, x}; x acts by D(e) = 0, D(f) = f on the affine algebra, psi(x) = 0
LrMeasuringData affine_derivation(FieldSpec f);
// D(f) = e instead
LrMeasuringData affine_derivation_broken(FieldSpec f);
// C = span{g, x}; psi(x) = e d/de on R, Psi(x)(r E) = x(r) E
LrMeasuringData euler_lr_measuring(FieldSpec f);

}  // namespace gallery

}  // namespace hcyc
