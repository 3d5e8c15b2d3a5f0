#pragma once

#include "hcyc/exactlin/linalg.hpp"

#include <cstdint>
#include <string>

namespace hcyc {

struct Space {
  std::uint64_t id = 0;
  int dim = 0;
  std::string label;
  static Space make(int dim, std::string label);
};

struct DescentFailure : std::runtime_error {
  DescentFailure(const std::string& what, int rel, int coord)
      : std::runtime_error(what), relation(rel), coordinate(coord) {}
  int relation;    // column of the source relation basis
  int coordinate;  // target quotient coordinate that is nonzero
};

// V / span(relations), with a chosen complement: the ambient coordinates that
// are not pivots of the reduced relation basis.
struct QuotientPresentation {
  FieldSpec field;
  Space ambient, quotient;
  Matrix relations;   // ambient x r, spans the kernel of projection
  Matrix projection;  // quotient x ambient
  Matrix section;     // ambient x quotient, projection * section = id
  std::vector<int> kept;
  std::string convention;

  int dim() const { return quotient.dim; }
  int ambient_dim() const { return ambient.dim; }
  static QuotientPresentation free(const FieldSpec& f, int dim, std::string label);
};

QuotientPresentation quotient_by(const FieldSpec& f, int ambient_dim, const Matrix& relations, std::string label);
QuotientPresentation tensor_presentation(const QuotientPresentation& a, const QuotientPresentation& b);

// The map induced on quotients by f_free : src.ambient -> dst.ambient.
Matrix descend(const Matrix& f_free, const QuotientPresentation& src, const QuotientPresentation& dst);
// Same as descend but only with target quotient: dst.projection * f_free * src.section after
// checking that src relations go to zero.
Matrix descend_to(const Matrix& f_free_on_src_ambient, const QuotientPresentation& src, const Matrix& dst_projection);

// lifts + (random combination of relations); used to test independence of lift choices.
Matrix perturb_lifts(const QuotientPresentation& q, const Matrix& lifts, unsigned seed);

}  // namespace hcyc
