#pragma once

#include "hcyc/cyclichom/constructions.hpp"
#include "hcyc/measuring/measuring.hpp"

namespace hcyc {

struct InducedMap {
  std::string label;
  std::vector<Matrix> maps;  // maps[n] : src.spaces[n] -> dst.spaces[n]
  Report certificate;
};

// src/dst are C^*(U) or C_*(U) built over m.src and m.dst.
// strict: throw CertificateFailure when the certificate fails.
InducedMap induced_map(const MeasuringData& m, const Vec& x, const CyclicModuleData& src, const CyclicModuleData& dst,
                       bool strict = true);
// src/dst are C_*(U;P) or C^*(U;P) over (base.src, P) and (base.dst, P2).
InducedMap induced_map(const ComoduleMeasuringData& cm, const Vec& y, const CyclicModuleData& src,
                       const CyclicModuleData& dst, bool strict = true);

// xi' o induced_cyclic = induced_cocyclic o xi, degrees 0..top
Report hopf_galois_square(const MeasuringData& m, const Vec& x, int top);
Report hopf_galois_square(const ComoduleMeasuringData& cm, const Vec& y, int top);

}  // namespace hcyc
