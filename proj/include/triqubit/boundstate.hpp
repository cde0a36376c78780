#pragma once

#include <array>
#include <optional>

#include "triqubit/bases.hpp"
#include "triqubit/productsearch.hpp"

namespace triqubit {

struct PptReport {
  // Descending spectra of the partial transposes on A, B and C (cuts
  // A|BC, B|AC, C|AB).
  std::array<std::array<double, 8>, 3> spectra{};
  double min_eigenvalue = 0.0;
  bool ppt_all = false;  // min_eigenvalue >= -1e-10
};

struct BoundEntanglementCertificate {
  PptReport ppt;
  Verdict range_product_free;
  bool matrix_matches_paper = false;

  bool bound_entangled() const { return ppt.ppt_all && range_product_free.certified; }
};

using Sixteenths = std::array<std::array<int, 8>, 8>;

// The reference 8x8 mixture as integer numerators over 16.
const Sixteenths& reference_sixteenths();

// Uniform mixture over the four members of t.
DensityMatrix3Q rho_from_eeb(const BasisSet& t);

// (I - P_S) / 4.
DensityMatrix3Q rho_from_upb_complement(const BasisSet& s);

// reference_sixteenths() / 16 as a density matrix.
DensityMatrix3Q paper_matrix();

// max |16 rho - reference|, entrywise.
double sixteenths_residual(const DensityMatrix3Q& rho);

// 16 rho rounded entrywise, if every entry is an integer sixteenth within
// 1e-12 (and real).
std::optional<Sixteenths> as_sixteenths(const DensityMatrix3Q& rho);

PptReport ppt_report(const DensityMatrix3Q& rho);

// Requires (s, t) to form a CBUPB (errors propagate from cbupb()).
BoundEntanglementCertificate certify_bound_entanglement(const BasisSet& s, const BasisSet& t,
                                                        const SearchConfig& cfg = {});

}  // namespace triqubit
