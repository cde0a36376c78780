#include "triqubit/boundstate.hpp"

namespace triqubit {

const Sixteenths& reference_sixteenths() {
  static const Sixteenths kMatrix{{
      {0, 0, 0, 0, 0, 0, 0, 0},
      {0, 3, 0, -1, 0, 1, 0, 1},
      {0, 0, 3, 1, 0, 0, -1, 1},
      {0, -1, 1, 2, 0, 1, 1, 0},
      {0, 0, 0, 0, 3, -1, 1, 1},
      {0, 1, 0, 1, -1, 2, 1, 0},
      {0, 0, -1, 1, 1, 1, 2, 0},
      {0, 1, 1, 0, 1, 0, 0, 1},
  }};
  return kMatrix;
}

DensityMatrix3Q rho_from_eeb(const BasisSet& t) {
  if (t.size() != 4) throw Error(Errc::bad_weights, "the uniform mixture needs exactly four states");
  constexpr std::array<double, 4> kWeights{0.25, 0.25, 0.25, 0.25};
  return mix(t.states(), kWeights);
}

DensityMatrix3Q rho_from_upb_complement(const BasisSet& s) {
  if (s.size() != 4) throw Error(Errc::not_complete, "the complement mixture needs exactly four states");
  Matrix<8> m = Matrix<8>::identity();
  for (const auto& psi : s.states()) m -= density_of(psi).matrix();
  return DensityMatrix3Q(m * 0.25);
}

DensityMatrix3Q paper_matrix() {
  Matrix<8> m;
  const auto& ref = reference_sixteenths();
  for (std::size_t r = 0; r < 8; ++r)
    for (std::size_t c = 0; c < 8; ++c) m(r, c) = ref[r][c] / 16.0;
  return DensityMatrix3Q(m);
}

double sixteenths_residual(const DensityMatrix3Q& rho) {
  double worst = 0.0;
  const auto& ref = reference_sixteenths();
  for (std::size_t r = 0; r < 8; ++r)
    for (std::size_t c = 0; c < 8; ++c)
      worst = std::max(worst, std::abs(16.0 * rho(r, c) - static_cast<double>(ref[r][c])));
  return worst;
}

std::optional<Sixteenths> as_sixteenths(const DensityMatrix3Q& rho) {
  Sixteenths out{};
  for (std::size_t r = 0; r < 8; ++r)
    for (std::size_t c = 0; c < 8; ++c) {
      const Amplitude scaled = 16.0 * rho(r, c);
      const double rounded = std::round(scaled.real());
      if (std::abs(scaled - rounded) > kExactTol) return std::nullopt;
      out[r][c] = static_cast<int>(rounded);
    }
  return out;
}

PptReport ppt_report(const DensityMatrix3Q& rho) {
  PptReport report;
  report.min_eigenvalue = 1.0;
  for (Party p : kParties) {
    auto& spectrum = report.spectra[static_cast<std::size_t>(p)];
    spectrum = hermitian_eigenvalues(partial_transpose(rho, p));
    report.min_eigenvalue = std::min(report.min_eigenvalue, spectrum.back());
  }
  report.ppt_all = report.min_eigenvalue >= -kHermitianTol;
  return report;
}

BoundEntanglementCertificate certify_bound_entanglement(const BasisSet& s, const BasisSet& t,
                                                        const SearchConfig& cfg) {
  const auto basis = cbupb(s, t);
  const auto rho = rho_from_eeb(basis.t());

  BoundEntanglementCertificate cert;
  cert.matrix_matches_paper = sixteenths_residual(rho) < kExactTol;
  cert.ppt = ppt_report(rho);
  // The range of the uniform mixture is span(T).
  cert.range_product_free = ees_product_free(basis.t(), cfg);
  return cert;
}

}  // namespace triqubit
