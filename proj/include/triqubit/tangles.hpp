#pragma once

#include "triqubit/qstate.hpp"

namespace triqubit {

// Seven tangles of a pure three-qubit state. Ordering used in tables and
// reports: (tau_a, tau_b, tau_c, tau_abc, tau_ab, tau_bc, tau_ac).
struct TangleProfile {
  double tau_a = 0.0;
  double tau_b = 0.0;
  double tau_c = 0.0;
  double tau_abc = 0.0;
  double tau_ab = 0.0;
  double tau_bc = 0.0;
  double tau_ac = 0.0;

  std::array<double, 7> as_array() const { return {tau_a, tau_b, tau_c, tau_abc, tau_ab, tau_bc, tau_ac}; }
  double one_tangle(Party p) const;
  double pairwise(PartyPair pp) const;
};

inline constexpr double kSeparabilityTol = 1e-10;

// 4 * sum of |2x2 minors|^2 of the 2x4 matrix that splits party p from the
// other two.
double one_tangle_minors(const PureState3Q& psi, Party p);

// 2 (1 - tr rho_p^2) from the reduced density matrix.
double one_tangle_entropy(const PureState3Q& psi, Party p);

// Cayley hyperdeterminant of the 2x2x2 amplitude tensor, complex in general.
Amplitude hyperdeterminant(const PureState3Q& psi);

// Same invariant from the full quartic expansion; used as a cross-check.
Amplitude hyperdeterminant_expanded(const PureState3Q& psi);

// |4 Hdet|.
double three_tangle(const PureState3Q& psi);

// tau_PQ = (tau_P + tau_Q - tau_R - tau_PQR) / 2, with |value| < 1e-12
// negatives clamped to zero.
double pairwise_tangle(const PureState3Q& psi, PartyPair pp);

TangleProfile tangle_profile(const PureState3Q& psi);

bool is_fully_product(const PureState3Q& psi, double tol = kSeparabilityTol);

// Wootters concurrence of a two-qubit density matrix. Throws
// Errc::not_density_matrix unless rho is PSD with unit trace within 1e-9.
double wootters_concurrence(const HermitianMatrix<4>& rho);

}  // namespace triqubit
