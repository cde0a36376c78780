#include "triqubit/qstate.hpp"

#include <numbers>
#include <numeric>

namespace triqubit {

namespace {

double norm2(const Amplitudes& amps) {
  double n = 0.0;
  for (const auto& a : amps) n += std::norm(a);
  return n;
}

bool all_finite(const Amplitudes& amps) {
  for (const auto& a : amps)
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) return false;
  return true;
}

}  // namespace

PureState3Q make_pure(const Amplitudes& amps) {
  if (!all_finite(amps)) throw Error(Errc::not_normalized, "amplitudes must be finite");
  const double n2 = norm2(amps);
  if (std::abs(n2 - 1.0) > kNormTol)
    throw Error(Errc::not_normalized, "squared norm " + std::to_string(n2) + " differs from 1 by more than 1e-9");
  Amplitudes out = amps;
  if (n2 != 1.0) {
    const double scale = 1.0 / std::sqrt(n2);
    for (auto& a : out) a *= scale;
  }
  return PureState3Q(out);
}

PureState3Q normalized(const Amplitudes& amps) {
  if (!all_finite(amps)) throw Error(Errc::zero_vector, "amplitudes must be finite");
  const double n = std::sqrt(norm2(amps));
  if (n <= 1e-12) throw Error(Errc::zero_vector, "cannot normalize a vector of norm <= 1e-12");
  Amplitudes out = amps;
  for (auto& a : out) a /= n;
  return PureState3Q(out);
}

Amplitude inner(const PureState3Q& x, const PureState3Q& y) {
  Amplitude s = 0.0;
  for (std::size_t r = 0; r < 8; ++r) s += std::conj(x[r]) * y[r];
  return s;
}

QubitState::QubitState(Amplitude a0, Amplitude a1) : amps_{a0, a1} {
  const double n2 = std::norm(a0) + std::norm(a1);
  if (!std::isfinite(n2) || std::abs(n2 - 1.0) > kNormTol)
    throw Error(Errc::not_normalized, "qubit vector must have unit norm");
}

QubitState QubitState::plus() {
  return {std::numbers::sqrt2 / 2, std::numbers::sqrt2 / 2};
}

QubitState QubitState::minus() {
  return {std::numbers::sqrt2 / 2, -std::numbers::sqrt2 / 2};
}

const QubitState& ProductState3Q::factor(Party p) const {
  switch (p) {
    case Party::A: return a;
    case Party::B: return b;
    case Party::C: return c;
  }
  return a;
}

PureState3Q expand(const ProductState3Q& p) {
  Amplitudes amps;
  for (std::size_t r = 0; r < 8; ++r)
    amps[r] = p.a[party_bit(r, Party::A)] * p.b[party_bit(r, Party::B)] * p.c[party_bit(r, Party::C)];
  return make_pure(amps);
}

DensityMatrix3Q::DensityMatrix3Q(const Matrix<8>& m) : h_(m) {
  const double tr = h_.matrix().trace().real();
  if (std::abs(tr - 1.0) > kHermitianTol)
    throw Error(Errc::not_density_matrix, "trace " + std::to_string(tr) + " is not 1");
  const auto ev = hermitian_eigenvalues(h_);
  if (ev.back() < -kHermitianTol)
    throw Error(Errc::not_density_matrix, "matrix has a negative eigenvalue");
}

DensityMatrix3Q density_of(const PureState3Q& psi) {
  Matrix<8> m;
  for (std::size_t r = 0; r < 8; ++r)
    for (std::size_t s = 0; s < 8; ++s) m(r, s) = psi[r] * std::conj(psi[s]);
  return DensityMatrix3Q(m);
}

DensityMatrix3Q mix(std::span<const PureState3Q> states, std::span<const double> weights) {
  if (states.empty() || states.size() != weights.size())
    throw Error(Errc::bad_weights, "states and weights must be nonempty lists of equal length");
  for (double w : weights)
    if (!(w >= 0.0)) throw Error(Errc::bad_weights, "weights must be nonnegative");
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  if (std::abs(total - 1.0) > kExactTol) throw Error(Errc::bad_weights, "weights must sum to 1");

  Matrix<8> m;
  for (std::size_t j = 0; j < states.size(); ++j) {
    const auto& psi = states[j];
    for (std::size_t r = 0; r < 8; ++r)
      for (std::size_t s = 0; s < 8; ++s) m(r, s) += weights[j] * psi[r] * std::conj(psi[s]);
  }
  return DensityMatrix3Q(m);
}

HermitianMatrix<2> reduce_single(const DensityMatrix3Q& rho, Party p) {
  Matrix<2> out;
  for (std::size_t r = 0; r < 8; ++r)
    for (std::size_t s = 0; s < 8; ++s) {
      // Traced parties must agree between row and column.
      const std::size_t mask = 4u >> static_cast<std::size_t>(p);
      if ((r & ~mask) != (s & ~mask)) continue;
      out(party_bit(r, p), party_bit(s, p)) += rho(r, s);
    }
  return HermitianMatrix<2>(out);
}

HermitianMatrix<4> reduce_pair(const DensityMatrix3Q& rho, PartyPair pp) {
  Party first = Party::A, second = Party::B, traced = Party::C;
  switch (pp) {
    case PartyPair::AB: first = Party::A; second = Party::B; traced = Party::C; break;
    case PartyPair::BC: first = Party::B; second = Party::C; traced = Party::A; break;
    case PartyPair::AC: first = Party::A; second = Party::C; traced = Party::B; break;
  }
  Matrix<4> out;
  for (std::size_t r = 0; r < 8; ++r)
    for (std::size_t s = 0; s < 8; ++s) {
      if (party_bit(r, traced) != party_bit(s, traced)) continue;
      const std::size_t row = 2 * party_bit(r, first) + party_bit(r, second);
      const std::size_t col = 2 * party_bit(s, first) + party_bit(s, second);
      out(row, col) += rho(r, s);
    }
  return HermitianMatrix<4>(out);
}

Matrix<8> partial_transpose(const Matrix<8>& m, Party p) {
  const std::size_t mask = 4u >> static_cast<std::size_t>(p);
  Matrix<8> out;
  for (std::size_t r = 0; r < 8; ++r)
    for (std::size_t s = 0; s < 8; ++s) {
      // Swap party p's bit between the row and column index.
      const std::size_t r2 = (r & ~mask) | (s & mask);
      const std::size_t s2 = (s & ~mask) | (r & mask);
      out(r, s) = m(r2, s2);
    }
  return out;
}

HermitianMatrix<8> partial_transpose(const HermitianMatrix<8>& m, Party p) {
  return HermitianMatrix<8>(partial_transpose(m.matrix(), p));
}

HermitianMatrix<8> partial_transpose(const DensityMatrix3Q& rho, Party p) {
  return partial_transpose(rho.hermitian(), p);
}

}  // namespace triqubit
