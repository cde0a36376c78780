#pragma once

#include <array>
#include <cstddef>
#include <span>

#include "triqubit/linalg.hpp"

namespace triqubit {

enum class Party { A, B, C };
enum class PartyPair { AB, BC, AC };

inline constexpr std::array<Party, 3> kParties{Party::A, Party::B, Party::C};
inline constexpr std::array<PartyPair, 3> kPartyPairs{PartyPair::AB, PartyPair::BC, PartyPair::AC};

// Basis ket |ijk> lives at r = 4i + 2j + k.
constexpr std::size_t amp_index(bool i, bool j, bool k) noexcept {
  return 4u * static_cast<std::size_t>(i) + 2u * static_cast<std::size_t>(j) + static_cast<std::size_t>(k);
}

// Bit of party p inside amplitude index r.
constexpr std::size_t party_bit(std::size_t r, Party p) noexcept {
  return (r >> (2 - static_cast<std::size_t>(p))) & 1u;
}

using Amplitudes = std::array<Amplitude, 8>;

// Unit-norm three-qubit pure state; amplitudes in r-order.
class PureState3Q {
 public:
  const Amplitude& operator[](std::size_t r) const { return amps_[r]; }
  const Amplitudes& amplitudes() const { return amps_; }

  friend bool operator==(const PureState3Q&, const PureState3Q&) = default;

 private:
  friend PureState3Q make_pure(const Amplitudes&);
  friend PureState3Q normalized(const Amplitudes&);
  explicit PureState3Q(const Amplitudes& a) : amps_(a) {}

  Amplitudes amps_;
};

// Rejects |norm^2 - 1| > 1e-9 with Errc::not_normalized; smaller deviations
// are renormalized away. Non-finite input is also rejected as not_normalized.
PureState3Q make_pure(const Amplitudes& amps);

// Divides by the norm; Errc::zero_vector when the norm is <= 1e-12.
PureState3Q normalized(const Amplitudes& amps);

// <x|y>, conjugate-linear in x.
Amplitude inner(const PureState3Q& x, const PureState3Q& y);

// Unit-norm single-qubit vector.
class QubitState {
 public:
  // Throws Errc::not_normalized unless |a0|^2 + |a1|^2 = 1 within 1e-9.
  QubitState(Amplitude a0, Amplitude a1);

  static QubitState zero() { return {1.0, 0.0}; }
  static QubitState one() { return {0.0, 1.0}; }
  static QubitState plus();
  static QubitState minus();

  const Amplitude& operator[](std::size_t i) const { return amps_[i]; }
  const std::array<Amplitude, 2>& amplitudes() const { return amps_; }

  friend bool operator==(const QubitState&, const QubitState&) = default;

 private:
  std::array<Amplitude, 2> amps_;
};

struct ProductState3Q {
  QubitState a;
  QubitState b;
  QubitState c;

  const QubitState& factor(Party p) const;
};

PureState3Q expand(const ProductState3Q& p);

// 8x8 Hermitian, PSD (min eigenvalue >= -1e-10), trace 1 within 1e-10.
class DensityMatrix3Q {
 public:
  // Throws Errc::not_density_matrix (or not_hermitian) on violation.
  explicit DensityMatrix3Q(const Matrix<8>& m);

  const Matrix<8>& matrix() const { return h_.matrix(); }
  const HermitianMatrix<8>& hermitian() const { return h_; }
  const Amplitude& operator()(std::size_t r, std::size_t c) const { return h_(r, c); }

 private:
  HermitianMatrix<8> h_;
};

DensityMatrix3Q density_of(const PureState3Q& psi);

// Sum_j w_j |psi_j><psi_j|. Errc::bad_weights on empty/mismatched lists,
// negative weights, or weights not summing to 1 within 1e-12.
DensityMatrix3Q mix(std::span<const PureState3Q> states, std::span<const double> weights);

// Partial trace over the two complementary parties.
HermitianMatrix<2> reduce_single(const DensityMatrix3Q& rho, Party p);

// Partial trace over the remaining party; rows/cols ordered by the retained
// pair's bits (AB -> (i,j), BC -> (j,k), AC -> (i,k)).
HermitianMatrix<4> reduce_pair(const DensityMatrix3Q& rho, PartyPair pp);

// Transposes the indices of party p only. Pure index permutation.
Matrix<8> partial_transpose(const Matrix<8>& m, Party p);
HermitianMatrix<8> partial_transpose(const HermitianMatrix<8>& m, Party p);
HermitianMatrix<8> partial_transpose(const DensityMatrix3Q& rho, Party p);

}  // namespace triqubit
