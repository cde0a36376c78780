#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "triqubit/qstate.hpp"
#include "triqubit/tangles.hpp"

namespace triqubit {

enum class BasisKind { product, entangled, mixed };

// Ordered orthonormal list of states. kind=product requires every member to
// be fully product at 1e-10, kind=entangled requires none to be.
class BasisSet {
 public:
  // Throws Errc::not_orthogonal or Errc::wrong_kind.
  BasisSet(std::vector<PureState3Q> states, BasisKind kind);

  std::span<const PureState3Q> states() const& { return states_; }
  std::vector<PureState3Q> states() && { return std::move(states_); }
  const PureState3Q& operator[](std::size_t i) const { return states_[i]; }
  std::size_t size() const { return states_.size(); }
  BasisKind kind() const { return kind_; }

 private:
  std::vector<PureState3Q> states_;
  BasisKind kind_;
};

// Complete basis S u T with an unextendible product basis S (four product
// states) and four entangled states T. Only cbupb() builds one.
class CBUPB {
 public:
  const BasisSet& s() const& { return s_; }
  const BasisSet& t() const& { return t_; }
  BasisSet s() && { return std::move(s_); }
  BasisSet t() && { return std::move(t_); }
  std::vector<PureState3Q> all() const;

 private:
  friend CBUPB cbupb(BasisSet s, BasisSet t);
  CBUPB(BasisSet s, BasisSet t) : s_(std::move(s)), t_(std::move(t)) {}

  BasisSet s_;
  BasisSet t_;
};

// u1 x u2 x u3, each factor unitary within 1e-10.
class LocalUnitary {
 public:
  // Throws Errc::not_unitary.
  LocalUnitary(const Matrix<2>& u1, const Matrix<2>& u2, const Matrix<2>& u3);

  static LocalUnitary identity();
  static LocalUnitary bit_flip();  // X x X x X

  const Matrix<2>& factor(Party p) const { return u_[static_cast<std::size_t>(p)]; }
  Matrix<8> full() const;

 private:
  std::array<Matrix<2>, 3> u_;
};

// Lower bound sum(d_i - 1) + 1 on the size of a UPB; Errc::bad_dimension
// when some d_i < 2.
int min_upb_cardinality(std::span<const int> dims);

BasisSet shifts_upb();

// The four product factors of the Shifts states, S1..S4.
std::array<ProductState3Q, 4> shifts_upb_factors();

BasisSet eeb();

CBUPB dual_cbupb();

// Validates S u T. Check order: span rank (Errc::not_complete), pairwise
// orthonormality (Errc::not_orthogonal), resolution of identity
// (Errc::not_complete), then kinds (Errc::wrong_kind).
CBUPB cbupb(BasisSet s, BasisSet t);

bool is_orthonormal(std::span<const PureState3Q> states, double tol);

// max |<x_i|x_j> - delta_ij|.
double gram_residual(std::span<const PureState3Q> states);

// Equality up to a global phase: |<x|y>| >= 1 - tol.
bool equal_up_to_phase(const PureState3Q& x, const PureState3Q& y, double tol = kExactTol);

PureState3Q apply(const LocalUnitary& u, const PureState3Q& psi);
std::vector<PureState3Q> lu_transform(std::span<const PureState3Q> states, const LocalUnitary& u);

// Three independent Haar unitaries from a mt19937_64 stream seeded with
// `seed`. Deterministic per seed.
LocalUnitary random_local_unitary(std::uint64_t seed);

// Normalized sum_i coeffs_i t_i; Errc::zero_vector when sum |coeffs|^2 <= 1e-12.
PureState3Q combine(const BasisSet& t, const std::array<Amplitude, 4>& coeffs);

}  // namespace triqubit
