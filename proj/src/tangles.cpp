#include "triqubit/tangles.hpp"

namespace triqubit {

namespace {

struct Minor {
  int a, b, c, d;  // |x_a x_b - x_c x_d|^2
};

// Six minors per party, in the order the amplitudes pair up.
constexpr std::array<Minor, 6> kMinorsA{{{0, 5, 1, 4}, {0, 6, 2, 4}, {0, 7, 3, 4}, {1, 6, 2, 5}, {1, 7, 3, 5}, {2, 7, 3, 6}}};
constexpr std::array<Minor, 6> kMinorsB{{{0, 3, 1, 2}, {0, 6, 2, 4}, {0, 7, 2, 5}, {1, 6, 3, 4}, {1, 7, 3, 5}, {4, 7, 5, 6}}};
constexpr std::array<Minor, 6> kMinorsC{{{0, 5, 1, 4}, {0, 3, 1, 2}, {0, 7, 1, 6}, {3, 4, 2, 5}, {4, 7, 5, 6}, {2, 7, 3, 6}}};

const std::array<Minor, 6>& minors_for(Party p) {
  switch (p) {
    case Party::A: return kMinorsA;
    case Party::B: return kMinorsB;
    case Party::C: return kMinorsC;
  }
  return kMinorsA;
}

double clamp_noise(double v) { return (v < 0.0 && v > -kExactTol) ? 0.0 : v; }

}  // namespace

double TangleProfile::one_tangle(Party p) const {
  switch (p) {
    case Party::A: return tau_a;
    case Party::B: return tau_b;
    case Party::C: return tau_c;
  }
  return tau_a;
}

double TangleProfile::pairwise(PartyPair pp) const {
  switch (pp) {
    case PartyPair::AB: return tau_ab;
    case PartyPair::BC: return tau_bc;
    case PartyPair::AC: return tau_ac;
  }
  return tau_ab;
}

double one_tangle_minors(const PureState3Q& psi, Party p) {
  double sum = 0.0;
  for (const auto& m : minors_for(p)) sum += std::norm(psi[m.a] * psi[m.b] - psi[m.c] * psi[m.d]);
  return 4.0 * sum;
}

double one_tangle_entropy(const PureState3Q& psi, Party p) {
  const auto rho = reduce_single(density_of(psi), p);
  double purity = 0.0;
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c) purity += std::norm(rho(r, c));
  return 2.0 * (1.0 - purity);
}

Amplitude hyperdeterminant(const PureState3Q& psi) {
  const auto& a = psi.amplitudes();
  const Amplitude first = a[0] * a[7] + a[1] * a[6] - a[2] * a[5] - a[3] * a[4];
  return first * first + 4.0 * (a[0] * a[6] - a[2] * a[4]) * (a[3] * a[5] - a[1] * a[7]);
}

Amplitude hyperdeterminant_expanded(const PureState3Q& psi) {
  const auto& a = psi.amplitudes();
  const Amplitude squares = a[0] * a[0] * a[7] * a[7] + a[1] * a[1] * a[6] * a[6] + a[2] * a[2] * a[5] * a[5] +
                            a[3] * a[3] * a[4] * a[4];
  const Amplitude pairs = a[0] * a[7] * (a[1] * a[6] + a[2] * a[5] + a[3] * a[4]) +
                          a[1] * a[6] * (a[2] * a[5] + a[3] * a[4]) + a[2] * a[5] * a[3] * a[4];
  const Amplitude cross = a[0] * a[3] * a[5] * a[6] + a[1] * a[2] * a[4] * a[7];
  return squares - 2.0 * pairs + 4.0 * cross;
}

double three_tangle(const PureState3Q& psi) { return std::abs(4.0 * hyperdeterminant(psi)); }

namespace {

double pairwise_from(double tau_p, double tau_q, double tau_r, double tau_pqr) {
  return clamp_noise(0.5 * (tau_p + tau_q - tau_r - tau_pqr));
}

double pairwise_of(const TangleProfile& t, PartyPair pp) {
  switch (pp) {
    case PartyPair::AB: return pairwise_from(t.tau_a, t.tau_b, t.tau_c, t.tau_abc);
    case PartyPair::BC: return pairwise_from(t.tau_b, t.tau_c, t.tau_a, t.tau_abc);
    case PartyPair::AC: return pairwise_from(t.tau_a, t.tau_c, t.tau_b, t.tau_abc);
  }
  return 0.0;
}

}  // namespace

double pairwise_tangle(const PureState3Q& psi, PartyPair pp) {
  TangleProfile t;
  t.tau_a = one_tangle_minors(psi, Party::A);
  t.tau_b = one_tangle_minors(psi, Party::B);
  t.tau_c = one_tangle_minors(psi, Party::C);
  t.tau_abc = three_tangle(psi);
  return pairwise_of(t, pp);
}

TangleProfile tangle_profile(const PureState3Q& psi) {
  TangleProfile t;
  t.tau_a = one_tangle_minors(psi, Party::A);
  t.tau_b = one_tangle_minors(psi, Party::B);
  t.tau_c = one_tangle_minors(psi, Party::C);
  t.tau_abc = three_tangle(psi);
  t.tau_ab = pairwise_of(t, PartyPair::AB);
  t.tau_bc = pairwise_of(t, PartyPair::BC);
  t.tau_ac = pairwise_of(t, PartyPair::AC);
  return t;
}

bool is_fully_product(const PureState3Q& psi, double tol) {
  for (Party p : kParties)
    if (one_tangle_minors(psi, p) > tol) return false;
  return true;
}

double wootters_concurrence(const HermitianMatrix<4>& rho) {
  constexpr double kDensityTol = 1e-9;
  if (std::abs(rho.trace() - 1.0) > kDensityTol)
    throw Error(Errc::not_density_matrix, "two-qubit state must have unit trace");
  const auto sys = eigh(rho);
  if (sys.values.back() < -kDensityTol)
    throw Error(Errc::not_density_matrix, "two-qubit state must be positive semidefinite");

  // rho = sum_i |v_i><v_i| with subnormalized v_i = sqrt(p_i) e_i. The square
  // roots of the spin-flipped spectrum are the singular values of
  // T_ij = v_i^T (Y x Y) v_j. Eigenvalues below the noise floor are dropped so
  // that rank-deficient marginals give exact zero rows.
  constexpr double kRankFloor = 1e-14;
  std::array<std::array<Amplitude, 4>, 4> v{};
  std::size_t rank = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    if (sys.values[i] <= kRankFloor) continue;
    const double w = std::sqrt(sys.values[i]);
    for (std::size_t r = 0; r < 4; ++r) v[rank][r] = w * sys.vectors(r, i);
    ++rank;
  }
  if (rank == 0) return 0.0;

  // (Y x Y)|ab> = -(-1)^(a+b) |(1-a)(1-b)>, i.e. sign flip on 01/10 and reversal.
  constexpr std::array<double, 4> kFlipSign{-1.0, 1.0, 1.0, -1.0};
  auto flip_dot = [&](const std::array<Amplitude, 4>& x, const std::array<Amplitude, 4>& y) {
    Amplitude s = 0.0;
    for (std::size_t r = 0; r < 4; ++r) s += x[r] * kFlipSign[r] * y[3 - r];
    return s;
  };

  std::array<double, 4> sv{};
  if (rank == 1) {
    sv[0] = std::abs(flip_dot(v[0], v[0]));
  } else if (rank == 2) {
    const Amplitude t00 = flip_dot(v[0], v[0]), t01 = flip_dot(v[0], v[1]), t11 = flip_dot(v[1], v[1]);
    // 2x2 complex symmetric: s1^2 + s2^2 = ||T||_F^2 and s1 s2 = |det T|.
    const double fro2 = std::norm(t00) + 2.0 * std::norm(t01) + std::norm(t11);
    const double det = std::abs(t00 * t11 - t01 * t01);
    const double disc = std::sqrt(std::max(0.0, fro2 * fro2 - 4.0 * det * det));
    sv[0] = std::sqrt(0.5 * (fro2 + disc));
    sv[1] = sv[0] > 0.0 ? det / sv[0] : 0.0;
  } else {
    Matrix<4> tht;  // T^H T, zero-padded beyond the rank
    std::array<std::array<Amplitude, 4>, 4> t{};
    for (std::size_t i = 0; i < rank; ++i)
      for (std::size_t j = 0; j < rank; ++j) t[i][j] = flip_dot(v[i], v[j]);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        for (std::size_t k = 0; k < 4; ++k) tht(i, j) += std::conj(t[k][i]) * t[k][j];
    const auto ev = hermitian_eigenvalues(HermitianMatrix<4>(tht));
    for (std::size_t i = 0; i < 4; ++i) sv[i] = std::sqrt(std::max(0.0, ev[i]));
  }
  return std::max(0.0, sv[0] - sv[1] - sv[2] - sv[3]);
}

}  // namespace triqubit
