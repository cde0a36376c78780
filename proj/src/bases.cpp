#include "triqubit/bases.hpp"

#include <random>

namespace triqubit {

namespace {

PureState3Q ket_sum(std::initializer_list<std::pair<int, double>> terms) {
  Amplitudes a{};
  for (const auto& [r, w] : terms) a[r] = w;
  return make_pure(a);
}

void require_orthonormal(std::span<const PureState3Q> states, const char* what) {
  if (!is_orthonormal(states, kHermitianTol))
    throw Error(Errc::not_orthogonal, std::string(what) + " is not orthonormal within 1e-10");
}

double unitarity_residual(const Matrix<2>& u) {
  return max_abs_diff(u.adjoint() * u, Matrix<2>::identity());
}

}  // namespace

BasisSet::BasisSet(std::vector<PureState3Q> states, BasisKind kind)
    : states_(std::move(states)), kind_(kind) {
  require_orthonormal(states_, "basis set");
  for (const auto& psi : states_) {
    const bool product = is_fully_product(psi, kSeparabilityTol);
    if (kind_ == BasisKind::product && !product)
      throw Error(Errc::wrong_kind, "product basis contains an entangled state");
    if (kind_ == BasisKind::entangled && product)
      throw Error(Errc::wrong_kind, "entangled basis contains a fully product state");
  }
}

std::vector<PureState3Q> CBUPB::all() const {
  std::vector<PureState3Q> out(s_.states().begin(), s_.states().end());
  out.insert(out.end(), t_.states().begin(), t_.states().end());
  return out;
}

LocalUnitary::LocalUnitary(const Matrix<2>& u1, const Matrix<2>& u2, const Matrix<2>& u3)
    : u_{u1, u2, u3} {
  for (const auto& u : u_)
    if (!(unitarity_residual(u) <= kHermitianTol))
      throw Error(Errc::not_unitary, "local factor is not unitary within 1e-10");
}

LocalUnitary LocalUnitary::identity() {
  const auto id = Matrix<2>::identity();
  return {id, id, id};
}

LocalUnitary LocalUnitary::bit_flip() {
  Matrix<2> x;
  x(0, 1) = 1.0;
  x(1, 0) = 1.0;
  return {x, x, x};
}

Matrix<8> LocalUnitary::full() const { return kron(kron(u_[0], u_[1]), u_[2]); }

int min_upb_cardinality(std::span<const int> dims) {
  int n = 1;
  for (int d : dims) {
    if (d < 2) throw Error(Errc::bad_dimension, "every local dimension must be at least 2");
    n += d - 1;
  }
  return n;
}

BasisSet shifts_upb() {
  return BasisSet({ket_sum({{0, 1.0}}),
                   ket_sum({{4, 0.5}, {5, 0.5}, {6, -0.5}, {7, -0.5}}),
                   ket_sum({{2, 0.5}, {3, -0.5}, {6, 0.5}, {7, -0.5}}),
                   ket_sum({{1, 0.5}, {3, 0.5}, {5, -0.5}, {7, -0.5}})},
                  BasisKind::product);
}

std::array<ProductState3Q, 4> shifts_upb_factors() {
  const auto zero = QubitState::zero(), one = QubitState::one();
  const auto plus = QubitState::plus(), minus = QubitState::minus();
  return {{{zero, zero, zero}, {one, minus, plus}, {plus, one, minus}, {minus, plus, one}}};
}

BasisSet eeb() {
  return BasisSet({ket_sum({{1, 0.5}, {2, 0.5}, {4, 0.5}, {7, 0.5}}),
                   ket_sum({{1, 0.5}, {2, -0.5}, {5, 0.5}, {6, 0.5}}),
                   ket_sum({{1, -0.5}, {3, 0.5}, {4, 0.5}, {6, 0.5}}),
                   ket_sum({{2, 0.5}, {3, 0.5}, {4, -0.5}, {5, 0.5}})},
                  BasisKind::entangled);
}

CBUPB dual_cbupb() {
  BasisSet s({ket_sum({{7, 1.0}}),
              ket_sum({{3, 0.5}, {2, 0.5}, {1, -0.5}, {0, -0.5}}),
              ket_sum({{5, 0.5}, {4, -0.5}, {1, 0.5}, {0, -0.5}}),
              ket_sum({{6, 0.5}, {4, 0.5}, {2, -0.5}, {0, -0.5}})},
             BasisKind::product);
  BasisSet t({ket_sum({{6, 0.5}, {5, 0.5}, {3, 0.5}, {0, 0.5}}),
              ket_sum({{6, 0.5}, {5, -0.5}, {2, 0.5}, {1, 0.5}}),
              ket_sum({{6, -0.5}, {4, 0.5}, {3, 0.5}, {1, 0.5}}),
              ket_sum({{5, 0.5}, {4, 0.5}, {3, -0.5}, {2, 0.5}})},
             BasisKind::entangled);
  return cbupb(std::move(s), std::move(t));
}

CBUPB cbupb(BasisSet s, BasisSet t) {
  if (s.size() != 4 || t.size() != 4)
    throw Error(Errc::not_complete, "a three-qubit CBUPB needs four product and four entangled states");

  std::vector<PureState3Q> all(s.states().begin(), s.states().end());
  all.insert(all.end(), t.states().begin(), t.states().end());

  Matrix<8> gram;
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) gram(i, j) = inner(all[i], all[j]);
  const auto gram_ev = hermitian_eigenvalues(gram);
  if (gram_ev.back() < kHermitianTol)
    throw Error(Errc::not_complete, "the eight states do not span the three-qubit space");

  if (!is_orthonormal(all, kHermitianTol))
    throw Error(Errc::not_orthogonal, "product and entangled states are not mutually orthogonal");

  Matrix<8> resolution;
  for (const auto& psi : all) resolution += density_of(psi).matrix();
  if (max_abs_diff(resolution, Matrix<8>::identity()) > kHermitianTol)
    throw Error(Errc::not_complete, "outer products do not resolve the identity");

  for (const auto& psi : s.states())
    if (!is_fully_product(psi, kSeparabilityTol))
      throw Error(Errc::wrong_kind, "S contains an entangled state");
  for (const auto& psi : t.states())
    if (is_fully_product(psi, kSeparabilityTol)) throw Error(Errc::wrong_kind, "T contains a product state");

  return CBUPB(std::move(s), std::move(t));
}

double gram_residual(std::span<const PureState3Q> states) {
  double worst = 0.0;
  for (std::size_t i = 0; i < states.size(); ++i)
    for (std::size_t j = 0; j < states.size(); ++j) {
      const Amplitude expected = i == j ? 1.0 : 0.0;
      worst = std::max(worst, std::abs(inner(states[i], states[j]) - expected));
    }
  return worst;
}

bool is_orthonormal(std::span<const PureState3Q> states, double tol) {
  return gram_residual(states) <= tol;
}

bool equal_up_to_phase(const PureState3Q& x, const PureState3Q& y, double tol) {
  return std::abs(inner(x, y)) >= 1.0 - tol;
}

PureState3Q apply(const LocalUnitary& u, const PureState3Q& psi) {
  const auto full = u.full();
  Amplitudes out{};
  for (std::size_t r = 0; r < 8; ++r)
    for (std::size_t s = 0; s < 8; ++s) out[r] += full(r, s) * psi[s];
  return make_pure(out);
}

std::vector<PureState3Q> lu_transform(std::span<const PureState3Q> states, const LocalUnitary& u) {
  std::vector<PureState3Q> out;
  out.reserve(states.size());
  for (const auto& psi : states) out.push_back(apply(u, psi));
  return out;
}

LocalUnitary random_local_unitary(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);

  auto haar2 = [&] {
    // Ginibre columns z1, z2; Gram-Schmidt gives the QR factor with a
    // positive real R diagonal, which makes Q Haar distributed.
    std::array<Amplitude, 2> z1, z2;
    for (auto& z : z1) z = {gauss(rng), gauss(rng)};
    for (auto& z : z2) z = {gauss(rng), gauss(rng)};
    const double n1 = std::sqrt(std::norm(z1[0]) + std::norm(z1[1]));
    for (auto& z : z1) z /= n1;
    const Amplitude proj = std::conj(z1[0]) * z2[0] + std::conj(z1[1]) * z2[1];
    for (std::size_t i = 0; i < 2; ++i) z2[i] -= proj * z1[i];
    const double n2 = std::sqrt(std::norm(z2[0]) + std::norm(z2[1]));
    for (auto& z : z2) z /= n2;
    Matrix<2> q;
    q(0, 0) = z1[0];
    q(1, 0) = z1[1];
    q(0, 1) = z2[0];
    q(1, 1) = z2[1];
    return q;
  };
  const auto u1 = haar2();
  const auto u2 = haar2();
  const auto u3 = haar2();
  return {u1, u2, u3};
}

PureState3Q combine(const BasisSet& t, const std::array<Amplitude, 4>& coeffs) {
  double weight = 0.0;
  for (const auto& c : coeffs) weight += std::norm(c);
  if (weight <= 1e-12) throw Error(Errc::zero_vector, "all combination coefficients vanish");
  Amplitudes sum{};
  for (std::size_t i = 0; i < coeffs.size() && i < t.size(); ++i)
    for (std::size_t r = 0; r < 8; ++r) sum[r] += coeffs[i] * t[i][r];
  return normalized(sum);
}

}  // namespace triqubit
