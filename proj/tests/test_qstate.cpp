#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"

using namespace triqubit;
using namespace triqubit::testing;

TEST_CASE("amp_index maps |ijk> to 4i + 2j + k") {
  CHECK(amp_index(0, 0, 0) == 0);
  CHECK(amp_index(1, 1, 1) == 7);
  CHECK(amp_index(1, 0, 1) == 5);

  std::array<bool, 8> seen{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) {
        const auto r = amp_index(i, j, k);
        CHECK(r == static_cast<std::size_t>(4 * i + 2 * j + k));
        seen[r] = true;
        CHECK(party_bit(r, Party::A) == static_cast<std::size_t>(i));
        CHECK(party_bit(r, Party::B) == static_cast<std::size_t>(j));
        CHECK(party_bit(r, Party::C) == static_cast<std::size_t>(k));
      }
  for (bool s : seen) CHECK(s);
}

TEST_CASE("make_pure") {
  SUBCASE("basis ket") {
    const auto psi = make_pure({1, 0, 0, 0, 0, 0, 0, 0});
    CHECK(psi[0] == Amplitude(1.0));
  }
  SUBCASE("eeb member") {
    const auto psi = make_pure({0, 0.5, 0.5, 0, 0.5, 0, 0, 0.5});
    CHECK(max_amp_diff(psi, eeb()[0]) == 0.0);
  }
  SUBCASE("rejects norm^2 = 2") {
    CHECK(error_code_of([] { make_pure({1, 1, 0, 0, 0, 0, 0, 0}); }) == Errc::not_normalized);
  }
  SUBCASE("renormalizes tiny deviations") {
    const auto psi = make_pure({1.0 + 1e-10, 0, 0, 0, 0, 0, 0, 0});
    CHECK(std::abs(inner(psi, psi).real() - 1.0) < 1e-15);
  }
  SUBCASE("rejects NaN") {
    CHECK(error_code_of([] { make_pure({NAN, 0, 0, 0, 0, 0, 0, 0}); }) == Errc::not_normalized);
  }
}

TEST_CASE("normalized") {
  CHECK(max_amp_diff(normalized({2, 0, 0, 0, 0, 0, 0, 0}), basis_ket(0)) == 0.0);
  const auto g = normalized({1, 0, 0, 0, 0, 0, 0, 1});
  CHECK(g[0].real() == doctest::Approx(1 / std::sqrt(2.0)).epsilon(1e-15));
  CHECK(g[7].real() == doctest::Approx(1 / std::sqrt(2.0)).epsilon(1e-15));
  CHECK(error_code_of([] { normalized(Amplitudes{}); }) == Errc::zero_vector);
}

TEST_CASE("inner products of the Shifts and exact-entanglement states") {
  const auto s = shifts_upb();
  const auto t = eeb();
  CHECK(std::abs(inner(t[0], s[1])) < 1e-15);
  CHECK(std::abs(inner(t[0], t[0]) - 1.0) < 1e-15);
  CHECK(std::abs(inner(s[0], t[0])) < 1e-15);
  // conjugate-linear in the first slot
  const auto x = normalized(Amplitudes{Amplitude(0, 1), 1.0, 0, 0, 0, 0, 0, 0});
  const auto y = basis_ket(0);
  CHECK(std::abs(inner(x, y) - Amplitude(0, -1 / std::sqrt(2.0))) < 1e-15);
}

TEST_CASE("inner(x, x) is 1 for random states") {
  std::mt19937_64 rng(11);
  for (int n = 0; n < 200; ++n) {
    const auto psi = random_state(rng);
    const auto v = inner(psi, psi);
    CHECK(std::abs(v.imag()) < 1e-15);
    CHECK(std::abs(v.real() - 1.0) < 1e-9);
  }
}

TEST_CASE("expand") {
  const auto zero = QubitState::zero(), one = QubitState::one();
  const auto plus = QubitState::plus(), minus = QubitState::minus();
  CHECK(max_amp_diff(expand({zero, zero, zero}), basis_ket(0)) == 0.0);
  CHECK(max_amp_diff(expand({one, minus, plus}), shifts_upb()[1]) < 1e-15);
  const auto e = expand({plus, zero, zero});
  CHECK(std::abs(e[0] - 1 / std::sqrt(2.0)) < 1e-15);
  CHECK(std::abs(e[4] - 1 / std::sqrt(2.0)) < 1e-15);
  CHECK(error_code_of([] { QubitState(1.0, 1.0); }) == Errc::not_normalized);
}

TEST_CASE("density_of") {
  const auto d0 = density_of(basis_ket(0));
  CHECK(d0(0, 0) == Amplitude(1.0));
  CHECK(max_abs_diff(d0.matrix() - d0.matrix(), Matrix<8>{}) == 0.0);

  const auto d1 = density_of(eeb()[0]);
  constexpr std::array<std::size_t, 4> support{1, 2, 4, 7};
  for (std::size_t r = 0; r < 8; ++r)
    for (std::size_t c = 0; c < 8; ++c) {
      const bool in = std::ranges::count(support, r) && std::ranges::count(support, c);
      CHECK(std::abs(d1(r, c) - (in ? 0.25 : 0.0)) < 1e-15);
    }

  const auto dg = density_of(ghz());
  for (auto [r, c] : {std::pair{0, 0}, {0, 7}, {7, 0}, {7, 7}}) CHECK(std::abs(dg(r, c) - 0.5) < 1e-15);
  CHECK(std::abs(dg.matrix().trace() - 1.0) < 1e-15);
}

TEST_CASE("density matrix validation") {
  Matrix<8> m;
  m(0, 0) = 2.0;
  CHECK(error_code_of([&] { DensityMatrix3Q{m}; }) == Errc::not_density_matrix);
  m(0, 0) = 1.5;
  m(1, 1) = -0.5;
  CHECK(error_code_of([&] { DensityMatrix3Q{m}; }) == Errc::not_density_matrix);
  Matrix<8> h;
  h(0, 0) = 1.0;
  h(0, 1) = 0.1;
  CHECK(error_code_of([&] { DensityMatrix3Q{h}; }) == Errc::not_hermitian);
}

TEST_CASE("mix") {
  const std::array states{basis_ket(0)};
  const std::array w{1.0};
  CHECK(max_abs_diff(mix(states, w).matrix(), density_of(basis_ket(0)).matrix()) == 0.0);

  const std::array two{basis_ket(0), basis_ket(7)};
  const std::array bad{0.3, 0.8};
  CHECK(error_code_of([&] { mix(two, bad); }) == Errc::bad_weights);
  const std::array neg{1.5, -0.5};
  CHECK(error_code_of([&] { mix(two, neg); }) == Errc::bad_weights);
  CHECK(error_code_of([&] { mix(two, std::span<const double>(w)); }) == Errc::bad_weights);
  CHECK(error_code_of([&] { mix(std::span<const PureState3Q>{}, std::span<const double>{}); }) == Errc::bad_weights);

  SUBCASE("uniform over an orthonormal basis is I/8") {
    const auto all = cbupb(shifts_upb(), eeb()).all();
    std::vector<double> uniform(8, 0.125);
    const auto rho = mix(all, uniform);
    CHECK(max_abs_diff(rho.matrix(), Matrix<8>::identity() * 0.125) < 1e-12);

    std::vector<PureState3Q> comp;
    for (std::size_t r = 0; r < 8; ++r) comp.push_back(basis_ket(r));
    CHECK(max_abs_diff(mix(comp, uniform).matrix(), Matrix<8>::identity() * 0.125) < 1e-12);
  }
}

TEST_CASE("reduce_single") {
  const auto a0 = reduce_single(density_of(basis_ket(0)), Party::A);
  CHECK(a0(0, 0) == Amplitude(1.0));
  CHECK(a0(1, 1) == Amplitude(0.0));

  for (Party p : kParties) {
    const auto r = reduce_single(density_of(eeb()[0]), p);
    CHECK(std::abs(r(0, 0) - 0.5) < 1e-15);
    CHECK(std::abs(r(1, 1) - 0.5) < 1e-15);
    CHECK(std::abs(r(0, 1)) < 1e-15);
  }

  const auto plus = reduce_single(density_of(normalized({1, 0, 0, 0, 1, 0, 0, 0})), Party::A);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) CHECK(std::abs(plus(i, j) - 0.5) < 1e-15);
}

TEST_CASE("marginals of random product states are pure") {
  std::mt19937_64 rng(5);
  for (int n = 0; n < 200; ++n) {
    const auto rho = density_of(expand(random_product(rng)));
    for (Party p : kParties) {
      const auto m = reduce_single(rho, p).matrix();
      CHECK(std::abs((m * m).trace().real() - 1.0) < 1e-9);
      CHECK(std::abs(m.trace() - 1.0) < 1e-12);
    }
  }
}

TEST_CASE("reduce_pair") {
  const auto ab0 = reduce_pair(density_of(basis_ket(0)), PartyPair::AB);
  CHECK(max_abs_diff(ab0.matrix(), [] { Matrix<4> m; m(0, 0) = 1.0; return m; }()) == 0.0);

  const auto ab = reduce_pair(density_of(ghz()), PartyPair::AB);
  Matrix<4> expected;
  expected(0, 0) = expected(3, 3) = 0.5;
  CHECK(max_abs_diff(ab.matrix(), expected) < 1e-15);

  // phi_1 = (|0>(|01> + |10>) + |1>(|00> + |11>)) / 2 traced over A.
  const auto bc = reduce_pair(density_of(eeb()[0]), PartyPair::BC);
  Matrix<4> phi_bc = Matrix<4>::identity();
  phi_bc(1, 2) = phi_bc(2, 1) = phi_bc(0, 3) = phi_bc(3, 0) = 1.0;
  CHECK(max_abs_diff(bc.matrix(), phi_bc * 0.25) < 1e-15);

  // AC keeps (i, k): |1 0 1> = a5 lands at row 2*1 + 1 = 3.
  const auto ac = reduce_pair(density_of(basis_ket(5)), PartyPair::AC);
  CHECK(ac(3, 3) == Amplitude(1.0));
  const auto bc5 = reduce_pair(density_of(basis_ket(5)), PartyPair::BC);
  CHECK(bc5(1, 1) == Amplitude(1.0));
}

TEST_CASE("partial_transpose") {
  const auto d0 = density_of(basis_ket(0));
  for (Party p : kParties) CHECK(partial_transpose(d0, p).matrix() == d0.matrix());

  SUBCASE("GHZ on A has one negative eigenvalue -1/2") {
    const auto ev = hermitian_eigenvalues(partial_transpose(density_of(ghz()), Party::A));
    const std::array<double, 8> expected{0.5, 0.5, 0.5, 0, 0, 0, 0, -0.5};
    for (std::size_t i = 0; i < 8; ++i) CHECK(std::abs(ev[i] - expected[i]) < 1e-12);
  }

  SUBCASE("index swap on the named party only") {
    Matrix<8> m;
    for (std::size_t r = 0; r < 8; ++r)
      for (std::size_t c = 0; c < 8; ++c) m(r, c) = Amplitude(static_cast<double>(r), static_cast<double>(c));
    const auto t = partial_transpose(m, Party::A);
    // (i,j,k),(i',j',k') <- (i',j,k),(i,j',k')
    CHECK(t(amp_index(0, 1, 0), amp_index(1, 0, 1)) == m(amp_index(1, 1, 0), amp_index(0, 0, 1)));
    const auto tc = partial_transpose(m, Party::C);
    CHECK(tc(amp_index(0, 0, 0), amp_index(0, 0, 1)) == m(amp_index(0, 0, 1), amp_index(0, 0, 0)));
  }

  SUBCASE("involution and trace preservation on random mixtures") {
    std::mt19937_64 rng(3);
    for (int n = 0; n < 50; ++n) {
      const std::array states{random_state(rng), random_state(rng), random_state(rng)};
      const std::array w{0.5, 0.3, 0.2};
      const auto rho = mix(states, w);
      for (Party p : kParties) {
        const auto once = partial_transpose(rho, p);
        CHECK(partial_transpose(once, p).matrix() == rho.matrix());
        CHECK(std::abs(once.trace() - rho.matrix().trace().real()) < 1e-12);
      }
    }
  }
}

TEST_CASE("hermitian_eigenvalues") {
  Matrix<2> d;
  d(0, 0) = 3.0;
  d(1, 1) = 1.0;
  auto ev = hermitian_eigenvalues(d);
  CHECK(ev[0] == doctest::Approx(3.0));
  CHECK(ev[1] == doctest::Approx(1.0));

  Matrix<2> ones;
  ones(0, 0) = ones(0, 1) = ones(1, 0) = ones(1, 1) = 1.0;
  ev = hermitian_eigenvalues(ones);
  CHECK(std::abs(ev[0] - 2.0) < 1e-15);
  CHECK(std::abs(ev[1]) < 1e-15);

  for (double v : hermitian_eigenvalues(Matrix<8>::identity() * 0.125)) CHECK(v == 0.125);

  Matrix<2> skew;
  skew(0, 1) = 1.0;
  CHECK(error_code_of([&] { hermitian_eigenvalues(skew); }) == Errc::not_hermitian);
}

TEST_CASE("eigen-decomposition reconstructs random Hermitian matrices") {
  std::mt19937_64 rng(17);
  std::normal_distribution<double> g(0.0, 1.0);
  for (int n = 0; n < 100; ++n) {
    Matrix<8> m;
    for (std::size_t r = 0; r < 8; ++r) {
      m(r, r) = g(rng);
      for (std::size_t c = r + 1; c < 8; ++c) {
        m(r, c) = {g(rng), g(rng)};
        m(c, r) = std::conj(m(r, c));
      }
    }
    const auto sys = eigh(HermitianMatrix<8>(m));
    Matrix<8> d;
    for (std::size_t i = 0; i < 8; ++i) d(i, i) = sys.values[i];
    const auto rebuilt = sys.vectors * d * sys.vectors.adjoint();
    double spectral = std::max(std::abs(sys.values.front()), std::abs(sys.values.back()));
    CHECK(max_abs_diff(rebuilt, m) < 1e-12 * spectral * 8);
    CHECK(max_abs_diff(sys.vectors.adjoint() * sys.vectors, Matrix<8>::identity()) < 1e-13);
    double sum = 0.0;
    for (std::size_t i = 0; i < 8; ++i) {
      sum += sys.values[i];
      if (i > 0) CHECK(sys.values[i] <= sys.values[i - 1]);
    }
    CHECK(std::abs(sum - m.trace().real()) < 1e-9);
  }
}

TEST_CASE("density spectra lie in [0, 1] and sum to 1") {
  std::mt19937_64 rng(23);
  for (int n = 0; n < 100; ++n) {
    const std::array states{random_state(rng), random_state(rng)};
    const std::array w{0.6, 0.4};
    const auto ev = hermitian_eigenvalues(mix(states, w).hermitian());
    double sum = 0.0;
    for (double v : ev) {
      CHECK(v >= -1e-10);
      CHECK(v <= 1 + 1e-10);
      sum += v;
    }
    CHECK(std::abs(sum - 1.0) < 1e-9);
  }
}
