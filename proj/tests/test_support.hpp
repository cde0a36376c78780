#pragma once

#include <cmath>
#include <random>

#include "triqubit/triqubit.hpp"

namespace triqubit::testing {

inline PureState3Q basis_ket(std::size_t r) {
  Amplitudes a{};
  a[r] = 1.0;
  return make_pure(a);
}

inline PureState3Q ghz() {
  Amplitudes a{};
  a[0] = a[7] = 1.0;
  return normalized(a);
}

inline PureState3Q w_state() {
  Amplitudes a{};
  a[1] = a[2] = a[4] = 1.0;
  return normalized(a);
}

// normalized(phi_1 + ... + phi_n) over the first n members of eeb().
inline PureState3Q eeb_sum(int n) {
  std::array<Amplitude, 4> c{};
  for (int i = 0; i < n; ++i) c[i] = 1.0;
  return combine(eeb(), c);
}

inline PureState3Q random_state(std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Amplitudes a;
  for (auto& x : a) x = {g(rng), g(rng)};
  return normalized(a);
}

inline QubitState random_qubit(std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Amplitude a0{g(rng), g(rng)}, a1{g(rng), g(rng)};
  const double n = std::sqrt(std::norm(a0) + std::norm(a1));
  return {a0 / n, a1 / n};
}

inline ProductState3Q random_product(std::mt19937_64& rng) {
  auto a = random_qubit(rng);
  auto b = random_qubit(rng);
  auto c = random_qubit(rng);
  return {a, b, c};
}

inline double max_amp_diff(const PureState3Q& x, const PureState3Q& y) {
  double worst = 0.0;
  for (std::size_t r = 0; r < 8; ++r) worst = std::max(worst, std::abs(x[r] - y[r]));
  return worst;
}

template <typename F>
Errc error_code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  throw std::logic_error("expected triqubit::Error");
}

}  // namespace triqubit::testing
