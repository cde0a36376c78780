#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "triqubit/error.hpp"

namespace triqubit {

using Amplitude = std::complex<double>;

// Tolerances shared across modules.
inline constexpr double kNormTol = 1e-9;       // user-supplied norms
inline constexpr double kHermitianTol = 1e-10; // Hermiticity / PSD checks
inline constexpr double kExactTol = 1e-12;     // identities on exact constructions

// Dense row-major N x N complex matrix.
template <std::size_t N>
class Matrix {
 public:
  static constexpr std::size_t size = N;

  constexpr Matrix() = default;

  static Matrix identity() {
    Matrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = 1.0;
    return m;
  }

  Amplitude& operator()(std::size_t r, std::size_t c) { return data_[r * N + c]; }
  const Amplitude& operator()(std::size_t r, std::size_t c) const { return data_[r * N + c]; }

  std::span<const Amplitude, N * N> data() const { return data_; }

  Matrix adjoint() const {
    Matrix out;
    for (std::size_t r = 0; r < N; ++r)
      for (std::size_t c = 0; c < N; ++c) out(c, r) = std::conj((*this)(r, c));
    return out;
  }

  Amplitude trace() const {
    Amplitude t = 0.0;
    for (std::size_t i = 0; i < N; ++i) t += (*this)(i, i);
    return t;
  }

  Matrix& operator+=(const Matrix& o) {
    for (std::size_t i = 0; i < N * N; ++i) data_[i] += o.data_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    for (std::size_t i = 0; i < N * N; ++i) data_[i] -= o.data_[i];
    return *this;
  }
  Matrix& operator*=(Amplitude s) {
    for (auto& x : data_) x *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, Amplitude s) { return a *= s; }
  friend Matrix operator*(Amplitude s, Matrix a) { return a *= s; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    Matrix out;
    for (std::size_t r = 0; r < N; ++r)
      for (std::size_t k = 0; k < N; ++k) {
        const Amplitude ark = a(r, k);
        if (ark == Amplitude{}) continue;
        for (std::size_t c = 0; c < N; ++c) out(r, c) += ark * b(k, c);
      }
    return out;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::array<Amplitude, N * N> data_{};
};

template <std::size_t N>
double max_abs_diff(const Matrix<N>& a, const Matrix<N>& b) {
  double worst = 0.0;
  for (std::size_t r = 0; r < N; ++r)
    for (std::size_t c = 0; c < N; ++c) worst = std::max(worst, std::abs(a(r, c) - b(r, c)));
  return worst;
}

template <std::size_t N>
double hermiticity_residual(const Matrix<N>& m) {
  return max_abs_diff(m, m.adjoint());
}

template <std::size_t N, std::size_t M>
Matrix<N * M> kron(const Matrix<N>& a, const Matrix<M>& b) {
  Matrix<N * M> out;
  for (std::size_t r1 = 0; r1 < N; ++r1)
    for (std::size_t c1 = 0; c1 < N; ++c1)
      for (std::size_t r2 = 0; r2 < M; ++r2)
        for (std::size_t c2 = 0; c2 < M; ++c2) out(r1 * M + r2, c1 * M + c2) = a(r1, c1) * b(r2, c2);
  return out;
}

// A matrix verified Hermitian within kHermitianTol. Not necessarily PSD:
// partial transposes and projectors live here too.
template <std::size_t N>
class HermitianMatrix {
 public:
  explicit HermitianMatrix(const Matrix<N>& m) : m_(m) {
    if (!(hermiticity_residual(m) <= kHermitianTol))
      throw Error(Errc::not_hermitian, "matrix is not Hermitian within 1e-10");
  }

  const Matrix<N>& matrix() const { return m_; }
  const Amplitude& operator()(std::size_t r, std::size_t c) const { return m_(r, c); }
  double trace() const { return m_.trace().real(); }

  friend bool operator==(const HermitianMatrix&, const HermitianMatrix&) = default;

 private:
  Matrix<N> m_;
};

namespace detail {
// Cyclic complex Jacobi on an n x n Hermitian matrix stored row-major in `a`
// (destroyed). Writes eigenvalues in descending order and, when `vectors` is
// non-empty, the matching orthonormal eigenvectors as columns.
void jacobi_eigh(std::span<Amplitude> a, std::size_t n, std::span<double> values,
                 std::span<Amplitude> vectors);
}  // namespace detail

template <std::size_t N>
struct EigenSystem {
  std::array<double, N> values;  // descending
  Matrix<N> vectors;             // column i pairs with values[i]
};

template <std::size_t N>
EigenSystem<N> eigh(const HermitianMatrix<N>& h) {
  std::array<Amplitude, N * N> work;
  std::ranges::copy(h.matrix().data(), work.begin());
  EigenSystem<N> out;
  std::array<Amplitude, N * N> vecs;
  detail::jacobi_eigh(work, N, out.values, vecs);
  for (std::size_t r = 0; r < N; ++r)
    for (std::size_t c = 0; c < N; ++c) out.vectors(r, c) = vecs[r * N + c];
  return out;
}

template <std::size_t N>
std::array<double, N> hermitian_eigenvalues(const HermitianMatrix<N>& h) {
  std::array<Amplitude, N * N> work;
  std::ranges::copy(h.matrix().data(), work.begin());
  std::array<double, N> values;
  detail::jacobi_eigh(work, N, values, {});
  return values;
}

// Checked entry point for raw matrices; throws Errc::not_hermitian.
template <std::size_t N>
std::array<double, N> hermitian_eigenvalues(const Matrix<N>& m) {
  return hermitian_eigenvalues(HermitianMatrix<N>(m));
}

}  // namespace triqubit
