#include "triqubit/linalg.hpp"

#include <numeric>

namespace triqubit::detail {

namespace {

constexpr int kMaxSweeps = 100;

double off_diagonal_norm2(std::span<const Amplitude> a, std::size_t n) {
  double off = 0.0;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p + 1; q < n; ++q) off += std::norm(a[p * n + q]);
  return off;
}

}  // namespace

void jacobi_eigh(std::span<Amplitude> a, std::size_t n, std::span<double> values,
                 std::span<Amplitude> vectors) {
  auto at = [&](std::size_t r, std::size_t c) -> Amplitude& { return a[r * n + c]; };
  const bool want_vectors = !vectors.empty();

  double frob2 = 0.0;
  for (std::size_t r = 0; r < n; ++r) {
    at(r, r) = at(r, r).real();
    frob2 += std::norm(at(r, r));
    for (std::size_t c = r + 1; c < n; ++c) {
      const Amplitude avg = 0.5 * (at(r, c) + std::conj(at(c, r)));
      at(r, c) = avg;
      at(c, r) = std::conj(avg);
      frob2 += 2.0 * std::norm(avg);
    }
  }

  std::vector<Amplitude> v;
  if (want_vectors) {
    v.assign(n * n, Amplitude{});
    for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;
  }

  const double stop = frob2 * 1e-36;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    const double off = off_diagonal_norm2(a, n);
    if (off == 0.0 || off <= stop) break;

    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double g = std::abs(at(p, q));
        if (g == 0.0) continue;
        const double app = at(p, p).real();
        const double aqq = at(q, q).real();
        if (sweep > 3 && std::abs(app) + 100.0 * g == std::abs(app) &&
            std::abs(aqq) + 100.0 * g == std::abs(aqq)) {
          at(p, q) = at(q, p) = 0.0;
          continue;
        }
        const Amplitude e = at(p, q) / g;
        const double theta = (aqq - app) / (2.0 * g);
        double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        if (theta < 0.0) t = -t;
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const Amplitude se = s * e;
        const Amplitude sec = s * std::conj(e);

        // A <- A U, then A <- U^H A, with U = [[c, s e], [-s conj(e), c]] on (p, q).
        for (std::size_t k = 0; k < n; ++k) {
          const Amplitude akp = at(k, p), akq = at(k, q);
          at(k, p) = c * akp - sec * akq;
          at(k, q) = se * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Amplitude apk = at(p, k), aqk = at(q, k);
          at(p, k) = c * apk - se * aqk;
          at(q, k) = sec * apk + c * aqk;
        }
        at(p, q) = at(q, p) = 0.0;
        at(p, p) = app - t * g;
        at(q, q) = aqq + t * g;

        if (want_vectors) {
          for (std::size_t k = 0; k < n; ++k) {
            const Amplitude vkp = v[k * n + p], vkq = v[k * n + q];
            v[k * n + p] = c * vkp - sec * vkq;
            v[k * n + q] = se * vkp + c * vkq;
          }
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return at(x, x).real() > at(y, y).real();
  });
  for (std::size_t i = 0; i < n; ++i) values[i] = at(order[i], order[i]).real();
  if (want_vectors) {
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t i = 0; i < n; ++i) vectors[r * n + i] = v[r * n + order[i]];
  }
}

}  // namespace triqubit::detail
