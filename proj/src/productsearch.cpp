#include "triqubit/productsearch.hpp"

#include <numbers>
#include <random>

namespace triqubit {

namespace {

using Vec2 = std::array<Amplitude, 2>;
using Factors = std::array<Vec2, 3>;

constexpr double kDegenerateGap = 1e-14;

Amplitude product_amp(const Factors& f, std::size_t r) {
  return f[0][party_bit(r, Party::A)] * f[1][party_bit(r, Party::B)] * f[2][party_bit(r, Party::C)];
}

double objective(const Matrix<8>& p, const Factors& f) {
  std::array<Amplitude, 8> x;
  for (std::size_t r = 0; r < 8; ++r) x[r] = product_amp(f, r);
  Amplitude s = 0.0;
  for (std::size_t r = 0; r < 8; ++r)
    for (std::size_t c = 0; c < 8; ++c) s += std::conj(x[r]) * p(r, c) * x[c];
  return s.real();
}

// (<fixed| x I_party) P (|fixed> x I_party).
Matrix<2> reduced_operator(const Matrix<8>& p, const Factors& f, Party party) {
  auto weight = [&](std::size_t r) {
    Amplitude w = 1.0;
    for (Party q : kParties)
      if (q != party) w *= f[static_cast<std::size_t>(q)][party_bit(r, q)];
    return w;
  };
  Matrix<2> m;
  for (std::size_t r = 0; r < 8; ++r) {
    const Amplitude wr = std::conj(weight(r));
    for (std::size_t c = 0; c < 8; ++c) m(party_bit(r, party), party_bit(c, party)) += wr * p(r, c) * weight(c);
  }
  return m;
}

void gauge(Vec2& v) {
  const double n = std::sqrt(std::norm(v[0]) + std::norm(v[1]));
  v[0] /= n;
  v[1] /= n;
  for (const Amplitude& lead : {v[0], v[1]}) {
    const double mag = std::abs(lead);
    if (mag > 1e-12) {
      const Amplitude phase = std::conj(lead) / mag;
      v[0] *= phase;
      v[1] *= phase;
      return;
    }
  }
}

struct TopEigen {
  double value;
  std::optional<Vec2> vector;  // empty when the 2x2 spectrum is degenerate
};

TopEigen top_eigen(const Matrix<2>& m) {
  const double m00 = m(0, 0).real(), m11 = m(1, 1).real();
  const Amplitude m01 = 0.5 * (m(0, 1) + std::conj(m(1, 0)));
  const double half = 0.5 * (m00 - m11);
  const double radius = std::sqrt(half * half + std::norm(m01));
  const double top = 0.5 * (m00 + m11) + radius;
  if (2.0 * radius < kDegenerateGap) return {top, std::nullopt};
  Vec2 v = m00 >= m11 ? Vec2{top - m11, std::conj(m01)} : Vec2{m01, top - m00};
  gauge(v);
  return {top, v};
}

struct RunResult {
  double value = 0.0;
  Factors factors{};
  int sweeps = 0;
  bool converged = false;
  std::vector<double> history;
  double max_decrease = 0.0;
};

RunResult run_seesaw(const Matrix<8>& p, Factors f, const SearchConfig& cfg) {
  RunResult out;
  double current = objective(p, f);
  out.history.push_back(current);
  for (int sweep = 1; sweep <= cfg.max_iters; ++sweep) {
    const double before_sweep = current;
    for (Party party : kParties) {
      const auto m = reduced_operator(p, f, party);
      const auto top = top_eigen(m);
      if (!top.vector) continue;  // keep the previous iterate on ties
      f[static_cast<std::size_t>(party)] = *top.vector;
      out.max_decrease = std::max(out.max_decrease, current - top.value);
      current = top.value;
    }
    current = objective(p, f);
    out.history.push_back(current);
    out.sweeps = sweep;
    if (current - before_sweep < cfg.tol) {
      out.converged = true;
      break;
    }
  }
  out.value = current;
  out.factors = f;
  return out;
}

Factors random_start(std::uint64_t seed, int restart) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(restart)};
  std::mt19937_64 rng(seq);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Factors f;
  for (auto& v : f) {
    for (auto& a : v) a = {gauss(rng), gauss(rng)};
    gauge(v);
  }
  return f;
}

ProductState3Q to_product(const Factors& f) {
  return {QubitState(f[0][0], f[0][1]), QubitState(f[1][0], f[1][1]), QubitState(f[2][0], f[2][1])};
}

}  // namespace

Projector::Projector(const Matrix<8>& m) : m_(m) {
  if (max_abs_diff(m * m, m) > kHermitianTol)
    throw Error(Errc::degenerate_span, "matrix is not idempotent within 1e-10");
  const double tr = m_.trace();
  rank_ = static_cast<int>(std::lround(tr));
  if (std::abs(tr - rank_) > kNormTol) throw Error(Errc::degenerate_span, "projector trace is not integral");
  for (double ev : hermitian_eigenvalues(m_))
    if (std::abs(ev) > kNormTol && std::abs(ev - 1.0) > kNormTol)
      throw Error(Errc::degenerate_span, "projector eigenvalue outside {0, 1}");
}

Projector Projector::complement() const { return Projector(Matrix<8>::identity() - m_.matrix()); }

Projector span_projector(std::span<const PureState3Q> states) {
  const std::size_t n = states.size();
  if (n == 0 || n > 8) throw Error(Errc::degenerate_span, "need between 1 and 8 states");

  std::vector<Amplitude> gram(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) gram[i * n + j] = inner(states[i], states[j]);
  std::vector<double> values(n);
  std::vector<Amplitude> vectors(n * n);
  detail::jacobi_eigh(gram, n, values, vectors);
  if (!(values.back() > 0.0) || values.front() / values.back() >= 1e8)
    throw Error(Errc::degenerate_span, "states are linearly dependent");

  // P = sum_ij |x_i> (G^-1)_ij <x_j|, with G^-1 = W diag(1/g) W^H.
  std::vector<Amplitude> ginv(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        ginv[i * n + j] += vectors[i * n + k] * (1.0 / values[k]) * std::conj(vectors[j * n + k]);

  Matrix<8> p;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Amplitude g = ginv[i * n + j];
      if (g == Amplitude{}) continue;
      for (std::size_t r = 0; r < 8; ++r)
        for (std::size_t c = 0; c < 8; ++c) p(r, c) += states[i][r] * g * std::conj(states[j][c]);
    }
  return Projector(p);
}

double product_overlap(const Projector& p, const ProductState3Q& x) {
  const auto psi = expand(x);
  Amplitude s = 0.0;
  for (std::size_t r = 0; r < 8; ++r)
    for (std::size_t c = 0; c < 8; ++c) s += std::conj(psi[r]) * p.matrix()(r, c) * psi[c];
  return s.real();
}

SearchResult seesaw_max_overlap(const Projector& p, const SearchConfig& cfg) {
  if (cfg.restarts < 1 || !(cfg.tol > 0.0) || cfg.max_iters < 1)
    throw std::invalid_argument("seesaw: restarts >= 1, max_iters >= 1 and tol > 0 required");

  const auto& m = p.matrix().matrix();
  SearchResult out;
  std::optional<RunResult> best;
  for (int k = 0; k < cfg.restarts; ++k) {
    auto run = run_seesaw(m, random_start(cfg.seed, k), cfg);
    out.max_decrease = std::max(out.max_decrease, run.max_decrease);
    if (!best || run.value > best->value) best = std::move(run);
  }
  out.best_value = best->value;
  out.best_product = to_product(best->factors);
  out.iterations = best->sweeps;
  out.restarts_used = cfg.restarts;
  out.converged = best->converged;
  out.history = std::move(best->history);
  return out;
}

double grid_oracle_max_overlap(const Projector& proj, int resolution) {
  if (resolution < 8) throw std::invalid_argument("grid resolution must be at least 8");
  const auto& p = proj.matrix().matrix();
  const auto n = static_cast<std::size_t>(resolution);
  const double pi = std::numbers::pi;

  std::vector<Vec2> grid;
  grid.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    const double theta = static_cast<double>(i) * (pi / 2) / static_cast<double>(n - 1);
    for (std::size_t j = 0; j < n; ++j) {
      const double phi = 2 * pi * static_cast<double>(j) / static_cast<double>(n);
      grid.push_back({std::cos(theta), std::polar(std::sin(theta), phi)});
    }
  }

  // With a and b fixed, c^H M c over the (t, f) grid for qubit C has a closed
  // form maximum: over f, Re(M01 e^{if}) peaks at the grid phase nearest to
  // -arg M01; over t, the value is mean + amp cos(2t - alpha) with 2t on an
  // even grid of [0, pi].
  const double phase_step = 2 * pi / static_cast<double>(n);
  const double twice_theta_step = pi / static_cast<double>(n - 1);
  double best = -1.0;
  std::array<Amplitude, 16> qa{};  // (<a| x I_BC) P (|a> x I_BC), indexed (jk, j'k')
  for (const auto& a : grid) {
    qa.fill(0.0);
    for (std::size_t r = 0; r < 8; ++r)
      for (std::size_t c = 0; c < 8; ++c)
        qa[(r & 3u) * 4 + (c & 3u)] += std::conj(a[r >> 2]) * p(r, c) * a[c >> 2];
    for (const auto& b : grid) {
      auto m_entry = [&](std::size_t k, std::size_t kp) {
        Amplitude s = 0.0;
        for (std::size_t j = 0; j < 2; ++j)
          for (std::size_t jp = 0; jp < 2; ++jp) s += std::conj(b[j]) * qa[(2 * j + k) * 4 + 2 * jp + kp] * b[jp];
        return s;
      };
      const double m00 = m_entry(0, 0).real();
      const double m11 = m_entry(1, 1).real();
      const Amplitude m01 = m_entry(0, 1);

      const double x = -std::arg(m01) / phase_step;
      const double dist = std::abs(x - std::round(x)) * phase_step;
      const double cross = std::abs(m01) * std::cos(dist);

      const double half = 0.5 * (m00 - m11);
      const double amp = std::hypot(half, cross);
      const double alpha = std::atan2(cross, half);  // in [0, pi]
      const double k = std::round(alpha / twice_theta_step);
      const double value = 0.5 * (m00 + m11) + amp * std::cos(k * twice_theta_step - alpha);
      best = std::max(best, value);
    }
  }
  return best;
}

Verdict product_free_verdict(const Projector& p, const SearchConfig& cfg) {
  Verdict v;
  v.search = seesaw_max_overlap(p, cfg);
  v.method = VerdictMethod::seesaw;
  v.margin = 1.0 - v.search.best_value;
  v.certified = v.search.best_value < 1.0 - kVerdictEpsilon;
  v.near_threshold = v.certified && v.search.best_value >= 1.0 - kWarningBand;
  return v;
}

Verdict upb_extendibility(const BasisSet& s, const SearchConfig& cfg) {
  return product_free_verdict(span_projector(s.states()).complement(), cfg);
}

Verdict ees_product_free(const BasisSet& t, const SearchConfig& cfg) {
  return product_free_verdict(span_projector(t.states()), cfg);
}

}  // namespace triqubit
