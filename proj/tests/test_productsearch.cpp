#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"

using namespace triqubit;
using namespace triqubit::testing;

namespace {

// Maximum product overlap with span of the exact-entanglement basis, measured
// by an independent numpy see-saw (200 restarts, 2000 sweeps each).
constexpr double kEesMaxOverlap = 0.9185586535436918;

// Brute-force evaluation over the full product grid (numpy, every grid point).
constexpr double kEesGrid8 = 0.918554113196387;
constexpr double kEesGrid12 = 0.917246279410886;
constexpr double kWGrid12 = 0.4415265576479261;

Projector projector_of(std::initializer_list<PureState3Q> states) {
  std::vector<PureState3Q> v(states);
  return span_projector(v);
}

}  // namespace

TEST_CASE("span_projector") {
  const auto s = shifts_upb();
  const auto t = eeb();
  const auto pt = span_projector(t.states());
  CHECK(pt.rank() == 4);
  CHECK(max_abs_diff(pt.matrix().matrix(), span_projector(s.states()).complement().matrix().matrix()) < 1e-12);

  const auto p0 = projector_of({basis_ket(0)});
  Matrix<8> e00;
  e00(0, 0) = 1.0;
  CHECK(max_abs_diff(p0.matrix().matrix(), e00) < 1e-15);
  CHECK(p0.rank() == 1);

  CHECK(error_code_of([] { projector_of({basis_ket(0), basis_ket(0)}); }) == Errc::degenerate_span);

  SUBCASE("non-orthogonal spanning sets") {
    const auto p = projector_of({basis_ket(0), normalized({1, 1, 0, 0, 0, 0, 0, 0})});
    CHECK(p.rank() == 2);
    Matrix<8> expected;
    expected(0, 0) = expected(1, 1) = 1.0;
    CHECK(max_abs_diff(p.matrix().matrix(), expected) < 1e-12);
  }
}

TEST_CASE("seesaw on simple projectors") {
  SUBCASE("GHZ: max product overlap 1/2") {
    const auto r = seesaw_max_overlap(projector_of({ghz()}));
    CHECK(std::abs(r.best_value - 0.5) < 1e-6);
    CHECK(r.converged);
  }
  SUBCASE("Shifts span holds |000>") {
    const auto s = shifts_upb();
    const auto r = seesaw_max_overlap(span_projector(s.states()));
    CHECK(r.best_value > 1 - 1e-9);
  }
  SUBCASE("W state: 4/9") {
    const auto r = seesaw_max_overlap(projector_of({w_state()}));
    CHECK(std::abs(r.best_value - 4.0 / 9) < 1e-9);
  }
}

TEST_CASE("seesaw on the exact-entanglement span") {
  const auto t = eeb();
  const auto p = span_projector(t.states());
  const auto r = seesaw_max_overlap(p);
  CHECK(r.best_value < 1 - 1e-6);
  CHECK(std::abs(r.best_value - kEesMaxOverlap) < 1e-6);
  CHECK(r.converged);
  CHECK(r.restarts_used == 64);
  CHECK(r.iterations >= 1);

  // self-consistency and monotonicity
  CHECK(std::abs(product_overlap(p, r.best_product) - r.best_value) < 1e-9);
  CHECK(r.max_decrease <= 1e-12);
  for (std::size_t i = 1; i < r.history.size(); ++i) CHECK(r.history[i] >= r.history[i - 1] - 1e-12);
  CHECK(r.history.back() == r.best_value);

  SUBCASE("deterministic per seed") {
    const auto again = seesaw_max_overlap(p);
    CHECK(again.best_value == r.best_value);
    CHECK(max_amp_diff(expand(again.best_product), expand(r.best_product)) == 0.0);
  }
  SUBCASE("LU invariance of the maximum") {
    for (std::uint64_t seed : {3ull, 5ull, 8ull}) {
      const auto image = lu_transform(t.states(), random_local_unitary(seed));
      const auto ri = seesaw_max_overlap(span_projector(image));
      CHECK(std::abs(ri.best_value - r.best_value) < 1e-6);
    }
  }
}

TEST_CASE("grid oracle") {
  CHECK(std::abs(grid_oracle_max_overlap(Projector(Matrix<8>::identity()), 8) - 1.0) < 1e-12);

  const auto t = eeb();
  const auto pt = span_projector(t.states());
  CHECK(std::abs(grid_oracle_max_overlap(pt, 8) - kEesGrid8) < 1e-12);
  CHECK(std::abs(grid_oracle_max_overlap(pt, 12) - kEesGrid12) < 1e-12);
  CHECK(std::abs(grid_oracle_max_overlap(projector_of({w_state()}), 12) - kWGrid12) < 1e-12);

  const double ghz64 = grid_oracle_max_overlap(projector_of({ghz()}), 64);
  CHECK(ghz64 >= 0.49);
  CHECK(ghz64 <= 0.5 + 1e-9);

  CHECK_THROWS_AS(grid_oracle_max_overlap(pt, 7), std::invalid_argument);
}

TEST_CASE("grid never exceeds the see-saw maximum") {
  std::mt19937_64 rng(4);
  for (int n = 0; n < 5; ++n) {
    const auto p = projector_of({random_state(rng), random_state(rng)});
    const double best = seesaw_max_overlap(p).best_value;
    for (int res : {8, 16}) CHECK(grid_oracle_max_overlap(p, res) <= best + 1e-9);
  }
}

TEST_CASE("upb_extendibility") {
  const auto shifts = upb_extendibility(shifts_upb());
  CHECK(shifts.certified);
  CHECK(shifts.margin > 0.05);
  CHECK_FALSE(shifts.near_threshold);

  const BasisSet pair({basis_ket(0), basis_ket(3)}, BasisKind::product);
  const auto ext = upb_extendibility(pair);
  CHECK_FALSE(ext.certified);
  const auto witness = expand(ext.search.best_product);
  CHECK(ext.search.best_value > 1 - 1e-9);
  CHECK(std::abs(inner(witness, basis_ket(0))) < 1e-4);
  CHECK(std::abs(inner(witness, basis_ket(3))) < 1e-4);

  CHECK(upb_extendibility(dual_cbupb().s()).certified);
}

TEST_CASE("ees_product_free") {
  const auto v = ees_product_free(eeb());
  CHECK(v.certified);
  CHECK(v.margin > 0);
  CHECK(v.method == VerdictMethod::seesaw);

  const BasisSet with_product({ghz(), basis_ket(1)}, BasisKind::mixed);
  CHECK_FALSE(ees_product_free(with_product).certified);

  const auto dual = ees_product_free(dual_cbupb().t());
  CHECK(dual.certified);
  CHECK(std::abs(dual.margin - v.margin) < 1e-6);

  // Complementarity: span(T) is the complement of span(S).
  CHECK(std::abs(upb_extendibility(shifts_upb()).search.best_value - v.search.best_value) < 1e-9);
}

TEST_CASE("biseparable states in span(T) are not fully product") {
  const auto psi = eeb_sum(3);
  CHECK(one_tangle_minors(psi, Party::B) < 1e-12);
  CHECK_FALSE(is_fully_product(psi));
  const auto t = eeb();
  const auto p = span_projector(t.states());
  Amplitude s = 0.0;
  for (std::size_t r = 0; r < 8; ++r)
    for (std::size_t c = 0; c < 8; ++c) s += std::conj(psi[r]) * p.matrix()(r, c) * psi[c];
  CHECK(std::abs(s - 1.0) < 1e-12);
}
