#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "triqubit/bases.hpp"
#include "triqubit/qstate.hpp"

namespace triqubit {

// Orthogonal projector on the three-qubit space. Construction checks
// P^2 = P within 1e-10 and an integral trace within 1e-9.
class Projector {
 public:
  explicit Projector(const Matrix<8>& m);

  const HermitianMatrix<8>& matrix() const { return m_; }
  int rank() const { return rank_; }

  Projector complement() const;

 private:
  HermitianMatrix<8> m_;
  int rank_ = 0;
};

// Projector onto span(states). Errc::degenerate_span if the list is empty or
// its Gram matrix has condition number >= 1e8.
Projector span_projector(std::span<const PureState3Q> states);

// <abc|P|abc>.
double product_overlap(const Projector& p, const ProductState3Q& x);

struct SearchConfig {
  int restarts = 64;
  int max_iters = 500;
  double tol = 1e-12;
  std::uint64_t seed = 0;
};

struct SearchResult {
  double best_value = 0.0;
  ProductState3Q best_product{QubitState::zero(), QubitState::zero(), QubitState::zero()};
  int iterations = 0;     // sweeps used by the winning restart
  int restarts_used = 0;
  bool converged = false; // winning restart met the per-sweep tolerance
  std::vector<double> history;  // objective after each sweep, winning restart
  double max_decrease = 0.0;    // worst single-update drop over all restarts
};

// Multi-start see-saw maximization of <abc|P|abc>. Each single-party update
// sets that party to the top eigenvector of its 2x2 reduced operator.
// Restart k draws its start from mt19937_64 seeded with (cfg.seed, k).
SearchResult seesaw_max_overlap(const Projector& p, const SearchConfig& cfg = {});

inline constexpr int kDefaultGridResolution = 64;

// Maximum of <abc|P|abc> over the grid (cos t, e^{i f} sin t)^{x3} with
// `resolution` values of t in [0, pi/2] (endpoints included) and of f in
// [0, 2 pi). A lower bound on the true maximum. Requires resolution >= 8.
double grid_oracle_max_overlap(const Projector& p, int resolution = kDefaultGridResolution);

enum class VerdictMethod { seesaw, grid, both };

inline constexpr double kVerdictEpsilon = 1e-6;
inline constexpr double kWarningBand = 1e-4;

struct Verdict {
  bool certified = false;
  double margin = 0.0;  // 1 - best_value
  VerdictMethod method = VerdictMethod::seesaw;
  bool near_threshold = false;  // best_value in [1 - 1e-4, 1 - 1e-6)
  SearchResult search;
};

// Searches the orthogonal complement of span(s); certified means no product
// state is orthogonal to all of s.
Verdict upb_extendibility(const BasisSet& s, const SearchConfig& cfg = {});

// Searches span(t); certified means span(t) holds no fully product state.
Verdict ees_product_free(const BasisSet& t, const SearchConfig& cfg = {});

// Shared tail of the two certifications above.
Verdict product_free_verdict(const Projector& p, const SearchConfig& cfg);

}  // namespace triqubit
