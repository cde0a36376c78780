#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "claims.hpp"
#include "state_io.hpp"

namespace triqubit::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitClaimFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNotConverged = 3;

Json tangles_report(const PureState3Q& psi);

// certify=false skips the product-state search.
Json check_basis_report(const BasisSet& basis, bool certify, const SearchConfig& cfg);

Json bound_state_report(bool dual, const SearchConfig& cfg);

// Matrix file written by bound-state --export.
Json matrix_file(const DensityMatrix3Q& rho);

Json lu_orbit_report(std::uint64_t seed, int count);

Json verify_paper_report(const std::vector<ClaimReport>& claims);

// Full command line entry point; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace triqubit::cli
