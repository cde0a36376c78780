#pragma once

#include <optional>
#include <string>
#include <vector>

#include "state_io.hpp"

namespace triqubit::cli {

struct Rational {
  long num = 0;
  long den = 1;

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string text() const;
};

// p/q with q <= max_den matching x within 1e-12, if any.
std::optional<Rational> as_rational(double x, long max_den = 64);

enum class ClaimStatus { pass, fail, discrepancy };

std::string to_string(ClaimStatus s);

struct ClaimReport {
  std::string claim_id;
  std::optional<Rational> paper_value;  // absent for yes/no claims
  double computed_value = 0.0;
  double tolerance = 0.0;
  ClaimStatus status = ClaimStatus::fail;
  std::string criterion;  // what computed_value is and what passes
  Json cross_checks;      // null when the claim has no independent route
};

// A printed value is PASS within tol. Otherwise the row is DISCREPANCY when an
// independent route was evaluated and agrees with the computed value, FAIL
// when there is no such route or it disagrees.
ClaimStatus classify(double printed, double computed, double tol, std::optional<bool> cross_checks_pass);

std::vector<ClaimReport> verify_paper_claims(const SearchConfig& cfg = {});

Json to_json(const ClaimReport& c);

}  // namespace triqubit::cli
