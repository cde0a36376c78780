#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "triqubit/triqubit.hpp"

namespace triqubit::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kStateSchema = "triqubit-state/1";
inline constexpr const char* kBasisSchema = "triqubit-basis/1";
inline constexpr const char* kMatrixSchema = "triqubit-matrix/1";
inline constexpr const char* kReportSchema = "triqubit-report/1";

// Amplitudes further than this from unit norm are rejected unless the
// caller asks for renormalization.
inline constexpr double kFileNormTol = 1e-6;

// Bad input file or argument. Maps to exit code 2; field() names the
// offending JSON path or option.
class InputError : public std::runtime_error {
 public:
  InputError(std::string field, const std::string& message)
      : std::runtime_error(field + ": " + message), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

Json to_json(Amplitude z);  // [re, im]
Json to_json(const Amplitudes& amps);
Json to_json(const ProductState3Q& p);  // {"A": [[re, im] x 2], "B": ..., "C": ...}
Json to_json(const Matrix<8>& m);       // 8 rows of [re, im] pairs

Amplitudes amplitudes_from_json(const nlohmann::json& j, const std::string& field);
Matrix<8> matrix_from_json(const nlohmann::json& j, const std::string& field);

PureState3Q to_state(const Amplitudes& amps, const std::string& field, bool normalize);

std::string kind_name(BasisKind kind);
std::optional<BasisKind> parse_kind(const std::string& name);

Json state_file(const PureState3Q& psi);
Json basis_file(const BasisSet& basis);

PureState3Q parse_state_file(const nlohmann::json& j, bool normalize);
BasisSet parse_basis_file(const nlohmann::json& j, bool normalize);

nlohmann::json read_json(const std::filesystem::path& path);
void write_json(const std::filesystem::path& path, const Json& j);

PureState3Q load_state(const std::filesystem::path& path, bool normalize = false);
BasisSet load_basis(const std::filesystem::path& path, bool normalize = false);

}  // namespace triqubit::cli
