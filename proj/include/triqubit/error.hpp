#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace triqubit {

enum class Errc {
  not_normalized,
  zero_vector,
  bad_weights,
  not_hermitian,
  not_density_matrix,
  bad_dimension,
  not_orthogonal,
  not_complete,
  wrong_kind,
  not_unitary,
  degenerate_span,
};

std::string_view to_string(Errc code) noexcept;

// All library failures are reported through this exception; code() names
// the violated contract.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace triqubit
