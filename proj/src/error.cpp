#include "triqubit/error.hpp"

namespace triqubit {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::not_normalized: return "NotNormalized";
    case Errc::zero_vector: return "ZeroVector";
    case Errc::bad_weights: return "BadWeights";
    case Errc::not_hermitian: return "NotHermitian";
    case Errc::not_density_matrix: return "NotDensityMatrix";
    case Errc::bad_dimension: return "BadDimension";
    case Errc::not_orthogonal: return "NotOrthogonal";
    case Errc::not_complete: return "NotComplete";
    case Errc::wrong_kind: return "WrongKind";
    case Errc::not_unitary: return "NotUnitary";
    case Errc::degenerate_span: return "DegenerateSpan";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace triqubit
