#include "state_io.hpp"

#include <cmath>
#include <fstream>

namespace triqubit::cli {

namespace {

std::string indexed(const std::string& field, std::size_t i) { return field + "[" + std::to_string(i) + "]"; }

Amplitude amplitude_from_json(const nlohmann::json& j, const std::string& field) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw InputError(field, "expected an [re, im] pair of numbers");
  const double re = j[0].get<double>();
  const double im = j[1].get<double>();
  if (!std::isfinite(re) || !std::isfinite(im)) throw InputError(field, "non-finite value");
  return {re, im};
}

const nlohmann::json& member(const nlohmann::json& j, const char* key) {
  if (!j.is_object()) throw InputError("<root>", "expected a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) throw InputError(key, "missing");
  return *it;
}

void check_schema(const nlohmann::json& j, const char* expected) {
  const auto& schema = member(j, "schema");
  if (!schema.is_string() || schema.get<std::string>() != expected)
    throw InputError("schema", std::string("expected \"") + expected + "\"");
}

}  // namespace

// Adding 0.0 turns -0.0 into 0.0.
Json to_json(Amplitude z) { return Json::array({z.real() + 0.0, z.imag() + 0.0}); }

Json to_json(const Amplitudes& amps) {
  Json out = Json::array();
  for (const auto& z : amps) out.push_back(to_json(z));
  return out;
}

Json to_json(const ProductState3Q& p) {
  Json out = Json::object();
  for (Party party : kParties) {
    const auto& q = p.factor(party);
    out[std::string(1, "ABC"[static_cast<int>(party)])] = Json::array({to_json(q[0]), to_json(q[1])});
  }
  return out;
}

Json to_json(const Matrix<8>& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < 8; ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < 8; ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Amplitudes amplitudes_from_json(const nlohmann::json& j, const std::string& field) {
  if (!j.is_array()) throw InputError(field, "expected an array of 8 [re, im] pairs");
  if (j.size() != 8) throw InputError(field, "expected 8 entries, got " + std::to_string(j.size()));
  Amplitudes out;
  for (std::size_t r = 0; r < 8; ++r) out[r] = amplitude_from_json(j[r], indexed(field, r));
  return out;
}

Matrix<8> matrix_from_json(const nlohmann::json& j, const std::string& field) {
  if (!j.is_array() || j.size() != 8) throw InputError(field, "expected 8 rows");
  Matrix<8> m;
  for (std::size_t r = 0; r < 8; ++r) {
    const auto row = indexed(field, r);
    if (!j[r].is_array() || j[r].size() != 8) throw InputError(row, "expected 8 entries");
    for (std::size_t c = 0; c < 8; ++c) m(r, c) = amplitude_from_json(j[r][c], indexed(row, c));
  }
  return m;
}

PureState3Q to_state(const Amplitudes& amps, const std::string& field, bool normalize) {
  double norm2 = 0.0;
  for (const auto& z : amps) norm2 += std::norm(z);
  if (norm2 <= kExactTol) throw InputError(field, "zero vector");
  const double norm = std::sqrt(norm2);
  if (!normalize && std::abs(norm - 1.0) > kFileNormTol) {
    throw InputError(field, "norm " + std::to_string(norm) + " is not 1 within 1e-6 (use --normalize)");
  }
  // make_pure only rescales by a rounding-level factor, which keeps round-trips
  // below 1e-15.
  if (std::abs(norm2 - 1.0) <= kNormTol) return make_pure(amps);
  return normalized(amps);
}

std::string kind_name(BasisKind kind) {
  switch (kind) {
    case BasisKind::product: return "product";
    case BasisKind::entangled: return "entangled";
    case BasisKind::mixed: return "mixed";
  }
  return "mixed";
}

std::optional<BasisKind> parse_kind(const std::string& name) {
  for (BasisKind k : {BasisKind::product, BasisKind::entangled, BasisKind::mixed})
    if (kind_name(k) == name) return k;
  return std::nullopt;
}

Json state_file(const PureState3Q& psi) {
  Json out;
  out["schema"] = kStateSchema;
  out["amplitudes"] = to_json(psi.amplitudes());
  return out;
}

Json basis_file(const BasisSet& basis) {
  Json out;
  out["schema"] = kBasisSchema;
  out["kind"] = kind_name(basis.kind());
  Json states = Json::array();
  for (const auto& psi : basis.states()) states.push_back(to_json(psi.amplitudes()));
  out["states"] = std::move(states);
  return out;
}

PureState3Q parse_state_file(const nlohmann::json& j, bool normalize) {
  check_schema(j, kStateSchema);
  return to_state(amplitudes_from_json(member(j, "amplitudes"), "amplitudes"), "amplitudes", normalize);
}

BasisSet parse_basis_file(const nlohmann::json& j, bool normalize) {
  check_schema(j, kBasisSchema);
  const auto& list = member(j, "states");
  if (!list.is_array() || list.empty() || list.size() > 8)
    throw InputError("states", "expected 1 to 8 states");

  std::vector<PureState3Q> states;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const auto field = indexed("states", i);
    states.push_back(to_state(amplitudes_from_json(list[i], field), field, normalize));
  }

  BasisKind kind;
  if (const auto it = j.find("kind"); it != j.end()) {
    const auto parsed = it->is_string() ? parse_kind(it->get<std::string>()) : std::nullopt;
    if (!parsed) throw InputError("kind", "expected \"product\", \"entangled\" or \"mixed\"");
    kind = *parsed;
  } else {
    std::size_t products = 0;
    for (const auto& psi : states) products += is_fully_product(psi) ? 1 : 0;
    kind = products == states.size() ? BasisKind::product
           : products == 0           ? BasisKind::entangled
                                     : BasisKind::mixed;
  }

  try {
    return BasisSet(std::move(states), kind);
  } catch (const Error& e) {
    throw InputError(e.code() == Errc::wrong_kind ? "kind" : "states", e.what());
  }
}

nlohmann::json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("input", "cannot open " + path.string());
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError("input", std::string("invalid JSON: ") + e.what());
  }
}

void write_json(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << j.dump(2) << '\n';
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

PureState3Q load_state(const std::filesystem::path& path, bool normalize) {
  return parse_state_file(read_json(path), normalize);
}

BasisSet load_basis(const std::filesystem::path& path, bool normalize) {
  return parse_basis_file(read_json(path), normalize);
}

}  // namespace triqubit::cli
