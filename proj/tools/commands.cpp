#include "commands.hpp"

#include <algorithm>
#include <iomanip>
#include <limits>
#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

namespace triqubit::cli {

namespace {

const char* party_name(Party p) { return p == Party::A ? "A" : p == Party::B ? "B" : "C"; }

const char* pair_name(PartyPair pp) { return pp == PartyPair::AB ? "AB" : pp == PartyPair::BC ? "BC" : "AC"; }

const char* cut_name(Party p) { return p == Party::A ? "A|BC" : p == Party::B ? "B|AC" : "C|AB"; }

const char* method_name(VerdictMethod m) {
  switch (m) {
    case VerdictMethod::seesaw: return "seesaw";
    case VerdictMethod::grid: return "grid";
    case VerdictMethod::both: return "both";
  }
  return "seesaw";
}

Json report_header(const char* command) {
  Json out;
  out["schema"] = kReportSchema;
  out["command"] = command;
  return out;
}

Json profile_json(const TangleProfile& t) {
  Json out;
  out["tau_A"] = t.tau_a;
  out["tau_B"] = t.tau_b;
  out["tau_C"] = t.tau_c;
  out["tau_ABC"] = t.tau_abc;
  out["tau_AB"] = t.tau_ab;
  out["tau_BC"] = t.tau_bc;
  out["tau_AC"] = t.tau_ac;
  return out;
}

Json matrix2_json(const Matrix<2>& m) {
  return Json::array({Json::array({to_json(m(0, 0)), to_json(m(0, 1))}), Json::array({to_json(m(1, 0)), to_json(m(1, 1))})});
}

Json verdict_json(const Verdict& v) {
  Json out;
  out["certified"] = v.certified;
  out["margin"] = v.margin;
  out["best_value"] = v.search.best_value;
  out["near_threshold"] = v.near_threshold;
  out["method"] = method_name(v.method);
  out["converged"] = v.search.converged;
  out["restarts"] = v.search.restarts_used;
  out["iterations"] = v.search.iterations;
  out["witness"] = to_json(expand(v.search.best_product).amplitudes());
  out["witness_factors"] = to_json(v.search.best_product);
  return out;
}

Json sixteenths_json(const DensityMatrix3Q& rho) {
  const auto s = as_sixteenths(rho);
  if (!s) return nullptr;
  Json rows = Json::array();
  for (const auto& row : *s) rows.push_back(Json(row));
  return rows;
}

double max_abs(const std::array<double, 7>& x, const std::array<double, 7>& y) {
  double worst = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) worst = std::max(worst, std::abs(x[i] - y[i]));
  return worst;
}

// Flattened "path  value" view of a report for --pretty.
void flatten(const Json& j, const std::string& path, std::vector<std::pair<std::string, std::string>>& rows) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) flatten(value, path.empty() ? key : path + "." + key, rows);
  } else if (j.is_array() && !j.empty() && j.front().is_object()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", rows);
  } else {
    rows.emplace_back(path, j.dump());
  }
}

void print_table(std::ostream& os, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    width.resize(std::max(width.size(), row.size()));
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      os << row[c];
      if (c + 1 < row.size()) os << std::string(width[c] - row[c].size() + 2, ' ');
    }
    os << '\n';
  }
}

void print_pretty(std::ostream& os, const Json& report) {
  std::vector<std::pair<std::string, std::string>> flat;
  flatten(report, "", flat);
  std::vector<std::vector<std::string>> rows;
  for (auto& [k, v] : flat) rows.push_back({k, v});
  print_table(os, rows);
}

std::string number(double x) {
  std::ostringstream s;
  s << std::setprecision(12) << x;
  return s.str();
}

void print_claims(std::ostream& os, const std::vector<ClaimReport>& claims) {
  std::vector<std::vector<std::string>> rows{{"claim", "printed", "computed", "tolerance", "status"}};
  for (const auto& c : claims) {
    rows.push_back({c.claim_id, c.paper_value ? c.paper_value->text() : "-", number(c.computed_value),
                    number(c.tolerance), to_string(c.status)});
  }
  print_table(os, rows);
}

bool any_unconverged(const Json& certification) {
  for (const auto& [name, verdict] : certification.items())
    if (!verdict["converged"].get<bool>()) return true;
  return false;
}

}  // namespace

Json tangles_report(const PureState3Q& psi) {
  Json out = report_header("tangles");
  out["state"] = to_json(psi.amplitudes());
  const auto profile = tangle_profile(psi);
  out["profile"] = profile_json(profile);

  Json routes;
  double route_residual = 0.0;
  for (Party p : kParties) {
    const double minors = one_tangle_minors(psi, p);
    const double entropy = one_tangle_entropy(psi, p);
    routes[party_name(p)] = {{"minors", minors}, {"entropy", entropy}};
    route_residual = std::max(route_residual, std::abs(minors - entropy));
  }
  out["one_tangle_routes"] = std::move(routes);
  out["route_residual"] = route_residual;
  out["hyperdeterminant"] = to_json(hyperdeterminant(psi));

  const auto rho = density_of(psi);
  Json c2;
  for (PartyPair pp : kPartyPairs) {
    const double c = wootters_concurrence(reduce_pair(rho, pp));
    c2[pair_name(pp)] = c * c;
  }
  out["concurrence_squared"] = std::move(c2);
  out["fully_product"] = is_fully_product(psi);
  return out;
}

Json check_basis_report(const BasisSet& basis, bool certify, const SearchConfig& cfg) {
  Json out = report_header("check-basis");
  out["kind"] = kind_name(basis.kind());
  out["size"] = basis.size();
  out["gram_residual"] = gram_residual(basis.states());

  Json states = Json::array();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const auto profile = tangle_profile(basis[i]);
    Json s;
    s["index"] = i;
    s["fully_product"] = is_fully_product(basis[i]);
    s["one_tangles"] = {{"A", profile.tau_a}, {"B", profile.tau_b}, {"C", profile.tau_c}};
    s["three_tangle"] = profile.tau_abc;
    states.push_back(std::move(s));
  }
  out["states"] = std::move(states);

  if (certify) {
    Json cert;
    if (basis.kind() != BasisKind::entangled) cert["unextendible"] = verdict_json(upb_extendibility(basis, cfg));
    if (basis.kind() != BasisKind::product) cert["product_free"] = verdict_json(ees_product_free(basis, cfg));
    out["certification"] = std::move(cert);
  }
  return out;
}

Json matrix_file(const DensityMatrix3Q& rho) {
  Json out;
  out["schema"] = kMatrixSchema;
  out["dimension"] = 8;
  out["entries"] = to_json(rho.matrix());
  out["sixteenths"] = sixteenths_json(rho);
  return out;
}

Json bound_state_report(bool dual, const SearchConfig& cfg) {
  const auto basis = dual ? dual_cbupb() : cbupb(shifts_upb(), eeb());
  const auto cert = certify_bound_entanglement(basis.s(), basis.t(), cfg);
  const auto rho = rho_from_eeb(basis.t());

  Json out = report_header("bound-state");
  out["variant"] = dual ? "dual" : "canonical";
  out["matrix_matches_paper"] = cert.matrix_matches_paper;
  out["matrix"] = {{"entries", to_json(rho.matrix())}, {"sixteenths", sixteenths_json(rho)}};
  out["complement_residual"] = max_abs_diff(rho.matrix(), rho_from_upb_complement(basis.s()).matrix());
  out["eigenvalues"] = hermitian_eigenvalues(rho.hermitian());

  Json spectra;
  for (Party p : kParties) spectra[cut_name(p)] = cert.ppt.spectra[static_cast<std::size_t>(p)];
  out["ppt"] = {{"spectra", std::move(spectra)},
                {"min_eigenvalue", cert.ppt.min_eigenvalue},
                {"ppt_all", cert.ppt.ppt_all}};
  out["range_product_free"] = verdict_json(cert.range_product_free);
  out["bound_entangled"] = cert.bound_entangled();
  return out;
}

Json lu_orbit_report(std::uint64_t seed, int count) {
  if (count < 1) throw InputError("--count", "must be at least 1");
  const auto s = shifts_upb();
  const auto t = eeb();
  const auto reference = cbupb(s, t).all();

  std::mt19937_64 rng(seed);
  Json samples = Json::array();
  bool all_valid = true;
  double max_gram = 0.0;
  double max_drift = 0.0;
  for (int k = 0; k < count; ++k) {
    const std::uint64_t sample_seed = rng();
    const auto u = random_local_unitary(sample_seed);
    Json sample;
    sample["index"] = k;
    sample["seed"] = sample_seed;
    sample["factors"] = {{"A", matrix2_json(u.factor(Party::A))},
                         {"B", matrix2_json(u.factor(Party::B))},
                         {"C", matrix2_json(u.factor(Party::C))}};
    try {
      const auto image = cbupb(BasisSet(lu_transform(s.states(), u), BasisKind::product),
                               BasisSet(lu_transform(t.states(), u), BasisKind::entangled));
      const auto members = image.all();
      double drift = 0.0;
      for (std::size_t i = 0; i < members.size(); ++i)
        drift = std::max(drift, max_abs(tangle_profile(members[i]).as_array(), tangle_profile(reference[i]).as_array()));
      const double gram = gram_residual(members);
      sample["valid"] = true;
      sample["gram_residual"] = gram;
      sample["tangle_drift"] = drift;
      max_gram = std::max(max_gram, gram);
      max_drift = std::max(max_drift, drift);
    } catch (const Error& e) {
      all_valid = false;
      sample["valid"] = false;
      sample["error"] = to_string(e.code());
    }
    samples.push_back(std::move(sample));
  }

  Json out = report_header("lu-orbit");
  out["seed"] = seed;
  out["count"] = count;
  out["samples"] = std::move(samples);
  out["summary"] = {{"all_valid", all_valid},
                    {"max_gram_residual", max_gram},
                    {"max_tangle_drift", max_drift},
                    {"max_residual", std::max(max_gram, max_drift)}};
  return out;
}

Json verify_paper_report(const std::vector<ClaimReport>& claims) {
  Json out = report_header("verify-paper");
  Json rows = Json::array();
  Json discrepancies = Json::array();
  int pass = 0, fail = 0, discrepancy = 0;
  for (const auto& c : claims) {
    rows.push_back(to_json(c));
    switch (c.status) {
      case ClaimStatus::pass: ++pass; break;
      case ClaimStatus::fail: ++fail; break;
      case ClaimStatus::discrepancy:
        ++discrepancy;
        discrepancies.push_back(c.claim_id);
        break;
    }
  }
  out["claims"] = std::move(rows);
  out["summary"] = {{"total", claims.size()},
                    {"pass", pass},
                    {"fail", fail},
                    {"discrepancy", discrepancy},
                    {"discrepancy_ids", std::move(discrepancies)}};
  return out;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Three-qubit entanglement toolkit: tangles, product bases and the bound entangled mixture.",
               "triqubit"};
  app.require_subcommand(1);

  SearchConfig search;
  bool pretty = false;
  auto add_search = [&](CLI::App* sub) {
    sub->add_option("--restarts", search.restarts, "See-saw restarts")->check(CLI::PositiveNumber);
    sub->add_option("--tol", search.tol, "See-saw convergence tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--max-iters", search.max_iters, "See-saw sweeps per restart")->check(CLI::PositiveNumber);
    sub->add_option("--seed", search.seed, "Search seed");
  };

  std::string input;
  std::string export_path;
  bool normalize = false;

  auto* tangles = app.add_subcommand("tangles", "Tangle profile of a state file");
  tangles->add_option("input", input, "State file")->required();
  tangles->add_flag("--normalize", normalize, "Rescale amplitudes to unit norm");
  tangles->add_option("--export", export_path, "Write the (normalized) state file here");
  tangles->add_flag("--pretty", pretty, "Human-readable table on stderr");

  bool certify = false;
  auto* check = app.add_subcommand("check-basis", "Validate a basis file, optionally certify it");
  check->add_option("input", input, "Basis file")->required();
  check->add_flag("--normalize", normalize, "Rescale each state to unit norm");
  check->add_flag("--certify", certify, "Run the product-state search");
  check->add_option("--export", export_path, "Write the search witness as a state file (needs --certify)");
  check->add_flag("--pretty", pretty, "Human-readable table on stderr");
  add_search(check);

  bool dual = false;
  auto* bound = app.add_subcommand("bound-state", "Build and certify the bound entangled mixture");
  bound->add_flag("--dual", dual, "Use the bit-flipped basis pair");
  bound->add_option("--export", export_path, "Write the density matrix file here");
  bound->add_flag("--pretty", pretty, "Human-readable table on stderr");
  add_search(bound);

  std::uint64_t orbit_seed = 0;
  int count = 10;
  auto* orbit = app.add_subcommand("lu-orbit", "Random local-unitary images of the basis pair");
  orbit->add_option("--seed", orbit_seed, "Orbit seed");
  orbit->add_option("--count", count, "Number of samples")->check(CLI::Range(1, 1000000));
  orbit->add_flag("--pretty", pretty, "Human-readable table on stderr");

  auto* verify = app.add_subcommand("verify-paper", "Recompute every printed claim; exit 1 on FAIL");
  verify->add_flag("--pretty", pretty, "Accepted for symmetry; the table is always printed");
  add_search(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    Json report;
    int exit_code = kExitOk;
    if (tangles->parsed()) {
      const auto psi = load_state(input, normalize);
      report = tangles_report(psi);
      if (!export_path.empty()) write_json(export_path, state_file(psi));
    } else if (check->parsed()) {
      if (!export_path.empty() && !certify) throw InputError("--export", "requires --certify");
      const auto basis = load_basis(input, normalize);
      report = check_basis_report(basis, certify, search);
      if (certify) {
        const auto& cert = report["certification"];
        if (any_unconverged(cert)) exit_code = kExitNotConverged;
        if (!export_path.empty()) {
          const auto& first = cert.contains("unextendible") ? cert["unextendible"] : cert["product_free"];
          write_json(export_path, state_file(to_state(amplitudes_from_json(first["witness"], "witness"), "witness", false)));
        }
      }
    } else if (bound->parsed()) {
      report = bound_state_report(dual, search);
      if (!export_path.empty()) {
        const auto basis = dual ? dual_cbupb() : cbupb(shifts_upb(), eeb());
        write_json(export_path, matrix_file(rho_from_eeb(basis.t())));
      }
    } else if (orbit->parsed()) {
      report = lu_orbit_report(orbit_seed, count);
    } else if (verify->parsed()) {
      const auto claims = verify_paper_claims(search);
      report = verify_paper_report(claims);
      print_claims(err, claims);
      if (report["summary"]["fail"].get<int>() > 0) exit_code = kExitClaimFailed;
    }

    out << report.dump(2) << '\n';
    if (pretty && !verify->parsed()) print_pretty(err, report);
    return exit_code;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace triqubit::cli
