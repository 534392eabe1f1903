// Command-line surface: matroid info, inner Tutte group computation,
// generator-count table reproduction, and the verification suites.

#include <chrono>
#include <iomanip>
#include <iostream>
#include <map>

#include <CLI11.hpp>
#include <json.hpp>

#include "itg/catalog.hpp"
#include "itg/matroid_io.hpp"
#include "itg/report.hpp"
#include "itg/tutte.hpp"
#include "itg/verify.hpp"

namespace {

using itg::GroupInvariants;
using itg::Matroid;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInputError = 2;

ordered_json invariants_json(const GroupInvariants& g) {
  ordered_json out;
  out["free_rank"] = static_cast<long long>(g.free_rank);
  ordered_json torsion = ordered_json::array();
  for (const itg::Int& d : g.torsion) torsion.push_back(d.convert_to<long long>());
  out["torsion"] = torsion;
  return out;
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
  }
};

int cmd_info(const std::string& source, const std::string& format) {
  const Matroid m = itg::load_matroid(source);
  const auto components = itg::connected_components(m);
  const bool fano = itg::has_fano_minor(m);
  const bool dual_fano = itg::has_dual_fano_minor(m);
  const auto cocircuits = itg::cocircuits_of(m);

  if (format == "json") {
    ordered_json doc = itg::matroid_to_json(m);
    doc["rank"] = m.rank();
    doc["circuit_count"] = m.circuits().size();
    doc["cocircuit_count"] = cocircuits.size();
    doc["connected_components"] = components.size();
    doc["fano_minor"] = fano;
    doc["dual_fano_minor"] = dual_fano;
    std::cout << doc.dump(2) << "\n";
  } else {
    if (!m.name().empty()) std::cout << "name:                 " << m.name() << "\n";
    std::cout << "ground size:          " << m.ground_size() << "\n"
              << "rank:                 " << m.rank() << "\n"
              << "circuits:             " << m.circuits().size() << "\n"
              << "cocircuits:           " << cocircuits.size() << "\n"
              << "connected components: " << components.size() << "\n"
              << "fano minor:           " << (fano ? "yes" : "no") << "\n"
              << "dual fano minor:      " << (dual_fano ? "yes" : "no") << "\n";
  }
  return kExitOk;
}

int cmd_groups(const std::string& source, const std::string& method, const std::string& format,
               bool no_timings) {
  const Matroid m = itg::load_matroid(source);
  const long G = itg::G_count(m);
  const long g = itg::g_count(m);

  std::vector<itg::Method> methods;
  if (method == "all")
    methods = {itg::Method::kernel, itg::Method::tm2, itg::Method::tmi0};
  else
    methods = {itg::method_from_string(method)};

  std::map<std::string, GroupInvariants> results;
  std::map<std::string, double> timings;
  for (itg::Method mm : methods) {
    Timer timer;
    results[to_string(mm)] = itg::inner_invariants(m, mm);
    timings[to_string(mm)] = timer.ms();
  }
  bool agreement = true;
  for (const auto& [name, inv] : results)
    if (!(inv == results.begin()->second)) agreement = false;

  if (format == "json") {
    ordered_json doc;
    doc["source"] = source;
    if (!m.name().empty()) doc["name"] = m.name();
    doc["G"] = G;
    doc["g"] = g;
    ordered_json per_method;
    for (const auto& [name, inv] : results) per_method[name] = invariants_json(inv);
    doc["invariants"] = per_method;
    doc["invariants_text"] = to_string(results.begin()->second);
    doc["agreement"] = agreement;
    if (!no_timings) {
      ordered_json t;
      for (const auto& [name, ms] : timings) t[name] = ms;
      doc["timings_ms"] = t;
    }
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "G = " << G << "\n" << "g = " << g << "\n";
    for (const auto& [name, inv] : results) {
      std::cout << "inner invariants (" << name << "): " << to_string(inv);
      if (!no_timings)
        std::cout << "   [" << std::fixed << std::setprecision(1) << timings[name] << " ms]";
      std::cout << "\n";
    }
    if (results.size() > 1)
      std::cout << "agreement: " << (agreement ? "yes" : "NO") << "\n";
  }
  return agreement ? kExitOk : kExitMismatch;
}

int cmd_table(const std::string& format, bool no_timings) {
  const auto results = itg::compute_table();
  bool all_match = true;
  for (const auto& r : results)
    if (!r.match()) all_match = false;

  if (format == "json") {
    ordered_json rows = ordered_json::array();
    for (const auto& r : results) {
      ordered_json row;
      row["matroid"] = r.name;
      row["G_expected"] = r.expected_G;
      row["G_computed"] = r.computed_G;
      row["g_expected"] = r.expected_g;
      row["g_computed"] = r.computed_g;
      row["match"] = r.match();
      if (!r.match())
        row["diagnosis"] = r.catalog_valid
                               ? "counts came from the enumerator on a validated encoding"
                               : "catalog encoding is suspect (axiom re-validation failed)";
      if (!no_timings) row["seconds"] = r.seconds;
      rows.push_back(row);
    }
    ordered_json doc;
    doc["rows"] = rows;
    doc["all_match"] = all_match;
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << std::left << std::setw(10) << "matroid" << std::right << std::setw(8) << "G"
              << std::setw(10) << "G(exp)" << std::setw(8) << "g" << std::setw(10) << "g(exp)"
              << "  status\n";
    for (const auto& r : results) {
      std::cout << std::left << std::setw(10) << r.name << std::right << std::setw(8)
                << r.computed_G << std::setw(10) << r.expected_G << std::setw(8) << r.computed_g
                << std::setw(10) << r.expected_g << "  " << (r.match() ? "ok" : "MISMATCH")
                << "\n";
      if (!r.match())
        std::cout << "  -> " << r.name << ": "
                  << (r.catalog_valid
                          ? "counts came from the enumerator on a validated encoding"
                          : "catalog encoding is suspect (axiom re-validation failed)")
                  << "\n";
    }
    std::cout << (all_match ? "all rows match" : "MISMATCHES FOUND") << "\n";
  }
  return all_match ? kExitOk : kExitMismatch;
}

ordered_json check_json(const itg::CheckResult& c) {
  ordered_json out;
  out["passed"] = c.passed;
  out["configurations"] = c.configurations;
  out["sampled"] = c.sampled;
  if (!c.failures.empty()) out["failures"] = c.failures;
  return out;
}

int cmd_verify(const std::string& source, std::uint64_t seed, const std::string& format,
               bool no_timings) {
  const Matroid m = itg::load_matroid(source);
  Timer timer;
  itg::VerifyOptions opts;
  opts.seed = seed;
  const itg::VerifyReport report = itg::run_full_verify(m, opts);

  if (format == "json") {
    ordered_json doc;
    doc["source"] = source;
    if (!m.name().empty()) doc["name"] = m.name();
    doc["cross_method_agreement"] = report.cross_method_ok;
    doc["isomorphism"] = report.isomorphism_ok;
    if (!report.isomorphism_ok) doc["isomorphism_error"] = report.isomorphism_error;
    if (report.isomorphism_ok) doc["invariants"] = invariants_json(report.invariants);
    doc["bracket_identities"] = check_json(report.bracket_identities);
    doc["quadruple_invariance"] = check_json(report.quadruple_invariance);
    doc["triangle_invariance"] = check_json(report.triangle_invariance);
    doc["decomposition"] = check_json(report.decomposition);
    doc["passed"] = report.passed();
    if (!no_timings) doc["total_ms"] = timer.ms();
    std::cout << doc.dump(2) << "\n";
  } else {
    auto line = [](const std::string& name, bool ok, long configs, bool sampled) {
      std::cout << std::left << std::setw(36) << name << (ok ? "pass" : "FAIL") << "  ("
                << configs << (sampled ? " sampled" : "") << " configurations)\n";
    };
    std::cout << "verify " << (m.name().empty() ? source : m.name()) << "\n";
    std::cout << std::left << std::setw(36) << "cross-method agreement"
              << (report.cross_method_ok ? "pass" : "FAIL") << "\n";
    std::cout << std::left << std::setw(36) << "isomorphism (phi/psi)"
              << (report.isomorphism_ok ? "pass" : "FAIL") << "\n";
    if (!report.isomorphism_ok) std::cout << "  " << report.isomorphism_error << "\n";
    if (report.isomorphism_ok)
      std::cout << "  inner invariants: " << to_string(report.invariants) << "\n";
    line("bracket identities", report.bracket_identities.passed,
         report.bracket_identities.configurations, report.bracket_identities.sampled);
    line("quadruple invariance (24 orderings)", report.quadruple_invariance.passed,
         report.quadruple_invariance.configurations, report.quadruple_invariance.sampled);
    line("triangle-family invariance", report.triangle_invariance.passed,
         report.triangle_invariance.configurations, report.triangle_invariance.sampled);
    line("decomposition T_M = T0 x Z^(|E|-c)", report.decomposition.passed,
         report.decomposition.configurations, false);
    for (const auto* check : {&report.bracket_identities, &report.quadruple_invariance,
                              &report.triangle_invariance, &report.decomposition})
      for (const std::string& f : check->failures) std::cout << "  " << f << "\n";
    if (!no_timings)
      std::cout << "total: " << std::fixed << std::setprecision(1) << timer.ms() << " ms\n";
    std::cout << (report.passed() ? "all checks passed" : "CHECKS FAILED") << "\n";
  }
  return report.passed() ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"inner Tutte group computations"};
  app.require_subcommand(1);

  std::string source, format = "text", method = "all";
  std::uint64_t seed = 0;
  bool no_timings = false;

  auto add_common = [&](CLI::App* cmd, bool with_source) {
    if (with_source)
      cmd->add_option("source", source, "matroid JSON file or catalog:NAME")->required();
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_flag("--no-timings", no_timings, "omit wall-clock timings");
  };

  CLI::App* info = app.add_subcommand("info", "matroid summary");
  add_common(info, true);

  CLI::App* groups = app.add_subcommand("groups", "inner Tutte group of one matroid");
  add_common(groups, true);
  groups->add_option("--method", method, "kernel|tm2|tmi0|all")
      ->check(CLI::IsMember({"kernel", "tm2", "tmi0", "all"}));

  CLI::App* table = app.add_subcommand("table", "reproduce the generator-count table");
  add_common(table, false);

  CLI::App* verify = app.add_subcommand("verify", "isomorphism and property suites");
  add_common(verify, true);
  verify->add_option("--seed", seed, "seed for sampled property checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (info->parsed()) return cmd_info(source, format);
    if (groups->parsed()) return cmd_groups(source, method, format, no_timings);
    if (table->parsed()) return cmd_table(format, no_timings);
    if (verify->parsed()) return cmd_verify(source, seed, format, no_timings);
  } catch (const itg::VerificationFailure& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return kExitMismatch;
  } catch (const itg::MatroidError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitOk;
}
