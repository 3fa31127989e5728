// Command-line front end: verify congruence suites or claim files, check the
// dissection identities, dissect product expressions, scan for candidates.

#include <fstream>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "colourcong/dissection.hpp"
#include "colourcong/report.hpp"

using namespace colourcong;

namespace {

constexpr int kUsageError = 2;

int write_output(const RunConfig& config, const std::string& text) {
  if (config.output.empty() || config.output == "-") {
    std::cout << text << std::flush;
    return 0;
  }
  std::ofstream out(config.output, std::ios::binary);
  out << text;
  if (!out) {
    std::cerr << "error: cannot write " << config.output << "\n";
    return kUsageError;
  }
  return 0;
}

int run_verify(const RunConfig& config, const std::string& suite, const std::string& path) {
  static const std::map<std::string, Suite> suites = {{"theorem5", Suite::mod5},
                                                      {"theorem7", Suite::mod7},
                                                      {"classical", Suite::classical},
                                                      {"negative", Suite::negative}};
  std::vector<CongruenceClaim> claims;
  if (suite == "file") {
    if (path.empty()) throw std::invalid_argument("verify file needs a PATH");
    claims = load_claim_file(path);
  } else {
    if (!path.empty()) throw std::invalid_argument("only 'verify file' takes a PATH");
    claims = suite_claims(suites.at(suite));
  }
  apply_range_overrides(claims, config);
  for (const auto& c : claims) c.validate();

  VerifyOptions options;
  options.bound = config.bound;
  options.exact_ring = config.ring == CoefficientRing::Kind::exact;
  const auto reports = verify_all(claims, options);
  if (int rc = write_output(config, render_reports(reports, config.format, config.timing))) {
    return rc;
  }
  return exit_code(reports);
}

int run_identity(const RunConfig& config, const std::string& name) {
  const auto id = parse_identity(name);
  if (!id) throw std::invalid_argument("unknown identity '" + name + "'");
  const auto ring = identity_ring(*id);
  if (config.ring && *config.ring != ring.kind()) {
    throw std::invalid_argument("identity " + name + " is checked over " + ring.to_string());
  }
  const auto result = check_identity(*id, config.bound.value_or(ring.is_exact() ? 200 : 500));
  if (int rc = write_output(config, render_identity(result, config.format))) return rc;
  return result.holds ? 0 : 1;
}

int run_dissect(const RunConfig& config, const std::string& expr, Exponent m,
                std::optional<std::uint64_t> modulus) {
  if (m < 2) throw std::invalid_argument("dissection modulus must be at least 2");
  if (config.ring == CoefficientRing::Kind::modular && !modulus) {
    throw std::invalid_argument("--ring mod needs --mod M");
  }
  if (config.ring == CoefficientRing::Kind::exact && modulus) {
    throw std::invalid_argument("--ring exact conflicts with --mod");
  }
  DissectionReport report;
  report.expression = expr;
  report.modulus = m;
  report.ring = modulus ? CoefficientRing::modular(*modulus) : CoefficientRing::exact();
  report.bound = config.bound.value_or(500);
  const auto spec = parse_product_spec(expr);
  report.components = dissect_full(pochhammer(spec, report.ring, report.bound), m);
  return write_output(config, render_dissection(report, config.format));
}

int run_scan(const RunConfig& config, ScanRequest request) {
  request.bound = config.bound.value_or(request.bound);
  return write_output(config, render_scan(scan_congruences(request), config.format));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-range verification of colour-partition congruences"};
  app.require_subcommand(1);

  RunConfig config;
  std::optional<Exponent> bound;
  std::string ring_text, format_text = "json";
  app.add_option("--bound", bound, "Truncation bound (>= 10)");
  app.add_option("--ring", ring_text, "Coefficient ring")->check(CLI::IsMember({"exact", "mod"}));
  app.add_option("--format", format_text, "Output format")
      ->check(CLI::IsMember({"json", "csv", "plain"}));
  app.add_option("--out", config.output, "Output path (default: stdout)");
  app.add_option("--k-max", config.k_max, "Upper end of k for families");
  app.add_option("--n-max", config.n_max, "Upper end of n");
  app.add_flag("--timing", config.timing, "Include wall-clock times");

  std::string suite, claim_path;
  auto* verify = app.add_subcommand("verify", "Verify a built-in suite or a claim file");
  verify->fallthrough();
  verify->add_option("suite", suite, "theorem5|theorem7|classical|negative|file")
      ->required()
      ->check(CLI::IsMember({"theorem5", "theorem7", "classical", "negative", "file"}));
  verify->add_option("path", claim_path, "Claim file for 'file'");

  std::string identity;
  auto* ident = app.add_subcommand("identity-check", "Check a dissection identity");
  ident->fallthrough();
  ident->add_option("id", identity, "Identity id")->required();

  std::string expr;
  Exponent dissect_m = 0;
  std::optional<std::uint64_t> dissect_mod;
  auto* dissect = app.add_subcommand("dissect", "Split a product into progression components");
  dissect->fallthrough();
  dissect->add_option("expr", expr, "Product spec, e.g. \"(1)^-1\"")->required();
  dissect->add_option("m", dissect_m, "Number of components")->required();
  dissect->add_option("--mod", dissect_mod, "Work modulo M");

  ScanRequest scan_request;
  std::vector<std::uint64_t> scan_moduli;
  auto* scan = app.add_subcommand("scan", "Probe small progressions for vanishing residues");
  scan->fallthrough();
  scan->add_option("--r-min", scan_request.r_range.lo, "Smallest r");
  scan->add_option("--r-max", scan_request.r_range.hi, "Largest r");
  scan->add_option("--moduli", scan_moduli, "Moduli to test")->delimiter(',');
  scan->add_option("--a-max", scan_request.progression_max, "Largest progression modulus");
  scan->add_option("--n-probe", scan_request.n_probe, "Number of n probed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    config.bound = bound;
    if (!ring_text.empty()) {
      config.ring = ring_text == "exact" ? CoefficientRing::Kind::exact
                                         : CoefficientRing::Kind::modular;
    }
    config.format = *parse_format(format_text);
    config.validate();

    if (*verify) return run_verify(config, suite, claim_path);
    if (*ident) return run_identity(config, identity);
    if (*dissect) return run_dissect(config, expr, dissect_m, dissect_mod);
    if (!scan_moduli.empty()) scan_request.moduli = scan_moduli;
    return run_scan(config, scan_request);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  }
}
