#pragma once

// Run configuration, claim-file and product-spec parsing, and report
// rendering for the command-line front end.

#include <cstdint>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "colourcong/identities.hpp"
#include "colourcong/partitions.hpp"
#include "colourcong/special_functions.hpp"

namespace colourcong {

enum class Format { json, csv, plain };

std::optional<Format> parse_format(std::string_view text);
std::string_view to_string(Format f);

struct RunConfig {
  static constexpr Exponent min_bound = 10;

  /// Unset means the command's own default (see README).
  std::optional<Exponent> bound;
  /// Unset means modular for verification; identities use their own ring.
  std::optional<CoefficientRing::Kind> ring;
  /// Empty or "-" writes to standard output.
  std::string output;
  Format format = Format::json;
  std::optional<std::int64_t> k_max;
  std::optional<std::int64_t> n_max;
  /// Include wall_time_ms in reports. Off by default so output is reproducible.
  bool timing = false;

  /// Throws std::invalid_argument when bound < min_bound or an override is negative.
  void validate() const;
};

/// A malformed claim file or product spec. `line` is 1-based, 0 when unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string source, std::size_t line, const std::string& message);

  const std::string& source() const { return source_; }
  std::size_t line() const { return line_; }

 private:
  std::string source_;
  std::size_t line_;
};

/// One claim per line: `c d m A B1[,B2...] kmin..kmax nmin..nmax`. Text after
/// '#' and blank lines are ignored. Claims are labelled `<source>:<line>`.
std::vector<CongruenceClaim> parse_claims(std::istream& in, const std::string& source);
std::vector<CongruenceClaim> load_claim_file(const std::string& path);

/// Whitespace-separated factors `(s)^e` for (q^s;q^s)^e and `(a,b)^e` for
/// (q^a;q^b)^e, e.g. "(1)^-2 (5,25)^1".
ProductSpec parse_product_spec(std::string_view text);

/// Replaces the upper end of k_range (families with c != 0 only) and n_range.
void apply_range_overrides(std::vector<CongruenceClaim>& claims, const RunConfig& config);

/// 0 when every report passes, 1 when any fails, otherwise 3.
int exit_code(const std::vector<VerificationReport>& reports);

std::string render_reports(const std::vector<VerificationReport>& reports, Format format,
                           bool timing = false);

std::string render_identity(const IdentityResult& result, Format format);

struct DissectionReport {
  std::string expression;
  Exponent modulus = 2;
  CoefficientRing ring = CoefficientRing::exact();
  Exponent bound = 0;
  std::vector<LaurentSeries> components;
};

std::string render_dissection(const DissectionReport& report, Format format);

std::string render_scan(const std::vector<ScanCandidate>& candidates, Format format);

}  // namespace colourcong
