#pragma once

// Colour partitions p_r(n), combinatorial oracles for them, and the
// congruence verification harness.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "colourcong/series.hpp"

namespace colourcong {

/// sum_n p_r(n) q^n = (q;q)_inf^(-r). For r < 0 this is (q;q)_inf^|r|, whose
/// coefficients are the even-minus-odd counts of distinct coloured parts.
/// Throws std::invalid_argument for r == 0.
LaurentSeries pr_series(std::int64_t r, CoefficientRing ring, Exponent bound);

/// p_r(n) for r >= 1 by an unbounded coin-change count over the coins
/// (size s, colour c), 1 <= s <= n, 1 <= c <= r.
Integer pr_oracle_positive(std::int64_t r, std::int64_t n);

/// p_r(n) for r <= -1: partitions of n into pairwise distinct (size, colour)
/// parts with |r| colours, counted with sign (-1)^(number of parts).
Integer pr_oracle_negative(std::int64_t r, std::int64_t n);

struct InclusiveRange {
  std::int64_t lo = 0;
  std::int64_t hi = 0;

  bool empty() const { return hi < lo; }
  friend bool operator==(const InclusiveRange&, const InclusiveRange&) = default;
};

/// p_{c*k + d}(A*n + B) = 0 (mod m) for every k in k_range, n in n_range and
/// B in residues.
struct CongruenceClaim {
  std::string label;
  std::int64_t r_slope = 0;      // c
  std::int64_t r_intercept = 1;  // d
  std::uint64_t modulus = 5;     // m
  std::int64_t progression = 5;  // A
  std::vector<std::int64_t> residues;
  InclusiveRange k_range{0, 0};
  InclusiveRange n_range{0, 0};

  std::int64_t colours(std::int64_t k) const { return r_slope * k + r_intercept; }

  /// Largest index A*n + B the claim touches.
  Exponent max_index() const;

  /// Throws std::invalid_argument describing the first violated field rule.
  void validate() const;

  friend bool operator==(const CongruenceClaim&, const CongruenceClaim&) = default;
};

struct Counterexample {
  std::int64_t k = 0;
  std::int64_t n = 0;
  std::int64_t r = 0;
  std::int64_t residue = 0;  // B
  Exponent index = 0;        // A*n + B
  Integer value;             // representative in [0, m)
};

enum class Status { pass, fail, inconclusive };
std::string to_string(Status s);

struct VerificationReport {
  CongruenceClaim claim;
  Exponent truncation_used = 0;
  Status status = Status::inconclusive;
  std::optional<Counterexample> counterexample;
  std::uint64_t checked_count = 0;
  std::uint64_t out_of_range_count = 0;
  double wall_time_ms = 0.0;
};

struct VerifyOptions {
  /// Truncation of the generating functions; defaults to claim.max_index().
  std::optional<Exponent> bound;
  /// Build p_r in the exact ring and reduce, instead of working mod m.
  bool exact_ring = false;
};

/// Checks every (k, n, B) of the claim in order, stopping at the first
/// nonzero residue. Pairs whose index exceeds the truncation are counted as
/// out of range and make an otherwise clean run Inconclusive.
VerificationReport verify_claim(const CongruenceClaim& claim, const VerifyOptions& options = {});

/// Verifies claims (possibly concurrently); reports come back in claim order.
std::vector<VerificationReport> verify_all(const std::vector<CongruenceClaim>& claims,
                                           const VerifyOptions& options = {});

enum class Suite { mod5, mod7, classical, negative };

/// Default index limits for the built-in corpus.
struct SuiteLimits {
  Exponent index_limit = 500;            // families mod 5 / mod 7, Gandhi
  Exponent classical_index_limit = 1000;  // p(5n+4), p(7n+5), p(11n+6)
  std::int64_t k_max = 4;                // families with r = 5k+d or 7k+d
  std::int64_t k_max_high = 2;           // families with r = 25k+d or 49k+d
  std::int64_t negative_n_max = 30;      // p_{-4}(n*w - (w+1)/6), n = 1..n_max
};

/// The built-in claim corpus. n ranges cover every index A*n + B <= limit for
/// the smallest residue B.
std::vector<CongruenceClaim> suite_claims(Suite which, const SuiteLimits& limits = {});

std::vector<VerificationReport> verify_theorem_suite(Suite which,
                                                     const SuiteLimits& limits = {},
                                                     const VerifyOptions& options = {});

struct ScanCandidate {
  CongruenceClaim claim;  // fixed r, single residue
  std::uint64_t probes = 0;
  bool unproven = true;   // always: only finitely many n were probed
};

struct ScanRequest {
  InclusiveRange r_range{1, 7};
  std::vector<std::uint64_t> moduli{5, 7};
  std::int64_t progression_max = 7;  // A ranges over 2..progression_max
  std::int64_t n_probe = 20;         // n = 0..n_probe-1 are probed
  Exponent bound = 500;
};

/// Emits (r, m, A, B) whenever p_r(A*n + B) vanishes mod m for every probed n.
/// Requires n_probe * progression_max <= bound.
std::vector<ScanCandidate> scan_congruences(const ScanRequest& request);

}  // namespace colourcong
