#include "colourcong/partitions.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <stdexcept>
#include <string>
#include <thread>

#include "colourcong/special_functions.hpp"

namespace colourcong {

LaurentSeries pr_series(std::int64_t r, CoefficientRing ring, Exponent bound) {
  if (r == 0) throw std::invalid_argument("p_r is undefined for r = 0");
  return pochhammer(ProductSpec{}.eta(1, -r), ring, bound);
}

Integer pr_oracle_positive(std::int64_t r, std::int64_t n) {
  if (r < 1) throw std::invalid_argument("pr_oracle_positive needs r >= 1");
  if (n < 0) return 0;
  std::vector<Integer> ways(static_cast<std::size_t>(n + 1));
  ways[0] = 1;
  for (std::int64_t size = 1; size <= n; ++size) {
    for (std::int64_t colour = 1; colour <= r; ++colour) {
      for (std::int64_t total = size; total <= n; ++total) {
        ways[static_cast<std::size_t>(total)] += ways[static_cast<std::size_t>(total - size)];
      }
    }
  }
  return ways[static_cast<std::size_t>(n)];
}

Integer pr_oracle_negative(std::int64_t r, std::int64_t n) {
  if (r > -1) throw std::invalid_argument("pr_oracle_negative needs r <= -1");
  if (n < 0) return 0;
  const auto len = static_cast<std::size_t>(n + 1);
  std::vector<Integer> even(len), odd(len);
  even[0] = 1;
  // Each (size, colour) object is used at most once; descending totals keep
  // both parities reading the previous round.
  for (std::int64_t size = 1; size <= n; ++size) {
    for (std::int64_t colour = 1; colour <= -r; ++colour) {
      for (std::int64_t total = n; total >= size; --total) {
        const auto t = static_cast<std::size_t>(total);
        const auto from = static_cast<std::size_t>(total - size);
        even[t] += odd[from];
        odd[t] += even[from];
      }
    }
  }
  return even[static_cast<std::size_t>(n)] - odd[static_cast<std::size_t>(n)];
}

// ---------------------------------------------------------------------------
// Claims

Exponent CongruenceClaim::max_index() const {
  if (residues.empty() || n_range.empty()) return 0;
  return progression * n_range.hi + *std::max_element(residues.begin(), residues.end());
}

void CongruenceClaim::validate() const {
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("invalid claim" + (label.empty() ? "" : " '" + label + "'") +
                                ": " + why);
  };
  if (modulus < 2) fail("modulus must be >= 2");
  if (modulus > CoefficientRing::max_modulus) fail("modulus exceeds 32 bits");
  if (progression < 1) fail("progression modulus must be >= 1");
  if (residues.empty()) fail("at least one residue is required");
  for (auto b : residues) {
    if (b < 0 || b >= progression) {
      fail("residue " + std::to_string(b) + " outside [0, " + std::to_string(progression) + ")");
    }
  }
  if (r_slope < 0) fail("r slope must be >= 0");
  if (k_range.empty()) fail("empty k range");
  if (n_range.empty()) fail("empty n range");
  if (k_range.lo < 0) fail("k must be non-negative");
  if (n_range.lo < 0) fail("n must be non-negative");
  for (auto k = k_range.lo; k <= k_range.hi; ++k) {
    const auto r = colours(k);
    if (r == 0) fail("r = 0 at k = " + std::to_string(k));
    if (r < 0 && r_slope != 0) fail("negative r is only allowed for fixed-r claims");
  }
}

std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::inconclusive: return "inconclusive";
  }
  return "unknown";
}

VerificationReport verify_claim(const CongruenceClaim& claim, const VerifyOptions& options) {
  claim.validate();
  const auto started = std::chrono::steady_clock::now();
  VerificationReport report;
  report.claim = claim;
  report.truncation_used = options.bound.value_or(claim.max_index());
  if (report.truncation_used < 0) throw std::invalid_argument("negative truncation bound");

  const auto ring = CoefficientRing::modular(claim.modulus);
  for (auto k = claim.k_range.lo; k <= claim.k_range.hi && !report.counterexample; ++k) {
    const auto r = claim.colours(k);
    const LaurentSeries series =
        options.exact_ring
            ? reduce_mod(pr_series(r, CoefficientRing::exact(), report.truncation_used),
                         claim.modulus)
            : pr_series(r, ring, report.truncation_used);
    const auto& coeffs = series.residues();
    for (auto n = claim.n_range.lo; n <= claim.n_range.hi && !report.counterexample; ++n) {
      for (auto b : claim.residues) {
        const Exponent index = claim.progression * n + b;
        if (index > series.bound()) {
          ++report.out_of_range_count;
          continue;
        }
        ++report.checked_count;
        const auto value = coeffs[static_cast<std::size_t>(index)];
        if (value != 0) {
          report.counterexample =
              Counterexample{k, n, r, b, index, Integer(static_cast<unsigned long>(value))};
          break;
        }
      }
    }
  }

  if (report.counterexample) report.status = Status::fail;
  else if (report.out_of_range_count > 0) report.status = Status::inconclusive;
  else report.status = Status::pass;
  report.wall_time_ms = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - started)
                            .count();
  return report;
}

std::vector<VerificationReport> verify_all(const std::vector<CongruenceClaim>& claims,
                                           const VerifyOptions& options) {
  std::vector<std::optional<VerificationReport>> slots(claims.size());
  std::vector<std::exception_ptr> errors(claims.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (auto i = next++; i < claims.size(); i = next++) {
      try {
        slots[i] = verify_claim(claims[i], options);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const auto workers = std::min<std::size_t>(
      claims.size(), std::max(1u, std::thread::hardware_concurrency()));
  std::vector<std::thread> pool;
  for (std::size_t i = 1; i < workers; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::vector<VerificationReport> reports;
  reports.reserve(claims.size());
  for (std::size_t i = 0; i < claims.size(); ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    reports.push_back(std::move(*slots[i]));
  }
  return reports;
}

// ---------------------------------------------------------------------------
// Built-in corpus

namespace {

CongruenceClaim family(std::string label, std::int64_t c, std::int64_t d, std::uint64_t m,
                       std::int64_t a, std::vector<std::int64_t> residues, std::int64_t k_max,
                       Exponent index_limit) {
  CongruenceClaim claim;
  claim.label = std::move(label);
  claim.r_slope = c;
  claim.r_intercept = d;
  claim.modulus = m;
  claim.progression = a;
  claim.residues = std::move(residues);
  claim.k_range = {0, k_max};
  const auto min_b = *std::min_element(claim.residues.begin(), claim.residues.end());
  claim.n_range = {0, (index_limit - min_b) / a};
  return claim;
}

std::vector<std::int64_t> seven_j_plus(std::int64_t offset) {
  std::vector<std::int64_t> out;
  for (std::int64_t j : {2, 4, 5, 6}) out.push_back(7 * j + offset);
  return out;
}

}  // namespace

std::vector<CongruenceClaim> suite_claims(Suite which, const SuiteLimits& lim) {
  const auto L = lim.index_limit;
  switch (which) {
    case Suite::mod5:
      return {
          family("mod5.i", 5, 1, 5, 5, {4}, lim.k_max, L),
          family("mod5.ii", 5, 2, 5, 5, {2, 3, 4}, lim.k_max, L),
          family("mod5.iii", 5, 4, 5, 5, {3, 4}, lim.k_max, L),
          family("mod5.iv", 25, 3, 5, 25, {22}, lim.k_max_high, L),
          family("mod5.v", 25, 4, 5, 25, {21}, lim.k_max_high, L),
      };
    case Suite::mod7:
      return {
          family("mod7.i", 7, 1, 7, 7, {5}, lim.k_max, L),
          family("mod7.ii", 7, 4, 7, 7, {2, 4, 5, 6}, lim.k_max, L),
          family("mod7.iii", 7, 6, 7, 7, {3, 4, 6}, lim.k_max, L),
          family("mod7.iv", 49, 2, 7, 49, seven_j_plus(3), lim.k_max_high, L),
          family("mod7.v", 49, 3, 7, 49, seven_j_plus(1), lim.k_max_high, L),
          family("mod7.vi", 49, 5, 7, 49, {39}, lim.k_max_high, L),
      };
    case Suite::classical: {
      const auto C = lim.classical_index_limit;
      return {
          family("ramanujan.p5", 0, 1, 5, 5, {4}, 0, C),
          family("ramanujan.p7", 0, 1, 7, 7, {5}, 0, C),
          family("ramanujan.p11", 0, 1, 11, 11, {6}, 0, C),
          family("gandhi.p2_5", 0, 2, 5, 5, {3}, 0, L),
          family("gandhi.p8_11", 0, 8, 11, 11, {4}, 0, L),
      };
    }
    case Suite::negative: {
      // p_{-4}(n*w - (w+1)/6) for n >= 1 is the progression w*n' + (w - (w+1)/6)
      // with n' = n - 1; n = 0 would give a negative index and is skipped.
      std::vector<CongruenceClaim> out;
      for (std::int64_t w : {5, 11, 17, 23}) {
        CongruenceClaim claim;
        claim.label = "ramanujan.neg4_w" + std::to_string(w);
        claim.r_slope = 0;
        claim.r_intercept = -4;
        claim.modulus = static_cast<std::uint64_t>(w);
        claim.progression = w;
        claim.residues = {w - (w + 1) / 6};
        claim.k_range = {0, 0};
        claim.n_range = {0, lim.negative_n_max - 1};
        out.push_back(std::move(claim));
      }
      return out;
    }
  }
  throw std::invalid_argument("unknown suite");
}

std::vector<VerificationReport> verify_theorem_suite(Suite which, const SuiteLimits& limits,
                                                     const VerifyOptions& options) {
  return verify_all(suite_claims(which, limits), options);
}

// ---------------------------------------------------------------------------
// Scanner

std::vector<ScanCandidate> scan_congruences(const ScanRequest& req) {
  std::vector<ScanCandidate> out;
  if (req.r_range.empty() || req.moduli.empty() || req.progression_max < 2 || req.n_probe < 1) {
    return out;
  }
  if (req.n_probe * req.progression_max > req.bound) {
    throw std::invalid_argument("scan needs n_probe * progression_max <= bound");
  }
  for (auto r = req.r_range.lo; r <= req.r_range.hi; ++r) {
    if (r == 0) continue;
    for (auto m : req.moduli) {
      const auto series = pr_series(r, CoefficientRing::modular(m), req.bound);
      const auto& c = series.residues();
      for (std::int64_t a = 2; a <= req.progression_max; ++a) {
        for (std::int64_t b = 0; b < a; ++b) {
          bool vanishes = true;
          for (std::int64_t n = 0; n < req.n_probe && vanishes; ++n) {
            vanishes = c[static_cast<std::size_t>(a * n + b)] == 0;
          }
          if (!vanishes) continue;
          ScanCandidate cand;
          cand.claim.label = "scan";
          cand.claim.r_slope = 0;
          cand.claim.r_intercept = r;
          cand.claim.modulus = m;
          cand.claim.progression = a;
          cand.claim.residues = {b};
          cand.claim.k_range = {0, 0};
          cand.claim.n_range = {0, req.n_probe - 1};
          cand.probes = static_cast<std::uint64_t>(req.n_probe);
          out.push_back(std::move(cand));
        }
      }
    }
  }
  return out;
}

}  // namespace colourcong
