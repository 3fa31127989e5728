#pragma once

// Executable replays of the derivations behind each congruence family.
//
// A replay walks the same chain a hand proof takes: reduce the generating
// function with (q^p;q^p) = (q;q)^p (mod p), substitute a dissection
// identity, pick out an arithmetic progression, divide by q^j and substitute
// q^p -> q, and repeat. Every link of the chain is materialised as a pair of
// series that must agree mod p, and the progressions the family is about
// must come out as zero series.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "colourcong/partitions.hpp"
#include "colourcong/series.hpp"

namespace colourcong {

enum class Family {
  mod5_i,    // p_{5k+1}(5n+4)
  mod5_ii,   // p_{5k+2}(5n+i), i = 2,3,4
  mod5_iii,  // p_{5k+4}(5n+i), i = 3,4
  mod5_iv,   // p_{25k+3}(25n+22)
  mod5_v,    // p_{25k+4}(25n+21)
  mod7_i,    // p_{7k+1}(7n+5)
  mod7_ii,   // p_{7k+4}(7n+j), j = 2,4,5,6
  mod7_iii,  // p_{7k+6}(7n+j), j = 3,4,6
  mod7_iv,   // p_{49k+2}(49n+7j+3), j = 2,4,5,6
  mod7_v,    // p_{49k+3}(49n+7j+1), j = 2,4,5,6
  mod7_vi,   // p_{49k+5}(49n+39)
};

const std::vector<Family>& all_families();
std::string_view family_label(Family f);

/// The family as a claim over the given limits (same as the suite entry).
CongruenceClaim family_claim(Family f, const SuiteLimits& limits = {});

struct ReplayStep {
  std::string description;
  LaurentSeries lhs;
  LaurentSeries rhs;
};

struct VanishingProgression {
  Exponent progression;  // A
  Exponent residue;      // B
  LaurentSeries series;  // sum_n p_r(A n + B) q^n as produced by the chain
};

struct ProofReplay {
  Family family;
  std::int64_t k = 0;
  std::int64_t r = 0;
  std::uint64_t modulus = 0;
  std::vector<ReplayStep> steps;
  std::vector<VanishingProgression> vanishing;
};

/// Builds the chain for one k at working bound `bound`.
ProofReplay replay_proof(Family f, std::int64_t k, Exponent bound);

struct ReplayOutcome {
  bool holds = true;
  std::string failure;           // first failing step or progression
  Exponent min_validity = 0;     // smallest range over which a step was compared
};

ReplayOutcome check_replay(const ProofReplay& replay);

}  // namespace colourcong
