#pragma once

// Coefficientwise checks of the dissection identities: both sides are
// expanded independently and compared on their common validity range.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "colourcong/series.hpp"

namespace colourcong {

enum class IdentityId {
  l1,    // (q;q) = (q^25;q^25)(F^-1 - q - q^2 F), F = F(q^5)
  rq2,   // square of l1
  rq3,   // cube of l1
  rq4,   // fourth power of l1
  l2,    // (q;q) = (q^49;q^49)(A - qB - q^2 + q^5 C)
  eqj2,  // square of l2
  eqj1,  // Jacobi: (q;q)^3 = sum (-1)^n (2n+1) q^(n(n+1)/2)
  eqj3,  // (q;q)^3 = J0 - q J1 + q^3 J3 (mod 7)
  eqj4,  // (q;q)^6 = (J0 - q J1 + q^3 J3)^2 (mod 7)
  l3a,   // H7(xi^4) = -4 T7 - 7
  l3b,   // H7(xi^5) = 10 T7 + 49
  qp5,   // (q^5;q^5) = (q;q)^5 (mod 5)
  qp7,   // (q^7;q^7) = (q;q)^7 (mod 7)
};

const std::vector<IdentityId>& all_identities();
std::string_view identity_name(IdentityId id);
std::optional<IdentityId> parse_identity(std::string_view name);

/// Ring the identity is checked in: exact for l1..l3b except eqj3/eqj4,
/// Z/5Z or Z/7Z for the congruences.
CoefficientRing identity_ring(IdentityId id);

struct IdentityResult {
  IdentityId id;
  CoefficientRing ring = CoefficientRing::exact();
  Exponent requested_bound = 0;
  Exponent validity_bound = 0;  // last exponent actually compared
  bool holds = false;
  std::optional<Exponent> first_difference;
};

IdentityResult check_identity(IdentityId id, Exponent bound);

/// The right-hand sides, exposed for the proof replays.
/// (q;q)^power expressed through F(q^5), power in 1..4.
LaurentSeries quintic_dissection(int power, CoefficientRing ring, Exponent bound);
/// (q;q)^power expressed through A, B, C, power in 1..2.
LaurentSeries septic_dissection(int power, CoefficientRing ring, Exponent bound);
/// J0 - q J1 + q^3 J3 with J_i read off Jacobi's cube series, reduced mod 7.
LaurentSeries jacobi_mod7_cube(Exponent bound);
/// The six-term square of jacobi_mod7_cube, mod 7.
LaurentSeries jacobi_mod7_sixth(Exponent bound);

}  // namespace colourcong
