#pragma once

// Arithmetic-progression operators on truncated series.

#include <vector>

#include "colourcong/series.hpp"

namespace colourcong {

/// Exponents e with e = residue (mod modulus), 0 <= residue < modulus.
struct ProgressionSelector {
  Exponent modulus = 2;
  Exponent residue = 0;

  ProgressionSelector(Exponent m, Exponent j);
};

/// Mathematical floor division and modulus (residue in [0, m)).
Exponent floor_div(Exponent a, Exponent m);
Exponent ceil_div(Exponent a, Exponent m);
Exponent mod_floor(Exponent a, Exponent m);

/// sum_n c(m*n + j) q^n: keep exponents = j (mod m), divide by q^j and
/// substitute q^m -> q. Valid to floor((bound - j)/m).
LaurentSeries extract_progression(const LaurentSeries& s, ProgressionSelector sel);

/// Zeroes every exponent not divisible by m, leaving exponents as they are.
LaurentSeries h_operator(const LaurentSeries& s, Exponent m);

/// Keeps only exponents = j (mod m), without reindexing.
LaurentSeries select_class(const LaurentSeries& s, ProgressionSelector sel);

/// The m components extract_progression(s, (m, j)) for j = 0..m-1.
std::vector<LaurentSeries> dissect_full(const LaurentSeries& s, Exponent m);

/// sum_j q^j * components[j](q^m); inverse of dissect_full on the valid range.
/// Valid up to the first exponent whose class component has run out.
LaurentSeries reassemble(const std::vector<LaurentSeries>& components, Exponent m);

}  // namespace colourcong
