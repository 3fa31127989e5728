#pragma once

// Constructors for the named q-series: Pochhammer/eta-quotient products,
// theta series f(-q^x, -q^y), the Rogers-Ramanujan quotient in q^5, the
// theta quotients A, B, C in q^7, Jacobi's cube series, xi and T7.

#include <vector>

#include "colourcong/series.hpp"

namespace colourcong {

/// One factor (q^start; q^step)_inf^exponent = prod_{n>=0} (1 - q^(start + n*step))^exponent.
struct PochhammerFactor {
  Exponent start = 1;
  Exponent step = 1;
  std::int64_t exponent = 1;

  friend bool operator==(const PochhammerFactor&, const PochhammerFactor&) = default;
};

/// Formal product of Pochhammer factors. The eta-quotient form
/// (q^a; q^a)_inf^e is the start == step case; an empty product is 1.
class ProductSpec {
 public:
  ProductSpec() = default;
  explicit ProductSpec(std::vector<PochhammerFactor> factors);

  /// Appends (q^scale; q^scale)_inf^exponent.
  ProductSpec& eta(Exponent scale, std::int64_t exponent);
  /// Appends (q^start; q^step)_inf^exponent.
  ProductSpec& general(Exponent start, Exponent step, std::int64_t exponent);

  const std::vector<PochhammerFactor>& factors() const { return factors_; }
  bool empty() const { return factors_.empty(); }

  friend bool operator==(const ProductSpec&, const ProductSpec&) = default;

 private:
  std::vector<PochhammerFactor> factors_;
};

/// f(-q^x, -q^y) = sum_{n in Z} (-1)^n q^(x*n(n+1)/2 + y*n(n-1)/2).
struct ThetaSpec {
  Exponent x = 1;
  Exponent y = 1;
};

/// Expands the product to `bound`. Every factor has constant term 1, so the
/// result has offset 0 and is valid to `bound`.
LaurentSeries pochhammer(const ProductSpec& spec, CoefficientRing ring, Exponent bound);

/// (q^scale; q^scale)_inf.
LaurentSeries euler_product(Exponent scale, CoefficientRing ring, Exponent bound);

LaurentSeries theta_f(ThetaSpec spec, CoefficientRing ring, Exponent bound);

/// F(q^5) = (q^5;q^25)(q^20;q^25) / ((q^10;q^25)(q^15;q^25)): the
/// Rogers-Ramanujan continued fraction R(q^5) with its q factor removed.
LaurentSeries rr_F5(CoefficientRing ring, Exponent bound);

/// (q;q)_inf^3 = sum_{n>=0} (-1)^n (2n+1) q^(n(n+1)/2).
LaurentSeries jacobi_cube(CoefficientRing ring, Exponent bound);

enum class ThetaQuotient { A, B, C };

/// A(q^7) = f(-q^14,-q^35)/f(-q^7,-q^42), B(q^7) = f(-q^21,-q^28)/f(-q^14,-q^35),
/// C(q^7) = f(-q^7,-q^42)/f(-q^21,-q^28).
LaurentSeries abc7(ThetaQuotient which, CoefficientRing ring, Exponent bound);

/// xi = (q;q)_inf / (q^2 (q^49;q^49)_inf): offset -2, valid to `bound`.
LaurentSeries xi_series(CoefficientRing ring, Exponent bound);

/// T7 = (q^7;q^7)_inf^4 / (q^7 (q^49;q^49)_inf^4): offset -7, valid to `bound`.
LaurentSeries t7_series(CoefficientRing ring, Exponent bound);

}  // namespace colourcong
