#include "colourcong/special_functions.hpp"

#include <stdexcept>
#include <string>

namespace colourcong {

namespace {

void validate(const PochhammerFactor& f) {
  if (f.start < 1 || f.step < 1) {
    throw std::invalid_argument("Pochhammer factor needs start >= 1 and step >= 1, got (" +
                                std::to_string(f.start) + "," + std::to_string(f.step) + ")");
  }
}

// prod_{n>=0} (1 - q^(start + n*step)) or its reciprocal, to `bound`.
// Multiplying by (1 - q^k) runs downward; dividing runs upward and is the
// geometric series 1 + q^k + q^2k + ... applied in place.
LaurentSeries single_factor(const PochhammerFactor& f, bool reciprocal, CoefficientRing ring,
                            Exponent bound) {
  return one(ring, bound).visit([&](auto arith, const auto& init) {
    auto c = init;
    const auto n = static_cast<Exponent>(c.size());
    for (Exponent k = f.start; k <= bound; k += f.step) {
      if (reciprocal) {
        for (Exponent i = k; i < n; ++i) arith.add_to(c[i], c[i - k]);
      } else {
        for (Exponent i = n - 1; i >= k; --i) arith.sub_from(c[i], c[i - k]);
      }
    }
    return LaurentSeries::from_storage(ring, 0, std::move(c));
  });
}

}  // namespace

ProductSpec::ProductSpec(std::vector<PochhammerFactor> factors) : factors_(std::move(factors)) {
  for (const auto& f : factors_) validate(f);
}

ProductSpec& ProductSpec::eta(Exponent scale, std::int64_t exponent) {
  return general(scale, scale, exponent);
}

ProductSpec& ProductSpec::general(Exponent start, Exponent step, std::int64_t exponent) {
  PochhammerFactor f{start, step, exponent};
  validate(f);
  factors_.push_back(f);
  return *this;
}

LaurentSeries pochhammer(const ProductSpec& spec, CoefficientRing ring, Exponent bound) {
  if (bound < 0) throw std::invalid_argument("pochhammer needs bound >= 0");
  LaurentSeries result = one(ring, bound);
  for (const auto& f : spec.factors()) {
    if (f.exponent == 0) continue;
    const std::int64_t power = f.exponent < 0 ? -f.exponent : f.exponent;
    LaurentSeries base = single_factor(f, f.exponent < 0, ring, bound);
    result = mul(result, power == 1 ? base : pow_int(base, power));
  }
  return result;
}

LaurentSeries euler_product(Exponent scale, CoefficientRing ring, Exponent bound) {
  return pochhammer(ProductSpec{}.eta(scale, 1), ring, bound);
}

LaurentSeries theta_f(ThetaSpec spec, CoefficientRing ring, Exponent bound) {
  if (spec.x < 1 || spec.y < 1) throw std::invalid_argument("theta_f needs x, y >= 1");
  if (bound < 0) throw std::invalid_argument("theta_f needs bound >= 0");
  auto exponent = [&](Exponent n) {
    return spec.x * (n * (n + 1) / 2) + spec.y * (n * (n - 1) / 2);
  };
  std::vector<Integer> c(static_cast<std::size_t>(bound + 1));
  // The exponent is a convex quadratic in n with minimum 0 at n = 0, so each
  // direction can stop at the first term beyond the bound; one extra step is
  // taken on each side before stopping.
  for (int dir : {1, -1}) {
    int overshoot = 0;
    for (Exponent n = dir == 1 ? 0 : -1; overshoot < 2; n += dir) {
      const Exponent e = exponent(n);
      if (e > bound) {
        ++overshoot;
        continue;
      }
      c[static_cast<std::size_t>(e)] += (n % 2 == 0) ? 1 : -1;
    }
  }
  return LaurentSeries::from_coefficients(ring, 0, c);
}

LaurentSeries rr_F5(CoefficientRing ring, Exponent bound) {
  ProductSpec spec;
  spec.general(5, 25, 1).general(20, 25, 1).general(10, 25, -1).general(15, 25, -1);
  return pochhammer(spec, ring, bound);
}

LaurentSeries jacobi_cube(CoefficientRing ring, Exponent bound) {
  if (bound < 0) throw std::invalid_argument("jacobi_cube needs bound >= 0");
  std::vector<Integer> c(static_cast<std::size_t>(bound + 1));
  for (Exponent n = 0; n * (n + 1) / 2 <= bound; ++n) {
    c[static_cast<std::size_t>(n * (n + 1) / 2)] = (n % 2 == 0 ? 1 : -1) * (2 * n + 1);
  }
  return LaurentSeries::from_coefficients(ring, 0, c);
}

LaurentSeries abc7(ThetaQuotient which, CoefficientRing ring, Exponent bound) {
  const ThetaSpec f14_35{14, 35}, f7_42{7, 42}, f21_28{21, 28};
  auto quotient = [&](ThetaSpec num, ThetaSpec den) {
    return mul(theta_f(num, ring, bound), invert(theta_f(den, ring, bound)));
  };
  switch (which) {
    case ThetaQuotient::A: return quotient(f14_35, f7_42);
    case ThetaQuotient::B: return quotient(f21_28, f14_35);
    case ThetaQuotient::C: return quotient(f7_42, f21_28);
  }
  throw std::invalid_argument("unknown theta quotient");
}

LaurentSeries xi_series(CoefficientRing ring, Exponent bound) {
  const Exponent work = bound + 2;
  ProductSpec spec;
  spec.eta(1, 1).eta(49, -1);
  return shift(pochhammer(spec, ring, work), -2);
}

LaurentSeries t7_series(CoefficientRing ring, Exponent bound) {
  const Exponent work = bound + 7;
  ProductSpec spec;
  spec.eta(7, 4).eta(49, -4);
  return shift(pochhammer(spec, ring, work), -7);
}

}  // namespace colourcong
