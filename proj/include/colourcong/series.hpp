#pragma once

// Truncated Laurent series in one variable q.
//
// A series stores the coefficients of q^offset .. q^bound densely. Every
// exponent below `offset` is exactly zero and every exponent up to `bound` is
// correct; nothing is known above `bound`. All operations propagate the bound
// conservatively, so a coefficient reported valid never changes when the
// same pipeline is recomputed with more terms.

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <variant>
#include <vector>

#include "colourcong/detail/arith.hpp"
#include "colourcong/ring.hpp"

namespace colourcong {

class LaurentSeries {
 public:
  using ExactCoefficients = std::vector<Integer>;
  using Residues = std::vector<std::uint64_t>;

  /// The zero series on [offset, bound].
  static LaurentSeries zero(CoefficientRing ring, Exponent offset, Exponent bound);

  /// coefficients[i] is the coefficient of q^(offset + i); bound is implied by
  /// the length. Values are reduced into the ring.
  static LaurentSeries from_coefficients(CoefficientRing ring, Exponent offset,
                                         std::span<const Integer> coefficients);
  static LaurentSeries from_coefficients(CoefficientRing ring, Exponent offset,
                                         std::initializer_list<long> coefficients);

  /// Takes ownership of already-reduced storage.
  static LaurentSeries from_storage(CoefficientRing ring, Exponent offset,
                                    ExactCoefficients coefficients);
  static LaurentSeries from_storage(CoefficientRing ring, Exponent offset, Residues residues);

  const CoefficientRing& ring() const { return ring_; }
  Exponent offset() const { return offset_; }
  Exponent bound() const { return offset_ + static_cast<Exponent>(size()) - 1; }
  std::size_t size() const;

  /// Coefficient of q^e; throws std::out_of_range outside [offset, bound].
  Integer coeff(Exponent e) const;

  /// Lowest exponent with a nonzero coefficient, if any.
  std::optional<Exponent> valuation() const;
  bool is_zero() const { return !valuation().has_value(); }

  /// Drops coefficients above new_bound (new_bound in [offset, bound]).
  LaurentSeries truncated(Exponent new_bound) const;

  /// Raises the offset to the valuation. The zero series is returned as is.
  LaurentSeries trimmed() const;

  const ExactCoefficients& exact_coefficients() const;
  const Residues& residues() const;

  template <class Arith>
  const std::vector<typename Arith::value_type>& storage() const {
    return std::get<std::vector<typename Arith::value_type>>(coeffs_);
  }

  /// Calls f(arith, storage) with the arithmetic matching this series' ring.
  template <class F>
  decltype(auto) visit(F&& f) const {
    if (ring_.is_exact()) return f(detail::ExactArith{}, std::get<ExactCoefficients>(coeffs_));
    return f(detail::ModArith{ring_.modulus()}, std::get<Residues>(coeffs_));
  }

 private:
  LaurentSeries(CoefficientRing ring, Exponent offset,
                std::variant<ExactCoefficients, Residues> coeffs)
      : ring_(ring), offset_(offset), coeffs_(std::move(coeffs)) {}

  CoefficientRing ring_;
  Exponent offset_;
  std::variant<ExactCoefficients, Residues> coeffs_;
};

/// c·q^e, valid up to bound.
LaurentSeries monomial(CoefficientRing ring, const Integer& c, Exponent e, Exponent bound);
inline LaurentSeries one(CoefficientRing ring, Exponent bound) {
  return monomial(ring, 1, 0, bound);
}

LaurentSeries add(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries subtract(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries negate(const LaurentSeries& a);
LaurentSeries scale(const LaurentSeries& a, const Integer& c);

/// Cauchy product. The result is valid up to
/// min(a.bound + b.offset, b.bound + a.offset).
LaurentSeries mul(const LaurentSeries& a, const LaurentSeries& b);

/// Requires the lowest nonzero coefficient to be a unit of the ring.
LaurentSeries invert(const LaurentSeries& a);

/// a^k by repeated squaring; negative k inverts first.
LaurentSeries pow_int(const LaurentSeries& a, std::int64_t k);

/// Multiplies by q^j.
LaurentSeries shift(const LaurentSeries& a, Exponent j);

/// Substitutes q -> q^t.
LaurentSeries scale_variable(const LaurentSeries& a, Exponent t);

/// Coefficientwise reduction of an exact series into Z/mZ.
LaurentSeries reduce_mod(const LaurentSeries& a, std::uint64_t m);

inline Integer coeff_at(const LaurentSeries& a, Exponent e) { return a.coeff(e); }

/// Outcome of comparing two series on the intersection of their ranges.
struct Agreement {
  bool equal = false;
  Exponent low = 0;   // first exponent compared
  Exponent high = 0;  // last exponent compared
  std::optional<Exponent> first_difference;
};

/// Compares a and b on [min(offsets), min(bounds)], treating exponents below a
/// series' offset as zero. Throws if [offset, bound] ranges are disjoint or the
/// rings differ.
Agreement compare(const LaurentSeries& a, const LaurentSeries& b);
inline bool equal_on_overlap(const LaurentSeries& a, const LaurentSeries& b) {
  return compare(a, b).equal;
}

inline LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) { return add(a, b); }
inline LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) {
  return subtract(a, b);
}
inline LaurentSeries operator-(const LaurentSeries& a) { return negate(a); }
inline LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) { return mul(a, b); }
inline LaurentSeries operator*(const Integer& c, const LaurentSeries& a) { return scale(a, c); }

/// Human-readable form, e.g. "1 - q - q^2 + O(q^3)".
std::ostream& operator<<(std::ostream& os, const LaurentSeries& s);

}  // namespace colourcong
