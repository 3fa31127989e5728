#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace colourcong {

using Integer = mpz_class;
using Exponent = std::int64_t;

/// Coefficient ring of a truncated series: arbitrary-precision integers, or
/// residues modulo m stored as machine words.
class CoefficientRing {
 public:
  enum class Kind { exact, modular };

  // Residues are multiplied in 64 bits and accumulated in 128, so the
  // modulus has to fit in 32 bits.
  static constexpr std::uint64_t max_modulus = (std::uint64_t{1} << 32) - 1;

  static CoefficientRing exact() { return CoefficientRing{Kind::exact, 0}; }

  static CoefficientRing modular(std::uint64_t m) {
    if (m < 2) throw std::invalid_argument("modulus must be at least 2");
    if (m > max_modulus) throw std::invalid_argument("modulus exceeds 32 bits");
    return CoefficientRing{Kind::modular, m};
  }

  Kind kind() const { return kind_; }
  bool is_exact() const { return kind_ == Kind::exact; }
  bool is_modular() const { return kind_ == Kind::modular; }

  /// 0 for the exact ring.
  std::uint64_t modulus() const { return modulus_; }

  /// Canonical representative: unchanged in the exact ring, in [0, m) otherwise.
  Integer reduce(const Integer& value) const {
    if (is_exact()) return value;
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), value.get_mpz_t(), modulus_);
    return r;
  }

  /// True iff c is invertible: ±1 over the integers, coprime to m otherwise.
  bool is_unit(const Integer& c) const {
    if (is_exact()) return c == 1 || c == -1;
    Integer g;
    Integer m{static_cast<unsigned long>(modulus_)};
    mpz_gcd(g.get_mpz_t(), reduce(c).get_mpz_t(), m.get_mpz_t());
    return g == 1;
  }

  std::string to_string() const {
    return is_exact() ? std::string("ZZ") : "Z/" + std::to_string(modulus_) + "Z";
  }

  friend bool operator==(const CoefficientRing&, const CoefficientRing&) = default;

 private:
  CoefficientRing(Kind kind, std::uint64_t modulus) : kind_(kind), modulus_(modulus) {}

  Kind kind_;
  std::uint64_t modulus_;
};

class RingMismatch : public std::invalid_argument {
 public:
  RingMismatch(const CoefficientRing& a, const CoefficientRing& b)
      : std::invalid_argument("coefficient ring mismatch: " + a.to_string() + " vs " +
                              b.to_string()) {}
};

class NotInvertible : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace colourcong
