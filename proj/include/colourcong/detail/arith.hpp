#pragma once

// Element arithmetic for the two coefficient representations. Series kernels
// are written once against this interface and instantiated for both.

#include <cstdint>
#include <utility>

#include "colourcong/ring.hpp"

namespace colourcong::detail {

struct ExactArith {
  using value_type = Integer;

  value_type from(const Integer& v) const { return v; }
  value_type from_long(long v) const { return Integer(v); }
  Integer to_integer(const value_type& v) const { return v; }
  bool is_zero(const value_type& v) const { return sgn(v) == 0; }
  void add_to(value_type& acc, const value_type& v) const { acc += v; }
  void sub_from(value_type& acc, const value_type& v) const { acc -= v; }
  value_type neg(const value_type& v) const { return -v; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  void add_product(value_type& acc, const value_type& a, const value_type& b) const {
    mpz_addmul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  }
  // Units are ±1.
  value_type inverse(const value_type& v) const { return v; }
};

struct ModArith {
  using value_type = std::uint64_t;

  std::uint64_t m;

  value_type from(const Integer& v) const {
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), m);
    return r.get_ui();
  }
  value_type from_long(long v) const {
    auto r = v % static_cast<long>(m);
    return static_cast<value_type>(r < 0 ? r + static_cast<long>(m) : r);
  }
  Integer to_integer(value_type v) const { return Integer(static_cast<unsigned long>(v)); }
  bool is_zero(value_type v) const { return v == 0; }
  void add_to(value_type& acc, value_type v) const {
    acc += v;
    if (acc >= m) acc -= m;
  }
  void sub_from(value_type& acc, value_type v) const { acc = acc >= v ? acc - v : acc + m - v; }
  value_type neg(value_type v) const { return v == 0 ? 0 : m - v; }
  value_type mul(value_type a, value_type b) const { return (a * b) % m; }
  void add_product(value_type& acc, value_type a, value_type b) const { add_to(acc, mul(a, b)); }

  // Caller guarantees gcd(v, m) = 1.
  value_type inverse(value_type v) const {
    std::int64_t old_r = static_cast<std::int64_t>(v), r = static_cast<std::int64_t>(m);
    std::int64_t old_s = 1, s = 0;
    while (r != 0) {
      auto q = old_r / r;
      old_r = std::exchange(r, old_r - q * r);
      old_s = std::exchange(s, old_s - q * s);
    }
    auto mm = static_cast<std::int64_t>(m);
    return static_cast<value_type>(((old_s % mm) + mm) % mm);
  }
};

}  // namespace colourcong::detail
