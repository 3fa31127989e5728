#include "colourcong/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>

namespace colourcong {

namespace {

template <class Arith>
using Vec = std::vector<typename Arith::value_type>;

void require_same_ring(const LaurentSeries& a, const LaurentSeries& b) {
  if (a.ring() != b.ring()) throw RingMismatch(a.ring(), b.ring());
}

std::size_t length_of(Exponent offset, Exponent bound) {
  if (bound < offset) {
    throw std::invalid_argument("series bound " + std::to_string(bound) +
                                " below offset " + std::to_string(offset));
  }
  return static_cast<std::size_t>(bound - offset + 1);
}

// Coefficient at exponent e of a dense vector starting at `offset`, zero
// outside the stored range.
template <class Arith>
const typename Arith::value_type* at_or_null(const Vec<Arith>& v, Exponent offset, Exponent e) {
  if (e < offset) return nullptr;
  auto i = static_cast<std::size_t>(e - offset);
  return i < v.size() ? &v[i] : nullptr;
}

LaurentSeries add_or_subtract(const LaurentSeries& a, const LaurentSeries& b, bool subtract) {
  require_same_ring(a, b);
  return a.visit([&](auto arith, const auto& av) {
    using Arith = decltype(arith);
    const auto& bv = b.storage<Arith>();
    const Exponent lo = std::min(a.offset(), b.offset());
    const Exponent hi = std::min(a.bound(), b.bound());
    Vec<Arith> out(length_of(lo, hi));
    for (Exponent e = lo; e <= hi; ++e) {
      auto& slot = out[static_cast<std::size_t>(e - lo)];
      if (auto* x = at_or_null<Arith>(av, a.offset(), e)) arith.add_to(slot, *x);
      if (auto* y = at_or_null<Arith>(bv, b.offset(), e)) {
        if (subtract) arith.sub_from(slot, *y);
        else arith.add_to(slot, *y);
      }
    }
    return LaurentSeries::from_storage(a.ring(), lo, std::move(out));
  });
}

}  // namespace

// ---------------------------------------------------------------------------
// LaurentSeries

LaurentSeries LaurentSeries::zero(CoefficientRing ring, Exponent offset, Exponent bound) {
  auto n = length_of(offset, bound);
  if (ring.is_exact()) return LaurentSeries(ring, offset, ExactCoefficients(n));
  return LaurentSeries(ring, offset, Residues(n, 0));
}

LaurentSeries LaurentSeries::from_coefficients(CoefficientRing ring, Exponent offset,
                                               std::span<const Integer> coefficients) {
  if (coefficients.empty()) throw std::invalid_argument("a series needs at least one coefficient");
  if (ring.is_exact()) {
    return LaurentSeries(ring, offset, ExactCoefficients(coefficients.begin(), coefficients.end()));
  }
  detail::ModArith arith{ring.modulus()};
  Residues r;
  r.reserve(coefficients.size());
  for (const auto& c : coefficients) r.push_back(arith.from(c));
  return LaurentSeries(ring, offset, std::move(r));
}

LaurentSeries LaurentSeries::from_coefficients(CoefficientRing ring, Exponent offset,
                                               std::initializer_list<long> coefficients) {
  std::vector<Integer> v;
  v.reserve(coefficients.size());
  for (long c : coefficients) v.emplace_back(c);
  return from_coefficients(ring, offset, std::span<const Integer>(v));
}

LaurentSeries LaurentSeries::from_storage(CoefficientRing ring, Exponent offset,
                                          ExactCoefficients coefficients) {
  if (!ring.is_exact()) throw std::invalid_argument("exact storage given for a modular ring");
  if (coefficients.empty()) throw std::invalid_argument("a series needs at least one coefficient");
  return LaurentSeries(ring, offset, std::move(coefficients));
}

LaurentSeries LaurentSeries::from_storage(CoefficientRing ring, Exponent offset, Residues residues) {
  if (!ring.is_modular()) throw std::invalid_argument("residue storage given for the exact ring");
  if (residues.empty()) throw std::invalid_argument("a series needs at least one coefficient");
  for (auto r : residues) {
    if (r >= ring.modulus()) throw std::invalid_argument("unreduced residue");
  }
  return LaurentSeries(ring, offset, std::move(residues));
}

std::size_t LaurentSeries::size() const {
  return std::visit([](const auto& v) { return v.size(); }, coeffs_);
}

Integer LaurentSeries::coeff(Exponent e) const {
  if (e < offset_ || e > bound()) {
    throw std::out_of_range("exponent " + std::to_string(e) + " outside validity range [" +
                            std::to_string(offset_) + ", " + std::to_string(bound()) + "]");
  }
  return visit([&](auto arith, const auto& v) {
    return arith.to_integer(v[static_cast<std::size_t>(e - offset_)]);
  });
}

std::optional<Exponent> LaurentSeries::valuation() const {
  return visit([&](auto arith, const auto& v) -> std::optional<Exponent> {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!arith.is_zero(v[i])) return offset_ + static_cast<Exponent>(i);
    }
    return std::nullopt;
  });
}

LaurentSeries LaurentSeries::truncated(Exponent new_bound) const {
  if (new_bound < offset_ || new_bound > bound()) {
    throw std::out_of_range("truncation bound outside [offset, bound]");
  }
  auto n = static_cast<std::size_t>(new_bound - offset_ + 1);
  return visit([&](auto, const auto& v) {
    using V = std::decay_t<decltype(v)>;
    return LaurentSeries(ring_, offset_, V(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(n)));
  });
}

LaurentSeries LaurentSeries::trimmed() const {
  auto val = valuation();
  if (!val || *val == offset_) return *this;
  auto skip = static_cast<std::ptrdiff_t>(*val - offset_);
  return visit([&](auto, const auto& v) {
    using V = std::decay_t<decltype(v)>;
    return LaurentSeries(ring_, *val, V(v.begin() + skip, v.end()));
  });
}

const LaurentSeries::ExactCoefficients& LaurentSeries::exact_coefficients() const {
  if (!ring_.is_exact()) throw std::logic_error("series is not over the exact ring");
  return std::get<ExactCoefficients>(coeffs_);
}

const LaurentSeries::Residues& LaurentSeries::residues() const {
  if (!ring_.is_modular()) throw std::logic_error("series is not over a modular ring");
  return std::get<Residues>(coeffs_);
}

// ---------------------------------------------------------------------------
// Operations

LaurentSeries monomial(CoefficientRing ring, const Integer& c, Exponent e, Exponent bound) {
  if (bound < e) {
    throw std::invalid_argument("monomial bound " + std::to_string(bound) + " below exponent " +
                                std::to_string(e));
  }
  std::vector<Integer> v(static_cast<std::size_t>(bound - e + 1));
  v[0] = c;
  return LaurentSeries::from_coefficients(ring, e, v);
}

LaurentSeries add(const LaurentSeries& a, const LaurentSeries& b) {
  return add_or_subtract(a, b, false);
}

LaurentSeries subtract(const LaurentSeries& a, const LaurentSeries& b) {
  return add_or_subtract(a, b, true);
}

LaurentSeries negate(const LaurentSeries& a) {
  return a.visit([&](auto arith, const auto& v) {
    std::decay_t<decltype(v)> out;
    out.reserve(v.size());
    for (const auto& c : v) out.push_back(arith.neg(c));
    return LaurentSeries::from_storage(a.ring(), a.offset(), std::move(out));
  });
}

LaurentSeries scale(const LaurentSeries& a, const Integer& c) {
  return a.visit([&](auto arith, const auto& v) {
    const auto k = arith.from(c);
    std::decay_t<decltype(v)> out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(arith.mul(x, k));
    return LaurentSeries::from_storage(a.ring(), a.offset(), std::move(out));
  });
}

namespace {

LaurentSeries mul_exact(const LaurentSeries& a, const LaurentSeries& b, Exponent offset,
                        std::size_t n) {
  const auto& av = a.exact_coefficients();
  const auto& bv = b.exact_coefficients();
  std::vector<Integer> out(n);
  // Row-wise so that zero coefficients of `a` (sparse Euler products) cost nothing.
  for (std::size_t i = 0; i < av.size() && i < n; ++i) {
    if (sgn(av[i]) == 0) continue;
    const std::size_t jmax = std::min(bv.size(), n - i);
    for (std::size_t j = 0; j < jmax; ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), av[i].get_mpz_t(), bv[j].get_mpz_t());
    }
  }
  return LaurentSeries::from_storage(a.ring(), offset, std::move(out));
}

LaurentSeries mul_modular(const LaurentSeries& a, const LaurentSeries& b, Exponent offset,
                          std::size_t n) {
  const auto& av = a.residues();
  const auto& bv = b.residues();
  const std::uint64_t m = a.ring().modulus();
  std::vector<std::uint64_t> out(n);
  // Residues are below 2^32 so each product fits in 64 bits and a column sum
  // fits comfortably in 128.
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t ilo = k >= bv.size() ? k - bv.size() + 1 : 0;
    const std::size_t ihi = std::min(k, av.size() - 1);
    unsigned __int128 acc = 0;
    for (std::size_t i = ilo; i <= ihi; ++i) acc += av[i] * bv[k - i];
    out[k] = static_cast<std::uint64_t>(acc % m);
  }
  return LaurentSeries::from_storage(a.ring(), offset, std::move(out));
}

}  // namespace

LaurentSeries mul(const LaurentSeries& a, const LaurentSeries& b) {
  require_same_ring(a, b);
  const Exponent offset = a.offset() + b.offset();
  const Exponent bound = std::min(a.bound() + b.offset(), b.bound() + a.offset());
  const auto n = length_of(offset, bound);
  if (a.ring().is_exact()) return mul_exact(a, b, offset, n);
  return mul_modular(a, b, offset, n);
}

LaurentSeries invert(const LaurentSeries& a) {
  const LaurentSeries t = a.trimmed();
  const auto val = t.valuation();
  if (!val) throw NotInvertible("cannot invert the zero series");
  const Integer lead = t.coeff(*val);
  if (!t.ring().is_unit(lead)) {
    throw NotInvertible("leading coefficient " + lead.get_str() + " is not a unit in " +
                        t.ring().to_string());
  }
  // t = q^v·u with u(0) a unit; 1/u is determined as far as u is.
  return t.visit([&](auto arith, const auto& u) {
    std::decay_t<decltype(u)> inv(u.size());
    const auto c0inv = arith.inverse(u[0]);
    inv[0] = c0inv;
    for (std::size_t n = 1; n < u.size(); ++n) {
      typename decltype(arith)::value_type acc{};
      for (std::size_t i = 1; i <= n; ++i) {
        if (!arith.is_zero(u[i])) arith.add_product(acc, u[i], inv[n - i]);
      }
      inv[n] = arith.mul(arith.neg(acc), c0inv);
    }
    // 1/u is valid as far as u is; the q^-v factor moves the bound to
    // t.bound - 2v.
    return LaurentSeries::from_storage(t.ring(), -*val, std::move(inv));
  });
}

LaurentSeries pow_int(const LaurentSeries& a, std::int64_t k) {
  if (k < 0) return pow_int(invert(a), -k);
  if (k == 0) return one(a.ring(), a.bound() - a.offset());
  std::optional<LaurentSeries> result;
  LaurentSeries base = a;
  while (true) {
    if (k & 1) result = result ? mul(*result, base) : base;
    k >>= 1;
    if (k == 0) break;
    base = mul(base, base);
  }
  return *result;
}

LaurentSeries shift(const LaurentSeries& a, Exponent j) {
  return a.visit([&](auto, const auto& v) {
    return LaurentSeries::from_storage(a.ring(), a.offset() + j, std::decay_t<decltype(v)>(v));
  });
}

LaurentSeries scale_variable(const LaurentSeries& a, Exponent t) {
  if (t < 1) throw std::invalid_argument("scale_variable needs t >= 1");
  return a.visit([&](auto, const auto& v) {
    using V = std::decay_t<decltype(v)>;
    V out((v.size() - 1) * static_cast<std::size_t>(t) + 1);
    for (std::size_t i = 0; i < v.size(); ++i) out[i * static_cast<std::size_t>(t)] = v[i];
    return LaurentSeries::from_storage(a.ring(), a.offset() * t, std::move(out));
  });
}

LaurentSeries reduce_mod(const LaurentSeries& a, std::uint64_t m) {
  if (m < 2) throw std::invalid_argument("reduce_mod needs m >= 2");
  if (!a.ring().is_exact()) throw std::invalid_argument("reduce_mod expects an exact series");
  const auto ring = CoefficientRing::modular(m);
  detail::ModArith arith{m};
  const auto& v = a.exact_coefficients();
  std::vector<std::uint64_t> out;
  out.reserve(v.size());
  for (const auto& c : v) out.push_back(arith.from(c));
  return LaurentSeries::from_storage(ring, a.offset(), std::move(out));
}

Agreement compare(const LaurentSeries& a, const LaurentSeries& b) {
  require_same_ring(a, b);
  const Exponent high = std::min(a.bound(), b.bound());
  if (std::max(a.offset(), b.offset()) > high) {
    throw std::invalid_argument("validity ranges do not overlap");
  }
  Agreement result;
  result.low = std::min(a.offset(), b.offset());
  result.high = high;
  a.visit([&](auto arith, const auto& av) {
    using Arith = decltype(arith);
    const auto& bv = b.storage<Arith>();
    const typename Arith::value_type zero{};
    for (Exponent e = result.low; e <= high; ++e) {
      const auto* x = at_or_null<Arith>(av, a.offset(), e);
      const auto* y = at_or_null<Arith>(bv, b.offset(), e);
      if ((x ? *x : zero) != (y ? *y : zero)) {
        result.first_difference = e;
        return;
      }
    }
  });
  result.equal = !result.first_difference;
  return result;
}

std::ostream& operator<<(std::ostream& os, const LaurentSeries& s) {
  bool first = true;
  s.visit([&](auto arith, const auto& v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (arith.is_zero(v[i])) continue;
      Integer c = arith.to_integer(v[i]);
      const Exponent e = s.offset() + static_cast<Exponent>(i);
      if (first) {
        if (c < 0) os << "-";
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      c = abs(c);
      if (c != 1 || e == 0) os << c;
      if (e != 0) os << (c != 1 ? "*q" : "q");
      if (e != 0 && e != 1) os << "^" << e;
      first = false;
    }
  });
  if (first) os << "0";
  os << " + O(q^" << s.bound() + 1 << ")";
  return os;
}

}  // namespace colourcong
