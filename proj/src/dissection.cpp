#include "colourcong/dissection.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace colourcong {

ProgressionSelector::ProgressionSelector(Exponent m, Exponent j) : modulus(m), residue(j) {
  if (m < 2) throw std::invalid_argument("progression modulus must be >= 2");
  if (j < 0 || j >= m) {
    throw std::invalid_argument("progression residue " + std::to_string(j) + " outside [0, " +
                                std::to_string(m) + ")");
  }
}

Exponent floor_div(Exponent a, Exponent m) {
  Exponent q = a / m;
  if ((a % m != 0) && ((a < 0) != (m < 0))) --q;
  return q;
}

Exponent ceil_div(Exponent a, Exponent m) { return -floor_div(-a, m); }

Exponent mod_floor(Exponent a, Exponent m) { return a - m * floor_div(a, m); }

LaurentSeries extract_progression(const LaurentSeries& s, ProgressionSelector sel) {
  const Exponent m = sel.modulus, j = sel.residue;
  const Exponent hi = floor_div(s.bound() - j, m);
  // When no exponent of the progression falls inside [offset, bound], the
  // progression term at `hi` lies below the offset and is known to be zero.
  const Exponent lo = std::min(ceil_div(s.offset() - j, m), hi);
  return s.visit([&](auto, const auto& v) {
    std::decay_t<decltype(v)> out(static_cast<std::size_t>(hi - lo + 1));
    for (Exponent n = lo; n <= hi; ++n) {
      const Exponent e = m * n + j;
      if (e >= s.offset()) {
        out[static_cast<std::size_t>(n - lo)] = v[static_cast<std::size_t>(e - s.offset())];
      }
    }
    return LaurentSeries::from_storage(s.ring(), lo, std::move(out));
  });
}

LaurentSeries h_operator(const LaurentSeries& s, Exponent m) {
  if (m < 2) throw std::invalid_argument("h_operator needs m >= 2");
  return select_class(s, {m, 0});
}

LaurentSeries select_class(const LaurentSeries& s, ProgressionSelector sel) {
  return s.visit([&](auto arith, const auto& v) {
    auto out = v;
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (mod_floor(s.offset() + static_cast<Exponent>(i), sel.modulus) != sel.residue) {
        out[i] = typename decltype(arith)::value_type{};
      }
    }
    return LaurentSeries::from_storage(s.ring(), s.offset(), std::move(out));
  });
}

std::vector<LaurentSeries> dissect_full(const LaurentSeries& s, Exponent m) {
  if (m < 2) throw std::invalid_argument("dissect_full needs m >= 2");
  std::vector<LaurentSeries> parts;
  parts.reserve(static_cast<std::size_t>(m));
  for (Exponent j = 0; j < m; ++j) parts.push_back(extract_progression(s, {m, j}));
  return parts;
}

LaurentSeries reassemble(const std::vector<LaurentSeries>& components, Exponent m) {
  if (m < 2 || components.size() != static_cast<std::size_t>(m)) {
    throw std::invalid_argument("reassemble needs exactly m >= 2 components");
  }
  // Class j is known up to m*(bound_j + 1) + j - 1, the exponent before its
  // first missing term, so the sum is valid to the smallest of those.
  const auto ring = components.front().ring();
  Exponent offset = std::numeric_limits<Exponent>::max();
  Exponent bound = std::numeric_limits<Exponent>::max();
  for (Exponent j = 0; j < m; ++j) {
    const auto& c = components[static_cast<std::size_t>(j)];
    if (c.ring() != ring) throw RingMismatch(ring, c.ring());
    offset = std::min(offset, m * c.offset() + j);
    bound = std::min(bound, m * (c.bound() + 1) + j - 1);
  }
  if (bound < offset) throw std::invalid_argument("reassemble: components leave no valid range");
  return LaurentSeries::zero(ring, offset, bound).visit([&](auto arith, const auto& zeros) {
    using Arith = decltype(arith);
    auto v = zeros;
    for (Exponent j = 0; j < m; ++j) {
      const auto& comp = components[static_cast<std::size_t>(j)];
      const auto& c = comp.template storage<Arith>();
      for (std::size_t n = 0; n < c.size(); ++n) {
        const auto e = m * (comp.offset() + static_cast<Exponent>(n)) + j;
        if (e > bound) break;
        v[static_cast<std::size_t>(e - offset)] = c[n];
      }
    }
    return LaurentSeries::from_storage(ring, offset, std::move(v));
  });
}

}  // namespace colourcong
