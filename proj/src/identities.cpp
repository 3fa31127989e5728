#include "colourcong/identities.hpp"

#include <stdexcept>
#include <tuple>

#include "colourcong/dissection.hpp"
#include "colourcong/special_functions.hpp"

namespace colourcong {

namespace {

struct Named {
  IdentityId id;
  std::string_view name;
};

constexpr Named kNames[] = {
    {IdentityId::l1, "l1"},     {IdentityId::rq2, "rq2"},   {IdentityId::rq3, "rq3"},
    {IdentityId::rq4, "rq4"},   {IdentityId::l2, "l2"},     {IdentityId::eqj2, "eqj2"},
    {IdentityId::eqj1, "eqj1"}, {IdentityId::eqj3, "eqj3"}, {IdentityId::eqj4, "eqj4"},
    {IdentityId::l3a, "l3a"},   {IdentityId::l3b, "l3b"},   {IdentityId::qp5, "qp5"},
    {IdentityId::qp7, "qp7"},
};

// coefficient * q^exponent * base^power
struct Term {
  long coefficient;
  Exponent exponent;
  int power;
};

LaurentSeries q_power(CoefficientRing ring, Exponent e, Exponent bound) {
  return monomial(ring, 1, e, std::max(e, bound));
}

LaurentSeries combine_terms(std::initializer_list<Term> terms, const LaurentSeries& base) {
  std::optional<LaurentSeries> sum;
  for (const auto& t : terms) {
    auto piece = scale(shift(pow_int(base, t.power), t.exponent), Integer(t.coefficient));
    sum = sum ? add(*sum, piece) : piece;
  }
  return *sum;
}

IdentityResult finish(IdentityId id, CoefficientRing ring, Exponent bound,
                      const LaurentSeries& lhs, const LaurentSeries& rhs) {
  const auto agreement = compare(lhs, rhs);
  IdentityResult r{id, ring, bound, agreement.high, agreement.equal, agreement.first_difference};
  return r;
}

// J_j components of Jacobi's cube series, as series in q^7:
// (q;q)^3 = J0(q^7) - q J1(q^7) + q^3 J3(q^7) - 7 q^6 J6(q^7).
std::tuple<LaurentSeries, LaurentSeries, LaurentSeries> jacobi_components_mod7(Exponent bound) {
  const auto cube = jacobi_cube(CoefficientRing::exact(), bound);
  auto component = [&](Exponent j, long sign) {
    return reduce_mod(scale_variable(scale(extract_progression(cube, {7, j}), sign), 7), 7);
  };
  return {component(0, 1), component(1, -1), component(3, 1)};
}

}  // namespace

const std::vector<IdentityId>& all_identities() {
  static const std::vector<IdentityId> ids = [] {
    std::vector<IdentityId> v;
    for (const auto& n : kNames) v.push_back(n.id);
    return v;
  }();
  return ids;
}

std::string_view identity_name(IdentityId id) {
  for (const auto& n : kNames) {
    if (n.id == id) return n.name;
  }
  return "?";
}

std::optional<IdentityId> parse_identity(std::string_view name) {
  for (const auto& n : kNames) {
    if (n.name == name) return n.id;
  }
  return std::nullopt;
}

CoefficientRing identity_ring(IdentityId id) {
  switch (id) {
    case IdentityId::eqj3:
    case IdentityId::eqj4:
    case IdentityId::qp7: return CoefficientRing::modular(7);
    case IdentityId::qp5: return CoefficientRing::modular(5);
    default: return CoefficientRing::exact();
  }
}

LaurentSeries quintic_dissection(int power, CoefficientRing ring, Exponent bound) {
  const auto F = rr_F5(ring, bound);
  LaurentSeries inner = [&] {
    switch (power) {
      case 1: return combine_terms({{1, 0, -1}, {-1, 1, 0}, {-1, 2, 1}}, F);
      case 2:
        return combine_terms({{1, 0, -2}, {-2, 1, -1}, {-1, 2, 0}, {2, 3, 1}, {1, 4, 2}}, F);
      case 3:
        return combine_terms({{1, 0, -3}, {-3, 1, -2}, {5, 3, 0}, {-3, 5, 2}, {-1, 6, 3}}, F);
      case 4:
        return combine_terms({{1, 0, -4},
                              {-4, 1, -3},
                              {2, 2, -2},
                              {8, 3, -1},
                              {-5, 4, 0},
                              {-8, 5, 1},
                              {2, 6, 2},
                              {4, 7, 3},
                              {1, 8, 4}},
                             F);
      default: throw std::invalid_argument("quintic dissection is tabulated for powers 1..4");
    }
  }();
  return mul(pochhammer(ProductSpec{}.eta(25, power), ring, bound), inner);
}

LaurentSeries septic_dissection(int power, CoefficientRing ring, Exponent bound) {
  const auto A = abc7(ThetaQuotient::A, ring, bound);
  const auto B = abc7(ThetaQuotient::B, ring, bound);
  const auto C = abc7(ThetaQuotient::C, ring, bound);
  auto q = [&](Exponent e) { return q_power(ring, e, bound); };
  auto k = [](long c) { return Integer(c); };
  LaurentSeries inner = [&] {
    switch (power) {
      case 1: return A - q(1) * B - q(2) + q(5) * C;
      case 2:
        return (A * A - k(2) * (q(7) * C)) - k(2) * (q(1) * A * B) +
               q(2) * (B * B - k(2) * A) + q(3) * (k(2) * B + q(7) * C * C) + q(4) +
               k(2) * (q(5) * A * C) - k(2) * (q(6) * B * C);
      default: throw std::invalid_argument("septic dissection is tabulated for powers 1..2");
    }
  }();
  return mul(pochhammer(ProductSpec{}.eta(49, power), ring, bound), inner);
}

LaurentSeries jacobi_mod7_cube(Exponent bound) {
  const auto [j0, j1, j3] = jacobi_components_mod7(bound);
  const auto ring = CoefficientRing::modular(7);
  return j0 - q_power(ring, 1, bound) * j1 + q_power(ring, 3, bound) * j3;
}

LaurentSeries jacobi_mod7_sixth(Exponent bound) {
  const auto [j0, j1, j3] = jacobi_components_mod7(bound);
  const auto ring = CoefficientRing::modular(7);
  auto q = [&](Exponent e) { return q_power(ring, e, bound); };
  const Integer two(2);
  return j0 * j0 - two * (q(1) * j0 * j1) + q(2) * j1 * j1 + two * (q(3) * j0 * j3) -
         two * (q(4) * j1 * j3) + q(6) * j3 * j3;
}

IdentityResult check_identity(IdentityId id, Exponent bound) {
  if (bound < 10) throw std::invalid_argument("identity checks need bound >= 10");
  const auto ring = identity_ring(id);
  const auto Z = CoefficientRing::exact();
  switch (id) {
    case IdentityId::l1:
    case IdentityId::rq2:
    case IdentityId::rq3:
    case IdentityId::rq4: {
      const int power = id == IdentityId::l1 ? 1 : id == IdentityId::rq2 ? 2 : id == IdentityId::rq3 ? 3 : 4;
      return finish(id, ring, bound, pow_int(euler_product(1, Z, bound), power),
                    quintic_dissection(power, Z, bound));
    }
    case IdentityId::l2:
    case IdentityId::eqj2: {
      const int power = id == IdentityId::l2 ? 1 : 2;
      return finish(id, ring, bound, pow_int(euler_product(1, Z, bound), power),
                    septic_dissection(power, Z, bound));
    }
    case IdentityId::eqj1:
      return finish(id, ring, bound, jacobi_cube(Z, bound), pow_int(euler_product(1, Z, bound), 3));
    case IdentityId::eqj3:
      return finish(id, ring, bound, pow_int(euler_product(1, ring, bound), 3),
                    jacobi_mod7_cube(bound));
    case IdentityId::eqj4:
      return finish(id, ring, bound, pow_int(euler_product(1, ring, bound), 6),
                    jacobi_mod7_sixth(bound));
    case IdentityId::l3a:
    case IdentityId::l3b: {
      const bool fourth = id == IdentityId::l3a;
      const auto xi = xi_series(Z, bound);
      const auto t7 = t7_series(Z, bound);
      const auto lhs = h_operator(pow_int(xi, fourth ? 4 : 5), 7);
      const auto rhs = fourth ? scale(t7, -4) - monomial(Z, 7, 0, bound)
                              : scale(t7, 10) + monomial(Z, 49, 0, bound);
      return finish(id, ring, bound, lhs, rhs);
    }
    case IdentityId::qp5:
    case IdentityId::qp7: {
      const std::uint64_t p = id == IdentityId::qp5 ? 5 : 7;
      const auto lhs = reduce_mod(euler_product(static_cast<Exponent>(p), Z, bound), p);
      const auto rhs =
          reduce_mod(pow_int(euler_product(1, Z, bound), static_cast<std::int64_t>(p)), p);
      return finish(id, ring, bound, lhs, rhs);
    }
  }
  throw std::invalid_argument("unknown identity");
}

}  // namespace colourcong
