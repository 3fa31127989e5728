#include "colourcong/proofs.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "colourcong/dissection.hpp"
#include "colourcong/identities.hpp"
#include "colourcong/special_functions.hpp"

namespace colourcong {

namespace {

struct FamilyInfo {
  Family family;
  std::string_view label;
  std::uint64_t p;
  std::int64_t slope;
  std::int64_t intercept;
  std::size_t suite_index;
};

constexpr FamilyInfo kFamilies[] = {
    {Family::mod5_i, "mod5.i", 5, 5, 1, 0},     {Family::mod5_ii, "mod5.ii", 5, 5, 2, 1},
    {Family::mod5_iii, "mod5.iii", 5, 5, 4, 2}, {Family::mod5_iv, "mod5.iv", 5, 25, 3, 3},
    {Family::mod5_v, "mod5.v", 5, 25, 4, 4},    {Family::mod7_i, "mod7.i", 7, 7, 1, 0},
    {Family::mod7_ii, "mod7.ii", 7, 7, 4, 1},   {Family::mod7_iii, "mod7.iii", 7, 7, 6, 2},
    {Family::mod7_iv, "mod7.iv", 7, 49, 2, 3},  {Family::mod7_v, "mod7.v", 7, 49, 3, 4},
    {Family::mod7_vi, "mod7.vi", 7, 49, 5, 5},
};

const FamilyInfo& info(Family f) {
  for (const auto& i : kFamilies) {
    if (i.family == f) return i;
  }
  throw std::invalid_argument("unknown family");
}

// Shared state for building one chain.
class Chain {
 public:
  Chain(ProofReplay& replay, CoefficientRing ring, Exponent bound)
      : replay_(replay), ring_(ring), bound_(bound) {}

  Exponent bound() const { return bound_; }

  // (q^scale;q^scale)^exponent, expanded to `bound` (default: the working bound).
  LaurentSeries eta(Exponent scale, std::int64_t exponent, Exponent bound = -1) const {
    return pochhammer(ProductSpec{}.eta(scale, exponent), ring_, bound < 0 ? bound_ : bound);
  }
  LaurentSeries constant(long c, const LaurentSeries& s) const { return scale(s, Integer(c)); }

  void step(std::string description, LaurentSeries lhs, LaurentSeries rhs) {
    replay_.steps.push_back({std::move(description), std::move(lhs), std::move(rhs)});
  }

  void vanish(Exponent a, Exponent b, LaurentSeries s) {
    replay_.vanishing.push_back({a, b, std::move(s)});
  }

  // The final extraction of a chain: each residue of `form` must vanish, and
  // the direct progression of p_r must agree with it.
  void finish(const LaurentSeries& pr, const LaurentSeries& form, Exponent m,
              std::initializer_list<Exponent> residues, Exponent outer_a, Exponent outer_b) {
    for (auto j : residues) {
      auto chained = extract_progression(form, {m, j});
      step("p_r(" + std::to_string(outer_a * m) + "n+" + std::to_string(outer_a * j + outer_b) +
               ") read directly vs through the chain",
           extract_progression(pr, {outer_a * m, outer_a * j + outer_b}), chained);
      vanish(outer_a * m, outer_a * j + outer_b, std::move(chained));
    }
  }

 private:
  ProofReplay& replay_;
  CoefficientRing ring_;
  Exponent bound_;
};

}  // namespace

const std::vector<Family>& all_families() {
  static const std::vector<Family> v = [] {
    std::vector<Family> out;
    for (const auto& i : kFamilies) out.push_back(i.family);
    return out;
  }();
  return v;
}

std::string_view family_label(Family f) { return info(f).label; }

CongruenceClaim family_claim(Family f, const SuiteLimits& limits) {
  const auto& i = info(f);
  return suite_claims(i.p == 5 ? Suite::mod5 : Suite::mod7, limits).at(i.suite_index);
}

ProofReplay replay_proof(Family f, std::int64_t k, Exponent bound) {
  if (k < 0) throw std::invalid_argument("k must be non-negative");
  if (bound < 100) throw std::invalid_argument("proof replays need bound >= 100");
  const auto& fi = info(f);
  ProofReplay replay;
  replay.family = f;
  replay.k = k;
  replay.r = fi.slope * k + fi.intercept;
  replay.modulus = fi.p;

  const auto R = CoefficientRing::modular(fi.p);
  const auto p = static_cast<Exponent>(fi.p);
  Chain c(replay, R, bound);
  const auto pr = pr_series(replay.r, R, bound);

  // r = p*k + (p - j): 1/(q;q)^r = (q;q)^j / (q;q)^(p(k+1)) = (q;q)^j / (q^p;q^p)^(k+1).
  auto simple = [&](int j, LaurentSeries dissected, std::initializer_list<Exponent> residues) {
    auto reduced = c.eta(1, j) * c.eta(p, -(k + 1));
    c.step("binomial reduction of (q;q)^-r", pr, reduced);
    auto substituted = dissected * c.eta(p, -(k + 1));
    c.step("substitute the dissection of (q;q)^" + std::to_string(j), reduced, substituted);
    c.finish(pr, substituted, p, residues, 1, 0);
  };

  switch (f) {
    case Family::mod5_i: simple(4, quintic_dissection(4, R, bound), {4}); break;
    case Family::mod5_ii: simple(3, quintic_dissection(3, R, bound), {2, 3, 4}); break;
    case Family::mod5_iii: simple(1, quintic_dissection(1, R, bound), {3, 4}); break;
    case Family::mod7_i: simple(6, jacobi_mod7_sixth(bound), {5}); break;
    case Family::mod7_ii: simple(3, jacobi_mod7_cube(bound), {2, 4, 5, 6}); break;
    case Family::mod7_iii: simple(1, septic_dissection(1, R, bound), {3, 4, 6}); break;

    case Family::mod5_iv:
    case Family::mod5_v: {
      // r = 25k + d with d = 3 (j = 2, class 2) or d = 4 (j = 1, class 1):
      // 1/(q;q)^r = (q;q)^j / ((q^25;q^25)^k (q^5;q^5)).
      const bool iv = f == Family::mod5_iv;
      const int j = iv ? 2 : 1;
      auto tail = c.eta(25, -k) * c.eta(5, -1);
      auto reduced = c.eta(1, j) * tail;
      c.step("binomial reduction of (q;q)^-r", pr, reduced);
      auto substituted = quintic_dissection(j, R, bound) * tail;
      c.step("substitute the dissection of (q;q)^" + std::to_string(j), reduced, substituted);

      // The lone q^j term of the dissection survives: -q^j (q^25;q^25)^j.
      auto inner = extract_progression(substituted, {5, j});
      const auto nb = inner.bound();
      c.step("p_r(5n+" + std::to_string(j) + ") read directly vs through the chain",
             extract_progression(pr, {5, j}), inner);
      auto closed = c.constant(-1, c.eta(1, -1, nb) * c.eta(5, j - k, nb));
      c.step("class " + std::to_string(j) + " component in closed form", inner, closed);
      auto rebinomial = c.constant(4, c.eta(1, 4, nb) * c.eta(5, j - 1 - k, nb));
      c.step("binomial reduction of 1/(q;q)", closed, rebinomial);
      auto second = c.constant(4, quintic_dissection(4, R, nb) * c.eta(5, j - 1 - k, nb));
      c.step("substitute the dissection of (q;q)^4", rebinomial, second);
      c.finish(pr, second, 5, {4}, 5, j);
      break;
    }

    case Family::mod7_iv:
    case Family::mod7_v: {
      // r = 49k + d, d = 2 (power 5, class 3) or d = 3 (power 4, class 1):
      // 1/(q;q)^r = (q;q)^e / ((q^49;q^49)^k (q^7;q^7)), (q;q)^e = q^(2e) xi^e (q^49;q^49)^e.
      const bool iv = f == Family::mod7_iv;
      const int e = iv ? 5 : 4;
      const Exponent cls = iv ? 3 : 1;
      auto reduced = c.eta(1, e) * c.eta(49, -k) * c.eta(7, -1);
      c.step("binomial reduction of (q;q)^-r", pr, reduced);
      const auto xi = xi_series(R, bound);
      auto tail = c.eta(49, e - k) * c.eta(7, -1);
      auto via_xi = shift(pow_int(xi, e), 2 * e) * tail;
      c.step("rewrite (q;q)^" + std::to_string(e) + " through xi", reduced, via_xi);
      auto picked = select_class(via_xi, {7, cls});
      auto via_h = shift(h_operator(pow_int(xi, e), 7), 2 * e) * tail;
      c.step("class " + std::to_string(cls) + " terms equal the H7 projection", picked, via_h);
      // H7(xi^4) = -4 T7 - 7 and H7(xi^5) = 10 T7 + 49 are both 3 T7 mod 7.
      auto t7 = t7_series(R, bound);
      auto via_t7 = shift(c.constant(3, t7), 2 * e) * tail;
      c.step("H7 of xi^" + std::to_string(e) + " as a multiple of T7", via_h, via_t7);
      const std::int64_t tail_exp = iv ? 1 - k : -k;
      auto tidy = c.constant(3, shift(c.eta(7, 3) * c.eta(49, tail_exp), cls));
      c.step("collect the eta factors", via_t7, tidy);
      auto inner = extract_progression(tidy, {7, cls});
      const auto nb = inner.bound();
      c.step("p_r(7n+" + std::to_string(cls) + ") read directly vs through the chain",
             extract_progression(pr, {7, cls}), inner);
      auto closed = c.constant(3, c.eta(1, 3, nb) * c.eta(7, tail_exp, nb));
      c.step("divide by q^" + std::to_string(cls) + " and replace q^7 by q", inner, closed);
      auto second = c.constant(3, jacobi_mod7_cube(nb) * c.eta(7, tail_exp, nb));
      c.step("substitute the mod 7 form of (q;q)^3", closed, second);
      c.finish(pr, second, 7, {2, 4, 5, 6}, 7, cls);
      break;
    }

    case Family::mod7_vi: {
      auto tail = c.eta(49, -k) * c.eta(7, -1);
      auto reduced = c.eta(1, 2) * tail;
      c.step("binomial reduction of (q;q)^-r", pr, reduced);
      auto substituted = septic_dissection(2, R, bound) * tail;
      c.step("substitute the dissection of (q;q)^2", reduced, substituted);
      auto inner = extract_progression(substituted, {7, 4});
      const auto nb = inner.bound();
      c.step("p_r(7n+4) read directly vs through the chain", extract_progression(pr, {7, 4}),
             inner);
      auto closed = c.eta(1, -1, nb) * c.eta(7, 2 - k, nb);
      c.step("class 4 component in closed form", inner, closed);
      auto rebinomial = c.eta(1, 6, nb) * c.eta(7, 1 - k, nb);
      c.step("binomial reduction of 1/(q;q)", closed, rebinomial);
      auto second = jacobi_mod7_sixth(nb) * c.eta(7, 1 - k, nb);
      c.step("substitute the mod 7 form of (q;q)^6", rebinomial, second);
      c.finish(pr, second, 7, {5}, 7, 4);
      break;
    }
  }
  return replay;
}

ReplayOutcome check_replay(const ProofReplay& replay) {
  ReplayOutcome out;
  out.min_validity = std::numeric_limits<Exponent>::max();
  for (const auto& s : replay.steps) {
    const auto a = compare(s.lhs, s.rhs);
    out.min_validity = std::min(out.min_validity, a.high);
    if (!a.equal && out.holds) {
      out.holds = false;
      out.failure = s.description + " (first difference at q^" +
                    std::to_string(*a.first_difference) + ")";
    }
  }
  for (const auto& v : replay.vanishing) {
    if (!v.series.is_zero() && out.holds) {
      out.holds = false;
      out.failure = "progression " + std::to_string(v.progression) + "n+" +
                    std::to_string(v.residue) + " does not vanish";
    }
  }
  return out;
}

}  // namespace colourcong
