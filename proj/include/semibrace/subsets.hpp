#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "semibrace/error.hpp"
#include "semibrace/semibrace.hpp"
#include "semibrace/subset.hpp"

namespace semibrace {

// {x + y | x in X, y in Y}
inline Subset sumset(Semibrace const& b, Subset const& x, Subset const& y) {
  Subset out(b.order());
  x.for_each([&](element_t u) { y.for_each([&](element_t v) { out.insert(b.add(u, v)); }); });
  return out;
}

// {g_x | x in X}
inline Subset group_parts(Semibrace const& b, Subset const& x) {
  Subset out(b.order());
  x.for_each([&](element_t u) { out.insert(b.group_part(u)); });
  return out;
}

// Smallest subgroup of (G, +) containing X; {0} for the empty set.
inline Subset add_subgroup_gen(Semibrace const& b, Subset const& x) {
  x.for_each([&](element_t u) {
    if (!b.in_G(u)) {
      throw Error(ErrorKind::NotInG, "generators must lie in G", {u});
    }
  });
  Subset out = x;
  out.insert(Semibrace::zero);
  auto frontier = out.elements();
  auto gens = x.elements();
  while (!frontier.empty()) {
    auto u = frontier.back();
    frontier.pop_back();
    for (auto g : gens) {
      auto v = b.add(u, g);
      if (!out.contains(v)) {
        out.insert(v);
        frontier.push_back(v);
      }
    }
  }
  return out;
}

// Smallest subgroup of (B, o) containing X; {0} for the empty set.
inline Subset mul_subgroup_gen(Semibrace const& b, Subset const& x) {
  return b.mul_group().generated(x);
}

// X . Y, the subgroup of (G, +) generated by {x . y}.
inline Subset dot_set(Semibrace const& b, Subset const& x, Subset const& y) {
  if (x.empty() || y.empty()) {
    throw Error(ErrorKind::EmptyOperand, "X . Y needs nonempty operands");
  }
  Subset gens(b.order());
  x.for_each([&](element_t u) { y.for_each([&](element_t v) { gens.insert(b.dot(u, v)); }); });
  return add_subgroup_gen(b, gens);
}

// -a - b + a + b, evaluated in (G, +).
inline element_t additive_commutator(Semibrace const& b, element_t x, element_t y) {
  return b.add(b.add(b.add(b.neg(x), b.neg(y)), x), y);
}

// a ~_I b  iff  a o b^- in I
inline bool congruent(Semibrace const& b, Subset const& ideal, element_t x, element_t y) {
  return ideal.contains(b.mul(x, b.inv(y)));
}

enum class IdealCondition {
  // left ideal
  L1_plus_zero,
  L2_G_subgroup,
  L3_lambda_G,
  L4_mul_subgroup,
  // characterization through I + 0, lambda_g and normality
  T1_plus_zero,
  T2_G_normal,
  T3_lambda_G,
  T4_mul_normal,
  // original definition
  D0_add_subsemigroup,
  D1_mul_normal,
  D2_G_normal,
  D3_rho_closed,
  D4_lambda_on_E_part,
  // characterization through the dot operation
  P1_G_normal,
  P2_lambda_on_E_part,
  P3_dot_closed,
  P4_conjugate_lambda_zero,
  P5_mul_subgroup,
};

constexpr std::string_view to_string(IdealCondition c) noexcept {
  switch (c) {
    case IdealCondition::L1_plus_zero: return "L1: I + 0 in I";
    case IdealCondition::L2_G_subgroup: return "L2: I cap G subgroup of (G,+)";
    case IdealCondition::L3_lambda_G: return "L3: lambda_g(I) in I";
    case IdealCondition::L4_mul_subgroup: return "L4: I subgroup of (B,o)";
    case IdealCondition::T1_plus_zero: return "T1: I + 0 in I";
    case IdealCondition::T2_G_normal: return "T2: I cap G normal in (G,+)";
    case IdealCondition::T3_lambda_G: return "T3: lambda_g(I) in I";
    case IdealCondition::T4_mul_normal: return "T4: I normal in (B,o)";
    case IdealCondition::D0_add_subsemigroup: return "D0: I subsemigroup of (B,+)";
    case IdealCondition::D1_mul_normal: return "D1: I normal in (B,o)";
    case IdealCondition::D2_G_normal: return "D2: I cap G normal in (G,+)";
    case IdealCondition::D3_rho_closed: return "D3: rho_b(n) in I for n in I cap G";
    case IdealCondition::D4_lambda_on_E_part: return "D4: lambda_g(e) in I for e in I cap E";
    case IdealCondition::P1_G_normal: return "P1: I cap G normal in (G,+)";
    case IdealCondition::P2_lambda_on_E_part: return "P2: lambda_g(e) in I for e in I cap E";
    case IdealCondition::P3_dot_closed: return "P3: I.B and B.I in I";
    case IdealCondition::P4_conjugate_lambda_zero: return "P4: lambda_{a^- o x o a}(0) in I";
    case IdealCondition::P5_mul_subgroup: return "P5: I subgroup of (B,o)";
  }
  return "?";
}

// failed/witness describe the predicate that was asked for: the left ideal
// conditions for is_left_ideal, the ideal conditions of the chosen route
// otherwise. The other flag is filled from the left ideal conditions or from
// the T1..T4 characterization.
struct IdealVerdict {
  bool is_left_ideal = false;
  bool is_ideal = false;
  std::optional<IdealCondition> failed;
  std::vector<element_t> witness;
};

namespace detail {

using Witness = std::optional<std::vector<element_t>>;

inline Witness plus_zero_witness(Semibrace const& b, Subset const& s) {
  for (auto x : s.elements()) {
    if (!s.contains(b.add(x, Semibrace::zero))) {
      return std::vector<element_t>{x, b.add(x, Semibrace::zero)};
    }
  }
  return std::nullopt;
}

inline Witness add_closure_witness(Semibrace const& b, Subset const& s) {
  for (auto x : s.elements()) {
    for (auto y : s.elements()) {
      if (!s.contains(b.add(x, y))) {
        return std::vector<element_t>{x, y, b.add(x, y)};
      }
    }
  }
  return std::nullopt;
}

// I cap G is a subgroup of (G, +); with `normal`, also g + x - g in I.
inline Witness g_part_witness(Semibrace const& b, Subset const& s, bool normal) {
  auto part = s & b.group_elements();
  if (part.empty()) {
    return std::vector<element_t>{};
  }
  if (auto w = add_closure_witness(b, part)) {
    return w;
  }
  if (normal) {
    for (auto x : part.elements()) {
      for (auto g : b.group_elements().elements()) {
        auto y = b.add(b.add(g, x), b.neg(g));
        if (!part.contains(y)) {
          return std::vector<element_t>{g, x, y};
        }
      }
    }
  }
  return std::nullopt;
}

inline Witness lambda_g_witness(Semibrace const& b, Subset const& s) {
  for (auto g : b.group_elements().elements()) {
    for (auto x : s.elements()) {
      if (!s.contains(b.lambda(g, x))) {
        return std::vector<element_t>{g, x, b.lambda(g, x)};
      }
    }
  }
  return std::nullopt;
}

inline Witness lambda_on_e_part_witness(Semibrace const& b, Subset const& s) {
  for (auto g : b.group_elements().elements()) {
    for (auto e : (s & b.idempotents()).elements()) {
      if (!s.contains(b.lambda(g, e))) {
        return std::vector<element_t>{g, e, b.lambda(g, e)};
      }
    }
  }
  return std::nullopt;
}

inline Witness mul_subgroup_witness(Semibrace const& b, Subset const& s) {
  if (!s.contains(Semibrace::zero)) {
    return std::vector<element_t>{Semibrace::zero};
  }
  for (auto x : s.elements()) {
    for (auto y : s.elements()) {
      if (!s.contains(b.mul(x, y))) {
        return std::vector<element_t>{x, y, b.mul(x, y)};
      }
    }
  }
  return std::nullopt;
}

inline Witness mul_normal_witness(Semibrace const& b, Subset const& s) {
  if (auto w = mul_subgroup_witness(b, s)) {
    return w;
  }
  return b.mul_group().normality_witness(s);
}

inline Witness rho_witness(Semibrace const& b, Subset const& s) {
  auto part = s & b.group_elements();
  for (element_t c = 0; c < b.order(); ++c) {
    for (auto x : part.elements()) {
      if (!s.contains(b.rho(c, x))) {
        return std::vector<element_t>{c, x, b.rho(c, x)};
      }
    }
  }
  return std::nullopt;
}

inline Witness dot_closure_witness(Semibrace const& b, Subset const& s) {
  auto all = Subset::full(b.order());
  if (dot_set(b, s, all).is_subset_of(s) && dot_set(b, all, s).is_subset_of(s)) {
    return std::nullopt;
  }
  for (auto x : s.elements()) {
    for (element_t c = 0; c < b.order(); ++c) {
      if (!s.contains(b.dot(x, c))) {
        return std::vector<element_t>{x, c, b.dot(x, c)};
      }
      if (!s.contains(b.dot(c, x))) {
        return std::vector<element_t>{c, x, b.dot(c, x)};
      }
    }
  }
  // only reachable when I cap G is not a subgroup
  return std::vector<element_t>{};
}

inline Witness conjugate_lambda_zero_witness(Semibrace const& b, Subset const& s) {
  auto ge = b.group_elements() | b.idempotents();
  for (auto x : s.elements()) {
    for (auto a : ge.elements()) {
      auto c = b.mul(b.mul(b.inv(a), x), a);
      auto v = b.lambda(c, Semibrace::zero);
      if (!s.contains(v)) {
        return std::vector<element_t>{x, a, v};
      }
    }
  }
  return std::nullopt;
}

template <std::size_t N>
std::optional<std::pair<IdealCondition, std::vector<element_t>>> first_failure(
    std::array<std::pair<IdealCondition, Witness (*)(Semibrace const&, Subset const&)>, N> const& checks,
    Semibrace const& b,
    Subset const& s) {
  for (auto const& [cond, check] : checks) {
    if (auto w = check(b, s)) {
      return std::pair{cond, *w};
    }
  }
  return std::nullopt;
}

inline Witness g_subgroup(Semibrace const& b, Subset const& s) { return g_part_witness(b, s, false); }
inline Witness g_normal(Semibrace const& b, Subset const& s) { return g_part_witness(b, s, true); }

inline auto left_ideal_failure(Semibrace const& b, Subset const& s) {
  return first_failure<4>({{{IdealCondition::L1_plus_zero, plus_zero_witness},
                            {IdealCondition::L2_G_subgroup, g_subgroup},
                            {IdealCondition::L3_lambda_G, lambda_g_witness},
                            {IdealCondition::L4_mul_subgroup, mul_subgroup_witness}}},
                          b, s);
}

inline auto thm_failure(Semibrace const& b, Subset const& s) {
  return first_failure<4>({{{IdealCondition::T1_plus_zero, plus_zero_witness},
                            {IdealCondition::T2_G_normal, g_normal},
                            {IdealCondition::T3_lambda_G, lambda_g_witness},
                            {IdealCondition::T4_mul_normal, mul_normal_witness}}},
                          b, s);
}

inline void require_nonempty(Subset const& s) {
  if (s.empty()) {
    throw Error(ErrorKind::EmptyOperand, "ideal predicates need a nonempty subset");
  }
}

inline IdealVerdict ideal_verdict(
    Semibrace const& b,
    Subset const& s,
    std::optional<std::pair<IdealCondition, std::vector<element_t>>> failure) {
  IdealVerdict v;
  v.is_left_ideal = !left_ideal_failure(b, s);
  v.is_ideal = !failure;
  if (failure) {
    v.failed = failure->first;
    v.witness = std::move(failure->second);
  }
  return v;
}

}  // namespace detail

inline IdealVerdict is_left_ideal(Semibrace const& b, Subset const& s) {
  detail::require_nonempty(s);
  IdealVerdict v;
  auto failure = detail::left_ideal_failure(b, s);
  v.is_left_ideal = !failure;
  v.is_ideal = !detail::thm_failure(b, s);
  if (failure) {
    v.failed = failure->first;
    v.witness = std::move(failure->second);
  }
  return v;
}

// I + 0 in I, I cap G normal in (G, +), lambda_g(I) in I for g in G, and I
// normal in (B, o).
inline IdealVerdict is_ideal_thm(Semibrace const& b, Subset const& s) {
  detail::require_nonempty(s);
  return detail::ideal_verdict(b, s, detail::thm_failure(b, s));
}

// The original definition: a subsemigroup of (B, +), normal in (B, o), with
// I cap G normal in (G, +), rho_b(I cap G) in I and lambda_g(I cap E) in I.
inline IdealVerdict is_ideal_def17(Semibrace const& b, Subset const& s) {
  using namespace detail;
  require_nonempty(s);
  return ideal_verdict(b, s,
                       first_failure<5>({{{IdealCondition::D0_add_subsemigroup, add_closure_witness},
                                          {IdealCondition::D1_mul_normal, mul_normal_witness},
                                          {IdealCondition::D2_G_normal, g_normal},
                                          {IdealCondition::D3_rho_closed, rho_witness},
                                          {IdealCondition::D4_lambda_on_E_part, lambda_on_e_part_witness}}},
                                        b, s));
}

// The dot-operation characterization; only defined on subsemigroups of (B, +).
inline IdealVerdict is_ideal_prop(Semibrace const& b, Subset const& s) {
  using namespace detail;
  require_nonempty(s);
  if (auto w = add_closure_witness(b, s)) {
    throw Error(ErrorKind::NotASubsemigroup, "I is not closed under +", *w);
  }
  // P3 is only meaningful once I cap G is a subgroup, so P1 runs first.
  return ideal_verdict(b, s,
                       first_failure<5>({{{IdealCondition::P1_G_normal, g_normal},
                                          {IdealCondition::P2_lambda_on_E_part, lambda_on_e_part_witness},
                                          {IdealCondition::P3_dot_closed, dot_closure_witness},
                                          {IdealCondition::P4_conjugate_lambda_zero, conjugate_lambda_zero_witness},
                                          {IdealCondition::P5_mul_subgroup, mul_subgroup_witness}}},
                                        b, s));
}

// Soc(B) = {a | lambda_a = lambda_0, rho_a = rho_0}, checked against
// {a in G | a + b = a o b and -a + b + a = b + 0 for all b} and, for skew
// braces, against {a | a . b = 0 and b + a = a + b for all b}.
inline Subset socle(Semibrace const& b) {
  auto const n = b.order();
  Subset literal(n);
  Subset second(n);
  Subset skew(n);
  for (element_t a = 0; a < n; ++a) {
    if (b.same_lambda(a, Semibrace::zero) && b.same_rho(a, Semibrace::zero)) {
      literal.insert(a);
    }
    if (b.in_G(a)) {
      bool ok = true;
      for (element_t c = 0; c < n && ok; ++c) {
        ok = b.add(a, c) == b.mul(a, c)
             && b.add(b.add(b.neg(a), c), a) == b.add(c, Semibrace::zero);
      }
      if (ok) {
        second.insert(a);
      }
    }
    if (b.is_skew_brace()) {
      bool ok = true;
      for (element_t c = 0; c < n && ok; ++c) {
        ok = b.dot(a, c) == Semibrace::zero && b.add(c, a) == b.add(a, c);
      }
      if (ok) {
        skew.insert(a);
      }
    }
  }
  if (literal != second || (b.is_skew_brace() && literal != skew)) {
    throw Error(ErrorKind::InternalInconsistency, "socle characterizations disagree");
  }
  return literal;
}

// Z(B, o)
inline Subset center(Semibrace const& b) { return b.mul_group().center(); }

inline std::vector<Subset> upper_central_series(Semibrace const& b) {
  return b.mul_group().upper_central_series();
}

struct EIdealReport {
  bool is_ideal = false;
  // normality of E in (B, o); e . b = 0; a . b = g_a . g_b; e o g = g + e;
  // rho_0 an idempotent endomorphism with image G and kernel E
  std::array<bool, 5> routes{};
  // (c, e, c o e o c^-) when E is not normal in (B, o)
  std::vector<element_t> witness;
};

// Runs the five equivalent tests for E being an ideal; they must agree.
inline EIdealReport is_E_ideal(Semibrace const& b) {
  auto const n = b.order();
  auto const& e_set = b.idempotents();
  auto const& g_set = b.group_elements();
  EIdealReport r;

  auto normality = b.mul_group().normality_witness(e_set);
  r.routes[0] = !normality;
  if (normality) {
    r.witness = *normality;
  }

  bool vanish = true;
  e_set.for_each([&](element_t e) {
    for (element_t c = 0; c < n; ++c) {
      vanish = vanish && b.dot(e, c) == Semibrace::zero;
    }
  });
  r.routes[1] = vanish;

  bool through_parts = true;
  for (element_t x = 0; x < n; ++x) {
    for (element_t y = 0; y < n; ++y) {
      through_parts = through_parts && b.dot(x, y) == b.dot(b.group_part(x), b.group_part(y));
    }
  }
  r.routes[2] = through_parts;

  bool commute = true;
  e_set.for_each([&](element_t e) {
    g_set.for_each([&](element_t g) { commute = commute && b.mul(e, g) == b.add(g, e); });
  });
  r.routes[3] = commute;

  bool projection = true;
  Subset image(n);
  Subset kernel(n);
  for (element_t x = 0; x < n; ++x) {
    auto px = b.rho(Semibrace::zero, x);
    image.insert(px);
    if (px == Semibrace::zero) {
      kernel.insert(x);
    }
    projection = projection && b.rho(Semibrace::zero, px) == px;
    for (element_t y = 0; y < n && projection; ++y) {
      projection = b.rho(Semibrace::zero, b.mul(x, y)) == b.mul(px, b.rho(Semibrace::zero, y));
    }
  }
  r.routes[4] = projection && image == g_set && kernel == e_set;

  r.is_ideal = r.routes[0];
  for (bool route : r.routes) {
    if (route != r.is_ideal) {
      throw Error(ErrorKind::InconsistentEquivalences, "characterizations of E being an ideal disagree");
    }
  }
  return r;
}

// Zoc(B) = Soc(B) + E, defined when E is an ideal. Checked against
// {a | rho_a = rho_0, lambda_a = lambda_{e_a}} and
// {a | rho_a = rho_{e_a}, lambda_a = lambda_{e_a}}.
inline Subset zoc(Semibrace const& b) {
  if (!is_E_ideal(b).is_ideal) {
    throw Error(ErrorKind::ENotIdeal, "Zoc(B) requires E to be an ideal");
  }
  auto sum = sumset(b, socle(b), b.idempotents());
  Subset via_zero(b.order());
  Subset via_e(b.order());
  for (element_t a = 0; a < b.order(); ++a) {
    auto ea = b.idempotent_part(a);
    if (b.same_lambda(a, ea)) {
      if (b.same_rho(a, Semibrace::zero)) {
        via_zero.insert(a);
      }
      if (b.same_rho(a, ea)) {
        via_e.insert(a);
      }
    }
  }
  if (sum != via_zero || sum != via_e) {
    throw Error(ErrorKind::InternalInconsistency, "characterizations of Zoc(B) disagree");
  }
  return sum;
}

// Ann(B) = Soc(B) cap Z(B) + E cap Z(B). When E is an ideal the result is
// checked to be an ideal annihilated by the dot operation on both sides.
inline Subset annihilator(Semibrace const& b) {
  auto z = center(b);
  auto ann = sumset(b, socle(b) & z, b.idempotents() & z);
  if (is_E_ideal(b).is_ideal) {
    ann.for_each([&](element_t a) {
      for (element_t c = 0; c < b.order(); ++c) {
        if (b.dot(a, c) != Semibrace::zero || b.dot(c, a) != Semibrace::zero) {
          throw Error(ErrorKind::ConsistencyViolation, "Ann(B) is not annihilated by the dot operation", {a, c});
        }
      }
    });
    if (!is_ideal_thm(b, ann).is_ideal) {
      throw Error(ErrorKind::ConsistencyViolation, "Ann(B) is not an ideal");
    }
  }
  return ann;
}

}  // namespace semibrace
