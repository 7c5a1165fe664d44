#pragma once

// Fixtures and property checkers shared by the unit tests and the acceptance
// binary.

#include <functional>
#include <string>
#include <vector>

#include "semibrace/catalog.hpp"
#include "semibrace/constructions.hpp"
#include "semibrace/enumeration.hpp"
#include "semibrace/io.hpp"
#include "semibrace/series.hpp"
#include "semibrace/subsets.hpp"
#include "semibrace/ybe.hpp"

namespace fixtures {

using namespace semibrace;

inline LabeledGroup const& s3() {
  static auto const g = symmetric_group(3);
  return g;
}

inline bool is_even(Permutation const& p) {
  std::size_t inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      inversions += p[i] > p[j] ? 1 : 0;
    }
  }
  return inversions % 2 == 0;
}

// phi sends odd permutations to (1 2) and even ones to id
inline std::vector<element_t> phi_on_s3() {
  auto const& g = s3();
  auto t = g.find_label("(1 2)");
  std::vector<element_t> phi;
  for (auto const& p : g.permutations) {
    phi.push_back(is_even(p) ? 0 : t);
  }
  return phi;
}

// Sym_3 with a + b = b o phi(a)
inline LabeledSemibrace phi3() {
  return {from_idempotent_endomorphism(s3().group, phi_on_s3()), s3().labels, json::object()};
}

inline std::vector<std::string> product_labels(std::vector<std::string> const& x, std::vector<std::string> const& y) {
  std::vector<std::string> out;
  for (auto const& a : x) {
    for (auto const& b : y) {
      out.push_back("(" + a + ", " + b + ")");
    }
  }
  return out;
}

// K_Sym3 x C_2 (trivial), with t acting by conjugation by (2 3)
inline LabeledSemibrace sd12() {
  auto const& g = s3();
  auto a = group_skew_brace(g.group);
  auto t = trivial_semibrace(cyclic_group(2).group);
  auto c = g.find_label("(2 3)");
  std::vector<element_t> conj;
  for (element_t x = 0; x < g.group.order(); ++x) {
    conj.push_back(g.group.conjugate(c, x));
  }
  ActionTable act{{trivial_action(1, 6).maps[0], conj}};
  return {semidirect_product(t, a, act, Orientation::trivial_acts_on_skew),
          product_labels(g.labels, {"0", "t"}),
          json::object()};
}

inline LabeledSemibrace labeled(Semibrace b) {
  auto n = b.order();
  return {std::move(b), default_labels(n), json::object()};
}

struct Named {
  std::string name;
  Semibrace structure;
};

// Hand-built structures beyond the raw enumeration.
inline std::vector<Named> fixture_corpus() {
  std::vector<Named> out;
  out.push_back({"phi3", phi3().structure});
  out.push_back({"sd12", sd12().structure});
  out.push_back({"trivial C2", trivial_semibrace(cyclic_group(2).group)});
  out.push_back({"trivial S3", trivial_semibrace(s3().group)});
  out.push_back({"K_S3", group_skew_brace(s3().group)});
  out.push_back({"K_C4", group_skew_brace(cyclic_group(4).group)});
  out.push_back({"K_S3 x trivial C2", direct_product(group_skew_brace(s3().group),
                                                     trivial_semibrace(cyclic_group(2).group))});
  out.push_back({"trivial D4", trivial_semibrace(dihedral_group(4).group)});
  out.push_back({"K_Q8", group_skew_brace(named_group("Q8").group)});
  return out;
}

inline std::vector<Named> enumerated_corpus(std::size_t max_order) {
  std::vector<Named> out;
  for (std::size_t n = 1; n <= max_order; ++n) {
    auto e = enumerate(n);
    for (std::size_t i = 0; i < e.structures.size(); ++i) {
      out.push_back({"order " + std::to_string(n) + " #" + std::to_string(i) + " on " + e.group_names[i],
                     e.structures[i]});
    }
  }
  return out;
}

}  // namespace fixtures

namespace checks {

using namespace semibrace;

using Report = std::function<void(std::string const&)>;

// Identities of the dot operation and the maps lambda, rho; calls report on
// each violated identity (once per identity) and returns the violation count.
inline std::size_t identity_violations(Semibrace const& b, Report const& report = {}) {
  auto const n = b.order();
  std::size_t count = 0;
  auto fail = [&](bool& flag, std::string const& what) {
    if (!flag) {
      return;
    }
    flag = false;
    ++count;
    if (report) {
      report(what);
    }
  };
  bool circ = true, be1 = true, be2 = true, be3 = true, opp = true, cc1 = true, cc2 = true;
  bool lhom = true, laut = true, rhom = true, rho_e = true, lam_e = true, g_char = true, e_char = true;
  bool skew = true, fact = true, dot0 = true;
  for (element_t a = 0; a < n; ++a) {
    for (element_t c = 0; c < n; ++c) {
      if (b.mul(a, c) != b.add(a, b.lambda(a, c))) fail(circ, "a o b = a + lambda_a(b)");
      if (b.in_E(c) && b.dot(a, c) != 0) fail(be1, "a . e = 0");
      if (b.dot(a, c) != b.dot(a, b.group_part(c))) fail(be2, "a . b = a . g_b");
      if (b.add(b.dot(a, c), c) != b.add(b.lambda(a, c), b.idempotent_part(c))) {
        fail(be3, "a . b + b = lambda_a(b) + e_b");
      }
      if (b.dot(a, 0) != 0 || b.dot(0, a) != 0) fail(dot0, "a . 0 = 0 . a = 0");
      if (b.in_G(c)) {
        // g + lambda_x(-g) + 0 = -(x . g)
        auto lhs = b.add(b.add(c, b.lambda(a, b.neg(c))), 0);
        if (lhs != b.neg(b.dot(a, c))) fail(opp, "g + lambda_x(-g) + 0 = -(x . g)");
      }
      if (b.in_E(c) && b.rho(a, b.inv(c)) != 0) fail(rho_e, "rho_c(e^-) = 0");
      if (b.in_E(c) && !b.in_E(b.lambda(a, c))) fail(lam_e, "lambda_b(E) = E");
      if (b.is_skew_brace()) {
        auto expected = b.add(b.add(b.neg(a), b.mul(a, c)), b.neg(c));
        if (b.dot(a, c) != expected) fail(skew, "skew brace: a . b = -a + a o b - b");
      }
      for (element_t d = 0; d < n; ++d) {
        // a . (b + c) = a . b + b + a . c + lambda_b(b^-)
        auto lhs1 = b.dot(a, b.add(c, d));
        auto rhs1 = b.add(b.add(b.add(b.dot(a, c), c), b.dot(a, d)), b.lambda(c, b.inv(c)));
        if (lhs1 != rhs1) fail(cc1, "a . (b + c) = a . b + b + a . c + lambda_b(b^-)");
        // (a o b) . c = a . (b . c) + b . c + a . c
        auto lhs2 = b.dot(b.mul(a, c), d);
        auto rhs2 = b.add(b.add(b.dot(a, b.dot(c, d)), b.dot(c, d)), b.dot(a, d));
        if (lhs2 != rhs2) fail(cc2, "(a o b) . c = a . (b . c) + b . c + a . c");
        if (b.lambda(b.mul(a, c), d) != b.lambda(a, b.lambda(c, d))) fail(lhom, "lambda_(a o b) = lambda_a lambda_b");
        if (b.lambda(a, b.add(c, d)) != b.add(b.lambda(a, c), b.lambda(a, d))) fail(laut, "lambda_a additive");
        if (b.rho(b.mul(a, c), d) != b.rho(c, b.rho(a, d))) fail(rhom, "rho_(a o b) = rho_b rho_a");
      }
    }
    if (b.in_G(a) != (b.lambda(a, 0) == 0)) fail(g_char, "b in G iff lambda_b(0) = 0");
    bool all_zero = true;
    for (element_t c = 0; c < n; ++c) {
      all_zero = all_zero && b.rho(c, b.inv(a)) == 0;
    }
    if (b.in_E(a) != all_zero) fail(e_char, "b in E iff rho_c(b^-) = 0 for all c");
    std::size_t found = 0;
    for (auto g : b.group_elements().elements()) {
      for (auto e : b.idempotents().elements()) {
        found += b.mul(g, e) == a ? 1 : 0;
      }
    }
    auto [g, e] = b.factorize_mul(a);
    if (found != 1 || b.mul(g, e) != a || !b.in_G(g) || !b.in_E(e)) fail(fact, "unique b = g o e");
  }
  return count;
}

// Subsets on which the three ideal predicates are compared: all subsets up to
// order 8, otherwise the structural ones and small generated subgroups.
inline std::vector<Subset> test_subsets(Semibrace const& b) {
  auto const n = b.order();
  std::vector<Subset> out;
  if (n <= 8) {
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
      Subset s(n);
      for (element_t i = 0; i < n; ++i) {
        if (mask >> i & 1) {
          s.insert(i);
        }
      }
      out.push_back(std::move(s));
    }
    return out;
  }
  out.push_back(b.idempotents());
  out.push_back(b.group_elements());
  out.push_back(socle(b));
  out.push_back(annihilator(b));
  for (element_t x = 0; x < n; ++x) {
    for (element_t y = x; y < n; ++y) {
      out.push_back(mul_subgroup_gen(b, Subset(n, {x, y})));
    }
  }
  for (auto const& r : {right_series(b), left_series(b), strong_series(b)}) {
    out.insert(out.end(), r.terms.begin(), r.terms.end());
  }
  return out;
}

// Number of subsets on which the definition, the theorem and the dot
// characterization disagree (the last only on subsemigroups of (B, +)).
inline std::size_t ideal_disagreements(Semibrace const& b, std::vector<Subset> const& subsets) {
  std::size_t count = 0;
  for (auto const& s : subsets) {
    auto d = is_ideal_def17(b, s).is_ideal;
    auto t = is_ideal_thm(b, s).is_ideal;
    bool closed = true;
    s.for_each([&](element_t x) { s.for_each([&](element_t y) { closed = closed && s.contains(b.add(x, y)); }); });
    bool agree = d == t;
    if (closed) {
      agree = agree && is_ideal_prop(b, s).is_ideal == d;
    }
    count += agree ? 0 : 1;
  }
  return count;
}

struct TheoremTally {
  std::size_t series_ideals = 0;      // (i)
  std::size_t genseries = 0;          // (ii)
  std::size_t nilpotent_group = 0;    // (iii)
  std::size_t lifts = 0;              // (iv)
  std::size_t z_series = 0;           // (v)
  std::size_t zoc_soc = 0;            // (vi)
  std::size_t other = 0;              // remaining classify implications
};

inline void tally_theorems(Semibrace const& b, TheoremTally& t) {
  auto right = right_series(b);
  auto left = left_series(b);
  auto strong = strong_series(b);
  bool ok = true;
  for (auto const& term : right.terms) ok = ok && is_ideal_thm(b, term).is_ideal;
  for (auto const& term : left.terms) ok = ok && is_left_ideal(b, term).is_left_ideal;
  for (auto const& term : strong.terms) ok = ok && is_left_ideal(b, term).is_left_ideal;
  t.series_ideals += ok ? 0 : 1;

  auto p = classify(b, Strictness::record);
  t.genseries += p.strongly_nilpotent == (p.left_nilpotent && p.right_nilpotent) ? 0 : 1;
  t.nilpotent_group += !p.nilpotent || p.mul_group_nilpotent ? 0 : 1;
  for (auto const& v : p.violations) {
    if (v.starts_with("B^(n)") || v.starts_with("B^[n]")) {
      ++t.lifts;
    } else if (v.find("z-series") != std::string::npos) {
      ++t.z_series;
    } else if (!v.starts_with("strongly") && !v.starts_with("nilpotent implies")) {
      ++t.other;
    }
  }
  if (p.E_is_ideal) {
    for (auto const& a : zoc_agreement(b)) {
      if (!a.soc_plus_e) {
        ++t.zoc_soc;
        break;
      }
    }
  }
}

// s^2 = s, braid relation, left non-degeneracy.
inline std::size_t ybe_violations(Semibrace const& b) {
  auto r = solution_of(b);
  std::size_t count = check_braid(r) ? 0 : 1;
  auto props = properties(r);
  count += props.left_nondegenerate ? 0 : 1;
  count += properties(restrict_to_E(b, r).map).idempotent ? 0 : 1;
  if (b.is_trivial() && b.order() > 1) {
    count += props.idempotent && !props.bijective ? 0 : 1;
  }
  if (b.is_skew_brace() && b.mul_group().is_abelian() && b.add_table() == b.mul_table()) {
    count += props.involutive ? 0 : 1;
  }
  return count;
}

// E x| G with G acting on E by lambda; returns whether it is isomorphic to b
// through a -> (e_a, g_a).
inline bool semidirect_round_trip(Semibrace const& b) {
  auto e = substructure(b, b.idempotents());
  auto g = substructure(b, b.group_elements());
  std::vector<element_t> local(b.order(), 0);
  for (element_t i = 0; i < e.embedding.size(); ++i) {
    local[e.embedding[i]] = i;
  }
  ActionTable act;
  for (auto x : g.embedding) {
    std::vector<element_t> m;
    for (auto y : e.embedding) {
      m.push_back(local[b.lambda(x, y)]);
    }
    act.maps.push_back(std::move(m));
  }
  auto product = semidirect_product(e.structure, g.structure, act, Orientation::skew_acts_on_trivial);
  std::vector<element_t> g_local(b.order(), 0);
  for (element_t i = 0; i < g.embedding.size(); ++i) {
    g_local[g.embedding[i]] = i;
  }
  std::vector<element_t> f;
  for (element_t a = 0; a < b.order(); ++a) {
    f.push_back(static_cast<element_t>(local[b.idempotent_part(a)] * g.embedding.size() + g_local[b.group_part(a)]));
  }
  return are_isomorphic(b, product) && detail::preserves(b, product, f);
}

}  // namespace checks
