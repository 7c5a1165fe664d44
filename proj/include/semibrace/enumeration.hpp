#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "semibrace/catalog.hpp"
#include "semibrace/constructions.hpp"
#include "semibrace/error.hpp"
#include "semibrace/group.hpp"
#include "semibrace/semibrace.hpp"
#include "semibrace/series.hpp"

namespace semibrace {

// bijection maps elements of the first structure to the second. Without a
// bijection, exhausted tells whether backtracking ran (true) or an invariant
// already separated the structures (false).
struct IsoCertificate {
  std::optional<std::vector<element_t>> bijection;
  bool exhausted = false;

  explicit operator bool() const noexcept { return bijection.has_value(); }
};

namespace detail {

// Isomorphism-invariant data of a single element.
using ElementSignature = std::array<std::size_t, 7>;

inline std::vector<ElementSignature> element_signatures(Semibrace const& b) {
  auto const& g = b.mul_group();
  std::vector<ElementSignature> out(b.order());
  for (element_t a = 0; a < b.order(); ++a) {
    std::size_t lambda_fixed = 0;
    std::size_t rho_fixed = 0;
    for (element_t c = 0; c < b.order(); ++c) {
      lambda_fixed += b.lambda(a, c) == c ? 1 : 0;
      rho_fixed += b.rho(a, c) == c ? 1 : 0;
    }
    out[a] = {b.in_E(a) ? 1u : 0u,
              b.in_G(a) ? 1u : 0u,
              g.element_order(a),
              g.element_order(b.group_part(a)),
              g.element_order(b.idempotent_part(a)),
              lambda_fixed,
              rho_fixed};
  }
  return out;
}

inline std::vector<ElementSignature> sorted_signatures(Semibrace const& b) {
  auto s = element_signatures(b);
  std::sort(s.begin(), s.end());
  return s;
}

inline bool preserves(Semibrace const& x, Semibrace const& y, std::vector<element_t> const& f) {
  std::vector<bool> hit(y.order(), false);
  for (auto v : f) {
    if (hit[v]) {
      return false;
    }
    hit[v] = true;
  }
  for (element_t a = 0; a < x.order(); ++a) {
    for (element_t b = 0; b < x.order(); ++b) {
      if (f[x.add(a, b)] != y.add(f[a], f[b]) || f[x.mul(a, b)] != y.mul(f[a], f[b])) {
        return false;
      }
    }
  }
  return true;
}

// Calls visit on every isomorphism x -> y until it returns false. Returns
// whether the invariants allowed a search at all.
template <typename Visit>
bool for_each_isomorphism(Semibrace const& x, Semibrace const& y, Visit&& visit) {
  if (x.order() != y.order()) {
    throw Error(ErrorKind::OrderMismatch, "structures have different orders",
                {static_cast<element_t>(x.order()), static_cast<element_t>(y.order())});
  }
  if (x.idempotents().size() != y.idempotents().size()
      || x.group_elements().size() != y.group_elements().size()) {
    return false;
  }
  auto sx = element_signatures(x);
  auto sy = element_signatures(y);
  auto sorted_x = sx;
  auto sorted_y = sy;
  std::sort(sorted_x.begin(), sorted_x.end());
  std::sort(sorted_y.begin(), sorted_y.end());
  if (sorted_x != sorted_y) {
    return false;
  }
  auto gens = x.mul_group().generating_set();
  std::vector<std::vector<element_t>> candidates(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (element_t v = 0; v < y.order(); ++v) {
      if (sy[v] == sx[gens[i]]) {
        candidates[i].push_back(v);
      }
    }
  }
  std::vector<element_t> images(gens.size());
  bool keep_going = true;
  std::function<void(std::size_t)> assign = [&](std::size_t i) {
    if (!keep_going) {
      return;
    }
    if (i == gens.size()) {
      auto f = extend_homomorphism<element_t>(
          x.mul_group(), gens, images, element_t{0}, [&](element_t u, element_t v) { return y.mul(u, v); });
      if (f && preserves(x, y, *f)) {
        keep_going = visit(*f);
      }
      return;
    }
    for (auto v : candidates[i]) {
      images[i] = v;
      assign(i + 1);
    }
  };
  assign(0);
  return true;
}

}  // namespace detail

inline IsoCertificate are_isomorphic(Semibrace const& x, Semibrace const& y) {
  IsoCertificate cert;
  cert.exhausted = detail::for_each_isomorphism(x, y, [&](std::vector<element_t> const& f) {
    cert.bijection = f;
    return false;
  });
  if (cert.bijection) {
    cert.exhausted = false;
  }
  return cert;
}

inline std::vector<std::vector<element_t>> all_isomorphisms(Semibrace const& x, Semibrace const& y) {
  std::vector<std::vector<element_t>> out;
  detail::for_each_isomorphism(x, y, [&](std::vector<element_t> const& f) {
    out.push_back(f);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<std::vector<element_t>> automorphisms(Semibrace const& b) { return all_isomorphisms(b, b); }

// Automorphisms of a group, as element permutations.
inline std::vector<std::vector<element_t>> group_automorphisms(FiniteGroup const& g) {
  auto gens = g.generating_set();
  std::vector<std::vector<element_t>> out;
  std::vector<element_t> images(gens.size());
  std::function<void(std::size_t)> assign = [&](std::size_t i) {
    if (i == gens.size()) {
      auto f = extend_homomorphism<element_t>(g, gens, images, element_t{0},
                                              [&](element_t u, element_t v) { return g.op(u, v); });
      if (!f) {
        return;
      }
      std::vector<bool> hit(g.order(), false);
      for (auto v : *f) {
        if (hit[v]) {
          return;
        }
        hit[v] = true;
      }
      out.push_back(std::move(*f));
      return;
    }
    for (element_t v = 0; v < g.order(); ++v) {
      if (g.element_order(v) == g.element_order(gens[i])) {
        images[i] = v;
        assign(i + 1);
      }
    }
  };
  assign(0);
  std::sort(out.begin(), out.end());
  return out;
}

// Homomorphisms from g into a group of permutations of {0, ..., m - 1},
// given by the images of g.generating_set(); candidates restricts the
// possible images (all of them must be permutations of the same degree).
inline std::vector<std::vector<Permutation>> homomorphisms_into(FiniteGroup const& g,
                                                                std::vector<Permutation> const& candidates,
                                                                std::size_t degree) {
  auto gens = g.generating_set();
  auto id = identity_permutation(degree);
  auto perm_order = [&](Permutation const& p) {
    std::size_t k = 1;
    for (auto q = p; q != id; q = compose(p, q)) {
      ++k;
    }
    return k;
  };
  std::vector<std::vector<Permutation const*>> allowed(gens.size());
  for (auto const& p : candidates) {
    auto k = perm_order(p);
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (g.element_order(gens[i]) % k == 0) {
        allowed[i].push_back(&p);
      }
    }
  }
  std::vector<std::vector<Permutation>> out;
  std::vector<Permutation> images(gens.size());
  std::function<void(std::size_t)> assign = [&](std::size_t i) {
    if (i == gens.size()) {
      auto f = extend_homomorphism<Permutation>(g, gens, images, id, compose);
      if (f) {
        out.push_back(std::move(*f));
      }
      return;
    }
    for (auto const* p : allowed[i]) {
      images[i] = *p;
      assign(i + 1);
    }
  };
  assign(0);
  return out;
}

inline std::vector<Permutation> all_permutations(std::size_t degree) {
  std::vector<Permutation> out;
  auto p = identity_permutation(degree);
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

enum class EnumerationMode { raw, family };

struct Enumeration {
  std::size_t order = 0;
  std::vector<Semibrace> structures;
  // names of the multiplicative groups, parallel to structures
  std::vector<std::string> group_names;
  // true when every semi-brace of this order appears (raw mode)
  bool complete = false;
};

namespace detail {

struct Deduplicator {
  std::map<std::pair<std::vector<ElementSignature>, std::size_t>, std::vector<std::size_t>> buckets;
  Enumeration* out;

  bool add(Semibrace b, std::string const& group_name, std::size_t group_index) {
    auto key = std::pair{sorted_signatures(b), group_index};
    auto& bucket = buckets[key];
    for (auto i : bucket) {
      if (are_isomorphic(out->structures[i], b)) {
        return false;
      }
    }
    bucket.push_back(out->structures.size());
    out->structures.push_back(std::move(b));
    out->group_names.push_back(group_name);
    return true;
  }
};

// Every semi-brace on a fixed group: lambda is a homomorphism from (B, o)
// into Sym(B), and + is recovered as a + c = a o lambda_(a^-)(c).
inline void raw_for_group(LabeledGroup const& h, std::size_t group_index, Deduplicator& dedup) {
  auto const& g = h.group;
  auto const n = g.order();
  for (auto const& lambda : homomorphisms_into(g, all_permutations(n), n)) {
    auto add = CayleyTable::from_function(n, [&](element_t a, element_t c) {
      return g.op(a, lambda[g.inverse(a)][c]);
    });
    if (find_violation(add, g.table())) {
      continue;
    }
    dedup.add(validate(std::move(add), g.table()), h.name, group_index);
  }
}

inline std::vector<std::vector<element_t>> idempotent_endomorphisms(FiniteGroup const& g) {
  auto gens = g.generating_set();
  std::vector<std::vector<element_t>> out;
  std::vector<element_t> images(gens.size());
  std::function<void(std::size_t)> assign = [&](std::size_t i) {
    if (i == gens.size()) {
      auto f = extend_homomorphism<element_t>(g, gens, images, element_t{0},
                                              [&](element_t u, element_t v) { return g.op(u, v); });
      if (!f) {
        return;
      }
      for (element_t a = 0; a < g.order(); ++a) {
        if ((*f)[(*f)[a]] != (*f)[a]) {
          return;
        }
      }
      out.push_back(std::move(*f));
      return;
    }
    for (element_t v = 0; v < g.order(); ++v) {
      if (g.element_order(gens[i]) % g.element_order(v) == 0) {
        images[i] = v;
        assign(i + 1);
      }
    }
  };
  assign(0);
  return out;
}

}  // namespace detail

Enumeration enumerate(std::size_t n, std::size_t cap = 6, EnumerationMode mode = EnumerationMode::raw);

namespace detail {

inline void family(std::size_t n, std::size_t cap, Deduplicator& dedup) {
  auto groups = groups_of_order(n);
  for (std::size_t gi = 0; gi < groups.size(); ++gi) {
    auto const& h = groups[gi];
    for (auto const& phi : idempotent_endomorphisms(h.group)) {
      dedup.add(from_idempotent_endomorphism(h.group, phi), h.name, gi);
    }
    dedup.add(group_skew_brace(h.group), h.name, gi);
  }
  auto group_name = [&](Semibrace const& b) {
    for (std::size_t gi = 0; gi < groups.size(); ++gi) {
      if (are_isomorphic(trivial_semibrace(groups[gi].group), trivial_semibrace(b.mul_group()))) {
        return std::pair{groups[gi].name, gi};
      }
    }
    return std::pair{std::string("?"), groups.size()};
  };
  for (std::size_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) {
      continue;
    }
    for (auto [p, q] : {std::pair{d, n / d}, std::pair{n / d, d}}) {
      auto small = enumerate(p, cap, p <= cap ? EnumerationMode::raw : EnumerationMode::family);
      auto large = enumerate(q, cap, q <= cap ? EnumerationMode::raw : EnumerationMode::family);
      for (auto const& x : small.structures) {
        for (auto const& y : large.structures) {
          if (p <= q) {
            auto b = direct_product(x, y);
            auto [name, gi] = group_name(b);
            dedup.add(std::move(b), name, gi);
          }
          // trivial x skew in both orientations, over all actions
          if (x.is_trivial() && y.is_skew_brace()) {
            auto t_aut = group_automorphisms(x.mul_group());
            for (auto const& act : homomorphisms_into(y.mul_group(), t_aut, x.order())) {
              auto b = semidirect_product(x, y, ActionTable{act}, Orientation::skew_acts_on_trivial);
              auto [name, gi] = group_name(b);
              dedup.add(std::move(b), name, gi);
            }
            auto a_aut = automorphisms(y);
            for (auto const& act : homomorphisms_into(x.mul_group(), a_aut, y.order())) {
              auto b = semidirect_product(x, y, ActionTable{act}, Orientation::trivial_acts_on_skew);
              auto [name, gi] = group_name(b);
              dedup.add(std::move(b), name, gi);
            }
          }
        }
      }
    }
  }
}

}  // namespace detail

// All semi-braces of order n up to isomorphism (raw mode, n <= cap), or the
// constructive families: trivial and phi-type over every group of order n,
// the skew braces K_G, and direct and semidirect products of smaller pieces.
inline Enumeration enumerate(std::size_t n, std::size_t cap, EnumerationMode mode) {
  if (n == 0) {
    throw Error(ErrorKind::InvalidTable, "order must be positive");
  }
  Enumeration out;
  out.order = n;
  detail::Deduplicator dedup{{}, &out};
  if (mode == EnumerationMode::raw) {
    if (n > cap) {
      throw Error(ErrorKind::CapExceeded, "raw enumeration is capped at order " + std::to_string(cap),
                  {static_cast<element_t>(n)});
    }
    auto groups = groups_of_order(n);
    for (std::size_t gi = 0; gi < groups.size(); ++gi) {
      detail::raw_for_group(groups[gi], gi, dedup);
    }
    out.complete = true;
  } else {
    detail::family(n, cap, dedup);
  }
  return out;
}

enum class Question { right_nil_not_right_nilpotent, left_nil_not_left_nilpotent };

constexpr std::string_view to_string(Question q) noexcept {
  return q == Question::right_nil_not_right_nilpotent ? "right_nil" : "left_nil";
}

struct SearchReport {
  Question question;
  std::vector<std::size_t> orders_searched;
  std::size_t structures_checked = 0;
  std::optional<Semibrace> witness;
  // candidates flagged by the classifier that failed re-validation
  std::size_t rejected = 0;
  bool exhaustive = false;
};

using Classifier = std::function<NilpotencyProfile(Semibrace const&)>;

inline NilpotencyProfile default_classifier(Semibrace const& b) { return classify(b, Strictness::record); }

// Looks for a structure that is right (left) nil but not right (left)
// nilpotent, over all orders up to max_order. Orders above cap are covered by
// the families only, which makes the search non-exhaustive.
inline SearchReport search_counterexample(Question q,
                                          std::size_t max_order,
                                          std::size_t cap = 6,
                                          Classifier const& classifier = default_classifier) {
  SearchReport r{q, {}, 0, std::nullopt, 0, true};
  auto separates = [q](NilpotencyProfile const& p) {
    return q == Question::right_nil_not_right_nilpotent ? p.right_nil && !p.right_nilpotent
                                                        : p.left_nil && !p.left_nilpotent;
  };
  for (std::size_t n = 1; n <= max_order && !r.witness; ++n) {
    auto e = enumerate(n, cap, n <= cap ? EnumerationMode::raw : EnumerationMode::family);
    r.exhaustive = r.exhaustive && e.complete;
    r.orders_searched.push_back(n);
    for (auto& b : e.structures) {
      ++r.structures_checked;
      if (!separates(classifier(b))) {
        continue;
      }
      auto again = validate(b.add_table(), b.mul_table());
      if (separates(default_classifier(again))) {
        r.witness = std::move(again);
        break;
      }
      ++r.rejected;
    }
  }
  if (r.witness) {
    r.exhaustive = false;
  }
  return r;
}

}  // namespace semibrace
