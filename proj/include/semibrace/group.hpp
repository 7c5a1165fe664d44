#pragma once

#include <cstddef>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "semibrace/cayley_table.hpp"
#include "semibrace/error.hpp"
#include "semibrace/subset.hpp"

namespace semibrace {

// Identity and inverses of a table that has been checked to be a group.
struct GroupStructure {
  element_t identity = 0;
  std::vector<element_t> inverse;
};

// Checks associativity, then the identity, then inverses. The first failure
// is returned as a NotAGroup error whose witness is the first offending tuple
// in element order.
inline std::variant<GroupStructure, Error> analyze_group(CayleyTable const& t) {
  auto const n = t.order();
  if (n == 0) {
    return Error(ErrorKind::NotAGroup, "empty table");
  }
  for (element_t a = 0; a < n; ++a) {
    for (element_t b = 0; b < n; ++b) {
      auto ab = t(a, b);
      for (element_t c = 0; c < n; ++c) {
        if (t(ab, c) != t(a, t(b, c))) {
          return Error(ErrorKind::NotAGroup, "not associative", {a, b, c});
        }
      }
    }
  }
  std::optional<element_t> identity;
  for (element_t e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (element_t a = 0; a < n && ok; ++a) {
      ok = t(e, a) == a && t(a, e) == a;
    }
    if (ok) {
      identity = e;
    }
  }
  if (!identity) {
    return Error(ErrorKind::NotAGroup, "no identity element");
  }
  GroupStructure out{*identity, std::vector<element_t>(n, 0)};
  for (element_t a = 0; a < n; ++a) {
    bool found = false;
    for (element_t b = 0; b < n && !found; ++b) {
      if (t(a, b) == *identity && t(b, a) == *identity) {
        out.inverse[a] = b;
        found = true;
      }
    }
    if (!found) {
      return Error(ErrorKind::NotAGroup, "element has no inverse", {a});
    }
  }
  return out;
}

// A finite group given by its Cayley table, with identity 0.
class FiniteGroup {
 public:
  FiniteGroup() = default;

  explicit FiniteGroup(CayleyTable table) : table_(std::move(table)) {
    auto result = analyze_group(table_);
    if (auto* err = std::get_if<Error>(&result)) {
      throw *err;
    }
    auto& gs = std::get<GroupStructure>(result);
    if (gs.identity != 0) {
      throw Error(ErrorKind::NotAGroup, "identity must be element 0", {gs.identity});
    }
    inverse_ = std::move(gs.inverse);
  }

  std::size_t order() const noexcept { return table_.order(); }
  CayleyTable const& table() const noexcept { return table_; }

  element_t op(element_t a, element_t b) const noexcept { return table_(a, b); }
  element_t inverse(element_t a) const noexcept { return inverse_[a]; }

  element_t conjugate(element_t c, element_t x) const noexcept {
    return op(op(c, x), inverse(c));
  }

  // a b a^- b^-
  element_t commutator(element_t a, element_t b) const noexcept {
    return op(op(op(a, b), inverse(a)), inverse(b));
  }

  std::size_t element_order(element_t a) const noexcept {
    std::size_t k = 1;
    for (element_t x = a; x != 0; x = op(x, a)) {
      ++k;
    }
    return k;
  }

  bool is_abelian() const noexcept {
    for (element_t a = 0; a < order(); ++a) {
      for (element_t b = a + 1; b < order(); ++b) {
        if (op(a, b) != op(b, a)) {
          return false;
        }
      }
    }
    return true;
  }

  Subset generated(std::span<element_t const> gens) const {
    Subset out(order());
    std::vector<element_t> frontier{0};
    out.insert(0);
    while (!frontier.empty()) {
      auto x = frontier.back();
      frontier.pop_back();
      for (auto g : gens) {
        auto y = op(x, g);
        if (!out.contains(y)) {
          out.insert(y);
          frontier.push_back(y);
        }
      }
    }
    return out;
  }

  Subset generated(Subset const& gens) const { return generated(gens.elements()); }

  // Finite, nonempty and closed under the operation.
  bool is_subgroup(Subset const& h) const {
    if (!h.contains(0)) {
      return false;
    }
    bool closed = true;
    h.for_each([&](element_t a) {
      h.for_each([&](element_t b) { closed = closed && h.contains(op(a, b)); });
    });
    return closed;
  }

  // First (x, c, c x c^-) with c x c^- outside h, iterating x over h and then
  // c over the group.
  std::optional<std::vector<element_t>> normality_witness(Subset const& h) const {
    for (auto x : h.elements()) {
      for (element_t c = 0; c < order(); ++c) {
        auto y = conjugate(c, x);
        if (!h.contains(y)) {
          return std::vector<element_t>{c, x, y};
        }
      }
    }
    return std::nullopt;
  }

  bool is_normal_subgroup(Subset const& h) const {
    return is_subgroup(h) && !normality_witness(h);
  }

  Subset center() const { return next_center(Subset::singleton(order(), 0)); }

  // zeta_0 = {0}, zeta_{k+1} = {a | [a, b] in zeta_k for all b}, up to the
  // first repeated term (included once).
  std::vector<Subset> upper_central_series() const {
    std::vector<Subset> terms{Subset::singleton(order(), 0)};
    while (true) {
      auto next = next_center(terms.back());
      if (next == terms.back()) {
        break;
      }
      terms.push_back(std::move(next));
    }
    return terms;
  }

  bool is_nilpotent() const { return upper_central_series().back().is_full(); }

  Subset centralizer(Subset const& s) const {
    Subset out(order());
    for (element_t a = 0; a < order(); ++a) {
      bool ok = true;
      s.for_each([&](element_t b) { ok = ok && op(a, b) == op(b, a); });
      if (ok) {
        out.insert(a);
      }
    }
    return out;
  }

  // A small generating set: a single generator when the group is cyclic,
  // otherwise greedy in element order.
  std::vector<element_t> generating_set() const {
    if (order() == 1) {
      return {};
    }
    for (element_t a = 1; a < order(); ++a) {
      if (element_order(a) == order()) {
        return {a};
      }
    }
    std::vector<element_t> gens;
    Subset h = Subset::singleton(order(), 0);
    for (element_t a = 1; a < order() && !h.is_full(); ++a) {
      if (!h.contains(a)) {
        gens.push_back(a);
        h = generated(gens);
      }
    }
    return gens;
  }

  // Restriction to a subgroup, relabelled 0..|h|-1 in increasing element
  // order; the second member maps local indices back to elements.
  std::pair<FiniteGroup, std::vector<element_t>> subgroup(Subset const& h) const {
    auto elems = h.elements();
    std::vector<element_t> local(order(), 0);
    for (element_t i = 0; i < elems.size(); ++i) {
      local[elems[i]] = i;
    }
    auto t = CayleyTable::from_function(elems.size(), [&](element_t i, element_t j) {
      auto v = op(elems[i], elems[j]);
      if (!h.contains(v)) {
        throw Error(ErrorKind::NotClosed, "subset is not closed", {elems[i], elems[j]});
      }
      return local[v];
    });
    return {FiniteGroup(std::move(t)), std::move(elems)};
  }

 private:
  Subset next_center(Subset const& prev) const {
    Subset out(order());
    for (element_t a = 0; a < order(); ++a) {
      bool ok = true;
      for (element_t b = 0; b < order() && ok; ++b) {
        ok = prev.contains(commutator(a, b));
      }
      if (ok) {
        out.insert(a);
      }
    }
    return out;
  }

  CayleyTable table_;
  std::vector<element_t> inverse_;
};

// Extends generator images along the Cayley graph of g. Every edge is checked,
// so a returned map is a homomorphism; nullopt if some edge disagrees or the
// generators do not generate g.
template <typename T, typename Op>
std::optional<std::vector<T>> extend_homomorphism(FiniteGroup const& g,
                                                  std::span<element_t const> gens,
                                                  std::span<T const> images,
                                                  T const& identity,
                                                  Op&& op) {
  std::vector<std::optional<T>> value(g.order());
  value[0] = identity;
  std::vector<element_t> queue{0};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    auto w = queue[head];
    for (std::size_t i = 0; i < gens.size(); ++i) {
      auto u = g.op(gens[i], w);
      T candidate = op(images[i], *value[w]);
      if (!value[u]) {
        value[u] = std::move(candidate);
        queue.push_back(u);
      } else if (*value[u] != candidate) {
        return std::nullopt;
      }
    }
  }
  if (queue.size() != g.order()) {
    return std::nullopt;
  }
  std::vector<T> out;
  out.reserve(g.order());
  for (auto& v : value) {
    out.push_back(std::move(*v));
  }
  return out;
}

}  // namespace semibrace
