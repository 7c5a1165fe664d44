#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "semibrace/cayley_table.hpp"
#include "semibrace/error.hpp"
#include "semibrace/group.hpp"
#include "semibrace/semibrace.hpp"
#include "semibrace/subset.hpp"
#include "semibrace/subsets.hpp"

namespace semibrace {

// a + b = b
inline Semibrace trivial_semibrace(FiniteGroup const& g) {
  auto add = CayleyTable::from_function(g.order(), [](element_t, element_t b) { return b; });
  return validate(std::move(add), g.table());
}

// a + b = b o phi(a), for an idempotent endomorphism phi of g.
inline Semibrace from_idempotent_endomorphism(FiniteGroup const& g, std::vector<element_t> const& phi) {
  auto const n = g.order();
  if (phi.size() != n) {
    throw Error(ErrorKind::InvalidTable, "phi must have one image per element");
  }
  for (auto v : phi) {
    if (v >= n) {
      throw Error(ErrorKind::InvalidTable, "phi image out of range", {v});
    }
  }
  for (element_t a = 0; a < n; ++a) {
    for (element_t b = 0; b < n; ++b) {
      if (phi[g.op(a, b)] != g.op(phi[a], phi[b])) {
        throw Error(ErrorKind::NotEndomorphism, "phi(a o b) != phi(a) o phi(b)", {a, b});
      }
    }
  }
  for (element_t a = 0; a < n; ++a) {
    if (phi[phi[a]] != phi[a]) {
      throw Error(ErrorKind::NotIdempotent, "phi(phi(a)) != phi(a)", {a});
    }
  }
  auto add = CayleyTable::from_function(n, [&](element_t a, element_t b) { return g.op(b, phi[a]); });
  return validate(std::move(add), g.table());
}

// Skew brace with the given tables; (B, +) must be a group.
inline Semibrace skew_brace_embed(CayleyTable add, CayleyTable mul) {
  auto group = analyze_group(add);
  if (auto* err = std::get_if<Error>(&group)) {
    throw Error(ErrorKind::AddNotAGroup, std::string(err->detail()), err->witness());
  }
  return validate(std::move(add), std::move(mul));
}

// K_G: a + b = a o b
inline Semibrace group_skew_brace(FiniteGroup const& g) { return skew_brace_embed(g.table(), g.table()); }

// maps[y] is the automorphism of the acted-on structure attached to y.
struct ActionTable {
  std::vector<std::vector<element_t>> maps;
};

inline ActionTable trivial_action(std::size_t actor_order, std::size_t target_order) {
  std::vector<element_t> id(target_order);
  for (element_t i = 0; i < target_order; ++i) {
    id[i] = i;
  }
  return {std::vector<std::vector<element_t>>(actor_order, id)};
}

// Carrier X x Y with (x, y) at index x * |Y| + y, Y acting on X:
//   (x1, y1) + (x2, y2) = (x1 + x2, y1 + y2)
//   (x1, y1) o (x2, y2) = (x1 o act(y1)(x2), y1 o y2)
inline Semibrace semidirect_product(Semibrace const& x, Semibrace const& y, ActionTable const& act) {
  auto const nx = x.order();
  auto const ny = y.order();
  if (act.maps.size() != ny) {
    throw Error(ErrorKind::InvalidTable, "action needs one map per acting element");
  }
  for (element_t u = 0; u < ny; ++u) {
    auto const& m = act.maps[u];
    if (m.size() != nx) {
      throw Error(ErrorKind::InvalidTable, "action map has the wrong length", {u});
    }
    std::vector<bool> hit(nx, false);
    for (auto v : m) {
      if (v >= nx || hit[v]) {
        throw Error(ErrorKind::NotAutomorphism, "action map is not a bijection", {u});
      }
      hit[v] = true;
    }
    for (element_t a = 0; a < nx; ++a) {
      for (element_t b = 0; b < nx; ++b) {
        if (m[x.add(a, b)] != x.add(m[a], m[b]) || m[x.mul(a, b)] != x.mul(m[a], m[b])) {
          throw Error(ErrorKind::NotAutomorphism, "action map does not preserve + and o", {u, a, b});
        }
      }
    }
  }
  for (element_t u = 0; u < ny; ++u) {
    for (element_t v = 0; v < ny; ++v) {
      auto const& m = act.maps[y.mul(u, v)];
      for (element_t a = 0; a < nx; ++a) {
        if (m[a] != act.maps[u][act.maps[v][a]]) {
          throw Error(ErrorKind::NotAHomomorphism, "act(u o v) != act(u) act(v)", {u, v, a});
        }
      }
    }
  }
  auto const n = nx * ny;
  auto add = CayleyTable::from_function(n, [&](element_t p, element_t q) {
    return static_cast<element_t>(x.add(p / ny, q / ny) * ny + y.add(p % ny, q % ny));
  });
  auto mul = CayleyTable::from_function(n, [&](element_t p, element_t q) {
    auto x1 = p / ny;
    auto y1 = p % ny;
    return static_cast<element_t>(x.mul(x1, act.maps[y1][q / ny]) * ny + y.mul(y1, q % ny));
  });
  return validate(std::move(add), std::move(mul));
}

enum class Orientation {
  // T x A, the skew brace A acting on the trivial semi-brace T
  skew_acts_on_trivial,
  // A x T, the trivial semi-brace T acting on the skew brace A
  trivial_acts_on_skew,
};

// The two orientations of a semidirect product of a trivial semi-brace t and
// a skew brace a. act is indexed by elements of the acting factor.
inline Semibrace semidirect_product(Semibrace const& t, Semibrace const& a, ActionTable const& act, Orientation o) {
  if (!t.is_trivial()) {
    throw Error(ErrorKind::InvalidTable, "first factor must be a trivial semi-brace");
  }
  if (!a.is_skew_brace()) {
    throw Error(ErrorKind::InvalidTable, "second factor must be a skew brace");
  }
  return o == Orientation::skew_acts_on_trivial ? semidirect_product(t, a, act) : semidirect_product(a, t, act);
}

inline Semibrace direct_product(Semibrace const& x, Semibrace const& y) {
  return semidirect_product(x, y, trivial_action(y.order(), x.order()));
}

struct Substructure {
  Semibrace structure;
  // local index -> element of the parent
  std::vector<element_t> embedding;
};

// The sub-semi-brace on a subset containing 0 and closed under + and o,
// relabelled in increasing element order.
inline Substructure substructure(Semibrace const& b, Subset const& s) {
  if (!s.contains(Semibrace::zero)) {
    throw Error(ErrorKind::NotClosed, "a substructure must contain 0", {Semibrace::zero});
  }
  auto elems = s.elements();
  std::vector<element_t> local(b.order(), 0);
  for (element_t i = 0; i < elems.size(); ++i) {
    local[elems[i]] = i;
  }
  auto restrict = [&](auto op) {
    return CayleyTable::from_function(elems.size(), [&](element_t i, element_t j) {
      auto v = op(elems[i], elems[j]);
      if (!s.contains(v)) {
        throw Error(ErrorKind::NotClosed, "subset is not closed", {elems[i], elems[j], v});
      }
      return local[v];
    });
  };
  auto add = restrict([&](element_t u, element_t v) { return b.add(u, v); });
  auto mul = restrict([&](element_t u, element_t v) { return b.mul(u, v); });
  return {validate(std::move(add), std::move(mul)), std::move(elems)};
}

struct Quotient {
  Semibrace structure;
  // element of B -> its class in B/I
  std::vector<element_t> projection;
  // class -> smallest member
  std::vector<element_t> representatives;
};

// B/I for an ideal I: the classes are the cosets a o I, numbered by smallest
// member, and both operations are checked to be well defined on them.
inline Quotient quotient(Semibrace const& b, Subset const& ideal) {
  auto verdict = is_ideal_thm(b, ideal);
  if (!verdict.is_ideal) {
    throw Error(ErrorKind::NotAnIdeal, std::string(to_string(*verdict.failed)), verdict.witness);
  }
  auto const n = b.order();
  constexpr auto unset = static_cast<element_t>(-1);
  std::vector<element_t> projection(n, unset);
  std::vector<element_t> reps;
  for (element_t a = 0; a < n; ++a) {
    if (projection[a] != unset) {
      continue;
    }
    auto cls = static_cast<element_t>(reps.size());
    reps.push_back(a);
    ideal.for_each([&](element_t i) { projection[b.mul(a, i)] = cls; });
  }
  for (element_t a = 0; a < n; ++a) {
    for (element_t c = 0; c < n; ++c) {
      if (congruent(b, ideal, a, c) != (projection[a] == projection[c])) {
        throw Error(ErrorKind::QuotientIllDefined, "cosets do not match the congruence", {a, c});
      }
    }
  }
  auto const m = reps.size();
  std::vector<element_t> add(m * m, unset);
  std::vector<element_t> mul(m * m, unset);
  auto record = [&](std::vector<element_t>& table, element_t u, element_t v, element_t value) {
    auto& cell = table[projection[u] * m + projection[v]];
    if (cell == unset) {
      cell = projection[value];
    } else if (cell != projection[value]) {
      throw Error(ErrorKind::QuotientIllDefined, "operation does not respect the classes", {u, v});
    }
  };
  for (element_t u = 0; u < n; ++u) {
    for (element_t v = 0; v < n; ++v) {
      record(add, u, v, b.add(u, v));
      record(mul, u, v, b.mul(u, v));
    }
  }
  auto structure = validate(CayleyTable(m, std::move(add)), CayleyTable(m, std::move(mul)));
  return {std::move(structure), std::move(projection), std::move(reps)};
}

// The preimage of a subset of B/I under the projection.
inline Subset preimage(Quotient const& q, Subset const& s) {
  Subset out(q.projection.size());
  for (element_t a = 0; a < q.projection.size(); ++a) {
    if (s.contains(q.projection[a])) {
      out.insert(a);
    }
  }
  return out;
}

}  // namespace semibrace
