#pragma once

// Finite left semi-braces (B, +, o) given by Cayley tables:
//   (B, +) a left cancellative semigroup, (B, o) a group, and
//   a o (b + c) = a o b + a o (a^- + c)   for all a, b, c.
// Element 0 is always the identity of (B, o). Sums of three or more terms are
// evaluated left to right.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "semibrace/cayley_table.hpp"
#include "semibrace/error.hpp"
#include "semibrace/group.hpp"
#include "semibrace/subset.hpp"

namespace semibrace {

enum class MapKind { lambda, rho };

struct MapTable {
  MapKind kind;
  element_t base;
  std::vector<element_t> images;
};

// Returns the first violated axiom (in element order, in the input labelling)
// or nullopt. Checks run in this order: shape, (B, o) is a group, rows of +
// are injective, (B, +) is associative, compatibility.
inline std::optional<Error> find_violation(CayleyTable const& add, CayleyTable const& mul) {
  auto const n = add.order();
  if (n == 0 || mul.order() != n) {
    return Error(ErrorKind::InvalidTable, "tables must have the same positive order");
  }
  auto group = analyze_group(mul);
  if (auto* err = std::get_if<Error>(&group)) {
    return *err;
  }
  auto const& inv = std::get<GroupStructure>(group).inverse;
  for (element_t a = 0; a < n; ++a) {
    std::vector<bool> hit(n, false);
    for (element_t b = 0; b < n; ++b) {
      auto v = add(a, b);
      if (hit[v]) {
        return Error(ErrorKind::NotLeftCancellative, "row " + std::to_string(a) + " of + repeats a value", {a});
      }
      hit[v] = true;
    }
  }
  for (element_t a = 0; a < n; ++a) {
    for (element_t b = 0; b < n; ++b) {
      auto ab = add(a, b);
      for (element_t c = 0; c < n; ++c) {
        if (add(ab, c) != add(a, add(b, c))) {
          return Error(ErrorKind::NotASemigroup, "+ is not associative", {a, b, c});
        }
      }
    }
  }
  for (element_t a = 0; a < n; ++a) {
    for (element_t b = 0; b < n; ++b) {
      auto ab = mul(a, b);
      for (element_t c = 0; c < n; ++c) {
        auto lhs = mul(a, add(b, c));
        auto rhs = add(ab, mul(a, add(inv[a], c)));
        if (lhs != rhs) {
          return Error(ErrorKind::CompatibilityViolation, "a o (b + c) != a o b + a o (a^- + c)", {a, b, c});
        }
      }
    }
  }
  return std::nullopt;
}

class Semibrace;
Semibrace validate(CayleyTable add, CayleyTable mul);

// An immutable, validated left semi-brace with its derived data: the
// idempotents E, the group G = B + 0, the decomposition b = g_b + e_b, and
// the tables of lambda, rho and the dot operation.
class Semibrace {
 public:
  static constexpr element_t zero = 0;

  std::size_t order() const noexcept { return n_; }

  element_t add(element_t a, element_t b) const noexcept { return add_(a, b); }
  element_t mul(element_t a, element_t b) const noexcept { return mul_(a, b); }
  element_t inv(element_t a) const noexcept { return mul_group_.inverse(a); }

  CayleyTable const& add_table() const noexcept { return add_; }
  CayleyTable const& mul_table() const noexcept { return mul_; }
  FiniteGroup const& mul_group() const noexcept { return mul_group_; }

  Subset const& idempotents() const noexcept { return e_; }
  Subset const& group_elements() const noexcept { return g_; }
  bool in_E(element_t a) const noexcept { return e_.contains(a); }
  bool in_G(element_t a) const noexcept { return g_.contains(a); }
  bool is_skew_brace() const noexcept { return e_.size() == 1; }
  bool is_trivial() const noexcept { return g_.size() == 1; }

  // g_b = b + 0
  element_t group_part(element_t b) const noexcept { return gpart_[b]; }
  // e_b = -g_b + b
  element_t idempotent_part(element_t b) const noexcept { return epart_[b]; }

  // Inverse of g in the group (G, +).
  element_t neg(element_t g) const {
    if (!in_G(g)) {
      throw Error(ErrorKind::NotInG, "additive inverse requires an element of G", {g});
    }
    return neg_[g];
  }

  // lambda_a(b) = a o (a^- + b)
  element_t lambda(element_t a, element_t b) const noexcept { return lambda_[a * n_ + b]; }
  // rho_b(a) = (a^- + b)^- o b
  element_t rho(element_t b, element_t a) const noexcept { return rho_[b * n_ + a]; }

  MapTable lambda_map(element_t a) const {
    return {MapKind::lambda, a, {lambda_.begin() + a * n_, lambda_.begin() + (a + 1) * n_}};
  }
  MapTable rho_map(element_t b) const {
    return {MapKind::rho, b, {rho_.begin() + b * n_, rho_.begin() + (b + 1) * n_}};
  }

  bool same_lambda(element_t a, element_t b) const noexcept {
    return std::equal(lambda_.begin() + a * n_, lambda_.begin() + (a + 1) * n_, lambda_.begin() + b * n_);
  }
  bool same_rho(element_t a, element_t b) const noexcept {
    return std::equal(rho_.begin() + a * n_, rho_.begin() + (a + 1) * n_, rho_.begin() + b * n_);
  }

  // a . b; the three defining formulas were cross-checked at construction.
  element_t dot(element_t a, element_t b) const noexcept { return dot_[a * n_ + b]; }

  // The unique (g, e) in G x E with b = g o e.
  std::pair<element_t, element_t> factorize_mul(element_t b) const noexcept {
    auto g = gpart_[b];
    return {g, lambda(inv(g), epart_[b])};
  }

  // input index -> stored index (0 is moved to the identity of o when needed)
  std::vector<element_t> const& relabeling() const noexcept { return relabeling_; }

  friend Semibrace validate(CayleyTable add, CayleyTable mul);

 private:
  Semibrace(CayleyTable add, CayleyTable mul, std::vector<element_t> relabeling)
      : n_(add.order()),
        add_(std::move(add)),
        mul_(std::move(mul)),
        mul_group_(mul_),
        relabeling_(std::move(relabeling)) {
    derive();
  }

  void derive() {
    e_ = Subset(n_);
    g_ = Subset(n_);
    gpart_.assign(n_, 0);
    epart_.assign(n_, 0);
    neg_.assign(n_, 0);
    for (element_t b = 0; b < n_; ++b) {
      if (add(zero, b) != b) {
        throw Error(ErrorKind::InternalInconsistency, "0 is not a left identity of +", {b});
      }
      if (add(b, b) == b) {
        e_.insert(b);
      }
      gpart_[b] = add(b, zero);
      g_.insert(gpart_[b]);
    }
    g_.for_each([&](element_t g) {
      bool found = false;
      g_.for_each([&](element_t h) {
        if (!found && add(g, h) == zero && add(h, g) == zero) {
          neg_[g] = h;
          found = true;
        }
      });
      if (!found || add(g, zero) != g) {
        throw Error(ErrorKind::InternalInconsistency, "(G, +) is not a group with neutral 0", {g});
      }
    });
    for (element_t b = 0; b < n_; ++b) {
      epart_[b] = add(neg_[gpart_[b]], b);
      if (!in_E(epart_[b]) || add(gpart_[b], epart_[b]) != b) {
        throw Error(ErrorKind::InternalInconsistency, "b != g_b + e_b", {b});
      }
      std::size_t decompositions = 0;
      g_.for_each([&](element_t g) {
        e_.for_each([&](element_t e) { decompositions += add(g, e) == b ? 1 : 0; });
      });
      if (decompositions != 1) {
        throw Error(ErrorKind::InternalInconsistency, "decomposition b = g + e is not unique", {b});
      }
    }

    lambda_.assign(n_ * n_, 0);
    rho_.assign(n_ * n_, 0);
    dot_.assign(n_ * n_, 0);
    for (element_t a = 0; a < n_; ++a) {
      for (element_t b = 0; b < n_; ++b) {
        lambda_[a * n_ + b] = mul(a, add(inv(a), b));
        rho_[b * n_ + a] = mul(inv(add(inv(a), b)), b);
      }
    }
    for (element_t b = 0; b < n_; ++b) {
      if (gpart_[b] != inv(rho(zero, inv(b))) || epart_[b] != lambda(b, zero)) {
        throw Error(ErrorKind::InternalInconsistency, "formulas for g_b and e_b disagree", {b});
      }
    }
    for (element_t a = 0; a < n_; ++a) {
      for (element_t b = 0; b < n_; ++b) {
        // lambda_a(a^-) + a o b + lambda_b(b^-)
        auto defining = add(add(lambda(a, inv(a)), mul(a, b)), lambda(b, inv(b)));
        // -g_a + a o b - g_b
        auto via_parts = add(add(neg_[gpart_[a]], mul(a, b)), neg_[gpart_[b]]);
        // lambda_a(b) + lambda_b(b^-)
        auto via_lambda = add(lambda(a, b), lambda(b, inv(b)));
        if (defining != via_parts || defining != via_lambda || !in_G(defining)) {
          throw Error(ErrorKind::InternalInconsistency, "formulas for a . b disagree", {a, b});
        }
        dot_[a * n_ + b] = defining;
      }
    }
  }

  std::size_t n_;
  CayleyTable add_;
  CayleyTable mul_;
  FiniteGroup mul_group_;
  std::vector<element_t> relabeling_;
  Subset e_;
  Subset g_;
  std::vector<element_t> gpart_;
  std::vector<element_t> epart_;
  std::vector<element_t> neg_;
  std::vector<element_t> lambda_;
  std::vector<element_t> rho_;
  std::vector<element_t> dot_;
};

// Validates the tables and builds the cached structure. If the identity of o
// is not element 0 it is swapped with 0; relabeling() records the swap.
inline Semibrace validate(CayleyTable add, CayleyTable mul) {
  if (auto err = find_violation(add, mul)) {
    throw *err;
  }
  auto const n = add.order();
  std::vector<element_t> sigma(n);
  for (element_t i = 0; i < n; ++i) {
    sigma[i] = i;
  }
  auto identity = std::get<GroupStructure>(analyze_group(mul)).identity;
  if (identity != 0) {
    std::swap(sigma[0], sigma[identity]);
    add = add.relabeled(sigma);
    mul = mul.relabeled(sigma);
  }
  return Semibrace(std::move(add), std::move(mul), std::move(sigma));
}

}  // namespace semibrace
