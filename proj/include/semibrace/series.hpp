#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "semibrace/constructions.hpp"
#include "semibrace/error.hpp"
#include "semibrace/semibrace.hpp"
#include "semibrace/subset.hpp"
#include "semibrace/subsets.hpp"

namespace semibrace {

enum class SeriesKind { right, left, strong, soc, zoc, ann, upper_central };

constexpr std::string_view to_string(SeriesKind k) noexcept {
  switch (k) {
    case SeriesKind::right: return "right";
    case SeriesKind::left: return "left";
    case SeriesKind::strong: return "strong";
    case SeriesKind::soc: return "soc";
    case SeriesKind::zoc: return "zoc";
    case SeriesKind::ann: return "ann";
    case SeriesKind::upper_central: return "upper_central";
  }
  return "?";
}

// terms[i] is the term of index first_index + i. The last term repeats
// terms[stabilized_at] and every later term equals it.
struct SeriesReport {
  SeriesKind kind;
  std::size_t first_index = 0;
  std::vector<Subset> terms;
  std::size_t stabilized_at = 0;

  Subset const& terminal() const { return terms.back(); }

  // The term of index k (clamped to the stable value).
  Subset const& term(std::size_t k) const {
    auto i = k < first_index ? 0 : k - first_index;
    return terms[std::min(i, terms.size() - 1)];
  }

  // Index at which the series first equals its terminal value for good.
  std::size_t stable_index() const { return first_index + stabilized_at; }
};

namespace detail {

inline void check_length(Semibrace const& b, std::size_t terms) {
  if (terms > b.order() + 3) {
    throw Error(ErrorKind::InternalInconsistency, "series did not stabilize within |B| steps");
  }
}

template <typename Next>
SeriesReport iterate_series(Semibrace const& b, SeriesKind kind, std::size_t first_index, Subset start, Next&& next) {
  SeriesReport r{kind, first_index, {std::move(start)}, 0};
  while (true) {
    auto t = next(r.terms.back());
    bool done = t == r.terms.back();
    r.terms.push_back(std::move(t));
    if (done) {
      r.stabilized_at = r.terms.size() - 2;
      return r;
    }
    check_length(b, r.terms.size());
  }
}

}  // namespace detail

// B^(1) = B, B^(n+1) = B^(n) . B + E
inline SeriesReport right_series(Semibrace const& b) {
  auto all = Subset::full(b.order());
  return detail::iterate_series(b, SeriesKind::right, 1, all, [&](Subset const& t) {
    return sumset(b, dot_set(b, t, all), b.idempotents());
  });
}

// B^1 = B, B^(n+1) = B . B^n + E
inline SeriesReport left_series(Semibrace const& b) {
  auto all = Subset::full(b.order());
  return detail::iterate_series(b, SeriesKind::left, 1, all, [&](Subset const& t) {
    return sumset(b, dot_set(b, all, t), b.idempotents());
  });
}

// B^[1] = B, B^[n+1] = <B^[i] . B^[n+1-i], 1 <= i <= n>_+ + E.
// Once B^[m] = ... = B^[2m] every later term equals B^[m], so the
// computation stops there and the report is cut after B^[m+1].
inline SeriesReport strong_series(Semibrace const& b) {
  std::vector<Subset> terms{Subset::full(b.order())};
  std::size_t run_start = 0;
  while (true) {
    auto const n = terms.size();
    Subset gens(b.order());
    for (std::size_t i = 0; i < n; ++i) {
      gens |= dot_set(b, terms[i], terms[n - 1 - i]);
    }
    auto t = sumset(b, add_subgroup_gen(b, gens), b.idempotents());
    if (t != terms.back()) {
      run_start = n;
    }
    terms.push_back(std::move(t));
    if (terms.size() >= 2 * run_start + 2) {
      break;
    }
    detail::check_length(b, terms.size() / 2);
  }
  terms.resize(run_start + 2);
  return {SeriesKind::strong, 1, std::move(terms), run_start};
}

// Soc_0 = {0}; Soc_k is the preimage of Soc(B / Soc_(k-1)). For skew braces
// each term is checked against
//   {a | a . b in Soc_(k-1), [a, b]_+ in Soc_(k-1) for all b}.
inline SeriesReport soc_series(Semibrace const& b) {
  auto next = [&](Subset const& prev) {
    auto q = quotient(b, prev);
    auto term = preimage(q, socle(q.structure));
    if (b.is_skew_brace()) {
      Subset direct(b.order());
      for (element_t a = 0; a < b.order(); ++a) {
        bool ok = true;
        for (element_t c = 0; c < b.order() && ok; ++c) {
          ok = prev.contains(b.dot(a, c)) && prev.contains(additive_commutator(b, a, c));
        }
        if (ok) {
          direct.insert(a);
        }
      }
      if (direct != term) {
        throw Error(ErrorKind::InternalInconsistency, "socle series of a skew brace disagrees with its direct form");
      }
    }
    return term;
  };
  return detail::iterate_series(b, SeriesKind::soc, 0, Subset::singleton(b.order(), Semibrace::zero), next);
}

// Zoc_0 = E, Zoc_1 = Zoc(B), Zoc_k the preimage of Zoc(B / Zoc_(k-1)) for
// k > 1. Since Zoc_1 is not defined through a quotient, Zoc_0 = Zoc_1 does not
// end the series; stabilization is detected from index 1 on.
inline SeriesReport zoc_series(Semibrace const& b) {
  auto first = zoc(b);
  auto r = detail::iterate_series(b, SeriesKind::zoc, 1, first, [&](Subset const& prev) {
    auto q = quotient(b, prev);
    return preimage(q, zoc(q.structure));
  });
  r.terms.insert(r.terms.begin(), b.idempotents());
  r.first_index = 0;
  r.stabilized_at += 1;
  return r;
}

inline SeriesReport upper_central_report(Semibrace const& b) {
  auto terms = upper_central_series(b);
  terms.push_back(terms.back());
  auto s = terms.size() - 2;
  return {SeriesKind::upper_central, 0, std::move(terms), s};
}

// Ann_k = Soc_k cap zeta_k + E cap zeta_k
inline SeriesReport ann_series(Semibrace const& b) {
  auto soc = soc_series(b);
  auto zeta = upper_central_report(b);
  auto last = std::max(soc.stable_index(), zeta.stable_index()) + 1;
  std::vector<Subset> terms;
  for (std::size_t k = 0; k <= last; ++k) {
    auto const& z = zeta.term(k);
    terms.push_back(sumset(b, soc.term(k) & z, b.idempotents() & z));
  }
  auto p = terms.size() - 1;
  while (p > 0 && terms[p - 1] == terms.back()) {
    --p;
  }
  terms.resize(p + 2);
  return {SeriesKind::ann, 0, std::move(terms), p};
}

// Per-index agreement of the generalized socle series with Soc_n + E and,
// for n > 1, with {a | a . b in Soc_(n-1), [g_a, g_b]_+ in Soc_(n-1)}.
struct ZocAgreement {
  std::size_t index;
  bool soc_plus_e;
  bool dot_commutator;
};

inline std::vector<ZocAgreement> zoc_agreement(Semibrace const& b) {
  auto zocs = zoc_series(b);
  auto socs = soc_series(b);
  auto last = std::max(zocs.stable_index(), socs.stable_index()) + 1;
  std::vector<ZocAgreement> out;
  for (std::size_t k = 1; k <= last; ++k) {
    auto const& z = zocs.term(k);
    bool second = true;
    if (k > 1) {
      auto const& prev = socs.term(k - 1);
      Subset a_n(b.order());
      for (element_t a = 0; a < b.order(); ++a) {
        bool ok = true;
        for (element_t c = 0; c < b.order() && ok; ++c) {
          ok = prev.contains(b.dot(a, c))
               && prev.contains(additive_commutator(b, b.group_part(a), b.group_part(c)));
        }
        if (ok) {
          a_n.insert(a);
        }
      }
      second = a_n == z;
    }
    out.push_back({k, z == sumset(b, socs.term(k), b.idempotents()), second});
  }
  return out;
}

struct ZSeriesResult {
  bool exists = false;
  // B = I_0 > I_1 > ... > I_n = E, the generalized socle series reversed
  std::vector<Subset> chain;
};

// Whether I_(j-1) / I_j lies in Soc(B / I_j) for every j.
inline bool is_z_series(Semibrace const& b, std::vector<Subset> const& chain) {
  if (chain.empty() || !chain.front().is_full() || chain.back() != b.idempotents()) {
    return false;
  }
  for (std::size_t j = 1; j < chain.size(); ++j) {
    if (!chain[j].is_subset_of(chain[j - 1]) || !is_ideal_thm(b, chain[j]).is_ideal) {
      return false;
    }
    auto q = quotient(b, chain[j]);
    auto soc = socle(q.structure);
    bool inside = true;
    chain[j - 1].for_each([&](element_t a) { inside = inside && soc.contains(q.projection[a]); });
    if (!inside) {
      return false;
    }
  }
  return true;
}

// The skew brace G = B + 0 as a substructure of B.
inline Substructure g_substructure(Semibrace const& b) { return substructure(b, b.group_elements()); }

// True iff E is an ideal and Zoc_n = B for some n. Checked against the
// criterion "G admits an s-series (Soc_n(G) = G) and E is an ideal", and the
// returned chain is checked to be a z-series with B^(i+1) in I_i.
inline ZSeriesResult has_z_series(Semibrace const& b) {
  ZSeriesResult r;
  bool e_ideal = is_E_ideal(b).is_ideal;
  if (e_ideal) {
    auto zocs = zoc_series(b);
    r.exists = zocs.terminal().is_full();
    if (r.exists) {
      std::size_t k = 0;
      while (!zocs.term(k).is_full()) {
        ++k;
      }
      for (std::size_t i = 0; i <= k; ++i) {
        r.chain.push_back(zocs.term(k - i));
      }
    }
  }
  auto g = g_substructure(b);
  bool s_series = soc_series(g.structure).terminal().is_full();
  if (r.exists != (s_series && e_ideal)) {
    throw Error(ErrorKind::ConsistencyViolation, "z-series criterion disagrees with the s-series of G");
  }
  if (r.exists) {
    if (!is_z_series(b, r.chain)) {
      throw Error(ErrorKind::ConsistencyViolation, "generalized socle chain is not a z-series");
    }
    auto right = right_series(b);
    for (std::size_t i = 0; i < r.chain.size(); ++i) {
      if (!right.term(i + 1).is_subset_of(r.chain[i])) {
        throw Error(ErrorKind::ConsistencyViolation, "B^(i+1) is not inside I_i", {static_cast<element_t>(i)});
      }
    }
  }
  return r;
}

// b^(1) = b, b^(n+1) = b^(n) . b  (right), or b^(n+1) = b . b^n  (left),
// until 0 or a repeated value.
struct PowerSequence {
  std::vector<element_t> terms;
  bool reaches_zero = false;
};

namespace detail {

template <typename Step>
PowerSequence powers(Semibrace const& b, element_t x, Step&& step) {
  PowerSequence s{{x}, x == Semibrace::zero};
  std::vector<bool> seen(b.order(), false);
  seen[x] = true;
  while (!s.reaches_zero) {
    auto y = step(s.terms.back());
    s.terms.push_back(y);
    if (y == Semibrace::zero) {
      s.reaches_zero = true;
    } else if (seen[y]) {
      break;
    }
    seen[y] = true;
  }
  return s;
}

}  // namespace detail

inline PowerSequence element_right_powers(Semibrace const& b, element_t x) {
  return detail::powers(b, x, [&](element_t p) { return b.dot(p, x); });
}

inline PowerSequence element_left_powers(Semibrace const& b, element_t x) {
  return detail::powers(b, x, [&](element_t p) { return b.dot(x, p); });
}

struct SeriesIndices {
  // index at which each series reaches its terminal value
  std::size_t right = 0;
  std::size_t left = 0;
  std::size_t strong = 0;
  std::size_t soc = 0;
  std::optional<std::size_t> zoc;
  std::size_t ann = 0;
  std::size_t upper_central = 0;
};

struct NilpotencyProfile {
  bool right_nilpotent = false;
  bool left_nilpotent = false;
  bool strongly_nilpotent = false;
  bool nilpotent = false;
  bool right_nil = false;
  bool left_nil = false;
  bool has_z_series = false;
  bool mul_group_nilpotent = false;
  bool add_group_G_nilpotent = false;
  bool E_is_ideal = false;
  SeriesIndices indices;
  // theorems found violated on this structure
  std::vector<std::string> violations;
};

enum class Strictness { throw_on_violation, record };

namespace detail {

// Termwise X_B(k) = X_G(k) + E, with the G-series mapped back into B.
inline bool lifts_termwise(Semibrace const& b,
                           SeriesReport const& of_b,
                           SeriesReport const& of_g,
                           std::vector<element_t> const& embedding) {
  auto last = std::max(of_b.stable_index(), of_g.stable_index()) + 1;
  for (std::size_t k = 1; k <= last; ++k) {
    Subset lifted(b.order());
    of_g.term(k).for_each([&](element_t x) { lifted.insert(embedding[x]); });
    if (sumset(b, lifted, b.idempotents()) != of_b.term(k)) {
      return false;
    }
  }
  return true;
}

}  // namespace detail

// Runs every series and checks the implications between the resulting flags.
inline NilpotencyProfile classify(Semibrace const& b, Strictness strictness = Strictness::throw_on_violation) {
  NilpotencyProfile p;
  auto const& e = b.idempotents();
  auto right = right_series(b);
  auto left = left_series(b);
  auto strong = strong_series(b);
  auto ann = ann_series(b);
  auto zeta = upper_central_report(b);
  p.right_nilpotent = right.terminal() == e;
  p.left_nilpotent = left.terminal() == e;
  p.strongly_nilpotent = strong.terminal() == e;
  p.nilpotent = ann.terminal().is_full();
  p.mul_group_nilpotent = zeta.terminal().is_full();
  p.E_is_ideal = is_E_ideal(b).is_ideal;
  p.right_nil = true;
  p.left_nil = true;
  for (element_t x = 0; x < b.order(); ++x) {
    p.right_nil = p.right_nil && element_right_powers(b, x).reaches_zero;
    p.left_nil = p.left_nil && element_left_powers(b, x).reaches_zero;
  }
  p.has_z_series = has_z_series(b).exists;

  auto g = g_substructure(b);
  auto g_add = FiniteGroup(g.structure.add_table());
  p.add_group_G_nilpotent = g_add.is_nilpotent();

  p.indices.right = right.stable_index();
  p.indices.left = left.stable_index();
  p.indices.strong = strong.stable_index();
  p.indices.soc = soc_series(b).stable_index();
  if (p.E_is_ideal) {
    p.indices.zoc = zoc_series(b).stable_index();
  }
  p.indices.ann = ann.stable_index();
  p.indices.upper_central = zeta.stable_index();

  auto require = [&](bool holds, char const* tag) {
    if (!holds) {
      p.violations.emplace_back(tag);
    }
  };
  require(p.strongly_nilpotent == (p.left_nilpotent && p.right_nilpotent),
          "strongly nilpotent iff left and right nilpotent");
  require(!p.right_nilpotent || p.E_is_ideal, "right nilpotent implies E ideal");
  require(!p.right_nilpotent || p.right_nil, "right nilpotent implies right nil");
  require(!p.left_nilpotent || p.left_nil, "left nilpotent implies left nil");
  require(!p.nilpotent || p.mul_group_nilpotent, "nilpotent implies (B,o) nilpotent");
  if (p.add_group_G_nilpotent) {
    require(p.right_nilpotent == p.has_z_series, "(G,+) nilpotent: right nilpotent iff z-series");
    require((p.strongly_nilpotent && p.mul_group_nilpotent) == (p.nilpotent && p.E_is_ideal),
            "(G,+) nilpotent: strongly nilpotent and (B,o) nilpotent iff nilpotent and E ideal");
  }
  if (p.E_is_ideal) {
    require(detail::lifts_termwise(b, right, right_series(g.structure), g.embedding), "B^(n) = G^(n) + E");
    require(detail::lifts_termwise(b, strong, strong_series(g.structure), g.embedding), "B^[n] = G^[n] + E");
    require(!p.nilpotent || p.right_nilpotent, "nilpotent and E ideal implies right nilpotent");
    if (p.add_group_G_nilpotent) {
      require(!p.nilpotent || p.left_nilpotent, "nilpotent, E ideal, (G,+) nilpotent implies left nilpotent");
      require(!p.mul_group_nilpotent || p.left_nilpotent,
              "E ideal, (G,+) nilpotent, (B,o) nilpotent implies left nilpotent");
    }
  }
  auto e_group = b.mul_group().subgroup(e).first;
  bool hypotheses = p.add_group_G_nilpotent && e_group.is_nilpotent()
                    && e.is_subset_of(b.mul_group().centralizer(b.group_elements()));
  if (hypotheses) {
    require(p.left_nilpotent == p.mul_group_nilpotent,
            "(G,+) nilpotent, (E,o) nilpotent and centralizing G: left nilpotent iff (B,o) nilpotent");
  }

  if (strictness == Strictness::throw_on_violation && !p.violations.empty()) {
    throw Error(ErrorKind::ConsistencyViolation, p.violations.front());
  }
  return p;
}

// If B / Zoc(B) is right nilpotent then so is B. Returns whether the
// implication holds on b.
inline bool quotient_right_nilpotent_lift(Semibrace const& b) {
  auto q = quotient(b, zoc(b));
  bool quotient_rn = right_series(q.structure).terminal() == q.structure.idempotents();
  bool b_rn = right_series(b).terminal() == b.idempotents();
  return !quotient_rn || b_rn;
}

}  // namespace semibrace
