#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "semibrace/error.hpp"
#include "semibrace/semibrace.hpp"

namespace semibrace {

using Pair = std::pair<element_t, element_t>;

// A map r: X x X -> X x X on X = {0, ..., n - 1}, stored row-major.
class SolutionMap {
 public:
  SolutionMap() = default;

  SolutionMap(std::size_t n, std::vector<Pair> table) : n_(n), table_(std::move(table)) {
    if (table_.size() != n * n) {
      throw Error(ErrorKind::InvalidTable, "solution table must have n * n cells");
    }
    for (auto [u, v] : table_) {
      if (u >= n || v >= n) {
        throw Error(ErrorKind::InvalidTable, "solution value out of range", {u, v});
      }
    }
  }

  template <typename F>
  static SolutionMap from_function(std::size_t n, F&& f) {
    std::vector<Pair> t;
    t.reserve(n * n);
    for (element_t a = 0; a < n; ++a) {
      for (element_t b = 0; b < n; ++b) {
        t.push_back(f(a, b));
      }
    }
    return SolutionMap(n, std::move(t));
  }

  static SolutionMap flip(std::size_t n) {
    return from_function(n, [](element_t a, element_t b) { return Pair{b, a}; });
  }

  std::size_t order() const noexcept { return n_; }
  Pair operator()(element_t a, element_t b) const noexcept { return table_[a * n_ + b]; }
  Pair operator()(Pair p) const noexcept { return (*this)(p.first, p.second); }
  std::vector<Pair> const& table() const noexcept { return table_; }

  void set(element_t a, element_t b, Pair value) { table_[a * n_ + b] = value; }

  SolutionMap then(SolutionMap const& next) const {
    return from_function(n_, [&](element_t a, element_t b) { return next((*this)(a, b)); });
  }

  friend bool operator==(SolutionMap const&, SolutionMap const&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Pair> table_;
};

// r(a, b) = (lambda_a(b), rho_b(a))
inline SolutionMap solution_of(Semibrace const& b) {
  return SolutionMap::from_function(b.order(), [&](element_t x, element_t y) {
    return Pair{b.lambda(x, y), b.rho(y, x)};
  });
}

// First (a, b, c) on which (r x id)(id x r)(r x id) and (id x r)(r x id)(id x r)
// differ, or nullopt.
inline std::optional<std::array<element_t, 3>> braid_witness(SolutionMap const& r) {
  using Triple = std::array<element_t, 3>;
  auto r12 = [&](Triple t) {
    auto [u, v] = r(t[0], t[1]);
    return Triple{u, v, t[2]};
  };
  auto r23 = [&](Triple t) {
    auto [u, v] = r(t[1], t[2]);
    return Triple{t[0], u, v};
  };
  auto const n = static_cast<element_t>(r.order());
  for (element_t a = 0; a < n; ++a) {
    for (element_t b = 0; b < n; ++b) {
      for (element_t c = 0; c < n; ++c) {
        Triple t{a, b, c};
        if (r12(r23(r12(t))) != r23(r12(r23(t)))) {
          return t;
        }
      }
    }
  }
  return std::nullopt;
}

inline bool check_braid(SolutionMap const& r) { return !braid_witness(r); }

struct Restriction {
  SolutionMap map;
  // local index -> element of B
  std::vector<element_t> embedding;
};

// s = r restricted to E x E, relabelled in increasing element order.
inline Restriction restrict_to_E(Semibrace const& b, SolutionMap const& r) {
  auto elems = b.idempotents().elements();
  std::vector<element_t> local(b.order(), 0);
  for (element_t i = 0; i < elems.size(); ++i) {
    local[elems[i]] = i;
  }
  auto s = SolutionMap::from_function(elems.size(), [&](element_t i, element_t j) {
    auto [u, v] = r(elems[i], elems[j]);
    if (!b.in_E(u) || !b.in_E(v)) {
      throw Error(ErrorKind::NotClosed, "r does not map E x E into itself", {elems[i], elems[j]});
    }
    return Pair{local[u], local[v]};
  });
  return {std::move(s), std::move(elems)};
}

enum class PeriodStatus { exact, none, overflow };

struct SolutionProperties {
  bool bijective = false;
  bool involutive = false;
  bool idempotent = false;
  bool left_nondegenerate = false;
  bool right_nondegenerate = false;
  PeriodStatus period_status = PeriodStatus::none;
  // least p >= 2 with r^p = r, when period_status is exact
  std::uint64_t period = 0;
};

// r^p = r iff r^(p-1) fixes every point of im(r). So a period exists iff every
// image point lies on a cycle of r, and then the least one is 1 + the lcm of
// the lengths of those cycles.
inline SolutionProperties properties(SolutionMap const& r) {
  auto const n = r.order();
  auto const cells = n * n;
  auto index = [n](Pair p) { return p.first * n + p.second; };
  std::vector<std::size_t> next(cells);
  for (std::size_t i = 0; i < cells; ++i) {
    next[i] = index(r.table()[i]);
  }

  SolutionProperties p;
  std::vector<bool> hit(cells, false);
  p.bijective = true;
  for (auto j : next) {
    p.bijective = p.bijective && !hit[j];
    hit[j] = true;
  }
  p.involutive = true;
  p.idempotent = true;
  for (std::size_t i = 0; i < cells; ++i) {
    p.involutive = p.involutive && next[next[i]] == i;
    p.idempotent = p.idempotent && next[next[i]] == next[i];
  }
  auto rows_bijective = [&](bool first) {
    for (element_t fixed = 0; fixed < n; ++fixed) {
      std::vector<bool> seen(n, false);
      for (element_t other = 0; other < n; ++other) {
        auto v = first ? r(fixed, other).first : r(other, fixed).second;
        if (seen[v]) {
          return false;
        }
        seen[v] = true;
      }
    }
    return true;
  };
  p.left_nondegenerate = rows_bijective(true);
  p.right_nondegenerate = rows_bijective(false);

  // cycle length of every point on a cycle, 0 for transient points
  std::vector<std::size_t> cycle(cells, 0);
  std::vector<int> state(cells, 0);  // 0 new, 1 on the current path, 2 done
  for (std::size_t start = 0; start < cells; ++start) {
    std::vector<std::size_t> path;
    auto x = start;
    while (state[x] == 0) {
      state[x] = 1;
      path.push_back(x);
      x = next[x];
    }
    if (state[x] == 1) {
      std::size_t len = 1;
      for (auto y = next[x]; y != x; y = next[y]) {
        ++len;
      }
      for (auto y = x;;) {
        cycle[y] = len;
        y = next[y];
        if (y == x) {
          break;
        }
      }
    }
    for (auto y : path) {
      state[y] = 2;
    }
  }
  std::uint64_t l = 1;
  for (std::size_t i = 0; i < cells; ++i) {
    if (!hit[i]) {
      continue;
    }
    if (cycle[i] == 0) {
      p.period_status = PeriodStatus::none;
      return p;
    }
    auto g = std::gcd(l, static_cast<std::uint64_t>(cycle[i]));
    auto factor = cycle[i] / g;
    if (l > (std::numeric_limits<std::uint64_t>::max() - 1) / factor) {
      p.period_status = PeriodStatus::overflow;
      return p;
    }
    l *= factor;
  }
  p.period_status = PeriodStatus::exact;
  p.period = l + 1;
  return p;
}

}  // namespace semibrace
