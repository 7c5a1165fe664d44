#pragma once

// Small groups with presentation labels. Permutation groups use the
// composition (p o q)(x) = p(q(x)) and list their elements in lexicographic
// order of the image tuple, so the identity is always element 0.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "semibrace/cayley_table.hpp"
#include "semibrace/error.hpp"
#include "semibrace/group.hpp"

namespace semibrace {

using Permutation = std::vector<element_t>;

inline Permutation compose(Permutation const& p, Permutation const& q) {
  Permutation r(q.size());
  for (std::size_t x = 0; x < q.size(); ++x) {
    r[x] = p[q[x]];
  }
  return r;
}

inline Permutation identity_permutation(std::size_t degree) {
  Permutation p(degree);
  for (std::size_t i = 0; i < degree; ++i) {
    p[i] = static_cast<element_t>(i);
  }
  return p;
}

inline Permutation inverse(Permutation const& p) {
  Permutation r(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) {
    r[p[x]] = static_cast<element_t>(x);
  }
  return r;
}

// Cycle notation on the points 1..degree, e.g. "(1 3 2)"; "id" for the identity.
inline std::string cycle_string(Permutation const& p) {
  std::string out;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t start = 0; start < p.size(); ++start) {
    if (seen[start] || p[start] == start) {
      continue;
    }
    out += '(';
    std::size_t x = start;
    bool first = true;
    while (!seen[x]) {
      seen[x] = true;
      if (!first) {
        out += ' ';
      }
      out += std::to_string(x + 1);
      first = false;
      x = p[x];
    }
    out += ')';
  }
  return out.empty() ? "id" : out;
}

// Parses "id", "(1 2)(3 4)" or the compact "(12)(34)" (single-digit points).
inline Permutation parse_permutation(std::string_view text, std::size_t degree) {
  auto p = identity_permutation(degree);
  std::string trimmed;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c)) || (!trimmed.empty() && trimmed.back() != ' ')) {
      trimmed += c;
    }
  }
  while (!trimmed.empty() && trimmed.back() == ' ') {
    trimmed.pop_back();
  }
  if (trimmed == "id" || trimmed == "()" || trimmed.empty()) {
    return p;
  }
  std::size_t i = 0;
  while (i < trimmed.size()) {
    if (trimmed[i] != '(') {
      throw Error(ErrorKind::UnknownName, "malformed permutation '" + std::string(text) + "'");
    }
    auto close = trimmed.find(')', i);
    if (close == std::string::npos) {
      throw Error(ErrorKind::UnknownName, "malformed permutation '" + std::string(text) + "'");
    }
    auto body = trimmed.substr(i + 1, close - i - 1);
    std::vector<std::size_t> points;
    if (body.find(' ') == std::string::npos && body.find(',') == std::string::npos) {
      for (char c : body) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
          throw Error(ErrorKind::UnknownName, "malformed permutation '" + std::string(text) + "'");
        }
        points.push_back(static_cast<std::size_t>(c - '0'));
      }
    } else {
      std::string token;
      for (char c : body + " ") {
        if (c == ' ' || c == ',') {
          if (!token.empty()) {
            points.push_back(std::stoul(token));
            token.clear();
          }
        } else {
          token += c;
        }
      }
    }
    for (auto pt : points) {
      if (pt < 1 || pt > degree) {
        throw Error(ErrorKind::UnknownName, "point out of range in '" + std::string(text) + "'");
      }
    }
    Permutation cycle = identity_permutation(degree);
    for (std::size_t k = 0; k < points.size(); ++k) {
      cycle[points[k] - 1] = static_cast<element_t>(points[(k + 1) % points.size()] - 1);
    }
    // cycles are written left to right and act right to left
    p = compose(p, cycle);
    i = close + 1;
  }
  return p;
}

struct LabeledGroup {
  std::string name;
  FiniteGroup group;
  std::vector<std::string> labels;
  // Only filled for permutation groups.
  std::vector<Permutation> permutations;
  std::size_t degree = 0;

  element_t find_label(std::string_view label) const {
    for (element_t i = 0; i < labels.size(); ++i) {
      if (labels[i] == label) {
        return i;
      }
    }
    if (!permutations.empty()) {
      auto p = parse_permutation(label, degree);
      for (element_t i = 0; i < permutations.size(); ++i) {
        if (permutations[i] == p) {
          return i;
        }
      }
    }
    throw Error(ErrorKind::UnknownName,
                "no element '" + std::string(label) + "' in " + name);
  }
};

inline LabeledGroup permutation_group(std::string name,
                                      std::vector<Permutation> const& gens,
                                      std::size_t degree) {
  std::vector<Permutation> elems{identity_permutation(degree)};
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (auto const& g : gens) {
      auto p = compose(g, elems[head]);
      if (std::find(elems.begin(), elems.end(), p) == elems.end()) {
        elems.push_back(std::move(p));
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  std::map<Permutation, element_t> index;
  for (element_t i = 0; i < elems.size(); ++i) {
    index[elems[i]] = i;
  }
  auto table = CayleyTable::from_function(elems.size(), [&](element_t a, element_t b) {
    return index.at(compose(elems[a], elems[b]));
  });
  LabeledGroup out{std::move(name), FiniteGroup(std::move(table)), {}, elems, degree};
  for (auto const& p : elems) {
    out.labels.push_back(cycle_string(p));
  }
  return out;
}

inline LabeledGroup symmetric_group(std::size_t degree) {
  std::vector<Permutation> gens;
  if (degree >= 2) {
    auto transposition = identity_permutation(degree);
    std::swap(transposition[0], transposition[1]);
    gens.push_back(transposition);
    Permutation cycle(degree);
    for (std::size_t i = 0; i < degree; ++i) {
      cycle[i] = static_cast<element_t>((i + 1) % degree);
    }
    gens.push_back(cycle);
  }
  return permutation_group("S" + std::to_string(degree), gens, degree);
}

inline LabeledGroup alternating_group(std::size_t degree) {
  std::vector<Permutation> gens;
  for (std::size_t k = 2; k < degree; ++k) {
    // 3-cycles (1 2 k+1) generate A_n
    auto p = identity_permutation(degree);
    p[0] = 1;
    p[1] = static_cast<element_t>(k);
    p[k] = 0;
    gens.push_back(p);
  }
  return permutation_group("A" + std::to_string(degree), gens, degree);
}

// Symmetries of the regular m-gon, order 2m.
inline LabeledGroup dihedral_group(std::size_t m) {
  Permutation rotation(m);
  Permutation reflection(m);
  for (std::size_t i = 0; i < m; ++i) {
    rotation[i] = static_cast<element_t>((i + 1) % m);
    reflection[i] = static_cast<element_t>((m - i) % m);
  }
  return permutation_group("D" + std::to_string(m), {rotation, reflection}, m);
}

// Elements g^k, labelled "e", "g", "g^2", ...
inline LabeledGroup cyclic_group(std::size_t n) {
  auto table = CayleyTable::from_function(n, [n](element_t a, element_t b) {
    return (a + b) % n;
  });
  LabeledGroup out{"C" + std::to_string(n), FiniteGroup(std::move(table)), {}, {}, 0};
  for (std::size_t k = 0; k < n; ++k) {
    out.labels.push_back(k == 0 ? "e" : k == 1 ? "g" : "g^" + std::to_string(k));
  }
  return out;
}

// <x, y | x^m = 1, y^n = x^t, y x y^- = x^k>; element x^a y^b has index a*n + b.
inline LabeledGroup metacyclic_group(std::string name, std::size_t m, std::size_t n,
                                     std::size_t k, std::size_t t) {
  auto power = [m](std::size_t base, std::size_t e) {
    std::size_t r = 1 % m;
    for (std::size_t i = 0; i < e; ++i) {
      r = (r * base) % m;
    }
    return r;
  };
  auto table = CayleyTable::from_function(m * n, [&](element_t u, element_t v) {
    std::size_t a = u / n, b = u % n, c = v / n, d = v % n;
    std::size_t x = (a + power(k, b) * c) % m;
    std::size_t y = b + d;
    if (y >= n) {
      y -= n;
      x = (x + t) % m;
    }
    return static_cast<element_t>(x * n + y);
  });
  LabeledGroup out{std::move(name), FiniteGroup(std::move(table)), {}, {}, 0};
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      std::string s;
      if (a > 0) {
        s += a == 1 ? "x" : "x^" + std::to_string(a);
      }
      if (b > 0) {
        s += b == 1 ? "y" : "y^" + std::to_string(b);
      }
      out.labels.push_back(s.empty() ? "e" : s);
    }
  }
  return out;
}

// Pairs (a, b) with index a*|H| + b, labelled "(a,b)".
inline LabeledGroup direct_product(LabeledGroup const& g, LabeledGroup const& h) {
  auto const m = h.group.order();
  auto table = CayleyTable::from_function(g.group.order() * m, [&](element_t u, element_t v) {
    return g.group.op(u / m, v / m) * m + h.group.op(u % m, v % m);
  });
  LabeledGroup out{g.name + "x" + h.name, FiniteGroup(std::move(table)), {}, {}, 0};
  for (std::size_t a = 0; a < g.group.order(); ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      out.labels.push_back("(" + g.labels[a] + "," + h.labels[b] + ")");
    }
  }
  return out;
}

// Names: Cn, Sn, An, Dm (order 2m), Q8, Dic3, and products such as C2xC2.
inline LabeledGroup named_group(std::string_view name) {
  if (auto pos = name.find('x'); pos != std::string_view::npos) {
    return direct_product(named_group(name.substr(0, pos)), named_group(name.substr(pos + 1)));
  }
  auto number = [&](std::size_t from) -> std::size_t {
    auto rest = name.substr(from);
    if (rest.empty() || !std::all_of(rest.begin(), rest.end(), [](char c) {
          return std::isdigit(static_cast<unsigned char>(c));
        })) {
      throw Error(ErrorKind::UnknownName, "unknown group '" + std::string(name) + "'");
    }
    return std::stoul(std::string(rest));
  };
  if (name == "Q8") {
    return metacyclic_group("Q8", 4, 2, 3, 2);
  }
  if (name == "Dic3") {
    return metacyclic_group("Dic3", 6, 2, 5, 3);
  }
  if (name.starts_with("C")) {
    auto n = number(1);
    if (n == 0) {
      throw Error(ErrorKind::UnknownName, "C0 is not a group");
    }
    return cyclic_group(n);
  }
  if (name.starts_with("S")) {
    auto n = number(1);
    if (n == 0 || n > 6) {
      throw Error(ErrorKind::UnknownName, "symmetric groups are limited to degree 1..6");
    }
    return symmetric_group(n);
  }
  if (name.starts_with("A")) {
    auto n = number(1);
    if (n < 3 || n > 6) {
      throw Error(ErrorKind::UnknownName, "alternating groups are limited to degree 3..6");
    }
    return alternating_group(n);
  }
  if (name.starts_with("D")) {
    auto m = number(1);
    if (m < 3) {
      throw Error(ErrorKind::UnknownName, "dihedral groups need m >= 3");
    }
    return dihedral_group(m);
  }
  throw Error(ErrorKind::UnknownName, "unknown group '" + std::string(name) + "'");
}

// One representative of each isomorphism class of groups of order 1..12.
inline std::vector<LabeledGroup> groups_of_order(std::size_t n) {
  static std::map<std::size_t, std::vector<std::string>> const catalog{
      {1, {"C1"}},
      {2, {"C2"}},
      {3, {"C3"}},
      {4, {"C4", "C2xC2"}},
      {5, {"C5"}},
      {6, {"C6", "S3"}},
      {7, {"C7"}},
      {8, {"C8", "C4xC2", "C2xC2xC2", "D4", "Q8"}},
      {9, {"C9", "C3xC3"}},
      {10, {"C10", "D5"}},
      {11, {"C11"}},
      {12, {"C12", "C6xC2", "D6", "A4", "Dic3"}},
  };
  auto it = catalog.find(n);
  if (it == catalog.end()) {
    throw Error(ErrorKind::CapExceeded,
                "the group catalog covers orders 1..12, not " + std::to_string(n));
  }
  std::vector<LabeledGroup> out;
  for (auto const& name : it->second) {
    out.push_back(named_group(name));
  }
  return out;
}

}  // namespace semibrace
