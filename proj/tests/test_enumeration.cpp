#include <catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "naive_oracle.hpp"
#include "support.hpp"

using namespace semibrace;
using fixtures::phi3;
using fixtures::s3;

TEST_CASE("raw enumeration matches brute force", "[enumeration][oracle]") {
  for (std::size_t n = 1; n <= 4; ++n) {
    INFO("order " << n);
    oracle::NaiveOracle oracle{n};
    auto [labelled, classes] = oracle.run();
    auto e = enumerate(n);
    CHECK(e.complete);
    CHECK(e.structures.size() == classes.size());
    std::set<oracle::Canonical> seen;
    for (auto const& b : e.structures) {
      auto c = oracle.canonical(b.add_table().cells(), b.mul_table().cells());
      CHECK(classes.count(c) == 1);
      seen.insert(c);
    }
    CHECK(seen.size() == e.structures.size());
    // orbit-stabilizer: labelled count = sum over classes of (n-1)! / |Aut|
    std::size_t total = 0;
    std::size_t fact = 1;
    for (std::size_t k = 2; k < n; ++k) {
      fact *= k;
    }
    for (auto const& b : e.structures) {
      total += fact / automorphisms(b).size();
    }
    CHECK(total == labelled);
  }
}

TEST_CASE("raw enumeration at orders 5 and 6", "[enumeration]") {
  for (std::size_t n : {5, 6}) {
    auto e = enumerate(n);
    for (std::size_t i = 0; i < e.structures.size(); ++i) {
      for (std::size_t j = i + 1; j < e.structures.size(); ++j) {
        CHECK_FALSE(are_isomorphic(e.structures[i], e.structures[j]));
      }
    }
    // every group of the order carries at least its trivial semi-brace and K_G
    for (auto const& h : groups_of_order(n)) {
      auto in = [&](Semibrace const& b) {
        return std::any_of(e.structures.begin(), e.structures.end(),
                           [&](Semibrace const& x) { return bool(are_isomorphic(x, b)); });
      };
      CHECK(in(trivial_semibrace(h.group)));
      CHECK(in(group_skew_brace(h.group)));
    }
  }
  auto six = enumerate(6);
  CHECK(std::any_of(six.structures.begin(), six.structures.end(),
                    [](Semibrace const& x) { return bool(are_isomorphic(x, phi3().structure)); }));
}

TEST_CASE("isomorphism search", "[enumeration][iso]") {
  auto b = phi3().structure;
  auto self = are_isomorphic(b, b);
  REQUIRE(self);
  CHECK_FALSE(self.exhausted);

  std::mt19937 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<element_t> sigma(6);
    std::iota(sigma.begin(), sigma.end(), 0);
    std::shuffle(sigma.begin() + 1, sigma.end(), rng);
    auto moved = validate(b.add_table().relabeled(sigma), b.mul_table().relabeled(sigma));
    auto cert = are_isomorphic(b, moved);
    REQUIRE(cert);
    auto const& f = *cert.bijection;
    for (element_t x = 0; x < 6; ++x) {
      for (element_t y = 0; y < 6; ++y) {
        CHECK(f[b.add(x, y)] == moved.add(f[x], f[y]));
        CHECK(f[b.mul(x, y)] == moved.mul(f[x], f[y]));
      }
    }
  }

  auto t = trivial_semibrace(s3().group);
  auto none = are_isomorphic(b, t);
  CHECK_FALSE(none);
  CHECK_FALSE(none.exhausted);

  // same invariants coarse enough to force the backtracking
  auto c4 = enumerate(4);
  for (std::size_t i = 0; i < c4.structures.size(); ++i) {
    for (std::size_t j = 0; j < c4.structures.size(); ++j) {
      CHECK(bool(are_isomorphic(c4.structures[i], c4.structures[j])) == (i == j));
    }
  }

  CHECK_THROWS_AS(are_isomorphic(b, trivial_semibrace(cyclic_group(2).group)), Error);
  try {
    are_isomorphic(b, trivial_semibrace(cyclic_group(2).group));
  } catch (Error const& e) {
    CHECK(e.kind() == ErrorKind::OrderMismatch);
  }
}

TEST_CASE("automorphisms", "[enumeration][iso]") {
  CHECK(group_automorphisms(s3().group).size() == 6);
  CHECK(group_automorphisms(cyclic_group(5).group).size() == 4);
  CHECK(automorphisms(trivial_semibrace(s3().group)).size() == 6);
  CHECK(automorphisms(group_skew_brace(cyclic_group(4).group)).size() == 2);
}

TEST_CASE("enumeration limits", "[enumeration]") {
  CHECK(enumerate(1).structures.size() == 1);
  CHECK_THROWS_AS(enumerate(7), Error);
  try {
    enumerate(7, 6);
  } catch (Error const& e) {
    CHECK(e.kind() == ErrorKind::CapExceeded);
  }
  CHECK_THROWS_AS(enumerate(0), Error);
}

TEST_CASE("family mode", "[enumeration][family]") {
  auto six = enumerate(6, 6, EnumerationMode::family);
  CHECK_FALSE(six.complete);
  CHECK(std::any_of(six.structures.begin(), six.structures.end(),
                    [](Semibrace const& x) { return bool(are_isomorphic(x, phi3().structure)); }));
  auto raw = enumerate(6);
  for (auto const& b : six.structures) {
    CHECK(std::any_of(raw.structures.begin(), raw.structures.end(),
                      [&](Semibrace const& x) { return bool(are_isomorphic(x, b)); }));
  }

  auto twelve = enumerate(12, 6, EnumerationMode::family);
  CHECK(std::any_of(twelve.structures.begin(), twelve.structures.end(),
                    [](Semibrace const& x) { return bool(are_isomorphic(x, fixtures::sd12().structure)); }));
  for (std::size_t i = 0; i < twelve.structures.size(); ++i) {
    for (std::size_t j = i + 1; j < twelve.structures.size(); ++j) {
      CHECK_FALSE(are_isomorphic(twelve.structures[i], twelve.structures[j]));
    }
  }
}

TEST_CASE("counterexample search", "[enumeration][search]") {
  auto r = search_counterexample(Question::right_nil_not_right_nilpotent, 4);
  CHECK_FALSE(r.witness);
  CHECK(r.exhaustive);
  CHECK(r.orders_searched == std::vector<std::size_t>{1, 2, 3, 4});
  std::size_t expected = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    expected += enumerate(n).structures.size();
  }
  CHECK(r.structures_checked == expected);
  CHECK(r.rejected == 0);

  auto l = search_counterexample(Question::left_nil_not_left_nilpotent, 4);
  CHECK_FALSE(l.witness);
  CHECK(to_string(l.question) == "left_nil");

  auto partial = search_counterexample(Question::right_nil_not_right_nilpotent, 7, 5);
  CHECK_FALSE(partial.exhaustive);
}

TEST_CASE("a lying classifier is caught by re-validation", "[enumeration][search]") {
  auto liar = [](Semibrace const& b) {
    auto p = classify(b, Strictness::record);
    p.right_nil = true;
    p.right_nilpotent = false;
    return p;
  };
  auto r = search_counterexample(Question::right_nil_not_right_nilpotent, 3, 6, liar);
  CHECK_FALSE(r.witness);
  CHECK(r.rejected == r.structures_checked);
  CHECK(r.rejected > 0);
}

TEST_CASE("nil but not nilpotent at order 6", "[enumeration][search]") {
  // a o b = b + a on S3: b . b = 0 for every b, while B . B = A3 is stable
  auto const& g = s3().group;
  auto op = validate(g.table(), CayleyTable::from_function(6, [&](element_t a, element_t b) { return g.op(b, a); }));
  for (auto q : {Question::right_nil_not_right_nilpotent, Question::left_nil_not_left_nilpotent}) {
    auto below = search_counterexample(q, 5);
    CHECK_FALSE(below.witness);
    CHECK(below.exhaustive);

    auto r = search_counterexample(q, 6);
    REQUIRE(r.witness);
    CHECK_FALSE(r.exhaustive);
    CHECK(r.orders_searched.back() == 6);
    auto const& w = *r.witness;
    CHECK(are_isomorphic(w, op));
    // recomputed from the tables: a . b = -a + a o b - b in the group (B, +)
    auto neg = [&](element_t a) {
      for (element_t x = 0; x < 6; ++x) {
        if (w.add_table()(a, x) == 0) {
          return x;
        }
      }
      return element_t{0};
    };
    auto dot = [&](element_t a, element_t b) {
      return w.add_table()(w.add_table()(neg(a), w.mul_table()(a, b)), neg(b));
    };
    Subset products(6);
    for (element_t a = 0; a < 6; ++a) {
      CHECK(dot(a, a) == 0);
      for (element_t b = 0; b < 6; ++b) {
        products.insert(dot(a, b));
      }
    }
    CHECK(products.size() == 3);
    CHECK(right_series(w).terminal().size() == 3);
    CHECK(left_series(w).terminal().size() == 3);
  }
}
