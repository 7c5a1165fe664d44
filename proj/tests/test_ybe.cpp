#include <catch_amalgamated.hpp>

#include <random>
#include <set>

#include "support.hpp"

using namespace semibrace;
using fixtures::phi3;
using fixtures::s3;

namespace {

// the composite maps of both sides of the braid relation, computed with
// explicit triples
bool braid_holds_naive(SolutionMap const& r) {
  auto const n = r.order();
  for (element_t a = 0; a < n; ++a) {
    for (element_t b = 0; b < n; ++b) {
      for (element_t c = 0; c < n; ++c) {
        std::array<element_t, 3> x{a, b, c};
        std::array<element_t, 3> y{a, b, c};
        auto on12 = [&](std::array<element_t, 3>& t) { std::tie(t[0], t[1]) = r(t[0], t[1]); };
        auto on23 = [&](std::array<element_t, 3>& t) { std::tie(t[1], t[2]) = r(t[1], t[2]); };
        on12(x), on23(x), on12(x);
        on23(y), on12(y), on23(y);
        if (x != y) {
          return false;
        }
      }
    }
  }
  return true;
}

// least p in [2, limit] with r^p = r, by repeated composition
std::optional<std::uint64_t> period_naive(SolutionMap const& r, std::uint64_t limit) {
  auto power = r;
  for (std::uint64_t p = 2; p <= limit; ++p) {
    power = power.then(r);
    if (power == r) {
      return p;
    }
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("solution of a trivial semi-brace", "[ybe]") {
  auto t = trivial_semibrace(s3().group);
  auto r = solution_of(t);
  for (element_t a = 0; a < 6; ++a) {
    for (element_t b = 0; b < 6; ++b) {
      CHECK(r(a, b) == Pair{t.mul(a, b), 0});
    }
  }
  auto p = properties(r);
  CHECK(p.idempotent);
  CHECK_FALSE(p.bijective);
  CHECK_FALSE(p.involutive);
  CHECK(p.period_status == PeriodStatus::exact);
  CHECK(p.period == 2);
  CHECK(check_braid(r));
}

TEST_CASE("flip", "[ybe]") {
  auto r = SolutionMap::flip(4);
  auto p = properties(r);
  CHECK(p.bijective);
  CHECK(p.involutive);
  CHECK_FALSE(p.idempotent);
  CHECK(p.left_nondegenerate);
  CHECK(p.right_nondegenerate);
  CHECK(p.period == 3);
  CHECK(check_braid(r));
  CHECK(properties(SolutionMap::flip(1)).period == 2);
}

TEST_CASE("skew braces of abelian groups give the flip", "[ybe]") {
  auto k = group_skew_brace(cyclic_group(4).group);
  CHECK(solution_of(k) == SolutionMap::flip(4));
  auto ks3 = solution_of(group_skew_brace(s3().group));
  CHECK(ks3 != SolutionMap::flip(6));
  CHECK(properties(ks3).bijective);
  CHECK(check_braid(ks3));
}

TEST_CASE("the phi-type structure", "[ybe]") {
  auto b = phi3().structure;
  auto r = solution_of(b);
  CHECK(check_braid(r));
  CHECK(braid_holds_naive(r));
  auto p = properties(r);
  CHECK(p.left_nondegenerate);
  auto s = restrict_to_E(b, r);
  CHECK(s.embedding == b.idempotents().elements());
  CHECK(properties(s.map).idempotent);
  CHECK(s.map.then(s.map) == s.map);

  auto broken = r;
  auto [u, v] = r(1, 2);
  broken.set(1, 2, {v, u});
  REQUIRE(broken != r);
  auto w = braid_witness(broken);
  REQUIRE(w);
  CHECK_FALSE(braid_holds_naive(broken));
}

TEST_CASE("restriction needs E x E closed", "[ybe]") {
  auto b = phi3().structure;
  auto r = SolutionMap::flip(6);
  auto g = b.group_elements().elements();
  auto e = b.idempotents().elements();
  REQUIRE(g.size() > 1);
  r.set(e[0], e[0], {g[1], g[1]});
  CHECK_THROWS_AS(restrict_to_E(b, r), Error);
}

TEST_CASE("properties against brute force", "[ybe][oracle]") {
  std::mt19937 rng(20261016);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t n = 1 + trial % 3;
    std::uniform_int_distribution<element_t> pick(0, n - 1);
    SolutionMap r;
    if (trial % 2 == 0) {
      // random bijection of X x X
      std::vector<Pair> cells;
      for (element_t a = 0; a < n; ++a) {
        for (element_t b = 0; b < n; ++b) {
          cells.push_back({a, b});
        }
      }
      std::shuffle(cells.begin(), cells.end(), rng);
      r = SolutionMap(n, cells);
    } else {
      r = SolutionMap::from_function(n, [&](element_t, element_t) { return Pair{pick(rng), pick(rng)}; });
    }
    auto p = properties(r);
    auto twice = r.then(r);
    CHECK(p.involutive == (twice == SolutionMap::flip(n).then(SolutionMap::flip(n))));
    CHECK(p.idempotent == (twice == r));
    std::set<Pair> image(r.table().begin(), r.table().end());
    CHECK(p.bijective == (image.size() == n * n));
    // a period on 9 points is at most lcm(1..9) + 1 = 2521
    auto naive = period_naive(r, 2521);
    if (p.period_status == PeriodStatus::exact) {
      CHECK(naive == p.period);
    } else {
      CHECK(p.period_status == PeriodStatus::none);
      CHECK_FALSE(naive);
    }
    CHECK(check_braid(r) == braid_holds_naive(r));
  }
}

TEST_CASE("braid relation across the corpus", "[ybe]") {
  auto corpus = fixtures::fixture_corpus();
  for (auto& f : fixtures::enumerated_corpus(6)) {
    corpus.push_back(std::move(f));
  }
  for (auto const& f : corpus) {
    INFO(f.name);
    auto r = solution_of(f.structure);
    CHECK(braid_holds_naive(r));
    CHECK(checks::ybe_violations(f.structure) == 0);
    auto s = restrict_to_E(f.structure, r).map;
    CHECK(s.then(s) == s);
  }
}
