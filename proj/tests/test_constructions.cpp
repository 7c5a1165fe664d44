#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace semibrace;
using fixtures::phi3;
using fixtures::s3;
using fixtures::sd12;

TEST_CASE("trivial semi-braces", "[constructions]") {
  CHECK(trivial_semibrace(cyclic_group(1).group).order() == 1);
  auto b = trivial_semibrace(s3().group);
  CHECK(b.idempotents().is_full());
  CHECK(b.group_elements() == Subset(6, {0}));
  auto a5 = trivial_semibrace(alternating_group(5).group);
  CHECK(a5.order() == 60);
  CHECK(a5.is_trivial());
}

TEST_CASE("phi-type semi-braces", "[constructions][phi]") {
  auto const& g = s3().group;
  std::vector<element_t> id(6), constant(6, 0);
  for (element_t i = 0; i < 6; ++i) {
    id[i] = i;
  }
  auto skew = from_idempotent_endomorphism(g, id);
  CHECK(skew.is_skew_brace());
  auto triv = from_idempotent_endomorphism(g, constant);
  CHECK(triv.is_trivial());

  auto phi = fixtures::phi_on_s3();
  auto b = from_idempotent_endomorphism(g, phi);
  Subset image(6), kernel(6);
  for (element_t a = 0; a < 6; ++a) {
    image.insert(phi[a]);
    if (phi[a] == 0) {
      kernel.insert(a);
    }
    // rho_0 = phi
    CHECK(b.rho(0, a) == phi[a]);
  }
  CHECK(b.group_elements() == image);
  CHECK(b.idempotents() == kernel);
  CHECK(is_E_ideal(b).is_ideal);
  image.for_each([&](element_t x) {
    image.for_each([&](element_t y) { CHECK(b.add(x, y) == g.op(y, x)); });
  });

  auto bad = phi;
  bad[3] = 2;  // an even permutation sent to (1 2)
  try {
    from_idempotent_endomorphism(g, bad);
    FAIL("expected NotEndomorphism");
  } catch (Error const& e) {
    CHECK(e.kind() == ErrorKind::NotEndomorphism);
  }
  // x -> x^2 on C3 is an automorphism but not idempotent
  auto c3 = cyclic_group(3).group;
  try {
    from_idempotent_endomorphism(c3, {0, 2, 1});
    FAIL("expected NotIdempotent");
  } catch (Error const& e) {
    CHECK(e.kind() == ErrorKind::NotIdempotent);
  }
}

TEST_CASE("semidirect products", "[constructions][semidirect]") {
  SECTION("trivial action gives the direct product") {
    auto x = group_skew_brace(s3().group);
    auto y = trivial_semibrace(cyclic_group(2).group);
    auto d = direct_product(x, y);
    auto sd = semidirect_product(y, x, trivial_action(2, 6), Orientation::trivial_acts_on_skew);
    CHECK(d.add_table() == sd.add_table());
    CHECK(d.mul_table() == sd.mul_table());
  }
  SECTION("SD12") {
    auto b = sd12().structure;
    CHECK(b.order() == 12);
    CHECK(b.idempotents().size() == 2);
    CHECK_FALSE(is_E_ideal(b).is_ideal);
  }
  SECTION("C3 trivial acted on by inversion") {
    auto t = trivial_semibrace(cyclic_group(3).group);
    auto a = trivial_semibrace(cyclic_group(2).group);
    // a trivial brace on C2 is a skew brace only in the sense of K_C2
    auto k = group_skew_brace(cyclic_group(2).group);
    ActionTable inversion{{{0, 1, 2}, {0, 2, 1}}};
    auto b = semidirect_product(t, k, inversion, Orientation::skew_acts_on_trivial);
    CHECK(b.order() == 6);
    CHECK(b.idempotents().size() == 3);
    CHECK(is_E_ideal(b).is_ideal);
    CHECK_THROWS_AS(semidirect_product(t, a, inversion, Orientation::skew_acts_on_trivial), Error);
  }
  SECTION("action checks") {
    auto t = trivial_semibrace(cyclic_group(3).group);
    auto k = group_skew_brace(cyclic_group(2).group);
    try {
      semidirect_product(t, k, ActionTable{{{0, 1, 2}, {1, 0, 2}}}, Orientation::skew_acts_on_trivial);
      FAIL("expected NotAutomorphism");
    } catch (Error const& e) {
      CHECK(e.kind() == ErrorKind::NotAutomorphism);
    }
    auto k3 = group_skew_brace(cyclic_group(3).group);
    auto c3 = trivial_semibrace(cyclic_group(3).group);
    // inversion attached to each element of C3 is not a homomorphism
    ActionTable bad{{{0, 1, 2}, {0, 2, 1}, {0, 2, 1}}};
    try {
      semidirect_product(c3, k3, bad, Orientation::skew_acts_on_trivial);
      FAIL("expected NotAHomomorphism");
    } catch (Error const& e) {
      CHECK(e.kind() == ErrorKind::NotAHomomorphism);
    }
  }
}

TEST_CASE("direct products", "[constructions][direct]") {
  auto point = trivial_semibrace(cyclic_group(1).group);
  auto x = phi3().structure;
  auto xp = direct_product(x, point);
  CHECK(are_isomorphic(x, xp));

  auto b = direct_product(group_skew_brace(s3().group), trivial_semibrace(cyclic_group(2).group));
  CHECK(is_E_ideal(b).is_ideal);
  // not of phi type: + on G x {0} is not the reversed product
  bool reversed = true;
  b.group_elements().for_each([&](element_t u) {
    b.group_elements().for_each([&](element_t v) { reversed = reversed && b.add(u, v) == b.mul(v, u); });
  });
  CHECK_FALSE(reversed);

  auto sq = direct_product(x, x);
  CHECK(sq.order() == 36);
  CHECK(is_E_ideal(sq).is_ideal);
  CHECK(sq.group_elements().size() == 4);
  CHECK(sq.idempotents().size() == 9);
}

TEST_CASE("skew brace embedding", "[constructions][skew]") {
  auto k4 = group_skew_brace(cyclic_group(4).group);
  CHECK(k4.is_skew_brace());
  for (element_t a = 0; a < 4; ++a) {
    for (element_t c = 0; c < 4; ++c) {
      CHECK(k4.lambda(a, c) == c);
      CHECK(k4.lambda(a, c) == k4.add(k4.neg(a), k4.mul(a, c)));
    }
  }
  auto g = g_substructure(phi3().structure);
  auto again = skew_brace_embed(g.structure.add_table(), g.structure.mul_table());
  CHECK(again.order() == 2);
  CHECK(again.is_skew_brace());
  auto phi = phi3().structure;
  try {
    skew_brace_embed(phi.add_table(), phi.mul_table());
    FAIL("expected AddNotAGroup");
  } catch (Error const& e) {
    CHECK(e.kind() == ErrorKind::AddNotAGroup);
  }
}

TEST_CASE("quotients", "[constructions][quotient]") {
  auto b = phi3().structure;
  auto whole = quotient(b, Subset::full(6));
  CHECK(whole.structure.order() == 1);
  auto same = quotient(b, Subset(6, {0}));
  CHECK(are_isomorphic(same.structure, b));
  auto by_e = quotient(b, b.idempotents());
  CHECK(by_e.structure.order() == 2);
  CHECK(are_isomorphic(by_e.structure, g_substructure(b).structure));

  try {
    quotient(b, Subset(6, {0, 1}));
    FAIL("expected NotAnIdeal");
  } catch (Error const& e) {
    CHECK(e.kind() == ErrorKind::NotAnIdeal);
  }

  // the projection is a homomorphism for every ideal of every small structure
  for (auto const& f : fixtures::enumerated_corpus(4)) {
    auto const& s = f.structure;
    for (auto const& i : checks::test_subsets(s)) {
      if (!is_ideal_thm(s, i).is_ideal) {
        continue;
      }
      auto q = quotient(s, i);
      for (element_t x = 0; x < s.order(); ++x) {
        for (element_t y = 0; y < s.order(); ++y) {
          CHECK(q.projection[s.add(x, y)] == q.structure.add(q.projection[x], q.projection[y]));
          CHECK(q.projection[s.mul(x, y)] == q.structure.mul(q.projection[x], q.projection[y]));
        }
      }
    }
  }
}

TEST_CASE("semidirect round trip on E-ideal structures", "[constructions][semidirect]") {
  for (auto const& f : fixtures::enumerated_corpus(6)) {
    if (!is_E_ideal(f.structure).is_ideal) {
      continue;
    }
    INFO(f.name);
    CHECK(checks::semidirect_round_trip(f.structure));
  }
  CHECK(checks::semidirect_round_trip(phi3().structure));
}

TEST_CASE("substructures", "[constructions]") {
  auto b = phi3().structure;
  auto e = substructure(b, b.idempotents());
  CHECK(e.structure.is_trivial());
  CHECK(e.structure.order() == 3);
  CHECK_THROWS_AS(substructure(b, Subset(6, {0, 1, 2})), Error);
}
