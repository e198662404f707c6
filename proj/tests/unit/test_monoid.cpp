#include "doctest.h"
#include "latkit/errors.hpp"
#include "latkit/monoid.hpp"

using namespace latkit;

TEST_CASE("standard monoids") {
  CHECK(is_group(cyclic_group(5)));
  CHECK(is_cancellative(cyclic_group(5)));
  CHECK_FALSE(is_cancellative(max_monoid(2)));
  CHECK_FALSE(is_cancellative(truncated_addition(3)));
  CHECK(truncated_addition(3).op(2, 1) == 2);
  CHECK_THROWS_AS(FiniteMonoid(2, {0, 1, 1, 2}, 0), InvalidInput);
  CHECK_THROWS_AS(FiniteMonoid(2, {0, 1, 1, 1}, 1), InvalidInput);
  CHECK(FiniteMonoid::from_table(2, {1, 0, 0, 1}).identity() == 1);
}

TEST_CASE("commutative monoid counts") {
  CHECK(enumerate_commutative_monoids(1).size() == 1);
  CHECK(enumerate_commutative_monoids(2).size() == 2);
  CHECK(enumerate_commutative_monoids(4).size() == 94);
  for (const FiniteMonoid& M : enumerate_commutative_monoids(3)) {
    CHECK(M.is_commutative());
    CHECK(M.identity() == 0);
  }
}

TEST_CASE("associated orders") {
  const QuasiOrder T = associated_order(truncated_addition(4));
  CHECK(T.is_partial_order());
  CHECK(T.leq(1, 3));
  CHECK_FALSE(T.leq(3, 1));
  const QuasiOrder G = associated_order(cyclic_group(3));
  CHECK_FALSE(G.is_partial_order());
  const MonoidClass c = monoid_class(max_monoid(3));
  CHECK(c.poset_monoid);
  CHECK(c.lattice_monoid);
  CHECK_FALSE(c.cancellative);
  CHECK(c.invertibles.indices() == std::vector<Element>{0});
  CHECK(monoid_class(cyclic_group(4)).invertibles.count() == 4);
}

TEST_CASE("subtraction") {
  const Difference d = subtract(truncated_addition(4), 3, 1);
  CHECK(d.solutions == 2);
  CHECK_FALSE(d.value.has_value());
  const Difference e = subtract(truncated_addition(4), 2, 1);
  CHECK(e.value == Element{1});
  CHECK(subtract(truncated_addition(4), 1, 2).solutions == 0);
}

TEST_CASE("group completion") {
  const GroupCompletion g = group_completion(cyclic_group(4));
  CHECK(g.group.size() == 4);
  CHECK(is_group(g.group));
  for (Element a = 0; a < 4; ++a) {
    for (Element b = 0; b < 4; ++b) {
      CHECK(g.embedding[cyclic_group(4).op(a, b)] == g.group.op(g.embedding[a], g.embedding[b]));
    }
  }
  CHECK_THROWS_AS(group_completion(max_monoid(2)), NotCancellative);
  CHECK_THROWS_AS(group_completion(FiniteMonoid(2, {0, 1, 1, 1}, 0)), NotCancellative);
  const FiniteMonoid nc(3, {0, 1, 2, 1, 1, 1, 2, 2, 2}, 0);
  CHECK_FALSE(nc.is_commutative());
  CHECK_THROWS_AS(group_completion(nc), PreconditionFailed);
}

TEST_CASE("vector monoids") {
  const VectorMonoid N(3);
  const Vec a{1, 0, 2}, b{0, 1, 1};
  CHECK(N.add(a, b) == Vec{1, 1, 3});
  CHECK(N.join(a, b) == Vec{1, 1, 2});
  CHECK(N.meet(a, b) == Vec{0, 0, 1});
  CHECK_FALSE(N.subtract(a, b).has_value());
  CHECK(N.subtract(a, Vec{1, 0, 0}) == Vec{0, 0, 2});
  CHECK(N.leq(Vec{0, 0, 1}, a));
  CHECK_FALSE(N.contains(Vec{-1, 0, 0}));
  CHECK(VectorMonoid(2, true).contains(Vec{-1, 3}));
  CHECK(N.chi(1) == Vec{0, 1, 0});
  CHECK_THROWS_AS(N.add(a, Vec{1}), InvalidInput);
}

TEST_CASE("vector completion is Z^I") {
  const VectorMonoid N(2);
  const VectorCompletion C(N);
  CHECK(C.make(Vec{3, 1}, Vec{1, 4}) == C.make(Vec{2, 0}, Vec{0, 3}));
  CHECK(C.to_integers(C.make(Vec{3, 1}, Vec{1, 4})) == Vec{2, -3});
  CHECK(C.from_integers(Vec{-2, 5}) == C.make(Vec{0, 5}, Vec{2, 0}));
  CHECK(C.to_integers(C.add(C.embed(Vec{1, 2}), C.negate(C.embed(Vec{1, 2})))) == Vec{0, 0});
  const auto w = C.equivalence_witness(Vec{3, 1}, Vec{1, 4}, Vec{2, 0}, Vec{0, 3});
  REQUIRE(w.has_value());
  CHECK(N.add(Vec{3, 1}, w->first) == N.add(Vec{2, 0}, w->second));
  CHECK_FALSE(C.equivalence_witness(Vec{1, 0}, Vec{0, 0}, Vec{0, 1}, Vec{0, 0}).has_value());
}

TEST_CASE("distributive laws on N^I") {
  for (std::size_t d = 1; d <= 4; ++d) {
    const VectorMonoid N(d);
    for (DistributiveLaw law : {DistributiveLaw::plus_join, DistributiveLaw::plus_meet,
                                DistributiveLaw::plus_join_inf, DistributiveLaw::plus_meet_inf}) {
      const LawReport r = check_distributivity(N, law, 500, 11);
      CHECK(r.holds);
      CHECK_FALSE(r.exhaustive);
      CHECK(r.instances == 500);
      CHECK(distributive_law_from_string(to_string(law)) == law);
    }
    CHECK(check_disjoint_sum_laws(N, 500, 5).holds);
    CHECK(check_subtraction_laws(N, 500, 5).holds);
  }
}

TEST_CASE("law checks are deterministic in the seed") {
  const VectorMonoid N(3);
  const LawReport a = check_distributivity(N, DistributiveLaw::plus_meet_inf, 300, 42);
  const LawReport b = check_distributivity(N, DistributiveLaw::plus_meet_inf, 300, 42);
  CHECK(a.instances == b.instances);
  CHECK(a.seed == b.seed);
}

TEST_CASE("finite law checks discriminate") {
  CHECK_FALSE(check_subtraction_laws(truncated_addition(3)).holds);
  CHECK(check_distributivity(max_monoid(3), DistributiveLaw::plus_join).holds);
  bool violation = false;
  for (const FiniteMonoid& M : enumerate_commutative_monoids(4)) {
    if (!associated_order(M).is_partial_order()) continue;
    violation = violation || !check_distributivity(M, DistributiveLaw::plus_meet).holds;
  }
  CHECK(violation);
  CHECK_THROWS_AS(check_distributivity(cyclic_group(3), DistributiveLaw::plus_join), PreconditionFailed);
}

TEST_CASE("closure under subtraction") {
  const FiniteMonoid Z = cyclic_group(4);
  CHECK(closed_under_subtraction(Z, Subset::of(4, {0, 2})).holds);
  CHECK_FALSE(closed_under_subtraction(Z, Subset::of(4, {0, 1})).holds);
  const VectorMonoid N(2);
  auto even = [](const Vec& v) { return v[0] % 2 == 0 && v[1] % 2 == 0; };
  auto diag = [](const Vec& v) { return v[0] <= v[1]; };
  CHECK(closed_under_subtraction(N, even, 4).holds);
  CHECK_FALSE(closed_under_subtraction(N, diag, 4).holds);
}
