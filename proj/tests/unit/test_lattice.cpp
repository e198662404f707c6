#include "doctest.h"
#include "latkit/constructions.hpp"
#include "latkit/errors.hpp"
#include "latkit/lattice.hpp"
#include "oracles.hpp"

using namespace latkit;

TEST_CASE("M3 and N5 are modular-law counterexamples") {
  const LatticeView M(m3());
  const LatticeView N(n5());
  CHECK(M.is_lattice());
  CHECK(N.is_lattice());
  CHECK_FALSE(is_distributive(M).holds);
  CHECK_FALSE(is_distributive(N).holds);
  CHECK(M.complements(1).size() == 2);
  CHECK_FALSE(classify(m3()).boolean);
}

TEST_CASE("classification of small orders") {
  const Classification p3 = classify(powerset(3));
  CHECK(p3.lattice);
  CHECK(p3.boolean);
  CHECK(p3.complete_lattice);
  const Classification bt = classify(bowtie());
  CHECK_FALSE(bt.lattice);
  CHECK_FALSE(bt.join_semilattice);
  CHECK_FALSE(bt.pointed);
  const Classification ac = classify(antichain(2));
  CHECK_FALSE(ac.complete_semilattice);
  CHECK(classify(with_bottom(antichain(2))).complete_semilattice);
  CHECK_FALSE(classify(with_bottom(antichain(2))).lattice);
  CHECK(classify(chain(4)).complete_lattice);
  CHECK_THROWS_AS(is_distributive(LatticeView(bowtie())), NotALattice);
}

TEST_CASE("finite JID and MID coincide with distributivity") {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const QuasiOrder& Q : enumerate_lattices(n)) {
      const LatticeView L(Q);
      const bool d = is_distributive(L).holds;
      const auto jid = check_jid(L);
      CHECK(jid.exhaustive);
      CHECK(jid.holds == d);
      CHECK(check_mid(L).holds == d);
    }
  }
}

TEST_CASE("convexity of the range counterexample") {
  const Verdict v = is_convex(powerset(3), Subset::of(8, {0, 1, 2, 7}));
  CHECK_FALSE(v.holds);
  REQUIRE(v.witness.elements.size() == 3);
  CHECK(v.witness.elements[2] == 3);
  CHECK(is_convex(powerset(3), Subset::of(8, {4, 5, 6, 7})).holds);
}

TEST_CASE("preregularity agrees with the oracle on all posets up to 4") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const QuasiOrder& P : enumerate_posets(n)) {
      const auto m = oracle::matrix_of(P);
      for (std::uint64_t A = 0; A < (1ull << n); ++A) {
        CHECK(is_preregular(P, Subset::from_mask(n, A)) == oracle::preregular(m, A));
        CHECK(is_convex(P, Subset::from_mask(n, A)).holds == oracle::convex(m, A));
      }
    }
  }
}

TEST_CASE("regular includes the empty family") {
  // {1, 2} in the chain 0 < 1 < 2: the empty sup inside is 1, outside 0.
  const QuasiOrder C = chain(3);
  const Subset A = Subset::of(3, {1, 2});
  CHECK(is_preregular(C, A));
  CHECK_FALSE(is_regular(C, A));
  CHECK(is_regular(C, C.universe()));
}

TEST_CASE("convex subsets of lattices are preregular; the bowtie is not a lattice") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const QuasiOrder& L : enumerate_lattices(n)) {
      for_each_subset(L.universe(), [&](const Subset& A) {
        if (is_convex(L, A).holds) CHECK(is_preregular(L, A));
      });
    }
  }
  const Subset A = Subset::of(4, {0, 1, 2});
  CHECK(is_convex(bowtie(), A).holds);
  CHECK_FALSE(is_preregular(bowtie(), A));
}

TEST_CASE("order closure is extensive, idempotent and monotone") {
  for (const QuasiOrder& L : enumerate_lattices(5)) {
    for_each_subset(L.universe(), [&](const Subset& A) {
      const Subset c = order_closure_up(L, A);
      CHECK(A.is_subset_of(c));
      CHECK(order_closure_up(L, c) == c);
      const Subset bigger = A | Subset::of(L.size(), {L.size() - 1});
      CHECK(c.is_subset_of(order_closure_up(L, bigger)));
    });
  }
}

TEST_CASE("boundedly order closed subsets") {
  const QuasiOrder P = powerset(2);
  const OrderClosedVerdict u = order_closed_checks(P, Subset::of(4, {1, 2}));
  CHECK(u.up_boc.holds);
  CHECK_FALSE(u.up_oc.holds);
  const QuasiOrder P3 = powerset(3);
  const OrderClosedVerdict v = order_closed_checks(P3, Subset::of(8, {1, 2, 7}));
  CHECK_FALSE(v.up_boc.holds);
  CHECK_FALSE(v.up_oc.holds);
  const OrderClosedVerdict w = order_closed_checks(P, P.universe());
  CHECK(w.up_boc.holds);
  CHECK(w.down_oc.holds);
}

TEST_CASE("flat subsets and flat completeness") {
  const QuasiOrder P = powerset(3);
  CHECK(is_flat(P, Subset::of(8, {1, 2, 4})));
  CHECK_FALSE(is_flat(P, Subset::of(8, {1, 3, 4})));
  CHECK(is_flat_complete(LatticeView(chain(4))).holds);
  CHECK(is_flat_complete(LatticeView(P)).holds);
}

TEST_CASE("density notions") {
  const LatticeView P(powerset(3));
  const Subset singletons = Subset::of(8, {1, 2, 4});
  CHECK(is_dense(P.order(), singletons).holds);
  CHECK(is_join_dense(P.order(), singletons).holds);
  CHECK(is_interval_predense(P.order(), singletons).holds);
  CHECK(is_basis(P, singletons | Subset::of(8, {0})).holds);
  CHECK(is_strongly_interval_predense(P, singletons | Subset::of(8, {0})).holds);

  const LatticeView C(chain(4));
  const Subset succ = Subset::of(4, {1, 2, 3});
  CHECK(is_join_dense(C.order(), succ).holds);
  CHECK_FALSE(is_strongly_interval_predense(C, succ).holds);
  CHECK_FALSE(is_join_dense(P.order(), Subset::of(8, {1, 2})).holds);
  CHECK(is_meet_subsemilattice(P, Subset::of(8, {0, 1, 2})).holds);
  CHECK_FALSE(is_meet_subsemilattice(P, Subset::of(8, {3, 5})).holds);
  CHECK(is_sublattice(P, Subset::of(8, {0, 1, 2, 3})));
  CHECK_THROWS_AS(is_basis(LatticeView(with_top(antichain(2))), Subset::of(3, {0})), PreconditionFailed);
}

TEST_CASE("join dense implies interval predense implies dense in pointed posets") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const QuasiOrder& P : enumerate_posets(n)) {
      if (!LatticeView(P).bottom()) continue;
      for_each_subset(P.universe(), [&](const Subset& D) {
        const bool jd = is_join_dense(P, D).holds;
        const bool ip = is_interval_predense(P, D).holds;
        if (jd) CHECK(ip);
        if (ip) CHECK(is_dense(P, D).holds);
      });
    }
  }
}

TEST_CASE("incompatible decompositions") {
  const LatticeView P(powerset(3));
  const auto d = incompatible_decomposition(P, Subset::of(8, {0, 1, 2, 4}), 7);
  REQUIRE(d.has_value());
  CHECK(d->indices() == std::vector<Element>{1, 2, 4});
  CHECK_FALSE(incompatible_decomposition(P, Subset::of(8, {3, 6}), 7).has_value());
}

TEST_CASE("subposet analysis bundles the checks") {
  const SubposetAnalysis a(powerset(2), Subset::of(4, {0, 1, 2}));
  CHECK(a.convex().holds);
  CHECK(a.preregular().holds());
  CHECK(a.dense().holds);
  CHECK(a.strongly_interval_predense().has_value());
}
