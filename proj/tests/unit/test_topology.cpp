#include "doctest.h"
#include "latkit/errors.hpp"
#include "latkit/constructions.hpp"
#include "latkit/topology.hpp"
#include "oracles.hpp"

using namespace latkit;

TEST_CASE("topology counts match brute force") {
  for (std::size_t n = 0; n <= 4; ++n) {
    CHECK(enumerate_topologies(n).size() == oracle::topology_count(n));
  }
  CHECK(enumerate_topologies(3).size() == 29);
  CHECK(enumerate_topologies(4).size() == 355);
}

TEST_CASE("validation of open families") {
  CHECK_THROWS_AS(FiniteTopology(2, {Subset(2), Subset::of(2, {0}), Subset::of(2, {1})}), InvalidInput);
  CHECK_NOTHROW(FiniteTopology(2, {Subset(2), Subset::of(2, {1}), Subset::full(2)}));
  const FiniteTopology g = FiniteTopology::generated(3, {Subset::of(3, {0}), Subset::of(3, {1})});
  CHECK(g.opens().size() == 5);
}

TEST_CASE("interior, closure and regular opens in the Sierpinski space") {
  const FiniteTopology S = sierpinski();
  CHECK(S.interior(Subset::of(2, {0})).empty());
  CHECK(S.closure(Subset::of(2, {1})) == Subset::full(2));
  CHECK(S.is_closed(Subset::of(2, {0})));
  CHECK_FALSE(is_regular_open(S, Subset::of(2, {1})));
  CHECK(is_regular_open(S, Subset::full(2)));
  CHECK(regular_opens(S).size() == 2);
  CHECK(is_nowhere_dense(S, Subset::of(2, {0})));
  CHECK(S.neighbourhood(0) == Subset::full(2));
}

TEST_CASE("regular open algebras are Boolean") {
  for (std::size_t n = 0; n <= 4; ++n) {
    for (const FiniteTopology& T : enumerate_topologies(n)) {
      const BooleanAlgebraView ro = ro_algebra(T);
      CHECK(classify(ro.lattice.order()).boolean);
      for (Element i = 0; i < ro.members.size(); ++i) {
        CHECK(is_regular_open(T, ro.members[i]));
        CHECK(ro.index_of(ro.members[i]) == i);
      }
    }
  }
}

TEST_CASE("finite spaces are Baire") {
  for (std::size_t n = 0; n <= 4; ++n) {
    for (const FiniteTopology& T : enumerate_topologies(n)) {
      CHECK(is_baire(T));
      CHECK(largest_open_meager(T).empty());
    }
  }
}

TEST_CASE("meager sets and the Baire property") {
  const FiniteTopology S = sierpinski();
  const auto ideal = meager_ideal(S);
  CHECK(ideal.size() == 2);
  CHECK(is_meager(S, Subset::of(2, {0})));
  CHECK_FALSE(is_meager(S, Subset::of(2, {1})));
  CHECK(has_baire_property(S, Subset::of(2, {0})));
  const FiniteTopology I = indiscrete_topology(2);
  CHECK_FALSE(has_baire_property(I, Subset::of(2, {0})));
}

TEST_CASE("category algebra is isomorphic to the regular open algebra") {
  for (std::size_t n = 0; n <= 4; ++n) {
    for (const FiniteTopology& T : enumerate_topologies(n)) {
      const CategoryAlgebra C = category_algebra(T);
      CHECK(verify_category_iso(C).holds);
      CHECK(classify(C.algebra.lattice.order()).boolean);
      CHECK(C.algebra.members.size() == C.ro.members.size());
    }
  }
}

TEST_CASE("clopen basis") {
  CHECK(clopen_basis_check(discrete_topology(3)).holds);
  CHECK_THROWS_AS(clopen_basis_check(sierpinski()), NotZeroDimensional);
}

TEST_CASE("sums and subspaces") {
  const FiniteTopology U = disjoint_union(sierpinski(), discrete_topology(1));
  CHECK(U.points() == 3);
  CHECK(U.opens().size() == 6);
  const FiniteTopology sub = subspace(U, Subset::of(3, {0, 2}));
  CHECK(sub == discrete_topology(2));
  const FiniteTopology P = FiniteTopology::from_preorder(chain(2));
  CHECK(P == sierpinski());
}
