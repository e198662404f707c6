#include <cstdlib>

#include "doctest.h"
#include "latkit/embedding.hpp"
#include "latkit/errors.hpp"
#include "oracles.hpp"

using namespace latkit;

namespace {

std::vector<oracle::Image> images(const EmbeddingCensus& c) {
  std::vector<oracle::Image> out;
  for (const CensusEntry& e : c.maps) out.push_back(e.image);
  return out;
}

std::shared_ptr<const QuasiOrder> share(QuasiOrder Q) { return std::make_shared<const QuasiOrder>(std::move(Q)); }

}  // namespace

TEST_CASE("census matches the brute-force oracle on small posets") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const QuasiOrder& P : enumerate_posets(n)) {
      for (std::size_t k = 1; k <= 4; ++k) {
        for (const QuasiOrder& Q : enumerate_posets(k)) {
          const auto pm = oracle::matrix_of(P), qm = oracle::matrix_of(Q);
          CensusOptions all;
          CHECK(images(enumerate_embeddings(P, Q, all)) == oracle::census(pm, qm, false));
          CensusOptions convex;
          convex.filters.convex_range = true;
          CHECK(images(enumerate_embeddings(P, Q, convex)) == oracle::census(pm, qm, true));
        }
      }
    }
  }
}

TEST_CASE("power-set census equals the formula") {
  CensusOptions opt;
  opt.filters.convex_range = true;
  const EmbeddingCensus c = enumerate_embeddings(powerset(2), powerset(3), opt);
  CHECK(c.maps.size() == 12);
  CHECK(images(c) == oracle::powerset_formula(2, 3));
  CHECK(powerset_formula_images(2, 3) == oracle::powerset_formula(2, 3));
  for (std::size_t i = 0; i < c.maps.size(); ++i) {
    const PowersetDecomposition d = powerset_decompose(c.map(i));
    CHECK(powerset_compose(d) == c.maps[i].image);
  }
}

TEST_CASE("census flags and filters") {
  CensusOptions opt;
  const EmbeddingCensus c = enumerate_embeddings(chain(2), powerset(2), opt);
  std::size_t convex = 0, down = 0;
  for (const CensusEntry& e : c.maps) {
    CHECK(e.embedding);
    convex += e.convex_range;
    down += e.downward_closed_range;
  }
  CHECK(c.maps.size() == 5);
  CHECK(convex == 4);
  CHECK(down == 2);
  CensusOptions monotone;
  monotone.filters.embedding = false;
  CHECK(enumerate_embeddings(chain(2), chain(2), monotone).maps.size() == 3);
  CensusOptions pre;
  pre.filters.preregular_range = true;
  for (const CensusEntry& e : enumerate_embeddings(chain(2), powerset(2), pre).maps) {
    CHECK(e.preregular_range);
  }
}

TEST_CASE("census is identical across thread counts") {
  CensusOptions one, many;
  one.threads = 1;
  many.threads = 4;
  one.filters.convex_range = many.filters.convex_range = true;
  CHECK(images(enumerate_embeddings(powerset(2), powerset(4), one)) ==
        images(enumerate_embeddings(powerset(2), powerset(4), many)));
  CHECK(default_thread_count() >= 1);
}

TEST_CASE("budget exceeded is reported") {
  CensusOptions opt;
  opt.budget_nodes = 10;
  opt.threads = 1;
  CHECK_THROWS_AS(enumerate_embeddings(powerset(3), powerset(4), opt), BudgetExceeded);
}

TEST_CASE("decompositions reject bad maps") {
  auto P2 = share(powerset(2));
  auto P3 = share(powerset(3));
  const MonotoneMap bad(P2, P3, {0, 1, 2, 7});
  CHECK_THROWS_AS(powerset_decompose(bad), NotConvexRange);
  const MonotoneMap collapse(P2, P3, {0, 0, 0, 0});
  CHECK_THROWS_AS(powerset_decompose(collapse), NotEmbedding);
  PowersetDecomposition d{2, 3, {0, 0}, 0};
  CHECK_THROWS_AS(powerset_compose(d), InvalidInput);
  PowersetDecomposition e{2, 3, {0, 1}, 1};
  CHECK_THROWS_AS(powerset_compose(e), InvalidInput);
}

TEST_CASE("chain-product decomposition round trips") {
  const ChainPower in(2, 2), out(3, 2);
  CensusOptions opt;
  opt.filters.convex_range = true;
  const EmbeddingCensus c = enumerate_embeddings(in.order(), out.order(), opt);
  CHECK(images(c) == chainprod_formula_images(2, 3, 2, 2));
  CHECK(c.maps.size() == 8);
  for (std::size_t i = 0; i < c.maps.size(); ++i) {
    const ChainProdDecomposition d = chainprod_decompose(c.map(i), in, out);
    CHECK(chainprod_compose(d) == c.maps[i].image);
  }
}

TEST_CASE("continuity of embeddings") {
  // {a, b} under a top t embedded into a, b < c < t: the sup of a and b moves.
  auto P = share(with_top(antichain(2)));
  auto Q = share(with_top(with_top(antichain(2))));
  const MonotoneMap s(P, Q, {0, 1, 3});
  const ContinuityReport r = continuity_checks(s);
  CHECK_FALSE(r.preserves_nonempty_sups.holds);
  CHECK(r.scott_continuous.holds);
  CHECK_FALSE(is_preregular(*Q, s.range()));
  const MonotoneMap t(P, Q, {0, 1, 2});
  CHECK(continuity_checks(t).preserves_nonempty_sups.holds);
}

TEST_CASE("preregular range implies continuity on small pairs") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const QuasiOrder& P : enumerate_posets(n)) {
      for (const QuasiOrder& Q : enumerate_posets(4)) {
        CHECK(verify_preregular_continuity(P, Q).holds());
      }
    }
  }
}

TEST_CASE("range properties and boundedness") {
  auto P = share(chain(2));
  auto Q = share(powerset(2));
  const MonotoneMap s(P, Q, {1, 3});
  const RangeReport r = range_property_checks(s);
  REQUIRE(r.interval_range.has_value());
  CHECK(*r.interval_range);
  const BoundednessReport b = boundedness_preservation(s);
  CHECK(b.bounded_to_bounded.holds);
  CHECK(b.unbounded_to_unbounded.holds);
  auto A = share(antichain(2));
  const MonotoneMap u(A, Q, {1, 2});
  CHECK_FALSE(boundedness_preservation(u).unbounded_to_unbounded.holds);
}

TEST_CASE("atoms map onto relative atoms") {
  const EmbeddingCensus c = enumerate_embeddings(powerset(2), powerset(3));
  for (std::size_t i = 0; i < c.maps.size(); ++i) {
    CHECK(atom_image_check(c.map(i)).holds);
    CHECK(minimal_image_check(c.map(i)).holds);
  }
  auto P = share(chain(2));
  const MonotoneMap collapse(P, P, {1, 1});
  CHECK_THROWS_AS(atom_image_check(collapse), NotEmbedding);
}

TEST_CASE("extension from a basis") {
  auto L = share(powerset(2));
  auto M = share(powerset(3));
  const Subset B = Subset::of(4, {0, 1, 2});
  const std::vector<Element> image{4, 5, 6, 7};
  std::vector<Element> sigma{4, 5, 6, LatticeView::kAbsent};
  const ConvexityTransferReport r = verify_convexity_transfer(L, B, M->universe(), M, sigma);
  CHECK(r.holds());
  CHECK(r.extension == image);
  CHECK(r.extensions_found == 1);
  const MonotoneMap e = extend_from_join_dense(L, B, sigma, M);
  CHECK(std::vector<Element>(e.image().begin(), e.image().end()) == image);
}

TEST_CASE("extension hypotheses are named") {
  auto L = share(powerset(2));
  auto M = share(powerset(3));
  std::vector<Element> sigma{0, 1, 2, LatticeView::kAbsent};
  try {
    verify_convexity_transfer(L, Subset::of(4, {1, 2}), M->universe(), M, sigma);
    FAIL("expected a hypothesis failure");
  } catch (const HypothesisFailed& e) {
    CHECK(e.hypothesis() == "B-contains-0");
  }
  auto N = share(n5());
  try {
    verify_convexity_transfer(N, N->universe(), M->universe(), M, {0, 1, 3, 2, 7});
    FAIL("expected a hypothesis failure");
  } catch (const HypothesisFailed& e) {
    CHECK(e.hypothesis() == "L-JID");
  }
  try {
    extend_from_join_dense(L, Subset::of(4, {0, 1}), sigma, M);
    FAIL("expected a hypothesis failure");
  } catch (const HypothesisFailed& e) {
    CHECK(e.hypothesis() == "D-join-dense");
  }
}

TEST_CASE("join homomorphisms agreeing on a basis") {
  const LatticeView L(powerset(2)), M(powerset(3));
  const PartialMap none{Subset(4), std::vector<Element>(4, LatticeView::kAbsent)};
  const auto all = enumerate_join_homomorphisms(L, M, none);
  for (const auto& h : all) {
    for (Element a = 0; a < 4; ++a) {
      for (Element b = 0; b < 4; ++b) CHECK(M.join_unchecked(h[a], h[b]) == h[L.join_unchecked(a, b)]);
    }
  }
  CHECK(enumerate_join_homomorphisms(L, M, none, 3).size() == 3);
  const PartialMap fixed{Subset::of(4, {0, 1, 2}), {4, 5, 6, LatticeView::kAbsent}};
  CHECK(enumerate_join_homomorphisms(L, M, fixed).size() == 1);
}
