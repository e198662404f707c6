#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "latkit/constructions.hpp"
#include "latkit/lattice.hpp"
#include "latkit/quasi_order.hpp"

namespace latkit {

struct CensusFilters {
  /// When false, every order-preserving map is listed.
  bool embedding = true;
  bool convex_range = false;
  bool preregular_range = false;
  bool downward_closed_range = false;
};

struct CensusOptions {
  CensusFilters filters;
  /// Search node cap; 0 means unlimited.  Exceeding it throws BudgetExceeded.
  std::uint64_t budget_nodes = 0;
  /// Worker threads; 0 reads LATKIT_THREADS, falling back to the hardware count.
  std::size_t threads = 0;
  /// Compute the per-map range flags (needed for reporting, not for filtering).
  bool compute_flags = true;
};

struct CensusEntry {
  std::vector<Element> image;
  bool embedding = false;
  bool convex_range = false;
  bool preregular_range = false;
  bool downward_closed_range = false;
};

struct EmbeddingCensus {
  std::shared_ptr<const QuasiOrder> dom;
  std::shared_ptr<const QuasiOrder> cod;
  CensusFilters filters;
  /// Lexicographic order of image arrays.
  std::vector<CensusEntry> maps;
  std::uint64_t nodes = 0;

  MonotoneMap map(std::size_t i) const { return MonotoneMap(dom, cod, maps[i].image); }
};

/// Backtracking census in a linear extension of P.  Convex-range filtering
/// prunes with the exact interval-size criterion: an embedding has convex
/// range iff |[s(p), s(q)]| = |[p, q]| for all p <= q.
EmbeddingCensus enumerate_embeddings(std::shared_ptr<const QuasiOrder> P,
                                     std::shared_ptr<const QuasiOrder> Q,
                                     const CensusOptions& options = {});
EmbeddingCensus enumerate_embeddings(const QuasiOrder& P, const QuasiOrder& Q,
                                     const CensusOptions& options = {});

std::size_t default_thread_count();

struct ContinuityReport {
  Verdict preserves_nonempty_sups;
  Verdict preserves_nonempty_infs;
  /// Including the empty family (bottom to bottom, top to top).
  Verdict preserves_all_sups;
  Verdict preserves_all_infs;
  Verdict scott_continuous;  // directed suprema
  Verdict co_continuous;     // filtered infima
};
/// Exhaustive over subsets of the domain (at most 20 elements).  Requires both
/// orders to be partial orders.
ContinuityReport continuity_checks(const MonotoneMap& s);

struct PreregularContinuityReport {
  std::uint64_t embeddings = 0;
  std::uint64_t preregular = 0;
  /// Images of embeddings with preregular range that fail a preservation law.
  std::vector<std::vector<Element>> violations;
  bool holds() const { return violations.empty(); }
};
PreregularContinuityReport verify_preregular_continuity(const QuasiOrder& P, const QuasiOrder& Q,
                                                        const CensusOptions& options = {});

struct RangeReport {
  Verdict up_boc_range;
  Verdict down_boc_range;
  Verdict up_oc_range;
  Verdict down_oc_range;
  bool order_closed_range = false;
  /// Present when the domain has a minimum and a maximum.
  std::optional<bool> interval_range;
};
RangeReport range_property_checks(const MonotoneMap& s);

/// s[At(dom)] = At(ran s), atoms of the range taken in the induced suborder.
/// Throws NotEmbedding unless s is an embedding or `require_embedding` is false.
Verdict atom_image_check(const MonotoneMap& s, bool require_embedding = true);
/// s[O^0] = ran(s)^0 and s[O^+] = ran(s)^+.
Verdict minimal_image_check(const MonotoneMap& s);

struct BoundednessReport {
  Verdict bounded_to_bounded;
  Verdict unbounded_to_unbounded;
};
/// Bounded means bounded above.  Exhaustive over subsets of the domain.
BoundednessReport boundedness_preservation(const MonotoneMap& s);

/// s(a) = h[a] u b for maps P(X) -> P(Y); sets are bitmask indices.
struct PowersetDecomposition {
  std::size_t x = 0;
  std::size_t y = 0;
  std::vector<std::size_t> h;
  std::uint64_t b = 0;
};
/// Throws InvalidInput unless dom/cod are power sets, NotEmbedding,
/// NotConvexRange, or DecompositionMismatch.
PowersetDecomposition powerset_decompose(const MonotoneMap& s);
/// Validates h injective into Y and b disjoint from h[X].
std::vector<Element> powerset_compose(const PowersetDecomposition& d);
/// Every valid (h, b), in lexicographic order of the composed images.
std::vector<std::vector<Element>> powerset_formula_images(std::size_t x, std::size_t y);

/// s(x)(j) = x(g(j)) + y(j) for j with g(j) set, and y(j) otherwise.
struct ChainProdDecomposition {
  std::size_t k = 0;
  std::size_t m = 0;
  std::size_t dims_in = 0;
  std::size_t dims_out = 0;
  std::vector<std::optional<std::size_t>> g;  // indexed by output coordinate
  std::vector<std::size_t> y;
};
ChainProdDecomposition chainprod_decompose(const MonotoneMap& s, const ChainPower& in,
                                           const ChainPower& out);
/// Validates g a bijection onto the input coordinates and y(j) + k - 1 <= m - 1
/// on used coordinates.
std::vector<Element> chainprod_compose(const ChainProdDecomposition& d);
std::vector<std::vector<Element>> chainprod_formula_images(std::size_t k, std::size_t m,
                                                           std::size_t dims_in,
                                                           std::size_t dims_out);

/// A map defined on a subset of an order.  image has one slot per element of
/// the ambient order; slots outside `domain` are ignored.
struct PartialMap {
  Subset domain;
  std::vector<Element> image;

  static PartialMap restrict(const MonotoneMap& s, const Subset& domain);
};

/// s(p) = sup { s(d) : d in D, d <= p } after validating every hypothesis:
/// L-lattice, L-JID, M-complete-semilattice, D-join-dense,
/// D-meet-subsemilattice, sigma-preserves-nonempty-sups,
/// sigma-preserves-boundedness.  Throws HypothesisFailed naming the first
/// failing clause.
MonotoneMap extend_from_join_dense(std::shared_ptr<const QuasiOrder> L, const Subset& D,
                                   const std::vector<Element>& sigma,
                                   std::shared_ptr<const QuasiOrder> M);

/// Maps L -> M preserving binary joins (hence nonempty suprema) that agree
/// with `fixed` on its domain.  Stops after `limit` maps (0 = no limit).
std::vector<std::vector<Element>> enumerate_join_homomorphisms(const LatticeView& L,
                                                               const LatticeView& M,
                                                               const PartialMap& fixed,
                                                               std::size_t limit = 0);

struct ConvexityTransferReport {
  std::vector<Element> extension;
  bool agrees_on_basis = false;
  bool embedding = false;
  bool lattice_homomorphism = false;
  bool convex_range = false;
  /// Join-preserving maps agreeing on B (uniqueness means exactly one).
  std::size_t extensions_found = 0;
  bool holds() const {
    return agrees_on_basis && embedding && lattice_homomorphism && convex_range &&
           extensions_found == 1;
  }
};
/// Hypotheses: L-complete-semilattice, L-JID, M-complete-semilattice, M-JID,
/// M-flat-complete, B-contains-0, B-basis, B-strongly-interval-predense,
/// E-join-dense, E-preregular, E-sublattice, sigma-into-E, sigma-embedding,
/// sigma-convex-range.
ConvexityTransferReport verify_convexity_transfer(std::shared_ptr<const QuasiOrder> L,
                                                  const Subset& B, const Subset& E,
                                                  std::shared_ptr<const QuasiOrder> M,
                                                  const std::vector<Element>& sigma);

}  // namespace latkit
