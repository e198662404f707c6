#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "latkit/quasi_order.hpp"

namespace latkit {

/// Evidence attached to a failed property check: a tuple of elements and,
/// when the violation involves a family, the offending subset.
struct Witness {
  std::vector<Element> elements;
  std::optional<Subset> set;
  std::string note;
};

struct Verdict {
  bool holds = true;
  Witness witness;

  explicit operator bool() const { return holds; }
  static Verdict pass() { return {}; }
  static Verdict fail(std::vector<Element> elements, std::string note = {},
                      std::optional<Subset> set = std::nullopt) {
    return {false, Witness{std::move(elements), std::move(set), std::move(note)}};
  }
};

/// A partial order together with its (partial) binary join and meet tables.
class LatticeView {
 public:
  /// Throws PreconditionFailed if `order` is not antisymmetric.
  explicit LatticeView(QuasiOrder order);
  /// Trusted construction from precomputed tables (kAbsent marks a missing
  /// join or meet).  Used for algebras whose operations are known in closed
  /// form, e.g. regular open sets.
  static LatticeView from_tables(QuasiOrder order, std::vector<Element> joins,
                                 std::vector<Element> meets);

  static constexpr Element kAbsent = static_cast<Element>(-1);

  const QuasiOrder& order() const { return order_; }
  std::size_t size() const { return order_.size(); }
  bool leq(Element p, Element q) const { return order_.leq(p, q); }

  std::optional<Element> join(Element p, Element q) const;
  std::optional<Element> meet(Element p, Element q) const;
  /// Unchecked table access; requires is_lattice().
  Element join_unchecked(Element p, Element q) const { return joins_[p * size() + q]; }
  Element meet_unchecked(Element p, Element q) const { return meets_[p * size() + q]; }

  bool is_join_semilattice() const { return total_joins_; }
  bool is_meet_semilattice() const { return total_meets_; }
  bool is_lattice() const { return total_joins_ && total_meets_; }

  std::optional<Element> bottom() const { return bottom_; }
  std::optional<Element> top() const { return top_; }
  /// All q with p meet q = 0 and p join q = 1 (empty unless bounded).
  std::vector<Element> complements(Element p) const;

  /// Throws NotALattice unless is_lattice().
  void require_lattice() const;

 private:
  LatticeView(QuasiOrder order, std::vector<Element> joins, std::vector<Element> meets);
  void finish();

  QuasiOrder order_;
  std::vector<Element> joins_;
  std::vector<Element> meets_;
  bool total_joins_ = true;
  bool total_meets_ = true;
  std::optional<Element> bottom_;
  std::optional<Element> top_;
};

struct Classification {
  bool partial_order = false;
  bool join_semilattice = false;
  bool meet_semilattice = false;
  bool lattice = false;
  bool pointed = false;
  bool bounded = false;
  /// Join semilattice in which every bounded subset (the empty set included)
  /// has a supremum.
  bool complete_semilattice = false;
  bool complete_lattice = false;
  bool boolean = false;
};
Classification classify(const QuasiOrder& Q);

/// Both distributive identities over all triples.  Throws NotALattice.
Verdict is_distributive(const LatticeView& L);

struct InfiniteDistributivityVerdict {
  bool holds = true;
  /// True when every B was enumerated; false when sampled.
  bool exhaustive = true;
  std::uint64_t instances = 0;
  Witness witness;  // elements = {a}, set = B
};
/// a meet (join B) = join (a meet B) for every a and every B whose join
/// exists.  Exhaustive for |L| <= 14; otherwise all |B| <= 3 plus 10^4
/// random B drawn from `seed`.  Throws NotALattice.
InfiniteDistributivityVerdict check_jid(const LatticeView& L, std::uint64_t seed = 0);
InfiniteDistributivityVerdict check_mid(const LatticeView& L, std::uint64_t seed = 0);

/// p, q in A implies [p, q] within A.  Witness (p, q, r) with r missing.
Verdict is_convex(const QuasiOrder& P, const Subset& A);

struct DirectionalVerdict {
  Verdict up;
  Verdict down;
  bool holds() const { return up.holds && down.holds; }
};

/// For every nonempty B within A whose supremum in (A, <=) exists, the
/// supremum in P exists and agrees; dually for infima.  Witness set is B.
DirectionalVerdict preregularity(const QuasiOrder& P, const Subset& A);
/// As preregularity but including B = empty.
DirectionalVerdict regularity(const QuasiOrder& P, const Subset& A);
bool is_preregular(const QuasiOrder& P, const Subset& A);
bool is_regular(const QuasiOrder& P, const Subset& A);

struct OrderClosedVerdict {
  Verdict up_boc;
  Verdict down_boc;
  Verdict up_oc;
  Verdict down_oc;
};
OrderClosedVerdict order_closed_checks(const QuasiOrder& P, const Subset& A);

/// { sup B : B within A and the supremum exists }, the empty B included.
Subset order_closure_up(const QuasiOrder& P, const Subset& A);
Subset order_closure_down(const QuasiOrder& P, const Subset& A);

/// Some p has a meet b = p for all a != b in A.
bool is_flat(const QuasiOrder& P, const Subset& A);
/// Every flat subset has a supremum.  Throws NotALattice.
Verdict is_flat_complete(const LatticeView& L);

/// Every p in O^+ has some d <= p with d in D and d in O^+.
Verdict is_dense(const QuasiOrder& Q, const Subset& D);
/// p = sup D_p for every p.
Verdict is_join_dense(const QuasiOrder& P, const Subset& D);
/// Every p < q has d in D with d not <= p and d <= q.
Verdict is_interval_predense(const QuasiOrder& P, const Subset& D);
/// Every p < q has d in D with d <= q, d meet p < d, and d meet p in D.
Verdict is_strongly_interval_predense(const LatticeView& L, const Subset& D);
/// Binary meets of members (computed in L) stay in D.
Verdict is_meet_subsemilattice(const LatticeView& L, const Subset& D);
Verdict is_join_subsemilattice(const LatticeView& L, const Subset& D);
bool is_sublattice(const LatticeView& L, const Subset& D);
/// Meet subsemilattice in which every element is the join of a pairwise
/// incompatible family (pairwise meets equal to 0) drawn from D.  Throws
/// PreconditionFailed unless L is a pointed lattice.
Verdict is_basis(const LatticeView& L, const Subset& D);
/// A pairwise incompatible family from D with join a, if one exists.
std::optional<Subset> incompatible_decomposition(const LatticeView& L, const Subset& D, Element a);

struct DensityReport {
  Verdict dense;
  Verdict join_dense;
  Verdict interval_predense;
  Verdict strongly_interval_predense;
  /// Absent when L is not a pointed lattice.
  std::optional<Verdict> basis;
};
DensityReport density_checks(const LatticeView& L, const Subset& D);

/// Every subset property of A inside a fixed ambient order, computed once.
class SubposetAnalysis {
 public:
  SubposetAnalysis(const QuasiOrder& parent, Subset subset);

  const Subset& subset() const { return subset_; }
  const Verdict& convex() const { return convex_; }
  const DirectionalVerdict& preregular() const { return preregular_; }
  const DirectionalVerdict& regular() const { return regular_; }
  const OrderClosedVerdict& order_closed() const { return order_closed_; }
  bool flat() const { return flat_; }
  const Verdict& dense() const { return dense_; }
  const Verdict& join_dense() const { return join_dense_; }
  const Verdict& interval_predense() const { return interval_predense_; }
  /// Present only when the parent is a lattice.
  const std::optional<Verdict>& strongly_interval_predense() const { return sip_; }
  const std::optional<Verdict>& basis() const { return basis_; }

 private:
  Subset subset_;
  Verdict convex_;
  DirectionalVerdict preregular_;
  DirectionalVerdict regular_;
  OrderClosedVerdict order_closed_;
  bool flat_ = false;
  Verdict dense_;
  Verdict join_dense_;
  Verdict interval_predense_;
  std::optional<Verdict> sip_;
  std::optional<Verdict> basis_;
};

}  // namespace latkit
