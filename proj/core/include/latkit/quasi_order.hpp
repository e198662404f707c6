#pragma once

#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "latkit/subset.hpp"

namespace latkit {

/// A finite quasi order on the elements 0..size()-1.
///
/// The relation is stored row-wise twice (up-sets and down-sets) so that
/// upper and lower bound computations are word-parallel intersections.
/// Instances are immutable once built.
class QuasiOrder {
 public:
  QuasiOrder() = default;

  /// Smallest reflexive-transitive relation containing `pairs` (p <= q for
  /// every (p, q)).  Throws InvalidInput on an index >= size.
  static QuasiOrder from_generators(std::size_t size,
                                    std::span<const std::pair<Element, Element>> pairs);
  /// `up[p]` is {q : p <= q}.  Throws InvalidInput unless the relation is
  /// reflexive and transitive.
  static QuasiOrder from_up_sets(std::vector<Subset> up);
  /// Builds from a predicate leq(p, q); the result is validated.
  template <typename Leq>
  static QuasiOrder from_relation(std::size_t size, Leq&& leq) {
    std::vector<Subset> up(size, Subset(size));
    for (Element p = 0; p < size; ++p) {
      for (Element q = 0; q < size; ++q) {
        if (leq(p, q)) up[p].insert(q);
      }
    }
    return from_up_sets(std::move(up));
  }

  std::size_t size() const { return up_.size(); }
  bool leq(Element p, Element q) const { return up_[p].contains(q); }
  /// p < q in the quasi order sense: p <= q and not q <= p.
  bool less(Element p, Element q) const { return leq(p, q) && !leq(q, p); }
  bool comparable(Element p, Element q) const { return leq(p, q) || leq(q, p); }

  const Subset& up_set(Element p) const { return up_[p]; }
  const Subset& down_set(Element p) const { return down_[p]; }
  Subset universe() const { return Subset::full(size()); }

  bool is_partial_order() const { return partial_; }
  QuasiOrder dual() const;

  /// The suborder (A, <=) relabelled 0..|A|-1 in increasing index order.
  /// `members` (optional out) receives the original index of each new element.
  QuasiOrder induced(const Subset& A, std::vector<Element>* members = nullptr) const;

  /// A linear extension: every p appears before every q with p < q.
  std::vector<Element> linear_extension() const;
  /// Covering pairs (p, q): p < q with nothing strictly between.
  std::vector<std::pair<Element, Element>> covers() const;

  bool operator==(const QuasiOrder& other) const { return up_ == other.up_; }

 private:
  explicit QuasiOrder(std::vector<Subset> up);

  std::vector<Subset> up_;
  std::vector<Subset> down_;
  bool partial_ = true;
};

/// Antisymmetric quotient O/asym with the class of every element.  Classes
/// are numbered by their smallest representative.
struct AsymQuotient {
  QuasiOrder order;
  std::vector<Element> class_of;
};
AsymQuotient asym_quotient(const QuasiOrder& Q);

Subset upper_bounds(const QuasiOrder& Q, const Subset& A);
Subset lower_bounds(const QuasiOrder& Q, const Subset& A);

/// Least upper bound of A, absent when it does not exist.  sup(empty) is the
/// minimum of Q when there is one.  Requires a partial order.
std::optional<Element> sup(const QuasiOrder& Q, const Subset& A);
std::optional<Element> inf(const QuasiOrder& Q, const Subset& A);
std::optional<Element> minimum(const QuasiOrder& Q);
std::optional<Element> maximum(const QuasiOrder& Q);

/// S^0: elements with no strictly smaller element.
Subset minimal_elements(const QuasiOrder& Q);
/// S^+: complement of minimal_elements.
Subset positive_part(const QuasiOrder& Q);
Subset maximal_elements(const QuasiOrder& Q);

/// q and r have a common lower bound inside the positive part.
bool compatible(const QuasiOrder& Q, Element q, Element r);

/// Non-minimal elements that cannot be split: no q, r <= p in O^+ that are
/// incompatible (lack a common lower bound in O^+).
Subset atoms(const QuasiOrder& Q);
/// Atoms are dense: every p in O^+ has an atom below it.
bool is_atomic(const QuasiOrder& Q);
bool is_atomless(const QuasiOrder& Q);

Subset down_set(const QuasiOrder& Q, Element p);
Subset upper_closure(const QuasiOrder& Q, const Subset& A);
Subset lower_closure(const QuasiOrder& Q, const Subset& A);
/// [p, q] = {r : p <= r <= q}.
Subset interval(const QuasiOrder& Q, Element p, Element q);

/// Nonempty, and every two members have a common upper bound inside A.
bool is_directed(const QuasiOrder& Q, const Subset& A);
bool is_filtered(const QuasiOrder& Q, const Subset& A);
bool is_bounded_above(const QuasiOrder& Q, const Subset& A);
bool is_bounded_below(const QuasiOrder& Q, const Subset& A);

/// A total map between two quasi orders that preserves the order.  The
/// reflection flag is computed once at construction.
class MonotoneMap {
 public:
  /// Throws InvalidInput when an image is out of range or the map is not
  /// order preserving.
  MonotoneMap(std::shared_ptr<const QuasiOrder> dom, std::shared_ptr<const QuasiOrder> cod,
              std::vector<Element> image);

  const QuasiOrder& dom() const { return *dom_; }
  const QuasiOrder& cod() const { return *cod_; }
  const std::shared_ptr<const QuasiOrder>& dom_ptr() const { return dom_; }
  const std::shared_ptr<const QuasiOrder>& cod_ptr() const { return cod_; }
  Element operator()(Element p) const { return image_[p]; }
  std::span<const Element> image() const { return image_; }

  bool is_reflecting() const { return reflecting_; }
  /// Order preserving and reflecting.
  bool is_embedding() const { return reflecting_; }
  bool is_injective() const;
  Subset range() const;
  /// Image of a subset of the domain.
  Subset apply(const Subset& A) const;

  bool operator==(const MonotoneMap& other) const { return image_ == other.image_; }

 private:
  std::shared_ptr<const QuasiOrder> dom_;
  std::shared_ptr<const QuasiOrder> cod_;
  std::vector<Element> image_;
  bool reflecting_ = false;
};

/// Order preservation test for a raw image array.
bool is_order_preserving(const QuasiOrder& dom, const QuasiOrder& cod,
                         std::span<const Element> image);
bool is_order_reflecting(const QuasiOrder& dom, const QuasiOrder& cod,
                         std::span<const Element> image);

}  // namespace latkit
