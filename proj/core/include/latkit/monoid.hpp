#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "latkit/lattice.hpp"
#include "latkit/quasi_order.hpp"

namespace latkit {

/// A monoid given by its Cayley table; op(a, b) = table[a * size + b].
class FiniteMonoid {
 public:
  /// Validates closure, associativity and the identity law.  Throws InvalidInput.
  FiniteMonoid(std::size_t size, std::vector<Element> table, Element identity);
  /// Identity located automatically; throws InvalidInput if there is none.
  static FiniteMonoid from_table(std::size_t size, std::vector<Element> table);

  std::size_t size() const { return size_; }
  Element op(Element a, Element b) const { return table_[a * size_ + b]; }
  Element identity() const { return identity_; }
  bool is_commutative() const { return commutative_; }
  const std::vector<Element>& table() const { return table_; }

  bool operator==(const FiniteMonoid&) const = default;

 private:
  std::size_t size_;
  std::vector<Element> table_;
  Element identity_;
  bool commutative_ = true;
};

/// Z_n under addition mod n.
FiniteMonoid cyclic_group(std::size_t n);
/// {0..n-1} under max.
FiniteMonoid max_monoid(std::size_t n);
/// {0..n-1} under min(a + b, n - 1).
FiniteMonoid truncated_addition(std::size_t n);
/// All commutative monoids on {0..n-1} with identity 0 (labelled, not up to
/// isomorphism).  n <= 4.
std::vector<FiniteMonoid> enumerate_commutative_monoids(std::size_t n);

/// x <= y iff x . a = y for some a.
QuasiOrder associated_order(const FiniteMonoid& M);
bool is_cancellative(const FiniteMonoid& M);
bool is_group(const FiniteMonoid& M);
Subset invertibles(const FiniteMonoid& M);

struct MonoidClass {
  bool commutative = false;
  bool poset_monoid = false;
  bool semilattice_monoid = false;  // associated order is a join semilattice
  bool lattice_monoid = false;
  bool cancellative = false;
  Subset invertibles;
};
MonoidClass monoid_class(const FiniteMonoid& M);

/// The c with a = c . b.  `value` is set only when exactly one solution exists.
struct Difference {
  std::optional<Element> value;
  std::size_t solutions = 0;
};
Difference subtract(const FiniteMonoid& M, Element a, Element b);

/// (M x N) / ~ where N = (M \ invertibles) u {0} and (a,b) ~ (c,d) iff
/// a + r = c + s and b + r = d + s for some r, s in N.
struct GroupCompletion {
  FiniteMonoid group;
  /// Lexicographically least pair of each class, in class order.
  std::vector<std::pair<Element, Element>> representatives;
  /// a -> [a, 0].
  std::vector<Element> embedding;
};
/// Throws PreconditionFailed for noncommutative M, NotCancellative otherwise.
GroupCompletion group_completion(const FiniteMonoid& M);

using Vec = std::vector<std::int64_t>;

/// N^I (or Z^I when `integers`) under coordinatewise addition.  Elements are
/// carried intensionally as integer vectors.
class VectorMonoid {
 public:
  explicit VectorMonoid(std::size_t index_count, bool integers = false);

  std::size_t index_count() const { return n_; }
  bool integers() const { return integers_; }
  bool contains(const Vec& v) const;

  Vec zero() const { return Vec(n_, 0); }
  /// The i-th unit vector.
  Vec chi(std::size_t i) const;
  Vec add(const Vec& a, const Vec& b) const;
  /// a - b if it stays in the carrier.
  std::optional<Vec> subtract(const Vec& a, const Vec& b) const;
  Vec negate(const Vec& a) const;
  /// Associated order: a <= b iff b - a is in the carrier.  For Z^I every pair
  /// is related.
  bool leq(const Vec& a, const Vec& b) const;
  Vec join(const Vec& a, const Vec& b) const;
  Vec meet(const Vec& a, const Vec& b) const;

  Vec random_element(std::mt19937_64& rng, std::int64_t bound) const;

 private:
  void require_arity(const Vec& v) const;

  std::size_t n_;
  bool integers_;
};

/// Finite-box view [0, bound]^I of N^I: associated order restricted to the
/// box and the monoid properties that can be decided there.
MonoidClass monoid_class(const VectorMonoid& V, std::int64_t bound);

/// Group completion of N^I, intensionally.  A class is stored as its reduced
/// pair (a - m, b - m) with m = a meet b.
class VectorCompletion {
 public:
  explicit VectorCompletion(const VectorMonoid& V);

  using Class = std::pair<Vec, Vec>;
  Class make(const Vec& a, const Vec& b) const;
  Class add(const Class& x, const Class& y) const;
  Class negate(const Class& x) const;
  Class embed(const Vec& a) const { return make(a, base_.zero()); }
  /// Explicit r, s in N with a + r = c + s and b + r = d + s, if related.
  std::optional<std::pair<Vec, Vec>> equivalence_witness(const Vec& a, const Vec& b,
                                                         const Vec& c, const Vec& d) const;
  /// Isomorphism onto Z^I: [a, b] -> a - b, and its inverse.
  Vec to_integers(const Class& x) const;
  Class from_integers(const Vec& z) const;

  const VectorMonoid& base() const { return base_; }
  const VectorMonoid& group() const { return group_; }

 private:
  VectorMonoid base_;
  VectorMonoid group_;
};

enum class DistributiveLaw { plus_join, plus_meet, plus_join_inf, plus_meet_inf };
std::string to_string(DistributiveLaw law);
std::optional<DistributiveLaw> distributive_law_from_string(const std::string& name);

/// Outcome of a law check.  Finite-monoid witnesses are encoded as 1-vectors.
struct LawReport {
  std::string law;
  bool holds = true;
  bool exhaustive = true;
  std::uint64_t instances = 0;
  std::optional<std::uint64_t> seed;
  std::vector<Vec> witness;
  std::string note;
};

/// Exhaustive over all a and all b, c (binary laws) or all nonempty B
/// (infinite laws, B up to 14 elements, else |B| <= 3).  Throws
/// PreconditionFailed if the associated order is not a partial order.
LawReport check_distributivity(const FiniteMonoid& M, DistributiveLaw law);
/// `samples` random instances with entries in [0, bound]; B has 1..4 members.
LawReport check_distributivity(const VectorMonoid& V, DistributiveLaw law, std::uint64_t samples,
                               std::uint64_t seed, std::int64_t bound = 8);

/// a meet b = 0 implies a join b = a + b, and a meet c = b meet c = 0 implies
/// (a + b) meet c = 0.  Instances counted are those meeting a premise.
LawReport check_disjoint_sum_laws(const FiniteMonoid& M);
LawReport check_disjoint_sum_laws(const VectorMonoid& V, std::uint64_t samples, std::uint64_t seed,
                                  std::int64_t bound = 8);

/// Whenever a - c exists: b <= c implies a - b exists and a - b >= a - c;
/// a <= b implies b - c exists and a - c <= b - c.
LawReport check_subtraction_laws(const FiniteMonoid& M);
LawReport check_subtraction_laws(const VectorMonoid& V, std::uint64_t samples, std::uint64_t seed,
                                 std::int64_t bound = 8);

/// a, b in S and a - b exists imply a - b in S.  Witness (a, b).
Verdict closed_under_subtraction(const FiniteMonoid& M, const Subset& S);
/// Membership by predicate.  samples == 0 scans every pair in [0, bound]^I;
/// otherwise `samples` random pairs from that box.
LawReport closed_under_subtraction(const VectorMonoid& V, const std::function<bool(const Vec&)>& S,
                                   std::int64_t bound, std::uint64_t samples = 0,
                                   std::uint64_t seed = 0);

}  // namespace latkit
