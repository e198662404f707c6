#pragma once

#include <cstdint>
#include <vector>

#include "latkit/lattice.hpp"
#include "latkit/subset.hpp"

namespace latkit {

/// A topology on {0..points-1}, at most 16 points.  Opens are kept sorted.
class FiniteTopology {
 public:
  /// Validates that `opens` contains the empty and full sets and is closed
  /// under binary union and intersection.  Throws InvalidInput.
  FiniteTopology(std::size_t points, std::vector<Subset> opens);
  /// Smallest topology containing `generators`.
  static FiniteTopology generated(std::size_t points, const std::vector<Subset>& generators);
  /// Open sets are the up-sets of the preorder `leq`.
  static FiniteTopology from_preorder(const QuasiOrder& leq);

  std::size_t points() const { return n_; }
  const std::vector<Subset>& opens() const { return opens_; }
  bool is_open(const Subset& S) const;
  bool is_closed(const Subset& S) const { return is_open(S.complement()); }
  bool is_clopen(const Subset& S) const { return is_open(S) && is_closed(S); }
  /// Smallest open set containing x.
  const Subset& neighbourhood(Element x) const { return nbhd_[x]; }

  Subset interior(const Subset& S) const;
  Subset closure(const Subset& S) const;

  bool operator==(const FiniteTopology& other) const { return n_ == other.n_ && opens_ == other.opens_; }

 private:
  FiniteTopology() = default;
  void finish();

  std::size_t n_ = 0;
  std::vector<Subset> opens_;
  std::vector<bool> open_mask_;
  std::vector<Subset> nbhd_;
};

FiniteTopology discrete_topology(std::size_t n);
FiniteTopology indiscrete_topology(std::size_t n);
/// Points {0, 1} with opens {}, {1}, {0, 1}.
FiniteTopology sierpinski();
/// Points of B are shifted by the size of A.
FiniteTopology disjoint_union(const FiniteTopology& A, const FiniteTopology& B);
/// Subspace on S; point i of the result is the i-th member of S.
FiniteTopology subspace(const FiniteTopology& T, const Subset& S);

/// Every topology on n labelled points (n <= 5), in a fixed order.
std::vector<FiniteTopology> enumerate_topologies(std::size_t n);

bool is_regular_open(const FiniteTopology& T, const Subset& S);
std::vector<Subset> regular_opens(const FiniteTopology& T);
bool is_nowhere_dense(const FiniteTopology& T, const Subset& S);

/// A finite Boolean algebra presented by named members, its lattice view and
/// the complement table.
struct BooleanAlgebraView {
  std::vector<Subset> members;
  LatticeView lattice;
  std::vector<Element> complement;

  Element index_of(const Subset& S) const;
};

/// Regular open sets under G v H = int(cl(G u H)), G ^ H = G n H and
/// -G = X \ cl(G).
BooleanAlgebraView ro_algebra(const FiniteTopology& T);

/// In a finite space the nowhere dense sets already form an ideal, so this is
/// exactly the family of meager sets.
std::vector<Subset> meager_ideal(const FiniteTopology& T);
bool is_meager(const FiniteTopology& T, const Subset& S);
Subset largest_open_meager(const FiniteTopology& T);
bool is_baire(const FiniteTopology& T);
/// Some open U has S symmetric-difference U meager.
bool has_baire_property(const FiniteTopology& T, const Subset& S);

struct CategoryAlgebra {
  /// One representative per class: the least member in Subset order.
  BooleanAlgebraView algebra;
  /// Class index for every subset with the Baire property, by bitmask.
  std::vector<Element> class_of_mask;
  std::size_t bp_count = 0;
  Subset largest_open_meager;
  /// RO(X \ cl U_X), with members written as subsets of X.
  BooleanAlgebraView ro;
  /// ro member i -> class of that set.
  std::vector<Element> iso;

  Element class_of(const Subset& S) const;
};
/// Refuses spaces with more than 12 points.
CategoryAlgebra category_algebra(const FiniteTopology& T);
/// The exhibited map is a bijection that preserves and reflects order and
/// preserves complements.
Verdict verify_category_iso(const CategoryAlgebra& C);

/// Clopen classes form a basis of Cat(X).  Throws NotZeroDimensional.
Verdict clopen_basis_check(const FiniteTopology& T);

}  // namespace latkit
