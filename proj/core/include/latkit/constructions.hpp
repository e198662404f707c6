#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "latkit/quasi_order.hpp"

namespace latkit {

QuasiOrder chain(std::size_t n);
QuasiOrder antichain(std::size_t n);
/// P({0..n-1}) under inclusion; element index is the membership bitmask.
QuasiOrder powerset(std::size_t n);
/// 0 < 1, 2 < 3.
QuasiOrder diamond();
/// 0 < 1, 2, 3 < 4.
QuasiOrder m3();
/// 0 < 1 < 2 < 4 and 0 < 3 < 4.
QuasiOrder n5();
/// 0, 1 < 2, 3 (two minimal elements under two maximal ones).
QuasiOrder bowtie();
/// Cartesian product order.  Element (a, b) has index a * |B| + b.
QuasiOrder product(const QuasiOrder& A, const QuasiOrder& B);
/// Adds a new top element (index Q.size()).
QuasiOrder with_top(const QuasiOrder& Q);
/// Adds a new bottom element (index 0); old elements shift up by one.
QuasiOrder with_bottom(const QuasiOrder& Q);

/// C_k^dims: tuples over {0..k-1} with the product order.  Coordinate i is
/// the i-th base-k digit of the element index.
class ChainPower {
 public:
  ChainPower(std::size_t k, std::size_t dims);

  std::size_t chain_length() const { return k_; }
  std::size_t dims() const { return dims_; }
  std::size_t size() const { return size_; }
  QuasiOrder order() const;

  Element encode(const std::vector<std::size_t>& coords) const;
  std::vector<std::size_t> decode(Element e) const;
  std::size_t coord(Element e, std::size_t i) const;

 private:
  std::size_t k_;
  std::size_t dims_;
  std::size_t size_;
};

/// Relabels: element p of Q becomes perm[p].
QuasiOrder relabel(const QuasiOrder& Q, const std::vector<Element>& perm);
QuasiOrder random_relabel(const QuasiOrder& Q, std::mt19937_64& rng);

/// Canonical isomorphism-invariant code; requires size <= 8.
std::uint64_t canonical_code(const QuasiOrder& Q);

/// All posets with n elements up to isomorphism (n <= 7), in a fixed order.
std::vector<QuasiOrder> enumerate_posets(std::size_t n);
/// All lattices with n elements up to isomorphism.
std::vector<QuasiOrder> enumerate_lattices(std::size_t n);

}  // namespace latkit
