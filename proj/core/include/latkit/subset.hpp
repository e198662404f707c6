#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace latkit {

using Element = std::size_t;

/// Dynamic bitset over the index range [0, universe()).
///
/// Every set-valued argument in the library is a Subset: down-sets, ranges of
/// maps, candidate dense subsets, the open sets of a topology.  The universe
/// is fixed at construction and binary operations require equal universes.
class Subset {
 public:
  Subset() = default;
  explicit Subset(std::size_t universe);

  static Subset full(std::size_t universe);
  static Subset of(std::size_t universe, std::initializer_list<Element> members);
  static Subset from_indices(std::size_t universe, std::span<const Element> members);
  /// Low bits of `mask` become members; requires universe <= 64.
  static Subset from_mask(std::size_t universe, std::uint64_t mask);

  std::size_t universe() const { return universe_; }
  std::size_t count() const;
  bool empty() const;

  bool contains(Element e) const {
    return e < universe_ && ((words_[e >> 6] >> (e & 63)) & 1u) != 0;
  }
  void insert(Element e);
  void erase(Element e);
  void clear();

  bool is_subset_of(const Subset& other) const;
  bool intersects(const Subset& other) const;

  Subset& operator|=(const Subset& other);
  Subset& operator&=(const Subset& other);
  /// Set difference.
  Subset& operator-=(const Subset& other);
  Subset& operator^=(const Subset& other);

  friend Subset operator|(Subset a, const Subset& b) { return a |= b; }
  friend Subset operator&(Subset a, const Subset& b) { return a &= b; }
  friend Subset operator-(Subset a, const Subset& b) { return a -= b; }
  friend Subset operator^(Subset a, const Subset& b) { return a ^= b; }
  Subset complement() const;

  /// Smallest member, or universe() when empty.
  Element first() const;
  /// Smallest member strictly greater than `e`, or universe() when none.
  Element next(Element e) const;

  std::vector<Element> indices() const;
  /// Requires universe <= 64.
  std::uint64_t mask() const;

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int bit = __builtin_ctzll(bits);
        f(static_cast<Element>(w * 64 + static_cast<std::size_t>(bit)));
        bits &= bits - 1;
      }
    }
  }

  bool operator==(const Subset& other) const = default;
  /// Orders first by universe, then colexicographically by membership.
  std::strong_ordering operator<=>(const Subset& other) const;

  std::size_t hash() const;

 private:
  void check_same_universe(const Subset& other) const;
  void trim();

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct SubsetHash {
  std::size_t operator()(const Subset& s) const { return s.hash(); }
};

/// Calls f(Subset) for every subset of `base`, the empty set first.
/// Enumeration is exponential; callers bound |base|.
template <typename F>
void for_each_subset(const Subset& base, F&& f) {
  const std::vector<Element> members = base.indices();
  const std::size_t n = members.size();
  Subset current(base.universe());
  // Gray-code walk: each step flips a single member.
  f(static_cast<const Subset&>(current));
  for (std::uint64_t i = 1; i < (std::uint64_t{1} << n); ++i) {
    const int bit = __builtin_ctzll(i);
    const Element e = members[static_cast<std::size_t>(bit)];
    if (current.contains(e)) {
      current.erase(e);
    } else {
      current.insert(e);
    }
    f(static_cast<const Subset&>(current));
  }
}

}  // namespace latkit
