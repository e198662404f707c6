#include "latkit/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "latkit/errors.hpp"
#include "latkit/lattice.hpp"

namespace latkit {

QuasiOrder chain(std::size_t n) {
  return QuasiOrder::from_relation(n, [](Element p, Element q) { return p <= q; });
}

QuasiOrder antichain(std::size_t n) {
  return QuasiOrder::from_relation(n, [](Element p, Element q) { return p == q; });
}

QuasiOrder powerset(std::size_t n) {
  if (n > 16) throw InvalidInput("powerset: ground set too large");
  return QuasiOrder::from_relation(std::size_t{1} << n,
                                   [](Element p, Element q) { return (p & ~q) == 0; });
}

QuasiOrder diamond() {
  const std::pair<Element, Element> g[] = {{0, 1}, {0, 2}, {1, 3}, {2, 3}};
  return QuasiOrder::from_generators(4, g);
}

QuasiOrder m3() {
  const std::pair<Element, Element> g[] = {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}};
  return QuasiOrder::from_generators(5, g);
}

QuasiOrder n5() {
  const std::pair<Element, Element> g[] = {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}};
  return QuasiOrder::from_generators(5, g);
}

QuasiOrder bowtie() {
  const std::pair<Element, Element> g[] = {{0, 2}, {0, 3}, {1, 2}, {1, 3}};
  return QuasiOrder::from_generators(4, g);
}

QuasiOrder product(const QuasiOrder& A, const QuasiOrder& B) {
  const std::size_t nb = B.size();
  return QuasiOrder::from_relation(A.size() * nb, [&](Element p, Element q) {
    return A.leq(p / nb, q / nb) && B.leq(p % nb, q % nb);
  });
}

QuasiOrder with_top(const QuasiOrder& Q) {
  const std::size_t n = Q.size();
  return QuasiOrder::from_relation(n + 1, [&](Element p, Element q) {
    if (q == n) return true;
    if (p == n) return false;
    return Q.leq(p, q);
  });
}

QuasiOrder with_bottom(const QuasiOrder& Q) {
  return QuasiOrder::from_relation(Q.size() + 1, [&](Element p, Element q) {
    if (p == 0) return true;
    if (q == 0) return false;
    return Q.leq(p - 1, q - 1);
  });
}

ChainPower::ChainPower(std::size_t k, std::size_t dims) : k_(k), dims_(dims), size_(1) {
  if (k == 0) throw InvalidInput("ChainPower: chain length must be positive");
  for (std::size_t i = 0; i < dims; ++i) {
    size_ *= k;
    if (size_ > (1u << 20)) throw InvalidInput("ChainPower: too many elements");
  }
}

QuasiOrder ChainPower::order() const {
  return QuasiOrder::from_relation(size_, [&](Element p, Element q) {
    for (std::size_t i = 0; i < dims_; ++i) {
      if (coord(p, i) > coord(q, i)) return false;
    }
    return true;
  });
}

Element ChainPower::encode(const std::vector<std::size_t>& coords) const {
  if (coords.size() != dims_) throw InvalidInput("ChainPower::encode: wrong arity");
  Element e = 0;
  for (std::size_t i = dims_; i-- > 0;) {
    if (coords[i] >= k_) throw InvalidInput("ChainPower::encode: coordinate out of range");
    e = e * k_ + coords[i];
  }
  return e;
}

std::vector<std::size_t> ChainPower::decode(Element e) const {
  std::vector<std::size_t> out(dims_);
  for (std::size_t i = 0; i < dims_; ++i) {
    out[i] = e % k_;
    e /= k_;
  }
  return out;
}

std::size_t ChainPower::coord(Element e, std::size_t i) const {
  for (std::size_t j = 0; j < i; ++j) e /= k_;
  return e % k_;
}

QuasiOrder relabel(const QuasiOrder& Q, const std::vector<Element>& perm) {
  const std::size_t n = Q.size();
  std::vector<Element> inverse(n);
  for (Element p = 0; p < n; ++p) inverse[perm[p]] = p;
  return QuasiOrder::from_relation(n, [&](Element a, Element b) {
    return Q.leq(inverse[a], inverse[b]);
  });
}

QuasiOrder random_relabel(const QuasiOrder& Q, std::mt19937_64& rng) {
  std::vector<Element> perm(Q.size());
  std::iota(perm.begin(), perm.end(), Element{0});
  // Fisher-Yates with explicit draws so the permutation is identical across
  // standard library implementations.
  for (std::size_t i = perm.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(rng() % i);
    std::swap(perm[i - 1], perm[j]);
  }
  return relabel(Q, perm);
}

std::uint64_t canonical_code(const QuasiOrder& Q) {
  const std::size_t n = Q.size();
  if (n > 8) throw InvalidInput("canonical_code: size exceeds 8");
  std::vector<Element> perm(n);
  std::iota(perm.begin(), perm.end(), Element{0});
  std::uint64_t best = 0;
  do {
    std::uint64_t code = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        code = (code << 1) | (Q.leq(perm[i], perm[j]) ? 1u : 0u);
      }
    }
    best = std::max(best, code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::vector<QuasiOrder> enumerate_posets(std::size_t n) {
  if (n > 7) throw InvalidInput("enumerate_posets: size exceeds 7");
  std::vector<QuasiOrder> level{QuasiOrder::from_relation(0, [](Element, Element) { return true; })};
  for (std::size_t size = 0; size < n; ++size) {
    // Every poset on size+1 elements arises from one on `size` elements by
    // adding a maximal element above some lower set.
    std::set<std::uint64_t> seen;
    std::vector<QuasiOrder> next;
    for (const QuasiOrder& P : level) {
      for (std::uint64_t m = 0; m < (std::uint64_t{1} << size); ++m) {
        const Subset below = Subset::from_mask(size, m);
        if (lower_closure(P, below) != below) continue;
        QuasiOrder Q = QuasiOrder::from_relation(size + 1, [&](Element p, Element q) {
          if (q == size) return p == size || below.contains(p);
          if (p == size) return false;
          return P.leq(p, q);
        });
        if (seen.insert(canonical_code(Q)).second) next.push_back(std::move(Q));
      }
    }
    level = std::move(next);
  }
  return level;
}

std::vector<QuasiOrder> enumerate_lattices(std::size_t n) {
  std::vector<QuasiOrder> out;
  if (n == 0) return out;
  for (QuasiOrder& P : enumerate_posets(n)) {
    if (LatticeView(P).is_lattice()) out.push_back(std::move(P));
  }
  return out;
}

}  // namespace latkit
