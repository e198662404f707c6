#include "latkit/quasi_order.hpp"

#include <algorithm>
#include <numeric>

#include "latkit/errors.hpp"

namespace latkit {

QuasiOrder::QuasiOrder(std::vector<Subset> up) : up_(std::move(up)) {
  const std::size_t n = up_.size();
  down_.assign(n, Subset(n));
  for (Element p = 0; p < n; ++p) {
    up_[p].for_each([&](Element q) { down_[q].insert(p); });
  }
  for (Element p = 0; p < n && partial_; ++p) {
    // up(p) & down(p) is the mutual-<= class of p.
    partial_ = (up_[p] & down_[p]).count() == 1;
  }
}

QuasiOrder QuasiOrder::from_generators(std::size_t size,
                                       std::span<const std::pair<Element, Element>> pairs) {
  std::vector<Subset> up(size, Subset(size));
  for (Element p = 0; p < size; ++p) up[p].insert(p);
  for (const auto& [p, q] : pairs) {
    if (p >= size || q >= size) {
      throw InvalidInput("generator pair (" + std::to_string(p) + ", " + std::to_string(q) +
                         ") out of range for size " + std::to_string(size));
    }
    up[p].insert(q);
  }
  // Warshall closure, pivot outermost.
  for (Element k = 0; k < size; ++k) {
    for (Element p = 0; p < size; ++p) {
      if (up[p].contains(k)) up[p] |= up[k];
    }
  }
  return QuasiOrder(std::move(up));
}

QuasiOrder QuasiOrder::from_up_sets(std::vector<Subset> up) {
  const std::size_t n = up.size();
  for (Element p = 0; p < n; ++p) {
    if (up[p].universe() != n) throw InvalidInput("relation row has wrong width");
    if (!up[p].contains(p)) {
      throw InvalidInput("relation is not reflexive at " + std::to_string(p));
    }
  }
  for (Element p = 0; p < n; ++p) {
    bool ok = true;
    up[p].for_each([&](Element q) { ok = ok && up[q].is_subset_of(up[p]); });
    if (!ok) throw InvalidInput("relation is not transitive at " + std::to_string(p));
  }
  return QuasiOrder(std::move(up));
}

QuasiOrder QuasiOrder::dual() const { return QuasiOrder(down_); }

QuasiOrder QuasiOrder::induced(const Subset& A, std::vector<Element>* members) const {
  std::vector<Element> idx = A.indices();
  const std::size_t m = idx.size();
  std::vector<Subset> up(m, Subset(m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (leq(idx[i], idx[j])) up[i].insert(j);
    }
  }
  if (members != nullptr) *members = std::move(idx);
  return QuasiOrder(std::move(up));
}

std::vector<Element> QuasiOrder::linear_extension() const {
  std::vector<Element> order(size());
  std::iota(order.begin(), order.end(), Element{0});
  std::vector<std::size_t> below(size());
  for (Element p = 0; p < size(); ++p) below[p] = down_[p].count();
  std::stable_sort(order.begin(), order.end(),
                   [&](Element a, Element b) { return below[a] < below[b]; });
  return order;
}

std::vector<std::pair<Element, Element>> QuasiOrder::covers() const {
  std::vector<std::pair<Element, Element>> out;
  for (Element p = 0; p < size(); ++p) {
    for (Element q = 0; q < size(); ++q) {
      if (!less(p, q)) continue;
      bool between = false;
      for (Element r = 0; r < size() && !between; ++r) {
        between = less(p, r) && less(r, q);
      }
      if (!between) out.emplace_back(p, q);
    }
  }
  return out;
}

AsymQuotient asym_quotient(const QuasiOrder& Q) {
  const std::size_t n = Q.size();
  std::vector<Element> class_of(n, n);
  std::vector<Element> reps;
  for (Element p = 0; p < n; ++p) {
    if (class_of[p] != n) continue;
    const Element c = reps.size();
    reps.push_back(p);
    (Q.up_set(p) & Q.down_set(p)).for_each([&](Element q) { class_of[q] = c; });
  }
  const std::size_t m = reps.size();
  std::vector<Subset> up(m, Subset(m));
  for (Element i = 0; i < m; ++i) {
    for (Element j = 0; j < m; ++j) {
      if (Q.leq(reps[i], reps[j])) up[i].insert(j);
    }
  }
  return {QuasiOrder::from_up_sets(std::move(up)), std::move(class_of)};
}

Subset upper_bounds(const QuasiOrder& Q, const Subset& A) {
  Subset ub = Q.universe();
  A.for_each([&](Element a) { ub &= Q.up_set(a); });
  return ub;
}

Subset lower_bounds(const QuasiOrder& Q, const Subset& A) {
  Subset lb = Q.universe();
  A.for_each([&](Element a) { lb &= Q.down_set(a); });
  return lb;
}

namespace {

void require_partial_order(const QuasiOrder& Q, const char* what) {
  if (!Q.is_partial_order()) {
    throw PreconditionFailed(std::string(what) + " requires a partial order");
  }
}

// Least element of `bounds`, i.e. the member whose up-set covers all of it.
std::optional<Element> least_of(const QuasiOrder& Q, const Subset& bounds) {
  std::optional<Element> found;
  bounds.for_each([&](Element u) {
    if (!found && bounds.is_subset_of(Q.up_set(u))) found = u;
  });
  return found;
}

std::optional<Element> greatest_of(const QuasiOrder& Q, const Subset& bounds) {
  std::optional<Element> found;
  bounds.for_each([&](Element u) {
    if (!found && bounds.is_subset_of(Q.down_set(u))) found = u;
  });
  return found;
}

}  // namespace

std::optional<Element> sup(const QuasiOrder& Q, const Subset& A) {
  require_partial_order(Q, "sup");
  return least_of(Q, upper_bounds(Q, A));
}

std::optional<Element> inf(const QuasiOrder& Q, const Subset& A) {
  require_partial_order(Q, "inf");
  return greatest_of(Q, lower_bounds(Q, A));
}

std::optional<Element> minimum(const QuasiOrder& Q) { return least_of(Q, Q.universe()); }
std::optional<Element> maximum(const QuasiOrder& Q) { return greatest_of(Q, Q.universe()); }

Subset minimal_elements(const QuasiOrder& Q) {
  Subset out(Q.size());
  for (Element p = 0; p < Q.size(); ++p) {
    if (Q.down_set(p).is_subset_of(Q.up_set(p))) out.insert(p);
  }
  return out;
}

Subset positive_part(const QuasiOrder& Q) { return minimal_elements(Q).complement(); }

Subset maximal_elements(const QuasiOrder& Q) {
  Subset out(Q.size());
  for (Element p = 0; p < Q.size(); ++p) {
    if (Q.up_set(p).is_subset_of(Q.down_set(p))) out.insert(p);
  }
  return out;
}

bool compatible(const QuasiOrder& Q, Element q, Element r) {
  return (Q.down_set(q) & Q.down_set(r) & positive_part(Q)).count() != 0;
}

Subset atoms(const QuasiOrder& Q) {
  const Subset positive = positive_part(Q);
  Subset out(Q.size());
  positive.for_each([&](Element p) {
    const Subset below = Q.down_set(p) & positive;
    bool split = false;
    below.for_each([&](Element q) {
      if (split) return;
      // r ranges over members of `below` sharing no positive lower bound with q.
      below.for_each([&](Element r) {
        if (!split && !(Q.down_set(q) & Q.down_set(r)).intersects(positive)) split = true;
      });
    });
    if (!split) out.insert(p);
  });
  return out;
}

bool is_atomic(const QuasiOrder& Q) {
  const Subset positive = positive_part(Q);
  const Subset at = atoms(Q);
  bool ok = true;
  positive.for_each([&](Element p) { ok = ok && Q.down_set(p).intersects(at); });
  return ok;
}

bool is_atomless(const QuasiOrder& Q) { return atoms(Q).empty(); }

Subset down_set(const QuasiOrder& Q, Element p) { return Q.down_set(p); }

Subset upper_closure(const QuasiOrder& Q, const Subset& A) {
  Subset out(Q.size());
  A.for_each([&](Element a) { out |= Q.up_set(a); });
  return out;
}

Subset lower_closure(const QuasiOrder& Q, const Subset& A) {
  Subset out(Q.size());
  A.for_each([&](Element a) { out |= Q.down_set(a); });
  return out;
}

Subset interval(const QuasiOrder& Q, Element p, Element q) {
  return Q.up_set(p) & Q.down_set(q);
}

bool is_directed(const QuasiOrder& Q, const Subset& A) {
  if (A.empty()) return false;
  bool ok = true;
  A.for_each([&](Element a) {
    if (!ok) return;
    A.for_each([&](Element b) {
      if (ok && !(Q.up_set(a) & Q.up_set(b)).intersects(A)) ok = false;
    });
  });
  return ok;
}

bool is_filtered(const QuasiOrder& Q, const Subset& A) { return is_directed(Q.dual(), A); }

bool is_bounded_above(const QuasiOrder& Q, const Subset& A) {
  return !upper_bounds(Q, A).empty();
}

bool is_bounded_below(const QuasiOrder& Q, const Subset& A) {
  return !lower_bounds(Q, A).empty();
}

bool is_order_preserving(const QuasiOrder& dom, const QuasiOrder& cod,
                         std::span<const Element> image) {
  for (Element p = 0; p < dom.size(); ++p) {
    bool ok = true;
    dom.up_set(p).for_each([&](Element q) { ok = ok && cod.leq(image[p], image[q]); });
    if (!ok) return false;
  }
  return true;
}

bool is_order_reflecting(const QuasiOrder& dom, const QuasiOrder& cod,
                         std::span<const Element> image) {
  for (Element p = 0; p < dom.size(); ++p) {
    for (Element q = 0; q < dom.size(); ++q) {
      if (cod.leq(image[p], image[q]) && !dom.leq(p, q)) return false;
    }
  }
  return true;
}

MonotoneMap::MonotoneMap(std::shared_ptr<const QuasiOrder> dom,
                         std::shared_ptr<const QuasiOrder> cod, std::vector<Element> image)
    : dom_(std::move(dom)), cod_(std::move(cod)), image_(std::move(image)) {
  if (image_.size() != dom_->size()) throw InvalidInput("image length differs from domain size");
  for (Element v : image_) {
    if (v >= cod_->size()) throw InvalidInput("image value out of codomain range");
  }
  if (!is_order_preserving(*dom_, *cod_, image_)) {
    throw InvalidInput("map is not order preserving");
  }
  reflecting_ = is_order_reflecting(*dom_, *cod_, image_);
}

bool MonotoneMap::is_injective() const {
  Subset seen(cod_->size());
  for (Element v : image_) {
    if (seen.contains(v)) return false;
    seen.insert(v);
  }
  return true;
}

Subset MonotoneMap::range() const {
  Subset out(cod_->size());
  for (Element v : image_) out.insert(v);
  return out;
}

Subset MonotoneMap::apply(const Subset& A) const {
  Subset out(cod_->size());
  A.for_each([&](Element a) { out.insert(image_[a]); });
  return out;
}

}  // namespace latkit
