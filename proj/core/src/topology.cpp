#include "latkit/topology.hpp"

#include <algorithm>
#include <set>

#include "latkit/errors.hpp"

namespace latkit {

namespace {

constexpr std::size_t kMaxPoints = 16;
constexpr std::size_t kMaxCategoryPoints = 12;

void require_points(std::size_t n) {
  if (n > kMaxPoints) throw InvalidInput("topology has too many points");
}

}  // namespace

FiniteTopology::FiniteTopology(std::size_t points, std::vector<Subset> opens) {
  require_points(points);
  n_ = points;
  for (const Subset& U : opens) {
    if (U.universe() != points) throw InvalidInput("open set has the wrong universe");
  }
  std::sort(opens.begin(), opens.end());
  opens.erase(std::unique(opens.begin(), opens.end()), opens.end());
  opens_ = std::move(opens);
  open_mask_.assign(std::size_t{1} << n_, false);
  for (const Subset& U : opens_) open_mask_[U.mask()] = true;
  if (!open_mask_[0] || !open_mask_[(std::size_t{1} << n_) - 1]) {
    throw InvalidInput("topology must contain the empty set and the whole space");
  }
  for (const Subset& U : opens_) {
    for (const Subset& V : opens_) {
      if (!open_mask_[(U | V).mask()] || !open_mask_[(U & V).mask()]) {
        throw InvalidInput("open sets are not closed under union and intersection");
      }
    }
  }
  finish();
}

void FiniteTopology::finish() {
  nbhd_.assign(n_, Subset::full(n_));
  for (const Subset& U : opens_) {
    U.for_each([&](Element x) { nbhd_[x] &= U; });
  }
}

FiniteTopology FiniteTopology::generated(std::size_t points, const std::vector<Subset>& generators) {
  require_points(points);
  std::set<std::uint64_t> family{0, (std::uint64_t{1} << points) - 1};
  for (const Subset& G : generators) {
    if (G.universe() != points) throw InvalidInput("generator has the wrong universe");
    family.insert(G.mask());
  }
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<std::uint64_t> current(family.begin(), family.end());
    for (std::uint64_t a : current) {
      for (std::uint64_t b : current) {
        grew |= family.insert(a | b).second;
        grew |= family.insert(a & b).second;
      }
    }
  }
  FiniteTopology T;
  T.n_ = points;
  T.open_mask_.assign(std::size_t{1} << points, false);
  for (std::uint64_t m : family) {
    T.opens_.push_back(Subset::from_mask(points, m));
    T.open_mask_[m] = true;
  }
  std::sort(T.opens_.begin(), T.opens_.end());
  T.finish();
  return T;
}

FiniteTopology FiniteTopology::from_preorder(const QuasiOrder& leq) {
  const std::size_t n = leq.size();
  require_points(n);
  FiniteTopology T;
  T.n_ = n;
  T.open_mask_.assign(std::size_t{1} << n, false);
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    const Subset S = Subset::from_mask(n, m);
    if (upper_closure(leq, S) == S) {
      T.opens_.push_back(S);
      T.open_mask_[m] = true;
    }
  }
  std::sort(T.opens_.begin(), T.opens_.end());
  T.finish();
  return T;
}

bool FiniteTopology::is_open(const Subset& S) const {
  if (S.universe() != n_) throw InvalidInput("subset has the wrong universe");
  return open_mask_[S.mask()];
}

Subset FiniteTopology::interior(const Subset& S) const {
  if (S.universe() != n_) throw InvalidInput("subset has the wrong universe");
  Subset out(n_);
  for (Element x = 0; x < n_; ++x) {
    if (nbhd_[x].is_subset_of(S)) out.insert(x);
  }
  return out;
}

Subset FiniteTopology::closure(const Subset& S) const { return interior(S.complement()).complement(); }

FiniteTopology discrete_topology(std::size_t n) {
  std::vector<Subset> gens;
  for (Element x = 0; x < n; ++x) gens.push_back(Subset::of(n, {x}));
  return FiniteTopology::generated(n, gens);
}

FiniteTopology indiscrete_topology(std::size_t n) { return FiniteTopology::generated(n, {}); }

FiniteTopology sierpinski() {
  return FiniteTopology(2, {Subset(2), Subset::of(2, {1}), Subset::full(2)});
}

FiniteTopology disjoint_union(const FiniteTopology& A, const FiniteTopology& B) {
  const std::size_t n = A.points() + B.points();
  std::vector<Subset> opens;
  for (const Subset& U : A.opens()) {
    for (const Subset& V : B.opens()) {
      Subset W(n);
      U.for_each([&](Element x) { W.insert(x); });
      V.for_each([&](Element x) { W.insert(A.points() + x); });
      opens.push_back(std::move(W));
    }
  }
  return FiniteTopology(n, std::move(opens));
}

FiniteTopology subspace(const FiniteTopology& T, const Subset& S) {
  const std::vector<Element> members = S.indices();
  const std::size_t m = members.size();
  std::vector<Subset> opens;
  for (const Subset& U : T.opens()) {
    Subset W(m);
    for (std::size_t i = 0; i < m; ++i) {
      if (U.contains(members[i])) W.insert(i);
    }
    opens.push_back(std::move(W));
  }
  return FiniteTopology(m, std::move(opens));
}

std::vector<FiniteTopology> enumerate_topologies(std::size_t n) {
  if (n > 5) throw InvalidInput("enumerate_topologies: at most 5 points");
  // Finite topologies correspond to preorders (specialization order).
  std::vector<std::pair<Element, Element>> cells;
  for (Element p = 0; p < n; ++p) {
    for (Element q = 0; q < n; ++q) {
      if (p != q) cells.emplace_back(p, q);
    }
  }
  std::vector<FiniteTopology> out;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << cells.size()); ++code) {
    std::vector<Subset> up(n, Subset(n));
    for (Element p = 0; p < n; ++p) up[p].insert(p);
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if ((code >> i) & 1u) up[cells[i].first].insert(cells[i].second);
    }
    bool transitive = true;
    for (Element p = 0; p < n && transitive; ++p) {
      up[p].for_each([&](Element q) { transitive = transitive && up[q].is_subset_of(up[p]); });
    }
    if (transitive) out.push_back(FiniteTopology::from_preorder(QuasiOrder::from_up_sets(std::move(up))));
  }
  return out;
}

bool is_regular_open(const FiniteTopology& T, const Subset& S) {
  return T.interior(T.closure(S)) == S;
}

std::vector<Subset> regular_opens(const FiniteTopology& T) {
  std::vector<Subset> out;
  for (const Subset& U : T.opens()) {
    if (is_regular_open(T, U)) out.push_back(U);
  }
  return out;
}

bool is_nowhere_dense(const FiniteTopology& T, const Subset& S) {
  return T.interior(T.closure(S)).empty();
}

Element BooleanAlgebraView::index_of(const Subset& S) const {
  const auto it = std::lower_bound(members.begin(), members.end(), S);
  if (it == members.end() || *it != S) throw InvalidInput("set is not a member of the algebra");
  return static_cast<Element>(it - members.begin());
}

namespace {

QuasiOrder inclusion_order(const std::vector<Subset>& members) {
  return QuasiOrder::from_relation(members.size(), [&](Element a, Element b) {
    return members[a].is_subset_of(members[b]);
  });
}

}  // namespace

BooleanAlgebraView ro_algebra(const FiniteTopology& T) {
  std::vector<Subset> members = regular_opens(T);
  const std::size_t k = members.size();
  QuasiOrder order = inclusion_order(members);
  BooleanAlgebraView view{members, LatticeView(QuasiOrder::from_relation(0, [](Element, Element) {
                            return true;
                          })),
                          {}};
  std::vector<Element> joins(k * k), meets(k * k);
  for (Element a = 0; a < k; ++a) {
    for (Element b = 0; b < k; ++b) {
      joins[a * k + b] = view.index_of(T.interior(T.closure(members[a] | members[b])));
      meets[a * k + b] = view.index_of(members[a] & members[b]);
    }
  }
  view.lattice = LatticeView::from_tables(std::move(order), std::move(joins), std::move(meets));
  view.complement.resize(k);
  for (Element a = 0; a < k; ++a) {
    view.complement[a] = view.index_of(T.closure(members[a]).complement());
  }
  return view;
}

std::vector<Subset> meager_ideal(const FiniteTopology& T) {
  std::vector<Subset> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << T.points()); ++m) {
    const Subset S = Subset::from_mask(T.points(), m);
    if (is_nowhere_dense(T, S)) out.push_back(S);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_meager(const FiniteTopology& T, const Subset& S) { return is_nowhere_dense(T, S); }

Subset largest_open_meager(const FiniteTopology& T) {
  Subset out(T.points());
  for (const Subset& U : T.opens()) {
    if (is_meager(T, U)) out |= U;
  }
  return out;
}

bool is_baire(const FiniteTopology& T) {
  for (const Subset& U : T.opens()) {
    if (!U.empty() && is_meager(T, U)) return false;
  }
  return true;
}

bool has_baire_property(const FiniteTopology& T, const Subset& S) {
  for (const Subset& U : T.opens()) {
    if (is_meager(T, S ^ U)) return true;
  }
  return false;
}

Element CategoryAlgebra::class_of(const Subset& S) const {
  const Element c = class_of_mask.at(S.mask());
  if (c == LatticeView::kAbsent) throw InvalidInput("set lacks the Baire property");
  return c;
}

CategoryAlgebra category_algebra(const FiniteTopology& T) {
  const std::size_t n = T.points();
  if (n > kMaxCategoryPoints) throw InvalidInput("category_algebra: at most 12 points");
  const std::uint64_t count = std::uint64_t{1} << n;
  std::vector<bool> meager(count);
  for (std::uint64_t m = 0; m < count; ++m) meager[m] = is_meager(T, Subset::from_mask(n, m));
  std::vector<std::uint64_t> open_masks;
  for (const Subset& U : T.opens()) open_masks.push_back(U.mask());

  std::vector<std::uint64_t> reps;
  std::vector<Element> class_of(count, LatticeView::kAbsent);
  std::size_t bp = 0;
  for (std::uint64_t m = 0; m < count; ++m) {
    const bool has_bp = std::any_of(open_masks.begin(), open_masks.end(),
                                    [&](std::uint64_t u) { return meager[m ^ u]; });
    if (!has_bp) continue;
    ++bp;
    Element c = 0;
    while (c < reps.size() && !meager[m ^ reps[c]]) ++c;
    if (c == reps.size()) reps.push_back(m);
    class_of[m] = c;
  }

  const std::size_t k = reps.size();
  std::vector<Subset> members;
  for (std::uint64_t r : reps) members.push_back(Subset::from_mask(n, r));
  // Representatives are least bitmasks; Subset order on one universe agrees.
  QuasiOrder order = QuasiOrder::from_relation(k, [&](Element a, Element b) {
    return static_cast<bool>(meager[reps[a] & ~reps[b]]);
  });
  if (!order.is_partial_order()) throw Error("category algebra order is not antisymmetric");
  LatticeView lattice(order);
  std::vector<Element> complement(k);
  const std::uint64_t full = count - 1;
  for (Element a = 0; a < k; ++a) complement[a] = class_of[full & ~reps[a]];

  const Subset U = largest_open_meager(T);
  const Subset Y = T.closure(U).complement();
  const FiniteTopology sub = subspace(T, Y);
  const BooleanAlgebraView ro_sub = ro_algebra(sub);
  const std::vector<Element> points = Y.indices();
  auto lift = [&](const Subset& local) {
    Subset out(n);
    local.for_each([&](Element i) { out.insert(points[i]); });
    return out;
  };
  std::vector<Subset> ro_members;
  for (const Subset& G : ro_sub.members) ro_members.push_back(lift(G));

  CategoryAlgebra C{BooleanAlgebraView{std::move(members), std::move(lattice), std::move(complement)},
                    std::move(class_of),
                    bp,
                    U,
                    BooleanAlgebraView{ro_members, ro_sub.lattice, ro_sub.complement},
                    {}};
  for (const Subset& G : C.ro.members) C.iso.push_back(C.class_of_mask[G.mask()]);
  return C;
}

Verdict verify_category_iso(const CategoryAlgebra& C) {
  const std::size_t k = C.ro.members.size();
  if (k != C.algebra.members.size()) {
    return Verdict::fail({k, C.algebra.members.size()}, "algebras differ in size");
  }
  Subset hit(k);
  for (Element i = 0; i < k; ++i) {
    if (C.iso[i] == LatticeView::kAbsent) {
      return Verdict::fail({i}, "regular open set without the Baire property", C.ro.members[i]);
    }
    if (hit.contains(C.iso[i])) return Verdict::fail({i}, "map is not injective");
    hit.insert(C.iso[i]);
  }
  for (Element i = 0; i < k; ++i) {
    for (Element j = 0; j < k; ++j) {
      if (C.ro.lattice.leq(i, j) != C.algebra.lattice.leq(C.iso[i], C.iso[j])) {
        return Verdict::fail({i, j}, "order not preserved and reflected");
      }
    }
    if (C.iso[C.ro.complement[i]] != C.algebra.complement[C.iso[i]]) {
      return Verdict::fail({i}, "complement not preserved");
    }
  }
  return Verdict::pass();
}

Verdict clopen_basis_check(const FiniteTopology& T) {
  std::vector<Subset> clopens;
  for (const Subset& U : T.opens()) {
    if (T.is_clopen(U)) clopens.push_back(U);
  }
  for (const Subset& U : T.opens()) {
    Subset cover(T.points());
    for (const Subset& V : clopens) {
      if (V.is_subset_of(U)) cover |= V;
    }
    if (cover != U) throw NotZeroDimensional();
  }
  const CategoryAlgebra C = category_algebra(T);
  Subset D(C.algebra.members.size());
  for (const Subset& V : clopens) D.insert(C.class_of(V));
  return is_basis(C.algebra.lattice, D);
}

}  // namespace latkit
