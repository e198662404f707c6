#include "latkit/lattice.hpp"

#include <algorithm>
#include <random>

#include "latkit/errors.hpp"

namespace latkit {

namespace {

constexpr std::size_t kMaxEnumeratedSubset = 24;

void require_enumerable(const Subset& A, const char* what) {
  if (A.count() > kMaxEnumeratedSubset) {
    throw InvalidInput(std::string(what) + ": subset too large for exhaustive enumeration");
  }
}

// Calls f(mask, B) for every subset B of `members` (global indices), with bit
// i of mask set iff members[i] is in B.  The empty subset comes first.
template <typename F>
void for_each_subfamily(const std::vector<Element>& members, std::size_t universe, F&& f) {
  const std::size_t m = members.size();
  Subset B(universe);
  f(std::uint64_t{0}, static_cast<const Subset&>(B));
  for (std::uint64_t i = 1; i < (std::uint64_t{1} << m); ++i) {
    const auto bit = static_cast<std::size_t>(__builtin_ctzll(i));
    const std::uint64_t gray = i ^ (i >> 1);
    if ((gray >> bit) & 1u) {
      B.insert(members[bit]);
    } else {
      B.erase(members[bit]);
    }
    f(gray, static_cast<const Subset&>(B));
  }
}

}  // namespace

LatticeView::LatticeView(QuasiOrder order) : order_(std::move(order)) {
  if (!order_.is_partial_order()) {
    throw PreconditionFailed("LatticeView requires a partial order");
  }
  const std::size_t n = order_.size();
  joins_.assign(n * n, kAbsent);
  meets_.assign(n * n, kAbsent);
  for (Element p = 0; p < n; ++p) {
    for (Element q = p; q < n; ++q) {
      const Subset pair = Subset::of(n, {p, q});
      if (auto j = sup(order_, pair)) joins_[p * n + q] = joins_[q * n + p] = *j;
      if (auto m = inf(order_, pair)) meets_[p * n + q] = meets_[q * n + p] = *m;
    }
  }
  finish();
}

LatticeView::LatticeView(QuasiOrder order, std::vector<Element> joins, std::vector<Element> meets)
    : order_(std::move(order)), joins_(std::move(joins)), meets_(std::move(meets)) {}

LatticeView LatticeView::from_tables(QuasiOrder order, std::vector<Element> joins,
                                     std::vector<Element> meets) {
  const std::size_t n = order.size();
  if (!order.is_partial_order()) throw PreconditionFailed("LatticeView requires a partial order");
  if (joins.size() != n * n || meets.size() != n * n) {
    throw InvalidInput("LatticeView::from_tables: table size mismatch");
  }
  LatticeView view(std::move(order), std::move(joins), std::move(meets));
  view.finish();
  return view;
}

void LatticeView::finish() {
  total_joins_ = std::none_of(joins_.begin(), joins_.end(), [](Element e) { return e == kAbsent; });
  total_meets_ = std::none_of(meets_.begin(), meets_.end(), [](Element e) { return e == kAbsent; });
  bottom_ = minimum(order_);
  top_ = maximum(order_);
}

std::optional<Element> LatticeView::join(Element p, Element q) const {
  const Element j = joins_[p * size() + q];
  if (j == kAbsent) return std::nullopt;
  return j;
}

std::optional<Element> LatticeView::meet(Element p, Element q) const {
  const Element m = meets_[p * size() + q];
  if (m == kAbsent) return std::nullopt;
  return m;
}

std::vector<Element> LatticeView::complements(Element p) const {
  std::vector<Element> out;
  if (!bottom_ || !top_) return out;
  for (Element q = 0; q < size(); ++q) {
    if (meet(p, q) == bottom_ && join(p, q) == top_) out.push_back(q);
  }
  return out;
}

void LatticeView::require_lattice() const {
  if (!is_lattice()) throw NotALattice();
}

Classification classify(const QuasiOrder& Q) {
  Classification c;
  c.partial_order = Q.is_partial_order();
  if (!c.partial_order) return c;
  const LatticeView L(Q);
  const bool nonempty = Q.size() > 0;
  c.join_semilattice = L.is_join_semilattice();
  c.meet_semilattice = L.is_meet_semilattice();
  c.lattice = L.is_lattice();
  c.pointed = L.bottom().has_value();
  c.bounded = c.lattice && L.bottom() && L.top();
  // Bounded subsets have joins iff the empty set does (Q nonempty) and every
  // pair with a common upper bound has a join.
  c.complete_semilattice = !nonempty || c.pointed;
  for (Element a = 0; a < Q.size() && c.complete_semilattice; ++a) {
    for (Element b = a + 1; b < Q.size() && c.complete_semilattice; ++b) {
      if (Q.up_set(a).intersects(Q.up_set(b))) c.complete_semilattice = L.join(a, b).has_value();
    }
  }
  c.complete_lattice = c.lattice && nonempty;
  if (c.bounded) {
    c.boolean = is_distributive(L).holds;
    for (Element p = 0; p < Q.size() && c.boolean; ++p) c.boolean = !L.complements(p).empty();
  }
  return c;
}

Verdict is_distributive(const LatticeView& L) {
  L.require_lattice();
  const std::size_t n = L.size();
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      for (Element c = 0; c < n; ++c) {
        const Element lhs = L.meet_unchecked(a, L.join_unchecked(b, c));
        const Element rhs = L.join_unchecked(L.meet_unchecked(a, b), L.meet_unchecked(a, c));
        if (lhs != rhs) return Verdict::fail({a, b, c}, "a^(bvc) != (a^b)v(a^c)");
        const Element lhs2 = L.join_unchecked(a, L.meet_unchecked(b, c));
        const Element rhs2 = L.meet_unchecked(L.join_unchecked(a, b), L.join_unchecked(a, c));
        if (lhs2 != rhs2) return Verdict::fail({a, b, c}, "av(b^c) != (avb)^(avc)");
      }
    }
  }
  return Verdict::pass();
}

namespace {

// join_first selects JID (outer join, inner meet) or MID (roles swapped).
InfiniteDistributivityVerdict infinite_distributivity(const LatticeView& L, bool jid,
                                                      std::uint64_t seed) {
  L.require_lattice();
  const std::size_t n = L.size();
  InfiniteDistributivityVerdict v;
  if (n == 0) return v;
  auto outer = [&](Element p, Element q) {
    return jid ? L.join_unchecked(p, q) : L.meet_unchecked(p, q);
  };
  auto inner = [&](Element p, Element q) {
    return jid ? L.meet_unchecked(p, q) : L.join_unchecked(p, q);
  };
  const Element outer_unit = jid ? *L.bottom() : *L.top();

  auto check = [&](const Subset& B) {
    Element big = outer_unit;
    B.for_each([&](Element b) { big = outer(big, b); });
    for (Element a = 0; a < n; ++a) {
      Element rhs = outer_unit;
      B.for_each([&](Element b) { rhs = outer(rhs, inner(a, b)); });
      ++v.instances;
      if (inner(a, big) != rhs) {
        v.holds = false;
        v.witness = Witness{{a}, B, jid ? "a^(vB) != v(a^B)" : "av(^B) != ^(avB)"};
        return false;
      }
    }
    return true;
  };

  const std::vector<Element> all = L.order().universe().indices();
  if (n <= 14) {
    bool ok = true;
    for_each_subfamily(all, n, [&](std::uint64_t, const Subset& B) {
      if (ok) ok = check(B);
    });
    return v;
  }
  v.exhaustive = false;
  Subset B(n);
  if (!check(B)) return v;
  for (Element x = 0; x < n; ++x) {
    for (Element y = x; y < n; ++y) {
      for (Element z = y; z < n; ++z) {
        if (!check(Subset::of(n, {x, y, z}))) return v;
      }
    }
  }
  std::mt19937_64 rng(seed);
  for (int s = 0; s < 10000; ++s) {
    B.clear();
    for (Element e = 0; e < n; ++e) {
      if (rng() & 1u) B.insert(e);
    }
    if (!check(B)) return v;
  }
  return v;
}

}  // namespace

InfiniteDistributivityVerdict check_jid(const LatticeView& L, std::uint64_t seed) {
  return infinite_distributivity(L, true, seed);
}

InfiniteDistributivityVerdict check_mid(const LatticeView& L, std::uint64_t seed) {
  return infinite_distributivity(L, false, seed);
}

Verdict is_convex(const QuasiOrder& P, const Subset& A) {
  std::optional<Verdict> failure;
  A.for_each([&](Element p) {
    if (failure) return;
    A.for_each([&](Element q) {
      if (failure || !P.leq(p, q)) return;
      const Subset missing = interval(P, p, q) - A;
      if (!missing.empty()) {
        failure = Verdict::fail({p, q, missing.first()}, "interval [p,q] leaves the subset");
      }
    });
  });
  return failure ? *failure : Verdict::pass();
}

namespace {

DirectionalVerdict regularity_impl(const QuasiOrder& P, const Subset& A, bool include_empty) {
  if (!P.is_partial_order()) throw PreconditionFailed("regularity requires a partial order");
  require_enumerable(A, "regularity");
  std::vector<Element> members;
  const QuasiOrder sub = P.induced(A, &members);
  const std::size_t m = members.size();
  DirectionalVerdict v;
  for_each_subfamily(members, P.size(), [&](std::uint64_t mask, const Subset& B) {
    if (mask == 0 && !include_empty) return;
    if (!v.up.holds && !v.down.holds) return;
    const Subset local = Subset::from_mask(m, mask);
    if (v.up.holds) {
      if (auto in_a = sup(sub, local)) {
        const auto in_p = sup(P, B);
        if (!in_p || *in_p != members[*in_a]) {
          std::vector<Element> w{members[*in_a]};
          if (in_p) w.push_back(*in_p);
          v.up = Verdict::fail(std::move(w), "supremum in the subset differs from ambient", B);
        }
      }
    }
    if (v.down.holds) {
      if (auto in_a = inf(sub, local)) {
        const auto in_p = inf(P, B);
        if (!in_p || *in_p != members[*in_a]) {
          std::vector<Element> w{members[*in_a]};
          if (in_p) w.push_back(*in_p);
          v.down = Verdict::fail(std::move(w), "infimum in the subset differs from ambient", B);
        }
      }
    }
  });
  return v;
}

}  // namespace

DirectionalVerdict preregularity(const QuasiOrder& P, const Subset& A) {
  return regularity_impl(P, A, false);
}

DirectionalVerdict regularity(const QuasiOrder& P, const Subset& A) {
  return regularity_impl(P, A, true);
}

bool is_preregular(const QuasiOrder& P, const Subset& A) { return preregularity(P, A).holds(); }
bool is_regular(const QuasiOrder& P, const Subset& A) { return regularity(P, A).holds(); }

OrderClosedVerdict order_closed_checks(const QuasiOrder& P, const Subset& A) {
  if (!P.is_partial_order()) throw PreconditionFailed("order closure requires a partial order");
  require_enumerable(A, "order_closed_checks");
  OrderClosedVerdict v;
  const std::vector<Element> members = A.indices();
  for_each_subfamily(members, P.size(), [&](std::uint64_t mask, const Subset& B) {
    if (mask == 0) return;
    if (auto s = sup(P, B); s && !A.contains(*s)) {
      if (v.up_oc.holds) v.up_oc = Verdict::fail({*s}, "supremum outside the subset", B);
      if (v.up_boc.holds && upper_bounds(P, B).intersects(A)) {
        v.up_boc = Verdict::fail({*s}, "bounded supremum outside the subset", B);
      }
    }
    if (auto i = inf(P, B); i && !A.contains(*i)) {
      if (v.down_oc.holds) v.down_oc = Verdict::fail({*i}, "infimum outside the subset", B);
      if (v.down_boc.holds && lower_bounds(P, B).intersects(A)) {
        v.down_boc = Verdict::fail({*i}, "bounded infimum outside the subset", B);
      }
    }
  });
  return v;
}

Subset order_closure_up(const QuasiOrder& P, const Subset& A) {
  if (!P.is_partial_order()) throw PreconditionFailed("order closure requires a partial order");
  require_enumerable(A, "order_closure_up");
  Subset out(P.size());
  for_each_subfamily(A.indices(), P.size(), [&](std::uint64_t, const Subset& B) {
    if (auto s = sup(P, B)) out.insert(*s);
  });
  return out;
}

Subset order_closure_down(const QuasiOrder& P, const Subset& A) {
  return order_closure_up(P.dual(), A);
}

bool is_flat(const QuasiOrder& P, const Subset& A) {
  if (A.count() <= 1) return P.size() > 0;
  const std::vector<Element> members = A.indices();
  const auto base = inf(P, Subset::of(P.size(), {members[0], members[1]}));
  if (!base) return false;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (inf(P, Subset::of(P.size(), {members[i], members[j]})) != base) return false;
    }
  }
  return true;
}

Verdict is_flat_complete(const LatticeView& L) {
  L.require_lattice();
  // A finite nonempty lattice is complete, so every flat subset has a join;
  // the scan is kept literal up to 16 elements.
  if (L.size() > 16) return Verdict::pass();
  std::optional<Verdict> failure;
  for_each_subfamily(L.order().universe().indices(), L.size(),
                     [&](std::uint64_t, const Subset& A) {
                       if (!failure && is_flat(L.order(), A) && !sup(L.order(), A)) {
                         failure = Verdict::fail({}, "flat subset without supremum", A);
                       }
                     });
  return failure ? *failure : Verdict::pass();
}

Verdict is_dense(const QuasiOrder& Q, const Subset& D) {
  const Subset positive = positive_part(Q);
  const Subset dense_positive = D & positive;
  for (Element p = positive.first(); p < Q.size(); p = positive.next(p)) {
    if (!Q.down_set(p).intersects(dense_positive)) return Verdict::fail({p}, "no member of D+ below p");
  }
  return Verdict::pass();
}

Verdict is_join_dense(const QuasiOrder& P, const Subset& D) {
  for (Element p = 0; p < P.size(); ++p) {
    const auto s = sup(P, D & P.down_set(p));
    if (s != p) return Verdict::fail({p}, "p is not the join of D_p");
  }
  return Verdict::pass();
}

Verdict is_interval_predense(const QuasiOrder& P, const Subset& D) {
  for (Element p = 0; p < P.size(); ++p) {
    for (Element q = 0; q < P.size(); ++q) {
      if (!P.less(p, q)) continue;
      if (((D & P.down_set(q)) - P.down_set(p)).empty()) {
        return Verdict::fail({p, q}, "no d in D with d <= q and d not <= p");
      }
    }
  }
  return Verdict::pass();
}

Verdict is_strongly_interval_predense(const LatticeView& L, const Subset& D) {
  const QuasiOrder& P = L.order();
  for (Element p = 0; p < P.size(); ++p) {
    for (Element q = 0; q < P.size(); ++q) {
      if (!P.less(p, q)) continue;
      bool found = false;
      const Subset cands = D & P.down_set(q);
      cands.for_each([&](Element d) {
        if (found) return;
        const auto m = L.meet(d, p);
        found = m && *m != d && D.contains(*m);
      });
      if (!found) return Verdict::fail({p, q}, "no d in D_q with d^p < d and d^p in D");
    }
  }
  return Verdict::pass();
}

Verdict is_meet_subsemilattice(const LatticeView& L, const Subset& D) {
  std::optional<Verdict> failure;
  D.for_each([&](Element a) {
    D.for_each([&](Element b) {
      if (failure) return;
      const auto m = L.meet(a, b);
      if (!m || !D.contains(*m)) failure = Verdict::fail({a, b}, "meet leaves the subset");
    });
  });
  return failure ? *failure : Verdict::pass();
}

Verdict is_join_subsemilattice(const LatticeView& L, const Subset& D) {
  std::optional<Verdict> failure;
  D.for_each([&](Element a) {
    D.for_each([&](Element b) {
      if (failure) return;
      const auto j = L.join(a, b);
      if (!j || !D.contains(*j)) failure = Verdict::fail({a, b}, "join leaves the subset");
    });
  });
  return failure ? *failure : Verdict::pass();
}

bool is_sublattice(const LatticeView& L, const Subset& D) {
  return is_meet_subsemilattice(L, D).holds && is_join_subsemilattice(L, D).holds;
}

std::optional<Subset> incompatible_decomposition(const LatticeView& L, const Subset& D,
                                                 Element a) {
  L.require_lattice();
  const Element zero = *L.bottom();
  const std::size_t n = L.size();
  if (a == zero) return Subset(n);
  Subset pool = D & L.order().down_set(a);
  pool.erase(zero);
  std::vector<Element> cands = pool.indices();
  std::reverse(cands.begin(), cands.end());
  // suffix[i] = join of cands[i..]; bounds what the remaining choices can reach.
  std::vector<Element> suffix(cands.size() + 1, zero);
  for (std::size_t i = cands.size(); i-- > 0;) suffix[i] = L.join_unchecked(cands[i], suffix[i + 1]);

  Subset chosen(n);
  auto search = [&](auto&& self, std::size_t i, Element acc) -> bool {
    if (acc == a) return true;
    if (i == cands.size() || L.join_unchecked(acc, suffix[i]) != a) return false;
    const Element c = cands[i];
    bool disjoint = true;
    chosen.for_each([&](Element b) { disjoint = disjoint && L.meet_unchecked(b, c) == zero; });
    if (disjoint) {
      chosen.insert(c);
      if (self(self, i + 1, L.join_unchecked(acc, c))) return true;
      chosen.erase(c);
    }
    return self(self, i + 1, acc);
  };
  if (search(search, 0, zero)) return chosen;
  return std::nullopt;
}

Verdict is_basis(const LatticeView& L, const Subset& D) {
  if (!L.is_lattice() || !L.bottom()) {
    throw PreconditionFailed("basis check requires a pointed lattice");
  }
  if (auto v = is_meet_subsemilattice(L, D); !v.holds) return v;
  for (Element a = 0; a < L.size(); ++a) {
    if (!incompatible_decomposition(L, D, a)) {
      return Verdict::fail({a}, "no pairwise incompatible family from D joins to a");
    }
  }
  return Verdict::pass();
}

DensityReport density_checks(const LatticeView& L, const Subset& D) {
  DensityReport r;
  r.dense = is_dense(L.order(), D);
  r.join_dense = is_join_dense(L.order(), D);
  r.interval_predense = is_interval_predense(L.order(), D);
  r.strongly_interval_predense = is_strongly_interval_predense(L, D);
  if (L.is_lattice() && L.bottom()) r.basis = is_basis(L, D);
  return r;
}

SubposetAnalysis::SubposetAnalysis(const QuasiOrder& parent, Subset subset)
    : subset_(std::move(subset)) {
  convex_ = is_convex(parent, subset_);
  preregular_ = preregularity(parent, subset_);
  regular_ = regularity(parent, subset_);
  order_closed_ = order_closed_checks(parent, subset_);
  flat_ = is_flat(parent, subset_);
  dense_ = is_dense(parent, subset_);
  join_dense_ = is_join_dense(parent, subset_);
  interval_predense_ = is_interval_predense(parent, subset_);
  const LatticeView L(parent);
  if (L.is_lattice()) {
    sip_ = is_strongly_interval_predense(L, subset_);
    if (L.bottom()) basis_ = is_basis(L, subset_);
  }
}

}  // namespace latkit
