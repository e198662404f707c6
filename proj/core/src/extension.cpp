#include <algorithm>

#include "latkit/embedding.hpp"
#include "latkit/errors.hpp"

namespace latkit {

PartialMap PartialMap::restrict(const MonotoneMap& s, const Subset& domain) {
  if (domain.universe() != s.dom().size()) throw InvalidInput("domain has the wrong universe");
  PartialMap out{domain, std::vector<Element>(s.dom().size(), LatticeView::kAbsent)};
  domain.for_each([&](Element d) { out.image[d] = s(d); });
  return out;
}

namespace {

constexpr std::size_t kMaxFamily = 20;

void require(bool ok, const char* hypothesis) {
  if (!ok) throw HypothesisFailed(hypothesis);
}

Subset image_of(const Subset& A, const std::vector<Element>& sigma, std::size_t universe) {
  Subset out(universe);
  A.for_each([&](Element a) { out.insert(sigma[a]); });
  return out;
}

// sigma(sup^L A) = sup^M sigma[A] whenever A within D is nonempty and sup^L A
// exists and lies in D.
bool preserves_nonempty_sups_in(const QuasiOrder& L, const Subset& D,
                                const std::vector<Element>& sigma, const QuasiOrder& M) {
  bool ok = true;
  for_each_subset(D, [&](const Subset& A) {
    if (!ok || A.empty()) return;
    const auto s = sup(L, A);
    if (!s || !D.contains(*s)) return;
    ok = sup(M, image_of(A, sigma, M.size())) == sigma[*s];
  });
  return ok;
}

bool preserves_boundedness_in(const QuasiOrder& L, const Subset& D,
                              const std::vector<Element>& sigma, const QuasiOrder& M) {
  bool ok = true;
  for_each_subset(D, [&](const Subset& A) {
    if (ok && is_bounded_above(L, A)) ok = is_bounded_above(M, image_of(A, sigma, M.size()));
  });
  return ok;
}

void validate_values(const Subset& D, const std::vector<Element>& sigma, std::size_t l_size,
                     std::size_t m_size) {
  if (D.universe() != l_size || sigma.size() != l_size) {
    throw InvalidInput("partial map does not match the size of its domain order");
  }
  D.for_each([&](Element d) {
    if (sigma[d] >= m_size) throw InvalidInput("partial map value out of codomain range");
  });
  if (D.count() > kMaxFamily) throw InvalidInput("subset too large for hypothesis checks");
}

}  // namespace

MonotoneMap extend_from_join_dense(std::shared_ptr<const QuasiOrder> L, const Subset& D,
                                   const std::vector<Element>& sigma,
                                   std::shared_ptr<const QuasiOrder> M) {
  validate_values(D, sigma, L->size(), M->size());
  require(L->is_partial_order(), "L-lattice");
  const LatticeView lv(*L);
  require(lv.is_lattice(), "L-lattice");
  require(check_jid(lv).holds, "L-JID");
  require(M->is_partial_order() && classify(*M).complete_semilattice, "M-complete-semilattice");
  require(is_join_dense(*L, D).holds, "D-join-dense");
  require(is_meet_subsemilattice(lv, D).holds, "D-meet-subsemilattice");
  require(preserves_nonempty_sups_in(*L, D, sigma, *M), "sigma-preserves-nonempty-sups");
  require(preserves_boundedness_in(*L, D, sigma, *M), "sigma-preserves-boundedness");

  std::vector<Element> image(L->size());
  for (Element p = 0; p < L->size(); ++p) {
    const auto s = sup(*M, image_of(D & L->down_set(p), sigma, M->size()));
    require(s.has_value(), "sigma-preserves-boundedness");
    image[p] = *s;
  }
  return MonotoneMap(std::move(L), std::move(M), std::move(image));
}

std::vector<std::vector<Element>> enumerate_join_homomorphisms(const LatticeView& L,
                                                               const LatticeView& M,
                                                               const PartialMap& fixed,
                                                               std::size_t limit) {
  const std::size_t n = L.size();
  if (!L.is_join_semilattice()) throw PreconditionFailed("domain must be a join semilattice");
  if (fixed.domain.universe() != n || fixed.image.size() != n) {
    throw InvalidInput("fixed values do not match the domain");
  }
  const std::vector<Element> order = L.order().linear_extension();
  // Pairs whose join is e; both members precede e in any linear extension.
  std::vector<std::vector<std::pair<Element, Element>>> joins_to(n);
  for (Element p = 0; p < n; ++p) {
    for (Element q = p; q < n; ++q) joins_to[L.join_unchecked(p, q)].emplace_back(p, q);
  }
  std::vector<std::vector<Element>> out;
  std::vector<Element> img(n, LatticeView::kAbsent);
  auto consistent = [&](Element e) {
    for (const auto& [p, q] : joins_to[e]) {
      const auto j = M.join(img[p], img[q]);
      if (!j || *j != img[e]) return false;
    }
    return true;
  };
  auto dfs = [&](auto&& self, std::size_t pos) -> bool {
    if (pos == n) {
      out.push_back(img);
      return limit == 0 || out.size() < limit;
    }
    const Element e = order[pos];
    const Element lo = fixed.domain.contains(e) ? fixed.image[e] : 0;
    const Element hi = fixed.domain.contains(e) ? fixed.image[e] + 1 : M.size();
    for (Element v = lo; v < hi; ++v) {
      img[e] = v;
      if (consistent(e) && !self(self, pos + 1)) return false;
    }
    img[e] = LatticeView::kAbsent;
    return true;
  };
  dfs(dfs, 0);
  std::sort(out.begin(), out.end());
  return out;
}

ConvexityTransferReport verify_convexity_transfer(std::shared_ptr<const QuasiOrder> L,
                                                  const Subset& B, const Subset& E,
                                                  std::shared_ptr<const QuasiOrder> M,
                                                  const std::vector<Element>& sigma) {
  validate_values(B, sigma, L->size(), M->size());
  if (E.universe() != M->size()) throw InvalidInput("E must be a subset of M");
  require(L->is_partial_order() && classify(*L).complete_semilattice, "L-complete-semilattice");
  require(M->is_partial_order() && classify(*M).complete_semilattice, "M-complete-semilattice");
  const LatticeView lv(*L);
  const LatticeView mv(*M);
  require(check_jid(lv).holds, "L-JID");
  require(check_jid(mv).holds, "M-JID");
  require(is_flat_complete(mv).holds, "M-flat-complete");
  require(B.contains(*lv.bottom()), "B-contains-0");
  require(is_basis(lv, B).holds, "B-basis");
  require(is_strongly_interval_predense(lv, B).holds, "B-strongly-interval-predense");
  require(is_join_dense(*M, E).holds, "E-join-dense");
  require(is_preregular(*M, E), "E-preregular");
  require(is_sublattice(mv, E), "E-sublattice");
  const Subset range = image_of(B, sigma, M->size());
  require(range.is_subset_of(E), "sigma-into-E");
  bool embedding = true;
  B.for_each([&](Element p) {
    B.for_each([&](Element q) { embedding = embedding && (L->leq(p, q) == M->leq(sigma[p], sigma[q])); });
  });
  require(embedding, "sigma-embedding");
  bool convex = true;
  range.for_each([&](Element x) {
    range.for_each([&](Element y) {
      if (convex && M->leq(x, y)) convex = (interval(*M, x, y) & E).is_subset_of(range);
    });
  });
  require(convex, "sigma-convex-range");

  const MonotoneMap ext = extend_from_join_dense(L, B, sigma, M);
  ConvexityTransferReport r;
  r.extension.assign(ext.image().begin(), ext.image().end());
  r.agrees_on_basis = true;
  B.for_each([&](Element d) { r.agrees_on_basis = r.agrees_on_basis && ext(d) == sigma[d]; });
  r.embedding = ext.is_embedding();
  r.lattice_homomorphism = true;
  for (Element p = 0; p < L->size(); ++p) {
    for (Element q = 0; q < L->size(); ++q) {
      r.lattice_homomorphism = r.lattice_homomorphism &&
                               mv.join(ext(p), ext(q)) == ext(lv.join_unchecked(p, q)) &&
                               mv.meet(ext(p), ext(q)) == ext(lv.meet_unchecked(p, q));
    }
  }
  r.convex_range = is_convex(*M, ext.range()).holds;
  PartialMap fixed{B, sigma};
  r.extensions_found = enumerate_join_homomorphisms(lv, mv, fixed, 0).size();
  return r;
}

}  // namespace latkit
