#include "latkit/embedding.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

#include "latkit/errors.hpp"

namespace latkit {

std::size_t default_thread_count() {
  if (const char* env = std::getenv("LATKIT_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

namespace {

std::vector<std::size_t> interval_sizes(const QuasiOrder& Q) {
  const std::size_t n = Q.size();
  std::vector<std::size_t> out(n * n, 0);
  for (Element p = 0; p < n; ++p) {
    for (Element q = 0; q < n; ++q) {
      if (Q.leq(p, q)) out[p * n + q] = interval(Q, p, q).count();
    }
  }
  return out;
}

class CensusSearch {
 public:
  CensusSearch(const QuasiOrder& P, const QuasiOrder& Q, const CensusOptions& options)
      : P_(P), Q_(Q), opt_(options), order_(P.linear_extension()) {
    interval_prune_ = opt_.filters.embedding && opt_.filters.convex_range;
    if (interval_prune_) {
      p_sizes_ = interval_sizes(P);
      q_sizes_ = interval_sizes(Q);
    }
  }

  std::vector<CensusEntry> run(std::size_t threads) {
    const std::size_t n = P_.size();
    if (n == 0) {
      std::vector<Element> empty;
      std::vector<CensusEntry> out;
      if (auto e = finish(empty)) out.push_back(std::move(*e));
      return out;
    }
    threads = std::max<std::size_t>(1, std::min(threads, Q_.size()));
    std::atomic<std::size_t> next{0};
    std::mutex mu;
    std::vector<CensusEntry> results;
    std::exception_ptr error;
    auto worker = [&] {
      std::vector<Element> img(n, LatticeView::kAbsent);
      std::vector<CensusEntry> local;
      try {
        for (std::size_t v = next++; v < Q_.size(); v = next++) {
          if (stop_.load()) break;
          if (!try_assign(img, 0, v)) continue;
          dfs(img, 1, local);
          img[order_[0]] = LatticeView::kAbsent;
        }
      } catch (...) {
        std::lock_guard lock(mu);
        if (!error) error = std::current_exception();
        stop_ = true;
      }
      std::lock_guard lock(mu);
      results.insert(results.end(), std::make_move_iterator(local.begin()),
                     std::make_move_iterator(local.end()));
    };
    if (threads == 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
      for (auto& t : pool) t.join();
    }
    if (error) std::rethrow_exception(error);
    std::sort(results.begin(), results.end(),
              [](const CensusEntry& a, const CensusEntry& b) { return a.image < b.image; });
    return results;
  }

  std::uint64_t nodes() const { return nodes_.load(); }

 private:
  bool try_assign(std::vector<Element>& img, std::size_t pos, Element v) {
    const std::uint64_t count = ++nodes_;
    if (opt_.budget_nodes != 0 && count > opt_.budget_nodes) throw BudgetExceeded(count);
    const Element p = order_[pos];
    const std::size_t n = P_.size();
    const std::size_t m = Q_.size();
    for (std::size_t i = 0; i < pos; ++i) {
      const Element q = order_[i];
      const Element w = img[q];
      const bool qp = P_.leq(q, p);
      const bool pq = P_.leq(p, q);
      if (qp && !Q_.leq(w, v)) return false;
      if (pq && !Q_.leq(v, w)) return false;
      if (opt_.filters.embedding) {
        if (Q_.leq(w, v) && !qp) return false;
        if (Q_.leq(v, w) && !pq) return false;
      }
      if (interval_prune_) {
        if (qp && q_sizes_[w * m + v] != p_sizes_[q * n + p]) return false;
        if (pq && q_sizes_[v * m + w] != p_sizes_[p * n + q]) return false;
      }
    }
    img[p] = v;
    return true;
  }

  void dfs(std::vector<Element>& img, std::size_t pos, std::vector<CensusEntry>& out) {
    if (stop_.load(std::memory_order_relaxed)) return;
    if (pos == order_.size()) {
      if (auto e = finish(img)) out.push_back(std::move(*e));
      return;
    }
    for (Element v = 0; v < Q_.size(); ++v) {
      if (!try_assign(img, pos, v)) continue;
      dfs(img, pos + 1, out);
      img[order_[pos]] = LatticeView::kAbsent;
    }
  }

  std::optional<CensusEntry> finish(const std::vector<Element>& img) const {
    CensusEntry e;
    e.image = img;
    e.embedding = is_order_reflecting(P_, Q_, img);
    const auto& f = opt_.filters;
    if (f.embedding && !e.embedding) return std::nullopt;
    Subset range(Q_.size());
    for (Element v : img) range.insert(v);
    const bool need_convex = f.convex_range || opt_.compute_flags;
    const bool need_prereg = f.preregular_range || opt_.compute_flags;
    const bool need_down = f.downward_closed_range || opt_.compute_flags;
    if (need_convex) e.convex_range = is_convex(Q_, range).holds;
    if (f.convex_range && !e.convex_range) return std::nullopt;
    if (need_down) e.downward_closed_range = lower_closure(Q_, range) == range;
    if (f.downward_closed_range && !e.downward_closed_range) return std::nullopt;
    if (need_prereg) e.preregular_range = is_preregular(Q_, range);
    if (f.preregular_range && !e.preregular_range) return std::nullopt;
    return e;
  }

  const QuasiOrder& P_;
  const QuasiOrder& Q_;
  CensusOptions opt_;
  std::vector<Element> order_;
  bool interval_prune_ = false;
  std::vector<std::size_t> p_sizes_;
  std::vector<std::size_t> q_sizes_;
  std::atomic<std::uint64_t> nodes_{0};
  std::atomic<bool> stop_{false};
};

}  // namespace

EmbeddingCensus enumerate_embeddings(std::shared_ptr<const QuasiOrder> P,
                                     std::shared_ptr<const QuasiOrder> Q,
                                     const CensusOptions& options) {
  if (!P->is_partial_order() || !Q->is_partial_order()) {
    throw PreconditionFailed("embedding census requires partial orders");
  }
  CensusSearch search(*P, *Q, options);
  EmbeddingCensus census;
  census.filters = options.filters;
  census.maps = search.run(options.threads == 0 ? default_thread_count() : options.threads);
  census.nodes = search.nodes();
  census.dom = std::move(P);
  census.cod = std::move(Q);
  return census;
}

EmbeddingCensus enumerate_embeddings(const QuasiOrder& P, const QuasiOrder& Q,
                                     const CensusOptions& options) {
  return enumerate_embeddings(std::make_shared<const QuasiOrder>(P),
                              std::make_shared<const QuasiOrder>(Q), options);
}

namespace {

constexpr std::size_t kMaxScanDomain = 20;

void require_scannable(const MonotoneMap& s, const char* what) {
  if (s.dom().size() > kMaxScanDomain) {
    throw InvalidInput(std::string(what) + ": domain too large for exhaustive scan");
  }
  if (!s.dom().is_partial_order() || !s.cod().is_partial_order()) {
    throw PreconditionFailed(std::string(what) + " requires partial orders");
  }
}

// One direction of sup preservation; `dual` switches to infima.
void scan_preservation(const MonotoneMap& s, bool dual, Verdict& nonempty, Verdict& all,
                       Verdict& directed) {
  const QuasiOrder& P = s.dom();
  const QuasiOrder& Q = s.cod();
  auto bound = [&](const QuasiOrder& O, const Subset& A) { return dual ? inf(O, A) : sup(O, A); };
  const char* what = dual ? "infimum not preserved" : "supremum not preserved";
  for_each_subset(P.universe(), [&](const Subset& A) {
    const auto in_dom = bound(P, A);
    if (!in_dom) return;
    const auto in_cod = bound(Q, s.apply(A));
    if (in_cod && *in_cod == s(*in_dom)) return;
    std::vector<Element> w{*in_dom};
    if (in_cod) w.push_back(*in_cod);
    if (all.holds) all = Verdict::fail(w, what, A);
    if (A.empty()) return;
    if (nonempty.holds) nonempty = Verdict::fail(w, what, A);
    const bool directed_family = dual ? is_filtered(P, A) : is_directed(P, A);
    if (directed.holds && directed_family) directed = Verdict::fail(w, what, A);
  });
}

}  // namespace

ContinuityReport continuity_checks(const MonotoneMap& s) {
  require_scannable(s, "continuity_checks");
  ContinuityReport r;
  scan_preservation(s, false, r.preserves_nonempty_sups, r.preserves_all_sups, r.scott_continuous);
  scan_preservation(s, true, r.preserves_nonempty_infs, r.preserves_all_infs, r.co_continuous);
  return r;
}

PreregularContinuityReport verify_preregular_continuity(const QuasiOrder& P, const QuasiOrder& Q,
                                                        const CensusOptions& options) {
  CensusOptions opt = options;
  opt.filters = CensusFilters{};
  opt.compute_flags = false;
  const EmbeddingCensus census = enumerate_embeddings(P, Q, opt);
  PreregularContinuityReport r;
  r.embeddings = census.maps.size();
  for (std::size_t i = 0; i < census.maps.size(); ++i) {
    const MonotoneMap s = census.map(i);
    if (!is_preregular(Q, s.range())) continue;
    ++r.preregular;
    const ContinuityReport c = continuity_checks(s);
    if (!c.preserves_nonempty_sups.holds || !c.preserves_nonempty_infs.holds) {
      r.violations.push_back(census.maps[i].image);
    }
  }
  return r;
}

RangeReport range_property_checks(const MonotoneMap& s) {
  const OrderClosedVerdict oc = order_closed_checks(s.cod(), s.range());
  RangeReport r;
  r.up_boc_range = oc.up_boc;
  r.down_boc_range = oc.down_boc;
  r.up_oc_range = oc.up_oc;
  r.down_oc_range = oc.down_oc;
  r.order_closed_range = oc.up_oc.holds && oc.down_oc.holds;
  const auto lo = minimum(s.dom());
  const auto hi = maximum(s.dom());
  if (lo && hi) r.interval_range = s.range() == interval(s.cod(), s(*lo), s(*hi));
  return r;
}

namespace {

Subset to_ambient(const Subset& local, const std::vector<Element>& members, std::size_t universe) {
  Subset out(universe);
  local.for_each([&](Element i) { out.insert(members[i]); });
  return out;
}

}  // namespace

Verdict atom_image_check(const MonotoneMap& s, bool require_embedding) {
  if (require_embedding && !s.is_embedding()) throw NotEmbedding();
  std::vector<Element> members;
  const QuasiOrder ran = s.cod().induced(s.range(), &members);
  const Subset image = s.apply(atoms(s.dom()));
  const Subset relative = to_ambient(atoms(ran), members, s.cod().size());
  if (image == relative) return Verdict::pass();
  const Subset diff = (image - relative) | (relative - image);
  return Verdict::fail({diff.first()}, "image of the atoms differs from the atoms of the range",
                       diff);
}

Verdict minimal_image_check(const MonotoneMap& s) {
  std::vector<Element> members;
  const QuasiOrder ran = s.cod().induced(s.range(), &members);
  const std::size_t n = s.cod().size();
  const Subset min_image = s.apply(minimal_elements(s.dom()));
  const Subset pos_image = s.apply(positive_part(s.dom()));
  const Subset min_rel = to_ambient(minimal_elements(ran), members, n);
  const Subset pos_rel = to_ambient(positive_part(ran), members, n);
  if (min_image != min_rel) {
    return Verdict::fail({}, "image of minimal elements differs from minimal elements of the range",
                         min_image ^ min_rel);
  }
  if (pos_image != pos_rel) {
    return Verdict::fail({}, "image of the positive part differs from that of the range",
                         pos_image ^ pos_rel);
  }
  return Verdict::pass();
}

BoundednessReport boundedness_preservation(const MonotoneMap& s) {
  if (s.dom().size() > kMaxScanDomain) {
    throw InvalidInput("boundedness_preservation: domain too large for exhaustive scan");
  }
  BoundednessReport r;
  for_each_subset(s.dom().universe(), [&](const Subset& A) {
    const bool dom_bounded = is_bounded_above(s.dom(), A);
    const bool cod_bounded = is_bounded_above(s.cod(), s.apply(A));
    if (dom_bounded && !cod_bounded && r.bounded_to_bounded.holds) {
      r.bounded_to_bounded = Verdict::fail({}, "bounded family with unbounded image", A);
    }
    if (!dom_bounded && cod_bounded && r.unbounded_to_unbounded.holds) {
      r.unbounded_to_unbounded = Verdict::fail({}, "unbounded family with bounded image", A);
    }
  });
  return r;
}

namespace {

std::size_t powerset_exponent(const QuasiOrder& Q) {
  std::size_t x = 0;
  while ((std::size_t{1} << x) < Q.size()) ++x;
  if ((std::size_t{1} << x) != Q.size() || x > 16 || !(Q == powerset(x))) {
    throw InvalidInput("order is not a power set lattice in bitmask form");
  }
  return x;
}

}  // namespace

PowersetDecomposition powerset_decompose(const MonotoneMap& s) {
  PowersetDecomposition d;
  d.x = powerset_exponent(s.dom());
  d.y = powerset_exponent(s.cod());
  if (!s.is_embedding()) throw NotEmbedding();
  if (!is_convex(s.cod(), s.range()).holds) throw NotConvexRange();
  d.b = s(0);
  for (std::size_t i = 0; i < d.x; ++i) {
    const std::uint64_t fresh = s(Element{1} << i) & ~d.b;
    if (std::popcount(fresh) != 1) {
      throw DecompositionMismatch("image of a singleton does not add exactly one point");
    }
    d.h.push_back(static_cast<std::size_t>(std::countr_zero(fresh)));
  }
  if (!std::ranges::equal(powerset_compose(d), s.image())) {
    throw DecompositionMismatch("h[a] u b does not reproduce the map");
  }
  return d;
}

std::vector<Element> powerset_compose(const PowersetDecomposition& d) {
  if (d.h.size() != d.x) throw InvalidInput("h must have one value per point of X");
  std::uint64_t used = 0;
  for (std::size_t v : d.h) {
    if (v >= d.y) throw InvalidInput("h maps outside Y");
    if ((used >> v) & 1u) throw InvalidInput("h is not injective");
    used |= std::uint64_t{1} << v;
  }
  if (d.b >> d.y) throw InvalidInput("b is not a subset of Y");
  if (d.b & used) throw InvalidInput("b meets h[X]");
  std::vector<Element> image(std::size_t{1} << d.x);
  for (Element a = 0; a < image.size(); ++a) {
    std::uint64_t v = d.b;
    for (std::size_t i = 0; i < d.x; ++i) {
      if ((a >> i) & 1u) v |= std::uint64_t{1} << d.h[i];
    }
    image[a] = static_cast<Element>(v);
  }
  return image;
}

std::vector<std::vector<Element>> powerset_formula_images(std::size_t x, std::size_t y) {
  std::vector<std::vector<Element>> out;
  PowersetDecomposition d;
  d.x = x;
  d.y = y;
  auto place = [&](auto&& self, std::uint64_t used) -> void {
    if (d.h.size() == x) {
      const std::uint64_t free = ((std::uint64_t{1} << y) - 1) & ~used;
      // Every subset of the unused points, walked as submasks.
      for (std::uint64_t b = free;; b = (b - 1) & free) {
        d.b = b;
        out.push_back(powerset_compose(d));
        if (b == 0) break;
      }
      return;
    }
    for (std::size_t v = 0; v < y; ++v) {
      if ((used >> v) & 1u) continue;
      d.h.push_back(v);
      self(self, used | (std::uint64_t{1} << v));
      d.h.pop_back();
    }
  };
  place(place, 0);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ChainProdDecomposition chainprod_decompose(const MonotoneMap& s, const ChainPower& in,
                                           const ChainPower& out) {
  if (s.dom().size() != in.size() || s.cod().size() != out.size() || !(s.dom() == in.order()) ||
      !(s.cod() == out.order())) {
    throw InvalidInput("map does not match the given chain products");
  }
  if (!s.is_embedding()) throw NotEmbedding();
  if (!is_convex(s.cod(), s.range()).holds) throw NotConvexRange();
  ChainProdDecomposition d;
  d.k = in.chain_length();
  d.m = out.chain_length();
  d.dims_in = in.dims();
  d.dims_out = out.dims();
  d.g.assign(d.dims_out, std::nullopt);
  d.y = out.decode(s(0));
  if (d.k > 1) {
    for (std::size_t i = 0; i < d.dims_in; ++i) {
      std::vector<std::size_t> unit(d.dims_in, 0);
      unit[i] = 1;
      const std::vector<std::size_t> v = out.decode(s(in.encode(unit)));
      std::optional<std::size_t> target;
      for (std::size_t j = 0; j < d.dims_out; ++j) {
        if (v[j] == d.y[j]) continue;
        if (v[j] != d.y[j] + 1 || target || d.g[j]) {
          throw DecompositionMismatch("unit vector is not sent to a shifted unit vector");
        }
        target = j;
      }
      if (!target) throw DecompositionMismatch("unit vector is fixed by the map");
      d.g[*target] = i;
    }
  }
  if (!std::ranges::equal(chainprod_compose(d), s.image())) {
    throw DecompositionMismatch("shifted partial projection does not reproduce the map");
  }
  return d;
}

std::vector<Element> chainprod_compose(const ChainProdDecomposition& d) {
  if (d.g.size() != d.dims_out || d.y.size() != d.dims_out) {
    throw InvalidInput("g and y must have one entry per output coordinate");
  }
  const ChainPower in(d.k, d.dims_in);
  const ChainPower out(d.m, d.dims_out);
  std::vector<bool> hit(d.dims_in, false);
  for (std::size_t j = 0; j < d.dims_out; ++j) {
    if (d.g[j]) {
      if (*d.g[j] >= d.dims_in || hit[*d.g[j]]) throw InvalidInput("g is not injective");
      hit[*d.g[j]] = true;
      if (d.y[j] + d.k > d.m) throw InvalidInput("shift leaves the chain");
    } else if (d.y[j] >= d.m) {
      throw InvalidInput("constant coordinate leaves the chain");
    }
  }
  if (d.k > 1 && std::find(hit.begin(), hit.end(), false) != hit.end()) {
    throw InvalidInput("g does not cover the input coordinates");
  }
  std::vector<Element> image(in.size());
  std::vector<std::size_t> target(d.dims_out);
  for (Element x = 0; x < in.size(); ++x) {
    const std::vector<std::size_t> src = in.decode(x);
    for (std::size_t j = 0; j < d.dims_out; ++j) {
      target[j] = d.y[j] + (d.g[j] ? src[*d.g[j]] : 0);
    }
    image[x] = out.encode(target);
  }
  return image;
}

std::vector<std::vector<Element>> chainprod_formula_images(std::size_t k, std::size_t m,
                                                           std::size_t dims_in,
                                                           std::size_t dims_out) {
  std::vector<std::vector<Element>> out;
  if (k > m) return out;
  ChainProdDecomposition d;
  d.k = k;
  d.m = m;
  d.dims_in = dims_in;
  d.dims_out = dims_out;
  d.g.assign(dims_out, std::nullopt);
  d.y.assign(dims_out, 0);
  auto shifts = [&](auto&& self, std::size_t j) -> void {
    if (j == dims_out) {
      out.push_back(chainprod_compose(d));
      return;
    }
    const std::size_t top = d.g[j] ? m - k : m - 1;
    for (std::size_t v = 0; v <= top; ++v) {
      d.y[j] = v;
      self(self, j + 1);
    }
  };
  // Assign each input coordinate an unused output coordinate.
  auto place = [&](auto&& self, std::size_t i) -> void {
    if (i == dims_in) {
      shifts(shifts, 0);
      return;
    }
    for (std::size_t j = 0; j < dims_out; ++j) {
      if (d.g[j]) continue;
      d.g[j] = i;
      self(self, i + 1);
      d.g[j].reset();
    }
  };
  place(place, 0);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace latkit
