#include <algorithm>
#include <map>

#include "common.hpp"
#include "latkit/embedding.hpp"
#include "latkit/errors.hpp"
#include "latkit/lattice.hpp"

namespace latkit::cli {

namespace detail {

Json subset_json(const Subset& S, const std::vector<std::string>& labels) {
  return element_names(S.indices(), labels);
}

Json image_json(const std::vector<Element>& image) {
  Json out = Json::array();
  for (Element e : image) out.push_back(e);
  return out;
}

Json verdict_json(const Verdict& v, const std::vector<std::string>& labels) {
  Json out{{"holds", v.holds}};
  if (!v.holds) {
    Json w{{"elements", element_names(v.witness.elements, labels)}};
    if (v.witness.set) w["set"] = subset_json(*v.witness.set, labels);
    if (!v.witness.note.empty()) w["note"] = v.witness.note;
    out["witness"] = std::move(w);
  }
  return out;
}

Json directional_json(const DirectionalVerdict& v, const std::vector<std::string>& labels) {
  return Json{{"holds", v.holds()},
              {"up", verdict_json(v.up, labels)},
              {"down", verdict_json(v.down, labels)}};
}

}  // namespace detail

namespace {

using detail::directional_json;
using detail::subset_json;
using detail::verdict_json;
using Kind = Structure::Kind;

struct CheckDef {
  std::string name;
  std::vector<Kind> kinds;
  std::string summary;
  std::function<void(const Structure&, const Params&, Report&)> run;
};

const char* kind_name(Kind k) {
  switch (k) {
    case Kind::order: return "order";
    case Kind::map: return "map";
    case Kind::monoid: return "monoid";
    case Kind::topology: return "topology";
  }
  return "?";
}

Subset needed_subset(const Structure& s, const Params& p, std::size_t universe,
                     const std::vector<std::string>& labels) {
  if (p.subset) return parse_subset(*p.subset, universe, labels);
  if (s.subset) return parse_subset(s.subset->dump(), universe, labels);
  throw InvalidInput("this check needs --subset (or a \"subset\" member in the input)");
}

void put_verdict(Report& r, const Verdict& v, const std::vector<std::string>& labels) {
  r.passed = v.holds;
  r.details["verdict"] = verdict_json(v, labels);
}

// Convexity witnesses (p, q, r) name the missing element r separately.
void put_convexity(Report& r, const Verdict& v, const std::vector<std::string>& labels) {
  put_verdict(r, v, labels);
  if (!v.holds && v.witness.elements.size() == 3) {
    r.details["witness"] = element_name(v.witness.elements[2], labels);
  }
}

void put_law(Report& r, const LawReport& law) {
  r.passed = law.holds;
  r.details["law"] = to_json(law);
}

const std::vector<CheckDef>& checks() {
  static const std::vector<CheckDef> defs = [] {
    std::vector<CheckDef> d;
    auto order_check = [&d](std::string name, std::string summary,
                            std::function<void(const QuasiOrder&, const Structure&, const Params&, Report&)> f) {
      d.push_back({std::move(name), {Kind::order}, std::move(summary),
                   [f](const Structure& s, const Params& p, Report& r) { f(*s.order, s, p, r); }});
    };
    auto subset_check = [&d](std::string name, std::string summary,
                             std::function<void(const QuasiOrder&, const Subset&, const Structure&, Report&)> f) {
      d.push_back({std::move(name), {Kind::order}, std::move(summary),
                   [f](const Structure& s, const Params& p, Report& r) {
                     const Subset A = needed_subset(s, p, s.order->size(), s.labels);
                     r.details["subset"] = subset_json(A, s.labels);
                     f(*s.order, A, s, r);
                   }});
    };
    auto map_check = [&d](std::string name, std::string summary,
                          std::function<void(const MonotoneMap&, const Structure&, const Params&, Report&)> f) {
      d.push_back({std::move(name), {Kind::map}, std::move(summary),
                   [f](const Structure& s, const Params& p, Report& r) {
                     r.details["image"] = element_names({s.map->image().begin(), s.map->image().end()},
                                                        s.cod_labels);
                     f(*s.map, s, p, r);
                   }});
    };
    auto monoid_check = [&d](std::string name, std::string summary,
                             std::function<void(const FiniteMonoid&, const Structure&, const Params&, Report&)> f) {
      d.push_back({std::move(name), {Kind::monoid}, std::move(summary),
                   [f](const Structure& s, const Params& p, Report& r) { f(*s.monoid, s, p, r); }});
    };
    auto topology_check = [&d](std::string name, std::string summary,
                               std::function<void(const FiniteTopology&, const Structure&, const Params&, Report&)> f) {
      d.push_back({std::move(name), {Kind::topology}, std::move(summary),
                   [f](const Structure& s, const Params& p, Report& r) { f(*s.topology, s, p, r); }});
    };

    // Orders.
    order_check("classify", "structural classification", [](const QuasiOrder& Q, const Structure&, const Params&, Report& r) {
      r.details["classification"] = to_json(classify(Q));
    });
    order_check("partial-order", "antisymmetry", [](const QuasiOrder& Q, const Structure&, const Params&, Report& r) {
      r.passed = Q.is_partial_order();
      r.details["partial_order"] = r.passed;
      if (!r.passed) {
        const AsymQuotient aq = asym_quotient(Q);
        r.details["classes"] = aq.order.size();
      }
    });
    order_check("lattice", "every pair has a join and a meet", [](const QuasiOrder& Q, const Structure&, const Params&, Report& r) {
      r.passed = Q.is_partial_order() && LatticeView(Q).is_lattice();
      r.details["lattice"] = r.passed;
    });
    order_check("distributive", "binary distributive laws", [](const QuasiOrder& Q, const Structure& s, const Params&, Report& r) {
      put_verdict(r, is_distributive(LatticeView(Q)), s.labels);
    });
    order_check("jid", "join-infinite distributive law", [](const QuasiOrder& Q, const Structure& s, const Params& p, Report& r) {
      const auto v = check_jid(LatticeView(Q), p.seed);
      r.passed = v.holds;
      r.details["jid"] = to_json(v);
      if (!v.holds) r.details["witness"] = verdict_json(Verdict{false, v.witness}, s.labels)["witness"];
    });
    order_check("mid", "meet-infinite distributive law", [](const QuasiOrder& Q, const Structure& s, const Params& p, Report& r) {
      const auto v = check_mid(LatticeView(Q), p.seed);
      r.passed = v.holds;
      r.details["mid"] = to_json(v);
      if (!v.holds) r.details["witness"] = verdict_json(Verdict{false, v.witness}, s.labels)["witness"];
    });
    order_check("flat-complete", "every flat subset has a supremum", [](const QuasiOrder& Q, const Structure& s, const Params&, Report& r) {
      put_verdict(r, is_flat_complete(LatticeView(Q)), s.labels);
    });
    order_check("atoms", "atoms, minimal elements and atomicity", [](const QuasiOrder& Q, const Structure& s, const Params&, Report& r) {
      r.details["atoms"] = subset_json(atoms(Q), s.labels);
      r.details["minimal"] = subset_json(minimal_elements(Q), s.labels);
      r.details["atomic"] = is_atomic(Q);
      r.details["atomless"] = is_atomless(Q);
    });
    order_check("atomic", "every positive element lies above an atom", [](const QuasiOrder& Q, const Structure&, const Params&, Report& r) {
      r.passed = is_atomic(Q);
      r.details["atomic"] = r.passed;
    });

    // Subsets of an order; convexity also accepts maps (range convexity).
    d.push_back({"convexity", {Kind::order, Kind::map}, "subset (or map range) contains every interval between its members",
                 [](const Structure& s, const Params& p, Report& r) {
                   if (s.kind == Kind::map) {
                     r.details["range"] = subset_json(s.map->range(), s.cod_labels);
                     put_convexity(r, is_convex(s.map->cod(), s.map->range()), s.cod_labels);
                     return;
                   }
                   const Subset A = needed_subset(s, p, s.order->size(), s.labels);
                   r.details["subset"] = subset_json(A, s.labels);
                   put_convexity(r, is_convex(*s.order, A), s.labels);
                 }});
    d.push_back({"preregular", {Kind::order, Kind::map}, "nonempty sups and infs computed in the subset agree with the ambient ones",
                 [](const Structure& s, const Params& p, Report& r) {
                   const bool is_map = s.kind == Kind::map;
                   const QuasiOrder& P = is_map ? s.map->cod() : *s.order;
                   const auto& labels = is_map ? s.cod_labels : s.labels;
                   const Subset A = is_map ? s.map->range() : needed_subset(s, p, P.size(), labels);
                   r.details["subset"] = subset_json(A, labels);
                   const DirectionalVerdict v = preregularity(P, A);
                   r.passed = v.holds();
                   r.details["preregular"] = directional_json(v, labels);
                 }});
    subset_check("regular", "preregular including the empty family", [](const QuasiOrder& P, const Subset& A, const Structure& s, Report& r) {
      const DirectionalVerdict v = regularity(P, A);
      r.passed = v.holds();
      r.details["regular"] = directional_json(v, s.labels);
    });
    subset_check("order-closed", "order closed and boundedly order closed, both directions",
                 [](const QuasiOrder& P, const Subset& A, const Structure& s, Report& r) {
      const OrderClosedVerdict v = order_closed_checks(P, A);
      r.passed = v.up_oc.holds && v.down_oc.holds;
      r.details["up_boc"] = verdict_json(v.up_boc, s.labels);
      r.details["down_boc"] = verdict_json(v.down_boc, s.labels);
      r.details["up_oc"] = verdict_json(v.up_oc, s.labels);
      r.details["down_oc"] = verdict_json(v.down_oc, s.labels);
    });
    subset_check("order-closure", "sups and infs of subfamilies", [](const QuasiOrder& P, const Subset& A, const Structure& s, Report& r) {
      r.details["closure_up"] = subset_json(order_closure_up(P, A), s.labels);
      r.details["closure_down"] = subset_json(order_closure_down(P, A), s.labels);
    });
    subset_check("flat", "pairwise meets constant", [](const QuasiOrder& P, const Subset& A, const Structure&, Report& r) {
      r.passed = is_flat(P, A);
      r.details["flat"] = r.passed;
    });
    subset_check("directed", "nonempty with upper bounds inside", [](const QuasiOrder& P, const Subset& A, const Structure&, Report& r) {
      r.passed = is_directed(P, A);
      r.details["directed"] = r.passed;
      r.details["filtered"] = is_filtered(P, A);
      r.details["bounded_above"] = is_bounded_above(P, A);
      r.details["bounded_below"] = is_bounded_below(P, A);
    });
    subset_check("dense", "every positive element lies above a positive member", [](const QuasiOrder& P, const Subset& A, const Structure& s, Report& r) {
      put_verdict(r, is_dense(P, A), s.labels);
    });
    subset_check("join-dense", "every element is the join of the members below it", [](const QuasiOrder& P, const Subset& A, const Structure& s, Report& r) {
      put_verdict(r, is_join_dense(P, A), s.labels);
    });
    subset_check("interval-predense", "members separate every p < q", [](const QuasiOrder& P, const Subset& A, const Structure& s, Report& r) {
      put_verdict(r, is_interval_predense(P, A), s.labels);
    });
    subset_check("strongly-interval-predense", "separation with the meet kept inside", [](const QuasiOrder& P, const Subset& A, const Structure& s, Report& r) {
      put_verdict(r, is_strongly_interval_predense(LatticeView(P), A), s.labels);
    });
    subset_check("meet-subsemilattice", "closed under binary meets", [](const QuasiOrder& P, const Subset& A, const Structure& s, Report& r) {
      put_verdict(r, is_meet_subsemilattice(LatticeView(P), A), s.labels);
    });
    subset_check("sublattice", "closed under binary joins and meets", [](const QuasiOrder& P, const Subset& A, const Structure&, Report& r) {
      r.passed = is_sublattice(LatticeView(P), A);
      r.details["sublattice"] = r.passed;
    });
    subset_check("basis", "meet subsemilattice generating by incompatible joins", [](const QuasiOrder& P, const Subset& A, const Structure& s, Report& r) {
      put_verdict(r, is_basis(LatticeView(P), A), s.labels);
    });
    subset_check("density", "all density notions at once", [](const QuasiOrder& P, const Subset& A, const Structure& s, Report& r) {
      const DensityReport d = density_checks(LatticeView(P), A);
      r.details["dense"] = verdict_json(d.dense, s.labels);
      r.details["join_dense"] = verdict_json(d.join_dense, s.labels);
      r.details["interval_predense"] = verdict_json(d.interval_predense, s.labels);
      r.details["strongly_interval_predense"] = verdict_json(d.strongly_interval_predense, s.labels);
      if (d.basis) r.details["basis"] = verdict_json(*d.basis, s.labels);
    });
    subset_check("analyze", "every subset property in one report", [](const QuasiOrder& P, const Subset& A, const Structure& s, Report& r) {
      const SubposetAnalysis a(P, A);
      r.details["convex"] = verdict_json(a.convex(), s.labels);
      r.details["preregular"] = directional_json(a.preregular(), s.labels);
      r.details["regular"] = directional_json(a.regular(), s.labels);
      r.details["up_boc"] = verdict_json(a.order_closed().up_boc, s.labels);
      r.details["down_boc"] = verdict_json(a.order_closed().down_boc, s.labels);
      r.details["flat"] = a.flat();
      r.details["dense"] = verdict_json(a.dense(), s.labels);
      r.details["join_dense"] = verdict_json(a.join_dense(), s.labels);
      r.details["interval_predense"] = verdict_json(a.interval_predense(), s.labels);
      if (a.strongly_interval_predense()) {
        r.details["strongly_interval_predense"] = verdict_json(*a.strongly_interval_predense(), s.labels);
      }
      if (a.basis()) r.details["basis"] = verdict_json(*a.basis(), s.labels);
    });

    // Maps.
    map_check("embedding", "order preserving and reflecting", [](const MonotoneMap& m, const Structure&, const Params&, Report& r) {
      r.passed = m.is_embedding();
      r.details["embedding"] = r.passed;
      r.details["injective"] = m.is_injective();
    });
    map_check("continuity", "preservation of sups, infs, directed sups and filtered infs",
              [](const MonotoneMap& m, const Structure& s, const Params&, Report& r) {
      const ContinuityReport c = continuity_checks(m);
      r.passed = c.preserves_nonempty_sups.holds && c.preserves_nonempty_infs.holds;
      r.details["preserves_nonempty_sups"] = verdict_json(c.preserves_nonempty_sups, s.dom_labels);
      r.details["preserves_nonempty_infs"] = verdict_json(c.preserves_nonempty_infs, s.dom_labels);
      r.details["preserves_all_sups"] = verdict_json(c.preserves_all_sups, s.dom_labels);
      r.details["preserves_all_infs"] = verdict_json(c.preserves_all_infs, s.dom_labels);
      r.details["scott_continuous"] = verdict_json(c.scott_continuous, s.dom_labels);
      r.details["co_continuous"] = verdict_json(c.co_continuous, s.dom_labels);
    });
    map_check("range", "order closedness of the range", [](const MonotoneMap& m, const Structure& s, const Params&, Report& r) {
      const RangeReport rr = range_property_checks(m);
      r.passed = rr.order_closed_range;
      r.details["up_boc_range"] = verdict_json(rr.up_boc_range, s.cod_labels);
      r.details["down_boc_range"] = verdict_json(rr.down_boc_range, s.cod_labels);
      r.details["up_oc_range"] = verdict_json(rr.up_oc_range, s.cod_labels);
      r.details["down_oc_range"] = verdict_json(rr.down_oc_range, s.cod_labels);
      r.details["order_closed_range"] = rr.order_closed_range;
      if (rr.interval_range) r.details["interval_range"] = *rr.interval_range;
    });
    map_check("boundedness", "bounded families stay bounded and unbounded stay unbounded",
              [](const MonotoneMap& m, const Structure& s, const Params&, Report& r) {
      const BoundednessReport b = boundedness_preservation(m);
      r.passed = b.bounded_to_bounded.holds && b.unbounded_to_unbounded.holds;
      r.details["bounded_to_bounded"] = verdict_json(b.bounded_to_bounded, s.dom_labels);
      r.details["unbounded_to_unbounded"] = verdict_json(b.unbounded_to_unbounded, s.dom_labels);
    });
    map_check("atom-image", "atoms map onto the relative atoms of the range", [](const MonotoneMap& m, const Structure& s, const Params&, Report& r) {
      put_verdict(r, atom_image_check(m), s.cod_labels);
    });
    map_check("minimal-image", "minimal and positive parts map onto those of the range",
              [](const MonotoneMap& m, const Structure& s, const Params&, Report& r) {
      put_verdict(r, minimal_image_check(m), s.cod_labels);
    });
    map_check("powerset-decompose", "write the map as a -> h[a] u b", [](const MonotoneMap& m, const Structure&, const Params&, Report& r) {
      r.details["decomposition"] = to_json(powerset_decompose(m));
    });
    map_check("chainprod-decompose", "write the map as a shifted coordinate permutation",
              [](const MonotoneMap& m, const Structure& s, const Params&, Report& r) {
      if (!s.dom_chain || !s.cod_chain) {
        throw InvalidInput("chainprod-decompose needs chainprod:K:D (or chain:N) operands");
      }
      r.details["decomposition"] = to_json(chainprod_decompose(m, *s.dom_chain, *s.cod_chain));
    });

    // Monoids.
    monoid_check("monoid-class", "associated order and cancellativity", [](const FiniteMonoid& M, const Structure&, const Params&, Report& r) {
      r.details["class"] = to_json(monoid_class(M));
      r.details["associated_order"] = to_json(associated_order(M));
    });
    monoid_check("cancellative", "a + c = b + c implies a = b", [](const FiniteMonoid& M, const Structure&, const Params&, Report& r) {
      r.passed = is_cancellative(M);
      r.details["cancellative"] = r.passed;
    });
    monoid_check("distributivity", "addition distributes over joins and meets (--law to pick one)",
                 [](const FiniteMonoid& M, const Structure&, const Params& p, Report& r) {
      std::vector<DistributiveLaw> laws{DistributiveLaw::plus_join, DistributiveLaw::plus_meet,
                                        DistributiveLaw::plus_join_inf, DistributiveLaw::plus_meet_inf};
      if (p.law) {
        const auto law = distributive_law_from_string(*p.law);
        if (!law) throw InvalidInput("unknown law " + *p.law);
        laws = {*law};
      }
      Json out = Json::array();
      for (DistributiveLaw law : laws) {
        const LawReport lr = check_distributivity(M, law);
        r.passed = r.passed && lr.holds;
        out.push_back(to_json(lr));
      }
      r.details["laws"] = std::move(out);
    });
    monoid_check("disjoint-sum", "disjoint elements add to their join", [](const FiniteMonoid& M, const Structure&, const Params&, Report& r) {
      put_law(r, check_disjoint_sum_laws(M));
    });
    monoid_check("subtraction", "subtraction exists and is monotone where expected",
                 [](const FiniteMonoid& M, const Structure&, const Params&, Report& r) {
      put_law(r, check_subtraction_laws(M));
    });
    monoid_check("group-completion", "quotient of pairs construction", [](const FiniteMonoid& M, const Structure&, const Params&, Report& r) {
      const GroupCompletion g = group_completion(M);
      r.details["group"] = to_json(g.group);
      Json reps = Json::array();
      for (const auto& [a, b] : g.representatives) reps.push_back({a, b});
      r.details["representatives"] = std::move(reps);
      r.details["embedding"] = detail::image_json(g.embedding);
      r.details["is_group"] = is_group(g.group);
      r.passed = is_group(g.group);
    });
    d.push_back({"subtraction-closed", {Kind::monoid}, "a, b in S and a - b defined imply a - b in S",
                 [](const Structure& s, const Params& p, Report& r) {
                   const Subset S = needed_subset(s, p, s.monoid->size(), {});
                   r.details["subset"] = subset_json(S, {});
                   put_verdict(r, closed_under_subtraction(*s.monoid, S), {});
                 }});

    // Topologies.
    auto topo_subset = [](const Structure& s, const Params& p) {
      return needed_subset(s, p, s.topology->points(), {});
    };
    d.push_back({"regular-open", {Kind::topology}, "interior of the closure equals the set",
                 [topo_subset](const Structure& s, const Params& p, Report& r) {
                   const Subset S = topo_subset(s, p);
                   r.passed = is_regular_open(*s.topology, S);
                   r.details["interior"] = subset_json(s.topology->interior(S), {});
                   r.details["closure"] = subset_json(s.topology->closure(S), {});
                   r.details["regular_open"] = r.passed;
                 }});
    d.push_back({"nowhere-dense", {Kind::topology}, "closure has empty interior",
                 [topo_subset](const Structure& s, const Params& p, Report& r) {
                   const Subset S = topo_subset(s, p);
                   r.passed = is_nowhere_dense(*s.topology, S);
                   r.details["nowhere_dense"] = r.passed;
                   r.details["meager"] = is_meager(*s.topology, S);
                 }});
    d.push_back({"baire-property", {Kind::topology}, "differs from an open set by a meager set",
                 [topo_subset](const Structure& s, const Params& p, Report& r) {
                   const Subset S = topo_subset(s, p);
                   r.passed = has_baire_property(*s.topology, S);
                   r.details["baire_property"] = r.passed;
                 }});
    topology_check("baire", "no nonempty open set is meager", [](const FiniteTopology& T, const Structure&, const Params&, Report& r) {
      r.passed = is_baire(T);
      r.details["baire"] = r.passed;
      r.details["largest_open_meager"] = subset_json(largest_open_meager(T), {});
    });
    topology_check("ro-algebra", "regular open sets as a Boolean algebra", [](const FiniteTopology& T, const Structure&, const Params&, Report& r) {
      const BooleanAlgebraView ro = ro_algebra(T);
      Json members = Json::array();
      for (const Subset& S : ro.members) members.push_back(to_json(S));
      r.details["members"] = std::move(members);
      r.details["classification"] = to_json(classify(ro.lattice.order()));
      r.passed = classify(ro.lattice.order()).boolean;
    });
    topology_check("category", "category algebra and its isomorphism to a regular open algebra",
                   [](const FiniteTopology& T, const Structure&, const Params&, Report& r) {
      const CategoryAlgebra C = category_algebra(T);
      const Verdict iso = verify_category_iso(C);
      const bool boolean = classify(C.algebra.lattice.order()).boolean;
      r.passed = iso.holds && boolean;
      r.details["baire_property_sets"] = C.bp_count;
      r.details["classes"] = C.algebra.members.size();
      r.details["largest_open_meager"] = to_json(C.largest_open_meager);
      Json reps = Json::array();
      for (const Subset& S : C.algebra.members) reps.push_back(to_json(S));
      r.details["representatives"] = std::move(reps);
      Json iso_pairs = Json::array();
      for (std::size_t i = 0; i < C.ro.members.size(); ++i) {
        iso_pairs.push_back({to_json(C.ro.members[i]),
                             C.iso[i] == LatticeView::kAbsent ? Json(nullptr) : to_json(C.algebra.members[C.iso[i]])});
      }
      r.details["iso"] = std::move(iso_pairs);
      r.details["boolean"] = boolean;
      r.details["iso_verdict"] = verdict_json(iso, {});
    });
    topology_check("clopen-basis", "clopen classes form a basis of the category algebra",
                   [](const FiniteTopology& T, const Structure&, const Params&, Report& r) {
      put_verdict(r, clopen_basis_check(T), {});
    });
    return d;
  }();
  return defs;
}

}  // namespace

const std::vector<CheckInfo>& check_catalog() {
  static const std::vector<CheckInfo> catalog = [] {
    std::vector<CheckInfo> out;
    for (const CheckDef& c : checks()) {
      std::string kinds;
      for (Kind k : c.kinds) kinds += (kinds.empty() ? "" : "|") + std::string(kind_name(k));
      out.push_back({c.name, kinds, c.summary});
    }
    return out;
  }();
  return catalog;
}

Report run_check(const Params& p) {
  const CheckDef* def = nullptr;
  for (const CheckDef& c : checks()) {
    if (c.name == p.name) def = &c;
  }
  if (!def) throw InvalidInput("unknown property \"" + p.name + "\" (see --list)");
  const Structure s = resolve_structure(p);
  if (std::find(def->kinds.begin(), def->kinds.end(), s.kind) == def->kinds.end()) {
    throw InvalidInput("property " + def->name + " does not apply to a " + kind_name(s.kind));
  }
  Report r = detail::make_report(p);
  r.details["structure"] = s.name;
  try {
    def->run(s, p, r);
  } catch (const PreconditionFailed& e) {
    r.passed = false;
    r.details["precondition_failed"] = e.what();
  } catch (const DecompositionMismatch& e) {
    r.passed = false;
    r.details["decomposition_mismatch"] = e.what();
  }
  return r;
}

}  // namespace latkit::cli
