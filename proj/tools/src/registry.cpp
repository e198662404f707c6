#include <algorithm>
#include <random>

#include "common.hpp"
#include "latkit/embedding.hpp"
#include "latkit/errors.hpp"
#include "latkit/lattice.hpp"

namespace latkit::cli {

namespace {

using detail::image_json;
using detail::make_report;

CensusOptions census_options(const Params& p, CensusFilters filters = {}) {
  CensusOptions opt;
  opt.filters = filters;
  opt.budget_nodes = p.budget_nodes;
  return opt;
}

CensusFilters convex_embeddings() {
  CensusFilters f;
  f.convex_range = true;
  return f;
}

std::size_t bounded(const std::optional<std::size_t>& v, std::size_t fallback, std::size_t hi,
                    const char* flag) {
  const std::size_t n = v ? *v : fallback;
  if (n > hi) throw InvalidInput(std::string(flag) + " must be at most " + std::to_string(hi));
  return n;
}

Structure order_operand(const std::optional<std::string>& spec, const std::string& fallback) {
  Structure s = builtin_structure(spec ? *spec : fallback);
  if (s.kind != Structure::Kind::order) throw InvalidInput(s.name + " is not an order");
  return s;
}

std::vector<QuasiOrder> posets_up_to(std::size_t n) {
  std::vector<QuasiOrder> out;
  for (std::size_t k = 0; k <= n; ++k) {
    for (QuasiOrder& Q : enumerate_posets(k)) out.push_back(std::move(Q));
  }
  return out;
}

std::vector<QuasiOrder> lattices_up_to(std::size_t n) {
  std::vector<QuasiOrder> out;
  for (std::size_t k = 1; k <= n; ++k) {
    for (QuasiOrder& Q : enumerate_lattices(k)) out.push_back(std::move(Q));
  }
  return out;
}

std::vector<FiniteTopology> topologies_up_to(std::size_t n) {
  std::vector<FiniteTopology> out;
  for (std::size_t k = 0; k <= n; ++k) {
    for (FiniteTopology& T : enumerate_topologies(k)) out.push_back(std::move(T));
  }
  return out;
}

// --- characterization theorems -------------------------------------------

Report powerset_form(const Params& p) {
  Report r = make_report(p);
  const std::size_t x = bounded(p.x, 2, 5, "--x");
  const std::size_t y = bounded(p.y, 3, 5, "--y");
  if (x > y) throw InvalidInput("--x must not exceed --y");
  const EmbeddingCensus c =
      enumerate_embeddings(powerset(x), powerset(y), census_options(p, convex_embeddings()));
  const auto formula = powerset_formula_images(x, y);
  std::vector<std::vector<Element>> census;
  std::uint64_t mismatches = 0;
  for (std::size_t i = 0; i < c.maps.size(); ++i) {
    census.push_back(c.maps[i].image);
    const PowersetDecomposition d = powerset_decompose(c.map(i));
    if (powerset_compose(d) != c.maps[i].image) ++mismatches;
  }
  const bool same = census == formula;
  r.passed = same && mismatches == 0;
  r.details["x"] = x;
  r.details["y"] = y;
  r.details["census_count"] = census.size();
  r.details["formula_count"] = formula.size();
  r.details["sets_equal"] = same;
  r.details["round_trip_mismatches"] = mismatches;
  r.details["nodes"] = c.nodes;
  return r;
}

Report chainprod_form(const Params& p) {
  Report r = make_report(p);
  const std::size_t k = bounded(p.k, 2, 8, "--k");
  const std::size_t m = bounded(p.m, 3, 8, "--m");
  const std::size_t di = bounded(p.dims_in, 1, 4, "--dims-in");
  const std::size_t dout = bounded(p.dims_out, 2, 4, "--dims-out");
  if (k < 2) throw InvalidInput("--k must be at least 2");
  const ChainPower in(k, di);
  const ChainPower out(m, dout);
  if (in.size() > 64 || out.size() > 256) throw InvalidInput("chain powers too large");
  const EmbeddingCensus c = enumerate_embeddings(in.order(), out.order(), census_options(p, convex_embeddings()));
  const auto formula = chainprod_formula_images(k, m, di, dout);
  std::vector<std::vector<Element>> census;
  std::uint64_t mismatches = 0;
  for (std::size_t i = 0; i < c.maps.size(); ++i) {
    census.push_back(c.maps[i].image);
    try {
      const ChainProdDecomposition d = chainprod_decompose(c.map(i), in, out);
      if (chainprod_compose(d) != c.maps[i].image) ++mismatches;
    } catch (const DecompositionMismatch&) {
      ++mismatches;
    }
  }
  const bool same = census == formula;
  r.passed = same && mismatches == 0;
  r.details["k"] = k;
  r.details["m"] = m;
  r.details["dims_in"] = di;
  r.details["dims_out"] = dout;
  r.details["census_count"] = census.size();
  r.details["formula_count"] = formula.size();
  r.details["sets_equal"] = same;
  r.details["round_trip_mismatches"] = mismatches;
  return r;
}

// --- embeddings and continuity -------------------------------------------

Report preregular_continuity(const Params& p) {
  Report r = make_report(p);
  const std::size_t n = bounded(p.max_size, 4, 6, "--max-size");
  const std::uint64_t samples = p.samples.value_or(0);
  const auto posets = posets_up_to(n);
  std::uint64_t pairs = 0, embeddings = 0, preregular = 0, violations = 0;
  Json first = nullptr;
  auto run_pair = [&](const QuasiOrder& P, const QuasiOrder& Q) {
    const PreregularContinuityReport pr = verify_preregular_continuity(P, Q, census_options(p));
    ++pairs;
    embeddings += pr.embeddings;
    preregular += pr.preregular;
    violations += pr.violations.size();
    if (!pr.violations.empty() && first.is_null()) {
      first = Json{{"dom", to_json(P)}, {"cod", to_json(Q)}, {"image", image_json(pr.violations.front())}};
    }
  };
  for (const QuasiOrder& P : posets) {
    for (const QuasiOrder& Q : posets) run_pair(P, Q);
  }
  if (samples > 0) {
    const auto six = enumerate_lattices(6);
    std::mt19937_64 rng(p.seed);
    for (std::uint64_t i = 0; i < samples; ++i) {
      const QuasiOrder P = random_relabel(six[rng() % six.size()], rng);
      const QuasiOrder Q = random_relabel(six[rng() % six.size()], rng);
      run_pair(P, Q);
    }
    r.details["seed"] = p.seed;
  }
  r.passed = violations == 0;
  r.details["max_size"] = n;
  r.details["random_lattice_pairs"] = samples;
  r.details["pairs"] = pairs;
  r.details["embeddings"] = embeddings;
  r.details["preregular_range"] = preregular;
  r.details["violations"] = violations;
  if (!first.is_null()) r.details["first_violation"] = std::move(first);
  return r;
}

Report atom_image(const Params& p) {
  Report r = make_report(p);
  const Structure dom = order_operand(p.dom, "powerset:2");
  const Structure cod = order_operand(p.cod, "powerset:3");
  const EmbeddingCensus c = enumerate_embeddings(dom.order, cod.order, census_options(p));
  std::uint64_t failures = 0;
  Json first = nullptr;
  for (std::size_t i = 0; i < c.maps.size(); ++i) {
    const Verdict v = atom_image_check(c.map(i));
    if (!v.holds) {
      ++failures;
      if (first.is_null()) first = image_json(c.maps[i].image);
    }
  }
  r.details["dom"] = dom.name;
  r.details["cod"] = cod.name;
  r.details["embeddings"] = c.maps.size();
  r.details["failures"] = failures;
  r.passed = failures == 0;
  if (dom.powerset_bits) {
    Subset singletons(dom.order->size());
    for (std::size_t i = 0; i < *dom.powerset_bits; ++i) singletons.insert(Element{1} << i);
    const bool ok = atoms(*dom.order) == singletons;
    r.details["domain_atoms_are_singletons"] = ok;
    r.passed = r.passed && ok;
  }
  if (!first.is_null()) r.details["first_failure"] = std::move(first);
  return r;
}

// Basis used to restrict a census map before extending it again.
Subset default_basis(const Structure& s) {
  const QuasiOrder& L = *s.order;
  Subset B(L.size());
  if (s.powerset_bits) {
    B.insert(0);
    for (std::size_t i = 0; i < *s.powerset_bits; ++i) B.insert(Element{1} << i);
  } else if (s.chain_power) {
    for (Element e = 0; e < L.size(); ++e) {
      const auto c = s.chain_power->decode(e);
      if (std::count_if(c.begin(), c.end(), [](std::size_t v) { return v != 0; }) <= 1) B.insert(e);
    }
  } else {
    B = L.universe();
  }
  return B;
}

Report extension_convexity(const Params& p) {
  Report r = make_report(p);
  const Structure dom = order_operand(p.dom, "powerset:2");
  const Structure cod = order_operand(p.cod, "powerset:3");
  const Subset B = p.subset ? parse_subset(*p.subset, dom.order->size(), dom.labels) : default_basis(dom);
  const Subset E = cod.order->universe();
  const EmbeddingCensus c =
      enumerate_embeddings(dom.order, cod.order, census_options(p, convex_embeddings()));
  std::uint64_t reproduced = 0, failures = 0;
  Json first = nullptr;
  for (std::size_t i = 0; i < c.maps.size(); ++i) {
    const std::vector<Element>& image = c.maps[i].image;
    std::vector<Element> sigma(image.size(), LatticeView::kAbsent);
    B.for_each([&](Element b) { sigma[b] = image[b]; });
    std::string problem;
    try {
      const ConvexityTransferReport t = verify_convexity_transfer(dom.order, B, E, cod.order, sigma);
      if (!t.holds()) {
        problem = "extension is not a unique convex lattice embedding";
      } else if (t.extension != image) {
        problem = "extension differs from the census map";
      } else {
        ++reproduced;
      }
    } catch (const HypothesisFailed& e) {
      problem = e.what();
    }
    if (!problem.empty()) {
      ++failures;
      if (first.is_null()) first = Json{{"image", image_json(image)}, {"problem", problem}};
    }
  }
  r.passed = failures == 0;
  r.details["dom"] = dom.name;
  r.details["cod"] = cod.name;
  r.details["basis"] = detail::subset_json(B, dom.labels);
  r.details["convex_embeddings"] = c.maps.size();
  r.details["reproduced"] = reproduced;
  r.details["failures"] = failures;
  if (!first.is_null()) r.details["first_failure"] = std::move(first);
  return r;
}

// --- subsets of lattices --------------------------------------------------

Report convex_preregular_over(const Params& p, const std::vector<QuasiOrder>& family) {
  Report r = make_report(p);
  std::uint64_t subsets = 0, convex = 0, violations = 0;
  Json first = nullptr;
  for (const QuasiOrder& L : family) {
    for_each_subset(L.universe(), [&](const Subset& A) {
      ++subsets;
      if (!is_convex(L, A).holds) return;
      ++convex;
      if (!is_preregular(L, A)) {
        ++violations;
        if (first.is_null()) first = Json{{"lattice", to_json(L)}, {"subset", to_json(A)}};
      }
    });
  }
  r.passed = violations == 0;
  r.details["lattices"] = family.size();
  r.details["subsets"] = subsets;
  r.details["convex"] = convex;
  r.details["violations"] = violations;
  if (!first.is_null()) r.details["first_violation"] = std::move(first);
  return r;
}

Report convex_preregular(const Params& p) {
  const std::size_t n = bounded(p.max_size, 6, 7, "--max-size");
  Report r = convex_preregular_over(p, lattices_up_to(n));
  r.details["max_size"] = n;
  return r;
}

Report boc_preregular(const Params& p) {
  Report r = make_report(p);
  const std::size_t n = bounded(p.max_size, 5, 6, "--max-size");
  std::uint64_t orders = 0, boc = 0, violations = 0;
  Json first = nullptr;
  for (const QuasiOrder& P : posets_up_to(n)) {
    if (P.size() == 0 || !classify(P).complete_semilattice) continue;
    ++orders;
    for_each_subset(P.universe(), [&](const Subset& A) {
      const OrderClosedVerdict oc = order_closed_checks(P, A);
      if (!oc.up_boc.holds && !oc.down_boc.holds) return;
      ++boc;
      const DirectionalVerdict pre = preregularity(P, A);
      const bool bad = (oc.up_boc.holds && !pre.up.holds) || (oc.down_boc.holds && !pre.down.holds);
      if (bad) {
        ++violations;
        if (first.is_null()) first = Json{{"order", to_json(P)}, {"subset", to_json(A)}};
      }
    });
  }
  r.passed = violations == 0;
  r.details["complete_semilattices"] = orders;
  r.details["boc_subsets"] = boc;
  r.details["violations"] = violations;
  if (!first.is_null()) r.details["first_violation"] = std::move(first);
  return r;
}

Report density_chain(const Params& p) {
  Report r = make_report(p);
  const std::size_t n = bounded(p.max_size, 5, 6, "--max-size");
  std::uint64_t orders = 0, subsets = 0, violations = 0;
  Json first = nullptr;
  for (const QuasiOrder& P : posets_up_to(n)) {
    // D+ is only meaningful below a least element.
    if (!LatticeView(P).bottom()) continue;
    ++orders;
    const bool meet_semilattice = LatticeView(P).is_meet_semilattice();
    for_each_subset(P.universe(), [&](const Subset& D) {
      ++subsets;
      const bool jd = is_join_dense(P, D).holds;
      const bool ip = is_interval_predense(P, D).holds;
      const bool dn = is_dense(P, D).holds;
      const bool bad = (jd && !ip) || (ip && !dn) || (meet_semilattice && ip && !jd);
      if (bad) {
        ++violations;
        if (first.is_null()) first = Json{{"order", to_json(P)}, {"subset", to_json(D)}};
      }
    });
  }
  r.passed = violations == 0;
  r.details["pointed_posets"] = orders;
  r.details["subsets"] = subsets;
  r.details["violations"] = violations;
  if (!first.is_null()) r.details["first_violation"] = std::move(first);
  return r;
}

Report boolean_basis(const Params& p) {
  Report r = make_report(p);
  const std::size_t n = bounded(p.max_size, 3, 4, "--max-size");
  std::uint64_t candidates = 0, violations = 0;
  Json first = nullptr;
  for (std::size_t bits = 0; bits <= n; ++bits) {
    const LatticeView L(powerset(bits));
    const std::size_t size = L.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << size); ++mask) {
      const Subset D = Subset::from_mask(size, mask);
      if (!is_meet_subsemilattice(L, D).holds || !is_dense(L.order(), D).holds) continue;
      ++candidates;
      if (!is_basis(L, D).holds) {
        ++violations;
        if (first.is_null()) first = Json{{"bits", bits}, {"subset", to_json(D)}};
      }
    }
  }
  r.passed = violations == 0;
  r.details["max_bits"] = n;
  r.details["dense_meet_subsemilattices"] = candidates;
  r.details["violations"] = violations;
  if (!first.is_null()) r.details["first_violation"] = std::move(first);
  return r;
}

Report jid_distributive(const Params& p) {
  Report r = make_report(p);
  const std::size_t n = bounded(p.max_size, 6, 7, "--max-size");
  std::uint64_t lattices = 0, violations = 0, distributive = 0;
  for (const QuasiOrder& Q : lattices_up_to(n)) {
    const LatticeView L(Q);
    ++lattices;
    const bool d = is_distributive(L).holds;
    distributive += d;
    const bool jid = check_jid(L, p.seed).holds;
    const bool mid = check_mid(L, p.seed).holds;
    if ((jid && !d) || (mid && !d)) ++violations;
  }
  r.passed = violations == 0;
  r.details["lattices"] = lattices;
  r.details["distributive"] = distributive;
  r.details["violations"] = violations;
  return r;
}

// --- monoids --------------------------------------------------------------

template <typename Check>
Report vector_laws(const Params& p, Check&& check) {
  Report r = make_report(p);
  const std::size_t dims = bounded(p.dims, 4, 8, "--dims");
  const std::uint64_t samples = p.samples.value_or(10000);
  Json reports = Json::array();
  for (std::size_t d = 1; d <= dims; ++d) {
    for (const LawReport& lr : check(VectorMonoid(d), samples, p.seed + d)) {
      r.passed = r.passed && lr.holds;
      Json j = to_json(lr);
      j["dims"] = d;
      reports.push_back(std::move(j));
    }
  }
  r.details["samples"] = samples;
  r.details["seed"] = p.seed;
  r.details["reports"] = std::move(reports);
  return r;
}

Report monoid_distributive(const Params& p) {
  return vector_laws(p, [](const VectorMonoid& V, std::uint64_t samples, std::uint64_t seed) {
    std::vector<LawReport> out;
    for (DistributiveLaw law : {DistributiveLaw::plus_join, DistributiveLaw::plus_meet,
                                DistributiveLaw::plus_join_inf, DistributiveLaw::plus_meet_inf}) {
      out.push_back(check_distributivity(V, law, samples, seed));
    }
    return out;
  });
}

Report disjoint_sum(const Params& p) {
  return vector_laws(p, [](const VectorMonoid& V, std::uint64_t samples, std::uint64_t seed) {
    return std::vector<LawReport>{check_disjoint_sum_laws(V, samples, seed)};
  });
}

Report subtraction_monotone(const Params& p) {
  return vector_laws(p, [](const VectorMonoid& V, std::uint64_t samples, std::uint64_t seed) {
    return std::vector<LawReport>{check_subtraction_laws(V, samples, seed)};
  });
}

Report group_completion_check(const Params& p) {
  Report r = make_report(p);
  const std::size_t n = bounded(p.max_size, 4, 4, "--max-size");
  std::uint64_t monoids = 0, cancellative = 0, rejected = 0, failures = 0;
  Json first = nullptr;
  for (std::size_t size = 1; size <= n; ++size) {
    for (const FiniteMonoid& M : enumerate_commutative_monoids(size)) {
      ++monoids;
      const bool canc = is_cancellative(M);
      std::string problem;
      try {
        const GroupCompletion g = group_completion(M);
        if (!canc) {
          problem = "non-cancellative monoid was completed";
        } else {
          ++cancellative;
          bool ok = is_group(g.group);
          Subset seen(g.group.size());
          for (Element a = 0; a < M.size(); ++a) {
            ok = ok && !seen.contains(g.embedding[a]);
            seen.insert(g.embedding[a]);
            for (Element b = 0; b < M.size(); ++b) {
              ok = ok && g.embedding[M.op(a, b)] == g.group.op(g.embedding[a], g.embedding[b]);
            }
          }
          if (!ok) problem = "completion is not a group with an injective homomorphic embedding";
        }
      } catch (const NotCancellative&) {
        if (canc) problem = "cancellative monoid was rejected";
        else ++rejected;
      }
      if (!problem.empty()) {
        ++failures;
        if (first.is_null()) first = Json{{"monoid", to_json(M)}, {"problem", problem}};
      }
    }
  }
  // N^d against Z^d on a box.
  const std::size_t dims = bounded(p.dims, 2, 6, "--dims");
  const VectorMonoid N(dims);
  const VectorCompletion C(N);
  std::uint64_t vector_failures = 0;
  std::mt19937_64 rng(p.seed);
  const std::uint64_t samples = p.samples.value_or(1000);
  for (std::uint64_t i = 0; i < samples; ++i) {
    const Vec a = N.random_element(rng, 6);
    const Vec b = N.random_element(rng, 6);
    const bool additive = C.to_integers(C.embed(N.add(a, b))) ==
                          C.to_integers(C.add(C.embed(a), C.embed(b)));
    const bool injective = (a == b) == (C.embed(a) == C.embed(b));
    const Vec z = C.group().add(a, C.group().negate(b));
    const bool round_trip = C.to_integers(C.from_integers(z)) == z &&
                            C.from_integers(C.to_integers(C.make(a, b))) == C.make(a, b);
    if (!additive || !injective || !round_trip || C.to_integers(C.embed(a)) != a) ++vector_failures;
  }
  r.passed = failures == 0 && vector_failures == 0;
  r.details["monoids"] = monoids;
  r.details["cancellative"] = cancellative;
  r.details["rejected"] = rejected;
  r.details["failures"] = failures;
  r.details["vector_dims"] = dims;
  r.details["vector_samples"] = samples;
  r.details["vector_failures"] = vector_failures;
  if (!first.is_null()) r.details["first_failure"] = std::move(first);
  return r;
}

// --- topology -------------------------------------------------------------

struct CatTally {
  std::uint64_t spaces = 0;
  std::uint64_t failures = 0;
  Json first = nullptr;
};

void cat_iso_one(const FiniteTopology& T, CatTally& t) {
  ++t.spaces;
  const CategoryAlgebra C = category_algebra(T);
  const Verdict v = verify_category_iso(C);
  const bool boolean = classify(C.algebra.lattice.order()).boolean;
  if (!v.holds || !boolean) {
    ++t.failures;
    if (t.first.is_null()) t.first = to_json(T);
  }
}

Report cat_tally_report(const Params& p, const CatTally& t) {
  Report r = make_report(p);
  r.passed = t.failures == 0;
  r.details["topologies"] = t.spaces;
  r.details["failures"] = t.failures;
  if (!t.first.is_null()) r.details["first_failure"] = t.first;
  return r;
}

Report cat_ro_iso(const Params& p) {
  const std::size_t n = bounded(p.points, 4, 5, "--points");
  CatTally t;
  for (const FiniteTopology& T : topologies_up_to(n)) cat_iso_one(T, t);
  Report r = cat_tally_report(p, t);
  r.details["max_points"] = n;
  return r;
}

Report finite_baire(const Params& p) {
  Report r = make_report(p);
  const std::size_t n = bounded(p.points, 4, 5, "--points");
  std::uint64_t spaces = 0, failures = 0;
  for (const FiniteTopology& T : topologies_up_to(n)) {
    ++spaces;
    if (!is_baire(T) || !largest_open_meager(T).empty()) ++failures;
  }
  r.passed = failures == 0;
  r.details["topologies"] = spaces;
  r.details["failures"] = failures;
  return r;
}

Report clopen_basis(const Params& p) {
  Report r = make_report(p);
  const std::size_t n = bounded(p.points, 4, 5, "--points");
  std::uint64_t zero_dim = 0, failures = 0;
  for (const FiniteTopology& T : topologies_up_to(n)) {
    try {
      const Verdict v = clopen_basis_check(T);
      ++zero_dim;
      if (!v.holds) ++failures;
    } catch (const NotZeroDimensional&) {
    }
  }
  r.passed = failures == 0;
  r.details["zero_dimensional"] = zero_dim;
  r.details["failures"] = failures;
  return r;
}

// --- searches: passed == no witness found ----------------------------------

Report search_convex_not_preregular(const Params& p) {
  Report r = make_report(p);
  const std::size_t n = bounded(p.max_size, 5, 6, "--max-size");
  for (const QuasiOrder& P : posets_up_to(n)) {
    if (P.size() > 0 && LatticeView(P).is_lattice()) continue;
    Json found = nullptr;
    for_each_subset(P.universe(), [&](const Subset& A) {
      if (!found.is_null() || !is_convex(P, A).holds) return;
      const DirectionalVerdict v = preregularity(P, A);
      if (!v.holds()) {
        found = Json{{"order", to_json(P)},
                     {"subset", to_json(A)},
                     {"preregularity", detail::directional_json(v, {})}};
      }
    });
    if (!found.is_null()) {
      r.passed = false;
      r.details["witness"] = std::move(found);
      return r;
    }
  }
  r.details["witness"] = nullptr;
  return r;
}

Report search_sup_not_preserved(const Params& p) {
  Report r = make_report(p);
  const std::size_t n = bounded(p.max_size, 4, 5, "--max-size");
  const auto posets = posets_up_to(n);
  for (const QuasiOrder& P : posets) {
    for (const QuasiOrder& Q : posets) {
      const EmbeddingCensus c = enumerate_embeddings(P, Q, census_options(p));
      for (std::size_t i = 0; i < c.maps.size(); ++i) {
        const MonotoneMap s = c.map(i);
        const ContinuityReport cr = continuity_checks(s);
        if (!cr.preserves_nonempty_sups.holds) {
          r.passed = false;
          r.details["witness"] = Json{{"dom", to_json(P)},
                                      {"cod", to_json(Q)},
                                      {"image", image_json(c.maps[i].image)},
                                      {"preregular_range", is_preregular(Q, s.range())},
                                      {"sup", detail::verdict_json(cr.preserves_nonempty_sups, {})}};
          return r;
        }
      }
    }
  }
  r.details["witness"] = nullptr;
  return r;
}

Report search_monoid_law_violation(const Params& p) {
  Report r = make_report(p);
  const std::size_t n = bounded(p.size, 4, 4, "--size");
  const std::string law = p.law.value_or("plus_meet");
  std::uint64_t scanned = 0;
  for (const FiniteMonoid& M : enumerate_commutative_monoids(n)) {
    if (!associated_order(M).is_partial_order()) continue;
    ++scanned;
    LawReport lr;
    if (law == "disjoint-sum") {
      lr = check_disjoint_sum_laws(M);
    } else if (law == "subtraction") {
      lr = check_subtraction_laws(M);
    } else {
      const auto l = distributive_law_from_string(law);
      if (!l) throw InvalidInput("unknown law " + law);
      lr = check_distributivity(M, *l);
    }
    if (!lr.holds) {
      r.passed = false;
      r.details["scanned"] = scanned;
      r.details["witness"] = Json{{"monoid", to_json(M)}, {"report", to_json(lr)}};
      return r;
    }
  }
  r.details["scanned"] = scanned;
  r.details["witness"] = nullptr;
  return r;
}

Report search_non_baire(const Params& p) {
  Report r = make_report(p);
  const std::size_t n = bounded(p.points, 4, 5, "--points");
  std::uint64_t scanned = 0;
  for (const FiniteTopology& T : topologies_up_to(n)) {
    ++scanned;
    if (!is_baire(T)) {
      r.passed = false;
      r.details["witness"] = to_json(T);
      r.details["scanned"] = scanned;
      return r;
    }
  }
  r.details["scanned"] = scanned;
  r.details["witness"] = nullptr;
  return r;
}

// --- sweeps over exactly one size ------------------------------------------

Report sweep_cat_ro_iso(const Params& p) {
  const std::size_t n = bounded(p.points, 3, 5, "--points");
  CatTally t;
  for (const FiniteTopology& T : enumerate_topologies(n)) cat_iso_one(T, t);
  Report r = cat_tally_report(p, t);
  r.details["points"] = n;
  return r;
}

Report sweep_baire(const Params& p) {
  Report r = make_report(p);
  const std::size_t n = bounded(p.points, 3, 5, "--points");
  std::uint64_t spaces = 0, baire = 0;
  for (const FiniteTopology& T : enumerate_topologies(n)) {
    ++spaces;
    baire += is_baire(T);
  }
  r.passed = spaces == baire;
  r.details["points"] = n;
  r.details["topologies"] = spaces;
  r.details["baire"] = baire;
  return r;
}

Report sweep_atoms_powerset(const Params& p) {
  Report r = make_report(p);
  const std::size_t n = bounded(p.max_size, 4, 6, "--max-size");
  Json rows = Json::array();
  for (std::size_t bits = 0; bits <= n; ++bits) {
    const QuasiOrder P = powerset(bits);
    Subset singletons(P.size());
    for (std::size_t i = 0; i < bits; ++i) singletons.insert(Element{1} << i);
    const Subset a = atoms(P);
    const bool ok = a == singletons;
    r.passed = r.passed && ok;
    rows.push_back(Json{{"bits", bits}, {"atoms", to_json(a)}, {"singletons", ok}});
  }
  r.details["powersets"] = std::move(rows);
  return r;
}

Report sweep_convex_preregular(const Params& p) {
  const std::size_t n = bounded(p.size, 5, 7, "--size");
  Report r = convex_preregular_over(p, enumerate_lattices(n));
  r.details["size"] = n;
  return r;
}

}  // namespace

const std::vector<Verifier>& registry() {
  static const std::vector<Verifier> entries = {
      {"verify", "thm-powerset-form", {"powerset-characterization"}, "power-set embeddings",
       "convex-range embeddings P(X) -> P(Y) are exactly a -> h[a] u b (--x, --y)", powerset_form},
      {"verify", "thm-chainprod-form", {"chainprod-characterization"}, "chain-product embeddings",
       "convex-range embeddings C_k^I -> C_m^J are shifted coordinate injections (--k, --m, --dims-in, --dims-out)",
       chainprod_form},
      {"verify", "thm-preregular-continuity", {}, "continuity of embeddings",
       "embeddings with preregular range preserve nonempty sups and infs (--max-size, --samples random 6-element lattice pairs)",
       preregular_continuity},
      {"verify", "lem-convex-preregular", {}, "subsets of lattices",
       "convex subsets of lattices are preregular (--max-size)", convex_preregular},
      {"verify", "lem-boc-preregular", {}, "subsets of complete semilattices",
       "boundedly order closed subsets of complete semilattices are preregular (--max-size)", boc_preregular},
      {"verify", "prop-density-chain", {}, "density notions",
       "join dense -> interval predense -> dense in pointed posets; equivalence of the first two in meet semilattices (--max-size)",
       density_chain},
      {"verify", "lem-boolean-basis", {}, "density notions",
       "dense meet subsemilattices of power sets are bases (--max-size bits)", boolean_basis},
      {"verify", "prop-jid-distributive", {}, "lattice distributivity",
       "JID and MID each imply distributivity (--max-size)", jid_distributive},
      {"verify", "thm-extension-convexity", {}, "extension from a basis",
       "restrictions of convex embeddings to a basis extend back uniquely with convex range (--dom, --cod, --subset)",
       extension_convexity},
      {"verify", "cor-atom-image", {}, "atoms of images",
       "embeddings map atoms onto the relative atoms of their range (--dom, --cod)", atom_image},
      {"verify", "thm-monoid-distributive", {}, "monoid distributive laws",
       "N^I is (+,join) and (+,meet) distributive, finitely and infinitely (--dims, --samples, --seed)",
       monoid_distributive},
      {"verify", "lem-disjoint-sum", {}, "monoid distributive laws",
       "disjoint elements of N^I add to their join (--dims, --samples, --seed)", disjoint_sum},
      {"verify", "prop-subtraction-monotone", {}, "monoid subtraction",
       "subtraction in N^I exists and is monotone where required (--dims, --samples, --seed)",
       subtraction_monotone},
      {"verify", "lem-group-completion", {}, "group completion",
       "cancellative commutative monoids complete to groups; others are rejected (--max-size, --dims)",
       group_completion_check},
      {"verify", "prop-cat-ro-iso", {}, "category algebras",
       "Cat(X) is Boolean and isomorphic to RO(X minus cl U_X) for every topology (--points)", cat_ro_iso},
      {"verify", "prop-finite-baire", {}, "category algebras",
       "finite spaces are Baire and U_X is empty (--points)", finite_baire},
      {"verify", "prop-clopen-basis", {}, "category algebras",
       "clopen classes form a basis of Cat(X) in zero-dimensional spaces (--points)", clopen_basis},

      {"search", "convex-not-preregular", {}, "subsets of lattices",
       "a non-lattice with a convex subset that is not preregular (--max-size)", search_convex_not_preregular},
      {"search", "sup-not-preserved", {}, "continuity of embeddings",
       "an embedding that fails to preserve a nonempty supremum (--max-size)", search_sup_not_preserved},
      {"search", "monoid-law-violation", {}, "monoid distributive laws",
       "a finite poset monoid violating --law (plus_join, plus_meet, ..., disjoint-sum, subtraction; --size)",
       search_monoid_law_violation},
      {"search", "non-baire", {}, "category algebras", "a finite topology that is not Baire (--points)",
       search_non_baire},

      {"sweep", "cat-ro-iso", {"prop-cat-ro-iso"}, "category algebras",
       "category algebra isomorphism over every topology on exactly --points points", sweep_cat_ro_iso},
      {"sweep", "baire", {}, "category algebras", "Baire property over every topology on exactly --points points",
       sweep_baire},
      {"sweep", "atoms-powerset", {}, "atoms of images", "atoms of P(n) are the singletons, n <= --max-size",
       sweep_atoms_powerset},
      {"sweep", "convex-preregular", {"lem-convex-preregular"}, "subsets of lattices",
       "convex implies preregular over every lattice with exactly --size elements", sweep_convex_preregular},
  };
  return entries;
}

const Verifier* find_verifier(const std::string& kind, const std::string& name) {
  for (const Verifier& v : registry()) {
    if (v.kind != kind) continue;
    if (v.slug == name || std::find(v.aliases.begin(), v.aliases.end(), name) != v.aliases.end()) {
      return &v;
    }
  }
  return nullptr;
}

}  // namespace latkit::cli
