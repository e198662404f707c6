// Prints one PASS/FAIL line per acceptance criterion; exits 1 if any fails.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "latkit/constructions.hpp"
#include "latkit/embedding.hpp"
#include "latkit/errors.hpp"
#include "latkit/lattice.hpp"
#include "latkit/monoid.hpp"
#include "latkit/topology.hpp"
#include "oracles.hpp"

using namespace latkit;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Images = std::vector<std::vector<Element>>;

CensusOptions single_threaded(bool convex_only) {
  CensusOptions opt;
  opt.filters.convex_range = convex_only;
  opt.threads = 1;
  return opt;
}

Images images_of(const EmbeddingCensus& c) {
  Images out;
  for (const CensusEntry& e : c.maps) out.push_back(e.image);
  return out;
}

Images as_images(const std::vector<oracle::Image>& v) {
  Images out;
  for (const oracle::Image& f : v) out.emplace_back(f.begin(), f.end());
  return out;
}

std::vector<QuasiOrder> posets_up_to(std::size_t n) {
  std::vector<QuasiOrder> out;
  for (std::size_t k = 0; k <= n; ++k) {
    for (QuasiOrder& Q : enumerate_posets(k)) out.push_back(std::move(Q));
  }
  return out;
}

Outcome powerset_characterization() {
  Outcome o;
  std::size_t instances = 0, maps = 0;
  for (std::size_t x = 1; x <= 3; ++x) {
    for (std::size_t y = x; y <= 4; ++y) {
      ++instances;
      const EmbeddingCensus c = enumerate_embeddings(powerset(x), powerset(y), single_threaded(true));
      const Images census = images_of(c);
      const Images formula = powerset_formula_images(x, y);
      const Images naive = as_images(oracle::census(oracle::powerset_matrix(x), oracle::powerset_matrix(y), true));
      const Images direct = as_images(oracle::powerset_formula(x, y));
      std::size_t round_trip_failures = 0;
      for (std::size_t i = 0; i < c.maps.size(); ++i) {
        try {
          if (powerset_compose(powerset_decompose(c.map(i))) != c.maps[i].image) ++round_trip_failures;
        } catch (const Error&) {
          ++round_trip_failures;
        }
      }
      maps += census.size();
      if (census != formula || census != naive || census != direct || round_trip_failures != 0) {
        o.pass = false;
        std::ostringstream s;
        s << "P(" << x << ")->P(" << y << "): census " << census.size() << ", formula " << formula.size()
          << ", naive " << naive.size() << ", round trip failures " << round_trip_failures;
        o.detail = s.str();
        return o;
      }
    }
  }
  o.detail = std::to_string(instances) + " instances, " + std::to_string(maps) + " maps";
  return o;
}

Outcome chainprod_characterization() {
  Outcome o;
  struct Case {
    std::size_t k, m, in, out;
  };
  const std::vector<Case> cases{{2, 2, 1, 2}, {2, 3, 1, 1}, {3, 5, 1, 1}, {2, 2, 2, 2}, {2, 2, 2, 3}};
  std::size_t maps = 0, mismatches = 0;
  for (const Case& cs : cases) {
    const ChainPower in(cs.k, cs.in), out(cs.m, cs.out);
    const EmbeddingCensus c = enumerate_embeddings(in.order(), out.order(), single_threaded(true));
    const Images census = images_of(c);
    const Images naive = as_images(oracle::census(oracle::chain_power_matrix(cs.k, cs.in),
                                                  oracle::chain_power_matrix(cs.m, cs.out), true));
    const Images formula = chainprod_formula_images(cs.k, cs.m, cs.in, cs.out);
    for (std::size_t i = 0; i < c.maps.size(); ++i) {
      try {
        if (chainprod_compose(chainprod_decompose(c.map(i), in, out)) != c.maps[i].image) ++mismatches;
      } catch (const Error&) {
        ++mismatches;
      }
    }
    maps += census.size();
    if (census != naive || census != formula) {
      o.pass = false;
      std::ostringstream s;
      s << "C" << cs.k << "^" << cs.in << "->C" << cs.m << "^" << cs.out << ": census " << census.size()
        << ", naive " << naive.size() << ", formula " << formula.size();
      o.detail = s.str();
      return o;
    }
  }
  o.pass = mismatches == 0;
  o.detail = std::to_string(cases.size()) + " instances, " + std::to_string(maps) + " maps, " +
             std::to_string(mismatches) + " mismatches";
  return o;
}

// Library report plus an independent recount from the oracle.
bool preregular_continuity_pair(const QuasiOrder& P, const QuasiOrder& Q, std::size_t& embeddings,
                                std::size_t& preregular, std::string& problem) {
  const PreregularContinuityReport r = verify_preregular_continuity(P, Q, single_threaded(false));
  const oracle::Matrix pm = oracle::matrix_of(P), qm = oracle::matrix_of(Q);
  std::size_t naive_preregular = 0;
  const auto naive = oracle::census(pm, qm, false);
  for (const oracle::Image& f : naive) {
    if (!oracle::preregular(qm, oracle::range_mask(f))) continue;
    ++naive_preregular;
    if (!oracle::preserves_nonempty_bounds(pm, qm, f)) {
      problem = "oracle found a preregular embedding that loses a bound";
      return false;
    }
  }
  embeddings += r.embeddings;
  preregular += r.preregular;
  if (!r.holds()) {
    problem = "library reported " + std::to_string(r.violations.size()) + " violations";
    return false;
  }
  if (r.embeddings != naive.size() || r.preregular != naive_preregular) {
    problem = "library and oracle counts differ";
    return false;
  }
  return true;
}

Outcome preregular_continuity() {
  Outcome o;
  const std::vector<QuasiOrder> posets = posets_up_to(5);
  std::size_t pairs = 0, embeddings = 0, preregular = 0;
  std::string problem;
  for (const QuasiOrder& P : posets) {
    for (const QuasiOrder& Q : posets) {
      ++pairs;
      if (!preregular_continuity_pair(P, Q, embeddings, preregular, problem)) {
        o.pass = false;
        o.detail = "poset pair " + std::to_string(pairs) + ": " + problem;
        return o;
      }
    }
  }
  const std::vector<QuasiOrder> six = enumerate_lattices(6);
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<std::size_t> pick(0, six.size() - 1);
  for (int i = 0; i < 200; ++i) {
    const QuasiOrder P = random_relabel(six[pick(rng)], rng);
    const QuasiOrder Q = random_relabel(six[pick(rng)], rng);
    if (!preregular_continuity_pair(P, Q, embeddings, preregular, problem)) {
      o.pass = false;
      o.detail = "random lattice pair " + std::to_string(i) + ": " + problem;
      return o;
    }
  }
  o.detail = std::to_string(posets.size()) + " posets, " + std::to_string(pairs) + " pairs + 200 random lattice pairs, " +
             std::to_string(embeddings) + " embeddings, " + std::to_string(preregular) + " preregular";
  return o;
}

Outcome convex_preregular() {
  Outcome o;
  std::size_t lattices = 0, convex = 0, violations = 0, disagreements = 0;
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const QuasiOrder& L : enumerate_lattices(n)) {
      ++lattices;
      const oracle::Matrix m = oracle::matrix_of(L);
      if (!oracle::is_lattice(m)) ++disagreements;
      for_each_subset(L.universe(), [&](const Subset& A) {
        const bool c = is_convex(L, A).holds;
        const bool pr = is_preregular(L, A);
        if (c != oracle::convex(m, A.mask()) || pr != oracle::preregular(m, A.mask())) ++disagreements;
        if (!c) return;
        ++convex;
        if (!pr) ++violations;
      });
    }
  }
  // The implication needs the lattice hypothesis: look for a convex,
  // non-preregular subset of the bowtie.
  const QuasiOrder B = bowtie();
  std::optional<Subset> witness;
  for_each_subset(B.universe(), [&](const Subset& A) {
    if (!witness && is_convex(B, A).holds && !is_preregular(B, A) &&
        !oracle::preregular(oracle::matrix_of(B), A.mask())) {
      witness = A;
    }
  });
  o.pass = violations == 0 && disagreements == 0 && witness.has_value();
  std::ostringstream s;
  s << lattices << " lattices, " << convex << " convex subsets, " << violations << " violations, "
    << disagreements << " oracle disagreements; bowtie witness ";
  if (witness) {
    s << "{";
    const auto idx = witness->indices();
    for (std::size_t i = 0; i < idx.size(); ++i) s << (i ? "," : "") << idx[i];
    s << "}";
  } else {
    s << "missing";
  }
  o.detail = s.str();
  return o;
}

Subset powerset_basis(std::size_t bits) {
  Subset B(std::size_t{1} << bits);
  B.insert(0);
  for (std::size_t i = 0; i < bits; ++i) B.insert(Element{1} << i);
  return B;
}

Subset axis_basis(const ChainPower& C) {
  Subset B(C.size());
  for (Element e = 0; e < C.size(); ++e) {
    const auto c = C.decode(e);
    if (std::count_if(c.begin(), c.end(), [](std::size_t v) { return v != 0; }) <= 1) B.insert(e);
  }
  return B;
}

// Restrict every convex census map to B, extend it back and compare.
bool extension_instance(const QuasiOrder& Lq, const Subset& B, const QuasiOrder& Mq, std::size_t& checked,
                        std::string& problem) {
  auto L = std::make_shared<const QuasiOrder>(Lq);
  auto M = std::make_shared<const QuasiOrder>(Mq);
  const EmbeddingCensus c = enumerate_embeddings(L, M, single_threaded(true));
  const oracle::Matrix mm = oracle::matrix_of(Mq);
  for (const CensusEntry& e : c.maps) {
    std::vector<Element> sigma(e.image.size(), LatticeView::kAbsent);
    B.for_each([&](Element b) { sigma[b] = e.image[b]; });
    try {
      const ConvexityTransferReport t = verify_convexity_transfer(L, B, M->universe(), M, sigma);
      oracle::Image ext(t.extension.begin(), t.extension.end());
      if (!t.holds() || t.extension != e.image || !oracle::convex(mm, oracle::range_mask(ext))) {
        problem = "extension not reproduced, not unique or not convex";
        return false;
      }
    } catch (const HypothesisFailed& h) {
      problem = std::string("hypothesis failed: ") + h.what();
      return false;
    }
    ++checked;
  }
  return true;
}

Outcome extension_suite() {
  Outcome o;
  std::size_t instances = 0, checked = 0;
  std::string problem;
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::size_t m = n; m <= 3; ++m) {
      for (const Subset& B : {powerset_basis(n), Subset::full(std::size_t{1} << n)}) {
        ++instances;
        if (!extension_instance(powerset(n), B, powerset(m), checked, problem)) {
          o.pass = false;
          o.detail = "P(" + std::to_string(n) + ")->P(" + std::to_string(m) + "): " + problem;
          return o;
        }
      }
    }
  }
  struct Case {
    std::size_t k, m, in, out;
  };
  for (const Case& cs : std::vector<Case>{{2, 3, 1, 1}, {3, 5, 1, 1}, {2, 2, 1, 2}, {2, 2, 2, 2}, {2, 2, 2, 3}, {3, 3, 2, 2}}) {
    const ChainPower in(cs.k, cs.in), out(cs.m, cs.out);
    for (const Subset& B : {axis_basis(in), Subset::full(in.size())}) {
      ++instances;
      if (!extension_instance(in.order(), B, out.order(), checked, problem)) {
        o.pass = false;
        std::ostringstream s;
        s << "C" << cs.k << "^" << cs.in << "->C" << cs.m << "^" << cs.out << ": " << problem;
        o.detail = s.str();
        return o;
      }
    }
  }
  o.detail = std::to_string(instances) + " instances, " + std::to_string(checked) + " extensions reproduced";
  return o;
}

Outcome monoid_laws() {
  Outcome o;
  constexpr std::uint64_t kSamples = 10000;
  std::size_t reports = 0;
  for (std::size_t d = 1; d <= 4; ++d) {
    const VectorMonoid V(d);
    const std::uint64_t seed = 1000 + d;
    std::vector<LawReport> rs;
    for (DistributiveLaw law : {DistributiveLaw::plus_join, DistributiveLaw::plus_meet,
                                DistributiveLaw::plus_join_inf, DistributiveLaw::plus_meet_inf}) {
      rs.push_back(check_distributivity(V, law, kSamples, seed));
    }
    rs.push_back(check_disjoint_sum_laws(V, kSamples, seed));
    rs.push_back(check_subtraction_laws(V, kSamples, seed));
    for (const LawReport& r : rs) {
      ++reports;
      if (!r.holds || r.instances == 0) {
        o.pass = false;
        o.detail = "N^" + std::to_string(d) + " " + r.law + (r.holds ? ": no instances" : ": violated");
        return o;
      }
    }
  }
  const FiniteMonoid T = truncated_addition(3);
  std::vector<std::string> violated;
  for (DistributiveLaw law : {DistributiveLaw::plus_join, DistributiveLaw::plus_meet,
                              DistributiveLaw::plus_join_inf, DistributiveLaw::plus_meet_inf}) {
    const LawReport r = check_distributivity(T, law);
    if (!r.holds && !r.witness.empty()) violated.push_back(r.law);
  }
  for (const LawReport& r : {check_disjoint_sum_laws(T), check_subtraction_laws(T)}) {
    if (!r.holds && !r.witness.empty()) violated.push_back(r.law);
  }
  o.pass = !violated.empty();
  std::string names;
  for (const std::string& v : violated) names += (names.empty() ? "" : ",") + v;
  o.detail = std::to_string(reports) + " law reports x " + std::to_string(kSamples) +
             " samples clean; truncated addition violates " + (names.empty() ? "nothing" : names);
  return o;
}

Outcome group_completion_check() {
  Outcome o;
  const VectorMonoid N2(2);
  const VectorCompletion G(N2);
  std::size_t failures = 0;
  std::set<Vec> seen;
  for (std::int64_t a0 = 0; a0 <= 6; ++a0) {
    for (std::int64_t a1 = 0; a1 <= 6; ++a1) {
      const Vec a{a0, a1};
      if (!seen.insert(G.to_integers(G.embed(a))).second) ++failures;
      for (std::int64_t b0 = 0; b0 <= 6; ++b0) {
        for (std::int64_t b1 = 0; b1 <= 6; ++b1) {
          const Vec b{b0, b1};
          if (G.embed(N2.add(a, b)) != G.add(G.embed(a), G.embed(b))) ++failures;
          const auto x = G.make(a, b);
          const Vec z = G.to_integers(x);
          if (z != Vec{a0 - b0, a1 - b1} || G.from_integers(z) != x) ++failures;
          if (G.to_integers(G.add(x, G.negate(x))) != Vec{0, 0}) ++failures;
        }
      }
    }
  }
  for (std::int64_t z0 = -6; z0 <= 6; ++z0) {
    for (std::int64_t z1 = -6; z1 <= 6; ++z1) {
      if (G.to_integers(G.from_integers({z0, z1})) != Vec{z0, z1}) ++failures;
    }
  }
  std::size_t cancellative = 0, rejected = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const FiniteMonoid& M : enumerate_commutative_monoids(n)) {
      if (!is_cancellative(M)) {
        try {
          group_completion(M);
          ++failures;
        } catch (const NotCancellative&) {
          ++rejected;
        }
        continue;
      }
      ++cancellative;
      const GroupCompletion C = group_completion(M);
      if (!is_group(C.group)) ++failures;
      std::set<Element> images(C.embedding.begin(), C.embedding.end());
      if (images.size() != M.size()) ++failures;
      for (Element a = 0; a < M.size(); ++a) {
        for (Element b = 0; b < M.size(); ++b) {
          if (C.embedding[M.op(a, b)] != C.group.op(C.embedding[a], C.embedding[b])) ++failures;
        }
      }
    }
  }
  bool max_rejected = false;
  try {
    group_completion(max_monoid(2));
  } catch (const NotCancellative&) {
    max_rejected = true;
  }
  o.pass = failures == 0 && max_rejected && G.group().integers();
  o.detail = "N^2 box checks, " + std::to_string(cancellative) + " cancellative monoids completed, " +
             std::to_string(rejected) + " non-cancellative rejected, ({0,1},max) " +
             (max_rejected ? "rejected" : "accepted") + ", " + std::to_string(failures) + " failures";
  return o;
}

Outcome category_algebra_check() {
  Outcome o;
  std::size_t total = 0, failures = 0;
  std::string counts;
  for (std::size_t n = 0; n <= 4; ++n) {
    const std::vector<FiniteTopology> ts = enumerate_topologies(n);
    counts += (n ? "," : "") + std::to_string(ts.size());
    if (ts.size() != oracle::topology_count(n)) ++failures;
    for (const FiniteTopology& T : ts) {
      ++total;
      const CategoryAlgebra C = category_algebra(T);
      const std::size_t size = C.algebra.members.size();
      const bool boolean = size != 0 && (size & (size - 1)) == 0 && is_distributive(C.algebra.lattice).holds;
      if (!boolean || C.ro.members.size() != size || !verify_category_iso(C).holds) ++failures;
    }
  }
  o.pass = failures == 0;
  o.detail = std::to_string(total) + " topologies (" + counts + "), " + std::to_string(failures) + " failures";
  return o;
}

Outcome atom_laws() {
  Outcome o;
  std::size_t failures = 0, maps = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    Subset singletons(std::size_t{1} << n);
    for (std::size_t i = 0; i < n; ++i) singletons.insert(Element{1} << i);
    if (atoms(powerset(n)) != singletons || oracle::atoms(oracle::powerset_matrix(n)) != singletons.mask()) {
      ++failures;
    }
  }
  auto sweep = [&](const QuasiOrder& P, const QuasiOrder& Q) {
    const EmbeddingCensus c = enumerate_embeddings(P, Q, single_threaded(false));
    const oracle::Matrix pm = oracle::matrix_of(P);
    for (std::size_t i = 0; i < c.maps.size(); ++i) {
      ++maps;
      if (!atom_image_check(c.map(i)).holds) ++failures;
      const std::vector<Element>& f = c.maps[i].image;
      std::vector<Element> members;
      const QuasiOrder R = Q.induced(Subset::from_indices(Q.size(), f), &members);
      std::uint64_t mapped = 0;
      for (std::size_t a : oracle::members(oracle::atoms(pm))) mapped |= 1ull << f[a];
      std::uint64_t range_atoms = 0;
      for (std::size_t r : oracle::members(oracle::atoms(oracle::matrix_of(R)))) range_atoms |= 1ull << members[r];
      if (mapped != range_atoms) ++failures;
    }
  };
  for (std::size_t x = 1; x <= 3; ++x) {
    for (std::size_t y = x; y <= 4; ++y) sweep(powerset(x), powerset(y));
  }
  for (auto [k, m, in, out] : std::vector<std::array<std::size_t, 4>>{
           {2, 2, 1, 2}, {2, 3, 1, 1}, {3, 5, 1, 1}, {2, 2, 2, 2}, {2, 2, 2, 3}}) {
    sweep(ChainPower(k, in).order(), ChainPower(m, out).order());
  }
  o.pass = failures == 0;
  o.detail = "atoms of P(1..4) are singletons; " + std::to_string(maps) + " embeddings checked, " +
             std::to_string(failures) + " failures";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* title;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"power-set embeddings are a -> h[a] u b", powerset_characterization},
      {"chain-product embeddings round-trip", chainprod_characterization},
      {"preregular range implies continuity", preregular_continuity},
      {"convex subsets of lattices are preregular", convex_preregular},
      {"extension from a basis", extension_suite},
      {"monoid distributive laws on N^I", monoid_laws},
      {"group completion iff cancellative", group_completion_check},
      {"category algebra is RO of the complement", category_algebra_check},
      {"atom laws", atom_laws},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all = all && o.pass;
    char time[32];
    std::snprintf(time, sizeof time, "%.2fs", secs);
    std::cout << "AC" << (i + 1) << ' ' << (o.pass ? "PASS" : "FAIL") << "  " << criteria[i].title << "  ["
              << o.detail << "] " << time << std::endl;
  }
  return all ? 0 : 1;
}
