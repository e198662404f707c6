#include "latkit/io.hpp"

#include <fstream>
#include <map>

#include "latkit/errors.hpp"

namespace latkit {

namespace {

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) {
    throw InvalidInput(std::string("missing field \"") + name + "\"");
  }
  return j.at(name);
}

std::size_t to_count(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) {
    throw InvalidInput(std::string(what) + " must be a nonnegative integer");
  }
  return j.get<std::size_t>();
}

Json index_array(const std::vector<Element>& xs) {
  Json out = Json::array();
  for (Element x : xs) out.push_back(x);
  return out;
}

}  // namespace

LabeledOrder order_from_json(const Json& j) {
  const std::size_t n = to_count(field(j, "size"), "size");
  std::vector<std::string> labels;
  std::map<std::string, Element> by_label;
  if (j.contains("labels")) {
    const Json& ls = j.at("labels");
    if (!ls.is_array() || ls.size() != n) throw InvalidInput("labels must list one name per element");
    for (const Json& l : ls) {
      if (!l.is_string()) throw InvalidInput("labels must be strings");
      if (!by_label.emplace(l.get<std::string>(), labels.size()).second) {
        throw InvalidInput("duplicate label " + l.get<std::string>());
      }
      labels.push_back(l.get<std::string>());
    }
  }
  auto element = [&](const Json& e) -> Element {
    if (e.is_string()) {
      const auto it = by_label.find(e.get<std::string>());
      if (it == by_label.end()) throw InvalidInput("unknown label " + e.get<std::string>());
      return it->second;
    }
    return to_count(e, "pair entry");
  };
  std::vector<std::pair<Element, Element>> pairs;
  const Json& ps = j.contains("pairs") ? j.at("pairs") : Json::array();
  if (!ps.is_array()) throw InvalidInput("pairs must be an array");
  for (const Json& p : ps) {
    if (!p.is_array() || p.size() != 2) throw InvalidInput("each pair must have two entries");
    pairs.emplace_back(element(p[0]), element(p[1]));
  }
  return {QuasiOrder::from_generators(n, pairs), std::move(labels)};
}

Json to_json(const QuasiOrder& Q) {
  Json pairs = Json::array();
  if (Q.is_partial_order()) {
    for (const auto& [p, q] : Q.covers()) pairs.push_back({p, q});
  } else {
    for (Element p = 0; p < Q.size(); ++p) {
      for (Element q = 0; q < Q.size(); ++q) {
        if (p != q && Q.leq(p, q)) pairs.push_back({p, q});
      }
    }
  }
  return Json{{"size", Q.size()}, {"pairs", std::move(pairs)}};
}

Subset subset_from_json(const Json& j, std::size_t universe) {
  if (!j.is_array()) throw InvalidInput("subset must be an array of indices");
  Subset S(universe);
  for (const Json& e : j) {
    const std::size_t x = to_count(e, "subset member");
    if (x >= universe) throw InvalidInput("subset member " + std::to_string(x) + " out of range");
    S.insert(x);
  }
  return S;
}

Json to_json(const Subset& S) { return index_array(S.indices()); }

FiniteMonoid monoid_from_json(const Json& j) {
  const std::size_t n = to_count(field(j, "size"), "size");
  const Json& rows = field(j, "table");
  if (!rows.is_array() || rows.size() != n) throw InvalidInput("table must have size rows");
  std::vector<Element> table;
  for (const Json& row : rows) {
    if (!row.is_array() || row.size() != n) throw InvalidInput("table rows must have size entries");
    for (const Json& e : row) table.push_back(to_count(e, "table entry"));
  }
  if (j.contains("identity")) {
    return FiniteMonoid(n, std::move(table), to_count(j.at("identity"), "identity"));
  }
  return FiniteMonoid::from_table(n, std::move(table));
}

Json to_json(const FiniteMonoid& M) {
  Json rows = Json::array();
  for (Element a = 0; a < M.size(); ++a) {
    Json row = Json::array();
    for (Element b = 0; b < M.size(); ++b) row.push_back(M.op(a, b));
    rows.push_back(std::move(row));
  }
  return Json{{"size", M.size()}, {"table", std::move(rows)}, {"identity", M.identity()}};
}

FiniteTopology topology_from_json(const Json& j) {
  const std::size_t n = to_count(field(j, "points"), "points");
  if (n > 16) throw InvalidInput("topology has too many points");
  const Json& opens = j.contains("opens") ? j.at("opens") : Json::array();
  if (!opens.is_array()) throw InvalidInput("opens must be an array");
  std::vector<Subset> gens;
  for (const Json& o : opens) gens.push_back(subset_from_json(o, n));
  return FiniteTopology::generated(n, gens);
}

Json to_json(const FiniteTopology& T) {
  Json opens = Json::array();
  for (const Subset& U : T.opens()) opens.push_back(to_json(U));
  return Json{{"points", T.points()}, {"opens", std::move(opens)}};
}

MonotoneMap map_from_json(const Json& j) {
  auto dom = std::make_shared<const QuasiOrder>(order_from_json(field(j, "dom")).order);
  auto cod = std::make_shared<const QuasiOrder>(order_from_json(field(j, "cod")).order);
  const Json& img = field(j, "image");
  if (!img.is_array()) throw InvalidInput("image must be an array");
  std::vector<Element> image;
  for (const Json& e : img) image.push_back(to_count(e, "image entry"));
  return MonotoneMap(std::move(dom), std::move(cod), std::move(image));
}

Json to_json(const MonotoneMap& s) {
  return Json{{"dom", to_json(s.dom())},
              {"cod", to_json(s.cod())},
              {"image", index_array({s.image().begin(), s.image().end()})}};
}

Json to_json(const Witness& w) {
  Json out{{"elements", index_array(w.elements)}};
  if (w.set) out["set"] = to_json(*w.set);
  if (!w.note.empty()) out["note"] = w.note;
  return out;
}

Json to_json(const Verdict& v) {
  Json out{{"holds", v.holds}};
  if (!v.holds) out["witness"] = to_json(v.witness);
  return out;
}

Json to_json(const DirectionalVerdict& v) {
  return Json{{"holds", v.holds()}, {"up", to_json(v.up)}, {"down", to_json(v.down)}};
}

Json to_json(const OrderClosedVerdict& v) {
  return Json{{"up_boc", to_json(v.up_boc)},
              {"down_boc", to_json(v.down_boc)},
              {"up_oc", to_json(v.up_oc)},
              {"down_oc", to_json(v.down_oc)}};
}

Json to_json(const InfiniteDistributivityVerdict& v) {
  Json out{{"holds", v.holds}, {"exhaustive", v.exhaustive}, {"instances", v.instances}};
  if (!v.holds) out["witness"] = to_json(v.witness);
  return out;
}

Json to_json(const Classification& c) {
  return Json{{"partial_order", c.partial_order},
              {"join_semilattice", c.join_semilattice},
              {"meet_semilattice", c.meet_semilattice},
              {"lattice", c.lattice},
              {"pointed", c.pointed},
              {"bounded", c.bounded},
              {"complete_semilattice", c.complete_semilattice},
              {"complete_lattice", c.complete_lattice},
              {"boolean", c.boolean}};
}

Json to_json(const DensityReport& r) {
  Json out{{"dense", to_json(r.dense)},
           {"join_dense", to_json(r.join_dense)},
           {"interval_predense", to_json(r.interval_predense)},
           {"strongly_interval_predense", to_json(r.strongly_interval_predense)}};
  if (r.basis) out["basis"] = to_json(*r.basis);
  return out;
}

Json to_json(const SubposetAnalysis& a) {
  Json out{{"subset", to_json(a.subset())},
           {"convex", to_json(a.convex())},
           {"preregular", to_json(a.preregular())},
           {"regular", to_json(a.regular())},
           {"order_closed", to_json(a.order_closed())},
           {"flat", a.flat()},
           {"dense", to_json(a.dense())},
           {"join_dense", to_json(a.join_dense())},
           {"interval_predense", to_json(a.interval_predense())}};
  if (a.strongly_interval_predense()) {
    out["strongly_interval_predense"] = to_json(*a.strongly_interval_predense());
  }
  if (a.basis()) out["basis"] = to_json(*a.basis());
  return out;
}

Json to_json(const ContinuityReport& r) {
  return Json{{"preserves_nonempty_sups", to_json(r.preserves_nonempty_sups)},
              {"preserves_nonempty_infs", to_json(r.preserves_nonempty_infs)},
              {"preserves_all_sups", to_json(r.preserves_all_sups)},
              {"preserves_all_infs", to_json(r.preserves_all_infs)},
              {"scott_continuous", to_json(r.scott_continuous)},
              {"co_continuous", to_json(r.co_continuous)}};
}

Json to_json(const RangeReport& r) {
  Json out{{"up_boc_range", to_json(r.up_boc_range)},
           {"down_boc_range", to_json(r.down_boc_range)},
           {"up_oc_range", to_json(r.up_oc_range)},
           {"down_oc_range", to_json(r.down_oc_range)},
           {"order_closed_range", r.order_closed_range}};
  if (r.interval_range) out["interval_range"] = *r.interval_range;
  return out;
}

Json to_json(const BoundednessReport& r) {
  return Json{{"bounded_to_bounded", to_json(r.bounded_to_bounded)},
              {"unbounded_to_unbounded", to_json(r.unbounded_to_unbounded)}};
}

Json to_json(const LawReport& r) {
  Json out{{"law", r.law},
           {"holds", r.holds},
           {"exhaustive", r.exhaustive},
           {"instances", r.instances}};
  if (r.seed) out["seed"] = *r.seed;
  if (!r.holds) {
    out["witness"] = r.witness;
    out["note"] = r.note;
  }
  return out;
}

Json to_json(const MonoidClass& c) {
  return Json{{"commutative", c.commutative},
              {"poset_monoid", c.poset_monoid},
              {"semilattice_monoid", c.semilattice_monoid},
              {"lattice_monoid", c.lattice_monoid},
              {"cancellative", c.cancellative},
              {"invertibles", to_json(c.invertibles)}};
}

Json to_json(const CensusEntry& e) {
  return Json{{"image", index_array(e.image)},
              {"flags",
               {{"embedding", e.embedding},
                {"convex_range", e.convex_range},
                {"preregular_range", e.preregular_range},
                {"downward_closed_range", e.downward_closed_range}}}};
}

Json to_json(const PowersetDecomposition& d) {
  Json h = Json::array();
  for (std::size_t v : d.h) h.push_back(v);
  Json b = Json::array();
  for (std::size_t i = 0; i < d.y; ++i) {
    if ((d.b >> i) & 1u) b.push_back(i);
  }
  return Json{{"x", d.x}, {"y", d.y}, {"h", std::move(h)}, {"b", std::move(b)}};
}

Json to_json(const ChainProdDecomposition& d) {
  Json g = Json::array();
  for (const auto& v : d.g) g.push_back(v ? Json(*v) : Json(nullptr));
  return Json{{"k", d.k}, {"m", d.m}, {"dims_in", d.dims_in}, {"dims_out", d.dims_out},
              {"g", std::move(g)}, {"y", d.y}};
}

Json to_json(const ConvexityTransferReport& r) {
  return Json{{"holds", r.holds()},
              {"extension", index_array(r.extension)},
              {"agrees_on_basis", r.agrees_on_basis},
              {"embedding", r.embedding},
              {"lattice_homomorphism", r.lattice_homomorphism},
              {"convex_range", r.convex_range},
              {"extensions_found", r.extensions_found}};
}

std::string census_json_lines(const EmbeddingCensus& c) {
  std::string out;
  for (const CensusEntry& e : c.maps) {
    out += to_json(e).dump();
    out += '\n';
  }
  return out;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InvalidInput(path + ": " + e.what());
  }
}

}  // namespace latkit
