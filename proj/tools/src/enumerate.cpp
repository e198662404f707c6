#include "common.hpp"
#include "latkit/embedding.hpp"
#include "latkit/errors.hpp"

namespace latkit::cli {

namespace {

Structure order_operand(const std::optional<std::string>& spec, const char* flag) {
  if (!spec) throw InvalidInput(std::string("enumerate embeddings needs ") + flag);
  Structure s = builtin_structure(*spec);
  if (s.kind != Structure::Kind::order) throw InvalidInput(*spec + " is not an order");
  return s;
}

}  // namespace

Report run_enumerate(const Params& p) {
  Report r = detail::make_report(p);
  Json items = Json::array();
  if (p.name == "embeddings" || p.name == "monotone") {
    const Structure dom = order_operand(p.dom, "--dom");
    const Structure cod = order_operand(p.cod, "--cod");
    CensusOptions opt;
    opt.filters.embedding = p.name == "embeddings" && !p.all_monotone;
    opt.filters.convex_range = p.convex;
    opt.filters.preregular_range = p.preregular;
    opt.filters.downward_closed_range = p.downward_closed;
    opt.budget_nodes = p.budget_nodes;
    const EmbeddingCensus c = enumerate_embeddings(dom.order, cod.order, opt);
    r.details["dom"] = dom.name;
    r.details["cod"] = cod.name;
    r.details["filters"] = Json{{"embedding", opt.filters.embedding},
                                {"convex_range", opt.filters.convex_range},
                                {"preregular_range", opt.filters.preregular_range},
                                {"downward_closed_range", opt.filters.downward_closed_range}};
    r.details["count"] = c.maps.size();
    r.details["nodes"] = c.nodes;
    for (const CensusEntry& e : c.maps) items.push_back(to_json(e));
  } else if (p.name == "posets" || p.name == "lattices") {
    const std::size_t n = p.get(p.size, 4);
    if (n > 7) throw InvalidInput("--size must be at most 7");
    for (const QuasiOrder& Q : p.name == "posets" ? enumerate_posets(n) : enumerate_lattices(n)) {
      items.push_back(to_json(Q));
    }
    r.details["size"] = n;
    r.details["count"] = items.size();
  } else if (p.name == "topologies") {
    const std::size_t n = p.get(p.points, 3);
    if (n > 5) throw InvalidInput("--points must be at most 5");
    for (const FiniteTopology& T : enumerate_topologies(n)) items.push_back(to_json(T));
    r.details["points"] = n;
    r.details["count"] = items.size();
  } else if (p.name == "monoids") {
    const std::size_t n = p.get(p.size, 3);
    if (n == 0 || n > 4) throw InvalidInput("--size must be in 1..4");
    for (const FiniteMonoid& M : enumerate_commutative_monoids(n)) items.push_back(to_json(M));
    r.details["size"] = n;
    r.details["count"] = items.size();
  } else if (p.name == "powerset-formula") {
    const std::size_t x = p.get(p.x, 2), y = p.get(p.y, 3);
    if (x > y || y > 5) throw InvalidInput("need x <= y <= 5");
    for (const auto& img : powerset_formula_images(x, y)) items.push_back(detail::image_json(img));
    r.details["count"] = items.size();
  } else {
    throw InvalidInput("unknown enumeration \"" + p.name +
                       "\" (embeddings, monotone, posets, lattices, topologies, monoids, powerset-formula)");
  }
  r.details["items"] = std::move(items);
  return r;
}

}  // namespace latkit::cli
