#include <charconv>
#include <map>
#include <sstream>

#include "latkit/errors.hpp"
#include "latkit_cli/cli.hpp"

namespace latkit::cli {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::size_t number(const std::string& s, const std::string& spec) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw InvalidInput("bad number \"" + s + "\" in " + spec);
  }
  return v;
}

std::vector<std::string> powerset_labels(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::string s = "{";
    bool first = true;
    for (std::size_t i = 0; i < n; ++i) {
      if ((mask >> i) & 1u) {
        if (!first) s += ',';
        s += std::to_string(i);
        first = false;
      }
    }
    out.push_back(s + "}");
  }
  return out;
}

std::vector<std::string> tuple_labels(const ChainPower& C) {
  std::vector<std::string> out;
  for (Element e = 0; e < C.size(); ++e) {
    std::string s = "(";
    const auto c = C.decode(e);
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(c[i]);
    }
    out.push_back(s + ")");
  }
  return out;
}

template <typename T>
const T& pick(const std::vector<T>& family, std::size_t index, const std::string& spec) {
  if (index >= family.size()) {
    throw InvalidInput(spec + ": index out of range (" + std::to_string(family.size()) +
                       " available)");
  }
  return family[index];
}

Structure order_structure(std::string name, QuasiOrder Q, std::vector<std::string> labels = {}) {
  Structure s;
  s.kind = Structure::Kind::order;
  s.name = std::move(name);
  s.order = std::make_shared<const QuasiOrder>(std::move(Q));
  s.labels = std::move(labels);
  return s;
}

// Order given either as a builtin name or as an order document.
Structure order_operand(const Json& j) {
  if (j.is_string()) {
    Structure s = builtin_structure(j.get<std::string>());
    if (s.kind != Structure::Kind::order) throw InvalidInput(s.name + " is not an order");
    return s;
  }
  LabeledOrder lo = order_from_json(j);
  return order_structure("order", std::move(lo.order), std::move(lo.labels));
}

Element resolve_element(const Json& e, std::size_t universe, const std::vector<std::string>& labels) {
  if (e.is_string()) {
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (labels[i] == e.get<std::string>()) return i;
    }
    throw InvalidInput("unknown label " + e.get<std::string>());
  }
  if (!e.is_number_integer() || e.get<long long>() < 0 ||
      e.get<std::size_t>() >= universe) {
    throw InvalidInput("element out of range: " + e.dump());
  }
  return e.get<std::size_t>();
}

}  // namespace

Structure builtin_structure(const std::string& spec) {
  const auto parts = split(spec, ':');
  const std::string& head = parts[0];
  auto arg = [&](std::size_t i) {
    if (i >= parts.size()) throw InvalidInput(spec + ": missing parameter");
    return number(parts[i], spec);
  };
  auto arity = [&](std::size_t n) {
    if (parts.size() != n + 1) throw InvalidInput(spec + ": expected " + std::to_string(n) + " parameters");
  };
  if (head == "powerset") {
    arity(1);
    const std::size_t n = arg(1);
    if (n > 6) throw InvalidInput("powerset: at most 6 bits");
    Structure s = order_structure(spec, powerset(n), powerset_labels(n));
    s.powerset_bits = n;
    return s;
  }
  if (head == "chainprod") {
    arity(2);
    ChainPower C(arg(1), arg(2));
    if (C.size() > 4096) throw InvalidInput("chainprod: too many elements");
    Structure s = order_structure(spec, C.order(), tuple_labels(C));
    s.chain_power = C;
    return s;
  }
  if (head == "chain") {
    arity(1);
    const std::size_t n = arg(1);
    Structure s = order_structure(spec, chain(n));
    if (n > 0) s.chain_power = ChainPower(n, 1);
    return s;
  }
  if (head == "antichain") {
    arity(1);
    return order_structure(spec, antichain(arg(1)));
  }
  if (head == "m3") return arity(0), order_structure(spec, m3());
  if (head == "n5") return arity(0), order_structure(spec, n5());
  if (head == "diamond") return arity(0), order_structure(spec, diamond());
  if (head == "bowtie") return arity(0), order_structure(spec, bowtie());
  if (head == "poset" || head == "lattice") {
    arity(2);
    const std::size_t n = arg(1);
    if (n > 7) throw InvalidInput(spec + ": at most 7 elements");
    auto family = head == "poset" ? enumerate_posets(n) : enumerate_lattices(n);
    return order_structure(spec, pick(family, arg(2), spec));
  }

  Structure t;
  t.kind = Structure::Kind::topology;
  t.name = spec;
  if (head == "sierpinski") {
    arity(0);
    t.topology = sierpinski();
    return t;
  }
  if (head == "discrete" || head == "indiscrete") {
    arity(1);
    const std::size_t n = arg(1);
    if (n > 16) throw InvalidInput(spec + ": at most 16 points");
    t.topology = head == "discrete" ? discrete_topology(n) : indiscrete_topology(n);
    return t;
  }
  if (head == "topology") {
    arity(2);
    const std::size_t n = arg(1);
    if (n > 5) throw InvalidInput(spec + ": at most 5 points");
    t.topology = pick(enumerate_topologies(n), arg(2), spec);
    return t;
  }

  Structure m;
  m.kind = Structure::Kind::monoid;
  m.name = spec;
  if (head == "cyclic" || head == "max" || head == "truncated") {
    arity(1);
    const std::size_t n = arg(1);
    if (n == 0 || n > 64) throw InvalidInput(spec + ": size must be in 1..64");
    m.monoid = head == "cyclic" ? cyclic_group(n) : head == "max" ? max_monoid(n) : truncated_addition(n);
    return m;
  }
  if (head == "monoid") {
    arity(2);
    const std::size_t n = arg(1);
    if (n == 0 || n > 4) throw InvalidInput(spec + ": size must be in 1..4");
    m.monoid = pick(enumerate_commutative_monoids(n), arg(2), spec);
    return m;
  }
  throw InvalidInput("unknown structure \"" + spec + "\"");
}

Structure structure_from_json(const Json& j) {
  if (!j.is_object()) throw InvalidInput("input must be a JSON object");
  Structure s;
  if (j.contains("dom")) {
    if (!j.contains("cod") || !j.contains("image")) throw InvalidInput("map needs dom, cod and image");
    Structure dom = order_operand(j.at("dom"));
    Structure cod = order_operand(j.at("cod"));
    const Json& img = j.at("image");
    if (!img.is_array()) throw InvalidInput("image must be an array");
    std::vector<Element> image;
    for (const Json& e : img) image.push_back(resolve_element(e, cod.order->size(), cod.labels));
    s.kind = Structure::Kind::map;
    s.name = j.value("name", std::string("map"));
    s.map.emplace(dom.order, cod.order, std::move(image));
    s.dom_labels = std::move(dom.labels);
    s.cod_labels = std::move(cod.labels);
    s.dom_chain = dom.chain_power;
    s.cod_chain = cod.chain_power;
  } else if (j.contains("table")) {
    s.kind = Structure::Kind::monoid;
    s.name = j.value("name", std::string("monoid"));
    s.monoid = monoid_from_json(j);
  } else if (j.contains("points")) {
    s.kind = Structure::Kind::topology;
    s.name = j.value("name", std::string("topology"));
    s.topology = topology_from_json(j);
  } else if (j.contains("size")) {
    LabeledOrder lo = order_from_json(j);
    s = order_structure(j.value("name", std::string("order")), std::move(lo.order), std::move(lo.labels));
  } else if (j.contains("structure")) {
    if (!j.at("structure").is_string()) throw InvalidInput("structure must be a string");
    s = builtin_structure(j.at("structure").get<std::string>());
  } else {
    throw InvalidInput("cannot tell what structure the input describes");
  }
  if (j.contains("subset")) s.subset = j.at("subset");
  return s;
}

Structure resolve_structure(const Params& p) {
  if (p.input && p.structure) throw InvalidInput("give either --input or --structure, not both");
  if (p.input) return structure_from_json(read_json_file(*p.input));
  if (p.structure) return builtin_structure(*p.structure);
  throw InvalidInput("this command needs --input or --structure");
}

Subset parse_subset(const std::string& text, std::size_t universe,
                    const std::vector<std::string>& labels) {
  Subset S(universe);
  std::string t = text;
  if (!t.empty() && t.front() == '[') {
    Json j;
    try {
      j = Json::parse(t);
    } catch (const Json::parse_error& e) {
      throw InvalidInput(std::string("subset: ") + e.what());
    }
    for (const Json& e : j) S.insert(resolve_element(e, universe, labels));
    return S;
  }
  if (t.empty()) return S;
  for (const std::string& part : split(t, ',')) {
    bool numeric = !part.empty() && part.find_first_not_of("0123456789") == std::string::npos;
    S.insert(resolve_element(numeric ? Json(number(part, "subset")) : Json(part), universe, labels));
  }
  return S;
}

std::string element_name(Element e, const std::vector<std::string>& labels) {
  return e < labels.size() ? labels[e] : std::to_string(e);
}

Json element_names(const std::vector<Element>& es, const std::vector<std::string>& labels) {
  Json out = Json::array();
  for (Element e : es) {
    if (labels.empty()) {
      out.push_back(e);
    } else {
      out.push_back(element_name(e, labels));
    }
  }
  return out;
}

std::string subset_name(const Subset& S, const std::vector<std::string>& labels) {
  std::string out = "{";
  bool first = true;
  S.for_each([&](Element e) {
    if (!first) out += ", ";
    out += element_name(e, labels);
    first = false;
  });
  return out + "}";
}

}  // namespace latkit::cli
