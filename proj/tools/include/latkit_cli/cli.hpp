#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "latkit/constructions.hpp"
#include "latkit/io.hpp"
#include "latkit/monoid.hpp"
#include "latkit/topology.hpp"

namespace latkit::cli {

enum ExitCode : int { kPass = 0, kViolation = 1, kUsage = 2, kBudget = 3 };

/// Parsed command-line options.  Absent numeric options fall back to the
/// default of whichever command reads them.
struct Params {
  std::string command;
  std::string name;
  std::optional<std::string> input;
  std::optional<std::string> structure;
  std::optional<std::string> dom;
  std::optional<std::string> cod;
  std::optional<std::string> subset;
  std::optional<std::string> law;
  std::optional<std::size_t> x, y, k, m, dims_in, dims_out, dims, points, size, max_size;
  std::uint64_t budget_nodes = 0;
  std::optional<std::uint64_t> samples;
  std::uint64_t seed = 1;
  std::string format = "table";
  bool convex = false;
  bool preregular = false;
  bool downward_closed = false;
  bool all_monotone = false;

  std::size_t get(const std::optional<std::size_t>& v, std::size_t fallback) const {
    return v ? *v : fallback;
  }
};

struct Report {
  std::string command;
  std::string name;
  bool passed = true;
  Json details = Json::object();
};

/// A structure named on the command line or loaded from a JSON document.
struct Structure {
  enum class Kind { order, map, monoid, topology };
  Kind kind = Kind::order;
  std::string name;

  std::shared_ptr<const QuasiOrder> order;
  std::vector<std::string> labels;
  std::optional<ChainPower> chain_power;
  std::optional<std::size_t> powerset_bits;

  std::optional<MonotoneMap> map;
  std::vector<std::string> dom_labels;
  std::vector<std::string> cod_labels;
  std::optional<ChainPower> dom_chain;
  std::optional<ChainPower> cod_chain;

  std::optional<FiniteMonoid> monoid;
  std::optional<FiniteTopology> topology;

  /// A "subset" member of the input document, if any.
  std::optional<Json> subset;
};

/// powerset:N, chain:N, antichain:N, chainprod:K:D, m3, n5, diamond, bowtie,
/// poset:N:I, lattice:N:I; sierpinski, discrete:N, indiscrete:N,
/// topology:N:I; cyclic:N, max:N, truncated:N, monoid:N:I.
Structure builtin_structure(const std::string& spec);
/// Dispatches on the keys present: dom (map), table (monoid), points
/// (topology), size (order).  Orders inside a map may be builtin names.
Structure structure_from_json(const Json& j);
/// --input when given, otherwise --structure.  Throws InvalidInput.
Structure resolve_structure(const Params& p);

/// Comma separated indices or labels, or a JSON array.
Subset parse_subset(const std::string& text, std::size_t universe,
                    const std::vector<std::string>& labels);
std::string element_name(Element e, const std::vector<std::string>& labels);
Json element_names(const std::vector<Element>& es, const std::vector<std::string>& labels);
/// "{a,b}" rendering of a subset, using labels when present.
std::string subset_name(const Subset& S, const std::vector<std::string>& labels);

struct Verifier {
  std::string kind;  // verify, search or sweep
  std::string slug;
  std::vector<std::string> aliases;
  std::string topic;
  std::string summary;
  std::function<Report(const Params&)> run;
};
const std::vector<Verifier>& registry();
const Verifier* find_verifier(const std::string& kind, const std::string& name);

struct CheckInfo {
  std::string name;
  std::string applies_to;
  std::string summary;
};
const std::vector<CheckInfo>& check_catalog();
Report run_check(const Params& p);
Report run_enumerate(const Params& p);

/// Renders a report; table output is a header line plus flattened fields.
void print_report(const Report& r, const std::string& format, std::ostream& out);

/// Full command-line entry point.  Never throws.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace latkit::cli
