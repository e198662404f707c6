#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "common.hpp"
#include "latkit/errors.hpp"

namespace latkit::cli {

namespace {

void flatten(const std::string& prefix, const Json& j, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      flatten(prefix.empty() ? key : prefix + "." + key, value, out);
    }
    return;
  }
  if (prefix == "items" && j.is_array()) {
    for (const Json& item : j) out << "  " << item.dump() << '\n';
    return;
  }
  out << "  " << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
}

std::string status_word(const Report& r) {
  if (r.details.contains("budget_exceeded")) return "BUDGET EXCEEDED";
  if (r.command == "search") return r.passed ? "NONE" : "FOUND";
  return r.passed ? "PASS" : "FAIL";
}

void print_list(const std::string& format, std::ostream& out) {
  if (format == "json") {
    Json j = Json::array();
    for (const Verifier& v : registry()) {
      j.push_back(Json{{"kind", v.kind}, {"slug", v.slug}, {"aliases", v.aliases},
                       {"topic", v.topic}, {"summary", v.summary}});
    }
    for (const CheckInfo& c : check_catalog()) {
      j.push_back(Json{{"kind", "check"}, {"slug", c.name}, {"applies_to", c.applies_to},
                       {"summary", c.summary}});
    }
    out << j.dump(2) << '\n';
    return;
  }
  for (const Verifier& v : registry()) {
    out << v.kind << "  " << v.slug << "  [" << v.topic << "]  " << v.summary;
    if (!v.aliases.empty()) {
      out << "  (alias:";
      for (const std::string& a : v.aliases) out << ' ' << a;
      out << ')';
    }
    out << '\n';
  }
  for (const CheckInfo& c : check_catalog()) {
    out << "check  " << c.name << "  [" << c.applies_to << "]  " << c.summary << '\n';
  }
  out << "enumerate  embeddings|monotone|posets|lattices|topologies|monoids|powerset-formula\n";
}

Report run_verify_all(const Params& p) {
  Report r;
  r.command = "verify";
  r.name = "all";
  Json results = Json::array();
  for (const Verifier& v : registry()) {
    if (v.kind != "verify") continue;
    Params q;
    q.command = "verify";
    q.name = v.slug;
    q.seed = p.seed;
    q.budget_nodes = p.budget_nodes;
    const Report one = v.run(q);
    r.passed = r.passed && one.passed;
    results.push_back(Json{{"slug", v.slug}, {"passed", one.passed}});
  }
  r.details["results"] = std::move(results);
  return r;
}

Report dispatch(const Params& p) {
  if (p.command == "check") return run_check(p);
  if (p.command == "enumerate") return run_enumerate(p);
  if (p.command == "verify" && p.name == "all") return run_verify_all(p);
  const Verifier* v = find_verifier(p.command, p.name);
  if (!v) throw InvalidInput("unknown " + p.command + " target \"" + p.name + "\" (see --list)");
  Report r = v->run(p);
  r.name = v->slug;
  return r;
}

}  // namespace

void print_report(const Report& r, const std::string& format, std::ostream& out) {
  if (format == "json") {
    Json j{{"command", r.command},
           {"name", r.name},
           {"status", r.details.contains("budget_exceeded") ? "budget_exceeded"
                      : r.passed ? (r.command == "search" ? "none_found" : "pass")
                                 : (r.command == "search" ? "found" : "violation")},
           {"details", r.details}};
    out << j.dump(2) << '\n';
    return;
  }
  out << r.command << ' ' << r.name << ": " << status_word(r) << '\n';
  flatten("", r.details, out);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"latkit: finite order-theory engine"};
  app.fallthrough();
  app.require_subcommand(0, 1);

  Params p;
  bool list = false;
  app.add_flag("--list", list, "List verifiers, searches, sweeps and checks");
  app.add_option("--input", p.input, "JSON structure file");
  app.add_option("--structure", p.structure, "Builtin structure, e.g. powerset:3, m3, sierpinski");
  app.add_option("--dom", p.dom, "Builtin domain order");
  app.add_option("--cod", p.cod, "Builtin codomain order");
  app.add_option("--subset", p.subset, "Subset as comma separated indices or labels");
  app.add_option("--law", p.law, "Distributive law (plus_join, plus_meet, plus_join_inf, plus_meet_inf)");
  app.add_option("--x", p.x, "Power-set domain bits");
  app.add_option("--y", p.y, "Power-set codomain bits");
  app.add_option("--k", p.k, "Domain chain length");
  app.add_option("--m", p.m, "Codomain chain length");
  app.add_option("--dims-in", p.dims_in, "Domain chain-product dimension");
  app.add_option("--dims-out", p.dims_out, "Codomain chain-product dimension");
  app.add_option("--dims", p.dims, "Index-set size for N^I");
  app.add_option("--points", p.points, "Number of topology points");
  app.add_option("--size", p.size, "Structure size");
  app.add_option("--max-size", p.max_size, "Largest structure size in a sweep");
  app.add_option("--budget-nodes", p.budget_nodes, "Search node cap (0 = unlimited)");
  app.add_option("--samples", p.samples, "Random instances");
  app.add_option("--seed", p.seed, "Random seed");
  app.add_option("--format", p.format, "Output format")->check(CLI::IsMember({"table", "json"}));
  app.add_flag("--convex", p.convex, "Census: convex range only");
  app.add_flag("--preregular", p.preregular, "Census: preregular range only");
  app.add_flag("--downward-closed", p.downward_closed, "Census: downward closed range only");
  app.add_flag("--all-monotone", p.all_monotone, "Census: list all monotone maps");

  for (const char* cmd : {"check", "enumerate", "verify", "search", "sweep"}) {
    CLI::App* sub = app.add_subcommand(cmd, std::string(cmd) + " a named target (see --list)");
    sub->add_option("name", p.name, "Target name")->required();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  if (list) {
    print_list(p.format, out);
    return kPass;
  }
  if (app.get_subcommands().empty()) {
    err << "error: a command is required (check, enumerate, verify, search, sweep)\n";
    return kUsage;
  }
  p.command = app.get_subcommands().front()->get_name();

  try {
    const Report r = dispatch(p);
    print_report(r, p.format, out);
    return r.passed ? kPass : kViolation;
  } catch (const BudgetExceeded& e) {
    Report r;
    r.command = p.command;
    r.name = p.name;
    r.passed = false;
    r.details["budget_exceeded"] = true;
    r.details["nodes"] = e.nodes();
    print_report(r, p.format, out);
    err << "error: " << e.what() << '\n';
    return kBudget;
  } catch (const HypothesisFailed& e) {
    err << "violation: " << e.what() << '\n';
    return kViolation;
  } catch (const DecompositionMismatch& e) {
    err << "violation: " << e.what() << '\n';
    return kViolation;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const PreconditionFailed& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace latkit::cli
