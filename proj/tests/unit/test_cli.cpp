#include <sstream>

#include "doctest.h"
#include "latkit_cli/cli.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "latkit");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = latkit::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(LATKIT_FIXTURE_DIR) + "/" + name; }

}  // namespace

TEST_CASE("powerset characterization example") {
  const Outcome o = run_cli({"verify", "powerset-characterization", "--x", "2", "--y", "3"});
  CHECK(o.code == 0);
  CHECK(o.out.find("census_count: 12") != std::string::npos);
}

TEST_CASE("convexity counterexample fixture") {
  const Outcome o = run_cli({"check", "convexity", "--input", fixture("powerset_counterexample.json")});
  CHECK(o.code == 1);
  CHECK(o.out.find("witness: {0,1}") != std::string::npos);
  const Outcome j = run_cli({"check", "convexity", "--input", fixture("powerset_counterexample.json"),
                             "--format", "json"});
  const auto doc = latkit::Json::parse(j.out);
  CHECK(doc["status"] == "violation");
  CHECK(doc["details"]["witness"] == "{0,1}");
}

TEST_CASE("category algebra sweep example") {
  const Outcome o = run_cli({"sweep", "cat-ro-iso", "--points", "3"});
  CHECK(o.code == 0);
  CHECK(o.out.find("topologies: 29") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run_cli({"verify", "no-such-theorem"}).code == 2);
  CHECK(run_cli({"--bogus"}).code == 2);
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"check", "convexity", "--input", "/nonexistent.json"}).code == 2);
  CHECK(run_cli({"check", "convexity", "--structure", "powerset:2"}).code == 2);
  CHECK(run_cli({"check", "baire", "--structure", "m3"}).code == 2);
  CHECK(run_cli({"verify", "thm-powerset-form", "--format", "xml"}).code == 2);
}

TEST_CASE("budget exceeded exits 3") {
  const Outcome o = run_cli({"enumerate", "embeddings", "--dom", "powerset:3", "--cod", "powerset:4",
                             "--budget-nodes", "5", "--format", "json"});
  CHECK(o.code == 3);
  CHECK(latkit::Json::parse(o.out)["status"] == "budget_exceeded");
}

TEST_CASE("json reports are byte identical for a fixed seed") {
  const std::vector<std::string> args{"verify", "thm-monoid-distributive", "--dims", "2",
                                      "--samples", "200", "--seed", "9", "--format", "json"};
  const Outcome a = run_cli(args);
  const Outcome b = run_cli(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("--list covers the registry") {
  const Outcome o = run_cli({"--list"});
  CHECK(o.code == 0);
  for (const char* slug : {"thm-preregular-continuity", "thm-powerset-form", "thm-chainprod-form",
                           "lem-convex-preregular", "thm-extension-convexity", "prop-cat-ro-iso"}) {
    CHECK(o.out.find(slug) != std::string::npos);
  }
  for (const latkit::cli::Verifier& v : latkit::cli::registry()) {
    CHECK(latkit::cli::find_verifier(v.kind, v.slug) == &v);
  }
}

TEST_CASE("fixtures behave as documented") {
  CHECK(run_cli({"check", "distributive", "--input", fixture("m3.json")}).code == 1);
  CHECK(run_cli({"check", "distributive", "--input", fixture("n5.json")}).code == 1);
  CHECK(run_cli({"check", "lattice", "--input", fixture("m3.json")}).code == 0);
  CHECK(run_cli({"check", "preregular", "--input", fixture("bowtie_convex_subset.json")}).code == 1);
  CHECK(run_cli({"check", "convexity", "--input", fixture("bowtie_convex_subset.json")}).code == 0);
  CHECK(run_cli({"check", "subtraction", "--input", fixture("truncated_addition_3.json")}).code == 1);
  CHECK(run_cli({"check", "group-completion", "--input", fixture("max_monoid_2.json")}).code == 1);
  CHECK(run_cli({"check", "category", "--input", fixture("sierpinski.json")}).code == 0);
  CHECK(run_cli({"check", "powerset-decompose", "--input", fixture("powerset_embedding.json")}).code == 0);
  CHECK(run_cli({"check", "chainprod-decompose", "--input", fixture("chainprod_embedding.json")}).code == 0);
  CHECK(run_cli({"check", "strongly-interval-predense", "--input", fixture("chain4_successors.json")}).code == 1);
}

TEST_CASE("searches report witnesses") {
  const Outcome o = run_cli({"search", "convex-not-preregular", "--format", "json"});
  CHECK(o.code == 1);
  CHECK(latkit::Json::parse(o.out)["status"] == "found");
  CHECK(run_cli({"search", "non-baire", "--points", "3"}).code == 0);
  CHECK(run_cli({"search", "monoid-law-violation", "--size", "3", "--law", "subtraction"}).code == 1);
}

TEST_CASE("enumerations") {
  const Outcome o = run_cli({"enumerate", "topologies", "--points", "3", "--format", "json"});
  CHECK(latkit::Json::parse(o.out)["details"]["count"] == 29);
  const Outcome e = run_cli({"enumerate", "embeddings", "--dom", "powerset:1", "--cod", "powerset:2",
                             "--convex", "--format", "json"});
  CHECK(latkit::Json::parse(e.out)["details"]["count"] == 4);
}
