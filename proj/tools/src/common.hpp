#pragma once

#include <string>
#include <vector>

#include "latkit_cli/cli.hpp"

namespace latkit::cli::detail {

/// Verdict with element indices replaced by labels when there are any.
Json verdict_json(const Verdict& v, const std::vector<std::string>& labels);
Json directional_json(const DirectionalVerdict& v, const std::vector<std::string>& labels);
Json subset_json(const Subset& S, const std::vector<std::string>& labels);
Json image_json(const std::vector<Element>& image);

inline Report make_report(const Params& p) {
  Report r;
  r.command = p.command;
  r.name = p.name;
  return r;
}

}  // namespace latkit::cli::detail
