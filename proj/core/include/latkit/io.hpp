#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "latkit/embedding.hpp"
#include "latkit/lattice.hpp"
#include "latkit/monoid.hpp"
#include "latkit/quasi_order.hpp"
#include "latkit/topology.hpp"

namespace latkit {

using Json = nlohmann::ordered_json;

struct LabeledOrder {
  QuasiOrder order;
  std::vector<std::string> labels;  // empty when the input had none
};

/// {"size": n, "pairs": [[a, b], ...], "labels": [...]?}; pairs are generators.
/// Every parse error is reported as InvalidInput.
LabeledOrder order_from_json(const Json& j);
/// Cover pairs for partial orders; all strict pairs otherwise.
Json to_json(const QuasiOrder& Q);

Subset subset_from_json(const Json& j, std::size_t universe);
Json to_json(const Subset& S);

/// {"size": n, "table": [[...], ...], "identity": e}.
FiniteMonoid monoid_from_json(const Json& j);
Json to_json(const FiniteMonoid& M);

/// {"points": n, "opens": [[...], ...]}; the opens generate the topology.
FiniteTopology topology_from_json(const Json& j);
Json to_json(const FiniteTopology& T);

/// {"dom": order, "cod": order, "image": [...]}.
MonotoneMap map_from_json(const Json& j);
Json to_json(const MonotoneMap& s);

Json to_json(const Witness& w);
Json to_json(const Verdict& v);
Json to_json(const DirectionalVerdict& v);
Json to_json(const OrderClosedVerdict& v);
Json to_json(const InfiniteDistributivityVerdict& v);
Json to_json(const Classification& c);
Json to_json(const DensityReport& r);
Json to_json(const SubposetAnalysis& a);
Json to_json(const ContinuityReport& r);
Json to_json(const RangeReport& r);
Json to_json(const BoundednessReport& r);
Json to_json(const LawReport& r);
Json to_json(const MonoidClass& c);
Json to_json(const CensusEntry& e);
Json to_json(const PowersetDecomposition& d);
Json to_json(const ChainProdDecomposition& d);
Json to_json(const ConvexityTransferReport& r);

/// One JSON object per line.
std::string census_json_lines(const EmbeddingCensus& c);

Json read_json_file(const std::string& path);

}  // namespace latkit
