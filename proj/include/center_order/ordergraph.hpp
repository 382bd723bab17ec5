// Order graphs assembled from pairwise verdicts, their Hasse diagrams,
// cutpoints, chain verification and DOT / JSON export.
#pragma once

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "center_order/decide.hpp"

namespace center_order {

// A certified directed cycle: the decision engine contradicted itself.
struct SoundnessAlarm : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class EdgeClass { Certified, Likely };
const char* to_string(EdgeClass c);

struct Edge {
  int from = 0, to = 0;  // from precedes to
  EdgeClass cls = EdgeClass::Certified;
  friend bool operator<(const Edge& x, const Edge& y) { return std::pair(x.from, x.to) < std::pair(y.from, y.to); }
};

struct OrderGraph {
  OrderKind order = OrderKind::Isosceles;
  std::vector<int> nodes;               // sorted, exclusions removed
  std::map<int, std::string> excluded;  // key -> reason
  std::vector<Edge> edges;              // sorted
  // One verdict per compared pair, stored under (min, max).
  std::map<std::pair<int, int>, Verdict> verdicts;

  // Verdict oriented as (m, n), if the pair was compared.
  std::optional<Verdict> verdict(int m, int n) const;
};

struct HasseDiagram {
  OrderKind order = OrderKind::Isosceles;
  std::vector<int> nodes;
  std::map<int, std::string> excluded;
  std::vector<Edge> edges;
};

struct GraphOptions {
  SamplePlan plan;
  SubdivisionBudget budget;
  int jobs = 1;
  bool apply_exclusions = true;
};

// Compares every pair of the non-excluded centers. Two-parameter orders
// attempt subdivision only on Hasse edges; certification then propagates
// along certified paths.
OrderGraph build_graph(const Catalog& cat, OrderKind order, const std::vector<int>& centers, const GraphOptions& opt);
// Compares consecutive chain members only; nothing is excluded.
OrderGraph build_chain_graph(const Catalog& cat, OrderKind order, const std::vector<int>& chain,
                             const GraphOptions& opt);

// Throws SoundnessAlarm on a directed cycle.
HasseDiagram transitive_reduction(const OrderGraph& g);
std::vector<int> articulation_points(const HasseDiagram& h);

// Reachability over the given edges, indexed like nodes.
std::vector<std::vector<char>> reachability(const std::vector<int>& nodes, const std::vector<Edge>& edges);

struct ChainLink {
  int m = 0, n = 0;
  bool ok = false;
  std::string status;  // verdict name, or "not compared"
};
struct ChainCheck {
  bool ok = false;
  std::optional<std::pair<int, int>> first_failure;
  std::vector<ChainLink> links;
  int certified = 0, consistent = 0, failed = 0;
};
ChainCheck verify_chain(const OrderGraph& g, const std::vector<int>& chain);

struct NamedChain {
  std::string name;
  OrderKind order;
  std::vector<int> chain;
};
// The published chains for each order (including vertex pseudo-centers).
const std::vector<NamedChain>& known_chains();

std::string to_dot(const HasseDiagram& h);
std::string to_dot(const OrderGraph& g);
nlohmann::json to_json(const HasseDiagram& h);
nlohmann::json to_json(const OrderGraph& g);
nlohmann::json to_json(const ChainCheck& c);

// Runs fn(i) for i in [0, count) on up to jobs threads.
void parallel_for(size_t count, int jobs, const std::function<void(size_t)>& fn);

}  // namespace center_order
