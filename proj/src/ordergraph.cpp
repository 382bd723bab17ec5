#include "center_order/ordergraph.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

namespace center_order {

const char* to_string(EdgeClass c) { return c == EdgeClass::Certified ? "certified" : "likely"; }

std::optional<Verdict> OrderGraph::verdict(int m, int n) const {
  auto it = verdicts.find({std::min(m, n), std::max(m, n)});
  if (it == verdicts.end()) return std::nullopt;
  return it->second.m == m ? it->second : swapped(it->second);
}

void parallel_for(size_t count, int jobs, const std::function<void(size_t)>& fn) {
  size_t workers = std::min<size_t>(std::max(jobs, 1), count);
  if (workers <= 1) {
    for (size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr err;
  std::mutex err_mu;
  for (size_t w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (size_t i; (i = next++) < count;) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(err_mu);
          if (!err) err = std::current_exception();
        }
      }
    });
  for (auto& t : pool) t.join();
  if (err) std::rethrow_exception(err);
}

namespace {

std::vector<std::pair<int, int>> all_pairs(const std::vector<int>& nodes) {
  std::vector<std::pair<int, int>> out;
  for (size_t i = 0; i < nodes.size(); ++i)
    for (size_t j = i + 1; j < nodes.size(); ++j) out.emplace_back(nodes[i], nodes[j]);
  return out;
}

void add_verdict(OrderGraph& g, const Verdict& v) {
  const Verdict stored = v.m < v.n ? v : swapped(v);
  g.verdicts[{stored.m, stored.n}] = stored;
}

void derive_edges(OrderGraph& g) {
  g.edges.clear();
  for (const auto& [key, v] : g.verdicts) {
    EdgeClass cls = v.certified() ? EdgeClass::Certified : EdgeClass::Likely;
    if (v.supports_precedes()) g.edges.push_back({v.m, v.n, cls});
    else if (v.supports_succeeds()) g.edges.push_back({v.n, v.m, cls});
  }
  std::sort(g.edges.begin(), g.edges.end());
}

size_t index_of(const std::vector<int>& nodes, int key) {
  return static_cast<size_t>(std::lower_bound(nodes.begin(), nodes.end(), key) - nodes.begin());
}

// Topological order; throws on a cycle.
std::vector<size_t> topo_order(const std::vector<int>& nodes, const std::vector<Edge>& edges) {
  size_t n = nodes.size();
  std::vector<std::vector<size_t>> out(n);
  std::vector<int> indeg(n, 0);
  for (const auto& e : edges) {
    out[index_of(nodes, e.from)].push_back(index_of(nodes, e.to));
    ++indeg[index_of(nodes, e.to)];
  }
  std::vector<size_t> order, stack;
  for (size_t i = n; i-- > 0;)
    if (indeg[i] == 0) stack.push_back(i);
  while (!stack.empty()) {
    size_t u = stack.back();
    stack.pop_back();
    order.push_back(u);
    for (size_t v : out[u])
      if (--indeg[v] == 0) stack.push_back(v);
  }
  if (order.size() != n) {
    std::string msg = "directed cycle among";
    for (size_t i = 0; i < n; ++i)
      if (indeg[i] > 0) msg += " " + center_label(nodes[i]);
    throw SoundnessAlarm(msg);
  }
  return order;
}

// Upgrades edges implied by certified paths.
void propagate_certified(OrderGraph& g) {
  std::vector<Edge> cert;
  for (const auto& e : g.edges)
    if (e.cls == EdgeClass::Certified) cert.push_back(e);
  auto reach = reachability(g.nodes, cert);
  for (auto& e : g.edges) {
    if (e.cls == EdgeClass::Certified) continue;
    if (reach[index_of(g.nodes, e.from)][index_of(g.nodes, e.to)]) {
      e.cls = EdgeClass::Certified;
      auto it = g.verdicts.find({std::min(e.from, e.to), std::max(e.from, e.to)});
      it->second.stats.notes.push_back("certified by transitivity through certified edges");
    }
  }
}

}  // namespace

std::vector<std::vector<char>> reachability(const std::vector<int>& nodes, const std::vector<Edge>& edges) {
  size_t n = nodes.size();
  std::vector<std::vector<char>> r(n, std::vector<char>(n, 0));
  for (const auto& e : edges) r[index_of(nodes, e.from)][index_of(nodes, e.to)] = 1;
  for (size_t k = 0; k < n; ++k)
    for (size_t i = 0; i < n; ++i)
      if (r[i][k])
        for (size_t j = 0; j < n; ++j)
          if (r[k][j]) r[i][j] = 1;
  return r;
}

OrderGraph build_graph(const Catalog& cat, OrderKind order, const std::vector<int>& centers, const GraphOptions& opt) {
  OrderGraph g;
  g.order = order;
  std::vector<int> keys = centers;
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());

  if (order == OrderKind::Isosceles) {
    const TriangleFamily fam = order_family(order);
    std::vector<std::string> why(keys.size());
    parallel_for(keys.size(), opt.jobs, [&](size_t i) {
      int k = keys[i];
      if (k == kVertexB || k == kVertexC) why[i] = "off the median";
      else if (at_infinity_on_iso_family(cat, k)) why[i] = "at infinity";
      else if (classify_outside_angle_A(cat, k, fam, opt.plan).kind != RegionKind::Always)
        why[i] = "sometimes outside angle A";
    });
    for (size_t i = 0; i < keys.size(); ++i) {
      bool hard = why[i] == "off the median" || why[i] == "at infinity";
      if (!why[i].empty() && (opt.apply_exclusions || hard)) g.excluded[keys[i]] = why[i];
      else g.nodes.push_back(keys[i]);
    }
    std::vector<IsoCenter> cs(g.nodes.size());
    parallel_for(g.nodes.size(), opt.jobs, [&](size_t i) { cs[i] = iso_center(cat, g.nodes[i]); });
    auto pairs = all_pairs(g.nodes);
    std::vector<Verdict> out(pairs.size());
    parallel_for(pairs.size(), opt.jobs, [&](size_t i) {
      out[i] = compare_iso(cs[index_of(g.nodes, pairs[i].first)], cs[index_of(g.nodes, pairs[i].second)], fam);
    });
    for (const auto& v : out) add_verdict(g, v);
    derive_edges(g);
    return g;
  }

  SampleSet set = SampleSet::make(order_family(order), opt.plan);
  std::vector<QuantityTable> tabs(keys.size());
  parallel_for(keys.size(), opt.jobs, [&](size_t i) { tabs[i] = quantity_table(cat, order, keys[i], set); });
  std::vector<QuantityTable> kept;
  for (size_t i = 0; i < keys.size(); ++i) {
    std::string why = tabs[i].degenerate_reason();
    if (!why.empty() && opt.apply_exclusions) {
      g.excluded[keys[i]] = why;
    } else {
      g.nodes.push_back(keys[i]);
      kept.push_back(std::move(tabs[i]));
    }
  }
  SubdivisionBudget off = opt.budget;
  off.enabled = false;
  auto pairs = all_pairs(g.nodes);
  std::vector<Verdict> out(pairs.size());
  parallel_for(pairs.size(), opt.jobs, [&](size_t i) {
    out[i] = compare_2d(cat, kept[index_of(g.nodes, pairs[i].first)], kept[index_of(g.nodes, pairs[i].second)], set,
                        off);
  });
  for (const auto& v : out) add_verdict(g, v);
  derive_edges(g);
  if (opt.budget.enabled) {
    HasseDiagram h = transitive_reduction(g);
    std::vector<Verdict> upgraded(h.edges.size());
    parallel_for(h.edges.size(), opt.jobs, [&](size_t i) {
      Verdict v = *g.verdict(h.edges[i].from, h.edges[i].to);
      int flip = order == OrderKind::Vertex ? -1 : 1;
      SubdivisionResult sub = certify_by_subdivision(cat.forms(v.m), cat.forms(v.n), order, set.family, flip, opt.budget);
      v.stats.subdivision_attempted = sub.attempted;
      v.stats.leaves = sub.leaves;
      v.stats.certified_leaves = sub.certified_leaves;
      v.stats.max_depth = sub.max_depth;
      v.stats.certified_fraction = sub.certified_fraction;
      if (!sub.note.empty()) v.stats.notes.push_back("subdivision: " + sub.note);
      if (sub.complete && v.stats.ties == 0 && v.stats.undefined == 0) {
        v.kind = VerdictKind::CertifiedPrecedes;
        v.certificate = "subdivision";
        v.witness_precede.reset();
      }
      upgraded[i] = v;
    });
    for (const auto& v : upgraded) add_verdict(g, v);
    derive_edges(g);
    propagate_certified(g);
  }
  return g;
}

OrderGraph build_chain_graph(const Catalog& cat, OrderKind order, const std::vector<int>& chain,
                             const GraphOptions& opt) {
  OrderGraph g;
  g.order = order;
  g.nodes = chain;
  std::sort(g.nodes.begin(), g.nodes.end());
  g.nodes.erase(std::unique(g.nodes.begin(), g.nodes.end()), g.nodes.end());
  std::vector<std::pair<int, int>> links;
  for (size_t i = 0; i + 1 < chain.size(); ++i) links.emplace_back(chain[i], chain[i + 1]);
  std::vector<Verdict> out(links.size());
  if (order == OrderKind::Isosceles) {
    const TriangleFamily fam = order_family(order);
    parallel_for(links.size(), opt.jobs, [&](size_t i) {
      out[i] = compare_iso(iso_center(cat, links[i].first), iso_center(cat, links[i].second), fam);
    });
  } else {
    SampleSet set = SampleSet::make(order_family(order), opt.plan);
    std::vector<QuantityTable> tabs(g.nodes.size());
    parallel_for(g.nodes.size(), opt.jobs, [&](size_t i) { tabs[i] = quantity_table(cat, order, g.nodes[i], set); });
    parallel_for(links.size(), opt.jobs, [&](size_t i) {
      out[i] = compare_2d(cat, tabs[index_of(g.nodes, links[i].first)], tabs[index_of(g.nodes, links[i].second)], set,
                          opt.budget);
    });
  }
  for (const auto& v : out) add_verdict(g, v);
  derive_edges(g);
  return g;
}

HasseDiagram transitive_reduction(const OrderGraph& g) {
  HasseDiagram h;
  h.order = g.order;
  h.nodes = g.nodes;
  h.excluded = g.excluded;
  std::vector<Edge> cert;
  for (const auto& e : g.edges)
    if (e.cls == EdgeClass::Certified) cert.push_back(e);
  topo_order(g.nodes, cert);     // certified cycles are a soundness failure
  topo_order(g.nodes, g.edges);  // so are cycles through sampled edges on one shared sample set
  auto reach = reachability(g.nodes, g.edges);
  std::vector<std::vector<size_t>> succ(g.nodes.size());
  for (const auto& e : g.edges) succ[index_of(g.nodes, e.from)].push_back(index_of(g.nodes, e.to));
  for (const auto& e : g.edges) {
    size_t u = index_of(g.nodes, e.from), v = index_of(g.nodes, e.to);
    bool implied = false;
    for (size_t w : succ[u])
      if (w != v && reach[w][v]) {
        implied = true;
        break;
      }
    if (!implied) h.edges.push_back(e);
  }
  return h;
}

std::vector<int> articulation_points(const HasseDiagram& h) {
  size_t n = h.nodes.size();
  std::vector<std::vector<size_t>> adj(n);
  for (const auto& e : h.edges) {
    size_t u = index_of(h.nodes, e.from), v = index_of(h.nodes, e.to);
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<char> cut(n, 0);
  int timer = 0;
  std::function<void(size_t, long)> dfs = [&](size_t u, long parent) {
    disc[u] = low[u] = timer++;
    int children = 0;
    for (size_t v : adj[u]) {
      if (static_cast<long>(v) == parent) continue;
      if (disc[v] >= 0) {
        low[u] = std::min(low[u], disc[v]);
        continue;
      }
      ++children;
      dfs(v, static_cast<long>(u));
      low[u] = std::min(low[u], low[v]);
      if (parent >= 0 && low[v] >= disc[u]) cut[u] = 1;
    }
    if (parent < 0 && children > 1) cut[u] = 1;
  };
  for (size_t i = 0; i < n; ++i)
    if (disc[i] < 0) dfs(i, -1);
  std::vector<int> out;
  for (size_t i = 0; i < n; ++i)
    if (cut[i]) out.push_back(h.nodes[i]);
  return out;
}

ChainCheck verify_chain(const OrderGraph& g, const std::vector<int>& chain) {
  ChainCheck c;
  c.ok = chain.size() >= 2;
  for (size_t i = 0; i + 1 < chain.size(); ++i) {
    ChainLink link{chain[i], chain[i + 1], false, "not compared"};
    if (auto v = g.verdict(link.m, link.n)) {
      link.status = to_string(v->kind);
      if (v->kind == VerdictKind::Undetermined)
        link.status += v->direction < 0 ? " (consistent)" : v->direction > 0 ? " (reversed)" : "";
      link.ok = v->supports_precedes();
      if (link.ok) (v->certified() ? c.certified : c.consistent) += 1;
    }
    if (!link.ok) {
      ++c.failed;
      if (!c.first_failure) c.first_failure = std::pair(link.m, link.n);
      c.ok = false;
    }
    c.links.push_back(link);
  }
  return c;
}

const std::vector<NamedChain>& known_chains() {
  static const std::vector<NamedChain> chains = {
      {"iso-24", OrderKind::Isosceles, {20, 22, 8, 3, 9, 10, 21, 2, 5, 12, 17, 1, 13, 7, 6, 4, 27, 19, 28, 25, 11, 14, 16, 23}},
      {"iso-tall-100", OrderKind::Isosceles,
       {20, 22, 40, 72, 63, 8, 3, 9, 95, 77, 21, 2, 45, 38, 55, 37, 12, 17, 1, 61, 60, 81, 7, 82,
        89, 6, 65, 33, 51, 57, 4, 27, 19, 28, 25, 34, 64, 11, 98, 74, 67, 88, 14, 80, 36, 16, 44, 23}},
      {"iso-bound-15", OrderKind::Isosceles, {2, 15, 17}},
      {"iso-bound-24", OrderKind::Isosceles, {25, 24, 14}},
      {"iso-bound-29", OrderKind::Isosceles, {7, 29, 4}},
      {"vertex-9", OrderKind::Vertex, {3, 9, 10, 2, 1, 6, 4, 19, 16}},
      {"side-22", OrderKind::Side, {26, 20, 22, 40, 8, 9, 10, 2, 37, 1, 7, 29, 33, 4, 27, 19, 28, 25, 34, 24, 36, 16}},
      {"trace-21", OrderKind::Trace, {20, 22, 3, 8, 9, 21, 10, 2, 1, 17, 12, 7, 13, 29, 4, 27, 19, 28, 25, 24, 23}},
      {"trace-C-24", OrderKind::Trace, {kVertexC, 24}},
      {"trace-650-B", OrderKind::Trace, {650, kVertexB}},
  };
  return chains;
}

// ---- export ----

static std::string dot_text(OrderKind order, const std::vector<int>& nodes, const std::vector<Edge>& edges,
                            const std::map<int, std::string>& excluded) {
  std::ostringstream os;
  os << "digraph " << to_string(order) << " {\n";
  for (int n : nodes) os << "  " << center_label(n) << ";\n";
  for (const auto& e : edges) {
    os << "  " << center_label(e.from) << " -> " << center_label(e.to);
    if (e.cls == EdgeClass::Likely) os << " [style=dashed]";
    os << ";\n";
  }
  for (const auto& [k, why] : excluded) os << "  // excluded " << center_label(k) << ": " << why << "\n";
  os << "}\n";
  return os.str();
}

std::string to_dot(const HasseDiagram& h) { return dot_text(h.order, h.nodes, h.edges, h.excluded); }
std::string to_dot(const OrderGraph& g) { return dot_text(g.order, g.nodes, g.edges, g.excluded); }

static nlohmann::json graph_json(OrderKind order, const std::vector<int>& nodes, const std::vector<Edge>& edges,
                                 const std::map<int, std::string>& excluded) {
  nlohmann::json j;
  j["order"] = to_string(order);
  nlohmann::json ns = nlohmann::json::array();
  for (int n : nodes) ns.push_back(center_label(n));
  j["nodes"] = ns;
  nlohmann::json es = nlohmann::json::array();
  for (const auto& e : edges) es.push_back({{"from", center_label(e.from)}, {"to", center_label(e.to)}, {"class", to_string(e.cls)}});
  j["edges"] = es;
  nlohmann::json ex = nlohmann::json::object();
  for (const auto& [k, why] : excluded) ex[k > 0 ? std::to_string(k) : center_label(k)] = why;
  j["exclusions"] = ex;
  return j;
}

nlohmann::json to_json(const HasseDiagram& h) { return graph_json(h.order, h.nodes, h.edges, h.excluded); }

nlohmann::json to_json(const OrderGraph& g) {
  nlohmann::json j = graph_json(g.order, g.nodes, g.edges, g.excluded);
  nlohmann::json vs = nlohmann::json::array();
  for (const auto& [key, v] : g.verdicts) vs.push_back(to_json(v));
  j["verdicts"] = vs;
  return j;
}

nlohmann::json to_json(const ChainCheck& c) {
  nlohmann::json links = nlohmann::json::array();
  for (const auto& l : c.links)
    links.push_back({{"m", center_label(l.m)}, {"n", center_label(l.n)}, {"ok", l.ok}, {"status", l.status}});
  nlohmann::json j = {{"ok", c.ok},
                      {"certified", c.certified},
                      {"consistent", c.consistent},
                      {"failed", c.failed},
                      {"links", links}};
  if (c.first_failure)
    j["first_failure"] = {center_label(c.first_failure->first), center_label(c.first_failure->second)};
  return j;
}

}  // namespace center_order
