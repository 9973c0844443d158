#include "upcover/model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

#include "upcover/errors.hpp"

namespace upcover {

namespace {

bool is_integral(double x) { return x == std::floor(x); }

bool is_nonneg_integer(double x) { return x >= 0.0 && is_integral(x); }

std::string edge_name(const Instance& inst, int e) {
  std::ostringstream os;
  os << "edge " << e << " (" << inst.edges[e].a << "," << inst.edges[e].b << ")";
  return os.str();
}

}  // namespace

Adjacency build_adjacency(const Instance& inst) {
  Adjacency adj(inst.node_count());
  for (int e = 0; e < inst.edge_count(); ++e) {
    const Edge& ed = inst.edges[e];
    adj[ed.a].emplace_back(ed.b, e);
    adj[ed.b].emplace_back(ed.a, e);
  }
  return adj;
}

std::vector<std::string> validate(const Instance& inst) {
  std::vector<std::string> out;
  const int n = inst.node_count();
  if (n == 0) {
    out.push_back("instance has no nodes");
    return out;
  }
  if (!(inst.radius > 0)) out.push_back("radius not positive");
  if (!(inst.budget > 0)) out.push_back("budget not positive");
  if (inst.facilities < 1) out.push_back("facility count p < 1");

  for (int i = 0; i < n; ++i) {
    if (!(inst.weights[i] >= 0)) {
      out.push_back("node " + std::to_string(i) + ": negative weight");
    }
    if (inst.integer_params && !is_integral(inst.weights[i])) {
      out.push_back("node " + std::to_string(i) + ": weight not integer");
    }
  }

  std::set<std::pair<NodeId, NodeId>> seen;
  for (int e = 0; e < inst.edge_count(); ++e) {
    const Edge& ed = inst.edges[e];
    if (ed.a < 0 || ed.a >= n || ed.b < 0 || ed.b >= n) {
      out.push_back(edge_name(inst, e) + ": endpoint out of range");
      continue;
    }
    if (ed.a == ed.b) out.push_back(edge_name(inst, e) + ": endpoints equal");
    auto key = std::minmax(ed.a, ed.b);
    if (!seen.insert(key).second) out.push_back(edge_name(inst, e) + ": duplicate edge");
    if (!(ed.bound >= 0)) out.push_back(edge_name(inst, e) + ": bound negative");
    if (!(ed.bound < ed.length)) out.push_back(edge_name(inst, e) + ": bound not < length");
    if (!(ed.cost > 0)) out.push_back(edge_name(inst, e) + ": cost not positive");
    if (inst.integer_params) {
      if (!is_nonneg_integer(ed.length)) out.push_back(edge_name(inst, e) + ": length not integer");
      if (!is_nonneg_integer(ed.bound)) out.push_back(edge_name(inst, e) + ": bound not integer");
      if (!(is_nonneg_integer(ed.cost) && ed.cost >= 1))
        out.push_back(edge_name(inst, e) + ": cost not a positive integer");
    }
  }
  if (inst.integer_params) {
    if (!(is_nonneg_integer(inst.radius) && inst.radius >= 1))
      out.push_back("radius not a positive integer");
    if (!(is_nonneg_integer(inst.budget) && inst.budget >= 1))
      out.push_back("budget not a positive integer");
  }

  // Connectivity via BFS over well-formed edges.
  Adjacency adj(n);
  for (int e = 0; e < inst.edge_count(); ++e) {
    const Edge& ed = inst.edges[e];
    if (ed.a >= 0 && ed.a < n && ed.b >= 0 && ed.b < n && ed.a != ed.b) {
      adj[ed.a].emplace_back(ed.b, e);
      adj[ed.b].emplace_back(ed.a, e);
    }
  }
  std::vector<char> visited(n, 0);
  std::queue<NodeId> bfs;
  bfs.push(0);
  visited[0] = 1;
  int reached = 1;
  while (!bfs.empty()) {
    NodeId v = bfs.front();
    bfs.pop();
    for (auto [w, e] : adj[v]) {
      (void)e;
      if (!visited[w]) {
        visited[w] = 1;
        ++reached;
        bfs.push(w);
      }
    }
  }
  if (reached != n) out.push_back("disconnected: only " + std::to_string(reached) + " of " +
                                  std::to_string(n) + " nodes reachable from node 0");
  return out;
}

Instance normalize(const Instance& inst) {
  auto violations = validate(inst);
  if (!violations.empty()) {
    throw ValidationError("cannot normalize invalid instance: " + violations.front());
  }
  Instance out = inst;
  for (Edge& ed : out.edges) {
    double affordable = out.budget / ed.cost;
    if (out.integer_params) affordable = std::floor(affordable);
    ed.bound = std::min(ed.bound, affordable);
    ed.uncrossable = ed.length - ed.bound > out.radius + cover_eps(out);
  }
  return out;
}

double plan_cost(const Instance& inst, const UpgradePlan& plan) {
  double total = 0.0;
  for (int e = 0; e < inst.edge_count(); ++e) total += inst.edges[e].cost * plan.at(e);
  return total;
}

bool plan_feasible(const Instance& inst, const UpgradePlan& plan) {
  if (static_cast<int>(plan.delta.size()) > inst.edge_count()) return false;
  for (int e = 0; e < static_cast<int>(plan.delta.size()); ++e) {
    double d = plan.delta[e];
    if (!(d >= 0.0) || d > inst.edges[e].bound + kCoverEps) return false;
  }
  double cost = plan_cost(inst, plan);
  return cost <= inst.budget + kCoverEps * std::max(1.0, inst.budget);
}

namespace {

std::vector<double> dijkstra(const Instance& inst, const UpgradePlan& plan,
                             const std::vector<NodeId>& sources) {
  const int n = inst.node_count();
  const Adjacency adj = build_adjacency(inst);
  std::vector<double> dist(n, std::numeric_limits<double>::infinity());
  using Item = std::pair<double, NodeId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  for (NodeId s : sources) {
    if (s < 0 || s >= n) throw std::invalid_argument("facility node out of range");
    dist[s] = 0.0;
    pq.emplace(0.0, s);
  }
  while (!pq.empty()) {
    auto [d, v] = pq.top();
    pq.pop();
    if (d > dist[v]) continue;
    for (auto [w, e] : adj[v]) {
      double len = inst.edges[e].length - plan.at(e);
      double nd = d + len;
      if (nd < dist[w]) {
        dist[w] = nd;
        pq.emplace(nd, w);
      }
    }
  }
  return dist;
}

}  // namespace

std::vector<double> distances_from(const Instance& inst, const UpgradePlan& plan, NodeId src) {
  return dijkstra(inst, plan, {src});
}

double distance(const Instance& inst, const UpgradePlan& plan, NodeId i, NodeId j) {
  return dijkstra(inst, plan, {i})[j];
}

std::pair<std::vector<NodeId>, double> coverage(const Instance& inst,
                                                const std::vector<NodeId>& facilities,
                                                const UpgradePlan& plan) {
  if (facilities.empty()) throw std::invalid_argument("coverage: empty facility set");
  std::vector<double> dist = dijkstra(inst, plan, facilities);
  std::vector<NodeId> covered;
  double value = 0.0;
  const double eps = cover_eps(inst);
  for (NodeId v = 0; v < inst.node_count(); ++v) {
    if (dist[v] <= inst.radius + eps) {
      covered.push_back(v);
      value += inst.weights[v];
    }
  }
  return {std::move(covered), value};
}

Solution finalize_solution(const Instance& inst, std::vector<NodeId> facilities, UpgradePlan plan) {
  std::sort(facilities.begin(), facilities.end());
  facilities.erase(std::unique(facilities.begin(), facilities.end()), facilities.end());
  Solution sol;
  auto [covered, value] = coverage(inst, facilities, plan);
  sol.facilities = std::move(facilities);
  sol.plan = std::move(plan);
  sol.covered = std::move(covered);
  sol.value = value;
  return sol;
}

bool verify_solution(const Instance& inst, const Solution& sol) {
  if (!plan_feasible(inst, sol.plan)) return false;
  auto [covered, value] = coverage(inst, sol.facilities, sol.plan);
  return covered == sol.covered && value == sol.value;
}

}  // namespace upcover
