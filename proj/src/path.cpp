#include "upcover/path.hpp"

#include <algorithm>
#include <cmath>

#include "upcover/errors.hpp"
#include "upcover/model.hpp"
#include "upcover/topology.hpp"

namespace upcover::path {

namespace {

struct SortedEdge {
  double cost = 0;
  int pos = 0;  // outward index 1..q, tie-break after cost
  double bound = 0;
};

/// Greedy cost of reducing `deficit` over the given cost-sorted edges;
/// returns the leftover deficit through `unmet`.
double greedy_cost(const std::vector<SortedEdge>& sorted, double deficit, double eps,
                   double* unmet) {
  double total = 0.0;
  for (const SortedEdge& se : sorted) {
    if (deficit <= eps) break;
    double take = std::min(deficit, se.bound);
    total += se.cost * take;
    deficit -= take;
  }
  *unmet = deficit;
  return total;
}

}  // namespace

PathLayout build_layout(const Instance& inst, NodeId v0) {
  PathLayout layout;
  layout.order = path_order(inst);
  if (layout.order.empty()) throw NotAPath();

  layout.edge_between.assign(std::max(0, inst.node_count() - 1), -1);
  std::vector<int> pos_of(inst.node_count());
  for (int i = 0; i < inst.node_count(); ++i) pos_of[layout.order[i]] = i;
  for (int e = 0; e < inst.edge_count(); ++e) {
    int i = std::min(pos_of[inst.edges[e].a], pos_of[inst.edges[e].b]);
    layout.edge_between[i] = e;
  }
  layout.v0_pos = pos_of[v0];
  return layout;
}

ReachCostTable reach_costs(const PathLayout& layout, const Instance& inst, Side side) {
  const double eps = cover_eps(inst);
  ReachCostTable table;
  table.side = side;
  table.cost.push_back(0.0);
  table.deficit.push_back(0.0);

  std::vector<SortedEdge> sorted;  // maintained in (cost, pos) order
  double cumdist = 0.0;
  const int s = layout.side_size(side);
  for (int q = 1; q <= s; ++q) {
    const Edge& ed = inst.edges[layout.side_edge(side, q)];
    cumdist += ed.length;
    SortedEdge se{ed.cost, q, ed.bound};
    sorted.insert(std::upper_bound(sorted.begin(), sorted.end(), se,
                                   [](const SortedEdge& a, const SortedEdge& b) {
                                     return a.cost != b.cost ? a.cost < b.cost : a.pos < b.pos;
                                   }),
                  se);

    double deficit = cumdist - inst.radius;
    double bq = 0.0;
    if (deficit > eps) {
      double unmet = 0.0;
      bq = greedy_cost(sorted, deficit, eps, &unmet);
      if (unmet > eps) break;  // unreachable; all farther nodes are too
    }
    if (bq > inst.budget + eps) break;  // beyond the instance budget
    table.cost.push_back(bq);
    table.deficit.push_back(deficit);
  }
  return table;
}

UpgradePlan table_plan(const ReachCostTable& table, const PathLayout& layout,
                       const Instance& inst, int q) {
  const double eps = cover_eps(inst);
  UpgradePlan plan;
  if (q <= 0 || table.deficit[q] <= eps) return plan;

  std::vector<SortedEdge> sorted;
  for (int i = 1; i <= q; ++i) {
    const Edge& ed = inst.edges[layout.side_edge(table.side, i)];
    sorted.push_back({ed.cost, i, ed.bound});
  }
  std::sort(sorted.begin(), sorted.end(), [](const SortedEdge& a, const SortedEdge& b) {
    return a.cost != b.cost ? a.cost < b.cost : a.pos < b.pos;
  });
  double deficit = table.deficit[q];
  for (const SortedEdge& se : sorted) {
    if (deficit <= eps) break;
    double take = std::min(deficit, se.bound);
    plan.set(inst, layout.side_edge(table.side, se.pos), take);
    deficit -= take;
  }
  return plan;
}

Solution solve_1(const Instance& inst) {
  std::vector<NodeId> order = path_order(inst);
  if (order.empty()) throw NotAPath();
  const double eps = cover_eps(inst);
  const int n = inst.node_count();

  double best_val = -1.0;
  NodeId best_v0 = -1;
  UpgradePlan best_plan;

  for (int pos = 0; pos < n; ++pos) {
    PathLayout layout = build_layout(inst, order[pos]);
    ReachCostTable left = reach_costs(layout, inst, Side::Left);
    ReachCostTable right = reach_costs(layout, inst, Side::Right);

    std::vector<double> wl(left.reachable() + 1, 0.0);
    for (int q = 1; q <= left.reachable(); ++q) {
      wl[q] = wl[q - 1] + inst.weights[layout.side_node(Side::Left, q)];
    }
    std::vector<double> wr(right.reachable() + 1, 0.0);
    for (int k = 1; k <= right.reachable(); ++k) {
      wr[k] = wr[k - 1] + inst.weights[layout.side_node(Side::Right, k)];
    }

    // The far-side pointer only moves outward as q shrinks (B^r grows).
    int k = 0;
    for (int q = left.reachable(); q >= 0; --q) {
      double b_right = inst.budget - left.cost[q];
      while (k + 1 <= right.reachable() && right.cost[k + 1] <= b_right + eps) ++k;
      double val = wl[q] + inst.weights[layout.v0()] + wr[k];
      if (val > best_val || (val == best_val && layout.v0() < best_v0)) {
        best_val = val;
        best_v0 = layout.v0();
        best_plan = table_plan(left, layout, inst, q);
        UpgradePlan rp = table_plan(right, layout, inst, k);
        for (int e = 0; e < static_cast<int>(rp.delta.size()); ++e) {
          if (rp.delta[e] != 0.0) best_plan.set(inst, e, rp.delta[e]);
        }
      }
    }
  }
  return finalize_solution(inst, {best_v0}, std::move(best_plan));
}

}  // namespace upcover::path
