#pragma once

#include <vector>

#include "upcover/types.hpp"

namespace upcover::path {

enum class Side { Left, Right };

/// Node order along the path plus a chosen facility position. The left side
/// runs from v0 toward order.front(), the right side toward order.back(),
/// both indexed 1..s outward from v0.
struct PathLayout {
  std::vector<NodeId> order;
  std::vector<int> edge_between;  // edge index between order[i] and order[i+1]
  int v0_pos = 0;

  NodeId v0() const { return order[v0_pos]; }
  int side_size(Side s) const {
    return s == Side::Left ? v0_pos : static_cast<int>(order.size()) - 1 - v0_pos;
  }
  NodeId side_node(Side s, int q) const {
    return order[s == Side::Left ? v0_pos - q : v0_pos + q];
  }
  /// Edge e_q between side node q-1 and q (q >= 1).
  int side_edge(Side s, int q) const {
    return edge_between[s == Side::Left ? v0_pos - q : v0_pos + q - 1];
  }
};

/// Canonical layout (order from the lower-id endpoint) with the facility at
/// the given node. Throws NotAPath.
PathLayout build_layout(const Instance& inst, NodeId v0);

/// Minimal budgets B_q to make the q-th node on one side coverable, together
/// with the reduction deficits. Entries stop at the first node that is
/// unreachable or needs more than the instance budget; cost[0] = 0.
struct ReachCostTable {
  Side side = Side::Left;
  std::vector<double> cost;     // B_q for q = 0..reachable()
  std::vector<double> deficit;  // Δ_q = d(v_q, v0) - R, aligned with cost

  int reachable() const { return static_cast<int>(cost.size()) - 1; }
};

/// Computes the table by the incremental fractional-knapsack greedy: edges
/// e_1..e_q sorted by non-decreasing cost, reducing each by min(Δ_left, u).
/// The greedy value equals the optimum of the covering LP for that node.
ReachCostTable reach_costs(const PathLayout& layout, const Instance& inst, Side side);

/// The greedy plan achieving cost[q] of the table (recomputed on demand,
/// feasible, and covering all side nodes 1..q).
UpgradePlan table_plan(const ReachCostTable& table, const PathLayout& layout,
                       const Instance& inst, int q);

/// Exact single-facility solver: tries every facility node, splits the budget
/// between the two sides using the reach-cost tables and a monotone pointer
/// for the far side. Works for arbitrary weights and real parameters.
Solution solve_1(const Instance& inst);

}  // namespace upcover::path
