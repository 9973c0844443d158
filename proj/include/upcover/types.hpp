#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace upcover {

using NodeId = std::int32_t;

/// Undirected edge with upgrade attributes: length ℓ, maximal reduction u,
/// and cost per unit of reduction c.
struct Edge {
  NodeId a = 0;
  NodeId b = 0;
  double length = 0.0;
  double bound = 0.0;
  double cost = 1.0;
  /// Set by normalize() when length - bound > radius: no feasible upgrade can
  /// bring the edge short enough to lie on a covering path.
  bool uncrossable = false;

  NodeId other(NodeId v) const { return v == a ? b : a; }
};

/// A covering problem instance on an undirected network.
///
/// When integer_params is set, lengths and bounds are non-negative integers
/// and radius, budget, costs are positive integers (weights non-negative
/// integers); all solver arithmetic on such instances is exact.
struct Instance {
  std::vector<double> weights;
  std::vector<Edge> edges;
  double radius = 1.0;
  double budget = 1.0;
  int facilities = 1;
  bool integer_params = false;

  int node_count() const { return static_cast<int>(weights.size()); }
  int edge_count() const { return static_cast<int>(edges.size()); }
};

/// Per-edge length reductions, indexed like Instance::edges.
/// An empty delta vector means the all-zero plan.
struct UpgradePlan {
  std::vector<double> delta;

  double at(int edge_index) const {
    return edge_index < static_cast<int>(delta.size()) ? delta[edge_index] : 0.0;
  }
  void set(const Instance& inst, int edge_index, double value) {
    if (delta.empty()) delta.assign(inst.edge_count(), 0.0);
    delta[edge_index] = value;
  }
  bool zero() const {
    for (double d : delta)
      if (d != 0.0) return false;
    return true;
  }
};

struct Solution {
  std::vector<NodeId> facilities;  // sorted ascending
  UpgradePlan plan;
  std::vector<NodeId> covered;  // sorted ascending
  double value = 0.0;
};

/// adjacency[v] lists (neighbor, edge index).
using Adjacency = std::vector<std::vector<std::pair<NodeId, int>>>;

Adjacency build_adjacency(const Instance& inst);

/// Comparison slack for coverage tests on non-integer instances (d <= R + eps).
inline constexpr double kCoverEps = 1e-9;

inline double cover_eps(const Instance& inst) { return inst.integer_params ? 0.0 : kCoverEps; }

}  // namespace upcover
