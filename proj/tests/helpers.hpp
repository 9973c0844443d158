#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "upcover/model.hpp"
#include "upcover/reductions.hpp"
#include "upcover/rng.hpp"
#include "upcover/types.hpp"

namespace testutil {

using namespace upcover;

struct EdgeSpec {
  NodeId a, b;
  double length, bound, cost;
};

inline Instance make_instance(std::vector<double> weights, const std::vector<EdgeSpec>& edges,
                              double radius, double budget, int p = 1, bool integer = true) {
  Instance inst;
  inst.weights = std::move(weights);
  for (const EdgeSpec& e : edges) {
    Edge ed;
    ed.a = e.a;
    ed.b = e.b;
    ed.length = e.length;
    ed.bound = e.bound;
    ed.cost = e.cost;
    inst.edges.push_back(ed);
  }
  inst.radius = radius;
  inst.budget = budget;
  inst.facilities = p;
  inst.integer_params = integer;
  return inst;
}

/// 7-node binary tree: weights (1,1,2,1,2,1,2), all edges (2,1,1), R=2, B=3.
inline Instance example_tree() {
  return make_instance({1, 1, 2, 1, 2, 1, 2},
                       {{0, 1, 2, 1, 1},
                        {0, 2, 2, 1, 1},
                        {1, 3, 2, 1, 1},
                        {1, 4, 2, 1, 1},
                        {2, 5, 2, 1, 1},
                        {2, 6, 2, 1, 1}},
                       /*radius=*/2, /*budget=*/3);
}

/// Reduce (v1,v2), (v2,v4), (v2,v5) by one unit each.
inline UpgradePlan example_tree_plan(const Instance& inst) {
  UpgradePlan plan;
  plan.delta.assign(inst.edge_count(), 0.0);
  plan.delta[0] = 1;
  plan.delta[2] = 1;
  plan.delta[3] = 1;
  return plan;
}

/// Parameter ranges used by the randomized suites. Deliberately unnormalized:
/// unreachable edges (ℓ-u > R) and bounds the budget cannot pay for both occur.
struct ParamRanges {
  long long length_max = 5;
  long long cost_max = 3;
  long long weight_max = 9;
  long long radius_max = 4;
  long long budget_max = 5;
  bool uniform_weights = false;
};

inline void fill_params(Rng& rng, Instance& inst, int n, const ParamRanges& pr) {
  inst.integer_params = true;
  inst.radius = static_cast<double>(rng.range(1, pr.radius_max));
  inst.budget = static_cast<double>(rng.range(1, pr.budget_max));
  if (pr.uniform_weights) {
    inst.weights.assign(n, static_cast<double>(rng.range(1, pr.weight_max)));
  } else {
    for (int i = 0; i < n; ++i) {
      inst.weights.push_back(static_cast<double>(rng.range(0, pr.weight_max)));
    }
  }
}

inline Edge random_edge(Rng& rng, NodeId a, NodeId b, const ParamRanges& pr) {
  Edge e;
  e.a = a;
  e.b = b;
  e.length = static_cast<double>(rng.range(1, pr.length_max));
  e.bound = static_cast<double>(rng.range(0, static_cast<long long>(e.length) - 1));
  e.cost = static_cast<double>(rng.range(1, pr.cost_max));
  return e;
}

inline Instance random_star(Rng& rng, int n, const ParamRanges& pr) {
  Instance inst;
  fill_params(rng, inst, n, pr);
  for (NodeId i = 1; i < n; ++i) inst.edges.push_back(random_edge(rng, 0, i, pr));
  return inst;
}

inline Instance random_path(Rng& rng, int n, const ParamRanges& pr) {
  Instance inst;
  fill_params(rng, inst, n, pr);
  for (NodeId i = 1; i < n; ++i) inst.edges.push_back(random_edge(rng, i - 1, i, pr));
  return inst;
}

inline Instance random_tree(Rng& rng, int n, const ParamRanges& pr) {
  Instance inst;
  fill_params(rng, inst, n, pr);
  for (NodeId i = 1; i < n; ++i) {
    inst.edges.push_back(random_edge(rng, static_cast<NodeId>(rng.range(0, i - 1)), i, pr));
  }
  return inst;
}

/// Random tree plus up to `extra` additional edges (still simple).
inline Instance random_connected(Rng& rng, int n, const ParamRanges& pr, int extra) {
  Instance inst = random_tree(rng, n, pr);
  auto has_edge = [&](NodeId a, NodeId b) {
    for (const Edge& e : inst.edges) {
      if ((e.a == a && e.b == b) || (e.a == b && e.b == a)) return true;
    }
    return false;
  };
  for (int t = 0; t < extra; ++t) {
    if (n < 2) break;
    NodeId a = static_cast<NodeId>(rng.range(0, n - 1));
    NodeId b = static_cast<NodeId>(rng.range(0, n - 1));
    if (a == b || has_edge(a, b)) continue;
    inst.edges.push_back(random_edge(rng, a, b, pr));
  }
  return inst;
}

inline reductions::KnapsackInstance random_knapsack(Rng& rng, int n_max, long long k_max) {
  reductions::KnapsackInstance ks;
  int n = static_cast<int>(rng.range(1, n_max));
  ks.capacity = rng.range(1, k_max);
  for (int i = 0; i < n; ++i) {
    reductions::KnapsackInstance::Item it;
    it.weight = rng.range(1, ks.capacity);
    it.value = rng.range(1, 9);
    ks.items.push_back(it);
  }
  // Feasible and infeasible targets both occur.
  ks.target = rng.range(1, ks.total_value() + 2);
  return ks;
}

/// Minimal Σ c·δ over the integer grid δ_e ∈ [0:u_e] on the first q outward
/// edges of a path side such that Σ (ℓ_e - δ_e) <= R; independent ground
/// truth for the reach-cost greedy. nullopt when no grid point is feasible.
inline std::optional<double> grid_reach_cost(const std::vector<Edge>& side_edges, int q,
                                             double radius) {
  std::optional<double> best;
  std::vector<long long> delta(q, 0);
  while (true) {
    double len = 0, cost = 0;
    for (int i = 0; i < q; ++i) {
      len += side_edges[i].length - static_cast<double>(delta[i]);
      cost += side_edges[i].cost * static_cast<double>(delta[i]);
    }
    if (len <= radius && (!best || cost < *best)) best = cost;
    int i = q - 1;
    while (i >= 0 && delta[i] == static_cast<long long>(side_edges[i].bound)) {
      delta[i] = 0;
      --i;
    }
    if (i < 0) break;
    ++delta[i];
  }
  return best;
}

}  // namespace testutil
