#include "upcover/star.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "upcover/errors.hpp"
#include "upcover/model.hpp"
#include "upcover/topology.hpp"

namespace upcover::star {

namespace {

void require_uniform_weights(const Instance& inst) {
  for (double w : inst.weights) {
    if (w != inst.weights[0]) throw NonUniformWeights();
  }
}

}  // namespace

StarDecomposition decompose(const Instance& inst) {
  NodeId center = star_center(inst);
  if (center < 0) throw NotAStar();
  StarDecomposition out;
  out.center = center;
  for (int e = 0; e < inst.edge_count(); ++e) {
    const Edge& ed = inst.edges[e];
    out.satellites.push_back({ed.other(center), e});
  }
  std::sort(out.satellites.begin(), out.satellites.end(),
            [](const Satellite& a, const Satellite& b) { return a.node < b.node; });
  return out;
}

Solution solve_uniform_1(const Instance& inst) {
  StarDecomposition dec = decompose(inst);
  require_uniform_weights(inst);
  const double eps = cover_eps(inst);

  struct Candidate {
    NodeId node;
    int edge;
    double deficit;   // Δ_i = ℓ_i - R
    double min_cost;  // c_i · Δ_i
  };
  std::vector<Candidate> todo;
  UpgradePlan plan;
  plan.delta.assign(inst.edge_count(), 0.0);
  for (const Satellite& sat : dec.satellites) {
    const Edge& ed = inst.edges[sat.edge];
    double deficit = ed.length - inst.radius;
    if (deficit <= eps) continue;                    // covered for free
    if (deficit > ed.bound + eps) continue;          // unreachable
    todo.push_back({sat.node, sat.edge, deficit, ed.cost * deficit});
  }
  // Non-decreasing minimal upgrading cost; lowest node id on ties.
  std::sort(todo.begin(), todo.end(), [](const Candidate& a, const Candidate& b) {
    if (a.min_cost != b.min_cost) return a.min_cost < b.min_cost;
    return a.node < b.node;
  });

  double budget = inst.budget;
  for (const Candidate& c : todo) {
    if (budget <= eps) break;
    if (c.min_cost <= budget + eps) {
      plan.delta[c.edge] = c.deficit;
      budget -= c.min_cost;
    } else {
      // Partial spend on the next satellite in order; covers nothing but is
      // recorded for reproducibility.
      const Edge& ed = inst.edges[c.edge];
      double d = budget / ed.cost;
      if (d * ed.cost > budget) d = std::nextafter(d, 0.0);
      plan.delta[c.edge] = std::min(d, ed.bound);
      budget = 0.0;
      break;
    }
  }
  return finalize_solution(inst, {dec.center}, std::move(plan));
}

Solution solve_uniform_p(const Instance& inst, int p) {
  const int n = inst.node_count();
  if (p < 1 || p > n) {
    throw ApplicabilityError("star: p=" + std::to_string(p) + " out of range [1," +
                             std::to_string(n) + "]");
  }
  Solution base = solve_uniform_1(inst);
  if (p == 1) return base;

  std::vector<char> covered(n, 0);
  for (NodeId v : base.covered) covered[v] = 1;
  std::vector<NodeId> facilities = base.facilities;
  for (NodeId v = 0; v < n && static_cast<int>(facilities.size()) < p; ++v) {
    if (!covered[v]) facilities.push_back(v);
  }
  // Fewer uncovered nodes than facilities: everything is covered, park the
  // spares on the lowest-id free nodes.
  std::vector<char> used(n, 0);
  for (NodeId v : facilities) used[v] = 1;
  for (NodeId v = 0; v < n && static_cast<int>(facilities.size()) < p; ++v) {
    if (!used[v]) facilities.push_back(v);
  }
  return finalize_solution(inst, std::move(facilities), base.plan);
}

}  // namespace upcover::star
