#include "upcover/reductions.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "upcover/errors.hpp"
#include "upcover/model.hpp"

namespace upcover::reductions {

using Item = KnapsackInstance::Item;

std::int64_t KnapsackInstance::total_value() const {
  std::int64_t t = 0;
  for (const Item& it : items) t += it.value;
  return t;
}

void validate(const KnapsackInstance& ks) {
  if (ks.capacity < 0) throw ValidationError("knapsack: negative capacity");
  if (ks.target <= 0) throw ValidationError("knapsack: target must be positive");
  for (std::size_t i = 0; i < ks.items.size(); ++i) {
    const Item& it = ks.items[i];
    if (it.weight < 1) throw ValidationError("knapsack item " + std::to_string(i) + ": weight < 1");
    if (it.value < 1) throw ValidationError("knapsack item " + std::to_string(i) + ": value < 1");
    if (it.weight > ks.capacity) {
      throw ValidationError("knapsack item " + std::to_string(i) + ": weight exceeds capacity");
    }
  }
}

StarGadget knapsack_to_star(const KnapsackInstance& ks) {
  validate(ks);
  const std::int64_t w_center = ks.total_value() + 1;  // any W > Σ b_i
  std::int64_t u = 0;
  for (const Item& it : ks.items) u = std::max(u, it.weight);
  const std::int64_t radius = u + 1;

  StarGadget g;
  Instance& inst = g.instance;
  inst.integer_params = true;
  inst.radius = static_cast<double>(radius);
  inst.budget = static_cast<double>(ks.capacity);
  inst.facilities = 1;
  inst.weights.push_back(static_cast<double>(w_center));
  for (std::size_t i = 0; i < ks.items.size(); ++i) {
    inst.weights.push_back(static_cast<double>(ks.items[i].value));
    Edge e;
    e.a = 0;
    e.b = static_cast<NodeId>(i + 1);
    e.length = static_cast<double>(radius + ks.items[i].weight);
    e.bound = static_cast<double>(u);
    e.cost = 1.0;
    inst.edges.push_back(e);
  }
  g.threshold = static_cast<double>(w_center + ks.target);
  return g;
}

PathGadget knapsack_to_path(const KnapsackInstance& ks) {
  validate(ks);
  const int n = static_cast<int>(ks.items.size());
  const std::int64_t w_odd = ks.total_value() + 1;
  std::int64_t u = 0;
  for (const Item& it : ks.items) u = std::max(u, it.weight);
  const std::int64_t radius = u + 1;

  PathGadget g;
  g.facilities = n;
  Instance& inst = g.instance;
  inst.integer_params = true;
  inst.radius = static_cast<double>(radius);
  inst.budget = static_cast<double>(ks.capacity);
  inst.facilities = n;
  for (int k = 0; k < n; ++k) {
    inst.weights.push_back(static_cast<double>(w_odd));             // v_{2k+1}
    inst.weights.push_back(static_cast<double>(ks.items[k].value));  // v_{2k+2}
    Edge item_edge;
    item_edge.a = 2 * k;
    item_edge.b = 2 * k + 1;
    item_edge.length = static_cast<double>(radius + ks.items[k].weight);
    item_edge.bound = static_cast<double>(u);
    item_edge.cost = 1.0;
    inst.edges.push_back(item_edge);
    if (k + 1 < n) {
      Edge sep;
      sep.a = 2 * k + 1;
      sep.b = 2 * k + 2;
      sep.length = static_cast<double>(2 * radius);
      sep.bound = static_cast<double>(u);
      sep.cost = 1.0;
      inst.edges.push_back(sep);
    }
  }
  g.threshold = static_cast<double>(n * w_odd + ks.target);
  return g;
}

std::vector<int> extract_items(const Solution& sol, GadgetKind kind, const KnapsackInstance& ks) {
  const int n = static_cast<int>(ks.items.size());
  // Canonical facility placement allowed by the reduction proofs; re-solving
  // coverage with it never lowers the value.
  std::vector<NodeId> canonical;
  if (kind == GadgetKind::Star) {
    canonical = {0};
  } else {
    for (int k = 0; k < n; ++k) canonical.push_back(2 * k);
  }

  // Rebuild the gadget from ks to evaluate coverage against it.
  Instance inst;
  double threshold = 0;
  if (kind == GadgetKind::Star) {
    StarGadget g = knapsack_to_star(ks);
    inst = std::move(g.instance);
    threshold = g.threshold;
  } else {
    PathGadget g = knapsack_to_path(ks);
    inst = std::move(g.instance);
    threshold = g.threshold;
  }
  if (sol.value < threshold) {
    throw SolutionBelowThreshold("gadget solution value below threshold");
  }

  auto [covered, value] = coverage(inst, canonical, sol.plan);
  if (value < threshold) {
    throw SolutionBelowThreshold("canonicalized gadget solution falls below threshold");
  }
  std::vector<int> items;
  for (NodeId v : covered) {
    if (kind == GadgetKind::Star) {
      if (v >= 1) items.push_back(v - 1);
    } else {
      if (v % 2 == 1) items.push_back((v - 1) / 2);
    }
  }
  // The proofs guarantee knapsack feasibility of the extracted set.
  std::int64_t g_sum = 0, b_sum = 0;
  for (int i : items) {
    g_sum += ks.items[i].weight;
    b_sum += ks.items[i].value;
  }
  if (g_sum > ks.capacity || b_sum < ks.target) {
    throw std::logic_error("gadget extraction produced an infeasible knapsack set");
  }
  return items;
}

std::int64_t knapsack_dp(const KnapsackInstance& ks) {
  if (ks.capacity <= 0) return 0;
  std::vector<std::int64_t> best(ks.capacity + 1, 0);
  for (const Item& it : ks.items) {
    for (std::int64_t cap = ks.capacity; cap >= it.weight; --cap) {
      best[cap] = std::max(best[cap], best[cap - it.weight] + it.value);
    }
  }
  return best[ks.capacity];
}

}  // namespace upcover::reductions
