#include "upcover/topology.hpp"

#include <algorithm>

namespace upcover {

namespace {

std::vector<int> degrees(const Instance& inst) {
  std::vector<int> deg(inst.node_count(), 0);
  for (const Edge& e : inst.edges) {
    ++deg[e.a];
    ++deg[e.b];
  }
  return deg;
}

}  // namespace

bool is_tree(const Instance& inst) {
  // Assumes connectivity (validated elsewhere): connected + n-1 edges = tree.
  return inst.edge_count() == inst.node_count() - 1;
}

NodeId star_center(const Instance& inst) {
  const int n = inst.node_count();
  if (n == 1) return 0;
  if (!is_tree(inst)) return -1;
  if (n == 2) return std::min(inst.edges[0].a, inst.edges[0].b);
  auto deg = degrees(inst);
  NodeId center = -1;
  for (NodeId v = 0; v < n; ++v) {
    if (deg[v] == n - 1) {
      center = v;
    } else if (deg[v] != 1) {
      return -1;
    }
  }
  return center;
}

std::vector<NodeId> path_order(const Instance& inst) {
  const int n = inst.node_count();
  if (n == 1) return {0};
  if (!is_tree(inst)) return {};
  auto deg = degrees(inst);
  std::vector<NodeId> ends;
  for (NodeId v = 0; v < n; ++v) {
    if (deg[v] == 1) {
      ends.push_back(v);
    } else if (deg[v] != 2) {
      return {};
    }
  }
  if (ends.size() != 2) return {};
  const Adjacency adj = build_adjacency(inst);
  std::vector<NodeId> order;
  order.reserve(n);
  NodeId prev = -1, cur = std::min(ends[0], ends[1]);
  while (true) {
    order.push_back(cur);
    NodeId next = -1;
    for (auto [w, e] : adj[cur]) {
      (void)e;
      if (w != prev) {
        next = w;
        break;
      }
    }
    if (next == -1) break;
    prev = cur;
    cur = next;
  }
  if (static_cast<int>(order.size()) != n) return {};
  return order;
}

Shape classify(const Instance& inst) {
  if (star_center(inst) >= 0) return Shape::Star;
  if (!path_order(inst).empty()) return Shape::Path;
  if (is_tree(inst)) return Shape::Tree;
  return Shape::General;
}

std::string shape_name(Shape s) {
  switch (s) {
    case Shape::Star: return "star";
    case Shape::Path: return "path";
    case Shape::Tree: return "tree";
    default: return "general";
  }
}

}  // namespace upcover
