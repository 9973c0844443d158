#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "upcover/types.hpp"

namespace upcover::tree {

/// Rooted binary form of a tree instance: weight-0 auxiliary nodes and
/// zero-length, zero-bound spacer edges give every internal node exactly two
/// children while preserving the optimum. Edge attributes live on the child
/// side of each parent link; relocated edges keep the original attributes and
/// remember the instance edge they stand for.
struct BinaryTree {
  struct Node {
    NodeId orig = -1;  // original node id; -1 for auxiliaries
    double weight = 0.0;
    int parent = -1;
    std::array<int, 2> child{-1, -1};
    // Edge to the parent (meaningless at the root).
    double length = 0.0;
    double bound = 0.0;
    double cost = 1.0;
    int orig_edge = -1;  // instance edge index; -1 for spacer edges
    bool alive = true;
  };

  int root = -1;
  std::vector<Node> nodes;
  std::vector<int> of_orig;  // original node id -> btree index
  int orig_edge_count = 0;

  int node_of(NodeId orig) const { return of_orig[orig]; }
  bool is_leaf(int v) const { return nodes[v].child[0] < 0 && nodes[v].child[1] < 0; }
  NodeId root_orig() const { return nodes[root].orig; }
  int alive_count() const;

  /// Re-roots across the original edge from the current root to an adjacent
  /// original node. Constant-time: detaches the new root's subtree, repairs
  /// both gadgets locally (adding or deleting at most one auxiliary each),
  /// and hangs the old root below the new one with the flipped edge's
  /// attributes.
  void reroot(NodeId to);

 private:
  friend BinaryTree to_binary(const Instance& inst, NodeId root);
  int new_aux();
  void kill(int v);
  void fix_after_removal(int v);
  void attach_child(int v, int sub);
  std::vector<int> free_;
};

/// Builds the binary tree rooted at `root` per the conversion rules: a
/// single-child node gains a weight-0 leaf; a node with r >= 3 children keeps
/// its first child and hangs the rest off a spacer chain of r-2 auxiliaries.
/// Throws NotATree.
BinaryTree to_binary(const Instance& inst, NodeId root);

/// Dense per-node tables f(v,d,b) for d in [0:min(d(v,root),R)], b in [0:B],
/// plus the argmax split for reconstruction. Distances beyond R are implicit
/// zeros.
struct DPTable {
  struct Choice {
    std::int32_t dl = 0, dr = 0;  // edge reductions δ^l, δ^r
    std::int32_t bl = 0, br = 0;  // subtree budgets b^l, b^r
  };
  struct NodeTable {
    int dmax = -1;  // -1 for dead/absent nodes
    std::vector<std::int64_t> value;
    std::vector<Choice> choice;  // internal nodes only
  };

  std::int64_t radius = 0;
  std::int64_t budget = 0;
  std::vector<NodeTable> tables;  // indexed like BinaryTree::nodes

  /// f(v,d,b); returns 0 for d > R.
  std::int64_t value_at(int bt_node, std::int64_t d, std::int64_t b) const;
};

/// Leaves-to-root evaluation of the covering recurrence. Budget splits
/// satisfy b^l + b^r + c^l δ^l + c^r δ^r = b exactly; ties are broken by the
/// lexicographically smallest (δ^l, δ^r, b^l). Requires integer parameters.
DPTable dp_solve(const BinaryTree& bt, const Instance& inst);

/// Walks the recorded choices from (root, 0, B), skipping subtrees whose
/// distance exceeded the radius, and maps relocated edges back onto the
/// instance edges. The plan is feasible and attains f(root, 0, B).
UpgradePlan reconstruct(const DPTable& table, const BinaryTree& bt);

enum class RootMode {
  Rebuild,      // fresh conversion per candidate root (parallel-friendly)
  Incremental,  // constant-time re-rooting along a traversal of the tree
};

/// Exact single-facility solver on trees with integer parameters: runs the DP
/// for every candidate root and returns the best (lowest root id on ties).
Solution solve_1(const Instance& inst, RootMode mode = RootMode::Rebuild);

}  // namespace upcover::tree
