#include "upcover/tree.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <queue>
#include <stdexcept>
#include <tuple>

#include "upcover/errors.hpp"
#include "upcover/model.hpp"
#include "upcover/topology.hpp"

namespace upcover::tree {

namespace {

void require_tree(const Instance& inst) {
  if (inst.edge_count() != inst.node_count() - 1) throw NotATree();
  // Connected check (n-1 edges + connected = tree).
  Adjacency adj = build_adjacency(inst);
  std::vector<char> seen(inst.node_count(), 0);
  std::queue<NodeId> bfs;
  bfs.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!bfs.empty()) {
    NodeId v = bfs.front();
    bfs.pop();
    for (auto [w, e] : adj[v]) {
      (void)e;
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        bfs.push(w);
      }
    }
  }
  if (reached != inst.node_count()) throw NotATree();
}

void require_integer(const Instance& inst) {
  if (!inst.integer_params) throw NonIntegerInstance();
}

}  // namespace

int BinaryTree::alive_count() const {
  int c = 0;
  for (const Node& n : nodes)
    if (n.alive) ++c;
  return c;
}

int BinaryTree::new_aux() {
  int idx;
  if (!free_.empty()) {
    idx = free_.back();
    free_.pop_back();
    nodes[idx] = Node{};
  } else {
    idx = static_cast<int>(nodes.size());
    nodes.emplace_back();
  }
  nodes[idx].alive = true;
  return idx;
}

void BinaryTree::kill(int v) {
  nodes[v].alive = false;
  nodes[v].parent = -1;
  nodes[v].child = {-1, -1};
  free_.push_back(v);
}

/// v lost a child and may be left with one child slot; restore binarity.
void BinaryTree::fix_after_removal(int v) {
  Node& nv = nodes[v];
  if (nv.child[0] < 0 && nv.child[1] >= 0) std::swap(nv.child[0], nv.child[1]);
  int c = nv.child[0];
  if (c < 0) return;  // became a leaf
  if (nv.child[1] >= 0) return;

  if (nodes[c].orig < 0 && is_leaf(c)) {
    // Lone auxiliary leaf left over from a single-child gadget.
    nv.child[0] = -1;
    kill(c);
    return;
  }
  if (nodes[c].orig < 0) {
    // Lone spacer-chain head: splice its two children up into v.
    nv.child = nodes[c].child;
    nodes[nv.child[0]].parent = v;
    nodes[nv.child[1]].parent = v;
    kill(c);
    return;
  }
  // Lone real child: single-child rule, add an auxiliary leaf.
  int a = new_aux();
  nodes[a].parent = v;
  nv.child[1] = nv.child[0];
  nv.child[0] = a;
}

/// Hangs subtree root `sub` (edge attrs already set on it) below v.
void BinaryTree::attach_child(int v, int sub) {
  Node& nv = nodes[v];
  if (nv.child[0] < 0 && nv.child[1] < 0) {
    nv.child[1] = sub;
    nodes[sub].parent = v;
    int a = new_aux();  // single-child rule
    nodes[a].parent = v;
    nv.child[0] = a;
    return;
  }
  for (int s = 0; s < 2; ++s) {
    int c = nv.child[s];
    if (c >= 0 && nodes[c].orig < 0 && is_leaf(c)) {
      kill(c);  // auxiliary leaf becomes obsolete, reuse its slot
      nv.child[s] = sub;
      nodes[sub].parent = v;
      return;
    }
  }
  // Both slots hold real subtrees: wrap them under a fresh spacer auxiliary.
  int a = new_aux();
  nodes[a].parent = v;
  nodes[a].child = nv.child;
  nodes[nv.child[0]].parent = a;
  nodes[nv.child[1]].parent = a;
  nv.child[0] = a;
  nv.child[1] = sub;
  nodes[sub].parent = v;
}

void BinaryTree::reroot(NodeId to) {
  const int old_root = root;
  const int y = of_orig[to];
  assert(nodes[y].alive && y != old_root);

  // Detach y's subtree; its parent link carries the original (root,to) edge.
  int p = nodes[y].parent;
  int slot = nodes[p].child[0] == y ? 0 : 1;
  nodes[p].child[slot] = -1;
  nodes[y].parent = -1;

  if (nodes[p].orig < 0) {
    // Spacer chain node with one survivor: splice it up.
    int other = nodes[p].child[1 - slot];
    int pp = nodes[p].parent;
    int pslot = nodes[pp].child[0] == p ? 0 : 1;
    nodes[pp].child[pslot] = other;
    nodes[other].parent = pp;
    kill(p);
  } else {
    assert(p == old_root);
    fix_after_removal(p);
  }

  // Flip the edge: the old root keeps the subtree it retained and hangs
  // below y with the same edge attributes.
  nodes[old_root].length = nodes[y].length;
  nodes[old_root].bound = nodes[y].bound;
  nodes[old_root].cost = nodes[y].cost;
  nodes[old_root].orig_edge = nodes[y].orig_edge;
  attach_child(y, old_root);

  nodes[y].parent = -1;
  nodes[y].length = 0.0;
  nodes[y].bound = 0.0;
  nodes[y].cost = 1.0;
  nodes[y].orig_edge = -1;
  root = y;
}

BinaryTree to_binary(const Instance& inst, NodeId root) {
  require_tree(inst);
  const int n = inst.node_count();
  if (root < 0 || root >= n) throw std::invalid_argument("root out of range");

  BinaryTree bt;
  bt.orig_edge_count = inst.edge_count();
  bt.of_orig.resize(n);
  bt.nodes.reserve(2 * n);
  for (NodeId v = 0; v < n; ++v) {
    BinaryTree::Node node;
    node.orig = v;
    node.weight = inst.weights[v];
    bt.of_orig[v] = static_cast<int>(bt.nodes.size());
    bt.nodes.push_back(node);
  }
  bt.root = bt.of_orig[root];

  Adjacency adj = build_adjacency(inst);
  // BFS from the root; children listed ascending by node id.
  std::vector<char> seen(n, 0);
  seen[root] = 1;
  std::queue<NodeId> bfs;
  bfs.push(root);
  while (!bfs.empty()) {
    NodeId v = bfs.front();
    bfs.pop();
    std::vector<std::pair<NodeId, int>> children;  // (node, edge)
    for (auto [w, e] : adj[v]) {
      if (!seen[w]) children.emplace_back(w, e);
    }
    std::sort(children.begin(), children.end());
    for (auto [w, e] : children) {
      seen[w] = 1;
      bfs.push(w);
    }

    const int bv = bt.of_orig[v];
    auto set_edge = [&](int bchild, int edge_index) {
      const Edge& ed = inst.edges[edge_index];
      bt.nodes[bchild].length = ed.length;
      bt.nodes[bchild].bound = ed.bound;
      bt.nodes[bchild].cost = ed.cost;
      bt.nodes[bchild].orig_edge = edge_index;
    };
    const int r = static_cast<int>(children.size());
    if (r == 0) continue;
    if (r == 1) {
      int c = bt.of_orig[children[0].first];
      set_edge(c, children[0].second);
      bt.nodes[c].parent = bv;
      int a = bt.new_aux();
      bt.nodes[a].parent = bv;
      bt.nodes[bv].child = {a, c};  // right slot holds the first child
      continue;
    }
    if (r == 2) {
      int c0 = bt.of_orig[children[0].first];
      int c1 = bt.of_orig[children[1].first];
      set_edge(c0, children[0].second);
      set_edge(c1, children[1].second);
      bt.nodes[c0].parent = bv;
      bt.nodes[c1].parent = bv;
      bt.nodes[bv].child = {c1, c0};
      continue;
    }
    // r >= 3: first child stays direct, the rest hang off a spacer chain
    // a_2..a_{r-1} of weight-0 nodes.
    int first = bt.of_orig[children[0].first];
    set_edge(first, children[0].second);
    bt.nodes[first].parent = bv;
    int holder = bv;  // node whose left slot receives the next chain link
    for (int s = 1; s < r; ++s) {
      int c = bt.of_orig[children[s].first];
      set_edge(c, children[s].second);
      if (s + 1 < r) {
        int a = bt.new_aux();
        bt.nodes[a].parent = holder;
        if (holder == bv) {
          bt.nodes[bv].child = {a, first};
        } else {
          bt.nodes[holder].child[0] = a;
        }
        bt.nodes[c].parent = a;
        bt.nodes[a].child = {-1, c};
        holder = a;
      } else {
        bt.nodes[c].parent = holder;
        bt.nodes[holder].child[0] = c;
      }
    }
  }
  return bt;
}

std::int64_t DPTable::value_at(int bt_node, std::int64_t d, std::int64_t b) const {
  if (d > radius) return 0;
  const NodeTable& t = tables[bt_node];
  if (t.dmax < 0 || d > t.dmax || b < 0 || b > budget) {
    throw std::out_of_range("dp table lookup outside the computed domain");
  }
  return t.value[static_cast<std::size_t>(d) * (budget + 1) + b];
}

DPTable dp_solve(const BinaryTree& bt, const Instance& inst) {
  require_integer(inst);
  const std::int64_t R = static_cast<std::int64_t>(inst.radius);
  const std::int64_t B = static_cast<std::int64_t>(inst.budget);
  const int nb = static_cast<int>(bt.nodes.size());

  DPTable table;
  table.radius = R;
  table.budget = B;
  table.tables.resize(nb);

  // Preorder with distances; reversed it yields children-before-parents.
  std::vector<int> order;
  std::vector<std::int64_t> dist(nb, 0);
  order.reserve(nb);
  std::vector<int> stack{bt.root};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (int c : bt.nodes[v].child) {
      if (c >= 0) {
        dist[c] = dist[v] + static_cast<std::int64_t>(std::llround(bt.nodes[c].length));
        stack.push_back(c);
      }
    }
  }

  const auto value_of = [&](int child, std::int64_t darg, std::int64_t barg) -> std::int64_t {
    if (darg > R) return 0;
    return table.tables[child].value[static_cast<std::size_t>(darg) * (B + 1) + barg];
  };

  struct RightBest {
    std::int64_t val = -1;
    std::int32_t dr = 0;
  };
  std::vector<RightBest> rbest(B + 1);

  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const int v = *it;
    const BinaryTree::Node& node = bt.nodes[v];
    DPTable::NodeTable& t = table.tables[v];
    t.dmax = static_cast<int>(std::min(dist[v], R));
    const std::int64_t w = static_cast<std::int64_t>(node.weight);
    const std::size_t rows = static_cast<std::size_t>(t.dmax) + 1;
    t.value.assign(rows * (B + 1), 0);

    if (bt.is_leaf(v)) {
      std::fill(t.value.begin(), t.value.end(), w);
      continue;
    }
    t.choice.assign(rows * (B + 1), {});

    const int left = node.child[0], right = node.child[1];
    const std::int64_t ll = std::llround(bt.nodes[left].length);
    const std::int64_t ul = std::llround(bt.nodes[left].bound);
    const std::int64_t cl = std::llround(bt.nodes[left].cost);
    const std::int64_t lr = std::llround(bt.nodes[right].length);
    const std::int64_t ur = std::llround(bt.nodes[right].bound);
    const std::int64_t cr = std::llround(bt.nodes[right].cost);

    for (std::int64_t d = 0; d <= t.dmax; ++d) {
      for (std::int64_t b = 0; b <= B; ++b) {
        // Best right-side outcome for every allocation t_r given to that side
        // (edge upgrade plus subtree budget); smallest δ^r kept on ties.
        for (std::int64_t tr = 0; tr <= b; ++tr) {
          RightBest rb;
          const std::int64_t cap = std::min(ur, tr / cr);
          for (std::int64_t dr = 0; dr <= cap; ++dr) {
            std::int64_t val = value_of(right, d + lr - dr, tr - cr * dr);
            if (val > rb.val) {
              rb.val = val;
              rb.dr = static_cast<std::int32_t>(dr);
            }
          }
          rbest[tr] = rb;
        }

        std::int64_t best = -1;
        DPTable::Choice bc;
        for (std::int64_t tl = 0; tl <= b; ++tl) {
          const RightBest& rb = rbest[b - tl];
          const std::int64_t cap = std::min(ul, tl / cl);
          for (std::int64_t dl = 0; dl <= cap; ++dl) {
            const std::int64_t bl = tl - cl * dl;
            const std::int64_t total = value_of(left, d + ll - dl, bl) + rb.val;
            if (total < best) continue;
            DPTable::Choice cand{static_cast<std::int32_t>(dl), rb.dr,
                                 static_cast<std::int32_t>(bl),
                                 static_cast<std::int32_t>(b - tl - cr * rb.dr)};
            if (total > best ||
                std::tie(cand.dl, cand.dr, cand.bl) < std::tie(bc.dl, bc.dr, bc.bl)) {
              best = total;
              bc = cand;
            }
          }
        }
        const std::size_t idx = static_cast<std::size_t>(d) * (B + 1) + b;
        t.value[idx] = w + best;
        t.choice[idx] = bc;
      }
    }
  }
  return table;
}

UpgradePlan reconstruct(const DPTable& table, const BinaryTree& bt) {
  UpgradePlan plan;
  plan.delta.assign(bt.orig_edge_count, 0.0);
  const std::int64_t R = table.radius;

  struct State {
    int node;
    std::int64_t d, b;
  };
  std::vector<State> stack{{bt.root, 0, table.budget}};
  while (!stack.empty()) {
    State s = stack.back();
    stack.pop_back();
    if (bt.is_leaf(s.node)) continue;
    const DPTable::NodeTable& t = table.tables[s.node];
    const DPTable::Choice& ch =
        t.choice[static_cast<std::size_t>(s.d) * (table.budget + 1) + s.b];
    const int left = bt.nodes[s.node].child[0];
    const int right = bt.nodes[s.node].child[1];
    const std::int64_t darg_l = s.d + std::llround(bt.nodes[left].length) - ch.dl;
    const std::int64_t darg_r = s.d + std::llround(bt.nodes[right].length) - ch.dr;
    if (darg_l <= R) {
      if (ch.dl > 0 && bt.nodes[left].orig_edge >= 0) {
        plan.delta[bt.nodes[left].orig_edge] = ch.dl;
      }
      stack.push_back({left, darg_l, ch.bl});
    }
    if (darg_r <= R) {
      if (ch.dr > 0 && bt.nodes[right].orig_edge >= 0) {
        plan.delta[bt.nodes[right].orig_edge] = ch.dr;
      }
      stack.push_back({right, darg_r, ch.br});
    }
  }
  return plan;
}

namespace {

struct BestRoot {
  std::int64_t value = -1;
  NodeId root = -1;
  UpgradePlan plan;

  void offer(std::int64_t value_in, NodeId root_in, const DPTable& tab, const BinaryTree& bt) {
    if (value_in > value || (value_in == value && root_in < root)) {
      value = value_in;
      root = root_in;
      plan = reconstruct(tab, bt);
    }
  }
};

void visit_roots(const Instance& inst, const Adjacency& adj, BinaryTree& bt, NodeId at,
                 NodeId from, BestRoot& best) {
  for (auto [w, e] : adj[at]) {
    (void)e;
    if (w == from) continue;
    bt.reroot(w);
    DPTable tab = dp_solve(bt, inst);
    best.offer(tab.value_at(bt.node_of(w), 0, tab.budget), w, tab, bt);
    visit_roots(inst, adj, bt, w, at, best);
    bt.reroot(at);
  }
}

}  // namespace

Solution solve_1(const Instance& inst, RootMode mode) {
  require_tree(inst);
  require_integer(inst);
  BestRoot best;

  if (mode == RootMode::Rebuild) {
    for (NodeId root = 0; root < inst.node_count(); ++root) {
      BinaryTree bt = to_binary(inst, root);
      DPTable tab = dp_solve(bt, inst);
      best.offer(tab.value_at(bt.node_of(root), 0, tab.budget), root, tab, bt);
    }
  } else {
    BinaryTree bt = to_binary(inst, 0);
    DPTable tab = dp_solve(bt, inst);
    best.offer(tab.value_at(bt.node_of(0), 0, tab.budget), 0, tab, bt);
    Adjacency adj = build_adjacency(inst);
    visit_roots(inst, adj, bt, 0, -1, best);
  }
  return finalize_solution(inst, {best.root}, std::move(best.plan));
}

}  // namespace upcover::tree
