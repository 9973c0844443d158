#pragma once

#include <cstdint>
#include <vector>

#include "upcover/types.hpp"

namespace upcover::reductions {

/// 0/1 knapsack: items with weight g_i and value b_i, capacity K, target U.
struct KnapsackInstance {
  struct Item {
    std::int64_t weight = 0;  // g_i >= 1
    std::int64_t value = 0;   // b_i >= 1
  };
  std::vector<Item> items;
  std::int64_t capacity = 0;  // K
  std::int64_t target = 0;    // U

  std::int64_t total_value() const;
};

/// Throws ValidationError unless g_i >= 1, b_i >= 1, g_i <= K, and U > 0.
void validate(const KnapsackInstance& ks);

struct StarGadget {
  Instance instance;
  double threshold = 0;  // T = W + U
};

struct PathGadget {
  Instance instance;
  double threshold = 0;  // T = pW + U
  int facilities = 0;    // p = item count
};

/// Star hardness gadget: center of weight W = Σb_i + 1, satellite i of weight
/// b_i at length R + g_i with u = max g_i, R = u + 1, c = 1, B = K, p = 1.
/// The covering decision at threshold W + U answers the knapsack decision.
StarGadget knapsack_to_star(const KnapsackInstance& ks);

/// Path hardness gadget on 2n nodes: odd nodes weigh W, node 2k weighs b_k;
/// item edges have length R + g_k, separator edges 2R; p = n facilities and
/// threshold pW + U.
PathGadget knapsack_to_path(const KnapsackInstance& ks);

enum class GadgetKind { Star, Path };

/// Reads the chosen item set off a gadget solution with value >= T, after
/// normalizing the facilities to the canonical placement (center of the star;
/// the odd path nodes). Returns 0-based item indices; the set always
/// satisfies Σ g_i <= K and Σ b_i >= U. Throws SolutionBelowThreshold.
std::vector<int> extract_items(const Solution& sol, GadgetKind kind, const KnapsackInstance& ks);

/// Capacity-indexed dynamic program; independent ground truth for the
/// round-trip tests.
std::int64_t knapsack_dp(const KnapsackInstance& ks);

}  // namespace upcover::reductions
