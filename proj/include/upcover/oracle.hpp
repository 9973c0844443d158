#pragma once

#include <cstdint>

#include "upcover/types.hpp"

namespace upcover::oracle {

/// Enumeration grid for edge reductions: δ_e ∈ {0, step, 2·step, ...} with
/// step = num/den. Step 1 is exact on integer instances (integrality of
/// optimal upgrades); finer steps exist for the refinement experiments.
struct GridSpec {
  std::int64_t num = 1;
  std::int64_t den = 1;

  static GridSpec unit() { return {1, 1}; }
  static GridSpec halves() { return {1, 2}; }
  static GridSpec quarters() { return {1, 4}; }
};

struct Options {
  /// Reject instances whose pessimistic plan-evaluation count
  /// Π_e(⌊u_e/step⌋+1) · C(n,p) exceeds this bound.
  double work_bound = 1e8;
};

/// Exhaustive exact solver: enumerates all p-subsets of nodes (lexicographic)
/// and all grid plans within budget, with prefix-cost pruning. Returns the
/// first maximizer found, i.e. the one with lexicographically smallest
/// facility set, then plan. Exact integer arithmetic throughout.
Solution solve_exact(const Instance& inst, int p, GridSpec grid = {}, const Options& opt = {});

/// Decision version: true iff the optimum value is >= threshold.
bool decide(const Instance& inst, int p, double threshold, GridSpec grid = {},
            const Options& opt = {});

}  // namespace upcover::oracle
