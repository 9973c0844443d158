#pragma once

#include <string>
#include <utility>
#include <vector>

#include "upcover/types.hpp"

namespace upcover {

/// Checks every Instance/Edge invariant. Returns an empty list iff the
/// instance is valid; each violation names the offending field and node/edge.
std::vector<std::string> validate(const Instance& inst);

/// Clamps every bound to what the budget can pay for (u := min(u, B/c),
/// floored for integer instances) and tags edges with ℓ - u > R as
/// uncrossable. Optimum-preserving. Throws ValidationError on invalid input.
Instance normalize(const Instance& inst);

/// Total upgrade cost Σ c_e δ_e of a plan.
double plan_cost(const Instance& inst, const UpgradePlan& plan);

/// 0 <= δ_e <= u_e for every edge and plan_cost <= B (tiny tolerance on the
/// budget; see ledger note on fractional leftover spends).
bool plan_feasible(const Instance& inst, const UpgradePlan& plan);

/// Shortest-path distances from src under reduced lengths ℓ_e - δ_e.
std::vector<double> distances_from(const Instance& inst, const UpgradePlan& plan, NodeId src);

/// d(i, j, δ): shortest-path length between i and j after reductions.
double distance(const Instance& inst, const UpgradePlan& plan, NodeId i, NodeId j);

/// C(X, δ) and its total weight: all nodes within radius of some facility.
std::pair<std::vector<NodeId>, double> coverage(const Instance& inst,
                                                const std::vector<NodeId>& facilities,
                                                const UpgradePlan& plan);

/// Builds a Solution whose covered set and value are recomputed via coverage,
/// so the stored value always round-trips.
Solution finalize_solution(const Instance& inst, std::vector<NodeId> facilities, UpgradePlan plan);

/// True iff the solution's plan is feasible and its covered set and value
/// match a coverage recomputation exactly.
bool verify_solution(const Instance& inst, const Solution& sol);

}  // namespace upcover
