#pragma once

#include <vector>

#include "upcover/types.hpp"

namespace upcover::star {

struct Satellite {
  NodeId node = -1;
  int edge = -1;  // index of the edge connecting the satellite to the center
};

struct StarDecomposition {
  NodeId center = -1;
  std::vector<Satellite> satellites;  // ascending by node id
};

/// Throws NotAStar unless exactly one node is adjacent to all others
/// (a 2-node graph designates the lower id; a single node is a trivial star).
StarDecomposition decompose(const Instance& inst);

/// Greedy exact solver for the single-facility problem with uniform weights:
/// facility at the center, satellites taken in non-decreasing order of their
/// minimal covering cost c_i·Δ_i. Leftover budget is spent on the next
/// satellite in order even when it cannot complete the cover.
Solution solve_uniform_1(const Instance& inst);

/// p-facility extension: runs the single-facility greedy, then places the
/// remaining p-1 facilities on the lowest-id still-uncovered nodes.
Solution solve_uniform_p(const Instance& inst, int p);

}  // namespace upcover::star
