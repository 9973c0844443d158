#pragma once

#include <string>
#include <vector>

#include "upcover/types.hpp"

namespace upcover {

enum class Shape { Star, Path, Tree, General };

/// Most specific shape of the (assumed valid, connected) instance graph.
/// A single node classifies as Star; a path of <= 3 nodes is also a star.
Shape classify(const Instance& inst);

bool is_tree(const Instance& inst);
bool is_path(const Instance& inst);

/// Center of the star, or -1 when the graph is not a star. A 2-node graph
/// designates the lower id; a single node is its own center.
NodeId star_center(const Instance& inst);

/// Node order along a path from the lower-id endpoint; empty when not a path.
std::vector<NodeId> path_order(const Instance& inst);

std::string shape_name(Shape s);

}  // namespace upcover
