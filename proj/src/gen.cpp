#include "upcover/gen.hpp"

#include <algorithm>

#include "upcover/errors.hpp"
#include "upcover/rng.hpp"

namespace upcover::gen {

Options::Shape shape_from_name(const std::string& name) {
  if (name == "star") return Options::Shape::Star;
  if (name == "path") return Options::Shape::Path;
  if (name == "tree") return Options::Shape::Tree;
  throw ValidationError("unknown shape '" + name + "' (want star|path|tree)");
}

Instance generate(const Options& opt) {
  if (opt.n < 1) throw ValidationError("generator: n must be >= 1");
  if (opt.length_max < 1 || opt.cost_max < 1 || opt.radius_max < 1 || opt.budget_max < 1) {
    throw ValidationError("generator: parameter maxima must be >= 1");
  }
  if (opt.weight_max < 0) throw ValidationError("generator: weight_max must be >= 0");

  Rng rng(opt.seed);
  Instance inst;
  inst.integer_params = true;
  inst.facilities = opt.p;
  inst.radius = static_cast<double>(opt.radius > 0 ? opt.radius : rng.range(1, opt.radius_max));
  inst.budget = static_cast<double>(opt.budget > 0 ? opt.budget : rng.range(1, opt.budget_max));

  if (opt.uniform_weights) {
    double w = static_cast<double>(rng.range(1, std::max(1LL, opt.weight_max)));
    inst.weights.assign(opt.n, w);
  } else {
    for (int i = 0; i < opt.n; ++i) {
      inst.weights.push_back(static_cast<double>(rng.range(0, opt.weight_max)));
    }
  }

  auto add_edge = [&](NodeId a, NodeId b) {
    Edge e;
    e.a = a;
    e.b = b;
    e.cost = static_cast<double>(rng.range(1, opt.cost_max));
    long long affordable = static_cast<long long>(inst.budget) / static_cast<long long>(e.cost);
    long long radius = static_cast<long long>(inst.radius);
    // Clamp the length so a feasible bound exists under both normalization
    // assumptions: u >= ℓ-R (crossable) and u <= min(ℓ-1, B/c).
    long long length = rng.range(1, opt.length_max);
    length = std::max(1LL, std::min(length, radius + affordable));
    long long u_lo = std::max(0LL, length - radius);
    long long u_hi = std::min(length - 1, affordable);
    long long bound = opt.tight_bounds ? u_hi : rng.range(u_lo, u_hi);
    e.length = static_cast<double>(length);
    e.bound = static_cast<double>(bound);
    inst.edges.push_back(e);
  };

  switch (opt.shape) {
    case Options::Shape::Star:
      for (NodeId i = 1; i < opt.n; ++i) add_edge(0, i);
      break;
    case Options::Shape::Path:
      for (NodeId i = 1; i < opt.n; ++i) add_edge(i - 1, i);
      break;
    case Options::Shape::Tree:
      for (NodeId i = 1; i < opt.n; ++i) {
        add_edge(static_cast<NodeId>(rng.range(0, i - 1)), i);
      }
      break;
  }
  return inst;
}

}  // namespace upcover::gen
