#pragma once

#include <cstdint>
#include <string>

#include "upcover/types.hpp"

namespace upcover::gen {

struct Options {
  enum class Shape { Star, Path, Tree };
  Shape shape = Shape::Tree;
  int n = 7;
  std::uint64_t seed = 1;
  int p = 1;

  long long length_max = 5;
  long long cost_max = 3;
  long long weight_max = 9;
  long long radius_max = 4;
  long long budget_max = 5;
  /// Fixed values override the _max draws when positive.
  long long radius = 0;
  long long budget = 0;
  bool uniform_weights = false;
  /// Take the largest feasible bound on every edge instead of drawing one.
  bool tight_bounds = false;
};

Options::Shape shape_from_name(const std::string& name);

/// Deterministic valid integer instance satisfying both normalization
/// assumptions (ℓ-u <= R and c·u <= B). Identical options give identical
/// instances. Throws ValidationError on infeasible option combinations.
Instance generate(const Options& opt);

}  // namespace upcover::gen
