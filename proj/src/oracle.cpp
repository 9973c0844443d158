#include "upcover/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "upcover/errors.hpp"
#include "upcover/model.hpp"

namespace upcover::oracle {

namespace {

constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

struct Scaled {
  // All values in units of 1/den; reductions advance in multiples of num.
  std::vector<std::int64_t> length;  // ℓ_e · den
  std::vector<std::int64_t> cost;    // c_e (budget units per length unit)
  std::vector<std::int64_t> kmax;    // ⌊u_e · den / num⌋
  std::vector<std::int64_t> weight;
  std::int64_t radius = 0;  // R · den
  std::int64_t budget = 0;  // B · den
  std::int64_t num = 1;
};

Scaled scale_instance(const Instance& inst, GridSpec grid) {
  if (!inst.integer_params) {
    throw NonIntegerInstance("oracle enumeration requires integer parameters");
  }
  if (grid.num <= 0 || grid.den <= 0) throw std::invalid_argument("grid step must be positive");
  Scaled s;
  s.num = grid.num;
  s.radius = static_cast<std::int64_t>(inst.radius) * grid.den;
  s.budget = static_cast<std::int64_t>(inst.budget) * grid.den;
  for (const Edge& e : inst.edges) {
    s.length.push_back(static_cast<std::int64_t>(e.length) * grid.den);
    s.cost.push_back(static_cast<std::int64_t>(e.cost));
    s.kmax.push_back(static_cast<std::int64_t>(e.bound) * grid.den / grid.num);
  }
  for (double w : inst.weights) s.weight.push_back(static_cast<std::int64_t>(w));
  return s;
}

double binomial(int n, int p) {
  double r = 1.0;
  for (int i = 1; i <= p; ++i) r = r * (n - p + i) / i;
  return r;
}

class Enumerator {
public:
  Enumerator(const Instance& inst, const Scaled& s, int p)
      : inst_(inst), s_(s), p_(p), n_(inst.node_count()), m_(inst.edge_count()) {
    k_.assign(m_, 0);
    dist_.assign(n_ * n_, 0);
  }

  void run() {
    std::vector<int> facilities(p_);
    std::iota(facilities.begin(), facilities.end(), 0);
    while (true) {
      facilities_ = &facilities;
      enumerate_plans(0, s_.budget);
      // Next lexicographic p-combination of {0..n-1}.
      int i = p_ - 1;
      while (i >= 0 && facilities[i] == n_ - p_ + i) --i;
      if (i < 0) break;
      ++facilities[i];
      for (int j = i + 1; j < p_; ++j) facilities[j] = facilities[j - 1] + 1;
    }
  }

  bool found() const { return best_value_ >= 0; }
  std::int64_t best_value() const { return best_value_; }
  const std::vector<int>& best_facilities() const { return best_facilities_; }
  const std::vector<std::int64_t>& best_plan() const { return best_k_; }

private:
  void enumerate_plans(int e, std::int64_t budget_left) {
    if (e == m_) {
      evaluate();
      return;
    }
    std::int64_t cap = std::min(s_.kmax[e], budget_left / (s_.cost[e] * s_.num));
    for (std::int64_t k = 0; k <= cap; ++k) {
      k_[e] = k;
      enumerate_plans(e + 1, budget_left - k * s_.cost[e] * s_.num);
    }
    k_[e] = 0;
  }

  void evaluate() {
    // All-pairs shortest paths on the reduced lengths.
    std::fill(dist_.begin(), dist_.end(), kInf);
    for (int v = 0; v < n_; ++v) dist_[v * n_ + v] = 0;
    for (int e = 0; e < m_; ++e) {
      std::int64_t len = s_.length[e] - k_[e] * s_.num;
      int a = inst_.edges[e].a, b = inst_.edges[e].b;
      dist_[a * n_ + b] = std::min(dist_[a * n_ + b], len);
      dist_[b * n_ + a] = std::min(dist_[b * n_ + a], len);
    }
    for (int via = 0; via < n_; ++via)
      for (int i = 0; i < n_; ++i) {
        std::int64_t div = dist_[i * n_ + via];
        if (div == kInf) continue;
        for (int j = 0; j < n_; ++j) {
          std::int64_t cand = div + dist_[via * n_ + j];
          if (cand < dist_[i * n_ + j]) dist_[i * n_ + j] = cand;
        }
      }

    std::int64_t value = 0;
    for (int v = 0; v < n_; ++v) {
      for (int f : *facilities_) {
        if (dist_[f * n_ + v] <= s_.radius) {
          value += s_.weight[v];
          break;
        }
      }
    }
    if (value > best_value_) {
      best_value_ = value;
      best_facilities_ = *facilities_;
      best_k_ = k_;
    }
  }

  const Instance& inst_;
  const Scaled& s_;
  int p_, n_, m_;
  const std::vector<int>* facilities_ = nullptr;
  std::vector<std::int64_t> k_;
  std::vector<std::int64_t> dist_;
  std::int64_t best_value_ = -1;
  std::vector<int> best_facilities_;
  std::vector<std::int64_t> best_k_;
};

}  // namespace

Solution solve_exact(const Instance& inst, int p, GridSpec grid, const Options& opt) {
  if (p < 1) throw std::invalid_argument("facility count must be >= 1");
  if (p > inst.node_count()) {
    throw ApplicabilityError("oracle: p exceeds node count");
  }
  Scaled s = scale_instance(inst, grid);

  double work = binomial(inst.node_count(), p);
  for (std::int64_t km : s.kmax) {
    work *= static_cast<double>(km + 1);
    if (work > 1e300) break;
  }
  if (work > opt.work_bound) {
    throw WorkBoundExceeded("oracle work estimate " + std::to_string(work) +
                            " exceeds bound " + std::to_string(opt.work_bound));
  }

  Enumerator en(inst, s, p);
  en.run();

  UpgradePlan plan;
  plan.delta.assign(inst.edge_count(), 0.0);
  for (int e = 0; e < inst.edge_count(); ++e) {
    plan.delta[e] = static_cast<double>(en.best_plan()[e] * grid.num) / static_cast<double>(grid.den);
  }
  std::vector<NodeId> facilities(en.best_facilities().begin(), en.best_facilities().end());
  return finalize_solution(inst, std::move(facilities), std::move(plan));
}

bool decide(const Instance& inst, int p, double threshold, GridSpec grid, const Options& opt) {
  return solve_exact(inst, p, grid, opt).value >= threshold - kCoverEps;
}

}  // namespace upcover::oracle
