#include "upcover/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "upcover/errors.hpp"
#include "upcover/model.hpp"

namespace upcover::io {

namespace {

/// Whitespace tokenizer over the whole stream with '#' line comments.
class Tokens {
 public:
  explicit Tokens(std::istream& in) {
    std::string line;
    while (std::getline(in, line)) {
      auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      std::istringstream ls(line);
      std::string tok;
      while (ls >> tok) toks_.push_back(tok);
    }
  }

  std::string next(const char* what) {
    if (pos_ >= toks_.size()) {
      throw ValidationError(std::string("unexpected end of input, expected ") + what);
    }
    return toks_[pos_++];
  }

  double number(const char* what) {
    std::string t = next(what);
    double v = 0;
    auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc{} || p != t.data() + t.size()) {
      throw ValidationError(std::string("expected number for ") + what + ", got '" + t + "'");
    }
    return v;
  }

  long long integer(const char* what) {
    std::string t = next(what);
    long long v = 0;
    auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc{} || p != t.data() + t.size()) {
      throw ValidationError(std::string("expected integer for ") + what + ", got '" + t + "'");
    }
    return v;
  }

  bool done() const { return pos_ >= toks_.size(); }
  std::string peek() const { return pos_ < toks_.size() ? toks_[pos_] : std::string(); }
  void skip() { ++pos_; }

 private:
  std::vector<std::string> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string format_number(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

Instance read_instance(std::istream& in) {
  Tokens t(in);
  if (t.next("magic") != "upmclp") throw ValidationError("bad magic, expected 'upmclp'");
  if (t.integer("format version") != 1) throw ValidationError("unsupported format version");

  Instance inst;
  long long n = t.integer("node count");
  long long m = t.integer("edge count");
  if (n < 1 || m < 0) throw ValidationError("bad node/edge counts");
  inst.facilities = static_cast<int>(t.integer("facility count"));
  inst.radius = t.number("radius");
  inst.budget = t.number("budget");
  inst.integer_params = t.integer("integer flag") != 0;

  inst.weights.assign(n, 0.0);
  std::vector<char> have(n, 0);
  for (long long i = 0; i < n; ++i) {
    long long id = t.integer("node id");
    if (id < 0 || id >= n) throw ValidationError("node id out of range: " + std::to_string(id));
    if (have[id]) throw ValidationError("duplicate node id: " + std::to_string(id));
    have[id] = 1;
    inst.weights[id] = t.number("node weight");
  }
  for (long long e = 0; e < m; ++e) {
    Edge ed;
    ed.a = static_cast<NodeId>(t.integer("edge endpoint"));
    ed.b = static_cast<NodeId>(t.integer("edge endpoint"));
    ed.length = t.number("edge length");
    ed.bound = t.number("edge bound");
    ed.cost = t.number("edge cost");
    inst.edges.push_back(ed);
  }
  if (!t.done()) throw ValidationError("trailing tokens after instance data: '" + t.peek() + "'");
  return inst;
}

Instance read_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open instance file: " + path);
  return read_instance(in);
}

void write_instance(std::ostream& out, const Instance& inst) {
  out << "upmclp 1\n";
  out << inst.node_count() << ' ' << inst.edge_count() << ' ' << inst.facilities << ' '
      << format_number(inst.radius) << ' ' << format_number(inst.budget) << ' '
      << (inst.integer_params ? 1 : 0) << '\n';
  for (int i = 0; i < inst.node_count(); ++i) {
    out << i << ' ' << format_number(inst.weights[i]) << '\n';
  }
  for (const Edge& e : inst.edges) {
    out << e.a << ' ' << e.b << ' ' << format_number(e.length) << ' ' << format_number(e.bound)
        << ' ' << format_number(e.cost) << '\n';
  }
}

std::string instance_to_string(const Instance& inst) {
  std::ostringstream os;
  write_instance(os, inst);
  return os.str();
}

Solution read_solution(std::istream& in, const Instance& inst) {
  Tokens t(in);
  Solution sol;
  sol.value = t.number("solution value");
  if (t.next("facilities keyword") != "facilities:") {
    throw ValidationError("expected 'facilities:' line");
  }
  while (!t.done() && t.peek() != "upgrade") {
    long long id = t.integer("facility id");
    if (id < 0 || id >= inst.node_count()) throw ValidationError("facility id out of range");
    sol.facilities.push_back(static_cast<NodeId>(id));
  }
  while (!t.done()) {
    if (t.next("upgrade keyword") != "upgrade") throw ValidationError("expected 'upgrade' line");
    NodeId a = static_cast<NodeId>(t.integer("upgrade endpoint"));
    NodeId b = static_cast<NodeId>(t.integer("upgrade endpoint"));
    double delta = t.number("upgrade delta");
    int edge = -1;
    for (int e = 0; e < inst.edge_count(); ++e) {
      const Edge& ed = inst.edges[e];
      if ((ed.a == a && ed.b == b) || (ed.a == b && ed.b == a)) {
        edge = e;
        break;
      }
    }
    if (edge < 0) {
      throw ValidationError("upgrade names a non-existent edge (" + std::to_string(a) + "," +
                            std::to_string(b) + ")");
    }
    sol.plan.set(inst, edge, delta);
  }
  // The file stores facilities, plan, and the claimed value; recompute the
  // covered set (callers compare the claimed value against it).
  std::sort(sol.facilities.begin(), sol.facilities.end());
  if (!sol.facilities.empty()) {
    sol.covered = coverage(inst, sol.facilities, sol.plan).first;
  }
  return sol;
}

void write_solution(std::ostream& out, const Instance& inst, const Solution& sol) {
  out << format_number(sol.value) << '\n';
  out << "facilities:";
  for (NodeId f : sol.facilities) out << ' ' << f;
  out << '\n';
  for (int e = 0; e < static_cast<int>(sol.plan.delta.size()); ++e) {
    if (sol.plan.delta[e] != 0.0) {
      out << "upgrade " << inst.edges[e].a << ' ' << inst.edges[e].b << ' '
          << format_number(sol.plan.delta[e]) << '\n';
    }
  }
}

std::string solution_to_string(const Instance& inst, const Solution& sol) {
  std::ostringstream os;
  write_solution(os, inst, sol);
  return os.str();
}

reductions::KnapsackInstance read_knapsack(std::istream& in) {
  Tokens t(in);
  reductions::KnapsackInstance ks;
  long long n = t.integer("item count");
  if (n < 0) throw ValidationError("negative item count");
  ks.capacity = t.integer("capacity");
  ks.target = t.integer("target");
  for (long long i = 0; i < n; ++i) {
    reductions::KnapsackInstance::Item item;
    item.weight = t.integer("item weight");
    item.value = t.integer("item value");
    ks.items.push_back(item);
  }
  if (!t.done()) throw ValidationError("trailing tokens after knapsack data");
  return ks;
}

reductions::KnapsackInstance read_knapsack_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open knapsack file: " + path);
  return read_knapsack(in);
}

void write_knapsack(std::ostream& out, const reductions::KnapsackInstance& ks) {
  out << ks.items.size() << ' ' << ks.capacity << ' ' << ks.target << '\n';
  for (const auto& item : ks.items) {
    out << item.weight << ' ' << item.value << '\n';
  }
}

}  // namespace upcover::io
