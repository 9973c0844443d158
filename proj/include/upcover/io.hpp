#pragma once

#include <iosfwd>
#include <string>

#include "upcover/reductions.hpp"
#include "upcover/types.hpp"

namespace upcover::io {

/// Shortest decimal that round-trips the value ("7" for 7.0).
std::string format_number(double x);

/// Instance text format (whitespace-separated, '#' starts a comment):
///   upmclp 1
///   n m p R B I
///   n lines: id weight
///   m lines: i j length bound cost
Instance read_instance(std::istream& in);
Instance read_instance_file(const std::string& path);
void write_instance(std::ostream& out, const Instance& inst);
std::string instance_to_string(const Instance& inst);

/// Solution text format: value line, `facilities: id...`, then one
/// `upgrade i j delta` line per nonzero reduction.
Solution read_solution(std::istream& in, const Instance& inst);
void write_solution(std::ostream& out, const Instance& inst, const Solution& sol);
std::string solution_to_string(const Instance& inst, const Solution& sol);

/// Knapsack text format: `n K U`, then n lines `g_i b_i`.
reductions::KnapsackInstance read_knapsack(std::istream& in);
reductions::KnapsackInstance read_knapsack_file(const std::string& path);
void write_knapsack(std::ostream& out, const reductions::KnapsackInstance& ks);

}  // namespace upcover::io
