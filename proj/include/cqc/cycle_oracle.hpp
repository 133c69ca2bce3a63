#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cqc/graph.hpp"

namespace cqc {

// Exact instance statistics for a fixed cycle length h:
//   t     number of h-cycles (undirected cycles counted once per vertex+edge set,
//         directed cycles once per cyclic sequence)
//   x     number of vertices lying on at least one h-cycle
//   delta exponent solving x^(h-delta) = 2h*t (undirected) / h*t (directed);
//         absent when t = 0
struct CycleStats {
    int h = 0;
    unsigned long long t = 0;
    int x = 0;
    std::optional<double> delta;
};

struct OracleBudget {
    int max_n = 1024;
    int max_h = 8;
    // DFS expansions before the enumeration gives up loudly.
    unsigned long long max_steps = 2'000'000'000ULL;
};

// Exact number of h-cycles by anchored DFS enumeration.
unsigned long long count_h_cycles(const Graph& g, int h, const OracleBudget& budget = {});

// The set of vertices participating in at least one h-cycle.
std::vector<int> cycle_participants(const Graph& g, int h, const OracleBudget& budget = {});

CycleStats cycle_stats(const Graph& g, int h, const OracleBudget& budget = {});

// delta from already-known (t, x); throws on t = 0.
double compute_delta(int h, unsigned long long t, int x, bool directed);
double compute_delta(const Graph& g, int h, const OracleBudget& budget = {});

// Exact probability that h vertices drawn uniformly with replacement from the
// participant set form an h-cycle, via full tuple enumeration over the
// participant set (budget: x^h tuples, capped).
struct TupleProbability {
    unsigned long long favorable = 0; // ordered h-tuples forming a cycle
    double total = 0.0;               // x^h
    double probability = 0.0;
};
TupleProbability tuple_cycle_probability(const Graph& g, int h, double max_tuples = 1e9,
                                         const OracleBudget& budget = {});

} // namespace cqc
