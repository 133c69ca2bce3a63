#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "cqc/errors.hpp"
#include "cqc/rng.hpp"

namespace cqc {

// Simple graph (no self-loops, no multi-edges) over vertices [0, n).
// Adjacency is kept as packed bit-rows: adj(u, v) means an edge u -> v;
// for undirected graphs the matrix is symmetric by construction.
class Graph {
  public:
    Graph() = default;
    Graph(int n, bool directed);

    int n() const { return n_; }
    bool directed() const { return directed_; }

    bool adj(int u, int v) const {
        return (rows_[static_cast<std::size_t>(u) * words_ + static_cast<std::size_t>(v >> 6)] >>
                (v & 63)) & 1ULL;
    }

    // Rejects self-loops, out-of-range endpoints and duplicate edges.
    void add_edge(int u, int v);
    bool has_edge(int u, int v) const { return adj(u, v); }

    std::size_t edge_count() const { return edges_; }

    // Raw bit-row access for the linear-algebra oracles.
    const std::uint64_t* row(int u) const { return rows_.data() + static_cast<std::size_t>(u) * words_; }
    int row_words() const { return static_cast<int>(words_); }

    std::vector<int> out_neighbors(int u) const;
    std::vector<int> in_neighbors(int u) const;

    bool operator==(const Graph& other) const = default;

  private:
    int n_ = 0;
    bool directed_ = false;
    std::size_t words_ = 0;
    std::size_t edges_ = 0;
    std::vector<std::uint64_t> rows_;
};

// --- generators ------------------------------------------------------------

Graph gen_complete(int n);
Graph gen_cycle(int n, bool directed);
Graph gen_erdos_renyi(int n, double edge_prob, bool directed, std::uint64_t seed);
// `count` vertex-disjoint h-cycles on the first count*h vertices, so the
// instance has t >= count and x >= count*h.
Graph gen_planted_disjoint_cycles(int n, int count, int h, bool directed, std::uint64_t seed);
// K_{clique_size} on a random vertex subset; the rest stays isolated.
Graph gen_planted_clique(int n, int clique_size, std::uint64_t seed);
// Cycle-free families used by the detectors' one-sided-error tests.
Graph gen_tree(int n, std::uint64_t seed);
Graph gen_bipartite(int n, double edge_prob, std::uint64_t seed);
Graph gen_dag(int n, double edge_prob, std::uint64_t seed);

struct GenSpec {
    std::string kind; // complete|cycle|erdos_renyi|planted_disjoint_cycles|planted_clique|tree|bipartite|dag
    int n = 0;
    bool directed = false;
    double edge_prob = 0.5;
    int count = 1;
    int h = 3;
    int clique_size = 3;
};

Graph generate(const GenSpec& spec, std::uint64_t seed);

// --- edge-list text format ---------------------------------------------------
// First line: "<n> directed|undirected", then one "u v" pair per line.
// The reader rejects out-of-range endpoints, self-loops and duplicates.

void write_edge_list(const Graph& g, std::ostream& out);
Graph read_edge_list(std::istream& in);
void save_graph(const Graph& g, const std::string& path);
Graph load_graph(const std::string& path);

} // namespace cqc
