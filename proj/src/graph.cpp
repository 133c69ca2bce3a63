#include "cqc/graph.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

namespace cqc {

Graph::Graph(int n, bool directed) : n_(n), directed_(directed) {
    if (n < 1) throw param_error("graph needs n >= 1");
    words_ = static_cast<std::size_t>((n + 63) / 64);
    rows_.assign(static_cast<std::size_t>(n) * words_, 0);
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw param_error("edge endpoint out of range");
    if (u == v) throw param_error("self-loops are not allowed");
    if (adj(u, v)) throw param_error("duplicate edge");
    auto set = [&](int a, int b) {
        rows_[static_cast<std::size_t>(a) * words_ + static_cast<std::size_t>(b >> 6)] |=
            1ULL << (b & 63);
    };
    set(u, v);
    if (!directed_) set(v, u);
    ++edges_;
}

std::vector<int> Graph::out_neighbors(int u) const {
    std::vector<int> out;
    for (int v = 0; v < n_; ++v)
        if (adj(u, v)) out.push_back(v);
    return out;
}

std::vector<int> Graph::in_neighbors(int u) const {
    std::vector<int> in;
    for (int v = 0; v < n_; ++v)
        if (adj(v, u)) in.push_back(v);
    return in;
}

Graph gen_complete(int n) {
    Graph g(n, false);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph gen_cycle(int n, bool directed) {
    if (n < 3) throw param_error("cycle needs n >= 3");
    Graph g(n, directed);
    for (int u = 0; u < n; ++u) g.add_edge(u, (u + 1) % n);
    return g;
}

Graph gen_erdos_renyi(int n, double edge_prob, bool directed, std::uint64_t seed) {
    if (edge_prob < 0.0 || edge_prob > 1.0) throw param_error("edge_prob outside [0,1]");
    Graph g(n, directed);
    Rng rng = Rng::seeded(seed, 1);
    for (int u = 0; u < n; ++u) {
        for (int v = directed ? 0 : u + 1; v < n; ++v) {
            if (u == v) continue;
            if (rng.bernoulli(edge_prob)) g.add_edge(u, v);
        }
    }
    return g;
}

Graph gen_planted_disjoint_cycles(int n, int count, int h, bool directed, std::uint64_t seed) {
    if (h < 3) throw param_error("cycle length must be at least 3");
    if (count < 1 || static_cast<long>(count) * h > n)
        throw param_error("planted cycles do not fit: count*h > n");
    Graph g(n, directed);
    Rng rng = Rng::seeded(seed, 2);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.below_int(i + 1)]);
    for (int c = 0; c < count; ++c) {
        for (int j = 0; j < h; ++j) {
            int u = perm[c * h + j];
            int v = perm[c * h + (j + 1) % h];
            g.add_edge(u, v);
        }
    }
    return g;
}

Graph gen_planted_clique(int n, int clique_size, std::uint64_t seed) {
    if (clique_size < 1 || clique_size > n) throw param_error("clique_size outside [1,n]");
    Graph g(n, false);
    Rng rng = Rng::seeded(seed, 3);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.below_int(i + 1)]);
    for (int i = 0; i < clique_size; ++i)
        for (int j = i + 1; j < clique_size; ++j) g.add_edge(perm[i], perm[j]);
    return g;
}

Graph gen_tree(int n, std::uint64_t seed) {
    Graph g(n, false);
    Rng rng = Rng::seeded(seed, 4);
    for (int v = 1; v < n; ++v) g.add_edge(v, rng.below_int(v));
    return g;
}

Graph gen_bipartite(int n, double edge_prob, std::uint64_t seed) {
    Graph g(n, false);
    Rng rng = Rng::seeded(seed, 5);
    int half = n / 2;
    for (int u = 0; u < half; ++u)
        for (int v = half; v < n; ++v)
            if (rng.bernoulli(edge_prob)) g.add_edge(u, v);
    return g;
}

Graph gen_dag(int n, double edge_prob, std::uint64_t seed) {
    Graph g(n, true);
    Rng rng = Rng::seeded(seed, 6);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.bernoulli(edge_prob)) g.add_edge(u, v);
    return g;
}

Graph generate(const GenSpec& spec, std::uint64_t seed) {
    if (spec.kind == "complete") return gen_complete(spec.n);
    if (spec.kind == "cycle") return gen_cycle(spec.n, spec.directed);
    if (spec.kind == "erdos_renyi") return gen_erdos_renyi(spec.n, spec.edge_prob, spec.directed, seed);
    if (spec.kind == "planted_disjoint_cycles")
        return gen_planted_disjoint_cycles(spec.n, spec.count, spec.h, spec.directed, seed);
    if (spec.kind == "planted_clique") return gen_planted_clique(spec.n, spec.clique_size, seed);
    if (spec.kind == "tree") return gen_tree(spec.n, seed);
    if (spec.kind == "bipartite") return gen_bipartite(spec.n, spec.edge_prob, seed);
    if (spec.kind == "dag") return gen_dag(spec.n, spec.edge_prob, seed);
    throw param_error("unknown generator kind: " + spec.kind);
}

void write_edge_list(const Graph& g, std::ostream& out) {
    out << g.n() << ' ' << (g.directed() ? "directed" : "undirected") << '\n';
    for (int u = 0; u < g.n(); ++u) {
        int from = g.directed() ? 0 : u + 1;
        for (int v = from; v < g.n(); ++v) {
            if (u != v && g.adj(u, v)) out << u << ' ' << v << '\n';
        }
    }
}

Graph read_edge_list(std::istream& in) {
    std::string header;
    if (!std::getline(in, header)) throw param_error("empty edge-list input");
    std::istringstream hs(header);
    int n = 0;
    std::string mode;
    if (!(hs >> n >> mode) || (mode != "directed" && mode != "undirected"))
        throw param_error("bad edge-list header, expected '<n> directed|undirected'");
    Graph g(n, mode == "directed");
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        int u, v;
        if (!(ls >> u >> v)) throw param_error("bad edge line: " + line);
        g.add_edge(u, v); // range/duplicate/self-loop checks live in add_edge
    }
    return g;
}

void save_graph(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw error("cannot open for writing: " + path);
    write_edge_list(g, out);
}

Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open for reading: " + path);
    return read_edge_list(in);
}

} // namespace cqc
