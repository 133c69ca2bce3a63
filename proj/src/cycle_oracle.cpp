#include "cqc/cycle_oracle.hpp"

#include <cmath>

namespace cqc {

namespace {

struct Enumerator {
    const Graph& g;
    int h;
    unsigned long long steps = 0;
    unsigned long long max_steps;
    unsigned long long count = 0;
    std::vector<char> on_cycle;
    std::vector<int> path;
    std::vector<char> used;

    Enumerator(const Graph& g, int h, const OracleBudget& b)
        : g(g), h(h), max_steps(b.max_steps), on_cycle(g.n(), 0), used(g.n(), 0) {
        if (h < 3 || h > b.max_h) throw oracle_limit_error("oracle limit: h outside [3, max_h]");
        if (g.n() > b.max_n) throw oracle_limit_error("oracle limit: n exceeds budget");
        path.reserve(h);
    }

    void bump() {
        if (++steps > max_steps) throw oracle_limit_error("oracle limit: step budget exceeded");
    }

    // Paths are anchored at the cycle's smallest vertex, so every cycle is
    // found exactly once per orientation; undirected orientation is fixed by
    // requiring path[1] < path[h-1].
    void extend(int anchor) {
        int u = path.back();
        if (static_cast<int>(path.size()) == h) {
            bump();
            if (g.adj(u, anchor) && (g.directed() || path[1] < path[h - 1])) {
                ++count;
                for (int w : path) on_cycle[w] = 1;
            }
            return;
        }
        for (int v = anchor + 1; v < g.n(); ++v) {
            if (used[v] || !g.adj(u, v)) continue;
            bump();
            used[v] = 1;
            path.push_back(v);
            extend(anchor);
            path.pop_back();
            used[v] = 0;
        }
    }

    void run() {
        for (int a = 0; a < g.n(); ++a) {
            path.assign(1, a);
            used[a] = 1;
            extend(a);
            used[a] = 0;
        }
    }
};

} // namespace

unsigned long long count_h_cycles(const Graph& g, int h, const OracleBudget& budget) {
    Enumerator e(g, h, budget);
    e.run();
    return e.count;
}

std::vector<int> cycle_participants(const Graph& g, int h, const OracleBudget& budget) {
    Enumerator e(g, h, budget);
    e.run();
    std::vector<int> out;
    for (int v = 0; v < g.n(); ++v)
        if (e.on_cycle[v]) out.push_back(v);
    return out;
}

CycleStats cycle_stats(const Graph& g, int h, const OracleBudget& budget) {
    Enumerator e(g, h, budget);
    e.run();
    CycleStats st;
    st.h = h;
    st.t = e.count;
    for (int v = 0; v < g.n(); ++v) st.x += e.on_cycle[v];
    if (st.t > 0) st.delta = compute_delta(h, st.t, st.x, g.directed());
    return st;
}

double compute_delta(int h, unsigned long long t, int x, bool directed) {
    if (t == 0) throw param_error("no cycles: delta is undefined for t = 0");
    // x = 1 cannot happen for h >= 3: a cycle has h distinct participants.
    double tuples = (directed ? 1.0 : 2.0) * static_cast<double>(h) * static_cast<double>(t);
    return static_cast<double>(h) - std::log(tuples) / std::log(static_cast<double>(x));
}

double compute_delta(const Graph& g, int h, const OracleBudget& budget) {
    CycleStats st = cycle_stats(g, h, budget);
    if (!st.delta) throw param_error("no cycles: delta is undefined for t = 0");
    return *st.delta;
}

TupleProbability tuple_cycle_probability(const Graph& g, int h, double max_tuples,
                                         const OracleBudget& budget) {
    std::vector<int> part = cycle_participants(g, h, budget);
    const int x = static_cast<int>(part.size());
    if (x == 0) throw param_error("no cycles: tuple probability undefined for t = 0");
    double total = std::pow(static_cast<double>(x), h);
    if (total > max_tuples) throw oracle_limit_error("oracle limit: x^h exceeds tuple budget");

    // Count ordered tuples (v_1..v_h) of participants with all v_i distinct
    // and every (v_i, v_{i+1 mod h}) an edge. Adjacency pruning keeps this far
    // below x^h expansions on sparse instances.
    unsigned long long favorable = 0;
    std::vector<int> tup;
    tup.reserve(h);
    std::vector<char> used(g.n(), 0);
    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(tup.size()) == h) {
            if (g.adj(tup.back(), tup.front())) ++favorable;
            return;
        }
        for (int v : part) {
            if (used[v]) continue;
            if (!tup.empty() && !g.adj(tup.back(), v)) continue;
            used[v] = 1;
            tup.push_back(v);
            self(self);
            tup.pop_back();
            used[v] = 0;
        }
    };
    rec(rec);

    TupleProbability out;
    out.favorable = favorable;
    out.total = total;
    out.probability = static_cast<double>(favorable) / total;
    return out;
}

} // namespace cqc
