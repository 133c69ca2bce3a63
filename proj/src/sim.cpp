#include "cqc/sim.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <ostream>
#include <sstream>

namespace cqc {

long SimConfig::default_bandwidth(int n, int c) {
    int lg = 1;
    while ((1 << lg) < n) ++lg;
    return static_cast<long>(c) * lg;
}

SimConfig SimConfig::make(int n, int bandwidth_c, int entry_bits) {
    if (n < 1) throw param_error("simulator needs n >= 1");
    SimConfig cfg;
    cfg.n = n;
    cfg.bandwidth_bits = default_bandwidth(n, bandwidth_c);
    if (entry_bits <= 0) {
        entry_bits = 1;
        while ((1LL << entry_bits) < n + 1) ++entry_bits;
    }
    cfg.entry_bits = entry_bits;
    return cfg;
}

void RoundLedger::push_round(long cap, std::vector<Row> rows) {
    for (const Row& r : rows) {
        if (r.bits > cap) throw bandwidth_error(rounds(), r.src, r.dst, r.bits, cap);
        sent_[r.src] += r.bits;
        recv_[r.dst] += r.bits;
        total_bits_ += r.bits;
        max_pair_load_ = std::max(max_pair_load_, r.bits);
    }
    per_round_.push_back({cap, std::move(rows)});
}

void RoundLedger::audit() const {
    for (int r = 0; r < rounds(); ++r) {
        std::map<std::pair<int, int>, long> pair_bits;
        for (const Row& row : per_round_[r].rows) pair_bits[{row.src, row.dst}] += row.bits;
        for (const auto& [pair, bits] : pair_bits) {
            if (bits > per_round_[r].cap)
                throw bandwidth_error(r, pair.first, pair.second, bits, per_round_[r].cap);
        }
    }
}

void RoundLedger::write_csv(std::ostream& out) const {
    out << "round,sender,receiver,bits\n";
    for (int r = 0; r < rounds(); ++r)
        for (const Row& row : per_round_[r].rows)
            out << r << ',' << row.src << ',' << row.dst << ',' << row.bits << '\n';
}

std::string RoundLedger::summary_json() const {
    std::ostringstream out;
    out << "{\"rounds\":" << rounds() << ",\"max_pair_load\":" << max_pair_load_
        << ",\"total_bits\":" << total_bits_ << ",\"per_node\":[";
    for (int v = 0; v < n_; ++v) {
        if (v) out << ',';
        out << "{\"sent\":" << sent_[v] << ",\"received\":" << recv_[v] << '}';
    }
    out << "]}";
    return out.str();
}

void Exchange::send(int src, int dst, std::vector<std::int64_t> payload, long bits, int tag) {
    if (bits < 0) throw param_error("negative message size");
    items_.push_back({src, dst, std::move(payload), bits, tag});
}

void Exchange::send_entries(int src, int dst, std::vector<std::int64_t> entries,
                            int bits_per_entry, int tag) {
    long bits = static_cast<long>(entries.size()) * bits_per_entry;
    send(src, dst, std::move(entries), bits, tag);
}

Deliveries Simulator::run_phase(Exchange ex, int bandwidth_multiplier) {
    const long cap = cfg_.bandwidth_bits * bandwidth_multiplier;
    Deliveries out(cfg_.n);
    if (ex.empty()) return out;

    // Aggregate per ordered pair. Keys are sorted so ledger rows and delivery
    // order are deterministic.
    std::map<std::pair<int, int>, long> load;
    for (const auto& it : ex.items()) {
        if (it.src < 0 || it.dst < 0 || it.src >= cfg_.n || it.dst >= cfg_.n)
            throw param_error("message endpoint outside [0, n)");
        if (it.src != it.dst) load[{it.src, it.dst}] += it.bits;
    }

    long phase_rounds = 0;
    for (const auto& [pair, bits] : load)
        phase_rounds = std::max(phase_rounds, (bits + cap - 1) / cap);

    std::map<std::pair<int, int>, long> remaining = load;
    for (long r = 0; r < phase_rounds; ++r) {
        std::vector<RoundLedger::Row> rows;
        rows.reserve(remaining.size());
        for (auto& [pair, rem] : remaining) {
            if (rem <= 0) continue;
            long move = std::min(rem, cap);
            rem -= move;
            rows.push_back({pair.first, pair.second, move});
        }
        ledger_.push_round(cap, std::move(rows));
    }

    // Deliver at the phase barrier, stably ordered by (src, queue order).
    std::stable_sort(ex.items().begin(), ex.items().end(),
                     [](const Exchange::Item& a, const Exchange::Item& b) { return a.src < b.src; });
    for (auto& it : ex.items()) out.box(it.dst).push_back(std::move(it));
    return out;
}

RunResult Simulator::run(std::vector<std::unique_ptr<NodeProgram>>& programs, int max_rounds) {
    if (static_cast<int>(programs.size()) != cfg_.n)
        throw param_error("program count must equal machine count");

    std::vector<std::vector<Message>> inboxes(cfg_.n), next(cfg_.n);
    int logical_round = 0;
    while (true) {
        bool all_done = true;
        for (auto& p : programs)
            if (!p->done()) all_done = false;
        if (all_done) break;
        if (logical_round >= max_rounds)
            throw timeout_error("simulation exceeded max_rounds = " + std::to_string(max_rounds));

        std::map<std::pair<int, int>, long> pair_bits;
        std::vector<RoundLedger::Row> rows;
        for (int v = 0; v < cfg_.n; ++v) {
            if (programs[v]->done()) continue;
            RoundCtx ctx(v, logical_round, inboxes[v]);
            programs[v]->on_round(ctx);
            for (auto& o : ctx.outbox()) {
                if (o.dst < 0 || o.dst >= cfg_.n) throw param_error("send destination out of range");
                long& acc = pair_bits[{v, o.dst}];
                acc += o.bits;
                if (acc > cfg_.bandwidth_bits)
                    throw bandwidth_error(logical_round, v, o.dst, acc, cfg_.bandwidth_bits);
                next[o.dst].push_back({v, std::move(o.payload), o.bits});
            }
        }
        for (const auto& [pair, bits] : pair_bits) rows.push_back({pair.first, pair.second, bits});
        if (!rows.empty()) ledger_.push_round(cfg_.bandwidth_bits, std::move(rows));
        for (int v = 0; v < cfg_.n; ++v) {
            inboxes[v] = std::move(next[v]);
            next[v].clear();
        }
        ++logical_round;
    }

    RunResult res;
    res.rounds = ledger_.rounds();
    for (auto& p : programs) res.outputs.push_back(p->output());
    return res;
}

std::pair<RunResult, RoundLedger> run(const SimConfig& cfg,
                                      std::vector<std::unique_ptr<NodeProgram>>& programs,
                                      int max_rounds) {
    Simulator sim(cfg);
    RunResult res = sim.run(programs, max_rounds);
    return {std::move(res), sim.ledger()};
}

namespace {

// Relay assignment for two-phase routing. Source-side striping guarantees the
// sender->relay quota; a repair pass then moves entries off overloaded
// relay->destination links (feasible within the quota by Koenig's theorem for
// every demand set we route, and cheap because striping is already close).
struct RelayPlan {
    // flat entry list: (src, dst, relay)
    std::vector<int> src, dst, relay;
};

RelayPlan assign_relays(const std::vector<Demand>& demands, int n) {
    RelayPlan plan;
    std::vector<long> send_load(n, 0), recv_load(n, 0);
    for (const auto& d : demands) {
        send_load[d.src] += static_cast<long>(d.entries.size());
        recv_load[d.dst] += static_cast<long>(d.entries.size());
    }
    long max_load = 0;
    for (int v = 0; v < n; ++v) max_load = std::max({max_load, send_load[v], recv_load[v]});
    const long quota = std::max<long>(1, (max_load + n - 1) / n);

    // Destination-sorted striping per source, staggered by source id.
    std::vector<std::vector<std::pair<int, int>>> by_src(n); // (dst, demand idx ordered)
    for (std::size_t i = 0; i < demands.size(); ++i)
        by_src[demands[i].src].push_back({demands[i].dst, static_cast<int>(i)});
    for (auto& v : by_src) std::sort(v.begin(), v.end());

    std::vector<std::vector<int>> p1(n, std::vector<int>(n, 0)), p2(n, std::vector<int>(n, 0));
    for (int u = 0; u < n; ++u) {
        long pos = 0;
        for (auto [dv, di] : by_src[u]) {
            for (std::size_t e = 0; e < demands[di].entries.size(); ++e) {
                int r = static_cast<int>((u + pos) % n);
                plan.src.push_back(u);
                plan.dst.push_back(dv);
                plan.relay.push_back(r);
                ++p1[u][r];
                ++p2[r][dv];
                ++pos;
            }
        }
    }

    // Repair relay->destination overloads.
    for (int pass = 0; pass < 4; ++pass) {
        bool moved = false;
        for (std::size_t e = 0; e < plan.relay.size(); ++e) {
            int u = plan.src[e], v = plan.dst[e], r = plan.relay[e];
            if (p2[r][v] <= quota) continue;
            for (int rp = 0; rp < n; ++rp) {
                if (rp == r || p2[rp][v] >= quota || p1[u][rp] >= quota) continue;
                --p1[u][r];
                --p2[r][v];
                ++p1[u][rp];
                ++p2[rp][v];
                plan.relay[e] = rp;
                moved = true;
                break;
            }
        }
        if (!moved) break;
    }
    return plan;
}

} // namespace

Deliveries lenzen_route(Simulator& sim, std::vector<Demand> demands, int bits_per_entry,
                        int bandwidth_multiplier) {
    const int n = sim.config().n;
    Deliveries out(n);
    // Local demands deliver for free; drop them from the routed set.
    std::vector<Demand> routed;
    for (auto& d : demands) {
        if (d.src < 0 || d.dst < 0 || d.src >= n || d.dst >= n)
            throw param_error("demand endpoint outside [0, n)");
        if (d.src == d.dst)
            out.box(d.dst).push_back({d.src, d.dst, std::move(d.entries),
                                      static_cast<long>(d.entries.size()) * bits_per_entry, 0});
        else
            routed.push_back(std::move(d));
    }
    if (routed.empty()) return out;

    RelayPlan plan = assign_relays(routed, n);

    // Phase 1: source -> relay. Payload entries are accompanied by their final
    // destination so relays can forward without extra coordination (the
    // pattern is fixed and self-describing, so headers carry no charged bits).
    Exchange up;
    struct Hop {
        int dst;
        std::int64_t value;
    };
    std::vector<std::vector<std::vector<Hop>>> relay_buf(n,
                                                         std::vector<std::vector<Hop>>(n));
    // Reconstruct per-entry values in the same order assign_relays flattened.
    {
        std::vector<std::vector<std::pair<int, int>>> by_src(n);
        for (std::size_t i = 0; i < routed.size(); ++i)
            by_src[routed[i].src].push_back({routed[i].dst, static_cast<int>(i)});
        for (auto& v : by_src) std::sort(v.begin(), v.end());
        std::size_t flat = 0;
        for (int u = 0; u < n; ++u) {
            for (auto [dv, di] : by_src[u]) {
                for (std::int64_t value : routed[di].entries) {
                    int r = plan.relay[flat];
                    relay_buf[r][u].push_back({dv, value});
                    ++flat;
                }
            }
        }
    }
    for (int r = 0; r < n; ++r) {
        for (int u = 0; u < n; ++u) {
            if (relay_buf[r][u].empty()) continue;
            std::vector<std::int64_t> payload;
            payload.reserve(relay_buf[r][u].size());
            for (const Hop& h : relay_buf[r][u]) payload.push_back(h.value);
            up.send_entries(u, r, std::move(payload), bits_per_entry);
        }
    }
    sim.run_phase(std::move(up), bandwidth_multiplier);

    // Phase 2: relay -> destination.
    Exchange down;
    for (int r = 0; r < n; ++r) {
        std::vector<std::vector<std::int64_t>> to_dst(n);
        for (int u = 0; u < n; ++u)
            for (const Hop& h : relay_buf[r][u]) to_dst[h.dst].push_back(h.value);
        for (int v = 0; v < n; ++v)
            if (!to_dst[v].empty()) down.send_entries(r, v, std::move(to_dst[v]), bits_per_entry);
    }
    Deliveries delivered = sim.run_phase(std::move(down), bandwidth_multiplier);

    for (int v = 0; v < n; ++v)
        for (auto& item : delivered.box(v)) out.box(v).push_back(std::move(item));
    return out;
}

std::vector<std::int64_t> broadcast(Simulator& sim, int source, std::vector<std::int64_t> payload,
                                    int bits_per_entry) {
    const int n = sim.config().n;
    const long bw = sim.config().bandwidth_bits;
    if (payload.empty()) return payload;
    const long total_bits = static_cast<long>(payload.size()) * bits_per_entry;

    if (total_bits <= bw || n == 1) {
        Exchange ex;
        for (int v = 0; v < n; ++v)
            if (v != source) ex.send_entries(source, v, payload, bits_per_entry);
        sim.run_phase(std::move(ex));
        return payload;
    }

    // Scatter slices round-robin, then all-gather.
    std::vector<std::vector<std::int64_t>> slice(n);
    for (std::size_t i = 0; i < payload.size(); ++i)
        slice[i % n].push_back(payload[i]);
    Exchange scatter;
    for (int v = 0; v < n; ++v)
        if (v != source && !slice[v].empty())
            scatter.send_entries(source, v, slice[v], bits_per_entry);
    sim.run_phase(std::move(scatter));
    Exchange gather;
    for (int holder = 0; holder < n; ++holder) {
        if (slice[holder].empty()) continue;
        for (int v = 0; v < n; ++v)
            if (v != holder) gather.send_entries(holder, v, slice[holder], bits_per_entry);
    }
    sim.run_phase(std::move(gather));
    return payload;
}

} // namespace cqc
