#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cqc/errors.hpp"
#include "cqc/rng.hpp"

namespace cqc {

struct SimConfig {
    int n = 0;              // machine count
    long bandwidth_bits = 0; // per ordered pair, per round
    int entry_bits = 0;      // wire width of one matrix/field entry

    static long default_bandwidth(int n, int c = 4);
    static SimConfig make(int n, int bandwidth_c = 4, int entry_bits = 0);
};

// Per-round, per-ordered-pair bit accounting. Every recorded round carries the
// effective per-pair cap that was in force (protocol phases may run with a
// bandwidth multiplier, which models teams borrowing idle inter-team links).
class RoundLedger {
  public:
    struct Row {
        int src;
        int dst;
        long bits;
    };
    struct RoundData {
        long cap;
        std::vector<Row> rows;
    };

    explicit RoundLedger(int n) : n_(n), sent_(n, 0), recv_(n, 0) {}

    int n() const { return n_; }
    int rounds() const { return static_cast<int>(per_round_.size()); }
    const std::vector<RoundData>& per_round() const { return per_round_; }
    long total_bits() const { return total_bits_; }
    long sent_bits(int node) const { return sent_[node]; }
    long recv_bits(int node) const { return recv_[node]; }

    // Largest per-pair load observed in any single round.
    long max_pair_load() const { return max_pair_load_; }

    // Appends one communication round; rows must already be merged per pair.
    void push_round(long cap, std::vector<Row> rows);

    // Replays every recorded round and verifies no pair exceeded its cap.
    void audit() const;

    void write_csv(std::ostream& out) const;
    std::string summary_json() const;

  private:
    int n_;
    std::vector<RoundData> per_round_;
    std::vector<long> sent_, recv_;
    long total_bits_ = 0;
    long max_pair_load_ = 0;
};

// --- strict per-round node-program interface --------------------------------

struct Message {
    int src = 0;
    std::vector<std::int64_t> payload;
    long bits = 0;
};

class RoundCtx {
  public:
    RoundCtx(int node, int round, const std::vector<Message>& inbox)
        : node_(node), round_(round), inbox_(inbox) {}

    int node() const { return node_; }
    int round() const { return round_; }
    const std::vector<Message>& inbox() const { return inbox_; }

    void send(int dst, std::vector<std::int64_t> payload, long bits) {
        outbox_.push_back({dst, std::move(payload), bits});
    }

    struct Out {
        int dst;
        std::vector<std::int64_t> payload;
        long bits;
    };
    std::vector<Out>& outbox() { return outbox_; }

  private:
    int node_;
    int round_;
    const std::vector<Message>& inbox_;
    std::vector<Out> outbox_;
};

// Deterministic given (local state, inbox, the node's own RNG stream).
class NodeProgram {
  public:
    virtual ~NodeProgram() = default;
    virtual void on_round(RoundCtx& ctx) = 0;
    virtual bool done() const = 0;
    virtual std::vector<std::int64_t> output() const { return {}; }
};

struct RunResult {
    std::vector<std::vector<std::int64_t>> outputs;
    int rounds = 0;
};

// --- bulk-synchronous phase executor -----------------------------------------
//
// Protocol code in this repo is written as a sequence of communication phases
// with fixed, content-oblivious patterns. A phase queues arbitrary payloads
// per ordered pair; the executor drains them at the per-pair bandwidth, one
// round at a time, and delivers everything at the phase barrier. Costs are
// identical to a literal per-round execution of the same oblivious schedule.
class Exchange {
  public:
    struct Item {
        int src;
        int dst;
        std::vector<std::int64_t> payload;
        long bits;
        int tag;
    };

    void send(int src, int dst, std::vector<std::int64_t> payload, long bits, int tag = 0);
    // Convenience: payload of `entries` values charged entries*bits_per_entry.
    void send_entries(int src, int dst, std::vector<std::int64_t> entries, int bits_per_entry,
                      int tag = 0);

    bool empty() const { return items_.empty(); }
    std::vector<Item>& items() { return items_; }

  private:
    std::vector<Item> items_;
};

// Deliveries of one phase, grouped per destination in (src, send-order).
class Deliveries {
  public:
    explicit Deliveries(int n) : boxes_(n) {}
    const std::vector<Exchange::Item>& inbox(int dst) const { return boxes_[dst]; }
    std::vector<Exchange::Item>& box(int dst) { return boxes_[dst]; }

  private:
    std::vector<std::vector<Exchange::Item>> boxes_;
};

class Simulator {
  public:
    explicit Simulator(SimConfig cfg) : cfg_(cfg), ledger_(cfg.n) {}

    const SimConfig& config() const { return cfg_; }
    RoundLedger& ledger() { return ledger_; }
    const RoundLedger& ledger() const { return ledger_; }

    // Runs one communication phase; charges ceil(bits/cap) rounds per pair,
    // in lockstep. `bandwidth_multiplier` scales the per-pair cap for phases
    // that provably relay through otherwise idle links.
    Deliveries run_phase(Exchange ex, int bandwidth_multiplier = 1);

    // Strict lockstep execution of per-node programs. A message queued in
    // round r is delivered at the start of round r+1. Throws bandwidth_error
    // on any pair exceeding the cap and timeout_error past max_rounds.
    RunResult run(std::vector<std::unique_ptr<NodeProgram>>& programs, int max_rounds);

  private:
    SimConfig cfg_;
    RoundLedger ledger_;
};

// Convenience wrapper matching the model description: fresh simulator, run
// programs, return outputs plus the ledger.
std::pair<RunResult, RoundLedger> run(const SimConfig& cfg,
                                      std::vector<std::unique_ptr<NodeProgram>>& programs,
                                      int max_rounds);

// --- routing primitives -------------------------------------------------------

struct Demand {
    int src;
    int dst;
    std::vector<std::int64_t> entries;
};

// Two-phase relay routing: every entry is striped over the n relays
// (round-robin per sender, rebalanced so no relay link exceeds the per-pair
// quota), relays forward in a second phase. For demand sets where every node
// sends and receives at most L entries this costs at most
// 2*ceil(L/n)*ceil(entry_bits/bandwidth) rounds.
Deliveries lenzen_route(Simulator& sim, std::vector<Demand> demands, int bits_per_entry,
                        int bandwidth_multiplier = 1);

// Broadcast payload from source to everyone. Zero-length payloads are free;
// one entry costs one round; m entries cost at most 2*ceil(m*F/(n*bw)) + 1
// rounds via scatter + all-gather.
std::vector<std::int64_t> broadcast(Simulator& sim, int source, std::vector<std::int64_t> payload,
                                    int bits_per_entry);

} // namespace cqc
