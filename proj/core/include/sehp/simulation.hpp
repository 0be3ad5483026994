#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sehp/types.hpp"

namespace sehp {

struct SimConfig {
    SehpParams params;
    double horizon = 0.0;
    std::uint64_t seed = 0;
    // Sampling stops after this many accepted events; the only stopping
    // guarantee when alpha/beta >= 1.
    std::size_t max_events = 1000000;
};

struct SimResult {
    Cascade cascade;
    bool truncated = false;  // hit max_events before reaching the horizon
};

// One thinning proposal, recorded for diagnostics: the dominating rate used
// on the proposal interval and the true rate at the proposed time.
struct ThinningProposal {
    double time = 0.0;
    double bound = 0.0;
    double intensity = 0.0;
    bool accepted = false;
};

// Exact sampling of the process on [0, horizon] by Ogata-style thinning with
// a piecewise-constant dominating rate (the rate is non-increasing between
// events for this kernel). Deterministic given the seed; the cascade id is
// "sim-<seed>".
SimResult simulate(const SimConfig& config);
SimResult simulate(const SimConfig& config, std::vector<ThinningProposal>& trace);

// Ground truth for a group of simulated cascades sharing one parameter triple.
struct TruthRecord {
    SehpParams params;
    std::uint64_t seed_first = 0;
    std::uint64_t seed_last = 0;
};

struct Corpus {
    // one cascade per config, in config order; truncated runs carry a
    // "#truncated" id suffix
    std::vector<Cascade> cascades;
    // one record per distinct parameter triple, in first-appearance order
    std::vector<TruthRecord> truth;
};

Corpus simulate_corpus(std::span<const SimConfig> configs);

}  // namespace sehp
