#include "sehp/simulation.hpp"

#include <stdexcept>
#include <string>

#include "sehp/detail/math.hpp"
#include "sehp/rng.hpp"

namespace sehp {

namespace {

void validate_config(const SimConfig& config) {
    validate_params(config.params);
    if (!(config.horizon > 0.0) || config.max_events < 1) {
        throw std::invalid_argument(
            "invalid simulation config: require horizon > 0 and max_events >= 1");
    }
}

bool params_equal(const SehpParams& a, const SehpParams& b) {
    return a.v == b.v && a.alpha == b.alpha && a.beta == b.beta;
}

SimResult simulate_impl(const SimConfig& config,
                        std::vector<ThinningProposal>* trace) {
    validate_config(config);
    const double v = config.params.v;
    const double alpha = config.params.alpha;
    const double beta = config.params.beta;
    const double horizon = config.horizon;

    SplitMix64 rng(config.seed);
    std::vector<double> events;

    // The rate only decays between events, so its value just after the last
    // event or rejected proposal dominates the whole next interval.
    double now = 0.0;
    double excitation = 0.0;  // sum of e^{-beta (now - t_j)} over accepted events
    bool truncated = false;

    while (true) {
        const double bound = v * detail::decaying_exp(beta * now) + alpha * excitation;
        if (!(bound > 0.0)) break;  // rate underflowed; nothing more can arrive
        const double wait = rng.exponential(bound);
        const double proposal = now + wait;
        if (!(proposal <= horizon)) break;

        const double decay = detail::decaying_exp(beta * wait);
        excitation *= decay;
        const double intensity =
            v * detail::decaying_exp(beta * proposal) + alpha * excitation;
        const bool accepted = rng.uniform01() * bound <= intensity;
        if (trace) {
            trace->push_back({proposal, bound, intensity, accepted});
        }
        now = proposal;
        if (accepted) {
            events.push_back(proposal);
            excitation += 1.0;
            if (events.size() >= config.max_events) {
                truncated = true;
                break;
            }
        }
    }

    SimResult result;
    result.cascade.id = "sim-" + std::to_string(config.seed);
    result.cascade.timestamps = std::move(events);
    result.cascade.horizon = horizon;
    result.truncated = truncated;
    return result;
}

}  // namespace

SimResult simulate(const SimConfig& config) { return simulate_impl(config, nullptr); }

SimResult simulate(const SimConfig& config, std::vector<ThinningProposal>& trace) {
    return simulate_impl(config, &trace);
}

Corpus simulate_corpus(std::span<const SimConfig> configs) {
    Corpus corpus;
    corpus.cascades.reserve(configs.size());
    for (const auto& config : configs) {
        SimResult run = simulate(config);
        if (run.truncated) {
            run.cascade.id += "#truncated";
        }
        corpus.cascades.push_back(std::move(run.cascade));

        auto matching = corpus.truth.end();
        for (auto it = corpus.truth.begin(); it != corpus.truth.end(); ++it) {
            if (params_equal(it->params, config.params)) {
                matching = it;
                break;
            }
        }
        if (matching == corpus.truth.end()) {
            corpus.truth.push_back({config.params, config.seed, config.seed});
        } else {
            matching->seed_first = std::min(matching->seed_first, config.seed);
            matching->seed_last = std::max(matching->seed_last, config.seed);
        }
    }
    return corpus;
}

}  // namespace sehp
