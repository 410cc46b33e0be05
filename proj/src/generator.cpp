#include "novaq/generator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace novaq {

void CampaignConfig::validate() const {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw std::invalid_argument("n_qubits must be in [1, 14]");
    }
    if (pool_size < 1) throw std::invalid_argument("pool_size must be >= 1");
    if (tests_per_seed_per_iter < 1) {
        throw std::invalid_argument("tests_per_seed_per_iter must be >= 1");
    }
    if (survivors < 1 || survivors > pool_size) {
        throw std::invalid_argument("survivors must be in [1, pool_size]");
    }
    if (total_budget < pool_size * tests_per_seed_per_iter) {
        throw std::invalid_argument("total_budget must cover at least one iteration");
    }
    if (p_random_mutation < 0.0 || p_random_mutation > 1.0) {
        throw std::invalid_argument("p_random_mutation must be in [0, 1]");
    }
}

CampaignMode campaign_mode_from_string(const std::string& s) {
    if (s == "novaq") return CampaignMode::Novaq;
    if (s == "baseline") return CampaignMode::Baseline;
    throw std::invalid_argument("mode must be 'novaq' or 'baseline', got '" + s + "'");
}

std::string to_string(CampaignMode mode) {
    return mode == CampaignMode::Novaq ? "novaq" : "baseline";
}

std::vector<double> sample_params(const Seed& seed, int n, rng::Engine& engine) {
    std::normal_distribution<double> dist(seed.mean, std::sqrt(seed.variance));
    std::vector<double> params(static_cast<std::size_t>(3 * n));
    for (auto& p : params) p = dist(engine);
    return params;
}

TestCase generate_test_case(const Seed& seed, int n, rng::Engine& engine) {
    TestCase tc;
    tc.params = sample_params(seed, n, engine);
    tc.state = apply_circuit(init_zero(n), initial_circuit(n, tc.params));
    return tc;
}

Seed mutate(const Seed& seed, rng::Engine& engine, double p_random) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    Seed out;
    if (coin(engine) < p_random) {
        std::uniform_real_distribution<double> mean_dist(kSeedMeanMin, kSeedMeanMax);
        std::uniform_real_distribution<double> var_dist(kSeedVarMin, kSeedVarMax);
        out.mean = mean_dist(engine);
        out.variance = var_dist(engine);
    } else {
        std::uniform_real_distribution<double> delta(-kMutationDelta, kMutationDelta);
        out.mean = seed.mean + delta(engine);
        out.variance = seed.variance + delta(engine);
    }
    out.mean = std::clamp(out.mean, kSeedMeanMin, kSeedMeanMax);
    out.variance = std::clamp(out.variance, kSeedVarMin, kSeedVarMax);
    return out;
}

Seed random_seed(rng::Engine& engine) {
    std::uniform_real_distribution<double> mean_dist(kSeedMeanMin, kSeedMeanMax);
    std::uniform_real_distribution<double> var_dist(kSeedVarMin, kSeedVarMax);
    Seed s;
    s.mean = mean_dist(engine);
    s.variance = var_dist(engine);
    return s;
}

void evolve(const CampaignConfig& config, GridArchive& archive, const CaseSink& sink,
            const IterationObserver& observer) {
    config.validate();
    if (config.mode != CampaignMode::Novaq) {
        throw std::invalid_argument("evolve requires mode = novaq");
    }
    rng::Engine init_stream = rng::make_stream(config.master_seed, "pool-init");
    rng::Engine gen_stream = rng::make_stream(config.master_seed, "generation");
    rng::Engine mut_stream = rng::make_stream(config.master_seed, "mutation");

    std::vector<Seed> pool;
    pool.reserve(static_cast<std::size_t>(config.pool_size));
    for (int i = 0; i < config.pool_size; ++i) pool.push_back(random_seed(init_stream));

    int emitted = 0;
    while (emitted < config.total_budget) {
        std::vector<TestCase> cases;
        std::vector<int> owner;
        auto remaining = [&] {
            return config.total_budget - emitted - static_cast<int>(cases.size());
        };
        for (int s = 0; s < config.pool_size && remaining() > 0; ++s) {
            for (int t = 0; t < config.tests_per_seed_per_iter; ++t) {
                if (remaining() <= 0) break;
                TestCase tc = generate_test_case(pool[s], config.n_qubits, gen_stream);
                tc.seed_id = s;
                cases.push_back(std::move(tc));
                owner.push_back(s);
            }
        }

        // Score against the iteration-start archive, then record.
        for (auto& tc : cases) {
            tc.metrics = metric_triple(tc.state);
            tc.cell = archive.cell_index(tc.metrics);
            tc.novelty = archive.novelty_score(tc.metrics);
        }
        for (auto& tc : cases) {
            archive.record(tc.metrics);
            sink(tc);
        }
        emitted += static_cast<int>(cases.size());
        if (emitted >= config.total_budget) break;

        // Seed fitness = mean novelty of its cases; lowest survive.
        std::vector<double> fitness(static_cast<std::size_t>(config.pool_size), 0.0);
        std::vector<int> produced(static_cast<std::size_t>(config.pool_size), 0);
        for (std::size_t i = 0; i < cases.size(); ++i) {
            fitness[static_cast<std::size_t>(owner[i])] += cases[i].novelty;
            ++produced[static_cast<std::size_t>(owner[i])];
        }
        for (int s = 0; s < config.pool_size; ++s) {
            if (produced[s] > 0) fitness[s] /= produced[s];
        }
        std::vector<int> order(static_cast<std::size_t>(config.pool_size));
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return fitness[a] < fitness[b]; });

        if (observer) {
            IterationReport report;
            report.seed_fitness = fitness;
            report.survivor_indices.assign(order.begin(),
                                           order.begin() + config.survivors);
            observer(report);
        }

        std::vector<Seed> next;
        next.reserve(static_cast<std::size_t>(config.pool_size));
        for (int i = 0; i < config.survivors; ++i) next.push_back(pool[order[i]]);
        int refill = 0;
        while (static_cast<int>(next.size()) < config.pool_size) {
            next.push_back(mutate(next[refill % config.survivors], mut_stream,
                                  config.p_random_mutation));
            ++refill;
        }
        pool = std::move(next);
    }
}

void baseline_generate(const CampaignConfig& config, GridArchive& archive,
                       const CaseSink& sink) {
    config.validate();
    rng::Engine gen_stream = rng::make_stream(config.master_seed, "generation");
    std::uniform_real_distribution<double> unif(0.0, 2.0 * std::numbers::pi);
    for (int i = 0; i < config.total_budget; ++i) {
        TestCase tc;
        tc.seed_id = -1;
        tc.params.resize(static_cast<std::size_t>(3 * config.n_qubits));
        for (auto& p : tc.params) p = unif(gen_stream);
        tc.state =
            apply_circuit(init_zero(config.n_qubits),
                          initial_circuit(config.n_qubits, tc.params));
        tc.metrics = metric_triple(tc.state);
        tc.cell = archive.cell_index(tc.metrics);
        tc.novelty = archive.novelty_score(tc.metrics);
        archive.record(tc.metrics);
        sink(tc);
    }
}

void run_campaign(const CampaignConfig& config, GridArchive& archive,
                  const CaseSink& sink) {
    if (config.mode == CampaignMode::Novaq) {
        evolve(config, archive, sink);
    } else {
        baseline_generate(config, archive, sink);
    }
}

}  // namespace novaq
