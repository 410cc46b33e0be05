// generator.hpp
// Seed distributions, Gaussian parameter sampling, the mutation-selection
// loop, and the uniform-random baseline generator.

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "novaq/archive.hpp"
#include "novaq/circuits.hpp"
#include "novaq/metrics.hpp"
#include "novaq/rng.hpp"

namespace novaq {

inline constexpr double kSeedMeanMin = -15.0;
inline constexpr double kSeedMeanMax = 15.0;
inline constexpr double kSeedVarMin = 0.1;
inline constexpr double kSeedVarMax = 30.0;
inline constexpr double kMutationDelta = 0.5;

// Mean and variance of the Gaussian all 3n gate parameters are drawn from.
struct Seed {
    double mean = 0.0;
    double variance = 1.0;
};

struct TestCase {
    int seed_id = -1;                // -1 for baseline cases
    std::vector<double> params;      // the 3n sampled U-gate parameters
    StateVector state;
    MetricTriple metrics;
    CellIndex cell;
    double novelty = 0.0;
};

enum class CampaignMode { Novaq, Baseline };

struct CampaignConfig {
    int n_qubits = 3;
    int pool_size = 10;
    int tests_per_seed_per_iter = 10;
    int survivors = 5;
    int total_budget = 1500;
    double p_random_mutation = 0.1;
    std::uint64_t master_seed = 0;
    CampaignMode mode = CampaignMode::Novaq;

    void validate() const;  // throws std::invalid_argument
};

CampaignMode campaign_mode_from_string(const std::string& s);
std::string to_string(CampaignMode mode);

// 3n independent draws from Normal(mean, sqrt(variance)).
std::vector<double> sample_params(const Seed& seed, int n, rng::Engine& engine);

// Builds the initial circuit from a fresh parameter draw and runs it on
// |0...0>. Metrics and novelty are filled by the campaign loop.
TestCase generate_test_case(const Seed& seed, int n, rng::Engine& engine);

// Uniform resample of both fields with probability p_random, otherwise a
// uniform perturbation in [-0.5, 0.5] per field; always clamped to the
// seed ranges.
Seed mutate(const Seed& seed, rng::Engine& engine, double p_random);

Seed random_seed(rng::Engine& engine);

using CaseSink = std::function<void(const TestCase&)>;

// Per-iteration selection summary, reported before the pool is refilled.
struct IterationReport {
    std::vector<double> seed_fitness;     // mean novelty per pool seed
    std::vector<int> survivor_indices;    // ascending fitness, ties by index
};

using IterationObserver = std::function<void(const IterationReport&)>;

// Mutation-selection loop. Per iteration every pool seed emits
// tests_per_seed_per_iter cases; novelty is scored against the archive as
// it stood at iteration start; all cases are then recorded in generation
// order; the `survivors` seeds with lowest mean novelty survive and the
// pool is refilled by mutating them round-robin. Stops at total_budget.
void evolve(const CampaignConfig& config, GridArchive& archive, const CaseSink& sink,
            const IterationObserver& observer = nullptr);

// Baseline: every case draws all 3n parameters i.i.d. uniform [0, 2*pi);
// same circuit family and recording pipeline, no selection.
void baseline_generate(const CampaignConfig& config, GridArchive& archive,
                       const CaseSink& sink);

// Dispatch on config.mode.
void run_campaign(const CampaignConfig& config, GridArchive& archive,
                  const CaseSink& sink);

}  // namespace novaq
