#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "novaq/generator.hpp"

using namespace novaq;

TEST_CASE("sample_params: count, determinism, distribution moments") {
    const Seed seed{3.0, 0.1};
    auto rng = rng::make_stream(1, "generation");
    CHECK(sample_params(seed, 5, rng).size() == 15);

    auto a = rng::make_stream(9, "generation");
    auto b = rng::make_stream(9, "generation");
    CHECK(sample_params(seed, 4, a) == sample_params(seed, 4, b));

    auto big = rng::make_stream(2, "generation");
    double sum = 0.0;
    const int draws = 100000;
    for (int i = 0; i < draws / 3; ++i) {
        for (double v : sample_params(seed, 1, big)) sum += v;
    }
    const double mean = sum / (3 * (draws / 3));
    CHECK(std::abs(mean - 3.0) < 0.01);
}

TEST_CASE("generate_test_case produces normalized states of the right size") {
    auto rng = rng::make_stream(3, "generation");
    const TestCase tc = generate_test_case({0.0, 1.0}, 3, rng);
    CHECK(tc.state.dim() == 8);
    CHECK(tc.params.size() == 9);
    CHECK(std::abs(tc.state.norm_sq() - 1.0) < 1e-10);
}

TEST_CASE("generate_test_case near the degenerate seed tracks IQFT|0>") {
    // mu=0, var=0.1 on one qubit: params near 0, so the state is usually
    // close to (|0>+|1>)/sqrt(2).
    auto rng = rng::make_stream(5, "generation");
    const double inv_sqrt2 = std::numbers::sqrt2 / 2.0;
    int close = 0;
    for (int t = 0; t < 100; ++t) {
        const TestCase tc = generate_test_case({0.0, 0.1}, 1, rng);
        const double d = std::max(std::abs(tc.state.amps[0] - Complex{inv_sqrt2}),
                                  std::abs(tc.state.amps[1] - Complex{inv_sqrt2}));
        if (d < 0.5) ++close;
    }
    CHECK(close > 80);
}

TEST_CASE("mutate clamps to the seed ranges") {
    auto rng = rng::make_stream(7, "mutation");
    for (int t = 0; t < 10000; ++t) {
        const Seed s = mutate({14.8, 0.1}, rng, 0.0);
        CHECK(s.mean <= 15.0);
        CHECK(s.mean >= 14.3);
        CHECK(s.variance >= 0.1);
        CHECK(s.variance <= 0.6);
    }
}

TEST_CASE("guided mutation deltas are centered uniform in [-0.5, 0.5]") {
    auto rng = rng::make_stream(11, "mutation");
    double sum = 0.0;
    const int trials = 100000;
    for (int t = 0; t < trials; ++t) {
        const Seed s = mutate({0.0, 15.0}, rng, 0.0);
        CHECK(std::abs(s.mean) <= 0.5);
        CHECK(std::abs(s.variance - 15.0) <= 0.5);
        sum += s.mean;
    }
    CHECK(std::abs(sum / trials) < 0.005);
}

TEST_CASE("random mutation resamples the full ranges") {
    auto rng = rng::make_stream(13, "mutation");
    bool far = false;
    for (int t = 0; t < 200; ++t) {
        const Seed s = mutate({0.0, 0.1}, rng, 1.0);
        CHECK(s.mean >= kSeedMeanMin);
        CHECK(s.mean <= kSeedMeanMax);
        CHECK(s.variance >= kSeedVarMin);
        CHECK(s.variance <= kSeedVarMax);
        if (std::abs(s.mean) > 1.0) far = true;
    }
    CHECK(far);
}

TEST_CASE("evolve: exact budget, arithmetic of iterations") {
    CampaignConfig cfg;
    cfg.n_qubits = 2;
    cfg.total_budget = 1500;
    cfg.master_seed = 100;
    GridArchive archive;
    int cases = 0;
    evolve(cfg, archive, [&](const TestCase&) { ++cases; });
    CHECK(cases == 1500);
    CHECK(archive.total_recorded() == 1500);
}

TEST_CASE("evolve is deterministic in the master seed") {
    CampaignConfig cfg;
    cfg.n_qubits = 2;
    cfg.total_budget = 300;
    cfg.master_seed = 200;

    auto run = [&] {
        GridArchive archive;
        std::vector<TestCase> out;
        evolve(cfg, archive, [&](const TestCase& tc) { out.push_back(tc); });
        return out;
    };
    const auto a = run();
    const auto b = run();
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].seed_id == b[i].seed_id);
        CHECK(a[i].params == b[i].params);
        CHECK(a[i].novelty == b[i].novelty);
    }
}

TEST_CASE("evolve selection matches a brute-force re-ranking of emitted cases") {
    CampaignConfig cfg;
    cfg.n_qubits = 2;
    cfg.total_budget = 400;
    cfg.master_seed = 300;

    std::vector<TestCase> stream;
    GridArchive archive;
    std::vector<IterationReport> reports;
    evolve(cfg, archive, [&](const TestCase& tc) { stream.push_back(tc); },
           [&](const IterationReport& r) { reports.push_back(r); });

    const int per_iter = cfg.pool_size * cfg.tests_per_seed_per_iter;
    REQUIRE(!reports.empty());
    for (std::size_t it = 0; it < reports.size(); ++it) {
        // Recompute per-seed mean novelty from the emitted case stream.
        std::vector<double> mean(cfg.pool_size, 0.0);
        std::vector<int> cnt(cfg.pool_size, 0);
        for (int i = 0; i < per_iter; ++i) {
            const auto& tc = stream[it * per_iter + i];
            mean[tc.seed_id] += tc.novelty;
            ++cnt[tc.seed_id];
        }
        for (int s = 0; s < cfg.pool_size; ++s) {
            if (cnt[s] > 0) mean[s] /= cnt[s];
        }
        std::vector<int> order(cfg.pool_size);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return mean[a] < mean[b]; });
        order.resize(cfg.survivors);
        CHECK(reports[it].survivor_indices == order);
    }
}

TEST_CASE("evolve coverage grows beyond the first iteration") {
    CampaignConfig cfg;
    cfg.n_qubits = 3;
    cfg.total_budget = 1500;
    cfg.master_seed = 400;
    GridArchive archive;
    std::size_t after_first = 0;
    int cases = 0;
    evolve(cfg, archive, [&](const TestCase&) {
        ++cases;
        if (cases == cfg.pool_size * cfg.tests_per_seed_per_iter) {
            after_first = archive.coverage().occupied;
        }
    });
    CHECK(archive.coverage().occupied > after_first);
}

TEST_CASE("baseline: budget, uniform parameter moments, replay") {
    CampaignConfig cfg;
    cfg.n_qubits = 2;
    cfg.total_budget = 1500;
    cfg.master_seed = 500;
    cfg.mode = CampaignMode::Baseline;

    GridArchive archive;
    double sum = 0.0;
    std::size_t count = 0;
    std::vector<double> first_params;
    baseline_generate(cfg, archive, [&](const TestCase& tc) {
        CHECK(tc.seed_id == -1);
        for (double p : tc.params) {
            CHECK(p >= 0.0);
            CHECK(p < 2.0 * std::numbers::pi);
            sum += p;
            ++count;
        }
        if (first_params.empty()) first_params = tc.params;
    });
    CHECK(archive.total_recorded() == 1500);
    CHECK(std::abs(sum / count - std::numbers::pi) < 0.05);

    GridArchive archive2;
    bool checked = false;
    baseline_generate(cfg, archive2, [&](const TestCase& tc) {
        if (!checked) {
            CHECK(tc.params == first_params);
            checked = true;
        }
    });
    CHECK(checked);
}

TEST_CASE("config validation rejects bad campaigns") {
    CampaignConfig cfg;
    cfg.total_budget = 50;  // below one iteration of 10 x 10
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);

    CampaignConfig cfg2;
    cfg2.survivors = 20;
    CHECK_THROWS_AS(cfg2.validate(), std::invalid_argument);

    CampaignConfig cfg3;
    cfg3.n_qubits = 0;
    CHECK_THROWS_AS(cfg3.validate(), std::invalid_argument);
}

TEST_CASE("seeds stay in bounds through long mutation chains") {
    auto rng = rng::make_stream(17, "mutation");
    Seed s{0.0, 1.0};
    for (int t = 0; t < 20000; ++t) {
        s = mutate(s, rng, 0.1);
        CHECK(s.mean >= kSeedMeanMin);
        CHECK(s.mean <= kSeedMeanMax);
        CHECK(s.variance >= kSeedVarMin);
        CHECK(s.variance <= kSeedVarMax);
    }
}
