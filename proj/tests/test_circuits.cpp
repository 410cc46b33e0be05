#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "novaq/circuits.hpp"
#include "oracles.hpp"

using namespace novaq;
using oracles::state_distance;

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kSqrtHalf = std::numbers::sqrt2 / 2.0;
}

TEST_CASE("u_gate special parameter values") {
    const GateOp id = u_gate({0.0, 0.0, 0.0}, 0);
    CHECK(std::abs(id.matrix[0] - Complex{1.0}) < 1e-12);
    CHECK(std::abs(id.matrix[1]) < 1e-12);
    CHECK(std::abs(id.matrix[2]) < 1e-12);
    CHECK(std::abs(id.matrix[3] - Complex{1.0}) < 1e-12);

    const GateOp x = u_gate({kPi, 0.0, kPi}, 0);
    CHECK(std::abs(x.matrix[0]) < 1e-12);
    CHECK(std::abs(x.matrix[1] - Complex{1.0}) < 1e-12);
    CHECK(std::abs(x.matrix[2] - Complex{1.0}) < 1e-12);
    CHECK(std::abs(x.matrix[3]) < 1e-12);

    const GateOp h = u_gate({kPi / 2.0, 0.0, kPi}, 0);
    const GateOp href = h_gate(0);
    for (int i = 0; i < 4; ++i) {
        CHECK(std::abs(h.matrix[i] - href.matrix[i]) < 1e-12);
    }

    CHECK_THROWS_AS(u_gate({std::nan(""), 0.0, 0.0}, 0), std::invalid_argument);
}

TEST_CASE("iqft basics") {
    // 1-qubit IQFT is a single H.
    const StateVector plus = apply_circuit(init_zero(1), iqft(1));
    CHECK(std::abs(plus.amps[0] - Complex{kSqrtHalf}) < 1e-12);
    CHECK(std::abs(plus.amps[1] - Complex{kSqrtHalf}) < 1e-12);

    // IQFT of |0...0> is the uniform real superposition.
    for (int n : {2, 3, 5}) {
        const StateVector u = apply_circuit(init_zero(n), iqft(n));
        const double amp = 1.0 / std::sqrt(static_cast<double>(u.dim()));
        for (const auto& a : u.amps) CHECK(std::abs(a - Complex{amp}) < 1e-10);
    }
}

TEST_CASE("iqft(3) matches the inverse DFT formula on every basis state") {
    const auto expected = oracles::dft_matrix(3, -1.0);
    const Circuit c = iqft(3);
    for (std::size_t k = 0; k < 8; ++k) {
        StateVector in = init_zero(3);
        in.amps[0] = Complex{0.0};
        in.amps[k] = Complex{1.0};
        const StateVector out = apply_circuit(in, c);
        for (std::size_t j = 0; j < 8; ++j) {
            CHECK(std::abs(out.amps[j] - expected[j][k]) < 1e-10);
        }
    }
}

TEST_CASE("qft basics and matrix identity") {
    StateVector one = init_zero(1);
    one.amps = {Complex{0.0}, Complex{1.0}};
    const StateVector out = apply_circuit(one, qft(1));
    CHECK(std::abs(out.amps[0] - Complex{kSqrtHalf}) < 1e-12);
    CHECK(std::abs(out.amps[1] - Complex{-kSqrtHalf}) < 1e-12);

    // qft(2) is the 4-point forward DFT.
    const auto u = oracles::circuit_unitary(qft(2));
    const auto dft = oracles::dft_matrix(2, 1.0);
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            CHECK(std::abs(u[i][j] - dft[i][j]) < 1e-12);
        }
    }

    CHECK_THROWS_AS(qft(0), std::invalid_argument);
    CHECK_THROWS_AS(iqft(15), std::invalid_argument);
}

TEST_CASE("qft then iqft is the identity on random states") {
    std::mt19937_64 rng(19);
    for (int n = 1; n <= 10; ++n) {
        const Circuit fwd = qft(n);
        const Circuit inv = iqft(n);
        const int trials = n <= 5 ? 50 : 10;
        for (int t = 0; t < trials; ++t) {
            const StateVector in = oracles::random_state(n, rng);
            const StateVector out = apply_circuit(apply_circuit(in, fwd), inv);
            CHECK(state_distance(out, in) < 1e-9);
        }
    }
}

TEST_CASE("grover exact 2-qubit case and closed-form 3-qubit case") {
    // Uniform input, 1 iteration, n=2: success probability exactly 1.
    StateVector uniform2 = apply_circuit(init_zero(2), Circuit{2, {h_gate(0), h_gate(1)}});
    const auto p2 = probabilities(apply_circuit(uniform2, grover(2, 3, 1).circuit));
    CHECK(p2[3] == doctest::Approx(1.0).epsilon(1e-10));

    // n=3, marked=5, 2 iterations: sin^2(5*arcsin(1/sqrt(8))).
    Circuit h3{3, {h_gate(0), h_gate(1), h_gate(2)}};
    const StateVector uniform3 = apply_circuit(init_zero(3), h3);
    const auto p3 = probabilities(apply_circuit(uniform3, grover(3, 5, 2).circuit));
    const double expected = std::pow(std::sin(5.0 * std::asin(1.0 / std::sqrt(8.0))), 2);
    CHECK(std::abs(p3[5] - expected) < 1e-10);
    CHECK(std::abs(p3[5] - 0.9453) < 1e-3);

    // 0 iterations leaves the distribution unchanged.
    const auto p0 = probabilities(apply_circuit(uniform3, grover(3, 5, 0).circuit));
    for (double p : p0) CHECK(p == doctest::Approx(0.125).epsilon(1e-12));

    CHECK_THROWS_AS(grover(2, 4, 1), std::invalid_argument);
}

TEST_CASE("grover with optimal iterations amplifies the marked state") {
    for (int n : {3, 5, 7}) {
        StateVector s = init_zero(n);
        for (int q = 0; q < n; ++q) s = apply_gate(s, h_gate(q));
        const std::size_t marked = (std::size_t{1} << n) - 1;
        const auto prog = grover(n, marked, grover_optimal_iterations(n));
        const auto p = probabilities(apply_circuit(s, prog.circuit));
        CHECK(p[marked] >= 0.9);
    }
}

TEST_CASE("phase estimation recovers exact eigenphases") {
    // Marginal over the work qubit; counting register is the low qubits.
    auto counting_probs = [](const BenchmarkProgram& prog, int n_count) {
        const auto p = probabilities(apply_circuit(init_zero(n_count + 1), prog.circuit));
        std::vector<double> marg(std::size_t{1} << n_count, 0.0);
        for (std::size_t i = 0; i < p.size(); ++i) {
            marg[i & ((std::size_t{1} << n_count) - 1)] += p[i];
        }
        return marg;
    };

    const auto exact = counting_probs(phase_estimation(3, 0.25), 3);
    CHECK(exact[2] == doctest::Approx(1.0).epsilon(1e-9));

    const auto zero = counting_probs(phase_estimation(3, 0.0), 3);
    CHECK(zero[0] == doctest::Approx(1.0).epsilon(1e-9));

    // Inexact phase: the mode lands at round(0.3 * 16) = 5.
    const auto inexact = counting_probs(phase_estimation(4, 0.3), 4);
    std::size_t mode = 0;
    for (std::size_t i = 1; i < inexact.size(); ++i) {
        if (inexact[i] > inexact[mode]) mode = i;
    }
    CHECK(mode == 5);

    CHECK_THROWS_AS(phase_estimation(3, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(phase_estimation(3, -0.1), std::invalid_argument);
}

TEST_CASE("initial_circuit composition") {
    // Identity U then 1-qubit IQFT is H.
    const StateVector s1 = apply_circuit(init_zero(1), initial_circuit(1, {0, 0, 0}));
    CHECK(std::abs(s1.amps[0] - Complex{kSqrtHalf}) < 1e-12);
    CHECK(std::abs(s1.amps[1] - Complex{kSqrtHalf}) < 1e-12);

    // All-zero params on 2 qubits: uniform real superposition.
    const StateVector s2 =
        apply_circuit(init_zero(2), initial_circuit(2, std::vector<double>(6, 0.0)));
    for (const auto& a : s2.amps) CHECK(std::abs(a - Complex{0.5}) < 1e-10);

    // X on qubit 0 then IQFT(3) equals the inverse DFT column of |001>.
    std::vector<double> params(9, 0.0);
    params[0] = kPi;
    params[2] = kPi;
    const StateVector s3 = apply_circuit(init_zero(3), initial_circuit(3, params));
    const auto dft = oracles::dft_matrix(3, -1.0);
    for (std::size_t j = 0; j < 8; ++j) {
        CHECK(std::abs(s3.amps[j] - dft[j][1]) < 1e-10);
    }

    CHECK_THROWS_AS(initial_circuit(2, {0.0, 0.0, 0.0}), std::invalid_argument);
}

TEST_CASE("initial_circuit output stays normalized over random draws") {
    std::mt19937_64 rng(23);
    std::normal_distribution<double> g(0.0, 3.0);
    for (int t = 0; t < 1000; ++t) {
        const int n = 1 + static_cast<int>(rng() % 4);
        std::vector<double> params(static_cast<std::size_t>(3 * n));
        for (auto& p : params) p = g(rng);
        const StateVector s = apply_circuit(init_zero(n), initial_circuit(n, params));
        CHECK(std::abs(s.norm_sq() - 1.0) < 1e-10);
    }
}

TEST_CASE("benchmark_by_name covers the full table") {
    for (const auto& name : benchmark_names()) {
        const BenchmarkProgram p = benchmark_by_name(name);
        CHECK(p.name == name);
        CHECK(!p.circuit.gates.empty());
    }
    CHECK(benchmark_by_name("Grover-05").circuit.n == 5);
    CHECK(benchmark_by_name("PE-05").circuit.n == 5);
    CHECK(benchmark_by_name("QFT-05").circuit.n == 5);
    CHECK_THROWS_AS(benchmark_by_name("Shor-99"), std::invalid_argument);
}
