#include "novaq/circuits.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace novaq {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInvSqrt2 = std::numbers::sqrt2 / 2.0;

GateOp single(std::string label, std::vector<Complex> m, int target) {
    return GateOp::dense(std::move(label), std::move(m), {target});
}

// Reverse order, dagger each gate. Only dense gates carry a matrix.
Circuit inverse(const Circuit& c) {
    Circuit inv;
    inv.n = c.n;
    inv.gates.reserve(c.gates.size());
    for (auto it = c.gates.rbegin(); it != c.gates.rend(); ++it) {
        const GateOp& g = *it;
        if (g.kind != GateKind::Dense) {
            inv.gates.push_back(g);  // both special kinds are self-inverse
            continue;
        }
        const std::size_t dim = std::size_t{1} << g.arity();
        std::vector<Complex> dag(dim * dim);
        for (std::size_t i = 0; i < dim; ++i) {
            for (std::size_t j = 0; j < dim; ++j) {
                dag[j * dim + i] = std::conj(g.matrix[i * dim + j]);
            }
        }
        inv.gates.push_back(GateOp::dense(g.label, std::move(dag), g.targets));
    }
    return inv;
}

}  // namespace

GateOp u_gate(const UParams& p, int target) {
    if (!std::isfinite(p.theta) || !std::isfinite(p.phi) || !std::isfinite(p.lambda)) {
        throw std::invalid_argument("non-finite U-gate parameter");
    }
    const double c = std::cos(p.theta / 2.0);
    const double s = std::sin(p.theta / 2.0);
    const Complex eil = std::polar(1.0, p.lambda);
    const Complex eip = std::polar(1.0, p.phi);
    return single("U", {Complex{c, 0.0}, -eil * s, eip * s, eip * eil * c}, target);
}

GateOp h_gate(int target) {
    const double h = kInvSqrt2;
    return single("H", {Complex{h}, Complex{h}, Complex{h}, Complex{-h}}, target);
}

GateOp x_gate(int target) {
    return single("X", {Complex{0}, Complex{1}, Complex{1}, Complex{0}}, target);
}

GateOp z_gate(int target) {
    return single("Z", {Complex{1}, Complex{0}, Complex{0}, Complex{-1}}, target);
}

GateOp s_gate(int target) {
    return single("S", {Complex{1}, Complex{0}, Complex{0}, Complex{0.0, 1.0}}, target);
}

GateOp t_gate(int target) {
    return single("T", {Complex{1}, Complex{0}, Complex{0}, std::polar(1.0, kPi / 4.0)},
                  target);
}

GateOp cphase_gate(double angle, int control, int target) {
    const Complex ph = std::polar(1.0, angle);
    std::vector<Complex> m(16, Complex{0.0});
    m[0] = m[5] = m[10] = Complex{1.0};
    m[15] = ph;
    return GateOp::dense("CP", std::move(m), {control, target});
}

GateOp swap_gate(int a, int b) {
    std::vector<Complex> m(16, Complex{0.0});
    m[0] = m[6] = m[9] = m[15] = Complex{1.0};
    return GateOp::dense("SWAP", std::move(m), {a, b});
}

Circuit qft(int n) {
    if (n < 1 || n > kMaxQubits) {
        throw std::invalid_argument("qft qubit count must be in [1, 14]");
    }
    Circuit c;
    c.n = n;
    for (int i = n - 1; i >= 0; --i) {
        c.gates.push_back(h_gate(i));
        for (int j = i - 1; j >= 0; --j) {
            c.gates.push_back(cphase_gate(kPi / double(std::size_t{1} << (i - j)), j, i));
        }
    }
    for (int i = 0; i < n / 2; ++i) {
        c.gates.push_back(swap_gate(i, n - 1 - i));
    }
    return c;
}

Circuit iqft(int n) { return inverse(qft(n)); }

Circuit initial_circuit(int n, const std::vector<double>& params) {
    if (n < 1 || n > kMaxQubits) {
        throw std::invalid_argument("qubit count must be in [1, 14]");
    }
    if (params.size() != static_cast<std::size_t>(3 * n)) {
        throw std::invalid_argument("initial circuit needs exactly 3n parameters");
    }
    Circuit c;
    c.n = n;
    for (int q = 0; q < n; ++q) {
        const UParams p{params[3 * q], params[3 * q + 1], params[3 * q + 2]};
        c.gates.push_back(u_gate(p, q));
    }
    Circuit tail = iqft(n);
    c.gates.insert(c.gates.end(), tail.gates.begin(), tail.gates.end());
    return c;
}

int grover_optimal_iterations(int n) {
    const double dim = double(std::size_t{1} << n);
    return static_cast<int>(std::lround(kPi / 4.0 * std::sqrt(dim)));
}

BenchmarkProgram grover(int n, std::size_t marked, int iterations) {
    if (marked >= (std::size_t{1} << n)) {
        throw std::invalid_argument("marked state out of range");
    }
    if (iterations < 0) {
        throw std::invalid_argument("iterations must be >= 0");
    }
    BenchmarkProgram p;
    p.name = "Grover";
    p.circuit.n = n;
    for (int i = 0; i < iterations; ++i) {
        GateOp oracle = GateOp::phase_flip(n, marked);
        oracle.label = "ORACLE";
        p.circuit.gates.push_back(std::move(oracle));
        p.circuit.gates.push_back(GateOp::invert_about_mean(n));
    }
    return p;
}

BenchmarkProgram phase_estimation(int n_count, double eigenphase) {
    if (n_count < 1 || n_count > 12) {
        throw std::invalid_argument("counting-qubit count must be in [1, 12]");
    }
    if (!(eigenphase >= 0.0 && eigenphase < 1.0)) {
        throw std::invalid_argument("eigenphase must be in [0, 1)");
    }
    const int work = n_count;
    BenchmarkProgram p;
    p.name = "PE";
    p.circuit.n = n_count + 1;
    p.circuit.gates.push_back(x_gate(work));
    for (int q = 0; q < n_count; ++q) {
        p.circuit.gates.push_back(h_gate(q));
    }
    for (int q = 0; q < n_count; ++q) {
        const double angle = 2.0 * kPi * eigenphase * double(std::size_t{1} << q);
        p.circuit.gates.push_back(cphase_gate(angle, q, work));
    }
    // IQFT on the counting register; its gates already target qubits
    // 0..n_count-1 so they embed directly.
    Circuit tail = iqft(n_count);
    p.circuit.gates.insert(p.circuit.gates.end(), tail.gates.begin(), tail.gates.end());
    return p;
}

BenchmarkProgram benchmark_by_name(const std::string& name) {
    auto grover_named = [&](int n) {
        BenchmarkProgram p =
            grover(n, (std::size_t{1} << n) - 1, grover_optimal_iterations(n));
        p.name = name;
        return p;
    };
    if (name == "Grover-03") return grover_named(3);
    if (name == "Grover-05") return grover_named(5);
    if (name == "Grover-07") return grover_named(7);
    if (name == "Grover-10") return grover_named(10);
    if (name == "Grover-12") return grover_named(12);
    if (name == "PE-05") {
        BenchmarkProgram p = phase_estimation(4, 0.3125);
        p.name = name;
        return p;
    }
    if (name == "QFT-05") {
        BenchmarkProgram p;
        p.name = name;
        p.circuit = qft(5);
        return p;
    }
    throw std::invalid_argument("unknown benchmark program: " + name);
}

std::vector<std::string> benchmark_names() {
    return {"Grover-03", "Grover-05", "Grover-07", "Grover-10",
            "Grover-12", "PE-05",     "QFT-05"};
}

}  // namespace novaq
