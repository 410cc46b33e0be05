#include "novaq/state.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace novaq {

double StateVector::norm_sq() const {
    double s = 0.0;
    for (const auto& a : amps) s += std::norm(a);
    return s;
}

namespace {

bool is_unitary(const std::vector<Complex>& m, std::size_t dim, double tol) {
    // M^dagger M == I
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            Complex acc{0.0, 0.0};
            for (std::size_t k = 0; k < dim; ++k) {
                acc += std::conj(m[k * dim + i]) * m[k * dim + j];
            }
            const Complex expect = (i == j) ? Complex{1.0, 0.0} : Complex{0.0, 0.0};
            if (std::abs(acc - expect) > tol) return false;
        }
    }
    return true;
}

std::vector<int> all_qubits(int n) {
    std::vector<int> q(static_cast<std::size_t>(n));
    std::iota(q.begin(), q.end(), 0);
    return q;
}

}  // namespace

GateOp GateOp::dense(std::string label, std::vector<Complex> matrix,
                     std::vector<int> targets) {
    const std::size_t k = targets.size();
    if (k < 1 || k > 3) {
        throw std::invalid_argument("dense gate must act on 1..3 qubits");
    }
    const std::size_t dim = std::size_t{1} << k;
    if (matrix.size() != dim * dim) {
        throw std::invalid_argument("gate matrix size does not match target count");
    }
    std::vector<int> sorted = targets;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw std::invalid_argument("duplicate gate targets");
    }
    for (const auto& entry : matrix) {
        if (!std::isfinite(entry.real()) || !std::isfinite(entry.imag())) {
            throw std::invalid_argument("non-finite gate matrix entry");
        }
    }
    if (!is_unitary(matrix, dim, kUnitaryTolerance)) {
        throw std::invalid_argument("gate matrix is not unitary: " + label);
    }
    GateOp g;
    g.label = std::move(label);
    g.kind = GateKind::Dense;
    g.matrix = std::move(matrix);
    g.targets = std::move(targets);
    return g;
}

GateOp GateOp::phase_flip(int n, std::size_t basis_index) {
    if (basis_index >= (std::size_t{1} << n)) {
        throw std::invalid_argument("phase-flip index out of range");
    }
    GateOp g;
    g.label = "MCZ";
    g.kind = GateKind::PhaseFlip;
    g.targets = all_qubits(n);
    g.flip_index = basis_index;
    return g;
}

GateOp GateOp::invert_about_mean(int n) {
    GateOp g;
    g.label = "DIFF";
    g.kind = GateKind::InvertAboutMean;
    g.targets = all_qubits(n);
    return g;
}

StateVector init_zero(int n) {
    if (n < 1 || n > kMaxQubits) {
        throw std::invalid_argument("qubit count must be in [1, 14]");
    }
    StateVector s;
    s.n = n;
    s.amps.assign(std::size_t{1} << n, Complex{0.0, 0.0});
    s.amps[0] = Complex{1.0, 0.0};
    return s;
}

namespace {

void check_targets(const StateVector& state, const GateOp& gate) {
    for (int t : gate.targets) {
        if (t < 0 || t >= state.n) {
            throw std::invalid_argument("gate target out of range for state");
        }
    }
}

void apply_dense_1q(StateVector& state, const GateOp& gate) {
    const Complex m00 = gate.matrix[0], m01 = gate.matrix[1];
    const Complex m10 = gate.matrix[2], m11 = gate.matrix[3];
    const std::size_t step = std::size_t{1} << gate.targets[0];
    const std::size_t block = step << 1;
    const std::size_t dim = state.dim();
    for (std::size_t base = 0; base < dim; base += block) {
        for (std::size_t off = 0; off < step; ++off) {
            const std::size_t i0 = base + off;
            const std::size_t i1 = i0 + step;
            const Complex a = state.amps[i0];
            const Complex b = state.amps[i1];
            state.amps[i0] = m00 * a + m01 * b;
            state.amps[i1] = m10 * a + m11 * b;
        }
    }
}

bool is_diagonal(const std::vector<Complex>& m, std::size_t dim) {
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            if (i != j && std::abs(m[i * dim + j]) > 0.0) return false;
        }
    }
    return true;
}

// General k-target dense apply (k <= 3) by gather/scatter over the target
// bit positions. A diagonal fast path keeps controlled-phase ladders cheap.
void apply_dense_kq(StateVector& state, const GateOp& gate) {
    const int k = gate.arity();
    const std::size_t sub = std::size_t{1} << k;
    const std::size_t dim = state.dim();

    std::size_t target_mask = 0;
    for (int t : gate.targets) target_mask |= std::size_t{1} << t;

    if (is_diagonal(gate.matrix, sub)) {
        for (std::size_t i = 0; i < dim; ++i) {
            std::size_t local = 0;
            for (int b = 0; b < k; ++b) {
                if (i & (std::size_t{1} << gate.targets[b])) local |= std::size_t{1} << b;
            }
            state.amps[i] *= gate.matrix[local * sub + local];
        }
        return;
    }

    std::vector<Complex> scratch(sub);
    for (std::size_t base = 0; base < dim; ++base) {
        if (base & target_mask) continue;  // iterate bases with all target bits 0
        for (std::size_t local = 0; local < sub; ++local) {
            std::size_t idx = base;
            for (int b = 0; b < k; ++b) {
                if (local & (std::size_t{1} << b)) idx |= std::size_t{1} << gate.targets[b];
            }
            scratch[local] = state.amps[idx];
        }
        for (std::size_t row = 0; row < sub; ++row) {
            Complex acc{0.0, 0.0};
            for (std::size_t col = 0; col < sub; ++col) {
                acc += gate.matrix[row * sub + col] * scratch[col];
            }
            std::size_t idx = base;
            for (int b = 0; b < k; ++b) {
                if (row & (std::size_t{1} << b)) idx |= std::size_t{1} << gate.targets[b];
            }
            state.amps[idx] = acc;
        }
    }
}

}  // namespace

void apply_gate_inplace(StateVector& state, const GateOp& gate) {
    check_targets(state, gate);
    switch (gate.kind) {
        case GateKind::Dense:
            if (gate.arity() == 1) {
                apply_dense_1q(state, gate);
            } else {
                apply_dense_kq(state, gate);
            }
            break;
        case GateKind::PhaseFlip:
            if (gate.flip_index >= state.dim()) {
                throw std::invalid_argument("phase-flip index out of range for state");
            }
            state.amps[gate.flip_index] = -state.amps[gate.flip_index];
            break;
        case GateKind::InvertAboutMean: {
            Complex mean{0.0, 0.0};
            for (const auto& a : state.amps) mean += a;
            mean /= static_cast<double>(state.dim());
            for (auto& a : state.amps) a = 2.0 * mean - a;
            break;
        }
    }
}

StateVector apply_gate(const StateVector& state, const GateOp& gate) {
    StateVector out = state;
    apply_gate_inplace(out, gate);
    return out;
}

StateVector apply_circuit(const StateVector& state, const Circuit& circuit) {
    if (circuit.n != state.n) {
        throw std::invalid_argument("circuit qubit count does not match state");
    }
    StateVector out = state;
    for (const auto& gate : circuit.gates) {
        apply_gate_inplace(out, gate);
    }
    return out;
}

std::vector<double> probabilities(const StateVector& state) {
    std::vector<double> p(state.dim());
    for (std::size_t i = 0; i < p.size(); ++i) p[i] = std::norm(state.amps[i]);
    return p;
}

std::map<std::size_t, std::uint64_t> sample_counts(const StateVector& state,
                                                   std::uint64_t shots,
                                                   rng::Engine& engine) {
    if (shots < 1) throw std::invalid_argument("shots must be >= 1");
    const std::vector<double> p = probabilities(state);
    std::vector<double> cdf(p.size());
    std::partial_sum(p.begin(), p.end(), cdf.begin());
    cdf.back() = 1.0;  // guard against rounding in the last bin

    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::map<std::size_t, std::uint64_t> counts;
    for (std::uint64_t s = 0; s < shots; ++s) {
        const double u = unif(engine);
        const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        const std::size_t idx =
            static_cast<std::size_t>(std::distance(cdf.begin(), it));
        ++counts[std::min(idx, p.size() - 1)];
    }
    return counts;
}

}  // namespace novaq
