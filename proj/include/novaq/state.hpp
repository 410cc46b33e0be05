// state.hpp
// Dense statevector simulation for up to 14 qubits.
// Qubit 0 is the least-significant bit of the basis index.

#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "novaq/rng.hpp"

namespace novaq {

using Complex = std::complex<double>;

inline constexpr int kMaxQubits = 14;
inline constexpr double kNormTolerance = 1e-10;
inline constexpr double kUnitaryTolerance = 1e-10;

// 2^n complex amplitudes of an n-qubit pure state.
struct StateVector {
    int n = 0;
    std::vector<Complex> amps;

    std::size_t dim() const { return amps.size(); }
    double norm_sq() const;
};

enum class GateKind {
    Dense,            // explicit 2^k x 2^k unitary on k <= 3 targets
    PhaseFlip,        // multi-controlled Z equivalent: negates one amplitude
    InvertAboutMean,  // Grover diffuser applied as a whole-register update
};

// One gate in a circuit. Dense gates carry a row-major matrix; the two
// special kinds act on the full register and carry no matrix.
struct GateOp {
    std::string label;
    GateKind kind = GateKind::Dense;
    std::vector<Complex> matrix;  // row-major, Dense only
    std::vector<int> targets;     // Dense: k targets; specials: all qubits
    std::size_t flip_index = 0;   // PhaseFlip only

    int arity() const { return static_cast<int>(targets.size()); }

    // Validates unitarity (within kUnitaryTolerance) and 1 <= k <= 3.
    static GateOp dense(std::string label, std::vector<Complex> matrix,
                        std::vector<int> targets);
    static GateOp phase_flip(int n, std::size_t basis_index);
    static GateOp invert_about_mean(int n);
};

struct Circuit {
    int n = 0;
    std::vector<GateOp> gates;
};

// |0...0> on n qubits. Throws std::invalid_argument for n outside [1, 14].
StateVector init_zero(int n);

// Pure application; throws on target out of range or qubit-count mismatch.
StateVector apply_gate(const StateVector& state, const GateOp& gate);
StateVector apply_circuit(const StateVector& state, const Circuit& circuit);

// In-place kernel, used by the pure wrappers and the hot loops.
void apply_gate_inplace(StateVector& state, const GateOp& gate);

// |amp_i|^2 for every basis index.
std::vector<double> probabilities(const StateVector& state);

// Shot-based measurement; counts sum to `shots`, deterministic given the
// engine state.
std::map<std::size_t, std::uint64_t> sample_counts(const StateVector& state,
                                                   std::uint64_t shots,
                                                   rng::Engine& engine);

}  // namespace novaq
