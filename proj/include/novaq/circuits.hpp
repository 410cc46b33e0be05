// circuits.hpp
// Builders for the U gate, standard single-qubit gates, QFT/IQFT, the
// parameterized initial circuit, and the benchmark programs.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "novaq/state.hpp"

namespace novaq {

// Euler angles of the universal single-qubit rotation.
struct UParams {
    double theta = 0.0;
    double phi = 0.0;
    double lambda = 0.0;
};

// A program under test. The circuit is applied to whatever input state the
// caller supplies; generated test cases replace the usual state preparation.
struct BenchmarkProgram {
    std::string name;
    Circuit circuit;
};

// U(theta, phi, lambda):
//   [ cos(t/2)              -e^{i*lambda} sin(t/2)      ]
//   [ e^{i*phi} sin(t/2)     e^{i*(phi+lambda)} cos(t/2) ]
GateOp u_gate(const UParams& p, int target);

// Fixed single-qubit gates on `target`.
GateOp h_gate(int target);
GateOp x_gate(int target);
GateOp z_gate(int target);
GateOp s_gate(int target);
GateOp t_gate(int target);

// Controlled phase: multiplies |11> on (control, target) by e^{i*angle}.
GateOp cphase_gate(double angle, int control, int target);
GateOp swap_gate(int a, int b);

// Forward transform: |k> -> (1/sqrt(2^n)) sum_j e^{+2*pi*i*jk/2^n} |j>.
Circuit qft(int n);
// Inverse transform (e^{-2*pi*i*jk/2^n} kernel); qft(n) then iqft(n) is
// the identity.
Circuit iqft(int n);

// One U gate per qubit (3 params each, qubit order) followed by iqft(n).
Circuit initial_circuit(int n, const std::vector<double>& params);

// Grover search: `iterations` rounds of [oracle phase flip on `marked`,
// inversion about the mean]. No state preparation is included.
BenchmarkProgram grover(int n, std::size_t marked, int iterations);

int grover_optimal_iterations(int n);

// Standard phase estimation of diag(1, e^{2*pi*i*eigenphase}) with
// n_count counting qubits (0..n_count-1) and one work qubit (n_count).
// Includes the H layer and the work-qubit |1> preparation.
BenchmarkProgram phase_estimation(int n_count, double eigenphase);

// The seven benchmark programs by table name:
// Grover-03/05/07/10/12, PE-05, QFT-05.
BenchmarkProgram benchmark_by_name(const std::string& name);
std::vector<std::string> benchmark_names();

}  // namespace novaq
