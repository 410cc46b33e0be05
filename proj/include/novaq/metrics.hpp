// metrics.hpp
// The (magnitude, phase, entanglement) triplet for a state vector, each
// normalized to [0, 1]. Definitions are versioned so reports can never be
// confused with other tools' metric formulas.

#pragma once

#include <array>
#include <string_view>

#include "novaq/state.hpp"

namespace novaq {

inline constexpr std::string_view kMetricVersion = "novaq-metrics/1";

struct MetricTriple {
    double magnitude = 0.0;
    double phase = 0.0;
    double entanglement = 0.0;
};

// Shannon entropy of the outcome distribution in bits, divided by n.
double magnitude_score(const StateVector& state);

// Probability-weighted circular dispersion of amplitude phases, after
// fixing the global phase so the largest-magnitude amplitude is real
// positive (ties broken by lowest index). Amplitudes with probability
// <= 1e-12 are excluded.
double phase_score(const StateVector& state);

// Meyer-Wallach global entanglement Q = 2*(1 - mean single-qubit purity).
// Returns 0 for n = 1.
double entanglement_score(const StateVector& state);

MetricTriple metric_triple(const StateVector& state);

// Tr(rho_k^2) for the reduced density matrix of qubit k.
double reduced_purity(const StateVector& state, int qubit);

}  // namespace novaq
