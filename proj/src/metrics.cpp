#include "novaq/metrics.hpp"

#include <algorithm>
#include <cmath>

namespace novaq {

namespace {
constexpr double kPhaseProbCutoff = 1e-12;
}

double magnitude_score(const StateVector& state) {
    double entropy = 0.0;
    for (const auto& a : state.amps) {
        const double p = std::norm(a);
        if (p > 0.0) entropy -= p * std::log2(p);
    }
    const double score = entropy / static_cast<double>(state.n);
    return std::clamp(score, 0.0, 1.0);
}

double phase_score(const StateVector& state) {
    // Gauge: rotate so the largest-magnitude amplitude is real positive.
    std::size_t ref = 0;
    double best = -1.0;
    for (std::size_t i = 0; i < state.amps.size(); ++i) {
        const double p = std::norm(state.amps[i]);
        if (p > best) {
            best = p;
            ref = i;
        }
    }
    if (best <= kPhaseProbCutoff) return 0.0;
    const double gauge = std::arg(state.amps[ref]);

    // Resultant of unit phasors weighted by probability; dispersion is
    // one minus its length.
    double re = 0.0, im = 0.0;
    for (const auto& a : state.amps) {
        const double p = std::norm(a);
        if (p <= kPhaseProbCutoff) continue;
        const double ang = std::arg(a) - gauge;
        re += p * std::cos(ang);
        im += p * std::sin(ang);
    }
    return std::clamp(1.0 - std::hypot(re, im), 0.0, 1.0);
}

double reduced_purity(const StateVector& state, int qubit) {
    const std::size_t step = std::size_t{1} << qubit;
    const std::size_t dim = state.dim();
    // rho = [[a, b], [conj(b), d]] over the qubit's 0/1 subspaces.
    double a = 0.0, d = 0.0;
    Complex b{0.0, 0.0};
    for (std::size_t base = 0; base < dim; ++base) {
        if (base & step) continue;
        const Complex lo = state.amps[base];
        const Complex hi = state.amps[base + step];
        a += std::norm(lo);
        d += std::norm(hi);
        b += lo * std::conj(hi);
    }
    return a * a + d * d + 2.0 * std::norm(b);
}

double entanglement_score(const StateVector& state) {
    if (state.n < 2) return 0.0;
    double purity_sum = 0.0;
    for (int q = 0; q < state.n; ++q) purity_sum += reduced_purity(state, q);
    const double q_measure = 2.0 * (1.0 - purity_sum / static_cast<double>(state.n));
    return std::clamp(q_measure, 0.0, 1.0);
}

MetricTriple metric_triple(const StateVector& state) {
    return MetricTriple{magnitude_score(state), phase_score(state),
                        entanglement_score(state)};
}

}  // namespace novaq
