// faults.hpp
// Single-gate replacement faults, the functional-change filter, and the
// statistical bug-detection oracle.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "novaq/circuits.hpp"
#include "novaq/generator.hpp"
#include "novaq/rng.hpp"

namespace novaq {

// A benchmark program with exactly one gate replaced.
struct FaultyProgram {
    std::string base_name;
    Circuit mutated_circuit;
    std::size_t gate_position = 0;
    std::string original_label;
    std::string replacement_label;
    // theta/phi/lambda when the replacement is a random U gate, else empty.
    std::vector<double> replacement_params;
};

enum class DetectMode { Statistical, Exact };

struct DetectionConfig {
    int shots = 1000;
    double alpha = 0.01;
    DetectMode mode = DetectMode::Statistical;
    double exact_tvd_threshold = 1e-6;

    void validate() const;
};

DetectMode detect_mode_from_string(const std::string& s);
std::string to_string(DetectMode mode);

// Half the L1 distance between two distributions of equal length.
double total_variation_distance(const std::vector<double>& p,
                                const std::vector<double>& q);

// Replaces one uniformly chosen gate with a gate from
// {H, X, Z, S, T, U(random)} on the original's first target.
FaultyProgram inject_fault(const BenchmarkProgram& program, rng::Engine& engine);

// TRUE iff some probe input (all basis states for n <= 7, else 64 basis
// states plus 64 random initial-circuit states) separates the output
// distributions by TVD > 1e-6.
bool is_functional_change(const BenchmarkProgram& base, const FaultyProgram& mutant,
                          rng::Engine& engine);

// Statistical mode: two-sample Pearson chi-square on shot counts with
// low-expectation bins pooled; detected iff p < alpha. Exact mode: TVD of
// exact output distributions above the threshold.
bool detect_bug(const BenchmarkProgram& base, const FaultyProgram& mutant,
                const StateVector& input, const DetectionConfig& cfg,
                rng::Engine& engine);

// Same oracle on precomputed program outputs; lets callers reuse the base
// program's output across a whole fault pool.
bool detect_from_outputs(const StateVector& out_base, const StateVector& out_mutant,
                         const DetectionConfig& cfg, rng::Engine& engine);

// Fraction of test cases whose oracle flags the mutant.
double detection_rate(const std::vector<TestCase>& suite, const BenchmarkProgram& base,
                      const FaultyProgram& mutant, const DetectionConfig& cfg,
                      rng::Engine& engine);

// Repeatedly injects faults and keeps the first `count` that pass the
// functional-change filter.
std::vector<FaultyProgram> build_fault_pool(const BenchmarkProgram& program, int count,
                                            rng::Engine& engine);

// Exposed for the oracle's calibration tests: p-value of the two-sample
// chi-square over two counts-per-category vectors of equal length.
double two_sample_chi_square_pvalue(const std::vector<std::uint64_t>& a,
                                    const std::vector<std::uint64_t>& b);

}  // namespace novaq
