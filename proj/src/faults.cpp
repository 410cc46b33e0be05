#include "novaq/faults.hpp"

#include <boost/math/distributions/chi_squared.hpp>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace novaq {

void DetectionConfig::validate() const {
    if (shots < 1) throw std::invalid_argument("shots must be >= 1");
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw std::invalid_argument("alpha must be in (0, 1)");
    }
    if (exact_tvd_threshold < 0.0) {
        throw std::invalid_argument("exact_tvd_threshold must be >= 0");
    }
}

DetectMode detect_mode_from_string(const std::string& s) {
    if (s == "statistical") return DetectMode::Statistical;
    if (s == "exact") return DetectMode::Exact;
    throw std::invalid_argument("detect mode must be 'statistical' or 'exact', got '" +
                                s + "'");
}

std::string to_string(DetectMode mode) {
    return mode == DetectMode::Statistical ? "statistical" : "exact";
}

double total_variation_distance(const std::vector<double>& p,
                                const std::vector<double>& q) {
    if (p.size() != q.size()) {
        throw std::invalid_argument("distribution size mismatch");
    }
    double acc = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) acc += std::abs(p[i] - q[i]);
    return acc / 2.0;
}

FaultyProgram inject_fault(const BenchmarkProgram& program, rng::Engine& engine) {
    if (program.circuit.gates.empty()) {
        throw std::invalid_argument("cannot inject a fault into an empty circuit");
    }
    std::uniform_int_distribution<std::size_t> pos_dist(
        0, program.circuit.gates.size() - 1);
    const std::size_t pos = pos_dist(engine);
    const GateOp& original = program.circuit.gates[pos];
    const int target = original.targets.front();

    std::uniform_int_distribution<int> kind_dist(0, 5);
    FaultyProgram fp;
    fp.base_name = program.name;
    fp.mutated_circuit = program.circuit;
    fp.gate_position = pos;
    fp.original_label = original.label;
    switch (kind_dist(engine)) {
        case 0:
            fp.mutated_circuit.gates[pos] = h_gate(target);
            break;
        case 1:
            fp.mutated_circuit.gates[pos] = x_gate(target);
            break;
        case 2:
            fp.mutated_circuit.gates[pos] = z_gate(target);
            break;
        case 3:
            fp.mutated_circuit.gates[pos] = s_gate(target);
            break;
        case 4:
            fp.mutated_circuit.gates[pos] = t_gate(target);
            break;
        default: {
            std::uniform_real_distribution<double> ang(0.0, 2.0 * std::numbers::pi);
            const UParams u{ang(engine), ang(engine), ang(engine)};
            fp.replacement_params = {u.theta, u.phi, u.lambda};
            fp.mutated_circuit.gates[pos] = u_gate(u, target);
            break;
        }
    }
    fp.replacement_label = fp.mutated_circuit.gates[pos].label;
    return fp;
}

namespace {

StateVector basis_state(int n, std::size_t index) {
    StateVector s = init_zero(n);
    s.amps[0] = Complex{0.0, 0.0};
    s.amps[index] = Complex{1.0, 0.0};
    return s;
}

constexpr double kFilterTvd = 1e-6;
constexpr int kFilterProbeCount = 64;
constexpr int kFilterBasisExhaustiveMax = 7;
constexpr double kMinExpectedPerBin = 5.0;

}  // namespace

bool is_functional_change(const BenchmarkProgram& base, const FaultyProgram& mutant,
                          rng::Engine& engine) {
    if (base.circuit.n != mutant.mutated_circuit.n) {
        throw std::invalid_argument("qubit-count mismatch between base and mutant");
    }
    const int n = base.circuit.n;
    auto differs = [&](const StateVector& probe) {
        const auto p = probabilities(apply_circuit(probe, base.circuit));
        const auto q = probabilities(apply_circuit(probe, mutant.mutated_circuit));
        return total_variation_distance(p, q) > kFilterTvd;
    };

    if (n <= kFilterBasisExhaustiveMax) {
        const std::size_t dim = std::size_t{1} << n;
        for (std::size_t k = 0; k < dim; ++k) {
            if (differs(basis_state(n, k))) return true;
        }
        return false;
    }

    std::uniform_int_distribution<std::size_t> idx_dist(0, (std::size_t{1} << n) - 1);
    for (int k = 0; k < kFilterProbeCount; ++k) {
        if (differs(basis_state(n, idx_dist(engine)))) return true;
    }
    std::uniform_real_distribution<double> ang(0.0, 2.0 * std::numbers::pi);
    for (int k = 0; k < kFilterProbeCount; ++k) {
        std::vector<double> params(static_cast<std::size_t>(3 * n));
        for (auto& p : params) p = ang(engine);
        if (differs(apply_circuit(init_zero(n), initial_circuit(n, params)))) {
            return true;
        }
    }
    return false;
}

double two_sample_chi_square_pvalue(const std::vector<std::uint64_t>& a,
                                    const std::vector<std::uint64_t>& b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("count vector size mismatch");
    }
    double n1 = 0.0, n2 = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        n1 += static_cast<double>(a[i]);
        n2 += static_cast<double>(b[i]);
    }
    if (n1 == 0.0 || n2 == 0.0) return 1.0;
    const double total = n1 + n2;

    // Pool categories whose combined expectation falls below the usual
    // chi-square validity floor into a single bin.
    std::vector<std::pair<double, double>> bins;  // (obs1, obs2)
    double pooled1 = 0.0, pooled2 = 0.0, pooled_combined = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double combined = static_cast<double>(a[i] + b[i]);
        if (combined == 0.0) continue;
        const double min_expected = std::min(n1, n2) * combined / total;
        if (min_expected < kMinExpectedPerBin) {
            pooled1 += static_cast<double>(a[i]);
            pooled2 += static_cast<double>(b[i]);
            pooled_combined += combined;
        } else {
            bins.emplace_back(static_cast<double>(a[i]), static_cast<double>(b[i]));
        }
    }
    if (pooled_combined > 0.0) bins.emplace_back(pooled1, pooled2);
    if (bins.size() < 2) return 1.0;

    double stat = 0.0;
    for (const auto& [o1, o2] : bins) {
        const double combined = o1 + o2;
        const double e1 = n1 * combined / total;
        const double e2 = n2 * combined / total;
        stat += (o1 - e1) * (o1 - e1) / e1;
        stat += (o2 - e2) * (o2 - e2) / e2;
    }
    const double df = static_cast<double>(bins.size() - 1);
    boost::math::chi_squared dist(df);
    return boost::math::cdf(boost::math::complement(dist, stat));
}

bool detect_from_outputs(const StateVector& out_base, const StateVector& out_mut,
                         const DetectionConfig& cfg, rng::Engine& engine) {
    cfg.validate();
    if (cfg.mode == DetectMode::Exact) {
        return total_variation_distance(probabilities(out_base), probabilities(out_mut)) >
               cfg.exact_tvd_threshold;
    }
    const std::size_t dim = out_base.dim();
    std::vector<std::uint64_t> counts_base(dim, 0), counts_mut(dim, 0);
    for (const auto& [idx, c] : sample_counts(out_base, cfg.shots, engine)) {
        counts_base[idx] = c;
    }
    for (const auto& [idx, c] : sample_counts(out_mut, cfg.shots, engine)) {
        counts_mut[idx] = c;
    }
    return two_sample_chi_square_pvalue(counts_base, counts_mut) < cfg.alpha;
}

bool detect_bug(const BenchmarkProgram& base, const FaultyProgram& mutant,
                const StateVector& input, const DetectionConfig& cfg,
                rng::Engine& engine) {
    if (input.n != base.circuit.n) {
        throw std::invalid_argument("input qubit count does not match program");
    }
    const StateVector out_base = apply_circuit(input, base.circuit);
    const StateVector out_mut = apply_circuit(input, mutant.mutated_circuit);
    return detect_from_outputs(out_base, out_mut, cfg, engine);
}

double detection_rate(const std::vector<TestCase>& suite, const BenchmarkProgram& base,
                      const FaultyProgram& mutant, const DetectionConfig& cfg,
                      rng::Engine& engine) {
    if (suite.empty()) throw std::invalid_argument("test suite is empty");
    std::size_t detected = 0;
    for (const auto& tc : suite) {
        if (detect_bug(base, mutant, tc.state, cfg, engine)) ++detected;
    }
    return static_cast<double>(detected) / static_cast<double>(suite.size());
}

std::vector<FaultyProgram> build_fault_pool(const BenchmarkProgram& program, int count,
                                            rng::Engine& engine) {
    if (count < 1) throw std::invalid_argument("fault pool size must be >= 1");
    std::vector<FaultyProgram> pool;
    pool.reserve(static_cast<std::size_t>(count));
    // Bounded retry budget so an (unlikely) all-equivalent pool cannot spin.
    const int max_attempts = count * 200;
    for (int attempt = 0; attempt < max_attempts &&
                          static_cast<int>(pool.size()) < count;
         ++attempt) {
        FaultyProgram fp = inject_fault(program, engine);
        if (is_functional_change(program, fp, engine)) pool.push_back(std::move(fp));
    }
    if (static_cast<int>(pool.size()) < count) {
        throw std::runtime_error("could not build fault pool: too many equivalent mutants");
    }
    return pool;
}

}  // namespace novaq
