// novaq CLI: campaign orchestration and report emission.
//
// Subcommands:
//   generate  run a novaq or baseline campaign, emit cases + coverage
//   faults    evaluate a test suite against a benchmark's fault pool
//   growth    paired novaq/baseline coverage growth curves
//   report    consolidate one or more run directories
//
// Exit codes: 0 success, 2 config error, 3 input-artifact error.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <vector>

#include "novaq/faults.hpp"
#include "novaq/generator.hpp"
#include "novaq/reports.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfigError = 2;
constexpr int kExitArtifactError = 3;

struct CommonOpts {
    std::string config_path;
    std::string out_dir;
    std::optional<std::uint64_t> seed_override;
    std::optional<std::string> mode_override;
};

novaq::RunConfig load_config(const CommonOpts& opts) {
    novaq::RunConfig cfg = novaq::parse_config_file(opts.config_path);
    if (opts.seed_override) cfg.campaign.master_seed = *opts.seed_override;
    if (opts.mode_override) {
        cfg.campaign.mode = novaq::campaign_mode_from_string(*opts.mode_override);
    }
    return cfg;
}

// Removes the files this run created if it fails partway.
class OutputSet {
public:
    explicit OutputSet(fs::path dir) : dir_(std::move(dir)) {
        fs::create_directories(dir_);
    }
    fs::path track(const std::string& name) {
        fs::path p = dir_ / name;
        files_.push_back(p);
        return p;
    }
    void commit() { committed_ = true; }
    ~OutputSet() {
        if (committed_) return;
        for (const auto& p : files_) {
            std::error_code ec;
            fs::remove(p, ec);
        }
    }

private:
    fs::path dir_;
    std::vector<fs::path> files_;
    bool committed_ = false;
};

int cmd_generate(const CommonOpts& opts, int checkpoint_interval) {
    novaq::RunConfig cfg = load_config(opts);
    if (checkpoint_interval < 1) {
        throw std::invalid_argument("checkpoint interval must be >= 1");
    }
    OutputSet out(opts.out_dir);

    novaq::GridArchive archive;
    std::vector<novaq::TestCase> cases;
    std::vector<novaq::CoverageCheckpoint> checkpoints;
    auto sink = [&](const novaq::TestCase& tc) {
        cases.push_back(tc);
        if (static_cast<int>(cases.size()) % checkpoint_interval == 0 ||
            static_cast<int>(cases.size()) == cfg.campaign.total_budget) {
            const auto cov = archive.coverage();
            checkpoints.push_back({static_cast<int>(cases.size()), cov.occupied,
                                   cov.rate});
        }
    };
    novaq::run_campaign(cfg.campaign, archive, sink);

    novaq::write_manifest(out.track("manifest.json"), cfg);
    novaq::write_cases_csv(out.track("cases.csv"), cases, cfg.campaign.n_qubits);
    novaq::write_coverage_csv(out.track("coverage.csv"), checkpoints);
    novaq::write_archive_csv(out.track("archive.csv"), archive);
    out.commit();

    const auto cov = archive.coverage();
    std::cout << "generated " << cases.size() << " cases (" << novaq::to_string(cfg.campaign.mode)
              << ", n=" << cfg.campaign.n_qubits << "), occupied cells " << cov.occupied
              << " (" << novaq::format_double(cov.rate * 100.0) << "%)\n";
    return kExitOk;
}

int cmd_faults(const CommonOpts& opts, const std::string& suite_path,
               const std::string& program_name, int pool_size) {
    novaq::RunConfig cfg = load_config(opts);
    if (pool_size < 1) throw std::invalid_argument("fault pool size must be >= 1");

    const novaq::BenchmarkProgram program = novaq::benchmark_by_name(program_name);
    std::vector<novaq::TestCase> suite;
    try {
        suite = novaq::read_cases_csv(suite_path, program.circuit.n);
    } catch (const std::exception& e) {
        throw std::runtime_error(std::string("suite: ") + e.what());
    }
    if (suite.empty()) {
        throw std::runtime_error("suite is empty: " + suite_path);
    }

    OutputSet out(opts.out_dir);
    auto pool_rng = novaq::rng::make_stream(cfg.campaign.master_seed, "fault-pool");
    const auto pool = novaq::build_fault_pool(program, pool_size, pool_rng);

    // Base outputs are shared across the whole pool.
    std::vector<novaq::StateVector> base_out;
    base_out.reserve(suite.size());
    for (const auto& tc : suite) {
        base_out.push_back(novaq::apply_circuit(tc.state, program.circuit));
    }

    std::vector<novaq::FaultResultRow> rows;
    std::size_t detected_total = 0;
    for (std::size_t v = 0; v < pool.size(); ++v) {
        std::size_t detected = 0;
        for (std::size_t c = 0; c < suite.size(); ++c) {
            auto shot_rng = novaq::rng::make_stream(cfg.campaign.master_seed, "shots",
                                                    v * suite.size() + c);
            const auto mut_out =
                novaq::apply_circuit(suite[c].state, pool[v].mutated_circuit);
            if (novaq::detect_from_outputs(base_out[c], mut_out, cfg.detection,
                                           shot_rng)) {
                ++detected;
            }
        }
        detected_total += detected;
        rows.push_back({program.name, static_cast<int>(v), pool[v].gate_position,
                        pool[v].original_label, pool[v].replacement_label, detected,
                        suite.size(),
                        static_cast<double>(detected) /
                            static_cast<double>(suite.size())});
    }
    const std::size_t trials = pool.size() * suite.size();
    rows.push_back({program.name, -1, 0, "", "", detected_total, trials,
                    static_cast<double>(detected_total) / static_cast<double>(trials)});

    novaq::write_manifest(out.track("manifest.json"), cfg, pool);
    novaq::write_faults_csv(out.track("faults.csv"), rows);
    out.commit();

    std::cout << program.name << ": pooled accuracy "
              << novaq::format_double(rows.back().accuracy * 100.0) << "% over "
              << pool.size() << " variants x " << suite.size() << " cases\n";
    return kExitOk;
}

int cmd_growth(const CommonOpts& opts, int checkpoint_interval) {
    novaq::RunConfig cfg = load_config(opts);
    if (checkpoint_interval < 1) {
        throw std::invalid_argument("checkpoint interval must be >= 1");
    }
    OutputSet out(opts.out_dir);

    std::vector<novaq::GrowthPoint> points;
    for (const auto mode : {novaq::CampaignMode::Baseline, novaq::CampaignMode::Novaq}) {
        novaq::CampaignConfig cc = cfg.campaign;
        cc.mode = mode;
        novaq::GridArchive archive;
        int emitted = 0;
        auto sink = [&](const novaq::TestCase&) {
            ++emitted;
            if (emitted % checkpoint_interval == 0 || emitted == cc.total_budget) {
                points.push_back({novaq::to_string(mode), emitted,
                                  archive.coverage().occupied});
            }
        };
        novaq::run_campaign(cc, archive, sink);
    }

    novaq::write_manifest(out.track("manifest.json"), cfg);
    novaq::write_growth_csv(out.track("growth.csv"), points);
    out.commit();
    std::cout << "growth curves written (" << points.size() << " checkpoints)\n";
    return kExitOk;
}

int cmd_report(const std::vector<std::string>& run_dirs, const std::string& out_dir) {
    if (run_dirs.empty()) throw std::runtime_error("no run directories given");
    OutputSet out(out_dir);

    json runs = json::array();
    std::vector<std::string> metric_versions;
    for (const auto& dir : run_dirs) {
        const fs::path manifest_path = fs::path(dir) / "manifest.json";
        if (!fs::exists(manifest_path)) {
            throw std::runtime_error("missing manifest: " + manifest_path.string());
        }
        std::ifstream in(manifest_path);
        json manifest;
        in >> manifest;
        metric_versions.push_back(manifest.value("metric_version", "?"));

        json entry;
        entry["dir"] = dir;
        entry["manifest"] = manifest;
        for (const char* name : {"coverage.csv", "faults.csv", "growth.csv"}) {
            const fs::path p = fs::path(dir) / name;
            if (!fs::exists(p)) continue;
            std::ifstream f(p);
            std::string content((std::istreambuf_iterator<char>(f)),
                                std::istreambuf_iterator<char>());
            entry["tables"][name] = content;
        }
        runs.push_back(std::move(entry));
    }

    const bool mixed = std::adjacent_find(metric_versions.begin(), metric_versions.end(),
                                          std::not_equal_to<>()) != metric_versions.end();
    json consolidated;
    consolidated["schema"] = "novaq-report/1";
    consolidated["metric_version_mismatch"] = mixed;
    consolidated["runs"] = std::move(runs);

    {
        std::ofstream jf(out.track("report.json"));
        jf << consolidated.dump(2) << '\n';
    }
    {
        std::ofstream mf(out.track("report.md"));
        mf << "# novaq consolidated report\n\n";
        if (mixed) {
            mf << "**WARNING: runs were produced with different metric-definition "
                  "versions; numbers are not comparable.**\n\n";
        }
        mf << "| run | mode | n_qubits | master_seed | metric version |\n";
        mf << "|---|---|---|---|---|\n";
        for (const auto& dir : run_dirs) {
            const auto s = novaq::read_manifest_summary(fs::path(dir) / "manifest.json");
            mf << "| " << dir << " | " << s.mode << " | " << s.n_qubits << " | "
               << s.master_seed << " | " << s.metric_version << " |\n";
        }
    }
    out.commit();
    if (mixed) {
        std::cerr << "warning: mixed metric-definition versions across runs\n";
    }
    std::cout << "report written to " << out_dir << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"novaq: diversity-guided test generation for quantum programs"};
    app.require_subcommand(1);

    CommonOpts gen_opts, fault_opts, growth_opts;
    int gen_checkpoint = 100;
    int growth_checkpoint = 500;
    std::string suite_path, program_name;
    int fault_pool_size = 20;
    std::vector<std::string> report_dirs;
    std::string report_out = ".";

    auto add_common = [](CLI::App* sub, CommonOpts& o, bool with_mode) {
        sub->add_option("--config", o.config_path, "campaign config file")->required();
        sub->add_option("--out", o.out_dir, "output directory")->required();
        sub->add_option("--seed", o.seed_override, "master seed override");
        if (with_mode) {
            sub->add_option("--mode", o.mode_override, "mode override (novaq|baseline)");
        }
    };

    auto* generate = app.add_subcommand("generate", "run a test-generation campaign");
    add_common(generate, gen_opts, true);
    generate->add_option("--checkpoint-interval", gen_checkpoint,
                         "coverage checkpoint spacing");

    auto* faults = app.add_subcommand("faults", "detection rates on a fault pool");
    add_common(faults, fault_opts, false);
    faults->add_option("--suite", suite_path, "cases.csv from a generate run")
        ->required();
    faults->add_option("--program", program_name,
                       "benchmark (Grover-03/05/07/10/12, PE-05, QFT-05)")
        ->required();
    faults->add_option("--pool", fault_pool_size, "fault-pool size");

    auto* growth = app.add_subcommand("growth", "paired coverage growth curves");
    add_common(growth, growth_opts, false);
    growth->add_option("--checkpoint-interval", growth_checkpoint,
                       "growth checkpoint spacing");

    auto* report = app.add_subcommand("report", "consolidate run directories");
    report->add_option("dirs", report_dirs, "run directories")->required();
    report->add_option("--out", report_out, "output directory");

    try {
        app.parse(argc, argv);
        if (generate->parsed()) return cmd_generate(gen_opts, gen_checkpoint);
        if (faults->parsed()) {
            return cmd_faults(fault_opts, suite_path, program_name, fault_pool_size);
        }
        if (growth->parsed()) return cmd_growth(growth_opts, growth_checkpoint);
        if (report->parsed()) return cmd_report(report_dirs, report_out);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitConfigError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfigError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitArtifactError;
    }
    return kExitOk;
}
