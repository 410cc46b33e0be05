#include "novaq/reports.hpp"

#include <nlohmann/json.hpp>

#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace novaq {

namespace {

using nlohmann::json;

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

[[noreturn]] void config_error(const std::string& origin, const std::string& what) {
    throw std::invalid_argument("config " + origin + ": " + what);
}

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
    return out;
}

}  // namespace

RunConfig parse_config_text(const std::string& text, const std::string& origin) {
    RunConfig cfg;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto comment = line.find('#');
        if (comment != std::string::npos) line.resize(comment);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            config_error(origin, "line " + std::to_string(lineno) + ": expected key=value");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        try {
            if (key == "n_qubits") {
                cfg.campaign.n_qubits = std::stoi(value);
            } else if (key == "pool_size") {
                cfg.campaign.pool_size = std::stoi(value);
            } else if (key == "tests_per_seed_per_iter") {
                cfg.campaign.tests_per_seed_per_iter = std::stoi(value);
            } else if (key == "survivors") {
                cfg.campaign.survivors = std::stoi(value);
            } else if (key == "total_budget") {
                cfg.campaign.total_budget = std::stoi(value);
            } else if (key == "p_random_mutation") {
                cfg.campaign.p_random_mutation = std::stod(value);
            } else if (key == "master_seed") {
                cfg.campaign.master_seed = std::stoull(value);
            } else if (key == "mode") {
                cfg.campaign.mode = campaign_mode_from_string(value);
            } else if (key == "shots") {
                cfg.detection.shots = std::stoi(value);
            } else if (key == "alpha") {
                cfg.detection.alpha = std::stod(value);
            } else if (key == "detect_mode") {
                cfg.detection.mode = detect_mode_from_string(value);
            } else if (key == "exact_tvd_threshold") {
                cfg.detection.exact_tvd_threshold = std::stod(value);
            } else {
                config_error(origin, "unknown key '" + key + "'");
            }
        } catch (const std::invalid_argument& e) {
            throw;
        } catch (const std::exception&) {
            config_error(origin, "bad value for '" + key + "': '" + value + "'");
        }
    }
    cfg.campaign.validate();
    cfg.detection.validate();
    return cfg;
}

RunConfig parse_config_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("config file not readable: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str(), path.string());
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_cases_csv(const std::filesystem::path& path,
                     const std::vector<TestCase>& cases, int n_qubits) {
    auto out = open_out(path);
    out << "seed_id";
    for (int i = 0; i < 3 * n_qubits; ++i) out << ",param_" << i;
    out << ",magnitude,phase,entanglement,cell_m,cell_p,cell_e,novelty\n";
    for (const auto& tc : cases) {
        out << tc.seed_id;
        for (double p : tc.params) out << ',' << format_double(p);
        out << ',' << format_double(tc.metrics.magnitude) << ','
            << format_double(tc.metrics.phase) << ','
            << format_double(tc.metrics.entanglement) << ',' << tc.cell.m << ','
            << tc.cell.p << ',' << tc.cell.e << ',' << format_double(tc.novelty)
            << '\n';
    }
}

void write_coverage_csv(const std::filesystem::path& path,
                        const std::vector<CoverageCheckpoint>& checkpoints) {
    auto out = open_out(path);
    out << "cases_emitted,occupied_cells,coverage_rate\n";
    for (const auto& cp : checkpoints) {
        out << cp.cases_emitted << ',' << cp.occupied_cells << ','
            << format_double(cp.coverage_rate) << '\n';
    }
}

void write_archive_csv(const std::filesystem::path& path, const GridArchive& archive) {
    auto out = open_out(path);
    out << "flat_index,count\n";
    const auto& counts = archive.counts();
    for (std::size_t i = 0; i < counts.size(); ++i) {
        out << i << ',' << counts[i] << '\n';
    }
}

void write_growth_csv(const std::filesystem::path& path,
                      const std::vector<GrowthPoint>& points) {
    auto out = open_out(path);
    out << "mode,cases,occupied_cells\n";
    for (const auto& p : points) {
        out << p.mode << ',' << p.cases << ',' << p.occupied_cells << '\n';
    }
}

void write_faults_csv(const std::filesystem::path& path,
                      const std::vector<FaultResultRow>& rows) {
    auto out = open_out(path);
    out << "program,variant,gate_position,original,replacement,detected,total,accuracy\n";
    for (const auto& r : rows) {
        out << r.program << ',';
        if (r.variant < 0) {
            out << "pooled";
        } else {
            out << r.variant;
        }
        out << ',' << r.gate_position << ',' << r.original_label << ','
            << r.replacement_label << ',' << r.detected << ',' << r.total << ','
            << format_double(r.accuracy) << '\n';
    }
}

void write_manifest(const std::filesystem::path& path, const RunConfig& config,
                    const std::vector<FaultyProgram>& fault_pool) {
    json j;
    j["schema"] = std::string(kManifestSchema);
    j["artifact_version"] = std::string(kArtifactVersion);
    j["metric_version"] = std::string(kMetricVersion);

    std::time_t now = std::time(nullptr);
    if (const char* sde = std::getenv("SOURCE_DATE_EPOCH")) {
        now = static_cast<std::time_t>(std::strtoll(sde, nullptr, 10));
    }
    char stamp[32];
    std::tm tm_utc{};
    gmtime_r(&now, &tm_utc);
    std::strftime(stamp, sizeof(stamp), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
    j["created_utc"] = stamp;

    json c;
    c["n_qubits"] = config.campaign.n_qubits;
    c["pool_size"] = config.campaign.pool_size;
    c["tests_per_seed_per_iter"] = config.campaign.tests_per_seed_per_iter;
    c["survivors"] = config.campaign.survivors;
    c["total_budget"] = config.campaign.total_budget;
    c["p_random_mutation"] = config.campaign.p_random_mutation;
    c["master_seed"] = config.campaign.master_seed;
    c["mode"] = to_string(config.campaign.mode);
    c["shots"] = config.detection.shots;
    c["alpha"] = config.detection.alpha;
    c["detect_mode"] = to_string(config.detection.mode);
    c["exact_tvd_threshold"] = config.detection.exact_tvd_threshold;
    j["config"] = c;

    if (!fault_pool.empty()) {
        json pool = json::array();
        for (const auto& fp : fault_pool) {
            json v;
            v["program"] = fp.base_name;
            v["gate_position"] = fp.gate_position;
            v["original"] = fp.original_label;
            v["replacement"] = fp.replacement_label;
            v["replacement_params"] = fp.replacement_params;
            pool.push_back(std::move(v));
        }
        j["fault_pool"] = std::move(pool);
    }

    auto out = open_out(path);
    out << j.dump(2) << '\n';
}

std::vector<TestCase> read_cases_csv(const std::filesystem::path& path, int n_qubits) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cases file not readable: " + path.string());
    std::string line;
    if (!std::getline(in, line)) {
        throw std::runtime_error("cases file is empty: " + path.string());
    }
    const std::size_t expected_fields = 1 + static_cast<std::size_t>(3 * n_qubits) + 7;

    std::vector<TestCase> cases;
    while (std::getline(in, line)) {
        if (trim(line).empty()) continue;
        std::vector<std::string> fields;
        std::istringstream ls(line);
        std::string field;
        while (std::getline(ls, field, ',')) fields.push_back(field);
        if (fields.size() != expected_fields) {
            throw std::runtime_error("cases row has " + std::to_string(fields.size()) +
                                     " fields, expected " +
                                     std::to_string(expected_fields));
        }
        TestCase tc;
        tc.seed_id = std::stoi(fields[0]);
        tc.params.resize(static_cast<std::size_t>(3 * n_qubits));
        for (int i = 0; i < 3 * n_qubits; ++i) {
            tc.params[i] = std::stod(fields[1 + i]);
        }
        const std::size_t base = 1 + static_cast<std::size_t>(3 * n_qubits);
        tc.metrics.magnitude = std::stod(fields[base]);
        tc.metrics.phase = std::stod(fields[base + 1]);
        tc.metrics.entanglement = std::stod(fields[base + 2]);
        tc.cell.m = std::stoi(fields[base + 3]);
        tc.cell.p = std::stoi(fields[base + 4]);
        tc.cell.e = std::stoi(fields[base + 5]);
        tc.novelty = std::stod(fields[base + 6]);
        tc.state = apply_circuit(init_zero(n_qubits),
                                 initial_circuit(n_qubits, tc.params));
        cases.push_back(std::move(tc));
    }
    return cases;
}

ManifestSummary read_manifest_summary(const std::filesystem::path& manifest_path) {
    std::ifstream in(manifest_path);
    if (!in) throw std::runtime_error("manifest not readable: " + manifest_path.string());
    json j;
    in >> j;
    ManifestSummary s;
    s.schema = j.value("schema", "");
    s.metric_version = j.value("metric_version", "");
    const auto& c = j.at("config");
    s.master_seed = c.at("master_seed").get<std::uint64_t>();
    s.n_qubits = c.at("n_qubits").get<int>();
    s.mode = c.at("mode").get<std::string>();
    return s;
}

}  // namespace novaq
