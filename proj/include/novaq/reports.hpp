// reports.hpp
// Config-file parsing, run manifests, and CSV emission for the campaign
// CLI. All files are plain CSV/JSON; plotting is left to external tools.

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "novaq/archive.hpp"
#include "novaq/faults.hpp"
#include "novaq/generator.hpp"

namespace novaq {

inline constexpr std::string_view kManifestSchema = "novaq-manifest/1";
inline constexpr std::string_view kArtifactVersion = "0.1.0";

struct RunConfig {
    CampaignConfig campaign;
    DetectionConfig detection;
};

// Flat key=value file; '#' starts a comment. Unknown keys are errors.
RunConfig parse_config_file(const std::filesystem::path& path);
RunConfig parse_config_text(const std::string& text, const std::string& origin);

// Fixed-width round-trippable formatting used by every CSV writer.
std::string format_double(double v);

struct CoverageCheckpoint {
    int cases_emitted = 0;
    std::size_t occupied_cells = 0;
    double coverage_rate = 0.0;
};

void write_cases_csv(const std::filesystem::path& path,
                     const std::vector<TestCase>& cases, int n_qubits);
void write_coverage_csv(const std::filesystem::path& path,
                        const std::vector<CoverageCheckpoint>& checkpoints);
void write_archive_csv(const std::filesystem::path& path, const GridArchive& archive);

struct GrowthPoint {
    std::string mode;
    int cases = 0;
    std::size_t occupied_cells = 0;
};

void write_growth_csv(const std::filesystem::path& path,
                      const std::vector<GrowthPoint>& points);

struct FaultResultRow {
    std::string program;
    int variant = -1;  // -1 marks the pooled row
    std::size_t gate_position = 0;
    std::string original_label;
    std::string replacement_label;
    std::size_t detected = 0;
    std::size_t total = 0;
    double accuracy = 0.0;
};

void write_faults_csv(const std::filesystem::path& path,
                      const std::vector<FaultResultRow>& rows);

// Manifest JSON. The timestamp honors SOURCE_DATE_EPOCH so replayed runs
// can be byte-identical.
void write_manifest(const std::filesystem::path& path, const RunConfig& config,
                    const std::vector<FaultyProgram>& fault_pool = {});

// Reads a previously written cases.csv back into test cases, rebuilding
// each state from its recorded parameters. Throws on malformed input.
std::vector<TestCase> read_cases_csv(const std::filesystem::path& path, int n_qubits);

// Reads n_qubits and mode back from a run directory's manifest.
struct ManifestSummary {
    std::string schema;
    std::string metric_version;
    std::uint64_t master_seed = 0;
    int n_qubits = 0;
    std::string mode;
};

ManifestSummary read_manifest_summary(const std::filesystem::path& manifest_path);

}  // namespace novaq
