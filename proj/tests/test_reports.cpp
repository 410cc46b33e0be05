#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "novaq/reports.hpp"
#include "oracles.hpp"

using namespace novaq;
namespace fs = std::filesystem;

namespace {

fs::path temp_dir() {
    const fs::path p = fs::temp_directory_path() / "novaq-test-reports";
    fs::create_directories(p);
    return p;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    return std::string((std::istreambuf_iterator<char>(in)),
                       std::istreambuf_iterator<char>());
}

}  // namespace

TEST_CASE("config parsing") {
    const std::string text = R"(
# campaign
n_qubits = 5
total_budget = 1500
mode = baseline
master_seed = 42
alpha = 0.05
detect_mode = exact
)";
    const RunConfig cfg = parse_config_text(text, "<test>");
    CHECK(cfg.campaign.n_qubits == 5);
    CHECK(cfg.campaign.total_budget == 1500);
    CHECK(cfg.campaign.mode == CampaignMode::Baseline);
    CHECK(cfg.campaign.master_seed == 42);
    CHECK(cfg.detection.alpha == 0.05);
    CHECK(cfg.detection.mode == DetectMode::Exact);
    // untouched keys keep their defaults
    CHECK(cfg.campaign.pool_size == 10);
    CHECK(cfg.detection.shots == 1000);
}

TEST_CASE("config parsing rejects unknown keys and bad values") {
    CHECK_THROWS_AS(parse_config_text("n_qbits = 3\n", "<test>"), std::invalid_argument);
    CHECK_THROWS_AS(parse_config_text("n_qubits = many\n", "<test>"),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_config_text("mode = random\n", "<test>"),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_config_text("just a line\n", "<test>"), std::invalid_argument);
    // values must also satisfy campaign validation
    CHECK_THROWS_AS(parse_config_text("total_budget = 5\n", "<test>"),
                    std::invalid_argument);
}

TEST_CASE("cases CSV round trip rebuilds identical states") {
    const fs::path dir = temp_dir();
    const fs::path path = dir / "cases.csv";

    CampaignConfig cfg;
    cfg.n_qubits = 3;
    cfg.total_budget = 100;
    cfg.master_seed = 7;
    cfg.mode = CampaignMode::Baseline;
    GridArchive archive;
    std::vector<TestCase> cases;
    baseline_generate(cfg, archive, [&](const TestCase& tc) { cases.push_back(tc); });

    write_cases_csv(path, cases, 3);
    const auto back = read_cases_csv(path, 3);
    REQUIRE(back.size() == cases.size());
    for (std::size_t i = 0; i < cases.size(); ++i) {
        CHECK(back[i].seed_id == cases[i].seed_id);
        CHECK(back[i].params == cases[i].params);  // %.17g is round-trip exact
        CHECK(oracles::state_distance(back[i].state, cases[i].state) == 0.0);
        CHECK(back[i].cell == cases[i].cell);
    }
}

TEST_CASE("manifest honors SOURCE_DATE_EPOCH and reads back") {
    const fs::path dir = temp_dir();
    const fs::path path = dir / "manifest.json";

    RunConfig cfg;
    cfg.campaign.n_qubits = 4;
    cfg.campaign.master_seed = 99;
    cfg.campaign.mode = CampaignMode::Novaq;

    setenv("SOURCE_DATE_EPOCH", "1700000000", 1);
    write_manifest(path, cfg);
    const std::string first = slurp(path);
    write_manifest(path, cfg);
    CHECK(slurp(path) == first);
    unsetenv("SOURCE_DATE_EPOCH");

    const ManifestSummary s = read_manifest_summary(path);
    CHECK(s.schema == kManifestSchema);
    CHECK(s.metric_version == kMetricVersion);
    CHECK(s.master_seed == 99);
    CHECK(s.n_qubits == 4);
    CHECK(s.mode == "novaq");
}

TEST_CASE("format_double round trips") {
    for (double v : {0.1, 1.0 / 3.0, 1e-17, 123456.789, -0.0}) {
        CHECK(std::stod(format_double(v)) == v);
    }
}

TEST_CASE("coverage and growth CSV shape") {
    const fs::path dir = temp_dir();
    write_coverage_csv(dir / "coverage.csv", {{100, 42, 0.042}, {200, 64, 0.064}});
    const std::string cov = slurp(dir / "coverage.csv");
    CHECK(cov.find("cases_emitted,occupied_cells,coverage_rate\n") == 0);
    CHECK(cov.find("100,42,") != std::string::npos);

    write_growth_csv(dir / "growth.csv",
                     {{"baseline", 500, 80}, {"novaq", 500, 95}});
    const std::string growth = slurp(dir / "growth.csv");
    CHECK(growth.find("mode,cases,occupied_cells\n") == 0);
    CHECK(growth.find("novaq,500,95\n") != std::string::npos);
}
