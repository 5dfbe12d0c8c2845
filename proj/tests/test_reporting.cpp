#include <doctest.h>

#include <unistd.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "vacq/errors.hpp"
#include "vacq/reporting.hpp"

using namespace vacq;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    REQUIRE(file.good());
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

int run(std::vector<std::string> args) {
    std::vector<const char*> argv;
    argv.push_back("vacq");
    for (const std::string& arg : args) argv.push_back(arg.c_str());
    return run_cli(static_cast<int>(argv.size()), argv.data());
}

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / name;
}

} // namespace

TEST_CASE("profile CSV round-trips with exact numeric strings") {
    ChargeProfile profile;
    profile.well = validate_well(1.0, 1.0, 0.5);
    profile.method = ChargeMethod::PointSplitContour;
    profile.positions = {-0.25, 0.0, 0.3333333333333333};
    profile.densities = {-0.10203040506071, -0.228920335728, -0.09161718192021};

    const std::string text = render_profile_csv(profile);
    const auto rows = parse_csv(text);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0] == std::vector<std::string>{"z", "density", "method", "m", "a", "eta"});
    for (std::size_t i = 0; i < 3; ++i) {
        const double z = std::stod(rows[i + 1][0]);
        const double rho = std::stod(rows[i + 1][1]);
        CHECK(format_number(z) == rows[i + 1][0]);
        CHECK(format_number(rho) == rows[i + 1][1]);
    }
}

TEST_CASE("empty profiles are rejected, not silently written") {
    ChargeProfile profile;
    profile.well = validate_well(1.0, 1.0, 0.5);
    CHECK_THROWS_AS(render_profile_csv(profile), ValidationError);
    CHECK_THROWS_AS(write_artifact("", ""), IoError);
}

TEST_CASE("reference tables pass at their stated tolerances") {
    const QuadratureConfig quad =
        QuadratureConfig::defaults_for(validate_well(1.0, 1.0, 0.0));
    const std::vector<TableCheckRow> rows = reproduce_tables(quad);
    REQUIRE(rows.size() == 18);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CAPTURE(i);
        CHECK(rows[i].table == (i < 9 ? 1 : 2));  // two 9-row blocks
        CHECK(rows[i].pass);
    }
}

TEST_CASE("cli: charge --method all reproduces the eta = 1/2 row") {
    const auto out = temp_file("vacq_charge_all.csv");
    REQUIRE(run({"charge", "--m", "1", "--a", "1", "--eta", "0.5", "--method", "all",
                 "--out", out.string()}) == 0);
    const auto rows = parse_csv(slurp(out.string()));
    REQUIRE(rows.size() == 4);
    CHECK(rows[1][0] == "mode-sum");
    CHECK(std::abs(std::stod(rows[1][4]) - (-0.103)) < 0.005);
    CHECK(rows[2][0] == "contour");
    CHECK(std::abs(std::stod(rows[2][4]) - (-0.103)) < 0.002);
    CHECK(rows[3][0] == "point-split");
    CHECK(std::abs(std::stod(rows[3][4]) - 0.057) < 0.002);
}

TEST_CASE("cli: free field reports zero charge under every method") {
    const auto out = temp_file("vacq_charge_free.csv");
    REQUIRE(run({"charge", "--m", "1", "--a", "1", "--eta", "0", "--method", "all",
                 "--out", out.string()}) == 0);
    const auto rows = parse_csv(slurp(out.string()));
    REQUIRE(rows.size() == 4);
    for (std::size_t i = 1; i < rows.size(); ++i)
        CHECK(std::abs(std::stod(rows[i][4])) < 1e-10);
}

TEST_CASE("cli: exported density profile is even in z") {
    const auto out = temp_file("vacq_profile.csv");
    REQUIRE(run({"density-profile", "--m", "1", "--a", "1", "--eta", "1", "--method",
                 "contour", "--z-points", "21", "--out", out.string()}) == 0);
    const auto rows = parse_csv(slurp(out.string()));
    REQUIRE(rows.size() == 22);
    // rows 1..21 hold z from -a/2 side to +a/2 side; compare mirrored densities
    for (std::size_t i = 1; i <= 10; ++i) {
        const std::string& left = rows[i][1];
        const std::string& right = rows[22 - i][1];
        CHECK(std::abs(std::stod(left) - std::stod(right)) < 1e-10);
    }
}

TEST_CASE("cli: reproduce-tables output is deterministic") {
    const auto out1 = temp_file("vacq_tables_1.csv");
    const auto out2 = temp_file("vacq_tables_2.csv");
    REQUIRE(run({"reproduce-tables", "--out", out1.string()}) == 0);
    REQUIRE(run({"reproduce-tables", "--out", out2.string()}) == 0);
    CHECK(slurp(out1.string()) == slurp(out2.string()));
}

TEST_CASE("cli: exit codes distinguish usage, regime, convergence, and io failures") {
    CHECK(run({"charge", "--no-such-flag"}) == 2);
    CHECK(run({}) == 2);  // a command is required
    CHECK(run({"charge", "--m", "-1"}) == 2);
    CHECK(run({"charge", "--m", "1", "--a", "1", "--eta", "1.5", "--method",
               "mode-sum"}) == 3);
    CHECK(run({"casimir", "--eta-final", "2.0", "--method", "mode-sum"}) == 3);
    const auto out = temp_file("vacq_truncated_tables.csv");
    CHECK(run({"reproduce-tables", "--y-max", "1.5", "--out", out.string()}) == 4);
    CHECK(run({"reproduce-tables", "--out", "/nonexistent-dir/out.csv"}) == 5);
}

TEST_CASE("cli: json output mirrors the csv fields plus provenance") {
    const auto out = temp_file("vacq_charge.json");
    REQUIRE(run({"charge", "--m", "1", "--a", "1", "--eta", "0.5", "--method",
                 "contour", "--format", "json", "--out", out.string()}) == 0);
    const nlohmann::json doc = nlohmann::json::parse(slurp(out.string()));
    CHECK(doc["well"]["eta"] == 0.5);
    REQUIRE(doc["reports"].size() == 1);
    CHECK(doc["reports"][0]["method"] == "contour");
    CHECK(doc["reports"][0].contains("error_estimate"));
    const std::string digest = doc["reports"][0]["settings_digest"];
    CHECK(digest.find("y_max=") != std::string::npos);
    CHECK(std::abs(doc["reports"][0]["value"].get<double>() + 0.103) < 0.002);
}

TEST_CASE("cli: --print-config dumps the resolved defaults") {
    const auto out = temp_file("vacq_pc_artifact.csv");
    const auto captured = temp_file("vacq_pc_stdout.txt");

    std::fflush(stdout);
    const int saved = dup(fileno(stdout));
    REQUIRE(saved >= 0);
    REQUIRE(std::freopen(captured.string().c_str(), "w", stdout) != nullptr);
    const int rc = run({"charge", "--m", "1", "--a", "1", "--eta", "0.5", "--method",
                        "contour", "--print-config", "--out", out.string()});
    std::fflush(stdout);
    dup2(saved, fileno(stdout));
    close(saved);

    REQUIRE(rc == 0);
    const std::string text = slurp(captured.string());
    CHECK(text.find("p_max=50\n") != std::string::npos);
    CHECK(text.find("n_p=4096\n") != std::string::npos);
    CHECK(text.find("y_max=200\n") != std::string::npos);
    CHECK(text.find("n_nodes=8192\n") != std::string::npos);
    CHECK(text.find("pv_delta=0.0001\n") != std::string::npos);
    CHECK(text.find("z_nodes=256\n") != std::string::npos);
    CHECK(text.find("n_steps=64\n") != std::string::npos);
    CHECK(text.find("method=contour\n") != std::string::npos);
}

TEST_CASE("cli: config file provides values that flags override") {
    const auto cfg_path = temp_file("vacq_cfg.ini");
    {
        std::ofstream cfg(cfg_path);
        cfg << "eta=0.25\n";
        cfg << "a=2\n";
    }
    const auto out = temp_file("vacq_cfg_out.csv");
    REQUIRE(run({"charge", "--config", cfg_path.string(), "--m", "1", "--eta", "0.5",
                 "--method", "contour", "--out", out.string()}) == 0);
    const auto rows = parse_csv(slurp(out.string()));
    REQUIRE(rows.size() == 2);
    CHECK(rows[1][3] == "0.5");  // flag wins over the config file
    CHECK(rows[1][2] == "2");    // config file fills in what flags left unset
}

TEST_CASE("cli: casimir trace endpoints and signs") {
    const auto out = temp_file("vacq_casimir.csv");
    REQUIRE(run({"casimir", "--m", "1", "--a", "1", "--eta-final", "1", "--method",
                 "point-split", "--n-steps", "16", "--out", out.string()}) == 0);
    const auto rows = parse_csv(slurp(out.string()));
    REQUIRE(rows.size() == 18);
    CHECK(std::stod(rows[1][0]) == 0.0);
    CHECK(std::stod(rows[1][2]) == 0.0);
    CHECK(std::stod(rows.back()[2]) < 0.0);
}

TEST_CASE("cli: audit marks the mode-sum contradiction") {
    const auto out = temp_file("vacq_audit_full.csv");
    REQUIRE(run({"audit", "--m", "1", "--a", "1", "--eta", "1", "--out",
                 out.string()}) == 0);
    const auto rows = parse_csv(slurp(out.string()));
    REQUIRE(rows.size() == 4);
    CHECK(rows[1][0] == "mode-sum");
    CHECK(rows[1][3] == "true");   // contradiction
    CHECK(rows[3][0] == "point-split");
    CHECK(rows[3][2] == "true");   // satisfies the minimum-energy bound
}
