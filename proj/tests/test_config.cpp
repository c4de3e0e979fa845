#include <doctest.h>

#include <fstream>
#include <string>

#include "hubsim/config.hpp"

using namespace hubsim;

namespace
{
std::string message_of(const std::vector<std::string>& args)
{
    try
    {
        parse_config(args);
    }
    catch (const ConfigError& e)
    {
        return e.what();
    }
    return {};
}
} // namespace

TEST_CASE("empty input yields the reference defaults")
{
    const auto cfg = parse_config({});
    const auto& p  = cfg.spec.params;
    CHECK(p.p0 == 0.35);
    CHECK(p.beta == 0.35);
    CHECK(p.kappa == 0.9);
    CHECK(p.round_budget == 3);
    CHECK(p.cache_capacity == 1);
    CHECK(p.trials == 2500);
    CHECK(cfg.spec.grid == std::vector<std::uint32_t>{2, 4, 8, 16, 32, 64, 128});
    CHECK(cfg.spec.policies.size() == 2);
    CHECK(cfg.mode == RunMode::Both);
    CHECK(cfg.attempts_denominator == AttemptsDenominator::All);
    CHECK_FALSE(cfg.svg_path.has_value());
}

TEST_CASE("flags set every field")
{
    const auto cfg = parse_config({"--trials", "100", "--seed", "18446744073709551615", "--grid", "3, 9,27",
                                   "--p0", "0.5", "--beta", "0", "--kappa", "1.5", "--rounds", "4",
                                   "--cache-capacity", "0", "--policies", "orchestrated", "--csv", "out.csv",
                                   "--svg", "out.svg", "--mode", "simulate", "--attempts-denominator", "served",
                                   "--jobs", "8"});
    const auto& p = cfg.spec.params;
    CHECK(p.trials == 100);
    CHECK(p.master_seed == 18446744073709551615ULL);
    CHECK(cfg.spec.grid == std::vector<std::uint32_t>{3, 9, 27});
    CHECK(p.p0 == 0.5);
    CHECK(p.beta == 0.0);
    CHECK(p.kappa == 1.5);
    CHECK(p.round_budget == 4);
    CHECK(p.cache_capacity == 0);
    CHECK(cfg.spec.policies == std::vector<PolicyKind>{PolicyKind::OrchestratedParallel});
    CHECK(cfg.csv_path == "out.csv");
    CHECK(cfg.svg_path == "out.svg");
    CHECK(cfg.mode == RunMode::Simulate);
    CHECK(cfg.attempts_denominator == AttemptsDenominator::ServedOnly);
    CHECK(cfg.workers == 8);
}

TEST_CASE("config file is applied and flags override it")
{
    const std::string path = std::string(HUBSIM_TEST_TMPDIR) + "/config_test.cfg";
    {
        std::ofstream out(path);
        out << "# sweep settings\n"
               "trials = 700\n"
               "\n"
               "p0=0.5   # inline comment\n"
               "grid=2,4\n"
               "master_seed=9\n";
    }
    const auto from_file = parse_config({"--config", path});
    CHECK(from_file.spec.params.trials == 700);
    CHECK(from_file.spec.params.p0 == 0.5);
    CHECK(from_file.spec.grid == std::vector<std::uint32_t>{2, 4});

    const auto overridden = parse_config({"--config", path, "--trials", "100"});
    CHECK(overridden.spec.params.trials == 100);
    CHECK(overridden.spec.params.p0 == 0.5);
    CHECK(overridden.spec.params.master_seed == 9);
}

TEST_CASE("diagnostics name the key and the valid range")
{
    auto msg = message_of({"--p0", "1.5"});
    CHECK(msg.find("p0") != std::string::npos);
    CHECK(msg.find("(0, 1]") != std::string::npos);

    msg = message_of({"--trials", "abc"});
    CHECK(msg.find("trials") != std::string::npos);

    CHECK(message_of({"--trials", "0"}).find("trials") != std::string::npos);
    CHECK(message_of({"--grid", "1,2"}).find("grid") != std::string::npos);
    CHECK(message_of({"--grid", "8,4"}).find("strictly increasing") != std::string::npos);
    CHECK(message_of({"--policies", "greedy"}).find("policies") != std::string::npos);
    CHECK(message_of({"--mode", "fast"}).find("mode") != std::string::npos);
    CHECK(message_of({"--beta", "-1"}).find("beta") != std::string::npos);
    CHECK(message_of({"--kappa", "nan"}).find("kappa") != std::string::npos);
    CHECK(message_of({"--seed", "-3"}).find("master_seed") != std::string::npos);
    CHECK_FALSE(message_of({"--bogus"}).empty());
    CHECK(message_of({"--config", "/nonexistent/x.cfg"}).find("/nonexistent/x.cfg") != std::string::npos);
}

TEST_CASE("config text errors")
{
    RunConfig cfg;
    CHECK_THROWS_WITH_AS(apply_config_text(cfg, "trials=10\nfrobnicate=3\n"),
                         doctest::Contains("unknown key 'frobnicate'"), ConfigError);
    CHECK_THROWS_WITH_AS(apply_config_text(cfg, "just words\n"), doctest::Contains("line 1"), ConfigError);
    CHECK_THROWS_WITH_AS(apply_config_text(cfg, "\n\np0=2\n"), doctest::Contains("line 3"), ConfigError);
}

TEST_CASE("help is surfaced separately")
{
    CHECK_THROWS_AS(parse_config({"--help"}), HelpRequested);
    CHECK(usage().find("--cache-capacity") != std::string::npos);
}

TEST_CASE("shipped reference config matches the built-in defaults")
{
    const auto from_file = parse_config({"--config", std::string(HUBSIM_SOURCE_DIR) + "/tools/reference.cfg"});
    const auto defaults  = parse_config({});
    CHECK(from_file.spec.grid == defaults.spec.grid);
    CHECK(from_file.spec.policies == defaults.spec.policies);
    CHECK(from_file.mode == defaults.mode);
    const auto& a = from_file.spec.params;
    const auto& b = defaults.spec.params;
    CHECK(a.p0 == b.p0);
    CHECK(a.beta == b.beta);
    CHECK(a.kappa == b.kappa);
    CHECK(a.round_budget == b.round_budget);
    CHECK(a.cache_capacity == b.cache_capacity);
    CHECK(a.trials == b.trials);
    CHECK(a.master_seed == b.master_seed);
}
