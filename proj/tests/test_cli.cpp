#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>
#include <sys/wait.h>

#include "entloc/cli.hpp"
#include "entloc/distribute.hpp"

using namespace entloc;
using Catch::Approx;
using json = nlohmann::json;

namespace {

constexpr double kPi = std::numbers::pi;

json run_json(cli::RunConfig config) {
    config.format = "json";
    std::ostringstream out;
    int rc = 0;
    if (config.subcommand == "localize") {
        rc = cli::cmd_localize(config, out);
    } else if (config.subcommand == "figure") {
        rc = cli::cmd_figure(config, out);
    } else if (config.subcommand == "optimize") {
        rc = cli::cmd_optimize(config, out);
    } else if (config.subcommand == "threshold") {
        rc = cli::cmd_threshold(config, out);
    } else if (config.subcommand == "compare") {
        rc = cli::cmd_compare(config, out);
    }
    REQUIRE(rc == 0);
    return json::parse(out.str());
}

std::vector<std::vector<std::string>> parse_csv(const std::string &text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream stream(text);
    std::string line;
    while (std::getline(stream, line)) {
        std::vector<std::string> cells;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) {
            cells.push_back(cell);
        }
        rows.push_back(std::move(cells));
    }
    return rows;
}

int run_binary(const std::string &args) {
    const std::string cmd =
        std::string(ENTLOC_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    REQUIRE(status != -1);
    return WEXITSTATUS(status);
}

} // namespace

TEST_CASE("fixed-point formatting", "[cli]") {
    REQUIRE(cli::format_double(0.625, 12) == "0.625000000000");
    REQUIRE(cli::format_double(-0.0, 6) == "0.000000");
    REQUIRE(cli::format_double(1.0 / 3.0, 3) == "0.333");
}

TEST_CASE("localize reports", "[cli]") {
    SECTION("noise free") {
        cli::RunConfig config;
        config.subcommand = "localize";
        config.d = 0.0;
        config.theta = kPi / 2.0;
        const json doc = run_json(config);
        REQUIRE(doc["rows"].size() == 2);
        for (const auto &row : doc["rows"]) {
            REQUIRE(row["probability"].get<double>() == Approx(0.5).margin(1e-12));
            REQUIRE(row["negativity"].get<double>() == Approx(1.0).margin(1e-12));
            REQUIRE(row["fef"].get<double>() == Approx(1.0).margin(1e-12));
            REQUIRE(row["useful"] == "yes");
        }
    }

    SECTION("symmetric amplitude damping at d = 0.5") {
        cli::RunConfig config;
        config.subcommand = "localize";
        config.d = 0.5;
        const json doc = run_json(config);
        const auto &row = doc["rows"][0];
        REQUIRE(row["negativity"].get<double>() ==
                Approx(0.103553390593).margin(1e-9));
        REQUIRE(row["negativity_closed"].get<double>() ==
                Approx(row["negativity"].get<double>()).margin(1e-12));
    }

    SECTION("depolarizing at d = 0.1") {
        cli::RunConfig config;
        config.subcommand = "localize";
        config.model = "depol";
        config.d = 0.1;
        const json doc = run_json(config);
        const auto &row = doc["rows"][0];
        REQUIRE(row["negativity"].get<double>() ==
                Approx(0.526518518519).margin(1e-9));
        REQUIRE(row["fef_closed"].is_null());
    }
}

TEST_CASE("figure grids", "[cli]") {
    SECTION("figure 7 is byte-identical across runs") {
        cli::RunConfig config;
        config.subcommand = "figure";
        config.figure_id = 7;
        config.grid_points = 41;
        std::ostringstream first, second;
        REQUIRE(cli::cmd_figure(config, first) == 0);
        REQUIRE(cli::cmd_figure(config, second) == 0);
        REQUIRE(first.str() == second.str());
        REQUIRE(first.str().find("d,theta,delta_n\n") == 0);
    }

    SECTION("figure 4 stays inside its strength window") {
        cli::RunConfig config;
        config.subcommand = "figure";
        config.figure_id = 4;
        config.grid_points = 21;
        std::ostringstream out;
        REQUIRE(cli::cmd_figure(config, out) == 0);
        const auto rows = parse_csv(out.str());
        REQUIRE(rows.size() == 1 + 21 * 21);
        for (std::size_t r = 1; r < rows.size(); ++r) {
            const double d = std::stod(rows[r][0]);
            REQUIRE(d >= 0.58 - 1e-12);
            REQUIRE(d <= 0.64 + 1e-12);
        }
    }

    SECTION("figure 7 spans only the first half of the angle range") {
        cli::RunConfig config;
        config.subcommand = "figure";
        config.figure_id = 7;
        config.grid_points = 31;
        std::ostringstream out;
        REQUIRE(cli::cmd_figure(config, out) == 0);
        for (auto rows = parse_csv(out.str()); const auto &row : rows) {
            if (row[0] == "d") {
                continue;
            }
            REQUIRE(std::stod(row[1]) <= kPi / 2.0 + 1e-12);
        }
    }

    SECTION("figure 2 corner value") {
        cli::RunConfig config;
        config.subcommand = "figure";
        config.figure_id = 2;
        config.grid_points = 21; // includes d = 0 and theta = pi/2
        std::ostringstream out;
        REQUIRE(cli::cmd_figure(config, out) == 0);
        bool seen = false;
        for (auto rows = parse_csv(out.str()); const auto &row : rows) {
            if (row[0] == "d") {
                continue;
            }
            if (std::stod(row[0]) == 0.0 &&
                std::stod(row[1]) == Approx(kPi / 2.0).margin(1e-9)) {
                REQUIRE(std::stod(row[2]) == Approx(1.0).margin(1e-9));
                REQUIRE(std::stod(row[3]) == Approx(1.0).margin(1e-9));
                seen = true;
            }
        }
        REQUIRE(seen);
    }

    SECTION("csv round trip: rows recompute from their own parameters") {
        cli::RunConfig config;
        config.subcommand = "figure";
        config.figure_id = 7;
        config.grid_points = 21;
        std::ostringstream out;
        REQUIRE(cli::cmd_figure(config, out) == 0);
        for (auto rows = parse_csv(out.str()); const auto &row : rows) {
            if (row[0] == "d") {
                continue;
            }
            const double d = std::stod(row[0]);
            const double theta = std::stod(row[1]);
            const double delta_n = std::stod(row[2]);
            REQUIRE(compare_point(d, theta, 0.0).delta_n ==
                    Approx(delta_n).margin(5e-12));
        }
    }

    SECTION("figure 8 emits the ratio axis and honors theta-prime") {
        cli::RunConfig config;
        config.subcommand = "figure";
        config.figure_id = 8;
        config.grid_points = 11;
        config.theta_prime = 1.5;
        std::ostringstream out;
        REQUIRE(cli::cmd_figure(config, out) == 0);
        const auto rows = parse_csv(out.str());
        REQUIRE(rows[0] == std::vector<std::string>{"d", "r", "delta_n"});
        for (std::size_t r = 1; r < rows.size(); ++r) {
            REQUIRE(std::stod(rows[r][1]) <= 0.1 + 1e-12);
        }
        // First d is clamped away from zero for the ratio definition.
        REQUIRE(std::stod(rows[1][0]) == Approx(1e-6));
    }

    SECTION("unknown figure id") {
        cli::RunConfig config;
        config.subcommand = "figure";
        config.figure_id = 6;
        std::ostringstream out;
        REQUIRE_THROWS_AS(cli::cmd_figure(config, out), cli::UsageError);
    }
}

TEST_CASE("optimize, threshold and compare commands", "[cli]") {
    SECTION("F_ave maximizer") {
        cli::RunConfig config;
        config.subcommand = "optimize";
        config.objective = "fave";
        config.d = 0.4;
        const json doc = run_json(config);
        REQUIRE(doc["rows"][0]["best_theta"].get<double>() ==
                Approx(kPi / 2.0).margin(1e-8));
    }

    SECTION("flat objective carries a warning and still exits 0") {
        cli::RunConfig config;
        config.subcommand = "optimize";
        config.objective = "n+";
        config.d = 1.0;
        const json doc = run_json(config);
        REQUIRE(doc["rows"][0]["flat"] == "yes");
        REQUIRE(doc["meta"].contains("warning"));
    }

    SECTION("sudden-death threshold") {
        cli::RunConfig config;
        config.subcommand = "threshold";
        config.objective = "n+";
        config.theta = 1.5707963;
        const json doc = run_json(config);
        REQUIRE(doc["rows"][0]["d_star"].get<double>() ==
                Approx(0.618034).margin(1e-6));
    }

    SECTION("no-threshold warning") {
        cli::RunConfig config;
        config.subcommand = "threshold";
        config.objective = "fave";
        const json doc = run_json(config);
        REQUIRE(doc["rows"][0]["found"] == "no");
        REQUIRE(doc["meta"].contains("warning"));
    }

    SECTION("boundary comparison point") {
        cli::RunConfig config;
        config.subcommand = "compare";
        config.d = 0.5;
        config.d3 = 0.0;
        config.theta = 1.5707963267948966;
        const json doc = run_json(config);
        REQUIRE(doc["rows"][0]["delta_n"].get<double>() ==
                Approx(0.0).margin(1e-12));
    }
}

TEST_CASE("thread cap does not change emitted bytes", "[cli]") {
    cli::RunConfig config;
    config.subcommand = "figure";
    config.figure_id = 2;
    config.grid_points = 41;

    const auto render = [&](const char *threads) {
        if (threads) {
            setenv("NOISE_LOCALIZE_THREADS", threads, 1);
        } else {
            unsetenv("NOISE_LOCALIZE_THREADS");
        }
        std::ostringstream out;
        REQUIRE(cli::cmd_figure(config, out) == 0);
        return out.str();
    };

    const std::string serial = render("1");
    REQUIRE(render("3") == serial);
    REQUIRE(render("not-a-number") == serial);
    REQUIRE(render(nullptr) == serial);
}

TEST_CASE("binary exit codes", "[cli]") {
    REQUIRE(run_binary("localize --d 0.5") == 0);
    REQUIRE(run_binary("figure 7 --grid-points 11") == 0);
    REQUIRE(run_binary("bogus") == cli::kExitUsage);
    REQUIRE(run_binary("figure 6") == cli::kExitUsage);
    REQUIRE(run_binary("localize --d 1.5") == cli::kExitDomain);
    REQUIRE(run_binary("localize --theta 9.9") == cli::kExitDomain);
    REQUIRE(run_binary("localize --d 0.5 --degrees --theta 90") == 0);
}
