#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "entloc/optimize.hpp"
#include "oracles.hpp"

using namespace entloc;
using Catch::Approx;
using entloc::test::Gauss;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("objective names", "[optimize]") {
    for (const auto obj : {Objective::n_plus, Objective::n_minus, Objective::n_ave,
                           Objective::f_plus, Objective::f_minus, Objective::f_ave,
                           Objective::depol_n}) {
        REQUIRE(parse_objective(objective_name(obj)) == obj);
    }
    REQUIRE_FALSE(parse_objective("negativity").has_value());
}

TEST_CASE("optimize_theta", "[optimize]") {
    SECTION("noise-free N_ave peaks at pi/2 with unit value") {
        const auto scan =
            optimize_theta(Objective::n_ave, DecoherenceParams::symmetric(0.0));
        REQUIRE_FALSE(scan.flat);
        REQUIRE(scan.best_theta == Approx(kPi / 2.0).margin(1e-8));
        REQUIRE(scan.best_value == Approx(1.0).margin(1e-12));
    }

    SECTION("N+ maximizer shifts past pi/2 at d = 0.3") {
        const auto scan =
            optimize_theta(Objective::n_plus, DecoherenceParams::symmetric(0.3));
        REQUIRE(scan.best_theta > kPi / 2.0 + 1e-3);
        // Regression pin from this scan.
        REQUIRE(scan.best_theta == Approx(1.620123609162).margin(1e-6));
        REQUIRE(scan.best_value == Approx(0.376375252753).margin(1e-9));
    }

    SECTION("F_ave maximizer stays at pi/2 for every strength") {
        for (int k = 1; k <= 9; ++k) {
            const auto scan = optimize_theta(Objective::f_ave,
                                             DecoherenceParams::symmetric(0.1 * k));
            REQUIRE(scan.best_theta == Approx(kPi / 2.0).margin(1e-8));
        }
    }

    SECTION("flat objective is flagged") {
        const auto scan =
            optimize_theta(Objective::n_plus, DecoherenceParams::symmetric(1.0));
        REQUIRE(scan.flat);
        REQUIRE(scan.best_value == 0.0);
    }

    SECTION("refinement never loses to the coarse grid") {
        Gauss g(6001);
        for (int rep = 0; rep < 10; ++rep) {
            const DecoherenceParams p(g.uniform(), g.uniform(), g.uniform());
            const auto scan = optimize_theta(Objective::n_ave, p, 101);
            double coarse = 0.0;
            for (const auto &[theta, value] : scan.grid) {
                coarse = std::max(coarse, value);
            }
            REQUIRE(scan.best_value >= coarse - 1e-12);
        }
    }

    SECTION("grid size is validated") {
        REQUIRE_THROWS_AS(
            optimize_theta(Objective::n_ave, DecoherenceParams::symmetric(0.1), 1),
            std::invalid_argument);
    }
}

TEST_CASE("N_ave is symmetric about pi/2", "[optimize]") {
    Gauss g(6002);
    for (const double d : {0.2, 0.5, 0.62, g.uniform()}) {
        const DecoherenceParams p = DecoherenceParams::symmetric(d);
        for (int k = 0; k <= 40; ++k) {
            const double theta = kPi * k / 40.0;
            REQUIRE(evaluate_objective(Objective::n_ave, p, theta) ==
                    Approx(evaluate_objective(Objective::n_ave, p, kPi - theta))
                        .margin(1e-12));
        }
    }
}

TEST_CASE("sudden-death threshold", "[optimize]") {
    SECTION("symmetric amplitude damping dies at the golden strength") {
        const auto res = sudden_death_threshold(kPi / 2.0, Objective::n_plus);
        REQUIRE(res.found);
        REQUIRE(res.bracket_width <= 1e-9);
        REQUIRE(res.d_star ==
                Approx((std::sqrt(5.0) - 1.0) / 2.0).margin(1e-8));
        // Bracketing invariant around the threshold.
        REQUIRE(evaluate_objective(Objective::n_plus,
                                   DecoherenceParams::symmetric(res.d_star - 1e-7),
                                   kPi / 2.0) > 0.0);
        REQUIRE(evaluate_objective(Objective::n_plus,
                                   DecoherenceParams::symmetric(res.d_star + 1e-7),
                                   kPi / 2.0) == 0.0);
    }

    SECTION("depolarizing threshold solves the cubic balance") {
        const auto res = sudden_death_threshold(kPi / 2.0, Objective::depol_n);
        REQUIRE(res.found);
        // Regression pin; the root of 12 (3 - 2d) d = |3 - 4d|^3.
        REQUIRE(res.d_star == Approx(0.257026420396).margin(1e-8));
        const double a = std::abs(3.0 - 4.0 * res.d_star);
        REQUIRE(std::abs(12.0 * (3.0 - 2.0 * res.d_star) * res.d_star - a * a * a) <=
                1e-9);
    }

    SECTION("no sign change means no threshold") {
        // FEF never reaches zero.
        REQUIRE_FALSE(sudden_death_threshold(kPi / 2.0, Objective::f_plus).found);
        // At theta = 0 the plus-branch negativity is already zero at d = 0.
        REQUIRE_FALSE(sudden_death_threshold(0.0, Objective::n_plus).found);
    }
}

TEST_CASE("N_ave argmax split", "[optimize]") {
    SECTION("single maximizer below the critical strength") {
        const auto split = nave_argmax_split(0.3);
        REQUIRE(split.kind == ArgmaxSplit::Kind::single);
        REQUIRE(split.theta_low == Approx(kPi / 2.0).margin(1e-12));
    }

    SECTION("symmetric pair above the critical strength") {
        const auto split = nave_argmax_split(0.62);
        REQUIRE(split.kind == ArgmaxSplit::Kind::pair);
        REQUIRE(split.theta_low + split.theta_high == Approx(kPi).margin(1e-8));
        REQUIRE(kPi / 2.0 - split.theta_low > 1e-6);
        // Regression pin from the refinement scan.
        REQUIRE(split.theta_low == Approx(1.3339417442).margin(1e-6));
    }

    SECTION("empty once the average negativity vanishes identically") {
        REQUIRE(nave_argmax_split(0.64).kind == ArgmaxSplit::Kind::empty);
    }

    SECTION("critical strength regression") {
        // Located by bisection on the split predicate; inside the window of
        // the average-negativity surface plots.
        REQUIRE(nave_split_critical_d() == Approx(0.6101146801).margin(1e-6));
    }
}
