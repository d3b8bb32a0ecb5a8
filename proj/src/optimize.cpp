#include "entloc/optimize.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "entloc/measures.hpp"
#include "entloc/parallel.hpp"

namespace entloc {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kGoldenRatio = 0.6180339887498949; // (sqrt(5) - 1) / 2

template <typename F>
std::pair<double, double> golden_section_max(const F &f, double lo, double hi,
                                             double tol) {
    double c = hi - kGoldenRatio * (hi - lo);
    double d = lo + kGoldenRatio * (hi - lo);
    double fc = f(c);
    double fd = f(d);
    while (hi - lo > tol) {
        if (fc > fd) {
            hi = d;
            d = c;
            fd = fc;
            c = hi - kGoldenRatio * (hi - lo);
            fc = f(c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + kGoldenRatio * (hi - lo);
            fd = f(d);
        }
    }
    const double mid = 0.5 * (lo + hi);
    return {mid, f(mid)};
}

} // namespace

const char *objective_name(Objective obj) {
    switch (obj) {
    case Objective::n_plus:
        return "n+";
    case Objective::n_minus:
        return "n-";
    case Objective::n_ave:
        return "nave";
    case Objective::f_plus:
        return "f+";
    case Objective::f_minus:
        return "f-";
    case Objective::f_ave:
        return "fave";
    case Objective::depol_n:
        return "depol";
    }
    return "?";
}

std::optional<Objective> parse_objective(std::string_view name) {
    if (name == "n+") return Objective::n_plus;
    if (name == "n-") return Objective::n_minus;
    if (name == "nave") return Objective::n_ave;
    if (name == "f+") return Objective::f_plus;
    if (name == "f-") return Objective::f_minus;
    if (name == "fave") return Objective::f_ave;
    if (name == "depol") return Objective::depol_n;
    return std::nullopt;
}

namespace {

// Single-branch objectives report 0 when the branch has vanishing
// probability, so scans skip the degenerate corner instead of crashing.
double branch_or_zero(double (*f)(const DecoherenceParams &,
                                  const MeasurementBasis &, Outcome),
                      const DecoherenceParams &p, const MeasurementBasis &b,
                      Outcome which) {
    if (collapse_probability(p, b.theta, which) < 1e-14) {
        return 0.0;
    }
    return f(p, b, which);
}

} // namespace

double evaluate_objective(Objective obj, const DecoherenceParams &p,
                          double theta) {
    const MeasurementBasis b(theta, 0.0);
    switch (obj) {
    case Objective::n_plus:
        return branch_or_zero(negativity_closed_amp, p, b, Outcome::plus);
    case Objective::n_minus:
        return branch_or_zero(negativity_closed_amp, p, b, Outcome::minus);
    case Objective::n_ave:
        return n_average(p, b);
    case Objective::f_plus:
        return branch_or_zero(fef_closed_amp, p, b, Outcome::plus);
    case Objective::f_minus:
        return branch_or_zero(fef_closed_amp, p, b, Outcome::minus);
    case Objective::f_ave:
        return f_average(p, b);
    case Objective::depol_n:
        if (!p.is_symmetric()) {
            throw std::invalid_argument(
                "the depolarizing objective assumes d1 = d2 = d3");
        }
        return std::max(0.0, -2.0 * depolarized_lambda(p.d1, theta));
    }
    throw std::invalid_argument("unknown objective");
}

ScanResult optimize_theta(Objective obj, const DecoherenceParams &p,
                          int grid_points) {
    if (grid_points < 2) {
        throw std::invalid_argument("need at least 2 grid points");
    }
    ScanResult result{obj, 0.0, 0.0, false, {}};
    result.grid.resize(grid_points);

    const double step = kPi / (grid_points - 1);
    parallel_for(static_cast<std::size_t>(grid_points), [&](std::size_t k) {
        const double theta = std::min(kPi, static_cast<double>(k) * step);
        result.grid[k] = {theta, evaluate_objective(obj, p, theta)};
    });

    std::size_t best = 0;
    double lowest = result.grid[0].second;
    for (std::size_t k = 1; k < result.grid.size(); ++k) {
        if (result.grid[k].second > result.grid[best].second) {
            best = k;
        }
        lowest = std::min(lowest, result.grid[k].second);
    }
    result.best_theta = result.grid[best].first;
    result.best_value = result.grid[best].second;
    result.flat = result.best_value - lowest <= 1e-15;
    if (result.flat) {
        return result;
    }

    const double lo = std::max(0.0, result.best_theta - step);
    const double hi = std::min(kPi, result.best_theta + step);
    const auto [theta, value] = golden_section_max(
        [&](double t) { return evaluate_objective(obj, p, t); }, lo, hi, 1e-10);
    // Keep the grid point unless the refinement wins by more than rounding
    // jitter: near a flat extremum the angle is not determined more finely
    // than the evaluation plateau, while a genuine off-grid maximum beats
    // the grid by O(step^2), far above this floor.
    if (value > result.best_value + 1e-13 * (1.0 + std::abs(result.best_value))) {
        result.best_theta = theta;
        result.best_value = value;
    }
    return result;
}

ThresholdResult sudden_death_threshold(double theta, Objective obj) {
    const auto positive = [&](double d) {
        return evaluate_objective(obj, DecoherenceParams::symmetric(d), theta) >
               0.0;
    };
    ThresholdResult result{theta, 0.0, 0.0, false};
    if (!positive(0.0) || positive(1.0)) {
        return result; // no sign change in [0, 1]
    }
    double lo = 0.0;
    double hi = 1.0;
    while (hi - lo > 1e-12) {
        const double mid = 0.5 * (lo + hi);
        (positive(mid) ? lo : hi) = mid;
    }
    result.d_star = 0.5 * (lo + hi);
    result.bracket_width = hi - lo;
    result.found = true;
    return result;
}

ArgmaxSplit nave_argmax_split(double d) {
    const DecoherenceParams p = DecoherenceParams::symmetric(d);
    const auto nave = [&](double theta) {
        return evaluate_objective(Objective::n_ave, p, theta);
    };

    // N_ave is symmetric about pi/2, so the left half carries all structure.
    const int grid_points = 1001;
    const double step = (kPi / 2.0) / (grid_points - 1);
    std::vector<double> values(grid_points);
    parallel_for(static_cast<std::size_t>(grid_points), [&](std::size_t k) {
        values[k] = nave(static_cast<double>(k) * step);
    });
    std::size_t best = 0;
    for (std::size_t k = 1; k < values.size(); ++k) {
        if (values[k] > values[best]) {
            best = k;
        }
    }

    const double center_value = values.back(); // theta = pi/2
    if (values[best] <= 0.0 && center_value <= 0.0) {
        return {ArgmaxSplit::Kind::empty, 0.0, 0.0};
    }

    const double lo = std::max(0.0, static_cast<double>(best) * step - step);
    const double hi = std::min(kPi / 2.0, static_cast<double>(best) * step + step);
    auto [theta, value] = golden_section_max(nave, lo, hi, 1e-10);
    if (value < values[best]) {
        theta = static_cast<double>(best) * step;
        value = values[best];
    }

    if (value > center_value + 1e-12 && (kPi / 2.0 - theta) > 1e-6) {
        return {ArgmaxSplit::Kind::pair, theta, kPi - theta};
    }
    return {ArgmaxSplit::Kind::single, kPi / 2.0, kPi / 2.0};
}

double nave_split_critical_d() {
    const auto splits = [](double d) {
        return nave_argmax_split(d).kind == ArgmaxSplit::Kind::pair;
    };
    double lo = 0.5;  // single maximizer
    double hi = 0.629; // symmetric pair
    if (splits(lo) || !splits(hi)) {
        throw std::runtime_error("argmax-split bracket is invalid");
    }
    while (hi - lo > 1e-10) {
        const double mid = 0.5 * (lo + hi);
        (splits(mid) ? hi : lo) = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace entloc
