#ifndef ENTLOC_OPTIMIZE_HPP
#define ENTLOC_OPTIMIZE_HPP

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "entloc/channels.hpp"
#include "entloc/localize.hpp"

// One-dimensional optimization over the measurement angle and threshold
// finding in the decoherence strength.

namespace entloc {

enum class Objective {
    n_plus,
    n_minus,
    n_ave,
    f_plus,
    f_minus,
    f_ave,
    depol_n, // negativity under symmetric depolarizing noise
};

const char *objective_name(Objective obj);
std::optional<Objective> parse_objective(std::string_view name);

// Closed-form objective value at measurement angle theta. The depolarizing
// objective requires symmetric parameters.
double evaluate_objective(Objective obj, const DecoherenceParams &p,
                          double theta);

struct ScanResult {
    Objective objective;
    double best_theta;
    double best_value;
    bool flat; // constant over the grid (e.g. identically zero)
    std::vector<std::pair<double, double>> grid;
};

// Coarse grid over [0, pi] (default 2001 points) followed by golden-section
// refinement around the best grid point down to |delta theta| <= 1e-10.
// Grid ties break toward the smaller theta.
ScanResult optimize_theta(Objective obj, const DecoherenceParams &p,
                          int grid_points = 2001);

struct ThresholdResult {
    double theta;
    double d_star;
    double bracket_width;
    bool found;
};

// Bisects the symmetric decoherence strength d at which the objective
// (evaluated at the given theta) drops to zero.
ThresholdResult sudden_death_threshold(double theta, Objective obj);

struct ArgmaxSplit {
    enum class Kind { empty, single, pair };
    Kind kind;
    double theta_low;  // meaningful for single (== pi/2) and pair
    double theta_high; // meaningful for pair
};

// Maximizers of N_ave(d, theta) under symmetric amplitude damping: a single
// maximizer at pi/2 below the critical strength, a symmetric pair above it,
// and empty once N_ave vanishes identically.
ArgmaxSplit nave_argmax_split(double d);

// The critical d at which the N_ave argmax leaves pi/2, located by bisection
// on the split predicate.
double nave_split_critical_d();

} // namespace entloc

#endif
