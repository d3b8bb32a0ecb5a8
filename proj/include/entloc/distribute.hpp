#ifndef ENTLOC_DISTRIBUTE_HPP
#define ENTLOC_DISTRIBUTE_HPP

#include <vector>

// Direct distribution (Bell pair through two amplitude-damping channels)
// versus ancilla-assisted distribution (GHZ triple through the channels,
// followed by a measurement on the locally kept qubit).

namespace entloc {

struct DdsMeasures {
    double negativity;
    double fef;
};

// Closed forms for the damped Bell pair, arbitrary (d1, d2).
DdsMeasures dds_measures(double d1, double d2);

struct AdsMeasures {
    double negativity;
    double fef;
    double p_plus;
};

// '+' outcome of the ancilla-assisted scheme with d1 = d2 = d; the '-'
// outcome follows from the theta -> pi - theta symmetry.
AdsMeasures ads_measures(double d, double d3, double theta);

struct ComparisonPoint {
    double d;
    double theta;
    double d3;
    double n_dds;
    double n_ads_plus;
    double f_dds;
    double f_ads_plus;
    double delta_n;
    double delta_f;
    double p_plus;
};

ComparisonPoint compare_point(double d, double theta, double d3);

// Dense scan over the cartesian grid, rows in lexicographic (d, theta, r)
// order with d3 = r * d. When any r > 0 is present, d is clamped to 1e-6 so
// the ratio stays defined.
std::vector<ComparisonPoint> compare_scan(const std::vector<double> &d_values,
                                          const std::vector<double> &theta_values,
                                          const std::vector<double> &r_values);

} // namespace entloc

#endif
