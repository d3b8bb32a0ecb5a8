#include "entloc/distribute.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "entloc/parallel.hpp"

namespace entloc {

namespace {

void check_strength(double d, const char *what) {
    if (!(d >= 0.0 && d <= 1.0)) {
        throw std::invalid_argument(std::string(what) + " must lie in [0, 1]");
    }
}

} // namespace

DdsMeasures dds_measures(double d1, double d2) {
    check_strength(d1, "d1");
    check_strength(d2, "d2");
    const double b1 = 1.0 - d1;
    const double b2 = 1.0 - d2;
    const double lambda_min =
        0.25 * (d1 * b2 + b1 * d2) -
        0.25 * std::sqrt((d1 - d2) * (d1 - d2) + 4.0 * b1 * b2);
    DdsMeasures out{};
    out.negativity = std::max(0.0, -2.0 * lambda_min);
    out.fef = 0.25 * (2.0 + 2.0 * std::sqrt(b1 * b2) + 2.0 * d1 * d2 - d1 - d2);
    return out;
}

AdsMeasures ads_measures(double d, double d3, double theta) {
    check_strength(d, "d");
    check_strength(d3, "d3");
    const double db = 1.0 - d;
    const double b3 = 1.0 - d3;
    const double s = std::sin(theta / 2.0);
    const double c = std::cos(theta / 2.0);

    const double kappa = 0.5 * d * db * (d3 * c * c + b3 * s * s);
    const double xi = 0.5 * db * std::sqrt(b3) * s * c;
    const double p_plus = 0.5 + 0.5 * d3 * std::cos(theta);
    if (p_plus < 1e-14) {
        throw std::invalid_argument("'+' branch has vanishing probability");
    }

    AdsMeasures out{};
    out.p_plus = p_plus;
    out.negativity = std::max(0.0, 2.0 * (xi - kappa) / p_plus);
    // Both branches collapse to 1/2 + (xi - kappa)/P+: the separable branch
    // continues the entangled one and stays <= 1/2 as it must.
    out.fef = (out.negativity > 0.0) ? 0.5 * (1.0 + out.negativity)
                                     : 0.5 + (xi - kappa) / p_plus;
    return out;
}

ComparisonPoint compare_point(double d, double theta, double d3) {
    const DdsMeasures dds = dds_measures(d, d);
    const AdsMeasures ads = ads_measures(d, d3, theta);
    ComparisonPoint out{};
    out.d = d;
    out.theta = theta;
    out.d3 = d3;
    out.n_dds = dds.negativity;
    out.n_ads_plus = ads.negativity;
    out.f_dds = dds.fef;
    out.f_ads_plus = ads.fef;
    out.delta_n = ads.negativity - dds.negativity;
    out.delta_f = ads.fef - dds.fef;
    out.p_plus = ads.p_plus;
    return out;
}

std::vector<ComparisonPoint> compare_scan(const std::vector<double> &d_values,
                                          const std::vector<double> &theta_values,
                                          const std::vector<double> &r_values) {
    if (d_values.empty() || theta_values.empty() || r_values.empty()) {
        throw std::invalid_argument("compare_scan grid is empty");
    }
    const bool ratio_in_play =
        std::any_of(r_values.begin(), r_values.end(),
                    [](double r) { return r > 0.0; });

    const std::size_t nd = d_values.size();
    const std::size_t nt = theta_values.size();
    const std::size_t nr = r_values.size();
    std::vector<ComparisonPoint> points(nd * nt * nr);
    parallel_for(points.size(), [&](std::size_t k) {
        const std::size_t ir = k % nr;
        const std::size_t it = (k / nr) % nt;
        const std::size_t id = k / (nr * nt);
        double d = d_values[id];
        if (ratio_in_play && d < 1e-6) {
            d = 1e-6;
        }
        points[k] = compare_point(d, theta_values[it], r_values[ir] * d);
    });
    return points;
}

} // namespace entloc
