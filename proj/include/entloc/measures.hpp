#ifndef ENTLOC_MEASURES_HPP
#define ENTLOC_MEASURES_HPP

#include <utility>

#include "entloc/localize.hpp"
#include "entloc/qmat.hpp"

// Entanglement quantifiers for two-qubit states: negativity, fully entangled
// fraction (generic route and closed forms) and their outcome averages.

namespace entloc {

struct EntanglementReport {
    double negativity;
    double fef;
    double min_pt_eigenvalue;
    bool useful_for_teleportation; // fef > 1/2
};

struct FefDecomposition {
    std::array<double, 3> singular_values; // descending
    int det_sign;
    Mat3 correlation_matrix; // tr(rho sigma_i x sigma_j), (x, y, z) order
};

double min_pt_eigenvalue(const DensityMatrix &rho);

// N(rho) = max{0, -2 lambda_min(rho^T)}.
double negativity(const DensityMatrix &rho);

// F(rho) = (1 + mu1 + mu2 - sgn(det R) mu3) / 4 from the correlation matrix.
std::pair<double, FefDecomposition> fef(const DensityMatrix &rho);

EntanglementReport entanglement_report(const DensityMatrix &rho);

// Closed forms for the amplitude-damped GHZ collapse. Valid for arbitrary
// (d1, d2, d3, theta, phi); they agree with the generic route entrywise.
double negativity_closed_amp(const DecoherenceParams &p,
                             const MeasurementBasis &b, Outcome which);
double fef_closed_amp(const DecoherenceParams &p, const MeasurementBasis &b,
                      Outcome which);

// Probability-weighted averages over the two outcomes.
double n_average(const DecoherenceParams &p, const MeasurementBasis &b);
double f_average(const DecoherenceParams &p, const MeasurementBasis &b);

// Special case d3 = 0, d1 = d2 = d:
//   N+ = max{0, 2 (1-d) sin(theta/2) (cos(theta/2) - d sin(theta/2))}
// and the mirrored expression for the minus outcome.
double negativity_closed_d3zero(double d, double theta, Outcome which);

} // namespace entloc

#endif
