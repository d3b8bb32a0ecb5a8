#ifndef ENTLOC_LOCALIZE_HPP
#define ENTLOC_LOCALIZE_HPP

#include <array>
#include <optional>

#include "entloc/channels.hpp"
#include "entloc/qmat.hpp"
#include "entloc/states.hpp"

// Measurement collapse of the noisy three-qubit state, plus the closed-form
// coefficients and specializations for the amplitude-damping and
// depolarizing cases.

namespace entloc {

enum class Outcome { plus, minus };

struct LocalizationOutcome {
    Outcome label;
    double probability;
    // Absent when the branch probability is below 1e-14, so optimizers can
    // skip the degenerate corner instead of dividing by zero.
    std::optional<DensityMatrix> collapsed;
};

// Projects qubit 3 of a 3-qubit state onto the two basis kets and traces it
// out. Probabilities sum to 1; each collapsed state is renormalized.
std::array<LocalizationOutcome, 2> measure_qubit3(const DensityMatrix &rho,
                                                  const MeasurementBasis &b);

// Unnormalized collapsed state of the GHZ state after amplitude damping:
//   gamma |00><00| + kappa |01><01| + tau |10><10| + eta |11><11|
//   + xi |00><11| + conj(xi) |11><00|
// where xi already carries the minus branch's sign flip.
struct CollapsedCoefficients {
    double gamma;
    double kappa;
    double tau;
    double eta;
    cplx xi;

    double trace() const { return gamma + kappa + tau + eta; }
};

CollapsedCoefficients amp_coefficients(const DecoherenceParams &p,
                                       const MeasurementBasis &b, Outcome which);

ComplexMatrix reconstruct_unnormalized(const CollapsedCoefficients &c);

// P+ = 1/2 + (d3/2) cos(theta), P- = 1 - P+.
double collapse_probability(const DecoherenceParams &p, double theta,
                            Outcome which);

// Minimal eigenvalue of the middle 2x2 block of the partial transpose of the
// collapsed state; the negativity is max{0, -2 mu}.
double mu_amp(const DecoherenceParams &p, const MeasurementBasis &b,
              Outcome which);

// Same quantity specialized to d1 = d2 = d3 = d.
double mu_symmetric(double d, double theta, Outcome which);

// Minimal partial-transpose eigenvalue after symmetric depolarizing noise,
// identical for both measurement outcomes.
double depolarized_lambda(double d, double theta);

// True iff the collapsed state stays entangled, i.e.
// sin(theta) > 12 (3 - 2d) d / |3 - 4d|^3. Unsatisfiable at d = 3/4.
bool depolarized_condition(double d, double theta);

} // namespace entloc

#endif
