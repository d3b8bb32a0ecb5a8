#ifndef ENTLOC_STATES_HPP
#define ENTLOC_STATES_HPP

#include <utility>

#include "entloc/qmat.hpp"

namespace entloc {

// Projective measurement basis
//   |+> = cos(theta/2)|0> + sin(theta/2) e^{i phi} |1>
//   |-> = sin(theta/2) e^{-i phi} |0> - cos(theta/2)|1>
// with theta in [0, pi] and phi in [0, 2 pi]. The global phase of |->
// follows this convention so ket-level checks are exact.
struct MeasurementBasis {
    double theta;
    double phi;

    MeasurementBasis(double theta, double phi = 0.0);
};

// (|000> + |111>) / sqrt(2)
PureState ghz3();

// (|00> + |11>) / sqrt(2)
PureState bell_plus();

// The two kets of the basis above, in (+, -) order.
std::pair<PureState, PureState> basis_kets(const MeasurementBasis &b);

} // namespace entloc

#endif
