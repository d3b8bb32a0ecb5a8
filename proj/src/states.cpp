#include "entloc/states.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace entloc {

MeasurementBasis::MeasurementBasis(double theta_, double phi_)
    : theta(theta_), phi(phi_) {
    if (!(theta >= 0.0 && theta <= std::numbers::pi)) {
        throw std::invalid_argument("theta must lie in [0, pi]");
    }
    if (!(phi >= 0.0 && phi <= 2.0 * std::numbers::pi)) {
        throw std::invalid_argument("phi must lie in [0, 2 pi]");
    }
}

PureState ghz3() {
    const double a = 1.0 / std::sqrt(2.0);
    std::vector<cplx> amp(8, cplx{0.0, 0.0});
    amp[0] = a;
    amp[7] = a;
    return PureState(3, std::move(amp));
}

PureState bell_plus() {
    const double a = 1.0 / std::sqrt(2.0);
    std::vector<cplx> amp(4, cplx{0.0, 0.0});
    amp[0] = a;
    amp[3] = a;
    return PureState(2, std::move(amp));
}

std::pair<PureState, PureState> basis_kets(const MeasurementBasis &b) {
    const double c = std::cos(b.theta / 2.0);
    const double s = std::sin(b.theta / 2.0);
    const cplx eip = std::polar(1.0, b.phi);
    const cplx eim = std::polar(1.0, -b.phi);
    PureState plus(1, {cplx{c, 0.0}, s * eip});
    PureState minus(1, {s * eim, cplx{-c, 0.0}});
    return {std::move(plus), std::move(minus)};
}

} // namespace entloc
