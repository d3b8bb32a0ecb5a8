#include "entloc/localize.hpp"

#include <cmath>
#include <stdexcept>

namespace entloc {

namespace {

constexpr double kZeroProbability = 1e-14;

void check_strength(double d) {
    if (!(d >= 0.0 && d <= 1.0)) {
        throw std::invalid_argument("decoherence strength must lie in [0, 1]");
    }
}

// <v| rho |v> on qubit 3, leaving the unnormalized 2-qubit matrix.
ComplexMatrix project_qubit3(const DensityMatrix &rho, const PureState &ket) {
    ComplexMatrix out(4);
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            cplx sum{0.0, 0.0};
            for (int a = 0; a < 2; ++a) {
                for (int b = 0; b < 2; ++b) {
                    sum += std::conj(ket.amplitudes[a]) *
                           rho.matrix()((i << 1) | a, (j << 1) | b) *
                           ket.amplitudes[b];
                }
            }
            out(i, j) = sum;
        }
    }
    return out;
}

} // namespace

std::array<LocalizationOutcome, 2> measure_qubit3(const DensityMatrix &rho,
                                                  const MeasurementBasis &b) {
    if (rho.qubits() != 3) {
        throw std::invalid_argument("measure_qubit3 expects a 3-qubit state");
    }
    const auto kets = basis_kets(b);
    std::array<LocalizationOutcome, 2> result = {
        LocalizationOutcome{Outcome::plus, 0.0, std::nullopt},
        LocalizationOutcome{Outcome::minus, 0.0, std::nullopt}};
    for (int k = 0; k < 2; ++k) {
        const ComplexMatrix unnorm =
            project_qubit3(rho, k == 0 ? kets.first : kets.second);
        const double p = unnorm.trace().real();
        result[k].probability = p;
        if (p >= kZeroProbability) {
            result[k].collapsed = DensityMatrix::from_collapse(2, unnorm);
        }
    }
    return result;
}

CollapsedCoefficients amp_coefficients(const DecoherenceParams &p,
                                       const MeasurementBasis &b, Outcome which) {
    const double c2 = std::cos(b.theta / 2.0) * std::cos(b.theta / 2.0);
    const double s2 = std::sin(b.theta / 2.0) * std::sin(b.theta / 2.0);
    // The minus outcome swaps the roles of cos^2 and sin^2 and flips the
    // sign of the coherence term.
    const double u = (which == Outcome::plus) ? c2 : s2;
    const double w = (which == Outcome::plus) ? s2 : c2;

    const double d1 = p.d1, d2 = p.d2, d3 = p.d3;
    const double b1 = p.d1bar(), b2 = p.d2bar(), b3 = p.d3bar();

    CollapsedCoefficients out{};
    out.gamma = 0.5 * (1.0 + d1 * d2 * d3) * u + 0.5 * d1 * d2 * b3 * w;
    out.kappa = 0.5 * d1 * b2 * d3 * u + 0.5 * d1 * b2 * b3 * w;
    out.tau = 0.5 * b1 * d2 * d3 * u + 0.5 * b1 * d2 * b3 * w;
    out.eta = 0.5 * b1 * b2 * d3 * u + 0.5 * b1 * b2 * b3 * w;

    const double xi_mag = 0.5 * std::sqrt(b1 * b2 * b3) *
                          std::sin(b.theta / 2.0) * std::cos(b.theta / 2.0);
    const cplx xi = xi_mag * std::polar(1.0, b.phi);
    out.xi = (which == Outcome::plus) ? xi : -xi;
    return out;
}

ComplexMatrix reconstruct_unnormalized(const CollapsedCoefficients &c) {
    ComplexMatrix m(4);
    m(0, 0) = c.gamma;
    m(1, 1) = c.kappa;
    m(2, 2) = c.tau;
    m(3, 3) = c.eta;
    m(0, 3) = c.xi;
    m(3, 0) = std::conj(c.xi);
    return m;
}

double collapse_probability(const DecoherenceParams &p, double theta,
                            Outcome which) {
    const double half_shift = 0.5 * p.d3 * std::cos(theta);
    return (which == Outcome::plus) ? 0.5 + half_shift : 0.5 - half_shift;
}

double mu_amp(const DecoherenceParams &p, const MeasurementBasis &b,
              Outcome which) {
    const auto c = amp_coefficients(p, b, which);
    const double prob = collapse_probability(p, b.theta, which);
    if (prob < kZeroProbability) {
        throw std::invalid_argument("collapse probability vanishes; no state");
    }
    const double diff = c.kappa - c.tau;
    const double root = std::sqrt(diff * diff + 4.0 * std::norm(c.xi));
    return (c.kappa + c.tau - root) / (2.0 * prob);
}

double mu_symmetric(double d, double theta, Outcome which) {
    check_strength(d);
    const double db = 1.0 - d;
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    const double u = (which == Outcome::plus) ? c * c : s * s;
    const double w = (which == Outcome::plus) ? s * s : c * c;
    const double prob = collapse_probability(DecoherenceParams::symmetric(d),
                                             theta, which);
    if (prob < kZeroProbability) {
        throw std::invalid_argument("collapse probability vanishes; no state");
    }
    return db / (2.0 * prob) * (d * d * u + d * db * w - std::sqrt(db) * s * c);
}

double depolarized_lambda(double d, double theta) {
    check_strength(d);
    const double a = std::abs(3.0 - 4.0 * d);
    return 2.0 * (3.0 - 2.0 * d) * d / 9.0 -
           a * a * a * std::sin(theta) / 54.0;
}

bool depolarized_condition(double d, double theta) {
    check_strength(d);
    const double a = std::abs(3.0 - 4.0 * d);
    if (a == 0.0) {
        // d = 3/4: the right-hand side diverges and lambda stays positive.
        return false;
    }
    return std::sin(theta) > 12.0 * (3.0 - 2.0 * d) * d / (a * a * a);
}

} // namespace entloc
