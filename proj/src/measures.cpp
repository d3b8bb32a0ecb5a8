#include "entloc/measures.hpp"

#include <cmath>
#include <stdexcept>

#include "entloc/channels.hpp"

namespace entloc {

double min_pt_eigenvalue(const DensityMatrix &rho) {
    const ComplexMatrix pt = partial_transpose(rho, 2);
    return eigvals_hermitian(pt).front();
}

double negativity(const DensityMatrix &rho) {
    return std::max(0.0, -2.0 * min_pt_eigenvalue(rho));
}

std::pair<double, FefDecomposition> fef(const DensityMatrix &rho) {
    if (rho.qubits() != 2) {
        throw std::invalid_argument("fef expects a 2-qubit state");
    }
    const ComplexMatrix *paulis[3] = {&pauli_x(), &pauli_y(), &pauli_z()};

    FefDecomposition dec{};
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            const cplx t = (kron(*paulis[i], *paulis[j]) * rho.matrix()).trace();
            if (std::abs(t.imag()) > 1e-12) {
                throw std::runtime_error("correlation matrix is not real");
            }
            dec.correlation_matrix[i][j] = t.real();
        }
    }
    const Svd3 svd = singular_values_3x3(dec.correlation_matrix);
    dec.singular_values = svd.singular_values;
    dec.det_sign = svd.det_sign;

    const double f = 0.25 * (1.0 + svd.singular_values[0] + svd.singular_values[1] -
                             svd.det_sign * svd.singular_values[2]);
    return {f, dec};
}

EntanglementReport entanglement_report(const DensityMatrix &rho) {
    EntanglementReport rep{};
    rep.min_pt_eigenvalue = min_pt_eigenvalue(rho);
    rep.negativity = std::max(0.0, -2.0 * rep.min_pt_eigenvalue);
    rep.fef = fef(rho).first;
    rep.useful_for_teleportation = rep.fef > 0.5;
    return rep;
}

double negativity_closed_amp(const DecoherenceParams &p,
                             const MeasurementBasis &b, Outcome which) {
    return std::max(0.0, -2.0 * mu_amp(p, b, which));
}

double fef_closed_amp(const DecoherenceParams &p, const MeasurementBasis &b,
                      Outcome which) {
    const auto c = amp_coefficients(p, b, which);
    const double prob = collapse_probability(p, b.theta, which);
    const double z = c.gamma + c.eta - c.kappa - c.tau;
    // First argument: overlap with the Phi Bell sector; second: the Psi
    // sector, which takes over when the damping of qubits 1 and 2 is
    // strongly asymmetric. The max is the exact FEF of this
    // diagonal-plus-corner family.
    return 0.25 + std::max(4.0 * std::abs(c.xi) + z, -z) / (4.0 * prob);
}

namespace {

// Branches with vanishing probability carry no weight; skipping them keeps
// the averages defined at degenerate corners such as d3 = 1, theta = 0.
constexpr double kZeroProbability = 1e-14;

} // namespace

double n_average(const DecoherenceParams &p, const MeasurementBasis &b) {
    const double pp = collapse_probability(p, b.theta, Outcome::plus);
    const double pm = collapse_probability(p, b.theta, Outcome::minus);
    double total = 0.0;
    if (pp >= kZeroProbability) {
        total += pp * negativity_closed_amp(p, b, Outcome::plus);
    }
    if (pm >= kZeroProbability) {
        total += pm * negativity_closed_amp(p, b, Outcome::minus);
    }
    return total;
}

double f_average(const DecoherenceParams &p, const MeasurementBasis &b) {
    const double pp = collapse_probability(p, b.theta, Outcome::plus);
    const double pm = collapse_probability(p, b.theta, Outcome::minus);
    double total = 0.0;
    if (pp >= kZeroProbability) {
        total += pp * fef_closed_amp(p, b, Outcome::plus);
    }
    if (pm >= kZeroProbability) {
        total += pm * fef_closed_amp(p, b, Outcome::minus);
    }
    return total;
}

double negativity_closed_d3zero(double d, double theta, Outcome which) {
    if (!(d >= 0.0 && d <= 1.0)) {
        throw std::invalid_argument("decoherence strength must lie in [0, 1]");
    }
    const double db = 1.0 - d;
    const double s = std::sin(theta / 2.0);
    const double c = std::cos(theta / 2.0);
    const double value = (which == Outcome::plus)
                             ? 2.0 * db * s * (c - d * s)
                             : 2.0 * db * c * (s - d * c);
    return std::max(0.0, value);
}

} // namespace entloc
