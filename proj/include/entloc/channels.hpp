#ifndef ENTLOC_CHANNELS_HPP
#define ENTLOC_CHANNELS_HPP

#include <optional>
#include <string>
#include <vector>

#include "entloc/qmat.hpp"

namespace entloc {

// A single-qubit channel given by 2x2 Kraus operators K_i with
// sum_i K_i^dagger K_i = I (checked to 1e-12 per entry on construction).
struct KrausChannel {
    std::string name;
    std::vector<ComplexMatrix> operators;

    KrausChannel(std::string name, std::vector<ComplexMatrix> operators);
};

// Per-qubit decoherence strengths, each in [0, 1].
struct DecoherenceParams {
    double d1;
    double d2;
    double d3;

    DecoherenceParams(double d1, double d2, double d3);
    static DecoherenceParams symmetric(double d) {
        return DecoherenceParams(d, d, d);
    }

    bool is_symmetric() const { return d1 == d2 && d2 == d3; }
    double d1bar() const { return 1.0 - d1; }
    double d2bar() const { return 1.0 - d2; }
    double d3bar() const { return 1.0 - d3; }
};

// K0 = diag(1, sqrt(1-d)), K1 = sqrt(d) |0><1|.
KrausChannel amplitude_damping(double d);

// sqrt(p_i) sigma_i with p_0 = 1-d and p_1 = p_2 = p_3 = d/3.
KrausChannel depolarizing(double d);

// rho' = sum over all Kraus-index combinations of (K x K x ...) rho (...)^dagger.
// One optional channel per qubit; an absent entry acts as the identity.
DensityMatrix apply_local(const DensityMatrix &rho,
                          const std::vector<std::optional<KrausChannel>> &assignment);

// Convenience wrappers used throughout the toolkit.
DensityMatrix apply_amplitude_damping(const DensityMatrix &rho,
                                      const DecoherenceParams &params);
DensityMatrix apply_depolarizing_all(const DensityMatrix &rho, double d);

const ComplexMatrix &pauli_x();
const ComplexMatrix &pauli_y();
const ComplexMatrix &pauli_z();

} // namespace entloc

#endif
