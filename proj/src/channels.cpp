#include "entloc/channels.hpp"

#include <cmath>
#include <stdexcept>

namespace entloc {

namespace {

void check_strength(double d) {
    if (!(d >= 0.0 && d <= 1.0)) {
        throw std::invalid_argument("decoherence strength must lie in [0, 1]");
    }
}

} // namespace

KrausChannel::KrausChannel(std::string name_, std::vector<ComplexMatrix> operators_)
    : name(std::move(name_)), operators(std::move(operators_)) {
    if (operators.empty()) {
        throw std::invalid_argument("Kraus channel needs at least one operator");
    }
    ComplexMatrix sum(2);
    for (const auto &k : operators) {
        if (k.dim() != 2) {
            throw std::invalid_argument("Kraus operators must be 2x2");
        }
        sum += k.adjoint() * k;
    }
    if (max_abs_diff(sum, ComplexMatrix::identity(2)) > 1e-12) {
        throw std::invalid_argument("Kraus operators violate completeness");
    }
}

DecoherenceParams::DecoherenceParams(double d1_, double d2_, double d3_)
    : d1(d1_), d2(d2_), d3(d3_) {
    check_strength(d1);
    check_strength(d2);
    check_strength(d3);
}

KrausChannel amplitude_damping(double d) {
    check_strength(d);
    ComplexMatrix k0(2);
    k0(0, 0) = 1.0;
    k0(1, 1) = std::sqrt(1.0 - d);
    ComplexMatrix k1(2);
    k1(0, 1) = std::sqrt(d);
    return KrausChannel("amplitude_damping", {k0, k1});
}

const ComplexMatrix &pauli_x() {
    static const ComplexMatrix m = [] {
        ComplexMatrix x(2);
        x(0, 1) = 1.0;
        x(1, 0) = 1.0;
        return x;
    }();
    return m;
}

const ComplexMatrix &pauli_y() {
    static const ComplexMatrix m = [] {
        ComplexMatrix y(2);
        y(0, 1) = cplx{0.0, -1.0};
        y(1, 0) = cplx{0.0, 1.0};
        return y;
    }();
    return m;
}

const ComplexMatrix &pauli_z() {
    static const ComplexMatrix m = [] {
        ComplexMatrix z(2);
        z(0, 0) = 1.0;
        z(1, 1) = -1.0;
        return z;
    }();
    return m;
}

KrausChannel depolarizing(double d) {
    check_strength(d);
    const double p0 = 1.0 - d;
    const double pi = d / 3.0;
    std::vector<ComplexMatrix> ops;
    ops.push_back(cplx{std::sqrt(p0), 0.0} * ComplexMatrix::identity(2));
    ops.push_back(cplx{std::sqrt(pi), 0.0} * pauli_x());
    ops.push_back(cplx{std::sqrt(pi), 0.0} * pauli_y());
    ops.push_back(cplx{std::sqrt(pi), 0.0} * pauli_z());
    return KrausChannel("depolarizing", std::move(ops));
}

DensityMatrix apply_local(const DensityMatrix &rho,
                          const std::vector<std::optional<KrausChannel>> &assignment) {
    const int q = rho.qubits();
    if (assignment.size() != static_cast<std::size_t>(q)) {
        throw std::invalid_argument("assignment length does not match register size");
    }

    std::vector<const std::vector<ComplexMatrix> *> per_qubit(q);
    static const std::vector<ComplexMatrix> identity_only = {ComplexMatrix::identity(2)};
    for (int i = 0; i < q; ++i) {
        per_qubit[i] = assignment[i] ? &assignment[i]->operators : &identity_only;
    }

    ComplexMatrix out(rho.matrix().dim());
    std::vector<std::size_t> idx(q, 0);
    while (true) {
        ComplexMatrix op = (*per_qubit[0])[idx[0]];
        for (int i = 1; i < q; ++i) {
            op = kron(op, (*per_qubit[i])[idx[i]]);
        }
        out += op * rho.matrix() * op.adjoint();

        int pos = q - 1;
        while (pos >= 0 && ++idx[pos] == per_qubit[pos]->size()) {
            idx[pos] = 0;
            --pos;
        }
        if (pos < 0) {
            break;
        }
    }
    return DensityMatrix(q, std::move(out));
}

DensityMatrix apply_amplitude_damping(const DensityMatrix &rho,
                                      const DecoherenceParams &params) {
    if (rho.qubits() != 3) {
        throw std::invalid_argument("expected a 3-qubit register");
    }
    return apply_local(rho, {amplitude_damping(params.d1),
                             amplitude_damping(params.d2),
                             amplitude_damping(params.d3)});
}

DensityMatrix apply_depolarizing_all(const DensityMatrix &rho, double d) {
    std::vector<std::optional<KrausChannel>> assignment(rho.qubits(),
                                                        depolarizing(d));
    return apply_local(rho, assignment);
}

} // namespace entloc
