#include "entloc/qmat.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace entloc {

namespace {

bool valid_dim(int dim) {
    return dim == 1 || dim == 2 || dim == 4 || dim == 8 || dim == 16;
}

void check_dim(int dim) {
    if (!valid_dim(dim)) {
        throw std::invalid_argument("matrix dimension must be a power of 2 <= " +
                                    std::to_string(kMaxDim) + ", got " +
                                    std::to_string(dim));
    }
}

} // namespace

ComplexMatrix::ComplexMatrix(int dim) : dim_(dim), a_(dim * dim, cplx{0.0, 0.0}) {
    check_dim(dim);
}

ComplexMatrix ComplexMatrix::identity(int dim) {
    ComplexMatrix m(dim);
    for (int i = 0; i < dim; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(dim_);
    for (int i = 0; i < dim_; ++i) {
        for (int j = 0; j < dim_; ++j) {
            out(i, j) = std::conj((*this)(j, i));
        }
    }
    return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix out(dim_);
    for (int i = 0; i < dim_; ++i) {
        for (int j = 0; j < dim_; ++j) {
            out(i, j) = (*this)(j, i);
        }
    }
    return out;
}

cplx ComplexMatrix::trace() const {
    cplx t{0.0, 0.0};
    for (int i = 0; i < dim_; ++i) {
        t += (*this)(i, i);
    }
    return t;
}

double ComplexMatrix::hermiticity_residual() const {
    double worst = 0.0;
    for (int i = 0; i < dim_; ++i) {
        for (int j = 0; j < dim_; ++j) {
            worst = std::max(worst,
                             std::abs((*this)(i, j) - std::conj((*this)(j, i))));
        }
    }
    return worst;
}

ComplexMatrix &ComplexMatrix::operator+=(const ComplexMatrix &other) {
    if (other.dim_ != dim_) {
        throw std::invalid_argument("dimension mismatch in matrix addition");
    }
    for (std::size_t k = 0; k < a_.size(); ++k) {
        a_[k] += other.a_[k];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator-=(const ComplexMatrix &other) {
    if (other.dim_ != dim_) {
        throw std::invalid_argument("dimension mismatch in matrix subtraction");
    }
    for (std::size_t k = 0; k < a_.size(); ++k) {
        a_[k] -= other.a_[k];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator*=(cplx scale) {
    for (auto &v : a_) {
        v *= scale;
    }
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.dim_ != b.dim_) {
        throw std::invalid_argument("dimension mismatch in matrix product");
    }
    const int n = a.dim_;
    ComplexMatrix out(n);
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            const cplx aik = a(i, k);
            if (aik == cplx{0.0, 0.0}) {
                continue;
            }
            for (int j = 0; j < n; ++j) {
                out(i, j) += aik * b(k, j);
            }
        }
    }
    return out;
}

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("dimension mismatch in matrix comparison");
    }
    double worst = 0.0;
    for (int i = 0; i < a.dim(); ++i) {
        for (int j = 0; j < a.dim(); ++j) {
            worst = std::max(worst, std::abs(a(i, j) - b(i, j)));
        }
    }
    return worst;
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    const int na = a.dim();
    const int nb = b.dim();
    if (na * nb > kMaxDim) {
        throw std::invalid_argument("Kronecker product exceeds the 4-qubit limit");
    }
    ComplexMatrix out(na * nb);
    for (int i = 0; i < na; ++i) {
        for (int j = 0; j < na; ++j) {
            const cplx aij = a(i, j);
            for (int k = 0; k < nb; ++k) {
                for (int l = 0; l < nb; ++l) {
                    out(i * nb + k, j * nb + l) = aij * b(k, l);
                }
            }
        }
    }
    return out;
}

PureState::PureState(int qubits_, std::vector<cplx> amplitudes_)
    : qubits(qubits_), amplitudes(std::move(amplitudes_)) {
    if (qubits < 1 || qubits > 4) {
        throw std::invalid_argument("register size must be between 1 and 4 qubits");
    }
    if (amplitudes.size() != static_cast<std::size_t>(1 << qubits)) {
        throw std::invalid_argument("amplitude count does not match register size");
    }
    if (std::abs(norm() - 1.0) > 1e-12) {
        throw std::invalid_argument("pure state is not normalized");
    }
}

double PureState::norm() const {
    double s = 0.0;
    for (const auto &amp : amplitudes) {
        s += std::norm(amp);
    }
    return std::sqrt(s);
}

PureState apply(const ComplexMatrix &m, const PureState &state) {
    if (m.dim() != static_cast<int>(state.amplitudes.size())) {
        throw std::invalid_argument("operator/state dimension mismatch");
    }
    std::vector<cplx> out(state.amplitudes.size(), cplx{0.0, 0.0});
    for (int i = 0; i < m.dim(); ++i) {
        for (int j = 0; j < m.dim(); ++j) {
            out[i] += m(i, j) * state.amplitudes[j];
        }
    }
    return PureState(state.qubits, std::move(out));
}

DensityMatrix::DensityMatrix(int qubits, ComplexMatrix matrix)
    : qubits_(qubits), m_(std::move(matrix)) {
    if (qubits < 1 || qubits > 4) {
        throw std::invalid_argument("register size must be between 1 and 4 qubits");
    }
    if (m_.dim() != (1 << qubits)) {
        throw std::invalid_argument("matrix dimension does not match register size");
    }
    if (m_.hermiticity_residual() > 1e-12) {
        throw std::invalid_argument("density matrix is not Hermitian");
    }
    if (std::abs(m_.trace() - cplx{1.0, 0.0}) > 1e-12) {
        throw std::invalid_argument("density matrix trace is not 1");
    }
    const auto eigs = eigvals_hermitian(m_);
    if (eigs.front() < -1e-10) {
        throw std::invalid_argument("density matrix has a negative eigenvalue: " +
                                    std::to_string(eigs.front()));
    }
}

DensityMatrix DensityMatrix::from_pure(const PureState &state) {
    const int dim = 1 << state.qubits;
    ComplexMatrix m(dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            m(i, j) = state.amplitudes[i] * std::conj(state.amplitudes[j]);
        }
    }
    return DensityMatrix(state.qubits, std::move(m));
}

DensityMatrix DensityMatrix::from_collapse(int qubits,
                                           const ComplexMatrix &unnormalized) {
    const double tr = unnormalized.trace().real();
    if (tr <= 0.0) {
        throw std::invalid_argument("collapse has non-positive trace");
    }
    ComplexMatrix scaled = (cplx{1.0 / tr, 0.0}) * unnormalized;
    if (scaled.hermiticity_residual() > 1e-12) {
        throw std::invalid_argument("collapse result is not Hermitian");
    }

    const auto eig = eig_hermitian(scaled);
    if (eig.values.front() < -1e-10) {
        throw std::invalid_argument("collapse result has a negative eigenvalue: " +
                                    std::to_string(eig.values.front()));
    }
    if (eig.values.front() >= 0.0) {
        return DensityMatrix(qubits, std::move(scaled));
    }

    // Rebuild with the negative tail clamped to zero, then renormalize.
    const int n = scaled.dim();
    std::vector<double> clamped(eig.values);
    double total = 0.0;
    for (auto &v : clamped) {
        v = std::max(v, 0.0);
        total += v;
    }
    ComplexMatrix rebuilt(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            cplx sum{0.0, 0.0};
            for (int k = 0; k < n; ++k) {
                sum += eig.vectors(i, k) * clamped[k] / total *
                       std::conj(eig.vectors(j, k));
            }
            rebuilt(i, j) = sum;
        }
    }
    // Symmetrize away rounding noise so the constructor checks are exact.
    ComplexMatrix herm = rebuilt.adjoint();
    herm += rebuilt;
    herm *= cplx{0.5, 0.0};
    return DensityMatrix(qubits, std::move(herm));
}

namespace {

// Inserts bit `b` at position `pos` (counted from the LSB) of index x.
int insert_bit(int x, int pos, int b) {
    const int high = x >> pos;
    const int low = x & ((1 << pos) - 1);
    return (high << (pos + 1)) | (b << pos) | low;
}

} // namespace

DensityMatrix partial_trace(const DensityMatrix &rho, int drop_qubit) {
    const int q = rho.qubits();
    if (q < 2) {
        throw std::invalid_argument("partial trace needs at least 2 qubits");
    }
    if (drop_qubit < 1 || drop_qubit > q) {
        throw std::invalid_argument("qubit index out of range");
    }
    const int pos = q - drop_qubit; // bit position, qubit 1 = MSB
    const int out_dim = 1 << (q - 1);
    ComplexMatrix out(out_dim);
    for (int i = 0; i < out_dim; ++i) {
        for (int j = 0; j < out_dim; ++j) {
            cplx sum{0.0, 0.0};
            for (int b = 0; b < 2; ++b) {
                sum += rho.matrix()(insert_bit(i, pos, b), insert_bit(j, pos, b));
            }
            out(i, j) = sum;
        }
    }
    return DensityMatrix(q - 1, std::move(out));
}

ComplexMatrix partial_transpose(const DensityMatrix &rho, int qubit) {
    if (rho.qubits() != 2) {
        throw std::invalid_argument("partial transpose is defined for 2-qubit states");
    }
    if (qubit < 1 || qubit > 2) {
        throw std::invalid_argument("qubit index out of range");
    }
    const int pos = 2 - qubit;
    const int mask = 1 << pos;
    ComplexMatrix out(4);
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            // Swap the transposed qubit's bit between row and column.
            const int ii = (i & ~mask) | (j & mask);
            const int jj = (j & ~mask) | (i & mask);
            out(ii, jj) = rho.matrix()(i, j);
        }
    }
    return out;
}

EigResult eig_hermitian(const ComplexMatrix &m) {
    if (m.hermiticity_residual() > 1e-10) {
        throw std::invalid_argument("eig_hermitian: input is not Hermitian");
    }
    const int n = m.dim();

    // Work on the exactly Hermitian part.
    ComplexMatrix a(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            a(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
        }
    }
    ComplexMatrix v = ComplexMatrix::identity(n);

    const double tol = 1e-13;
    const int max_sweeps = 100;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                off += 2.0 * std::norm(a(p, q));
            }
        }
        if (std::sqrt(off) <= tol) {
            break;
        }
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const cplx apq = a(p, q);
                const double beta = std::abs(apq);
                if (beta == 0.0) {
                    continue;
                }
                const cplx phase = apq / beta;
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double tau = (aqq - app) / (2.0 * beta);
                const double t =
                    (tau >= 0.0) ? -1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                 : 1.0 / (-tau + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                // Columns p and q of A and V are mixed by the plane rotation
                // U(p,p)=c, U(p,q)=-s*phase, U(q,p)=s*conj(phase), U(q,q)=c;
                // A <- U^dagger A U, V <- V U.
                for (int k = 0; k < n; ++k) {
                    const cplx akp = a(k, p);
                    const cplx akq = a(k, q);
                    a(k, p) = c * akp + s * std::conj(phase) * akq;
                    a(k, q) = -s * phase * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const cplx apk = a(p, k);
                    const cplx aqk = a(q, k);
                    a(p, k) = c * apk + s * phase * aqk;
                    a(q, k) = -s * std::conj(phase) * apk + c * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = cplx{a(p, p).real(), 0.0};
                a(q, q) = cplx{a(q, q).real(), 0.0};
                for (int k = 0; k < n; ++k) {
                    const cplx vkp = v(k, p);
                    const cplx vkq = v(k, q);
                    v(k, p) = c * vkp + s * std::conj(phase) * vkq;
                    v(k, q) = -s * phase * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        return a(x, x).real() < a(y, y).real();
    });

    EigResult result{std::vector<double>(n), ComplexMatrix(n)};
    for (int k = 0; k < n; ++k) {
        result.values[k] = a(order[k], order[k]).real();
        for (int i = 0; i < n; ++i) {
            result.vectors(i, k) = v(i, order[k]);
        }
    }
    return result;
}

std::vector<double> eigvals_hermitian(const ComplexMatrix &m) {
    return eig_hermitian(m).values;
}

Svd3 singular_values_3x3(const Mat3 &r) {
    // R^T R embedded in the top-left block of a 4x4 Hermitian matrix; the
    // zero padding adds one extra zero eigenvalue, which can never displace
    // the three true (non-negative) ones from the top of the sorted list.
    ComplexMatrix s(4);
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            double sum = 0.0;
            for (int k = 0; k < 3; ++k) {
                sum += r[k][i] * r[k][j];
            }
            s(i, j) = sum;
        }
    }
    auto eigs = eigvals_hermitian(s); // ascending, length 4

    Svd3 out{};
    for (int k = 0; k < 3; ++k) {
        out.singular_values[k] = std::sqrt(std::max(eigs[3 - k], 0.0));
    }

    const double det = r[0][0] * (r[1][1] * r[2][2] - r[1][2] * r[2][1]) -
                       r[0][1] * (r[1][0] * r[2][2] - r[1][2] * r[2][0]) +
                       r[0][2] * (r[1][0] * r[2][1] - r[1][1] * r[2][0]);
    out.det_sign = (std::abs(det) <= 1e-12) ? 0 : (det > 0.0 ? 1 : -1);
    return out;
}

} // namespace entloc
