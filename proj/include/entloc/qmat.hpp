#ifndef ENTLOC_QMAT_HPP
#define ENTLOC_QMAT_HPP

#include <array>
#include <complex>
#include <vector>

// Dense complex linear algebra for registers of up to 4 qubits.
// Qubit indices are 1-based and qubit 1 is the most significant bit of the
// computational-basis label, so |q1 q2 q3> maps to index (q1<<2)|(q2<<1)|q3.

namespace entloc {

using cplx = std::complex<double>;

inline constexpr int kMaxDim = 16;

class ComplexMatrix {
  public:
    explicit ComplexMatrix(int dim);
    static ComplexMatrix identity(int dim);

    int dim() const { return dim_; }

    cplx &operator()(int row, int col) { return a_[row * dim_ + col]; }
    const cplx &operator()(int row, int col) const {
        return a_[row * dim_ + col];
    }

    ComplexMatrix adjoint() const;
    ComplexMatrix transpose() const;
    cplx trace() const;

    // max |A(i,j) - conj(A(j,i))| over all entries
    double hermiticity_residual() const;

    ComplexMatrix &operator+=(const ComplexMatrix &other);
    ComplexMatrix &operator-=(const ComplexMatrix &other);
    ComplexMatrix &operator*=(cplx scale);

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b) {
        a += b;
        return a;
    }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b) {
        a -= b;
        return a;
    }
    friend ComplexMatrix operator*(cplx s, ComplexMatrix a) {
        a *= s;
        return a;
    }
    friend ComplexMatrix operator*(const ComplexMatrix &a,
                                   const ComplexMatrix &b);

  private:
    int dim_;
    std::vector<cplx> a_;
};

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);

// Kronecker product; fails if the result would exceed a 4-qubit register.
ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);

struct PureState {
    int qubits;
    std::vector<cplx> amplitudes;

    PureState(int qubits, std::vector<cplx> amplitudes);

    double norm() const;
};

PureState apply(const ComplexMatrix &m, const PureState &state);

class DensityMatrix {
  public:
    // Validates Hermiticity (1e-12 per entry), unit trace (1e-12) and
    // positivity (eigenvalues >= -1e-10).
    DensityMatrix(int qubits, ComplexMatrix matrix);

    static DensityMatrix from_pure(const PureState &state);

    // Builds a state from an unnormalized (e.g. post-measurement) matrix:
    // divides by the trace and clamps eigenvalues in [-1e-10, 0) to zero.
    static DensityMatrix from_collapse(int qubits,
                                       const ComplexMatrix &unnormalized);

    int qubits() const { return qubits_; }
    const ComplexMatrix &matrix() const { return m_; }

  private:
    int qubits_;
    ComplexMatrix m_;
};

// Trace over one qubit (1-based index, MSB-first convention).
DensityMatrix partial_trace(const DensityMatrix &rho, int drop_qubit);

// Transpose on one subsystem of a two-qubit state. Output is Hermitian but
// not necessarily positive.
ComplexMatrix partial_transpose(const DensityMatrix &rho, int qubit);

struct EigResult {
    std::vector<double> values; // ascending
    ComplexMatrix vectors;      // columns, same order as values
};

// Cyclic Jacobi diagonalization of a Hermitian matrix. Input must be
// Hermitian within 1e-10; iteration stops once the off-diagonal Frobenius
// norm drops below 1e-13.
EigResult eig_hermitian(const ComplexMatrix &m);
std::vector<double> eigvals_hermitian(const ComplexMatrix &m);

using Mat3 = std::array<std::array<double, 3>, 3>;

struct Svd3 {
    std::array<double, 3> singular_values; // descending, >= 0
    int det_sign;                          // -1, 0, +1 (0 when |det| <= 1e-12)
};

// Singular values via the spectrum of R^T R; determinant sign computed
// directly from the 3x3 formula.
Svd3 singular_values_3x3(const Mat3 &r);

} // namespace entloc

#endif
