// Copyright 2026 The ckasim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CKASIM_QSTATE_H
#define CKASIM_QSTATE_H

// Dense linear algebra on small qubit registers.
//
// Qubit ordering convention used throughout the library: qubit 0 is the
// most significant bit of a computational basis label, so for a register of
// n qubits the basis index of |b_0 b_1 ... b_{n-1}> is sum_q b_q 2^(n-1-q).
// Party 0 (Alice) always sits on qubit 0 and Bob_i on qubit i.

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ckasim {

using Complex = std::complex<double>;

/// Maximum qubit count of a dense density matrix. Reads CKASIM_DENSE_CAP,
/// default 7.
int dense_qubit_cap();

/// Maximum qubit count of a pure state vector (twice the dense cap).
int pure_qubit_cap();

/// Square complex matrix, row-major.
class ComplexMatrix {
   public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(std::size_t dim);
    ComplexMatrix(std::size_t dim, std::vector<Complex> entries);

    static ComplexMatrix identity(std::size_t dim);
    static ComplexMatrix diagonal(std::span<const double> values);

    std::size_t dim() const { return dim_; }
    Complex &operator()(std::size_t r, std::size_t c) { return entries_[r * dim_ + c]; }
    const Complex &operator()(std::size_t r, std::size_t c) const { return entries_[r * dim_ + c]; }
    std::span<const Complex> entries() const { return entries_; }

    ComplexMatrix adjoint() const;
    Complex trace() const;
    bool is_hermitian(double tol) const;
    double max_abs() const;
    double max_abs_diff(const ComplexMatrix &other) const;

    ComplexMatrix &operator+=(const ComplexMatrix &other);
    ComplexMatrix &operator-=(const ComplexMatrix &other);
    ComplexMatrix &operator*=(Complex scale);

   private:
    std::size_t dim_ = 0;
    std::vector<Complex> entries_;
};

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b);
ComplexMatrix operator*(Complex scale, ComplexMatrix a);
ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);

/// Party labels and classical-register flags for the qubits of a state.
struct QubitRegisterMap {
    std::vector<std::string> labels;
    std::vector<bool> classical;

    /// Default labels: A, B1, B2, ... followed by E0, E1, ... past `parties`.
    static QubitRegisterMap standard(int qubits, int parties = -1);
};

class PureState;

/// Valid density operator on a qubit register: Hermitian (1e-12), unit
/// trace (1e-10) and positive semidefinite (min eigenvalue >= -1e-10).
class DensityMatrix {
   public:
    /// Validates every invariant; throws DomainError or CapacityError.
    explicit DensityMatrix(ComplexMatrix m);
    DensityMatrix(ComplexMatrix m, QubitRegisterMap registers);

    static DensityMatrix from_pure(const PureState &psi);
    static DensityMatrix maximally_mixed(int qubits);
    /// Computational basis projector, e.g. basis("01") = |01><01|.
    static DensityMatrix basis(std::string_view bits);

    int qubit_count() const { return qubits_; }
    std::size_t dim() const { return matrix_.dim(); }
    const ComplexMatrix &matrix() const { return matrix_; }
    const QubitRegisterMap &registers() const { return registers_; }
    bool is_classical(int qubit) const { return registers_.classical.at(qubit); }
    Complex operator()(std::size_t r, std::size_t c) const { return matrix_(r, c); }

   private:
    struct Unchecked {};
    DensityMatrix(Unchecked, ComplexMatrix m, QubitRegisterMap registers);
    friend DensityMatrix trusted_density(ComplexMatrix, QubitRegisterMap);

    ComplexMatrix matrix_;
    QubitRegisterMap registers_;
    int qubits_ = 0;
};

/// Normalized state vector.
class PureState {
   public:
    /// Throws DomainError unless the squared norm is 1 within 1e-12.
    explicit PureState(std::vector<Complex> amplitudes);
    /// Rescales to unit norm; throws DomainError on the zero vector.
    static PureState normalized(std::vector<Complex> amplitudes);
    static PureState basis(std::string_view bits);
    static PureState plus(int qubits);
    /// (|0...0> + |1...1>)/sqrt(2) on `qubits` qubits.
    static PureState ghz(int qubits);

    int qubit_count() const { return qubits_; }
    std::size_t dim() const { return amplitudes_.size(); }
    std::span<const Complex> amplitudes() const { return amplitudes_; }
    Complex operator[](std::size_t i) const { return amplitudes_[i]; }

   private:
    std::vector<Complex> amplitudes_;
    int qubits_ = 0;
};

struct JacobiOptions {
    double tolerance = 1e-12;
    int max_sweeps = 100;
};

/// Eigen-decomposition of a Hermitian matrix. Eigenvalues are sorted
/// descending; column j of `eigenvectors` belongs to eigenvalues[j].
struct Spectrum {
    std::vector<double> eigenvalues;
    ComplexMatrix eigenvectors;
    int sweeps = 0;
    double off_diagonal = 0.0;
};

/// Cyclic complex Jacobi rotations. Converged when the largest off-diagonal
/// magnitude drops below tolerance * max(1, max|a_ij|). Throws
/// NumericalError with the residual after `max_sweeps`.
Spectrum eigensystem(const ComplexMatrix &h, const JacobiOptions &opts = {});
Spectrum eigensystem(const DensityMatrix &rho, const JacobiOptions &opts = {});

DensityMatrix tensor(const DensityMatrix &a, const DensityMatrix &b);
PureState tensor(const PureState &a, const PureState &b);

/// Reduced state on `keep` (any order; the result lists the kept qubits in
/// ascending order).
DensityMatrix partial_trace(const DensityMatrix &rho, std::span<const int> keep);
DensityMatrix partial_trace(const DensityMatrix &rho, std::initializer_list<int> keep);
/// Reduced state of |psi><psi| on `keep` without forming the full projector.
DensityMatrix partial_trace(const PureState &psi, std::span<const int> keep);
DensityMatrix partial_trace(const PureState &psi, std::initializer_list<int> keep);

/// Reorders tensor factors: qubit i of the result is qubit order[i] of the input.
ComplexMatrix permute_qubits(const ComplexMatrix &m, std::span<const int> order);
DensityMatrix permute_qubits(const DensityMatrix &rho, std::span<const int> order);
PureState permute_qubits(const PureState &psi, std::span<const int> order);

/// Entropy in bits. Eigenvalues are clipped to [0, 1] before taking logs;
/// `clip_correction` is the largest clipping applied.
struct EntropyDetail {
    double bits = 0.0;
    double clip_correction = 0.0;
};
EntropyDetail entropy_detail(const DensityMatrix &rho);
double von_neumann_entropy(const DensityMatrix &rho);

/// H(target | condition) = H(target, condition) - H(condition).
double conditional_entropy(const DensityMatrix &rho, std::span<const int> target,
                           std::span<const int> condition);
double conditional_entropy(const DensityMatrix &rho, std::initializer_list<int> target,
                           std::initializer_list<int> condition);

/// Pinching of one qubit in the computational basis; marks it classical.
DensityMatrix measure_computational(const DensityMatrix &rho, int subsystem);

/// Spectral purification sum_i sqrt(l_i) |v_i>|i>_E. The ancilla occupies
/// max(1, ceil(log2 rank)) trailing qubits.
PureState purify(const DensityMatrix &rho);

}  // namespace ckasim

#endif
