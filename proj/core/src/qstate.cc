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

#include "ckasim/qstate.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <string>

#include "ckasim/errors.h"
#include "internal.h"

namespace ckasim {

namespace {

constexpr double kHermitianTol = 1e-12;
constexpr double kTraceTol = 1e-10;
constexpr double kPsdTol = 1e-10;

void require_cap(int qubits, int cap, const char *what) {
    if (qubits > cap) {
        throw CapacityError(qubits, cap, what);
    }
}

void check_hermitian_and_trace(const ComplexMatrix &m) {
    if (!m.is_hermitian(kHermitianTol)) {
        throw DomainError("density matrix is not Hermitian");
    }
    Complex tr = m.trace();
    if (std::abs(tr.real() - 1.0) > kTraceTol || std::abs(tr.imag()) > kTraceTol) {
        throw DomainError("density matrix trace " + std::to_string(tr.real()) + " differs from 1");
    }
}

void check_classical_flags(const ComplexMatrix &m, const QubitRegisterMap &regs, int qubits) {
    for (int q = 0; q < qubits; q++) {
        if (!regs.classical[q]) {
            continue;
        }
        std::size_t mask = detail::qubit_mask(q, qubits);
        for (std::size_t r = 0; r < m.dim(); r++) {
            for (std::size_t c = 0; c < m.dim(); c++) {
                if (((r ^ c) & mask) && std::abs(m(r, c)) > kHermitianTol) {
                    throw DomainError("classical register " + regs.labels[q] + " has coherences");
                }
            }
        }
    }
}

QubitRegisterMap combine_registers(const QubitRegisterMap &a, const QubitRegisterMap &b) {
    QubitRegisterMap out;
    out.labels = a.labels;
    out.labels.insert(out.labels.end(), b.labels.begin(), b.labels.end());
    out.classical = a.classical;
    out.classical.insert(out.classical.end(), b.classical.begin(), b.classical.end());
    std::vector<std::string> sorted = out.labels;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        auto classical = out.classical;
        out = QubitRegisterMap::standard(static_cast<int>(classical.size()));
        out.classical = std::move(classical);
    }
    return out;
}

QubitRegisterMap select_registers(const QubitRegisterMap &regs, std::span<const int> qubits) {
    QubitRegisterMap out;
    for (int q : qubits) {
        out.labels.push_back(regs.labels[q]);
        out.classical.push_back(regs.classical[q]);
    }
    return out;
}

std::vector<std::size_t> permutation_table(std::span<const int> order, int qubits) {
    std::vector<std::size_t> new_to_old(std::size_t{1} << qubits);
    for (std::size_t idx = 0; idx < new_to_old.size(); idx++) {
        std::size_t old = 0;
        for (int i = 0; i < qubits; i++) {
            if (detail::bit_of(idx, i, qubits)) {
                old |= detail::qubit_mask(order[i], qubits);
            }
        }
        new_to_old[idx] = old;
    }
    return new_to_old;
}

void check_permutation(std::span<const int> order, int qubits) {
    if (static_cast<int>(order.size()) != qubits) {
        throw DomainError("permutation length does not match qubit count");
    }
    std::vector<int> sorted(order.begin(), order.end());
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < qubits; i++) {
        if (sorted[i] != i) {
            throw DomainError("invalid qubit permutation");
        }
    }
}

std::vector<int> complement_of(std::span<const int> keep, int qubits) {
    std::vector<int> out;
    for (int q = 0; q < qubits; q++) {
        if (!std::binary_search(keep.begin(), keep.end(), q)) {
            out.push_back(q);
        }
    }
    return out;
}

}  // namespace

namespace detail {

std::vector<std::size_t> index_table(std::span<const int> positions, int qubits) {
    const int k = static_cast<int>(positions.size());
    std::vector<std::size_t> table(std::size_t{1} << k);
    for (std::size_t v = 0; v < table.size(); v++) {
        std::size_t idx = 0;
        for (int b = 0; b < k; b++) {
            if (bit_of(v, b, k)) {
                idx |= qubit_mask(positions[b], qubits);
            }
        }
        table[v] = idx;
    }
    return table;
}

int qubits_for_dim(std::size_t dim) {
    if (dim == 0 || (dim & (dim - 1)) != 0) {
        throw DomainError("dimension " + std::to_string(dim) + " is not a power of two");
    }
    int q = 0;
    while ((std::size_t{1} << q) < dim) {
        q++;
    }
    return q;
}

std::vector<int> sorted_unique(std::span<const int> qubits, int total, const char *what) {
    std::vector<int> out(qubits.begin(), qubits.end());
    std::sort(out.begin(), out.end());
    if (std::adjacent_find(out.begin(), out.end()) != out.end()) {
        throw DomainError(std::string(what) + ": repeated subsystem index");
    }
    for (int q : out) {
        if (q < 0 || q >= total) {
            throw DomainError(std::string(what) + ": subsystem index " + std::to_string(q) + " out of range");
        }
    }
    return out;
}

}  // namespace detail

int dense_qubit_cap() {
    if (const char *env = std::getenv("CKASIM_DENSE_CAP")) {
        char *end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1 && v <= 12) {
            return static_cast<int>(v);
        }
    }
    return 7;
}

int pure_qubit_cap() {
    return 2 * dense_qubit_cap();
}

// ---------------------------------------------------------------- ComplexMatrix

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {
}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<Complex> entries) : dim_(dim), entries_(std::move(entries)) {
    if (entries_.size() != dim * dim) {
        throw DomainError("matrix entry count does not match dimension");
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; i++) {
        m(i, i) = 1.0;
    }
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
    ComplexMatrix m(values.size());
    for (std::size_t i = 0; i < values.size(); i++) {
        m(i, i) = values[i];
    }
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(dim_);
    for (std::size_t r = 0; r < dim_; r++) {
        for (std::size_t c = 0; c < dim_; c++) {
            out(c, r) = std::conj((*this)(r, c));
        }
    }
    return out;
}

Complex ComplexMatrix::trace() const {
    Complex t = 0.0;
    for (std::size_t i = 0; i < dim_; i++) {
        t += (*this)(i, i);
    }
    return t;
}

bool ComplexMatrix::is_hermitian(double tol) const {
    for (std::size_t r = 0; r < dim_; r++) {
        for (std::size_t c = r; c < dim_; c++) {
            if (std::abs((*this)(r, c) - std::conj((*this)(c, r))) > tol) {
                return false;
            }
        }
    }
    return true;
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const auto &z : entries_) {
        m = std::max(m, std::abs(z));
    }
    return m;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix &other) const {
    if (other.dim_ != dim_) {
        throw DomainError("matrix dimension mismatch");
    }
    double m = 0.0;
    for (std::size_t i = 0; i < entries_.size(); i++) {
        m = std::max(m, std::abs(entries_[i] - other.entries_[i]));
    }
    return m;
}

ComplexMatrix &ComplexMatrix::operator+=(const ComplexMatrix &other) {
    if (other.dim_ != dim_) {
        throw DomainError("matrix dimension mismatch");
    }
    for (std::size_t i = 0; i < entries_.size(); i++) {
        entries_[i] += other.entries_[i];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator-=(const ComplexMatrix &other) {
    if (other.dim_ != dim_) {
        throw DomainError("matrix dimension mismatch");
    }
    for (std::size_t i = 0; i < entries_.size(); i++) {
        entries_[i] -= other.entries_[i];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator*=(Complex scale) {
    for (auto &z : entries_) {
        z *= scale;
    }
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.dim() != b.dim()) {
        throw DomainError("matrix dimension mismatch");
    }
    const std::size_t n = a.dim();
    ComplexMatrix out(n);
    for (std::size_t r = 0; r < n; r++) {
        for (std::size_t k = 0; k < n; k++) {
            Complex ark = a(r, k);
            if (ark == 0.0) {
                continue;
            }
            for (std::size_t c = 0; c < n; c++) {
                out(r, c) += ark * b(k, c);
            }
        }
    }
    return out;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b) {
    a += b;
    return a;
}

ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b) {
    a -= b;
    return a;
}

ComplexMatrix operator*(Complex scale, ComplexMatrix a) {
    a *= scale;
    return a;
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    const std::size_t na = a.dim();
    const std::size_t nb = b.dim();
    ComplexMatrix out(na * nb);
    for (std::size_t ra = 0; ra < na; ra++) {
        for (std::size_t ca = 0; ca < na; ca++) {
            Complex x = a(ra, ca);
            if (x == 0.0) {
                continue;
            }
            for (std::size_t rb = 0; rb < nb; rb++) {
                for (std::size_t cb = 0; cb < nb; cb++) {
                    out(ra * nb + rb, ca * nb + cb) = x * b(rb, cb);
                }
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------- registers

QubitRegisterMap QubitRegisterMap::standard(int qubits, int parties) {
    if (parties < 0) {
        parties = qubits;
    }
    QubitRegisterMap regs;
    for (int q = 0; q < qubits; q++) {
        if (q == 0 && parties > 0) {
            regs.labels.emplace_back("A");
        } else if (q < parties) {
            regs.labels.push_back("B" + std::to_string(q));
        } else {
            regs.labels.push_back("E" + std::to_string(q - parties));
        }
    }
    regs.classical.assign(qubits, false);
    return regs;
}

// ---------------------------------------------------------------- DensityMatrix

DensityMatrix::DensityMatrix(ComplexMatrix m)
    : DensityMatrix(std::move(m), QubitRegisterMap{}) {
}

DensityMatrix::DensityMatrix(ComplexMatrix m, QubitRegisterMap registers)
    : matrix_(std::move(m)), registers_(std::move(registers)) {
    qubits_ = detail::qubits_for_dim(matrix_.dim());
    require_cap(qubits_, dense_qubit_cap(), "density matrix");
    if (registers_.labels.empty()) {
        registers_ = QubitRegisterMap::standard(qubits_);
    }
    if (static_cast<int>(registers_.labels.size()) != qubits_ ||
        static_cast<int>(registers_.classical.size()) != qubits_) {
        throw DomainError("register map size does not match qubit count");
    }
    check_hermitian_and_trace(matrix_);
    Spectrum s = eigensystem(matrix_);
    if (s.eigenvalues.back() < -kPsdTol) {
        throw DomainError("density matrix is not positive semidefinite (min eigenvalue " +
                          std::to_string(s.eigenvalues.back()) + ")");
    }
    check_classical_flags(matrix_, registers_, qubits_);
}

DensityMatrix::DensityMatrix(Unchecked, ComplexMatrix m, QubitRegisterMap registers)
    : matrix_(std::move(m)), registers_(std::move(registers)) {
    qubits_ = detail::qubits_for_dim(matrix_.dim());
    require_cap(qubits_, dense_qubit_cap(), "density matrix");
    check_hermitian_and_trace(matrix_);
}

DensityMatrix trusted_density(ComplexMatrix m, QubitRegisterMap registers) {
    if (registers.labels.empty()) {
        registers = QubitRegisterMap::standard(detail::qubits_for_dim(m.dim()));
    }
    return DensityMatrix(DensityMatrix::Unchecked{}, std::move(m), std::move(registers));
}

DensityMatrix DensityMatrix::from_pure(const PureState &psi) {
    require_cap(psi.qubit_count(), dense_qubit_cap(), "density matrix");
    const std::size_t n = psi.dim();
    ComplexMatrix m(n);
    for (std::size_t r = 0; r < n; r++) {
        for (std::size_t c = 0; c < n; c++) {
            m(r, c) = psi[r] * std::conj(psi[c]);
        }
    }
    return trusted_density(std::move(m), QubitRegisterMap::standard(psi.qubit_count()));
}

DensityMatrix DensityMatrix::maximally_mixed(int qubits) {
    require_cap(qubits, dense_qubit_cap(), "density matrix");
    const std::size_t n = std::size_t{1} << qubits;
    ComplexMatrix m = ComplexMatrix::identity(n);
    m *= 1.0 / static_cast<double>(n);
    return trusted_density(std::move(m), QubitRegisterMap::standard(qubits));
}

DensityMatrix DensityMatrix::basis(std::string_view bits) {
    return from_pure(PureState::basis(bits));
}

// ---------------------------------------------------------------- PureState

PureState::PureState(std::vector<Complex> amplitudes) : amplitudes_(std::move(amplitudes)) {
    qubits_ = detail::qubits_for_dim(amplitudes_.size());
    require_cap(qubits_, pure_qubit_cap(), "pure state");
    double norm2 = 0.0;
    for (const auto &a : amplitudes_) {
        norm2 += std::norm(a);
    }
    if (std::abs(norm2 - 1.0) > 1e-12) {
        throw DomainError("pure state squared norm " + std::to_string(norm2) + " differs from 1");
    }
}

PureState PureState::normalized(std::vector<Complex> amplitudes) {
    double norm2 = 0.0;
    for (const auto &a : amplitudes) {
        norm2 += std::norm(a);
    }
    if (norm2 <= 0.0) {
        throw DomainError("cannot normalize the zero vector");
    }
    double inv = 1.0 / std::sqrt(norm2);
    for (auto &a : amplitudes) {
        a *= inv;
    }
    return PureState(std::move(amplitudes));
}

PureState PureState::basis(std::string_view bits) {
    if (bits.empty()) {
        throw DomainError("empty basis label");
    }
    std::size_t idx = 0;
    for (char ch : bits) {
        if (ch != '0' && ch != '1') {
            throw DomainError("basis label must contain only 0 and 1");
        }
        idx = (idx << 1) | static_cast<std::size_t>(ch - '0');
    }
    std::vector<Complex> amps(std::size_t{1} << bits.size());
    amps[idx] = 1.0;
    return PureState(std::move(amps));
}

PureState PureState::plus(int qubits) {
    const std::size_t n = std::size_t{1} << qubits;
    return PureState(std::vector<Complex>(n, 1.0 / std::sqrt(static_cast<double>(n))));
}

PureState PureState::ghz(int qubits) {
    const std::size_t n = std::size_t{1} << qubits;
    std::vector<Complex> amps(n);
    amps[0] = M_SQRT1_2;
    amps[n - 1] = M_SQRT1_2;
    return PureState(std::move(amps));
}

// ---------------------------------------------------------------- eigensystem

Spectrum eigensystem(const ComplexMatrix &h, const JacobiOptions &opts) {
    const std::size_t n = h.dim();
    const double scale = std::max(1.0, h.max_abs());
    if (!h.is_hermitian(1e-9 * scale)) {
        throw DomainError("eigensystem requires a Hermitian matrix");
    }
    ComplexMatrix a(n);
    for (std::size_t r = 0; r < n; r++) {
        for (std::size_t c = 0; c < n; c++) {
            a(r, c) = 0.5 * (h(r, c) + std::conj(h(c, r)));
        }
    }
    ComplexMatrix v = ComplexMatrix::identity(n);
    const double threshold = opts.tolerance * scale;

    auto max_off = [&]() {
        double m = 0.0;
        for (std::size_t p = 0; p < n; p++) {
            for (std::size_t q = p + 1; q < n; q++) {
                m = std::max(m, std::abs(a(p, q)));
            }
        }
        return m;
    };

    Spectrum out;
    double off = max_off();
    int sweep = 0;
    while (off >= threshold) {
        if (sweep >= opts.max_sweeps) {
            throw NumericalError("Jacobi eigensolver did not converge in " + std::to_string(opts.max_sweeps) + " sweeps",
                                 off);
        }
        for (std::size_t p = 0; p + 1 < n; p++) {
            for (std::size_t q = p + 1; q < n; q++) {
                const Complex g = a(p, q);
                const double abs_g = std::abs(g);
                if (abs_g == 0.0) {
                    continue;
                }
                const Complex phase = g / abs_g;
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double tau = (aqq - app) / (2.0 * abs_g);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                // U = diag(1, conj(phase)) * [[c, s], [-s, c]] on the (p, q) plane.
                const Complex upp = c;
                const Complex upq = s;
                const Complex uqp = -s * std::conj(phase);
                const Complex uqq = c * std::conj(phase);
                for (std::size_t r = 0; r < n; r++) {
                    const Complex arp = a(r, p);
                    const Complex arq = a(r, q);
                    a(r, p) = arp * upp + arq * uqp;
                    a(r, q) = arp * upq + arq * uqq;
                }
                for (std::size_t col = 0; col < n; col++) {
                    const Complex apc = a(p, col);
                    const Complex aqc = a(q, col);
                    a(p, col) = std::conj(upp) * apc + std::conj(uqp) * aqc;
                    a(q, col) = std::conj(upq) * apc + std::conj(uqq) * aqc;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
                for (std::size_t r = 0; r < n; r++) {
                    const Complex vrp = v(r, p);
                    const Complex vrq = v(r, q);
                    v(r, p) = vrp * upp + vrq * uqp;
                    v(r, q) = vrp * upq + vrq * uqq;
                }
            }
        }
        sweep++;
        off = max_off();
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return a(i, i).real() > a(j, j).real(); });
    out.eigenvalues.resize(n);
    out.eigenvectors = ComplexMatrix(n);
    for (std::size_t j = 0; j < n; j++) {
        out.eigenvalues[j] = a(order[j], order[j]).real();
        for (std::size_t r = 0; r < n; r++) {
            out.eigenvectors(r, j) = v(r, order[j]);
        }
    }
    out.sweeps = sweep;
    out.off_diagonal = off;
    return out;
}

Spectrum eigensystem(const DensityMatrix &rho, const JacobiOptions &opts) {
    return eigensystem(rho.matrix(), opts);
}

// ---------------------------------------------------------------- composition

DensityMatrix tensor(const DensityMatrix &a, const DensityMatrix &b) {
    require_cap(a.qubit_count() + b.qubit_count(), dense_qubit_cap(), "tensor product");
    return trusted_density(kron(a.matrix(), b.matrix()), combine_registers(a.registers(), b.registers()));
}

PureState tensor(const PureState &a, const PureState &b) {
    require_cap(a.qubit_count() + b.qubit_count(), pure_qubit_cap(), "tensor product");
    std::vector<Complex> amps(a.dim() * b.dim());
    for (std::size_t i = 0; i < a.dim(); i++) {
        for (std::size_t j = 0; j < b.dim(); j++) {
            amps[i * b.dim() + j] = a[i] * b[j];
        }
    }
    return PureState::normalized(std::move(amps));
}

DensityMatrix partial_trace(const DensityMatrix &rho, std::span<const int> keep) {
    const int n = rho.qubit_count();
    std::vector<int> kept = detail::sorted_unique(keep, n, "partial_trace");
    std::vector<int> traced = complement_of(kept, n);
    auto kt = detail::index_table(kept, n);
    auto tt = detail::index_table(traced, n);
    ComplexMatrix out(kt.size());
    const ComplexMatrix &m = rho.matrix();
    for (std::size_t i = 0; i < kt.size(); i++) {
        for (std::size_t j = 0; j < kt.size(); j++) {
            Complex acc = 0.0;
            for (std::size_t t : tt) {
                acc += m(kt[i] | t, kt[j] | t);
            }
            out(i, j) = acc;
        }
    }
    return trusted_density(std::move(out), select_registers(rho.registers(), kept));
}

DensityMatrix partial_trace(const DensityMatrix &rho, std::initializer_list<int> keep) {
    return partial_trace(rho, std::span<const int>(keep.begin(), keep.size()));
}

DensityMatrix partial_trace(const PureState &psi, std::span<const int> keep) {
    const int n = psi.qubit_count();
    std::vector<int> kept = detail::sorted_unique(keep, n, "partial_trace");
    require_cap(static_cast<int>(kept.size()), dense_qubit_cap(), "reduced density matrix");
    std::vector<int> traced = complement_of(kept, n);
    auto kt = detail::index_table(kept, n);
    auto tt = detail::index_table(traced, n);
    ComplexMatrix out(kt.size());
    for (std::size_t i = 0; i < kt.size(); i++) {
        for (std::size_t j = i; j < kt.size(); j++) {
            Complex acc = 0.0;
            for (std::size_t t : tt) {
                acc += psi[kt[i] | t] * std::conj(psi[kt[j] | t]);
            }
            out(i, j) = acc;
            out(j, i) = std::conj(acc);
        }
    }
    QubitRegisterMap regs = QubitRegisterMap::standard(n);
    return trusted_density(std::move(out), select_registers(regs, kept));
}

DensityMatrix partial_trace(const PureState &psi, std::initializer_list<int> keep) {
    return partial_trace(psi, std::span<const int>(keep.begin(), keep.size()));
}

ComplexMatrix permute_qubits(const ComplexMatrix &m, std::span<const int> order) {
    const int n = detail::qubits_for_dim(m.dim());
    check_permutation(order, n);
    auto map = permutation_table(order, n);
    ComplexMatrix out(m.dim());
    for (std::size_t r = 0; r < m.dim(); r++) {
        for (std::size_t c = 0; c < m.dim(); c++) {
            out(r, c) = m(map[r], map[c]);
        }
    }
    return out;
}

DensityMatrix permute_qubits(const DensityMatrix &rho, std::span<const int> order) {
    ComplexMatrix m = permute_qubits(rho.matrix(), order);
    return trusted_density(std::move(m), select_registers(rho.registers(), order));
}

PureState permute_qubits(const PureState &psi, std::span<const int> order) {
    const int n = psi.qubit_count();
    check_permutation(order, n);
    auto map = permutation_table(order, n);
    std::vector<Complex> amps(psi.dim());
    for (std::size_t i = 0; i < amps.size(); i++) {
        amps[i] = psi[map[i]];
    }
    return PureState::normalized(std::move(amps));
}

// ---------------------------------------------------------------- entropies

EntropyDetail entropy_detail(const DensityMatrix &rho) {
    Spectrum s = eigensystem(rho.matrix());
    EntropyDetail out;
    for (double lambda : s.eigenvalues) {
        double clipped = std::clamp(lambda, 0.0, 1.0);
        out.clip_correction = std::max(out.clip_correction, std::abs(clipped - lambda));
        if (clipped > 0.0) {
            out.bits -= clipped * std::log2(clipped);
        }
    }
    return out;
}

double von_neumann_entropy(const DensityMatrix &rho) {
    return entropy_detail(rho).bits;
}

double conditional_entropy(const DensityMatrix &rho, std::span<const int> target, std::span<const int> condition) {
    const int n = rho.qubit_count();
    std::vector<int> a = detail::sorted_unique(target, n, "conditional_entropy");
    std::vector<int> b = detail::sorted_unique(condition, n, "conditional_entropy");
    std::vector<int> joint = a;
    joint.insert(joint.end(), b.begin(), b.end());
    joint = detail::sorted_unique(joint, n, "conditional_entropy (target and condition overlap)");
    double h_joint = von_neumann_entropy(partial_trace(rho, joint));
    double h_cond = b.empty() ? 0.0 : von_neumann_entropy(partial_trace(rho, b));
    return h_joint - h_cond;
}

double conditional_entropy(const DensityMatrix &rho, std::initializer_list<int> target,
                           std::initializer_list<int> condition) {
    return conditional_entropy(rho, std::span<const int>(target.begin(), target.size()),
                               std::span<const int>(condition.begin(), condition.size()));
}

DensityMatrix measure_computational(const DensityMatrix &rho, int subsystem) {
    const int n = rho.qubit_count();
    if (subsystem < 0 || subsystem >= n) {
        throw DomainError("measure_computational: subsystem index " + std::to_string(subsystem) + " out of range");
    }
    const std::size_t mask = detail::qubit_mask(subsystem, n);
    ComplexMatrix m = rho.matrix();
    for (std::size_t r = 0; r < m.dim(); r++) {
        for (std::size_t c = 0; c < m.dim(); c++) {
            if ((r ^ c) & mask) {
                m(r, c) = 0.0;
            }
        }
    }
    QubitRegisterMap regs = rho.registers();
    regs.classical[subsystem] = true;
    return trusted_density(std::move(m), std::move(regs));
}

PureState purify(const DensityMatrix &rho) {
    Spectrum s = eigensystem(rho.matrix());
    std::size_t rank = 0;
    for (double l : s.eigenvalues) {
        if (l > 1e-13) {
            rank++;
        }
    }
    rank = std::max<std::size_t>(rank, 1);
    int ancilla = 1;
    while ((std::size_t{1} << ancilla) < rank) {
        ancilla++;
    }
    require_cap(rho.qubit_count() + ancilla, pure_qubit_cap(), "purification");
    const std::size_t e_dim = std::size_t{1} << ancilla;
    std::vector<Complex> amps(rho.dim() * e_dim);
    for (std::size_t i = 0; i < rank; i++) {
        double w = std::sqrt(std::max(0.0, s.eigenvalues[i]));
        for (std::size_t x = 0; x < rho.dim(); x++) {
            amps[x * e_dim + i] += w * s.eigenvectors(x, i);
        }
    }
    return PureState::normalized(std::move(amps));
}

}  // namespace ckasim
