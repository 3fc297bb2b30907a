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

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "ckasim/errors.h"
#include "ckasim/qstate.h"
#include "ckasim/rng.h"
#include "test_util.h"

namespace ckasim {
namespace {

using testing::bell;
using testing::outer;

TEST(Tensor, MaximallyMixedProduct) {
    DensityMatrix t = tensor(DensityMatrix::maximally_mixed(1), DensityMatrix::maximally_mixed(1));
    EXPECT_LT(t.matrix().max_abs_diff(DensityMatrix::maximally_mixed(2).matrix()), 1e-15);
}

TEST(Tensor, BasisProduct) {
    DensityMatrix t = tensor(DensityMatrix::basis("0"), DensityMatrix::basis("1"));
    EXPECT_LT(t.matrix().max_abs_diff(DensityMatrix::basis("01").matrix()), 1e-15);
}

TEST(Tensor, BellWithPlusMatchesElementLoop) {
    DensityMatrix a = DensityMatrix::from_pure(bell());
    DensityMatrix b = DensityMatrix::from_pure(PureState::plus(1));
    DensityMatrix t = tensor(a, b);
    ASSERT_EQ(t.dim(), 8U);
    for (std::size_t r = 0; r < 8; r++) {
        for (std::size_t c = 0; c < 8; c++) {
            Complex want = a(r / 2, c / 2) * b(r % 2, c % 2);
            EXPECT_LT(std::abs(t(r, c) - want), 1e-15);
        }
    }
    EXPECT_NEAR(t.matrix().trace().real(), 1.0, 1e-14);
    Spectrum s = eigensystem(t);
    EXPECT_NEAR(s.eigenvalues[0], 1.0, 1e-12);
    EXPECT_NEAR(s.eigenvalues[1], 0.0, 1e-12);
}

TEST(PartialTrace, ProductReduction) {
    Rng rng(11);
    DensityMatrix a = testing::random_density(2, rng);
    DensityMatrix b = testing::random_density(1, rng);
    DensityMatrix r = partial_trace(tensor(a, b), {0, 1});
    EXPECT_LT(r.matrix().max_abs_diff(a.matrix()), 1e-14);
}

TEST(PartialTrace, BellReducesToMixed) {
    DensityMatrix r = partial_trace(bell(), {0});
    EXPECT_LT(r.matrix().max_abs_diff(DensityMatrix::maximally_mixed(1).matrix()), 1e-15);
}

TEST(PartialTrace, PureAndDensityPathsAgree) {
    Rng rng(3);
    for (int trial = 0; trial < 5; trial++) {
        const std::size_t d = 16;
        std::vector<Complex> amp(d);
        for (auto &x : amp) {
            x = Complex(rng.normal(), rng.normal());
        }
        PureState psi = PureState::normalized(amp);
        DensityMatrix rho = DensityMatrix::from_pure(psi);
        for (std::vector<int> keep : {std::vector<int>{0}, {1, 3}, {2, 0}, {0, 1, 2}}) {
            EXPECT_LT(partial_trace(psi, keep).matrix().max_abs_diff(partial_trace(rho, keep).matrix()), 1e-13);
        }
    }
}

TEST(PartialTrace, BruteForceOnRandomState) {
    Rng rng(5);
    DensityMatrix rho = testing::random_density(3, rng);
    DensityMatrix r = partial_trace(rho, {0, 2});
    for (int a0 = 0; a0 < 2; a0++) {
        for (int a2 = 0; a2 < 2; a2++) {
            for (int b0 = 0; b0 < 2; b0++) {
                for (int b2 = 0; b2 < 2; b2++) {
                    Complex s = 0.0;
                    for (int t = 0; t < 2; t++) {
                        s += rho(4 * a0 + 2 * t + a2, 4 * b0 + 2 * t + b2);
                    }
                    EXPECT_LT(std::abs(r(2 * a0 + a2, 2 * b0 + b2) - s), 1e-15);
                }
            }
        }
    }
}

TEST(PartialTrace, RejectsBadIndices) {
    DensityMatrix rho = DensityMatrix::maximally_mixed(2);
    EXPECT_THROW(partial_trace(rho, {0, 0}), DomainError);
    EXPECT_THROW(partial_trace(rho, {2}), DomainError);
}

TEST(Eigensystem, MixedQubit) {
    Spectrum s = eigensystem(DensityMatrix::maximally_mixed(1));
    EXPECT_NEAR(s.eigenvalues[0], 0.5, 1e-15);
    EXPECT_NEAR(s.eigenvalues[1], 0.5, 1e-15);
}

TEST(Eigensystem, DiagonalSortedDescending) {
    std::vector<double> d{0.3, 0.7};
    Spectrum s = eigensystem(ComplexMatrix::diagonal(d));
    EXPECT_DOUBLE_EQ(s.eigenvalues[0], 0.7);
    EXPECT_DOUBLE_EQ(s.eigenvalues[1], 0.3);
}

TEST(Eigensystem, PauliY) {
    ComplexMatrix y(2, {0.0, Complex(0, -1), Complex(0, 1), 0.0});
    Spectrum s = eigensystem(y);
    EXPECT_NEAR(s.eigenvalues[0], 1.0, 1e-14);
    EXPECT_NEAR(s.eigenvalues[1], -1.0, 1e-14);
}

TEST(Eigensystem, ReconstructsRandomHermitian) {
    Rng rng(17);
    for (int qubits = 1; qubits <= 4; qubits++) {
        const std::size_t d = std::size_t{1} << qubits;
        ComplexMatrix h(d);
        for (std::size_t r = 0; r < d; r++) {
            h(r, r) = rng.normal();
            for (std::size_t c = r + 1; c < d; c++) {
                h(r, c) = Complex(rng.normal(), rng.normal());
                h(c, r) = std::conj(h(r, c));
            }
        }
        Spectrum s = eigensystem(h);
        ComplexMatrix back(d);
        for (std::size_t r = 0; r < d; r++) {
            for (std::size_t c = 0; c < d; c++) {
                Complex v = 0.0;
                for (std::size_t j = 0; j < d; j++) {
                    v += s.eigenvectors(r, j) * s.eigenvalues[j] * std::conj(s.eigenvectors(c, j));
                }
                back(r, c) = v;
            }
        }
        EXPECT_LT(back.max_abs_diff(h), 1e-10) << "qubits=" << qubits;
        EXPECT_TRUE(std::is_sorted(s.eigenvalues.rbegin(), s.eigenvalues.rend()));
        // Trace is preserved by the spectrum.
        double tr = std::accumulate(s.eigenvalues.begin(), s.eigenvalues.end(), 0.0);
        EXPECT_NEAR(tr, h.trace().real(), 1e-10);
    }
}

// Pinched rho_XY for (N=3, k=2) with C = 1/2.
DensityMatrix rho_xy_n3k2() {
    // Classical agreement probabilities (1 + C)/4 on 00/11 and (1 - C)/4 on 01/10.
    std::vector<double> d{0.375, 0.125, 0.125, 0.375};
    return DensityMatrix(ComplexMatrix::diagonal(d));
}

TEST(Eigensystem, CharacteristicPolynomialCheck) {
    // (I + C sigma_x (x) I)/4 with C = 1/2: spectrum (1 +- C)/4, each twice,
    // so the characteristic polynomial is ((x - 3/8)(x - 1/8))^2.
    ComplexMatrix m(4);
    for (std::size_t i = 0; i < 4; i++) {
        m(i, i) = 0.25;
    }
    m(0, 2) = m(2, 0) = m(1, 3) = m(3, 1) = 0.125;
    Spectrum s = eigensystem(m);
    const std::vector<double> want{0.375, 0.375, 0.125, 0.125};
    for (std::size_t i = 0; i < 4; i++) {
        EXPECT_NEAR(s.eigenvalues[i], want[i], 1e-14);
        double poly = std::pow((s.eigenvalues[i] - 3.0 / 8) * (s.eigenvalues[i] - 1.0 / 8), 2);
        EXPECT_NEAR(poly, 0.0, 1e-15);
    }
    double h = 0.0;
    for (double l : s.eigenvalues) {
        h -= l * std::log2(l);
    }
    EXPECT_NEAR(h, 1.0 + testing::h2(0.25), 1e-12);
    EXPECT_NEAR(von_neumann_entropy(DensityMatrix(m)), 1.811278124459133, 1e-9);
}

TEST(Eigensystem, SweepCapReportsNonConvergence) {
    Rng rng(2);
    DensityMatrix rho = testing::random_density(3, rng);
    JacobiOptions opts;
    opts.max_sweeps = 1;
    opts.tolerance = 1e-300;
    EXPECT_THROW(eigensystem(rho, opts), NumericalError);
}

TEST(Entropy, PureIsZero) {
    EXPECT_NEAR(von_neumann_entropy(DensityMatrix::basis("0")), 0.0, 1e-15);
    EXPECT_NEAR(von_neumann_entropy(DensityMatrix::from_pure(bell())), 0.0, 1e-12);
}

TEST(Entropy, MixedQubitIsOneBit) {
    EXPECT_NEAR(von_neumann_entropy(DensityMatrix::maximally_mixed(1)), 1.0, 1e-15);
    EXPECT_NEAR(von_neumann_entropy(DensityMatrix::maximally_mixed(3)), 3.0, 1e-13);
}

TEST(Entropy, ClassicalPair) {
    EXPECT_NEAR(von_neumann_entropy(rho_xy_n3k2()), 1.0 + testing::h2(0.25), 1e-12);
}

TEST(ConditionalEntropy, ProductIsMarginal) {
    Rng rng(8);
    DensityMatrix a = testing::random_density(1, rng);
    DensityMatrix b = testing::random_density(1, rng);
    EXPECT_NEAR(conditional_entropy(tensor(a, b), {0}, {1}), von_neumann_entropy(a), 1e-11);
}

TEST(ConditionalEntropy, BellIsMinusOne) {
    DensityMatrix rho = DensityMatrix::from_pure(bell());
    EXPECT_NEAR(von_neumann_entropy(rho), 0.0, 1e-12);
    EXPECT_NEAR(von_neumann_entropy(partial_trace(rho, {1})), 1.0, 1e-12);
    EXPECT_NEAR(conditional_entropy(rho, {0}, {1}), -1.0, 1e-12);
}

TEST(ConditionalEntropy, ClassicalConditioningAverages) {
    // 0.5 |0><0| (x) |0><0|_F + 0.5 I/2 (x) |1><1|_F
    ComplexMatrix m(4);
    m(0, 0) = 0.5;
    m(1, 1) = 0.25;
    m(3, 3) = 0.25;
    DensityMatrix rho(m);
    double lhs = conditional_entropy(rho, {0}, {1});
    double rhs = 0.5 * von_neumann_entropy(DensityMatrix::basis("0")) +
                 0.5 * von_neumann_entropy(DensityMatrix::maximally_mixed(1));
    EXPECT_NEAR(lhs, 0.5, 1e-12);
    EXPECT_NEAR(rhs, 0.5, 1e-12);
}

TEST(ConditionalEntropy, StrongSubadditivityOnRandomStates) {
    Rng rng(21);
    for (int trial = 0; trial < 20; trial++) {
        DensityMatrix rho = testing::random_density(3, rng);
        // Conditioning reduces entropy: H(A|BC) <= H(A|B).
        EXPECT_LE(conditional_entropy(rho, {0}, {1, 2}), conditional_entropy(rho, {0}, {1}) + 1e-10);
    }
}

TEST(MeasureComputational, PlusDephasesToMixed) {
    DensityMatrix r = measure_computational(DensityMatrix::from_pure(PureState::plus(1)), 0);
    EXPECT_LT(r.matrix().max_abs_diff(DensityMatrix::maximally_mixed(1).matrix()), 1e-15);
    EXPECT_TRUE(r.is_classical(0));
}

TEST(MeasureComputational, BasisStateUnchanged) {
    DensityMatrix r = measure_computational(DensityMatrix::basis("0"), 0);
    EXPECT_LT(r.matrix().max_abs_diff(DensityMatrix::basis("0").matrix()), 1e-15);
}

TEST(MeasureComputational, GhzPinching) {
    DensityMatrix r = measure_computational(DensityMatrix::from_pure(PureState::ghz(3)), 0);
    ComplexMatrix want(8);
    want(0, 0) = 0.5;
    want(7, 7) = 0.5;
    EXPECT_LT(r.matrix().max_abs_diff(want), 1e-15);
}

TEST(Purify, ReproducesRandomState) {
    Rng rng(31);
    for (int qubits = 1; qubits <= 3; qubits++) {
        DensityMatrix rho = testing::random_density(qubits, rng);
        PureState psi = purify(rho);
        std::vector<int> keep(qubits);
        std::iota(keep.begin(), keep.end(), 0);
        EXPECT_LT(partial_trace(psi, keep).matrix().max_abs_diff(rho.matrix()), 1e-10);
        // Both halves of a pure state carry the same entropy.
        std::vector<int> anc;
        for (int q = qubits; q < psi.qubit_count(); q++) {
            anc.push_back(q);
        }
        EXPECT_NEAR(von_neumann_entropy(partial_trace(psi, anc)), von_neumann_entropy(rho), 1e-9);
    }
}

TEST(Purify, PureInputUsesOneAncilla) {
    PureState psi = purify(DensityMatrix::basis("01"));
    EXPECT_EQ(psi.qubit_count(), 3);
}

TEST(Permute, SwapMatchesManualIndexing) {
    Rng rng(4);
    DensityMatrix rho = testing::random_density(3, rng);
    std::vector<int> order{2, 0, 1};
    DensityMatrix p = permute_qubits(rho, order);
    auto src = [&](std::size_t idx) {
        int b[3] = {static_cast<int>(idx >> 2) & 1, static_cast<int>(idx >> 1) & 1, static_cast<int>(idx) & 1};
        int s[3];
        for (int i = 0; i < 3; i++) {
            s[order[i]] = b[i];
        }
        return static_cast<std::size_t>(4 * s[0] + 2 * s[1] + s[2]);
    };
    for (std::size_t r = 0; r < 8; r++) {
        for (std::size_t c = 0; c < 8; c++) {
            EXPECT_LT(std::abs(p(r, c) - rho(src(r), src(c))), 1e-15);
        }
    }
}

TEST(DensityMatrix, RejectsInvalid) {
    ComplexMatrix bad(2, {0.5, 0.1, 0.2, 0.5});
    EXPECT_THROW(DensityMatrix{bad}, DomainError);
    ComplexMatrix trace2(2, {1.0, 0.0, 0.0, 1.0});
    EXPECT_THROW(DensityMatrix{trace2}, DomainError);
    ComplexMatrix neg(2, {1.2, 0.0, 0.0, -0.2});
    EXPECT_THROW(DensityMatrix{neg}, DomainError);
    EXPECT_THROW(PureState::normalized({0.0, 0.0}), DomainError);
    EXPECT_THROW(DensityMatrix::basis("012"), DomainError);
}

TEST(DensityMatrix, CapacityCap) {
    EXPECT_EQ(pure_qubit_cap(), 2 * dense_qubit_cap());
    EXPECT_THROW(DensityMatrix::maximally_mixed(dense_qubit_cap() + 1), CapacityError);
}

}  // namespace
}  // namespace ckasim
