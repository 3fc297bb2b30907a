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

#ifndef CKASIM_TESTS_TEST_UTIL_H
#define CKASIM_TESTS_TEST_UTIL_H

#include <cmath>
#include <vector>

#include "ckasim/qstate.h"

namespace ckasim::testing {

inline double h2(double x) {
    if (x <= 0.0 || x >= 1.0) {
        return 0.0;
    }
    return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

inline ComplexMatrix outer(const PureState &psi) {
    const std::size_t d = psi.dim();
    ComplexMatrix m(d);
    auto a = psi.amplitudes();
    for (std::size_t r = 0; r < d; r++) {
        for (std::size_t c = 0; c < d; c++) {
            m(r, c) = a[r] * std::conj(a[c]);
        }
    }
    return m;
}

inline PureState bell() {
    return PureState::normalized({1.0, 0.0, 0.0, 1.0});
}

// Random density matrix G G^dagger / Tr from a complex Gaussian G.
template <typename Rng>
DensityMatrix random_density(int qubits, Rng &rng) {
    const std::size_t d = std::size_t{1} << qubits;
    ComplexMatrix g(d);
    for (std::size_t i = 0; i < d * d; i++) {
        g(i / d, i % d) = Complex(rng.normal(), rng.normal());
    }
    ComplexMatrix m(d);
    double tr = 0.0;
    for (std::size_t r = 0; r < d; r++) {
        for (std::size_t c = 0; c < d; c++) {
            Complex s = 0.0;
            for (std::size_t j = 0; j < d; j++) {
                s += g(r, j) * std::conj(g(c, j));
            }
            m(r, c) = s;
        }
        tr += m(r, r).real();
    }
    for (std::size_t i = 0; i < d * d; i++) {
        m(i / d, i % d) /= tr;
    }
    for (std::size_t r = 0; r < d; r++) {
        m(r, r) = m(r, r).real();
    }
    return DensityMatrix(std::move(m));
}

}  // namespace ckasim::testing

#endif
