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

#ifndef CKASIM_SRC_INTERNAL_H
#define CKASIM_SRC_INTERNAL_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ckasim/qstate.h"

namespace ckasim {

// Builds a DensityMatrix from a matrix known to be valid by construction
// (output of trace-preserving maps). Only cheap Hermitian and trace checks run.
DensityMatrix trusted_density(ComplexMatrix m, QubitRegisterMap registers);

namespace detail {

inline int bit_of(std::size_t index, int qubit, int qubits) {
    return static_cast<int>((index >> (qubits - 1 - qubit)) & 1U);
}

inline std::size_t qubit_mask(int qubit, int qubits) {
    return std::size_t{1} << (qubits - 1 - qubit);
}

// index_table(positions, qubits)[v] scatters the bits of v (MSB first) onto
// `positions` of an n-qubit index.
std::vector<std::size_t> index_table(std::span<const int> positions, int qubits);

int qubits_for_dim(std::size_t dim);

std::vector<int> sorted_unique(std::span<const int> qubits, int total, const char *what);

}  // namespace detail
}  // namespace ckasim

#endif
