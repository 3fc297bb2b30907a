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

#include "ckasim/errors.h"

namespace ckasim {

CapacityError::CapacityError(int requested, int cap, const std::string &what)
    : Error(what + ": requires " + std::to_string(requested) + " qubits, cap is " + std::to_string(cap)),
      requested_(requested),
      cap_(cap) {
}

NumericalError::NumericalError(const std::string &what, double residual)
    : Error(what + " (residual " + std::to_string(residual) + ")"), residual_(residual) {
}

EstimationError::EstimationError(const std::string &what, long long test_rounds, long long key_rounds)
    : Error(what + " (test rounds " + std::to_string(test_rounds) + ", key rounds " + std::to_string(key_rounds) +
            ")"),
      test_rounds_(test_rounds),
      key_rounds_(key_rounds) {
}

LpError::LpError(const std::string &what, long long iterations)
    : Error(what + " after " + std::to_string(iterations) + " iterations"), iterations_(iterations) {
}

}  // namespace ckasim
