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

#ifndef CKASIM_ERRORS_H
#define CKASIM_ERRORS_H

#include <stdexcept>
#include <string>

namespace ckasim {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// An argument is outside the documented domain (probability out of [0,1],
/// malformed subset, non-Hermitian input, ...).
class DomainError : public Error {
   public:
    using Error::Error;
};

/// A dense object would exceed the configured qubit cap.
class CapacityError : public Error {
   public:
    CapacityError(int requested, int cap, const std::string &what);
    int requested() const { return requested_; }
    int cap() const { return cap_; }

   private:
    int requested_;
    int cap_;
};

/// An iterative numerical routine failed to converge.
class NumericalError : public Error {
   public:
    NumericalError(const std::string &what, double residual);
    double residual() const { return residual_; }

   private:
    double residual_;
};

/// Protocol simulation produced too few rounds of some type to estimate from.
class EstimationError : public Error {
   public:
    EstimationError(const std::string &what, long long test_rounds, long long key_rounds);
    long long test_rounds() const { return test_rounds_; }
    long long key_rounds() const { return key_rounds_; }

   private:
    long long test_rounds_;
    long long key_rounds_;
};

/// The simplex solver hit a singular basis or its iteration cap.
class LpError : public Error {
   public:
    LpError(const std::string &what, long long iterations);
    long long iterations() const { return iterations_; }

   private:
    long long iterations_;
};

}  // namespace ckasim

#endif
