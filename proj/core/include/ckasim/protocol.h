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

#ifndef CKASIM_PROTOCOL_H
#define CKASIM_PROTOCOL_H

// Round-by-round Monte Carlo of the N-BB84 protocol and parameter estimation.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ckasim/keyrate.h"
#include "ckasim/states.h"

namespace ckasim {

/// Rounds per RNG stream. Chunk c always uses stream (seed, c), so results do
/// not depend on the worker count.
inline constexpr long long kRoundsPerChunk = 65536;

struct ProtocolConfig {
    GhzMixtureSpec spec = GhzMixtureSpec::uniform(3, 2, 0.0);
    long long rounds = 100000;
    double test_fraction = 0.1;
    std::uint64_t seed = 1;
    bool record_rounds = false;  // forces single-threaded, in-order execution
    int threads = 0;             // 0 = hardware concurrency

    void validate() const;
};

enum class RoundType : std::uint8_t { Test, Key };

struct RoundRecord {
    long long round_index = 0;
    RoundType type = RoundType::Key;
    Outcome outcome;
};

struct RoundCounters {
    long long test_rounds = 0;
    long long key_rounds = 0;
    long long odd_parity = 0;
    std::vector<long long> disagreements;  // per Bob

    void merge(const RoundCounters &other);
};

struct EstimateReport {
    int n = 0;
    int k = 0;
    double p = 0.0;
    long long rounds = 0;
    RoundCounters counts;
    double q_x_hat = 0.0;
    std::vector<double> q_ab_hat;      // per Bob
    double q_x_std_error = 0.0;        // sqrt(q(1-q)/n) at the estimate
    std::vector<double> q_ab_std_error;
    double r_hat = 0.0;
    double r_hat_unclamped = 0.0;
    std::vector<RoundRecord> records;  // only with record_rounds

    double q_ab_hat_max() const;
};

/// Throws DomainError on an invalid config and EstimationError when no test
/// or no key round was realized.
EstimateReport run_protocol(const ProtocolConfig &cfg);

struct SweepPoint {
    int n = 3;
    int k = 2;
    double p = 0.0;
};

struct SweepRow {
    SweepPoint point;
    std::optional<EstimateReport> report;
    std::string error;             // set when the point failed
    ProtocolParams closed;
    double r_closed = 0.0;
    double r_closed_unclamped = 0.0;
    double z_q_x = 0.0;            // (estimate - closed) / sqrt(q(1-q)/n) at the closed value
    std::vector<double> z_q_ab;
    double z_max = 0.0;
};

/// Runs every grid point; point i uses seed splitmix64(seed + i). Failures are
/// recorded per row and the sweep continues.
std::vector<SweepRow> sweep(const std::vector<SweepPoint> &grid, long long rounds, double test_fraction,
                            std::uint64_t seed, int threads = 0);

/// Standardized deviation of a binomial estimate from its expected value.
double binomial_z(double estimate, double expected, long long trials);

}  // namespace ckasim

#endif
