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

#include "ckasim/protocol.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <thread>

#include "ckasim/errors.h"

namespace ckasim {

namespace {

void run_chunk(const ProtocolConfig &cfg, long long chunk, RoundCounters &counters,
               std::vector<RoundRecord> *records) {
    const int n = cfg.spec.n();
    const long long begin = chunk * kRoundsPerChunk;
    const long long end = std::min(cfg.rounds, begin + kRoundsPerChunk);
    std::array<Basis, kMaxParties> x_bases;
    std::array<Basis, kMaxParties> z_bases;
    x_bases.fill(Basis::X);
    z_bases.fill(Basis::Z);
    Rng rng(cfg.seed, static_cast<std::uint64_t>(chunk));
    for (long long r = begin; r < end; r++) {
        const bool test = rng.uniform() < cfg.test_fraction;
        const auto &bases = test ? x_bases : z_bases;
        Outcome o = sample_round(cfg.spec, std::span<const Basis>(bases.data(), n), rng);
        if (test) {
            counters.test_rounds++;
            counters.odd_parity += o.parity();
        } else {
            counters.key_rounds++;
            const int a = o.bit(0);
            for (int b = 1; b < n; b++) {
                counters.disagreements[b - 1] += a ^ o.bit(b);
            }
        }
        if (records) {
            records->push_back(RoundRecord{r, test ? RoundType::Test : RoundType::Key, o});
        }
    }
}

double std_error(double q, long long trials) {
    return trials > 0 ? std::sqrt(q * (1.0 - q) / static_cast<double>(trials)) : 0.0;
}

}  // namespace

void ProtocolConfig::validate() const {
    if (rounds < 1) {
        throw DomainError("rounds must be positive");
    }
    if (!(test_fraction > 0.0 && test_fraction < 1.0)) {
        throw DomainError("test_fraction must lie in (0, 1)");
    }
    if (static_cast<double>(rounds) * test_fraction < 1.0) {
        throw DomainError("expected number of test rounds is below one");
    }
    if (threads < 0) {
        throw DomainError("threads must be nonnegative");
    }
}

void RoundCounters::merge(const RoundCounters &other) {
    test_rounds += other.test_rounds;
    key_rounds += other.key_rounds;
    odd_parity += other.odd_parity;
    if (disagreements.size() < other.disagreements.size()) {
        disagreements.resize(other.disagreements.size(), 0);
    }
    for (std::size_t i = 0; i < other.disagreements.size(); i++) {
        disagreements[i] += other.disagreements[i];
    }
}

double EstimateReport::q_ab_hat_max() const {
    return q_ab_hat.empty() ? 0.0 : *std::max_element(q_ab_hat.begin(), q_ab_hat.end());
}

EstimateReport run_protocol(const ProtocolConfig &cfg) {
    cfg.validate();
    const int n = cfg.spec.n();
    const long long chunks = (cfg.rounds + kRoundsPerChunk - 1) / kRoundsPerChunk;

    EstimateReport rep;
    rep.n = n;
    rep.k = cfg.spec.k();
    rep.p = cfg.spec.noise_p();
    rep.rounds = cfg.rounds;
    rep.counts.disagreements.assign(n - 1, 0);

    if (cfg.record_rounds) {
        rep.records.reserve(static_cast<std::size_t>(cfg.rounds));
        for (long long c = 0; c < chunks; c++) {
            run_chunk(cfg, c, rep.counts, &rep.records);
        }
    } else {
        int workers = cfg.threads > 0 ? cfg.threads : static_cast<int>(std::thread::hardware_concurrency());
        workers = static_cast<int>(std::clamp<long long>(workers, 1, chunks));
        std::vector<RoundCounters> partial(workers);
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; w++) {
            partial[w].disagreements.assign(n - 1, 0);
            pool.emplace_back([&, w] {
                for (long long c = w; c < chunks; c += workers) {
                    run_chunk(cfg, c, partial[w], nullptr);
                }
            });
        }
        for (auto &t : pool) {
            t.join();
        }
        for (const auto &p : partial) {
            rep.counts.merge(p);
        }
    }

    const auto &cnt = rep.counts;
    if (cnt.test_rounds == 0 || cnt.key_rounds == 0) {
        throw EstimationError("protocol run realized no " + std::string(cnt.test_rounds == 0 ? "test" : "key") +
                                  " rounds",
                              cnt.test_rounds, cnt.key_rounds);
    }
    rep.q_x_hat = static_cast<double>(cnt.odd_parity) / static_cast<double>(cnt.test_rounds);
    rep.q_x_std_error = std_error(rep.q_x_hat, cnt.test_rounds);
    double worst_leak = 0.0;
    for (long long d : cnt.disagreements) {
        const double q = static_cast<double>(d) / static_cast<double>(cnt.key_rounds);
        rep.q_ab_hat.push_back(q);
        rep.q_ab_std_error.push_back(std_error(q, cnt.key_rounds));
        worst_leak = std::max(worst_leak, binary_entropy(q));
    }
    rep.r_hat_unclamped = 1.0 - binary_entropy(rep.q_x_hat) - worst_leak;
    rep.r_hat = std::max(0.0, rep.r_hat_unclamped);
    return rep;
}

double binomial_z(double estimate, double expected, long long trials) {
    const double sigma = std_error(expected, trials);
    const double diff = estimate - expected;
    if (sigma == 0.0) {
        return std::abs(diff) <= 1e-15 ? 0.0 : std::copysign(INFINITY, diff);
    }
    return diff / sigma;
}

std::vector<SweepRow> sweep(const std::vector<SweepPoint> &grid, long long rounds, double test_fraction,
                            std::uint64_t seed, int threads) {
    if (grid.empty()) {
        throw DomainError("sweep grid is empty");
    }
    std::vector<SweepRow> rows;
    for (std::size_t i = 0; i < grid.size(); i++) {
        SweepRow row;
        row.point = grid[i];
        try {
            ProtocolConfig cfg;
            cfg.spec = GhzMixtureSpec::uniform(grid[i].n, grid[i].k, grid[i].p);
            cfg.rounds = rounds;
            cfg.test_fraction = test_fraction;
            cfg.seed = grid.size() == 1 ? seed : splitmix64(seed + i);
            cfg.threads = threads;
            row.closed = closed_form_params(cfg.spec);
            RateReport closed = rate_nbb84(cfg.spec);
            row.r_closed = closed.r_infinity;
            row.r_closed_unclamped = closed.r_unclamped;
            EstimateReport rep = run_protocol(cfg);
            row.z_q_x = binomial_z(rep.q_x_hat, row.closed.q_x, rep.counts.test_rounds);
            row.z_max = std::abs(row.z_q_x);
            for (std::size_t b = 0; b < rep.q_ab_hat.size(); b++) {
                double z = binomial_z(rep.q_ab_hat[b], row.closed.q_ab[b], rep.counts.key_rounds);
                row.z_q_ab.push_back(z);
                row.z_max = std::max(row.z_max, std::abs(z));
            }
            row.report = std::move(rep);
        } catch (const Error &e) {
            row.error = e.what();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace ckasim
