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

#include <bit>
#include <cmath>

#include "ckasim/errors.h"
#include "ckasim/keyrate.h"
#include "ckasim/witness.h"
#include "test_util.h"

namespace ckasim {
namespace {

using testing::h2;

// Q_X and Q_AB_i read off the Born statistics of the dense state.
ProtocolParams params_from_statistics(const GhzMixtureSpec &spec) {
    const int n = spec.n();
    ProbabilityTable t = statistics_of(build_ghz_mixture(spec), MeasurementSet::nbb84(n));
    const std::size_t all_x = 0;
    const std::size_t all_z = t.layout.setting_total() - 1;
    ProtocolParams out;
    out.q_ab.assign(static_cast<std::size_t>(n - 1), 0.0);
    for (std::size_t o = 0; o < t.layout.outcome_total(); o++) {
        if (std::popcount(o) % 2 == 1) {
            out.q_x += t.at(all_x, o);
        }
        const int a = static_cast<int>((o >> (n - 1)) & 1U);
        for (int i = 1; i < n; i++) {
            if (static_cast<int>((o >> (n - 1 - i)) & 1U) != a) {
                out.q_ab[static_cast<std::size_t>(i - 1)] += t.at(all_z, o);
            }
        }
    }
    return out;
}

TEST(BinaryEntropy, Values) {
    EXPECT_EQ(binary_entropy(0.0), 0.0);
    EXPECT_EQ(binary_entropy(1.0), 0.0);
    EXPECT_NEAR(binary_entropy(0.5), 1.0, 1e-15);
    EXPECT_NEAR(binary_entropy(0.25), 0.8112781244591328, 1e-15);
    EXPECT_NEAR(binary_entropy(0.25), 2.0 - 0.75 * std::log2(3.0), 1e-15);
    EXPECT_NEAR(binary_entropy(0.1), binary_entropy(0.9), 1e-15);
    EXPECT_THROW(binary_entropy(-0.1), DomainError);
    EXPECT_THROW(binary_entropy(1.1), DomainError);
    EXPECT_THROW(binary_entropy(NAN), DomainError);
}

TEST(ClosedFormParams, Examples) {
    ProtocolParams a = closed_form_params(6, 5, 0.0);
    EXPECT_EQ(a.q_x, 0.0);
    ASSERT_EQ(a.q_ab.size(), 5U);
    EXPECT_NEAR(a.q_ab[0], 0.1, 1e-15);
    ProtocolParams b = closed_form_params(4, 3, 1.0);
    EXPECT_NEAR(b.q_x, 0.5, 1e-15);
    EXPECT_NEAR(b.q_ab[2], 0.5, 1e-15);
    EXPECT_NEAR(closed_form_params(3, 2, 0.0).q_ab[1], 0.25, 1e-15);
    ProtocolParams c = closed_form_params(6, 5, 0.05);
    EXPECT_NEAR(c.q_x, (1 - std::pow(0.95, 5)) / 2, 1e-15);
    EXPECT_NEAR(c.q_ab[0], (5 - 0.95 * 4) / 10, 1e-15);
}

TEST(ClosedFormParams, MatchBornStatistics) {
    for (int n = 2; n <= 5; n++) {
        for (int k = 2; k <= n; k++) {
            for (double p : {0.0, 0.05, 0.3}) {
                GhzMixtureSpec spec = GhzMixtureSpec::uniform(n, k, p);
                ProtocolParams cf = closed_form_params(spec);
                ProtocolParams born = params_from_statistics(spec);
                EXPECT_NEAR(cf.q_x, born.q_x, 1e-12) << n << k << p;
                for (int i = 0; i < n - 1; i++) {
                    EXPECT_NEAR(cf.q_ab[i], born.q_ab[i], 1e-12) << n << k << p;
                }
            }
        }
    }
}

TEST(ClosedFormParams, WeightedSpecUsesEntangledWeight) {
    GhzMixtureSpec spec = GhzMixtureSpec::weighted(3, 2, {{{0, 1}, 0.8}, {{0, 2}, 0.2}}, 0.1);
    ProtocolParams cf = closed_form_params(spec);
    ProtocolParams born = params_from_statistics(spec);
    EXPECT_NEAR(cf.q_ab[0], born.q_ab[0], 1e-12);
    EXPECT_NEAR(cf.q_ab[1], born.q_ab[1], 1e-12);
    EXPECT_NEAR(cf.q_ab[0], (1 - 0.9 * 0.8) / 2, 1e-15);
}

TEST(RateNbb84, Examples) {
    EXPECT_NEAR(rate_nbb84(2, 2, 0.0).r_infinity, 1.0, 1e-15);
    EXPECT_NEAR(rate_nbb84(3, 2, 0.0).r_infinity, 1 - h2(0.25), 1e-15);
    EXPECT_NEAR(rate_nbb84(3, 2, 0.0).r_infinity, 0.188722, 1e-6);
    EXPECT_NEAR(rate_nbb84(6, 5, 0.0).r_infinity, 0.531004, 1e-6);
    EXPECT_NEAR(rate_nbb84(6, 5, 0.0).r_infinity, 1 - h2(0.1), 1e-15);
    EXPECT_EQ(rate_nbb84(6, 5, 1.0).r_infinity, 0.0);
    RateReport r = rate_nbb84(12, 2, 0.2);
    EXPECT_EQ(r.r_infinity, 0.0);
    EXPECT_LT(r.r_unclamped, 0.0);
}

TEST(RateNbb84, TwoLogForm) {
    for (int n = 2; n <= 13; n++) {
        for (int k = 2; k <= n; k++) {
            // Independent evaluation of 1/2 a log2 a + 1/2 b log2 b.
            double a = (n - k) / static_cast<double>(n - 1);
            double b = (n + k - 2) / static_cast<double>(n - 1);
            double want = (a > 0 ? 0.5 * a * std::log2(a) : 0.0) + 0.5 * b * std::log2(b);
            EXPECT_NEAR(rate_nbb84_two_log(n, k), want, 1e-14);
            EXPECT_NEAR(rate_nbb84(n, k, 0.0).r_infinity, want, 1e-12) << n << "," << k;
        }
    }
}

TEST(RateNbb84, MonotoneInKAndP) {
    for (int n = 3; n <= 10; n++) {
        for (int k = 2; k < n; k++) {
            EXPECT_LT(rate_nbb84(n, k, 0.0).r_infinity, rate_nbb84(n, k + 1, 0.0).r_infinity);
        }
        for (double p = 0.0; p < 0.3; p += 0.01) {
            EXPECT_GE(rate_nbb84(n, n - 1, p).r_unclamped, rate_nbb84(n, n - 1, p + 0.01).r_unclamped);
        }
    }
}

TEST(RateBipartite, Examples) {
    EXPECT_NEAR(rate_bipartite_concat(6, 0.0), 0.2, 1e-15);
    EXPECT_NEAR(rate_bipartite_concat(2, 0.0), 1.0, 1e-15);
    EXPECT_NEAR(rate_bipartite_concat(6, 0.05), (1 - 2 * h2(0.025)) / 5, 1e-15);
    EXPECT_NEAR(rate_bipartite_concat(6, 0.05), 0.1325356, 1e-7);
    EXPECT_EQ(rate_bipartite_concat(6, 0.5), 0.0);
    EXPECT_LT(rate_bipartite_concat_unclamped(6, 0.5), 0.0);
}

TEST(EntropyNumeric, NoiselessExamples) {
    RateReport r32 = rate_entropy_numeric(GhzMixtureSpec::uniform(3, 2));
    EXPECT_EQ(r32.method, RateMethod::EntropyNumeric);
    EXPECT_NEAR(r32.h_x_given_e, 1.0, 1e-9);
    for (double leak : r32.leak_terms) {
        EXPECT_NEAR(leak, h2(0.25), 1e-9);
    }
    EXPECT_NEAR(r32.r_infinity, 0.188722, 1e-6);
    EXPECT_NEAR(rate_entropy_numeric(GhzMixtureSpec::uniform(4, 3)).r_infinity, 1 - h2(1.0 / 6), 1e-9);
    RateReport r22 = rate_entropy_numeric(GhzMixtureSpec::uniform(2, 2));
    EXPECT_NEAR(r22.h_x_given_e, 1.0, 1e-9);
    EXPECT_NEAR(r22.leak_terms[0], 0.0, 1e-9);
    EXPECT_NEAR(r22.r_infinity, 1.0, 1e-9);
}

TEST(EntropyNumeric, NoisyLeaksMatchClosedForm) {
    // The error-correction leak is a classical quantity and agrees exactly;
    // the Eve term of a full purification is never below 1 - h(Q_X).
    for (auto [n, k] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {3, 3}}) {
        GhzMixtureSpec spec = GhzMixtureSpec::uniform(n, k, 0.05);
        RateReport num = rate_entropy_numeric(spec);
        RateReport cf = rate_nbb84(spec);
        for (std::size_t i = 0; i < cf.leak_terms.size(); i++) {
            EXPECT_NEAR(num.leak_terms[i], cf.leak_terms[i], 1e-9);
        }
        EXPECT_GE(num.h_x_given_e, cf.h_x_given_e - 1e-9);
    }
}

TEST(NoKeySeparable, FullyProduct) {
    SeparableSpec spec{Partition::parse("A|B1B2", 3), {{1.0, PureState::basis("0"), PureState::basis("00")}}};
    SeparableCheckReport r = verify_no_key_separable(spec);
    EXPECT_NEAR(r.h_x_given_e_total, 0.0, 1e-9);
    for (double h : r.h_x_given_y) {
        EXPECT_NEAR(h, 0.0, 1e-9);
    }
    EXPECT_LE(r.implied_rate, 1e-9);
    EXPECT_TRUE(r.passes);
}

TEST(NoKeySeparable, ClassicalCorrelationThroughF) {
    // A is |0> or |1> with the Bobs holding a matching label: H(X|Y1) = H(X|F).
    SeparableSpec spec{Partition::parse("A|B1B2", 3),
                       {{0.5, PureState::basis("0"), PureState::basis("00")},
                        {0.5, PureState::basis("1"), PureState::normalized({0.0, 0.0, 1.0, 1.0})}}};
    SeparableCheckReport r = verify_no_key_separable(spec);
    ASSERT_EQ(r.h_x_given_y.size(), 2U);
    EXPECT_NEAR(r.h_x_given_y[0], r.h_x_given_f, 1e-12);
    EXPECT_NEAR(r.h_x_given_f, 0.0, 1e-12);
    // Y2 is 0 in the first term and uniform in the second.
    EXPECT_NEAR(r.h_x_given_y[1], 0.75 * h2(1.0 / 3), 1e-12);
    EXPECT_TRUE(r.passes);
}

TEST(NoKeySeparable, RandomSpecsPass) {
    Rng rng(2024);
    for (int i = 0; i < 100; i++) {
        Partition cut = Partition::all(3)[static_cast<std::size_t>(i % 3)];
        SeparableCheckReport r = verify_no_key_separable(random_separable_spec(cut, 1 + i % 5, rng));
        EXPECT_TRUE(r.chain_holds) << i;
        EXPECT_LE(r.implied_rate, 1e-9) << i;
        for (std::size_t j = 0; j < r.complement_bobs.size(); j++) {
            EXPECT_GE(r.h_x_given_y[j], r.h_x_given_e_total - 1e-9);
        }
    }
}

TEST(NoiseThreshold, TwoParties) {
    double p = noise_threshold(2, 2);
    EXPECT_NEAR(binary_entropy(p / 2), 0.5, 1e-8);
    EXPECT_NEAR(p, 0.220, 5e-4);
    EXPECT_NEAR(concat_noise_threshold(2), p, 1e-9);
}

TEST(NoiseThreshold, RootAndZeroBeyond) {
    for (auto [n, k] : std::vector<std::pair<int, int>>{{6, 5}, {6, 4}, {3, 2}, {5, 3}}) {
        double p = noise_threshold(n, k);
        EXPECT_GT(p, 0.0);
        EXPECT_LT(p, 1.0);
        EXPECT_LT(std::abs(rate_nbb84(n, k, p).r_unclamped), 1e-8);
        EXPECT_GT(rate_nbb84(n, k, p - 1e-6).r_infinity, 0.0);
        for (int i = 0; i < 100; i++) {
            double q = p + (1.0 - p) * (i + 1) / 100.0;
            EXPECT_EQ(rate_nbb84(n, k, q).r_infinity, 0.0);
        }
    }
}

TEST(AdvantageCrossing, SixFive) {
    auto c = advantage_crossing(6, 5);
    ASSERT_TRUE(c.has_value());
    EXPECT_GT(rate_nbb84(6, 5, *c - 1e-4).r_infinity, rate_bipartite_concat(6, *c - 1e-4));
    EXPECT_LT(rate_nbb84(6, 5, *c + 1e-4).r_infinity, rate_bipartite_concat(6, *c + 1e-4));
    // k = 2 never beats the concatenation.
    EXPECT_FALSE(advantage_crossing(6, 2).has_value());
}

}  // namespace
}  // namespace ckasim
