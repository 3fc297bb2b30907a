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

#include "ckasim/errors.h"
#include "ckasim/serialization.h"
#include "test_util.h"

namespace ckasim {
namespace {

TEST(Serialization, DensityRoundTrip) {
    Rng rng(1);
    DensityMatrix rho = testing::random_density(2, rng);
    Json j = to_json(rho);
    EXPECT_EQ(j["dim"], 4);
    DensityMatrix back = density_from_json(Json::parse(j.dump()));
    EXPECT_EQ(back.matrix().max_abs_diff(rho.matrix()), 0.0);
    EXPECT_THROW(density_from_json(Json{{"dim", 3}}), DomainError);
}

TEST(Serialization, SpecRoundTrip) {
    GhzMixtureSpec u = GhzMixtureSpec::uniform(5, 3, 0.05);
    GhzMixtureSpec u2 = spec_from_json(to_json(u));
    EXPECT_TRUE(u2.is_uniform());
    EXPECT_EQ(u2.n(), 5);
    EXPECT_EQ(u2.k(), 3);
    EXPECT_EQ(u2.noise_p(), 0.05);
    GhzMixtureSpec w = GhzMixtureSpec::weighted(3, 2, {{{0, 1}, 0.25}, {{0, 2}, 0.75}});
    GhzMixtureSpec w2 = spec_from_json(Json::parse(to_json(w).dump()));
    ASSERT_FALSE(w2.is_uniform());
    auto terms = w2.terms();
    ASSERT_EQ(terms.size(), 2U);
    EXPECT_EQ(terms[1].parties, (std::vector<int>{0, 2}));
    EXPECT_EQ(terms[1].q, 0.75);
}

TEST(Serialization, CertificateRoundTrip) {
    MeasurementSet m = MeasurementSet::nbb84(2);
    SeparationCertificate cert = find_witness(statistics_of(PureState::ghz(2), m), Partition(2, {0}), m);
    Json j = to_json(cert);
    EXPECT_EQ(j["status"], "separated");
    EXPECT_EQ(j["oracle"], "altopt");
    EXPECT_EQ(j["partition"][0], "A");
    EXPECT_EQ(j["partition"][1], "B1");
    EXPECT_TRUE(j["coeffs"].contains("ZZ:01"));
    SeparationCertificate back = certificate_from_json(Json::parse(j.dump()), m);
    EXPECT_EQ(back.status, cert.status);
    EXPECT_EQ(back.witness.coeffs, cert.witness.coeffs);
    EXPECT_EQ(back.witness.partition, cert.witness.partition);
    EXPECT_EQ(back.violation, cert.violation);
    EXPECT_EQ(back.cut_count, cert.cut_count);
}

TEST(Serialization, Reports) {
    Json r = to_json(rate_nbb84(3, 2, 0.0));
    EXPECT_EQ(r["method"], "closed_form");
    EXPECT_NEAR(r["r_infinity"].get<double>(), 0.188722, 1e-6);
    EXPECT_EQ(r["leak_terms"].size(), 2U);
}

TEST(Csv, Formatting) {
    EXPECT_EQ(format_csv_double(0.1), "0.1");
    EXPECT_EQ(format_csv_double(-0.0), "0");
    EXPECT_EQ(format_csv_double(1.0 / 3.0), "0.333333333");
    EXPECT_EQ(format_csv_double(NAN), "nan");
    EXPECT_EQ(format_csv_double(INFINITY), "inf");
    EXPECT_EQ(format_csv_double(-INFINITY), "-inf");
    EXPECT_EQ(csv_line({"a", "b", "c"}), "a,b,c\n");
}

}  // namespace
}  // namespace ckasim
