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
#include "ckasim/states.h"
#include "ckasim/witness.h"
#include "test_util.h"

namespace ckasim {
namespace {

ProbabilityTable ghz2_table() {
    return statistics_of(PureState::ghz(2), MeasurementSet::nbb84(2));
}

TEST(MeasurementSet, Validation) {
    ComplexMatrix p0(2, {1.0, 0.0, 0.0, 0.0});
    ComplexMatrix p1(2, {0.0, 0.0, 0.0, 1.0});
    ComplexMatrix half(2, {0.5, 0.0, 0.0, 0.5});
    EXPECT_NO_THROW(MeasurementSet({{{"Z", {p0, p1}}}}));
    EXPECT_THROW(MeasurementSet({{{"Z", {p0, p0}}}}), DomainError);
    ComplexMatrix neg(2, {1.5, 0.0, 0.0, 0.0});
    ComplexMatrix negc(2, {-0.5, 0.0, 0.0, 1.0});
    EXPECT_THROW(MeasurementSet({{{"Z", {neg, negc}}}}), DomainError);
    EXPECT_THROW(MeasurementSet({{{"Z", {p0, p1}}, {"T", {half, half, ComplexMatrix(2)}}}}), DomainError);
    MeasurementSet nb = MeasurementSet::nbb84(3);
    EXPECT_EQ(nb.parties(), 3);
    EXPECT_EQ(nb.settings(1)[0].name, "X");
    EXPECT_EQ(nb.settings(1)[1].name, "Z");
}

TEST(TableLayout, Labels) {
    TableLayout l = TableLayout::of(MeasurementSet::nbb84(3));
    EXPECT_EQ(l.size(), 64U);
    for (std::size_t i = 0; i < l.size(); i++) {
        EXPECT_EQ(l.parse_label(l.label(i)), i);
    }
    // settings (X, Z, X) = 0b010 and outcomes 010.
    EXPECT_EQ(l.label(2 * 8 + 2), "XZX:010");
    EXPECT_THROW(l.parse_label("XQX:010"), DomainError);
    EXPECT_THROW(l.parse_label("XZX:01"), DomainError);
}

TEST(StatisticsOf, MaximallyMixedIsUniform) {
    ProbabilityTable t = statistics_of(DensityMatrix::maximally_mixed(3), MeasurementSet::nbb84(3));
    t.validate();
    for (double v : t.values) {
        EXPECT_NEAR(v, 1.0 / 8, 1e-15);
    }
}

TEST(StatisticsOf, GhzXParity) {
    ProbabilityTable t = statistics_of(PureState::ghz(3), MeasurementSet::nbb84(3));
    t.validate();
    for (std::size_t o = 0; o < 8; o++) {
        EXPECT_NEAR(t.at(0, o), std::popcount(o) % 2 == 0 ? 0.25 : 0.0, 1e-15);
    }
    // Dense trace path: Tr(P_o rho) with the explicit projector.
    DensityMatrix rho = DensityMatrix::from_pure(PureState::ghz(3));
    MeasurementSet m = MeasurementSet::nbb84(3);
    for (std::size_t o = 0; o < 8; o++) {
        ComplexMatrix p = kron(kron(m.settings(0)[0].effects[(o >> 2) & 1], m.settings(1)[0].effects[(o >> 1) & 1]),
                               m.settings(2)[0].effects[o & 1]);
        Complex tr = 0.0;
        for (std::size_t r = 0; r < 8; r++) {
            for (std::size_t c = 0; c < 8; c++) {
                tr += p(r, c) * rho(c, r);
            }
        }
        EXPECT_NEAR(tr.real(), t.at(0, o), 1e-14);
    }
}

TEST(StatisticsOf, FamilyAgreementProbability) {
    ProbabilityTable t = statistics_of(build_ghz_mixture(GhzMixtureSpec::uniform(3, 2)), MeasurementSet::nbb84(3));
    const std::size_t all_z = 7;
    double agree = 0.0;
    for (std::size_t o = 0; o < 8; o++) {
        if (((o >> 2) & 1) == ((o >> 1) & 1)) {
            agree += t.at(all_z, o);
        }
    }
    EXPECT_NEAR(agree, 0.75, 1e-14);
}

TEST(StatisticsOf, DeterministicTables) {
    ProbabilityTable z = statistics_of(PureState::basis("000"), MeasurementSet::nbb84(3));
    EXPECT_NEAR(z.at(7, 0), 1.0, 1e-15);
    ProbabilityTable x = statistics_of(PureState::plus(3), MeasurementSet::nbb84(3));
    EXPECT_NEAR(x.at(0, 0), 1.0, 1e-15);
}

TEST(StatisticsOf, PureAndDensityAgree) {
    Rng rng(3);
    for (int i = 0; i < 5; i++) {
        PureState psi = random_pure_state(3, rng);
        ProbabilityTable a = statistics_of(psi, MeasurementSet::nbb84(3));
        ProbabilityTable b = statistics_of(DensityMatrix::from_pure(psi), MeasurementSet::nbb84(3));
        for (std::size_t j = 0; j < a.values.size(); j++) {
            EXPECT_NEAR(a.values[j], b.values[j], 1e-14);
        }
        a.validate();
    }
}

TEST(ProductStatistics, MatchesTensorProduct) {
    Rng rng(5);
    MeasurementSet m = MeasurementSet::nbb84(3);
    for (const Partition &cut : Partition::all(3)) {
        PureState s = random_pure_state(static_cast<int>(cut.s_alpha().size()), rng);
        PureState c = random_pure_state(static_cast<int>(cut.complement().size()), rng);
        ProbabilityTable got = product_statistics(cut, s, c, m);
        SeparableSpec spec{cut, {{1.0, s, c}}};
        ProbabilityTable want = statistics_of(build_separable_test_state(spec), m);
        for (std::size_t j = 0; j < got.values.size(); j++) {
            EXPECT_NEAR(got.values[j], want.values[j], 1e-14) << cut.to_string();
        }
    }
}

TEST(ProbabilityTable, ValidateRejectsSignaling) {
    ProbabilityTable t = ghz2_table();
    t.validate();
    // Move mass inside one setting block: still normalized, but A's marginal now depends on B's choice.
    t.values[0] += 0.2;
    t.values[3] -= 0.2;
    EXPECT_THROW(t.validate(), DomainError);
    ProbabilityTable u = ghz2_table();
    u.values[0] = -0.1;
    EXPECT_THROW(u.validate(), DomainError);
}

TEST(WitnessOperator, TraceDuality) {
    Rng rng(12);
    MeasurementSet m = MeasurementSet::nbb84(3);
    TableLayout layout = TableLayout::of(m);
    for (int i = 0; i < 20; i++) {
        std::vector<double> c(layout.size());
        for (double &v : c) {
            v = rng.normal();
        }
        ComplexMatrix w = witness_operator(c, m);
        DensityMatrix rho = testing::random_density(3, rng);
        Complex tr = 0.0;
        for (std::size_t r = 0; r < 8; r++) {
            for (std::size_t col = 0; col < 8; col++) {
                tr += w(r, col) * rho(col, r);
            }
        }
        WitnessCoefficients wc{Partition(3, {0}), layout, c, 0.0};
        EXPECT_NEAR(tr.real(), evaluate_witness(wc, statistics_of(rho, m)), 1e-9);
    }
}

TEST(Oracles, GridAndAltOptAgreeOnRandomWitness) {
    Rng rng(6);
    MeasurementSet m = MeasurementSet::nbb84(2);
    std::vector<double> c(TableLayout::of(m).size());
    for (double &v : c) {
        v = rng.normal();
    }
    ComplexMatrix w = witness_operator(c, m);
    Partition cut(2, {0});
    OracleResult grid = grid_oracle(w, cut, 1.0);
    Rng orng(1);
    OracleResult alt = altopt_oracle(w, cut, 20, orng);
    EXPECT_LE(alt.min_value, grid.min_value + 1e-9);
    EXPECT_NEAR(alt.min_value, grid.min_value, 1e-3);
    ASSERT_FALSE(alt.minimizers.empty());
    // The reported minimizer attains the reported value.
    WitnessCoefficients wc{cut, TableLayout::of(m), c, 0.0};
    const ProductPoint &best = alt.minimizers.front();
    EXPECT_NEAR(evaluate_witness(wc, product_statistics(cut, best.s_side, best.complement_side, m)), alt.min_value,
                1e-9);
}

TEST(FindWitness, GhzTwoSeparated) {
    MeasurementSet m = MeasurementSet::nbb84(2);
    Partition cut(2, {0});
    SeparationCertificate cert = find_witness(ghz2_table(), cut, m);
    ASSERT_EQ(cert.status, CertificateStatus::Separated);
    EXPECT_LT(cert.violation, 0.0);
    EXPECT_NEAR(evaluate_witness(cert.witness, ghz2_table()), cert.violation, 1e-12);
    EXPECT_GE(cert.min_over_points, -1e-9);
    // Exhaustive 1-degree grid over product states.
    OracleResult grid = grid_oracle(witness_operator(cert.witness.coeffs, m), cut, 1.0);
    EXPECT_GE(grid.min_value, -1e-6);
    EXPECT_FALSE(cert.heuristic);
}

TEST(FindWitness, ProductTargetInside) {
    MeasurementSet m = MeasurementSet::nbb84(2);
    SeparationCertificate cert =
        find_witness(statistics_of(PureState::basis("00"), m), Partition(2, {0}), m);
    EXPECT_EQ(cert.status, CertificateStatus::Inside);
}

TEST(FindWitness, LpValueNonDecreasing) {
    MeasurementSet m = MeasurementSet::nbb84(3);
    ProbabilityTable t = statistics_of(build_ghz_mixture(GhzMixtureSpec::uniform(3, 2)), m);
    SeparationCertificate cert = find_witness(t, Partition::parse("A|B1B2", 3), m);
    ASSERT_EQ(cert.status, CertificateStatus::Separated);
    ASSERT_FALSE(cert.lp_history.empty());
    for (std::size_t i = 1; i < cert.lp_history.size(); i++) {
        EXPECT_GE(cert.lp_history[i], cert.lp_history[i - 1] - 1e-9) << i;
    }
}

// Fresh random product states never see the certificate negative.
TEST(FindWitness, SamplingSoundness) {
    MeasurementSet m2 = MeasurementSet::nbb84(2);
    MeasurementSet m3 = MeasurementSet::nbb84(3);
    Partition cut3 = Partition::parse("A|B1B2", 3);
    std::vector<std::tuple<SeparationCertificate, Partition, const MeasurementSet *>> cases;
    cases.emplace_back(find_witness(ghz2_table(), Partition(2, {0}), m2), Partition(2, {0}), &m2);
    cases.emplace_back(
        find_witness(statistics_of(build_ghz_mixture(GhzMixtureSpec::uniform(3, 2)), m3), cut3, m3), cut3, &m3);
    Rng rng(99);
    for (const auto &[cert, cut, m] : cases) {
        ASSERT_EQ(cert.status, CertificateStatus::Separated);
        double worst = 1e300;
        for (int i = 0; i < 10000; i++) {
            PureState s = random_pure_state(static_cast<int>(cut.s_alpha().size()), rng);
            PureState c = random_pure_state(static_cast<int>(cut.complement().size()), rng);
            worst = std::min(worst, evaluate_witness(cert.witness, product_statistics(cut, s, c, *m)));
        }
        EXPECT_GE(worst, -1e-9) << cut.to_string();
    }
}

TEST(FindWitness, SeparableTargetsNeverSeparated) {
    MeasurementSet m = MeasurementSet::nbb84(3);
    Rng rng(404);
    WitnessOptions opts;
    opts.max_cuts = 60;
    for (int i = 0; i < 6; i++) {
        Partition cut = Partition::all(3)[static_cast<std::size_t>(i % 3)];
        SeparableSpec spec = random_separable_spec(cut, 1 + i % 3, rng);
        SeparationCertificate cert = find_witness(statistics_of(build_separable_test_state(spec), m), cut, m, opts);
        EXPECT_NE(cert.status, CertificateStatus::Separated) << i << " " << cut.to_string();
    }
}

TEST(FindWitness, GridOracleMode) {
    MeasurementSet m = MeasurementSet::nbb84(2);
    WitnessOptions opts;
    opts.oracle = OracleKind::Grid;
    SeparationCertificate cert = find_witness(ghz2_table(), Partition(2, {0}), m, opts);
    EXPECT_EQ(cert.status, CertificateStatus::Separated);
    EXPECT_EQ(cert.oracle, OracleKind::Grid);
}

TEST(FindWitness, RejectsMismatchedInputs) {
    MeasurementSet m = MeasurementSet::nbb84(3);
    EXPECT_THROW(find_witness(ghz2_table(), Partition(3, {0}), m), DomainError);
}

}  // namespace
}  // namespace ckasim
