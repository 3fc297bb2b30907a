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

#ifndef CKASIM_WITNESS_H
#define CKASIM_WITNESS_H

// Partition entanglement witnesses in the space of measurement statistics,
// found by a cutting-plane search over pure product states across a cut.

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "ckasim/qstate.h"
#include "ckasim/rng.h"
#include "ckasim/states.h"

namespace ckasim {

/// One measurement setting of a party: a qubit POVM.
struct Setting {
    std::string name;                    // single character used in labels, e.g. "X"
    std::vector<ComplexMatrix> effects;  // 2x2, PSD, summing to identity
};

class MeasurementSet {
   public:
    /// Validates every setting: effects 2x2 PSD and summing to I within 1e-10.
    /// All settings of one party must have the same outcome count.
    explicit MeasurementSet(std::vector<std::vector<Setting>> per_party);

    /// X and Z projective measurements for every party.
    static MeasurementSet nbb84(int n);

    int parties() const { return static_cast<int>(per_party_.size()); }
    const std::vector<Setting> &settings(int party) const { return per_party_.at(party); }
    int setting_count(int party) const { return static_cast<int>(per_party_.at(party).size()); }
    int outcome_count(int party) const;

   private:
    std::vector<std::vector<Setting>> per_party_;
};

/// Index layout shared by probability tables and witness coefficients:
/// flat = setting_index * outcome_total + outcome_index, both mixed radix
/// with party 0 most significant.
struct TableLayout {
    std::vector<int> settings;   // per party
    std::vector<int> outcomes;   // per party
    std::vector<std::string> setting_names;  // per party, one character per setting

    static TableLayout of(const MeasurementSet &meas);

    int parties() const { return static_cast<int>(settings.size()); }
    std::size_t setting_total() const;
    std::size_t outcome_total() const;
    std::size_t size() const { return setting_total() * outcome_total(); }
    std::vector<int> setting_digits(std::size_t setting_index) const;
    std::vector<int> outcome_digits(std::size_t outcome_index) const;
    /// "XZX:010" for settings (X, Z, X) and outcomes (0, 1, 0).
    std::string label(std::size_t flat) const;
    std::size_t parse_label(const std::string &label) const;

    bool operator==(const TableLayout &other) const = default;
};

/// P(a_0 .. a_{N-1} | x_0 .. x_{N-1}).
struct ProbabilityTable {
    TableLayout layout;
    std::vector<double> values;

    /// Throws DomainError unless entries are nonnegative (-1e-9), every
    /// setting block sums to 1 and marginals are no-signaling (1e-9).
    void validate(double tol = 1e-9) const;
    double at(std::size_t setting_index, std::size_t outcome_index) const {
        return values[setting_index * layout.outcome_total() + outcome_index];
    }
};

ProbabilityTable statistics_of(const DensityMatrix &rho, const MeasurementSet &meas);
ProbabilityTable statistics_of(const PureState &psi, const MeasurementSet &meas);

/// Statistics of s_side (parties of s_alpha) tensored with complement_side.
ProbabilityTable product_statistics(const Partition &partition, const PureState &s_side,
                                    const PureState &complement_side, const MeasurementSet &meas);

struct WitnessCoefficients {
    Partition partition;
    TableLayout layout;
    std::vector<double> coeffs;
    double offset = 0.0;
};

double evaluate_witness(const WitnessCoefficients &w, const ProbabilityTable &table);

/// sum_{x,a} c_{x,a} G^{a_0}_{x_0} (x) ... (x) G^{a_{N-1}}_{x_{N-1}} as a dense operator.
ComplexMatrix witness_operator(const std::vector<double> &coeffs, const MeasurementSet &meas);

enum class OracleKind { AltOpt, Grid };
std::string to_string(OracleKind k);

struct ProductPoint {
    PureState s_side;
    PureState complement_side;
    double value = 0.0;
};

struct OracleResult {
    double min_value = 0.0;
    std::vector<ProductPoint> minimizers;  // best first
};

/// Minimizes <phi (x) chi| W |phi (x) chi> over pure phi on s_alpha and chi on
/// the complement by alternating minimum-eigenvector updates.
OracleResult altopt_oracle(const ComplexMatrix &w, const Partition &partition, int restarts, Rng &rng);

/// Exhaustive Bloch grid (step in degrees) on whichever side is one qubit,
/// exact minimum eigenvalue on the other side.
OracleResult grid_oracle(const ComplexMatrix &w, const Partition &partition, double step_degrees = 2.0);

enum class CertificateStatus { Separated, Inside, Inconclusive };
std::string to_string(CertificateStatus s);

struct WitnessOptions {
    int max_cuts = 300;
    double tol = 1e-7;
    int restarts = 20;
    std::uint64_t seed = 1;
    OracleKind oracle = OracleKind::AltOpt;
    double grid_step_degrees = 2.0;
    int initial_points = 16;
    int batch = 4;  // cuts added per oracle call
    /// With the local oracle, re-check a claimed separation on the Bloch grid
    /// whenever one side of the cut is a single qubit.
    bool grid_verify = true;
};

struct SeparationCertificate {
    CertificateStatus status = CertificateStatus::Inconclusive;
    WitnessCoefficients witness{Partition(2, {0}), {}, {}, 0.0};
    double violation = 0.0;     // witness value on the target
    double oracle_min = 0.0;    // last oracle minimum over product states
    double grid_min = NAN;      // grid check of the final witness, when run
    int cut_count = 0;
    std::vector<double> lp_history;
    OracleKind oracle = OracleKind::AltOpt;
    bool heuristic = false;     // oracle is local and N > 3
    std::size_t point_count = 0;
    double min_over_points = 0.0;  // min of the witness over the collected cut set
};

SeparationCertificate find_witness(const ProbabilityTable &target, const Partition &partition,
                                   const MeasurementSet &meas, const WitnessOptions &opts = {});

}  // namespace ckasim

#endif
