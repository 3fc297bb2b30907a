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

#include "ckasim/witness.h"

#include <algorithm>
#include <cmath>

#include "ckasim/errors.h"
#include "ckasim/lp.h"
#include "internal.h"

namespace ckasim {

namespace {

ComplexMatrix projector(Complex a0, Complex a1) {
    ComplexMatrix m(2);
    m(0, 0) = a0 * std::conj(a0);
    m(0, 1) = a0 * std::conj(a1);
    m(1, 0) = a1 * std::conj(a0);
    m(1, 1) = a1 * std::conj(a1);
    return m;
}

void contract(const ComplexMatrix &m, int party, std::size_t set_idx, std::size_t out_idx, const MeasurementSet &meas,
              std::size_t outcome_total, std::vector<double> &values) {
    if (party == meas.parties()) {
        values[set_idx * outcome_total + out_idx] = m(0, 0).real();
        return;
    }
    const std::size_t d = m.dim() / 2;
    const auto &settings = meas.settings(party);
    const std::size_t outs = static_cast<std::size_t>(meas.outcome_count(party));
    ComplexMatrix r(d);
    for (std::size_t s = 0; s < settings.size(); s++) {
        for (std::size_t a = 0; a < outs; a++) {
            const ComplexMatrix &g = settings[s].effects[a];
            for (std::size_t i = 0; i < d; i++) {
                for (std::size_t j = 0; j < d; j++) {
                    r(i, j) = g(0, 0) * m(i, j) + g(0, 1) * m(d + i, j) + g(1, 0) * m(i, d + j) +
                              g(1, 1) * m(d + i, d + j);
                }
            }
            contract(r, party + 1, set_idx * settings.size() + s, out_idx * outs + a, meas, outcome_total, values);
        }
    }
}

ProbabilityTable statistics_of_matrix(const ComplexMatrix &m, const MeasurementSet &meas) {
    if (m.dim() != (std::size_t{1} << meas.parties())) {
        throw DomainError("statistics_of: state dimension does not match the measurement set");
    }
    ProbabilityTable t;
    t.layout = TableLayout::of(meas);
    t.values.assign(t.layout.size(), 0.0);
    contract(m, 0, 0, 0, meas, t.layout.outcome_total(), t.values);
    return t;
}

ComplexMatrix build_operator(const std::vector<double> &coeffs, const MeasurementSet &meas, int party,
                             std::size_t set_idx, std::size_t out_idx, std::size_t outcome_total) {
    if (party == meas.parties()) {
        ComplexMatrix one(1);
        one(0, 0) = coeffs[set_idx * outcome_total + out_idx];
        return one;
    }
    const auto &settings = meas.settings(party);
    const std::size_t outs = static_cast<std::size_t>(meas.outcome_count(party));
    const std::size_t d = std::size_t{1} << (meas.parties() - party);
    ComplexMatrix acc(d);
    for (std::size_t s = 0; s < settings.size(); s++) {
        for (std::size_t a = 0; a < outs; a++) {
            ComplexMatrix rest =
                build_operator(coeffs, meas, party + 1, set_idx * settings.size() + s, out_idx * outs + a,
                               outcome_total);
            acc += kron(settings[s].effects[a], rest);
        }
    }
    return acc;
}

// Witness operator with the qubits of s_alpha first, then the complement.
ComplexMatrix split_order(const ComplexMatrix &w, const Partition &partition) {
    std::vector<int> order = partition.s_alpha();
    auto comp = partition.complement();
    order.insert(order.end(), comp.begin(), comp.end());
    return permute_qubits(w, order);
}

// <chi| W |chi> on the first factor (fix_second) or <phi| W |phi> on the second.
ComplexMatrix effective(const ComplexMatrix &w, std::size_t d_first, std::size_t d_second,
                        std::span<const Complex> v, bool fix_second) {
    if (fix_second) {
        ComplexMatrix a(d_first);
        for (std::size_t i = 0; i < d_first; i++) {
            for (std::size_t k = 0; k < d_first; k++) {
                Complex s = 0.0;
                for (std::size_t j = 0; j < d_second; j++) {
                    if (v[j] == 0.0) {
                        continue;
                    }
                    Complex row = 0.0;
                    for (std::size_t l = 0; l < d_second; l++) {
                        row += w(i * d_second + j, k * d_second + l) * v[l];
                    }
                    s += std::conj(v[j]) * row;
                }
                a(i, k) = s;
            }
        }
        return a;
    }
    ComplexMatrix b(d_second);
    for (std::size_t j = 0; j < d_second; j++) {
        for (std::size_t l = 0; l < d_second; l++) {
            Complex s = 0.0;
            for (std::size_t i = 0; i < d_first; i++) {
                if (v[i] == 0.0) {
                    continue;
                }
                Complex row = 0.0;
                for (std::size_t k = 0; k < d_first; k++) {
                    row += w(i * d_second + j, k * d_second + l) * v[k];
                }
                s += std::conj(v[i]) * row;
            }
            b(j, l) = s;
        }
    }
    return b;
}

std::pair<double, std::vector<Complex>> min_eigen(const ComplexMatrix &h) {
    Spectrum s = eigensystem(h);
    const std::size_t last = h.dim() - 1;
    std::vector<Complex> v(h.dim());
    for (std::size_t i = 0; i < h.dim(); i++) {
        v[i] = s.eigenvectors(i, last);
    }
    return {s.eigenvalues[last], std::move(v)};
}

double overlap2(const PureState &a, const PureState &b) {
    Complex s = 0.0;
    for (std::size_t i = 0; i < a.dim(); i++) {
        s += std::conj(a[i]) * b[i];
    }
    return std::norm(s);
}

void sort_and_dedupe(std::vector<ProductPoint> &points) {
    std::sort(points.begin(), points.end(),
              [](const ProductPoint &a, const ProductPoint &b) { return a.value < b.value; });
    std::vector<ProductPoint> kept;
    for (auto &p : points) {
        bool dup = false;
        for (const auto &q : kept) {
            if (overlap2(p.s_side, q.s_side) * overlap2(p.complement_side, q.complement_side) > 1.0 - 1e-6) {
                dup = true;
                break;
            }
        }
        if (!dup) {
            kept.push_back(std::move(p));
        }
    }
    points = std::move(kept);
}

double dot(const std::vector<double> &a, const std::vector<double> &b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); i++) {
        s += a[i] * b[i];
    }
    return s;
}

}  // namespace

// ---------------------------------------------------------------- measurement sets

MeasurementSet::MeasurementSet(std::vector<std::vector<Setting>> per_party) : per_party_(std::move(per_party)) {
    if (per_party_.empty() || static_cast<int>(per_party_.size()) > kMaxParties) {
        throw DomainError("measurement set needs between 1 and 64 parties");
    }
    for (const auto &settings : per_party_) {
        if (settings.empty()) {
            throw DomainError("every party needs at least one measurement setting");
        }
        const std::size_t outs = settings.front().effects.size();
        for (const auto &s : settings) {
            if (s.name.size() != 1) {
                throw DomainError("setting names must be a single character");
            }
            if (s.effects.size() != outs || outs < 1) {
                throw DomainError("all settings of a party must have the same nonzero outcome count");
            }
            ComplexMatrix sum(2);
            for (const auto &e : s.effects) {
                if (e.dim() != 2 || !e.is_hermitian(1e-10)) {
                    throw DomainError("POVM effects must be Hermitian 2x2 matrices");
                }
                if (eigensystem(e).eigenvalues.back() < -1e-10) {
                    throw DomainError("POVM effects must be positive semidefinite");
                }
                sum += e;
            }
            if (sum.max_abs_diff(ComplexMatrix::identity(2)) > 1e-10) {
                throw DomainError("POVM effects of setting " + s.name + " do not sum to the identity");
            }
        }
    }
}

MeasurementSet MeasurementSet::nbb84(int n) {
    const double h = M_SQRT1_2;
    Setting x{"X", {projector(h, h), projector(h, -h)}};
    Setting z{"Z", {projector(1.0, 0.0), projector(0.0, 1.0)}};
    return MeasurementSet(std::vector<std::vector<Setting>>(static_cast<std::size_t>(n), {x, z}));
}

int MeasurementSet::outcome_count(int party) const {
    return static_cast<int>(per_party_.at(party).front().effects.size());
}

// ---------------------------------------------------------------- layout

TableLayout TableLayout::of(const MeasurementSet &meas) {
    TableLayout l;
    for (int p = 0; p < meas.parties(); p++) {
        l.settings.push_back(meas.setting_count(p));
        l.outcomes.push_back(meas.outcome_count(p));
        std::string names;
        for (const auto &s : meas.settings(p)) {
            names += s.name;
        }
        l.setting_names.push_back(names);
    }
    return l;
}

std::size_t TableLayout::setting_total() const {
    std::size_t t = 1;
    for (int s : settings) {
        t *= static_cast<std::size_t>(s);
    }
    return t;
}

std::size_t TableLayout::outcome_total() const {
    std::size_t t = 1;
    for (int o : outcomes) {
        t *= static_cast<std::size_t>(o);
    }
    return t;
}

static std::vector<int> digits_of(std::size_t index, const std::vector<int> &radix) {
    std::vector<int> d(radix.size());
    for (std::size_t p = radix.size(); p-- > 0;) {
        d[p] = static_cast<int>(index % static_cast<std::size_t>(radix[p]));
        index /= static_cast<std::size_t>(radix[p]);
    }
    return d;
}

std::vector<int> TableLayout::setting_digits(std::size_t setting_index) const {
    return digits_of(setting_index, settings);
}

std::vector<int> TableLayout::outcome_digits(std::size_t outcome_index) const {
    return digits_of(outcome_index, outcomes);
}

std::string TableLayout::label(std::size_t flat) const {
    const std::size_t ot = outcome_total();
    auto sd = setting_digits(flat / ot);
    auto od = outcome_digits(flat % ot);
    std::string s;
    for (int p = 0; p < parties(); p++) {
        s += setting_names[p][sd[p]];
    }
    s += ':';
    for (int p = 0; p < parties(); p++) {
        s += std::to_string(od[p]);
    }
    return s;
}

std::size_t TableLayout::parse_label(const std::string &text) const {
    const std::size_t n = static_cast<std::size_t>(parties());
    if (text.size() != 2 * n + 1 || text[n] != ':') {
        throw DomainError("malformed table label \"" + text + "\"");
    }
    std::size_t set_idx = 0;
    std::size_t out_idx = 0;
    for (std::size_t p = 0; p < n; p++) {
        auto pos = setting_names[p].find(text[p]);
        int o = text[n + 1 + p] - '0';
        if (pos == std::string::npos || o < 0 || o >= outcomes[p]) {
            throw DomainError("table label \"" + text + "\" does not match the layout");
        }
        set_idx = set_idx * static_cast<std::size_t>(settings[p]) + pos;
        out_idx = out_idx * static_cast<std::size_t>(outcomes[p]) + static_cast<std::size_t>(o);
    }
    return set_idx * outcome_total() + out_idx;
}

// ---------------------------------------------------------------- tables

void ProbabilityTable::validate(double tol) const {
    if (values.size() != layout.size()) {
        throw DomainError("probability table size does not match its layout");
    }
    const std::size_t st = layout.setting_total();
    const std::size_t ot = layout.outcome_total();
    for (double v : values) {
        if (!(v >= -tol)) {
            throw DomainError("probability table has a negative entry");
        }
    }
    for (std::size_t s = 0; s < st; s++) {
        double sum = 0.0;
        for (std::size_t o = 0; o < ot; o++) {
            sum += at(s, o);
        }
        if (std::abs(sum - 1.0) > tol) {
            throw DomainError("probability table block " + std::to_string(s) + " sums to " + std::to_string(sum));
        }
    }
    // No-signaling: the marginal of the other parties cannot depend on the
    // setting of party p.
    const int n = layout.parties();
    for (int p = 0; p < n; p++) {
        std::size_t s_stride = 1;
        std::size_t o_stride = 1;
        for (int q = p + 1; q < n; q++) {
            s_stride *= static_cast<std::size_t>(layout.settings[q]);
            o_stride *= static_cast<std::size_t>(layout.outcomes[q]);
        }
        const std::size_t sp = static_cast<std::size_t>(layout.settings[p]);
        const std::size_t op = static_cast<std::size_t>(layout.outcomes[p]);
        auto marginal = [&](std::size_t s, std::size_t o_rest) {
            double m = 0.0;
            for (std::size_t a = 0; a < op; a++) {
                m += at(s, o_rest + a * o_stride);
            }
            return m;
        };
        for (std::size_t s = 0; s < st; s++) {
            if ((s / s_stride) % sp != 0) {
                continue;
            }
            for (std::size_t x = 1; x < sp; x++) {
                const std::size_t s2 = s + x * s_stride;
                for (std::size_t o = 0; o < ot; o++) {
                    if ((o / o_stride) % op != 0) {
                        continue;
                    }
                    if (std::abs(marginal(s, o) - marginal(s2, o)) > tol) {
                        throw DomainError("probability table violates no-signaling for party " + party_label(p));
                    }
                }
            }
        }
    }
}

ProbabilityTable statistics_of(const DensityMatrix &rho, const MeasurementSet &meas) {
    return statistics_of_matrix(rho.matrix(), meas);
}

ProbabilityTable statistics_of(const PureState &psi, const MeasurementSet &meas) {
    const std::size_t d = psi.dim();
    if (psi.qubit_count() > dense_qubit_cap()) {
        throw CapacityError(psi.qubit_count(), dense_qubit_cap(), "statistics_of");
    }
    ComplexMatrix m(d);
    for (std::size_t r = 0; r < d; r++) {
        for (std::size_t c = 0; c < d; c++) {
            m(r, c) = psi[r] * std::conj(psi[c]);
        }
    }
    return statistics_of_matrix(m, meas);
}

ProbabilityTable product_statistics(const Partition &partition, const PureState &s_side,
                                    const PureState &complement_side, const MeasurementSet &meas) {
    const int n = partition.n();
    if (s_side.qubit_count() != static_cast<int>(partition.s_alpha().size()) ||
        complement_side.qubit_count() != n - static_cast<int>(partition.s_alpha().size())) {
        throw DomainError("product_statistics: factor dimensions do not match the partition");
    }
    std::vector<int> concat = partition.s_alpha();
    auto comp = partition.complement();
    concat.insert(concat.end(), comp.begin(), comp.end());
    std::vector<int> order(n);
    for (int pos = 0; pos < n; pos++) {
        order[concat[pos]] = pos;
    }
    return statistics_of(permute_qubits(tensor(s_side, complement_side), order), meas);
}

double evaluate_witness(const WitnessCoefficients &w, const ProbabilityTable &table) {
    if (!(w.layout == table.layout) || w.coeffs.size() != table.values.size()) {
        throw DomainError("evaluate_witness: witness and table layouts differ");
    }
    return dot(w.coeffs, table.values) + w.offset;
}

ComplexMatrix witness_operator(const std::vector<double> &coeffs, const MeasurementSet &meas) {
    TableLayout layout = TableLayout::of(meas);
    if (coeffs.size() != layout.size()) {
        throw DomainError("witness_operator: coefficient count does not match the measurement set");
    }
    if (meas.parties() > dense_qubit_cap()) {
        throw CapacityError(meas.parties(), dense_qubit_cap(), "witness_operator");
    }
    return build_operator(coeffs, meas, 0, 0, 0, layout.outcome_total());
}

// ---------------------------------------------------------------- oracles

std::string to_string(OracleKind k) {
    return k == OracleKind::Grid ? "grid" : "altopt";
}

std::string to_string(CertificateStatus s) {
    switch (s) {
        case CertificateStatus::Separated:
            return "separated";
        case CertificateStatus::Inside:
            return "inside";
        case CertificateStatus::Inconclusive:
            return "inconclusive";
    }
    return "unknown";
}

OracleResult altopt_oracle(const ComplexMatrix &w, const Partition &partition, int restarts, Rng &rng) {
    const int s_qubits = static_cast<int>(partition.s_alpha().size());
    const int c_qubits = partition.n() - s_qubits;
    const std::size_t ds = std::size_t{1} << s_qubits;
    const std::size_t dc = std::size_t{1} << c_qubits;
    ComplexMatrix ws = split_order(w, partition);

    std::vector<ProductPoint> found;
    for (int r = 0; r < std::max(1, restarts); r++) {
        PureState chi = random_pure_state(c_qubits, rng);
        std::vector<Complex> phi_v;
        std::vector<Complex> chi_v(chi.amplitudes().begin(), chi.amplitudes().end());
        double value = INFINITY;
        for (int it = 0; it < 500; it++) {
            auto [v1, phi_new] = min_eigen(effective(ws, ds, dc, chi_v, true));
            phi_v = std::move(phi_new);
            auto [v2, chi_new] = min_eigen(effective(ws, ds, dc, phi_v, false));
            chi_v = std::move(chi_new);
            const bool done = value - v2 <= 1e-14 * std::max(1.0, std::abs(v2));
            value = v2;
            if (done) {
                break;
            }
        }
        found.push_back(ProductPoint{PureState::normalized(phi_v), PureState::normalized(chi_v), value});
    }
    sort_and_dedupe(found);
    return OracleResult{found.front().value, std::move(found)};
}

OracleResult grid_oracle(const ComplexMatrix &w, const Partition &partition, double step_degrees) {
    const int s_qubits = static_cast<int>(partition.s_alpha().size());
    const int c_qubits = partition.n() - s_qubits;
    if (s_qubits != 1 && c_qubits != 1) {
        throw DomainError("grid oracle needs one side of the partition to be a single qubit");
    }
    if (!(step_degrees > 0.0 && step_degrees <= 90.0)) {
        throw DomainError("grid step must lie in (0, 90] degrees");
    }
    const std::size_t ds = std::size_t{1} << s_qubits;
    const std::size_t dc = std::size_t{1} << c_qubits;
    ComplexMatrix ws = split_order(w, partition);
    const bool single_is_s = s_qubits == 1;

    const int n_theta = static_cast<int>(std::lround(180.0 / step_degrees));
    const int n_phi = static_cast<int>(std::lround(360.0 / step_degrees));
    ProductPoint best{PureState::basis(std::string(s_qubits, '0')), PureState::basis(std::string(c_qubits, '0')),
                      INFINITY};
    for (int ti = 0; ti <= n_theta; ti++) {
        const double theta = M_PI * ti / n_theta;
        const int phis = (ti == 0 || ti == n_theta) ? 1 : n_phi;
        for (int pi = 0; pi < phis; pi++) {
            const double ph = 2.0 * M_PI * pi / n_phi;
            std::vector<Complex> q{std::cos(theta / 2), std::polar(std::sin(theta / 2), ph)};
            auto [val, vec] = min_eigen(effective(ws, ds, dc, q, !single_is_s));
            if (val < best.value) {
                PureState single = PureState::normalized(q);
                PureState other = PureState::normalized(vec);
                best = single_is_s ? ProductPoint{single, other, val} : ProductPoint{other, single, val};
            }
        }
    }
    return OracleResult{best.value, {best}};
}

// ---------------------------------------------------------------- cutting plane

SeparationCertificate find_witness(const ProbabilityTable &target, const Partition &partition,
                                   const MeasurementSet &meas, const WitnessOptions &opts) {
    target.validate();
    const TableLayout layout = TableLayout::of(meas);
    if (!(target.layout == layout)) {
        throw DomainError("find_witness: target table does not match the measurement set");
    }
    if (partition.n() != meas.parties()) {
        throw DomainError("find_witness: partition and measurement set disagree on N");
    }
    if (meas.parties() > dense_qubit_cap()) {
        throw CapacityError(meas.parties(), dense_qubit_cap(), "find_witness");
    }
    if (opts.max_cuts < 1 || opts.restarts < 1 || !(opts.tol > 0.0)) {
        throw DomainError("find_witness needs max_cuts >= 1, restarts >= 1 and tol > 0");
    }
    const std::size_t m = layout.size();
    const int s_qubits = static_cast<int>(partition.s_alpha().size());
    const int c_qubits = partition.n() - s_qubits;

    // Dual of  min c.t  s.t.  c.P_v >= 0, |c_i| <= 1:
    //   max -sum(alpha + beta)  s.t.  sum lambda_v P_v + alpha - beta = t.
    DenseSimplex lp(target.values);
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; i++) {
        std::vector<double> e(m, 0.0);
        e[i] = 1.0;
        std::size_t a = lp.add_column(e, -1.0);
        e[i] = -1.0;
        std::size_t b = lp.add_column(e, -1.0);
        basis[i] = target.values[i] >= 0.0 ? a : b;
    }
    lp.set_basis(basis);

    std::vector<std::vector<double>> points;
    auto add_point = [&](const PureState &s, const PureState &c) {
        ProbabilityTable t = product_statistics(partition, s, c, meas);
        lp.add_column(t.values, 0.0);
        points.push_back(std::move(t.values));
    };
    Rng init_rng(opts.seed, 0);
    for (int i = 0; i < opts.initial_points; i++) {
        PureState s = random_pure_state(s_qubits, init_rng);
        PureState c = random_pure_state(c_qubits, init_rng);
        add_point(s, c);
    }

    SeparationCertificate cert;
    cert.witness = WitnessCoefficients{partition, layout, {}, 0.0};
    cert.oracle = opts.oracle;
    cert.heuristic = opts.oracle == OracleKind::AltOpt && partition.n() > 3;
    const bool grid_applicable = s_qubits == 1 || c_qubits == 1;
    SimplexOptions lp_opts;
    lp_opts.max_iterations = 50000;
    std::vector<double> c;
    for (int cut = 0; cut < opts.max_cuts; cut++) {
        try {
            lp.solve(lp_opts);
        } catch (const LpError &) {
            // Ill-conditioned warm basis: restart from the slack basis,
            // which is always feasible.
            lp.set_basis(basis);
            lp.solve(lp_opts);
        }
        const double value = lp.objective();
        c = lp.duals();
        cert.lp_history.push_back(value);
        cert.cut_count = cut + 1;
        if (value > -1.0) {
            cert.status = CertificateStatus::Inside;
            break;
        }
        ComplexMatrix w = witness_operator(c, meas);
        OracleResult res;
        if (opts.oracle == OracleKind::Grid) {
            res = grid_oracle(w, partition, opts.grid_step_degrees);
        } else {
            Rng rng(opts.seed, static_cast<std::uint64_t>(cut) + 1);
            res = altopt_oracle(w, partition, opts.restarts, rng);
        }
        cert.oracle_min = res.min_value;
        if (res.min_value >= -opts.tol && grid_applicable && opts.oracle == OracleKind::AltOpt &&
            opts.grid_verify) {
            // The local search can miss shallow basins; confirm on the grid.
            OracleResult g = grid_oracle(w, partition, opts.grid_step_degrees);
            cert.grid_min = g.min_value;
            if (g.min_value < -opts.tol) {
                res = std::move(g);
            }
        }
        if (res.min_value >= -opts.tol) {
            cert.status = CertificateStatus::Separated;
            break;
        }
        // Most violated points only; shallow local minima crowd the LP.
        int added = 0;
        for (const auto &pt : res.minimizers) {
            if (added < opts.batch && pt.value <= 0.5 * res.min_value) {
                add_point(pt.s_side, pt.complement_side);
                added++;
            }
        }
    }

    double scale = 0.0;
    for (double v : c) {
        scale = std::max(scale, std::abs(v));
    }
    if (scale > 0.0) {
        for (double &v : c) {
            v /= scale;
        }
        cert.oracle_min /= scale;
        cert.grid_min /= scale;
    }
    cert.witness.coeffs = c;
    cert.violation = dot(c, target.values);
    cert.point_count = points.size();
    cert.min_over_points = INFINITY;
    for (const auto &p : points) {
        cert.min_over_points = std::min(cert.min_over_points, dot(c, p));
    }
    return cert;
}

}  // namespace ckasim
