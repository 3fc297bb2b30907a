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

#include "ckasim/keyrate.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "ckasim/errors.h"
#include "internal.h"

namespace ckasim {

namespace {

void check_nkp(int n, int k, double p) {
    if (n < 2 || n > kMaxParties || k < 2 || k > n) {
        throw DomainError("need 2 <= k <= N <= " + std::to_string(kMaxParties) + ", got N=" + std::to_string(n) +
                          ", k=" + std::to_string(k));
    }
    if (!(p >= 0.0 && p <= 1.0)) {
        throw DomainError("noise parameter p must lie in [0, 1]");
    }
}

double xlog2x(double x) {
    return x > 0.0 ? x * std::log2(x) : 0.0;
}

RateReport report_from(double h_x_given_e, std::vector<double> leaks, RateMethod method) {
    RateReport r;
    r.h_x_given_e = h_x_given_e;
    r.leak_terms = std::move(leaks);
    r.method = method;
    auto worst = std::max_element(r.leak_terms.begin(), r.leak_terms.end());
    r.worst_bob = static_cast<int>(worst - r.leak_terms.begin()) + 1;
    r.r_unclamped = h_x_given_e - *worst;
    r.r_infinity = std::max(0.0, r.r_unclamped);
    return r;
}

// Largest p in the last bracket where f > 0, i.e. f(result) <= 0 and
// f(result - 1e-9) > 0.
double bisect_root(const std::function<double(double)> &f, double lo, double hi) {
    while (hi - lo > 1e-9) {
        double mid = 0.5 * (lo + hi);
        if (f(mid) > 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return hi;
}

double threshold_of(const std::function<double(double)> &f, const std::string &what) {
    if (!(f(0.0) > 0.0)) {
        throw DomainError(what + ": rate is not positive at p = 0, no sign change to bracket");
    }
    constexpr int kGrid = 100;
    double prev = f(0.0);
    double lo = -1.0;
    double hi = -1.0;
    for (int i = 1; i <= kGrid; i++) {
        double p = static_cast<double>(i) / kGrid;
        double v = f(p);
        if (v > prev + 1e-12) {
            throw NumericalError(what + ": rate is not monotone in p on the bracketing grid", v - prev);
        }
        if (lo < 0.0 && prev > 0.0 && v <= 0.0) {
            lo = static_cast<double>(i - 1) / kGrid;
            hi = p;
        }
        prev = v;
    }
    if (lo < 0.0) {
        throw DomainError(what + ": no sign change of the rate in [0, 1]");
    }
    return bisect_root(f, lo, hi);
}

DensityMatrix pinch_all(DensityMatrix rho) {
    for (int q = 0; q < rho.qubit_count(); q++) {
        rho = measure_computational(rho, q);
    }
    return rho;
}

double leak_for_bob(const DensityMatrix &rho, int bob) {
    DensityMatrix rab = pinch_all(partial_trace(rho, {0, bob}));
    return conditional_entropy(rab, {0}, {1});
}

std::vector<int> range(int from, int to) {
    std::vector<int> v(std::max(0, to - from));
    std::iota(v.begin(), v.end(), from);
    return v;
}

}  // namespace

double binary_entropy(double x) {
    if (!(x >= -1e-12 && x <= 1.0 + 1e-12)) {
        throw DomainError("binary_entropy argument must lie in [0, 1], got " + std::to_string(x));
    }
    x = std::clamp(x, 0.0, 1.0);
    return 0.0 - xlog2x(x) - xlog2x(1.0 - x);
}

ProtocolParams closed_form_params(int n, int k, double p) {
    check_nkp(n, k, p);
    ProtocolParams out;
    out.q_x = 0.5 * (1.0 - std::pow(1.0 - p, n - 1));
    const double q_ab = (n - 1 - (1.0 - p) * (k - 1)) / (2.0 * (n - 1));
    out.q_ab.assign(n - 1, q_ab);
    return out;
}

ProtocolParams closed_form_params(const GhzMixtureSpec &spec) {
    if (spec.is_uniform()) {
        return closed_form_params(spec.n(), spec.k(), spec.noise_p());
    }
    const double p = spec.noise_p();
    ProtocolParams out;
    out.q_x = 0.5 * (1.0 - std::pow(1.0 - p, spec.n() - 1));
    for (int b = 1; b < spec.n(); b++) {
        out.q_ab.push_back(0.5 * (1.0 - (1.0 - p) * spec.entangled_weight(b)));
    }
    return out;
}

std::string to_string(RateMethod m) {
    switch (m) {
        case RateMethod::ClosedForm:
            return "closed_form";
        case RateMethod::EntropyNumeric:
            return "entropy_numeric";
        case RateMethod::MonteCarlo:
            return "monte_carlo";
    }
    return "unknown";
}

RateReport rate_nbb84(const GhzMixtureSpec &spec) {
    ProtocolParams params = closed_form_params(spec);
    std::vector<double> leaks;
    for (double q : params.q_ab) {
        leaks.push_back(binary_entropy(q));
    }
    return report_from(1.0 - binary_entropy(params.q_x), std::move(leaks), RateMethod::ClosedForm);
}

RateReport rate_nbb84(int n, int k, double p) {
    return rate_nbb84(GhzMixtureSpec::uniform(n, k, p));
}

double rate_nbb84_two_log(int n, int k) {
    check_nkp(n, k, 0.0);
    const double a = static_cast<double>(n - k) / (n - 1);
    const double b = static_cast<double>(n + k - 2) / (n - 1);
    return 0.5 * xlog2x(a) + 0.5 * xlog2x(b);
}

double rate_bipartite_concat_unclamped(int n, double p) {
    check_nkp(n, 2, p);
    return (1.0 - 2.0 * binary_entropy(0.5 * p)) / (n - 1);
}

double rate_bipartite_concat(int n, double p) {
    return std::max(0.0, rate_bipartite_concat_unclamped(n, p));
}

RateReport rate_entropy_numeric(const GhzMixtureSpec &spec) {
    const int n = spec.n();
    if (n > dense_qubit_cap()) {
        throw CapacityError(n, dense_qubit_cap(), "rate_entropy_numeric");
    }
    DensityMatrix rho = build_ghz_mixture(spec);
    PureState psi = spec.noise_p() == 0.0 ? build_purification(spec) : purify(rho);
    const int total = psi.qubit_count();

    std::vector<int> keep{0};
    for (int q = n; q < total; q++) {
        keep.push_back(q);
    }
    DensityMatrix rho_xe = measure_computational(partial_trace(psi, keep), 0);
    const double h_x_given_e = conditional_entropy(rho_xe, std::vector<int>{0}, range(1, total - n + 1));

    std::vector<double> leaks;
    for (int b = 1; b < n; b++) {
        leaks.push_back(leak_for_bob(rho, b));
    }
    return report_from(h_x_given_e, std::move(leaks), RateMethod::EntropyNumeric);
}

SeparableCheckReport verify_no_key_separable(const SeparableSpec &spec, double tol) {
    spec.validate();
    const Partition &part = spec.partition;
    const int n = part.n();
    if (!part.contains(0)) {
        throw DomainError("verify_no_key_separable: Alice must be on the s_alpha side of the partition");
    }
    if (n > dense_qubit_cap()) {
        throw CapacityError(n, dense_qubit_cap(), "verify_no_key_separable");
    }
    int m = 1;
    while ((std::size_t{1} << m) < spec.terms.size()) {
        m++;
    }
    if (n + m > pure_qubit_cap()) {
        throw CapacityError(n + m, pure_qubit_cap(), "verify_no_key_separable purification");
    }

    std::vector<int> concat = part.s_alpha();
    auto comp = part.complement();
    concat.insert(concat.end(), comp.begin(), comp.end());
    std::vector<int> order(n);
    for (int pos = 0; pos < n; pos++) {
        order[concat[pos]] = pos;
    }
    const std::size_t e_dim = std::size_t{1} << m;
    std::vector<Complex> amps((std::size_t{1} << n) * e_dim);
    for (std::size_t j = 0; j < spec.terms.size(); j++) {
        const auto &t = spec.terms[j];
        PureState v = permute_qubits(tensor(t.s_side, t.complement_side), order);
        const double w = std::sqrt(t.q);
        for (std::size_t x = 0; x < v.dim(); x++) {
            amps[x * e_dim + j] += w * v[x];
        }
    }
    PureState psi = PureState::normalized(std::move(amps));
    const std::vector<int> e_qubits = range(n, n + m);

    SeparableCheckReport out;
    out.n = n;
    out.complement_bobs = comp;

    std::vector<int> keep{0};
    keep.insert(keep.end(), e_qubits.begin(), e_qubits.end());
    DensityMatrix rho_xe = measure_computational(partial_trace(psi, keep), 0);
    out.h_x_given_e_total = conditional_entropy(rho_xe, std::vector<int>{0}, range(1, m + 1));
    DensityMatrix rho_xf = pinch_all(rho_xe);
    out.h_x_given_f = conditional_entropy(rho_xf, std::vector<int>{0}, range(1, m + 1));

    DensityMatrix rho = partial_trace(psi, range(0, n));
    for (int b = 1; b < n; b++) {
        out.leak_all.push_back(leak_for_bob(rho, b));
    }

    out.chain_holds = out.h_x_given_f >= out.h_x_given_e_total - tol;
    out.min_leak = INFINITY;
    for (int l : comp) {
        std::vector<int> k2{0, l};
        k2.insert(k2.end(), e_qubits.begin(), e_qubits.end());
        DensityMatrix rho_xyf = pinch_all(partial_trace(psi, k2));
        const double h_y = out.leak_all[l - 1];
        const double h_yf = conditional_entropy(rho_xyf, std::vector<int>{0}, range(1, m + 2));
        out.h_x_given_y.push_back(h_y);
        out.h_x_given_yf.push_back(h_yf);
        out.min_leak = std::min(out.min_leak, h_y);
        out.chain_holds = out.chain_holds && h_y >= h_yf - tol && std::abs(h_yf - out.h_x_given_f) <= tol &&
                          h_y >= out.h_x_given_e_total - tol;
    }
    out.implied_rate = out.h_x_given_e_total - *std::max_element(out.leak_all.begin(), out.leak_all.end());
    out.passes = out.chain_holds && out.implied_rate <= tol;
    return out;
}

double noise_threshold(int n, int k) {
    check_nkp(n, k, 0.0);
    return threshold_of([&](double p) { return rate_nbb84(n, k, p).r_unclamped; },
                        "noise_threshold(N=" + std::to_string(n) + ", k=" + std::to_string(k) + ")");
}

double concat_noise_threshold(int n) {
    return threshold_of([&](double p) { return rate_bipartite_concat_unclamped(n, p); },
                        "concat_noise_threshold(N=" + std::to_string(n) + ")");
}

std::optional<double> advantage_crossing(int n, int k) {
    check_nkp(n, k, 0.0);
    auto gap = [&](double p) { return rate_nbb84(n, k, p).r_infinity - rate_bipartite_concat(n, p); };
    if (!(gap(0.0) > 0.0)) {
        return std::nullopt;
    }
    constexpr int kGrid = 1000;
    for (int i = 1; i <= kGrid; i++) {
        double p = static_cast<double>(i) / kGrid;
        if (gap(p) < 0.0) {
            double lo = static_cast<double>(i - 1) / kGrid;
            double hi = p;
            while (hi - lo > 1e-9) {
                double mid = 0.5 * (lo + hi);
                if (gap(mid) > 0.0) {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            return 0.5 * (lo + hi);
        }
    }
    return std::nullopt;
}

}  // namespace ckasim
