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

#ifndef CKASIM_KEYRATE_H
#define CKASIM_KEYRATE_H

// Asymptotic key rates of the N-BB84 conference key protocol: closed forms,
// their entropy-based counterparts on dense states, and the no-key check for
// partition-separable states.

#include <optional>
#include <string>
#include <vector>

#include "ckasim/states.h"

namespace ckasim {

/// h(x) in bits. Accepts x within 1e-12 of [0, 1] and clamps.
double binary_entropy(double x);

struct ProtocolParams {
    double q_x = 0.0;           // probability of odd X parity in a test round
    std::vector<double> q_ab;   // q_ab[i] for Bob i+1: P(Alice and Bob disagree in Z)
};

ProtocolParams closed_form_params(int n, int k, double p);
/// Same for arbitrary subset weights: Q_AB_i = (1 - (1-p) w_i) / 2 with w_i
/// the total weight of subsets containing Bob i.
ProtocolParams closed_form_params(const GhzMixtureSpec &spec);

enum class RateMethod { ClosedForm, EntropyNumeric, MonteCarlo };
std::string to_string(RateMethod m);

struct RateReport {
    double r_infinity = 0.0;   // max(0, r_unclamped)
    double r_unclamped = 0.0;  // h_x_given_e - max leak
    double h_x_given_e = 0.0;
    std::vector<double> leak_terms;  // H(X|Y_i) for Bob i+1
    int worst_bob = 1;               // party index of the largest leak
    RateMethod method = RateMethod::ClosedForm;
};

/// 1 - h(Q_X) - max_i h(Q_AB_i), clamped at zero.
RateReport rate_nbb84(int n, int k, double p);
RateReport rate_nbb84(const GhzMixtureSpec &spec);

/// Noiseless rate written with two logarithms of (N-k)/(N-1) and (N+k-2)/(N-1).
double rate_nbb84_two_log(int n, int k);

/// Concatenated bipartite BB84 between Alice and each Bob.
double rate_bipartite_concat(int n, double p);
double rate_bipartite_concat_unclamped(int n, double p);

/// Entropy rate from dense states. Eve holds the purification: the
/// subset-index register when p = 0, a spectral purification otherwise.
RateReport rate_entropy_numeric(const GhzMixtureSpec &spec);

struct SeparableCheckReport {
    int n = 0;
    double h_x_given_e_total = 0.0;  // Eve holds the full purification
    double h_x_given_f = 0.0;        // Eve holds only the dephased term index
    std::vector<int> complement_bobs;
    std::vector<double> h_x_given_y;    // per complement Bob
    std::vector<double> h_x_given_yf;   // per complement Bob
    std::vector<double> leak_all;       // H(X|Y_i) for every Bob i = 1..N-1
    double min_leak = 0.0;              // over complement Bobs
    double implied_rate = 0.0;          // h_x_given_e_total - max over all Bobs
    bool chain_holds = false;
    bool passes = false;
};

/// Builds the purification sum_j sqrt(q_j) |phi_j>|chi_j>|j> of a
/// partition-separable state, measures Z everywhere relevant and checks
/// H(X|Y_l) >= H(X|Y_l F) = H(X|F) >= H(X|E_tot) for every Bob l across the cut.
SeparableCheckReport verify_no_key_separable(const SeparableSpec &spec, double tol = 1e-9);

/// Root of the signed closed-form rate in p, by bisection to 1e-9 after a
/// monotonicity check on a 100-point grid. DomainError when r(N,k,0) <= 0.
double noise_threshold(int n, int k);
double concat_noise_threshold(int n);

/// Noise level where the N-BB84 rate drops below the concatenated rate, if
/// the two curves cross in (0, 1).
std::optional<double> advantage_crossing(int n, int k);

}  // namespace ckasim

#endif
