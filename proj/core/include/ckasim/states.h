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

#ifndef CKASIM_STATES_H
#define CKASIM_STATES_H

// The GHZ-mixture state family, its purification, partition-separable test
// states, local depolarizing noise and exact per-round outcome sampling.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ckasim/qstate.h"
#include "ckasim/rng.h"

namespace ckasim {

/// Largest party count supported by the structure-exploiting paths.
inline constexpr int kMaxParties = 64;

std::uint64_t binomial(int n, int k);

/// Exact weight 1/denominator of every term of a uniform mixture.
struct UniformWeight {
    std::uint64_t denominator = 1;
    double value() const { return 1.0 / static_cast<double>(denominator); }
};

/// One term of the mixture: a GHZ state on `parties` (sorted, containing 0).
struct WeightedSubset {
    std::vector<int> parties;
    double q = 0.0;
};

/// (N, k, weights, p) description of the GHZ-mixture family. Every subset
/// contains Alice (party 0) and has exactly k parties; weights are
/// nonnegative and sum to one.
class GhzMixtureSpec {
   public:
    /// Uniform weights 1/binom(N-1, k-1) over every admissible subset.
    static GhzMixtureSpec uniform(int n, int k, double noise_p = 0.0);
    static GhzMixtureSpec weighted(int n, int k, std::vector<WeightedSubset> terms, double noise_p = 0.0);

    int n() const { return n_; }
    int k() const { return k_; }
    double noise_p() const { return noise_p_; }
    bool is_uniform() const { return !explicit_terms_.has_value(); }
    /// Number of mixture terms; binom(N-1, k-1) when uniform.
    std::uint64_t term_count() const;
    std::optional<UniformWeight> uniform_weight() const;
    /// Enumerates every term. Throws CapacityError when the uniform family
    /// has more than 2^20 terms.
    std::vector<WeightedSubset> terms() const;
    /// Total weight of the terms in which `party` belongs to the GHZ subset.
    double entangled_weight(int party) const;
    GhzMixtureSpec with_noise(double p) const;

   private:
    GhzMixtureSpec(int n, int k, double noise_p, std::optional<std::vector<WeightedSubset>> terms);

    int n_ = 2;
    int k_ = 2;
    double noise_p_ = 0.0;
    std::optional<std::vector<WeightedSubset>> explicit_terms_;
};

/// Bipartition S | S-bar of the N parties.
class Partition {
   public:
    Partition(int n, std::vector<int> s_alpha);

    /// Parses "A|B1B2" (parties A, B1..B{N-1}); either side may be listed first.
    static Partition parse(std::string_view text, int n);
    /// Every bipartition with Alice on the first side, ordered by the
    /// bitmask of the Bobs that join her.
    static std::vector<Partition> all(int n);

    int n() const { return n_; }
    const std::vector<int> &s_alpha() const { return s_alpha_; }
    std::vector<int> complement() const;
    bool contains(int party) const;
    /// Same cut with the side holding Alice listed first.
    Partition with_alice_first() const;
    std::string to_string() const;
    std::vector<std::string> labels() const;

    bool operator==(const Partition &other) const = default;

   private:
    int n_;
    std::vector<int> s_alpha_;
};

std::string party_label(int party);

/// One pure product term of a partition-separable state.
struct SeparableTerm {
    double q = 0.0;
    PureState s_side;           // on the parties of s_alpha, ascending order
    PureState complement_side;  // on the complement, ascending order
};

struct SeparableSpec {
    Partition partition;
    std::vector<SeparableTerm> terms;

    /// Throws DomainError on weight or dimension violations.
    void validate() const;
};

/// Intersection/union data of two mixture terms and the purification
/// overlap coefficient E = sqrt(q_a q_b) / 2^(k - |intersection|).
struct OverlapStats {
    std::vector<int> alpha;
    std::vector<int> beta;
    std::vector<int> intersection;
    std::vector<int> union_set;
    int s_alpha_beta = 0;
    double e_coeff = 0.0;
};

OverlapStats overlap_stats(const WeightedSubset &alpha, const WeightedSubset &beta, int k);

/// Pure n-qubit vector GHZ(subset) (x) |+> on the remaining parties.
PureState ghz_term_state(int n, std::span<const int> subset);

/// sum_alpha q_alpha GHZ_alpha (x) |+><+|, then local depolarizing noise on every Bob.
DensityMatrix build_ghz_mixture(const GhzMixtureSpec &spec);

/// sum_alpha sqrt(q_alpha) |term_alpha> |e_alpha> with Eve's register on the
/// trailing max(1, ceil(log2 terms)) qubits. Requires noise_p == 0.
PureState build_purification(const GhzMixtureSpec &spec);
int purification_ancilla_qubits(const GhzMixtureSpec &spec);

/// rho -> (1-p) rho + p Tr_t(rho) (x) I/2, applied independently to each target.
DensityMatrix apply_local_depolarizing(const DensityMatrix &rho, double p, std::span<const int> targets);

DensityMatrix build_separable_test_state(const SeparableSpec &spec);

/// Haar-random pure state on `qubits` qubits.
PureState random_pure_state(int qubits, Rng &rng);
/// `terms` random pure product terms across `partition` with Dirichlet(1) weights.
SeparableSpec random_separable_spec(const Partition &partition, int terms, Rng &rng);

enum class Basis : std::uint8_t { X, Z };

/// Outcome bits of one round; party 0 is the most significant bit. For X
/// measurements bit 0 means "+".
struct Outcome {
    std::uint64_t bits = 0;
    int n = 0;

    int bit(int party) const { return static_cast<int>((bits >> (n - 1 - party)) & 1U); }
    int parity() const;
    std::string str() const;
};

/// Exact Born-rule sample of one round of `spec` measured in `bases`.
/// Works for any N up to kMaxParties; no density matrix is formed.
Outcome sample_round(const GhzMixtureSpec &spec, std::span<const Basis> bases, Rng &rng);

}  // namespace ckasim

#endif
