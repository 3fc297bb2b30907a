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

#include "ckasim/states.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

#include "ckasim/errors.h"
#include "internal.h"

namespace ckasim {

namespace {

constexpr std::uint64_t kMaxEnumeratedTerms = std::uint64_t{1} << 20;

void check_probability(double p, const char *what) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw DomainError(std::string(what) + " must lie in [0, 1], got " + std::to_string(p));
    }
}

void check_nk(int n, int k) {
    if (n < 2 || n > kMaxParties) {
        throw DomainError("party count N must lie in [2, " + std::to_string(kMaxParties) + "], got " +
                          std::to_string(n));
    }
    if (k < 2 || k > n) {
        throw DomainError("entangled-party count k must satisfy 2 <= k <= N, got k=" + std::to_string(k) +
                          ", N=" + std::to_string(n));
    }
}

void validate_terms(int n, int k, std::vector<WeightedSubset> &terms) {
    if (terms.empty()) {
        throw DomainError("weighted GHZ mixture needs at least one term");
    }
    double total = 0.0;
    for (auto &t : terms) {
        std::sort(t.parties.begin(), t.parties.end());
        if (static_cast<int>(t.parties.size()) != k) {
            throw DomainError("every mixture subset must contain exactly k parties");
        }
        if (std::adjacent_find(t.parties.begin(), t.parties.end()) != t.parties.end()) {
            throw DomainError("mixture subset repeats a party");
        }
        if (t.parties.front() != 0) {
            throw DomainError("every mixture subset must contain Alice (party 0)");
        }
        if (t.parties.back() >= n) {
            throw DomainError("mixture subset names a party outside [0, N)");
        }
        if (!(t.q >= 0.0)) {
            throw DomainError("mixture weights must be nonnegative");
        }
        total += t.q;
    }
    if (std::abs(total - 1.0) > 1e-9) {
        throw DomainError("mixture weights sum to " + std::to_string(total) + ", expected 1");
    }
    auto sorted = terms;
    std::sort(sorted.begin(), sorted.end(),
              [](const WeightedSubset &a, const WeightedSubset &b) { return a.parties < b.parties; });
    for (std::size_t i = 1; i < sorted.size(); i++) {
        if (sorted[i].parties == sorted[i - 1].parties) {
            throw DomainError("mixture subset listed twice");
        }
    }
}

std::uint64_t party_bit(int party) {
    return std::uint64_t{1} << party;
}

}  // namespace

std::uint64_t binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (int i = 0; i < k; i++) {
        const std::uint64_t g = std::gcd(r, static_cast<std::uint64_t>(i + 1));
        r = (r / g) * (static_cast<std::uint64_t>(n - i) / ((i + 1) / g));
    }
    return r;
}

// ---------------------------------------------------------------- GhzMixtureSpec

GhzMixtureSpec::GhzMixtureSpec(int n, int k, double noise_p, std::optional<std::vector<WeightedSubset>> terms)
    : n_(n), k_(k), noise_p_(noise_p), explicit_terms_(std::move(terms)) {
}

GhzMixtureSpec GhzMixtureSpec::uniform(int n, int k, double noise_p) {
    check_nk(n, k);
    check_probability(noise_p, "noise parameter p");
    return GhzMixtureSpec(n, k, noise_p, std::nullopt);
}

GhzMixtureSpec GhzMixtureSpec::weighted(int n, int k, std::vector<WeightedSubset> terms, double noise_p) {
    check_nk(n, k);
    check_probability(noise_p, "noise parameter p");
    validate_terms(n, k, terms);
    return GhzMixtureSpec(n, k, noise_p, std::move(terms));
}

std::uint64_t GhzMixtureSpec::term_count() const {
    return explicit_terms_ ? explicit_terms_->size() : binomial(n_ - 1, k_ - 1);
}

std::optional<UniformWeight> GhzMixtureSpec::uniform_weight() const {
    if (explicit_terms_) {
        return std::nullopt;
    }
    return UniformWeight{binomial(n_ - 1, k_ - 1)};
}

std::vector<WeightedSubset> GhzMixtureSpec::terms() const {
    if (explicit_terms_) {
        return *explicit_terms_;
    }
    const std::uint64_t count = term_count();
    if (count > kMaxEnumeratedTerms) {
        throw CapacityError(static_cast<int>(std::bit_width(count)), 20, "GHZ mixture enumeration (log2 terms)");
    }
    const double q = 1.0 / static_cast<double>(count);
    std::vector<WeightedSubset> out;
    out.reserve(count);
    // Lexicographic (k-1)-combinations of the Bobs 1..N-1.
    std::vector<int> combo(k_ - 1);
    std::iota(combo.begin(), combo.end(), 1);
    while (true) {
        WeightedSubset t;
        t.parties.push_back(0);
        t.parties.insert(t.parties.end(), combo.begin(), combo.end());
        t.q = q;
        out.push_back(std::move(t));
        int i = k_ - 2;
        while (i >= 0 && combo[i] == n_ - 1 - (k_ - 2 - i)) {
            i--;
        }
        if (i < 0) {
            break;
        }
        combo[i]++;
        for (int j = i + 1; j < k_ - 1; j++) {
            combo[j] = combo[j - 1] + 1;
        }
    }
    return out;
}

double GhzMixtureSpec::entangled_weight(int party) const {
    if (party < 0 || party >= n_) {
        throw DomainError("party index out of range");
    }
    if (party == 0) {
        return 1.0;
    }
    if (!explicit_terms_) {
        return static_cast<double>(k_ - 1) / static_cast<double>(n_ - 1);
    }
    double w = 0.0;
    for (const auto &t : *explicit_terms_) {
        if (std::binary_search(t.parties.begin(), t.parties.end(), party)) {
            w += t.q;
        }
    }
    return w;
}

GhzMixtureSpec GhzMixtureSpec::with_noise(double p) const {
    check_probability(p, "noise parameter p");
    GhzMixtureSpec out = *this;
    out.noise_p_ = p;
    return out;
}

// ---------------------------------------------------------------- Partition

std::string party_label(int party) {
    return party == 0 ? std::string("A") : "B" + std::to_string(party);
}

Partition::Partition(int n, std::vector<int> s_alpha) : n_(n), s_alpha_(std::move(s_alpha)) {
    if (n < 2 || n > kMaxParties) {
        throw DomainError("partition party count out of range");
    }
    s_alpha_ = detail::sorted_unique(s_alpha_, n, "partition");
    if (s_alpha_.empty() || static_cast<int>(s_alpha_.size()) >= n) {
        throw DomainError("partition side must be a nonempty proper subset of the parties");
    }
}

Partition Partition::parse(std::string_view text, int n) {
    auto bar = text.find('|');
    if (bar == std::string_view::npos || text.find('|', bar + 1) != std::string_view::npos) {
        throw DomainError("partition must have the form \"A|B1B2\"");
    }
    auto parse_side = [&](std::string_view side) {
        std::vector<int> parties;
        std::size_t i = 0;
        while (i < side.size()) {
            if (side[i] == 'A') {
                parties.push_back(0);
                i++;
            } else if (side[i] == 'B') {
                std::size_t j = i + 1;
                int idx = 0;
                while (j < side.size() && side[j] >= '0' && side[j] <= '9') {
                    idx = idx * 10 + (side[j] - '0');
                    j++;
                }
                if (j == i + 1 || idx < 1 || idx >= n) {
                    throw DomainError("invalid Bob label in partition \"" + std::string(text) + "\"");
                }
                parties.push_back(idx);
                i = j;
            } else {
                throw DomainError("unexpected character in partition \"" + std::string(text) + "\"");
            }
        }
        return parties;
    };
    std::vector<int> left = parse_side(text.substr(0, bar));
    std::vector<int> right = parse_side(text.substr(bar + 1));
    std::vector<int> all = left;
    all.insert(all.end(), right.begin(), right.end());
    std::sort(all.begin(), all.end());
    if (static_cast<int>(all.size()) != n || std::adjacent_find(all.begin(), all.end()) != all.end()) {
        throw DomainError("partition \"" + std::string(text) + "\" must name every party exactly once");
    }
    return Partition(n, left);
}

std::vector<Partition> Partition::all(int n) {
    if (n < 2 || n > 20) {
        throw DomainError("enumerating bipartitions needs 2 <= N <= 20");
    }
    std::vector<Partition> out;
    const std::uint64_t full = (std::uint64_t{1} << (n - 1)) - 1;
    for (std::uint64_t mask = 0; mask < full; mask++) {
        std::vector<int> side{0};
        for (int b = 1; b < n; b++) {
            if (mask & (std::uint64_t{1} << (b - 1))) {
                side.push_back(b);
            }
        }
        out.emplace_back(n, std::move(side));
    }
    return out;
}

std::vector<int> Partition::complement() const {
    std::vector<int> out;
    for (int p = 0; p < n_; p++) {
        if (!contains(p)) {
            out.push_back(p);
        }
    }
    return out;
}

bool Partition::contains(int party) const {
    return std::binary_search(s_alpha_.begin(), s_alpha_.end(), party);
}

Partition Partition::with_alice_first() const {
    return contains(0) ? *this : Partition(n_, complement());
}

std::string Partition::to_string() const {
    std::string out;
    for (int p : s_alpha_) {
        out += party_label(p);
    }
    out += '|';
    for (int p : complement()) {
        out += party_label(p);
    }
    return out;
}

std::vector<std::string> Partition::labels() const {
    std::vector<std::string> out;
    for (int p : s_alpha_) {
        out.push_back(party_label(p));
    }
    return out;
}

void SeparableSpec::validate() const {
    if (terms.empty()) {
        throw DomainError("separable spec needs at least one term");
    }
    const int s_qubits = static_cast<int>(partition.s_alpha().size());
    const int c_qubits = partition.n() - s_qubits;
    double total = 0.0;
    for (const auto &t : terms) {
        if (!(t.q >= 0.0)) {
            throw DomainError("separable term weights must be nonnegative");
        }
        if (t.s_side.qubit_count() != s_qubits || t.complement_side.qubit_count() != c_qubits) {
            throw DomainError("separable term dimensions do not match the partition");
        }
        total += t.q;
    }
    if (std::abs(total - 1.0) > 1e-9) {
        throw DomainError("separable term weights sum to " + std::to_string(total) + ", expected 1");
    }
}

OverlapStats overlap_stats(const WeightedSubset &alpha, const WeightedSubset &beta, int k) {
    OverlapStats out;
    out.alpha = alpha.parties;
    out.beta = beta.parties;
    std::set_intersection(alpha.parties.begin(), alpha.parties.end(), beta.parties.begin(), beta.parties.end(),
                          std::back_inserter(out.intersection));
    std::set_union(alpha.parties.begin(), alpha.parties.end(), beta.parties.begin(), beta.parties.end(),
                   std::back_inserter(out.union_set));
    out.s_alpha_beta = static_cast<int>(out.intersection.size());
    out.e_coeff = std::sqrt(alpha.q * beta.q) / std::ldexp(1.0, k - out.s_alpha_beta);
    return out;
}

// ---------------------------------------------------------------- dense builders

PureState ghz_term_state(int n, std::span<const int> subset) {
    std::vector<int> s = detail::sorted_unique(subset, n, "ghz_term_state");
    if (s.size() < 2) {
        throw DomainError("GHZ subset needs at least two parties");
    }
    std::size_t s_mask = 0;
    for (int p : s) {
        s_mask |= detail::qubit_mask(p, n);
    }
    const std::size_t dim = std::size_t{1} << n;
    const double amp = M_SQRT1_2 * std::pow(M_SQRT1_2, n - static_cast<int>(s.size()));
    std::vector<Complex> amps(dim);
    for (std::size_t x = 0; x < dim; x++) {
        std::size_t on_s = x & s_mask;
        if (on_s == 0 || on_s == s_mask) {
            amps[x] = amp;
        }
    }
    return PureState::normalized(std::move(amps));
}

DensityMatrix build_ghz_mixture(const GhzMixtureSpec &spec) {
    const int n = spec.n();
    if (n > dense_qubit_cap()) {
        throw CapacityError(n, dense_qubit_cap(), "build_ghz_mixture (use the structured sampling path)");
    }
    const std::size_t dim = std::size_t{1} << n;
    ComplexMatrix m(dim);
    for (const auto &term : spec.terms()) {
        PureState v = ghz_term_state(n, term.parties);
        for (std::size_t r = 0; r < dim; r++) {
            if (v[r] == 0.0) {
                continue;
            }
            for (std::size_t c = 0; c < dim; c++) {
                m(r, c) += term.q * v[r] * std::conj(v[c]);
            }
        }
    }
    DensityMatrix rho = trusted_density(std::move(m), QubitRegisterMap::standard(n));
    if (spec.noise_p() > 0.0) {
        std::vector<int> bobs(n - 1);
        std::iota(bobs.begin(), bobs.end(), 1);
        rho = apply_local_depolarizing(rho, spec.noise_p(), bobs);
    }
    return rho;
}

int purification_ancilla_qubits(const GhzMixtureSpec &spec) {
    const std::uint64_t count = spec.term_count();
    int e = 1;
    while ((std::uint64_t{1} << e) < count) {
        e++;
    }
    return e;
}

PureState build_purification(const GhzMixtureSpec &spec) {
    if (spec.noise_p() != 0.0) {
        throw DomainError("build_purification requires noise_p == 0");
    }
    const int n = spec.n();
    const int e = purification_ancilla_qubits(spec);
    if (n + e > pure_qubit_cap()) {
        throw CapacityError(n + e, pure_qubit_cap(), "build_purification");
    }
    const std::size_t e_dim = std::size_t{1} << e;
    std::vector<Complex> amps((std::size_t{1} << n) * e_dim);
    auto terms = spec.terms();
    for (std::size_t alpha = 0; alpha < terms.size(); alpha++) {
        PureState v = ghz_term_state(n, terms[alpha].parties);
        const double w = std::sqrt(terms[alpha].q);
        for (std::size_t x = 0; x < v.dim(); x++) {
            amps[x * e_dim + alpha] += w * v[x];
        }
    }
    return PureState::normalized(std::move(amps));
}

DensityMatrix apply_local_depolarizing(const DensityMatrix &rho, double p, std::span<const int> targets) {
    check_probability(p, "depolarizing parameter p");
    const int n = rho.qubit_count();
    std::vector<int> ts = detail::sorted_unique(targets, n, "apply_local_depolarizing");
    ComplexMatrix m = rho.matrix();
    if (p == 0.0) {
        return trusted_density(std::move(m), rho.registers());
    }
    const std::size_t dim = m.dim();
    for (int t : ts) {
        const std::size_t mask = detail::qubit_mask(t, n);
        ComplexMatrix next(dim);
        for (std::size_t r = 0; r < dim; r++) {
            for (std::size_t c = 0; c < dim; c++) {
                Complex v = (1.0 - p) * m(r, c);
                if (((r ^ c) & mask) == 0) {
                    const std::size_t r0 = r & ~mask;
                    const std::size_t c0 = c & ~mask;
                    v += 0.5 * p * (m(r0, c0) + m(r0 | mask, c0 | mask));
                }
                next(r, c) = v;
            }
        }
        m = std::move(next);
    }
    return trusted_density(std::move(m), rho.registers());
}

DensityMatrix build_separable_test_state(const SeparableSpec &spec) {
    spec.validate();
    const int n = spec.partition.n();
    if (n > dense_qubit_cap()) {
        throw CapacityError(n, dense_qubit_cap(), "build_separable_test_state");
    }
    // Concatenated order is (s_alpha..., complement...); order[i] locates party i.
    std::vector<int> concat = spec.partition.s_alpha();
    auto comp = spec.partition.complement();
    concat.insert(concat.end(), comp.begin(), comp.end());
    std::vector<int> order(n);
    for (int pos = 0; pos < n; pos++) {
        order[concat[pos]] = pos;
    }
    const std::size_t dim = std::size_t{1} << n;
    ComplexMatrix m(dim);
    for (const auto &term : spec.terms) {
        PureState v = permute_qubits(tensor(term.s_side, term.complement_side), order);
        for (std::size_t r = 0; r < dim; r++) {
            for (std::size_t c = 0; c < dim; c++) {
                m(r, c) += term.q * v[r] * std::conj(v[c]);
            }
        }
    }
    return trusted_density(std::move(m), QubitRegisterMap::standard(n));
}

PureState random_pure_state(int qubits, Rng &rng) {
    std::vector<Complex> amps(std::size_t{1} << qubits);
    for (auto &a : amps) {
        double re = rng.normal();
        double im = rng.normal();
        a = Complex(re, im);
    }
    return PureState::normalized(std::move(amps));
}

SeparableSpec random_separable_spec(const Partition &partition, int terms, Rng &rng) {
    if (terms < 1) {
        throw DomainError("random_separable_spec needs at least one term");
    }
    const int s_qubits = static_cast<int>(partition.s_alpha().size());
    const int c_qubits = partition.n() - s_qubits;
    std::vector<double> w(terms);
    double total = 0.0;
    for (auto &x : w) {
        double u;
        do {
            u = rng.uniform();
        } while (u <= 0.0);
        x = -std::log(u);
        total += x;
    }
    SeparableSpec spec{partition, {}};
    for (int j = 0; j < terms; j++) {
        PureState s = random_pure_state(s_qubits, rng);
        PureState c = random_pure_state(c_qubits, rng);
        spec.terms.push_back(SeparableTerm{w[j] / total, std::move(s), std::move(c)});
    }
    return spec;
}

// ---------------------------------------------------------------- sampling

int Outcome::parity() const {
    return std::popcount(bits) & 1;
}

std::string Outcome::str() const {
    std::string s(n, '0');
    for (int p = 0; p < n; p++) {
        s[p] = bit(p) ? '1' : '0';
    }
    return s;
}

Outcome sample_round(const GhzMixtureSpec &spec, std::span<const Basis> bases, Rng &rng) {
    const int n = spec.n();
    const int k = spec.k();
    if (static_cast<int>(bases.size()) != n) {
        throw DomainError("sample_round needs one basis per party");
    }

    // Draw the GHZ subset of this round.
    std::uint64_t in_s = party_bit(0);
    if (auto uw = spec.uniform_weight()) {
        int bobs[kMaxParties];
        for (int i = 0; i < n - 1; i++) {
            bobs[i] = i + 1;
        }
        for (int i = 0; i < k - 1; i++) {
            int j = i + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - 1 - i)));
            std::swap(bobs[i], bobs[j]);
            in_s |= party_bit(bobs[i]);
        }
    } else {
        auto terms = spec.terms();
        double u = rng.uniform();
        std::size_t pick = terms.size() - 1;
        double acc = 0.0;
        for (std::size_t a = 0; a < terms.size(); a++) {
            acc += terms[a].q;
            if (u < acc) {
                pick = a;
                break;
            }
        }
        for (int p : terms[pick].parties) {
            in_s |= party_bit(p);
        }
    }

    bool any_z_in_s = false;
    for (int p = 0; p < n; p++) {
        if ((in_s & party_bit(p)) && bases[p] == Basis::Z) {
            any_z_in_s = true;
        }
    }

    std::uint64_t bits = 0;
    auto set = [&](int party, int b) {
        if (b) {
            bits |= std::uint64_t{1} << (n - 1 - party);
        }
    };

    if (any_z_in_s) {
        // A Z outcome collapses the GHZ branch to |b...b>; X parties of the
        // subset then see a computational state and get uniform outcomes.
        const int shared = rng.bit();
        for (int p = 0; p < n; p++) {
            if (!(in_s & party_bit(p))) {
                continue;
            }
            set(p, bases[p] == Basis::Z ? shared : rng.bit());
        }
    } else {
        // All of the subset measures X: uniform over even-parity strings.
        int parity = 0;
        int last = -1;
        for (int p = 0; p < n; p++) {
            if (!(in_s & party_bit(p))) {
                continue;
            }
            if (last >= 0) {
                int b = rng.bit();
                parity ^= b;
                set(last, b);
            }
            last = p;
        }
        set(last, parity);
    }
    for (int p = 0; p < n; p++) {
        if (in_s & party_bit(p)) {
            continue;
        }
        // |+> gives "+" in X and a uniform bit in Z.
        set(p, bases[p] == Basis::Z ? rng.bit() : 0);
    }

    const double noise = spec.noise_p();
    if (noise > 0.0) {
        for (int p = 1; p < n; p++) {
            if (rng.uniform() < noise) {
                std::uint64_t mask = std::uint64_t{1} << (n - 1 - p);
                bits = (bits & ~mask) | (rng.bit() ? mask : 0);
            }
        }
    }
    return Outcome{bits, n};
}

}  // namespace ckasim
