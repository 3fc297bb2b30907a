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

#include "ckasim/lp.h"

#include <algorithm>
#include <cmath>

#include "ckasim/errors.h"

namespace ckasim {

DenseSimplex::DenseSimplex(std::vector<double> b) : b_(std::move(b)) {
    if (b_.empty()) {
        throw DomainError("DenseSimplex needs at least one row");
    }
    sign_.resize(b_.size());
    for (std::size_t i = 0; i < b_.size(); i++) {
        sign_[i] = b_[i] < 0.0 ? -1.0 : 1.0;
        b_[i] *= sign_[i];
    }
}

std::size_t DenseSimplex::add_column(const std::vector<double> &a, double cost) {
    if (a.size() != rows()) {
        throw DomainError("DenseSimplex column has the wrong length");
    }
    std::vector<double> col(a.size());
    for (std::size_t i = 0; i < a.size(); i++) {
        col[i] = a[i] * sign_[i];
    }
    cols_.push_back(std::move(col));
    costs_.push_back(cost);
    artificial_.push_back(false);
    user_columns_.push_back(cols_.size() - 1);
    return user_columns_.size() - 1;
}

void DenseSimplex::set_basis(const std::vector<std::size_t> &basic) {
    if (basic.size() != rows()) {
        throw DomainError("basis needs one column per row");
    }
    basis_.clear();
    for (std::size_t j : basic) {
        if (j >= columns()) {
            throw DomainError("basis names an unknown column");
        }
        basis_.push_back(user_columns_[j]);
    }
    refactor();
    for (double v : x_b_) {
        if (v < -1e-9) {
            throw DomainError("declared basis is not primal feasible");
        }
    }
    has_basis_ = true;
}

void DenseSimplex::refactor() {
    const std::size_t m = rows();
    // Gauss-Jordan on [B | I] with partial pivoting.
    std::vector<double> a(m * m);
    for (std::size_t c = 0; c < m; c++) {
        const auto &col = cols_[basis_[c]];
        for (std::size_t r = 0; r < m; r++) {
            a[r * m + c] = col[r];
        }
    }
    std::vector<double> inv(m * m, 0.0);
    for (std::size_t i = 0; i < m; i++) {
        inv[i * m + i] = 1.0;
    }
    for (std::size_t c = 0; c < m; c++) {
        std::size_t piv = c;
        for (std::size_t r = c + 1; r < m; r++) {
            if (std::abs(a[r * m + c]) > std::abs(a[piv * m + c])) {
                piv = r;
            }
        }
        if (std::abs(a[piv * m + c]) < 1e-13) {
            throw LpError("singular simplex basis", total_iterations_);
        }
        if (piv != c) {
            for (std::size_t k = 0; k < m; k++) {
                std::swap(a[piv * m + k], a[c * m + k]);
                std::swap(inv[piv * m + k], inv[c * m + k]);
            }
        }
        const double d = 1.0 / a[c * m + c];
        for (std::size_t k = 0; k < m; k++) {
            a[c * m + k] *= d;
            inv[c * m + k] *= d;
        }
        for (std::size_t r = 0; r < m; r++) {
            const double f = a[r * m + c];
            if (r == c || f == 0.0) {
                continue;
            }
            for (std::size_t k = 0; k < m; k++) {
                a[r * m + k] -= f * a[c * m + k];
                inv[r * m + k] -= f * inv[c * m + k];
            }
        }
    }
    binv_ = std::move(inv);
    x_b_.assign(m, 0.0);
    for (std::size_t r = 0; r < m; r++) {
        double s = 0.0;
        for (std::size_t k = 0; k < m; k++) {
            s += binv_[r * m + k] * b_[k];
        }
        x_b_[r] = s;
    }
    since_refactor_ = 0;
}

std::vector<double> DenseSimplex::column_times_inverse(std::size_t col) const {
    const std::size_t m = rows();
    const auto &a = cols_[col];
    std::vector<double> w(m, 0.0);
    for (std::size_t r = 0; r < m; r++) {
        double s = 0.0;
        const double *row = &binv_[r * m];
        for (std::size_t k = 0; k < m; k++) {
            s += row[k] * a[k];
        }
        w[r] = s;
    }
    return w;
}

std::vector<double> DenseSimplex::multipliers(const std::vector<double> &costs) const {
    const std::size_t m = rows();
    std::vector<double> y(m, 0.0);
    for (std::size_t r = 0; r < m; r++) {
        const double cb = costs[basis_[r]];
        if (cb == 0.0) {
            continue;
        }
        const double *row = &binv_[r * m];
        for (std::size_t k = 0; k < m; k++) {
            y[k] += cb * row[k];
        }
    }
    return y;
}

void DenseSimplex::pivot(std::size_t row, std::size_t col, const std::vector<double> &w) {
    const std::size_t m = rows();
    const double wr = w[row];
    double *prow = &binv_[row * m];
    for (std::size_t k = 0; k < m; k++) {
        prow[k] /= wr;
    }
    const double step = x_b_[row] / wr;
    for (std::size_t r = 0; r < m; r++) {
        if (r == row || w[r] == 0.0) {
            continue;
        }
        double *rr = &binv_[r * m];
        for (std::size_t k = 0; k < m; k++) {
            rr[k] -= w[r] * prow[k];
        }
        x_b_[r] -= w[r] * step;
    }
    x_b_[row] = step;
    basis_[row] = col;
    if (++since_refactor_ >= refactor_every_) {
        refactor();
    }
}

LpStatus DenseSimplex::iterate(const std::vector<double> &costs, const SimplexOptions &opts) {
    const std::size_t m = rows();
    const std::size_t ncols = cols_.size();
    std::vector<bool> in_basis(ncols, false);
    for (std::size_t j : basis_) {
        in_basis[j] = true;
    }
    long long local = 0;
    int degenerate_streak = 0;
    double best_obj = -INFINITY;
    long long best_at = 0;
    bool refactored_on_stall = false;
    while (true) {
        if (local++ >= opts.max_iterations) {
            throw LpError("simplex iteration cap reached", total_iterations_);
        }
        // Rounding can make tiny pivots oscillate; stop once the objective
        // has not improved for a whole window.
        const double obj = objective_for(costs);
        if (obj > best_obj + 1e-13 * std::max(1.0, std::abs(obj))) {
            best_obj = obj;
            best_at = local;
        } else if (local - best_at > opts.stall_window) {
            if (!refactored_on_stall) {
                refactor();
                refactored_on_stall = true;
                best_at = local;
                continue;
            }
            stalled_ = true;
            return LpStatus::Optimal;
        }
        const bool bland = opts.pricing == Pricing::Bland || degenerate_streak >= opts.degenerate_switch;
        std::vector<double> y = multipliers(costs);
        // Bland: smallest index with positive reduced cost. Dantzig: largest.
        std::size_t enter = ncols;
        double best_dj = opts.tolerance;
        for (std::size_t j = 0; j < ncols; j++) {
            if (in_basis[j] || artificial_[j]) {
                continue;
            }
            double dj = costs[j];
            const auto &a = cols_[j];
            for (std::size_t k = 0; k < m; k++) {
                dj -= y[k] * a[k];
            }
            if (dj > best_dj) {
                enter = j;
                if (bland) {
                    break;
                }
                best_dj = dj;
            }
        }
        if (enter == ncols) {
            if (since_refactor_ == 0) {
                return LpStatus::Optimal;
            }
            // Confirm optimality on a freshly factored basis.
            refactor();
            continue;
        }
        std::vector<double> w = column_times_inverse(enter);
        double w_max = 1.0;
        for (double v : w) {
            w_max = std::max(w_max, std::abs(v));
        }
        const double pivot_floor = opts.pivot_tolerance * w_max;
        std::size_t leave = m;
        double best = INFINITY;
        for (std::size_t r = 0; r < m; r++) {
            if (w[r] > pivot_floor) {
                double ratio = std::max(0.0, x_b_[r]) / w[r];
                bool take = ratio < best - 1e-12;
                if (!take && leave < m && std::abs(ratio - best) <= 1e-12) {
                    take = bland ? basis_[r] < basis_[leave] : w[r] > w[leave];
                }
                if (take) {
                    best = std::min(best, ratio);
                    leave = r;
                }
            }
        }
        if (leave == m) {
            return LpStatus::Unbounded;
        }
        degenerate_streak = best <= 1e-12 ? degenerate_streak + 1 : 0;
        in_basis[basis_[leave]] = false;
        in_basis[enter] = true;
        pivot(leave, enter, w);
        total_iterations_++;
    }
}

void DenseSimplex::phase_one(const SimplexOptions &opts) {
    const std::size_t m = rows();
    const std::size_t first = cols_.size();
    for (std::size_t i = 0; i < m; i++) {
        std::vector<double> e(m, 0.0);
        e[i] = 1.0;
        cols_.push_back(std::move(e));
        costs_.push_back(0.0);
        artificial_.push_back(true);
    }
    basis_.resize(m);
    for (std::size_t i = 0; i < m; i++) {
        basis_[i] = first + i;
    }
    refactor();
    std::vector<double> phase_costs(cols_.size(), 0.0);
    for (std::size_t i = 0; i < m; i++) {
        phase_costs[first + i] = -1.0;
    }
    iterate(phase_costs, opts);
    double infeas = 0.0;
    for (std::size_t r = 0; r < m; r++) {
        if (artificial_[basis_[r]]) {
            infeas += x_b_[r];
        }
    }
    if (infeas > 1e-8) {
        throw LpError("linear program is infeasible", total_iterations_);
    }
    // Drive zero-level artificials out of the basis where possible.
    for (std::size_t r = 0; r < m; r++) {
        if (!artificial_[basis_[r]]) {
            continue;
        }
        for (std::size_t j = 0; j < first; j++) {
            if (artificial_[j] || std::find(basis_.begin(), basis_.end(), j) != basis_.end()) {
                continue;
            }
            std::vector<double> w = column_times_inverse(j);
            if (std::abs(w[r]) > 1e-9) {
                pivot(r, j, w);
                break;
            }
        }
    }
    has_basis_ = true;
}

LpStatus DenseSimplex::solve(const SimplexOptions &opts) {
    if (columns() == 0) {
        throw DomainError("DenseSimplex has no columns");
    }
    refactor_every_ = std::max(1, opts.refactor_every);
    stalled_ = false;
    if (!has_basis_) {
        phase_one(opts);
    }
    return iterate(costs_, opts);
}

double DenseSimplex::objective_for(const std::vector<double> &costs) const {
    double s = 0.0;
    for (std::size_t r = 0; r < rows(); r++) {
        s += costs[basis_[r]] * x_b_[r];
    }
    return s;
}

double DenseSimplex::objective() const {
    return objective_for(costs_);
}

std::vector<double> DenseSimplex::primal() const {
    std::vector<double> x(cols_.size(), 0.0);
    for (std::size_t r = 0; r < rows(); r++) {
        x[basis_[r]] = std::max(0.0, x_b_[r]);
    }
    std::vector<double> out;
    for (std::size_t j : user_columns_) {
        out.push_back(x[j]);
    }
    return out;
}

std::vector<double> DenseSimplex::duals() const {
    std::vector<double> y = multipliers(costs_);
    for (std::size_t i = 0; i < rows(); i++) {
        y[i] *= sign_[i];
    }
    return y;
}

}  // namespace ckasim
