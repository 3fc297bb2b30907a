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

#ifndef CKASIM_LP_H
#define CKASIM_LP_H

#include <cstddef>
#include <vector>

namespace ckasim {

/// Bland: smallest-index entering and leaving choices throughout.
/// Hybrid: largest reduced cost and largest pivot among ratio ties, falling
/// back to Bland's rule after a streak of degenerate pivots.
enum class Pricing { Bland, Hybrid };

struct SimplexOptions {
    Pricing pricing = Pricing::Hybrid;
    int degenerate_switch = 50;
    double tolerance = 1e-10;
    double pivot_tolerance = 1e-9;  // relative to max(1, max |w|)
    long long max_iterations = 200000;
    int refactor_every = 100;
    long long stall_window = 2000;  // pivots without objective progress
};

enum class LpStatus { Optimal, Unbounded };

/// Revised simplex for   maximize c.x  subject to  A x = b, x >= 0,
/// with an explicit dense basis inverse. Degenerate stalls fall back to
/// Bland's rule, so cycling cannot occur. Columns may be
/// appended between solves; the previous optimal basis is the warm start.
class DenseSimplex {
   public:
    /// Rows with negative b are negated internally; duals are reported for
    /// the rows as given.
    explicit DenseSimplex(std::vector<double> b);

    std::size_t rows() const { return b_.size(); }
    std::size_t columns() const { return user_columns_.size(); }

    /// Returns the column index.
    std::size_t add_column(const std::vector<double> &a, double cost);

    /// Declares a feasible starting basis (one column per row). Without one,
    /// the first solve runs a phase with artificial variables.
    void set_basis(const std::vector<std::size_t> &basic);

    /// Throws LpError on a singular basis, infeasibility or the iteration cap.
    LpStatus solve(const SimplexOptions &opts = {});

    double objective() const;
    std::vector<double> primal() const;
    /// Simplex multipliers y = c_B B^{-1}, in the sign convention of the rows as given.
    std::vector<double> duals() const;
    long long iterations() const { return total_iterations_; }
    /// True when the last solve stopped on a stalled objective rather than
    /// on nonpositive reduced costs.
    bool stalled() const { return stalled_; }

   private:
    void refactor();
    double objective_for(const std::vector<double> &costs) const;
    void pivot(std::size_t row, std::size_t col, const std::vector<double> &w);
    std::vector<double> column_times_inverse(std::size_t col) const;
    std::vector<double> multipliers(const std::vector<double> &costs) const;
    LpStatus iterate(const std::vector<double> &costs, const SimplexOptions &opts);
    void phase_one(const SimplexOptions &opts);

    std::vector<double> b_;      // normalized, nonnegative
    std::vector<double> sign_;   // +1 or -1 per row
    std::vector<std::vector<double>> cols_;  // normalized columns
    std::vector<double> costs_;
    std::vector<bool> artificial_;
    std::vector<std::size_t> user_columns_;  // internal index of each added column
    std::vector<std::size_t> basis_;
    std::vector<double> binv_;   // row-major m x m
    std::vector<double> x_b_;
    bool has_basis_ = false;
    long long total_iterations_ = 0;
    int since_refactor_ = 0;
    int refactor_every_ = 100;
    bool stalled_ = false;
};

}  // namespace ckasim

#endif
