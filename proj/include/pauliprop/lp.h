// Copyright 2026 The pauliprop Authors
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

#ifndef PAULIPROP_LP_H
#define PAULIPROP_LP_H

#include <Eigen/Dense>
#include <cstddef>

namespace pauliprop {

/// Solution of min c^T x subject to A x = b, x >= 0.
struct LpSolution {
    double value = 0;
    Eigen::VectorXd x;
    /// Dual multipliers y with c - A^T y >= 0 at optimality.
    Eigen::VectorXd y;
    size_t pivots = 0;
    /// max |A x - b|.
    double primal_residual = 0;
    /// max(0, max_j (A^T y - c)_j).
    double dual_violation = 0;
    /// c^T x - b^T y.
    double gap = 0;
};

/// Dense two-phase tableau simplex. Dantzig pricing, switching to Bland's
/// rule after a run of degenerate pivots. Throws Solver if the problem is
/// infeasible, unbounded, or the pivot limit is hit.
LpSolution solve_lp(const Eigen::MatrixXd &a, const Eigen::VectorXd &b, const Eigen::VectorXd &c);

}  // namespace pauliprop

#endif
