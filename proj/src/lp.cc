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

#include "pauliprop/lp.h"

#include <cmath>
#include <string>
#include <vector>

#include "pauliprop/error.h"

namespace pauliprop {

namespace {

constexpr double kPivotTolerance = 1e-11;
constexpr double kCostTolerance = 1e-11;
constexpr size_t kDegenerateRunBeforeBland = 50;

class Tableau {
  public:
    Tableau(const Eigen::MatrixXd &a, const Eigen::VectorXd &b)
        : m_(a.rows()), n_(a.cols()), t_(Eigen::MatrixXd::Zero(m_ + 1, n_ + m_ + 1)), basis_(m_), sign_(m_) {
        for (size_t i = 0; i < m_; i++) {
            sign_[i] = b(i) < 0 ? -1.0 : 1.0;
            t_.row(i).head(n_) = sign_[i] * a.row(i);
            t_(i, n_ + i) = 1;
            t_(i, rhs()) = sign_[i] * b(i);
            basis_[i] = n_ + i;
        }
    }

    size_t rhs() const {
        return n_ + m_;
    }

    /// Loads the objective row for costs c over all n + m columns.
    void set_costs(const Eigen::VectorXd &c) {
        costs_ = c;
        for (size_t j = 0; j <= rhs(); j++) {
            double v = j < rhs() ? c(j) : 0.0;
            for (size_t i = 0; i < m_; i++) {
                v -= c(basis_[i]) * t_(i, j);
            }
            t_(m_, j) = v;
        }
    }

    /// Runs simplex iterations over columns [0, limit). Returns false if unbounded.
    bool optimize(size_t limit, size_t &pivots, size_t max_pivots) {
        size_t degenerate = 0;
        while (true) {
            bool bland = degenerate >= kDegenerateRunBeforeBland;
            size_t enter = limit;
            double best = -kCostTolerance;
            for (size_t j = 0; j < limit; j++) {
                if (t_(m_, j) < best) {
                    enter = j;
                    if (bland) {
                        break;
                    }
                    best = t_(m_, j);
                }
            }
            if (enter == limit) {
                return true;
            }
            size_t leave = m_;
            double ratio = 0;
            for (size_t i = 0; i < m_; i++) {
                double p = t_(i, enter);
                if (p > kPivotTolerance) {
                    double r = t_(i, rhs()) / p;
                    if (leave == m_ || r < ratio - 1e-14 || (std::abs(r - ratio) <= 1e-14 && basis_[i] < basis_[leave])) {
                        leave = i;
                        ratio = r;
                    }
                }
            }
            if (leave == m_) {
                return false;
            }
            degenerate = ratio <= 1e-14 ? degenerate + 1 : 0;
            pivot(leave, enter);
            if (++pivots > max_pivots) {
                fail(ErrorCode::Solver, "simplex pivot limit reached");
            }
        }
    }

    void pivot(size_t row, size_t col) {
        t_.row(row) /= t_(row, col);
        for (size_t i = 0; i <= m_; i++) {
            if (i != row) {
                double f = t_(i, col);
                if (f != 0) {
                    t_.row(i) -= f * t_.row(row);
                }
            }
        }
        basis_[row] = col;
    }

    /// Pivots basic artificial variables out where possible.
    void drive_out_artificials(size_t &pivots) {
        for (size_t i = 0; i < m_; i++) {
            if (basis_[i] < n_) {
                continue;
            }
            size_t best = n_;
            double mag = 1e-9;
            for (size_t j = 0; j < n_; j++) {
                if (std::abs(t_(i, j)) > mag) {
                    mag = std::abs(t_(i, j));
                    best = j;
                }
            }
            if (best < n_) {
                pivot(i, best);
                pivots++;
            }
        }
    }

    double objective() const {
        return -t_(m_, rhs());
    }

    Eigen::VectorXd primal() const {
        Eigen::VectorXd x = Eigen::VectorXd::Zero(n_);
        for (size_t i = 0; i < m_; i++) {
            if (basis_[i] < n_) {
                x(basis_[i]) = std::max(0.0, t_(i, rhs()));
            }
        }
        return x;
    }

    /// y_i from the reduced costs of the (zero-cost) artificial columns.
    Eigen::VectorXd dual() const {
        Eigen::VectorXd y(m_);
        for (size_t i = 0; i < m_; i++) {
            y(i) = -sign_[i] * t_(m_, n_ + i);
        }
        return y;
    }

  private:
    size_t m_;
    size_t n_;
    Eigen::MatrixXd t_;
    std::vector<size_t> basis_;
    std::vector<double> sign_;
    Eigen::VectorXd costs_;
};

}  // namespace

LpSolution solve_lp(const Eigen::MatrixXd &a, const Eigen::VectorXd &b, const Eigen::VectorXd &c) {
    size_t m = a.rows();
    size_t n = a.cols();
    if (static_cast<size_t>(b.size()) != m || static_cast<size_t>(c.size()) != n) {
        fail(ErrorCode::InvalidArgument, "LP dimensions do not match");
    }
    Tableau t(a, b);
    LpSolution out;
    size_t max_pivots = 50 * (m + n) + 1000;

    Eigen::VectorXd phase1 = Eigen::VectorXd::Zero(n + m);
    phase1.tail(m).setOnes();
    t.set_costs(phase1);
    t.optimize(n + m, out.pivots, max_pivots);
    double scale = 1 + b.cwiseAbs().sum();
    if (t.objective() > 1e-9 * scale) {
        fail(ErrorCode::Solver, "LP is infeasible (phase one residual " + std::to_string(t.objective()) + ")");
    }
    t.drive_out_artificials(out.pivots);

    Eigen::VectorXd phase2 = Eigen::VectorXd::Zero(n + m);
    phase2.head(n) = c;
    t.set_costs(phase2);
    if (!t.optimize(n, out.pivots, max_pivots)) {
        fail(ErrorCode::Solver, "LP is unbounded");
    }

    out.x = t.primal();
    out.y = t.dual();
    out.value = c.dot(out.x);
    out.primal_residual = m == 0 ? 0.0 : (a * out.x - b).cwiseAbs().maxCoeff();
    out.dual_violation = n == 0 ? 0.0 : std::max(0.0, (a.transpose() * out.y - c).maxCoeff());
    out.gap = out.value - b.dot(out.y);
    return out;
}

}  // namespace pauliprop
