// Copyright 2026 The ejalab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "ejalab/core.hpp"

namespace ejalab::numkernel {

struct ConeLpResult {
    bool feasible = false;
    /// Nonnegative coefficients with generators * coefficients = target (feasible case).
    Vec coefficients;
    /// Unit functional f with f.g >= 0 on generators and f.target < 0 (infeasible case).
    Vec certificate;
    double residual = 0;
};

constexpr int kMaxLpDimension = 64;

namespace detail {

/// Phase-I tableau: min sum(a) s.t. D G t + a = D b, t, a >= 0, D = diag(sign b).
class PhaseOne {
   public:
    PhaseOne(const Mat &g, const Vec &b) : m_((int)g.rows()), k_((int)g.cols()) {
        int width = k_ + m_ + 1;
        tab_ = Mat::Zero(m_, width);
        sign_ = Vec::Ones(m_);
        for (int i = 0; i < m_; i++) {
            if (b[i] < 0) {
                sign_[i] = -1;
            }
            tab_.row(i).head(k_) = sign_[i] * g.row(i);
            tab_(i, k_ + i) = 1;
            tab_(i, width - 1) = sign_[i] * b[i];
        }
        basis_.resize(m_);
        for (int i = 0; i < m_; i++) {
            basis_[i] = k_ + i;
        }
        cost_ = Vec::Zero(width);
        for (int j = 0; j < k_; j++) {
            cost_[j] = -tab_.col(j).sum();
        }
        cost_[width - 1] = -tab_.col(width - 1).sum();
    }

    void solve() {
        const double eps = 1e-12;
        int width = k_ + m_ + 1;
        for (int iter = 0; iter < 50000; iter++) {
            int enter = -1;
            for (int j = 0; j < width - 1; j++) {
                if (cost_[j] < -eps) {
                    enter = j;
                    break;
                }
            }
            if (enter < 0) {
                return;
            }
            int leave = -1;
            double best = 0;
            for (int i = 0; i < m_; i++) {
                if (tab_(i, enter) > eps) {
                    double ratio = tab_(i, width - 1) / tab_(i, enter);
                    if (leave < 0 || ratio < best - eps ||
                        (ratio <= best + eps && basis_[i] < basis_[leave])) {
                        leave = i;
                        best = ratio;
                    }
                }
            }
            if (leave < 0) {
                throw ConvergenceError("cone_lp_feasible: unbounded phase-one objective", 0);
            }
            pivot(leave, enter);
        }
        throw ConvergenceError("cone_lp_feasible: simplex iteration limit", -cost_[width - 1]);
    }

    Vec primal() const {
        Vec t = Vec::Zero(k_);
        for (int i = 0; i < m_; i++) {
            if (basis_[i] < k_) {
                t[basis_[i]] = std::max(0.0, tab_(i, k_ + m_));
            }
        }
        return t;
    }

    /// y with y^T G <= 0 and y^T b = optimal phase-one value.
    Vec dual() const {
        Vec y(m_);
        for (int i = 0; i < m_; i++) {
            y[i] = sign_[i] * (1.0 - cost_[k_ + i]);
        }
        return y;
    }

   private:
    void pivot(int r, int c) {
        tab_.row(r) /= tab_(r, c);
        for (int i = 0; i < m_; i++) {
            if (i != r && tab_(i, c) != 0) {
                tab_.row(i) -= tab_(i, c) * tab_.row(r);
            }
        }
        if (cost_[c] != 0) {
            cost_ -= cost_[c] * tab_.row(r).transpose();
        }
        basis_[r] = c;
    }

    int m_, k_;
    Mat tab_;
    Vec cost_;
    Vec sign_;
    std::vector<int> basis_;
};

}  // namespace detail

/// Decides whether target lies in the cone generated by the columns of
/// `generators`, returning either coefficients or a separating functional.
inline ConeLpResult cone_lp_feasible(const Mat &generators, const Vec &target, double tol = 1e-10) {
    if (generators.rows() != target.size()) {
        throw ValidationError("cone_lp_feasible: dimension mismatch between generators and target");
    }
    if (generators.rows() > kMaxLpDimension) {
        throw ValidationError("cone_lp_feasible: dimension exceeds " + std::to_string(kMaxLpDimension));
    }
    if (generators.cols() == 0 || generators.cwiseAbs().maxCoeff() == 0) {
        throw ValidationError("cone_lp_feasible: degenerate (all-zero) generator set");
    }
    ConeLpResult res;
    double scale = std::max(1.0, target.cwiseAbs().maxCoeff());
    if (target.cwiseAbs().maxCoeff() == 0) {
        res.feasible = true;
        res.coefficients = Vec::Zero(generators.cols());
        return res;
    }
    detail::PhaseOne lp(generators, target);
    lp.solve();
    Vec t = lp.primal();
    res.residual = (generators * t - target).cwiseAbs().maxCoeff();
    if (res.residual <= tol * scale) {
        res.feasible = true;
        res.coefficients = t;
        return res;
    }
    Vec f = -lp.dual();
    double nf = f.norm();
    res.certificate = nf > 0 ? Vec(f / nf) : f;
    return res;
}

/// Certificate check: f >= -tol on every generator, f.target <= -10 tol.
inline bool certificate_separates(const Mat &generators, const Vec &target, const Vec &f, double tol = 1e-10) {
    if (f.size() != target.size()) {
        return false;
    }
    for (int j = 0; j < generators.cols(); j++) {
        if (f.dot(generators.col(j)) < -tol) {
            return false;
        }
    }
    return f.dot(target) <= -10 * tol;
}

/// Membership of `target` in the convex hull of the columns of `points`.
inline ConeLpResult convex_hull_member(const Mat &points, const Vec &target, double tol = 1e-10) {
    Mat g(points.rows() + 1, points.cols());
    g.topRows(points.rows()) = points;
    g.row(points.rows()).setOnes();
    Vec b(target.size() + 1);
    b.head(target.size()) = target;
    b[target.size()] = 1;
    return cone_lp_feasible(g, b, tol);
}

}  // namespace ejalab::numkernel
