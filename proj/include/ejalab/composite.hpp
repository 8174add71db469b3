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

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "ejalab/core.hpp"
#include "ejalab/numkernel/lp.hpp"
#include "ejalab/numkernel/polytope.hpp"
#include "ejalab/ordered.hpp"
#include "ejalab/testspace.hpp"

namespace ejalab::composite {

using testspace::FiniteModel;
using testspace::TestSpace;

/// Bipartite table, rows indexed by X(A), columns by X(B).
struct JointState {
    TestSpace left, right;
    Mat table;
};

struct JointDiagnostics {
    bool valid = true;
    double normalization_residual = 0;
    double signaling_residual = 0;
    double total_probability_residual = 0;
    std::vector<std::string> violations;
};

namespace detail {

inline double test_sum(const Mat &w, const std::vector<int> &e, const std::vector<int> &f) {
    double s = 0;
    for (int x : e) {
        for (int y : f) {
            s += w(x, y);
        }
    }
    return s;
}

inline std::string pair_label(size_t e, size_t f) {
    return "(E" + std::to_string(e) + ", F" + std::to_string(f) + ")";
}

}  // namespace detail

/// Normalization, non-signaling and total probability; no state membership.
inline JointDiagnostics validate_joint(const TestSpace &a, const TestSpace &b, const Mat &w, double tol = 1e-12) {
    if (w.rows() != a.size() || w.cols() != b.size()) {
        throw ValidationError("validate_joint: table is " + std::to_string(w.rows()) + "x" +
                              std::to_string(w.cols()) + ", expected " + std::to_string(a.size()) + "x" +
                              std::to_string(b.size()));
    }
    JointDiagnostics d;
    if ((w.array() < -tol).any()) {
        d.violations.push_back("negative entry");
    }
    for (size_t e = 0; e < a.tests.size(); e++) {
        for (size_t f = 0; f < b.tests.size(); f++) {
            double r = std::abs(detail::test_sum(w, a.tests[e], b.tests[f]) - 1);
            d.normalization_residual = std::max(d.normalization_residual, r);
            if (r > tol) {
                d.violations.push_back("normalization fails on " + detail::pair_label(e, f));
            }
        }
    }
    // marginal of x computed against each distant test
    for (int x = 0; x < a.size(); x++) {
        double ref = detail::test_sum(w, {x}, b.tests[0]);
        for (size_t f = 1; f < b.tests.size(); f++) {
            double r = std::abs(detail::test_sum(w, {x}, b.tests[f]) - ref);
            d.signaling_residual = std::max(d.signaling_residual, r);
            if (r > tol) {
                d.violations.push_back("marginal of '" + a.outcomes[x] + "' depends on distant test " +
                                       detail::pair_label(0, f));
            }
        }
    }
    for (int y = 0; y < b.size(); y++) {
        double ref = detail::test_sum(w, a.tests[0], {y});
        for (size_t e = 1; e < a.tests.size(); e++) {
            double r = std::abs(detail::test_sum(w, a.tests[e], {y}) - ref);
            d.signaling_residual = std::max(d.signaling_residual, r);
            if (r > tol) {
                d.violations.push_back("marginal of '" + b.outcomes[y] + "' depends on distant test " +
                                       detail::pair_label(e, 0));
            }
        }
    }
    // omega_2 = sum_{x in E} omega_1(x) omega_{2|x}
    Vec w1 = Vec::Zero(a.size()), w2 = Vec::Zero(b.size());
    for (int x = 0; x < a.size(); x++) {
        w1[x] = detail::test_sum(w, {x}, b.tests[0]);
    }
    for (int y = 0; y < b.size(); y++) {
        w2[y] = detail::test_sum(w, a.tests[0], {y});
    }
    for (size_t e = 0; e < a.tests.size(); e++) {
        Vec acc = Vec::Zero(b.size());
        for (int x : a.tests[e]) {
            if (w1[x] > 0) {
                acc += w1[x] * (w.row(x).transpose() / w1[x]);
            }
        }
        double r = (acc - w2).cwiseAbs().maxCoeff();
        d.total_probability_residual = std::max(d.total_probability_residual, r);
        if (r > tol) {
            d.violations.push_back("total probability fails for test E" + std::to_string(e));
        }
    }
    d.valid = d.violations.empty();
    return d;
}

struct Marginals {
    Vec first, second;
    Mat cond2;  // row x: omega_{2|x}
    Mat cond1;  // row y: omega_{1|y}
};

/// Conditionals are zero where the conditioning marginal vanishes.
inline Marginals marginals_conditionals(const JointState &js) {
    const Mat &w = js.table;
    Marginals m;
    m.first = Vec::Zero(w.rows());
    m.second = Vec::Zero(w.cols());
    for (int x = 0; x < w.rows(); x++) {
        for (int y : js.right.tests[0]) {
            m.first[x] += w(x, y);
        }
    }
    for (int y = 0; y < w.cols(); y++) {
        for (int x : js.left.tests[0]) {
            m.second[y] += w(x, y);
        }
    }
    m.cond2 = Mat::Zero(w.rows(), w.cols());
    m.cond1 = Mat::Zero(w.cols(), w.rows());
    for (int x = 0; x < w.rows(); x++) {
        if (m.first[x] > 0) {
            m.cond2.row(x) = w.row(x) / m.first[x];
        }
    }
    for (int y = 0; y < w.cols(); y++) {
        if (m.second[y] > 0) {
            m.cond1.row(y) = w.col(y).transpose() / m.second[y];
        }
    }
    return m;
}

/// Full validation including conditional-state membership in Ω(A), Ω(B).
inline JointDiagnostics validate_joint(const FiniteModel &a, const FiniteModel &b, const Mat &w, double tol = 1e-12,
                                       double lp_tol = 1e-10) {
    JointDiagnostics d = validate_joint(a.space(), b.space(), w, tol);
    if (!d.valid) {
        return d;
    }
    Marginals m = marginals_conditionals({a.space(), b.space(), w});
    for (int x = 0; x < w.rows(); x++) {
        if (m.first[x] > tol && !b.contains(m.cond2.row(x).transpose(), lp_tol)) {
            d.violations.push_back("conditional state given '" + a.space().outcomes[x] + "' is not in the state space");
        }
    }
    for (int y = 0; y < w.cols(); y++) {
        if (m.second[y] > tol && !a.contains(m.cond1.row(y).transpose(), lp_tol)) {
            d.violations.push_back("conditional state given '" + b.space().outcomes[y] + "' is not in the state space");
        }
    }
    d.valid = d.violations.empty();
    return d;
}

/// Product table α βᵀ.
inline JointState product_state(const TestSpace &a, const Vec &alpha, const TestSpace &b, const Vec &beta) {
    return {a, b, alpha * beta.transpose()};
}

struct ConditioningMap {
    Mat matrix;  // dim V(B) x dim E(A)
    double residual = 0;
    bool positive = false;
};

/// Linear map x^ -> ω(x, .) from E(A) into V(B).
inline ConditioningMap conditioning_map(const JointState &js, const ordered::ModelSpaces &a,
                                        const ordered::ModelSpaces &b, double lp_tol = 1e-10) {
    Mat target = b.basis.transpose() * js.table.transpose();  // column x: coords of ω(x, .)
    Mat outside = js.table.transpose() - b.basis * target;
    Eigen::CompleteOrthogonalDecomposition<Mat> cod(a.effect_coords.transpose());
    ConditioningMap c;
    c.matrix = cod.solve(target.transpose()).transpose();
    c.residual = std::max((c.matrix * a.effect_coords - target).cwiseAbs().maxCoeff(),
                          outside.size() ? outside.cwiseAbs().maxCoeff() : 0.0);
    c.positive = true;
    for (int x = 0; x < target.cols(); x++) {
        if (target.col(x).cwiseAbs().maxCoeff() == 0) {
            continue;
        }
        if (!numkernel::cone_lp_feasible(b.vertex_coords, target.col(x), lp_tol).feasible) {
            c.positive = false;
        }
    }
    return c;
}

struct Correlation {
    bool correlating = false;
    std::vector<std::pair<int, int>> pairs;  // graph of f, (x, f(x))
};

/// Support of ω on E x F is the graph of a bijection E0 -> F0.
inline Correlation correlates(const Mat &w, const std::vector<int> &e, const std::vector<int> &f, double tol = 1e-12) {
    Correlation c;
    std::vector<int> used_col(f.size(), 0);
    for (int x : e) {
        int hit = -1;
        for (size_t k = 0; k < f.size(); k++) {
            if (w(x, f[k]) > tol) {
                if (hit >= 0) {
                    return {};
                }
                hit = (int)k;
            }
        }
        if (hit >= 0) {
            if (used_col[hit]++) {
                return {};
            }
            c.pairs.emplace_back(x, f[hit]);
        }
    }
    c.correlating = !c.pairs.empty();
    return c;
}

/// Tests {x, y} and {a, b} on each side; entries in units of 1/2.
inline JointState pr_box() {
    TestSpace s = TestSpace::from_names({{"x", "y"}, {"a", "b"}});
    Mat w(4, 4);
    w << 0.5, 0, 0.5, 0,  //
        0, 0.5, 0, 0.5,   //
        0, 0.5, 0.5, 0,   //
        0.5, 0, 0, 0.5;
    return {s, s, w};
}

constexpr int kMaxCompositeOutcomes = 64;

/// All non-signaling joint states with conditionals in Ω(A), Ω(B), as a model
/// on the product tests. Outcome k of the result is the pair outcome_pairs[k].
struct CompositeModel {
    FiniteModel model;
    std::vector<std::pair<int, int>> outcome_pairs;
    double unit_residual = 0;

    Mat table(const Vec &state) const {
        int nb = 0;
        for (auto [x, y] : outcome_pairs) {
            nb = std::max(nb, y + 1);
        }
        Mat w((int)outcome_pairs.size() / nb, nb);
        for (size_t k = 0; k < outcome_pairs.size(); k++) {
            w(outcome_pairs[k].first, outcome_pairs[k].second) = state[k];
        }
        return w;
    }
};

namespace detail {

/// Rows C with C v >= 0 and P v = 0 describing cone(Ω) inside R^X.
inline std::pair<Mat, Mat> cone_description(const FiniteModel &m) {
    auto s = ordered::build_spaces(m);
    std::vector<Vec> facets = numkernel::cone_facets(s.vertex_coords);
    Mat ineq((int)facets.size(), m.num_outcomes());
    for (size_t k = 0; k < facets.size(); k++) {
        ineq.row(k) = (s.basis * facets[k]).transpose();
    }
    Mat perp = Mat::Identity(m.num_outcomes(), m.num_outcomes()) - s.basis * s.basis.transpose();
    return {ineq, perp};
}

}  // namespace detail

inline CompositeModel maximal_tensor(const FiniteModel &a, const FiniteModel &b) {
    int na = a.num_outcomes(), nb = b.num_outcomes();
    if (na * nb > kMaxCompositeOutcomes) {
        throw ValidationError("maximal_tensor: " + std::to_string(na * nb) + " outcome pairs exceed " +
                              std::to_string(kMaxCompositeOutcomes));
    }
    const auto &sa = a.space(), &sb = b.space();
    int n = na * nb;
    auto idx = [nb](int x, int y) { return x * nb + y; };
    std::vector<Vec> eq_rows, in_rows;
    std::vector<double> eq_rhs;
    for (const auto &e : sa.tests) {
        for (const auto &f : sb.tests) {
            Vec r = Vec::Zero(n);
            for (int x : e) {
                for (int y : f) {
                    r[idx(x, y)] = 1;
                }
            }
            eq_rows.push_back(r);
            eq_rhs.push_back(1);
        }
    }
    for (int x = 0; x < na; x++) {
        for (size_t f = 1; f < sb.tests.size(); f++) {
            Vec r = Vec::Zero(n);
            for (int y : sb.tests[0]) {
                r[idx(x, y)] += 1;
            }
            for (int y : sb.tests[f]) {
                r[idx(x, y)] -= 1;
            }
            eq_rows.push_back(r);
            eq_rhs.push_back(0);
        }
    }
    for (int y = 0; y < nb; y++) {
        for (size_t e = 1; e < sa.tests.size(); e++) {
            Vec r = Vec::Zero(n);
            for (int x : sa.tests[0]) {
                r[idx(x, y)] += 1;
            }
            for (int x : sa.tests[e]) {
                r[idx(x, y)] -= 1;
            }
            eq_rows.push_back(r);
            eq_rhs.push_back(0);
        }
    }
    auto [ineq_b, perp_b] = detail::cone_description(b);
    auto [ineq_a, perp_a] = detail::cone_description(a);
    for (int x = 0; x < na; x++) {
        for (int k = 0; k < perp_b.rows(); k++) {
            Vec r = Vec::Zero(n);
            for (int y = 0; y < nb; y++) {
                r[idx(x, y)] = perp_b(k, y);
            }
            eq_rows.push_back(r);
            eq_rhs.push_back(0);
        }
        for (int k = 0; k < ineq_b.rows(); k++) {
            Vec r = Vec::Zero(n);
            for (int y = 0; y < nb; y++) {
                r[idx(x, y)] = ineq_b(k, y);
            }
            in_rows.push_back(r);
        }
    }
    for (int y = 0; y < nb; y++) {
        for (int k = 0; k < perp_a.rows(); k++) {
            Vec r = Vec::Zero(n);
            for (int x = 0; x < na; x++) {
                r[idx(x, y)] = perp_a(k, x);
            }
            eq_rows.push_back(r);
            eq_rhs.push_back(0);
        }
        for (int k = 0; k < ineq_a.rows(); k++) {
            Vec r = Vec::Zero(n);
            for (int x = 0; x < na; x++) {
                r[idx(x, y)] = ineq_a(k, x);
            }
            in_rows.push_back(r);
        }
    }
    for (int k = 0; k < n; k++) {
        in_rows.push_back(Vec::Unit(n, k));
    }
    // drop zero and duplicate inequality rows
    std::vector<Vec> scaled;
    for (auto &r : in_rows) {
        double nr = r.cwiseAbs().maxCoeff();
        if (nr > 1e-12) {
            scaled.push_back(r / nr);
        }
    }
    scaled = numkernel::dedupe(scaled, 1e-12);
    Mat aeq((int)eq_rows.size(), n), ain((int)scaled.size(), n);
    Vec beq((int)eq_rows.size());
    for (size_t k = 0; k < eq_rows.size(); k++) {
        aeq.row(k) = eq_rows[k].transpose();
        beq[k] = eq_rhs[k];
    }
    for (size_t k = 0; k < scaled.size(); k++) {
        ain.row(k) = scaled[k].transpose();
    }
    std::vector<Vec> verts = numkernel::enumerate_vertices(aeq, beq, ain, Vec::Zero(ain.rows()));

    CompositeModel c;
    TestSpace space;
    for (int x = 0; x < na; x++) {
        for (int y = 0; y < nb; y++) {
            space.outcomes.push_back(sa.outcomes[x] + "|" + sb.outcomes[y]);
            c.outcome_pairs.emplace_back(x, y);
        }
    }
    for (const auto &e : sa.tests) {
        for (const auto &f : sb.tests) {
            std::vector<int> t;
            for (int x : e) {
                for (int y : f) {
                    t.push_back(idx(x, y));
                }
            }
            space.tests.push_back(t);
        }
    }
    c.model = FiniteModel::with_states(space, verts, 1e-9);
    // pairing: sum over each product test of the evaluation effects
    auto s = ordered::build_spaces(c.model);
    for (const auto &t : space.tests) {
        Vec u = Vec::Zero(s.dim());
        for (int k : t) {
            u += s.effect(k);
        }
        c.unit_residual = std::max(c.unit_residual, (u - s.unit).cwiseAbs().maxCoeff());
    }
    return c;
}

}  // namespace ejalab::composite
