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
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ejalab/core.hpp"
#include "ejalab/numkernel/lp.hpp"
#include "ejalab/numkernel/polytope.hpp"

namespace ejalab::testspace {

/// Outcome set X with a covering family of tests (index lists into X).
struct TestSpace {
    std::vector<std::string> outcomes;
    std::vector<std::vector<int>> tests;

    int size() const { return (int)outcomes.size(); }

    int index_of(const std::string &name) const {
        auto it = std::find(outcomes.begin(), outcomes.end(), name);
        if (it == outcomes.end()) {
            throw ValidationError("unknown outcome '" + name + "'");
        }
        return (int)(it - outcomes.begin());
    }

    /// Outcomes listed in order of first appearance.
    static TestSpace from_names(const std::vector<std::vector<std::string>> &tests) {
        TestSpace s;
        for (const auto &t : tests) {
            std::vector<int> idx;
            for (const auto &name : t) {
                auto it = std::find(s.outcomes.begin(), s.outcomes.end(), name);
                if (it == s.outcomes.end()) {
                    s.outcomes.push_back(name);
                    idx.push_back(s.size() - 1);
                } else {
                    idx.push_back((int)(it - s.outcomes.begin()));
                }
            }
            s.tests.push_back(idx);
        }
        return s;
    }

    bool operator==(const TestSpace &o) const { return outcomes == o.outcomes && tests == o.tests; }
};

struct Diagnostics {
    bool valid = true;
    bool uniform = false;
    int rank = 0;  // common test size when uniform
    std::vector<std::string> violations;
};

inline Diagnostics diagnose(const TestSpace &space) {
    Diagnostics d;
    if (space.tests.empty()) {
        d.violations.push_back("no tests");
    }
    std::vector<int> covered(space.size(), 0);
    for (size_t t = 0; t < space.tests.size(); t++) {
        const auto &test = space.tests[t];
        if (test.empty()) {
            d.violations.push_back("test " + std::to_string(t) + " is empty");
        }
        std::set<int> seen;
        for (int x : test) {
            if (x < 0 || x >= space.size()) {
                d.violations.push_back("test " + std::to_string(t) + " references outcome index " +
                                       std::to_string(x) + " out of range");
                continue;
            }
            if (!seen.insert(x).second) {
                d.violations.push_back("test " + std::to_string(t) + " lists outcome '" + space.outcomes[x] +
                                       "' twice");
            }
            covered[x]++;
        }
    }
    for (int x = 0; x < space.size(); x++) {
        if (covered[x] == 0) {
            d.violations.push_back("outcome '" + space.outcomes[x] + "' belongs to no test");
        }
    }
    std::set<std::string> names(space.outcomes.begin(), space.outcomes.end());
    if ((int)names.size() != space.size()) {
        d.violations.push_back("duplicate outcome names");
    }
    d.valid = d.violations.empty();
    if (!space.tests.empty()) {
        size_t n = space.tests[0].size();
        d.uniform = std::all_of(space.tests.begin(), space.tests.end(),
                                [n](const auto &t) { return t.size() == n; });
        d.rank = d.uniform ? (int)n : 0;
    }
    return d;
}

/// Like diagnose, but throws ValidationError listing every violation.
inline Diagnostics validate(const TestSpace &space) {
    Diagnostics d = diagnose(space);
    if (!d.valid) {
        std::ostringstream msg;
        msg << "invalid test space:";
        for (const auto &v : d.violations) {
            msg << "\n  - " << v;
        }
        throw ValidationError(msg.str());
    }
    return d;
}

inline bool is_weight(const TestSpace &space, const Vec &alpha, double tol = 1e-12) {
    if (alpha.size() != space.size()) {
        return false;
    }
    if ((alpha.array() < -tol).any() || (alpha.array() > 1 + tol).any()) {
        return false;
    }
    for (const auto &t : space.tests) {
        double s = 0;
        for (int x : t) {
            s += alpha[x];
        }
        if (std::abs(s - 1) > tol) {
            return false;
        }
    }
    return true;
}

constexpr int kMaxPolytopeOutcomes = 20;

/// Vertices of the polytope of all probability weights.
inline std::vector<Vec> weight_polytope(const TestSpace &space) {
    validate(space);
    int n = space.size();
    if (n > kMaxPolytopeOutcomes) {
        throw ValidationError("weight_polytope: more than " + std::to_string(kMaxPolytopeOutcomes) + " outcomes");
    }
    Mat aeq = Mat::Zero((int)space.tests.size(), n);
    for (size_t t = 0; t < space.tests.size(); t++) {
        for (int x : space.tests[t]) {
            aeq(t, x) = 1;
        }
    }
    Vec beq = Vec::Ones((int)space.tests.size());
    return numkernel::enumerate_vertices(aeq, beq, Mat::Identity(n, n), Vec::Zero(n));
}

/// Constant weight 1/n on a uniform space of rank n.
inline Vec maximally_mixed(const TestSpace &space) {
    Diagnostics d = validate(space);
    if (!d.uniform) {
        throw ValidationError("maximally_mixed: test space is not uniform");
    }
    return Vec::Constant(space.size(), 1.0 / d.rank);
}

/// Test space plus a polytope of states in vertex form.
class FiniteModel {
   public:
    FiniteModel() = default;

    /// All probability weights.
    static FiniteModel full(const TestSpace &space) {
        FiniteModel m;
        m.space_ = space;
        m.states_ = weight_polytope(space);
        m.full_ = true;
        return m;
    }

    /// Convex hull of the given weights. Duplicates are dropped.
    static FiniteModel with_states(const TestSpace &space, const std::vector<Vec> &states, double tol = 1e-12) {
        validate(space);
        for (size_t k = 0; k < states.size(); k++) {
            if (!is_weight(space, states[k], tol)) {
                throw ValidationError("state " + std::to_string(k) + " is not a probability weight");
            }
        }
        FiniteModel m;
        m.space_ = space;
        m.states_ = numkernel::dedupe(states, 1e-10);
        return m;
    }

    const TestSpace &space() const { return space_; }
    const std::vector<Vec> &states() const { return states_; }
    bool is_full() const { return full_; }
    int num_outcomes() const { return space_.size(); }

    /// |X| x (#vertices) matrix of vertex columns.
    Mat state_matrix() const {
        Mat m(space_.size(), (int)states_.size());
        for (size_t k = 0; k < states_.size(); k++) {
            m.col(k) = states_[k];
        }
        return m;
    }

    bool contains(const Vec &alpha, double tol = 1e-10) const {
        if (states_.empty()) {
            return false;
        }
        return numkernel::convex_hull_member(state_matrix(), alpha, tol).feasible;
    }

   private:
    TestSpace space_;
    std::vector<Vec> states_;
    bool full_ = false;
};

/// Vertices α with α(x) = 1.
inline std::vector<int> face(const FiniteModel &model, int x, double tol = 1e-10) {
    std::vector<int> f;
    for (size_t k = 0; k < model.states().size(); k++) {
        if (model.states()[k][x] >= 1 - tol) {
            f.push_back((int)k);
        }
    }
    return f;
}

inline bool is_unital(const FiniteModel &model) {
    for (int x = 0; x < model.num_outcomes(); x++) {
        if (face(model, x).empty()) {
            return false;
        }
    }
    return true;
}

inline bool is_sharp(const FiniteModel &model) {
    for (int x = 0; x < model.num_outcomes(); x++) {
        if (face(model, x).size() != 1) {
            return false;
        }
    }
    return true;
}

using Permutation = std::vector<int>;

/// Finite permutation group on the outcomes, with its multiplication table.
class GroupAction {
   public:
    static constexpr size_t kMaxOrder = 5040;

    /// Closure of the generators under composition.
    static GroupAction generate(int degree, const std::vector<Permutation> &generators) {
        GroupAction g;
        g.degree_ = degree;
        Permutation id(degree);
        for (int i = 0; i < degree; i++) {
            id[i] = i;
        }
        for (const auto &p : generators) {
            check_perm(p, degree);
        }
        std::map<Permutation, int> index;
        g.elements_.push_back(id);
        index[id] = 0;
        for (size_t k = 0; k < g.elements_.size(); k++) {
            for (const auto &p : generators) {
                Permutation q = compose(p, g.elements_[k]);
                if (!index.count(q)) {
                    if (g.elements_.size() >= kMaxOrder) {
                        throw ValidationError("GroupAction: group order exceeds " + std::to_string(kMaxOrder));
                    }
                    index[q] = (int)g.elements_.size();
                    g.elements_.push_back(q);
                }
            }
        }
        size_t n = g.elements_.size();
        g.table_.assign(n, std::vector<int>(n));
        for (size_t a = 0; a < n; a++) {
            for (size_t b = 0; b < n; b++) {
                g.table_[a][b] = index.at(compose(g.elements_[a], g.elements_[b]));
            }
        }
        return g;
    }

    /// (a o b)[i] = a[b[i]]
    static Permutation compose(const Permutation &a, const Permutation &b) {
        Permutation r(b.size());
        for (size_t i = 0; i < b.size(); i++) {
            r[i] = a[b[i]];
        }
        return r;
    }

    int degree() const { return degree_; }
    size_t order() const { return elements_.size(); }
    const std::vector<Permutation> &elements() const { return elements_; }
    int product(int a, int b) const { return table_[a][b]; }

    int inverse(int a) const {
        for (size_t b = 0; b < elements_.size(); b++) {
            if (table_[a][b] == 0) {
                return (int)b;
            }
        }
        return -1;
    }

    /// Maps every test onto a test.
    bool preserves(const TestSpace &space) const {
        std::set<std::vector<int>> tests;
        for (auto t : space.tests) {
            std::sort(t.begin(), t.end());
            tests.insert(t);
        }
        for (const auto &g : elements_) {
            for (const auto &t : space.tests) {
                std::vector<int> img;
                for (int x : t) {
                    img.push_back(g[x]);
                }
                std::sort(img.begin(), img.end());
                if (!tests.count(img)) {
                    return false;
                }
            }
        }
        return true;
    }

    bool is_transitive() const {
        std::set<int> orbit;
        for (const auto &g : elements_) {
            orbit.insert(g[0]);
        }
        return (int)orbit.size() == degree_;
    }

    /// (g α)(g x) = α(x)
    Vec act(int g, const Vec &alpha) const {
        Vec r(alpha.size());
        for (int i = 0; i < degree_; i++) {
            r[elements_[g][i]] = alpha[i];
        }
        return r;
    }

   private:
    static void check_perm(const Permutation &p, int degree) {
        if ((int)p.size() != degree) {
            throw ValidationError("GroupAction: permutation has wrong length");
        }
        std::vector<int> s = p;
        std::sort(s.begin(), s.end());
        for (int i = 0; i < degree; i++) {
            if (s[i] != i) {
                throw ValidationError("GroupAction: not a permutation");
            }
        }
    }

    int degree_ = 0;
    std::vector<Permutation> elements_;
    std::vector<std::vector<int>> table_;
};

/// Points of `pts` that are not convex combinations of the others.
inline std::vector<Vec> extreme_points(const std::vector<Vec> &pts, double tol = 1e-10) {
    std::vector<Vec> uniq = numkernel::dedupe(pts, tol);
    if (uniq.size() <= 1) {
        return uniq;
    }
    std::vector<Vec> out;
    for (size_t k = 0; k < uniq.size(); k++) {
        Mat others(uniq[k].size(), (int)uniq.size() - 1);
        int c = 0;
        for (size_t j = 0; j < uniq.size(); j++) {
            if (j != k) {
                others.col(c++) = uniq[j];
            }
        }
        if (!numkernel::convex_hull_member(others, uniq[k], tol).feasible) {
            out.push_back(uniq[k]);
        }
    }
    return out;
}

/// Barycenter of the face F_x: mean of its vertices.
inline Vec face_barycenter(const FiniteModel &model, int x) {
    auto f = face(model, x);
    Vec b = Vec::Zero(model.num_outcomes());
    for (int k : f) {
        b += model.states()[k];
    }
    return b / (double)f.size();
}

/// Replaces Ω by the convex hull of face barycenters. Requires a unital
/// G-model with G transitive on outcomes.
inline FiniteModel sharpen_by_symmetry(const FiniteModel &model, const GroupAction &action) {
    if (action.degree() != model.num_outcomes()) {
        throw ValidationError("sharpen_by_symmetry: action degree does not match outcome count");
    }
    if (!is_unital(model)) {
        throw ValidationError("sharpen_by_symmetry: model is not unital");
    }
    if (!action.is_transitive()) {
        throw ValidationError("sharpen_by_symmetry: action is not transitive on outcomes");
    }
    if (!action.preserves(model.space())) {
        throw ValidationError("sharpen_by_symmetry: action does not map tests to tests");
    }
    for (size_t g = 0; g < action.order(); g++) {
        for (const auto &v : model.states()) {
            if (!model.contains(action.act((int)g, v))) {
                throw ValidationError("sharpen_by_symmetry: state space is not invariant under the action");
            }
        }
    }
    std::vector<Vec> bary;
    for (int x = 0; x < model.num_outcomes(); x++) {
        bary.push_back(numkernel::snap(face_barycenter(model, x)));
    }
    std::vector<Vec> delta = extreme_points(bary);
    numkernel::sort_points(delta);
    return FiniteModel::with_states(model.space(), delta, 1e-10);
}

/// {{x, x'}, {y, y'}}
inline TestSpace square_bit_space() { return TestSpace::from_names({{"x", "x'"}, {"y", "y'"}}); }

inline FiniteModel square_bit() { return FiniteModel::full(square_bit_space()); }

inline FiniteModel diamond_bit() {
    return FiniteModel::with_states(square_bit_space(), {
                                                           (Vec(4) << 1, 0, 0.5, 0.5).finished(),
                                                           (Vec(4) << 0, 1, 0.5, 0.5).finished(),
                                                           (Vec(4) << 0.5, 0.5, 1, 0).finished(),
                                                           (Vec(4) << 0.5, 0.5, 0, 1).finished(),
                                                       });
}

/// Single test with n outcomes, all weights.
inline FiniteModel classical_model(int n) {
    std::vector<std::string> names;
    for (int i = 0; i < n; i++) {
        names.push_back("e" + std::to_string(i));
    }
    return FiniteModel::full(TestSpace::from_names({names}));
}

/// Partition-preserving permutations of the square bit (order 8).
inline GroupAction square_bit_symmetry() { return GroupAction::generate(4, {{1, 0, 2, 3}, {2, 3, 0, 1}}); }

/// Cyclic subgroup x -> y -> x' -> y' -> x (order 4).
inline GroupAction square_bit_rotations() { return GroupAction::generate(4, {{2, 3, 1, 0}}); }

}  // namespace ejalab::testspace
