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
#include <concepts>
#include <optional>
#include <string>
#include <vector>

#include "ejalab/core.hpp"
#include "ejalab/numkernel/lp.hpp"
#include "ejalab/numkernel/polytope.hpp"
#include "ejalab/testspace.hpp"

namespace ejalab::ordered {

/// Coordinate space ordered either by generators (columns) or by constraint
/// functionals (columns f with f.v >= 0).
struct OrderedSpace {
    int dim = 0;
    std::vector<std::string> labels;
    Mat generators;
    Mat constraints;
    Vec unit;
};

enum class ConeKind { E, V, Vstar };

/// V(A), V*(A) and E(A) of a finite model in one orthonormal basis of span Ω.
struct ModelSpaces {
    Mat basis;          // |X| x r, orthonormal columns
    Mat vertex_coords;  // r x #vertices
    Mat effect_coords;  // r x |X|, column x is the evaluation functional x^
    Vec unit;           // u_A
    OrderedSpace V, Vstar, E;

    int dim() const { return (int)basis.cols(); }
    Vec state_coords(const Vec &alpha) const { return basis.transpose() * alpha; }
    Vec effect(int x) const { return effect_coords.col(x); }
};

inline ModelSpaces build_spaces(const testspace::FiniteModel &model, double tol = 1e-10) {
    const auto &space = model.space();
    if (model.states().empty()) {
        throw ValidationError("build_spaces: model has no states");
    }
    Mat states = model.state_matrix();
    ModelSpaces s;
    Mat span = column_span(states, tol);
    s.basis = span.cols() == space.size() ? Mat(Mat::Identity(space.size(), space.size())) : span;
    int r = s.dim();
    s.vertex_coords = s.basis.transpose() * states;
    s.effect_coords = s.basis.transpose();
    bool first = true;
    for (const auto &t : space.tests) {
        Vec u = Vec::Zero(r);
        for (int x : t) {
            u += s.effect_coords.col(x);
        }
        if (first) {
            s.unit = u;
            first = false;
        } else if ((u - s.unit).cwiseAbs().maxCoeff() > 1e-12) {
            throw ValidationError("build_spaces: order unit depends on the test");
        }
    }
    std::vector<std::string> labels;
    for (int i = 0; i < r; i++) {
        labels.push_back("b" + std::to_string(i));
    }
    s.V = {r, labels, s.vertex_coords, Mat(r, 0), s.unit};
    s.Vstar = {r, labels, Mat(r, 0), s.vertex_coords, s.unit};
    s.E = {r, labels, s.effect_coords, Mat(r, 0), s.unit};
    return s;
}

struct ConeMembership {
    bool member = false;
    Vec coefficients;  // generator weights (E, V)
    Vec certificate;   // separating functional (E, V) or violating vertex coords (V*)
};

inline ConeMembership in_cone(const ModelSpaces &s, ConeKind which, const Vec &v, double tol = 1e-10) {
    if (v.size() != s.dim()) {
        throw ValidationError("in_cone: dimension mismatch (" + std::to_string(v.size()) + " vs " +
                              std::to_string(s.dim()) + ")");
    }
    ConeMembership m;
    if (which == ConeKind::Vstar) {
        m.member = true;
        double worst = 0;
        for (int k = 0; k < s.vertex_coords.cols(); k++) {
            double val = v.dot(s.vertex_coords.col(k));
            if (val < -tol && val < worst) {
                worst = val;
                m.member = false;
                m.certificate = s.vertex_coords.col(k);
            }
        }
        return m;
    }
    const Mat &g = which == ConeKind::E ? s.effect_coords : s.vertex_coords;
    auto res = numkernel::cone_lp_feasible(g, v, tol);
    m.member = res.feasible;
    m.coefficients = res.coefficients;
    m.certificate = res.certificate;
    return m;
}

inline bool is_effect(const ModelSpaces &s, const Vec &f, double tol = 1e-10) {
    for (int k = 0; k < s.vertex_coords.cols(); k++) {
        double val = f.dot(s.vertex_coords.col(k));
        if (val < -tol || val > 1 + tol) {
            return false;
        }
    }
    return true;
}

/// Smallest N with -N u <= a <= N u.
inline double order_unit_bound(const ModelSpaces &s, const Vec &a) {
    return (a.transpose() * s.vertex_coords).cwiseAbs().maxCoeff();
}

/// A facet functional of V(A)+, scaled to maximum 1 on states, that is not a
/// nonnegative combination of outcome effects.
inline std::optional<Vec> effect_cone_gap(const ModelSpaces &s, double tol = 1e-10) {
    for (Vec f : numkernel::cone_facets(s.vertex_coords)) {
        f /= (f.transpose() * s.vertex_coords).maxCoeff();
        if (!in_cone(s, ConeKind::E, f, tol).member) {
            return f;
        }
    }
    return std::nullopt;
}

/// A state cone with a normalized slice of states.
template <typename C>
concept StateCone = requires(const C &c, const Vec &v, double tol) {
    { c.dimension() } -> std::convertible_to<int>;
    { c.contains(v, tol) } -> std::convertible_to<bool>;
    { c.probe_rays() } -> std::convertible_to<std::vector<Vec>>;
    { c.max_on_states(v) } -> std::convertible_to<double>;
};

/// V(A)+ of a finite model.
class PolyhedralStateCone {
   public:
    explicit PolyhedralStateCone(const ModelSpaces &s) : vertices_(s.vertex_coords) {}

    int dimension() const { return (int)vertices_.rows(); }
    bool contains(const Vec &v, double tol) const {
        return numkernel::cone_lp_feasible(vertices_, v, std::max(tol, 1e-10)).feasible;
    }
    std::vector<Vec> probe_rays() const {
        std::vector<Vec> r;
        for (int k = 0; k < vertices_.cols(); k++) {
            r.push_back(vertices_.col(k));
        }
        return r;
    }
    double max_on_states(const Vec &f) const { return (f.transpose() * vertices_).maxCoeff(); }

   private:
    Mat vertices_;
};

/// Linear map V(A) -> V(B) in the spaces' coordinates.
struct Process {
    Mat matrix;
    bool dual = false;  // true for V*(B) -> V*(A)
};

inline Process dual_process(const Process &t) { return {t.matrix.transpose(), !t.dual}; }

template <StateCone C>
bool is_positive(const Process &t, const C &from, const C &to, double tol = 1e-9) {
    for (const auto &r : from.probe_rays()) {
        if (!to.contains(t.matrix * r, tol)) {
            return false;
        }
    }
    return true;
}

/// T*(u_B) <= u_A on the states of A.
template <StateCone C>
bool dual_contract_holds(const Process &t, const C &from, const Vec &unit_a, const Vec &unit_b,
                         double tol = 1e-9) {
    return from.max_on_states(t.matrix.transpose() * unit_b - unit_a) <= tol;
}

struct Reversibility {
    bool reversible = false;
    double p = 0;
    Process inverse;
    double residual = 0;
    std::string reason;
};

/// Candidate inverse S = p T^{-1} with the largest p keeping S subnormalized.
template <StateCone C>
Reversibility is_reversible(const Process &t, const C &cone, const Vec &unit, double tol = 1e-9) {
    Reversibility r;
    int n = cone.dimension();
    if (t.matrix.rows() != n || t.matrix.cols() != n) {
        throw ValidationError("is_reversible: process is not square on the cone's space");
    }
    Eigen::FullPivLU<Mat> lu(t.matrix);
    lu.setThreshold(1e-10);
    if (!lu.isInvertible()) {
        r.reason = "singular";
        return r;
    }
    if (!is_positive(t, cone, cone, tol)) {
        r.reason = "process is not positive";
        return r;
    }
    Process inv{lu.inverse()};
    if (!is_positive(inv, cone, cone, tol)) {
        r.reason = "inverse is not positive";
        return r;
    }
    double m = cone.max_on_states(inv.matrix.transpose() * unit);
    r.p = std::min(1.0, 1.0 / m);
    r.inverse = {r.p * inv.matrix};
    r.residual = op_norm(r.inverse.matrix * t.matrix - r.p * Mat::Identity(n, n));
    r.reversible = true;
    return r;
}

}  // namespace ejalab::ordered
