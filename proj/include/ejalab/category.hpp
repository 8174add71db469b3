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
#include <optional>
#include <string>
#include <vector>

#include "ejalab/conjugate.hpp"
#include "ejalab/core.hpp"
#include "ejalab/jordan.hpp"

namespace ejalab::category {

using jordan::Family;
using jordan::JordanAlgebra;

/// E(A) ⊗ E(B) with the product basis and factored inner product.
struct TensorSpace {
    Mat gram_a;
    Mat gram_b;

    int dim() const { return (int)(gram_a.rows() * gram_b.rows()); }
    Mat gram() const { return kron(gram_a, gram_b); }
};

/// Gram matrix of the product vectors a_i ⊗ b_j, computed directly in ℝ^{dA dB}.
inline Mat product_gram(const std::vector<Vec> &a, const std::vector<Vec> &b) {
    std::vector<Vec> prod;
    for (const auto &x : a) {
        for (const auto &y : b) {
            prod.push_back(kron(x, y));
        }
    }
    Mat g((int)prod.size(), (int)prod.size());
    for (size_t i = 0; i < prod.size(); i++) {
        for (size_t k = 0; k < prod.size(); k++) {
            g(i, k) = prod[i].dot(prod[k]);
        }
    }
    return g;
}

inline Mat gram_of(const std::vector<Vec> &v) {
    Mat g((int)v.size(), (int)v.size());
    for (size_t i = 0; i < v.size(); i++) {
        for (size_t k = 0; k < v.size(); k++) {
            g(i, k) = v[i].dot(v[k]);
        }
    }
    return g;
}

/// E(A) in coordinates orthonormal for <a, b> = η(a, b̄); there the
/// conjugation is γ and the counit form is η(a, c) = aᵀ γᵀ c.
struct CategoryObject {
    std::string name;
    int dim = 0;
    Mat gamma;
    Mat basis;  // orthonormal columns M
    Vec e;      // e_A = Σ_{m∈M} γm ⊗ m ∈ E(Ā) ⊗ E(A)

    Vec bar(const Vec &a) const { return gamma * a; }
    double eta(const Vec &a, const Vec &c) const { return a.dot(gamma.transpose() * c); }
    /// ε_A: E(A) ⊗ E(Ā) -> ℝ as a row vector.
    Vec counit() const {
        Vec n(dim * dim);
        for (int p = 0; p < dim; p++) {
            for (int q = 0; q < dim; q++) {
                n[p * dim + q] = gamma(q, p);
            }
        }
        return n;
    }
};

inline Vec unit_vector(const Mat &gamma, const Mat &basis) {
    int d = (int)gamma.rows();
    Vec e = Vec::Zero(d * d);
    for (int m = 0; m < basis.cols(); m++) {
        e += kron(Vec(gamma * basis.col(m)), Vec(basis.col(m)));
    }
    return e;
}

inline CategoryObject make_object(const JordanAlgebra &j, const std::optional<Mat> &basis = std::nullopt) {
    auto pair = conjugate::make_conjugate(j);
    CategoryObject o{j.name(), j.dim(), pair.gamma, basis.value_or(Mat::Identity(j.dim(), j.dim())), Vec()};
    if (o.basis.rows() != o.dim || o.basis.cols() != o.dim ||
        (o.basis.transpose() * o.basis - Mat::Identity(o.dim, o.dim)).cwiseAbs().maxCoeff() > 1e-10) {
        throw ValidationError("make_object: basis is not orthonormal");
    }
    o.e = unit_vector(o.gamma, o.basis);
    return o;
}

/// Ā, whose own conjugate is A again through the same involution.
inline CategoryObject conjugate_object(const CategoryObject &a) {
    CategoryObject o = a;
    o.name = a.name + "~";
    o.basis = a.gamma * a.basis;
    o.e = unit_vector(o.gamma, o.basis);
    return o;
}

/// Normalized coordinates of a trace-form element: <a, b>_η = a'ᵀ b'.
inline Vec to_object_coords(const JordanAlgebra &j, const Vec &a) { return a / std::sqrt((double)j.rank()); }

inline Mat random_orthogonal(int d, Rng &rng) {
    Mat g(d, d);
    for (int i = 0; i < d; i++) {
        g.col(i) = gaussian_vec(d, rng);
    }
    Eigen::HouseholderQR<Mat> qr(g);
    Mat q = qr.householderQ();
    Vec s = qr.matrixQR().diagonal().array().sign();
    return q * s.asDiagonal();
}

struct SnakeResiduals {
    double left = 0;   // (ε_A ⊗ id_A)(id_A ⊗ e_A) - id_A
    double right = 0;  // (id_Ā ⊗ ε_A)(e_A ⊗ id_Ā) - id_Ā
};

/// Both zig-zag composites as explicit matrices through the triple tensor.
/// `e_override` replaces e_A (negative controls).
inline SnakeResiduals snake_check(const CategoryObject &obj, const std::optional<Vec> &e_override = std::nullopt) {
    int d = obj.dim;
    const Vec &e = e_override ? *e_override : obj.e;
    Mat id = Mat::Identity(d, d);
    Mat eps = obj.counit().transpose();  // 1 x d²
    Mat ecol = e;                        // d² x 1
    SnakeResiduals r;
    Mat left = kron(eps, id) * kron(id, ecol);
    Mat right = kron(id, eps) * kron(ecol, id);
    r.left = op_norm(left - id);
    r.right = op_norm(right - id);
    return r;
}

/// Adjoint in orthonormal coordinates.
inline Mat dagger(const Mat &phi) { return phi.transpose(); }

/// φ̄ = γ_B φ γ_A⁻¹ : E(Ā) -> E(B̄).
inline Mat conjugate_morphism(const CategoryObject &a, const CategoryObject &b, const Mat &phi) {
    return b.gamma * phi * a.gamma.transpose();
}

/// φ' = (id_Ā ⊗ ε_B)(id_Ā ⊗ φ ⊗ id_B̄)(e_A ⊗ id_B̄) : E(B̄) -> E(Ā).
inline Mat dual_morphism(const CategoryObject &a, const CategoryObject &b, const Mat &phi) {
    int da = a.dim, db = b.dim;
    if (phi.rows() != db || phi.cols() != da) {
        throw ValidationError("dual_morphism: map has shape " + std::to_string(phi.rows()) + "x" +
                              std::to_string(phi.cols()) + ", expected " + std::to_string(db) + "x" +
                              std::to_string(da));
    }
    // φ'(p, r) = Σ_{q,s} e_A[p, q] φ(s, q) ε_B[s, r]
    Vec eps = b.counit();
    Mat tmp = Mat::Zero(da, db);  // Σ_q e_A[p, q] φ(s, q)
    for (int p = 0; p < da; p++) {
        for (int q = 0; q < da; q++) {
            double c = a.e[p * da + q];
            for (int s = 0; s < db; s++) {
                tmp(p, s) += c * phi(s, q);
            }
        }
    }
    Mat out = Mat::Zero(da, db);
    for (int p = 0; p < da; p++) {
        for (int s = 0; s < db; s++) {
            for (int r = 0; r < db; r++) {
                out(p, r) += tmp(p, s) * eps[s * db + r];
            }
        }
    }
    return out;
}

/// σ : E(A) ⊗ E(B) -> E(B) ⊗ E(A).
inline Mat swap_map(int da, int db) {
    Mat s = Mat::Zero(da * db, da * db);
    for (int p = 0; p < da; p++) {
        for (int q = 0; q < db; q++) {
            s(q * da + p, p * db + q) = 1;
        }
    }
    return s;
}

/// True iff the composite's effect space has dimension dim E(A) · dim E(B).
inline bool local_tomography_check(int dim_a, int dim_b, int composite_dim) { return composite_dim == dim_a * dim_b; }

/// Dimension of the standard composite: the same family at size n·m.
inline int standard_composite_dim(Family f, int n, int m) { return JordanAlgebra::make(f, n * m).dim(); }

inline bool local_tomography_check(Family f, int n, int m) {
    return local_tomography_check(JordanAlgebra::make(f, n).dim(), JordanAlgebra::make(f, m).dim(),
                                  standard_composite_dim(f, n, m));
}

/// Smallest eigenvalue of e_A realized as a Hermitian operator on ℂⁿ ⊗ ℂⁿ.
inline double unit_min_eigenvalue(const JordanAlgebra &j, const CategoryObject &obj) {
    if (!j.is_simple() || j.family() != Family::complexherm) {
        throw Unsupported("unit_min_eigenvalue: only complexherm is realized as operators");
    }
    int n = j.size(), d = obj.dim;
    CMat op = CMat::Zero(n * n, n * n);
    for (int p = 0; p < d; p++) {
        for (int q = 0; q < d; q++) {
            double c = obj.e[p * d + q];
            if (c == 0) {
                continue;
            }
            CMat x = conjugate::to_cmat(j.to_matrix<numkernel::Complex>(Vec::Unit(d, p)));
            CMat y = conjugate::to_cmat(j.to_matrix<numkernel::Complex>(Vec::Unit(d, q)));
            CMat k(n * n, n * n);
            for (int i = 0; i < n; i++) {
                for (int l = 0; l < n; l++) {
                    k.block(i * n, l * n, n, n) = x(i, l) * y;
                }
            }
            op += c * k;
        }
    }
    Eigen::SelfAdjointEigenSolver<CMat> es(op);
    return es.eigenvalues()[0];
}

/// One named identity checked in an instance run.
struct CategoryCheck {
    std::string object;
    std::string name;
    double residual = 0;
    double tolerance = 0;

    bool passed() const { return residual <= tolerance; }
};

struct CategoryReport {
    std::vector<CategoryCheck> checks;

    bool passed() const {
        return std::all_of(checks.begin(), checks.end(), [](const auto &c) { return c.passed(); });
    }
    double max_residual() const {
        double r = 0;
        for (const auto &c : checks) {
            r = std::max(r, c.residual);
        }
        return r;
    }
};

/// Dagger-compact structure on the given algebras: conjugate involution,
/// functoriality of φ ↦ φ̄, snake equations, ε_A = e_A† ∘ σ, the pairing
/// <e_A, ā ⊗ b> = <a, b>, dual morphisms versus adjoints, and the factored
/// tensor inner product.
inline CategoryReport dagger_compact_instance(const std::vector<JordanAlgebra> &algebras, int samples, Rng &rng,
                                              double tol = 1e-9) {
    CategoryReport rep;
    std::vector<CategoryObject> objs;
    for (const auto &j : algebras) {
        auto sd = conjugate::self_duality_check(conjugate::make_conjugate(j), std::max(10, samples), rng, tol);
        rep.checks.push_back({j.name(), "self-duality", sd.passed() ? 0.0 : 1.0, 0.0});
        objs.push_back(make_object(j));
    }
    auto add = [&](const std::string &obj, const std::string &name, double r, double t) {
        for (auto &c : rep.checks) {
            if (c.object == obj && c.name == name) {
                c.residual = std::max(c.residual, r);
                return;
            }
        }
        rep.checks.push_back({obj, name, r, t});
    };
    for (size_t k = 0; k < objs.size(); k++) {
        const auto &o = objs[k];
        const auto &j = algebras[k];
        int d = o.dim;
        CategoryObject ob = conjugate_object(o);
        add(o.name, "double-conjugate", (ob.gamma * o.gamma - Mat::Identity(d, d)).cwiseAbs().maxCoeff(), tol);
        auto sn = snake_check(o);
        add(o.name, "snake", std::max(sn.left, sn.right), tol);
        auto snb = snake_check(ob);
        add(o.name, "snake-conjugate", std::max(snb.left, snb.right), tol);
        Mat sigma = swap_map(d, d);
        add(o.name, "counit-dagger", (Vec(sigma.transpose() * o.e) - o.counit()).cwiseAbs().maxCoeff(), tol);
        add(o.name, "swap-unitary", (sigma.transpose() * sigma - Mat::Identity(d * d, d * d)).cwiseAbs().maxCoeff(),
            tol);
        Mat q = random_orthogonal(d, rng);
        add(o.name, "unit-basis-independence", (unit_vector(o.gamma, q) - o.e).norm(), 1e-10);
        if (j.is_simple() && j.family() == Family::complexherm) {
            add(o.name, "unit-positive", std::max(0.0, -unit_min_eigenvalue(j, o)), tol);
        }
        auto pair = conjugate::make_conjugate(j);
        for (int s = 0; s < samples; s++) {
            Vec at = jordan::random_element(j, rng), bt = jordan::random_element(j, rng);
            Vec a = to_object_coords(j, at), b = to_object_coords(j, bt);
            add(o.name, "conjugate-involution", std::abs(ob.eta(o.bar(a), b) - o.eta(a, o.bar(b))), tol);
            add(o.name, "unit-pairing", std::abs(o.e.dot(kron(o.bar(a), b)) - a.dot(b)), tol);
            add(o.name, "correlator-coordinates", std::abs(o.eta(a, b) - pair.correlator(at, bt)), tol);
        }
    }
    for (size_t k1 = 0; k1 < objs.size(); k1++) {
        for (size_t k2 = 0; k2 < objs.size(); k2++) {
            const auto &a = objs[k1];
            const auto &b = objs[k2];
            std::string pair = a.name + "," + b.name;
            Mat psi_dom = Mat::Identity(a.dim, a.dim);
            for (int s = 0; s < samples; s++) {
                Mat phi(b.dim, a.dim), psi(a.dim, a.dim);
                for (int c = 0; c < a.dim; c++) {
                    phi.col(c) = gaussian_vec(b.dim, rng);
                    psi.col(c) = gaussian_vec(a.dim, rng);
                }
                Mat dual = dual_morphism(a, b, phi);
                add(pair, "dual-is-adjoint",
                    (a.gamma.transpose() * dual * b.gamma - dagger(phi)).cwiseAbs().maxCoeff(), tol);
                add(pair, "dual-contravariant",
                    (dual_morphism(a, b, phi * psi) - dual_morphism(a, a, psi) * dual).cwiseAbs().maxCoeff(), tol);
                add(pair, "dual-involutive",
                    (dual_morphism(conjugate_object(b), conjugate_object(a), dual) - phi).cwiseAbs().maxCoeff(), tol);
                add(pair, "conjugate-functorial",
                    (conjugate_morphism(a, b, phi * psi) - conjugate_morphism(a, b, phi) * conjugate_morphism(a, a, psi))
                        .cwiseAbs()
                        .maxCoeff(),
                    tol);
                add(pair, "dagger-contravariant",
                    (dagger(phi * psi) - dagger(psi) * dagger(phi)).cwiseAbs().maxCoeff(), tol);
            }
            add(pair, "conjugate-identity",
                (conjugate_morphism(a, a, psi_dom) - psi_dom).cwiseAbs().maxCoeff(), tol);
            std::vector<Vec> va, vb;
            for (int i = 0; i < std::min(a.dim, 4); i++) {
                va.push_back(to_object_coords(algebras[k1], jordan::random_primitive(algebras[k1], rng)));
            }
            for (int i = 0; i < std::min(b.dim, 4); i++) {
                vb.push_back(to_object_coords(algebras[k2], jordan::random_primitive(algebras[k2], rng)));
            }
            TensorSpace ts{gram_of(va), gram_of(vb)};
            add(pair, "tensor-inner-product", (product_gram(va, vb) - ts.gram()).cwiseAbs().maxCoeff(), 1e-12);
        }
    }
    return rep;
}

}  // namespace ejalab::category
