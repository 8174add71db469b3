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

#include "ejalab/composite.hpp"
#include "ejalab/core.hpp"
#include "ejalab/jordan.hpp"
#include "ejalab/testspace.hpp"

namespace ejalab::conjugate {

using jordan::Family;
using jordan::JordanAlgebra;
using jordan::JordanFrame;

/// Involution γ on coordinates: identity on real structures, transpose on
/// complex Hermitian blocks, entrywise q -> j q j^{-1} on quaternionic blocks.
inline Mat conjugation_involution(const JordanAlgebra &j) {
    Mat g = Mat::Identity(j.dim(), j.dim());
    for (const auto &b : j.blocks()) {
        if (b.family == Family::complexherm) {
            int k = b.offset + b.size;
            for (int p = 0; p < b.size * (b.size - 1) / 2; p++, k += 2) {
                g(k + 1, k + 1) = -1;
            }
        } else if (b.family == Family::quatherm) {
            int k = b.offset + b.size;
            for (int p = 0; p < b.size * (b.size - 1) / 2; p++, k += 4) {
                g(k + 1, k + 1) = -1;
                g(k + 3, k + 3) = -1;
            }
        }
    }
    return g;
}

/// Ā realized on the same coordinates; η(a, c) = aᵀ eta c = (1/n) <a, γ⁻¹ c>.
struct ConjugatePair {
    JordanAlgebra algebra;
    Mat gamma;
    Mat eta;
    int rank = 0;

    Vec bar(const Vec &a) const { return gamma * a; }
    double correlator(const Vec &a, const Vec &c) const { return a.dot(eta * c); }
};

inline ConjugatePair make_conjugate(const JordanAlgebra &j) {
    ConjugatePair p{j, conjugation_involution(j), Mat(), j.rank()};
    int d = j.dim();
    if ((p.gamma * p.gamma - Mat::Identity(d, d)).cwiseAbs().maxCoeff() > 0 ||
        (p.gamma.transpose() * p.gamma - Mat::Identity(d, d)).cwiseAbs().maxCoeff() > 0) {
        throw Error("make_conjugate: involution is not an orthogonal involution");
    }
    p.eta = p.gamma.transpose() / (double)j.rank();
    return p;
}

/// <(a ⊗ b̄)Ψ, Ψ> with Ψ = n^{-1/2} Σ e_i ⊗ e_i, built explicitly on C^n ⊗ C^n.
inline double epr_correlation(const CMat &a, const CMat &b) {
    int n = (int)a.rows();
    CVec psi = CVec::Zero(n * n);
    for (int i = 0; i < n; i++) {
        psi[i * n + i] = 1.0 / std::sqrt((double)n);
    }
    CMat bbar = b.conjugate();
    CMat op(n * n, n * n);
    for (int i = 0; i < n; i++) {
        for (int k = 0; k < n; k++) {
            op.block(i * n, k * n, n, n) = a(i, k) * bbar;
        }
    }
    return (psi.adjoint() * op * psi)(0, 0).real();
}

inline CMat to_cmat(const numkernel::RingMatrix<numkernel::Complex> &m) {
    CMat c(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); i++) {
        for (int k = 0; k < m.cols(); k++) {
            c(i, k) = m(i, k);
        }
    }
    return c;
}

struct ConjugateConditions {
    double self_correlation = 0;  // max |η(x, x̄) - 1/n|
    double orthogonal = 0;        // max |η(x, ȳ)|, x ≠ y in one frame
    double symmetry = 0;          // max |η(x, ȳ) - η(y, x̄)|
    double marginal = 0;          // max |η(x, ū) - 1/n|
    double positivity = 0;        // min η(a, b̄) over positive pairs
};

inline ConjugateConditions check_conjugate_conditions(const ConjugatePair &p, int samples, Rng &rng) {
    const auto &j = p.algebra;
    ConjugateConditions c;
    double inv_n = 1.0 / p.rank;
    Vec ubar = p.bar(j.unit());
    for (int s = 0; s < samples; s++) {
        Vec x = jordan::random_primitive(j, rng);
        Vec y = jordan::random_primitive(j, rng);
        c.self_correlation = std::max(c.self_correlation, std::abs(p.correlator(x, p.bar(x)) - inv_n));
        c.symmetry = std::max(c.symmetry, std::abs(p.correlator(x, p.bar(y)) - p.correlator(y, p.bar(x))));
        c.marginal = std::max(c.marginal, std::abs(p.correlator(x, ubar) - inv_n));
        Vec a = jordan::random_positive(j, rng), b = jordan::random_positive(j, rng);
        c.positivity = std::min(c.positivity, p.correlator(a / j.trace(a), p.bar(b / j.trace(b))));
    }
    for (int s = 0; s < std::max(1, samples / 10); s++) {
        JordanFrame f = jordan::random_frame(j, rng);
        for (size_t a = 0; a < f.elements.size(); a++) {
            for (size_t b = 0; b < f.elements.size(); b++) {
                if (a != b) {
                    c.orthogonal = std::max(c.orthogonal, std::abs(p.correlator(f.elements[a], p.bar(f.elements[b]))));
                }
            }
        }
    }
    return c;
}

struct SpectralityEntry {
    bool spectral = false;
    int test = -1;  // finite models: index of the test used
    Vec weights;
    double residual = 0;
};

struct SpectralityReport {
    std::vector<SpectralityEntry> entries;

    bool all_spectral() const {
        return std::all_of(entries.begin(), entries.end(), [](const auto &e) { return e.spectral; });
    }
    double max_residual() const {
        double r = 0;
        for (const auto &e : entries) {
            r = std::max(r, e.residual);
        }
        return r;
    }
};

/// Jordan models: α = Σ α(x) δ_x over the eigenframe, δ_x = <x, .>.
inline SpectralityReport spectrality_check(const JordanAlgebra &j, int samples, Rng &rng, double tol = 1e-9) {
    SpectralityReport rep;
    for (int s = 0; s < samples; s++) {
        Vec a = jordan::random_state(j, rng);
        auto d = jordan::diagonalize(j, a);
        SpectralityEntry e;
        Vec acc = Vec::Zero(j.dim());
        e.weights = Vec(j.rank());
        for (int k = 0; k < j.rank(); k++) {
            e.weights[k] = j.inner(a, d.frame[k]);
            acc += e.weights[k] * d.frame[k];
        }
        e.residual = (acc - a).norm();
        e.spectral = e.residual <= tol && (e.weights.array() >= -tol).all();
        rep.entries.push_back(e);
    }
    return rep;
}

/// Finite models: search the tests for α = Σ_{x∈E} α(x) δ_x.
inline SpectralityReport spectrality_check(const testspace::FiniteModel &m, const std::vector<Vec> &deltas,
                                           const std::vector<Vec> &states, double tol = 1e-9) {
    for (int x = 0; x < m.num_outcomes(); x++) {
        if (std::abs(deltas.at(x)[x] - 1) > tol) {
            throw ValidationError("spectrality_check: delta for outcome '" + m.space().outcomes[x] +
                                  "' does not assign it probability 1");
        }
    }
    SpectralityReport rep;
    for (const auto &alpha : states) {
        SpectralityEntry best;
        best.residual = 1e300;
        for (size_t t = 0; t < m.space().tests.size(); t++) {
            Vec acc = Vec::Zero(alpha.size());
            Vec w((int)m.space().tests[t].size());
            int k = 0;
            for (int x : m.space().tests[t]) {
                w[k++] = alpha[x];
                acc += alpha[x] * deltas[x];
            }
            double r = (acc - alpha).cwiseAbs().maxCoeff();
            if (r < best.residual) {
                best = {r <= tol, (int)t, w, r};
            }
        }
        rep.entries.push_back(best);
    }
    return rep;
}

/// δ_x := barycenter of the face F_x.
inline std::vector<Vec> barycenter_deltas(const testspace::FiniteModel &m) {
    std::vector<Vec> d;
    for (int x = 0; x < m.num_outcomes(); x++) {
        d.push_back(testspace::face_barycenter(m, x));
    }
    return d;
}

struct FilterSpec {
    JordanFrame frame;
    std::vector<double> coeffs;
    Vec w;         // Σ t_x x
    Mat phi;       // U_{w^{1/2}}
    double residual = 0;  // max ‖Φ*(x) - t_x x‖
};

inline FilterSpec make_filter(const JordanAlgebra &j, const JordanFrame &frame, const std::vector<double> &coeffs) {
    if (coeffs.size() != frame.elements.size()) {
        throw ValidationError("make_filter: one coefficient per frame element required");
    }
    FilterSpec f{frame, coeffs, Vec::Zero(j.dim()), Mat(), 0};
    Vec root = Vec::Zero(j.dim());
    for (size_t k = 0; k < coeffs.size(); k++) {
        if (!(coeffs[k] >= 0 && coeffs[k] <= 1)) {
            throw ValidationError("make_filter: coefficient " + std::to_string(coeffs[k]) + " outside [0, 1]");
        }
        f.w += coeffs[k] * frame.elements[k];
        root += std::sqrt(coeffs[k]) * frame.elements[k];
    }
    f.phi = jordan::quadratic_rep(j, root);
    for (size_t k = 0; k < coeffs.size(); k++) {
        const Vec &x = frame.elements[k];
        f.residual = std::max(f.residual, (f.phi.transpose() * x - coeffs[k] * x).norm());
    }
    return f;
}

/// max |η(Φ* a, b̄) - η(a, γ Φ* γ⁻¹ b̄)| over random positive pairs.
inline double filter_symmetry_deviation(const ConjugatePair &p, const Mat &phi, int samples, Rng &rng) {
    const auto &j = p.algebra;
    Mat phi_star = phi.transpose();
    Mat phi_bar = p.gamma * phi_star * p.gamma.transpose();
    double dev = 0;
    for (int s = 0; s < samples; s++) {
        Vec a = jordan::random_state(j, rng);
        Vec bbar = p.bar(jordan::random_state(j, rng));
        dev = std::max(dev, std::abs(p.correlator(phi_star * a, bbar) - p.correlator(a, phi_bar * bbar)));
    }
    return dev;
}

inline bool filter_is_symmetric(const ConjugatePair &p, const Mat &phi, int samples, Rng &rng, double tol = 1e-9) {
    return filter_symmetry_deviation(p, phi, samples, rng) <= tol;
}

struct FilterInverse {
    bool reversible = false;
    double p = 0;   // min t_x
    Mat inverse;    // p U_{w^{-1/2}}
    double residual = 0;
};

inline FilterInverse filter_reversibility(const JordanAlgebra &j, const FilterSpec &f) {
    FilterInverse r;
    double tmin = *std::min_element(f.coeffs.begin(), f.coeffs.end());
    if (!(tmin > 0)) {
        return r;
    }
    Vec root_inv = Vec::Zero(j.dim());
    for (size_t k = 0; k < f.coeffs.size(); k++) {
        root_inv += f.frame.elements[k] / std::sqrt(f.coeffs[k]);
    }
    r.reversible = true;
    r.p = tmin;
    r.inverse = tmin * jordan::quadratic_rep(j, root_inv);
    r.residual = op_norm(r.inverse * f.phi - tmin * Mat::Identity(j.dim(), j.dim()));
    return r;
}

struct CorrelationWitness {
    JordanFrame frame;       // E, eigenframe of the state
    Mat table;               // ω(x, ȳ) over all sampled outcomes
    composite::JointState joint;
    composite::Correlation correlation;  // on E x Ē
    double marginal_residual = 0;        // ‖ω₁ - α‖ over sampled outcomes
    double signaling_residual = 0;
};

/// ω(b, c̄) = <U_{a^{1/2}} b, c>, tabulated on the eigenframe of a plus
/// `extra_tests` random frames per side.
inline CorrelationWitness correlation_condition_check(const ConjugatePair &p, const Vec &state, Rng &rng,
                                                      int extra_tests = 2) {
    const auto &j = p.algebra;
    CorrelationWitness w;
    auto d = jordan::diagonalize(j, state);
    w.frame.elements = d.frame;
    Mat u = jordan::quadratic_rep(j, jordan::sqrt_of(j, state));
    std::vector<JordanFrame> left{w.frame}, right{w.frame};
    for (int k = 0; k < extra_tests; k++) {
        left.push_back(jordan::random_frame(j, rng));
        right.push_back(jordan::random_frame(j, rng));
    }
    auto space_of = [](const std::vector<JordanFrame> &frames, const std::string &tag) {
        testspace::TestSpace s;
        for (size_t t = 0; t < frames.size(); t++) {
            std::vector<int> test;
            for (size_t k = 0; k < frames[t].elements.size(); k++) {
                test.push_back(s.size());
                s.outcomes.push_back(tag + std::to_string(t) + "." + std::to_string(k));
            }
            s.tests.push_back(test);
        }
        return s;
    };
    std::vector<Vec> lx, ry;
    for (const auto &f : left) {
        lx.insert(lx.end(), f.elements.begin(), f.elements.end());
    }
    for (const auto &f : right) {
        ry.insert(ry.end(), f.elements.begin(), f.elements.end());
    }
    w.table = Mat((int)lx.size(), (int)ry.size());
    for (size_t a = 0; a < lx.size(); a++) {
        for (size_t b = 0; b < ry.size(); b++) {
            w.table(a, b) = j.inner(u * lx[a], ry[b]);
        }
    }
    w.joint = {space_of(left, "E"), space_of(right, "F"), w.table};
    auto diag = composite::validate_joint(w.joint.left, w.joint.right, w.table, 1e-9);
    w.signaling_residual = std::max(diag.signaling_residual, diag.normalization_residual);
    auto m = composite::marginals_conditionals(w.joint);
    for (size_t a = 0; a < lx.size(); a++) {
        w.marginal_residual = std::max(w.marginal_residual, std::abs(m.first[a] - j.inner(state, lx[a])));
    }
    std::vector<int> e(j.rank());
    for (int k = 0; k < j.rank(); k++) {
        e[k] = k;
    }
    w.correlation = composite::correlates(w.table, e, e, 1e-9);
    return w;
}

/// Finite models: ω = Σ_{x∈E} α(x) δ_x ⊗ δ_x on X x X when α is spectral.
inline std::optional<composite::JointState> correlation_condition_check(const testspace::FiniteModel &m,
                                                                        const std::vector<Vec> &deltas,
                                                                        const Vec &state, double tol = 1e-9) {
    auto rep = spectrality_check(m, deltas, {state}, tol);
    if (!rep.entries[0].spectral) {
        return std::nullopt;
    }
    Mat w = Mat::Zero(m.num_outcomes(), m.num_outcomes());
    for (int x : m.space().tests[rep.entries[0].test]) {
        w += state[x] * deltas[x] * deltas[x].transpose();
    }
    return composite::JointState{m.space(), m.space(), w};
}

struct BitBallReport {
    int dimension = 0;
    double radius = 1 / std::sqrt(2.0);
    double max_deviation = 0;
    std::vector<Vec> coords;  // x - ρ in an orthonormal basis of u⊥
};

inline BitBallReport bit_ball_check(const JordanAlgebra &j, int samples, Rng &rng) {
    if (j.rank() != 2) {
        throw ValidationError("bit_ball_check: algebra " + j.name() + " has rank " + std::to_string(j.rank()) +
                              ", expected 2");
    }
    BitBallReport r;
    Vec u = j.unit();
    Vec rho = u / 2;
    Mat basis = null_space(u.transpose());
    r.dimension = (int)basis.cols();
    for (int s = 0; s < samples; s++) {
        Vec x = jordan::random_primitive(j, rng);
        r.max_deviation = std::max(r.max_deviation, std::abs((x - rho).norm() - r.radius));
        r.coords.push_back(basis.transpose() * (x - rho));
    }
    return r;
}

struct SelfDualityReport {
    bool spectral = false;
    double gram_min_eig = 0;
    double gram_asymmetry = 0;
    double gram_unit = 0;       // η(u, ū)
    double easy_min = 0;        // min η(a, b̄), a, b >= 0
    double hard_max = -1;       // max η(a, p̄) over negative-eigenspace witnesses
    double norm_max = 0;        // max ‖a‖ over sampled states
    double sharp_deviation = 0; // max ‖a - x‖ over states with α(x) = 1
    std::optional<Vec> counterexample;
    std::string failure;

    bool passed() const { return failure.empty(); }
};

/// <a, b> := η(a, b̄) is symmetric positive definite and self-dualizing, and
/// the model is sharp.
inline SelfDualityReport self_duality_check(const ConjugatePair &p, int samples, Rng &rng, double tol = 1e-9) {
    const auto &j = p.algebra;
    SelfDualityReport r;
    auto fail = [&](const std::string &why, const Vec &v) {
        if (r.failure.empty()) {
            r.failure = why;
            r.counterexample = v;
        }
    };
    r.spectral = spectrality_check(j, std::max(1, samples / 10), rng, tol).all_spectral();
    if (!r.spectral) {
        fail("model is not spectral", j.unit());
    }
    // Gram matrix on a basis of sampled primitives
    std::vector<Vec> basis;
    Mat span(j.dim(), 0);
    for (int attempt = 0; attempt < 200 * j.dim() && (int)basis.size() < j.dim(); attempt++) {
        Vec x = jordan::random_primitive(j, rng);
        Vec resid = span.cols() ? Vec(x - span * (span.transpose() * x)) : x;
        if (resid.norm() > 0.1) {
            basis.push_back(x);
            span.conservativeResize(Eigen::NoChange, span.cols() + 1);
            span.col(span.cols() - 1) = resid.normalized();
        }
    }
    if ((int)basis.size() < j.dim()) {
        fail("sampled primitives do not span the effect space", j.unit());
    }
    Mat gram((int)basis.size(), (int)basis.size());
    for (size_t a = 0; a < basis.size(); a++) {
        for (size_t b = 0; b < basis.size(); b++) {
            gram(a, b) = p.correlator(basis[a], p.bar(basis[b]));
        }
    }
    r.gram_asymmetry = (gram - gram.transpose()).cwiseAbs().maxCoeff();
    if (r.gram_asymmetry > tol) {
        fail("correlator form is not symmetric", basis[0]);
    }
    Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (gram + gram.transpose()));
    r.gram_min_eig = es.eigenvalues()[0];
    if (r.gram_min_eig <= 1e-8) {
        fail("correlator form is not positive definite", es.eigenvectors().col(0));
    }
    r.gram_unit = p.correlator(j.unit(), p.bar(j.unit()));
    if (std::abs(r.gram_unit - 1) > tol) {
        fail("η(u, ū) differs from 1", j.unit());
    }
    // self-duality, easy direction
    for (int s = 0; s < samples; s++) {
        Vec a = jordan::random_state(j, rng), b = jordan::random_state(j, rng);
        double v = p.correlator(a, p.bar(b));
        r.easy_min = std::min(r.easy_min, v);
        if (v < -tol) {
            fail("positive pair with negative correlator", a);
        }
    }
    // hard direction: the most negative eigenspace projector detects non-positivity
    for (int s = 0; s < samples; s++) {
        Vec a = jordan::random_element(j, rng);
        auto dec = jordan::spectral_decompose(j, a);
        if (dec.values.empty() || dec.values.back() >= 0) {
            a = -a;
            dec = jordan::spectral_decompose(j, a);
        }
        if (dec.values.empty() || dec.values.back() >= 0) {
            continue;
        }
        double v = p.correlator(a, p.bar(dec.projectors.back()));
        r.hard_max = std::max(r.hard_max, v);
        if (!(v < -tol)) {
            fail("non-positive element not detected by its negative eigenspace", a);
        }
    }
    // sharpness through the norm bound
    for (int s = 0; s < std::max(1, samples / 10); s++) {
        Vec x = jordan::random_primitive(j, rng);
        for (double eps : {0.0, 1e-3, 0.1, 0.5, 1.0}) {
            Vec a = (1 - eps) * x + eps * jordan::random_state(j, rng);
            r.norm_max = std::max(r.norm_max, a.norm());
            if (a.norm() > 1 + tol) {
                fail("state exceeds the unit norm bound", a);
            }
            if (j.inner(a, x) >= 1 - 1e-12) {
                r.sharp_deviation = std::max(r.sharp_deviation, (a - x).norm());
                if ((a - x).norm() > 1e-6) {
                    fail("second state assigns probability 1 to a primitive outcome", a);
                }
            }
        }
    }
    return r;
}

/// Outcome of one hypothesis in an instance check.
struct InstanceCheck {
    std::string name;
    bool verifiable = true;
    bool passed = false;
    double residual = 0;
    std::string detail;
};

struct InstanceReport {
    std::vector<InstanceCheck> checks;

    bool passed() const {
        return std::all_of(checks.begin(), checks.end(), [](const auto &c) { return c.verifiable && c.passed; });
    }
    std::vector<std::string> unverifiable() const {
        std::vector<std::string> out;
        for (const auto &c : checks) {
            if (!c.verifiable) {
                out.push_back(c.name);
            }
        }
        return out;
    }
};

/// Conjugate, sharpness, correlation condition, reversible filters and
/// filter preparability for the Jordan model of j.
inline InstanceReport characterization_instance(const JordanAlgebra &j, int samples, Rng &rng, double tol = 1e-9) {
    InstanceReport rep;
    ConjugatePair p = make_conjugate(j);
    auto cc = check_conjugate_conditions(p, samples, rng);
    double cres = std::max({cc.self_correlation, cc.orthogonal, cc.symmetry, cc.marginal, -cc.positivity});
    rep.checks.push_back({"conjugate", true, cres <= 1e-10, cres, ""});

    auto sd = self_duality_check(p, samples, rng, tol);
    rep.checks.push_back({"sharpness", true, sd.passed(), sd.sharp_deviation, sd.failure});

    double corr = 0;
    bool correlating = true;
    for (int s = 0; s < std::max(1, samples / 10); s++) {
        Vec a = jordan::random_state(j, rng);
        auto w = correlation_condition_check(p, a, rng);
        corr = std::max({corr, w.marginal_residual, w.signaling_residual});
        correlating = correlating && w.correlation.correlating;
    }
    rep.checks.push_back({"correlation", true, correlating && corr <= tol, corr, ""});

    double frev = 0;
    bool reversible = true;
    for (int s = 0; s < std::max(1, samples / 10); s++) {
        JordanFrame f = jordan::random_frame(j, rng);
        std::vector<double> t;
        for (int k = 0; k < j.rank(); k++) {
            t.push_back(0.05 + 0.95 * uniform01(rng));
        }
        auto spec = make_filter(j, f, t);
        auto inv = filter_reversibility(j, spec);
        frev = std::max({frev, spec.residual, inv.residual, filter_symmetry_deviation(p, spec.phi, 5, rng)});
        reversible = reversible && inv.reversible;
    }
    rep.checks.push_back({"reversible-filters", true, reversible && frev <= tol, frev, ""});

    double prep = 0;
    for (int s = 0; s < std::max(1, samples / 10); s++) {
        Vec a = jordan::random_interior(j, rng);
        a /= j.trace(a);
        auto d = jordan::diagonalize(j, a);
        auto spec = make_filter(j, {d.frame}, d.values);
        Vec rho = j.unit() / j.rank();
        prep = std::max(prep, (spec.phi * rho - a / j.rank()).norm());
    }
    rep.checks.push_back({"preparability", true, prep <= tol, prep, ""});
    return rep;
}

/// Finite model with no conjugate supplied: only sharpness is decidable.
inline InstanceReport characterization_instance(const testspace::FiniteModel &m) {
    InstanceReport rep;
    const std::string why = "no conjugate system supplied";
    rep.checks.push_back({"conjugate", false, false, 0, why});
    rep.checks.push_back({"sharpness", true, testspace::is_sharp(m), 0, ""});
    rep.checks.push_back({"correlation", false, false, 0, why});
    rep.checks.push_back({"reversible-filters", false, false, 0, "no filters supplied"});
    rep.checks.push_back({"preparability", false, false, 0, "no filters supplied"});
    return rep;
}

}  // namespace ejalab::conjugate
