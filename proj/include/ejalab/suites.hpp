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
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ejalab/category.hpp"
#include "ejalab/composite.hpp"
#include "ejalab/conjugate.hpp"
#include "ejalab/jordan.hpp"
#include "ejalab/ordered.hpp"
#include "ejalab/report.hpp"
#include "ejalab/testspace.hpp"

namespace ejalab::suites {

using jordan::Family;
using jordan::JordanAlgebra;
using report::CheckResult;
using report::Status;
using report::VerificationReport;

struct SuiteOptions {
    std::uint64_t seed = 1;
    std::optional<int> samples;                 // overrides every per-check default
    std::optional<JordanAlgebra> algebra;       // restricts Jordan checks to one algebra
    Tolerances tol;
};

namespace anchors {
inline const std::string axioms = "euclidean Jordan algebra axioms";
inline const std::string spectral = "canonical spectral decomposition";
inline const std::string self_dual = "self-dualizing inner product";
inline const std::string homogeneity = "homogeneity of the positive cone";
inline const std::string conjugate = "conjugate system";
inline const std::string filters = "symmetric reversible filters";
inline const std::string bit_ball = "bit ball";
inline const std::string cone_gap = "effect cone gap of the diamond bit";
inline const std::string sharpening = "sharpening by symmetry";
inline const std::string pr_box = "PR box";
inline const std::string dagger = "dagger-compact structure";
inline const std::string characterization = "characterization of Jordan models";
}  // namespace anchors

namespace detail {

inline std::string fmt(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

inline CheckResult make_check(const std::string &name, const std::string &anchor, bool ok, double residual,
                              int samples, std::uint64_t seed, std::string detail = "") {
    return {name, anchor, ok ? Status::pass : Status::fail, residual, samples, seed, std::move(detail)};
}

inline Vec unit_normalized(const Vec &v) { return v / std::max(v.norm(), 1e-300); }

inline JordanAlgebra mixed_sum() {
    return JordanAlgebra::direct_sum({JordanAlgebra::make(Family::classical, 1), JordanAlgebra::make(Family::spin, 3),
                                      JordanAlgebra::make(Family::complexherm, 2)});
}

}  // namespace detail

/// Every family over its supported size range, plus one mixed direct sum.
inline std::vector<JordanAlgebra> sweep_algebras() {
    std::vector<JordanAlgebra> out;
    for (int n = 1; n <= 5; n++) {
        out.push_back(JordanAlgebra::make(Family::classical, n));
        out.push_back(JordanAlgebra::make(Family::realherm, n));
        out.push_back(JordanAlgebra::make(Family::complexherm, n));
    }
    for (int n = 1; n <= 4; n++) {
        out.push_back(JordanAlgebra::make(Family::quatherm, n));
    }
    for (int d = 1; d <= 8; d++) {
        out.push_back(JordanAlgebra::make(Family::spin, d));
    }
    out.push_back(detail::mixed_sum());
    return out;
}

/// One representative per family.
inline std::vector<JordanAlgebra> standard_algebras() {
    return {JordanAlgebra::make(Family::classical, 3), JordanAlgebra::make(Family::realherm, 3),
            JordanAlgebra::make(Family::complexherm, 3), JordanAlgebra::make(Family::quatherm, 3),
            JordanAlgebra::make(Family::spin, 4),        detail::mixed_sum()};
}

/// Simple algebras of rank at most 4.
inline std::vector<JordanAlgebra> low_rank_algebras() {
    std::vector<JordanAlgebra> out;
    for (Family f : {Family::classical, Family::realherm, Family::complexherm, Family::quatherm}) {
        for (int n = 2; n <= 4; n++) {
            out.push_back(JordanAlgebra::make(f, n));
        }
    }
    for (int d : {2, 3, 5, 8}) {
        out.push_back(JordanAlgebra::make(Family::spin, d));
    }
    return out;
}

inline std::vector<JordanAlgebra> rank_two_algebras() {
    return {JordanAlgebra::make(Family::realherm, 2), JordanAlgebra::make(Family::complexherm, 2),
            JordanAlgebra::make(Family::quatherm, 2), JordanAlgebra::make(Family::spin, 4)};
}

inline CheckResult check_jordan_axioms(const JordanAlgebra &j, int samples, std::uint64_t seed, const Tolerances &tol) {
    Rng rng(seed);
    double comm = 0, ident = 0, unit = 0, assoc = 0, bilin = 0;
    Vec u = j.unit();
    // ½((a+b)² - a² - b²) from squares alone
    auto polar = [&](const Vec &a, const Vec &b) { return Vec(0.5 * (j.square(a + b) - j.square(a) - j.square(b))); };
    for (int s = 0; s < samples; s++) {
        Vec a = detail::unit_normalized(jordan::random_element(j, rng));
        Vec b = detail::unit_normalized(jordan::random_element(j, rng));
        Vec c = detail::unit_normalized(jordan::random_element(j, rng));
        Vec ab = j.mul(a, b), a2 = j.square(a);
        comm = std::max(comm, (ab - j.mul(b, a)).norm());
        ident = std::max(ident, (j.mul(a2, ab) - j.mul(a, j.mul(a2, b))).norm());
        unit = std::max(unit, (j.mul(u, a) - a).norm());
        assoc = std::max(assoc, std::abs(j.inner(ab, c) - j.inner(b, j.mul(a, c))));
        double t = uniform01(rng) * 4 - 2;
        bilin = std::max(bilin, (polar(Vec(a + t * c), b) - polar(a, b) - t * polar(c, b)).norm());
    }
    double r = std::max({comm, ident, unit, assoc, bilin});
    return detail::make_check("jordan-axioms:" + j.name(), anchors::axioms, r <= tol.alg, r, samples, seed,
                              "commutativity " + detail::fmt(comm) + ", jordan identity " + detail::fmt(ident) +
                                  ", unit " + detail::fmt(unit) + ", invariance " + detail::fmt(assoc) +
                                  ", polarized square bilinearity " + detail::fmt(bilin));
}

/// Half generic elements, half built on a random frame with repeated values.
inline CheckResult check_spectral(const JordanAlgebra &j, int samples, std::uint64_t seed, const Tolerances &tol) {
    Rng rng(seed);
    double recon = 0;
    int mismatches = 0;
    const double levels[] = {-1.0, 0.0, 0.5, 2.0};
    for (int s = 0; s < samples; s++) {
        Vec a;
        if (s % 2 == 0) {
            a = detail::unit_normalized(jordan::random_element(j, rng));
        } else {
            auto f = jordan::random_frame(j, rng);
            a = Vec::Zero(j.dim());
            for (const auto &x : f.elements) {
                a += levels[rng() % 4] * x;
            }
        }
        auto d1 = jordan::spectral_decompose(j, a, tol.eig);
        recon = std::max(recon, (jordan::reconstruct(d1, j.dim()) - a).norm());
        auto dg = jordan::diagonalize(j, a);
        recon = std::max(recon, (jordan::reconstruct(jordan::canonical_from_frame(dg.frame, dg.values, tol.eig),
                                                     j.dim()) -
                                 a)
                                    .norm());
        auto d2 = jordan::spectral_decompose_via(j, a, jordan::random_automorphism(j, rng), tol.eig);
        if (!jordan::canonical_equal(d1, d2, tol.eig)) {
            mismatches++;
        }
    }
    return detail::make_check("spectral-decomposition:" + j.name(), anchors::spectral,
                              recon <= tol.alg && mismatches == 0, recon, samples, seed,
                              "reconstruction " + detail::fmt(recon) + ", path mismatches " +
                                  std::to_string(mismatches));
}

/// <a, b> = η(a, b̄) >= 0 on positive pairs; a non-positive element pairs
/// negatively with the projector onto its negative eigenspace.
inline CheckResult check_self_duality(const JordanAlgebra &j, int easy, int hard, std::uint64_t seed,
                                      const Tolerances &tol) {
    Rng rng(seed);
    auto p = conjugate::make_conjugate(j);
    double easy_min = std::numeric_limits<double>::infinity();
    for (int s = 0; s < easy; s++) {
        Vec a = jordan::random_positive(j, rng), b = jordan::random_positive(j, rng);
        a /= j.trace(a);
        b /= j.trace(b);
        easy_min = std::min(easy_min, p.correlator(a, p.bar(b)));
    }
    int witnessed = 0, found = 0;
    double hard_max = -1e300;
    for (int attempt = 0; found < hard && attempt < 100 * hard; attempt++) {
        Vec a = detail::unit_normalized(jordan::random_element(j, rng));
        auto dec = jordan::spectral_decompose(j, a, tol.eig);
        if (dec.values.empty() || dec.values.back() >= -tol.alg) {
            continue;
        }
        found++;
        Vec neg = Vec::Zero(j.dim());
        for (size_t k = 0; k < dec.values.size(); k++) {
            if (dec.values[k] < 0) {
                neg += dec.projectors[k];
            }
        }
        double v = p.correlator(a, p.bar(neg));
        hard_max = std::max(hard_max, v);
        if (v < -tol.alg && jordan::is_idempotent(j, neg)) {
            witnessed++;
        }
    }
    auto sd = conjugate::self_duality_check(p, std::max(20, hard / 4), rng, tol.alg);
    bool ok = easy_min >= -tol.alg && found == hard && witnessed == hard && sd.passed();
    std::string detail = "easy min " + detail::fmt(easy_min) + ", hard witnessed " + std::to_string(witnessed) + "/" +
                         std::to_string(hard) + ", gram min eig " + detail::fmt(sd.gram_min_eig);
    if (!sd.passed()) {
        detail += ", " + sd.failure;
    }
    return detail::make_check("self-duality:" + j.name(), anchors::self_dual, ok, std::max(0.0, -easy_min), easy + hard,
                              seed, detail);
}

/// U_{b^{1/2}} U_{a^{-1/2}} carries a to b and keeps probes positive.
inline CheckResult check_homogeneity(const JordanAlgebra &j, int samples, int probes, std::uint64_t seed,
                                     const Tolerances &tol) {
    Rng rng(seed);
    double resid = 0;
    int escaped = 0;
    for (int s = 0; s < samples; s++) {
        Vec a = jordan::random_interior(j, rng), b = jordan::random_interior(j, rng);
        Mat t = jordan::quadratic_rep(j, jordan::sqrt_of(j, b)) *
                jordan::quadratic_rep(j, jordan::power_of(j, a, -0.5));
        resid = std::max(resid, (t * a - b).norm() / std::max(1.0, b.norm()));
        for (int k = 0; k < probes; k++) {
            Vec q = k % 2 ? jordan::random_positive(j, rng) : jordan::random_primitive(j, rng);
            if (!jordan::is_positive(j, t * q, tol.alg)) {
                escaped++;
            }
        }
    }
    return detail::make_check("homogeneity:" + j.name(), anchors::homogeneity, resid <= 1e-8 && escaped == 0, resid,
                              samples, seed,
                              "max |Ta - b| " + detail::fmt(resid) + ", probes leaving the cone " +
                                  std::to_string(escaped));
}

inline CheckResult check_conjugate(const JordanAlgebra &j, int samples, std::uint64_t seed, const Tolerances &) {
    Rng rng(seed);
    auto p = conjugate::make_conjugate(j);
    double self = 0, orth = 0;
    double inv_n = 1.0 / j.rank();
    for (int s = 0; s < samples; s++) {
        Vec x = jordan::random_primitive(j, rng);
        self = std::max(self, std::abs(p.correlator(x, p.bar(x)) - inv_n));
    }
    for (int s = 0; s < std::max(1, samples / 10); s++) {
        auto f = jordan::random_frame(j, rng);
        for (size_t a = 0; a < f.elements.size(); a++) {
            for (size_t b = 0; b < f.elements.size(); b++) {
                if (a != b) {
                    orth = std::max(orth, std::abs(p.correlator(f.elements[a], p.bar(f.elements[b]))));
                }
            }
        }
    }
    double r = std::max(self, orth);
    return detail::make_check("conjugate:" + j.name(), anchors::conjugate, r <= 1e-10, r, samples, seed,
                              "self-correlation " + detail::fmt(self) + ", orthogonal pairs " + detail::fmt(orth));
}

/// η(a, c) against <(A ⊗ C)Ψ, Ψ> on ℂⁿ ⊗ ℂⁿ, with C the matrix of c ∈ Ā.
inline CheckResult check_epr(int n, int samples, std::uint64_t seed, const Tolerances &tol) {
    Rng rng(seed);
    auto j = JordanAlgebra::make(Family::complexherm, n);
    auto p = conjugate::make_conjugate(j);
    double r = 0;
    for (int s = 0; s < samples; s++) {
        Vec a = jordan::random_element(j, rng), c = jordan::random_element(j, rng);
        CMat am = conjugate::to_cmat(j.to_matrix<numkernel::Complex>(a));
        CMat cm = conjugate::to_cmat(j.to_matrix<numkernel::Complex>(c));
        double epr = conjugate::epr_correlation(am, cm.conjugate());
        double trace = (am * cm.conjugate()).trace().real() / n;
        r = std::max({r, std::abs(p.correlator(a, c) - epr), std::abs(epr - trace)});
    }
    return detail::make_check("conjugate-epr:" + j.name(), anchors::conjugate, r <= tol.alg, r, samples, seed);
}

inline CheckResult check_filters(const JordanAlgebra &j, int samples, std::uint64_t seed, const Tolerances &tol) {
    Rng rng(seed);
    auto p = conjugate::make_conjugate(j);
    int filters = std::max(1, samples / 10);
    int pairs_each = std::max(1, samples / filters);
    double frame_res = 0, sym = 0, prep = 0, p_gap = 0;
    int verdict_mismatch = 0;
    jordan::JordanStateCone cone(j, seed ^ 0x5bd1e995u, 32);
    for (int s = 0; s < filters; s++) {
        auto f = jordan::random_frame(j, rng);
        std::vector<double> t;
        for (int k = 0; k < j.rank(); k++) {
            t.push_back(0.05 + 0.95 * uniform01(rng));
        }
        if (s % 3 == 2) {
            t[rng() % t.size()] = 0;
        }
        auto spec = conjugate::make_filter(j, f, t);
        frame_res = std::max(frame_res, spec.residual);
        sym = std::max(sym, conjugate::filter_symmetry_deviation(p, spec.phi, pairs_each, rng));
        Vec target = Vec::Zero(j.dim());
        for (size_t k = 0; k < t.size(); k++) {
            target += t[k] / j.rank() * f.elements[k];
        }
        prep = std::max(prep, (spec.phi * (j.unit() / j.rank()) - target).norm());
        bool positive = *std::min_element(t.begin(), t.end()) > 0;
        auto inv = conjugate::filter_reversibility(j, spec);
        auto gen = ordered::is_reversible(ordered::Process{spec.phi}, cone, j.unit(), tol.alg);
        if (inv.reversible != positive || gen.reversible != positive) {
            verdict_mismatch++;
        }
        if (positive) {
            p_gap = std::max({p_gap, std::abs(inv.p - gen.p), inv.residual});
        }
    }
    bool ok = frame_res <= 1e-10 && sym <= tol.alg && prep <= tol.alg && verdict_mismatch == 0 && p_gap <= 1e-8;
    return detail::make_check("filters:" + j.name(), anchors::filters, ok, std::max({frame_res, sym, prep}), samples,
                              seed,
                              "frame " + detail::fmt(frame_res) + ", symmetry " + detail::fmt(sym) +
                                  ", preparation " + detail::fmt(prep) + ", reversibility mismatches " +
                                  std::to_string(verdict_mismatch));
}

/// Expected ball dimension, from the family alone.
inline int expected_ball_dimension(const JordanAlgebra &j) {
    switch (j.family()) {
        case Family::classical:
            return 1;
        case Family::realherm:
            return 2;
        case Family::complexherm:
            return 3;
        case Family::quatherm:
            return 5;
        case Family::spin:
            return j.size();
        default:
            return -1;
    }
}

inline CheckResult check_bit_ball(const JordanAlgebra &j, int samples, std::uint64_t seed, const Tolerances &tol) {
    Rng rng(seed);
    auto r = conjugate::bit_ball_check(j, samples, rng);
    bool ok = r.max_deviation <= tol.alg && r.dimension == expected_ball_dimension(j);
    return detail::make_check("bit-ball:" + j.name(), anchors::bit_ball, ok, r.max_deviation, samples, seed,
                              "d=" + std::to_string(r.dimension) + ", radius " + detail::fmt(r.radius) +
                                  ", max deviation " + detail::fmt(r.max_deviation));
}

inline CheckResult check_characterization(const JordanAlgebra &j, int samples, std::uint64_t seed,
                                          const Tolerances &tol) {
    Rng rng(seed);
    auto rep = conjugate::characterization_instance(j, samples, rng, tol.alg);
    double r = 0;
    std::string detail;
    for (const auto &c : rep.checks) {
        r = std::max(r, c.residual);
        detail += (detail.empty() ? "" : ", ") + c.name + (c.passed ? " ok" : " FAILED");
    }
    return detail::make_check("characterization:" + j.name(), anchors::characterization, rep.passed(), r, samples,
                              seed, detail);
}

/// f = x̂ + ŷ - u/2 lies in V*(A)+ but outside E(A)+ for the diamond bit.
inline CheckResult check_cone_gap(std::uint64_t seed, const Tolerances &tol) {
    auto m = testspace::diamond_bit();
    auto s = ordered::build_spaces(m);
    Vec f = s.effect(0) + s.effect(2) - 0.5 * s.unit;
    auto dual = ordered::in_cone(s, ordered::ConeKind::Vstar, f, tol.lp);
    auto eff = ordered::in_cone(s, ordered::ConeKind::E, f, tol.lp);
    bool separates = !eff.member && numkernel::certificate_separates(s.effect_coords, f, eff.certificate, tol.lp);
    double min_on_states = (f.transpose() * s.vertex_coords).minCoeff();
    bool ok = dual.member && separates && ordered::is_effect(s, f, tol.lp);
    return detail::make_check("diamond-cone-gap", anchors::cone_gap, ok, std::max(0.0, -min_on_states), 1, seed,
                              std::string("in V*: ") + (dual.member ? "yes" : "no") +
                                  ", in E: " + (eff.member ? "yes" : "no") +
                                  ", certificate separates: " + (separates ? "yes" : "no"));
}

inline CheckResult check_sharpening(std::uint64_t seed) {
    auto sq = testspace::square_bit();
    auto g = testspace::square_bit_symmetry();
    auto sharp = testspace::sharpen_by_symmetry(sq, g);
    auto diamond = testspace::diamond_bit();
    auto got = sharp.states(), want = diamond.states();
    numkernel::sort_points(got);
    numkernel::sort_points(want);
    bool same = got == want;
    bool ok = g.order() == 8 && same && testspace::is_sharp(sharp) && !testspace::is_sharp(sq);
    return detail::make_check("square-bit-sharpening", anchors::sharpening, ok, 0, 1, seed,
                              std::to_string(sharp.states().size()) + " vertices, group order " +
                                  std::to_string(g.order()) + (same ? ", equals the diamond bit" : ", differs"));
}

inline CheckResult check_pr_box(std::uint64_t seed) {
    auto pr = composite::pr_box();
    Mat expected(4, 4);
    expected << 0.5, 0, 0.5, 0, 0, 0.5, 0, 0.5, 0, 0.5, 0.5, 0, 0.5, 0, 0, 0.5;
    bool exact = pr.table == expected;
    auto diag = composite::validate_joint(pr.left, pr.right, pr.table);
    bool correlating = true;
    for (const auto &e : pr.left.tests) {
        for (const auto &f : pr.right.tests) {
            correlating = correlating && composite::correlates(pr.table, e, f).correlating;
        }
    }
    auto m = composite::marginals_conditionals(pr);
    double marg = std::max((m.first.array() - 0.5).abs().maxCoeff(), (m.second.array() - 0.5).abs().maxCoeff());
    bool ok = exact && diag.valid && correlating && marg == 0;
    return detail::make_check("pr-box", anchors::pr_box, ok, diag.signaling_residual, 1, seed,
                              std::string("table ") + (exact ? "exact" : "differs") +
                                  ", non-signaling " + (diag.valid ? "yes" : "no") +
                                  ", correlates every test pair " + (correlating ? "yes" : "no"));
}

/// Snake residuals, a negative control, and e_A under a change of basis.
inline CheckResult check_snake(const JordanAlgebra &j, std::uint64_t seed, const Tolerances &tol) {
    Rng rng(seed);
    auto o = category::make_object(j);
    auto s = category::snake_check(o);
    Vec dropped = o.e - kron(Vec(o.gamma * o.basis.col(0)), Vec(o.basis.col(0)));
    auto neg = category::snake_check(o, dropped);
    double basis_dev = (category::unit_vector(o.gamma, category::random_orthogonal(o.dim, rng)) - o.e).norm();
    double r = std::max(s.left, s.right);
    bool ok = r <= tol.alg && basis_dev <= 1e-10 && neg.left > 0.5;
    return detail::make_check("snake:" + j.name(), anchors::dagger, ok, r, 1, seed,
                              "left " + detail::fmt(s.left) + ", right " + detail::fmt(s.right) +
                                  ", basis change " + detail::fmt(basis_dev) + ", dropped term " +
                                  detail::fmt(neg.left));
}

inline CheckResult check_dagger_compact(const JordanAlgebra &j, int samples, std::uint64_t seed,
                                        const Tolerances &tol) {
    Rng rng(seed);
    auto rep = category::dagger_compact_instance({JordanAlgebra::make(Family::classical, 2), j}, samples, rng, tol.alg);
    std::string failed;
    for (const auto &c : rep.checks) {
        if (!c.passed()) {
            failed += (failed.empty() ? "" : ", ") + c.object + " " + c.name;
        }
    }
    return detail::make_check("dagger-compact:" + j.name(), anchors::dagger, rep.passed(), rep.max_residual(), samples,
                              seed, failed.empty() ? std::to_string(rep.checks.size()) + " identities" : failed);
}

inline CheckResult check_local_tomography(std::uint64_t seed) {
    bool c22 = category::local_tomography_check(Family::complexherm, 2, 2);
    bool c23 = category::local_tomography_check(Family::complexherm, 2, 3);
    bool r22 = category::local_tomography_check(Family::realherm, 2, 2);
    bool q22 = category::local_tomography_check(Family::classical, 2, 3);
    int rd = JordanAlgebra::make(Family::realherm, 2).dim();
    int rc = category::standard_composite_dim(Family::realherm, 2, 2);
    bool ok = c22 && c23 && !r22 && q22 && rd * rd == 9 && rc == 10;
    return detail::make_check("local-tomography", anchors::dagger, ok, 0, 1, seed,
                              "complexherm(2)x(2) " + std::string(c22 ? "pass" : "fail") + ", realherm(2)x(2) " +
                                  std::to_string(rd * rd) + " vs " + std::to_string(rc));
}

namespace detail {

inline std::vector<JordanAlgebra> pick(const SuiteOptions &o, std::vector<JordanAlgebra> defaults) {
    if (o.algebra) {
        return {*o.algebra};
    }
    return defaults;
}

inline std::uint64_t seed_for(const SuiteOptions &o, const std::string &name) {
    return report::derive_seed(o.seed, name);
}

}  // namespace detail

inline VerificationReport suite_appendix_b(const SuiteOptions &o) {
    VerificationReport r{"appendixB", o.seed, o.tol, {}, std::nullopt};
    for (const auto &j : detail::pick(o, sweep_algebras())) {
        r.add(check_jordan_axioms(j, o.samples.value_or(1000), detail::seed_for(o, "jordan-axioms:" + j.name()), o.tol));
        r.add(check_spectral(j, o.samples.value_or(500), detail::seed_for(o, "spectral-decomposition:" + j.name()),
                             o.tol));
    }
    return r;
}

inline VerificationReport suite_lemma1(const SuiteOptions &o) {
    VerificationReport r{"lemma1", o.seed, o.tol, {}, std::nullopt};
    for (const auto &j : detail::pick(o, standard_algebras())) {
        int easy = o.samples.value_or(1000), hard = o.samples ? std::max(1, *o.samples / 5) : 200;
        r.add(check_self_duality(j, easy, hard, detail::seed_for(o, "self-duality:" + j.name()), o.tol));
    }
    return r;
}

inline VerificationReport suite_theorem2(const SuiteOptions &o) {
    VerificationReport r{"theorem2", o.seed, o.tol, {}, std::nullopt};
    for (const auto &j : detail::pick(o, standard_algebras())) {
        r.add(check_homogeneity(j, o.samples.value_or(200), 50, detail::seed_for(o, "homogeneity:" + j.name()), o.tol));
        r.add(check_conjugate(j, o.samples.value_or(100), detail::seed_for(o, "conjugate:" + j.name()), o.tol));
        r.add(check_filters(j, o.samples.value_or(500), detail::seed_for(o, "filters:" + j.name()), o.tol));
        r.add(check_characterization(j, o.samples.value_or(50), detail::seed_for(o, "characterization:" + j.name()),
                                     o.tol));
    }
    std::vector<int> epr_sizes;
    if (!o.algebra) {
        epr_sizes = {2, 3, 4};
    } else if (o.algebra->family() == Family::complexherm && o.algebra->size() <= 4) {
        epr_sizes = {o.algebra->size()};
    }
    for (int n : epr_sizes) {
        std::string name = "conjugate-epr:complexherm(" + std::to_string(n) + ")";
        r.add(check_epr(n, o.samples.value_or(100), detail::seed_for(o, name), o.tol));
    }
    return r;
}

inline VerificationReport suite_bitball(const SuiteOptions &o) {
    VerificationReport r{"bitball", o.seed, o.tol, {}, std::nullopt};
    for (const auto &j : detail::pick(o, rank_two_algebras())) {
        r.add(check_bit_ball(j, o.samples.value_or(500), detail::seed_for(o, "bit-ball:" + j.name()), o.tol));
    }
    return r;
}

inline VerificationReport suite_snake(const SuiteOptions &o) {
    VerificationReport r{"snake", o.seed, o.tol, {}, std::nullopt};
    for (const auto &j : detail::pick(o, low_rank_algebras())) {
        r.add(check_snake(j, detail::seed_for(o, "snake:" + j.name()), o.tol));
        r.add(check_dagger_compact(j, o.samples.value_or(5), detail::seed_for(o, "dagger-compact:" + j.name()), o.tol));
    }
    r.add(check_local_tomography(detail::seed_for(o, "local-tomography")));
    return r;
}

inline VerificationReport suite_models(const SuiteOptions &o) {
    VerificationReport r{"models", o.seed, o.tol, {}, std::nullopt};
    r.add(check_cone_gap(detail::seed_for(o, "diamond-cone-gap"), o.tol));
    r.add(check_sharpening(detail::seed_for(o, "square-bit-sharpening")));
    r.add(check_pr_box(detail::seed_for(o, "pr-box")));
    return r;
}

inline const std::vector<std::string> &suite_names() {
    static const std::vector<std::string> names{"appendixB", "lemma1", "theorem2", "bitball", "snake", "models"};
    return names;
}

inline VerificationReport run_suite(const std::string &name, const SuiteOptions &o) {
    if (name == "appendixB") {
        return suite_appendix_b(o);
    }
    if (name == "lemma1") {
        return suite_lemma1(o);
    }
    if (name == "theorem2") {
        return suite_theorem2(o);
    }
    if (name == "bitball") {
        return suite_bitball(o);
    }
    if (name == "snake") {
        return suite_snake(o);
    }
    if (name == "models") {
        return suite_models(o);
    }
    throw ValidationError("unknown suite '" + name + "'");
}

/// All suites in one report.
inline VerificationReport full_report(const SuiteOptions &o) {
    VerificationReport r{"full", o.seed, o.tol, {}, std::nullopt};
    for (const auto &n : suite_names()) {
        r.append(run_suite(n, o));
    }
    return r;
}

}  // namespace ejalab::suites
