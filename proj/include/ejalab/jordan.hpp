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
#include <functional>
#include <numeric>
#include <string>
#include <type_traits>
#include <vector>

#include "ejalab/core.hpp"
#include "ejalab/numkernel/hermitian.hpp"

namespace ejalab::jordan {

using numkernel::Complex;
using numkernel::HermitianMatrix;
using numkernel::Quaternion;
using numkernel::Ring;
using numkernel::RingMatrix;

enum class Family { classical, realherm, complexherm, quatherm, spin, directsum, exceptional };

inline std::string family_name(Family f) {
    switch (f) {
        case Family::classical:
            return "classical";
        case Family::realherm:
            return "realherm";
        case Family::complexherm:
            return "complexherm";
        case Family::quatherm:
            return "quatherm";
        case Family::spin:
            return "spin";
        case Family::directsum:
            return "directsum";
        case Family::exceptional:
            return "exceptional";
    }
    return "?";
}

inline Family parse_family(const std::string &s) {
    for (Family f : {Family::classical, Family::realherm, Family::complexherm, Family::quatherm, Family::spin,
                     Family::directsum, Family::exceptional}) {
        if (family_name(f) == s) {
            return f;
        }
    }
    throw ValidationError("unknown algebra family '" + s + "'");
}

/// A simple summand occupying coordinates [offset, offset + dim).
struct Block {
    Family family;
    int size;
    int dim;
    int rank;
    int offset;
};

namespace detail {

constexpr double kSqrt2 = 1.4142135623730951;

inline int matrix_dim(Family f, int n) {
    int rd = f == Family::realherm ? 1 : f == Family::complexherm ? 2 : 4;
    return n + rd * n * (n - 1) / 2;
}

template <numkernel::Scalar S>
RingMatrix<S> coords_to_matrix(const double *c, int n) {
    constexpr int rd = Ring<S>::real_dim;
    RingMatrix<S> m(n, n);
    for (int i = 0; i < n; i++) {
        m(i, i) = S(c[i]);
    }
    int k = n;
    for (int i = 0; i < n; i++) {
        for (int j = i + 1; j < n; j++) {
            double buf[4];
            for (int q = 0; q < rd; q++) {
                buf[q] = c[k++] / kSqrt2;
            }
            S v = Ring<S>::from_reals(buf);
            m(i, j) = v;
            m(j, i) = Ring<S>::conj(v);
        }
    }
    return m;
}

/// Coordinates of the self-adjoint part of m.
template <numkernel::Scalar S>
void matrix_to_coords(const RingMatrix<S> &m, double *c) {
    constexpr int rd = Ring<S>::real_dim;
    int n = m.rows();
    for (int i = 0; i < n; i++) {
        c[i] = Ring<S>::re(m(i, i));
    }
    int k = n;
    for (int i = 0; i < n; i++) {
        for (int j = i + 1; j < n; j++) {
            S v = 0.5 * (m(i, j) + Ring<S>::conj(m(j, i)));
            double buf[4];
            Ring<S>::to_reals(v, buf);
            for (int q = 0; q < rd; q++) {
                c[k++] = kSqrt2 * buf[q];
            }
        }
    }
}

/// Calls fn with a std::type_identity of the block's scalar ring.
template <typename Fn>
decltype(auto) with_ring(Family f, Fn &&fn) {
    switch (f) {
        case Family::realherm:
            return fn(std::type_identity<double>{});
        case Family::complexherm:
            return fn(std::type_identity<Complex>{});
        case Family::quatherm:
            return fn(std::type_identity<Quaternion>{});
        default:
            throw Error("with_ring: not a matrix family");
    }
}

inline bool is_matrix_family(Family f) {
    return f == Family::realherm || f == Family::complexherm || f == Family::quatherm;
}

}  // namespace detail

/// Euclidean Jordan algebra realized on R^dim with coordinates orthonormal for
/// the trace form (primitive idempotents have norm 1).
class JordanAlgebra {
   public:
    JordanAlgebra() = default;

    static JordanAlgebra make(Family f, int size) {
        if (f == Family::exceptional) {
            throw Unsupported("exceptional algebra (3x3 octonionic Hermitian matrices) is not supported");
        }
        if (f == Family::directsum) {
            throw ValidationError("make: use direct_sum for direct sums");
        }
        if (size < 1) {
            throw ValidationError("make: size must be at least 1");
        }
        if (f == Family::quatherm && size > 8) {
            throw ValidationError("make: quatherm size must be at most 8");
        }
        Block b{f, size, 0, 0, 0};
        switch (f) {
            case Family::classical:
                b.dim = size;
                b.rank = size;
                break;
            case Family::spin:
                b.dim = size + 1;
                b.rank = 2;
                break;
            default:
                b.dim = detail::matrix_dim(f, size);
                b.rank = size;
        }
        JordanAlgebra j;
        j.blocks_.push_back(b);
        j.dim_ = b.dim;
        j.rank_ = b.rank;
        return j;
    }

    static JordanAlgebra direct_sum(const std::vector<JordanAlgebra> &parts) {
        if (parts.empty()) {
            throw ValidationError("direct_sum: no summands");
        }
        JordanAlgebra j;
        for (const auto &p : parts) {
            for (Block b : p.blocks_) {
                b.offset = j.dim_;
                j.dim_ += b.dim;
                j.rank_ += b.rank;
                j.blocks_.push_back(b);
            }
        }
        return j;
    }

    int dim() const { return dim_; }
    int rank() const { return rank_; }
    const std::vector<Block> &blocks() const { return blocks_; }
    bool is_simple() const { return blocks_.size() == 1; }
    Family family() const { return is_simple() ? blocks_[0].family : Family::directsum; }
    int size() const { return is_simple() ? blocks_[0].size : rank_; }

    std::string name() const {
        if (is_simple()) {
            return family_name(blocks_[0].family) + "(" + std::to_string(blocks_[0].size) + ")";
        }
        std::string s = "directsum(";
        for (size_t k = 0; k < blocks_.size(); k++) {
            s += (k ? ", " : "") + family_name(blocks_[k].family) + "(" + std::to_string(blocks_[k].size) + ")";
        }
        return s + ")";
    }

    Vec unit() const {
        Vec u = Vec::Zero(dim_);
        for (const auto &b : blocks_) {
            switch (b.family) {
                case Family::spin:
                    u[b.offset] = detail::kSqrt2;
                    break;
                default:
                    for (int i = 0; i < b.size; i++) {
                        u[b.offset + i] = 1;
                    }
            }
        }
        return u;
    }

    double inner(const Vec &a, const Vec &b) const { return a.dot(b); }
    double trace(const Vec &a) const { return a.dot(unit()); }

    Vec mul(const Vec &a, const Vec &b) const {
        Vec r(dim_);
        for (const auto &blk : blocks_) {
            auto sa = a.segment(blk.offset, blk.dim);
            auto sb = b.segment(blk.offset, blk.dim);
            auto out = r.segment(blk.offset, blk.dim);
            switch (blk.family) {
                case Family::classical:
                    out = sa.cwiseProduct(sb);
                    break;
                case Family::spin: {
                    // coords are sqrt2 (t, x)
                    double t = sa[0] / detail::kSqrt2, s = sb[0] / detail::kSqrt2;
                    auto x = sa.tail(blk.size) / detail::kSqrt2;
                    auto y = sb.tail(blk.size) / detail::kSqrt2;
                    out[0] = detail::kSqrt2 * (t * s + x.dot(y));
                    out.tail(blk.size) = detail::kSqrt2 * (t * y + s * x);
                    break;
                }
                default:
                    detail::with_ring(blk.family, [&](auto tag) {
                        using S = typename decltype(tag)::type;
                        Vec ca = sa, cb = sb;
                        auto x = detail::coords_to_matrix<S>(ca.data(), blk.size);
                        auto y = detail::coords_to_matrix<S>(cb.data(), blk.size);
                        auto p = 0.5 * (x * y + y * x);
                        Vec c(blk.dim);
                        detail::matrix_to_coords<S>(p, c.data());
                        out = c;
                    });
            }
        }
        return r;
    }

    Vec square(const Vec &a) const { return mul(a, a); }

    /// L(a) b = a . b
    Mat mult_operator(const Vec &a) const {
        Mat l(dim_, dim_);
        for (int k = 0; k < dim_; k++) {
            l.col(k) = mul(a, Vec::Unit(dim_, k));
        }
        return l;
    }

    /// Matrix of a single-block matrix-family element.
    template <numkernel::Scalar S>
    RingMatrix<S> to_matrix(const Vec &a, int block = 0) const {
        const Block &b = blocks_.at(block);
        Vec seg = a.segment(b.offset, b.dim);
        return detail::coords_to_matrix<S>(seg.data(), b.size);
    }

    template <numkernel::Scalar S>
    Vec from_matrix(const RingMatrix<S> &m, int block = 0) const {
        const Block &b = blocks_.at(block);
        Vec a = Vec::Zero(dim_);
        Vec seg(b.dim);
        detail::matrix_to_coords<S>(m, seg.data());
        a.segment(b.offset, b.dim) = seg;
        return a;
    }

    /// Matrix of the linear map fn in coordinates.
    Mat linear_map(const std::function<Vec(const Vec &)> &fn) const {
        Mat m(dim_, dim_);
        for (int k = 0; k < dim_; k++) {
            m.col(k) = fn(Vec::Unit(dim_, k));
        }
        return m;
    }

   private:
    std::vector<Block> blocks_;
    int dim_ = 0;
    int rank_ = 0;
};

inline JordanAlgebra make_algebra(Family f, int size) { return JordanAlgebra::make(f, size); }

inline Vec jordan_mul(const JordanAlgebra &j, const Vec &a, const Vec &b) { return j.mul(a, b); }

/// a = sum t_i p_i with t_0 > t_1 > ... nonzero, p_i orthogonal idempotents.
struct CanonicalSpectral {
    std::vector<double> values;
    std::vector<Vec> projectors;
};

/// Eigenvalues with multiplicity and a Jordan frame diagonalizing the element.
struct Diagonalization {
    std::vector<double> values;  // descending
    std::vector<Vec> frame;
};

struct JordanFrame {
    std::vector<Vec> elements;
};

namespace detail {

struct Term {
    double value;
    Vec proj;
};

inline std::vector<Term> block_diagonalize(const JordanAlgebra &j, const Block &b, const Vec &a) {
    std::vector<Term> out;
    Vec seg = a.segment(b.offset, b.dim);
    auto embed = [&](const Vec &local) {
        Vec v = Vec::Zero(j.dim());
        v.segment(b.offset, b.dim) = local;
        return v;
    };
    switch (b.family) {
        case Family::classical:
            for (int i = 0; i < b.size; i++) {
                out.push_back({seg[i], embed(Vec::Unit(b.dim, i))});
            }
            break;
        case Family::spin: {
            double t = seg[0] / kSqrt2;
            Vec x = seg.tail(b.size) / kSqrt2;
            double r = x.norm();
            Vec dir = r > 0 ? Vec(x / r) : Vec(Vec::Unit(b.size, 0));
            for (double sgn : {1.0, -1.0}) {
                Vec p(b.dim);
                p[0] = kSqrt2 * 0.5;
                p.tail(b.size) = kSqrt2 * 0.5 * sgn * dir;
                out.push_back({t + sgn * r, embed(p)});
            }
            break;
        }
        default:
            with_ring(b.family, [&](auto tag) {
                using S = typename decltype(tag)::type;
                HermitianMatrix<S> h(coords_to_matrix<S>(seg.data(), b.size));
                auto fd = numkernel::herm_eig_frame(h);
                for (size_t k = 0; k < fd.eigenvalues.size(); k++) {
                    Vec c(b.dim);
                    matrix_to_coords<S>(fd.rank_one[k].full(), c.data());
                    out.push_back({fd.eigenvalues[k], embed(c)});
                }
            });
    }
    return out;
}

/// Grouped spectral terms of one block (eigenvalue, eigenspace projector).
inline std::vector<Term> block_spectral(const JordanAlgebra &j, const Block &b, const Vec &a, double merge_tol) {
    if (!is_matrix_family(b.family)) {
        return block_diagonalize(j, b, a);
    }
    std::vector<Term> out;
    Vec seg = a.segment(b.offset, b.dim);
    with_ring(b.family, [&](auto tag) {
        using S = typename decltype(tag)::type;
        HermitianMatrix<S> h(coords_to_matrix<S>(seg.data(), b.size));
        auto dec = numkernel::herm_eig(h, merge_tol);
        for (size_t k = 0; k < dec.eigenvalues.size(); k++) {
            Vec c(b.dim);
            matrix_to_coords<S>(dec.projectors[k].full(), c.data());
            Vec v = Vec::Zero(j.dim());
            v.segment(b.offset, b.dim) = c;
            out.push_back({dec.eigenvalues[k], v});
        }
    });
    return out;
}

inline CanonicalSpectral group_terms(std::vector<Term> terms, double merge_tol) {
    std::stable_sort(terms.begin(), terms.end(), [](const Term &x, const Term &y) { return x.value > y.value; });
    double scale = 1.0;
    for (const auto &t : terms) {
        scale = std::max(scale, std::abs(t.value));
    }
    CanonicalSpectral out;
    size_t i = 0;
    while (i < terms.size()) {
        size_t k = i + 1;
        while (k < terms.size() && terms[k - 1].value - terms[k].value <= merge_tol * scale) {
            k++;
        }
        double weight = 0, value = 0;
        Vec proj = Vec::Zero(terms[i].proj.size());
        for (size_t m = i; m < k; m++) {
            // weight eigenvalues by the rank they carry
            double r = terms[m].proj.squaredNorm();
            value += r * terms[m].value;
            weight += r;
            proj += terms[m].proj;
        }
        value /= weight;
        if (std::abs(value) > merge_tol * scale) {
            out.values.push_back(value);
            out.projectors.push_back(proj);
        }
        i = k;
    }
    return out;
}

}  // namespace detail

/// Eigenvalues with multiplicity and a diagonalizing Jordan frame.
inline Diagonalization diagonalize(const JordanAlgebra &j, const Vec &a) {
    std::vector<detail::Term> terms;
    for (const auto &b : j.blocks()) {
        auto t = detail::block_diagonalize(j, b, a);
        terms.insert(terms.end(), t.begin(), t.end());
    }
    std::stable_sort(terms.begin(), terms.end(),
                     [](const detail::Term &x, const detail::Term &y) { return x.value > y.value; });
    Diagonalization d;
    for (auto &t : terms) {
        d.values.push_back(t.value);
        d.frame.push_back(t.proj);
    }
    return d;
}

/// Unique expansion a = sum t_i p_i over distinct nonzero t_i.
inline CanonicalSpectral spectral_decompose(const JordanAlgebra &j, const Vec &a, double merge_tol = 1e-7) {
    std::vector<detail::Term> terms;
    for (const auto &b : j.blocks()) {
        auto t = detail::block_spectral(j, b, a, merge_tol);
        terms.insert(terms.end(), t.begin(), t.end());
    }
    return detail::group_terms(std::move(terms), merge_tol);
}

/// Canonical expansion of sum values[i] frame[i].
inline CanonicalSpectral canonical_from_frame(const std::vector<Vec> &frame, const std::vector<double> &values,
                                              double merge_tol = 1e-7) {
    std::vector<detail::Term> terms;
    for (size_t k = 0; k < frame.size(); k++) {
        terms.push_back({values[k], frame[k]});
    }
    return detail::group_terms(std::move(terms), merge_tol);
}

inline Vec reconstruct(const CanonicalSpectral &dec, int dim) {
    Vec a = Vec::Zero(dim);
    for (size_t k = 0; k < dec.values.size(); k++) {
        a += dec.values[k] * dec.projectors[k];
    }
    return a;
}

inline bool canonical_equal(const CanonicalSpectral &d1, const CanonicalSpectral &d2, double tol = 1e-7) {
    if (d1.values.size() != d2.values.size()) {
        return false;
    }
    double scale = 1.0;
    for (double t : d1.values) {
        scale = std::max(scale, std::abs(t));
    }
    for (size_t k = 0; k < d1.values.size(); k++) {
        if (std::abs(d1.values[k] - d2.values[k]) > tol * scale) {
            return false;
        }
        if ((d1.projectors[k] - d2.projectors[k]).norm() > tol) {
            return false;
        }
    }
    return true;
}

/// U_a = 2 L(a)^2 - L(a^2)
inline Mat quadratic_rep(const JordanAlgebra &j, const Vec &a) {
    Mat l = j.mult_operator(a);
    return 2 * l * l - j.mult_operator(j.square(a));
}

/// f(a) = sum f(t_i) p_i + f(0) (u - sum p_i).
inline Vec functional_calculus(const JordanAlgebra &j, const Vec &a, const std::function<double(double)> &f,
                               double merge_tol = 1e-7) {
    CanonicalSpectral dec = spectral_decompose(j, a, merge_tol);
    Vec r = Vec::Zero(j.dim());
    Vec kernel = j.unit();
    for (size_t k = 0; k < dec.values.size(); k++) {
        double v = f(dec.values[k]);
        if (!std::isfinite(v)) {
            throw DomainError("functional_calculus: function undefined at eigenvalue " +
                              std::to_string(dec.values[k]));
        }
        r += v * dec.projectors[k];
        kernel -= dec.projectors[k];
    }
    if (kernel.norm() > 0.5) {
        double v0 = f(0.0);
        if (!std::isfinite(v0)) {
            throw DomainError("functional_calculus: function undefined at eigenvalue 0");
        }
        r += v0 * kernel;
    }
    return r;
}

inline Vec sqrt_of(const JordanAlgebra &j, const Vec &a) {
    return functional_calculus(j, a, [](double t) {
        return t < 0 && t > -1e-12 ? 0.0 : std::sqrt(t);
    });
}

inline Vec power_of(const JordanAlgebra &j, const Vec &a, double s) {
    return functional_calculus(j, a, [s](double t) { return std::pow(t, s); });
}

inline Vec inverse_of(const JordanAlgebra &j, const Vec &a) {
    return functional_calculus(j, a, [](double t) { return 1.0 / t; });
}

inline double min_eigenvalue(const JordanAlgebra &j, const Vec &a) { return diagonalize(j, a).values.back(); }
inline double max_eigenvalue(const JordanAlgebra &j, const Vec &a) { return diagonalize(j, a).values.front(); }

inline bool is_positive(const JordanAlgebra &j, const Vec &a, double tol = 1e-9) {
    return min_eigenvalue(j, a) >= -tol * std::max(1.0, a.norm());
}

inline bool is_idempotent(const JordanAlgebra &j, const Vec &p, double tol = 1e-9) {
    return (j.square(p) - p).norm() <= tol;
}

/// p^2 = p and <p, u> = 1
inline bool is_primitive_idempotent(const JordanAlgebra &j, const Vec &p, double tol = 1e-9) {
    return is_idempotent(j, p, tol) && std::abs(j.trace(p) - 1) <= tol;
}

/// Largest deviation from the frame identities.
inline double frame_residual(const JordanAlgebra &j, const JordanFrame &f) {
    double r = 0;
    Vec sum = Vec::Zero(j.dim());
    for (size_t a = 0; a < f.elements.size(); a++) {
        const Vec &x = f.elements[a];
        sum += x;
        r = std::max(r, (j.square(x) - x).norm());
        r = std::max(r, std::abs(j.trace(x) - 1));
        for (size_t b = a + 1; b < f.elements.size(); b++) {
            r = std::max(r, j.mul(x, f.elements[b]).norm());
        }
    }
    r = std::max(r, (sum - j.unit()).norm());
    if ((int)f.elements.size() != j.rank()) {
        r = std::max(r, 1.0);
    }
    return r;
}

inline Vec random_element(const JordanAlgebra &j, Rng &rng) { return gaussian_vec(j.dim(), rng); }

inline Vec random_positive(const JordanAlgebra &j, Rng &rng) { return j.square(random_element(j, rng)); }

/// Positive definite with smallest eigenvalue at least 0.1.
inline Vec random_interior(const JordanAlgebra &j, Rng &rng) {
    return random_positive(j, rng) + 0.1 * j.unit();
}

/// Positive with unit trace.
inline Vec random_state(const JordanAlgebra &j, Rng &rng) {
    Vec a = random_positive(j, rng);
    return a / j.trace(a);
}

inline Vec random_primitive(const JordanAlgebra &j, Rng &rng) {
    std::uniform_int_distribution<int> pick(0, j.rank() - 1);
    int r = pick(rng);
    const Block *blk = nullptr;
    for (const auto &b : j.blocks()) {
        if (r < b.rank) {
            blk = &b;
            break;
        }
        r -= b.rank;
    }
    Vec p = Vec::Zero(j.dim());
    auto seg = p.segment(blk->offset, blk->dim);
    switch (blk->family) {
        case Family::classical:
            seg[r] = 1;
            break;
        case Family::spin: {
            Vec dir = gaussian_vec(blk->size, rng).normalized();
            seg[0] = detail::kSqrt2 * 0.5;
            seg.tail(blk->size) = detail::kSqrt2 * 0.5 * dir;
            break;
        }
        default:
            detail::with_ring(blk->family, [&](auto tag) {
                using S = typename decltype(tag)::type;
                auto v = numkernel::random_unit_vector<S>(blk->size, rng);
                Vec c(blk->dim);
                detail::matrix_to_coords<S>(v * v.adjoint(), c.data());
                seg = c;
            });
    }
    return p;
}

/// Frame of a random element with simple spectrum; classical blocks use the
/// standard basis.
inline JordanFrame random_frame(const JordanAlgebra &j, Rng &rng) {
    for (int attempt = 0; attempt < 100; attempt++) {
        Vec a = random_element(j, rng);
        Diagonalization d = diagonalize(j, a);
        double gap = 1e300;
        for (size_t k = 1; k < d.values.size(); k++) {
            gap = std::min(gap, d.values[k - 1] - d.values[k]);
        }
        if (gap < 1e-6) {
            continue;
        }
        JordanFrame f;
        for (const auto &b : j.blocks()) {
            if (b.family == Family::classical) {
                for (int i = 0; i < b.size; i++) {
                    f.elements.push_back(Vec::Unit(j.dim(), b.offset + i));
                }
                continue;
            }
            for (const auto &x : d.frame) {
                if (x.segment(b.offset, b.dim).norm() > 0.5) {
                    f.elements.push_back(x);
                }
            }
        }
        return f;
    }
    throw ConvergenceError("random_frame: no element with simple spectrum after 100 attempts", 0);
}

/// Random orthogonal Jordan automorphism (unitary conjugation, rotation of the
/// spin vector, coordinate permutation), blockwise.
inline Mat random_automorphism(const JordanAlgebra &j, Rng &rng) {
    Mat g = Mat::Zero(j.dim(), j.dim());
    for (const auto &b : j.blocks()) {
        auto blk = g.block(b.offset, b.offset, b.dim, b.dim);
        switch (b.family) {
            case Family::classical: {
                std::vector<int> perm(b.size);
                std::iota(perm.begin(), perm.end(), 0);
                std::shuffle(perm.begin(), perm.end(), rng);
                for (int i = 0; i < b.size; i++) {
                    blk(perm[i], i) = 1;
                }
                break;
            }
            case Family::spin: {
                Eigen::HouseholderQR<Mat> qr(Mat::NullaryExpr(b.size, b.size, [&]() { return gaussian(rng); }));
                blk(0, 0) = 1;
                blk.bottomRightCorner(b.size, b.size) = qr.householderQ();
                break;
            }
            default:
                detail::with_ring(b.family, [&](auto tag) {
                    using S = typename decltype(tag)::type;
                    auto u = numkernel::random_unitary<S>(b.size, rng);
                    auto ua = u.adjoint();
                    for (int k = 0; k < b.dim; k++) {
                        Vec e = Vec::Unit(b.dim, k);
                        auto x = detail::coords_to_matrix<S>(e.data(), b.size);
                        Vec c(b.dim);
                        detail::matrix_to_coords<S>(u * x * ua, c.data());
                        blk.col(k) = c;
                    }
                });
        }
    }
    return g;
}

/// Decomposes g a and pulls the projectors back through the orthogonal
/// automorphism g.
inline CanonicalSpectral spectral_decompose_via(const JordanAlgebra &j, const Vec &a, const Mat &g,
                                                double merge_tol = 1e-7) {
    CanonicalSpectral d = spectral_decompose(j, g * a, merge_tol);
    for (auto &p : d.projectors) {
        p = g.transpose() * p;
    }
    return d;
}

/// Isometric isomorphism spin(d) -> 2x2 Hermitian matrices for d = 2, 3, 5:
/// (t, x) -> [[t + x1, q], [conj q, t - x1]], q built from x2..xd.
struct SpinMatrixIsomorphism {
    JordanAlgebra target;
    Mat map;  // target.dim x (d + 1)
};

inline SpinMatrixIsomorphism spin_matrix_isomorphism(int d) {
    Family f = d == 2 ? Family::realherm : d == 3 ? Family::complexherm : d == 5 ? Family::quatherm : Family::spin;
    if (f == Family::spin) {
        throw ValidationError("spin_matrix_isomorphism: d must be 2, 3 or 5");
    }
    SpinMatrixIsomorphism iso{JordanAlgebra::make(f, 2), Mat::Zero(d + 1, d + 1)};
    const double r = 1 / detail::kSqrt2;
    iso.map(0, 0) = r;
    iso.map(0, 1) = r;
    iso.map(1, 0) = r;
    iso.map(1, 1) = -r;
    for (int k = 2; k <= d; k++) {
        iso.map(k, k) = 1;
    }
    return iso;
}

/// Implicit Jordan model: outcomes are primitive idempotents, tests are frames,
/// states are unit-trace positive elements acting by the inner product.
class JordanModel {
   public:
    explicit JordanModel(JordanAlgebra j) : j_(std::move(j)) {}

    const JordanAlgebra &algebra() const { return j_; }
    int rank() const { return j_.rank(); }
    bool is_outcome(const Vec &p, double tol = 1e-9) const { return is_primitive_idempotent(j_, p, tol); }
    JordanFrame sample_test(Rng &rng) const { return random_frame(j_, rng); }
    double probability(const Vec &state, const Vec &p) const { return j_.inner(state, p); }
    bool is_state(const Vec &a, double tol = 1e-9) const {
        return std::abs(j_.trace(a) - 1) <= tol && is_positive(j_, a, tol);
    }
    Vec maximally_mixed() const { return j_.unit() / j_.rank(); }

   private:
    JordanAlgebra j_;
};

inline JordanModel jordan_model(const JordanAlgebra &j) { return JordanModel(j); }

/// Positive cone of J with the unit-trace state slice; probes are sampled
/// primitive idempotents plus the unit.
class JordanStateCone {
   public:
    JordanStateCone(JordanAlgebra j, uint64_t seed, int probes = 64) : j_(std::move(j)) {
        Rng rng(seed);
        probes_.push_back(j_.unit());
        for (int k = 0; k < probes; k++) {
            probes_.push_back(random_primitive(j_, rng));
        }
    }

    int dimension() const { return j_.dim(); }
    bool contains(const Vec &v, double tol) const { return is_positive(j_, v, tol); }
    std::vector<Vec> probe_rays() const { return probes_; }
    double max_on_states(const Vec &f) const { return max_eigenvalue(j_, f); }

   private:
    JordanAlgebra j_;
    std::vector<Vec> probes_;
};

}  // namespace ejalab::jordan
