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
#include <complex>
#include <string>
#include <type_traits>
#include <vector>

#include "ejalab/core.hpp"
#include "ejalab/numkernel/quaternion.hpp"

namespace ejalab::numkernel {

using Complex = std::complex<double>;

template <typename S>
struct Ring;

template <>
struct Ring<double> {
    static constexpr int real_dim = 1;
    static constexpr int embed_dim = 1;
    static constexpr const char *name = "real";
    static double conj(double v) { return v; }
    static double re(double v) { return v; }
    static double abs2(double v) { return v * v; }
    static void to_reals(double v, double *out) { out[0] = v; }
    static double from_reals(const double *in) { return in[0]; }
};

template <>
struct Ring<Complex> {
    static constexpr int real_dim = 2;
    static constexpr int embed_dim = 1;
    static constexpr const char *name = "complex";
    static Complex conj(Complex v) { return std::conj(v); }
    static double re(Complex v) { return v.real(); }
    static double abs2(Complex v) { return std::norm(v); }
    static void to_reals(Complex v, double *out) {
        out[0] = v.real();
        out[1] = v.imag();
    }
    static Complex from_reals(const double *in) { return {in[0], in[1]}; }
};

template <>
struct Ring<Quaternion> {
    static constexpr int real_dim = 4;
    static constexpr int embed_dim = 2;
    static constexpr const char *name = "quaternion";
    static Quaternion conj(const Quaternion &v) { return v.conj(); }
    static double re(const Quaternion &v) { return v.w; }
    static double abs2(const Quaternion &v) { return v.norm2(); }
    static void to_reals(const Quaternion &v, double *out) {
        out[0] = v.w;
        out[1] = v.x;
        out[2] = v.y;
        out[3] = v.z;
    }
    static Quaternion from_reals(const double *in) { return {in[0], in[1], in[2], in[3]}; }
};

template <typename S>
concept Scalar = std::is_same_v<S, double> || std::is_same_v<S, Complex> || std::is_same_v<S, Quaternion>;

template <Scalar S>
S random_scalar(Rng &rng) {
    double r[4];
    for (int i = 0; i < Ring<S>::real_dim; i++) {
        r[i] = gaussian(rng);
    }
    return Ring<S>::from_reals(r);
}

/// Dense matrix over the reals, complexes or quaternions (row-major).
template <Scalar S>
class RingMatrix {
   public:
    RingMatrix() = default;
    RingMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_((size_t)rows * cols, S(0.0)) {}

    static RingMatrix identity(int n) {
        RingMatrix m(n, n);
        for (int i = 0; i < n; i++) {
            m(i, i) = S(1.0);
        }
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    S &operator()(int i, int j) { return data_[(size_t)i * cols_ + j]; }
    const S &operator()(int i, int j) const { return data_[(size_t)i * cols_ + j]; }

    RingMatrix adjoint() const {
        RingMatrix r(cols_, rows_);
        for (int i = 0; i < rows_; i++) {
            for (int j = 0; j < cols_; j++) {
                r(j, i) = Ring<S>::conj((*this)(i, j));
            }
        }
        return r;
    }

    double norm() const {
        double s = 0;
        for (const auto &v : data_) {
            s += Ring<S>::abs2(v);
        }
        return std::sqrt(s);
    }

    RingMatrix &operator+=(const RingMatrix &o) {
        for (size_t k = 0; k < data_.size(); k++) {
            data_[k] += o.data_[k];
        }
        return *this;
    }
    RingMatrix &operator-=(const RingMatrix &o) {
        for (size_t k = 0; k < data_.size(); k++) {
            data_[k] -= o.data_[k];
        }
        return *this;
    }
    RingMatrix &operator*=(double s) {
        for (auto &v : data_) {
            v = s * v;
        }
        return *this;
    }

    friend RingMatrix operator+(RingMatrix a, const RingMatrix &b) { return a += b; }
    friend RingMatrix operator-(RingMatrix a, const RingMatrix &b) { return a -= b; }
    friend RingMatrix operator*(double s, RingMatrix a) { return a *= s; }

    friend RingMatrix operator*(const RingMatrix &a, const RingMatrix &b) {
        RingMatrix r(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; i++) {
            for (int k = 0; k < a.cols_; k++) {
                const S &aik = a(i, k);
                for (int j = 0; j < b.cols_; j++) {
                    r(i, j) += aik * b(k, j);
                }
            }
        }
        return r;
    }

   private:
    int rows_ = 0, cols_ = 0;
    std::vector<S> data_;
};

/// Image under the complex representation: identity on R and C, the 2x2 block
/// map z1 + z2 j -> [[z1, z2], [-conj z2, conj z1]] on H.
template <Scalar S>
CMat complex_embed(const RingMatrix<S> &m) {
    constexpr int e = Ring<S>::embed_dim;
    CMat c(m.rows() * e, m.cols() * e);
    for (int i = 0; i < m.rows(); i++) {
        for (int j = 0; j < m.cols(); j++) {
            if constexpr (std::is_same_v<S, Quaternion>) {
                Complex z1 = symplectic_z1(m(i, j));
                Complex z2 = symplectic_z2(m(i, j));
                c(2 * i, 2 * j) = z1;
                c(2 * i, 2 * j + 1) = z2;
                c(2 * i + 1, 2 * j) = -std::conj(z2);
                c(2 * i + 1, 2 * j + 1) = std::conj(z1);
            } else {
                c(i, j) = Complex(m(i, j));
            }
        }
    }
    return c;
}

/// Inverse of complex_embed, averaging the redundant entries.
template <Scalar S>
RingMatrix<S> complex_unembed(const CMat &c) {
    constexpr int e = Ring<S>::embed_dim;
    RingMatrix<S> m((int)c.rows() / e, (int)c.cols() / e);
    for (int i = 0; i < m.rows(); i++) {
        for (int j = 0; j < m.cols(); j++) {
            if constexpr (std::is_same_v<S, Quaternion>) {
                Complex z1 = 0.5 * (c(2 * i, 2 * j) + std::conj(c(2 * i + 1, 2 * j + 1)));
                Complex z2 = 0.5 * (c(2 * i, 2 * j + 1) - std::conj(c(2 * i + 1, 2 * j)));
                m(i, j) = from_symplectic(z1, z2);
            } else if constexpr (std::is_same_v<S, double>) {
                m(i, j) = c(i, j).real();
            } else {
                m(i, j) = c(i, j);
            }
        }
    }
    return m;
}

/// The antiunitary J commuting with every embedded quaternionic matrix:
/// (Jv)_{2i} = conj v_{2i+1}, (Jv)_{2i+1} = -conj v_{2i}.
inline CVec quaternionic_partner(const CVec &v) {
    CVec w(v.size());
    for (int i = 0; i + 1 < v.size(); i += 2) {
        w[i] = std::conj(v[i + 1]);
        w[i + 1] = -std::conj(v[i]);
    }
    return w;
}

/// Self-adjoint matrix stored as lower triangle plus real diagonal.
template <Scalar S>
class HermitianMatrix {
   public:
    HermitianMatrix() = default;
    explicit HermitianMatrix(int n) : n_(n), lower_((size_t)n * (n + 1) / 2, S(0.0)) {}

    /// Throws ValidationError when `m` is not self-adjoint within tol.
    explicit HermitianMatrix(const RingMatrix<S> &m, double tol = 1e-9) : HermitianMatrix(m.rows()) {
        if (m.rows() != m.cols()) {
            throw ValidationError("HermitianMatrix: matrix is not square");
        }
        double dev = (m - m.adjoint()).norm();
        if (dev > tol * std::max(1.0, m.norm())) {
            throw ValidationError("HermitianMatrix: matrix is not self-adjoint (deviation " +
                                  std::to_string(dev) + ")");
        }
        for (int i = 0; i < n_; i++) {
            for (int j = 0; j <= i; j++) {
                set(i, j, m(i, j));
            }
        }
    }

    int size() const { return n_; }

    S operator()(int i, int j) const {
        if (i >= j) {
            return lower_[index(i, j)];
        }
        return Ring<S>::conj(lower_[index(j, i)]);
    }

    /// Sets entry (i,j) and, implicitly, its mirror. Diagonal keeps the real part.
    void set(int i, int j, const S &v) {
        if (i == j) {
            lower_[index(i, i)] = S(Ring<S>::re(v));
        } else if (i > j) {
            lower_[index(i, j)] = v;
        } else {
            lower_[index(j, i)] = Ring<S>::conj(v);
        }
    }

    RingMatrix<S> full() const {
        RingMatrix<S> m(n_, n_);
        for (int i = 0; i < n_; i++) {
            for (int j = 0; j < n_; j++) {
                m(i, j) = (*this)(i, j);
            }
        }
        return m;
    }

   private:
    static size_t index(int i, int j) { return (size_t)i * (i + 1) / 2 + j; }
    int n_ = 0;
    std::vector<S> lower_;
};

template <Scalar S>
struct EigenDecomposition {
    std::vector<double> eigenvalues;  // strictly descending
    std::vector<HermitianMatrix<S>> projectors;
    std::vector<int> multiplicities;  // rank over the scalar ring
};

/// Eigenvalues with multiplicity and a rank-one projector for each.
template <Scalar S>
struct FrameDecomposition {
    std::vector<double> eigenvalues;  // descending, with repetition
    std::vector<HermitianMatrix<S>> rank_one;
};

namespace detail {

struct RawEig {
    Vec values;  // descending
    CMat vectors;
};

template <Scalar S>
RawEig raw_eig(const HermitianMatrix<S> &m) {
    RawEig out;
    if constexpr (std::is_same_v<S, double>) {
        Mat a(m.size(), m.size());
        for (int i = 0; i < m.size(); i++) {
            for (int j = 0; j < m.size(); j++) {
                a(i, j) = m(i, j);
            }
        }
        Eigen::SelfAdjointEigenSolver<Mat> es(a);
        if (es.info() != Eigen::Success) {
            throw ConvergenceError("herm_eig: eigensolver did not converge", a.norm());
        }
        out.values = es.eigenvalues().reverse();
        out.vectors = es.eigenvectors().rowwise().reverse().cast<Complex>();
    } else {
        CMat c = complex_embed(m.full());
        Eigen::SelfAdjointEigenSolver<CMat> es(c);
        if (es.info() != Eigen::Success) {
            throw ConvergenceError("herm_eig: eigensolver did not converge", c.norm());
        }
        out.values = es.eigenvalues().reverse();
        out.vectors = es.eigenvectors().rowwise().reverse();
    }
    return out;
}

/// Groups of consecutive indices whose eigenvalues agree within tol.
inline std::vector<std::pair<int, int>> merge_groups(const Vec &values, double tol) {
    double scale = 1.0;
    for (int i = 0; i < values.size(); i++) {
        scale = std::max(scale, std::abs(values[i]));
    }
    std::vector<std::pair<int, int>> groups;
    int start = 0;
    for (int i = 1; i <= values.size(); i++) {
        if (i == values.size() || values[i - 1] - values[i] > tol * scale) {
            groups.emplace_back(start, i);
            start = i;
        }
    }
    return groups;
}

template <Scalar S>
HermitianMatrix<S> projector_from(const CMat &basis) {
    CMat p = basis * basis.adjoint();
    return HermitianMatrix<S>(complex_unembed<S>(p), 1e-6);
}

}  // namespace detail

/// Spectral decomposition with eigenvalues merged within `merge_tol` (relative
/// to max(1, |m|)).
template <Scalar S>
EigenDecomposition<S> herm_eig(const HermitianMatrix<S> &m, double merge_tol = 1e-7) {
    constexpr int e = Ring<S>::embed_dim;
    EigenDecomposition<S> dec;
    if (m.size() == 0) {
        return dec;
    }
    detail::RawEig raw = detail::raw_eig(m);
    for (auto [lo, hi] : detail::merge_groups(raw.values, merge_tol)) {
        int width = hi - lo;
        if (width % e != 0) {
            throw ConvergenceError("herm_eig: unpaired eigenvalue in quaternionic embedding",
                                   raw.values[lo] - raw.values[hi - 1]);
        }
        dec.eigenvalues.push_back(raw.values.segment(lo, width).mean());
        dec.projectors.push_back(detail::projector_from<S>(raw.vectors.middleCols(lo, width)));
        dec.multiplicities.push_back(width / e);
    }
    return dec;
}

/// Full set of rank-one eigenprojectors (a frame diagonalizing m).
template <Scalar S>
FrameDecomposition<S> herm_eig_frame(const HermitianMatrix<S> &m, double merge_tol = 1e-7) {
    FrameDecomposition<S> out;
    if (m.size() == 0) {
        return out;
    }
    detail::RawEig raw = detail::raw_eig(m);
    if constexpr (!std::is_same_v<S, Quaternion>) {
        for (int k = 0; k < raw.values.size(); k++) {
            out.eigenvalues.push_back(raw.values[k]);
            out.rank_one.push_back(detail::projector_from<S>(raw.vectors.col(k)));
        }
    } else {
        CMat c = complex_embed(m.full());
        for (auto [lo, hi] : detail::merge_groups(raw.values, merge_tol)) {
            CMat basis = raw.vectors.middleCols(lo, hi - lo);
            if (basis.cols() % 2 != 0) {
                throw ConvergenceError("herm_eig_frame: unpaired eigenvalue in quaternionic embedding",
                                       raw.values[lo] - raw.values[hi - 1]);
            }
            while (basis.cols() > 0) {
                CVec v = basis.col(0).normalized();
                CVec w = quaternionic_partner(v);
                CMat pair(v.size(), 2);
                pair.col(0) = v;
                pair.col(1) = w;
                out.eigenvalues.push_back((v.adjoint() * c * v)(0, 0).real());
                out.rank_one.push_back(detail::projector_from<S>(pair));
                if (basis.cols() == 2) {
                    break;
                }
                CMat rest = basis - pair * (pair.adjoint() * basis);
                Eigen::JacobiSVD<CMat> svd(rest, Eigen::ComputeThinU);
                basis = svd.matrixU().leftCols(basis.cols() - 2);
            }
        }
    }
    return out;
}

template <Scalar S>
HermitianMatrix<S> reconstruct(const EigenDecomposition<S> &dec, int n) {
    RingMatrix<S> acc(n, n);
    for (size_t k = 0; k < dec.eigenvalues.size(); k++) {
        acc += dec.eigenvalues[k] * dec.projectors[k].full();
    }
    return HermitianMatrix<S>(acc);
}

/// Column vector v with v*v = 1, Gaussian direction.
template <Scalar S>
RingMatrix<S> random_unit_vector(int n, Rng &rng) {
    RingMatrix<S> v(n, 1);
    double s = 0;
    for (int i = 0; i < n; i++) {
        v(i, 0) = random_scalar<S>(rng);
        s += Ring<S>::abs2(v(i, 0));
    }
    v *= 1.0 / std::sqrt(s);
    return v;
}

/// Random unitary via Gram-Schmidt on Gaussian columns (right-module convention).
template <Scalar S>
RingMatrix<S> random_unitary(int n, Rng &rng) {
    RingMatrix<S> u(n, n);
    for (int j = 0; j < n; j++) {
        std::vector<S> w(n);
        for (int i = 0; i < n; i++) {
            w[i] = random_scalar<S>(rng);
        }
        for (int pass = 0; pass < 2; pass++) {
            for (int k = 0; k < j; k++) {
                S c(0.0);
                for (int i = 0; i < n; i++) {
                    c += Ring<S>::conj(u(i, k)) * w[i];
                }
                for (int i = 0; i < n; i++) {
                    w[i] -= u(i, k) * c;
                }
            }
        }
        double s = 0;
        for (int i = 0; i < n; i++) {
            s += Ring<S>::abs2(w[i]);
        }
        double inv = 1.0 / std::sqrt(s);
        for (int i = 0; i < n; i++) {
            u(i, j) = inv * w[i];
        }
    }
    return u;
}

}  // namespace ejalab::numkernel
