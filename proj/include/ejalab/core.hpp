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

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace ejalab {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;
using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;

using Rng = std::mt19937_64;

/// Numeric policy shared by every check.
struct Tolerances {
    double alg = 1e-9;   // algebraic identities
    double eig = 1e-7;   // eigenvalue merging
    double lp = 1e-10;   // cone / LP feasibility
};

class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Structurally invalid input (bad test space, malformed table, ...).
class ValidationError : public Error {
   public:
    using Error::Error;
};

/// Requested construction exists mathematically but is not realized here.
class Unsupported : public Error {
   public:
    using Error::Error;
};

/// A function was evaluated outside its domain.
class DomainError : public Error {
   public:
    using Error::Error;
};

class ConvergenceError : public Error {
   public:
    ConvergenceError(const std::string &what, double residual)
        : Error(what + " (residual " + std::to_string(residual) + ")"), residual_(residual) {}
    double residual() const { return residual_; }

   private:
    double residual_;
};

inline double gaussian(Rng &rng) {
    std::normal_distribution<double> d(0.0, 1.0);
    return d(rng);
}

inline double uniform01(Rng &rng) {
    std::uniform_real_distribution<double> d(0.0, 1.0);
    return d(rng);
}

inline Vec gaussian_vec(int n, Rng &rng) {
    Vec v(n);
    for (int i = 0; i < n; i++) {
        v[i] = gaussian(rng);
    }
    return v;
}

/// Largest singular value.
inline double op_norm(const Mat &m) {
    if (m.size() == 0) {
        return 0.0;
    }
    Eigen::JacobiSVD<Mat> svd(m);
    return svd.singularValues()[0];
}

/// Orthonormal basis (columns) of the column span of `m`.
inline Mat column_span(const Mat &m, double tol = 1e-10) {
    if (m.cols() == 0) {
        return Mat(m.rows(), 0);
    }
    Eigen::JacobiSVD<Mat> svd(m, Eigen::ComputeThinU);
    const auto &s = svd.singularValues();
    double scale = s.size() ? std::max(1.0, s[0]) : 1.0;
    int r = 0;
    while (r < s.size() && s[r] > tol * scale) {
        r++;
    }
    return svd.matrixU().leftCols(r);
}

/// Orthonormal basis (columns) of the null space of `m`.
inline Mat null_space(const Mat &m, double tol = 1e-10) {
    int n = (int)m.cols();
    if (m.rows() == 0) {
        return Mat::Identity(n, n);
    }
    Eigen::JacobiSVD<Mat> svd(m, Eigen::ComputeFullV);
    const auto &s = svd.singularValues();
    double scale = s.size() ? std::max(1.0, s[0]) : 1.0;
    int r = 0;
    while (r < s.size() && s[r] > tol * scale) {
        r++;
    }
    return svd.matrixV().rightCols(n - r);
}

inline Mat kron(const Mat &a, const Mat &b) {
    Mat k(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); i++) {
        for (int j = 0; j < a.cols(); j++) {
            k.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return k;
}

inline Vec kron(const Vec &a, const Vec &b) {
    Vec k(a.size() * b.size());
    for (int i = 0; i < a.size(); i++) {
        k.segment(i * b.size(), b.size()) = a[i] * b;
    }
    return k;
}

}  // namespace ejalab
