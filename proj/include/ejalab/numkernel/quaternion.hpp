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
#include <complex>
#include <iosfwd>
#include <ostream>

namespace ejalab::numkernel {

/// w + x i + y j + z k
struct Quaternion {
    double w = 0, x = 0, y = 0, z = 0;

    constexpr Quaternion() = default;
    constexpr Quaternion(double w_) : w(w_) {}
    constexpr Quaternion(double w_, double x_, double y_, double z_) : w(w_), x(x_), y(y_), z(z_) {}

    static constexpr Quaternion i() { return {0, 1, 0, 0}; }
    static constexpr Quaternion j() { return {0, 0, 1, 0}; }
    static constexpr Quaternion k() { return {0, 0, 0, 1}; }

    constexpr Quaternion conj() const { return {w, -x, -y, -z}; }
    constexpr double norm2() const { return w * w + x * x + y * y + z * z; }
    double norm() const { return std::sqrt(norm2()); }
    constexpr double real() const { return w; }

    Quaternion inverse() const {
        double n = norm2();
        return {w / n, -x / n, -y / n, -z / n};
    }

    constexpr Quaternion operator-() const { return {-w, -x, -y, -z}; }
    constexpr Quaternion &operator+=(const Quaternion &o) {
        w += o.w;
        x += o.x;
        y += o.y;
        z += o.z;
        return *this;
    }
    constexpr Quaternion &operator-=(const Quaternion &o) {
        w -= o.w;
        x -= o.x;
        y -= o.y;
        z -= o.z;
        return *this;
    }
    constexpr bool operator==(const Quaternion &o) const {
        return w == o.w && x == o.x && y == o.y && z == o.z;
    }
};

/// Hamilton product.
constexpr Quaternion quat_mul(const Quaternion &p, const Quaternion &q) {
    return {
        p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
        p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
        p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
        p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w,
    };
}

constexpr Quaternion operator*(const Quaternion &p, const Quaternion &q) { return quat_mul(p, q); }
constexpr Quaternion operator*(double s, const Quaternion &q) { return {s * q.w, s * q.x, s * q.y, s * q.z}; }
constexpr Quaternion operator*(const Quaternion &q, double s) { return s * q; }
constexpr Quaternion operator+(Quaternion a, const Quaternion &b) { return a += b; }
constexpr Quaternion operator-(Quaternion a, const Quaternion &b) { return a -= b; }

inline std::ostream &operator<<(std::ostream &out, const Quaternion &q) {
    return out << "(" << q.w << ", " << q.x << "i, " << q.y << "j, " << q.z << "k)";
}

/// q = z1 + z2 j with z1 = w + x i, z2 = y + z i.
inline std::complex<double> symplectic_z1(const Quaternion &q) { return {q.w, q.x}; }
inline std::complex<double> symplectic_z2(const Quaternion &q) { return {q.y, q.z}; }
inline Quaternion from_symplectic(std::complex<double> z1, std::complex<double> z2) {
    return {z1.real(), z1.imag(), z2.real(), z2.imag()};
}

}  // namespace ejalab::numkernel
