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
#include <vector>

#include "ejalab/core.hpp"

namespace ejalab::numkernel {

namespace detail {

/// Zero set of a ray over the rows processed so far.
class RowSet {
   public:
    explicit RowSet(int n = 0) : words_((n + 63) / 64, 0) {}
    void set(int i) { words_[i / 64] |= (uint64_t(1) << (i % 64)); }
    bool subset_of(const RowSet &o) const {
        for (size_t k = 0; k < words_.size(); k++) {
            if (words_[k] & ~o.words_[k]) {
                return false;
            }
        }
        return true;
    }
    RowSet operator&(const RowSet &o) const {
        RowSet r = *this;
        for (size_t k = 0; k < words_.size(); k++) {
            r.words_[k] &= o.words_[k];
        }
        return r;
    }
    int count() const {
        int c = 0;
        for (auto w : words_) {
            c += __builtin_popcountll(w);
        }
        return c;
    }

   private:
    std::vector<uint64_t> words_;
};

struct Ray {
    Vec v;
    RowSet zeros;
};

}  // namespace detail

/// Extreme rays of the pointed cone {z : A z >= 0} by the double-description
/// method. Rays are scaled to unit max-norm. Throws when the cone has a
/// lineality space (rank A < cols).
inline std::vector<Vec> extreme_rays(const Mat &a_in, double tol = 1e-10) {
    int d = (int)a_in.cols();
    int m = (int)a_in.rows();
    Mat a = a_in;
    std::vector<int> live;
    for (int i = 0; i < m; i++) {
        double n = a.row(i).norm();
        if (n > tol) {
            a.row(i) /= n;
            live.push_back(i);
        }
    }
    if (d == 0) {
        return {};
    }
    // Greedy independent starting rows.
    std::vector<int> start;
    Mat chosen(0, d);
    for (int i : live) {
        Mat trial(chosen.rows() + 1, d);
        trial << chosen, a.row(i);
        Eigen::FullPivLU<Mat> lu(trial);
        lu.setThreshold(1e-9);
        if (lu.rank() == trial.rows()) {
            chosen = trial;
            start.push_back(i);
            if ((int)start.size() == d) {
                break;
            }
        }
    }
    if ((int)start.size() < d) {
        throw ValidationError("extreme_rays: cone is not pointed (constraint rank " +
                              std::to_string(start.size()) + " < " + std::to_string(d) + ")");
    }
    Mat inv = chosen.inverse();
    std::vector<detail::Ray> rays;
    for (int j = 0; j < d; j++) {
        detail::Ray r{inv.col(j), detail::RowSet(m)};
        r.v /= r.v.cwiseAbs().maxCoeff();
        for (int k = 0; k < d; k++) {
            if (k != j) {
                r.zeros.set(start[k]);
            }
        }
        rays.push_back(std::move(r));
    }
    std::vector<bool> used(m, false);
    for (int i : start) {
        used[i] = true;
    }
    for (int i : live) {
        if (used[i]) {
            continue;
        }
        used[i] = true;
        std::vector<double> s(rays.size());
        std::vector<int> pos, neg;
        std::vector<detail::Ray> next;
        for (size_t k = 0; k < rays.size(); k++) {
            s[k] = a.row(i).dot(rays[k].v);
            if (s[k] > tol) {
                pos.push_back((int)k);
            } else if (s[k] < -tol) {
                neg.push_back((int)k);
            } else {
                rays[k].zeros.set(i);
            }
        }
        if (neg.empty()) {
            continue;
        }
        for (size_t k = 0; k < rays.size(); k++) {
            if (s[k] >= -tol) {
                next.push_back(rays[k]);
            }
        }
        for (int p : pos) {
            for (int q : neg) {
                detail::RowSet common = rays[p].zeros & rays[q].zeros;
                if (common.count() < d - 2) {
                    continue;
                }
                bool adjacent = true;
                for (size_t k = 0; k < rays.size() && adjacent; k++) {
                    if ((int)k != p && (int)k != q && common.subset_of(rays[k].zeros)) {
                        adjacent = false;
                    }
                }
                if (!adjacent) {
                    continue;
                }
                detail::Ray r{s[p] * rays[q].v - s[q] * rays[p].v, common};
                r.v /= r.v.cwiseAbs().maxCoeff();
                r.zeros.set(i);
                next.push_back(std::move(r));
            }
        }
        rays = std::move(next);
    }
    std::vector<Vec> out;
    for (auto &r : rays) {
        out.push_back(r.v);
    }
    return out;
}

/// Rounds coordinates lying within tol of a fraction k/720720 onto it.
inline Vec snap(Vec v, double tol = 1e-11) {
    constexpr double den = 720720.0;
    for (int i = 0; i < v.size(); i++) {
        double r = std::round(v[i] * den) / den;
        if (std::abs(r - v[i]) <= tol) {
            v[i] = r == 0 ? 0.0 : r;
        }
    }
    return v;
}

/// Removes points within tol (max-norm) of an earlier point.
inline std::vector<Vec> dedupe(const std::vector<Vec> &pts, double tol = 1e-10) {
    std::vector<Vec> out;
    for (const auto &p : pts) {
        bool seen = false;
        for (const auto &q : out) {
            if ((p - q).cwiseAbs().maxCoeff() <= tol) {
                seen = true;
                break;
            }
        }
        if (!seen) {
            out.push_back(p);
        }
    }
    return out;
}

/// Deterministic order: lexicographic on coordinates.
inline void sort_points(std::vector<Vec> &pts, double tol = 1e-10) {
    std::sort(pts.begin(), pts.end(), [tol](const Vec &a, const Vec &b) {
        for (int i = 0; i < a.size(); i++) {
            if (a[i] < b[i] - tol) {
                return true;
            }
            if (a[i] > b[i] + tol) {
                return false;
            }
        }
        return false;
    });
}

/// Vertices of the polytope {x : Aeq x = beq, Ain x >= bin}. Empty when the
/// system is infeasible; throws on unbounded input.
inline std::vector<Vec> enumerate_vertices(const Mat &aeq, const Vec &beq, const Mat &ain, const Vec &bin,
                                           double tol = 1e-10) {
    int n = (int)std::max(aeq.cols(), ain.cols());
    Vec x0 = Vec::Zero(n);
    Mat basis = Mat::Identity(n, n);
    if (aeq.rows() > 0) {
        Eigen::CompleteOrthogonalDecomposition<Mat> cod(aeq);
        x0 = cod.solve(beq);
        double res = (aeq * x0 - beq).cwiseAbs().maxCoeff();
        if (res > 1e-9 * std::max(1.0, beq.cwiseAbs().maxCoeff())) {
            return {};
        }
        basis = null_space(aeq, 1e-10);
    }
    int free = (int)basis.cols();
    if (free == 0) {
        if (ain.rows() == 0 || ((ain * x0 - bin).array() >= -tol).all()) {
            return {snap(x0)};
        }
        return {};
    }
    // Homogenize: x = N w + x0 s with s >= 0.
    Mat h(ain.rows() + 1, free + 1);
    if (ain.rows() > 0) {
        h.topLeftCorner(ain.rows(), free) = ain * basis;
        h.topRightCorner(ain.rows(), 1) = ain * x0 - bin;
    }
    h.row(ain.rows()).setZero();
    h(ain.rows(), free) = 1;
    std::vector<Vec> rays = extreme_rays(h, tol);
    std::vector<Vec> verts;
    for (const auto &r : rays) {
        double s = r[free];
        if (s <= tol) {
            throw ValidationError("enumerate_vertices: polyhedron is unbounded");
        }
        verts.push_back(snap(basis * (r.head(free) / s) + x0));
    }
    verts = dedupe(verts, tol);
    sort_points(verts, tol);
    return verts;
}

/// Facet normals of the full-dimensional cone generated by the columns of g:
/// extreme rays of {f : g^T f >= 0}.
inline std::vector<Vec> cone_facets(const Mat &g, double tol = 1e-10) {
    return extreme_rays(g.transpose(), tol);
}

}  // namespace ejalab::numkernel
