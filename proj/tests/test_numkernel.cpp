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

#include <catch_amalgamated.hpp>

#include <algorithm>
#include <vector>

#include "ejalab/numkernel/hermitian.hpp"
#include "ejalab/numkernel/lp.hpp"
#include "ejalab/numkernel/polytope.hpp"
#include "ejalab/numkernel/quaternion.hpp"
#include "oracles.hpp"

using namespace ejalab;
using namespace ejalab::numkernel;
using Catch::Matchers::ContainsSubstring;

namespace {

bool close(const Quaternion &a, const Quaternion &b, double tol = 1e-12) { return (a - b).norm() <= tol; }

Quaternion random_quat(Rng &rng) { return {gaussian(rng), gaussian(rng), gaussian(rng), gaussian(rng)}; }

template <Scalar S>
RingMatrix<S> random_hermitian(int n, Rng &rng) {
    RingMatrix<S> m(n, n);
    for (int i = 0; i < n; i++) {
        for (int j = 0; j < n; j++) {
            m(i, j) = random_scalar<S>(rng);
        }
    }
    return 0.5 * (m + m.adjoint());
}

template <Scalar S>
double herm_distance(const HermitianMatrix<S> &a, const HermitianMatrix<S> &b) {
    return (a.full() - b.full()).norm();
}

}  // namespace

TEST_CASE("quaternion multiplication table", "[numkernel][quaternion]") {
    auto i = Quaternion::i(), j = Quaternion::j(), k = Quaternion::k();
    Quaternion minus_one{-1, 0, 0, 0};

    REQUIRE(i * i == minus_one);
    REQUIRE(j * j == minus_one);
    REQUIRE(k * k == minus_one);
    REQUIRE(i * j == k);
    REQUIRE(j * k == i);
    REQUIRE(k * i == j);
    REQUIRE(j * i == -1.0 * k);
    REQUIRE(i * j * k == minus_one);
}

TEST_CASE("quaternion algebra laws", "[numkernel][quaternion]") {
    Rng rng(11);
    for (int s = 0; s < 200; s++) {
        Quaternion p = random_quat(rng), q = random_quat(rng), r = random_quat(rng);

        CHECK(close((p * q) * r, p * (q * r), 1e-10));
        CHECK(std::abs((p * q).norm() - p.norm() * q.norm()) < 1e-10);
        CHECK(close((p * q).conj(), q.conj() * p.conj()));
        CHECK(close(p * p.inverse(), Quaternion{1, 0, 0, 0}, 1e-12));
        CHECK(close(from_symplectic(symplectic_z1(p), symplectic_z2(p)), p, 0));
    }
}

TEST_CASE("complex embedding is a homomorphism", "[numkernel][quaternion]") {
    Rng rng(12);
    for (int s = 0; s < 50; s++) {
        RingMatrix<Quaternion> a(2, 2), b(2, 2);
        for (int i = 0; i < 2; i++) {
            for (int j = 0; j < 2; j++) {
                a(i, j) = random_quat(rng);
                b(i, j) = random_quat(rng);
            }
        }
        CMat lhs = complex_embed(RingMatrix<Quaternion>(a * b));
        CMat rhs = complex_embed(a) * complex_embed(b);
        CHECK((lhs - rhs).norm() < 1e-12);
        CHECK((complex_embed(a.adjoint()) - complex_embed(a).adjoint()).norm() < 1e-14);
    }
}

TEST_CASE("herm_eig on hand-computed matrices", "[numkernel][hermitian]") {
    SECTION("real diagonal with a repeated value") {
        RingMatrix<double> m(3, 3);
        m(0, 0) = 2;
        m(1, 1) = -1;
        m(2, 2) = 2;
        auto d = herm_eig(HermitianMatrix<double>(m));

        REQUIRE(d.eigenvalues.size() == 2);
        CHECK(d.eigenvalues[0] == Catch::Approx(2));
        CHECK(d.eigenvalues[1] == Catch::Approx(-1));
        CHECK(d.multiplicities == std::vector<int>{2, 1});
    }
    SECTION("complex [[2, i], [-i, 2]]") {
        RingMatrix<Complex> m(2, 2);
        m(0, 0) = 2;
        m(1, 1) = 2;
        m(0, 1) = Complex(0, 1);
        m(1, 0) = Complex(0, -1);
        auto d = herm_eig(HermitianMatrix<Complex>(m));

        REQUIRE(d.eigenvalues.size() == 2);
        CHECK(d.eigenvalues[0] == Catch::Approx(3));
        CHECK(d.eigenvalues[1] == Catch::Approx(1));
        // projector onto (1, -i)/sqrt2 for eigenvalue 3
        CHECK(std::abs(d.projectors[0](0, 1) - Complex(0, 0.5)) < 1e-12);
    }
    SECTION("quaternionic [[0, j], [-j, 0]]") {
        RingMatrix<Quaternion> m(2, 2);
        m(0, 1) = Quaternion::j();
        m(1, 0) = -1.0 * Quaternion::j();
        auto d = herm_eig(HermitianMatrix<Quaternion>(m));

        REQUIRE(d.eigenvalues.size() == 2);
        CHECK(d.eigenvalues[0] == Catch::Approx(1));
        CHECK(d.eigenvalues[1] == Catch::Approx(-1));
        CHECK(d.multiplicities == std::vector<int>{1, 1});
        CHECK(close(d.projectors[0](0, 1), 0.5 * Quaternion::j()));
    }
}

TEMPLATE_TEST_CASE("herm_eig reconstructs random matrices", "[numkernel][hermitian]", double, Complex, Quaternion) {
    Rng rng(13);
    int n = GENERATE(1, 2, 3, 5);
    for (int s = 0; s < 20; s++) {
        HermitianMatrix<TestType> m(random_hermitian<TestType>(n, rng));
        auto d = herm_eig(m);

        CHECK(herm_distance(reconstruct(d, n), m) < 1e-10);
        int total = 0;
        for (size_t k = 0; k < d.projectors.size(); k++) {
            auto p = d.projectors[k].full();
            CHECK((p * p - p).norm() < 1e-10);
            double tr = 0;
            for (int i = 0; i < n; i++) {
                tr += Ring<TestType>::re(p(i, i));
            }
            CHECK(tr == Catch::Approx(d.multiplicities[k]).margin(1e-10));
            total += d.multiplicities[k];
        }
        CHECK(total == n);
        CHECK(std::is_sorted(d.eigenvalues.rbegin(), d.eigenvalues.rend()));

        auto f = herm_eig_frame(m);
        REQUIRE((int)f.rank_one.size() == n);
        RingMatrix<TestType> acc(n, n);
        for (int k = 0; k < n; k++) {
            acc += f.eigenvalues[k] * f.rank_one[k].full();
            for (int l = 0; l < n; l++) {
                auto prod = f.rank_one[k].full() * f.rank_one[l].full();
                double expect = k == l ? 1 : 0;
                double tr = 0;
                for (int i = 0; i < n; i++) {
                    tr += Ring<TestType>::re(prod(i, i));
                }
                CHECK(tr == Catch::Approx(expect).margin(1e-10));
            }
        }
        CHECK((acc - m.full()).norm() < 1e-10);
    }
}

TEMPLATE_TEST_CASE("random unitaries are unitary", "[numkernel][hermitian]", double, Complex, Quaternion) {
    Rng rng(14);
    auto u = random_unitary<TestType>(4, rng);
    CHECK((u * u.adjoint() - RingMatrix<TestType>::identity(4)).norm() < 1e-12);
    CHECK((u.adjoint() * u - RingMatrix<TestType>::identity(4)).norm() < 1e-12);
}

TEST_CASE("HermitianMatrix rejects non-self-adjoint input", "[numkernel][hermitian]") {
    RingMatrix<Complex> m(2, 2);
    m(0, 1) = Complex(1, 0);
    REQUIRE_THROWS_WITH(HermitianMatrix<Complex>(m), ContainsSubstring("not self-adjoint"));
    REQUIRE_THROWS_AS(HermitianMatrix<double>(RingMatrix<double>(2, 3)), ValidationError);
}

TEST_CASE("cone LP agrees with the Caratheodory oracle", "[numkernel][lp]") {
    Rng rng(21);
    int infeasible = 0;
    for (int s = 0; s < 300; s++) {
        int m = 2 + (int)(rng() % 3), k = 2 + (int)(rng() % 5);
        Mat g(m, k);
        for (int c = 0; c < k; c++) {
            g.col(c) = gaussian_vec(m, rng);
        }
        Vec t = gaussian_vec(m, rng);
        bool expect = oracle::caratheodory_member(g, t);
        auto res = cone_lp_feasible(g, t);

        REQUIRE(res.feasible == expect);
        if (res.feasible) {
            CHECK((res.coefficients.array() >= -1e-12).all());
            CHECK((g * res.coefficients - t).norm() < 1e-8);
        } else {
            infeasible++;
            CHECK(std::abs(res.certificate.norm() - 1) < 1e-9);
            CHECK(certificate_separates(g, t, res.certificate));
        }
    }
    CHECK(infeasible > 30);
}

TEST_CASE("cone LP edge cases", "[numkernel][lp]") {
    Mat g = Mat::Identity(3, 3);

    CHECK(cone_lp_feasible(g, Vec::Zero(3)).feasible);
    CHECK(cone_lp_feasible(g, Vec::Ones(3)).feasible);
    CHECK_FALSE(cone_lp_feasible(g, -Vec::Unit(3, 1)).feasible);
    REQUIRE_THROWS_AS(cone_lp_feasible(g, Vec::Ones(2)), ValidationError);
    REQUIRE_THROWS_AS(cone_lp_feasible(Mat::Zero(3, 2), Vec::Ones(3)), ValidationError);
    REQUIRE_THROWS_AS(cone_lp_feasible(Mat::Identity(65, 65), Vec::Ones(65)), ValidationError);

    Mat square(2, 4);
    square << 0, 1, 1, 0, 0, 0, 1, 1;
    CHECK(convex_hull_member(square, Vec::Constant(2, 0.5)).feasible);
    CHECK_FALSE(convex_hull_member(square, Vec::Constant(2, 1.5)).feasible);
}

TEST_CASE("vertex enumeration agrees with basic feasible solutions", "[numkernel][polytope]") {
    Rng rng(31);
    for (int s = 0; s < 60; s++) {
        int n = 2 + (int)(rng() % 3), q = n + 1 + (int)(rng() % 4);
        Mat ain(q, n);
        Vec bin(q);
        for (int r = 0; r < q; r++) {
            for (int c = 0; c < n; c++) {
                ain(r, c) = (double)((int)(rng() % 7) - 3);
            }
            bin[r] = -1.0 - (double)(rng() % 3);
        }
        // bounding box keeps the polytope bounded
        Mat box(2 * n, n);
        box << Mat::Identity(n, n), -Mat::Identity(n, n);
        Mat a(q + 2 * n, n);
        a << ain, box;
        Vec b(q + 2 * n);
        b << bin, Vec::Constant(2 * n, -2);

        auto got = enumerate_vertices(Mat(0, n), Vec(0), a, b);
        auto want = oracle::basic_feasible_solutions(Mat(0, n), Vec(0), a, b);
        CHECK(oracle::same_point_set(got, want));
    }
}

TEST_CASE("vertex enumeration with equalities", "[numkernel][polytope]") {
    // probability simplex in R^3
    Mat aeq = Mat::Ones(1, 3);
    Vec beq = Vec::Ones(1);
    auto v = enumerate_vertices(aeq, beq, Mat::Identity(3, 3), Vec::Zero(3));

    REQUIRE(v.size() == 3);
    CHECK(v[0] == Vec::Unit(3, 2));
    CHECK(v[2] == Vec::Unit(3, 0));

    // infeasible system
    CHECK(enumerate_vertices(aeq, -beq, Mat::Identity(3, 3), Vec::Zero(3)).empty());
    // unbounded
    REQUIRE_THROWS(enumerate_vertices(Mat(0, 2), Vec(0), Mat::Identity(2, 2), Vec::Zero(2)));
}

TEST_CASE("extreme rays and facets", "[numkernel][polytope]") {
    Mat g(3, 4);
    g << 1, 1, 1, 1, 0, 1, 1, 0, 0, 0, 1, 1;
    auto facets = cone_facets(g);
    CHECK(facets.size() == 4);
    for (const auto &f : facets) {
        Vec vals = g.transpose() * f;
        CHECK((vals.array() >= -1e-12).all());
        CHECK((vals.array().abs() < 1e-12).count() == 2);
    }
    // half-plane cone is not pointed
    Mat a(1, 2);
    a << 1, 0;
    REQUIRE_THROWS_AS(extreme_rays(a), ValidationError);
}

TEST_CASE("snap rounds to nearby fractions", "[numkernel][polytope]") {
    Vec v(3);
    v << 0.5 + 1e-14, -5.5e-17, 1.0 / 3.0 - 2e-13;
    Vec s = snap(v);
    CHECK(s[0] == 0.5);
    CHECK(s[1] == 0.0);
    CHECK(s[2] == 1.0 / 3.0);
    Vec far(1);
    far << 0.123456789;
    CHECK(snap(far)[0] == 0.123456789);
}
