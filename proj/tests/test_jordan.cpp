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

#include "ejalab/jordan.hpp"
#include "oracles.hpp"

using namespace ejalab;
using namespace ejalab::jordan;
using Catch::Matchers::ContainsSubstring;

namespace {

std::vector<JordanAlgebra> algebras() {
    std::vector<JordanAlgebra> out;
    for (Family f : {Family::classical, Family::realherm, Family::complexherm, Family::quatherm}) {
        for (int n = 1; n <= 4; n++) {
            out.push_back(JordanAlgebra::make(f, n));
        }
    }
    for (int d : {1, 2, 3, 5, 8}) {
        out.push_back(JordanAlgebra::make(Family::spin, d));
    }
    out.push_back(JordanAlgebra::direct_sum({JordanAlgebra::make(Family::classical, 1),
                                             JordanAlgebra::make(Family::spin, 3),
                                             JordanAlgebra::make(Family::complexherm, 2)}));
    return out;
}

oracle::CMat as_cmat(const RingMatrix<Complex> &m) {
    oracle::CMat c(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); i++) {
        for (int k = 0; k < m.cols(); k++) {
            c(i, k) = m(i, k);
        }
    }
    return c;
}

/// Coordinates scale off-diagonal parts by sqrt 2 so the trace form is Euclidean.
oracle::Vec coords_to_params(const Vec &c, int n) {
    Vec p = c;
    p.tail(c.size() - n) /= std::sqrt(2.0);
    return p;
}

}  // namespace

TEST_CASE("dimensions, ranks and names", "[jordan]") {
    auto c = JordanAlgebra::make(Family::complexherm, 3);
    CHECK(c.dim() == 9);
    CHECK(c.rank() == 3);
    CHECK(c.name() == "complexherm(3)");
    CHECK(JordanAlgebra::make(Family::quatherm, 3).dim() == 15);
    CHECK(JordanAlgebra::make(Family::realherm, 4).dim() == 10);
    auto s = JordanAlgebra::make(Family::spin, 5);
    CHECK(s.dim() == 6);
    CHECK(s.rank() == 2);

    auto sum = JordanAlgebra::direct_sum({JordanAlgebra::make(Family::classical, 1), s, c});
    CHECK(sum.dim() == 16);
    CHECK(sum.rank() == 6);
    CHECK_FALSE(sum.is_simple());
    CHECK(sum.family() == Family::directsum);
    CHECK(sum.name() == "directsum(classical(1), spin(5), complexherm(3))");
    CHECK(sum.trace(sum.unit()) == Catch::Approx(6));

    CHECK(parse_family("quatherm") == Family::quatherm);
    REQUIRE_THROWS_AS(JordanAlgebra::make(Family::exceptional, 3), Unsupported);
    REQUIRE_THROWS_WITH(JordanAlgebra::make(Family::quatherm, 9), ContainsSubstring("at most 8"));
    REQUIRE_THROWS_WITH(JordanAlgebra::make(Family::classical, 0), ContainsSubstring("at least 1"));
    REQUIRE_THROWS_WITH(parse_family("octonion"), ContainsSubstring("unknown algebra family"));
}

TEST_CASE("complex Hermitian product matches the matrix oracle", "[jordan]") {
    Rng rng(61);
    for (int n = 1; n <= 4; n++) {
        auto j = JordanAlgebra::make(Family::complexherm, n);
        for (int k = 0; k < 10; k++) {
            Vec a = random_element(j, rng), b = random_element(j, rng);
            auto ma = oracle::complex_hermitian(coords_to_params(a, n), n);
            auto mb = oracle::complex_hermitian(coords_to_params(b, n), n);

            CHECK((as_cmat(j.to_matrix<Complex>(a)) - ma).norm() < 1e-12);
            CHECK((as_cmat(j.to_matrix<Complex>(j.mul(a, b))) - oracle::jordan_product(ma, mb)).norm() < 1e-12);
            CHECK(j.inner(a, b) == Catch::Approx((ma * mb).trace().real()).margin(1e-12));
            CHECK((j.from_matrix<Complex>(j.to_matrix<Complex>(a)) - a).norm() < 1e-12);
        }
    }
}

TEST_CASE("spin factor product matches the oracle", "[jordan]") {
    Rng rng(62);
    auto j = JordanAlgebra::make(Family::spin, 4);
    for (int k = 0; k < 20; k++) {
        Vec a = random_element(j, rng), b = random_element(j, rng);
        Vec want = std::sqrt(2.0) * oracle::spin_product(a / std::sqrt(2.0), b / std::sqrt(2.0));
        CHECK((j.mul(a, b) - want).norm() < 1e-12);
    }
}

TEST_CASE("Jordan algebra identities", "[jordan][property]") {
    Rng rng(63);
    for (const auto &j : algebras()) {
        INFO(j.name());
        Vec u = j.unit();
        for (int k = 0; k < 5; k++) {
            Vec a = random_element(j, rng), b = random_element(j, rng), c = random_element(j, rng);
            Vec a2 = j.square(a);
            double scale = 1 + a.norm() * a.norm() * a.norm() * b.norm();
            CHECK((j.mul(a, b) - j.mul(b, a)).norm() < 1e-12 * scale);
            CHECK((j.mul(j.mul(a, b), a2) - j.mul(a, j.mul(b, a2))).norm() < 1e-11 * scale);
            CHECK((j.mul(u, a) - a).norm() < 1e-12 * (1 + a.norm()));
            CHECK(std::abs(j.inner(j.mul(a, b), c) - j.inner(b, j.mul(a, c))) < 1e-11 * scale * (1 + c.norm()));
            CHECK(j.inner(a2, u) >= -1e-12);
        }
    }
}

TEST_CASE("the polarized square is bilinear", "[jordan][property]") {
    Rng rng(71);
    for (const auto &j : algebras()) {
        INFO(j.name());
        auto polar = [&](const Vec &a, const Vec &b) {
            return Vec(0.5 * (j.square(a + b) - j.square(a) - j.square(b)));
        };
        for (int k = 0; k < 5; k++) {
            Vec a = random_element(j, rng), b = random_element(j, rng), c = random_element(j, rng);
            double t = 3 * uniform01(rng) - 1.5;
            double scale = 1 + (a.norm() + c.norm()) * b.norm();
            CHECK((polar(a, b) - j.mul(a, b)).norm() < 1e-12 * scale);
            CHECK((polar(Vec(a + t * c), b) - polar(a, b) - t * polar(c, b)).norm() < 1e-11 * scale);
        }
    }
}

TEST_CASE("spectral decomposition", "[jordan][property]") {
    Rng rng(64);
    for (const auto &j : algebras()) {
        INFO(j.name());
        for (int k = 0; k < 4; k++) {
            Vec a = random_element(j, rng);
            auto d = diagonalize(j, a);
            REQUIRE((int)d.values.size() == j.rank());
            REQUIRE((int)d.frame.size() == j.rank());
            CHECK(std::is_sorted(d.values.rbegin(), d.values.rend()));
            Vec sum = Vec::Zero(j.dim()), rec = Vec::Zero(j.dim());
            for (int i = 0; i < j.rank(); i++) {
                sum += d.frame[i];
                rec += d.values[i] * d.frame[i];
                CHECK(is_primitive_idempotent(j, d.frame[i]));
                for (int m = i + 1; m < j.rank(); m++) {
                    CHECK(j.mul(d.frame[i], d.frame[m]).norm() < 1e-9);
                }
            }
            CHECK((sum - j.unit()).norm() < 1e-9);
            CHECK((rec - a).norm() < 1e-9 * (1 + a.norm()));

            auto canon = spectral_decompose(j, a);
            CHECK((reconstruct(canon, j.dim()) - a).norm() < 1e-9 * (1 + a.norm()));
            Mat g = random_automorphism(j, rng);
            CHECK(canonical_equal(canon, spectral_decompose_via(j, a, g)));
        }
    }
}

TEST_CASE("eigenvalues agree with dense diagonalization", "[jordan]") {
    Rng rng(65);
    for (int n = 2; n <= 4; n++) {
        auto j = JordanAlgebra::make(Family::complexherm, n);
        Vec a = random_element(j, rng);
        Eigen::SelfAdjointEigenSolver<oracle::CMat> es(oracle::complex_hermitian(coords_to_params(a, n), n));
        auto d = diagonalize(j, a);
        for (int i = 0; i < n; i++) {
            CHECK(d.values[i] == Catch::Approx(es.eigenvalues()[n - 1 - i]).margin(1e-10));
        }
    }
}

TEST_CASE("degenerate spectra have a unique canonical form", "[jordan]") {
    Rng rng(66);
    for (const auto &j : algebras()) {
        if (j.rank() < 3) {
            continue;
        }
        INFO(j.name());
        auto frame = random_frame(j, rng);
        CHECK(frame_residual(j, frame) < 1e-9);
        std::vector<double> values(j.rank(), 0.5);
        values[0] = values[1] = 2;
        Vec a = Vec::Zero(j.dim());
        for (int i = 0; i < j.rank(); i++) {
            a += values[i] * frame.elements[i];
        }
        auto canon = spectral_decompose(j, a);
        REQUIRE(canon.values.size() == 2);
        CHECK(canon.values[0] == Catch::Approx(2));
        CHECK(canon.values[1] == Catch::Approx(0.5));
        CHECK((canon.projectors[0] - frame.elements[0] - frame.elements[1]).norm() < 1e-8);
        CHECK(canonical_equal(canon, canonical_from_frame(frame.elements, values)));
        for (const auto &p : canon.projectors) {
            CHECK(is_idempotent(j, p));
        }
    }
}

TEST_CASE("functional calculus", "[jordan]") {
    Rng rng(67);
    for (const auto &j : algebras()) {
        INFO(j.name());
        Vec a = random_interior(j, rng);
        Vec r = sqrt_of(j, a);
        CHECK((j.square(r) - a).norm() < 1e-9 * (1 + a.norm()));
        CHECK(is_positive(j, r));
        Vec inv = inverse_of(j, a);
        CHECK((j.mul(a, inv) - j.unit()).norm() < 1e-8);
        CHECK((power_of(j, a, 2) - j.square(a)).norm() < 1e-9 * (1 + a.squaredNorm()));
        // U_a b = 2 a(ab) - a^2 b
        Vec b = random_element(j, rng);
        Vec ua = 2 * j.mul(a, j.mul(a, b)) - j.mul(j.square(a), b);
        CHECK((quadratic_rep(j, a) * b - ua).norm() < 1e-9 * (1 + a.squaredNorm() * b.norm()));
    }
    auto j = JordanAlgebra::make(Family::realherm, 2);
    Vec neg = j.unit();
    neg[0] = -1;
    CHECK_FALSE(is_positive(j, neg));
}

TEST_CASE("automorphisms are orthogonal and multiplicative", "[jordan]") {
    Rng rng(68);
    for (const auto &j : algebras()) {
        INFO(j.name());
        Mat g = random_automorphism(j, rng);
        CHECK((g.transpose() * g - Mat::Identity(j.dim(), j.dim())).norm() < 1e-10);
        Vec a = random_element(j, rng), b = random_element(j, rng);
        CHECK((g * j.mul(a, b) - j.mul(g * a, g * b)).norm() < 1e-10 * (1 + a.norm() * b.norm()));
        CHECK((g * j.unit() - j.unit()).norm() < 1e-12);
    }
}

TEST_CASE("low-dimensional spin factors are matrix algebras", "[jordan]") {
    Rng rng(69);
    for (int d : {2, 3, 5}) {
        INFO(d);
        auto spin = JordanAlgebra::make(Family::spin, d);
        auto iso = spin_matrix_isomorphism(d);
        REQUIRE(iso.target.dim() == d + 1);
        CHECK((iso.map.transpose() * iso.map - Mat::Identity(d + 1, d + 1)).norm() < 1e-12);
        CHECK((iso.map * spin.unit() - iso.target.unit()).norm() < 1e-12);
        for (int k = 0; k < 5; k++) {
            Vec a = random_element(spin, rng), b = random_element(spin, rng);
            CHECK((iso.map * spin.mul(a, b) - iso.target.mul(iso.map * a, iso.map * b)).norm() < 1e-11);
        }
    }
    REQUIRE_THROWS_WITH(spin_matrix_isomorphism(4), ContainsSubstring("2, 3 or 5"));
}

TEST_CASE("Jordan models", "[jordan]") {
    Rng rng(70);
    for (const auto &j : algebras()) {
        INFO(j.name());
        auto m = jordan_model(j);
        Vec mixed = m.maximally_mixed();
        CHECK(m.is_state(mixed));
        Vec state = random_state(j, rng);
        CHECK(m.is_state(state));
        auto test = m.sample_test(rng);
        double total = 0;
        for (const auto &p : test.elements) {
            CHECK(m.is_outcome(p));
            total += m.probability(state, p);
            CHECK(m.probability(mixed, p) == Catch::Approx(1.0 / j.rank()));
        }
        CHECK(total == Catch::Approx(1));
        CHECK(m.is_outcome(random_primitive(j, rng)));
        if (j.rank() > 1) {
            CHECK_FALSE(m.is_outcome(j.unit()));
        }
    }
}
