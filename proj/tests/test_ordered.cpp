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
#include "ejalab/ordered.hpp"
#include "oracles.hpp"

using namespace ejalab;
using namespace ejalab::ordered;
using Catch::Matchers::ContainsSubstring;

static_assert(StateCone<PolyhedralStateCone>);
static_assert(StateCone<jordan::JordanStateCone>);

TEST_CASE("spaces of the square and diamond bits", "[ordered]") {
    auto diamond = testspace::diamond_bit();
    auto sq = build_spaces(testspace::square_bit());
    auto dm = build_spaces(diamond);

    CHECK(sq.dim() == 3);
    CHECK(dm.dim() == 3);
    // every state gives the unit value 1
    CHECK(((sq.unit.transpose() * sq.vertex_coords).array() - 1).abs().maxCoeff() < 1e-12);
    CHECK(((dm.unit.transpose() * dm.vertex_coords).array() - 1).abs().maxCoeff() < 1e-12);
    // effects reproduce probabilities
    for (const auto &alpha : diamond.states()) {
        Vec c = dm.state_coords(alpha);
        for (int x = 0; x < 4; x++) {
            CHECK(dm.effect(x).dot(c) == Catch::Approx(alpha[x]).margin(1e-12));
        }
    }
    auto full = build_spaces(testspace::classical_model(3));
    CHECK(full.basis == Mat::Identity(3, 3));
}

TEST_CASE("diamond bit separates E(A)+ from V*(A)+", "[ordered]") {
    auto s = build_spaces(testspace::diamond_bit());
    Vec f = s.effect(0) + s.effect(2) - 0.5 * s.unit;

    auto dual = in_cone(s, ConeKind::Vstar, f);
    auto eff = in_cone(s, ConeKind::E, f);
    CHECK(dual.member);
    REQUIRE_FALSE(eff.member);
    CHECK(numkernel::certificate_separates(s.effect_coords, f, eff.certificate));
    CHECK_FALSE(oracle::caratheodory_member(s.effect_coords, f));
    CHECK(is_effect(s, f));

    auto w = effect_cone_gap(s);
    REQUIRE(w);
    CHECK(in_cone(s, ConeKind::Vstar, *w).member);
    CHECK_FALSE(in_cone(s, ConeKind::E, *w).member);
}

TEST_CASE("square bit and simplices have no effect cone gap", "[ordered]") {
    CHECK_FALSE(effect_cone_gap(build_spaces(testspace::square_bit())));
    CHECK_FALSE(effect_cone_gap(build_spaces(testspace::classical_model(4))));
}

TEST_CASE("cone membership agrees with oracles", "[ordered][property]") {
    Rng rng(51);
    auto s = build_spaces(testspace::diamond_bit());
    for (int k = 0; k < 200; k++) {
        Vec v = gaussian_vec(3, rng);
        bool in_v = oracle::caratheodory_member(s.vertex_coords, v);
        bool in_e = oracle::caratheodory_member(s.effect_coords, v);
        bool in_dual = (v.transpose() * s.vertex_coords).minCoeff() >= -1e-10;

        CHECK(in_cone(s, ConeKind::V, v).member == in_v);
        CHECK(in_cone(s, ConeKind::E, v).member == in_e);
        auto d = in_cone(s, ConeKind::Vstar, v);
        CHECK(d.member == in_dual);
        if (!d.member) {
            CHECK(v.dot(d.certificate) < 0);
        }
        // E(A)+ is always inside V*(A)+
        if (in_e) {
            CHECK(in_dual);
        }
    }
    REQUIRE_THROWS_WITH(in_cone(s, ConeKind::E, Vec::Ones(2)), ContainsSubstring("dimension mismatch"));
}

TEST_CASE("order unit norm", "[ordered]") {
    auto s = build_spaces(testspace::square_bit());
    CHECK(order_unit_bound(s, s.unit) == Catch::Approx(1));
    CHECK(order_unit_bound(s, s.effect(0) - s.effect(1)) == Catch::Approx(1));
    CHECK(order_unit_bound(s, 3 * s.effect(2)) == Catch::Approx(3));
}

TEST_CASE("build_spaces rejects degenerate models", "[ordered]") {
    auto empty = testspace::FiniteModel::with_states(testspace::square_bit_space(), {});
    REQUIRE_THROWS_WITH(build_spaces(empty), ContainsSubstring("no states"));
}

TEST_CASE("processes on a classical system", "[ordered]") {
    auto s = build_spaces(testspace::classical_model(3));
    PolyhedralStateCone cone(s);
    Mat perm = Mat::Zero(3, 3);
    perm(1, 0) = perm(2, 1) = perm(0, 2) = 1;

    SECTION("permutations are reversible with p = 1") {
        auto r = is_reversible(Process{perm}, cone, s.unit);
        CHECK(r.reversible);
        CHECK(r.p == Catch::Approx(1));
        CHECK(r.residual < 1e-12);
    }
    SECTION("attenuation is reversible with p below 1") {
        auto r = is_reversible(Process{0.5 * Mat::Identity(3, 3)}, cone, s.unit);
        CHECK(r.reversible);
        CHECK(r.p == Catch::Approx(0.5));
        CHECK(r.residual < 1e-12);
    }
    SECTION("mixing is positive but not reversible") {
        Mat mix = Mat::Constant(3, 3, 0.1) + 0.7 * Mat::Identity(3, 3);
        CHECK(is_positive(Process{mix}, cone, cone));
        auto r = is_reversible(Process{mix}, cone, s.unit);
        CHECK_FALSE(r.reversible);
        CHECK(r.reason == "inverse is not positive");
    }
    SECTION("singular maps") {
        Mat proj = Mat::Zero(3, 3);
        proj(0, 0) = 1;
        auto r = is_reversible(Process{proj}, cone, s.unit);
        CHECK_FALSE(r.reversible);
        CHECK(r.reason == "singular");
    }
    SECTION("duals") {
        Process t{perm};
        auto d = dual_process(t);
        CHECK(d.dual);
        CHECK(dual_process(d).matrix == perm);
        CHECK(dual_contract_holds(t, cone, s.unit, s.unit));
        CHECK_FALSE(dual_contract_holds(Process{2 * perm}, cone, s.unit, s.unit));
    }
}

TEST_CASE("Jordan state cone satisfies the same process interface", "[ordered]") {
    auto j = jordan::JordanAlgebra::make(jordan::Family::complexherm, 2);
    jordan::JordanStateCone cone(j, 7);
    Rng rng(52);
    Mat g = jordan::random_automorphism(j, rng);
    auto r = is_reversible(Process{g}, cone, j.unit());
    CHECK(r.reversible);
    CHECK(r.p == Catch::Approx(1).margin(1e-9));
}
