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

#include "ejalab/model_io.hpp"
#include "ejalab/report.hpp"
#include "ejalab/suites.hpp"

using namespace ejalab;
using namespace ejalab::report;
using Catch::Matchers::ContainsSubstring;

TEST_CASE("JSON report layout", "[report]") {
    VerificationReport r{"demo", 7, Tolerances{}, {}, std::nullopt};
    r.add({"zeta", "anchor z", Status::pass, 1e-15, 10, 3, ""});
    r.add({"alpha", "anchor a", Status::fail, 0.5, 4, 9, "too big"});
    r.add({"mid", "anchor m", Status::skipped, 0, 0, 1, "n/a"});

    auto j = r.to_json();
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) {
        keys.push_back(it.key());
    }
    CHECK(keys == std::vector<std::string>{"report_version", "suite", "seed", "tolerances", "passed", "summary",
                                           "checks"});
    CHECK(j["report_version"] == 1);
    CHECK(j["passed"] == false);
    CHECK(j["summary"]["fail"] == 1);
    CHECK(j["summary"]["skipped"] == 1);
    REQUIRE(j["checks"].size() == 3);
    CHECK(j["checks"][0]["name"] == "alpha");
    CHECK(j["checks"][1]["name"] == "mid");
    CHECK(j["checks"][2]["status"] == "pass");
    CHECK_FALSE(j.contains("wall_time_s"));

    r.wall_time = 1.25;
    CHECK(r.to_json()["wall_time_s"] == 1.25);
    CHECK_THAT(r.to_markdown(), ContainsSubstring("wall time"));
}

TEST_CASE("report text does not depend on insertion order", "[report]") {
    VerificationReport a{"s", 1, Tolerances{}, {}, std::nullopt}, b = a;
    CheckResult x{"x", "", Status::pass, 0, 1, 1, ""}, y{"y", "", Status::pass, 0, 1, 1, ""};
    a.add(x);
    a.add(y);
    b.add(y);
    b.add(x);
    CHECK(a.to_json().dump() == b.to_json().dump());
    CHECK(a.to_markdown() == b.to_markdown());
    CHECK(a.passed());
}

TEST_CASE("derived seeds", "[report]") {
    CHECK(derive_seed(1, "a") == derive_seed(1, "a"));
    CHECK(derive_seed(1, "a") != derive_seed(1, "b"));
    CHECK(derive_seed(1, "a") != derive_seed(2, "a"));
}

TEST_CASE("suites are deterministic and pass", "[report][suites]") {
    suites::SuiteOptions o;
    o.seed = 5;
    o.samples = 20;
    for (const auto &name : suites::suite_names()) {
        INFO(name);
        auto r1 = suites::run_suite(name, o);
        auto r2 = suites::run_suite(name, o);
        CHECK(r1.to_json().dump() == r2.to_json().dump());
        CHECK(r1.passed());
        CHECK_FALSE(r1.checks.empty());
        for (const auto &c : r1.checks) {
            CHECK_FALSE(c.anchor.empty());
        }
    }
    REQUIRE_THROWS_WITH(suites::run_suite("nope", o), ContainsSubstring("unknown suite"));
}

TEST_CASE("suites restricted to one algebra", "[report][suites]") {
    suites::SuiteOptions o;
    o.samples = 10;
    o.algebra = jordan::JordanAlgebra::make(jordan::Family::complexherm, 2);
    auto r = suites::run_suite("theorem2", o);
    CHECK(r.passed());
    bool epr = false;
    for (const auto &c : r.checks) {
        CHECK_THAT(c.name, ContainsSubstring("complexherm(2)"));
        epr = epr || c.name.rfind("conjugate-epr", 0) == 0;
    }
    CHECK(epr);
}

TEST_CASE("model documents", "[report][model_io]") {
    SECTION("finite model with group by name") {
        auto doc = model_io::parse_string(R"({"tests": [["x", "x'"], ["y", "y'"]],
                                              "group": [["x'", "x", "y", "y'"], ["y", "y'", "x", "x'"]]})");
        REQUIRE(doc.model);
        CHECK(doc.model->states().size() == 4);
        REQUIRE(doc.group);
        CHECK(doc.group->order() == 8);
    }
    SECTION("explicit states and outcomes by index") {
        auto doc = model_io::parse_string(R"({"outcomes": ["a", "b"], "tests": [[0, 1]],
                                              "states": [[1, 0], [0.5, 0.5]]})");
        CHECK(doc.model->states().size() == 2);
    }
    SECTION("algebras") {
        auto doc = model_io::parse_string(R"({"jordan": {"summands": [{"family": "classical", "size": 1},
                                                                      {"family": "spin", "size": 3}]}})");
        REQUIRE(doc.algebra);
        CHECK(doc.algebra->name() == "directsum(classical(1), spin(3))");
    }
    SECTION("joint states") {
        auto doc = model_io::parse_string(R"({"joint": {"left": {"tests": [["a", "b"]]},
                                                        "right": {"tests": [["c", "d"]]},
                                                        "table": [[0.5, 0], [0, 0.5]]}})");
        REQUIRE(doc.joint);
        CHECK(doc.joint->table(1, 1) == 0.5);
    }
    SECTION("errors carry a path") {
        REQUIRE_THROWS_WITH(model_io::parse_string("{"), ContainsSubstring("malformed JSON"));
        REQUIRE_THROWS_WITH(model_io::parse_string("[]"), ContainsSubstring("expected a JSON object"));
        REQUIRE_THROWS_WITH(model_io::parse_string("{}"), ContainsSubstring("at least one of"));
        REQUIRE_THROWS_WITH(model_io::parse_string(R"({"tests": [["a", "a"]]})"),
                            ContainsSubstring("document: invalid test space"));
        REQUIRE_THROWS_WITH(model_io::parse_string(R"({"tests": [["a", "b"]], "states": [[1, 1]]})"),
                            ContainsSubstring("document.states"));
        REQUIRE_THROWS_WITH(model_io::parse_string(R"({"tests": [["a", "b"]], "states": [[1]]})"),
                            ContainsSubstring("document.states[0]: expected 2 entries"));
        REQUIRE_THROWS_WITH(model_io::parse_string(R"({"tests": [["a", "b"]], "group": [["a", "z"]]})"),
                            ContainsSubstring("document.group[0][1]"));
        REQUIRE_THROWS_WITH(model_io::parse_string(R"({"jordan": {"family": "octonion", "size": 3}})"),
                            ContainsSubstring("document.jordan"));
        REQUIRE_THROWS_WITH(model_io::parse_string(R"({"jordan": {"family": "spin"}})"),
                            ContainsSubstring("missing field 'size'"));
        REQUIRE_THROWS_WITH(model_io::load("/nonexistent/file.model"), ContainsSubstring("cannot open"));
    }
}
