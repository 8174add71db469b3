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

#include <sys/wait.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

using Catch::Matchers::ContainsSubstring;

namespace {

struct Run {
    int code = -1;
    std::string out;
};

/// Runs the CLI with stderr merged into stdout.
Run run(const std::string &args) {
    std::string cmd = std::string(EJALAB_CLI) + " " + args + " 2>&1";
    Run r;
    FILE *p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::array<char, 4096> buf{};
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) {
        r.out.append(buf.data(), n);
    }
    int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string model(const std::string &name) { return std::string(EJALAB_MODELS) + "/" + name; }

std::vector<std::string> lines(const std::string &s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    for (std::string l; std::getline(is, l);) {
        out.push_back(l);
    }
    return out;
}

}  // namespace

TEST_CASE("usage errors exit with 2", "[cli]") {
    CHECK(run("").code == 2);
    CHECK(run("frobnicate").code == 2);
    CHECK(run("suite nosuchsuite").code == 2);
    CHECK(run("validate /nonexistent.model").code == 2);
    CHECK(run("suite theorem2 --family octonion --size 3").code == 2);
    CHECK(run("suite theorem2 --family exceptional --size 3").code == 2);
    CHECK(run("ball-samples --family complexherm --size 3").code == 2);
    CHECK(run("--help").code == 0);
}

TEST_CASE("malformed model files", "[cli]") {
    std::string path = "ejalab_cli_malformed.model";
    {
        FILE *f = std::fopen(path.c_str(), "w");
        REQUIRE(f);
        std::fputs("{\"tests\": [[\"a\", ", f);
        std::fclose(f);
    }
    auto r = run("validate " + path);
    CHECK(r.code == 2);
    CHECK_THAT(r.out, ContainsSubstring("malformed JSON"));
    std::remove(path.c_str());
}

TEST_CASE("validate the diamond and square bits", "[cli]") {
    auto d = run("validate " + model("diamond_bit.model"));
    CHECK(d.code == 0);
    CHECK_THAT(d.out, ContainsSubstring("sharp: true"));
    CHECK_THAT(d.out, ContainsSubstring("E(A)+ strictly inside V*(A)+: yes"));

    auto s = run("validate " + model("square_bit.model"));
    CHECK(s.code == 0);
    CHECK_THAT(s.out, ContainsSubstring("sharp: false"));
    CHECK_THAT(s.out, ContainsSubstring("E(A)+ strictly inside V*(A)+: no"));
    CHECK_THAT(s.out, ContainsSubstring("group order: 8"));
    CHECK_THAT(s.out, ContainsSubstring("sharpened model: 4 vertices, sharp true"));
    CHECK_THAT(s.out, ContainsSubstring("(1, 0, 1/2, 1/2)"));

    auto j = run("validate " + model("mixed_sum.model"));
    CHECK(j.code == 0);
    CHECK_THAT(j.out, ContainsSubstring("directsum(classical(1), spin(3), complexherm(2)), dim 9, rank 5"));
}

TEST_CASE("joint states", "[cli]") {
    auto ok = run("validate " + model("prbox.model"));
    CHECK(ok.code == 0);
    CHECK_THAT(ok.out, ContainsSubstring("non-signaling: true"));
    auto bad = run("validate " + model("signaling.model"));
    CHECK(bad.code == 1);
    CHECK_THAT(bad.out, ContainsSubstring("non-signaling: false"));

    auto pr = run("prbox");
    CHECK(pr.code == 0);
    CHECK_THAT(pr.out, ContainsSubstring("correlates test 1 with test 0: yes"));
}

TEST_CASE("maximal tensor of square bits", "[cli]") {
    auto r = run("maxtensor " + model("square_bit.model") + " " + model("square_bit.model"));
    CHECK(r.code == 0);
    CHECK_THAT(r.out, ContainsSubstring("24 vertices (16 product, 8 non-product)"));
    CHECK_THAT(r.out, ContainsSubstring("all vertices non-signaling: true"));
}

TEST_CASE("suite reports are deterministic", "[cli]") {
    auto a = run("--seed 3 suite models");
    auto b = run("--seed 3 suite models");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    auto j = nlohmann::json::parse(a.out);
    CHECK(j["report_version"] == 1);
    CHECK(j["seed"] == 3);
    CHECK_FALSE(j.contains("wall_time_s"));

    auto timed = nlohmann::json::parse(run("--timing suite models").out);
    CHECK(timed.contains("wall_time_s"));

    auto env = run("suite bitball --samples 5");
    auto env2 = run("--seed 1 suite bitball --samples 5");
    CHECK(env.out == env2.out);

    auto md = run("suite snake --family complexherm --size 2 --format markdown");
    CHECK(md.code == 0);
    CHECK_THAT(md.out, ContainsSubstring("| snake:complexherm(2) |"));

    auto file = run("suite theorem2 " + model("complexherm2.model") + " --samples 10");
    CHECK(file.code == 0);
    CHECK_THAT(file.out, ContainsSubstring("conjugate-epr:complexherm(2)"));
}

TEST_CASE("ball samples", "[cli]") {
    auto empty = run("ball-samples --family complexherm --size 2 --count 0");
    CHECK(empty.code == 0);
    auto el = lines(empty.out);
    REQUIRE(el.size() == 2);
    CHECK(el[0].rfind("# algebra=complexherm(2) d=3", 0) == 0);
    CHECK(el[1] == "x1,x2,x3");

    auto r = run("--seed 9 ball-samples --family spin --size 4 --count 20");
    CHECK(r.code == 0);
    auto rl = lines(r.out);
    REQUIRE(rl.size() == 22);
    CHECK(rl[1] == "x1,x2,x3,x4");
    for (size_t k = 2; k < rl.size(); k++) {
        std::istringstream is(rl[k]);
        double s = 0;
        int cols = 0;
        for (std::string cell; std::getline(is, cell, ',');) {
            double v = std::stod(cell);
            s += v * v;
            cols++;
        }
        CHECK(cols == 4);
        CHECK(std::sqrt(s) == Catch::Approx(1 / std::sqrt(2.0)).margin(1e-12));
    }
    CHECK(run("--seed 9 ball-samples --family spin --size 4 --count 20").out == r.out);
}
