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

// ejalab command line: model validation, verification suites and reports.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ejalab/ejalab.hpp"

namespace {

using namespace ejalab;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Globals {
    std::uint64_t seed = 1;
    Tolerances tol;
    bool timing = false;
};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

std::string fraction(double v) {
    for (int den : {1, 2, 3, 4, 6, 8}) {
        double n = v * den;
        if (std::abs(n - std::round(n)) < 1e-12) {
            long k = std::lround(n);
            return den == 1 ? std::to_string(k) : std::to_string(k) + "/" + std::to_string(den);
        }
    }
    return num(v);
}

std::string vec_str(const Vec &v, bool frac = false) {
    std::string s = "(";
    for (int k = 0; k < v.size(); k++) {
        s += (k ? ", " : "") + (frac ? fraction(v[k]) : num(v[k]));
    }
    return s + ")";
}

void print_table(std::ostream &os, const composite::JointState &js) {
    os << "      ";
    for (const auto &y : js.right.outcomes) {
        os << " " << std::setw(5) << y;
    }
    os << "\n";
    for (int r = 0; r < js.table.rows(); r++) {
        os << std::setw(6) << js.left.outcomes[r];
        for (int c = 0; c < js.table.cols(); c++) {
            os << " " << std::setw(5) << fraction(js.table(r, c));
        }
        os << "\n";
    }
}

jordan::JordanAlgebra algebra_from(const std::string &family, int size) {
    return jordan::JordanAlgebra::make(jordan::parse_family(family), size);
}

void emit(const report::VerificationReport &r, const std::string &format, const std::string &out) {
    std::string text = format == "markdown" ? r.to_markdown() : r.to_json().dump(2) + "\n";
    if (out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out);
        if (!f) {
            throw ValidationError("cannot write '" + out + "'");
        }
        f << text;
    }
}

int cmd_validate(const Globals &g, const std::string &path) {
    auto doc = model_io::load(path);
    bool ok = true;
    if (doc.model) {
        const auto &m = *doc.model;
        auto diag = testspace::diagnose(m.space());
        std::cout << "model: " << m.num_outcomes() << " outcomes, " << m.space().tests.size() << " tests, "
                  << m.states().size() << (m.is_full() ? " vertices (all weights)" : " states") << "\n";
        std::cout << "uniform: " << (diag.uniform ? "true" : "false") << ", rank " << diag.rank << "\n";
        auto spaces = ordered::build_spaces(m);
        std::cout << "dim V(A): " << spaces.dim() << "\n";
        std::cout << "unital: " << (testspace::is_unital(m) ? "true" : "false") << "\n";
        std::cout << "sharp: " << (testspace::is_sharp(m) ? "true" : "false") << "\n";
        if (auto w = ordered::effect_cone_gap(spaces, g.tol.lp)) {
            std::cout << "E(A)+ strictly inside V*(A)+: yes\n";
            std::cout << "  witness values on states: " << vec_str(Vec(w->transpose() * spaces.vertex_coords), true)
                      << "\n";
            auto cert = ordered::in_cone(spaces, ordered::ConeKind::E, *w, g.tol.lp).certificate;
            std::cout << "  separating functional: " << vec_str(cert) << "\n";
        } else {
            std::cout << "E(A)+ strictly inside V*(A)+: no\n";
        }
        if (doc.group) {
            std::cout << "group order: " << doc.group->order() << "\n";
            auto sharp = testspace::sharpen_by_symmetry(m, *doc.group);
            std::cout << "sharpened model: " << sharp.states().size() << " vertices, sharp "
                      << (testspace::is_sharp(sharp) ? "true" : "false") << "\n";
            for (const auto &v : sharp.states()) {
                std::cout << "  " << vec_str(v, true) << "\n";
            }
        }
    }
    if (doc.algebra) {
        const auto &j = *doc.algebra;
        std::cout << "algebra: " << j.name() << ", dim " << j.dim() << ", rank " << j.rank() << "\n";
    }
    if (doc.joint) {
        auto diag = composite::validate_joint(*doc.joint_left, *doc.joint_right, doc.joint->table, 1e-12, g.tol.lp);
        std::cout << "joint state:\n";
        print_table(std::cout, *doc.joint);
        std::cout << "non-signaling: " << (diag.valid ? "true" : "false") << "\n";
        for (const auto &v : diag.violations) {
            std::cout << "  " << v << "\n";
        }
        ok = ok && diag.valid;
    }
    return ok ? 0 : kExitFail;
}

int cmd_prbox() {
    auto pr = composite::pr_box();
    print_table(std::cout, pr);
    auto diag = composite::validate_joint(pr.left, pr.right, pr.table);
    std::cout << "non-signaling: " << (diag.valid ? "true" : "false") << "\n";
    auto m = composite::marginals_conditionals(pr);
    std::cout << "marginals: " << vec_str(m.first, true) << " / " << vec_str(m.second, true) << "\n";
    bool correlating = true;
    for (size_t e = 0; e < pr.left.tests.size(); e++) {
        for (size_t f = 0; f < pr.right.tests.size(); f++) {
            auto c = composite::correlates(pr.table, pr.left.tests[e], pr.right.tests[f]);
            correlating = correlating && c.correlating;
            std::cout << "correlates test " << e << " with test " << f << ": " << (c.correlating ? "yes" : "no")
                      << "\n";
        }
    }
    auto check = suites::check_pr_box(0);
    return check.status == report::Status::pass && correlating ? 0 : kExitFail;
}

int cmd_maxtensor(const Globals &g, const std::string &a, const std::string &b) {
    auto da = model_io::load(a), db = model_io::load(b);
    if (!da.model || !db.model) {
        throw ValidationError("maxtensor: both files must describe finite models");
    }
    auto mt = composite::maximal_tensor(*da.model, *db.model);
    int product = 0;
    bool nonsignaling = true;
    for (const auto &v : mt.model.states()) {
        Mat w = mt.table(v);
        Eigen::JacobiSVD<Mat> svd(w);
        if (svd.singularValues().size() < 2 || svd.singularValues()[1] < 1e-9) {
            product++;
        }
        nonsignaling =
            nonsignaling && composite::validate_joint(da.model->space(), db.model->space(), w, 1e-9).valid;
    }
    std::cout << "maximal tensor: " << mt.model.states().size() << " vertices (" << product << " product, "
              << mt.model.states().size() - product << " non-product), " << mt.outcome_pairs.size()
              << " outcome pairs\n";
    std::cout << "unit residual: " << num(mt.unit_residual) << "\n";
    std::cout << "all vertices non-signaling: " << (nonsignaling ? "true" : "false") << "\n";
    for (const auto &v : mt.model.states()) {
        std::cout << "  " << vec_str(v, true) << "\n";
    }
    return nonsignaling && mt.unit_residual <= g.tol.alg ? 0 : kExitFail;
}

int cmd_ball_samples(const Globals &g, const std::string &family, int size, int count, const std::string &out) {
    auto j = algebra_from(family, size);
    Rng rng(g.seed);
    auto r = conjugate::bit_ball_check(j, count, rng);
    std::ofstream f;
    std::ostream *os = &std::cout;
    if (!out.empty()) {
        f.open(out);
        if (!f) {
            throw ValidationError("cannot write '" + out + "'");
        }
        os = &f;
    }
    *os << "# algebra=" << j.name() << " d=" << r.dimension << " radius=" << num(r.radius) << "\n";
    for (int k = 0; k < r.dimension; k++) {
        *os << (k ? "," : "") << "x" << k + 1;
    }
    *os << "\n";
    char buf[40];
    for (const auto &c : r.coords) {
        for (int k = 0; k < c.size(); k++) {
            std::snprintf(buf, sizeof buf, "%.17g", c[k]);
            *os << (k ? "," : "") << buf;
        }
        *os << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"ejalab: verification workbench for probabilistic models and euclidean Jordan algebras"};
    app.require_subcommand(1);
    Globals g;
    if (const char *env = std::getenv("EJALAB_SEED")) {
        try {
            g.seed = std::stoull(env);
        } catch (const std::exception &) {
            std::cerr << "error: EJALAB_SEED must be a non-negative integer\n";
            return kExitUsage;
        }
    }
    app.add_option("--seed", g.seed, "random seed (default: $EJALAB_SEED or 1)");
    app.add_option("--tol-alg", g.tol.alg, "tolerance for algebraic identities")->check(CLI::PositiveNumber);
    app.add_option("--tol-eig", g.tol.eig, "eigenvalue merge tolerance")->check(CLI::PositiveNumber);
    app.add_option("--tol-lp", g.tol.lp, "LP feasibility tolerance")->check(CLI::PositiveNumber);
    app.add_flag("--timing", g.timing, "include wall time in reports");

    std::string file, file_b, format = "json", out, family;
    std::string suite_name;
    int size = 0, samples = 0, count = 100;

    auto *validate = app.add_subcommand("validate", "check a model file and print its properties");
    validate->add_option("file", file, "model file (JSON)")->required();

    auto *suite = app.add_subcommand("suite", "run one verification suite");
    suite->add_option("name", suite_name, "appendixB | lemma1 | theorem2 | bitball | snake | models")
        ->required()
        ->check(CLI::IsMember(suites::suite_names()));
    suite->add_option("file", file, "model file with a 'jordan' entry");
    suite->add_option("--family", family, "algebra family");
    suite->add_option("--size", size, "algebra size (n, or d for spin)");
    suite->add_option("--samples", samples, "samples per check")->check(CLI::PositiveNumber);
    suite->add_option("--format", format, "json | markdown")->check(CLI::IsMember({"json", "markdown"}));
    suite->add_option("--out", out, "write the report here instead of stdout");

    auto *prbox = app.add_subcommand("prbox", "print the PR box and its checks");

    auto *maxtensor = app.add_subcommand("maxtensor", "vertices of the maximal tensor product");
    maxtensor->add_option("fileA", file, "first model file")->required();
    maxtensor->add_option("fileB", file_b, "second model file")->required();

    auto *rep = app.add_subcommand("report", "run every suite");
    rep->add_option("--format", format, "json | markdown")->check(CLI::IsMember({"json", "markdown"}));
    rep->add_option("--out", out, "write the report here instead of stdout");
    rep->add_option("--samples", samples, "samples per check")->check(CLI::PositiveNumber);

    auto *ball = app.add_subcommand("ball-samples", "CSV of pure states of a rank-2 algebra around the center");
    ball->add_option("--family", family, "algebra family")->required();
    ball->add_option("--size", size, "algebra size")->required();
    ball->add_option("--count", count, "number of samples")->check(CLI::NonNegativeNumber);
    ball->add_option("--out", out, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        suites::SuiteOptions opts;
        opts.seed = g.seed;
        opts.tol = g.tol;
        if (samples > 0) {
            opts.samples = samples;
        }
        auto run_timed = [&](auto &&fn) {
            auto t0 = std::chrono::steady_clock::now();
            report::VerificationReport r = fn();
            if (g.timing) {
                r.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            }
            emit(r, format, out);
            return r.passed() ? 0 : kExitFail;
        };
        if (*validate) {
            return cmd_validate(g, file);
        }
        if (*suite) {
            if (!family.empty()) {
                if (size <= 0) {
                    throw ValidationError("--family requires --size");
                }
                opts.algebra = algebra_from(family, size);
            } else if (!file.empty()) {
                auto doc = model_io::load(file);
                if (!doc.algebra) {
                    throw ValidationError(file + ": no 'jordan' entry");
                }
                opts.algebra = doc.algebra;
            }
            return run_timed([&] { return suites::run_suite(suite_name, opts); });
        }
        if (*prbox) {
            return cmd_prbox();
        }
        if (*maxtensor) {
            return cmd_maxtensor(g, file, file_b);
        }
        if (*rep) {
            return run_timed([&] { return suites::full_report(opts); });
        }
        if (*ball) {
            return cmd_ball_samples(g, family, size, count, out);
        }
    } catch (const ConvergenceError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
