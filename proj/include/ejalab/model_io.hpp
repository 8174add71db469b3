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

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ejalab/composite.hpp"
#include "ejalab/core.hpp"
#include "ejalab/jordan.hpp"
#include "ejalab/testspace.hpp"

// Model files are JSON documents; see docs/model-format.md.

namespace ejalab::model_io {

using nlohmann::json;

struct ModelDocument {
    std::optional<testspace::FiniteModel> model;
    std::optional<testspace::GroupAction> group;
    std::optional<jordan::JordanAlgebra> algebra;
    std::optional<composite::JointState> joint;
    std::optional<testspace::FiniteModel> joint_left;
    std::optional<testspace::FiniteModel> joint_right;
};

namespace detail {

inline ValidationError at(const std::string &path, const std::string &msg) {
    return ValidationError(path + ": " + msg);
}

inline const json &field(const json &j, const std::string &key, const std::string &path) {
    if (!j.is_object() || !j.contains(key)) {
        throw at(path, "missing field '" + key + "'");
    }
    return j.at(key);
}

inline std::string as_string(const json &j, const std::string &path) {
    if (!j.is_string()) {
        throw at(path, "expected a string");
    }
    return j.get<std::string>();
}

inline int as_int(const json &j, const std::string &path) {
    if (!j.is_number_integer()) {
        throw at(path, "expected an integer");
    }
    return j.get<int>();
}

inline double as_real(const json &j, const std::string &path) {
    if (!j.is_number()) {
        throw at(path, "expected a number");
    }
    return j.get<double>();
}

inline const json &as_array(const json &j, const std::string &path) {
    if (!j.is_array()) {
        throw at(path, "expected an array");
    }
    return j;
}

/// An outcome named or indexed.
inline int outcome_ref(const testspace::TestSpace &s, const json &j, const std::string &path) {
    if (j.is_string()) {
        try {
            return s.index_of(j.get<std::string>());
        } catch (const ValidationError &e) {
            throw at(path, e.what());
        }
    }
    int k = as_int(j, path);
    if (k < 0 || k >= s.size()) {
        throw at(path, "outcome index " + std::to_string(k) + " out of range");
    }
    return k;
}

inline testspace::TestSpace parse_space(const json &j, const std::string &path) {
    const json &tests = as_array(field(j, "tests", path), path + ".tests");
    testspace::TestSpace s;
    if (j.contains("outcomes")) {
        const json &outs = as_array(j.at("outcomes"), path + ".outcomes");
        for (size_t k = 0; k < outs.size(); k++) {
            s.outcomes.push_back(as_string(outs[k], path + ".outcomes[" + std::to_string(k) + "]"));
        }
        for (size_t t = 0; t < tests.size(); t++) {
            std::string tp = path + ".tests[" + std::to_string(t) + "]";
            std::vector<int> idx;
            for (size_t k = 0; k < as_array(tests[t], tp).size(); k++) {
                idx.push_back(outcome_ref(s, tests[t][k], tp + "[" + std::to_string(k) + "]"));
            }
            s.tests.push_back(idx);
        }
    } else {
        std::vector<std::vector<std::string>> names;
        for (size_t t = 0; t < tests.size(); t++) {
            std::string tp = path + ".tests[" + std::to_string(t) + "]";
            std::vector<std::string> test;
            for (size_t k = 0; k < as_array(tests[t], tp).size(); k++) {
                test.push_back(as_string(tests[t][k], tp + "[" + std::to_string(k) + "]"));
            }
            names.push_back(test);
        }
        s = testspace::TestSpace::from_names(names);
    }
    auto diag = testspace::diagnose(s);
    if (!diag.valid) {
        std::string msg = "invalid test space";
        for (const auto &v : diag.violations) {
            msg += "; " + v;
        }
        throw at(path, msg);
    }
    return s;
}

inline Vec parse_vec(const json &j, int n, const std::string &path) {
    as_array(j, path);
    if ((int)j.size() != n) {
        throw at(path, "expected " + std::to_string(n) + " entries, got " + std::to_string(j.size()));
    }
    Vec v(n);
    for (int k = 0; k < n; k++) {
        v[k] = as_real(j[k], path + "[" + std::to_string(k) + "]");
    }
    return v;
}

inline testspace::FiniteModel parse_model(const json &j, const std::string &path) {
    auto space = parse_space(j, path);
    if (!j.contains("states") || (j.at("states").is_string() && j.at("states").get<std::string>() == "full")) {
        return testspace::FiniteModel::full(space);
    }
    const json &st = as_array(j.at("states"), path + ".states");
    std::vector<Vec> states;
    for (size_t k = 0; k < st.size(); k++) {
        states.push_back(parse_vec(st[k], space.size(), path + ".states[" + std::to_string(k) + "]"));
    }
    try {
        return testspace::FiniteModel::with_states(space, states);
    } catch (const ValidationError &e) {
        throw at(path + ".states", e.what());
    }
}

inline testspace::GroupAction parse_group(const testspace::TestSpace &s, const json &j, const std::string &path) {
    std::vector<testspace::Permutation> gens;
    for (size_t g = 0; g < as_array(j, path).size(); g++) {
        std::string gp = path + "[" + std::to_string(g) + "]";
        testspace::Permutation p;
        for (size_t k = 0; k < as_array(j[g], gp).size(); k++) {
            p.push_back(outcome_ref(s, j[g][k], gp + "[" + std::to_string(k) + "]"));
        }
        gens.push_back(p);
    }
    try {
        return testspace::GroupAction::generate(s.size(), gens);
    } catch (const ValidationError &e) {
        throw at(path, e.what());
    }
}

inline jordan::JordanAlgebra parse_algebra(const json &j, const std::string &path) {
    if (j.contains("summands")) {
        std::vector<jordan::JordanAlgebra> parts;
        const json &s = as_array(j.at("summands"), path + ".summands");
        for (size_t k = 0; k < s.size(); k++) {
            parts.push_back(parse_algebra(s[k], path + ".summands[" + std::to_string(k) + "]"));
        }
        return jordan::JordanAlgebra::direct_sum(parts);
    }
    std::string fam = as_string(field(j, "family", path), path + ".family");
    int size = as_int(field(j, "size", path), path + ".size");
    try {
        return jordan::JordanAlgebra::make(jordan::parse_family(fam), size);
    } catch (const Error &e) {
        throw at(path, e.what());
    }
}

}  // namespace detail

inline ModelDocument parse_document(const json &j) {
    if (!j.is_object()) {
        throw ValidationError("document: expected a JSON object");
    }
    ModelDocument doc;
    if (j.contains("tests")) {
        doc.model = detail::parse_model(j, "document");
        if (j.contains("group")) {
            doc.group = detail::parse_group(doc.model->space(), j.at("group"), "document.group");
        }
    }
    if (j.contains("jordan")) {
        doc.algebra = detail::parse_algebra(j.at("jordan"), "document.jordan");
    }
    if (j.contains("joint")) {
        const json &js = j.at("joint");
        auto left = detail::parse_model(detail::field(js, "left", "document.joint"), "document.joint.left");
        auto right = detail::parse_model(detail::field(js, "right", "document.joint"), "document.joint.right");
        const json &tab = detail::as_array(detail::field(js, "table", "document.joint"), "document.joint.table");
        if ((int)tab.size() != left.num_outcomes()) {
            throw ValidationError("document.joint.table: expected " + std::to_string(left.num_outcomes()) + " rows");
        }
        Mat w(left.num_outcomes(), right.num_outcomes());
        for (int r = 0; r < left.num_outcomes(); r++) {
            w.row(r) = detail::parse_vec(tab[r], right.num_outcomes(),
                                         "document.joint.table[" + std::to_string(r) + "]")
                           .transpose();
        }
        doc.joint = composite::JointState{left.space(), right.space(), w};
        doc.joint_left = left;
        doc.joint_right = right;
    }
    if (!doc.model && !doc.algebra && !doc.joint) {
        throw ValidationError("document: expected at least one of 'tests', 'jordan' or 'joint'");
    }
    return doc;
}

inline ModelDocument parse_string(const std::string &text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error &e) {
        throw ValidationError(std::string("malformed JSON: ") + e.what());
    }
    return parse_document(j);
}

inline ModelDocument load(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ValidationError("cannot open '" + path + "'");
    }
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return parse_string(ss.str());
    } catch (const ValidationError &e) {
        throw ValidationError(path + ": " + e.what());
    }
}

}  // namespace ejalab::model_io
