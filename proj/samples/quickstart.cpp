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

// A short tour: the diamond bit, a Jordan algebra and its conjugate.

#include <cstdio>

#include "ejalab/ejalab.hpp"

using namespace ejalab;

int main() {
    auto square = testspace::square_bit();
    auto diamond = testspace::sharpen_by_symmetry(square, testspace::square_bit_symmetry());
    std::printf("square bit sharp: %d, sharpened: %d with %zu vertices\n", testspace::is_sharp(square),
                testspace::is_sharp(diamond), diamond.states().size());

    auto spaces = ordered::build_spaces(diamond);
    if (auto f = ordered::effect_cone_gap(spaces)) {
        std::printf("diamond: found a positive functional that is not a sum of effects\n");
    }

    auto j = jordan::JordanAlgebra::make(jordan::Family::complexherm, 2);
    Rng rng(1);
    Vec a = jordan::random_element(j, rng);
    auto dec = jordan::spectral_decompose(j, a);
    std::printf("%s: dim %d, rank %d, %zu distinct eigenvalues\n", j.name().c_str(), j.dim(), j.rank(),
                dec.values.size());

    auto p = conjugate::make_conjugate(j);
    Vec x = jordan::random_primitive(j, rng);
    std::printf("eta(x, xbar) = %.12f (1/n = %.12f)\n", p.correlator(x, p.bar(x)), 1.0 / j.rank());

    auto ball = conjugate::bit_ball_check(j, 100, rng);
    std::printf("pure states lie on a %d-ball of radius %.6f, max deviation %.2e\n", ball.dimension, ball.radius,
                ball.max_deviation);
    return 0;
}
