// Copyright 2026 The ccsurf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ccsurf/stabilizers.h"

#include "ccsurf/error.h"
#include "gtest/gtest.h"

using namespace ccsurf;

namespace {

bool all_commute(const StabilizerCode& code) {
    for (const auto& a : code.generators()) {
        for (const auto& b : code.generators()) {
            if (symplectic_product(a, b)) {
                return false;
            }
        }
    }
    return true;
}

// Brute-force rank: size of the span of the generator list, by enumerating
// all subset products with a hash set. Fine for <= 20 generators.
std::size_t span_log2(const StabilizerCode& code) {
    std::vector<BitVec> span{BitVec(2 * code.num_qubits())};
    for (const auto& g : code.generators()) {
        const auto v = g.to_symplectic();
        if (std::find(span.begin(), span.end(), v) != span.end()) {
            continue;
        }
        const std::size_t size = span.size();
        for (std::size_t i = 0; i < size; ++i) {
            span.push_back(span[i] ^ v);
        }
    }
    std::size_t k = 0;
    while ((std::size_t{1} << k) < span.size()) {
        ++k;
    }
    return k;
}

}  // namespace

TEST(ColorCode, hex33_generators) {
    const auto g = build_hexagonal_torus(3, 3);
    auto code = color_code(g);
    EXPECT_EQ(code.num_generators(), 18u);
    for (const auto& gen : code.generators()) {
        EXPECT_EQ(gen.weight(), 6u);
    }
    EXPECT_TRUE(all_commute(code));
    EXPECT_EQ(code.origins()[0].type, 'X');
    EXPECT_EQ(code.origins()[9].type, 'Z');
    EXPECT_EQ(code.origins()[9].element, 0);
}

TEST(ColorCode, hex33_params_match_brute_force_rank) {
    auto code = color_code(build_hexagonal_torus(3, 3));
    EXPECT_EQ(span_log2(code), code.rank());
    auto params = code_params(code);
    EXPECT_EQ(params.n, 18u);
    EXPECT_EQ(params.k, 4u);
    ASSERT_TRUE(params.d.has_value());
    EXPECT_EQ(*params.d, 4u);
}

TEST(SurfaceCode, hex33_red_contraction) {
    auto sg = contract(build_hexagonal_torus(3, 3), Color::Red);
    auto code = surface_code(sg);
    EXPECT_EQ(code.num_qubits(), 9u);
    EXPECT_EQ(code.num_generators(), 9u);
    EXPECT_EQ(code.origins()[2].cell, GeneratorOrigin::Cell::Vertex);
    EXPECT_EQ(code.origins()[3].cell, GeneratorOrigin::Cell::Face);
    EXPECT_TRUE(all_commute(code));
    EXPECT_EQ(span_log2(code), code.rank());
    auto params = code_params(code);
    EXPECT_EQ(params.k, 2u);
    ASSERT_TRUE(params.d.has_value());
}

TEST(SurfaceCode, generator_weights_follow_parent_faces) {
    const auto g = build_square_octagon_torus(4);
    for (Color c : kAllColors) {
        auto sg = contract(g, c);
        auto code = surface_code(sg);
        EXPECT_TRUE(all_commute(code));
        for (std::size_t v = 0; v < sg.num_vertices; ++v) {
            const auto& parent = g.face(static_cast<std::size_t>(sg.vertex_parent_face[v]));
            // Loops would cancel; these lattices have none.
            EXPECT_EQ(code.generator(v).weight(), parent.boundary.size());
        }
    }
}

TEST(StabilizerCode, k_color_equals_sum_of_two_copies) {
    for (const auto& g : {build_hexagonal_torus(3, 3), build_hexagonal_torus(6, 3), build_square_octagon_torus(2),
                          build_square_octagon_torus(4)}) {
        const auto kc = code_params(color_code(g)).k;
        for (Color c : kAllColors) {
            auto sg = contract(g, c);
            const auto k1 = code_params(surface_code(sg)).k;
            EXPECT_EQ(kc, 2 * k1);
            EXPECT_EQ(code_params(surface_pair_code(sg)).k, kc);
        }
    }
}

TEST(StabilizerCode, color_classes_have_equal_products) {
    const auto g = build_hexagonal_torus(6, 6);
    auto code = color_code(g);
    std::array<PauliOp, 3> prod{PauliOp(code.space()), PauliOp(code.space()), PauliOp(code.space())};
    for (std::size_t f = 0; f < g.num_faces(); ++f) {
        prod[static_cast<std::size_t>(index(g.face(f).color))] *= code.generator(f);
    }
    EXPECT_EQ(prod[0], prod[1]);
    EXPECT_EQ(prod[1], prod[2]);
}

TEST(StabilizerCode, distance_policy_for_large_codes) {
    auto code = color_code(build_hexagonal_torus(6, 6));
    auto params = code_params(code);
    EXPECT_EQ(params.n, 72u);
    EXPECT_FALSE(params.d.has_value());
}

TEST(StabilizerCode, logical_basis_has_2k_elements) {
    auto code = color_code(build_hexagonal_torus(3, 3));
    auto logicals = logical_basis(code);
    EXPECT_EQ(logicals.size(), 8u);
    for (const auto& l : logicals) {
        EXPECT_TRUE(code.commutes_with_all(l));
        EXPECT_FALSE(code.contains(l));
        EXPECT_NE(logical_class(logicals, l), 0u);
    }
    EXPECT_EQ(logical_class(logicals, code.generator(3)), 0u);
}
