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

#include "ccsurf/contraction.h"

#include <map>
#include <set>

#include "ccsurf/error.h"
#include "gtest/gtest.h"

using namespace ccsurf;

namespace {

std::vector<Colex> test_lattices() {
    return {build_hexagonal_torus(3, 3), build_hexagonal_torus(6, 6), build_hexagonal_torus(6, 3),
            build_square_octagon_torus(2), build_square_octagon_torus(4)};
}

}  // namespace

TEST(Contract, hex33_red_counts) {
    auto sg = contract(build_hexagonal_torus(3, 3), Color::Red);
    EXPECT_EQ(sg.num_vertices, 3u);
    EXPECT_EQ(sg.num_edges(), 9u);
    EXPECT_EQ(sg.num_faces(), 6u);
    EXPECT_EQ(sg.euler_characteristic(), 0);
}

TEST(Contract, counting_identities_all_lattices_and_colors) {
    for (const auto& g : test_lattices()) {
        for (Color c : kAllColors) {
            const auto roles = ColorRoles::for_contraction(c);
            auto sg = contract(g, c);
            EXPECT_EQ(sg.num_vertices, g.count_faces(c));
            EXPECT_EQ(2 * sg.num_edges(), g.num_vertices());
            EXPECT_EQ(sg.num_faces(), g.count_faces(roles.primed) + g.count_faces(roles.double_primed));
            EXPECT_EQ(sg.euler_characteristic(), g.euler_characteristic());
            auto rep = surface_dual_check(sg);
            EXPECT_TRUE(rep.all_passed()) << g.info().family << " " << to_char(c) << "\n" << rep.to_text();
        }
    }
}

TEST(Contract, square_color_of_sqoct_gives_square_lattice) {
    auto sg = contract(build_square_octagon_torus(2), Color::Red);
    EXPECT_EQ(sg.num_vertices, 4u);
    for (const auto& f : sg.faces) {
        EXPECT_EQ(f.edges.size(), 4u);
    }
    for (const auto& rot : sg.rotation) {
        EXPECT_EQ(rot.size(), 4u);
    }
}

TEST(Contract, keeps_parallel_edges) {
    auto sg = contract(build_hexagonal_torus(3, 3), Color::Red);
    std::map<std::pair<int, int>, int> multiplicity;
    for (const auto& e : sg.edges) {
        ++multiplicity[{std::min(e.a, e.b), std::max(e.a, e.b)}];
    }
    int max_mult = 0;
    for (auto& [k, m] : multiplicity) {
        max_mult = std::max(max_mult, m);
    }
    EXPECT_GE(max_mult, 2);
    EXPECT_EQ(sg.num_edges(), 9u);
}

TEST(Contract, expansion_recovers_parent_c_edges) {
    for (const auto& g : test_lattices()) {
        for (Color c : kAllColors) {
            auto sg = contract(g, c);
            std::set<int> expanded(sg.edge_parent_edge.begin(), sg.edge_parent_edge.end());
            auto expected = g.edges_of_color(c);
            EXPECT_EQ(expanded, std::set<int>(expected.begin(), expected.end()));
            for (std::size_t v = 0; v < g.num_vertices(); ++v) {
                const int pe = sg.edge_parent_edge[static_cast<std::size_t>(sg.tau_vertex[v])];
                EXPECT_EQ(pe, g.edge_at(static_cast<int>(v), c));
            }
        }
    }
}

TEST(Contract, face_boundaries_are_parent_c_edges) {
    const auto g = build_hexagonal_torus(6, 6);
    auto sg = contract(g, Color::Green);
    for (std::size_t f = 0; f < sg.num_faces(); ++f) {
        const auto& parent = g.face(static_cast<std::size_t>(sg.face_parent_face[f]));
        EXPECT_EQ(sg.faces[f].edges.size(), parent.half_length());
        for (int e : sg.faces[f].edges) {
            const int pe = sg.edge_parent_edge[static_cast<std::size_t>(e)];
            const auto& ped = g.edge(static_cast<std::size_t>(pe));
            EXPECT_EQ(ped.color, Color::Green);
            EXPECT_NE(std::find(parent.boundary.begin(), parent.boundary.end(), ped.u), parent.boundary.end());
        }
    }
}

TEST(SurfaceDualCheck, deleted_boundary_edge_fails_closure) {
    auto sg = contract(build_hexagonal_torus(3, 3), Color::Red);
    sg.faces[0].edges.erase(sg.faces[0].edges.begin());
    sg.faces[0].vertices.erase(sg.faces[0].vertices.begin());
    auto rep = surface_dual_check(sg);
    EXPECT_FALSE(rep.find("face-boundary-closure")->passed);
}

TEST(SurfaceDualCheck, unmapped_vertex_fails_totality) {
    auto sg = contract(build_hexagonal_torus(3, 3), Color::Red);
    sg.tau_vertex[4] = -1;
    auto rep = surface_dual_check(sg);
    EXPECT_FALSE(rep.find("correspondence-total")->passed);
    EXPECT_NE(rep.find("correspondence-total")->detail.find("tau_vertex[4]"), std::string::npos);
}

TEST(Contract, rejects_invalid_colex) {
    auto g = build_hexagonal_torus(3, 3);
    auto edges = g.edges();
    edges[0].color = next(edges[0].color);
    Colex bad(g.genus(), g.num_vertices(), edges, g.faces(), g.rotation(), g.info());
    EXPECT_THROW(contract(bad, Color::Red), ValidationError);
}
