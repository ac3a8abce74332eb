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

#include "ccsurf/decode.h"

#include <algorithm>
#include <map>
#include <random>

#include "ccsurf/error.h"
#include "gtest/gtest.h"

using namespace ccsurf;

namespace {

ColorDecoder make_decoder(const Colex& g, Color c = Color::Red) {
    return ColorDecoder(make_artifact(g, MapConventions::defaults(g, c)));
}

PauliOp random_error(const QubitSpace& space, std::mt19937_64& rng) {
    PauliOp e(space);
    for (std::size_t q = 0; q < space.qubits; ++q) {
        e.x().set(q, rng() & 1);
        e.z().set(q, rng() & 1);
    }
    return e;
}

}  // namespace

TEST(ExtractSyndrome, basic_cases) {
    const auto g = build_hexagonal_torus(3, 3);
    const auto code = color_code(g);
    EXPECT_TRUE(extract_syndrome(code, PauliOp(color_space(g))).bits.none());
    EXPECT_TRUE(extract_syndrome(code, code.generator(4)).bits.none());

    const std::size_t v = 7;
    const auto s = extract_syndrome(code, PauliOp::single(color_space(g), v, 'Z'));
    std::vector<std::size_t> expected;
    for (Color c : kAllColors) {
        expected.push_back(static_cast<std::size_t>(g.face_at(static_cast<int>(v), c)));
    }
    std::sort(expected.begin(), expected.end());
    EXPECT_EQ(s.bits.ones(), expected);

    const PauliOp foreign(QubitSpace{"other", 18});
    EXPECT_THROW(extract_syndrome(code, foreign), SpaceMismatchError);
}

TEST(PushSyndrome, zero_and_splitter) {
    const auto g = build_hexagonal_torus(3, 3);
    const auto dec = make_decoder(g);
    const auto& cm = dec.code_map();
    const auto zero = push_syndrome(cm, dec.basis_change(), extract_syndrome(dec.color_code(), PauliOp(color_space(g))));
    EXPECT_TRUE(zero[0].bits.none());
    EXPECT_TRUE(zero[1].bits.none());

    const auto& lab = cm.labels.front();
    const auto pushed = push_syndrome(
        cm, dec.basis_change(), extract_syndrome(dec.color_code(), PauliOp::single(color_space(g), lab.v[0], 'X')));
    const auto direct =
        extract_syndrome(dec.surface_code(), PauliOp::single(surface_space(cm.surface), lab.e[0], 'X'));
    EXPECT_EQ(pushed[0], direct);
    EXPECT_EQ(pushed[0].bits.popcount(), 2u);
    EXPECT_TRUE(pushed[1].bits.none());
}

TEST(PushSyndrome, commuting_diagram_on_random_errors) {
    for (const auto& g : {build_hexagonal_torus(3, 3), build_square_octagon_torus(4)}) {
        const auto dec = make_decoder(g, Color::Green);
        const auto& cm = dec.code_map();
        std::mt19937_64 rng(17);
        for (int t = 0; t < 1000; ++t) {
            const auto e = random_error(color_space(g), rng);
            const auto pushed = push_syndrome(cm, dec.basis_change(), extract_syndrome(dec.color_code(), e));
            const auto img = cm.map.apply(e);
            for (int copy : {0, 1}) {
                PauliOp part(surface_space(cm.surface));
                const std::size_t off = copy == 0 ? 0 : cm.surface.num_edges();
                for (std::size_t q = 0; q < cm.surface.num_edges(); ++q) {
                    part.x().set(q, img.x().get(off + q));
                    part.z().set(q, img.z().get(off + q));
                }
                ASSERT_EQ(pushed[static_cast<std::size_t>(copy)], extract_syndrome(dec.surface_code(), part));
            }
        }
    }
}

TEST(PushSyndrome, rejects_foreign_inputs) {
    const auto g = build_hexagonal_torus(3, 3);
    const auto dec = make_decoder(g);
    const Syndrome bad{color_space(g), BitVec(5)};
    EXPECT_THROW(push_syndrome(dec.code_map(), dec.basis_change(), bad), SpaceMismatchError);
    const auto ok = extract_syndrome(dec.color_code(), PauliOp(color_space(g)));
    EXPECT_THROW(push_syndrome(dec.code_map(), Gf2Matrix(3, 18), ok), SpaceMismatchError);
}

TEST(MwpmDecode, zero_and_adjacent_defects) {
    const auto sg = contract(build_hexagonal_torus(6, 6), Color::Red);
    const auto code = surface_code(sg);
    EXPECT_TRUE(mwpm_decode(sg, extract_syndrome(code, PauliOp(surface_space(sg)))).is_identity());

    const auto e = PauliOp::single(surface_space(sg), 5, 'Z');
    const auto syn = extract_syndrome(code, e);
    ASSERT_EQ(syn.bits.popcount(), 2u);
    const auto corr = mwpm_decode(sg, syn);
    EXPECT_EQ(corr.weight(), 1u);
    EXPECT_TRUE(corr.x().none());
    const auto& ce = sg.edges[corr.z().first_set()];
    const auto& ee = sg.edges[5];
    EXPECT_TRUE((ce.a == ee.a && ce.b == ee.b) || (ce.a == ee.b && ce.b == ee.a));
}

TEST(MwpmDecode, exhaustive_single_edge_errors) {
    for (const auto& g : {build_hexagonal_torus(3, 3), build_hexagonal_torus(6, 6), build_square_octagon_torus(4)}) {
        for (Color c : kAllColors) {
            const auto sg = contract(g, c);
            const auto code = surface_code(sg);
            const SurfaceMatcher matcher(sg);
            std::size_t ok = 0;
            std::size_t total = 0;
            for (std::size_t e = 0; e < sg.num_edges(); ++e) {
                for (char t : {'X', 'Y', 'Z'}) {
                    const auto err = PauliOp::single(surface_space(sg), e, t);
                    const auto syn = extract_syndrome(code, err);
                    const auto corr = matcher.decode(syn);
                    ASSERT_EQ(extract_syndrome(code, corr), syn);
                    ok += code.contains(err * corr);
                    ++total;
                }
            }
            // Distance-2 copies (hex 3x3) cannot tell parallel edges apart.
            if (code.num_qubits() > kMaxDistanceQubits || *code_params(code).d > 2) {
                EXPECT_EQ(ok, total);
            }
        }
    }
}

TEST(MwpmDecode, odd_defects_are_a_fault) {
    const auto sg = contract(build_hexagonal_torus(3, 3), Color::Red);
    Syndrome syn{surface_space(sg), BitVec(sg.num_vertices + sg.num_faces())};
    syn.bits.set(0);
    EXPECT_THROW(mwpm_decode(sg, syn), DecodeError);
}

TEST(MwpmDecode, greedy_also_reproduces_syndromes) {
    const auto sg = contract(build_square_octagon_torus(4), Color::Blue);
    const auto code = surface_code(sg);
    const SurfaceMatcher matcher(sg);
    std::mt19937_64 rng(3);
    for (int t = 0; t < 200; ++t) {
        PauliOp e(surface_space(sg));
        for (std::size_t q = 0; q < sg.num_edges(); ++q) {
            if (rng() % 8 == 0) {
                e.x().set(q, rng() & 1);
                e.z().set(q, true);
            }
        }
        const auto syn = extract_syndrome(code, e);
        EXPECT_EQ(extract_syndrome(code, matcher.decode(syn, Matcher::Greedy)), syn);
        EXPECT_EQ(extract_syndrome(code, matcher.decode(syn, Matcher::Blossom)), syn);
    }
}

TEST(DecodeColor, single_qubit_errors_on_hex66) {
    const auto g = build_hexagonal_torus(6, 6);
    for (Color c : kAllColors) {
        const auto dec = make_decoder(g, c);
        for (std::size_t v = 0; v < g.num_vertices(); ++v) {
            for (char t : {'X', 'Y', 'Z'}) {
                const auto out = dec.decode_error(PauliOp::single(color_space(g), v, t));
                EXPECT_TRUE(out.syndrome_matches);
                EXPECT_TRUE(*out.success) << "vertex " << v << " " << t;
                EXPECT_EQ(*out.logical_class, 0u);
            }
        }
    }
}

TEST(DecodeColor, hex33_lift_is_total_even_where_copies_are_too_small) {
    const auto g = build_hexagonal_torus(3, 3);
    const auto dec = make_decoder(g);
    std::size_t matches = 0;
    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
        for (char t : {'X', 'Y', 'Z'}) {
            const auto out = dec.decode_error(PauliOp::single(color_space(g), v, t));
            matches += out.syndrome_matches;
            EXPECT_EQ(*out.success, *out.logical_class == 0);
        }
    }
    EXPECT_EQ(matches, 3 * g.num_vertices());
}

TEST(DecodeColor, hex33_no_per_copy_decoder_fixes_every_single_qubit_error) {
    // Two weight-1 errors whose parts on one copy share a syndrome but differ
    // by a non-stabilizer defeat any decoder that looks at one copy at a time.
    const auto g = build_hexagonal_torus(3, 3);
    const auto dec = make_decoder(g);
    const auto& cm = dec.code_map();
    const std::size_t e = cm.surface.num_edges();
    bool conflict = false;
    for (int copy : {0, 1}) {
        std::map<std::string, PauliOp> seen;
        for (std::size_t v = 0; v < g.num_vertices(); ++v) {
            for (char t : {'X', 'Y', 'Z'}) {
                const auto img = cm.map.apply(PauliOp::single(color_space(g), v, t));
                PauliOp part(surface_space(cm.surface));
                for (std::size_t q = 0; q < e; ++q) {
                    part.x().set(q, img.x().get(copy * e + q));
                    part.z().set(q, img.z().get(copy * e + q));
                }
                const auto key = extract_syndrome(dec.surface_code(), part).bits.str();
                const auto [it, fresh] = seen.emplace(key, part);
                conflict = conflict || (!fresh && !dec.surface_code().contains(it->second * part));
            }
        }
    }
    EXPECT_TRUE(conflict);
}

TEST(DecodeColor, stabilizer_errors_succeed_and_logicals_fail) {
    const auto g = build_hexagonal_torus(3, 3);
    const auto dec = make_decoder(g);
    const auto& code = dec.color_code();
    const auto stab = code.generator(0) * code.generator(11) * code.generator(5);
    const auto out = dec.decode_error(stab);
    EXPECT_TRUE(out.correction.is_identity());
    EXPECT_TRUE(*out.success);

    for (const auto& l : dec.logicals()) {
        const auto a = dec.decode_error(l);
        const auto b = dec.decode_error(l * code.generator(3));
        EXPECT_FALSE(*a.success);
        EXPECT_NE(*a.logical_class, 0u);
        EXPECT_EQ(*a.logical_class, *b.logical_class);
    }
}

TEST(DecodeColor, syndrome_round_trip_on_random_errors) {
    const auto g = build_square_octagon_torus(4);
    const auto dec = make_decoder(g, Color::Blue);
    std::mt19937_64 rng(8);
    for (int t = 0; t < 300; ++t) {
        PauliOp e(color_space(g));
        for (std::size_t q = 0; q < g.num_vertices(); ++q) {
            if (rng() % 10 == 0) {
                e.x().set(q, rng() & 1);
                e.z().set(q, rng() & 1);
            }
        }
        const auto syn = extract_syndrome(dec.color_code(), e);
        const auto out = decode_color(dec, syn);
        EXPECT_TRUE(out.syndrome_matches);
        EXPECT_EQ(extract_syndrome(dec.color_code(), out.correction), syn);
        EXPECT_FALSE(out.success.has_value());
    }
}
