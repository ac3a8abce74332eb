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

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ccsurf/codemap.h"
#include "ccsurf/decode.h"
#include "ccsurf/error.h"
#include "ccsurf/simulate.h"

using namespace ccsurf;

namespace {

struct Lattice {
    std::string name;
    Colex g;
};

std::vector<Lattice> test_lattices() {
    return {{"hex(3,3)", build_hexagonal_torus(3, 3)},
            {"hex(6,6)", build_hexagonal_torus(6, 6)},
            {"hex(6,3)", build_hexagonal_torus(6, 3)},
            {"sqoct(2)", build_square_octagon_torus(2)},
            {"sqoct(4)", build_square_octagon_torus(4)}};
}

constexpr Color kColors[] = {Color::Red, Color::Green, Color::Blue};

std::string where(const Lattice& l, Color c) { return l.name + "/" + to_string(c); }

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        if (pass) {
            detail = why;
        }
        pass = false;
    }
};

// The check name must exist and pass.
void require(Outcome& o, const ValidationReport& rep, const std::string& check, const std::string& ctx) {
    const auto* r = rep.find(check);
    if (r == nullptr) {
        o.fail(ctx + ": no check " + check);
    } else if (!r->passed) {
        o.fail(ctx + ": " + check + " " + r->detail);
    }
}

Outcome counting(const std::vector<Lattice>& ls) {
    Outcome o;
    for (const auto& l : ls) {
        for (Color c : kColors) {
            const auto sg = contract(l.g, c);
            const std::size_t fc = l.g.count_faces(c);
            const std::size_t fo = l.g.count_faces(next(c)) + l.g.count_faces(next(next(c)));
            if (sg.num_vertices != fc || 2 * sg.num_edges() != l.g.num_vertices() || sg.num_faces() != fo) {
                o.fail(where(l, c));
            }
        }
    }
    o.detail = o.pass ? "15 contractions" : o.detail;
    return o;
}

Outcome hopper_rank(const std::vector<Lattice>& ls) {
    Outcome o;
    for (const auto& l : ls) {
        for (Color c : kColors) {
            require(o, verify_hopping_independence(build_map(l.g, MapConventions::defaults(l.g, c))),
                    "elementary-hopper-rank", where(l, c));
        }
    }
    if (o.pass) {
        o.detail = "every c''-face on 15 contractions";
    }
    return o;
}

Outcome invertibility(const std::vector<Lattice>& ls) {
    Outcome o;
    int maps = 0;
    for (const auto& l : ls) {
        for (Color c : kColors) {
            for (std::uint64_t seed = 1; seed <= 5; ++seed) {
                const auto cm = build_map(l.g, MapConventions::random(l.g, c, seed));
                const auto r = rank(cm.map.matrix());
                if (r != 2 * l.g.num_vertices()) {
                    o.fail(where(l, c) + " seed " + std::to_string(seed) + ": rank " + std::to_string(r));
                }
                ++maps;
            }
        }
    }
    if (o.pass) {
        o.detail = std::to_string(maps) + " maps at full rank";
    }
    return o;
}

Outcome commutation(const Lattice& hex33) {
    Outcome o;
    std::size_t pairs = 0;
    for (Color c : kColors) {
        const auto cm = build_map(hex33.g, MapConventions::defaults(hex33.g, c));
        if (!is_symplectic(cm.map)) {
            o.fail(where(hex33, c) + ": M L M^T != L");
        }
        const auto space = cm.map.domain();
        const std::size_t n = space.qubits;
        std::vector<PauliOp> src;
        std::vector<PauliOp> img;
        for (std::size_t q = 0; q < n; ++q) {
            for (char t : {'X', 'Z'}) {
                src.push_back(PauliOp::single(space, q, t));
                img.push_back(cm.map.apply(src.back()));
            }
        }
        for (std::size_t i = 0; i < src.size(); ++i) {
            for (std::size_t j = 0; j < src.size(); ++j) {
                ++pairs;
                if (symplectic_product(src[i], src[j]) != symplectic_product(img[i], img[j])) {
                    o.fail(where(hex33, c) + ": pair " + std::to_string(i) + "," + std::to_string(j));
                }
            }
        }
    }
    if (o.pass) {
        o.detail = std::to_string(pairs) + " pairs";
    }
    return o;
}

Outcome stabilizer_images(const std::vector<Lattice>& ls) {
    Outcome o;
    for (const auto& l : ls) {
        for (Color c : kColors) {
            const auto cm = build_map(l.g, MapConventions::defaults(l.g, c));
            const auto rep = verify_stabilizer_images(cm);
            for (const char* name : {"generator-membership", "plaquette-z-image"}) {
                require(o, rep, name, where(l, c));
            }
            require(o, verify_equivalence(cm), "stabilizer-group-equality", where(l, c));
        }
    }
    if (o.pass) {
        o.detail = "15 contractions";
    }
    return o;
}

Outcome parameters(const std::vector<Lattice>& ls) {
    Outcome o;
    std::ostringstream seen;
    for (const auto& l : ls) {
        const std::size_t k = code_params(color_code(l.g)).k;
        for (Color c : kColors) {
            const std::size_t ks = code_params(surface_code(contract(l.g, c))).k;
            if (k != 2 * ks) {
                o.fail(where(l, c) + ": " + std::to_string(k) + " != " + std::to_string(ks) + "+" + std::to_string(ks));
            }
            if (c == Color::Red) {
                seen << (seen.tellp() > 0 ? " " : "") << k << "=" << ks << "+" << ks;
            }
        }
    }
    if (o.pass) {
        o.detail = seen.str();
    }
    return o;
}

Outcome commuting_diagram(const Lattice& hex66) {
    Outcome o;
    const ColorDecoder dec(make_artifact(hex66.g, MapConventions::defaults(hex66.g, Color::Red)));
    const auto& cm = dec.code_map();
    const std::size_t e = cm.surface.num_edges();
    const NoiseModel noise{0.5};
    constexpr std::uint64_t kErrors = 10000;
    for (std::uint64_t t = 0; t < kErrors && o.pass; ++t) {
        const auto err = sample_error(dec.color_code().space(), noise, 7, t);
        const auto pushed = push_syndrome(cm, dec.basis_change(), extract_syndrome(dec.color_code(), err));
        const auto img = cm.map.apply(err);
        for (std::size_t copy = 0; copy < 2; ++copy) {
            PauliOp part(surface_space(cm.surface));
            for (std::size_t q = 0; q < e; ++q) {
                part.x().set(q, img.x().get(copy * e + q));
                part.z().set(q, img.z().get(copy * e + q));
            }
            if (!(pushed[copy] == extract_syndrome(dec.surface_code(), part))) {
                o.fail("trial " + std::to_string(t) + " copy " + std::to_string(copy + 1));
            }
        }
    }
    if (o.pass) {
        o.detail = "10000 errors bit-exact";
    }
    return o;
}

Outcome weight_one(const Lattice& hex33) {
    Outcome o;
    const ColorDecoder dec(make_artifact(hex33.g, MapConventions::defaults(hex33.g, Color::Red)));
    std::size_t ok = 0;
    std::size_t lifted = 0;
    std::size_t total = 0;
    for (std::size_t v = 0; v < hex33.g.num_vertices(); ++v) {
        for (char t : {'X', 'Y', 'Z'}) {
            ++total;
            try {
                const auto out = dec.decode_error(PauliOp::single(dec.color_code().space(), v, t));
                ++lifted;
                ok += out.success.value_or(false);
            } catch (const Error&) {
            }
        }
    }
    o.pass = ok == total && lifted == total;
    o.detail = std::to_string(ok) + "/" + std::to_string(total) + " corrected, " + std::to_string(lifted) + "/" +
               std::to_string(total) + " lifted";
    return o;
}

Outcome monte_carlo(const Lattice& hex33, const Lattice& hex66) {
    Outcome o;
    constexpr std::uint64_t kTrials = 100000;
    const ColorDecoder small(make_artifact(hex33.g, MapConventions::defaults(hex33.g, Color::Red)));
    const ColorDecoder large(make_artifact(hex66.g, MapConventions::defaults(hex66.g, Color::Red)));
    const auto rs = run_trials(small, NoiseModel{0.01}, kTrials, 1);
    const auto rl = run_trials(large, NoiseModel{0.01}, kTrials, 1);
    if (!(rl.rate < rs.rate)) {
        o.fail("rate hex(6,6) " + std::to_string(rl.rate) + " >= hex(3,3) " + std::to_string(rs.rate));
    }
    for (const auto* d : {&small, &large}) {
        const auto z = run_trials(*d, NoiseModel{0.0}, kTrials, 1);
        if (z.failures != 0) {
            o.fail("p=0 gave " + std::to_string(z.failures) + " failures");
        }
    }
    const std::vector<double> ps{0.0, 0.01, 0.05};
    if (to_csv(sweep(small, ps, 10000, 42), false) != to_csv(sweep(small, ps, 10000, 42), false)) {
        o.fail("CSV differs between identical seeds");
    }
    if (o.pass) {
        std::ostringstream s;
        s << "hex(3,3) " << rs.rate << " > hex(6,6) " << rl.rate;
        o.detail = s.str();
    }
    return o;
}

Outcome closed_forms(const Lattice& hex33, const Lattice& hex66) {
    Outcome o;
    std::size_t notes = 0;
    for (const auto* l : {&hex33, &hex66}) {
        for (Color c : kColors) {
            const auto cf = verify_closed_forms(build_map(l->g, MapConventions::defaults(l->g, c)));
            if (!cf.report.all_passed()) {
                o.fail(where(*l, c) + ": " + cf.report.failures().front());
            }
            for (const auto& d : cf.discrepancies) {
                std::cerr << "  note " << where(*l, c) << ": " << d << '\n';
            }
            notes += cf.discrepancies.size();
        }
    }
    if (o.pass) {
        o.detail = "membership holds, " + std::to_string(notes) + " exact-form notes";
    }
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Acceptance checks"};
    std::vector<int> expect_fail;
    app.add_option("--expect-fail", expect_fail, "Criteria known to fail; exit 0 only if exactly these fail");
    CLI11_PARSE(app, argc, argv);

    const auto ls = test_lattices();
    const auto& hex33 = ls[0];
    const auto& hex66 = ls[1];
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"counting identities", [&] { return counting(ls); }},
        {"elementary hopper rank 4l-2", [&] { return hopper_rank(ls); }},
        {"map rank 2n over random conventions", [&] { return invertibility(ls); }},
        {"symplectic form and pairwise commutation", [&] { return commutation(hex33); }},
        {"stabilizer images and group equality", [&] { return stabilizer_images(ls); }},
        {"k_color = k1 + k2", [&] { return parameters(ls); }},
        {"syndrome commuting diagram on hex(6,6)", [&] { return commuting_diagram(hex66); }},
        {"all weight-1 errors on hex(3,3) corrected", [&] { return weight_one(hex33); }},
        {"Monte Carlo sanity", [&] { return monte_carlo(hex33, hex66); }},
        {"single-qubit image recursions", [&] { return closed_forms(hex33, hex66); }},
    };

    const std::set<int> expected(expect_fail.begin(), expect_fail.end());
    bool as_expected = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const int id = static_cast<int>(i) + 1;
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("%s %2d %-44s %7.3fs  %s%s\n", o.pass ? "PASS" : "FAIL", id, criteria[i].first.c_str(), secs,
                    o.detail.c_str(), !o.pass && expected.count(id) ? " (expected)" : "");
        as_expected = as_expected && (o.pass != (expected.count(id) > 0));
    }
    return as_expected ? 0 : 1;
}
