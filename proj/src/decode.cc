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
#include <deque>
#include <limits>

#include "ccsurf/error.h"

namespace ccsurf {

Syndrome extract_syndrome(const StabilizerCode& code, const PauliOp& e) {
    if (!(e.space() == code.space())) {
        throw SpaceMismatchError("error lives on " + e.space().name + ", code on " + code.space().name);
    }
    Syndrome s{code.space(), BitVec(code.num_generators())};
    for (std::size_t i = 0; i < code.num_generators(); ++i) {
        s.bits.set(i, symplectic_product(code.generator(i), e));
    }
    return s;
}

std::array<Syndrome, 2> push_syndrome(const CodeMap& cm, const Gf2Matrix& basis_change, const Syndrome& color_syn) {
    const auto& sg = cm.surface;
    const std::size_t per_copy = sg.num_vertices + sg.num_faces();
    if (!(color_syn.space == cm.map.domain()) || color_syn.bits.size() != 2 * cm.colex.num_faces()) {
        throw SpaceMismatchError("syndrome does not belong to the map's color code");
    }
    if (basis_change.cols() != color_syn.bits.size() || basis_change.rows() != 2 * per_copy) {
        throw SpaceMismatchError("basis change does not fit the map");
    }
    const auto both = basis_change.mul(color_syn.bits);
    return {Syndrome{surface_space(sg), both.slice(0, per_copy)},
            Syndrome{surface_space(sg), both.slice(per_copy, per_copy)}};
}

void SurfaceMatcher::Graph::solve() {
    const std::size_t n = adjacency.size();
    dist.assign(n, std::vector<int>(n, -1));
    pred.assign(n, std::vector<int>(n, -1));
    for (std::size_t s = 0; s < n; ++s) {
        auto& d = dist[s];
        auto& p = pred[s];
        std::deque<int> queue{static_cast<int>(s)};
        d[s] = 0;
        while (!queue.empty()) {
            const int u = queue.front();
            queue.pop_front();
            for (const auto& [w, e] : adjacency[at(u)]) {
                if (d[at(w)] < 0) {
                    d[at(w)] = d[at(u)] + 1;
                    p[at(w)] = e;
                    queue.push_back(w);
                }
            }
        }
    }
}

void SurfaceMatcher::Graph::path(int s, int t, BitVec& out) const {
    if (dist[at(s)][at(t)] < 0) {
        throw DecodeError("defects in disconnected components");
    }
    while (t != s) {
        const int e = pred[at(s)][at(t)];
        out.flip(at(e));
        int next = -1;
        for (const auto& [w, edge] : adjacency[at(t)]) {
            if (edge == e) {
                next = w;
                break;
            }
        }
        t = next;
    }
}

SurfaceMatcher::SurfaceMatcher(const SurfaceGraph& sg) : space_(surface_space(sg)), num_vertices_(sg.num_vertices) {
    primal_.adjacency.assign(sg.num_vertices, {});
    for (std::size_t e = 0; e < sg.num_edges(); ++e) {
        const auto& ed = sg.edges[e];
        if (ed.a == ed.b) {
            continue;
        }
        primal_.adjacency[at(ed.a)].emplace_back(ed.b, static_cast<int>(e));
        primal_.adjacency[at(ed.b)].emplace_back(ed.a, static_cast<int>(e));
    }
    std::vector<std::vector<int>> sides(sg.num_edges());
    for (std::size_t f = 0; f < sg.num_faces(); ++f) {
        for (int e : sg.faces[f].edges) {
            sides[at(e)].push_back(static_cast<int>(f));
        }
    }
    dual_.adjacency.assign(sg.num_faces(), {});
    for (std::size_t e = 0; e < sg.num_edges(); ++e) {
        if (sides[e].size() != 2) {
            throw InternalError("surface edge " + std::to_string(e) + " is not on exactly two face sides");
        }
        if (sides[e][0] == sides[e][1]) {
            continue;
        }
        dual_.adjacency[at(sides[e][0])].emplace_back(sides[e][1], static_cast<int>(e));
        dual_.adjacency[at(sides[e][1])].emplace_back(sides[e][0], static_cast<int>(e));
    }
    primal_.solve();
    dual_.solve();
}

void SurfaceMatcher::match(const Graph& g, const std::vector<int>& defects, Matcher matcher, BitVec& out) const {
    if (defects.size() % 2 != 0) {
        throw DecodeError("odd number of defects (" + std::to_string(defects.size()) + ") on a closed surface");
    }
    if (defects.empty()) {
        return;
    }
    const std::size_t k = defects.size();
    CostMatrix cost(k, std::vector<std::int64_t>(k, 0));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            const int d = g.dist[at(defects[i])][at(defects[j])];
            if (d < 0) {
                throw DecodeError("defects in disconnected components");
            }
            cost[i][j] = d;
        }
    }
    const auto mate = perfect_matching(cost, matcher);
    for (std::size_t i = 0; i < k; ++i) {
        if (mate[i] > static_cast<int>(i)) {
            g.path(defects[i], defects[at(mate[i])], out);
        }
    }
}

PauliOp SurfaceMatcher::decode(const Syndrome& syn, Matcher matcher) const {
    if (!(syn.space == space_) || syn.bits.size() != num_vertices_ + dual_.adjacency.size()) {
        throw SpaceMismatchError("syndrome does not belong to this surface code");
    }
    std::vector<int> vertex_defects;
    std::vector<int> face_defects;
    for (std::size_t i : syn.bits.ones()) {
        if (i < num_vertices_) {
            vertex_defects.push_back(static_cast<int>(i));
        } else {
            face_defects.push_back(static_cast<int>(i - num_vertices_));
        }
    }
    PauliOp out(space_);
    match(primal_, vertex_defects, matcher, out.z());
    match(dual_, face_defects, matcher, out.x());
    return out;
}

PauliOp mwpm_decode(const SurfaceGraph& sg, const Syndrome& syn, Matcher matcher) {
    return SurfaceMatcher(sg).decode(syn, matcher);
}

ColorDecoder::ColorDecoder(MapArtifact artifact, Matcher matcher)
    : artifact_(std::move(artifact)),
      matcher_(matcher),
      color_(ccsurf::color_code(artifact_.code_map.colex)),
      surface_(ccsurf::surface_code(artifact_.code_map.surface)),
      surface_matcher_(artifact_.code_map.surface),
      logicals_(logical_basis(color_)) {}

PauliOp ColorDecoder::surface_correction(const Syndrome& color_syn) const {
    const auto& sg = code_map().surface;
    const auto pushed = push_syndrome(code_map(), basis_change(), color_syn);
    return on_copy(sg, 1, surface_matcher_.decode(pushed[0], matcher_)) *
           on_copy(sg, 2, surface_matcher_.decode(pushed[1], matcher_));
}

DecodeOutcome ColorDecoder::decode(const Syndrome& color_syn) const {
    DecodeOutcome out;
    if (color_syn.bits.none()) {
        out.correction = PauliOp(color_.space());
        out.syndrome_matches = true;
        return out;
    }
    out.correction = code_map().map.preimage(surface_correction(color_syn));
    out.syndrome_matches = extract_syndrome(color_, out.correction) == color_syn;
    return out;
}

DecodeOutcome ColorDecoder::decode_error(const PauliOp& e) const {
    auto out = decode(extract_syndrome(color_, e));
    const auto residual = e * out.correction;
    out.logical_class = logical_class(logicals_, residual);
    out.success = out.syndrome_matches && color_.contains(residual);
    return out;
}

DecodeOutcome decode_color(const ColorDecoder& decoder, const Syndrome& syn) { return decoder.decode(syn); }

}  // namespace ccsurf
