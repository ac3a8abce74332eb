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

#ifndef CCSURF_DECODE_H
#define CCSURF_DECODE_H

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "ccsurf/codemap.h"
#include "ccsurf/matching.h"
#include "ccsurf/stabilizers.h"

namespace ccsurf {

/// One bit per generator of a code, in the code's generator order.
struct Syndrome {
    QubitSpace space;
    BitVec bits;

    bool operator==(const Syndrome&) const = default;
};

Syndrome extract_syndrome(const StabilizerCode& code, const PauliOp& e);

/// Syndromes of the two surface copies, computed as basis_change * color
/// syndrome and split by copy. Throws SpaceMismatchError if the syndrome or
/// the basis change does not belong to cm.
std::array<Syndrome, 2> push_syndrome(const CodeMap& cm, const Gf2Matrix& basis_change, const Syndrome& color_syn);

/// Matching decoder for one surface code. Vertex defects are paired along
/// shortest paths in the graph and corrected with Z; face defects along
/// shortest paths in the dual and corrected with X. Shortest paths come from
/// BFS trees that scan edges in increasing index, so results are
/// reproducible.
class SurfaceMatcher {
   public:
    explicit SurfaceMatcher(const SurfaceGraph& sg);

    /// Throws DecodeError when either defect set has odd size.
    PauliOp decode(const Syndrome& syn, Matcher matcher = Matcher::Blossom) const;

    int vertex_distance(int a, int b) const { return primal_.dist[at(a)][at(b)]; }
    int face_distance(int a, int b) const { return dual_.dist[at(a)][at(b)]; }

   private:
    struct Graph {
        // adjacency[u] = (neighbor, edge) pairs, edges ascending.
        std::vector<std::vector<std::pair<int, int>>> adjacency;
        // dist[s][t] and the BFS-tree edge entering t from source s.
        std::vector<std::vector<int>> dist;
        std::vector<std::vector<int>> pred;

        void solve();
        void path(int s, int t, BitVec& out) const;
    };

    static std::size_t at(int i) { return static_cast<std::size_t>(i); }
    void match(const Graph& g, const std::vector<int>& defects, Matcher matcher, BitVec& out) const;

    QubitSpace space_;
    std::size_t num_vertices_ = 0;
    Graph primal_;
    Graph dual_;
};

PauliOp mwpm_decode(const SurfaceGraph& sg, const Syndrome& syn, Matcher matcher = Matcher::Blossom);

struct DecodeOutcome {
    PauliOp correction;
    /// The correction reproduces the input syndrome. Always true for a
    /// consistent build; reported rather than assumed.
    bool syndrome_matches = false;
    /// Known only when the error is known: the residual is a stabilizer.
    std::optional<bool> success;
    /// Commutation pattern of the residual against a fixed logical basis;
    /// zero iff success.
    std::optional<std::uint64_t> logical_class;
};

/// Color-code decoder that works through the map: push the syndrome to the
/// two surface copies, match each, and pull the joint correction back.
class ColorDecoder {
   public:
    explicit ColorDecoder(MapArtifact artifact, Matcher matcher = Matcher::Blossom);

    const CodeMap& code_map() const { return artifact_.code_map; }
    const Gf2Matrix& basis_change() const { return artifact_.basis_change; }
    const StabilizerCode& color_code() const { return color_; }
    const StabilizerCode& surface_code() const { return surface_; }
    const std::vector<PauliOp>& logicals() const { return logicals_; }
    Matcher matcher() const { return matcher_; }

    /// Correction on the surface pair, before lifting.
    PauliOp surface_correction(const Syndrome& color_syn) const;
    DecodeOutcome decode(const Syndrome& color_syn) const;
    /// Decodes the syndrome of e and scores the result against e.
    DecodeOutcome decode_error(const PauliOp& e) const;

   private:
    MapArtifact artifact_;
    Matcher matcher_;
    StabilizerCode color_;
    StabilizerCode surface_;
    SurfaceMatcher surface_matcher_;
    std::vector<PauliOp> logicals_;
};

DecodeOutcome decode_color(const ColorDecoder& decoder, const Syndrome& syn);

}  // namespace ccsurf

#endif
