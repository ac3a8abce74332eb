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

#ifndef CCSURF_COLEX_H
#define CCSURF_COLEX_H

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "ccsurf/color.h"
#include "ccsurf/report.h"

namespace ccsurf {

struct ColexEdge {
    int u = 0;
    int v = 0;
    Color color = Color::Red;

    bool operator==(const ColexEdge&) const = default;
};

struct ColexFace {
    Color color = Color::Red;
    /// Cyclic vertex list in the global orientation fixed by the rotation
    /// system.
    std::vector<int> boundary;

    bool operator==(const ColexFace&) const = default;
    /// Half the boundary length.
    std::size_t half_length() const { return boundary.size() / 2; }
};

/// Where a lattice came from; carried through files for CSV reporting only.
struct LatticeInfo {
    std::string family = "custom";
    int rows = 0;
    int cols = 0;

    bool operator==(const LatticeInfo&) const = default;
};

/// Trivalent 3-face-colorable graph embedded on a closed orientable surface,
/// stored as a combinatorial map. rotation[v] lists the three edges at v in
/// cyclic order; walking a face, the edge after e at vertex v is the
/// successor of e in rotation[v].
///
/// A Colex is immutable once built. The constructor only checks index
/// bounds; validate_colex() checks everything else.
class Colex {
   public:
    Colex(int genus, std::size_t num_vertices, std::vector<ColexEdge> edges, std::vector<ColexFace> faces,
          std::vector<std::array<int, 3>> rotation, LatticeInfo info = {});

    /// Derives edges (with colors) and the rotation system from face
    /// boundaries. Throws ValidationError if an edge is not shared by exactly
    /// two face sides.
    static Colex from_faces(int genus, std::size_t num_vertices, std::vector<ColexFace> faces, LatticeInfo info = {});

    int genus() const { return genus_; }
    std::size_t num_vertices() const { return n_; }
    std::size_t num_edges() const { return edges_.size(); }
    std::size_t num_faces() const { return faces_.size(); }
    const std::vector<ColexEdge>& edges() const { return edges_; }
    const std::vector<ColexFace>& faces() const { return faces_; }
    const ColexEdge& edge(std::size_t e) const { return edges_[e]; }
    const ColexFace& face(std::size_t f) const { return faces_[f]; }
    const std::vector<std::array<int, 3>>& rotation() const { return rotation_; }
    const LatticeInfo& info() const { return info_; }

    /// Face ids of the given color, ascending.
    std::vector<int> faces_of_color(Color c) const;
    /// Edge ids of the given color, ascending.
    std::vector<int> edges_of_color(Color c) const;
    std::size_t count_faces(Color c) const;

    /// Edge of color c at vertex v, or -1.
    int edge_at(int v, Color c) const { return edge_at_[static_cast<std::size_t>(v)][index(c)]; }
    /// Face of color c containing v, or -1.
    int face_at(int v, Color c) const { return face_at_[static_cast<std::size_t>(v)][index(c)]; }
    /// Edge joining u and v, or -1.
    int edge_between(int u, int v) const;
    int other_end(int e, int v) const {
        const auto& ed = edges_[static_cast<std::size_t>(e)];
        return ed.u == v ? ed.v : ed.u;
    }

    int euler_characteristic() const {
        return static_cast<int>(n_) - static_cast<int>(edges_.size()) + static_cast<int>(faces_.size());
    }

    bool operator==(const Colex& other) const;

   private:
    int genus_;
    std::size_t n_;
    std::vector<ColexEdge> edges_;
    std::vector<ColexFace> faces_;
    std::vector<std::array<int, 3>> rotation_;
    LatticeInfo info_;
    std::vector<std::array<int, 3>> edge_at_;
    std::vector<std::array<int, 3>> face_at_;
};

/// Periodic 6.6.6 lattice with rows x cols hexagons. Faces are colored by
/// (row + col) mod 3, so both dimensions must be multiples of 3.
Colex build_hexagonal_torus(int rows, int cols);

/// Periodic 4.8.8 lattice with d x d octagons (d even): squares are red,
/// octagons green/blue in a checkerboard.
Colex build_square_octagon_torus(int d);
Colex build_square_octagon_torus(int rows, int cols);

ValidationReport validate_colex(const Colex& g);

/// Throws ValidationError listing the failed checks.
void require_valid(const Colex& g);

/// Face boundaries traced from the rotation system, each starting at its
/// first dart in edge order. Used by validation and tests.
std::vector<std::vector<int>> trace_faces(const Colex& g);

std::string save_colex(const Colex& g);
/// Parses and validates. Throws ParseError or ValidationError.
Colex load_colex(const std::string& text);

Colex load_colex_file(const std::string& path);
void save_colex_file(const Colex& g, const std::string& path);

}  // namespace ccsurf

#endif
