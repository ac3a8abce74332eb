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

#ifndef CCSURF_CONTRACTION_H
#define CCSURF_CONTRACTION_H

#include <cstddef>
#include <string>
#include <vector>

#include "ccsurf/colex.h"
#include "ccsurf/report.h"

namespace ccsurf {

/// Edge of the contracted graph. Loops (a == b) and parallel edges are
/// allowed.
struct SurfaceEdge {
    int a = 0;
    int b = 0;
};

/// One end of an edge: end 0 sits at SurfaceEdge::a, end 1 at SurfaceEdge::b.
struct HalfEdge {
    int edge = 0;
    int end = 0;

    bool operator==(const HalfEdge&) const = default;
};

/// Closed walk: edges[i] is traversed starting from vertices[i].
struct SurfaceFace {
    std::vector<int> edges;
    std::vector<int> vertices;
};

/// The graph obtained by contracting every c-colored face of a colex, with
/// the correspondence back to the parent. Vertices are the c-faces, edges
/// the c-edges and faces the remaining faces, each in ascending parent
/// order. Built once by contract() and treated as read-only afterwards.
struct SurfaceGraph {
    Color contracted = Color::Red;
    int genus = 0;
    std::size_t num_vertices = 0;
    std::vector<SurfaceEdge> edges;
    std::vector<SurfaceFace> faces;
    /// Half-edges around each vertex in cyclic order. Walking a face, the
    /// half-edge leaving a vertex follows the one we arrived on.
    std::vector<std::vector<HalfEdge>> rotation;

    std::vector<int> vertex_parent_face;
    std::vector<int> edge_parent_edge;
    std::vector<int> face_parent_face;

    /// Indexed by parent vertex: the surface edge tau(v).
    std::vector<int> tau_vertex;
    /// Indexed by parent edge: surface edge, or -1 for non-c edges.
    std::vector<int> tau_edge;
    /// Indexed by parent face: surface vertex for c-faces, else -1.
    std::vector<int> tau_face_vertex;
    /// Indexed by parent face: surface face for non-c faces, else -1.
    std::vector<int> tau_face;

    /// Parent census, kept for the counting identities.
    std::size_t parent_vertices = 0;
    std::size_t parent_faces_primed = 0;
    std::size_t parent_faces_double_primed = 0;

    std::size_t num_edges() const { return edges.size(); }
    std::size_t num_faces() const { return faces.size(); }
    int other_end(int e, int v) const {
        const auto& ed = edges[static_cast<std::size_t>(e)];
        return ed.a == v ? ed.b : ed.a;
    }
    int euler_characteristic() const {
        return static_cast<int>(num_vertices) - static_cast<int>(edges.size()) + static_cast<int>(faces.size());
    }
};

/// Contracts every c-colored face of g. Throws ValidationError when g is not
/// a valid colex.
SurfaceGraph contract(const Colex& g, Color c);

/// Face orbits of the merged rotation system, as half-edge walks.
std::vector<SurfaceFace> trace_surface_faces(const SurfaceGraph& sg);

ValidationReport surface_dual_check(const SurfaceGraph& sg);

std::string save_surface(const SurfaceGraph& sg);

}  // namespace ccsurf

#endif
