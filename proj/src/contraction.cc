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

#include <algorithm>
#include <map>
#include <sstream>

#include "ccsurf/error.h"
#include "json.hpp"

namespace ccsurf {

using json = nlohmann::ordered_json;

namespace {

// Closed walk written as (edge, tail) pairs, rotated to start at the smallest.
std::vector<std::pair<int, int>> canonical_walk(const SurfaceFace& f) {
    std::vector<std::pair<int, int>> w;
    for (std::size_t i = 0; i < f.edges.size(); ++i) {
        w.emplace_back(f.edges[i], i < f.vertices.size() ? f.vertices[i] : -1);
    }
    if (!w.empty()) {
        std::rotate(w.begin(), std::min_element(w.begin(), w.end()), w.end());
    }
    return w;
}

}  // namespace

SurfaceGraph contract(const Colex& g, Color c) {
    require_valid(g);
    const auto roles = ColorRoles::for_contraction(c);
    SurfaceGraph sg;
    sg.contracted = c;
    sg.genus = g.genus();
    sg.parent_vertices = g.num_vertices();
    sg.parent_faces_primed = g.count_faces(roles.primed);
    sg.parent_faces_double_primed = g.count_faces(roles.double_primed);

    sg.tau_face_vertex.assign(g.num_faces(), -1);
    sg.tau_face.assign(g.num_faces(), -1);
    sg.tau_edge.assign(g.num_edges(), -1);
    sg.tau_vertex.assign(g.num_vertices(), -1);

    sg.vertex_parent_face = g.faces_of_color(c);
    sg.num_vertices = sg.vertex_parent_face.size();
    for (std::size_t i = 0; i < sg.vertex_parent_face.size(); ++i) {
        sg.tau_face_vertex[static_cast<std::size_t>(sg.vertex_parent_face[i])] = static_cast<int>(i);
    }
    sg.edge_parent_edge = g.edges_of_color(c);
    for (std::size_t i = 0; i < sg.edge_parent_edge.size(); ++i) {
        const int pe = sg.edge_parent_edge[i];
        const auto& ed = g.edge(static_cast<std::size_t>(pe));
        sg.tau_edge[static_cast<std::size_t>(pe)] = static_cast<int>(i);
        sg.tau_vertex[static_cast<std::size_t>(ed.u)] = static_cast<int>(i);
        sg.tau_vertex[static_cast<std::size_t>(ed.v)] = static_cast<int>(i);
        sg.edges.push_back({sg.tau_face_vertex[static_cast<std::size_t>(g.face_at(ed.u, c))],
                            sg.tau_face_vertex[static_cast<std::size_t>(g.face_at(ed.v, c))]});
    }
    auto half_at = [&](int parent_vertex) {
        const int e = sg.tau_vertex[static_cast<std::size_t>(parent_vertex)];
        const auto& ped = g.edge(static_cast<std::size_t>(sg.edge_parent_edge[static_cast<std::size_t>(e)]));
        return HalfEdge{e, ped.u == parent_vertex ? 0 : 1};
    };

    // Splice: the half-edges around a contracted face come in the order its
    // boundary vertices are met, walked against the face orientation so that
    // face walks of the result keep the parent's orientation.
    sg.rotation.resize(sg.num_vertices);
    for (std::size_t i = 0; i < sg.num_vertices; ++i) {
        const auto& b = g.face(static_cast<std::size_t>(sg.vertex_parent_face[i])).boundary;
        for (auto it = b.rbegin(); it != b.rend(); ++it) {
            sg.rotation[i].push_back(half_at(*it));
        }
    }

    for (std::size_t f = 0; f < g.num_faces(); ++f) {
        const auto& face = g.face(f);
        if (face.color == c) {
            continue;
        }
        sg.tau_face[f] = static_cast<int>(sg.faces.size());
        sg.face_parent_face.push_back(static_cast<int>(f));
        SurfaceFace sf;
        const auto& b = face.boundary;
        for (std::size_t i = 0; i < b.size(); ++i) {
            const int u = b[i];
            const int v = b[(i + 1) % b.size()];
            const int e = g.edge_between(u, v);
            if (g.edge(static_cast<std::size_t>(e)).color == c) {
                sf.edges.push_back(sg.tau_edge[static_cast<std::size_t>(e)]);
                sf.vertices.push_back(sg.tau_face_vertex[static_cast<std::size_t>(g.face_at(u, c))]);
            }
        }
        sg.faces.push_back(std::move(sf));
    }
    return sg;
}

std::vector<SurfaceFace> trace_surface_faces(const SurfaceGraph& sg) {
    // Position of each half-edge in its vertex rotation.
    std::map<std::pair<int, int>, std::pair<std::size_t, std::size_t>> where;
    for (std::size_t v = 0; v < sg.rotation.size(); ++v) {
        for (std::size_t k = 0; k < sg.rotation[v].size(); ++k) {
            where[{sg.rotation[v][k].edge, sg.rotation[v][k].end}] = {v, k};
        }
    }
    auto endpoint = [&](int e, int end) {
        const auto& ed = sg.edges[static_cast<std::size_t>(e)];
        return end == 0 ? ed.a : ed.b;
    };
    std::vector<SurfaceFace> out;
    std::map<std::pair<int, int>, bool> used;
    for (std::size_t e = 0; e < sg.edges.size(); ++e) {
        for (int start_end : {0, 1}) {
            if (used[{static_cast<int>(e), start_end}]) {
                continue;
            }
            SurfaceFace f;
            int cur_e = static_cast<int>(e);
            int cur_end = start_end;
            for (std::size_t steps = 0; steps <= 2 * sg.edges.size(); ++steps) {
                if (used[{cur_e, cur_end}]) {
                    break;
                }
                used[{cur_e, cur_end}] = true;
                f.edges.push_back(cur_e);
                f.vertices.push_back(endpoint(cur_e, cur_end));
                const int arrive_end = 1 - cur_end;
                auto it = where.find({cur_e, arrive_end});
                if (it == where.end()) {
                    break;
                }
                const auto [v, k] = it->second;
                const auto& nxt = sg.rotation[v][(k + 1) % sg.rotation[v].size()];
                cur_e = nxt.edge;
                cur_end = nxt.end;
            }
            out.push_back(std::move(f));
        }
    }
    return out;
}

ValidationReport surface_dual_check(const SurfaceGraph& sg) {
    ValidationReport rep;
    const std::size_t ne = sg.edges.size();
    {
        const bool ok = sg.num_vertices == sg.vertex_parent_face.size() && 2 * ne == sg.parent_vertices &&
                        sg.faces.size() == sg.parent_faces_primed + sg.parent_faces_double_primed;
        rep.add("counting", ok,
                "V=" + std::to_string(sg.num_vertices) + " E=" + std::to_string(ne) + " F=" +
                    std::to_string(sg.faces.size()) + " (parent n=" + std::to_string(sg.parent_vertices) + ")");
    }
    {
        std::string bad;
        for (std::size_t f = 0; f < sg.faces.size() && bad.empty(); ++f) {
            const auto& face = sg.faces[f];
            if (face.edges.empty() || face.edges.size() != face.vertices.size()) {
                bad = "face " + std::to_string(f) + " has mismatched edge and vertex lists";
                break;
            }
            for (std::size_t i = 0; i < face.edges.size(); ++i) {
                const int e = face.edges[i];
                if (e < 0 || static_cast<std::size_t>(e) >= ne) {
                    bad = "face " + std::to_string(f) + " references edge " + std::to_string(e);
                    break;
                }
                const auto& ed = sg.edges[static_cast<std::size_t>(e)];
                const int tail = face.vertices[i];
                if (tail != ed.a && tail != ed.b) {
                    bad = "face " + std::to_string(f) + ": edge " + std::to_string(e) + " does not start at vertex " +
                          std::to_string(tail);
                    break;
                }
                const int head = tail == ed.a ? ed.b : ed.a;
                if (head != face.vertices[(i + 1) % face.vertices.size()]) {
                    bad = "face " + std::to_string(f) + " boundary does not close after edge " + std::to_string(e);
                    break;
                }
            }
        }
        rep.add("face-boundary-closure", bad.empty(), bad);
    }
    {
        std::vector<int> count(ne, 0);
        for (const auto& face : sg.faces) {
            for (int e : face.edges) {
                if (e >= 0 && static_cast<std::size_t>(e) < ne) {
                    ++count[static_cast<std::size_t>(e)];
                }
            }
        }
        std::string bad;
        for (std::size_t e = 0; e < ne && bad.empty(); ++e) {
            if (count[e] != 2) {
                bad = "edge " + std::to_string(e) + " lies on " + std::to_string(count[e]) + " face sides";
            }
        }
        rep.add("edge-on-two-faces", bad.empty(), bad);
    }
    {
        std::vector<std::vector<std::pair<int, int>>> traced;
        for (const auto& f : trace_surface_faces(sg)) {
            traced.push_back(canonical_walk(f));
        }
        std::vector<std::vector<std::pair<int, int>>> stored;
        for (const auto& f : sg.faces) {
            stored.push_back(canonical_walk(f));
        }
        std::sort(traced.begin(), traced.end());
        std::sort(stored.begin(), stored.end());
        rep.add("faces-match-rotation", traced == stored,
                traced == stored ? "" : "face walks of the merged rotation differ from the contracted faces");
    }
    {
        std::string bad;
        auto total = [&](const std::vector<int>& table, std::size_t range, const char* name, bool allow_unset) {
            for (std::size_t i = 0; i < table.size() && bad.empty(); ++i) {
                if (table[i] == -1 && allow_unset) {
                    continue;
                }
                if (table[i] < 0 || static_cast<std::size_t>(table[i]) >= range) {
                    bad = std::string(name) + "[" + std::to_string(i) + "] is unmapped";
                }
            }
        };
        total(sg.tau_vertex, ne, "tau_vertex", false);
        total(sg.vertex_parent_face, sg.tau_face_vertex.size(), "vertex_parent_face", false);
        total(sg.edge_parent_edge, sg.tau_edge.size(), "edge_parent_edge", false);
        total(sg.face_parent_face, sg.tau_face.size(), "face_parent_face", false);
        if (bad.empty() && sg.tau_vertex.size() != sg.parent_vertices) {
            bad = "tau_vertex does not cover every parent vertex";
        }
        if (bad.empty()) {
            // Every surface edge is the image of exactly two parent vertices.
            std::vector<int> hits(ne, 0);
            for (int e : sg.tau_vertex) {
                ++hits[static_cast<std::size_t>(e)];
            }
            for (std::size_t e = 0; e < ne && bad.empty(); ++e) {
                if (hits[e] != 2) {
                    bad = "surface edge " + std::to_string(e) + " is the image of " + std::to_string(hits[e]) +
                          " parent vertices";
                }
            }
        }
        rep.add("correspondence-total", bad.empty(), bad);
    }
    {
        std::string bad;
        auto inverse = [&](const std::vector<int>& fwd, const std::vector<int>& back, const char* name) {
            for (std::size_t i = 0; i < fwd.size() && bad.empty(); ++i) {
                const int p = fwd[i];
                if (p < 0 || static_cast<std::size_t>(p) >= back.size() || back[static_cast<std::size_t>(p)] !=
                                                                               static_cast<int>(i)) {
                    bad = std::string(name) + " does not invert at " + std::to_string(i);
                }
            }
        };
        inverse(sg.vertex_parent_face, sg.tau_face_vertex, "vertex_parent_face");
        inverse(sg.edge_parent_edge, sg.tau_edge, "edge_parent_edge");
        inverse(sg.face_parent_face, sg.tau_face, "face_parent_face");
        rep.add("correspondence-inverse", bad.empty(), bad);
    }
    {
        const int expected = 2 - 2 * sg.genus;
        rep.add("euler-characteristic", sg.euler_characteristic() == expected,
                "V-E+F=" + std::to_string(sg.euler_characteristic()) + ", 2-2g=" + std::to_string(expected));
    }
    return rep;
}

std::string save_surface(const SurfaceGraph& sg) {
    std::ostringstream out;
    out << "{\n";
    out << "  \"genus\": " << sg.genus << ",\n";
    out << "  \"contracted_color\": \"" << to_char(sg.contracted) << "\",\n";
    out << "  \"vertices\": " << sg.num_vertices << ",\n";
    out << "  \"edges\": [";
    for (std::size_t e = 0; e < sg.edges.size(); ++e) {
        out << (e == 0 ? "\n    " : ",\n    ")
            << json::array({sg.edges[e].a, sg.edges[e].b, to_string(sg.contracted)}).dump();
    }
    out << "\n  ],\n  \"faces\": [";
    for (std::size_t f = 0; f < sg.faces.size(); ++f) {
        out << (f == 0 ? "\n    " : ",\n    ")
            << json{{"parent", sg.face_parent_face[f]}, {"boundary", sg.faces[f].edges}, {"vertices", sg.faces[f].vertices}}
                   .dump();
    }
    out << "\n  ],\n  \"rotation\": [";
    for (std::size_t v = 0; v < sg.rotation.size(); ++v) {
        json r = json::array();
        for (const auto& h : sg.rotation[v]) {
            r.push_back({h.edge, h.end});
        }
        out << (v == 0 ? "\n    " : ",\n    ") << r.dump();
    }
    out << "\n  ],\n";
    out << "  \"correspondence\": {\n";
    out << "    \"vertex_parent_face\": " << json(sg.vertex_parent_face).dump() << ",\n";
    out << "    \"edge_parent_edge\": " << json(sg.edge_parent_edge).dump() << ",\n";
    out << "    \"face_parent_face\": " << json(sg.face_parent_face).dump() << ",\n";
    out << "    \"tau_vertex\": " << json(sg.tau_vertex).dump() << "\n";
    out << "  }\n}\n";
    return out.str();
}

}  // namespace ccsurf
