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

#include "ccsurf/colex.h"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "ccsurf/error.h"
#include "json.hpp"

namespace ccsurf {

using json = nlohmann::ordered_json;

namespace {

std::vector<int> canonical_cycle(const std::vector<int>& cycle) {
    if (cycle.empty()) {
        return cycle;
    }
    auto it = std::min_element(cycle.begin(), cycle.end());
    std::vector<int> out(it, cycle.end());
    out.insert(out.end(), cycle.begin(), it);
    return out;
}

std::pair<int, int> key(int a, int b) { return {std::min(a, b), std::max(a, b)}; }

int wrap(int a, int m) { return ((a % m) + m) % m; }

}  // namespace

Colex::Colex(int genus, std::size_t num_vertices, std::vector<ColexEdge> edges, std::vector<ColexFace> faces,
             std::vector<std::array<int, 3>> rotation, LatticeInfo info)
    : genus_(genus),
      n_(num_vertices),
      edges_(std::move(edges)),
      faces_(std::move(faces)),
      rotation_(std::move(rotation)),
      info_(std::move(info)) {
    const int n = static_cast<int>(n_);
    auto in_range = [n](int v) { return v >= 0 && v < n; };
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        if (!in_range(edges_[e].u) || !in_range(edges_[e].v)) {
            throw ValidationError("edge " + std::to_string(e) + " references a vertex out of range");
        }
    }
    for (std::size_t f = 0; f < faces_.size(); ++f) {
        for (int v : faces_[f].boundary) {
            if (!in_range(v)) {
                throw ValidationError("face " + std::to_string(f) + " references a vertex out of range");
            }
        }
    }
    if (rotation_.size() != n_) {
        throw ValidationError("rotation system has " + std::to_string(rotation_.size()) + " entries for " +
                              std::to_string(n_) + " vertices");
    }
    for (std::size_t v = 0; v < n_; ++v) {
        for (int e : rotation_[v]) {
            if (e < 0 || e >= static_cast<int>(edges_.size())) {
                throw ValidationError("rotation at vertex " + std::to_string(v) + " references an edge out of range");
            }
        }
    }
    edge_at_.assign(n_, {-1, -1, -1});
    face_at_.assign(n_, {-1, -1, -1});
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        for (int v : {edges_[e].u, edges_[e].v}) {
            auto& slot = edge_at_[static_cast<std::size_t>(v)][index(edges_[e].color)];
            if (slot < 0) {
                slot = static_cast<int>(e);
            }
        }
    }
    for (std::size_t f = 0; f < faces_.size(); ++f) {
        for (int v : faces_[f].boundary) {
            auto& slot = face_at_[static_cast<std::size_t>(v)][index(faces_[f].color)];
            if (slot < 0) {
                slot = static_cast<int>(f);
            }
        }
    }
}

Colex Colex::from_faces(int genus, std::size_t num_vertices, std::vector<ColexFace> faces, LatticeInfo info) {
    std::map<std::pair<int, int>, int> edge_ids;
    std::vector<ColexEdge> edges;
    std::vector<std::vector<int>> sides;
    for (std::size_t f = 0; f < faces.size(); ++f) {
        const auto& b = faces[f].boundary;
        for (std::size_t i = 0; i < b.size(); ++i) {
            const int a = b[i];
            const int c = b[(i + 1) % b.size()];
            auto [it, inserted] = edge_ids.try_emplace(key(a, c), static_cast<int>(edges.size()));
            if (inserted) {
                edges.push_back({a, c, Color::Red});
                sides.emplace_back();
            }
            sides[static_cast<std::size_t>(it->second)].push_back(static_cast<int>(f));
        }
    }
    for (std::size_t e = 0; e < edges.size(); ++e) {
        if (sides[e].size() != 2) {
            throw ValidationError("edge (" + std::to_string(edges[e].u) + "," + std::to_string(edges[e].v) +
                                  ") lies on " + std::to_string(sides[e].size()) + " face sides instead of 2");
        }
        const Color a = faces[static_cast<std::size_t>(sides[e][0])].color;
        const Color b = faces[static_cast<std::size_t>(sides[e][1])].color;
        if (a == b) {
            throw ValidationError("edge " + std::to_string(e) + " separates two faces of the same color");
        }
        edges[e].color = third(a, b);
    }

    // At each face corner the incoming edge is followed by the outgoing one.
    std::vector<std::map<int, int>> succ(num_vertices);
    for (const auto& face : faces) {
        const auto& b = face.boundary;
        const std::size_t len = b.size();
        for (std::size_t i = 0; i < len; ++i) {
            const int prev = b[(i + len - 1) % len];
            const int cur = b[i];
            const int next = b[(i + 1) % len];
            succ[static_cast<std::size_t>(cur)][edge_ids.at(key(prev, cur))] = edge_ids.at(key(cur, next));
        }
    }
    std::vector<std::array<int, 3>> rotation(num_vertices, {-1, -1, -1});
    for (std::size_t v = 0; v < num_vertices; ++v) {
        if (succ[v].size() != 3) {
            throw ValidationError("vertex " + std::to_string(v) + " is not trivalent");
        }
        int e = succ[v].begin()->first;
        for (int k = 0; k < 3; ++k) {
            rotation[v][static_cast<std::size_t>(k)] = e;
            e = succ[v].at(e);
        }
    }
    return Colex(genus, num_vertices, std::move(edges), std::move(faces), std::move(rotation), std::move(info));
}

std::vector<int> Colex::faces_of_color(Color c) const {
    std::vector<int> out;
    for (std::size_t f = 0; f < faces_.size(); ++f) {
        if (faces_[f].color == c) {
            out.push_back(static_cast<int>(f));
        }
    }
    return out;
}

std::vector<int> Colex::edges_of_color(Color c) const {
    std::vector<int> out;
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        if (edges_[e].color == c) {
            out.push_back(static_cast<int>(e));
        }
    }
    return out;
}

std::size_t Colex::count_faces(Color c) const {
    return static_cast<std::size_t>(
        std::count_if(faces_.begin(), faces_.end(), [c](const ColexFace& f) { return f.color == c; }));
}

int Colex::edge_between(int u, int v) const {
    for (int e : rotation_[static_cast<std::size_t>(u)]) {
        const auto& ed = edges_[static_cast<std::size_t>(e)];
        if ((ed.u == u && ed.v == v) || (ed.u == v && ed.v == u)) {
            return e;
        }
    }
    return -1;
}

bool Colex::operator==(const Colex& other) const {
    return genus_ == other.genus_ && n_ == other.n_ && edges_ == other.edges_ && faces_ == other.faces_ &&
           rotation_ == other.rotation_ && info_ == other.info_;
}

Colex build_hexagonal_torus(int rows, int cols) {
    if (rows < 3 || cols < 3) {
        throw DimensionError("hexagonal torus needs rows >= 3 and cols >= 3");
    }
    if (rows % 3 != 0 || cols % 3 != 0) {
        throw DimensionError("hexagonal torus is 3-face-colorable only when rows and cols are multiples of 3 (got " +
                             std::to_string(rows) + "x" + std::to_string(cols) + ")");
    }
    auto up = [&](int r, int c) { return 2 * (wrap(r, rows) * cols + wrap(c, cols)); };
    auto down = [&](int r, int c) { return up(r, c) + 1; };
    std::vector<ColexFace> faces;
    faces.reserve(static_cast<std::size_t>(rows * cols));
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            ColexFace f;
            f.color = static_cast<Color>((r + c) % 3);
            // Corners between consecutive neighbours (0,1),(1,1),(1,0),(0,-1),(-1,-1),(-1,0).
            f.boundary = {up(r, c), down(r, c), up(r, c - 1), down(r - 1, c - 1), up(r - 1, c - 1), down(r - 1, c)};
            faces.push_back(std::move(f));
        }
    }
    return Colex::from_faces(1, static_cast<std::size_t>(2 * rows * cols), std::move(faces), {"hex", rows, cols});
}

Colex build_square_octagon_torus(int rows, int cols) {
    if (rows < 2 || cols < 2) {
        throw DimensionError("square-octagon torus needs at least 2x2 octagons");
    }
    if (rows % 2 != 0 || cols % 2 != 0) {
        throw DimensionError("square-octagon torus is 3-face-colorable only for even dimensions (got " +
                             std::to_string(rows) + "x" + std::to_string(cols) + ")");
    }
    enum Corner { kSouth = 0, kEast = 1, kNorth = 2, kWest = 3 };
    auto corner = [&](int i, int j, Corner k) { return 4 * (wrap(i, rows) * cols + wrap(j, cols)) + k; };
    std::vector<ColexFace> faces;
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) {
            ColexFace f;
            f.color = (i + j) % 2 == 0 ? Color::Green : Color::Blue;
            f.boundary = {corner(i, j, kSouth),         corner(i, j, kWest),         corner(i, j - 1, kEast),
                          corner(i, j - 1, kSouth),     corner(i - 1, j - 1, kNorth), corner(i - 1, j - 1, kEast),
                          corner(i - 1, j, kWest),      corner(i - 1, j, kNorth)};
            faces.push_back(std::move(f));
        }
    }
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) {
            faces.push_back(
                {Color::Red, {corner(i, j, kSouth), corner(i, j, kEast), corner(i, j, kNorth), corner(i, j, kWest)}});
        }
    }
    const int d = rows == cols ? rows : 0;
    return Colex::from_faces(1, static_cast<std::size_t>(4 * rows * cols), std::move(faces),
                             {"sqoct", d != 0 ? d : rows, cols});
}

Colex build_square_octagon_torus(int d) { return build_square_octagon_torus(d, d); }

std::vector<std::vector<int>> trace_faces(const Colex& g) {
    const std::size_t m = g.num_edges();
    std::vector<char> seen(2 * m, 0);
    std::vector<std::vector<int>> out;
    for (std::size_t start = 0; start < 2 * m; ++start) {
        if (seen[start]) {
            continue;
        }
        std::vector<int> cycle;
        std::size_t dart = start;
        for (std::size_t steps = 0; steps <= 2 * m; ++steps) {
            if (seen[dart]) {
                break;
            }
            seen[dart] = 1;
            const int e = static_cast<int>(dart / 2);
            const auto& ed = g.edge(static_cast<std::size_t>(e));
            const int from = dart % 2 == 0 ? ed.u : ed.v;
            const int to = dart % 2 == 0 ? ed.v : ed.u;
            cycle.push_back(from);
            const auto& rot = g.rotation()[static_cast<std::size_t>(to)];
            auto pos = std::find(rot.begin(), rot.end(), e);
            if (pos == rot.end()) {
                break;
            }
            const int nxt = rot[static_cast<std::size_t>((pos - rot.begin() + 1) % 3)];
            const auto& ned = g.edge(static_cast<std::size_t>(nxt));
            dart = 2 * static_cast<std::size_t>(nxt) + (ned.u == to ? 0 : 1);
        }
        out.push_back(std::move(cycle));
    }
    return out;
}

ValidationReport validate_colex(const Colex& g) {
    ValidationReport rep;
    const std::size_t n = g.num_vertices();
    const auto& edges = g.edges();

    std::vector<int> degree(n, 0);
    for (const auto& e : edges) {
        ++degree[static_cast<std::size_t>(e.u)];
        ++degree[static_cast<std::size_t>(e.v)];
    }
    {
        std::string bad;
        for (std::size_t v = 0; v < n && bad.empty(); ++v) {
            if (degree[v] != 3) {
                bad = "vertex " + std::to_string(v) + " has degree " + std::to_string(degree[v]);
            }
        }
        rep.add("trivalent", bad.empty(), bad);
    }
    {
        std::string bad;
        for (std::size_t e = 0; e < edges.size() && bad.empty(); ++e) {
            if (edges[e].u == edges[e].v) {
                bad = "edge " + std::to_string(e) + " is a loop at vertex " + std::to_string(edges[e].u);
            }
        }
        rep.add("no-self-loops", bad.empty(), bad);
    }
    {
        std::map<std::pair<int, int>, std::size_t> first;
        std::string bad;
        for (std::size_t e = 0; e < edges.size() && bad.empty(); ++e) {
            auto [it, inserted] = first.try_emplace(key(edges[e].u, edges[e].v), e);
            if (!inserted) {
                bad = "edges " + std::to_string(it->second) + " and " + std::to_string(e) + " both join vertices " +
                      std::to_string(it->first.first) + " and " + std::to_string(it->first.second);
            }
        }
        rep.add("no-parallel-edges", bad.empty(), bad);
    }
    {
        std::vector<std::array<int, 3>> colors(n, {0, 0, 0});
        for (const auto& e : edges) {
            ++colors[static_cast<std::size_t>(e.u)][index(e.color)];
            ++colors[static_cast<std::size_t>(e.v)][index(e.color)];
        }
        std::string bad;
        for (std::size_t v = 0; v < n && bad.empty(); ++v) {
            if (colors[v] != std::array<int, 3>{1, 1, 1}) {
                bad = "vertex " + std::to_string(v) + " does not see one edge of each color";
            }
        }
        rep.add("edge-colors-at-vertex", bad.empty(), bad);
    }
    bool rotation_ok = true;
    {
        std::vector<std::vector<int>> incident(n);
        for (std::size_t e = 0; e < edges.size(); ++e) {
            incident[static_cast<std::size_t>(edges[e].u)].push_back(static_cast<int>(e));
            if (edges[e].v != edges[e].u) {
                incident[static_cast<std::size_t>(edges[e].v)].push_back(static_cast<int>(e));
            }
        }
        std::string bad;
        for (std::size_t v = 0; v < n && bad.empty(); ++v) {
            std::vector<int> rot(g.rotation()[v].begin(), g.rotation()[v].end());
            std::sort(rot.begin(), rot.end());
            std::sort(incident[v].begin(), incident[v].end());
            if (rot != incident[v]) {
                bad = "rotation at vertex " + std::to_string(v) + " is not a cyclic order of its incident edges";
            }
        }
        rotation_ok = bad.empty();
        rep.add("rotation-system", rotation_ok, bad);
    }
    bool boundaries_ok = true;
    {
        std::string bad;
        for (std::size_t f = 0; f < g.num_faces() && bad.empty(); ++f) {
            const auto& face = g.face(f);
            const auto& b = face.boundary;
            if (b.size() < 4 || b.size() % 2 != 0) {
                bad = "face " + std::to_string(f) + " has boundary length " + std::to_string(b.size());
                break;
            }
            std::vector<Color> seq;
            for (std::size_t i = 0; i < b.size() && bad.empty(); ++i) {
                const int e = g.edge_between(b[i], b[(i + 1) % b.size()]);
                if (e < 0) {
                    bad = "face " + std::to_string(f) + ": vertices " + std::to_string(b[i]) + " and " +
                          std::to_string(b[(i + 1) % b.size()]) + " are not adjacent";
                } else {
                    seq.push_back(g.edge(static_cast<std::size_t>(e)).color);
                }
            }
            for (std::size_t i = 0; i < seq.size() && bad.empty(); ++i) {
                if (seq[i] == face.color || seq[i] == seq[(i + 1) % seq.size()]) {
                    bad = "face " + std::to_string(f) + " boundary does not alternate between the two other colors";
                }
            }
        }
        boundaries_ok = bad.empty();
        rep.add("face-boundaries", boundaries_ok, bad);
    }
    {
        // Every directed edge is used by exactly one face.
        std::map<std::pair<int, int>, int> uses;
        for (const auto& face : g.faces()) {
            const auto& b = face.boundary;
            for (std::size_t i = 0; i < b.size(); ++i) {
                ++uses[{b[i], b[(i + 1) % b.size()]}];
            }
        }
        std::string bad;
        for (std::size_t e = 0; e < edges.size() && bad.empty(); ++e) {
            const int fw = uses[{edges[e].u, edges[e].v}];
            const int bw = uses[{edges[e].v, edges[e].u}];
            if (fw != 1 || bw != 1) {
                bad = "edge " + std::to_string(e) + " is traversed " + std::to_string(fw) + "/" + std::to_string(bw) +
                      " times by face boundaries";
            }
        }
        if (bad.empty() && uses.size() != 2 * edges.size()) {
            bad = "face boundaries traverse pairs that are not edges";
        }
        rep.add("two-cell-embedding", bad.empty(), bad);
    }
    {
        std::string bad;
        if (!rotation_ok) {
            bad = "skipped: rotation system invalid";
        } else {
            std::vector<std::vector<int>> traced;
            for (auto& c : trace_faces(g)) {
                traced.push_back(canonical_cycle(c));
            }
            std::vector<std::vector<int>> stored;
            for (const auto& face : g.faces()) {
                stored.push_back(canonical_cycle(face.boundary));
            }
            std::sort(traced.begin(), traced.end());
            std::sort(stored.begin(), stored.end());
            if (traced != stored) {
                for (std::size_t f = 0; f < g.num_faces(); ++f) {
                    if (!std::binary_search(traced.begin(), traced.end(), canonical_cycle(g.face(f).boundary))) {
                        bad = "face " + std::to_string(f) + " is not a face orbit of the rotation system";
                        break;
                    }
                }
                if (bad.empty()) {
                    bad = "rotation system has face orbits not listed among the faces";
                }
            }
        }
        rep.add("faces-match-rotation", bad.empty(), bad);
    }
    {
        std::vector<std::array<int, 3>> corners(n, {0, 0, 0});
        for (const auto& face : g.faces()) {
            for (int v : face.boundary) {
                ++corners[static_cast<std::size_t>(v)][index(face.color)];
            }
        }
        std::string bad;
        for (std::size_t v = 0; v < n && bad.empty(); ++v) {
            if (corners[v] != std::array<int, 3>{1, 1, 1}) {
                bad = "vertex " + std::to_string(v) + " does not lie on exactly one face of each color";
            }
        }
        rep.add("vertex-face-colors", bad.empty(), bad);
    }
    {
        std::string bad;
        if (boundaries_ok) {
            std::map<std::pair<int, int>, Color> side;
            for (const auto& face : g.faces()) {
                const auto& b = face.boundary;
                for (std::size_t i = 0; i < b.size(); ++i) {
                    side[{b[i], b[(i + 1) % b.size()]}] = face.color;
                }
            }
            for (std::size_t e = 0; e < edges.size() && bad.empty(); ++e) {
                auto a = side.find({edges[e].u, edges[e].v});
                auto b = side.find({edges[e].v, edges[e].u});
                if (a != side.end() && b != side.end() && a->second == b->second) {
                    bad = "edge " + std::to_string(e) + " separates two faces of the same color";
                }
            }
        } else {
            bad = "skipped: face boundaries invalid";
        }
        rep.add("adjacent-faces-differ", bad.empty(), bad);
    }
    {
        const int chi = g.euler_characteristic();
        const int expected = 2 - 2 * g.genus();
        rep.add("euler-characteristic", chi == expected,
                "V-E+F=" + std::to_string(chi) + ", 2-2g=" + std::to_string(expected));
    }
    return rep;
}

void require_valid(const Colex& g) {
    auto rep = validate_colex(g);
    if (!rep.all_passed()) {
        std::string msg = "invalid colex:";
        for (const auto& f : rep.failures()) {
            msg += "\n  " + f;
        }
        throw ValidationError(msg);
    }
}

std::string save_colex(const Colex& g) {
    std::ostringstream out;
    out << "{\n";
    out << "  \"genus\": " << g.genus() << ",\n";
    out << "  \"vertices\": " << g.num_vertices() << ",\n";
    out << "  \"lattice\": "
        << json{{"family", g.info().family}, {"rows", g.info().rows}, {"cols", g.info().cols}}.dump() << ",\n";
    out << "  \"edges\": [";
    for (std::size_t e = 0; e < g.num_edges(); ++e) {
        const auto& ed = g.edge(e);
        out << (e == 0 ? "\n    " : ",\n    ") << json::array({ed.u, ed.v, to_string(ed.color)}).dump();
    }
    out << "\n  ],\n  \"faces\": [";
    for (std::size_t f = 0; f < g.num_faces(); ++f) {
        const auto& face = g.face(f);
        out << (f == 0 ? "\n    " : ",\n    ")
            << json{{"color", to_string(face.color)}, {"boundary", face.boundary}}.dump();
    }
    out << "\n  ],\n  \"rotation\": [";
    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
        out << (v == 0 ? "\n    " : ",\n    ") << json(g.rotation()[v]).dump();
    }
    out << "\n  ]\n}\n";
    return out.str();
}

namespace {

const json& field(const json& obj, const char* name, const std::string& where) {
    if (!obj.is_object() || !obj.contains(name)) {
        throw ParseError(where + ": missing '" + name + "'");
    }
    return obj.at(name);
}

int as_int(const json& j, const std::string& where) {
    if (!j.is_number_integer()) {
        throw ParseError(where + ": expected an integer");
    }
    return j.get<int>();
}

Color as_color(const json& j, const std::string& where) {
    if (!j.is_string()) {
        throw ParseError(where + ": expected a color string");
    }
    auto c = parse_color(j.get<std::string>());
    if (!c) {
        throw ParseError(where + ": unknown color '" + j.get<std::string>() + "' (expected r, g or b)");
    }
    return *c;
}

}  // namespace

Colex load_colex(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("lattice JSON: ") + e.what());
    }
    const int genus = as_int(field(doc, "genus", "document"), "genus");
    const int n = as_int(field(doc, "vertices", "document"), "vertices");
    if (n < 0) {
        throw ParseError("vertices: must be non-negative");
    }
    LatticeInfo info;
    if (doc.contains("lattice")) {
        const auto& l = doc.at("lattice");
        info.family = field(l, "family", "lattice").get<std::string>();
        info.rows = as_int(field(l, "rows", "lattice"), "lattice.rows");
        info.cols = as_int(field(l, "cols", "lattice"), "lattice.cols");
    }
    std::vector<ColexEdge> edges;
    const auto& je = field(doc, "edges", "document");
    if (!je.is_array()) {
        throw ParseError("edges: expected an array");
    }
    for (std::size_t i = 0; i < je.size(); ++i) {
        const std::string where = "edges[" + std::to_string(i) + "]";
        const auto& item = je[i];
        if (!item.is_array() || item.size() != 3) {
            throw ParseError(where + ": expected [u, v, color]");
        }
        edges.push_back({as_int(item[0], where + "[0]"), as_int(item[1], where + "[1]"), as_color(item[2], where + "[2]")});
    }
    std::vector<ColexFace> faces;
    const auto& jf = field(doc, "faces", "document");
    if (!jf.is_array()) {
        throw ParseError("faces: expected an array");
    }
    for (std::size_t i = 0; i < jf.size(); ++i) {
        const std::string where = "faces[" + std::to_string(i) + "]";
        ColexFace face;
        face.color = as_color(field(jf[i], "color", where), where + ".color");
        const auto& b = field(jf[i], "boundary", where);
        if (!b.is_array()) {
            throw ParseError(where + ".boundary: expected an array");
        }
        for (std::size_t k = 0; k < b.size(); ++k) {
            face.boundary.push_back(as_int(b[k], where + ".boundary[" + std::to_string(k) + "]"));
        }
        faces.push_back(std::move(face));
    }
    std::vector<std::array<int, 3>> rotation;
    const auto& jr = field(doc, "rotation", "document");
    if (!jr.is_array()) {
        throw ParseError("rotation: expected an array");
    }
    for (std::size_t i = 0; i < jr.size(); ++i) {
        const std::string where = "rotation[" + std::to_string(i) + "]";
        if (!jr[i].is_array() || jr[i].size() != 3) {
            throw ParseError(where + ": expected three edge ids");
        }
        rotation.push_back({as_int(jr[i][0], where), as_int(jr[i][1], where), as_int(jr[i][2], where)});
    }
    Colex g(genus, static_cast<std::size_t>(n), std::move(edges), std::move(faces), std::move(rotation), std::move(info));
    require_valid(g);
    return g;
}

Colex load_colex_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open lattice file '" + path + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return load_colex(buf.str());
}

void save_colex_file(const Colex& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw Error("cannot write lattice file '" + path + "'");
    }
    out << save_colex(g);
}

}  // namespace ccsurf
