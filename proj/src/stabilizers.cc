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

#include <algorithm>

#include "ccsurf/error.h"

namespace ccsurf {

std::string GeneratorOrigin::str() const {
    std::string s;
    if (cell == Cell::Vertex) {
        s = "A_v" + std::to_string(element);
    } else {
        s = std::string("B") + (copy == 0 ? std::string(1, type) : std::string()) + "_f" + std::to_string(element);
    }
    if (copy != 0) {
        s += "[" + std::to_string(copy) + "]";
    }
    return s;
}

StabilizerCode::StabilizerCode(QubitSpace space, CodeKind kind, std::vector<PauliOp> generators,
                               std::vector<GeneratorOrigin> origins)
    : space_(std::move(space)),
      kind_(kind),
      generators_(std::move(generators)),
      origins_(std::move(origins)),
      span_(2 * space_.qubits) {
    if (origins_.size() != generators_.size()) {
        throw std::invalid_argument("each generator needs an origin");
    }
    for (const auto& gen : generators_) {
        if (!(gen.space() == space_)) {
            throw SpaceMismatchError("generator lives in a different qubit space");
        }
        span_.insert(gen.to_symplectic());
    }
}

bool StabilizerCode::contains(const PauliOp& p) const {
    if (!(p.space() == space_)) {
        throw SpaceMismatchError("membership query in a different qubit space");
    }
    return span_.contains(p.to_symplectic());
}

bool StabilizerCode::commutes_with_all(const PauliOp& p) const {
    return std::none_of(generators_.begin(), generators_.end(),
                        [&](const PauliOp& g) { return symplectic_product(g, p); });
}

Gf2Matrix StabilizerCode::check_matrix() const {
    std::vector<BitVec> rows;
    rows.reserve(generators_.size());
    for (const auto& g : generators_) {
        rows.push_back(g.to_symplectic());
    }
    return Gf2Matrix(std::move(rows), 2 * space_.qubits);
}

bool StabilizerCode::is_css() const {
    return std::all_of(generators_.begin(), generators_.end(),
                       [](const PauliOp& g) { return g.x().none() || g.z().none(); });
}

QubitSpace color_space(const Colex& g) { return {"color", g.num_vertices()}; }
QubitSpace surface_space(const SurfaceGraph& sg) { return {"surface", sg.num_edges()}; }
QubitSpace surface_pair_space(const SurfaceGraph& sg) { return {"surface-pair", 2 * sg.num_edges()}; }

StabilizerCode color_code(const Colex& g) {
    require_valid(g);
    const auto space = color_space(g);
    std::vector<PauliOp> gens;
    std::vector<GeneratorOrigin> origins;
    for (char type : {'X', 'Z'}) {
        for (std::size_t f = 0; f < g.num_faces(); ++f) {
            PauliOp p(space);
            for (int v : g.face(f).boundary) {
                (type == 'X' ? p.x() : p.z()).set(static_cast<std::size_t>(v));
            }
            gens.push_back(std::move(p));
            origins.push_back({GeneratorOrigin::Cell::Face, static_cast<int>(f), type, 0});
        }
    }
    return StabilizerCode(space, CodeKind::Color, std::move(gens), std::move(origins));
}

namespace {

// Vertex and face operators of one copy, written into a space of
// `total` qubits starting at `offset`.
void append_surface_generators(const SurfaceGraph& sg, const QubitSpace& space, std::size_t offset, int copy,
                               std::vector<PauliOp>& gens, std::vector<GeneratorOrigin>& origins) {
    for (std::size_t v = 0; v < sg.num_vertices; ++v) {
        PauliOp p(space);
        for (const auto& h : sg.rotation[v]) {
            p.x().flip(offset + static_cast<std::size_t>(h.edge));
        }
        gens.push_back(std::move(p));
        origins.push_back({GeneratorOrigin::Cell::Vertex, static_cast<int>(v), 'X', copy});
    }
    for (std::size_t f = 0; f < sg.num_faces(); ++f) {
        PauliOp p(space);
        for (int e : sg.faces[f].edges) {
            p.z().flip(offset + static_cast<std::size_t>(e));
        }
        gens.push_back(std::move(p));
        origins.push_back({GeneratorOrigin::Cell::Face, static_cast<int>(f), 'Z', copy});
    }
}

}  // namespace

StabilizerCode surface_code(const SurfaceGraph& sg) {
    const auto space = surface_space(sg);
    std::vector<PauliOp> gens;
    std::vector<GeneratorOrigin> origins;
    append_surface_generators(sg, space, 0, 0, gens, origins);
    return StabilizerCode(space, CodeKind::Surface, std::move(gens), std::move(origins));
}

StabilizerCode surface_pair_code(const SurfaceGraph& sg) {
    const auto space = surface_pair_space(sg);
    std::vector<PauliOp> gens;
    std::vector<GeneratorOrigin> origins;
    append_surface_generators(sg, space, 0, 1, gens, origins);
    append_surface_generators(sg, space, sg.num_edges(), 2, gens, origins);
    return StabilizerCode(space, CodeKind::SurfacePair, std::move(gens), std::move(origins));
}

namespace {

// Calls visit(mask) for every subset of {0..n-1} with exactly w elements, in
// increasing numeric order; stops early when visit returns true.
template <typename Visit>
bool for_each_subset(std::size_t n, std::size_t w, Visit&& visit) {
    if (w == 0 || w > n) {
        return false;
    }
    std::uint32_t mask = (std::uint32_t{1} << w) - 1;
    const std::uint32_t limit = std::uint32_t{1} << n;
    while (mask < limit) {
        if (visit(mask)) {
            return true;
        }
        const std::uint32_t c = mask & (~mask + 1);
        const std::uint32_t r = mask + c;
        mask = (((r ^ mask) >> 2) / c) | r;
    }
    return false;
}

bool is_nontrivial_logical(const StabilizerCode& code, const PauliOp& p) {
    return code.commutes_with_all(p) && !code.contains(p);
}

}  // namespace

std::optional<std::size_t> code_distance(const StabilizerCode& code) {
    const std::size_t n = code.num_qubits();
    if (n > kMaxDistanceQubits || code.rank() >= n) {
        return std::nullopt;
    }
    const bool css = code.is_css();
    for (std::size_t w = 1; w <= n; ++w) {
        const bool found = for_each_subset(n, w, [&](std::uint32_t mask) {
            std::vector<std::size_t> support;
            for (std::size_t q = 0; q < n; ++q) {
                if ((mask >> q) & 1) {
                    support.push_back(q);
                }
            }
            if (css) {
                // For CSS codes some minimum-weight logical is pure X or pure Z.
                for (char t : {'X', 'Z'}) {
                    PauliOp p(code.space());
                    for (auto q : support) {
                        (t == 'X' ? p.x() : p.z()).set(q);
                    }
                    if (is_nontrivial_logical(code, p)) {
                        return true;
                    }
                }
                return false;
            }
            std::size_t combos = 1;
            for (std::size_t i = 0; i < w; ++i) {
                combos *= 3;
            }
            for (std::size_t k = 0; k < combos; ++k) {
                PauliOp p(code.space());
                std::size_t digits = k;
                for (auto q : support) {
                    const std::size_t d = digits % 3;
                    digits /= 3;
                    if (d != 1) {
                        p.x().set(q);
                    }
                    if (d != 0) {
                        p.z().set(q);
                    }
                }
                if (is_nontrivial_logical(code, p)) {
                    return true;
                }
            }
            return false;
        });
        if (found) {
            return w;
        }
    }
    return std::nullopt;
}

CodeParams code_params(const StabilizerCode& code) {
    CodeParams p;
    p.n = code.num_qubits();
    p.k = p.n - code.rank();
    p.d = code_distance(code);
    return p;
}

std::vector<PauliOp> logical_basis(const StabilizerCode& code) {
    const std::size_t n = code.num_qubits();
    // v is in N(S) iff <g, v> = 0 for every generator g, i.e. (g_z | g_x) . v = 0.
    Gf2Matrix swapped(code.num_generators(), 2 * n);
    for (std::size_t i = 0; i < code.num_generators(); ++i) {
        const auto& g = code.generator(i);
        swapped.row(i) = BitVec::concat(g.z(), g.x());
    }
    RowSpace span = code.span();
    std::vector<PauliOp> out;
    for (const auto& v : nullspace(swapped)) {
        if (span.insert(v)) {
            out.push_back(PauliOp::from_symplectic(code.space(), v));
        }
    }
    return out;
}

std::uint64_t logical_class(const std::vector<PauliOp>& logicals, const PauliOp& p) {
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < logicals.size() && i < 64; ++i) {
        if (symplectic_product(logicals[i], p)) {
            mask |= std::uint64_t{1} << i;
        }
    }
    return mask;
}

}  // namespace ccsurf
