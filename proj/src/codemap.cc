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

#include "ccsurf/codemap.h"

#include <algorithm>
#include <exception>
#include <fstream>
#include <random>
#include <sstream>

#include "ccsurf/error.h"

namespace ccsurf {

namespace {

std::string face_tag(int f) { return "face " + std::to_string(f); }

// Admissible v_1 positions of a c''-face: boundary positions whose outgoing
// edge in stored order has color c, sorted by vertex id.
std::vector<std::size_t> admissible_starts(const Colex& g, const ColexFace& face, Color c) {
    const auto& b = face.boundary;
    std::vector<std::size_t> starts;
    for (std::size_t s = 0; s < b.size(); ++s) {
        const int e = g.edge_between(b[s], b[(s + 1) % b.size()]);
        if (e >= 0 && g.edge(static_cast<std::size_t>(e)).color == c) {
            starts.push_back(s);
        }
    }
    std::sort(starts.begin(), starts.end(), [&](std::size_t a, std::size_t z) { return b[a] < b[z]; });
    return starts;
}

PauliOp face_stabilizer(const Colex& g, const FaceLabels& lab, char which) {
    PauliOp p(color_space(g));
    for (int v : lab.v) {
        if (which == 'X' || which == 'Y') {
            p.x().set(static_cast<std::size_t>(v));
        }
        if (which == 'Z' || which == 'Y') {
            p.z().set(static_cast<std::size_t>(v));
        }
    }
    return p;
}

PauliOp splitter_op(const Colex& g, const FaceLabels& lab, Splitter s) {
    if (s == Splitter::I) {
        return PauliOp(color_space(g));
    }
    return face_stabilizer(g, lab, to_char(s));
}

// Z-type plaquette of a surface face on one copy; edges met twice cancel.
PauliOp plaquette(const SurfaceGraph& sg, int copy, int face) {
    PauliOp p(surface_pair_space(sg));
    const std::size_t off = copy == 1 ? 0 : sg.num_edges();
    for (int e : sg.faces[static_cast<std::size_t>(face)].edges) {
        p.z().flip(off + static_cast<std::size_t>(e));
    }
    return p;
}

PauliOp star(const SurfaceGraph& sg, int copy, int vertex) {
    PauliOp p(surface_pair_space(sg));
    const std::size_t off = copy == 1 ? 0 : sg.num_edges();
    for (const auto& h : sg.rotation[static_cast<std::size_t>(vertex)]) {
        p.x().flip(off + static_cast<std::size_t>(h.edge));
    }
    return p;
}

RowSpace span_of(const std::vector<PauliOp>& ops, std::size_t dim) {
    RowSpace s(dim);
    for (const auto& p : ops) {
        s.insert(p.to_symplectic());
    }
    return s;
}

std::vector<PauliOp> mapped_generators(const CodeMap& cm, const StabilizerCode& color) {
    std::vector<PauliOp> out;
    out.reserve(color.num_generators());
    for (const auto& gen : color.generators()) {
        out.push_back(cm.map.apply(gen));
    }
    return out;
}

}  // namespace

char to_char(Splitter s) {
    switch (s) {
        case Splitter::I:
            return 'I';
        case Splitter::X:
            return 'X';
        case Splitter::Y:
            return 'Y';
        default:
            return 'Z';
    }
}

bool splitters_compatible(Splitter gx, Splitter gz) {
    const bool x_part = gx == Splitter::X || gx == Splitter::Y;
    const bool z_part = gz == Splitter::Z || gz == Splitter::Y;
    return x_part == z_part;
}

PauliOp hopping_operator(const Colex& g, int u, int v, Charge q) {
    const int e = g.edge_between(u, v);
    if (e < 0) {
        throw ValidationError("no edge between vertices " + std::to_string(u) + " and " + std::to_string(v));
    }
    if (g.edge(static_cast<std::size_t>(e)).color != q.color) {
        throw ValidationError("edge " + std::to_string(e) + " has color " +
                              to_string(g.edge(static_cast<std::size_t>(e)).color) + ", cannot move a " +
                              to_string(q.color) + " charge");
    }
    PauliOp p(color_space(g));
    auto& bits = q.type == ChargeType::Electric ? p.z() : p.x();
    bits.set(static_cast<std::size_t>(u));
    bits.set(static_cast<std::size_t>(v));
    return p;
}

MapConventions MapConventions::defaults(const Colex& g, Color c) {
    MapConventions conv;
    conv.color = c;
    for (int f : g.faces_of_color(ColorRoles::for_contraction(c).double_primed)) {
        FaceConvention fc;
        fc.face = f;
        fc.m = static_cast<int>(g.face(static_cast<std::size_t>(f)).half_length());
        conv.faces.push_back(fc);
    }
    return conv;
}

MapConventions MapConventions::random(const Colex& g, Color c, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    MapConventions conv;
    conv.color = c;
    for (int f : g.faces_of_color(ColorRoles::for_contraction(c).double_primed)) {
        const int l = static_cast<int>(g.face(static_cast<std::size_t>(f)).half_length());
        FaceConvention fc;
        fc.face = f;
        fc.base = std::uniform_int_distribution<int>(0, l - 1)(rng);
        fc.m = std::uniform_int_distribution<int>(1, l)(rng);
        fc.gx = static_cast<Splitter>(std::uniform_int_distribution<int>(0, 3)(rng));
        const bool needs_z = fc.gx == Splitter::X || fc.gx == Splitter::Y;
        const bool pick = std::uniform_int_distribution<int>(0, 1)(rng) != 0;
        fc.gz = needs_z ? (pick ? Splitter::Y : Splitter::Z) : (pick ? Splitter::X : Splitter::I);
        conv.faces.push_back(fc);
    }
    return conv;
}

void check_conventions(const Colex& g, const MapConventions& conv) {
    const auto faces = g.faces_of_color(ColorRoles::for_contraction(conv.color).double_primed);
    if (conv.faces.size() != faces.size()) {
        throw ConventionError("expected " + std::to_string(faces.size()) + " face conventions, got " +
                              std::to_string(conv.faces.size()));
    }
    for (std::size_t i = 0; i < faces.size(); ++i) {
        const auto& fc = conv.faces[i];
        if (fc.face != faces[i]) {
            throw ConventionError("face convention " + std::to_string(i) + " names face " + std::to_string(fc.face) +
                                  ", expected " + std::to_string(faces[i]));
        }
        const int l = static_cast<int>(g.face(static_cast<std::size_t>(fc.face)).half_length());
        if (fc.base < 0 || fc.base >= l) {
            throw ConventionError(face_tag(fc.face) + ": base " + std::to_string(fc.base) + " outside [0, " +
                                  std::to_string(l) + ")");
        }
        if (fc.m < 1 || fc.m > l) {
            throw ConventionError(face_tag(fc.face) + ": m = " + std::to_string(fc.m) + " outside [1, " +
                                  std::to_string(l) + "]");
        }
        if (fc.gx > Splitter::Z) {
            throw ConventionError(face_tag(fc.face) + ": unknown splitter for X_1");
        }
        if (fc.gz > Splitter::Z) {
            throw ConventionError(face_tag(fc.face) + ": unknown splitter for Z_2m");
        }
        if (!splitters_compatible(fc.gx, fc.gz)) {
            throw ConventionError(face_tag(fc.face) + ": splitters " + to_char(fc.gx) + "*X1 and " + to_char(fc.gz) +
                                  "*Z2m do not commute");
        }
    }
}

std::vector<FaceLabels> label_faces(const Colex& g, const SurfaceGraph& sg, const MapConventions& conv) {
    check_conventions(g, conv);
    if (sg.contracted != conv.color) {
        throw ConventionError("surface graph was contracted along a different color");
    }
    std::vector<FaceLabels> out;
    out.reserve(conv.faces.size());
    for (const auto& fc : conv.faces) {
        const auto& face = g.face(static_cast<std::size_t>(fc.face));
        const auto starts = admissible_starts(g, face, conv.color);
        const std::size_t len = face.boundary.size();
        if (starts.size() != face.half_length()) {
            throw InternalError(face_tag(fc.face) + ": boundary does not alternate c and c' edges");
        }
        const std::size_t s = starts[static_cast<std::size_t>(fc.base)];
        FaceLabels lab;
        lab.face = fc.face;
        lab.m = fc.m;
        lab.gx = fc.gx;
        lab.gz = fc.gz;
        for (std::size_t j = 0; j < len; ++j) {
            lab.v.push_back(face.boundary[(s + j) % len]);
        }
        for (std::size_t i = 0; i < len / 2; ++i) {
            lab.e.push_back(sg.tau_vertex[static_cast<std::size_t>(lab.v[2 * i + 1])]);
        }
        out.push_back(std::move(lab));
    }
    return out;
}

PauliOp on_copy(const SurfaceGraph& sg, int copy, const PauliOp& p) {
    if (!(p.space() == surface_space(sg))) {
        throw SpaceMismatchError("expected an operator on the surface code");
    }
    const std::size_t e = sg.num_edges();
    PauliOp out(surface_pair_space(sg));
    const std::size_t off = copy == 1 ? 0 : e;
    for (std::size_t i = 0; i < e; ++i) {
        out.x().set(off + i, p.x().get(i));
        out.z().set(off + i, p.z().get(i));
    }
    return out;
}

PauliOp pair_single(const SurfaceGraph& sg, int copy, int edge, char which) {
    const std::size_t off = copy == 1 ? 0 : sg.num_edges();
    return PauliOp::single(surface_pair_space(sg), off + static_cast<std::size_t>(edge), which);
}

FaceBasis face_basis(const Colex& g, const SurfaceGraph& sg, const FaceLabels& lab) {
    const auto roles = ColorRoles::for_contraction(sg.contracted);
    const auto charges = ChargeAssignment::for_contraction(sg.contracted);
    const Charge eps_c{ChargeType::Electric, roles.contracted};
    const Charge mu_c{ChargeType::Magnetic, roles.contracted};
    const Charge eps_p{ChargeType::Electric, roles.primed};
    const Charge mu_p{ChargeType::Magnetic, roles.primed};
    const int l = static_cast<int>(lab.half_length());
    const auto v = [&](int j) { return lab.v[static_cast<std::size_t>((j - 1) % (2 * l))]; };
    const auto e = [&](int i) { return lab.e[static_cast<std::size_t>((i - 1) % l)]; };
    const auto pair_xx = [&](int copy, int i) {
        return pair_single(sg, copy, e(i), 'X') * pair_single(sg, copy, e(i + 1), 'X');
    };
    const auto name = [](char t, int a, int b) {
        return std::string(1, t) + std::to_string(a) + std::string(1, t) + std::to_string(b);
    };

    FaceBasis fb;
    for (int i = 1; i <= l; ++i) {
        fb.sources.push_back(hopping_operator(g, v(2 * i - 1), v(2 * i), eps_c));
        fb.targets.push_back(pair_single(sg, charges.copy_of(eps_c), e(i), 'Z'));
        fb.names.push_back(name('Z', 2 * i - 1, 2 * i));
    }
    for (int i = 1; i <= l; ++i) {
        fb.sources.push_back(hopping_operator(g, v(2 * i - 1), v(2 * i), mu_c));
        fb.targets.push_back(pair_single(sg, charges.copy_of(mu_c), e(i), 'Z'));
        fb.names.push_back(name('X', 2 * i - 1, 2 * i));
    }
    for (int i = 1; i < l; ++i) {
        fb.sources.push_back(hopping_operator(g, v(2 * i), v(2 * i + 1), eps_p));
        fb.targets.push_back(pair_xx(charges.copy_of(eps_p), i));
        fb.names.push_back(name('Z', 2 * i, 2 * i + 1));
    }
    for (int i = 1; i <= l; ++i) {
        if (i == lab.m) {
            continue;
        }
        fb.sources.push_back(hopping_operator(g, v(2 * i), v(2 * i + 1), mu_p));
        fb.targets.push_back(pair_xx(charges.copy_of(mu_p), i));
        fb.names.push_back(name('X', 2 * i, (2 * i) % (2 * l) + 1));
    }
    fb.sources.push_back(splitter_op(g, lab, lab.gx) * PauliOp::single(color_space(g), v(1), 'X'));
    fb.targets.push_back(pair_single(sg, 1, e(1), 'X'));
    fb.names.push_back(std::string(1, to_char(lab.gx)) + "*X1");
    fb.sources.push_back(splitter_op(g, lab, lab.gz) * PauliOp::single(color_space(g), v(2 * lab.m), 'Z'));
    fb.targets.push_back(pair_single(sg, 2, e(lab.m), 'X'));
    fb.names.push_back(std::string(1, to_char(lab.gz)) + "*Z" + std::to_string(2 * lab.m));
    return fb;
}

namespace {

// Images of the face's single-qubit Paulis: first X_{v_1..v_2l}, then Z.
std::vector<BitVec> solve_face(const Colex& g, const SurfaceGraph& sg, const FaceLabels& lab) {
    const auto fb = face_basis(g, sg, lab);
    const std::size_t q = lab.v.size();
    if (fb.sources.size() != 2 * q) {
        throw InternalError(face_tag(lab.face) + ": face basis has the wrong size");
    }
    Gf2Matrix b(2 * q, 2 * q);
    for (std::size_t r = 0; r < 2 * q; ++r) {
        for (std::size_t j = 0; j < q; ++j) {
            const auto vq = static_cast<std::size_t>(lab.v[j]);
            b.set(r, j, fb.sources[r].x().get(vq));
            b.set(r, q + j, fb.sources[r].z().get(vq));
        }
    }
    Gf2Matrix inv;
    try {
        inv = invert(b);
    } catch (const SingularMatrixError&) {
        throw InternalError(face_tag(lab.face) + ": hopping and splitting operators are dependent");
    }
    std::vector<BitVec> images(2 * q, BitVec(fb.targets.front().to_symplectic().size()));
    for (std::size_t j = 0; j < 2 * q; ++j) {
        for (std::size_t k = 0; k < 2 * q; ++k) {
            if (inv.get(j, k)) {
                images[j] ^= fb.targets[k].to_symplectic();
            }
        }
    }
    return images;
}

}  // namespace

CodeMap build_map(const Colex& g, const MapConventions& conv) {
    require_valid(g);
    auto sg = contract(g, conv.color);
    auto labels = label_faces(g, sg, conv);
    const std::size_t n = g.num_vertices();

    std::vector<std::vector<BitVec>> per_face(labels.size());
    std::vector<std::exception_ptr> errors(labels.size());
    const auto count = static_cast<long>(labels.size());
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < count; ++i) {
        const auto idx = static_cast<std::size_t>(i);
        try {
            per_face[idx] = solve_face(g, sg, labels[idx]);
        } catch (...) {
            errors[idx] = std::current_exception();
        }
    }
    for (const auto& err : errors) {
        if (err) {
            std::rethrow_exception(err);
        }
    }

    std::vector<BitVec> columns(2 * n);
    std::vector<bool> seen(2 * n, false);
    for (std::size_t i = 0; i < labels.size(); ++i) {
        const std::size_t q = labels[i].v.size();
        for (std::size_t j = 0; j < q; ++j) {
            const auto v = static_cast<std::size_t>(labels[i].v[j]);
            columns[v] = per_face[i][j];
            columns[n + v] = per_face[i][q + j];
            seen[v] = seen[n + v] = true;
        }
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
        throw InternalError("c'' faces do not cover every vertex");
    }
    const Gf2Matrix m = Gf2Matrix(std::move(columns), 2 * n).transpose();
    SymplecticMap map(m, color_space(g), surface_pair_space(sg));
    return CodeMap{g, std::move(sg), conv, std::move(labels), std::move(map)};
}

ValidationReport verify_hopping_images(const CodeMap& cm) {
    ValidationReport rep;
    std::string hop_fail;
    std::string split_fail;
    std::string anti_fail;
    std::size_t hoppers = 0;
    for (const auto& lab : cm.labels) {
        const auto fb = face_basis(cm.colex, cm.surface, lab);
        const std::size_t split = fb.sources.size() - 2;
        for (std::size_t k = 0; k < fb.sources.size(); ++k) {
            if (cm.map.apply(fb.sources[k]) == fb.targets[k]) {
                continue;
            }
            auto& slot = k < split ? hop_fail : split_fail;
            if (slot.empty()) {
                slot = face_tag(lab.face) + ": image of " + fb.names[k] + " is " + cm.map.apply(fb.sources[k]).str();
            }
        }
        hoppers += split;

        const auto space = color_space(cm.colex);
        const auto& v = lab.v;
        const auto m2 = static_cast<std::size_t>(2 * lab.m);
        const auto z1z2 = PauliOp::single(space, v[0], 'Z') * PauliOp::single(space, v[1], 'Z');
        const auto xx = PauliOp::single(space, v[m2 - 2], 'X') * PauliOp::single(space, v[m2 - 1], 'X');
        const auto pre1 = cm.map.preimage(pair_single(cm.surface, 1, lab.e[0], 'X'));
        const auto pre2 = cm.map.preimage(pair_single(cm.surface, 2, lab.e[static_cast<std::size_t>(lab.m - 1)], 'X'));
        if (anti_fail.empty() && !(symplectic_product(pre1, z1z2) && symplectic_product(pre2, xx))) {
            anti_fail = face_tag(lab.face) + ": splitting preimages miss their partner hoppers";
        }
    }
    rep.add("hopping-images", hop_fail.empty(), hop_fail.empty() ? std::to_string(hoppers) + " hoppers" : hop_fail);
    rep.add("splitting-images", split_fail.empty(), split_fail);
    rep.add("splitting-anticommutation", anti_fail.empty(), anti_fail);
    return rep;
}

ValidationReport verify_hopping_independence(const CodeMap& cm) {
    ValidationReport rep;
    const auto& g = cm.colex;
    const auto roles = ColorRoles::for_contraction(cm.conventions.color);
    const std::size_t dim = 2 * cm.map.codomain().qubits;
    std::string all_fail;
    std::string indep_fail;
    std::string basis_fail;
    std::string decomp_fail;
    for (const auto& lab : cm.labels) {
        const std::size_t l = lab.half_length();
        const auto& b = g.face(static_cast<std::size_t>(lab.face)).boundary;
        std::vector<PauliOp> all;
        PauliOp c_edge_product(color_space(g));
        for (std::size_t k = 0; k < b.size(); ++k) {
            const int u = b[k];
            const int w = b[(k + 1) % b.size()];
            const Color col = g.edge(static_cast<std::size_t>(g.edge_between(u, w))).color;
            const auto eps = hopping_operator(g, u, w, {ChargeType::Electric, col});
            all.push_back(cm.map.apply(eps));
            all.push_back(cm.map.apply(hopping_operator(g, u, w, {ChargeType::Magnetic, col})));
            if (col == roles.contracted) {
                c_edge_product *= eps;
            }
        }
        const auto tag = face_tag(lab.face) + " (l=" + std::to_string(l) + "): rank ";
        const std::size_t r_all = span_of(all, dim).rank();
        if (r_all != 4 * l - 2 && all_fail.empty()) {
            all_fail = tag + std::to_string(r_all);
        }
        const auto fb = face_basis(g, cm.surface, lab);
        std::vector<PauliOp> images;
        for (const auto& s : fb.sources) {
            images.push_back(cm.map.apply(s));
        }
        const std::size_t r_full = span_of(images, dim).rank();
        images.resize(images.size() - 2);
        const std::size_t r_indep = span_of(images, dim).rank();
        if ((images.size() != 4 * l - 2 || r_indep != 4 * l - 2) && indep_fail.empty()) {
            indep_fail = tag + std::to_string(r_indep) + " over " + std::to_string(images.size()) + " operators";
        }
        if (r_full != 4 * l && basis_fail.empty()) {
            basis_fail = tag + std::to_string(r_full);
        }
        if (!(c_edge_product == face_stabilizer(g, lab, 'Z')) && decomp_fail.empty()) {
            decomp_fail = face_tag(lab.face) + ": c-edge electric hoppers do not multiply to B^Z";
        }
    }
    const auto faces = std::to_string(cm.labels.size()) + " faces";
    rep.add("elementary-hopper-rank", all_fail.empty(), all_fail.empty() ? faces : all_fail);
    rep.add("independent-hopper-rank", indep_fail.empty(), indep_fail.empty() ? faces : indep_fail);
    rep.add("basis-completeness", basis_fail.empty(), basis_fail.empty() ? faces : basis_fail);
    rep.add("stabilizer-decomposition", decomp_fail.empty(), decomp_fail);
    return rep;
}

ValidationReport verify_commutation(const SymplecticMap& m, std::size_t samples, std::uint64_t seed) {
    ValidationReport rep;
    rep.add("symplectic-form", is_symplectic(m));

    const std::size_t n = m.domain().qubits;
    std::vector<PauliOp> basis;
    std::vector<PauliOp> images;
    for (char t : {'X', 'Z'}) {
        for (std::size_t q = 0; q < n; ++q) {
            basis.push_back(PauliOp::single(m.domain(), q, t));
            images.push_back(m.apply(basis.back()));
        }
    }
    std::string basis_fail;
    for (std::size_t i = 0; i < basis.size() && basis_fail.empty(); ++i) {
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (symplectic_product(basis[i], basis[j]) != symplectic_product(images[i], images[j])) {
                basis_fail = basis[i].str() + " vs " + basis[j].str();
                break;
            }
        }
    }
    rep.add("single-qubit-pairs", basis_fail.empty(),
            basis_fail.empty() ? std::to_string(basis.size() * basis.size()) + " pairs" : basis_fail);

    std::mt19937_64 rng(seed);
    const auto draw = [&] {
        PauliOp p(m.domain());
        for (std::size_t q = 0; q < n; ++q) {
            const auto r = rng();
            p.x().set(q, r & 1);
            p.z().set(q, (r >> 1) & 1);
        }
        return p;
    };
    std::string random_fail;
    for (std::size_t s = 0; s < samples; ++s) {
        const auto a = draw();
        const auto b = draw();
        if (symplectic_product(a, b) != symplectic_product(m.apply(a), m.apply(b)) && random_fail.empty()) {
            random_fail = "sample " + std::to_string(s);
        }
    }
    rep.add("random-pairs", random_fail.empty(),
            random_fail.empty() ? std::to_string(samples) + " pairs" : random_fail);
    return rep;
}

ValidationReport verify_stabilizer_images(const CodeMap& cm) {
    ValidationReport rep;
    const auto& g = cm.colex;
    const auto& sg = cm.surface;
    const auto color = color_code(g);
    const auto pair = surface_pair_code(sg);
    const std::size_t dim = 2 * pair.num_qubits();

    std::string member_fail;
    for (std::size_t i = 0; i < color.num_generators(); ++i) {
        if (!pair.contains(cm.map.apply(color.generator(i))) && member_fail.empty()) {
            member_fail = color.origins()[i].str();
        }
    }
    rep.add("generator-membership", member_fail.empty(),
            member_fail.empty() ? std::to_string(color.num_generators()) + " generators" : member_fail);

    std::vector<PauliOp> plaquettes;
    for (int copy : {1, 2}) {
        for (std::size_t f = 0; f < sg.num_faces(); ++f) {
            plaquettes.push_back(plaquette(sg, copy, static_cast<int>(f)));
        }
    }
    const auto plaquette_span = span_of(plaquettes, dim);

    const std::size_t half = g.num_faces();
    std::string pz_fail;
    std::string px_fail;
    std::string vz_fail;
    std::string vx_fail;
    for (std::size_t f = 0; f < g.num_faces(); ++f) {
        const auto img_x = cm.map.apply(color.generator(f));
        const auto img_z = cm.map.apply(color.generator(half + f));
        if (g.face(f).color != cm.conventions.color) {
            const int sf = sg.tau_face[f];
            if (!(img_z == plaquette(sg, 1, sf)) && pz_fail.empty()) {
                pz_fail = face_tag(static_cast<int>(f)) + ": " + img_z.str();
            }
            if (!(img_x == plaquette(sg, 2, sf)) && px_fail.empty()) {
                px_fail = face_tag(static_cast<int>(f)) + ": " + img_x.str();
            }
        } else {
            const int sv = sg.tau_face_vertex[f];
            if (!plaquette_span.contains((img_z * star(sg, 2, sv)).to_symplectic()) && vz_fail.empty()) {
                vz_fail = face_tag(static_cast<int>(f)) + ": " + img_z.str();
            }
            if (!plaquette_span.contains((img_x * star(sg, 1, sv)).to_symplectic()) && vx_fail.empty()) {
                vx_fail = face_tag(static_cast<int>(f)) + ": " + img_x.str();
            }
        }
    }
    rep.add("plaquette-z-image", pz_fail.empty(), pz_fail);
    rep.add("plaquette-x-image", px_fail.empty(), px_fail);
    rep.add("vertex-z-image", vz_fail.empty(), vz_fail);
    rep.add("vertex-x-image", vx_fail.empty(), vx_fail);
    return rep;
}

ValidationReport verify_equivalence(const CodeMap& cm) {
    ValidationReport rep;
    const auto& g = cm.colex;
    const auto& sg = cm.surface;
    const auto roles = ColorRoles::for_contraction(cm.conventions.color);
    const std::size_t fc = g.count_faces(roles.contracted);
    const std::size_t faces = g.count_faces(roles.primed) + g.count_faces(roles.double_primed);
    const bool counts = sg.num_vertices == fc && 2 * sg.num_edges() == g.num_vertices() && sg.num_faces() == faces;
    std::ostringstream cd;
    cd << "V=" << sg.num_vertices << "/" << fc << " E=" << sg.num_edges() << "/" << g.num_vertices() / 2
       << " F=" << sg.num_faces() << "/" << faces;
    rep.add("counting-identities", counts, cd.str());

    const std::size_t r = rank(cm.map.matrix());
    rep.add("invertible", r == 2 * g.num_vertices() && cm.map.invertible(), "rank " + std::to_string(r));

    rep.append(verify_hopping_images(cm), "hopping/");
    rep.append(verify_hopping_independence(cm), "independence/");
    rep.append(verify_commutation(cm.map), "commutation/");
    rep.append(verify_stabilizer_images(cm), "stabilizers/");

    const auto color = color_code(g);
    const auto pair = surface_pair_code(sg);
    const std::size_t k_color = code_params(color).k;
    const std::size_t k_surface = code_params(surface_code(sg)).k;
    rep.add("logical-qubits", k_color == 2 * k_surface,
            "k=" + std::to_string(k_color) + " vs " + std::to_string(k_surface) + "+" + std::to_string(k_surface));

    const auto images = span_of(mapped_generators(cm, color), 2 * pair.num_qubits());
    bool forward = true;
    for (const auto& gen : color.generators()) {
        forward = forward && pair.contains(cm.map.apply(gen));
    }
    bool backward = true;
    for (const auto& gen : pair.generators()) {
        backward = backward && images.contains(gen.to_symplectic());
    }
    rep.add("stabilizer-group-equality", forward && backward && images.rank() == pair.rank(),
            "rank " + std::to_string(images.rank()) + " vs " + std::to_string(pair.rank()));
    return rep;
}

std::vector<SingleQubitImage> single_qubit_images(const CodeMap& cm) {
    std::vector<SingleQubitImage> out;
    const auto space = color_space(cm.colex);
    for (std::size_t v = 0; v < cm.colex.num_vertices(); ++v) {
        for (char t : {'X', 'Z'}) {
            out.push_back({static_cast<int>(v), t, cm.map.apply(PauliOp::single(space, v, t))});
        }
    }
    return out;
}

ClosedFormCheck verify_closed_forms(const CodeMap& cm) {
    ClosedFormCheck out;
    const auto& sg = cm.surface;
    const auto pair = surface_pair_code(sg);
    const auto space = color_space(cm.colex);

    struct Tally {
        std::size_t total = 0;
        std::size_t exact = 0;
        std::string fail;
    };
    const std::vector<std::string> rules{"z-base",           "z-recursion-even", "z-recursion-odd", "x-base-low",
                                         "x-recursion-low",  "x-base-high",      "x-recursion-high"};
    std::vector<Tally> tally(rules.size());

    for (const auto& lab : cm.labels) {
        const int l = static_cast<int>(lab.half_length());
        const int m = lab.m;
        const auto img = [&](char t, int j) {
            const int jj = ((j - 1) % (2 * l) + 2 * l) % (2 * l);
            return cm.map.apply(PauliOp::single(space, static_cast<std::size_t>(lab.v[static_cast<std::size_t>(jj)]), t));
        };
        const auto e = [&](int i) { return lab.e[static_cast<std::size_t>(((i - 1) % l + l) % l)]; };
        const auto one = [&](int copy, int i, char t) { return pair_single(sg, copy, e(i), t); };
        const auto record = [&](std::size_t rule, const std::string& where, const PauliOp& actual,
                                const PauliOp& expected) {
            auto& t = tally[rule];
            ++t.total;
            if (actual == expected) {
                ++t.exact;
                return;
            }
            const auto tag = face_tag(lab.face) + " " + where;
            if (pair.contains(actual * expected)) {
                out.discrepancies.push_back(rules[rule] + ": " + tag + " holds only up to stabilizers");
            } else if (t.fail.empty()) {
                t.fail = tag + ": got " + actual.str();
            }
        };
        const auto jtag = [](int j) { return "j=" + std::to_string(j); };

        PauliOp base = one(2, 1, 'X');
        for (int i = 1; i <= m; ++i) {
            base *= one(1, i, 'Z');
        }
        record(0, "Z_v1", img('Z', 1), base);
        for (int j = 1; j <= l; ++j) {
            record(1, jtag(j), img('Z', 2 * j), img('Z', 2 * j - 1) * one(1, j, 'Z'));
            record(2, jtag(j), img('Z', 2 * j - 1), img('Z', 2 * j - 2) * one(2, j - 1, 'X') * one(2, j, 'X'));
        }
        record(3, "X_v1", img('X', 1), one(1, 1, 'X'));
        for (int j = 1; j <= m; ++j) {
            record(4, "even " + jtag(j), img('X', 2 * j), img('X', 2 * j - 1) * one(2, j, 'Z'));
            record(4, "odd " + jtag(j), img('X', 2 * j - 1), img('X', 2 * j - 2) * one(1, j - 1, 'X') * one(1, j, 'X'));
        }
        if (m < l) {
            record(5, "X_v2l", img('X', 2 * l), one(1, l, 'X'));
        }
        for (int j = m + 1; j <= l; ++j) {
            record(6, "odd " + jtag(j), img('X', 2 * j - 1), img('X', 2 * j) * one(2, j, 'Z'));
            record(6, "even " + jtag(j), img('X', 2 * j), img('X', 2 * j + 1) * one(1, j, 'X') * one(1, j + 1, 'X'));
        }
    }
    for (std::size_t r = 0; r < rules.size(); ++r) {
        const auto& t = tally[r];
        const std::string detail =
            t.fail.empty() ? std::to_string(t.exact) + "/" + std::to_string(t.total) + " exact" : t.fail;
        out.report.add(rules[r], t.fail.empty(), detail);
    }
    return out;
}

Gf2Matrix basis_change(const CodeMap& cm) {
    const auto color = color_code(cm.colex);
    const auto pair = surface_pair_code(cm.surface);
    const auto images = span_of(mapped_generators(cm, color), 2 * pair.num_qubits());
    Gf2Matrix out(pair.num_generators(), color.num_generators());
    for (std::size_t i = 0; i < pair.num_generators(); ++i) {
        auto combo = images.express(pair.generator(i).to_symplectic());
        if (!combo) {
            throw InternalError("surface generator " + pair.origins()[i].str() +
                                " is not a product of mapped color generators");
        }
        combo->resize(color.num_generators());
        out.row(i) = *combo;
    }
    return out;
}

std::uint64_t colex_fingerprint(const Colex& g) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : save_colex(g)) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    return h;
}

MapArtifact make_artifact(const Colex& g, const MapConventions& conv) {
    auto cm = build_map(g, conv);
    auto bc = basis_change(cm);
    return MapArtifact{std::move(cm), std::move(bc)};
}

namespace {

constexpr char kMagic[8] = {'C', 'C', 'S', 'M', 'A', 'P', '\0', '\0'};

class Writer {
   public:
    void bytes(const void* p, std::size_t len) { out_.append(static_cast<const char*>(p), len); }
    template <typename T>
    void uint(T v) {
        for (std::size_t i = 0; i < sizeof(T); ++i) {
            out_.push_back(static_cast<char>((static_cast<std::uint64_t>(v) >> (8 * i)) & 0xff));
        }
    }
    void matrix(const Gf2Matrix& m) {
        uint<std::uint64_t>(m.rows());
        uint<std::uint64_t>(m.cols());
        for (std::size_t r = 0; r < m.rows(); ++r) {
            for (auto w : m.row(r).words()) {
                uint<std::uint64_t>(w);
            }
        }
    }
    std::string take() { return std::move(out_); }

   private:
    std::string out_;
};

class Reader {
   public:
    explicit Reader(const std::string& in) : in_(in) {}
    void need(std::size_t len, const char* what) {
        if (in_.size() - pos_ < len) {
            throw ParseError(std::string("map file truncated in ") + what);
        }
    }
    std::string bytes(std::size_t len, const char* what) {
        need(len, what);
        auto s = in_.substr(pos_, len);
        pos_ += len;
        return s;
    }
    template <typename T>
    T uint(const char* what) {
        need(sizeof(T), what);
        std::uint64_t v = 0;
        for (std::size_t i = 0; i < sizeof(T); ++i) {
            v |= static_cast<std::uint64_t>(static_cast<unsigned char>(in_[pos_ + i])) << (8 * i);
        }
        pos_ += sizeof(T);
        return static_cast<T>(v);
    }
    Gf2Matrix matrix(const char* what) {
        const auto rows = uint<std::uint64_t>(what);
        const auto cols = uint<std::uint64_t>(what);
        const std::size_t words = (cols + 63) / 64;
        if (rows > 0 && words > 0 && (in_.size() - pos_) / (8 * words) < rows) {
            throw ParseError(std::string("map file truncated in ") + what);
        }
        Gf2Matrix m(rows, cols);
        for (std::size_t r = 0; r < rows; ++r) {
            auto& ws = m.row(r).words();
            for (std::size_t w = 0; w < words; ++w) {
                ws[w] = uint<std::uint64_t>(what);
            }
            if (cols % 64 != 0 && words > 0 && (ws.back() >> (cols % 64)) != 0) {
                throw ParseError(std::string("stray bits past the last column in ") + what);
            }
        }
        return m;
    }
    bool done() const { return pos_ == in_.size(); }

   private:
    const std::string& in_;
    std::size_t pos_ = 0;
};

}  // namespace

std::string save_map(const MapArtifact& a) {
    const auto& cm = a.code_map;
    Writer w;
    w.bytes(kMagic, sizeof kMagic);
    w.uint<std::uint32_t>(kMapFormatVersion);
    w.uint<std::uint32_t>(static_cast<std::uint32_t>(index(cm.conventions.color)));
    w.uint<std::uint64_t>(cm.colex.num_vertices());
    w.uint<std::uint64_t>(colex_fingerprint(cm.colex));
    w.uint<std::uint32_t>(static_cast<std::uint32_t>(cm.conventions.faces.size()));
    for (const auto& fc : cm.conventions.faces) {
        w.uint<std::uint32_t>(static_cast<std::uint32_t>(fc.face));
        w.uint<std::uint32_t>(static_cast<std::uint32_t>(fc.base));
        w.uint<std::uint32_t>(static_cast<std::uint32_t>(fc.m));
        w.uint<std::uint8_t>(static_cast<std::uint8_t>(fc.gx));
        w.uint<std::uint8_t>(static_cast<std::uint8_t>(fc.gz));
    }
    const auto json = save_colex(cm.colex);
    w.uint<std::uint64_t>(json.size());
    w.bytes(json.data(), json.size());
    w.matrix(cm.map.matrix());
    w.matrix(a.basis_change);
    return w.take();
}

MapArtifact load_map(const std::string& bytes) {
    Reader r(bytes);
    if (r.bytes(sizeof kMagic, "header") != std::string(kMagic, sizeof kMagic)) {
        throw ParseError("not a map file (bad magic)");
    }
    const auto version = r.uint<std::uint32_t>("header");
    if (version != kMapFormatVersion) {
        throw ParseError("unsupported map format version " + std::to_string(version));
    }
    const auto color = r.uint<std::uint32_t>("header");
    if (color > 2) {
        throw ParseError("bad contraction color " + std::to_string(color));
    }
    const auto n = r.uint<std::uint64_t>("header");
    const auto fingerprint = r.uint<std::uint64_t>("header");
    MapConventions conv;
    conv.color = static_cast<Color>(color);
    const auto faces = r.uint<std::uint32_t>("conventions");
    for (std::uint32_t i = 0; i < faces; ++i) {
        FaceConvention fc;
        fc.face = static_cast<int>(r.uint<std::uint32_t>("conventions"));
        fc.base = static_cast<int>(r.uint<std::uint32_t>("conventions"));
        fc.m = static_cast<int>(r.uint<std::uint32_t>("conventions"));
        fc.gx = static_cast<Splitter>(r.uint<std::uint8_t>("conventions"));
        fc.gz = static_cast<Splitter>(r.uint<std::uint8_t>("conventions"));
        conv.faces.push_back(fc);
    }
    const auto json_len = r.uint<std::uint64_t>("lattice");
    auto g = load_colex(r.bytes(json_len, "lattice"));
    if (colex_fingerprint(g) != fingerprint || g.num_vertices() != n) {
        throw ParseError("embedded lattice does not match the map header");
    }
    auto m = r.matrix("map matrix");
    auto bc = r.matrix("basis change");
    if (!r.done()) {
        throw ParseError("trailing bytes after map file");
    }
    if (m.rows() != 2 * n || m.cols() != 2 * n) {
        throw ParseError("map matrix has the wrong shape");
    }

    auto sg = contract(g, conv.color);
    auto labels = label_faces(g, sg, conv);
    const auto color_gens = 2 * g.num_faces();
    const auto pair_gens = 2 * (sg.num_vertices + sg.num_faces());
    if (bc.rows() != pair_gens || bc.cols() != color_gens) {
        throw ParseError("basis change has the wrong shape");
    }
    SymplecticMap map(std::move(m), color_space(g), surface_pair_space(sg));
    return MapArtifact{CodeMap{std::move(g), std::move(sg), std::move(conv), std::move(labels), std::move(map)},
                       std::move(bc)};
}

void save_map_file(const MapArtifact& a, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error("cannot open " + path + " for writing");
    }
    const auto bytes = save_map(a);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) {
        throw Error("failed writing " + path);
    }
}

MapArtifact load_map_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot open " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return load_map(ss.str());
}

}  // namespace ccsurf
