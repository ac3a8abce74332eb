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

#ifndef CCSURF_CODEMAP_H
#define CCSURF_CODEMAP_H

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ccsurf/colex.h"
#include "ccsurf/contraction.h"
#include "ccsurf/pauli.h"
#include "ccsurf/report.h"
#include "ccsurf/stabilizers.h"

namespace ccsurf {

enum class ChargeType : std::uint8_t { Electric, Magnetic };

struct Charge {
    ChargeType type = ChargeType::Electric;
    Color color = Color::Red;

    bool operator==(const Charge&) const = default;
};

/// Which color-code charge plays the role of each surface-code charge:
/// eps1 = eps_c, mu1 = mu_c', eps2 = mu_c, mu2 = eps_c'.
struct ChargeAssignment {
    Charge eps1;
    Charge mu1;
    Charge eps2;
    Charge mu2;

    static constexpr ChargeAssignment for_contraction(Color c) {
        const Color cp = next(c);
        return {{ChargeType::Electric, c}, {ChargeType::Magnetic, cp}, {ChargeType::Magnetic, c}, {ChargeType::Electric, cp}};
    }

    /// Surface copy (1 or 2) carrying q, or 0 if q takes no part.
    constexpr int copy_of(Charge q) const {
        if (q == eps1 || q == mu1) {
            return 1;
        }
        if (q == eps2 || q == mu2) {
            return 2;
        }
        return 0;
    }
};

/// Moves a charge of color c across the c-edge (u, v): Z_u Z_v for electric
/// charges, X_u X_v for magnetic ones. Throws ValidationError when (u, v) is
/// not an edge of color c.
PauliOp hopping_operator(const Colex& g, int u, int v, Charge q);

/// Multiplier of a splitting operator: one of I, B_f^X, B_f^Y, B_f^Z.
enum class Splitter : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char to_char(Splitter s);

/// Whether gx * X_1 and gz * Z_2m commute.
bool splitters_compatible(Splitter gx, Splitter gz);

/// Per-face choices for one c''-face.
struct FaceConvention {
    int face = 0;
    /// Which admissible starting vertex becomes v_1. The admissible starts
    /// are the boundary vertices whose next edge in stored order has color c,
    /// sorted by vertex id.
    int base = 0;
    /// The c'-edge (v_2m, v_2m+1) whose magnetic hopper is dependent.
    int m = 0;
    /// Multipliers of X_1 and Z_2m. The two splitting preimages must
    /// commute, which holds iff gx has an X part exactly when gz has a Z
    /// part: gx in {I, Z} pairs with gz in {I, X}, gx in {X, Y} with gz in
    /// {Z, Y}.
    Splitter gx = Splitter::I;
    Splitter gz = Splitter::I;

    bool operator==(const FaceConvention&) const = default;
};

struct MapConventions {
    Color color = Color::Red;
    /// One entry per c''-face in ascending face order.
    std::vector<FaceConvention> faces;

    bool operator==(const MapConventions&) const = default;

    /// base 0, m = l_f, identity splitters.
    static MapConventions defaults(const Colex& g, Color c);
    /// Uniform draw over every admissible choice.
    static MapConventions random(const Colex& g, Color c, std::uint64_t seed);
};

/// Throws ConventionError when conv does not fit g.
void check_conventions(const Colex& g, const MapConventions& conv);

/// Vertex labels of one c''-face: v[j] is v_{j+1}, e[i] is tau(v_{2i+2})
/// (the surface edge of the i-th c-edge), m as in the conventions.
struct FaceLabels {
    int face = 0;
    std::vector<int> v;
    std::vector<int> e;
    int m = 0;
    Splitter gx = Splitter::I;
    Splitter gz = Splitter::I;

    std::size_t half_length() const { return e.size(); }
};

std::vector<FaceLabels> label_faces(const Colex& g, const SurfaceGraph& sg, const MapConventions& conv);

/// The 4 l_f - 2 independent elementary hoppers of a face followed by the
/// two splitting operators, and the surface operators they must map to.
struct FaceBasis {
    std::vector<PauliOp> sources;
    std::vector<PauliOp> targets;
    std::vector<std::string> names;
};

FaceBasis face_basis(const Colex& g, const SurfaceGraph& sg, const FaceLabels& labels);

/// Everything one map is built from, plus the map itself. The map sends
/// color-code qubit v to the pair space of the surface code: qubits
/// [0, E) are copy 1 and [E, 2E) copy 2.
struct CodeMap {
    Colex colex;
    SurfaceGraph surface;
    MapConventions conventions;
    std::vector<FaceLabels> labels;
    SymplecticMap map;
};

/// Solves each face's basis for its single-qubit images. Faces are solved
/// in parallel and merged by face index. Throws InternalError if a face
/// basis is singular.
CodeMap build_map(const Colex& g, const MapConventions& conv);

/// Pauli on the pair space acting as p on copy `copy` of the surface.
PauliOp on_copy(const SurfaceGraph& sg, int copy, const PauliOp& p);
/// [P_e]_copy for a single surface edge.
PauliOp pair_single(const SurfaceGraph& sg, int copy, int edge, char which);

ValidationReport verify_hopping_images(const CodeMap& cm);
/// Per face: the images of all 4 l_f elementary hoppers on its boundary
/// span 4 l_f - 2 dimensions, the chosen independent ones too, and adding
/// the splitters completes a basis of size 4 l_f.
ValidationReport verify_hopping_independence(const CodeMap& cm);
/// M Lambda M^T = Lambda, plus direct commutation checks on every pair of
/// single-qubit basis Paulis and on `samples` seeded random pairs.
ValidationReport verify_commutation(const SymplecticMap& m, std::size_t samples = 1000, std::uint64_t seed = 1);
ValidationReport verify_stabilizer_images(const CodeMap& cm);
/// Aggregate of the counting identities, invertibility, commutation,
/// stabilizer images, the k identity and equality of the two stabilizer
/// groups.
ValidationReport verify_equivalence(const CodeMap& cm);

struct SingleQubitImage {
    int vertex = 0;
    char type = 'X';
    PauliOp image;
};

/// Images of X_v and Z_v for every vertex, vertices ascending, X first.
std::vector<SingleQubitImage> single_qubit_images(const CodeMap& cm);

/// Checks the per-face closed forms for single-qubit images: each rule must
/// hold up to surface stabilizers. Rules that hold only up to stabilizers
/// are listed in `discrepancies`.
struct ClosedFormCheck {
    ValidationReport report;
    std::vector<std::string> discrepancies;
};

ClosedFormCheck verify_closed_forms(const CodeMap& cm);

/// Rows express each surface-pair generator as a sum of images of color
/// generators; columns follow the color generator order. Throws
/// InternalError if some surface generator is not reachable.
Gf2Matrix basis_change(const CodeMap& cm);

/// FNV-1a of the canonical JSON form.
std::uint64_t colex_fingerprint(const Colex& g);

inline constexpr std::uint32_t kMapFormatVersion = 1;

/// Map file contents: the map plus the cached basis change.
struct MapArtifact {
    CodeMap code_map;
    Gf2Matrix basis_change;
};

MapArtifact make_artifact(const Colex& g, const MapConventions& conv);
std::string save_map(const MapArtifact& a);
/// Throws ParseError on malformed input.
MapArtifact load_map(const std::string& bytes);
void save_map_file(const MapArtifact& a, const std::string& path);
MapArtifact load_map_file(const std::string& path);

}  // namespace ccsurf

#endif
