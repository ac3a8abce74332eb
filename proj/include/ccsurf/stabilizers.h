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

#ifndef CCSURF_STABILIZERS_H
#define CCSURF_STABILIZERS_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ccsurf/colex.h"
#include "ccsurf/contraction.h"
#include "ccsurf/gf2.h"
#include "ccsurf/pauli.h"

namespace ccsurf {

enum class CodeKind { Color, Surface, SurfacePair };

/// Where a generator came from: a face or a vertex of the underlying
/// lattice, its Pauli type, and for surface pairs which copy (1 or 2).
struct GeneratorOrigin {
    enum class Cell { Face, Vertex };
    Cell cell = Cell::Face;
    int element = 0;
    char type = 'X';
    int copy = 0;

    std::string str() const;
};

/// Over-complete generator list of a stabilizer code. Order is fixed:
/// color codes list every B_f^X (faces ascending) then every B_f^Z; surface
/// codes list every A_v then every B_f; surface pairs list copy 1 then copy 2.
class StabilizerCode {
   public:
    StabilizerCode(QubitSpace space, CodeKind kind, std::vector<PauliOp> generators,
                   std::vector<GeneratorOrigin> origins);

    const QubitSpace& space() const { return space_; }
    std::size_t num_qubits() const { return space_.qubits; }
    CodeKind kind() const { return kind_; }
    const std::vector<PauliOp>& generators() const { return generators_; }
    const PauliOp& generator(std::size_t i) const { return generators_[i]; }
    std::size_t num_generators() const { return generators_.size(); }
    const std::vector<GeneratorOrigin>& origins() const { return origins_; }

    /// GF(2) rank of the generator list.
    std::size_t rank() const { return span_.rank(); }
    /// Stabilizer group membership, phases ignored.
    bool contains(const PauliOp& p) const;
    /// Syndrome-free check: p commutes with every generator.
    bool commutes_with_all(const PauliOp& p) const;
    /// Rows are generators in (x|z) form.
    Gf2Matrix check_matrix() const;
    const RowSpace& span() const { return span_; }

    /// Every generator is pure X or pure Z.
    bool is_css() const;

   private:
    QubitSpace space_;
    CodeKind kind_;
    std::vector<PauliOp> generators_;
    std::vector<GeneratorOrigin> origins_;
    RowSpace span_;
};

StabilizerCode color_code(const Colex& g);
StabilizerCode surface_code(const SurfaceGraph& sg);
/// Two copies of the surface code on sg: qubits [0, E) are copy 1 and
/// [E, 2E) copy 2.
StabilizerCode surface_pair_code(const SurfaceGraph& sg);

/// Qubit spaces used throughout, so Paulis built in different places agree.
QubitSpace color_space(const Colex& g);
QubitSpace surface_space(const SurfaceGraph& sg);
QubitSpace surface_pair_space(const SurfaceGraph& sg);

struct CodeParams {
    std::size_t n = 0;
    std::size_t k = 0;
    /// Only computed for n <= kMaxDistanceQubits.
    std::optional<std::size_t> d;
};

inline constexpr std::size_t kMaxDistanceQubits = 24;

CodeParams code_params(const StabilizerCode& code);

/// Minimum weight of an element of N(S) \ S by exhaustive search. Returns
/// nullopt when n exceeds kMaxDistanceQubits or k == 0.
std::optional<std::size_t> code_distance(const StabilizerCode& code);

/// 2k operators in N(S) independent modulo S.
std::vector<PauliOp> logical_basis(const StabilizerCode& code);

/// Commutation pattern of p against a logical basis, as a bit mask. For p in
/// N(S) the mask is zero iff p is in S.
std::uint64_t logical_class(const std::vector<PauliOp>& logicals, const PauliOp& p);

}  // namespace ccsurf

#endif
