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

#ifndef CCSURF_PAULI_H
#define CCSURF_PAULI_H

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "ccsurf/gf2.h"

namespace ccsurf {

/// Nominal qubit index space. Two Paulis can only be combined when their
/// spaces compare equal, so color-code and surface-code operators never mix.
struct QubitSpace {
    std::string name;
    std::size_t qubits = 0;

    bool operator==(const QubitSpace&) const = default;
};

/// Pauli operator in binary symplectic form. Phases are dropped: every
/// statement this library checks is about commutation or stabilizer
/// membership, neither of which depends on the phase.
class PauliOp {
   public:
    PauliOp() = default;
    explicit PauliOp(QubitSpace space);
    PauliOp(QubitSpace space, BitVec x, BitVec z);

    /// Parses a string over {I,X,Y,Z}; Y sets both bits.
    static PauliOp from_string(QubitSpace space, std::string_view text);
    /// Inverse of to_symplectic().
    static PauliOp from_symplectic(QubitSpace space, const BitVec& xz);
    static PauliOp single(QubitSpace space, std::size_t q, char which);

    const QubitSpace& space() const { return space_; }
    std::size_t size() const { return space_.qubits; }
    const BitVec& x() const { return x_; }
    const BitVec& z() const { return z_; }
    BitVec& x() { return x_; }
    BitVec& z() { return z_; }

    bool is_identity() const { return x_.none() && z_.none(); }
    std::size_t weight() const { return (x_ | z_).popcount(); }
    char at(std::size_t q) const;

    /// The length-2n vector (x|z).
    BitVec to_symplectic() const { return BitVec::concat(x_, z_); }

    /// Product up to phase.
    PauliOp& operator*=(const PauliOp& other);
    friend PauliOp operator*(PauliOp a, const PauliOp& b) { return a *= b; }
    bool operator==(const PauliOp&) const = default;

    std::string str() const;

   private:
    QubitSpace space_;
    BitVec x_;
    BitVec z_;
};

/// 0 iff a and b commute. Throws SpaceMismatchError for different spaces.
bool symplectic_product(const PauliOp& a, const PauliOp& b);

/// Same product on raw (x|z) vectors of equal even length.
bool symplectic_product(const BitVec& a, const BitVec& b);

/// GF(2)-linear map on (x|z) coordinates between two qubit spaces of equal
/// size. Column j of the matrix is the image of the j-th basis Pauli
/// (X_0..X_{n-1}, then Z_0..Z_{n-1}).
class SymplecticMap {
   public:
    SymplecticMap() = default;
    SymplecticMap(Gf2Matrix matrix, QubitSpace domain, QubitSpace codomain);

    const Gf2Matrix& matrix() const { return matrix_; }
    const QubitSpace& domain() const { return domain_; }
    const QubitSpace& codomain() const { return codomain_; }
    bool invertible() const { return inverse_.has_value(); }
    /// Throws SingularMatrixError when the map is not invertible.
    const Gf2Matrix& inverse() const;

    PauliOp apply(const PauliOp& p) const;
    PauliOp preimage(const PauliOp& p) const;

   private:
    Gf2Matrix matrix_;
    std::optional<Gf2Matrix> inverse_;
    QubitSpace domain_;
    QubitSpace codomain_;
};

/// The standard form [[0, I], [I, 0]] of size 2n.
Gf2Matrix symplectic_form(std::size_t n);

/// True iff M Lambda M^T = Lambda.
bool is_symplectic(const SymplecticMap& m);
bool is_symplectic(const Gf2Matrix& m);

}  // namespace ccsurf

#endif
