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

#include "ccsurf/pauli.h"

#include "ccsurf/error.h"

namespace ccsurf {

namespace {

void require_same_space(const QubitSpace& a, const QubitSpace& b) {
    if (!(a == b)) {
        throw SpaceMismatchError("qubit space mismatch: '" + a.name + "' (" + std::to_string(a.qubits) + ") vs '" +
                                 b.name + "' (" + std::to_string(b.qubits) + ")");
    }
}

}  // namespace

PauliOp::PauliOp(QubitSpace space) : space_(std::move(space)), x_(space_.qubits), z_(space_.qubits) {}

PauliOp::PauliOp(QubitSpace space, BitVec x, BitVec z) : space_(std::move(space)), x_(std::move(x)), z_(std::move(z)) {
    if (x_.size() != space_.qubits || z_.size() != space_.qubits) {
        throw SpaceMismatchError("Pauli bit vectors do not match the size of space '" + space_.name + "'");
    }
}

PauliOp PauliOp::from_string(QubitSpace space, std::string_view text) {
    if (text.size() != space.qubits) {
        throw ParseError("Pauli string has length " + std::to_string(text.size()) + " but space '" + space.name +
                         "' has " + std::to_string(space.qubits) + " qubits");
    }
    PauliOp p(std::move(space));
    for (std::size_t q = 0; q < text.size(); ++q) {
        switch (text[q]) {
            case 'I':
            case '_':
                break;
            case 'X':
                p.x_.set(q);
                break;
            case 'Z':
                p.z_.set(q);
                break;
            case 'Y':
                p.x_.set(q);
                p.z_.set(q);
                break;
            default:
                throw ParseError(std::string("invalid Pauli character '") + text[q] + "' at position " +
                                 std::to_string(q));
        }
    }
    return p;
}

PauliOp PauliOp::from_symplectic(QubitSpace space, const BitVec& xz) {
    const std::size_t n = space.qubits;
    if (xz.size() != 2 * n) {
        throw SpaceMismatchError("symplectic vector length does not match space '" + space.name + "'");
    }
    return PauliOp(std::move(space), xz.slice(0, n), xz.slice(n, n));
}

PauliOp PauliOp::single(QubitSpace space, std::size_t q, char which) {
    PauliOp p(std::move(space));
    if (which == 'X' || which == 'Y') {
        p.x_.set(q);
    }
    if (which == 'Z' || which == 'Y') {
        p.z_.set(q);
    }
    return p;
}

char PauliOp::at(std::size_t q) const {
    const bool xb = x_.get(q);
    const bool zb = z_.get(q);
    if (xb && zb) {
        return 'Y';
    }
    if (xb) {
        return 'X';
    }
    return zb ? 'Z' : 'I';
}

PauliOp& PauliOp::operator*=(const PauliOp& other) {
    require_same_space(space_, other.space_);
    x_ ^= other.x_;
    z_ ^= other.z_;
    return *this;
}

std::string PauliOp::str() const {
    std::string s(size(), 'I');
    for (std::size_t q = 0; q < size(); ++q) {
        s[q] = at(q);
    }
    return s;
}

bool symplectic_product(const PauliOp& a, const PauliOp& b) {
    require_same_space(a.space(), b.space());
    return a.x().dot(b.z()) ^ a.z().dot(b.x());
}

bool symplectic_product(const BitVec& a, const BitVec& b) {
    if (a.size() != b.size() || (a.size() & 1) != 0) {
        throw SpaceMismatchError("symplectic vectors must have equal even length");
    }
    const std::size_t n = a.size() / 2;
    return a.slice(0, n).dot(b.slice(n, n)) ^ a.slice(n, n).dot(b.slice(0, n));
}

SymplecticMap::SymplecticMap(Gf2Matrix matrix, QubitSpace domain, QubitSpace codomain)
    : matrix_(std::move(matrix)), domain_(std::move(domain)), codomain_(std::move(codomain)) {
    if (matrix_.rows() != 2 * codomain_.qubits || matrix_.cols() != 2 * domain_.qubits) {
        throw SpaceMismatchError("map matrix shape does not match its domain and codomain");
    }
    if (matrix_.rows() == matrix_.cols() && rank(matrix_) == matrix_.rows()) {
        inverse_ = invert(matrix_);
    }
}

const Gf2Matrix& SymplecticMap::inverse() const {
    if (!inverse_) {
        throw SingularMatrixError("map is not invertible");
    }
    return *inverse_;
}

PauliOp SymplecticMap::apply(const PauliOp& p) const {
    require_same_space(p.space(), domain_);
    return PauliOp::from_symplectic(codomain_, matrix_.mul(p.to_symplectic()));
}

PauliOp SymplecticMap::preimage(const PauliOp& p) const {
    require_same_space(p.space(), codomain_);
    return PauliOp::from_symplectic(domain_, inverse().mul(p.to_symplectic()));
}

Gf2Matrix symplectic_form(std::size_t n) {
    Gf2Matrix l(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        l.set(i, n + i);
        l.set(n + i, i);
    }
    return l;
}

bool is_symplectic(const Gf2Matrix& m) {
    if (m.rows() != m.cols() || (m.rows() & 1) != 0) {
        return false;
    }
    const Gf2Matrix lambda = symplectic_form(m.rows() / 2);
    return m * lambda * m.transpose() == lambda;
}

bool is_symplectic(const SymplecticMap& m) { return is_symplectic(m.matrix()); }

}  // namespace ccsurf
