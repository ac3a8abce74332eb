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

#ifndef CCSURF_GF2_H
#define CCSURF_GF2_H

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ccsurf {

/// Fixed-length vector over GF(2), packed into 64-bit words. Bits past size()
/// in the last word are always zero.
class BitVec {
   public:
    BitVec() = default;
    explicit BitVec(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

    static BitVec from_string(std::string_view bits);

    std::size_t size() const { return n_; }
    std::size_t num_words() const { return words_.size(); }

    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool v = true) {
        const std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (v) {
            words_[i >> 6] |= mask;
        } else {
            words_[i >> 6] &= ~mask;
        }
    }
    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }
    void clear();
    /// Grows or shrinks to n bits; new bits are zero.
    void resize(std::size_t n);

    bool none() const;
    bool any() const { return !none(); }
    std::size_t popcount() const;
    /// Index of the lowest set bit, or size() when none is set.
    std::size_t first_set() const;

    BitVec& operator^=(const BitVec& other);
    BitVec& operator&=(const BitVec& other);
    BitVec& operator|=(const BitVec& other);
    friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }
    friend BitVec operator&(BitVec a, const BitVec& b) { return a &= b; }
    friend BitVec operator|(BitVec a, const BitVec& b) { return a |= b; }
    bool operator==(const BitVec& other) const = default;

    /// Parity of the bitwise AND, i.e. the GF(2) dot product.
    bool dot(const BitVec& other) const;

    /// Bits [offset, offset + len) as a new vector.
    BitVec slice(std::size_t offset, std::size_t len) const;
    /// Concatenation a|b.
    static BitVec concat(const BitVec& a, const BitVec& b);

    std::vector<std::size_t> ones() const;
    std::string str() const;

    const std::vector<std::uint64_t>& words() const { return words_; }
    std::vector<std::uint64_t>& words() { return words_; }

   private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Dense GF(2) matrix stored as bit-packed rows.
class Gf2Matrix {
   public:
    Gf2Matrix() = default;
    Gf2Matrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVec(cols)) {}
    explicit Gf2Matrix(std::vector<BitVec> rows, std::size_t cols);

    static Gf2Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
    void set(std::size_t r, std::size_t c, bool v = true) { rows_[r].set(c, v); }
    const BitVec& row(std::size_t r) const { return rows_[r]; }
    BitVec& row(std::size_t r) { return rows_[r]; }
    BitVec column(std::size_t c) const;

    Gf2Matrix transpose() const;
    /// Matrix-vector product with v treated as a column vector.
    BitVec mul(const BitVec& v) const;
    friend Gf2Matrix operator*(const Gf2Matrix& a, const Gf2Matrix& b);
    friend Gf2Matrix operator+(const Gf2Matrix& a, const Gf2Matrix& b);
    bool operator==(const Gf2Matrix& other) const = default;

    /// Rows of 0/1 characters separated by newlines.
    std::string dump() const;

   private:
    std::size_t cols_ = 0;
    std::vector<BitVec> rows_;
};

std::size_t rank(const Gf2Matrix& m);

/// Throws SingularMatrixError unless m is square with full rank.
Gf2Matrix invert(const Gf2Matrix& m);

/// Some x with m * x = rhs, or nullopt when the system is inconsistent.
std::optional<BitVec> solve(const Gf2Matrix& m, const BitVec& rhs);

/// Basis of {x : m * x = 0}.
std::vector<BitVec> nullspace(const Gf2Matrix& m);

/// Incrementally built row-echelon basis of a subspace of GF(2)^dim. Each
/// basis row remembers which of the inserted vectors it is a sum of, so
/// membership queries can also return an explicit combination.
class RowSpace {
   public:
    explicit RowSpace(std::size_t dim) : dim_(dim) {}
    static RowSpace of_rows(const std::vector<BitVec>& rows, std::size_t dim);

    /// Inserts v; returns true if it enlarged the span.
    bool insert(const BitVec& v);

    std::size_t dim() const { return dim_; }
    std::size_t rank() const { return basis_.size(); }
    std::size_t inserted() const { return inserted_; }

    /// v minus its projection onto the span along pivot columns.
    BitVec reduce(const BitVec& v) const;
    bool contains(const BitVec& v) const { return reduce(v).none(); }
    /// Combination (over inserted vectors, in insertion order) summing to v.
    std::optional<BitVec> express(const BitVec& v) const;

   private:
    std::size_t dim_;
    std::size_t inserted_ = 0;
    std::vector<BitVec> basis_;
    std::vector<std::size_t> pivots_;
    std::vector<BitVec> combos_;
};

}  // namespace ccsurf

#endif
