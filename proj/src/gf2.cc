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

#include "ccsurf/gf2.h"

#include <algorithm>

#include "ccsurf/error.h"

namespace ccsurf {

BitVec BitVec::from_string(std::string_view bits) {
    BitVec v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1') {
            v.set(i);
        } else if (bits[i] != '0') {
            throw ParseError("bit string may only contain '0' and '1'");
        }
    }
    return v;
}

void BitVec::clear() { std::fill(words_.begin(), words_.end(), 0); }

void BitVec::resize(std::size_t n) {
    words_.resize((n + 63) / 64, 0);
    if (n < n_ && (n & 63) != 0) {
        words_.back() &= (std::uint64_t{1} << (n & 63)) - 1;
    }
    n_ = n;
}

bool BitVec::none() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t BitVec::popcount() const {
    std::size_t total = 0;
    for (auto w : words_) {
        total += static_cast<std::size_t>(std::popcount(w));
    }
    return total;
}

std::size_t BitVec::first_set() const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
        if (words_[k] != 0) {
            return k * 64 + static_cast<std::size_t>(std::countr_zero(words_[k]));
        }
    }
    return n_;
}

BitVec& BitVec::operator^=(const BitVec& other) {
    for (std::size_t k = 0; k < words_.size(); ++k) {
        words_[k] ^= other.words_[k];
    }
    return *this;
}

BitVec& BitVec::operator&=(const BitVec& other) {
    for (std::size_t k = 0; k < words_.size(); ++k) {
        words_[k] &= other.words_[k];
    }
    return *this;
}

BitVec& BitVec::operator|=(const BitVec& other) {
    for (std::size_t k = 0; k < words_.size(); ++k) {
        words_[k] |= other.words_[k];
    }
    return *this;
}

bool BitVec::dot(const BitVec& other) const {
    std::uint64_t acc = 0;
    for (std::size_t k = 0; k < words_.size(); ++k) {
        acc ^= words_[k] & other.words_[k];
    }
    return std::popcount(acc) & 1;
}

BitVec BitVec::slice(std::size_t offset, std::size_t len) const {
    BitVec out(len);
    for (std::size_t i = 0; i < len; ++i) {
        if (get(offset + i)) {
            out.set(i);
        }
    }
    return out;
}

BitVec BitVec::concat(const BitVec& a, const BitVec& b) {
    BitVec out(a.size() + b.size());
    std::copy(a.words_.begin(), a.words_.end(), out.words_.begin());
    if ((a.size() & 63) == 0) {
        std::copy(b.words_.begin(), b.words_.end(), out.words_.begin() + static_cast<std::ptrdiff_t>(a.words_.size()));
    } else {
        for (auto i : b.ones()) {
            out.set(a.size() + i);
        }
    }
    return out;
}

std::vector<std::size_t> BitVec::ones() const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < words_.size(); ++k) {
        std::uint64_t w = words_[k];
        while (w != 0) {
            out.push_back(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
            w &= w - 1;
        }
    }
    return out;
}

std::string BitVec::str() const {
    std::string s(n_, '0');
    for (auto i : ones()) {
        s[i] = '1';
    }
    return s;
}

Gf2Matrix::Gf2Matrix(std::vector<BitVec> rows, std::size_t cols) : cols_(cols), rows_(std::move(rows)) {
    for (const auto& r : rows_) {
        if (r.size() != cols_) {
            throw std::invalid_argument("row length does not match column count");
        }
    }
}

Gf2Matrix Gf2Matrix::identity(std::size_t n) {
    Gf2Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m.set(i, i);
    }
    return m;
}

BitVec Gf2Matrix::column(std::size_t c) const {
    BitVec out(rows());
    for (std::size_t r = 0; r < rows(); ++r) {
        if (rows_[r].get(c)) {
            out.set(r);
        }
    }
    return out;
}

Gf2Matrix Gf2Matrix::transpose() const {
    Gf2Matrix t(cols_, rows());
    for (std::size_t r = 0; r < rows(); ++r) {
        for (auto c : rows_[r].ones()) {
            t.set(c, r);
        }
    }
    return t;
}

BitVec Gf2Matrix::mul(const BitVec& v) const {
    if (v.size() != cols_) {
        throw std::invalid_argument("matrix-vector dimension mismatch");
    }
    BitVec out(rows());
    for (std::size_t r = 0; r < rows(); ++r) {
        if (rows_[r].dot(v)) {
            out.set(r);
        }
    }
    return out;
}

Gf2Matrix operator*(const Gf2Matrix& a, const Gf2Matrix& b) {
    if (a.cols() != b.rows()) {
        throw std::invalid_argument("matrix product dimension mismatch");
    }
    Gf2Matrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (auto k : a.row(r).ones()) {
            out.row(r) ^= b.row(k);
        }
    }
    return out;
}

Gf2Matrix operator+(const Gf2Matrix& a, const Gf2Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("matrix sum dimension mismatch");
    }
    Gf2Matrix out = a;
    for (std::size_t r = 0; r < a.rows(); ++r) {
        out.row(r) ^= b.row(r);
    }
    return out;
}

std::string Gf2Matrix::dump() const {
    std::string s;
    for (const auto& r : rows_) {
        s += r.str();
        s += '\n';
    }
    return s;
}

std::size_t rank(const Gf2Matrix& m) {
    RowSpace space(m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        space.insert(m.row(r));
    }
    return space.rank();
}

Gf2Matrix invert(const Gf2Matrix& m) {
    const std::size_t n = m.rows();
    if (m.cols() != n) {
        throw SingularMatrixError("cannot invert a non-square matrix");
    }
    // Gauss-Jordan on [m | I].
    std::vector<BitVec> left;
    std::vector<BitVec> right;
    left.reserve(n);
    right.reserve(n);
    for (std::size_t r = 0; r < n; ++r) {
        left.push_back(m.row(r));
        BitVec e(n);
        e.set(r);
        right.push_back(std::move(e));
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && !left[pivot].get(col)) {
            ++pivot;
        }
        if (pivot == n) {
            throw SingularMatrixError("matrix is singular over GF(2)");
        }
        std::swap(left[pivot], left[col]);
        std::swap(right[pivot], right[col]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r != col && left[r].get(col)) {
                left[r] ^= left[col];
                right[r] ^= right[col];
            }
        }
    }
    return Gf2Matrix(std::move(right), n);
}

std::optional<BitVec> solve(const Gf2Matrix& m, const BitVec& rhs) {
    if (rhs.size() != m.rows()) {
        throw std::invalid_argument("right-hand side length does not match row count");
    }
    // m x = rhs  <=>  rhs is a combination of the columns of m.
    RowSpace cols(m.rows());
    const Gf2Matrix t = m.transpose();
    for (std::size_t c = 0; c < t.rows(); ++c) {
        cols.insert(t.row(c));
    }
    return cols.express(rhs);
}

std::vector<BitVec> nullspace(const Gf2Matrix& m) {
    // Reduced row echelon form, then one basis vector per free column.
    std::vector<BitVec> rows;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        rows.push_back(m.row(r));
    }
    std::vector<std::size_t> pivot_cols;
    std::size_t next_row = 0;
    for (std::size_t col = 0; col < m.cols() && next_row < rows.size(); ++col) {
        std::size_t p = next_row;
        while (p < rows.size() && !rows[p].get(col)) {
            ++p;
        }
        if (p == rows.size()) {
            continue;
        }
        std::swap(rows[p], rows[next_row]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r != next_row && rows[r].get(col)) {
                rows[r] ^= rows[next_row];
            }
        }
        pivot_cols.push_back(col);
        ++next_row;
    }
    std::vector<char> is_pivot(m.cols(), 0);
    for (auto c : pivot_cols) {
        is_pivot[c] = 1;
    }
    std::vector<BitVec> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) {
            continue;
        }
        BitVec v(m.cols());
        v.set(free);
        for (std::size_t i = 0; i < pivot_cols.size(); ++i) {
            if (rows[i].get(free)) {
                v.set(pivot_cols[i]);
            }
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

RowSpace RowSpace::of_rows(const std::vector<BitVec>& rows, std::size_t dim) {
    RowSpace s(dim);
    for (const auto& r : rows) {
        s.insert(r);
    }
    return s;
}

bool RowSpace::insert(const BitVec& v) {
    if (v.size() != dim_) {
        throw std::invalid_argument("vector length does not match row space dimension");
    }
    const std::size_t id = inserted_++;
    BitVec combo(inserted_);
    combo.set(id);
    BitVec r = v;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        if (r.get(pivots_[i])) {
            r ^= basis_[i];
            BitVec c = combos_[i];
            c.resize(inserted_);
            combo ^= c;
        }
    }
    const std::size_t p = r.first_set();
    if (p == dim_) {
        return false;
    }
    basis_.push_back(std::move(r));
    pivots_.push_back(p);
    combos_.push_back(std::move(combo));
    return true;
}

BitVec RowSpace::reduce(const BitVec& v) const {
    BitVec r = v;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        if (r.get(pivots_[i])) {
            r ^= basis_[i];
        }
    }
    return r;
}

std::optional<BitVec> RowSpace::express(const BitVec& v) const {
    BitVec r = v;
    BitVec combo(inserted_);
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        if (r.get(pivots_[i])) {
            r ^= basis_[i];
            BitVec c = combos_[i];
            c.resize(inserted_);
            combo ^= c;
        }
    }
    if (r.any()) {
        return std::nullopt;
    }
    return combo;
}

}  // namespace ccsurf
