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

#include <random>

#include "ccsurf/error.h"
#include "gtest/gtest.h"

using namespace ccsurf;

namespace {

Gf2Matrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
    Gf2Matrix m(rows, cols);
    std::bernoulli_distribution coin(0.5);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            m.set(r, c, coin(rng));
        }
    }
    return m;
}

// Rank by brute force: size of the span, enumerated as a set of row
// combinations. Only usable for a handful of rows.
std::size_t brute_force_rank(const Gf2Matrix& m) {
    std::vector<BitVec> span;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m.rows()); ++mask) {
        BitVec v(m.cols());
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if ((mask >> r) & 1) {
                v ^= m.row(r);
            }
        }
        if (std::find(span.begin(), span.end(), v) == span.end()) {
            span.push_back(v);
        }
    }
    std::size_t k = 0;
    while ((std::size_t{1} << k) < span.size()) {
        ++k;
    }
    return k;
}

}  // namespace

TEST(BitVec, basic_ops) {
    BitVec v(130);
    EXPECT_TRUE(v.none());
    v.set(0);
    v.set(64);
    v.set(129);
    EXPECT_EQ(v.popcount(), 3u);
    EXPECT_EQ(v.first_set(), 0u);
    EXPECT_EQ(v.ones(), (std::vector<std::size_t>{0, 64, 129}));
    v.flip(0);
    EXPECT_EQ(v.first_set(), 64u);
    BitVec w = BitVec::from_string("0110");
    EXPECT_EQ(w.str(), "0110");
    EXPECT_THROW(BitVec::from_string("01a"), ParseError);
    EXPECT_EQ(BitVec::concat(w, BitVec::from_string("101")).str(), "0110101");
    EXPECT_EQ(BitVec::concat(w, BitVec::from_string("101")).slice(2, 4).str(), "1010");
}

TEST(BitVec, resize_truncates_high_bits) {
    BitVec v(70);
    v.set(69);
    v.set(3);
    v.resize(10);
    EXPECT_EQ(v.popcount(), 1u);
    v.resize(70);
    EXPECT_FALSE(v.get(69));
}

TEST(Gf2Matrix, identity_rank_and_inverse) {
    auto id = Gf2Matrix::identity(4);
    EXPECT_EQ(rank(id), 4u);
    EXPECT_EQ(invert(id), id);
}

TEST(Gf2Matrix, equal_rows_drop_rank) {
    Gf2Matrix m(3, 4);
    m.row(0) = BitVec::from_string("1011");
    m.row(1) = BitVec::from_string("1011");
    m.row(2) = BitVec::from_string("0100");
    EXPECT_LT(rank(m), m.rows());
    EXPECT_EQ(rank(m), 2u);
    EXPECT_THROW(invert(Gf2Matrix(3, 3)), SingularMatrixError);
    EXPECT_THROW(invert(m), SingularMatrixError);
}

TEST(Gf2Matrix, rank_matches_brute_force) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        auto m = random_matrix(1 + trial % 8, 1 + (trial * 7) % 9, rng);
        EXPECT_EQ(rank(m), brute_force_rank(m));
    }
}

TEST(Gf2Matrix, random_invertible_roundtrip) {
    std::mt19937_64 rng(2024);
    int checked = 0;
    while (checked < 25) {
        auto m = random_matrix(10, 10, rng);
        if (brute_force_rank(m) != 10) {
            EXPECT_THROW(invert(m), SingularMatrixError);
            continue;
        }
        auto inv = invert(m);
        EXPECT_EQ(inv * m, Gf2Matrix::identity(10));
        EXPECT_EQ(m * inv, Gf2Matrix::identity(10));
        ++checked;
    }
}

TEST(Gf2Matrix, solve_finds_solution_or_reports_none) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        auto m = random_matrix(6, 4, rng);
        BitVec x(4);
        for (std::size_t i = 0; i < 4; ++i) {
            x.set(i, (rng() & 1) != 0);
        }
        auto b = m.mul(x);
        auto sol = solve(m, b);
        ASSERT_TRUE(sol.has_value());
        EXPECT_EQ(m.mul(*sol), b);
    }
    Gf2Matrix m(2, 1);
    m.set(0, 0);
    EXPECT_FALSE(solve(m, BitVec::from_string("01")).has_value());
}

TEST(Gf2Matrix, transpose_and_products) {
    std::mt19937_64 rng(9);
    auto a = random_matrix(5, 7, rng);
    auto b = random_matrix(7, 3, rng);
    auto c = random_matrix(3, 4, rng);
    EXPECT_EQ(a.transpose().transpose(), a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ((a * b).transpose(), b.transpose() * a.transpose());
    EXPECT_EQ(a + a, Gf2Matrix(5, 7));
}

TEST(RowSpace, express_returns_a_valid_combination) {
    std::mt19937_64 rng(77);
    auto m = random_matrix(12, 20, rng);
    std::vector<BitVec> rows;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        rows.push_back(m.row(r));
    }
    auto space = RowSpace::of_rows(rows, 20);
    EXPECT_EQ(space.rank(), rank(m));
    BitVec target = rows[1] ^ rows[4] ^ rows[11];
    auto combo = space.express(target);
    ASSERT_TRUE(combo.has_value());
    BitVec sum(20);
    for (auto i : combo->ones()) {
        sum ^= rows[i];
    }
    EXPECT_EQ(sum, target);
}

TEST(Gf2Matrix, nullspace_has_complementary_dimension) {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        auto m = random_matrix(3 + trial % 6, 9, rng);
        auto basis = nullspace(m);
        EXPECT_EQ(basis.size() + rank(m), m.cols());
        for (const auto& v : basis) {
            EXPECT_TRUE(m.mul(v).none());
        }
        EXPECT_EQ(RowSpace::of_rows(basis, m.cols()).rank(), basis.size());
    }
}
