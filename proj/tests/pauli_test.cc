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

#include <random>

#include "ccsurf/error.h"
#include "gtest/gtest.h"

using namespace ccsurf;

namespace {

const QubitSpace kSpace{"test", 5};

PauliOp random_pauli(const QubitSpace& s, std::mt19937_64& rng) {
    PauliOp p(s);
    for (std::size_t q = 0; q < s.qubits; ++q) {
        p.x().set(q, (rng() & 1) != 0);
        p.z().set(q, (rng() & 1) != 0);
    }
    return p;
}

}  // namespace

TEST(PauliOp, text_form_roundtrip) {
    auto p = PauliOp::from_string(kSpace, "IXZYI");
    EXPECT_EQ(p.str(), "IXZYI");
    EXPECT_EQ(p.weight(), 3u);
    EXPECT_EQ(p.x().str(), "01010");
    EXPECT_EQ(p.z().str(), "00110");
    EXPECT_THROW(PauliOp::from_string(kSpace, "IXZ"), ParseError);
    EXPECT_THROW(PauliOp::from_string(kSpace, "IXZQI"), ParseError);
    EXPECT_TRUE(PauliOp(kSpace).is_identity());
}

TEST(SymplecticProduct, single_and_two_qubit_cases) {
    auto x0 = PauliOp::from_string(kSpace, "XIIII");
    auto z0 = PauliOp::from_string(kSpace, "ZIIII");
    auto z1 = PauliOp::from_string(kSpace, "IZIII");
    EXPECT_TRUE(symplectic_product(x0, z0));
    EXPECT_FALSE(symplectic_product(x0, z1));
    auto zz = PauliOp::from_string(kSpace, "ZZIII");
    auto xx = PauliOp::from_string(kSpace, "IXXII");
    EXPECT_TRUE(symplectic_product(zz, xx));
}

TEST(SymplecticProduct, space_mismatch_throws) {
    auto a = PauliOp::from_string(kSpace, "XIIII");
    auto b = PauliOp::from_string(QubitSpace{"other", 5}, "ZIIII");
    EXPECT_THROW(symplectic_product(a, b), SpaceMismatchError);
    EXPECT_THROW(a * b, SpaceMismatchError);
}

TEST(SymplecticProduct, bilinear_and_symmetric) {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 200; ++t) {
        auto a = random_pauli(kSpace, rng);
        auto b = random_pauli(kSpace, rng);
        auto c = random_pauli(kSpace, rng);
        EXPECT_EQ(symplectic_product(a, b), symplectic_product(b, a));
        EXPECT_EQ(symplectic_product(a * b, c), symplectic_product(a, c) ^ symplectic_product(b, c));
        EXPECT_EQ(symplectic_product(a, b), symplectic_product(a.to_symplectic(), b.to_symplectic()));
    }
}

TEST(SymplecticMap, identity_and_global_swap_are_symplectic) {
    const QubitSpace dom{"d", 4};
    const QubitSpace cod{"c", 4};
    EXPECT_TRUE(is_symplectic(SymplecticMap(Gf2Matrix::identity(8), dom, cod)));
    Gf2Matrix swap(8, 8);
    for (std::size_t i = 0; i < 4; ++i) {
        swap.set(i, 4 + i);
        swap.set(4 + i, i);
    }
    EXPECT_TRUE(is_symplectic(SymplecticMap(swap, dom, cod)));
    Gf2Matrix zeroed = Gf2Matrix::identity(8);
    zeroed.row(3).clear();
    SymplecticMap bad(zeroed, dom, cod);
    EXPECT_FALSE(is_symplectic(bad));
    EXPECT_FALSE(bad.invertible());
    EXPECT_THROW(bad.preimage(PauliOp(cod)), SingularMatrixError);
}

TEST(SymplecticMap, apply_is_linear_and_preimage_inverts) {
    const QubitSpace dom{"d", 5};
    const QubitSpace cod{"c", 5};
    // A symplectic map built from CNOT(0->1) and H(2).
    Gf2Matrix m = Gf2Matrix::identity(10);
    m.set(1, 0);  // X0 -> X0 X1
    m.set(5, 6);  // Z1 -> Z0 Z1
    m.set(2, 2, false);
    m.set(7, 7, false);
    m.set(7, 2);  // X2 -> Z2
    m.set(2, 7);  // Z2 -> X2
    SymplecticMap map(m, dom, cod);
    ASSERT_TRUE(is_symplectic(map));
    ASSERT_TRUE(map.invertible());
    EXPECT_TRUE(map.apply(PauliOp(dom)).is_identity());
    EXPECT_EQ(map.apply(PauliOp::from_string(dom, "XIIII")).str(), "XXIII");
    EXPECT_EQ(map.apply(PauliOp::from_string(dom, "IIXII")).str(), "IIZII");

    std::mt19937_64 rng(100);
    for (int t = 0; t < 100; ++t) {
        auto a = random_pauli(dom, rng);
        auto b = random_pauli(dom, rng);
        EXPECT_EQ(map.apply(a * b), map.apply(a) * map.apply(b));
        EXPECT_EQ(map.preimage(map.apply(a)), a);
        EXPECT_EQ(symplectic_product(map.apply(a), map.apply(b)), symplectic_product(a, b));
    }
    EXPECT_THROW(map.apply(PauliOp(cod)), SpaceMismatchError);
    EXPECT_THROW(map.preimage(PauliOp(dom)), SpaceMismatchError);
}
