// Copyright 2026 The pauliprop Authors
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

#include "pauliprop/pauli_string.h"

#include <gtest/gtest.h>

#include "pauliprop/error.h"
#include "pauliprop/rng.h"
#include "test_util.h"

using namespace pauliprop;
namespace ts = pauliprop::test_support;

TEST(pauli_string, text_round_trip) {
    PauliString p = PauliString::from_text("XIZY");
    ASSERT_EQ(p.num_qubits(), 4);
    EXPECT_EQ(p.get(0), PAULI_X);
    EXPECT_EQ(p.get(1), PAULI_I);
    EXPECT_EQ(p.get(2), PAULI_Z);
    EXPECT_EQ(p.get(3), PAULI_Y);
    EXPECT_EQ(p.str(), "XIZY");
    EXPECT_EQ(p.weight(), 3);
    EXPECT_FALSE(p.is_identity());
    EXPECT_TRUE(PauliString(70).is_identity());
    EXPECT_THROW(PauliString::from_text("XQ"), Error);
}

TEST(pauli_string, local_index_examples) {
    std::vector<size_t> q01{0, 1};
    EXPECT_EQ(PauliString(5).local_index(std::vector<size_t>{3, 1, 4}), 0);
    EXPECT_EQ(PauliString::from_text("XZ").local_index(q01), 13);
    EXPECT_EQ(PauliString::from_text("IIY").local_index(std::vector<size_t>{2}), 2);

    PauliString p(2);
    p.set_local(q01, 13);
    EXPECT_EQ(p.str(), "XZ");
    EXPECT_EQ(PauliString::from_text("YY").with_local(q01, 0).str(), "II");
}

TEST(pauli_string, local_index_errors) {
    PauliString p(3);
    EXPECT_THROW(p.local_index(std::vector<size_t>{3}), Error);
    EXPECT_THROW(p.local_index(std::vector<size_t>{1, 1}), Error);
    EXPECT_THROW(p.set_local(std::vector<size_t>{0}, 4), Error);
}

TEST(pauli_string, encode_decode_bijection) {
    for (size_t k = 1; k <= 3; k++) {
        std::vector<size_t> qubits(k);
        for (size_t t = 0; t < k; t++) {
            qubits[t] = 2 * t + 1;
        }
        for (size_t i = 0; i < (size_t{1} << (2 * k)); i++) {
            PauliString p(8);
            p.set_local(qubits, i);
            EXPECT_EQ(p.local_index(qubits), i);
            EXPECT_EQ(p.weight(), [&] {
                size_t w = 0;
                for (size_t t = 0; t < k; t++) {
                    w += ((i >> (2 * t)) & 3) != 0;
                }
                return w;
            }());
        }
    }
}

TEST(pauli_string, random_subset_round_trip) {
    Rng rng = make_stream(7, 0);
    for (int trial = 0; trial < 500; trial++) {
        size_t n = 1 + rng() % 130;
        PauliString p(n);
        for (size_t q = 0; q < n; q++) {
            p.set(q, rng() % 4);
        }
        std::vector<size_t> all(n);
        for (size_t q = 0; q < n; q++) {
            all[q] = q;
        }
        std::shuffle(all.begin(), all.end(), rng);
        size_t k = 1 + rng() % std::min<size_t>(3, n);
        std::vector<size_t> subset(all.begin(), all.begin() + k);
        size_t index = p.local_index(subset);
        EXPECT_EQ(p.with_local(subset, index), p);
        size_t other = rng() % (size_t{1} << (2 * k));
        PauliString q = p.with_local(subset, other);
        EXPECT_EQ(q.local_index(subset), other);
        for (size_t t = k; t < n; t++) {
            EXPECT_EQ(q.get(all[t]), p.get(all[t]));
        }
    }
}

TEST(pauli_string, trace_inner_product_matches_dense) {
    const char *letters = "IXYZ";
    for (int a = 0; a < 16; a++) {
        for (int b = 0; b < 16; b++) {
            std::string ta{letters[a % 4], letters[a / 4]};
            std::string tb{letters[b % 4], letters[b / 4]};
            double dense = (ts::word_matrix(ta) * ts::word_matrix(tb)).trace().real() / 4;
            EXPECT_NEAR(trace_inner_product(PauliString::from_text(ta), PauliString::from_text(tb)), dense, 1e-12);
        }
    }
    EXPECT_EQ(trace_inner_product(PauliString::from_text("ZZ"), PauliString::from_text("ZZ")), 1);
    EXPECT_EQ(trace_inner_product(PauliString::from_text("XI"), PauliString::from_text("IX")), 0);
    EXPECT_THROW(trace_inner_product(PauliString(2), PauliString(3)), Error);
}

TEST(pauli_string, three_qubit_trace_inner_product_matches_dense) {
    const char *letters = "IXYZ";
    Rng rng = make_stream(11, 0);
    for (int trial = 0; trial < 200; trial++) {
        std::string ta, tb;
        for (int q = 0; q < 3; q++) {
            ta += letters[rng() % 4];
            tb += letters[rng() % 4];
        }
        if (trial % 3 == 0) {
            tb = ta;
        }
        double dense = (ts::word_matrix(ta) * ts::word_matrix(tb)).trace().real() / 8;
        EXPECT_NEAR(trace_inner_product(PauliString::from_text(ta), PauliString::from_text(tb)), dense, 1e-12);
    }
}
