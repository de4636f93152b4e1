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

#include "pauliprop/dense_operator.h"

#include <gtest/gtest.h>

#include <cmath>
#include <map>

#include "pauliprop/error.h"
#include "test_util.h"

using namespace pauliprop;
namespace ts = pauliprop::test_support;
using ts::kron;

namespace {

const double kSqrt2 = std::sqrt(2.0);

/// Direct sum over hand-built Pauli matrices.
double brute_norm(const ComplexMatrix &a) {
    size_t k = qubits_for_dimension(a.rows());
    const char *letters = "IXYZ";
    double total = 0;
    for (size_t i = 0; i < (size_t{1} << (2 * k)); i++) {
        std::string word;
        for (size_t q = 0; q < k; q++) {
            word += letters[(i >> (2 * q)) & 3];
        }
        total += std::abs((ts::word_matrix(word) * a).trace());
    }
    return total / static_cast<double>(size_t{1} << k);
}

}  // namespace

TEST(dense_operator, pauli_matrix_matches_kronecker_products) {
    const char *letters = "IXYZ";
    for (size_t k = 1; k <= 3; k++) {
        for (size_t i = 0; i < (size_t{1} << (2 * k)); i++) {
            std::string word;
            for (size_t q = 0; q < k; q++) {
                word += letters[(i >> (2 * q)) & 3];
            }
            EXPECT_TRUE(pauli_matrix(i, k).isApprox(ts::word_matrix(word))) << word;
        }
    }
}

TEST(dense_operator, coefficients_reconstruct) {
    Rng rng = make_stream(3, 0);
    for (size_t k = 1; k <= 3; k++) {
        ComplexMatrix a = ts::random_hermitian(k, rng);
        DenseOperator op(a);
        EXPECT_LT((matrix_from_pauli_coefficients(op.pauli_coeffs().coeffs) - a).cwiseAbs().maxCoeff(), 1e-9);
    }
}

TEST(dense_operator, rejects_bad_matrices) {
    EXPECT_THROW(DenseOperator(ComplexMatrix::Zero(3, 3)), Error);
    EXPECT_THROW(DenseOperator(ComplexMatrix::Identity(16, 16)), Error);
    ComplexMatrix m = ComplexMatrix::Zero(2, 2);
    m(0, 1) = 1;
    EXPECT_THROW(DenseOperator{m}, Error);
    EXPECT_THROW(named_state("nope"), Error);
}

TEST(dense_operator, stabilizer_norm_examples) {
    for (size_t k = 1; k <= 3; k++) {
        for (size_t i = 0; i < (size_t{1} << (2 * k)); i++) {
            EXPECT_NEAR(stabilizer_norm(DenseOperator(pauli_matrix(i, k))), 1.0, 1e-12);
        }
        size_t d = size_t{1} << k;
        EXPECT_NEAR(stabilizer_norm(DenseOperator(ts::eye(d) / double(d))), 1.0 / double(d), 1e-15);
    }
    // |H><H| = (I + (X + Z)/sqrt2)/2: coefficients 1/2, 1/(2 sqrt2), 0, 1/(2 sqrt2).
    DenseOperator h = named_state("H_state");
    EXPECT_NEAR(stabilizer_norm(h), (1 + kSqrt2) / 2, 1e-12);
    EXPECT_NEAR(stabilizer_norm(h), brute_norm(h.matrix()), 1e-12);
    EXPECT_NEAR(stabilizer_norm(named_state("T_state")), (1 + kSqrt2) / 2, 1e-12);
    EXPECT_NEAR(stabilizer_norm(named_state("plus_i")), 1, 1e-12);
}

TEST(dense_operator, named_states_are_what_they_say) {
    ComplexMatrix plus = ComplexMatrix::Constant(2, 2, 0.5);
    EXPECT_TRUE(named_state("plus").matrix().isApprox(plus));
    EXPECT_NEAR(named_state("zero").matrix()(0, 0).real(), 1, 1e-15);
    EXPECT_NEAR(named_state("one").matrix()(1, 1).real(), 1, 1e-15);
    // T|+> = (|0> + e^{i pi/4}|1>)/sqrt2.
    Eigen::VectorXcd t(2);
    t << 1 / kSqrt2, std::exp(Complex(0, M_PI / 4)) / kSqrt2;
    EXPECT_TRUE(named_state("T_state").matrix().isApprox(t * t.adjoint()));
    ComplexMatrix hm = (ts::mx() + ts::mz()) / kSqrt2;
    EXPECT_TRUE((hm * named_state("H_state").matrix()).isApprox(named_state("H_state").matrix()));
}

TEST(dense_operator, norm_properties_on_random_operators) {
    Rng rng = make_stream(5, 0);
    for (int trial = 0; trial < 200; trial++) {
        size_t k = 1 + trial % 3;
        ComplexMatrix rho = ts::random_density(k, rng);
        double d = stabilizer_norm(DenseOperator(rho));
        EXPECT_NEAR(d, brute_norm(rho), 1e-10);
        EXPECT_GE(d, 1.0 / double(size_t{1} << k) - 1e-12);

        ComplexMatrix a = ts::random_hermitian(1, rng);
        ComplexMatrix b = ts::random_hermitian(1, rng);
        EXPECT_NEAR(brute_norm(kron(b, a)), stabilizer_norm(DenseOperator(a)) * stabilizer_norm(DenseOperator(b)),
                    1e-9);
    }
}

TEST(dense_operator, factored_norms) {
    DenseOperator h = named_state("H_state");
    DenseOperator mixed = named_state("maximally_mixed");
    FactoredOperator s(2, {Factor{{0}, h}, Factor{{1}, mixed}});
    EXPECT_NEAR(stabilizer_norm(s), (1 + kSqrt2) / 4, 1e-12);
    EXPECT_NEAR(stabilizer_norm(FactoredOperator::product(5, h)), std::pow((1 + kSqrt2) / 2, 5), 1e-12);
    EXPECT_NEAR(stabilizer_norm(FactoredOperator::from_pauli(PauliString::from_text("XYZI"))), 1, 1e-12);
    EXPECT_NEAR(max_pauli_trace(FactoredOperator::from_pauli(PauliString::from_text("XYZI"))), 16, 1e-12);
    EXPECT_THROW(FactoredOperator(2, {Factor{{0}, h}}), Error);
    EXPECT_THROW(FactoredOperator(2, {Factor{{0}, h}, Factor{{0}, h}}), Error);
}

TEST(dense_operator, sampler_point_mass) {
    Rng rng = make_stream(1, 0);
    DenseOperator z(ts::mz());
    for (int i = 0; i < 10; i++) {
        SignedPauli s = sample_pauli(z, rng);
        EXPECT_EQ(s.pauli.str(), "Z");
        EXPECT_EQ(s.coeff, 1.0);
    }
    FactoredOperator mixed = FactoredOperator::product(6, named_state("maximally_mixed"));
    SignedPauli s = sample_pauli(mixed, rng);
    EXPECT_TRUE(s.pauli.is_identity());
    EXPECT_NEAR(s.coeff, 1.0 / 64, 1e-15);
    EXPECT_THROW(sample_pauli(DenseOperator(ComplexMatrix::Zero(2, 2)), rng), Error);
}

TEST(dense_operator, sampler_probabilities) {
    PauliSampler zero(named_state("zero").pauli_coeffs().coeffs);
    EXPECT_NEAR(zero.probability(PAULI_I), 0.5, 1e-15);
    EXPECT_NEAR(zero.probability(PAULI_Z), 0.5, 1e-15);
    EXPECT_EQ(zero.probability(PAULI_X), 0);

    PauliSampler h(named_state("H_state").pauli_coeffs().coeffs);
    EXPECT_NEAR(h.probability(PAULI_I), 1 / (1 + kSqrt2), 1e-12);
    EXPECT_NEAR(h.probability(PAULI_X), (1 / kSqrt2) / (1 + kSqrt2), 1e-12);
    EXPECT_NEAR(h.probability(PAULI_Z), (1 / kSqrt2) / (1 + kSqrt2), 1e-12);
    EXPECT_NEAR(h.weight(PAULI_X), (1 + kSqrt2) / 2, 1e-12);

    Rng rng = make_stream(2, 0);
    std::map<std::string, int> counts;
    FactoredOperator zeros = FactoredOperator::product(3, named_state("zero"));
    for (int i = 0; i < 80000; i++) {
        SignedPauli s = sample_pauli(zeros, rng);
        EXPECT_EQ(s.coeff, 1.0);
        counts[s.pauli.str()]++;
    }
    EXPECT_EQ(counts.size(), 8);
    for (const auto &[word, c] : counts) {
        EXPECT_EQ(word.find_first_of("XY"), std::string::npos);
        EXPECT_NEAR(c / 80000.0, 1.0 / 8, 0.01);
    }
}

TEST(dense_operator, sampler_is_unbiased) {
    Rng rng = make_stream(9, 0);
    const size_t n = 1000000;
    for (int trial = 0; trial < 2; trial++) {
        DenseOperator a(ts::random_hermitian(2, rng));
        double d = stabilizer_norm(a);
        std::vector<double> sums(16, 0.0);
        for (size_t s = 0; s < n; s++) {
            SignedPauli draw = sample_pauli(a, rng);
            EXPECT_EQ(std::abs(draw.coeff), d);
            sums[draw.pauli.local_index(std::vector<size_t>{0, 1})] += draw.coeff;
        }
        for (size_t i = 0; i < 16; i++) {
            EXPECT_NEAR(sums[i] / n, a.pauli_coeffs().coeffs[i], 5 * d / std::sqrt(double(n)));
        }
    }
}

TEST(dense_operator, trace_with_factored_matches_dense) {
    Rng rng = make_stream(4, 0);
    const char *letters = "IXYZ";
    for (int trial = 0; trial < 100; trial++) {
        ComplexMatrix a = ts::random_hermitian(2, rng);
        ComplexMatrix b = ts::random_hermitian(1, rng);
        // Factor on qubits (2, 0) and factor on qubit 1.
        FactoredOperator s(3, {Factor{{2, 0}, DenseOperator(a)}, Factor{{1}, DenseOperator(b)}});
        // Dense: a acts with its local qubit 0 on global qubit 2, local qubit 1 on global 0.
        std::string word;
        for (int q = 0; q < 3; q++) {
            word += letters[rng() % 4];
        }
        PauliString p = PauliString::from_text(word);
        ComplexMatrix full(8, 8);
        for (size_t r = 0; r < 8; r++) {
            for (size_t c = 0; c < 8; c++) {
                size_t ar = ((r >> 2) & 1) | ((r & 1) << 1);
                size_t ac = ((c >> 2) & 1) | ((c & 1) << 1);
                full(r, c) = a(ar, ac) * b((r >> 1) & 1, (c >> 1) & 1);
            }
        }
        double expected = (ts::word_matrix(word) * full).trace().real();
        EXPECT_NEAR(trace_with_factored(p, s), expected, 1e-10);
    }
    FactoredOperator zeros = FactoredOperator::product(4, named_state("zero"));
    EXPECT_NEAR(trace_with_factored(PauliString(4), zeros), 1, 1e-15);
    EXPECT_NEAR(trace_with_factored(PauliString::from_text("ZIII"), zeros), 1, 1e-15);
    EXPECT_THROW(trace_with_factored(PauliString(3), zeros), Error);
}
