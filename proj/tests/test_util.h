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

#ifndef PAULIPROP_TESTS_TEST_UTIL_H
#define PAULIPROP_TESTS_TEST_UTIL_H

#include <cmath>
#include <complex>
#include <random>
#include <string>
#include <vector>

#include "pauliprop/dense_operator.h"
#include "pauliprop/rng.h"

namespace pauliprop::test_support {

// Hand-written matrices, independent of pauli_matrix().
inline ComplexMatrix mat2(Complex a, Complex b, Complex c, Complex d) {
    ComplexMatrix m(2, 2);
    m << a, b, c, d;
    return m;
}
inline ComplexMatrix eye(size_t dim) {
    return ComplexMatrix::Identity(dim, dim);
}
inline ComplexMatrix mx() {
    return mat2(0, 1, 1, 0);
}
inline ComplexMatrix my() {
    return mat2(0, Complex(0, -1), Complex(0, 1), 0);
}
inline ComplexMatrix mz() {
    return mat2(1, 0, 0, -1);
}
inline ComplexMatrix single(int code) {
    switch (code) {
        case 1:
            return mx();
        case 2:
            return my();
        case 3:
            return mz();
        default:
            return eye(2);
    }
}

/// Kronecker product with `high` on the high-order qubits.
inline ComplexMatrix kron(const ComplexMatrix &high, const ComplexMatrix &low) {
    ComplexMatrix out(high.rows() * low.rows(), high.cols() * low.cols());
    for (Eigen::Index i = 0; i < high.rows(); i++) {
        for (Eigen::Index j = 0; j < high.cols(); j++) {
            out.block(i * low.rows(), j * low.cols(), low.rows(), low.cols()) = high(i, j) * low;
        }
    }
    return out;
}

/// Pauli word from text, qubit 0 (leftmost character) least significant.
inline ComplexMatrix word_matrix(const std::string &text) {
    ComplexMatrix out = eye(1);
    for (char ch : text) {
        int code = ch == 'X' ? 1 : ch == 'Y' ? 2 : ch == 'Z' ? 3 : 0;
        out = kron(single(code), out);
    }
    return out;
}

inline ComplexMatrix ginibre(size_t rows, size_t cols, Rng &rng) {
    std::normal_distribution<double> normal;
    ComplexMatrix g(rows, cols);
    for (size_t i = 0; i < rows; i++) {
        for (size_t j = 0; j < cols; j++) {
            g(i, j) = Complex(normal(rng), normal(rng));
        }
    }
    return g;
}

inline ComplexMatrix random_density(size_t num_qubits, Rng &rng) {
    size_t d = size_t{1} << num_qubits;
    ComplexMatrix g = ginibre(d, d, rng);
    ComplexMatrix rho = g * g.adjoint();
    return rho / rho.trace().real();
}

inline ComplexMatrix random_hermitian(size_t num_qubits, Rng &rng) {
    size_t d = size_t{1} << num_qubits;
    ComplexMatrix g = ginibre(d, d, rng);
    return (g + g.adjoint()) * 0.5;
}

inline ComplexMatrix random_unitary(size_t dim, Rng &rng) {
    Eigen::HouseholderQR<ComplexMatrix> qr(ginibre(dim, dim, rng));
    return qr.householderQ() * ComplexMatrix::Identity(dim, dim);
}

/// Kraus operators of a random trace-preserving channel with `rank` terms.
inline std::vector<ComplexMatrix> random_kraus(size_t num_qubits, size_t rank, Rng &rng) {
    size_t d = size_t{1} << num_qubits;
    Eigen::HouseholderQR<ComplexMatrix> qr(ginibre(d * rank, d, rng));
    ComplexMatrix v = qr.householderQ() * ComplexMatrix::Identity(d * rank, d);
    std::vector<ComplexMatrix> out;
    for (size_t a = 0; a < rank; a++) {
        out.push_back(v.block(a * d, 0, d, d));
    }
    return out;
}

inline ComplexMatrix unitary_of_rz(double theta) {
    return mat2(std::exp(Complex(0, -theta / 2)), 0, 0, std::exp(Complex(0, theta / 2)));
}

}  // namespace pauliprop::test_support

#endif
