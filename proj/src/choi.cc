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

#include <cmath>
#include <string>

#include "pauliprop/error.h"
#include "pauliprop/ptm.h"

namespace pauliprop {

namespace {

/// Sign picked up by sigma_j under transposition: Y^T = -Y.
double transpose_sign(size_t j) {
    int ys = 0;
    for (; j != 0; j >>= 2) {
        ys += (j & 3) == PAULI_Y;
    }
    return (ys & 1) ? -1.0 : 1.0;
}

void check_choi_shape(const ComplexMatrix &m, size_t k_in, size_t k_out) {
    if (k_in > kMaxChannelQubits || k_out > kMaxChannelQubits) {
        fail(ErrorCode::Validation, "channels are limited to " + std::to_string(kMaxChannelQubits) + " qubits");
    }
    size_t dim = size_t{1} << (k_in + k_out);
    if (static_cast<size_t>(m.rows()) != dim || static_cast<size_t>(m.cols()) != dim) {
        fail(ErrorCode::Validation, "Choi matrix has the wrong dimension for " + std::to_string(k_in) + " -> " +
                                        std::to_string(k_out) + " qubits");
    }
}

}  // namespace

ComplexMatrix unnormalized_choi(const Ptm &ptm) {
    size_t out_count = ptm.matrix().rows();
    size_t in_count = ptm.matrix().cols();
    double d_in = static_cast<double>(size_t{1} << ptm.k_in());
    std::vector<double> coeffs(out_count * in_count);
    for (size_t j = 0; j < in_count; j++) {
        double s = transpose_sign(j) / (d_in * d_in);
        for (size_t i = 0; i < out_count; i++) {
            coeffs[i + out_count * j] = s * ptm(i, j);
        }
    }
    return matrix_from_pauli_coefficients(coeffs);
}

ChoiState choi_from_ptm(const Ptm &ptm) {
    ComplexMatrix phi = unnormalized_choi(ptm);
    double trace = phi.trace().real();
    if (!(trace > kZeroCoefficient)) {
        fail(ErrorCode::ZeroOperator, "channel has a vanishing Choi state");
    }
    require_completely_positive(ptm, "channel");
    ChoiState out;
    out.k_in = ptm.k_in();
    out.k_out = ptm.k_out();
    out.normalized = phi / trace;
    out.p_lambda = trace;
    return out;
}

double postselection_probability(const ComplexMatrix &normalized, size_t k_in, size_t k_out) {
    check_choi_shape(normalized, k_in, k_out);
    size_t d_out = size_t{1} << k_out;
    size_t d_in = size_t{1} << k_in;
    ComplexMatrix marginal = ComplexMatrix::Zero(d_in, d_in);
    for (size_t a = 0; a < d_in; a++) {
        for (size_t b = 0; b < d_in; b++) {
            Complex sum = 0;
            for (size_t o = 0; o < d_out; o++) {
                sum += normalized(o + d_out * a, o + d_out * b);
            }
            marginal(a, b) = sum;
        }
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(marginal, Eigen::EigenvaluesOnly);
    double top = solver.eigenvalues().maxCoeff();
    if (!(top > kZeroCoefficient)) {
        fail(ErrorCode::ZeroOperator, "Choi state has a vanishing input marginal");
    }
    return 1.0 / (static_cast<double>(d_in) * top);
}

Ptm ptm_from_choi(const ComplexMatrix &normalized, size_t k_in, size_t k_out) {
    check_choi_shape(normalized, k_in, k_out);
    if ((normalized - normalized.adjoint()).cwiseAbs().maxCoeff() > 1e-10) {
        fail(ErrorCode::Validation, "Choi matrix is not Hermitian");
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(normalized, Eigen::EigenvaluesOnly);
    if (solver.eigenvalues().minCoeff() < -kCompletePositivityTolerance) {
        fail(ErrorCode::NotCompletelyPositive, "Choi matrix is not positive semidefinite");
    }
    double p = postselection_probability(normalized, k_in, k_out);
    std::vector<double> coeffs = pauli_coefficients(normalized);
    size_t out_count = size_t{1} << (2 * k_out);
    size_t in_count = size_t{1} << (2 * k_in);
    double d_in = static_cast<double>(size_t{1} << k_in);
    Eigen::MatrixXd r(out_count, in_count);
    for (size_t j = 0; j < in_count; j++) {
        double s = p * d_in * d_in * transpose_sign(j);
        for (size_t i = 0; i < out_count; i++) {
            r(i, j) = s * coeffs[i + out_count * j];
        }
    }
    return Ptm(k_in, k_out, std::move(r));
}

ComplexMatrix apply_choi(const ComplexMatrix &unnormalized, const ComplexMatrix &rho, size_t k_in, size_t k_out) {
    check_choi_shape(unnormalized, k_in, k_out);
    size_t d_out = size_t{1} << k_out;
    size_t d_in = size_t{1} << k_in;
    if (static_cast<size_t>(rho.rows()) != d_in || static_cast<size_t>(rho.cols()) != d_in) {
        fail(ErrorCode::InvalidArgument, "input operator does not match the channel input dimension");
    }
    // Tr_in(phi (I x rho^T))[o, o'] = sum_{a, b} phi[(o, a), (o', b)] rho^T[b, a].
    ComplexMatrix out = ComplexMatrix::Zero(d_out, d_out);
    for (size_t o = 0; o < d_out; o++) {
        for (size_t o2 = 0; o2 < d_out; o2++) {
            Complex sum = 0;
            for (size_t a = 0; a < d_in; a++) {
                for (size_t b = 0; b < d_in; b++) {
                    sum += unnormalized(o + d_out * a, o2 + d_out * b) * rho(a, b);
                }
            }
            out(o, o2) = sum;
        }
    }
    return out * static_cast<double>(d_in);
}

}  // namespace pauliprop
