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

#include "pauliprop/oracle.h"

#include <string>

#include "pauliprop/error.h"

namespace pauliprop {

namespace {

void check_size(size_t n) {
    if (n > kMaxOracleQubits) {
        fail(ErrorCode::OracleTooLarge, "dense oracle handles at most " + std::to_string(kMaxOracleQubits) +
                                            " qubits, got " + std::to_string(n));
    }
}

/// Spreads the bits of a local index onto the listed qubits.
size_t spread(size_t local, const std::vector<size_t> &qubits) {
    size_t out = 0;
    for (size_t t = 0; t < qubits.size(); t++) {
        out |= ((local >> t) & 1) << qubits[t];
    }
    return out;
}

size_t gather(size_t global, const std::vector<size_t> &qubits) {
    size_t out = 0;
    for (size_t t = 0; t < qubits.size(); t++) {
        out |= ((global >> qubits[t]) & 1) << t;
    }
    return out;
}

}  // namespace

ComplexMatrix dense_matrix(const FactoredOperator &op) {
    size_t n = op.num_qubits();
    check_size(n);
    size_t dim = size_t{1} << n;
    ComplexMatrix out = ComplexMatrix::Constant(dim, dim, Complex(1, 0));
    for (const auto &f : op.factors()) {
        const auto &m = f.op.matrix();
        for (size_t r = 0; r < dim; r++) {
            size_t lr = gather(r, f.qubits);
            for (size_t c = 0; c < dim; c++) {
                out(r, c) *= m(lr, gather(c, f.qubits));
            }
        }
    }
    return out;
}

DensityMatrix::DensityMatrix(const FactoredOperator &state)
    : num_qubits_(state.num_qubits()), matrix_(dense_matrix(state)) {
}

void DensityMatrix::apply(const ChannelApplication &app) {
    app.validate(num_qubits_);
    size_t k = app.qubits.size();
    size_t d = size_t{1} << k;
    size_t count = d * d;

    // images[a + d b] = Lambda(|a><b|), obtained through the PTM.
    std::vector<ComplexMatrix> images;
    images.reserve(count);
    for (size_t b = 0; b < d; b++) {
        for (size_t a = 0; a < d; a++) {
            ComplexMatrix unit = ComplexMatrix::Zero(d, d);
            unit(a, b) = 1;
            std::vector<Complex> in = complex_pauli_coefficients(unit);
            std::vector<Complex> out(count, Complex(0, 0));
            for (size_t i = 0; i < count; i++) {
                for (size_t j = 0; j < count; j++) {
                    out[i] += app.ptm(i, j) * in[j];
                }
            }
            images.push_back(matrix_from_pauli_coefficients(std::span<const Complex>(out)));
        }
    }

    size_t dim = size_t{1} << num_qubits_;
    size_t mask = spread(d - 1, app.qubits);
    std::vector<size_t> offsets(d);
    for (size_t a = 0; a < d; a++) {
        offsets[a] = spread(a, app.qubits);
    }
    // Superoperator on vec(block), applied to all blocks at once.
    ComplexMatrix super(count, count);
    for (size_t col = 0; col < count; col++) {
        for (size_t o2 = 0; o2 < d; o2++) {
            for (size_t o = 0; o < d; o++) {
                super(o + d * o2, col) = images[col](o, o2);
            }
        }
    }
    std::vector<size_t> bases;
    for (size_t r = 0; r < dim; r++) {
        if ((r & mask) == 0) {
            bases.push_back(r);
        }
    }
    size_t nb = bases.size();
    ComplexMatrix blocks(count, nb * nb);
    for (size_t br = 0; br < nb; br++) {
        for (size_t bc = 0; bc < nb; bc++) {
            for (size_t b = 0; b < d; b++) {
                for (size_t a = 0; a < d; a++) {
                    blocks(a + d * b, br + nb * bc) = matrix_(bases[br] | offsets[a], bases[bc] | offsets[b]);
                }
            }
        }
    }
    ComplexMatrix mapped = super * blocks;
    ComplexMatrix result(dim, dim);
    for (size_t br = 0; br < nb; br++) {
        for (size_t bc = 0; bc < nb; bc++) {
            for (size_t b = 0; b < d; b++) {
                for (size_t a = 0; a < d; a++) {
                    result(bases[br] | offsets[a], bases[bc] | offsets[b]) = mapped(a + d * b, br + nb * bc);
                }
            }
        }
    }
    matrix_ = std::move(result);
}

double DensityMatrix::expectation(const FactoredOperator &observable) const {
    if (observable.num_qubits() != num_qubits_) {
        fail(ErrorCode::InvalidArgument, "observable size does not match the register");
    }
    ComplexMatrix e = dense_matrix(observable);
    return (e.cwiseProduct(matrix_.transpose())).sum().real();
}

double run_exact(const Circuit &circuit) {
    check_size(circuit.num_qubits);
    circuit.validate();
    DensityMatrix rho(circuit.input);
    for (const auto &app : circuit.channels) {
        rho.apply(app);
    }
    return rho.expectation(circuit.observable);
}

ComplexMatrix apply_kraus(std::span<const ComplexMatrix> ops, const ComplexMatrix &rho) {
    if (ops.empty()) {
        fail(ErrorCode::Validation, "empty Kraus set");
    }
    Eigen::Index d = rho.rows();
    if (rho.cols() != d) {
        fail(ErrorCode::Validation, "input operator is not square");
    }
    ComplexMatrix completeness = ComplexMatrix::Zero(ops[0].cols(), ops[0].cols());
    for (const auto &k : ops) {
        if (k.cols() != d || k.rows() != ops[0].rows()) {
            fail(ErrorCode::Validation, "Kraus operators have mismatched shapes");
        }
        completeness += k.adjoint() * k;
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(completeness, Eigen::EigenvaluesOnly);
    if (solver.eigenvalues().maxCoeff() > 1 + 1e-8) {
        fail(ErrorCode::Validation, "Kraus operators are trace increasing");
    }
    ComplexMatrix out = ComplexMatrix::Zero(ops[0].rows(), ops[0].rows());
    for (const auto &k : ops) {
        out += k * rho * k.adjoint();
    }
    return out;
}

Ptm ptm_from_kraus(std::span<const ComplexMatrix> ops) {
    if (ops.empty()) {
        fail(ErrorCode::Validation, "empty Kraus set");
    }
    size_t k_in = qubits_for_dimension(ops[0].cols());
    size_t k_out = qubits_for_dimension(ops[0].rows());
    size_t in_count = size_t{1} << (2 * k_in);
    size_t out_count = size_t{1} << (2 * k_out);
    Eigen::MatrixXd r(out_count, in_count);
    for (size_t j = 0; j < in_count; j++) {
        ComplexMatrix image = apply_kraus(ops, pauli_matrix(j, k_in));
        std::vector<double> c = pauli_coefficients(image);
        for (size_t i = 0; i < out_count; i++) {
            r(i, j) = c[i];
        }
    }
    return Ptm(k_in, k_out, std::move(r));
}

}  // namespace pauliprop
