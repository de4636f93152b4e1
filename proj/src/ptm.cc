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

#include "pauliprop/ptm.h"

#include <cmath>
#include <numbers>
#include <string>

#include "pauliprop/error.h"

namespace pauliprop {

namespace {

size_t pauli_count(size_t k) {
    return size_t{1} << (2 * k);
}

/// Local Pauli word with a phase i^phase, used only to build Clifford and
/// Pauli-rotation tables.
struct PhasedPauli {
    size_t index = 0;
    int phase = 0;
};

PhasedPauli multiply(PhasedPauli a, PhasedPauli b) {
    PhasedPauli out{0, (a.phase + b.phase) & 3};
    for (size_t shift = 0; (a.index >> shift) != 0 || (b.index >> shift) != 0; shift += 2) {
        uint8_t p = (a.index >> shift) & 3;
        uint8_t q = (b.index >> shift) & 3;
        uint8_t r;
        if (p == 0) {
            r = q;
        } else if (q == 0 || p == q) {
            r = p == q ? 0 : p;
        } else {
            r = static_cast<uint8_t>(6 - p - q);
            // XY = iZ, YZ = iX, ZX = iY; the reversed products pick up -i.
            bool cyclic = (p == PAULI_X && q == PAULI_Y) || (p == PAULI_Y && q == PAULI_Z) ||
                          (p == PAULI_Z && q == PAULI_X);
            out.phase = (out.phase + (cyclic ? 1 : 3)) & 3;
        }
        out.index |= size_t{r} << shift;
    }
    return out;
}

bool anticommute(size_t a, size_t b) {
    int count = 0;
    for (; a != 0 || b != 0; a >>= 2, b >>= 2) {
        uint8_t p = a & 3;
        uint8_t q = b & 3;
        count += (p != 0 && q != 0 && p != q);
    }
    return count & 1;
}

/// Images of X_q and Z_q under conjugation by a Clifford, as signed words.
struct CliffordImages {
    size_t num_qubits;
    std::vector<PhasedPauli> x_images;
    std::vector<PhasedPauli> z_images;
};

Ptm ptm_from_clifford_images(const CliffordImages &c) {
    size_t count = pauli_count(c.num_qubits);
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(count, count);
    for (size_t j = 0; j < count; j++) {
        PhasedPauli image{0, 0};
        for (size_t q = 0; q < c.num_qubits; q++) {
            uint8_t code = (j >> (2 * q)) & 3;
            PhasedPauli local{0, 0};
            if (code == PAULI_X) {
                local = c.x_images[q];
            } else if (code == PAULI_Z) {
                local = c.z_images[q];
            } else if (code == PAULI_Y) {
                // Y = i X Z.
                local = multiply(c.x_images[q], c.z_images[q]);
                local.phase = (local.phase + 1) & 3;
            }
            image = multiply(image, local);
        }
        if (image.phase & 1) {
            fail(ErrorCode::InvalidArgument, "Clifford images produce a non-Hermitian Pauli image");
        }
        m(image.index, j) = image.phase == 0 ? 1.0 : -1.0;
    }
    return Ptm(c.num_qubits, c.num_qubits, std::move(m));
}

PhasedPauli word(std::string_view text, int sign = 1) {
    PauliString p = PauliString::from_text(text);
    std::vector<size_t> all(text.size());
    for (size_t q = 0; q < all.size(); q++) {
        all[q] = q;
    }
    return PhasedPauli{p.local_index(all), sign > 0 ? 0 : 2};
}

}  // namespace

Ptm::Ptm(size_t k_in, size_t k_out, Eigen::MatrixXd matrix) : k_in_(k_in), k_out_(k_out), matrix_(std::move(matrix)) {
    if (k_in > kMaxChannelQubits || k_out > kMaxChannelQubits) {
        fail(ErrorCode::Validation, "channels are limited to " + std::to_string(kMaxChannelQubits) + " qubits");
    }
    if (static_cast<size_t>(matrix_.rows()) != pauli_count(k_out) ||
        static_cast<size_t>(matrix_.cols()) != pauli_count(k_in)) {
        fail(ErrorCode::Validation, "PTM shape " + std::to_string(matrix_.rows()) + "x" +
                                        std::to_string(matrix_.cols()) + " does not match " +
                                        std::to_string(k_in) + " -> " + std::to_string(k_out) + " qubits");
    }
    if (!matrix_.allFinite()) {
        fail(ErrorCode::Validation, "PTM has non-finite entries");
    }
}

Ptm Ptm::identity(size_t num_qubits) {
    size_t count = pauli_count(num_qubits);
    return Ptm(num_qubits, num_qubits, Eigen::MatrixXd::Identity(count, count));
}

bool Ptm::is_trace_preserving(double tol) const {
    for (Eigen::Index j = 0; j < matrix_.cols(); j++) {
        if (std::abs(matrix_(0, j) - (j == 0 ? 1.0 : 0.0)) > tol) {
            return false;
        }
    }
    return true;
}

bool Ptm::is_unital(double tol) const {
    for (Eigen::Index i = 0; i < matrix_.rows(); i++) {
        if (std::abs(matrix_(i, 0) - (i == 0 ? 1.0 : 0.0)) > tol) {
            return false;
        }
    }
    return true;
}

double channel_norm(const Ptm &ptm) {
    return ptm.matrix().cwiseAbs().colwise().sum().maxCoeff();
}

double adjoint_norm(const Ptm &ptm) {
    return ptm.matrix().cwiseAbs().rowwise().sum().maxCoeff();
}

Ptm adjoint(const Ptm &ptm) {
    return Ptm(ptm.k_out(), ptm.k_in(), ptm.matrix().transpose());
}

Ptm compose(const Ptm &a, const Ptm &b) {
    if (a.k_in() != b.k_out()) {
        fail(ErrorCode::InvalidArgument, "cannot compose a " + std::to_string(a.k_in()) +
                                             "-qubit-input channel after a " + std::to_string(b.k_out()) +
                                             "-qubit-output channel");
    }
    return Ptm(b.k_in(), a.k_out(), a.matrix() * b.matrix());
}

Ptm tensor(const Ptm &low, const Ptm &high) {
    size_t lo_rows = low.matrix().rows();
    size_t lo_cols = low.matrix().cols();
    Eigen::MatrixXd m(lo_rows * high.matrix().rows(), lo_cols * high.matrix().cols());
    for (Eigen::Index hi = 0; hi < high.matrix().rows(); hi++) {
        for (Eigen::Index hj = 0; hj < high.matrix().cols(); hj++) {
            m.block(hi * lo_rows, hj * lo_cols, lo_rows, lo_cols) = high(hi, hj) * low.matrix();
        }
    }
    return Ptm(low.k_in() + high.k_in(), low.k_out() + high.k_out(), std::move(m));
}

Ptm make_rotation(double theta) {
    Eigen::MatrixXd m = Eigen::MatrixXd::Identity(4, 4);
    m(1, 1) = std::cos(theta);
    m(1, 2) = -std::sin(theta);
    m(2, 1) = std::sin(theta);
    m(2, 2) = std::cos(theta);
    return Ptm(1, 1, std::move(m));
}

Ptm make_depolarizing(double f, size_t num_qubits) {
    if (!(f >= 0 && f <= 1)) {
        fail(ErrorCode::InvalidArgument, "depolarizing fidelity " + std::to_string(f) + " outside [0, 1]");
    }
    size_t count = pauli_count(num_qubits);
    Eigen::MatrixXd m = Eigen::MatrixXd::Identity(count, count) * f;
    m(0, 0) = 1;
    return Ptm(num_qubits, num_qubits, std::move(m));
}

Ptm make_depolarized_rotation(double f, double theta) {
    return compose(make_depolarizing(f), make_rotation(theta));
}

Ptm make_clifford(std::string_view name) {
    if (name == "h") {
        return ptm_from_clifford_images({1, {word("Z")}, {word("X")}});
    }
    if (name == "s") {
        return ptm_from_clifford_images({1, {word("Y")}, {word("Z")}});
    }
    if (name == "sdg") {
        return ptm_from_clifford_images({1, {word("Y", -1)}, {word("Z")}});
    }
    if (name == "x") {
        return ptm_from_clifford_images({1, {word("X")}, {word("Z", -1)}});
    }
    if (name == "y") {
        return ptm_from_clifford_images({1, {word("X", -1)}, {word("Z", -1)}});
    }
    if (name == "z") {
        return ptm_from_clifford_images({1, {word("X", -1)}, {word("Z")}});
    }
    if (name == "cnot") {
        return ptm_from_clifford_images({2, {word("XX"), word("IX")}, {word("ZI"), word("ZZ")}});
    }
    if (name == "cz") {
        return ptm_from_clifford_images({2, {word("XZ"), word("ZX")}, {word("ZI"), word("IZ")}});
    }
    if (name == "swap") {
        return ptm_from_clifford_images({2, {word("IX"), word("XI")}, {word("IZ"), word("ZI")}});
    }
    fail(ErrorCode::Parse, "unknown Clifford gate \"" + std::string(name) + "\"");
}

Ptm make_gate(std::string_view name) {
    if (name == "t") {
        return make_rotation(std::numbers::pi / 4);
    }
    if (name == "tdg") {
        return make_rotation(-std::numbers::pi / 4);
    }
    return make_clifford(name);
}

Ptm make_measure_z() {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(4, 4);
    m(0, 0) = 1;
    m(3, 3) = 1;
    return Ptm(1, 1, std::move(m));
}

Ptm make_reset(const DenseOperator &rho) {
    if (!rho.is_state(1e-9)) {
        fail(ErrorCode::Validation, "reset target is not a density matrix");
    }
    size_t k = rho.num_qubits();
    size_t count = pauli_count(k);
    double dim = static_cast<double>(size_t{1} << k);
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(count, count);
    // Lambda(I) = Tr(I) rho, so column 0 holds Tr(sigma_i rho); every other
    // input Pauli is traceless and maps to zero.
    const auto &c = rho.pauli_coeffs().coeffs;
    for (size_t i = 0; i < count; i++) {
        m(i, 0) = dim * c[i];
    }
    return Ptm(k, k, std::move(m));
}

Ptm make_adaptive(const Ptm &inner) {
    if (inner.k_in() != inner.k_out()) {
        fail(ErrorCode::InvalidArgument, "adaptive channels need an inner channel with k_in == k_out");
    }
    size_t k = inner.k_in() + 1;
    if (k > kMaxChannelQubits) {
        fail(ErrorCode::Validation, "adaptive channel would act on " + std::to_string(k) + " qubits");
    }
    size_t count = pauli_count(k);
    size_t inner_count = pauli_count(inner.k_in());
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(count, count);
    for (size_t i = 0; i < inner_count; i++) {
        for (size_t j = 0; j < inner_count; j++) {
            double delta = i == j ? 1.0 : 0.0;
            double r = inner(i, j);
            size_t ii = 4 * i;
            size_t jj = 4 * j;
            m(ii + PAULI_I, jj + PAULI_I) = 0.5 * (delta + r);
            m(ii + PAULI_Z, jj + PAULI_I) = 0.5 * (delta - r);
            m(ii + PAULI_I, jj + PAULI_Z) = 0.5 * (delta - r);
            m(ii + PAULI_Z, jj + PAULI_Z) = 0.5 * (delta + r);
        }
    }
    return Ptm(k, k, std::move(m));
}

Ptm make_pauli_rotation(const PauliString &pauli, double angle) {
    size_t k = pauli.num_qubits();
    if (k == 0 || k > kMaxChannelQubits) {
        fail(ErrorCode::Validation, "Pauli rotations act on 1 to " + std::to_string(kMaxChannelQubits) + " qubits");
    }
    std::vector<size_t> all(k);
    for (size_t q = 0; q < k; q++) {
        all[q] = q;
    }
    size_t p = pauli.local_index(all);
    size_t count = pauli_count(k);
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(count, count);
    double c = std::cos(2 * angle);
    double s = std::sin(2 * angle);
    for (size_t j = 0; j < count; j++) {
        if (!anticommute(j, p)) {
            m(j, j) = 1;
            continue;
        }
        // e^{-i a P} Q e^{i a P} = cos(2a) Q + i sin(2a) Q P for anticommuting P, Q.
        PhasedPauli qp = multiply(PhasedPauli{j, 0}, PhasedPauli{p, 0});
        int phase = (qp.phase + 1) & 3;
        m(j, j) = c;
        m(qp.index, j) += phase == 0 ? s : -s;
    }
    return Ptm(k, k, std::move(m));
}

bool is_completely_positive(const Ptm &ptm, double tol) {
    ComplexMatrix choi = unnormalized_choi(ptm);
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(choi, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff() >= -tol;
}

void require_completely_positive(const Ptm &ptm, std::string_view what) {
    if (!is_completely_positive(ptm)) {
        fail(ErrorCode::NotCompletelyPositive, std::string(what) + " is not completely positive");
    }
}

void ChannelApplication::validate(size_t num_qubits) const {
    if (ptm.k_in() != ptm.k_out()) {
        fail(ErrorCode::Validation, "in-circuit channels must map k qubits to k qubits");
    }
    if (qubits.size() != ptm.k_in()) {
        fail(ErrorCode::Validation, "channel acts on " + std::to_string(ptm.k_in()) + " qubits but lists " +
                                        std::to_string(qubits.size()));
    }
    for (size_t a = 0; a < qubits.size(); a++) {
        if (qubits[a] >= num_qubits) {
            fail(ErrorCode::Validation, "channel qubit " + std::to_string(qubits[a]) + " outside a " +
                                            std::to_string(num_qubits) + "-qubit register");
        }
        for (size_t b = 0; b < a; b++) {
            if (qubits[a] == qubits[b]) {
                fail(ErrorCode::Validation, "channel lists qubit " + std::to_string(qubits[a]) + " twice");
            }
        }
    }
}

PauliCoeffs apply_to_pauli(const ChannelApplication &app, const PauliString &p) {
    size_t j = p.local_index(app.qubits);
    PauliCoeffs out{app.ptm.k_out(), std::vector<double>(app.ptm.matrix().rows())};
    for (size_t i = 0; i < out.coeffs.size(); i++) {
        out.coeffs[i] = app.ptm(i, j);
    }
    return out;
}

}  // namespace pauliprop
