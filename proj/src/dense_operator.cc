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

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "pauliprop/error.h"

namespace pauliprop {

std::pair<size_t, Complex> pauli_action(size_t index, size_t column) {
    size_t row = column;
    Complex value(1, 0);
    for (size_t q = 0; index != 0; q++, index >>= 2) {
        uint8_t code = index & 3;
        bool bit = (column >> q) & 1;
        switch (code) {
            case PAULI_X:
                row ^= size_t{1} << q;
                break;
            case PAULI_Y:
                row ^= size_t{1} << q;
                value *= bit ? Complex(0, -1) : Complex(0, 1);
                break;
            case PAULI_Z:
                if (bit) {
                    value = -value;
                }
                break;
            default:
                break;
        }
    }
    return {row, value};
}

size_t qubits_for_dimension(size_t dim) {
    if (dim == 0 || !std::has_single_bit(dim)) {
        fail(ErrorCode::Validation, "operator dimension " + std::to_string(dim) + " is not a power of two");
    }
    return static_cast<size_t>(std::countr_zero(dim));
}

ComplexMatrix pauli_matrix(size_t index, size_t num_qubits) {
    size_t dim = size_t{1} << num_qubits;
    ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
    for (size_t c = 0; c < dim; c++) {
        auto [r, v] = pauli_action(index, c);
        m(r, c) = v;
    }
    return m;
}

std::vector<Complex> complex_pauli_coefficients(const ComplexMatrix &a) {
    if (a.rows() != a.cols()) {
        fail(ErrorCode::Validation, "operator matrix is not square");
    }
    size_t dim = a.rows();
    size_t k = qubits_for_dimension(dim);
    size_t count = size_t{1} << (2 * k);
    std::vector<Complex> out(count);
    double scale = 1.0 / static_cast<double>(dim);
    for (size_t i = 0; i < count; i++) {
        // Tr(sigma A) = sum_c <c|sigma A|c> = sum_r sigma[row(r), r] A[r, row(r)].
        Complex total = 0;
        for (size_t r = 0; r < dim; r++) {
            auto [row, v] = pauli_action(i, r);
            total += v * a(r, row);
        }
        out[i] = total * scale;
    }
    return out;
}

std::vector<double> pauli_coefficients(const ComplexMatrix &a) {
    auto c = complex_pauli_coefficients(a);
    std::vector<double> out(c.size());
    for (size_t i = 0; i < c.size(); i++) {
        out[i] = c[i].real();
    }
    return out;
}

namespace {

template <typename T>
ComplexMatrix matrix_from_coefficients_impl(std::span<const T> coeffs) {
    size_t count = coeffs.size();
    if (count == 0 || !std::has_single_bit(count) || (std::countr_zero(count) & 1)) {
        fail(ErrorCode::Validation, "Pauli coefficient list length " + std::to_string(count) +
                                        " is not a power of four");
    }
    size_t k = std::countr_zero(count) / 2;
    size_t dim = size_t{1} << k;
    ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
    for (size_t i = 0; i < count; i++) {
        if (coeffs[i] == T(0)) {
            continue;
        }
        for (size_t c = 0; c < dim; c++) {
            auto [r, v] = pauli_action(i, c);
            m(r, c) += Complex(coeffs[i]) * v;
        }
    }
    return m;
}

}  // namespace

ComplexMatrix matrix_from_pauli_coefficients(std::span<const double> coeffs) {
    return matrix_from_coefficients_impl(coeffs);
}

ComplexMatrix matrix_from_pauli_coefficients(std::span<const Complex> coeffs) {
    return matrix_from_coefficients_impl(coeffs);
}

DenseOperator::DenseOperator(ComplexMatrix matrix) : matrix_(std::move(matrix)) {
    if (matrix_.rows() != matrix_.cols()) {
        fail(ErrorCode::Validation, "operator matrix is not square");
    }
    num_qubits_ = qubits_for_dimension(matrix_.rows());
    if (num_qubits_ > kMaxFactorQubits) {
        fail(ErrorCode::Validation, "dense operators are limited to " + std::to_string(kMaxFactorQubits) +
                                        " qubits, got " + std::to_string(num_qubits_));
    }
    double skew = (matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff();
    if (skew > 1e-10) {
        fail(ErrorCode::Validation, "operator is not Hermitian (deviation " + std::to_string(skew) + ")");
    }
    coeffs_.num_qubits = num_qubits_;
    coeffs_.coeffs = pauli_coefficients(matrix_);
}

DenseOperator DenseOperator::from_pauli_coeffs(std::span<const double> coeffs) {
    return DenseOperator(matrix_from_pauli_coefficients(coeffs));
}

DenseOperator DenseOperator::from_pauli(const PauliString &pauli) {
    std::vector<size_t> all(pauli.num_qubits());
    for (size_t q = 0; q < all.size(); q++) {
        all[q] = q;
    }
    return DenseOperator(pauli_matrix(pauli.local_index(all), pauli.num_qubits()));
}

double DenseOperator::trace() const {
    return matrix_.trace().real();
}

bool DenseOperator::is_state(double tol) const {
    if (std::abs(trace() - 1) > tol) {
        return false;
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(matrix_, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff() >= -tol;
}

double stabilizer_norm(const PauliCoeffs &coeffs) {
    double total = 0;
    for (double c : coeffs.coeffs) {
        total += std::abs(c);
    }
    return total;
}

double stabilizer_norm(const DenseOperator &a) {
    return stabilizer_norm(a.pauli_coeffs());
}

double max_pauli_trace(const DenseOperator &a) {
    double best = 0;
    for (double c : a.pauli_coeffs().coeffs) {
        best = std::max(best, std::abs(c));
    }
    return best * static_cast<double>(size_t{1} << a.num_qubits());
}

DenseOperator state_from_bloch(double x, double y, double z) {
    double coeffs[4] = {0.5, 0.5 * x, 0.5 * y, 0.5 * z};
    return DenseOperator::from_pauli_coeffs(coeffs);
}

DenseOperator named_state(std::string_view name) {
    const double r = 1 / std::sqrt(2.0);
    if (name == "zero") {
        return state_from_bloch(0, 0, 1);
    }
    if (name == "one") {
        return state_from_bloch(0, 0, -1);
    }
    if (name == "plus") {
        return state_from_bloch(1, 0, 0);
    }
    if (name == "minus") {
        return state_from_bloch(-1, 0, 0);
    }
    if (name == "plus_i") {
        return state_from_bloch(0, 1, 0);
    }
    if (name == "minus_i") {
        return state_from_bloch(0, -1, 0);
    }
    if (name == "maximally_mixed") {
        return state_from_bloch(0, 0, 0);
    }
    if (name == "H_state") {
        return state_from_bloch(r, 0, r);
    }
    if (name == "T_state") {
        return state_from_bloch(r, r, 0);
    }
    fail(ErrorCode::Parse, "unknown state name \"" + std::string(name) + "\"");
}

PauliSampler::PauliSampler(std::span<const double> coeffs) : weights_(coeffs.size(), 0.0) {
    for (size_t i = 0; i < coeffs.size(); i++) {
        if (std::abs(coeffs[i]) > kZeroCoefficient) {
            indices_.push_back(i);
            norm_ += std::abs(coeffs[i]);
        }
    }
    double running = 0;
    for (size_t i : indices_) {
        running += std::abs(coeffs[i]);
        cumulative_.push_back(running / norm_);
        weights_[i] = coeffs[i] > 0 ? norm_ : -norm_;
    }
    if (!cumulative_.empty()) {
        cumulative_.back() = 1.0;
    }
}

size_t PauliSampler::pick(double u) const {
    auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
    size_t k = static_cast<size_t>(it - cumulative_.begin());
    return std::min(k, cumulative_.size() - 1);
}

double PauliSampler::probability(size_t index) const {
    if (index >= weights_.size() || weights_[index] == 0) {
        return 0;
    }
    auto it = std::find(indices_.begin(), indices_.end(), index);
    size_t k = static_cast<size_t>(it - indices_.begin());
    double lo = k == 0 ? 0.0 : cumulative_[k - 1];
    return cumulative_[k] - lo;
}

SignedPauli sample_pauli(const DenseOperator &a, Rng &rng) {
    PauliSampler sampler(a.pauli_coeffs().coeffs);
    if (sampler.empty()) {
        fail(ErrorCode::ZeroOperator, "cannot sample Pauli strings from the zero operator");
    }
    size_t index = sampler.sample(rng);
    SignedPauli out{PauliString(a.num_qubits()), sampler.weight(index)};
    for (size_t q = 0; q < a.num_qubits(); q++) {
        out.pauli.set(q, static_cast<uint8_t>((index >> (2 * q)) & 3));
    }
    return out;
}

FactoredOperator::FactoredOperator(size_t num_qubits, std::vector<Factor> factors)
    : num_qubits_(num_qubits), factors_(std::move(factors)) {
    std::vector<bool> covered(num_qubits, false);
    for (const Factor &f : factors_) {
        if (f.qubits.size() != f.op.num_qubits()) {
            fail(ErrorCode::Validation, "factor lists " + std::to_string(f.qubits.size()) +
                                            " qubits but its operator acts on " +
                                            std::to_string(f.op.num_qubits()));
        }
        for (size_t q : f.qubits) {
            if (q >= num_qubits) {
                fail(ErrorCode::Validation, "factor qubit " + std::to_string(q) + " outside a " +
                                                std::to_string(num_qubits) + "-qubit register");
            }
            if (covered[q]) {
                fail(ErrorCode::Validation, "qubit " + std::to_string(q) + " appears in two factors");
            }
            covered[q] = true;
        }
    }
    for (size_t q = 0; q < num_qubits; q++) {
        if (!covered[q]) {
            fail(ErrorCode::Validation, "qubit " + std::to_string(q) + " is not covered by any factor");
        }
    }
}

FactoredOperator FactoredOperator::product(size_t num_qubits, const DenseOperator &single) {
    if (single.num_qubits() != 1) {
        fail(ErrorCode::InvalidArgument, "product() expects a single-qubit operator");
    }
    std::vector<Factor> factors;
    factors.reserve(num_qubits);
    for (size_t q = 0; q < num_qubits; q++) {
        factors.push_back(Factor{{q}, single});
    }
    return FactoredOperator(num_qubits, std::move(factors));
}

FactoredOperator FactoredOperator::from_pauli(const PauliString &pauli) {
    std::vector<Factor> factors;
    factors.reserve(pauli.num_qubits());
    for (size_t q = 0; q < pauli.num_qubits(); q++) {
        factors.push_back(Factor{{q}, DenseOperator(pauli_matrix(pauli.get(q), 1))});
    }
    return FactoredOperator(pauli.num_qubits(), std::move(factors));
}

bool FactoredOperator::is_state(double tol) const {
    return std::all_of(factors_.begin(), factors_.end(), [&](const Factor &f) { return f.op.is_state(tol); });
}

double stabilizer_norm(const FactoredOperator &s) {
    double total = 1;
    for (const Factor &f : s.factors()) {
        total *= stabilizer_norm(f.op);
    }
    return total;
}

double max_pauli_trace(const FactoredOperator &s) {
    double total = 1;
    for (const Factor &f : s.factors()) {
        total *= max_pauli_trace(f.op);
    }
    return total;
}

FactoredSampler::FactoredSampler(const FactoredOperator &s) : fixed_(s.num_qubits()) {
    for (const Factor &f : s.factors()) {
        PauliSampler sampler(f.op.pauli_coeffs().coeffs);
        if (sampler.empty()) {
            fail(ErrorCode::ZeroOperator, "factor on qubits starting at " + std::to_string(f.qubits.front()) +
                                              " is the zero operator");
        }
        norm_ *= sampler.norm();
        if (sampler.deterministic()) {
            size_t index = sampler.support()[0];
            fixed_.set_local_unchecked(f.qubits, index);
            fixed_weight_ *= sampler.weight(index);
        } else {
            random_.push_back(RandomFactor{f.qubits, std::move(sampler)});
        }
    }
}

double FactoredSampler::sample_into(Rng &rng, PauliString &out) const {
    out = fixed_;
    double weight = fixed_weight_;
    for (const RandomFactor &f : random_) {
        size_t index = f.sampler.sample(rng);
        out.set_local_unchecked(f.qubits, index);
        weight *= f.sampler.weight(index);
    }
    return weight;
}

SignedPauli sample_pauli(const FactoredOperator &s, Rng &rng) {
    FactoredSampler sampler(s);
    SignedPauli out{PauliString(s.num_qubits()), 0};
    out.coeff = sampler.sample_into(rng, out.pauli);
    return out;
}

FactoredTracer::FactoredTracer(const FactoredOperator &s) {
    for (const Factor &f : s.factors()) {
        double dim = static_cast<double>(size_t{1} << f.op.num_qubits());
        const auto &c = f.op.pauli_coeffs().coeffs;
        if (f.qubits.size() == 1) {
            Single single{f.qubits[0], {}};
            for (size_t i = 0; i < 4; i++) {
                single.traces[i] = dim * c[i];
            }
            singles_.push_back(single);
        } else {
            Entry entry{f.qubits, {}};
            for (double v : c) {
                entry.traces.push_back(dim * v);
            }
            multi_.push_back(std::move(entry));
        }
    }
}

double FactoredTracer::trace(const PauliString &p) const {
    double total = 1;
    for (const Single &s : singles_) {
        total *= s.traces[p.get(s.qubit)];
    }
    for (const Entry &e : multi_) {
        total *= e.traces[p.local_index_unchecked(e.qubits)];
    }
    return total;
}

double trace_with_factored(const PauliString &p, const FactoredOperator &s) {
    if (p.num_qubits() != s.num_qubits()) {
        fail(ErrorCode::InvalidArgument, "Pauli string has " + std::to_string(p.num_qubits()) +
                                             " qubits but the operator has " + std::to_string(s.num_qubits()));
    }
    return FactoredTracer(s).trace(p);
}

}  // namespace pauliprop
