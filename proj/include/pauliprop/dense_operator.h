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

#ifndef PAULIPROP_DENSE_OPERATOR_H
#define PAULIPROP_DENSE_OPERATOR_H

#include <Eigen/Dense>
#include <complex>
#include <cstddef>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "pauliprop/pauli_string.h"
#include "pauliprop/rng.h"

namespace pauliprop {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

/// Largest factor handled densely by the sampling code.
inline constexpr size_t kMaxFactorQubits = 3;

/// Coefficients below this magnitude are treated as exactly zero when
/// building sampling tables.
inline constexpr double kZeroCoefficient = 1e-12;

// Dense matrices use the computational basis with qubit 0 as the least
// significant bit of the basis index.

/// Image of basis state |column> under the local Pauli `index` on k qubits:
/// returns (row, value) with sigma|column> = value |row>.
std::pair<size_t, Complex> pauli_action(size_t index, size_t column);

ComplexMatrix pauli_matrix(size_t index, size_t num_qubits);

/// coeffs[i] = Tr(sigma_i A) / 2^k, so that A = sum_i coeffs[i] sigma_i.
std::vector<Complex> complex_pauli_coefficients(const ComplexMatrix &a);
/// Real parts of complex_pauli_coefficients; exact for Hermitian input.
std::vector<double> pauli_coefficients(const ComplexMatrix &a);

ComplexMatrix matrix_from_pauli_coefficients(std::span<const double> coeffs);
ComplexMatrix matrix_from_pauli_coefficients(std::span<const Complex> coeffs);

size_t qubits_for_dimension(size_t dim);

struct PauliCoeffs {
    size_t num_qubits = 0;
    std::vector<double> coeffs;
};

/// Hermitian operator on at most kMaxFactorQubits qubits.
class DenseOperator {
  public:
    DenseOperator() = default;
    /// Throws Validation if the matrix is not square with power-of-two
    /// dimension, too large, or not Hermitian within 1e-10.
    explicit DenseOperator(ComplexMatrix matrix);
    static DenseOperator from_pauli_coeffs(std::span<const double> coeffs);
    static DenseOperator from_pauli(const PauliString &pauli);

    size_t num_qubits() const {
        return num_qubits_;
    }
    const ComplexMatrix &matrix() const {
        return matrix_;
    }
    const PauliCoeffs &pauli_coeffs() const {
        return coeffs_;
    }
    double trace() const;
    /// Unit trace and smallest eigenvalue >= -tol.
    bool is_state(double tol = 1e-10) const;

  private:
    size_t num_qubits_ = 0;
    ComplexMatrix matrix_;
    PauliCoeffs coeffs_;
};

/// 2^-k sum_sigma |Tr(sigma A)|.
double stabilizer_norm(const PauliCoeffs &coeffs);
double stabilizer_norm(const DenseOperator &a);

/// max_sigma |Tr(sigma A)| (unnormalized trace).
double max_pauli_trace(const DenseOperator &a);

/// Library of named single-qubit states: "zero", "one", "plus", "minus",
/// "plus_i", "minus_i", "maximally_mixed", "H_state" (Hadamard eigenstate,
/// Bloch vector (1,0,1)/sqrt2) and "T_state" (T|+>, Bloch vector (1,1,0)/sqrt2).
/// Throws Parse for unknown names.
DenseOperator named_state(std::string_view name);
DenseOperator state_from_bloch(double x, double y, double z);

/// Categorical sampler over the Pauli decomposition of one operator.
///
/// Pauli i is drawn with probability |coeffs[i]| / D and returned with
/// weight sign(coeffs[i]) * D, where D is the sum of |coeffs| over the support.
class PauliSampler {
  public:
    PauliSampler() = default;
    explicit PauliSampler(std::span<const double> coeffs);

    /// Throws ZeroOperator if the support is empty.
    size_t sample(Rng &rng) const {
        if (indices_.size() == 1) {
            return indices_[0];
        }
        return indices_[pick(uniform01(rng))];
    }
    /// Signed weight that goes with a sampled index.
    double weight(size_t index) const {
        return weights_[index];
    }
    double norm() const {
        return norm_;
    }
    bool deterministic() const {
        return indices_.size() == 1;
    }
    bool empty() const {
        return indices_.empty();
    }
    std::span<const size_t> support() const {
        return indices_;
    }
    /// Probability of drawing `index`.
    double probability(size_t index) const;

  private:
    size_t pick(double u) const;

    double norm_ = 0;
    std::vector<size_t> indices_;
    std::vector<double> cumulative_;
    std::vector<double> weights_;
};

/// Draws (sigma, c) from a dense operator. Throws ZeroOperator if D(A) = 0.
SignedPauli sample_pauli(const DenseOperator &a, Rng &rng);

struct Factor {
    std::vector<size_t> qubits;
    DenseOperator op;
};

/// Tensor product of small operators on disjoint qubit subsets covering the
/// register. Used both for input states and for observables.
class FactoredOperator {
  public:
    FactoredOperator() = default;
    /// Throws Validation unless the factors partition [0, num_qubits).
    FactoredOperator(size_t num_qubits, std::vector<Factor> factors);
    /// Same operator on every qubit.
    static FactoredOperator product(size_t num_qubits, const DenseOperator &single);
    /// Pauli observable, one single-qubit factor per qubit.
    static FactoredOperator from_pauli(const PauliString &pauli);

    size_t num_qubits() const {
        return num_qubits_;
    }
    const std::vector<Factor> &factors() const {
        return factors_;
    }
    bool is_state(double tol = 1e-10) const;

  private:
    size_t num_qubits_ = 0;
    std::vector<Factor> factors_;
};

double stabilizer_norm(const FactoredOperator &s);
double max_pauli_trace(const FactoredOperator &s);

/// Per-factor samplers for a FactoredOperator. Deterministic factors are
/// folded into a fixed prefix so the per-sample cost only depends on the
/// random factors.
class FactoredSampler {
  public:
    FactoredSampler() = default;
    /// Throws ZeroOperator if some factor has D = 0.
    explicit FactoredSampler(const FactoredOperator &s);

    /// Writes the sampled Pauli into `out` (which must already span the
    /// register) and returns the weight.
    double sample_into(Rng &rng, PauliString &out) const;
    double norm() const {
        return norm_;
    }

  private:
    struct RandomFactor {
        std::vector<size_t> qubits;
        PauliSampler sampler;
    };
    PauliString fixed_;
    double fixed_weight_ = 1;
    double norm_ = 1;
    std::vector<RandomFactor> random_;
};

SignedPauli sample_pauli(const FactoredOperator &s, Rng &rng);

/// Unnormalized trace products for Pauli strings against a FactoredOperator.
class FactoredTracer {
  public:
    FactoredTracer() = default;
    explicit FactoredTracer(const FactoredOperator &s);

    /// Product over factors of Tr(sigma|_f A_f).
    double trace(const PauliString &p) const;

  private:
    struct Entry {
        std::vector<size_t> qubits;
        std::vector<double> traces;
    };
    struct Single {
        size_t qubit;
        double traces[4];
    };
    std::vector<Single> singles_;
    std::vector<Entry> multi_;
};

/// Tr(p S), computed factor by factor. Throws InvalidArgument on size mismatch.
double trace_with_factored(const PauliString &p, const FactoredOperator &s);

}  // namespace pauliprop

#endif
