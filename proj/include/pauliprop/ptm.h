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

#ifndef PAULIPROP_PTM_H
#define PAULIPROP_PTM_H

#include <Eigen/Dense>
#include <cstddef>
#include <string_view>
#include <vector>

#include "pauliprop/dense_operator.h"
#include "pauliprop/pauli_string.h"

namespace pauliprop {

/// Channels act on at most this many qubits (a 2-qubit channel made adaptive
/// on one extra control qubit reaches the cap).
inline constexpr size_t kMaxChannelQubits = 3;

/// Smallest Choi eigenvalue accepted as completely positive.
inline constexpr double kCompletePositivityTolerance = 1e-8;

/// Pauli transfer matrix R_ij = 2^-k_out Tr(sigma_i Lambda(sigma_j)).
///
/// Row and column indices are local Pauli indices (identity is index 0), so
/// column j holds the Pauli coefficients of Lambda(sigma_j).
class Ptm {
  public:
    Ptm() = default;
    /// Throws Validation on a shape mismatch or too many qubits.
    Ptm(size_t k_in, size_t k_out, Eigen::MatrixXd matrix);
    static Ptm identity(size_t num_qubits);

    size_t k_in() const {
        return k_in_;
    }
    size_t k_out() const {
        return k_out_;
    }
    const Eigen::MatrixXd &matrix() const {
        return matrix_;
    }
    double operator()(size_t i, size_t j) const {
        return matrix_(i, j);
    }

    /// First row is (1, 0, ..., 0).
    bool is_trace_preserving(double tol = 1e-10) const;
    /// First column is (1, 0, ..., 0)^T.
    bool is_unital(double tol = 1e-10) const;

  private:
    size_t k_in_ = 0;
    size_t k_out_ = 0;
    Eigen::MatrixXd matrix_;
};

/// D(Lambda): largest column L1 norm.
double channel_norm(const Ptm &ptm);
/// D(Lambda^dagger): largest row L1 norm.
double adjoint_norm(const Ptm &ptm);

/// Adjoint channel; its PTM is the transpose.
Ptm adjoint(const Ptm &ptm);

/// `a` after `b`. Throws InvalidArgument if a.k_in() != b.k_out().
Ptm compose(const Ptm &a, const Ptm &b);

/// Parallel composition with `low` on the lower-indexed qubits.
Ptm tensor(const Ptm &low, const Ptm &high);

/// e^{-i theta Z / 2}.
Ptm make_rotation(double theta);
/// Depolarizing channel with fidelity f on `num_qubits` qubits: every
/// non-identity Pauli is scaled by f. Throws InvalidArgument unless f in [0, 1].
Ptm make_depolarizing(double f, size_t num_qubits = 1);
/// Depolarized Z rotation: rotation by theta followed by depolarizing noise f.
Ptm make_depolarized_rotation(double f, double theta);
/// "h", "s", "sdg", "x", "y", "z", "cnot" (control first), "cz", "swap".
Ptm make_clifford(std::string_view name);
/// make_clifford plus "t" and "tdg".
Ptm make_gate(std::string_view name);
/// Z-basis measurement that keeps the qubit: diag(1, 0, 0, 1).
Ptm make_measure_z();
/// Lambda(sigma) = Tr(sigma) rho. Throws Validation unless rho is a state.
Ptm make_reset(const DenseOperator &rho);
/// Measure a control qubit in the Z basis and apply `inner` on outcome 1.
/// The control is the first (lowest) qubit of the returned block.
Ptm make_adaptive(const Ptm &inner);
/// e^{-i angle P} for a Pauli word P on up to kMaxChannelQubits qubits.
Ptm make_pauli_rotation(const PauliString &pauli, double angle);

bool is_completely_positive(const Ptm &ptm, double tol = kCompletePositivityTolerance);
/// Throws NotCompletelyPositive when is_completely_positive fails.
void require_completely_positive(const Ptm &ptm, std::string_view what);

/// A PTM bound to an ordered subset of circuit qubits. qubits[t] carries the
/// t-th local qubit (t-th base-4 digit) of the PTM.
struct ChannelApplication {
    Ptm ptm;
    std::vector<size_t> qubits;
    /// Throws Validation on bad qubit lists or k_in != k_out.
    void validate(size_t num_qubits) const;
};

/// Coefficients of Lambda(sigma) on app.qubits, where sigma is the local word
/// of p on those qubits (the corresponding PTM column).
PauliCoeffs apply_to_pauli(const ChannelApplication &app, const PauliString &p);

/// Normalized Choi state together with its postselection probability.
struct ChoiState {
    size_t k_in = 0;
    size_t k_out = 0;
    /// Density matrix on H_out (low qubits) tensor H_in (high qubits).
    ComplexMatrix normalized;
    double p_lambda = 1;
};

/// (Lambda tensor id)(|Bell><Bell|), output register on the low qubits.
ComplexMatrix unnormalized_choi(const Ptm &ptm);

/// Throws NotCompletelyPositive for non-CP maps, ZeroOperator for the zero map.
ChoiState choi_from_ptm(const Ptm &ptm);

/// p with 1/p = dim(H_in) max_psi Tr(normalized (I tensor |psi><psi|^T)),
/// i.e. the inverse of dim(H_in) times the top eigenvalue of the input marginal.
double postselection_probability(const ComplexMatrix &normalized, size_t k_in, size_t k_out);

/// PTM of the unique postselective channel with this normalized Choi state.
/// Throws NotCompletelyPositive if the matrix is not PSD.
Ptm ptm_from_choi(const ComplexMatrix &normalized, size_t k_in, size_t k_out);

/// dim(H_in) Tr_in(phi (I tensor rho^T)) with phi the unnormalized Choi state.
ComplexMatrix apply_choi(const ComplexMatrix &unnormalized, const ComplexMatrix &rho, size_t k_in, size_t k_out);

}  // namespace pauliprop

#endif
