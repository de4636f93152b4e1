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

#ifndef PAULIPROP_ORACLE_H
#define PAULIPROP_ORACLE_H

#include <cstddef>
#include <span>

#include "pauliprop/circuit.h"
#include "pauliprop/dense_operator.h"
#include "pauliprop/ptm.h"

namespace pauliprop {

inline constexpr size_t kMaxOracleQubits = 8;

/// Full-register dense matrix used as ground truth.
class DensityMatrix {
  public:
    /// Throws OracleTooLarge past kMaxOracleQubits.
    explicit DensityMatrix(const FactoredOperator &state);

    size_t num_qubits() const {
        return num_qubits_;
    }
    const ComplexMatrix &matrix() const {
        return matrix_;
    }

    void apply(const ChannelApplication &app);
    /// Tr(E rho).
    double expectation(const FactoredOperator &observable) const;

  private:
    size_t num_qubits_;
    ComplexMatrix matrix_;
};

/// Dense matrix of a factored operator on the whole register.
ComplexMatrix dense_matrix(const FactoredOperator &op);

/// Tr(E rho_k), computed densely. Throws OracleTooLarge past kMaxOracleQubits.
double run_exact(const Circuit &circuit);

/// sum_K K rho K^dagger. Throws Validation unless sum_K K^dagger K <= I
/// within 1e-8, or on mismatched shapes.
ComplexMatrix apply_kraus(std::span<const ComplexMatrix> ops, const ComplexMatrix &rho);

/// R_ij = 2^-k Tr(sigma_i Lambda(sigma_j)) for the Kraus map, computed densely.
Ptm ptm_from_kraus(std::span<const ComplexMatrix> ops);

}  // namespace pauliprop

#endif
