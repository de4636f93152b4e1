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

#ifndef PAULIPROP_CIRCUIT_H
#define PAULIPROP_CIRCUIT_H

#include <cstddef>
#include <vector>

#include "pauliprop/dense_operator.h"
#include "pauliprop/ptm.h"

namespace pauliprop {

/// rho_0, then channels[0], channels[1], ..., measured against `observable`.
struct Circuit {
    size_t num_qubits = 0;
    FactoredOperator input;
    std::vector<ChannelApplication> channels;
    FactoredOperator observable;

    /// Throws Validation if the input is not a state, the register sizes
    /// disagree or a channel is malformed.
    void validate() const;
};

}  // namespace pauliprop

#endif
