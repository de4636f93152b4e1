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

#include "pauliprop/circuit.h"

#include <string>

#include "pauliprop/error.h"

namespace pauliprop {

void Circuit::validate() const {
    if (input.num_qubits() != num_qubits) {
        fail(ErrorCode::Validation, "input covers " + std::to_string(input.num_qubits()) + " qubits, circuit has " +
                                        std::to_string(num_qubits));
    }
    if (observable.num_qubits() != num_qubits) {
        fail(ErrorCode::Validation, "observable covers " + std::to_string(observable.num_qubits()) +
                                        " qubits, circuit has " + std::to_string(num_qubits));
    }
    if (!input.is_state(1e-9)) {
        fail(ErrorCode::Validation, "input factors must be density matrices");
    }
    for (size_t k = 0; k < channels.size(); k++) {
        try {
            channels[k].validate(num_qubits);
        } catch (const Error &e) {
            fail(e.code(), "channels[" + std::to_string(k) + "]: " + e.what());
        }
    }
}

}  // namespace pauliprop
