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


#ifndef PAULIPROP_IO_H
#define PAULIPROP_IO_H

#include <string>
#include <string_view>

#include "pauliprop/circuit.h"
#include "pauliprop/magic.h"
#include "pauliprop/propagation.h"
#include "pauliprop/ptm.h"
#include "pauliprop/qaoa.h"

namespace pauliprop {

inline constexpr std::string_view kVersion = "0.1.0";

/// Circuit documents:
///
///   {"n": 2,
///    "input": "zero" | [{"qubits": [0], "state": "plus"}, ...],
///    "channels": [{"kind": "gate", "name": "h", "qubits": [0]}, ...],
///    "observable": "ZI" | [{"qubits": [1], "pauli": "Z"}, ...]}
///
/// Factor specs take exactly one of "state" (named state), "bloch" [x,y,z],
/// "pauli" (word on the listed qubits) or "pauli_coeffs". Observable qubits
/// not covered by a factor carry the identity.
///
/// Channel kinds: gate {name}, rotation {theta}, depolarizing {f},
/// depolarized_rotation {f, theta}, measure_z, reset {state | bloch |
/// pauli_coeffs}, adaptive {inner: channel spec}, ptm {matrix}, and
/// pauli_rotation {pauli, angle}.
///
/// Malformed JSON and missing or mistyped fields throw Parse; values that
/// parse but are not allowed (non-states, non-CP maps, bad qubit lists)
/// throw Validation or NotCompletelyPositive. Messages start with the
/// offending field path.
Circuit parse_circuit(std::string_view text);
Circuit load_circuit(const std::string &path);

/// A channel spec without "qubits".
Ptm parse_channel(std::string_view text);

/// {"n": 16, "max_degree": 4, "equations": [[a, b, c, d], ...]}; max_degree
/// defaults to floor(m/10).
E3Lin2Instance parse_instance(std::string_view text);
E3Lin2Instance load_instance(const std::string &path);
std::string instance_json(const E3Lin2Instance &inst);

std::string cost_report_json(const CostReport &cost);
std::string estimate_report_json(const EstimateReport &report);
std::string classification_json(const ClassificationRecord &record);

std::string read_file(const std::string &path);
void write_file(const std::string &path, std::string_view contents);

/// Shortest round-trip decimal form.
std::string format_double(double v);

}  // namespace pauliprop

#endif
