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

#include "pauliprop/pauli_string.h"

#include <bit>

#include "pauliprop/error.h"

namespace pauliprop {

char pauli_code_char(uint8_t code) {
    static constexpr char chars[4] = {'I', 'X', 'Y', 'Z'};
    return chars[code & 3];
}

PauliString::PauliString(size_t num_qubits)
    : num_qubits_(num_qubits), xs_((num_qubits + 63) / 64, 0), zs_((num_qubits + 63) / 64, 0) {
}

PauliString PauliString::from_text(std::string_view text) {
    PauliString result(text.size());
    for (size_t q = 0; q < text.size(); q++) {
        switch (text[q]) {
            case 'I':
            case '_':
                break;
            case 'X':
                result.set(q, PAULI_X);
                break;
            case 'Y':
                result.set(q, PAULI_Y);
                break;
            case 'Z':
                result.set(q, PAULI_Z);
                break;
            default:
                fail(ErrorCode::Parse, "invalid Pauli character '" + std::string(1, text[q]) + "' in \"" +
                                           std::string(text) + "\"");
        }
    }
    return result;
}

bool PauliString::is_identity() const {
    for (size_t w = 0; w < xs_.size(); w++) {
        if (xs_[w] | zs_[w]) {
            return false;
        }
    }
    return true;
}

size_t PauliString::weight() const {
    size_t total = 0;
    for (size_t w = 0; w < xs_.size(); w++) {
        total += std::popcount(xs_[w] | zs_[w]);
    }
    return total;
}

void PauliString::check_subset(std::span<const size_t> qubits) const {
    for (size_t a = 0; a < qubits.size(); a++) {
        if (qubits[a] >= num_qubits_) {
            fail(ErrorCode::InvalidArgument, "qubit index " + std::to_string(qubits[a]) +
                                                 " out of range for a " + std::to_string(num_qubits_) +
                                                 "-qubit Pauli string");
        }
        for (size_t b = 0; b < a; b++) {
            if (qubits[a] == qubits[b]) {
                fail(ErrorCode::InvalidArgument, "repeated qubit index " + std::to_string(qubits[a]));
            }
        }
    }
}

size_t PauliString::local_index(std::span<const size_t> qubits) const {
    check_subset(qubits);
    size_t index = 0;
    for (size_t k = 0; k < qubits.size(); k++) {
        index |= size_t{get(qubits[k])} << (2 * k);
    }
    return index;
}

void PauliString::set_local(std::span<const size_t> qubits, size_t index) {
    check_subset(qubits);
    if (qubits.size() < 32 && (index >> (2 * qubits.size())) != 0) {
        fail(ErrorCode::InvalidArgument, "local Pauli index " + std::to_string(index) + " out of range for " +
                                             std::to_string(qubits.size()) + " qubits");
    }
    for (size_t k = 0; k < qubits.size(); k++) {
        set(qubits[k], static_cast<uint8_t>((index >> (2 * k)) & 3));
    }
}

PauliString PauliString::with_local(std::span<const size_t> qubits, size_t index) const {
    PauliString result = *this;
    result.set_local(qubits, index);
    return result;
}

std::string PauliString::str() const {
    std::string out(num_qubits_, 'I');
    for (size_t q = 0; q < num_qubits_; q++) {
        out[q] = pauli_code_char(get(q));
    }
    return out;
}

double trace_inner_product(const PauliString &a, const PauliString &b) {
    if (a.num_qubits() != b.num_qubits()) {
        fail(ErrorCode::InvalidArgument, "trace inner product of Pauli strings on " +
                                             std::to_string(a.num_qubits()) + " and " +
                                             std::to_string(b.num_qubits()) + " qubits");
    }
    return a == b ? 1.0 : 0.0;
}

}  // namespace pauliprop
