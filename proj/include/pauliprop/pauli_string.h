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

#ifndef PAULIPROP_PAULI_STRING_H
#define PAULIPROP_PAULI_STRING_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pauliprop {

/// Single-qubit Pauli codes. These double as base-4 digits of local Pauli
/// indices: a word on qubits (q_0, q_1, ...) has index sum_k code(q_k) * 4^k.
enum PauliCode : uint8_t {
    PAULI_I = 0,
    PAULI_X = 1,
    PAULI_Y = 2,
    PAULI_Z = 3,
};

inline constexpr bool pauli_code_x(uint8_t code) {
    return code == PAULI_X || code == PAULI_Y;
}
inline constexpr bool pauli_code_z(uint8_t code) {
    return code >= PAULI_Y;
}
inline constexpr uint8_t pauli_code(bool x, bool z) {
    return x ? (z ? PAULI_Y : PAULI_X) : (z ? PAULI_Z : PAULI_I);
}

char pauli_code_char(uint8_t code);

/// Phase-free n-qubit Pauli word packed into X and Z bit masks.
///
/// Qubit q lives at bit (q % 64) of word (q / 64). Bits past num_qubits() are
/// always zero, so equality and hashing can work on whole words. Text form
/// lists qubit 0 first, e.g. "XIZY" has X on qubit 0 and Y on qubit 3.
class PauliString {
  public:
    PauliString() = default;
    explicit PauliString(size_t num_qubits);
    static PauliString from_text(std::string_view text);

    size_t num_qubits() const {
        return num_qubits_;
    }

    uint8_t get(size_t q) const {
        size_t w = q >> 6;
        uint64_t bit = uint64_t{1} << (q & 63);
        return pauli_code((xs_[w] & bit) != 0, (zs_[w] & bit) != 0);
    }

    void set(size_t q, uint8_t code) {
        size_t w = q >> 6;
        uint64_t bit = uint64_t{1} << (q & 63);
        xs_[w] = pauli_code_x(code) ? (xs_[w] | bit) : (xs_[w] & ~bit);
        zs_[w] = pauli_code_z(code) ? (zs_[w] | bit) : (zs_[w] & ~bit);
    }

    bool is_identity() const;
    size_t weight() const;

    /// Base-4 index of the local word on `qubits` (first listed qubit is the
    /// least significant digit). Throws on out-of-range or repeated qubits.
    size_t local_index(std::span<const size_t> qubits) const;

    /// Overwrites the local word on `qubits` with the decoded `index`.
    void set_local(std::span<const size_t> qubits, size_t index);

    /// Copy of this string with the local word on `qubits` replaced.
    PauliString with_local(std::span<const size_t> qubits, size_t index) const;

    // Unchecked variants for the sampling loops.
    size_t local_index_unchecked(std::span<const size_t> qubits) const {
        size_t index = 0;
        for (size_t k = 0; k < qubits.size(); k++) {
            index |= size_t{get(qubits[k])} << (2 * k);
        }
        return index;
    }
    void set_local_unchecked(std::span<const size_t> qubits, size_t index) {
        for (size_t k = 0; k < qubits.size(); k++) {
            set(qubits[k], static_cast<uint8_t>((index >> (2 * k)) & 3));
        }
    }

    std::span<const uint64_t> x_words() const {
        return xs_;
    }
    std::span<const uint64_t> z_words() const {
        return zs_;
    }

    std::string str() const;

    bool operator==(const PauliString &other) const = default;

  private:
    void check_subset(std::span<const size_t> qubits) const;

    size_t num_qubits_ = 0;
    std::vector<uint64_t> xs_;
    std::vector<uint64_t> zs_;
};

/// Tr(ab) / 2^n. Since there are no phases this is the Kronecker delta.
double trace_inner_product(const PauliString &a, const PauliString &b);

/// Estimator atom: a Pauli word with a real weight.
struct SignedPauli {
    PauliString pauli;
    double coeff = 0;
};

}  // namespace pauliprop

#endif
