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

#ifndef PAULIPROP_RNG_H
#define PAULIPROP_RNG_H

#include <cstdint>
#include <random>

namespace pauliprop {

using Rng = std::mt19937_64;

/// Stream `stream` of the generator family rooted at `seed`. Worker w of a
/// parallel run uses stream w, i.e. the engine state is seeded from seed ^ w.
inline Rng make_stream(uint64_t seed, uint64_t stream) {
    uint64_t s = seed ^ stream;
    std::seed_seq seq{
        static_cast<uint32_t>(s),
        static_cast<uint32_t>(s >> 32),
        static_cast<uint32_t>(stream),
        0x9e3779b9u,
    };
    return Rng(seq);
}

/// Uniform double in [0, 1) with 53 random bits. Platform independent, unlike
/// std::uniform_real_distribution.
inline double uniform01(Rng &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace pauliprop

#endif
