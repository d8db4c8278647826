/**
 * Copyright 2026 the scamix authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef SCAMIX_LABELING_HPP
#define SCAMIX_LABELING_HPP

#include <array>
#include <bit>
#include <cstdint>
#include <string_view>
#include <vector>

namespace scamix {

/// Forward AES Sbox. The constant table is cross-checked once on first use
/// against the GF(2^8) inverse + affine construction; a transcription error
/// aborts instead of silently corrupting every downstream label.
uint8_t sbox(uint8_t x);

/// The Sbox recomputed from first principles (multiplicative inverse in
/// GF(2^8) modulo x^8+x^4+x^3+x+1, then the affine map). Slow; used to
/// validate the lookup table.
uint8_t sbox_reference(uint8_t x);

inline int hamming_weight(uint8_t x) { return std::popcount(x); }

/// Label functions mapping the Sbox output to a class index.
enum class LeakageModel {
    Id,  ///< identity, 256 classes
    Hw,  ///< Hamming weight, 9 classes
    Lsb, ///< least significant bit, 2 classes
};

constexpr std::size_t class_count(LeakageModel m) {
    switch (m) {
    case LeakageModel::Id:
        return 256;
    case LeakageModel::Hw:
        return 9;
    case LeakageModel::Lsb:
        return 2;
    }
    return 0; // unreachable
}

LeakageModel leakage_model_from_string(std::string_view name);
const char* to_string(LeakageModel m);

/// Class index of Sbox(p ^ k) under the given model.
inline uint8_t compute_label(uint8_t p, uint8_t k, LeakageModel m) {
    const uint8_t v = sbox(static_cast<uint8_t>(p ^ k));
    switch (m) {
    case LeakageModel::Id:
        return v;
    case LeakageModel::Hw:
        return static_cast<uint8_t>(hamming_weight(v));
    case LeakageModel::Lsb:
        return static_cast<uint8_t>(v & 1u);
    }
    return 0; // unreachable
}

/// Hard one-hot encoding; throws InvariantError when label >= classes.
std::vector<double> one_hot(std::size_t label, std::size_t classes);

} // namespace scamix

#endif // SCAMIX_LABELING_HPP
