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

#ifndef SCAMIX_RNG_HPP
#define SCAMIX_RNG_HPP

#include <cstdint>
#include <string_view>

namespace scamix::rng {

inline constexpr uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

/// SplitMix64 finalizer. The only bit mixer used in this project, so that
/// every random artifact is reproducible from a u64 seed alone.
constexpr uint64_t mix64(uint64_t x) {
    x ^= x >> 30;
    x *= 0xBF58476D1CE4E5B9ULL;
    x ^= x >> 27;
    x *= 0x94D049BB133111EBULL;
    x ^= x >> 31;
    return x;
}

/// Derives an independent child seed from (seed, salt). Used to key one
/// stream per trace / pair / repetition so that work can be partitioned
/// across workers without changing any output.
constexpr uint64_t derive(uint64_t seed, uint64_t salt) {
    return mix64(mix64(seed ^ kGolden) ^ mix64(salt + kGolden));
}

/// Same, salted with a label (FNV-1a of the label bytes). Stage names are
/// hashed so that adding new stages or grid cells never perturbs the
/// randomness of existing ones.
constexpr uint64_t derive(uint64_t seed, std::string_view label) {
    uint64_t h = 0xCBF29CE484222325ULL;
    for (char c : label) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001B3ULL;
    }
    return derive(seed, h);
}

/// A deterministic random stream (SplitMix64 sequence keyed by a u64).
/// All distributions are implemented explicitly so that outputs are
/// bit-identical across platforms and standard libraries.
class Stream {
public:
    explicit Stream(uint64_t key) : state_(mix64(key ^ 0x5851F42D4C957F2DULL)) {}

    uint64_t next_u64() {
        state_ += kGolden;
        return mix64(state_);
    }

    /// Uniform in [0, 1), 53 bits of precision.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform in (0, 1); never returns an endpoint.
    double next_double_open() {
        return (static_cast<double>(next_u64() >> 12) + 0.5) * 0x1.0p-52;
    }

    /// Uniform integer in [0, n), unbiased (rejection on the top range).
    uint64_t below(uint64_t n);

    /// Standard normal draw (Box-Muller, second value cached).
    double normal();

    /// Gamma(alpha, 1) via Marsaglia-Tsang squeeze, boosted for alpha < 1.
    double gamma(double alpha);

    /// Beta(a, b) as Ga/(Ga+Gb) with independent Gamma draws.
    double beta(double a, double b);

private:
    uint64_t state_;
    bool has_cached_normal_ = false;
    double cached_normal_ = 0.0;
};

} // namespace scamix::rng

#endif // SCAMIX_RNG_HPP
