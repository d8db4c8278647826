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

#ifndef SCAMIX_TRACE_SET_HPP
#define SCAMIX_TRACE_SET_HPP

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace scamix {

inline constexpr std::size_t kBlockBytes = 16;

enum class SetRole : uint8_t {
    Profiling = 0,
    Attack = 1,
};

struct TraceSetMeta {
    SetRole role = SetRole::Profiling;
    uint8_t target_byte = 2; ///< which plaintext/key byte the labels target
    std::string descriptor;  ///< free-form provenance text
};

/// N traces of D samples plus per-trace plaintext and key blocks.
///
/// Samples are held as f64 internally (CPA accumulators and gradients need
/// the headroom) and narrowed to f32 in the on-disk container. Immutable
/// after construction in all pipeline code; every operation below returns a
/// new set.
class TraceSet {
public:
    TraceSet() = default;

    /// Zero-filled set of n traces with d samples each.
    TraceSet(std::size_t n, std::size_t d, TraceSetMeta meta);

    /// Builds a set from flat row-major buffers and validates all invariants.
    static TraceSet from_parts(std::size_t d, std::vector<double> samples,
                               std::vector<uint8_t> plaintexts, std::vector<uint8_t> keys,
                               TraceSetMeta meta);

    std::size_t size() const { return n_; }
    std::size_t trace_length() const { return d_; }
    const TraceSetMeta& meta() const { return meta_; }
    TraceSetMeta& meta() { return meta_; }

    std::span<const double> trace(std::size_t i) const { return {samples_.data() + i * d_, d_}; }
    std::span<double> trace(std::size_t i) { return {samples_.data() + i * d_, d_}; }
    std::span<const uint8_t> plaintext(std::size_t i) const {
        return {plaintexts_.data() + i * kBlockBytes, kBlockBytes};
    }
    std::span<uint8_t> plaintext(std::size_t i) {
        return {plaintexts_.data() + i * kBlockBytes, kBlockBytes};
    }
    std::span<const uint8_t> key(std::size_t i) const {
        return {keys_.data() + i * kBlockBytes, kBlockBytes};
    }
    std::span<uint8_t> key(std::size_t i) { return {keys_.data() + i * kBlockBytes, kBlockBytes}; }

    /// Plaintext byte at the set's target index.
    uint8_t target_plaintext(std::size_t i) const { return plaintext(i)[meta_.target_byte]; }
    /// Key byte at the set's target index.
    uint8_t target_key(std::size_t i) const { return key(i)[meta_.target_byte]; }

    const std::vector<double>& samples() const { return samples_; }

    /// Throws InvariantError when any documented invariant is violated
    /// (shape mismatch, non-finite sample, attack set without a fixed key).
    void validate() const;

    bool operator==(const TraceSet& other) const;

private:
    std::size_t n_ = 0;
    std::size_t d_ = 0;
    std::vector<double> samples_;     // n x d, row-major
    std::vector<uint8_t> plaintexts_; // n x 16
    std::vector<uint8_t> keys_;       // n x 16
    TraceSetMeta meta_;
};

struct StandardizationStats {
    std::vector<double> mean;   // per sample index
    std::vector<double> stddev; // per sample index, floored at kStdEpsilon
};

/// Floor applied to per-feature standard deviations so constant columns
/// from noiseless simulations never divide by zero.
inline constexpr double kStdEpsilon = 1e-12;

/// Writes the SCAT container (see README for the byte layout). Validates
/// the set before touching the filesystem.
void save_trace_set(const TraceSet& set, const std::filesystem::path& path);

/// Writes one SCAT block into an already-open stream (used when a SOFT
/// label block follows in the same file).
void write_scat_block(const TraceSet& set, std::ostream& os);

/// Reads a SCAT container. Throws FormatError (bad magic/version),
/// TruncationError (short payload) or InvariantError (payload violates the
/// TraceSet invariants). Bytes after the SCAT block are ignored so that a
/// SOFT label block may follow.
TraceSet load_trace_set(const std::filesystem::path& path);

/// Reads one SCAT block from an already-open stream, leaving the stream
/// positioned directly after the block.
TraceSet read_scat_block(std::istream& is);

/// n rows drawn uniformly without replacement (seeded Fisher-Yates over
/// indices). Deterministic per (set, n, seed); meta is preserved.
TraceSet subsample(const TraceSet& set, std::size_t n, uint64_t seed);

/// Per-feature mean and population standard deviation. Requires N >= 2.
StandardizationStats compute_stats(const TraceSet& set);

/// (x - mean) / stddev per feature; plaintexts, keys and meta unchanged.
TraceSet standardize(const TraceSet& set, const StandardizationStats& stats);

} // namespace scamix

#endif // SCAMIX_TRACE_SET_HPP
