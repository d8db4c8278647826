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

#ifndef SCAMIX_SIM_HPP
#define SCAMIX_SIM_HPP

#include "scamix/trace_set.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace scamix {

struct RandomDelayConfig {
    std::size_t max_delays = 0; ///< up to this many segments per trace
    std::size_t delay_len = 0;  ///< samples per inserted segment
};

/// First-round AES power model: the aligned signal is
/// a * HW(Sbox(p[target] ^ k[target])) + b over the leak window and b
/// elsewhere, plus i.i.d. Gaussian noise, then circular desynchronization,
/// then optional flat-hold random-delay segments.
struct SimConfig {
    std::size_t n_traces = 0;
    std::size_t n_samples = 100;
    uint8_t target_byte = 2;
    std::array<uint8_t, 16> true_key{};
    std::size_t leak_center = 40;
    std::size_t leak_width = 1;
    double leak_gain = 1.0;   ///< a; must be nonzero
    double leak_offset = 0.0; ///< b
    double noise_sigma = 0.0;
    std::size_t desync_window = 0; ///< W; uniform shift in [0, W]
    std::optional<RandomDelayConfig> random_delay;
    SetRole role = SetRole::Profiling;
    bool vary_key = false; ///< profiling only: fresh uniform key per trace
    std::string descriptor;
    uint64_t seed = 0;

    void validate() const;
};

/// Generates a TraceSet from the model above. Each trace's randomness comes
/// from a stream keyed by (seed, trace index), so generation may be
/// partitioned across workers without changing the output.
TraceSet simulate(const SimConfig& config);

/// Circularly shifts every trace right by an independent uniform draw in
/// [0, window]. Labels and plaintexts are untouched. Requires window < D.
TraceSet apply_desync(const TraceSet& set, std::size_t window, uint64_t seed);

/// Right circular shift by `shift` positions; out[t] = in[(t - shift) mod D].
std::vector<double> circular_shift_right(std::span<const double> trace, std::size_t shift);

/// Deterministic core of the random-delay countermeasure: before emitting
/// the sample at each position listed in `positions` (ascending, duplicates
/// allowed), holds the previously emitted value for `delay_len` samples;
/// the result is truncated back to the input length.
std::vector<double> insert_flat_delays(std::span<const double> trace,
                                       std::span<const std::size_t> positions,
                                       std::size_t delay_len);

} // namespace scamix

#endif // SCAMIX_SIM_HPP
