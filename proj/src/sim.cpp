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

#include "scamix/sim.hpp"

#include "scamix/error.hpp"
#include "scamix/labeling.hpp"
#include "scamix/rng.hpp"

#include <algorithm>
#include <cmath>

namespace scamix {

void SimConfig::validate() const {
    if (n_samples == 0)
        throw InvariantError("SimConfig: n_samples must be >= 1");
    if (target_byte >= kBlockBytes)
        throw InvariantError("SimConfig: target_byte out of range");
    if (leak_center + leak_width > n_samples)
        throw InvariantError("SimConfig: leak window exceeds trace length");
    if (leak_width == 0)
        throw InvariantError("SimConfig: leak_width must be >= 1");
    if (desync_window >= n_samples)
        throw InvariantError("SimConfig: desync window must be < trace length");
    if (!(noise_sigma >= 0.0))
        throw InvariantError("SimConfig: noise_sigma must be >= 0");
    if (leak_gain == 0.0)
        throw InvariantError("SimConfig: leak_gain must be nonzero");
    if (role == SetRole::Attack && vary_key)
        throw InvariantError("SimConfig: attack sets require a fixed key");
}

std::vector<double> circular_shift_right(std::span<const double> trace, std::size_t shift) {
    const std::size_t d = trace.size();
    std::vector<double> out(d);
    if (d == 0)
        return out;
    shift %= d;
    for (std::size_t t = 0; t < d; ++t)
        out[t] = trace[(t + d - shift) % d];
    return out;
}

std::vector<double> insert_flat_delays(std::span<const double> trace,
                                       std::span<const std::size_t> positions,
                                       std::size_t delay_len) {
    const std::size_t d = trace.size();
    std::vector<double> out;
    out.reserve(d);
    std::size_t next = 0;
    for (std::size_t t = 0; t < d && out.size() < d; ++t) {
        while (next < positions.size() && positions[next] == t) {
            const double hold = out.empty() ? trace[0] : out.back();
            for (std::size_t s = 0; s < delay_len && out.size() < d; ++s)
                out.push_back(hold);
            ++next;
        }
        if (out.size() < d)
            out.push_back(trace[t]);
    }
    out.resize(d, out.empty() ? 0.0 : out.back());
    return out;
}

TraceSet simulate(const SimConfig& config) {
    config.validate();
    TraceSetMeta meta;
    meta.role = config.role;
    meta.target_byte = config.target_byte;
    meta.descriptor = config.descriptor;
    TraceSet set(config.n_traces, config.n_samples, meta);

    const uint64_t base = rng::derive(config.seed, "simulate.trace");
    for (std::size_t i = 0; i < config.n_traces; ++i) {
        rng::Stream stream(rng::derive(base, static_cast<uint64_t>(i)));

        auto pt = set.plaintext(i);
        for (std::size_t b = 0; b < kBlockBytes; ++b)
            pt[b] = static_cast<uint8_t>(stream.below(256));
        auto key = set.key(i);
        if (config.vary_key && config.role == SetRole::Profiling) {
            for (std::size_t b = 0; b < kBlockBytes; ++b)
                key[b] = static_cast<uint8_t>(stream.below(256));
        } else {
            std::copy(config.true_key.begin(), config.true_key.end(), key.begin());
        }

        auto row = set.trace(i);
        std::fill(row.begin(), row.end(), config.leak_offset);
        const uint8_t inter = sbox(static_cast<uint8_t>(pt[config.target_byte] ^
                                                        key[config.target_byte]));
        const double leak = config.leak_gain * hamming_weight(inter) + config.leak_offset;
        for (std::size_t t = config.leak_center; t < config.leak_center + config.leak_width; ++t)
            row[t] = leak;

        if (config.noise_sigma > 0.0)
            for (auto& v : row)
                v += config.noise_sigma * stream.normal();

        if (config.desync_window > 0) {
            const auto shift =
                static_cast<std::size_t>(stream.below(config.desync_window + 1));
            const auto shifted = circular_shift_right(row, shift);
            std::copy(shifted.begin(), shifted.end(), row.begin());
        }

        if (config.random_delay && config.random_delay->max_delays > 0 &&
            config.random_delay->delay_len > 0) {
            const auto n_delays =
                static_cast<std::size_t>(stream.below(config.random_delay->max_delays + 1));
            std::vector<std::size_t> positions(n_delays);
            for (auto& p : positions)
                p = static_cast<std::size_t>(stream.below(config.n_samples));
            std::sort(positions.begin(), positions.end());
            const auto delayed = insert_flat_delays(row, positions, config.random_delay->delay_len);
            std::copy(delayed.begin(), delayed.end(), row.begin());
        }
    }
    return set;
}

TraceSet apply_desync(const TraceSet& set, std::size_t window, uint64_t seed) {
    if (set.size() > 0 && window >= set.trace_length())
        throw InvariantError("apply_desync: window must be < trace length");
    TraceSet out = set;
    if (window == 0)
        return out;
    const uint64_t base = rng::derive(seed, "desync.trace");
    for (std::size_t i = 0; i < out.size(); ++i) {
        rng::Stream stream(rng::derive(base, static_cast<uint64_t>(i)));
        const auto shift = static_cast<std::size_t>(stream.below(window + 1));
        const auto shifted = circular_shift_right(out.trace(i), shift);
        std::copy(shifted.begin(), shifted.end(), out.trace(i).begin());
    }
    return out;
}

} // namespace scamix
