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

#include "scamix/trace_set.hpp"

#include "scamix/error.hpp"
#include "scamix/rng.hpp"
#include "binary_io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numeric>

namespace scamix {

namespace {

constexpr char kScatMagic[4] = {'S', 'C', 'A', 'T'};
constexpr uint16_t kScatVersion = 1;

// Guard against absurd allocations from corrupt headers.
constexpr uint64_t kMaxElements = uint64_t(1) << 34;

} // namespace

TraceSet::TraceSet(std::size_t n, std::size_t d, TraceSetMeta meta)
    : n_(n), d_(d), samples_(n * d, 0.0), plaintexts_(n * kBlockBytes, 0),
      keys_(n * kBlockBytes, 0), meta_(std::move(meta)) {
    if (d_ == 0)
        throw InvariantError("TraceSet: trace length D must be >= 1");
    if (meta_.target_byte >= kBlockBytes)
        throw InvariantError("TraceSet: target byte index out of range");
}

TraceSet TraceSet::from_parts(std::size_t d, std::vector<double> samples,
                              std::vector<uint8_t> plaintexts, std::vector<uint8_t> keys,
                              TraceSetMeta meta) {
    TraceSet set;
    set.d_ = d;
    if (d == 0)
        throw InvariantError("TraceSet: trace length D must be >= 1");
    if (samples.size() % d != 0)
        throw InvariantError("TraceSet: sample buffer is not a whole number of rows");
    set.n_ = samples.size() / d;
    set.samples_ = std::move(samples);
    set.plaintexts_ = std::move(plaintexts);
    set.keys_ = std::move(keys);
    set.meta_ = std::move(meta);
    set.validate();
    return set;
}

void TraceSet::validate() const {
    if (d_ == 0)
        throw InvariantError("TraceSet: trace length D must be >= 1");
    if (meta_.target_byte >= kBlockBytes)
        throw InvariantError("TraceSet: target byte index out of range");
    if (samples_.size() != n_ * d_)
        throw InvariantError("TraceSet: sample matrix is not N x D");
    if (plaintexts_.size() != n_ * kBlockBytes)
        throw InvariantError("TraceSet: plaintext rows do not match N");
    if (keys_.size() != n_ * kBlockBytes)
        throw InvariantError("TraceSet: key rows do not match N");
    for (double v : samples_)
        if (!std::isfinite(v))
            throw InvariantError("TraceSet: non-finite sample value");
    if (meta_.role == SetRole::Attack) {
        for (std::size_t i = 1; i < n_; ++i)
            if (!std::equal(key(i).begin(), key(i).end(), key(0).begin()))
                throw InvariantError("TraceSet: attack set must use a single fixed key");
    }
}

bool TraceSet::operator==(const TraceSet& other) const {
    return n_ == other.n_ && d_ == other.d_ && samples_ == other.samples_ &&
           plaintexts_ == other.plaintexts_ && keys_ == other.keys_ &&
           meta_.role == other.meta_.role && meta_.target_byte == other.meta_.target_byte &&
           meta_.descriptor == other.meta_.descriptor;
}

void save_trace_set(const TraceSet& set, const std::filesystem::path& path) {
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os)
        throw IoError("cannot open '" + path.string() + "' for writing");
    write_scat_block(set, os);
    os.flush();
    if (!os)
        throw IoError("write to '" + path.string() + "' failed");
}

void write_scat_block(const TraceSet& set, std::ostream& os) {
    set.validate();
    detail::put_bytes(os, kScatMagic, 4);
    detail::write_u16(os, kScatVersion);
    detail::write_u8(os, static_cast<uint8_t>(set.meta().role));
    detail::write_u8(os, set.meta().target_byte);
    detail::write_u64(os, set.size());
    detail::write_u64(os, set.trace_length());
    for (std::size_t i = 0; i < set.size(); ++i)
        for (double v : set.trace(i))
            detail::write_f32(os, static_cast<float>(v));
    for (std::size_t i = 0; i < set.size(); ++i)
        detail::put_bytes(os, set.plaintext(i).data(), kBlockBytes);
    for (std::size_t i = 0; i < set.size(); ++i)
        detail::put_bytes(os, set.key(i).data(), kBlockBytes);
    const auto& desc = set.meta().descriptor;
    if (desc.size() > std::numeric_limits<uint32_t>::max())
        throw InvariantError("TraceSet: descriptor too long");
    detail::write_u32(os, static_cast<uint32_t>(desc.size()));
    if (!desc.empty())
        detail::put_bytes(os, desc.data(), desc.size());
}

TraceSet load_trace_set(const std::filesystem::path& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is)
        throw IoError("cannot open '" + path.string() + "' for reading");
    return read_scat_block(is);
}

TraceSet read_scat_block(std::istream& is) {
    char magic[4];
    detail::read_bytes(is, magic, 4, "magic");
    if (!std::equal(magic, magic + 4, kScatMagic))
        throw FormatError("not a SCAT file (bad magic)");
    const uint16_t version = detail::read_u16(is, "version");
    if (version != kScatVersion)
        throw FormatError("unsupported SCAT version " + std::to_string(version));
    const uint8_t role_byte = detail::read_u8(is, "role");
    if (role_byte > 1)
        throw FormatError("SCAT role byte must be 0 or 1");
    const uint8_t target_byte = detail::read_u8(is, "target byte");
    const uint64_t n = detail::read_u64(is, "trace count");
    const uint64_t d = detail::read_u64(is, "trace length");
    if (d == 0)
        throw FormatError("SCAT trace length must be >= 1");
    if (n > kMaxElements || d > kMaxElements || (d != 0 && n > kMaxElements / d))
        throw FormatError("SCAT header declares an implausible payload size");

    std::vector<double> samples(static_cast<std::size_t>(n * d));
    for (auto& v : samples)
        v = static_cast<double>(detail::read_f32(is, "sample matrix"));
    std::vector<uint8_t> plaintexts(static_cast<std::size_t>(n) * kBlockBytes);
    if (n)
        detail::read_bytes(is, plaintexts.data(), plaintexts.size(), "plaintext block");
    std::vector<uint8_t> keys(static_cast<std::size_t>(n) * kBlockBytes);
    if (n)
        detail::read_bytes(is, keys.data(), keys.size(), "key block");
    const uint32_t desc_len = detail::read_u32(is, "descriptor length");
    std::string descriptor(desc_len, '\0');
    if (desc_len)
        detail::read_bytes(is, descriptor.data(), desc_len, "descriptor");

    TraceSetMeta meta;
    meta.role = static_cast<SetRole>(role_byte);
    meta.target_byte = target_byte;
    meta.descriptor = std::move(descriptor);
    return TraceSet::from_parts(static_cast<std::size_t>(d), std::move(samples),
                                std::move(plaintexts), std::move(keys), std::move(meta));
}

TraceSet subsample(const TraceSet& set, std::size_t n, uint64_t seed) {
    if (n > set.size())
        throw InvariantError("subsample: requested " + std::to_string(n) + " of " +
                             std::to_string(set.size()) + " traces");
    std::vector<std::size_t> idx(set.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    rng::Stream stream(seed);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t j = i + static_cast<std::size_t>(stream.below(idx.size() - i));
        std::swap(idx[i], idx[j]);
    }

    TraceSet out(n, set.trace_length(), set.meta());
    for (std::size_t r = 0; r < n; ++r) {
        const std::size_t s = idx[r];
        std::copy(set.trace(s).begin(), set.trace(s).end(), out.trace(r).begin());
        std::copy(set.plaintext(s).begin(), set.plaintext(s).end(), out.plaintext(r).begin());
        std::copy(set.key(s).begin(), set.key(s).end(), out.key(r).begin());
    }
    return out;
}

StandardizationStats compute_stats(const TraceSet& set) {
    const std::size_t n = set.size();
    const std::size_t d = set.trace_length();
    if (n < 2)
        throw InvariantError("compute_stats: need at least 2 traces");
    StandardizationStats stats;
    stats.mean.assign(d, 0.0);
    stats.stddev.assign(d, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const auto row = set.trace(i);
        for (std::size_t t = 0; t < d; ++t)
            stats.mean[t] += row[t];
    }
    for (std::size_t t = 0; t < d; ++t)
        stats.mean[t] /= static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto row = set.trace(i);
        for (std::size_t t = 0; t < d; ++t) {
            const double dlt = row[t] - stats.mean[t];
            stats.stddev[t] += dlt * dlt;
        }
    }
    for (std::size_t t = 0; t < d; ++t)
        stats.stddev[t] = std::max(std::sqrt(stats.stddev[t] / static_cast<double>(n)), kStdEpsilon);
    return stats;
}

TraceSet standardize(const TraceSet& set, const StandardizationStats& stats) {
    const std::size_t d = set.trace_length();
    if (stats.mean.size() != d || stats.stddev.size() != d)
        throw InvariantError("standardize: stats length does not match trace length");
    TraceSet out = set;
    for (std::size_t i = 0; i < out.size(); ++i) {
        auto row = out.trace(i);
        for (std::size_t t = 0; t < d; ++t)
            row[t] = (row[t] - stats.mean[t]) / stats.stddev[t];
    }
    return out;
}

} // namespace scamix
