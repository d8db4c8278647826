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

// Little-endian primitive encoding shared by the SCAT / SOFT / SCNN
// container writers and readers. Byte order is explicit so the formats are
// bit-exact regardless of host endianness.

#ifndef SCAMIX_BINARY_IO_HPP
#define SCAMIX_BINARY_IO_HPP

#include "scamix/error.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <istream>
#include <ostream>
#include <string>

namespace scamix::detail {

inline void put_bytes(std::ostream& os, const void* p, std::size_t n) {
    os.write(static_cast<const char*>(p), static_cast<std::streamsize>(n));
    if (!os)
        throw IoError("write failed");
}

template <typename UInt> void write_uint_le(std::ostream& os, UInt v) {
    unsigned char buf[sizeof(UInt)];
    for (std::size_t i = 0; i < sizeof(UInt); ++i)
        buf[i] = static_cast<unsigned char>((v >> (8 * i)) & 0xFF);
    put_bytes(os, buf, sizeof(UInt));
}

inline void write_u8(std::ostream& os, uint8_t v) { write_uint_le<uint8_t>(os, v); }
inline void write_u16(std::ostream& os, uint16_t v) { write_uint_le<uint16_t>(os, v); }
inline void write_u32(std::ostream& os, uint32_t v) { write_uint_le<uint32_t>(os, v); }
inline void write_u64(std::ostream& os, uint64_t v) { write_uint_le<uint64_t>(os, v); }
inline void write_f32(std::ostream& os, float v) { write_u32(os, std::bit_cast<uint32_t>(v)); }
inline void write_f64(std::ostream& os, double v) { write_u64(os, std::bit_cast<uint64_t>(v)); }

inline void read_bytes(std::istream& is, void* p, std::size_t n, const char* what) {
    is.read(static_cast<char*>(p), static_cast<std::streamsize>(n));
    if (static_cast<std::size_t>(is.gcount()) != n)
        throw TruncationError(std::string("file truncated while reading ") + what);
}

template <typename UInt> UInt read_uint_le(std::istream& is, const char* what) {
    unsigned char buf[sizeof(UInt)];
    read_bytes(is, buf, sizeof(UInt), what);
    UInt v = 0;
    for (std::size_t i = 0; i < sizeof(UInt); ++i)
        v |= static_cast<UInt>(buf[i]) << (8 * i);
    return v;
}

inline uint8_t read_u8(std::istream& is, const char* what) { return read_uint_le<uint8_t>(is, what); }
inline uint16_t read_u16(std::istream& is, const char* what) { return read_uint_le<uint16_t>(is, what); }
inline uint32_t read_u32(std::istream& is, const char* what) { return read_uint_le<uint32_t>(is, what); }
inline uint64_t read_u64(std::istream& is, const char* what) { return read_uint_le<uint64_t>(is, what); }
inline float read_f32(std::istream& is, const char* what) {
    return std::bit_cast<float>(read_u32(is, what));
}
inline double read_f64(std::istream& is, const char* what) {
    return std::bit_cast<double>(read_u64(is, what));
}

} // namespace scamix::detail

#endif // SCAMIX_BINARY_IO_HPP
