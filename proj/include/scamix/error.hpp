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

#ifndef SCAMIX_ERROR_HPP
#define SCAMIX_ERROR_HPP

#include <stdexcept>
#include <string>

namespace scamix {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Filesystem / stream failures (open, write, flush).
class IoError : public Error {
public:
    using Error::Error;
};

/// A file does not follow this project's container formats (bad magic,
/// unsupported version, malformed header).
class FormatError : public Error {
public:
    using Error::Error;
};

/// A file ended before its declared payload was complete.
class TruncationError : public Error {
public:
    using Error::Error;
};

/// A data object or argument violates a documented invariant.
class InvariantError : public Error {
public:
    using Error::Error;
};

/// Bad user-facing configuration (CLI flags or config files).
class ConfigError : public Error {
public:
    using Error::Error;
};

/// Training produced a non-finite loss.
class DivergenceError : public Error {
public:
    using Error::Error;
};

} // namespace scamix

#endif // SCAMIX_ERROR_HPP
