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

#include "scamix/rng.hpp"

#include "scamix/error.hpp"

#include <cmath>
#include <numbers>

namespace scamix::rng {

uint64_t Stream::below(uint64_t n) {
    if (n == 0)
        throw InvariantError("Stream::below: n must be positive");
    if (n == 1)
        return 0;
    // Rejection sampling on the largest multiple of n that fits in 64 bits.
    const uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    uint64_t x;
    do {
        x = next_u64();
    } while (x >= limit);
    return x % n;
}

double Stream::normal() {
    if (has_cached_normal_) {
        has_cached_normal_ = false;
        return cached_normal_;
    }
    const double u1 = next_double_open();
    const double u2 = next_double();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * std::numbers::pi * u2;
    cached_normal_ = r * std::sin(theta);
    has_cached_normal_ = true;
    return r * std::cos(theta);
}

double Stream::gamma(double alpha) {
    if (!(alpha > 0.0))
        throw InvariantError("Stream::gamma: alpha must be > 0");
    if (alpha < 1.0) {
        // Gamma(a) = Gamma(a+1) * U^(1/a)
        const double boost = std::pow(next_double_open(), 1.0 / alpha);
        return gamma(alpha + 1.0) * boost;
    }
    const double d = alpha - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x, v;
        do {
            x = normal();
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = next_double_open();
        const double x2 = x * x;
        if (u < 1.0 - 0.0331 * x2 * x2)
            return d * v;
        if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v)))
            return d * v;
    }
}

double Stream::beta(double a, double b) {
    const double ga = gamma(a);
    const double gb = gamma(b);
    const double sum = ga + gb;
    if (sum == 0.0)
        return 0.5; // both gammas underflowed; any value in (0,1) is fair here
    return ga / sum;
}

} // namespace scamix::rng
