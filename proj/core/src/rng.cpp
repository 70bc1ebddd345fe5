// Copyright 2026 The entplan Authors
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

#include "entplan/rng.hpp"

#include <stdexcept>

namespace entplan {

uint64_t mix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

uint64_t derive_seed(uint64_t parent, std::initializer_list<uint64_t> keys) {
    uint64_t h = mix64(parent);
    for (uint64_t k : keys) {
        h = mix64(h ^ mix64(k + 0x632BE59BD9B4E019ULL));
    }
    return h;
}

uint64_t stream_tag(std::string_view label) {
    uint64_t h = 0xCBF29CE484222325ULL;
    for (char c : label) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001B3ULL;
    }
    return h;
}

size_t Rng::uniform_index(size_t n) {
    if (n == 0) {
        throw std::invalid_argument("uniform_index: empty range");
    }
    // Rejection sampling on the top of the 64-bit range removes modulo bias.
    const uint64_t bound = static_cast<uint64_t>(n);
    const uint64_t limit = UINT64_MAX - (UINT64_MAX % bound);
    uint64_t r;
    do {
        r = engine_();
    } while (r >= limit);
    return static_cast<size_t>(r % bound);
}

double Rng::uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

unsigned Rng::binomial(unsigned trials, double p) {
    unsigned k = 0;
    for (unsigned t = 0; t < trials; ++t) {
        if (bernoulli(p)) {
            ++k;
        }
    }
    return k;
}

Rng Rng::fork(std::string_view label) const {
    return Rng(derive_seed(seed_, {stream_tag(label)}));
}

}  // namespace entplan
