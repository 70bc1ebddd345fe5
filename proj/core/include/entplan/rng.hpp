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

#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <span>
#include <string_view>
#include <utility>

namespace entplan {

/// SplitMix64 finalizer. Used to derive independent stream seeds.
uint64_t mix64(uint64_t x);

/// Derives a child seed from a parent seed and a sequence of integer keys.
/// Adding keys never perturbs seeds derived from other key sequences.
uint64_t derive_seed(uint64_t parent, std::initializer_list<uint64_t> keys);

/// Stable 64-bit tag for a short label (FNV-1a), for keying sub-streams by name.
uint64_t stream_tag(std::string_view label);

/// Seeded random stream.
///
/// Wraps std::mt19937_64 (whose output sequence is fixed by the standard) and
/// implements the few distributions we need directly, so results are identical
/// across standard library implementations.
class Rng {
  public:
    explicit Rng(uint64_t seed = 0) : engine_(seed), seed_(seed) {}

    uint64_t seed() const { return seed_; }
    uint64_t next_u64() { return engine_(); }

    /// Uniform integer in [0, n). n must be positive.
    size_t uniform_index(size_t n);

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform01();

    bool bernoulli(double p) { return uniform01() < p; }

    /// Sum of `trials` independent Bernoulli(p) draws.
    unsigned binomial(unsigned trials, double p);

    template <typename T>
    void shuffle(std::span<T> items) {
        for (size_t i = items.size(); i > 1; --i) {
            size_t j = uniform_index(i);
            std::swap(items[i - 1], items[j]);
        }
    }

    /// Child stream keyed by a label; independent of how much this stream was used.
    Rng fork(std::string_view label) const;

  private:
    std::mt19937_64 engine_;
    uint64_t seed_;
};

}  // namespace entplan
