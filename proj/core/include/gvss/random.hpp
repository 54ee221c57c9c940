// Copyright 2026 The gvss Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>

namespace gvss {

// Deterministic pseudo-random source: the same seed yields the same
// sequence on every platform. The engine is the standard-mandated
// mt19937_64; bounded draws use rejection sampling instead of
// std::uniform_int_distribution, whose output is implementation-defined.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform draw from [0, bound).
  std::uint32_t next_below(std::uint32_t bound) {
    if (bound == 0) {
      throw std::invalid_argument("RandomStream: bound must be nonzero");
    }
    // Reject the low 2^64 mod bound values so the modulo is unbiased.
    const std::uint64_t reject_below =
        (0 - static_cast<std::uint64_t>(bound)) % bound;
    for (;;) {
      const std::uint64_t raw = engine_();
      if (raw >= reject_below) {
        return static_cast<std::uint32_t>(raw % bound);
      }
    }
  }

 private:
  std::mt19937_64 engine_;
};

// Substream for one raster row of a seeded image encoding. Rows draw from
// independent substreams so they can be encoded in any order, or in
// parallel, without changing the output.
inline RandomStream row_stream(std::uint64_t seed, std::uint32_t row) {
  return RandomStream(seed + row);
}

}  // namespace gvss
