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

#include <cassert>
#include <cstdint>
#include <vector>

#include "gvss/image.hpp"

namespace gvss {

// The 8-bit binary form of one pixel value, most significant bit first:
// bit index 0 is the 128s place, bit index 7 the 1s place.
class BitVector8 {
 public:
  constexpr BitVector8() = default;

  static constexpr BitVector8 from_byte(std::uint8_t byte) {
    BitVector8 bits;
    bits.byte_ = byte;
    return bits;
  }

  constexpr int bit(int index) const {
    assert(index >= 0 && index < 8);
    return (byte_ >> (7 - index)) & 1;
  }

  constexpr void set_bit(int index, int value) {
    assert(index >= 0 && index < 8);
    assert(value == 0 || value == 1);
    const std::uint8_t mask = static_cast<std::uint8_t>(1u << (7 - index));
    byte_ = static_cast<std::uint8_t>((byte_ & ~mask) | (value ? mask : 0u));
  }

  constexpr std::uint8_t to_byte() const { return byte_; }

  friend constexpr BitVector8 operator|(BitVector8 lhs, BitVector8 rhs) {
    return from_byte(static_cast<std::uint8_t>(lhs.byte_ | rhs.byte_));
  }

  bool operator==(const BitVector8&) const = default;

 private:
  std::uint8_t byte_ = 0;
};

// value must lie in [0, 255]; throws std::invalid_argument otherwise.
BitVector8 pixel_to_bits(int value);

// Exact inverse of pixel_to_bits.
int bits_to_pixel(BitVector8 bits);

// Per-pixel bit vectors of an image, same shape as the source raster.
struct BitBlockGrid {
  std::uint32_t width = 0;
  std::uint32_t height = 0;
  std::vector<BitVector8> blocks;  // row-major

  const BitVector8& at(std::uint32_t row, std::uint32_t col) const {
    return blocks[static_cast<std::size_t>(row) * width + col];
  }
};

BitBlockGrid image_to_bitblocks(const GrayImage& image);

}  // namespace gvss
