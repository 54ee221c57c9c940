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

#include "gvss/bitplane.hpp"

#include <stdexcept>
#include <string>

namespace gvss {

BitVector8 pixel_to_bits(int value) {
  if (value < 0 || value > 255) {
    throw std::invalid_argument("pixel value " + std::to_string(value) +
                                " outside [0, 255]");
  }
  return BitVector8::from_byte(static_cast<std::uint8_t>(value));
}

int bits_to_pixel(BitVector8 bits) { return bits.to_byte(); }

BitBlockGrid image_to_bitblocks(const GrayImage& image) {
  BitBlockGrid grid{image.width(), image.height(), {}};
  grid.blocks.reserve(image.pixel_count());
  for (std::uint8_t value : image.pixels()) {
    grid.blocks.push_back(pixel_to_bits(value));
  }
  return grid;
}

}  // namespace gvss
