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

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace gvss {

// 8-bit grayscale raster, row-major. Dimensions are fixed at construction
// and always positive.
class GrayImage {
 public:
  GrayImage(std::uint32_t width, std::uint32_t height)
      : GrayImage(width, height,
                  std::vector<std::uint8_t>(
                      static_cast<std::size_t>(width) * height, 0)) {}

  GrayImage(std::uint32_t width, std::uint32_t height,
            std::vector<std::uint8_t> pixels)
      : width_(width), height_(height), pixels_(std::move(pixels)) {
    if (width_ == 0 || height_ == 0) {
      throw std::invalid_argument("GrayImage: dimensions must be positive");
    }
    if (pixels_.size() != static_cast<std::size_t>(width_) * height_) {
      throw std::invalid_argument(
          "GrayImage: pixel count does not match dimensions");
    }
  }

  std::uint32_t width() const noexcept { return width_; }
  std::uint32_t height() const noexcept { return height_; }
  std::uint64_t pixel_count() const noexcept {
    return static_cast<std::uint64_t>(width_) * height_;
  }

  std::uint8_t at(std::uint32_t row, std::uint32_t col) const {
    return pixels_[flat(row, col)];
  }
  void set(std::uint32_t row, std::uint32_t col, std::uint8_t value) {
    pixels_[flat(row, col)] = value;
  }

  std::span<const std::uint8_t> pixels() const noexcept { return pixels_; }

  bool operator==(const GrayImage&) const = default;

 private:
  std::size_t flat(std::uint32_t row, std::uint32_t col) const noexcept {
    return static_cast<std::size_t>(row) * width_ + col;
  }

  std::uint32_t width_;
  std::uint32_t height_;
  std::vector<std::uint8_t> pixels_;
};

}  // namespace gvss
