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
#include <filesystem>

#include "gvss/image.hpp"
#include "gvss/scheme.hpp"

namespace gvss {

inline constexpr char kShareMagic[4] = {'V', 'S', 'S', '3'};
inline constexpr std::uint8_t kFormatVersion = 1;
inline constexpr std::uint8_t kSchemeId = 1;  // the fixed (2,3) pairing table
inline constexpr std::size_t kShareHeaderBytes = 16;

// On-disk layout of a .vss3 share: 16 header bytes, then the packed
// halves.
//
//   offset 0   magic "VSS3"
//   offset 4   format version, 0x01
//   offset 5   scheme id, 0x01
//   offset 6   share index, 1..3
//   offset 7   distribution id (1 = uniform3, 2 = balanced2)
//   offset 8   width, u32 little-endian
//   offset 12  height, u32 little-endian
//
// Payload: for each pixel in row-major order, the A half byte then the
// B half byte, bits MSB-first — 16 bits per pixel, so exactly
// 2 * width * height bytes. The seed is never stored.
struct ShareFileHeader {
  std::uint8_t version = kFormatVersion;
  std::uint8_t scheme_id = kSchemeId;
  std::uint8_t share_index = 0;
  std::uint8_t dist_id = 0;
  std::uint32_t width = 0;
  std::uint32_t height = 0;
};

struct LoadedShare {
  Share share;
  ShareFileHeader header;

  PairDistribution dist() const {
    return static_cast<PairDistribution>(header.dist_id);
  }
};

// ceil(width * height * 16 / 8)
std::uint64_t share_payload_bytes(std::uint32_t width, std::uint32_t height);

// Portable graymap input, textual (P2) or binary (P5), maxval 255 only.
// Other depths are rejected, not rescaled. Throws IoError when the file
// cannot be opened and FormatError (naming the offending field) when it
// cannot be parsed.
GrayImage read_gray_image(const std::filesystem::path& path);

// Binary graymap (P5, maxval 255). read_gray_image(write_gray_image(img))
// is bit-exact.
void write_gray_image(const GrayImage& image,
                      const std::filesystem::path& path);

void write_share(const Share& share, PairDistribution dist,
                 const std::filesystem::path& path);

// Throws ContainerError with a distinct fault per malformation class.
LoadedShare read_share(const std::filesystem::path& path);

// Binary bitmap (P4) view of one half plane: (width*8) x height, pixel
// column block [8c, 8c+8) of row r holds the 8 half bits of pixel (r,c),
// a 1 bit rendered black.
void export_half_bitmap(const Share& share, HalfRole half,
                        const std::filesystem::path& path);

}  // namespace gvss
