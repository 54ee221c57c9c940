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

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "gvss/bitplane.hpp"
#include "gvss/image.hpp"
#include "gvss/random.hpp"

// OR-based (2,3) secret sharing of 8-bit grayscale images.
//
// Every secret bit is split into six half bits, two per share (the A half
// and the B half). The halves are tied together by three OR constraints,
// one per unordered pair of shares:
//
//   A1 | A2 = secret     B1 | A3 = secret     B2 | B3 = secret
//
// Any two shares therefore recover the secret bit exactly by OR-ing the
// halves the pairing table designates for them; each half takes part in
// exactly one pairing. A secret 0 forces all six halves to 0; a secret 1
// leaves each constrained pair free to be (0,1), (1,0) or (1,1), and the
// generator draws those patterns at random.

namespace gvss {

// How the generator picks the two half bits covering a secret 1.
enum class PairDistribution : std::uint8_t {
  uniform3 = 1,   // uniform over {(0,1), (1,0), (1,1)}
  balanced2 = 2,  // uniform over {(0,1), (1,0)}; (1,1) never occurs
};

std::string_view to_string(PairDistribution dist);
std::optional<PairDistribution> pair_distribution_from_name(
    std::string_view name);

// Unordered pair of distinct share indices from {1, 2, 3}.
class SharePair {
 public:
  // Throws std::invalid_argument on equal or out-of-range indices.
  SharePair(int first, int second);

  int low() const noexcept { return low_; }
  int high() const noexcept { return high_; }

  bool operator==(const SharePair&) const = default;

 private:
  int low_;
  int high_;
};

// Which half of a share takes part in a reconstruction.
enum class HalfRole : std::uint8_t { a, b };

struct HalfSelection {
  HalfRole low;   // half contributed by the pair's lower share index
  HalfRole high;  // half contributed by the higher share index
};

// The fixed pairing table: {1,2} stacks A1 with A2, {1,3} stacks B1 with
// A3, {2,3} stacks B2 with B3. It is part of the scheme identity and not
// configurable; argument order never matters because SharePair is
// unordered.
HalfSelection select_halves(SharePair pair);

// One share's two half bits for a single secret-bit position.
struct HalfBits {
  std::uint8_t a = 0;
  std::uint8_t b = 0;

  bool operator==(const HalfBits&) const = default;
};

// The six half bits that encode one secret bit across the three shares.
struct ShareBitTriple {
  std::array<HalfBits, 3> halves;  // halves[i] belongs to share i+1

  // True when all three pairing constraints OR to secret_bit.
  constexpr bool satisfies(int secret_bit) const {
    return ((halves[0].a | halves[1].a) == secret_bit) &&
           ((halves[0].b | halves[2].a) == secret_bit) &&
           ((halves[1].b | halves[2].b) == secret_bit);
  }

  // Bits packed in slot order A1 B1 A2 B2 A3 B3, A1 most significant.
  constexpr std::uint8_t packed() const {
    return static_cast<std::uint8_t>(
        halves[0].a << 5 | halves[0].b << 4 | halves[1].a << 3 |
        halves[1].b << 2 | halves[2].a << 1 | halves[2].b);
  }

  static constexpr ShareBitTriple from_packed(std::uint8_t packed) {
    return ShareBitTriple{{{
        {static_cast<std::uint8_t>((packed >> 5) & 1),
         static_cast<std::uint8_t>((packed >> 4) & 1)},
        {static_cast<std::uint8_t>((packed >> 3) & 1),
         static_cast<std::uint8_t>((packed >> 2) & 1)},
        {static_cast<std::uint8_t>((packed >> 1) & 1),
         static_cast<std::uint8_t>(packed & 1)},
    }}};
  }

  bool operator==(const ShareBitTriple&) const = default;
};

using HalfBitPair = std::pair<std::uint8_t, std::uint8_t>;

// Draws one constrained pair (x, y) with x | y = secret_bit. A secret 0
// returns (0,0) without consuming randomness; a secret 1 consumes exactly
// one bounded draw. The pattern order of the draw is fixed:
// 0 -> (0,1), 1 -> (1,0), 2 -> (1,1).
HalfBitPair sample_or_pair(int secret_bit, PairDistribution dist,
                           RandomStream& rng);

// Encodes one secret bit into six half bits. The three constrained pairs
// are sampled independently, in the fixed order (A1,A2), (B1,A3), (B2,B3).
ShareBitTriple encode_bit(int secret_bit, PairDistribution dist,
                          RandomStream& rng);

// OR of the two halves the pairing table designates. `low` holds the
// halves of share pair.low(), `high` those of pair.high().
int reconstruct_bit(SharePair pair, HalfBits low, HalfBits high);

// Both half planes of one share at one pixel position.
struct SharePixel {
  BitVector8 a;
  BitVector8 b;

  bool operator==(const SharePixel&) const = default;
};

// Encodes an 8-bit value position by position (bit 0 through 7, fresh
// randomness for each). Result index s holds the halves of share s+1.
std::array<SharePixel, 3> encode_pixel(int value, PairDistribution dist,
                                       RandomStream& rng);

// Exact inverse for any pair: equals the encoded value.
int reconstruct_pixel(SharePair pair, const SharePixel& low,
                      const SharePixel& high);

// One of the three shadow transparencies: an A and a B half plane, one
// BitVector8 per pixel each, same raster shape as the secret image.
class Share {
 public:
  Share(int index, std::uint32_t width, std::uint32_t height);

  int index() const noexcept { return index_; }
  std::uint32_t width() const noexcept { return width_; }
  std::uint32_t height() const noexcept { return height_; }
  std::uint64_t pixel_count() const noexcept {
    return static_cast<std::uint64_t>(width_) * height_;
  }

  SharePixel pixel(std::uint32_t row, std::uint32_t col) const {
    return pixel_at(flat(row, col));
  }
  void set_pixel(std::uint32_t row, std::uint32_t col, SharePixel value) {
    set_pixel_at(flat(row, col), value);
  }

  SharePixel pixel_at(std::uint64_t flat_index) const {
    return {a_plane_[flat_index], b_plane_[flat_index]};
  }
  void set_pixel_at(std::uint64_t flat_index, SharePixel value) {
    a_plane_[flat_index] = value.a;
    b_plane_[flat_index] = value.b;
  }

  bool operator==(const Share&) const = default;

 private:
  std::uint64_t flat(std::uint32_t row, std::uint32_t col) const noexcept {
    return static_cast<std::uint64_t>(row) * width_ + col;
  }

  int index_;
  std::uint32_t width_;
  std::uint32_t height_;
  std::vector<BitVector8> a_plane_;
  std::vector<BitVector8> b_plane_;
};

// Splits an image into shares 1, 2, 3. Deterministic in the seed: row r
// draws from row_stream(seed, r), pixels left to right, bits 0 to 7,
// pairs in encode_bit order, so a rerun with the same seed is
// bit-identical and rows may be encoded concurrently.
std::array<Share, 3> encode_image(const GrayImage& image,
                                  PairDistribution dist, std::uint64_t seed);

// Pixel-wise reconstruction from any two distinct shares; equals the
// secret image exactly when the shares came from one encode_image call.
// Argument order does not matter. Throws ShareMismatchError on equal
// indices or differing dimensions.
GrayImage reconstruct_image(const Share& x, const Share& y);

}  // namespace gvss
