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

#include "gvss/scheme.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "gvss/error.hpp"

namespace gvss {

namespace {

void check_secret_bit(int secret_bit) {
  if (secret_bit != 0 && secret_bit != 1) {
    throw std::invalid_argument("secret bit must be 0 or 1, got " +
                                std::to_string(secret_bit));
  }
}

}  // namespace

std::string_view to_string(PairDistribution dist) {
  switch (dist) {
    case PairDistribution::uniform3:
      return "uniform3";
    case PairDistribution::balanced2:
      return "balanced2";
  }
  return "unknown";
}

std::optional<PairDistribution> pair_distribution_from_name(
    std::string_view name) {
  if (name == "uniform3") return PairDistribution::uniform3;
  if (name == "balanced2") return PairDistribution::balanced2;
  return std::nullopt;
}

SharePair::SharePair(int first, int second) {
  if (first < 1 || first > 3 || second < 1 || second > 3) {
    throw std::invalid_argument("share index must be 1, 2 or 3");
  }
  if (first == second) {
    throw std::invalid_argument("share pair needs two distinct indices, got " +
                                std::to_string(first) + " twice");
  }
  low_ = std::min(first, second);
  high_ = std::max(first, second);
}

HalfSelection select_halves(SharePair pair) {
  if (pair.low() == 1 && pair.high() == 2) return {HalfRole::a, HalfRole::a};
  if (pair.low() == 1 && pair.high() == 3) return {HalfRole::b, HalfRole::a};
  return {HalfRole::b, HalfRole::b};  // {2,3}
}

HalfBitPair sample_or_pair(int secret_bit, PairDistribution dist,
                           RandomStream& rng) {
  check_secret_bit(secret_bit);
  if (secret_bit == 0) {
    return {0, 0};  // OR must be 0: both halves forced, no draw consumed
  }
  switch (dist) {
    case PairDistribution::uniform3:
      switch (rng.next_below(3)) {
        case 0:
          return {0, 1};
        case 1:
          return {1, 0};
        default:
          return {1, 1};
      }
    case PairDistribution::balanced2:
      return rng.next_below(2) == 0 ? HalfBitPair{0, 1} : HalfBitPair{1, 0};
  }
  throw std::invalid_argument("unknown pair distribution");
}

ShareBitTriple encode_bit(int secret_bit, PairDistribution dist,
                          RandomStream& rng) {
  check_secret_bit(secret_bit);
  const auto [a1, a2] = sample_or_pair(secret_bit, dist, rng);
  const auto [b1, a3] = sample_or_pair(secret_bit, dist, rng);
  const auto [b2, b3] = sample_or_pair(secret_bit, dist, rng);
  return ShareBitTriple{{{{a1, b1}, {a2, b2}, {a3, b3}}}};
}

int reconstruct_bit(SharePair pair, HalfBits low, HalfBits high) {
  const HalfSelection selection = select_halves(pair);
  const std::uint8_t x = selection.low == HalfRole::a ? low.a : low.b;
  const std::uint8_t y = selection.high == HalfRole::a ? high.a : high.b;
  return x | y;
}

std::array<SharePixel, 3> encode_pixel(int value, PairDistribution dist,
                                       RandomStream& rng) {
  const BitVector8 secret_bits = pixel_to_bits(value);
  std::array<SharePixel, 3> out{};
  for (int k = 0; k < 8; ++k) {
    const ShareBitTriple triple = encode_bit(secret_bits.bit(k), dist, rng);
    for (int s = 0; s < 3; ++s) {
      out[s].a.set_bit(k, triple.halves[s].a);
      out[s].b.set_bit(k, triple.halves[s].b);
    }
  }
  return out;
}

int reconstruct_pixel(SharePair pair, const SharePixel& low,
                      const SharePixel& high) {
  const HalfSelection selection = select_halves(pair);
  const BitVector8 x = selection.low == HalfRole::a ? low.a : low.b;
  const BitVector8 y = selection.high == HalfRole::a ? high.a : high.b;
  return bits_to_pixel(x | y);
}

Share::Share(int index, std::uint32_t width, std::uint32_t height)
    : index_(index),
      width_(width),
      height_(height),
      a_plane_(pixel_count()),
      b_plane_(pixel_count()) {
  if (index < 1 || index > 3) {
    throw std::invalid_argument("share index must be 1, 2 or 3, got " +
                                std::to_string(index));
  }
  if (width == 0 || height == 0) {
    throw std::invalid_argument("Share: dimensions must be positive");
  }
}

std::array<Share, 3> encode_image(const GrayImage& image,
                                  PairDistribution dist, std::uint64_t seed) {
  const std::uint32_t width = image.width();
  const std::uint32_t height = image.height();
  std::array<Share, 3> shares{Share(1, width, height), Share(2, width, height),
                              Share(3, width, height)};
  for (std::uint32_t row = 0; row < height; ++row) {
    RandomStream rng = row_stream(seed, row);
    for (std::uint32_t col = 0; col < width; ++col) {
      const auto pixel_shares = encode_pixel(image.at(row, col), dist, rng);
      for (int s = 0; s < 3; ++s) {
        shares[s].set_pixel(row, col, pixel_shares[s]);
      }
    }
  }
  return shares;
}

GrayImage reconstruct_image(const Share& x, const Share& y) {
  if (x.index() == y.index()) {
    throw ShareMismatchError(
        MismatchFault::duplicate_share,
        "cannot reconstruct from two copies of share " +
            std::to_string(x.index()));
  }
  if (x.width() != y.width() || x.height() != y.height()) {
    throw ShareMismatchError(
        MismatchFault::dimension_mismatch,
        "share dimensions differ: " + std::to_string(x.width()) + "x" +
            std::to_string(x.height()) + " vs " + std::to_string(y.width()) +
            "x" + std::to_string(y.height()));
  }
  const SharePair pair(x.index(), y.index());
  const Share& low = x.index() == pair.low() ? x : y;
  const Share& high = x.index() == pair.low() ? y : x;

  GrayImage out(x.width(), x.height());
  for (std::uint32_t row = 0; row < x.height(); ++row) {
    for (std::uint32_t col = 0; col < x.width(); ++col) {
      out.set(row, col,
              static_cast<std::uint8_t>(reconstruct_pixel(
                  pair, low.pixel(row, col), high.pixel(row, col))));
    }
  }
  return out;
}

}  // namespace gvss
