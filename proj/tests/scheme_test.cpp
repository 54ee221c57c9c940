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

#include <array>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "gtest/gtest.h"
#include "gvss/error.hpp"

namespace gvss {
namespace {

// Golden half planes for the value 254: each share holds an A ("1st") and
// a B ("2nd") half, and the designated halves OR to 11111110 for every
// pair.
constexpr std::uint8_t kA1 = 0b01010100;
constexpr std::uint8_t kB1 = 0b11011010;
constexpr std::uint8_t kA2 = 0b10101010;
constexpr std::uint8_t kB2 = 0b11101110;
constexpr std::uint8_t kA3 = 0b00100100;
constexpr std::uint8_t kB3 = 0b10010100;

SharePixel golden_pixel(int share_index) {
  switch (share_index) {
    case 1:
      return {BitVector8::from_byte(kA1), BitVector8::from_byte(kB1)};
    case 2:
      return {BitVector8::from_byte(kA2), BitVector8::from_byte(kB2)};
    default:
      return {BitVector8::from_byte(kA3), BitVector8::from_byte(kB3)};
  }
}

// Test-side oracle: all six-bit assignments whose three pairing equations
// OR to the secret bit, written out literally.
std::set<std::uint8_t> brute_force_valid_set(int secret_bit) {
  std::set<std::uint8_t> valid;
  for (int a1 = 0; a1 < 2; ++a1)
    for (int b1 = 0; b1 < 2; ++b1)
      for (int a2 = 0; a2 < 2; ++a2)
        for (int b2 = 0; b2 < 2; ++b2)
          for (int a3 = 0; a3 < 2; ++a3)
            for (int b3 = 0; b3 < 2; ++b3) {
              if ((a1 | a2) == secret_bit && (b1 | a3) == secret_bit &&
                  (b2 | b3) == secret_bit) {
                valid.insert(static_cast<std::uint8_t>(
                    a1 << 5 | b1 << 4 | a2 << 3 | b2 << 2 | a3 << 1 | b3));
              }
            }
  return valid;
}

TEST(SampleOrPair, ZeroBitForcesZeroPair) {
  RandomStream rng(1);
  for (int i = 0; i < 1000; ++i) {
    for (PairDistribution dist :
         {PairDistribution::uniform3, PairDistribution::balanced2}) {
      const auto [x, y] = sample_or_pair(0, dist, rng);
      EXPECT_EQ(x, 0);
      EXPECT_EQ(y, 0);
    }
  }
}

TEST(SampleOrPair, OrAlwaysEqualsSecretBit) {
  RandomStream rng(2);
  for (int i = 0; i < 5000; ++i) {
    for (PairDistribution dist :
         {PairDistribution::uniform3, PairDistribution::balanced2}) {
      const auto [x, y] = sample_or_pair(1, dist, rng);
      EXPECT_EQ(x | y, 1);
    }
  }
}

TEST(SampleOrPair, Uniform3HitsAllThreePatternsEvenly) {
  RandomStream rng(3);
  const int n = 300000;
  std::map<std::pair<int, int>, int> counts;
  for (int i = 0; i < n; ++i) {
    const auto [x, y] = sample_or_pair(1, PairDistribution::uniform3, rng);
    ++counts[{x, y}];
  }
  ASSERT_EQ(counts.size(), 3u);
  for (const auto& [pattern, count] : counts) {
    EXPECT_NEAR(static_cast<double>(count) / n, 1.0 / 3.0, 0.01)
        << "(" << pattern.first << "," << pattern.second << ")";
  }
}

TEST(SampleOrPair, Balanced2NeverDoublyCovers) {
  RandomStream rng(4);
  const int n = 200000;
  int zero_one = 0;
  for (int i = 0; i < n; ++i) {
    const auto [x, y] = sample_or_pair(1, PairDistribution::balanced2, rng);
    ASSERT_FALSE(x == 1 && y == 1);
    zero_one += (x == 0);
  }
  EXPECT_NEAR(static_cast<double>(zero_one) / n, 0.5, 0.01);
}

TEST(SampleOrPair, RejectsNonBit) {
  RandomStream rng(5);
  EXPECT_THROW(sample_or_pair(2, PairDistribution::uniform3, rng),
               std::invalid_argument);
  EXPECT_THROW(sample_or_pair(-1, PairDistribution::uniform3, rng),
               std::invalid_argument);
}

TEST(EncodeBit, ZeroBitForcesAllSixHalves) {
  RandomStream rng(6);
  for (int i = 0; i < 500; ++i) {
    const ShareBitTriple triple =
        encode_bit(0, PairDistribution::uniform3, rng);
    EXPECT_EQ(triple.packed(), 0);
  }
}

TEST(EncodeBit, ConstraintsHoldForEveryDraw) {
  RandomStream rng(7);
  for (PairDistribution dist :
       {PairDistribution::uniform3, PairDistribution::balanced2}) {
    for (int bit : {0, 1}) {
      for (int i = 0; i < 2000; ++i) {
        EXPECT_TRUE(encode_bit(bit, dist, rng).satisfies(bit));
      }
    }
  }
}

TEST(EncodeBit, OutputsLieInBruteForceValidSet) {
  const std::set<std::uint8_t> valid0 = brute_force_valid_set(0);
  const std::set<std::uint8_t> valid1 = brute_force_valid_set(1);
  ASSERT_EQ(valid0.size(), 1u);
  ASSERT_EQ(valid1.size(), 27u);

  RandomStream rng(8);
  std::set<std::uint8_t> seen;
  for (int i = 0; i < 5000; ++i) {
    EXPECT_TRUE(valid0.contains(
        encode_bit(0, PairDistribution::uniform3, rng).packed()));
    const std::uint8_t packed =
        encode_bit(1, PairDistribution::uniform3, rng).packed();
    EXPECT_TRUE(valid1.contains(packed));
    seen.insert(packed);
  }
  // 5000 draws over 27 equiprobable triples reach the full support.
  EXPECT_EQ(seen, valid1);
}

TEST(EncodeBit, GoldenBitPositionOneAssignmentIsValid) {
  // First bit position of the golden 254 example: A1=0,A2=1; B1=1,A3=0;
  // B2=1,B3=1.
  const ShareBitTriple triple{{{{0, 1}, {1, 1}, {0, 1}}}};
  EXPECT_TRUE(triple.satisfies(1));
  EXPECT_TRUE(brute_force_valid_set(1).contains(triple.packed()));
}

TEST(ShareBitTriple, PackedRoundTrips) {
  for (int mask = 0; mask < 64; ++mask) {
    EXPECT_EQ(
        ShareBitTriple::from_packed(static_cast<std::uint8_t>(mask)).packed(),
        mask);
  }
}

TEST(SelectHalves, MatchesPairingTable) {
  const HalfSelection s12 = select_halves(SharePair(1, 2));
  EXPECT_EQ(s12.low, HalfRole::a);
  EXPECT_EQ(s12.high, HalfRole::a);

  const HalfSelection s13 = select_halves(SharePair(1, 3));
  EXPECT_EQ(s13.low, HalfRole::b);
  EXPECT_EQ(s13.high, HalfRole::a);

  const HalfSelection s23 = select_halves(SharePair(2, 3));
  EXPECT_EQ(s23.low, HalfRole::b);
  EXPECT_EQ(s23.high, HalfRole::b);
}

TEST(SelectHalves, ArgumentOrderDoesNotMatter) {
  EXPECT_EQ(SharePair(3, 1), SharePair(1, 3));
  const HalfSelection forward = select_halves(SharePair(2, 3));
  const HalfSelection reversed = select_halves(SharePair(3, 2));
  EXPECT_EQ(forward.low, reversed.low);
  EXPECT_EQ(forward.high, reversed.high);
}

TEST(SelectHalves, EveryHalfAppearsInExactlyOnePairing) {
  // (share index, role) pairs over all three pairings form a perfect
  // matching of the six halves.
  std::set<std::pair<int, HalfRole>> used;
  for (const auto& [i, j] :
       std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 3}}) {
    const SharePair pair(i, j);
    const HalfSelection sel = select_halves(pair);
    EXPECT_TRUE(used.insert({pair.low(), sel.low}).second);
    EXPECT_TRUE(used.insert({pair.high(), sel.high}).second);
  }
  EXPECT_EQ(used.size(), 6u);
}

TEST(SharePair, RejectsBadIndices) {
  EXPECT_THROW(SharePair(1, 1), std::invalid_argument);
  EXPECT_THROW(SharePair(0, 2), std::invalid_argument);
  EXPECT_THROW(SharePair(2, 4), std::invalid_argument);
}

TEST(ReconstructBit, SingleBitExamples) {
  EXPECT_EQ(reconstruct_bit(SharePair(1, 2), HalfBits{0, 0}, HalfBits{1, 0}),
            1);
  EXPECT_EQ(reconstruct_bit(SharePair(2, 3), HalfBits{0, 0}, HalfBits{0, 0}),
            0);
}

TEST(ReconstructBit, GoldenHalvesRecover254ForPair13) {
  const BitVector8 b1 = BitVector8::from_byte(kB1);
  const BitVector8 a3 = BitVector8::from_byte(kA3);
  const BitVector8 expected = pixel_to_bits(254);
  for (int k = 0; k < 8; ++k) {
    const HalfBits share1{0, static_cast<std::uint8_t>(b1.bit(k))};
    const HalfBits share3{static_cast<std::uint8_t>(a3.bit(k)), 0};
    EXPECT_EQ(reconstruct_bit(SharePair(1, 3), share1, share3),
              expected.bit(k))
        << "bit " << k;
  }
}

TEST(EncodePixel, ZeroValueYieldsZeroHalves) {
  RandomStream rng(9);
  const auto shares = encode_pixel(0, PairDistribution::uniform3, rng);
  for (const SharePixel& pixel : shares) {
    EXPECT_EQ(pixel.a.to_byte(), 0);
    EXPECT_EQ(pixel.b.to_byte(), 0);
  }
}

TEST(EncodePixel, GoldenHalvesSatisfyEveryConstraint) {
  const SharePixel s1 = golden_pixel(1);
  const SharePixel s2 = golden_pixel(2);
  const SharePixel s3 = golden_pixel(3);
  const BitVector8 secret = pixel_to_bits(254);
  for (int k = 0; k < 8; ++k) {
    EXPECT_EQ(s1.a.bit(k) | s2.a.bit(k), secret.bit(k));
    EXPECT_EQ(s1.b.bit(k) | s3.a.bit(k), secret.bit(k));
    EXPECT_EQ(s2.b.bit(k) | s3.b.bit(k), secret.bit(k));
  }
  EXPECT_EQ(reconstruct_pixel(SharePair(1, 2), s1, s2), 254);
  EXPECT_EQ(reconstruct_pixel(SharePair(1, 3), s1, s3), 254);
  EXPECT_EQ(reconstruct_pixel(SharePair(2, 3), s2, s3), 254);
}

TEST(EncodePixel, FullyCoveredValueOrsToOneEverywhere) {
  RandomStream rng(10);
  const auto shares = encode_pixel(255, PairDistribution::uniform3, rng);
  for (int k = 0; k < 8; ++k) {
    EXPECT_EQ(shares[0].a.bit(k) | shares[1].a.bit(k), 1);
    EXPECT_EQ(shares[0].b.bit(k) | shares[2].a.bit(k), 1);
    EXPECT_EQ(shares[1].b.bit(k) | shares[2].b.bit(k), 1);
  }
}

TEST(EncodePixel, EveryPairRecoversEveryValue) {
  RandomStream rng(11);
  for (int v = 0; v <= 255; ++v) {
    for (PairDistribution dist :
         {PairDistribution::uniform3, PairDistribution::balanced2}) {
      const auto shares = encode_pixel(v, dist, rng);
      EXPECT_EQ(reconstruct_pixel(SharePair(1, 2), shares[0], shares[1]), v);
      EXPECT_EQ(reconstruct_pixel(SharePair(1, 3), shares[0], shares[2]), v);
      EXPECT_EQ(reconstruct_pixel(SharePair(2, 3), shares[1], shares[2]), v);
    }
  }
}

TEST(EncodePixel, RejectsOutOfRange) {
  RandomStream rng(12);
  EXPECT_THROW(encode_pixel(256, PairDistribution::uniform3, rng),
               std::invalid_argument);
}

GrayImage random_image(std::uint32_t width, std::uint32_t height,
                       std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::uint8_t> pixels(static_cast<std::size_t>(width) * height);
  for (auto& p : pixels) p = static_cast<std::uint8_t>(rng());
  return GrayImage(width, height, pixels);
}

TEST(EncodeImage, ReferenceBlockReconstructsFromEveryPair) {
  const GrayImage block(3, 3, {111, 159, 20, 254, 10, 198, 40, 215, 100});
  const auto shares = encode_image(block, PairDistribution::uniform3, 42);
  EXPECT_EQ(shares[0].index(), 1);
  EXPECT_EQ(shares[1].index(), 2);
  EXPECT_EQ(shares[2].index(), 3);
  EXPECT_EQ(reconstruct_image(shares[0], shares[1]), block);
  EXPECT_EQ(reconstruct_image(shares[0], shares[2]), block);
  EXPECT_EQ(reconstruct_image(shares[1], shares[2]), block);
}

TEST(EncodeImage, SinglePixelZero) {
  const GrayImage image(1, 1, {0});
  const auto shares = encode_image(image, PairDistribution::uniform3, 1);
  for (const Share& share : shares) {
    EXPECT_EQ(share.pixel(0, 0).a.to_byte(), 0);
    EXPECT_EQ(share.pixel(0, 0).b.to_byte(), 0);
  }
}

TEST(EncodeImage, RandomImageReconstructsExactly) {
  const GrayImage image = random_image(64, 64, 99);
  for (PairDistribution dist :
       {PairDistribution::uniform3, PairDistribution::balanced2}) {
    const auto shares = encode_image(image, dist, 7);
    EXPECT_EQ(reconstruct_image(shares[0], shares[1]), image);
    EXPECT_EQ(reconstruct_image(shares[0], shares[2]), image);
    EXPECT_EQ(reconstruct_image(shares[1], shares[2]), image);
  }
}

TEST(EncodeImage, SeededRunsAreBitIdentical) {
  const GrayImage image = random_image(32, 20, 5);
  const auto first = encode_image(image, PairDistribution::uniform3, 1234);
  const auto second = encode_image(image, PairDistribution::uniform3, 1234);
  EXPECT_EQ(first, second);

  const auto other = encode_image(image, PairDistribution::uniform3, 1235);
  EXPECT_NE(first, other);
}

TEST(EncodeImage, RowsDrawFromIndependentSubstreams) {
  // Row r of a seeded encoding equals the encoding of that row alone
  // under row_stream(seed, r), so rows can be produced in any order.
  const GrayImage image = random_image(16, 4, 21);
  const std::uint64_t seed = 77;
  const auto shares = encode_image(image, PairDistribution::uniform3, seed);

  for (std::uint32_t row = 0; row < image.height(); ++row) {
    RandomStream rng = row_stream(seed, row);
    for (std::uint32_t col = 0; col < image.width(); ++col) {
      const auto expected =
          encode_pixel(image.at(row, col), PairDistribution::uniform3, rng);
      for (int s = 0; s < 3; ++s) {
        EXPECT_EQ(shares[s].pixel(row, col), expected[s]);
      }
    }
  }
}

TEST(ReconstructImage, ArgumentOrderDoesNotMatter) {
  const GrayImage image = random_image(8, 8, 3);
  const auto shares = encode_image(image, PairDistribution::uniform3, 2);
  EXPECT_EQ(reconstruct_image(shares[0], shares[1]),
            reconstruct_image(shares[1], shares[0]));
  EXPECT_EQ(reconstruct_image(shares[2], shares[0]),
            reconstruct_image(shares[0], shares[2]));
}

TEST(ReconstructImage, RejectsDuplicateShare) {
  const auto shares =
      encode_image(GrayImage(2, 2), PairDistribution::uniform3, 0);
  try {
    reconstruct_image(shares[0], shares[0]);
    FAIL() << "expected ShareMismatchError";
  } catch (const ShareMismatchError& e) {
    EXPECT_EQ(e.fault(), MismatchFault::duplicate_share);
  }
}

TEST(ReconstructImage, RejectsDimensionMismatch) {
  const auto small =
      encode_image(GrayImage(2, 2), PairDistribution::uniform3, 0);
  const auto large =
      encode_image(GrayImage(3, 2), PairDistribution::uniform3, 0);
  try {
    reconstruct_image(small[0], large[1]);
    FAIL() << "expected ShareMismatchError";
  } catch (const ShareMismatchError& e) {
    EXPECT_EQ(e.fault(), MismatchFault::dimension_mismatch);
  }
}

TEST(Share, RejectsInvalidConstruction) {
  EXPECT_THROW(Share(0, 2, 2), std::invalid_argument);
  EXPECT_THROW(Share(4, 2, 2), std::invalid_argument);
  EXPECT_THROW(Share(1, 0, 2), std::invalid_argument);
}

TEST(PairDistributionNames, RoundTrip) {
  EXPECT_EQ(to_string(PairDistribution::uniform3), "uniform3");
  EXPECT_EQ(to_string(PairDistribution::balanced2), "balanced2");
  EXPECT_EQ(pair_distribution_from_name("uniform3"),
            PairDistribution::uniform3);
  EXPECT_EQ(pair_distribution_from_name("balanced2"),
            PairDistribution::balanced2);
  EXPECT_FALSE(pair_distribution_from_name("other").has_value());
}

}  // namespace
}  // namespace gvss
