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
#include <string>
#include <vector>

#include "gvss/image.hpp"
#include "gvss/random.hpp"
#include "gvss/scheme.hpp"

// Measurements of the scheme's observable behavior: reconstruction
// exactness, payload expansion, and how much a single share reveals about
// the secret bits. The scheme is measured, not repaired: a lone share is
// NOT statistically independent of the secret (a zero bit forces both of
// its halves to zero), and the leakage report quantifies exactly how far
// from independent it is.

namespace gvss {

struct PairExactness {
  int low_index = 0;
  int high_index = 0;
  std::uint64_t mismatched_pixels = 0;
  int max_abs_diff = 0;
};

struct ExactnessReport {
  std::array<PairExactness, 3> pairs;  // {1,2}, {1,3}, {2,3}
};

// Reconstructs every pair of the three shares and compares against the
// secret. Honest shares yield all-zero reports. The three shares may be
// passed in any order but must carry indices 1, 2, 3. Throws
// ShareMismatchError when dimensions disagree with the secret.
ExactnessReport verify_exactness(const GrayImage& secret, const Share& s1,
                                 const Share& s2, const Share& s3);

struct SlotLeakage {
  std::string slot;  // "A1", "B1", "A2", "B2", "A3", "B3"
  double p1_given_b1 = 0.0;
  double p1_given_b0 = 0.0;
  std::uint64_t samples = 0;
};

struct LeakageReport {
  std::uint64_t samples = 0;  // per secret-bit value
  std::array<SlotLeakage, 6> slots;
  // Bayes guessing advantage over a fair coin for an observer holding
  // only share i+1, under a balanced secret-bit prior.
  std::array<double, 3> share_advantage{};
  double advantage = 0.0;  // best of the three
};

// Encodes n_samples secret bits of each value through the real generator
// and tallies the half-bit statistics. The b=0 conditionals are exact
// zeros (a zero bit forces zero halves); the b=1 conditionals converge to
// 2/3 per slot under uniform3 and 1/2 under balanced2.
LeakageReport measure_leakage(PairDistribution dist, std::uint64_t n_samples,
                              RandomStream& rng);

struct ExpansionReport {
  std::uint32_t width = 0;
  std::uint32_t height = 0;
  std::uint64_t pixel_count = 0;
  int secret_bits_per_pixel = 8;
  int share_bits_per_pixel = 16;
  int per_share_expansion = 2;   // share bits / secret bits, one share
  int aggregate_expansion = 6;   // across all three shares
  std::uint64_t payload_bits_per_share = 0;   // 16 * pixels
  std::uint64_t payload_bytes_per_share = 0;  // 2 * pixels
  std::uint64_t total_payload_bits = 0;       // 48 * pixels
};

ExpansionReport measure_expansion(const Share& share);

// Brute force over all 64 six-bit assignments: the triples whose three
// pairing constraints all OR to secret_bit. Exactly 1 for a 0 bit and 27
// for a 1 bit. Serves as the oracle the generator is audited against.
std::vector<ShareBitTriple> enumerate_valid_triples(int secret_bit);

// Same, restricted to triples whose constrained pairs lie in the
// distribution's support (8 for a 1 bit under balanced2).
std::vector<ShareBitTriple> enumerate_valid_triples(int secret_bit,
                                                    PairDistribution dist);

// Key-value text, one metric per line.
std::string to_text(const ExactnessReport& report);
std::string to_text(const LeakageReport& report);
std::string to_text(const ExpansionReport& report);

// JSON documents with fixed field names (slot, p1_given_b1, p1_given_b0,
// samples, advantage, ...).
std::string to_json(const ExactnessReport& report);
std::string to_json(const LeakageReport& report);
std::string to_json(const ExpansionReport& report);

}  // namespace gvss
