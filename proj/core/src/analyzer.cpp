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

#include "gvss/analyzer.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "gvss/error.hpp"

namespace gvss {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr std::array<const char*, 6> kSlotNames = {"A1", "B1", "A2",
                                                   "B2", "A3", "B3"};

constexpr std::array<std::pair<int, int>, 3> kPairs = {
    {{1, 2}, {1, 3}, {2, 3}}};

std::array<const Share*, 3> arrange_by_index(const Share& s1, const Share& s2,
                                             const Share& s3) {
  std::array<const Share*, 3> by_index{nullptr, nullptr, nullptr};
  for (const Share* share : {&s1, &s2, &s3}) {
    const int slot = share->index() - 1;
    if (by_index[slot] != nullptr) {
      throw std::invalid_argument(
          "need one share of each index, got share " +
          std::to_string(share->index()) + " twice");
    }
    by_index[slot] = share;
  }
  return by_index;
}

std::string format_double(double value) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(6) << value;
  return out.str();
}

}  // namespace

ExactnessReport verify_exactness(const GrayImage& secret, const Share& s1,
                                 const Share& s2, const Share& s3) {
  const auto by_index = arrange_by_index(s1, s2, s3);
  for (const Share* share : by_index) {
    if (share->width() != secret.width() ||
        share->height() != secret.height()) {
      throw ShareMismatchError(
          MismatchFault::dimension_mismatch,
          "share " + std::to_string(share->index()) +
              " does not match the secret image dimensions");
    }
  }

  ExactnessReport report{};
  for (std::size_t p = 0; p < kPairs.size(); ++p) {
    const auto [low, high] = kPairs[p];
    const GrayImage reconstructed =
        reconstruct_image(*by_index[low - 1], *by_index[high - 1]);
    PairExactness& entry = report.pairs[p];
    entry.low_index = low;
    entry.high_index = high;
    for (std::uint32_t row = 0; row < secret.height(); ++row) {
      for (std::uint32_t col = 0; col < secret.width(); ++col) {
        const int diff = std::abs(static_cast<int>(secret.at(row, col)) -
                                  static_cast<int>(reconstructed.at(row, col)));
        if (diff != 0) {
          ++entry.mismatched_pixels;
          entry.max_abs_diff = std::max(entry.max_abs_diff, diff);
        }
      }
    }
  }
  return report;
}

LeakageReport measure_leakage(PairDistribution dist, std::uint64_t n_samples,
                              RandomStream& rng) {
  if (n_samples == 0) {
    throw std::invalid_argument("measure_leakage: n_samples must be positive");
  }

  // ones[b][slot] counts half-bit = 1; joint[b][share][2a+b'] counts the
  // four observations (A_i, B_i) a single-share holder can make.
  std::array<std::array<std::uint64_t, 6>, 2> ones{};
  std::array<std::array<std::array<std::uint64_t, 4>, 3>, 2> joint{};

  for (std::uint64_t n = 0; n < n_samples; ++n) {
    for (int bit : {1, 0}) {
      const ShareBitTriple triple = encode_bit(bit, dist, rng);
      for (int s = 0; s < 3; ++s) {
        const HalfBits halves = triple.halves[s];
        ones[bit][2 * s] += halves.a;
        ones[bit][2 * s + 1] += halves.b;
        joint[bit][s][halves.a * 2 + halves.b] += 1;
      }
    }
  }

  LeakageReport report{};
  report.samples = n_samples;
  const double n = static_cast<double>(n_samples);
  for (int slot = 0; slot < 6; ++slot) {
    report.slots[slot].slot = kSlotNames[slot];
    report.slots[slot].p1_given_b1 = static_cast<double>(ones[1][slot]) / n;
    report.slots[slot].p1_given_b0 = static_cast<double>(ones[0][slot]) / n;
    report.slots[slot].samples = n_samples;
  }

  // Best guessing rule per observing share under a balanced prior:
  // answer the likelier bit for each of the four observations.
  for (int s = 0; s < 3; ++s) {
    double accuracy = 0.0;
    for (int obs = 0; obs < 4; ++obs) {
      accuracy += 0.5 * static_cast<double>(
                            std::max(joint[0][s][obs], joint[1][s][obs])) /
                  n;
    }
    report.share_advantage[s] = accuracy - 0.5;
  }
  report.advantage = *std::max_element(report.share_advantage.begin(),
                                       report.share_advantage.end());
  return report;
}

ExpansionReport measure_expansion(const Share& share) {
  ExpansionReport report{};
  report.width = share.width();
  report.height = share.height();
  report.pixel_count = share.pixel_count();
  report.payload_bits_per_share = share.pixel_count() * 16;
  report.payload_bytes_per_share = share.pixel_count() * 2;
  report.total_payload_bits = share.pixel_count() * 16 * 3;
  return report;
}

std::vector<ShareBitTriple> enumerate_valid_triples(int secret_bit) {
  if (secret_bit != 0 && secret_bit != 1) {
    throw std::invalid_argument("secret bit must be 0 or 1");
  }
  std::vector<ShareBitTriple> valid;
  for (int mask = 0; mask < 64; ++mask) {
    const ShareBitTriple triple =
        ShareBitTriple::from_packed(static_cast<std::uint8_t>(mask));
    if (triple.satisfies(secret_bit)) {
      valid.push_back(triple);
    }
  }
  return valid;
}

std::vector<ShareBitTriple> enumerate_valid_triples(int secret_bit,
                                                    PairDistribution dist) {
  std::vector<ShareBitTriple> valid = enumerate_valid_triples(secret_bit);
  if (dist == PairDistribution::balanced2 && secret_bit == 1) {
    // Drop triples containing the doubly-covered pattern (1,1), which
    // balanced2 never emits.
    std::erase_if(valid, [](const ShareBitTriple& t) {
      const bool pair12 = t.halves[0].a == 1 && t.halves[1].a == 1;
      const bool pair13 = t.halves[0].b == 1 && t.halves[2].a == 1;
      const bool pair23 = t.halves[1].b == 1 && t.halves[2].b == 1;
      return pair12 || pair13 || pair23;
    });
  }
  return valid;
}

std::string to_text(const ExactnessReport& report) {
  std::ostringstream out;
  for (const PairExactness& pair : report.pairs) {
    const std::string key = "exactness.pair_" + std::to_string(pair.low_index) +
                            "_" + std::to_string(pair.high_index);
    out << key << ".mismatched_pixels " << pair.mismatched_pixels << "\n";
    out << key << ".max_abs_diff " << pair.max_abs_diff << "\n";
  }
  return out.str();
}

std::string to_text(const LeakageReport& report) {
  std::ostringstream out;
  out << "samples " << report.samples << "\n";
  for (const SlotLeakage& slot : report.slots) {
    out << "slot." << slot.slot << ".p1_given_b1 "
        << format_double(slot.p1_given_b1) << "\n";
    out << "slot." << slot.slot << ".p1_given_b0 "
        << format_double(slot.p1_given_b0) << "\n";
    out << "slot." << slot.slot << ".samples " << slot.samples << "\n";
  }
  for (int s = 0; s < 3; ++s) {
    out << "share_advantage." << s + 1 << " "
        << format_double(report.share_advantage[s]) << "\n";
  }
  out << "advantage " << format_double(report.advantage) << "\n";
  return out.str();
}

std::string to_text(const ExpansionReport& report) {
  std::ostringstream out;
  out << "expansion.width " << report.width << "\n";
  out << "expansion.height " << report.height << "\n";
  out << "expansion.pixel_count " << report.pixel_count << "\n";
  out << "expansion.secret_bits_per_pixel " << report.secret_bits_per_pixel
      << "\n";
  out << "expansion.share_bits_per_pixel " << report.share_bits_per_pixel
      << "\n";
  out << "expansion.per_share_expansion " << report.per_share_expansion
      << "\n";
  out << "expansion.aggregate_expansion " << report.aggregate_expansion
      << "\n";
  out << "expansion.payload_bits_per_share " << report.payload_bits_per_share
      << "\n";
  out << "expansion.payload_bytes_per_share " << report.payload_bytes_per_share
      << "\n";
  out << "expansion.total_payload_bits " << report.total_payload_bits << "\n";
  return out.str();
}

std::string to_json(const ExactnessReport& report) {
  ordered_json doc;
  doc["pairs"] = ordered_json::array();
  for (const PairExactness& pair : report.pairs) {
    doc["pairs"].push_back({{"low", pair.low_index},
                            {"high", pair.high_index},
                            {"mismatched_pixels", pair.mismatched_pixels},
                            {"max_abs_diff", pair.max_abs_diff}});
  }
  return doc.dump(2);
}

std::string to_json(const LeakageReport& report) {
  ordered_json doc;
  doc["samples"] = report.samples;
  doc["slots"] = ordered_json::array();
  for (const SlotLeakage& slot : report.slots) {
    doc["slots"].push_back({{"slot", slot.slot},
                            {"p1_given_b1", slot.p1_given_b1},
                            {"p1_given_b0", slot.p1_given_b0},
                            {"samples", slot.samples}});
  }
  doc["share_advantage"] = report.share_advantage;
  doc["advantage"] = report.advantage;
  return doc.dump(2);
}

std::string to_json(const ExpansionReport& report) {
  ordered_json doc;
  doc["width"] = report.width;
  doc["height"] = report.height;
  doc["pixel_count"] = report.pixel_count;
  doc["secret_bits_per_pixel"] = report.secret_bits_per_pixel;
  doc["share_bits_per_pixel"] = report.share_bits_per_pixel;
  doc["per_share_expansion"] = report.per_share_expansion;
  doc["aggregate_expansion"] = report.aggregate_expansion;
  doc["payload_bits_per_share"] = report.payload_bits_per_share;
  doc["payload_bytes_per_share"] = report.payload_bytes_per_share;
  doc["total_payload_bits"] = report.total_payload_bits;
  return doc.dump(2);
}

}  // namespace gvss
