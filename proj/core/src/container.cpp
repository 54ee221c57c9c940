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

#include "gvss/container.hpp"

#include <cctype>
#include <cstring>
#include <fstream>
#include <istream>
#include <limits>
#include <string>
#include <vector>

#include "gvss/error.hpp"

namespace gvss {

namespace {

constexpr std::uint64_t kMaxDimension = 1u << 20;       // 1M pixels per side
constexpr std::uint64_t kMaxPixelCount = 1ull << 28;    // 256M pixels

// Next whitespace-delimited token; '#' starts a comment running to
// end of line. Leaves the delimiter unconsumed.
std::string next_pnm_token(std::istream& in) {
  std::string token;
  int c = in.get();
  for (;;) {
    if (c == EOF) return token;
    if (c == '#') {
      while (c != EOF && c != '\n') c = in.get();
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      c = in.get();
    } else {
      break;
    }
  }
  while (c != EOF && c != '#' &&
         !std::isspace(static_cast<unsigned char>(c))) {
    token.push_back(static_cast<char>(c));
    c = in.get();
  }
  if (c != EOF) in.unget();
  return token;
}

std::uint64_t parse_unsigned(const std::string& token, const char* field) {
  if (token.empty()) {
    throw FormatError(field, "missing value");
  }
  std::uint64_t value = 0;
  for (char ch : token) {
    if (ch < '0' || ch > '9') {
      throw FormatError(field, "expected an unsigned integer, got '" + token +
                                   "'");
    }
    value = value * 10 + static_cast<std::uint64_t>(ch - '0');
    if (value > std::numeric_limits<std::uint32_t>::max()) {
      throw FormatError(field, "value '" + token + "' out of range");
    }
  }
  return value;
}

std::uint32_t parse_dimension(const std::string& token, const char* field) {
  const std::uint64_t value = parse_unsigned(token, field);
  if (value == 0) {
    throw FormatError(field, "must be positive");
  }
  if (value > kMaxDimension) {
    throw FormatError(field, "exceeds supported maximum of " +
                                 std::to_string(kMaxDimension));
  }
  return static_cast<std::uint32_t>(value);
}

void put_u32le(std::vector<unsigned char>& out, std::uint32_t value) {
  out.push_back(static_cast<unsigned char>(value & 0xFF));
  out.push_back(static_cast<unsigned char>((value >> 8) & 0xFF));
  out.push_back(static_cast<unsigned char>((value >> 16) & 0xFF));
  out.push_back(static_cast<unsigned char>((value >> 24) & 0xFF));
}

std::uint32_t get_u32le(const unsigned char* bytes) {
  return static_cast<std::uint32_t>(bytes[0]) |
         static_cast<std::uint32_t>(bytes[1]) << 8 |
         static_cast<std::uint32_t>(bytes[2]) << 16 |
         static_cast<std::uint32_t>(bytes[3]) << 24;
}

void write_bytes(const std::vector<unsigned char>& bytes,
                 const std::filesystem::path& path, const char* what) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw IoError(std::string("cannot create ") + what + ": " + path.string());
  }
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  out.flush();
  if (!out) {
    throw IoError(std::string("failed writing ") + what + ": " +
                  path.string());
  }
}

}  // namespace

std::uint64_t share_payload_bytes(std::uint32_t width, std::uint32_t height) {
  const std::uint64_t payload_bits =
      static_cast<std::uint64_t>(width) * height * 16;
  return (payload_bits + 7) / 8;
}

GrayImage read_gray_image(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open image file: " + path.string());
  }

  const std::string magic = next_pnm_token(in);
  if (magic != "P2" && magic != "P5") {
    throw FormatError("magic",
                      "expected a P2 or P5 graymap, got '" + magic + "'");
  }
  const std::uint32_t width = parse_dimension(next_pnm_token(in), "width");
  const std::uint32_t height = parse_dimension(next_pnm_token(in), "height");
  const std::uint64_t count = static_cast<std::uint64_t>(width) * height;
  if (count > kMaxPixelCount) {
    throw FormatError("dimensions", "image too large");
  }
  const std::string maxval = next_pnm_token(in);
  if (maxval != "255") {
    throw FormatError("maxval",
                      "only 8-bit graymaps (maxval 255) are supported, got '" +
                          maxval + "'");
  }

  std::vector<std::uint8_t> pixels(count);
  if (magic == "P5") {
    const int separator = in.get();
    if (separator == EOF ||
        !std::isspace(static_cast<unsigned char>(separator))) {
      throw FormatError("pixels", "missing separator before pixel data");
    }
    in.read(reinterpret_cast<char*>(pixels.data()),
            static_cast<std::streamsize>(count));
    if (static_cast<std::uint64_t>(in.gcount()) != count) {
      throw FormatError("pixels", "truncated pixel data");
    }
    if (in.get() != EOF) {
      throw FormatError("pixels", "trailing data after pixel block");
    }
  } else {
    for (std::uint64_t i = 0; i < count; ++i) {
      const std::string token = next_pnm_token(in);
      const std::uint64_t value = parse_unsigned(token, "pixels");
      if (value > 255) {
        throw FormatError("pixels",
                          "sample '" + token + "' exceeds maxval 255");
      }
      pixels[i] = static_cast<std::uint8_t>(value);
    }
    if (!next_pnm_token(in).empty()) {
      throw FormatError("pixels", "trailing samples after pixel block");
    }
  }
  return GrayImage(width, height, std::move(pixels));
}

void write_gray_image(const GrayImage& image,
                      const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw IoError("cannot create image file: " + path.string());
  }
  out << "P5\n" << image.width() << " " << image.height() << "\n255\n";
  out.write(reinterpret_cast<const char*>(image.pixels().data()),
            static_cast<std::streamsize>(image.pixel_count()));
  out.flush();
  if (!out) {
    throw IoError("failed writing image file: " + path.string());
  }
}

void write_share(const Share& share, PairDistribution dist,
                 const std::filesystem::path& path) {
  std::vector<unsigned char> bytes;
  bytes.reserve(kShareHeaderBytes +
                share_payload_bytes(share.width(), share.height()));
  bytes.insert(bytes.end(), kShareMagic, kShareMagic + 4);
  bytes.push_back(kFormatVersion);
  bytes.push_back(kSchemeId);
  bytes.push_back(static_cast<unsigned char>(share.index()));
  bytes.push_back(static_cast<unsigned char>(dist));
  put_u32le(bytes, share.width());
  put_u32le(bytes, share.height());
  for (std::uint64_t i = 0; i < share.pixel_count(); ++i) {
    const SharePixel pixel = share.pixel_at(i);
    bytes.push_back(pixel.a.to_byte());
    bytes.push_back(pixel.b.to_byte());
  }
  write_bytes(bytes, path, "share file");
}

LoadedShare read_share(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open share file: " + path.string());
  }
  std::vector<unsigned char> bytes(
      (std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) {
    throw IoError("failed reading share file: " + path.string());
  }

  if (bytes.size() < 4) {
    throw ContainerError(ContainerFault::truncated_payload,
                         "file shorter than the magic field");
  }
  if (std::memcmp(bytes.data(), kShareMagic, 4) != 0) {
    throw ContainerError(ContainerFault::bad_magic,
                         "not a VSS3 share container");
  }
  if (bytes.size() < kShareHeaderBytes) {
    throw ContainerError(ContainerFault::truncated_payload,
                         "file shorter than the 16-byte header");
  }

  ShareFileHeader header;
  header.version = bytes[4];
  header.scheme_id = bytes[5];
  header.share_index = bytes[6];
  header.dist_id = bytes[7];
  header.width = get_u32le(bytes.data() + 8);
  header.height = get_u32le(bytes.data() + 12);

  if (header.version != kFormatVersion) {
    throw ContainerError(ContainerFault::unsupported_version,
                         "unsupported container version " +
                             std::to_string(header.version));
  }
  if (header.scheme_id != kSchemeId) {
    throw ContainerError(
        ContainerFault::unsupported_scheme,
        "unsupported scheme id " + std::to_string(header.scheme_id));
  }
  if (header.share_index < 1 || header.share_index > 3) {
    throw ContainerError(
        ContainerFault::bad_share_index,
        "share index " + std::to_string(header.share_index) +
            " outside {1, 2, 3}");
  }
  if (header.dist_id != static_cast<std::uint8_t>(
                            PairDistribution::uniform3) &&
      header.dist_id != static_cast<std::uint8_t>(
                            PairDistribution::balanced2)) {
    throw ContainerError(
        ContainerFault::bad_distribution,
        "unknown distribution id " + std::to_string(header.dist_id));
  }
  if (header.width == 0 || header.height == 0) {
    throw ContainerError(ContainerFault::bad_dimensions,
                         "dimensions must be positive");
  }

  const std::uint64_t available = bytes.size() - kShareHeaderBytes;
  const std::uint64_t pixel_count =
      static_cast<std::uint64_t>(header.width) * header.height;
  if (pixel_count > available / 2) {
    throw ContainerError(
        ContainerFault::truncated_payload,
        "payload holds " + std::to_string(available) + " bytes, expected " +
            std::to_string(share_payload_bytes(header.width, header.height)));
  }
  if (available > pixel_count * 2) {
    throw ContainerError(ContainerFault::trailing_data,
                         "unexpected bytes after the payload");
  }

  LoadedShare loaded{Share(header.share_index, header.width, header.height),
                     header};
  const unsigned char* payload = bytes.data() + kShareHeaderBytes;
  for (std::uint64_t i = 0; i < pixel_count; ++i) {
    loaded.share.set_pixel_at(
        i, SharePixel{BitVector8::from_byte(payload[2 * i]),
                      BitVector8::from_byte(payload[2 * i + 1])});
  }
  return loaded;
}

void export_half_bitmap(const Share& share, HalfRole half,
                        const std::filesystem::path& path) {
  const std::uint64_t bitmap_width = static_cast<std::uint64_t>(share.width());
  std::vector<unsigned char> bytes;
  const std::string header = "P4\n" + std::to_string(bitmap_width * 8) + " " +
                             std::to_string(share.height()) + "\n";
  bytes.insert(bytes.end(), header.begin(), header.end());
  // One byte per source pixel: the row width of 8 * share.width() bits is
  // already byte-aligned, so no row padding is ever needed.
  for (std::uint64_t i = 0; i < share.pixel_count(); ++i) {
    const SharePixel pixel = share.pixel_at(i);
    bytes.push_back(half == HalfRole::a ? pixel.a.to_byte()
                                        : pixel.b.to_byte());
  }
  write_bytes(bytes, path, "half bitmap");
}

}  // namespace gvss
