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

// Command-line front end: split a grayscale image into three shares,
// reconstruct it from any two, inspect share containers, and run the
// exactness/expansion/leakage analyzers.

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gvss/analyzer.hpp"
#include "gvss/container.hpp"
#include "gvss/error.hpp"
#include "gvss/image.hpp"
#include "gvss/scheme.hpp"

namespace fs = std::filesystem;

namespace {

// Stable exit codes, one per documented error class.
constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;      // unexpected internal error
constexpr int kExitUsage = 2;        // bad flags or arguments
constexpr int kExitIo = 3;           // missing/unreadable/unwritable path
constexpr int kExitImageFormat = 4;  // malformed or unsupported graymap
constexpr int kExitContainer = 5;    // malformed VSS3 container
constexpr int kExitMismatch = 6;     // shares that cannot be combined

std::uint64_t entropy_seed() {
  std::random_device device;
  return (static_cast<std::uint64_t>(device()) << 32) ^ device();
}

gvss::PairDistribution parse_dist(const std::string& name) {
  const auto dist = gvss::pair_distribution_from_name(name);
  if (!dist) {
    throw std::invalid_argument("unknown distribution '" + name + "'");
  }
  return *dist;
}

struct SplitOptions {
  std::string input;
  std::string out_dir;
  std::optional<std::uint64_t> seed;
  std::string dist = "uniform3";
};

int run_split(const SplitOptions& opt) {
  const gvss::GrayImage secret = gvss::read_gray_image(opt.input);
  const gvss::PairDistribution dist = parse_dist(opt.dist);
  const std::uint64_t seed = opt.seed ? *opt.seed : entropy_seed();

  std::error_code ec;
  fs::create_directories(opt.out_dir, ec);
  if (ec) {
    throw gvss::IoError("cannot create output directory: " + opt.out_dir);
  }

  const auto shares = gvss::encode_image(secret, dist, seed);
  std::cout << "seed " << seed << "\n";
  for (const gvss::Share& share : shares) {
    const fs::path path = fs::path(opt.out_dir) /
                          ("share" + std::to_string(share.index()) + ".vss3");
    gvss::write_share(share, dist, path);
    std::cout << "wrote " << path.string() << "\n";
  }
  return kExitOk;
}

struct ReconstructOptions {
  std::string share_a;
  std::string share_b;
  std::string out;
};

int run_reconstruct(const ReconstructOptions& opt) {
  const gvss::LoadedShare a = gvss::read_share(opt.share_a);
  const gvss::LoadedShare b = gvss::read_share(opt.share_b);
  if (a.header.scheme_id != b.header.scheme_id) {
    throw gvss::ShareMismatchError(gvss::MismatchFault::scheme_mismatch,
                                   "shares use different scheme ids");
  }
  const gvss::GrayImage image = gvss::reconstruct_image(a.share, b.share);
  gvss::write_gray_image(image, opt.out);
  std::cout << "wrote " << opt.out << "\n";
  return kExitOk;
}

struct InspectOptions {
  std::string share;
  std::string out_dir;
};

int run_inspect(const InspectOptions& opt) {
  const gvss::LoadedShare loaded = gvss::read_share(opt.share);
  const gvss::ShareFileHeader& header = loaded.header;
  std::cout << "magic VSS3\n";
  std::cout << "version " << static_cast<int>(header.version) << "\n";
  std::cout << "scheme_id " << static_cast<int>(header.scheme_id) << "\n";
  std::cout << "share_index " << static_cast<int>(header.share_index) << "\n";
  std::cout << "dist " << gvss::to_string(loaded.dist()) << "\n";
  std::cout << "width " << header.width << "\n";
  std::cout << "height " << header.height << "\n";
  std::cout << "payload_bytes "
            << gvss::share_payload_bytes(header.width, header.height) << "\n";

  if (!opt.out_dir.empty()) {
    std::error_code ec;
    fs::create_directories(opt.out_dir, ec);
    if (ec) {
      throw gvss::IoError("cannot create output directory: " + opt.out_dir);
    }
    const std::string stem = fs::path(opt.share).stem().string();
    const fs::path a_path = fs::path(opt.out_dir) / (stem + "_A.pbm");
    const fs::path b_path = fs::path(opt.out_dir) / (stem + "_B.pbm");
    gvss::export_half_bitmap(loaded.share, gvss::HalfRole::a, a_path);
    gvss::export_half_bitmap(loaded.share, gvss::HalfRole::b, b_path);
    std::cout << "wrote " << a_path.string() << "\n";
    std::cout << "wrote " << b_path.string() << "\n";
  }
  return kExitOk;
}

struct AnalyzeOptions {
  std::string secret;
  std::vector<std::string> shares;
  std::uint64_t montecarlo = 0;
  bool montecarlo_set = false;
  std::string dist = "uniform3";
  bool json = false;
};

int run_analyze(const AnalyzeOptions& opt) {
  if (opt.montecarlo_set) {
    gvss::RandomStream rng(entropy_seed());
    const gvss::LeakageReport report =
        gvss::measure_leakage(parse_dist(opt.dist), opt.montecarlo, rng);
    if (opt.json) {
      std::cout << gvss::to_json(report) << "\n";
    } else {
      std::cout << gvss::to_text(report);
    }
    return kExitOk;
  }

  const gvss::GrayImage secret = gvss::read_gray_image(opt.secret);
  const gvss::LoadedShare s1 = gvss::read_share(opt.shares[0]);
  const gvss::LoadedShare s2 = gvss::read_share(opt.shares[1]);
  const gvss::LoadedShare s3 = gvss::read_share(opt.shares[2]);
  const gvss::ExactnessReport exactness =
      gvss::verify_exactness(secret, s1.share, s2.share, s3.share);
  const gvss::ExpansionReport expansion = gvss::measure_expansion(s1.share);
  if (opt.json) {
    nlohmann::ordered_json doc;
    doc["exactness"] = nlohmann::ordered_json::parse(gvss::to_json(exactness));
    doc["expansion"] = nlohmann::ordered_json::parse(gvss::to_json(expansion));
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << gvss::to_text(exactness);
    std::cout << gvss::to_text(expansion);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"OR-based (2,3) visual secret sharing for 8-bit grayscale "
               "images"};
  app.require_subcommand(1);

  SplitOptions split_opt;
  CLI::App* split = app.add_subcommand(
      "split", "Split a graymap into three share files");
  split->add_option("input", split_opt.input, "secret image (P2/P5 graymap)")
      ->required();
  split->add_option("--out-dir", split_opt.out_dir,
                    "directory for share1.vss3 .. share3.vss3")
      ->required();
  split->add_option("--seed", split_opt.seed,
                    "64-bit generator seed (default: from system entropy)");
  split->add_option("--dist", split_opt.dist, "half-pair distribution")
      ->check(CLI::IsMember({"uniform3", "balanced2"}));

  ReconstructOptions rec_opt;
  CLI::App* reconstruct = app.add_subcommand(
      "reconstruct", "Rebuild the secret image from any two shares");
  reconstruct->add_option("shareA", rec_opt.share_a, "first share file")
      ->required();
  reconstruct->add_option("shareB", rec_opt.share_b, "second share file")
      ->required();
  reconstruct->add_option("--out", rec_opt.out, "output graymap path")
      ->required();

  InspectOptions inspect_opt;
  CLI::App* inspect = app.add_subcommand(
      "inspect", "Print a share container header, optionally dump half "
                 "bitmaps");
  inspect->add_option("share", inspect_opt.share, "share file")->required();
  inspect->add_option("--out-dir", inspect_opt.out_dir,
                      "write A/B half-plane bitmaps here");

  AnalyzeOptions analyze_opt;
  CLI::App* analyze = app.add_subcommand(
      "analyze", "Exactness/expansion report for shares of a secret, or a "
                 "Monte Carlo leakage report");
  analyze->add_option("--secret", analyze_opt.secret,
                      "secret graymap (file mode)");
  analyze->add_option("--shares", analyze_opt.shares,
                      "the three share files (file mode)")
      ->expected(3);
  CLI::Option* mc = analyze->add_option("--montecarlo", analyze_opt.montecarlo,
                                        "sample count (Monte Carlo mode)");
  analyze->add_option("--dist", analyze_opt.dist,
                      "distribution for Monte Carlo mode")
      ->check(CLI::IsMember({"uniform3", "balanced2"}));
  analyze->add_flag("--json", analyze_opt.json, "emit JSON instead of text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (split->parsed()) return run_split(split_opt);
    if (reconstruct->parsed()) return run_reconstruct(rec_opt);
    if (inspect->parsed()) return run_inspect(inspect_opt);
    if (analyze->parsed()) {
      analyze_opt.montecarlo_set = mc->count() > 0;
      const bool file_mode = !analyze_opt.secret.empty();
      if (file_mode == analyze_opt.montecarlo_set) {
        std::cerr << "analyze: pass either --secret with --shares, or "
                     "--montecarlo\n";
        return kExitUsage;
      }
      if (file_mode && analyze_opt.shares.size() != 3) {
        std::cerr << "analyze: --shares requires the three share files\n";
        return kExitUsage;
      }
      return run_analyze(analyze_opt);
    }
    return kExitUsage;
  } catch (const gvss::ShareMismatchError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMismatch;
  } catch (const gvss::ContainerError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitContainer;
  } catch (const gvss::FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitImageFormat;
  } catch (const gvss::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitFailure;
  }
}
