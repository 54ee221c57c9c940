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

#include <stdexcept>
#include <string>
#include <utility>

namespace gvss {

// Base class for every error raised by this library. Precondition
// violations (out-of-range pixel values, bad share indices) throw
// std::invalid_argument instead.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Filesystem-level failure: missing, unreadable or unwritable path.
class IoError : public Error {
 public:
  using Error::Error;
};

// Malformed graymap/bitmap file. `field` names the offending header field.
class FormatError : public Error {
 public:
  FormatError(std::string field, const std::string& message)
      : Error(field + ": " + message), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

// What went wrong while parsing a VSS3 share container.
enum class ContainerFault {
  bad_magic,
  unsupported_version,
  unsupported_scheme,
  bad_share_index,
  bad_distribution,
  bad_dimensions,
  truncated_payload,
  trailing_data,
};

class ContainerError : public Error {
 public:
  ContainerError(ContainerFault fault, const std::string& message)
      : Error(message), fault_(fault) {}

  ContainerFault fault() const noexcept { return fault_; }

 private:
  ContainerFault fault_;
};

// Two shares that cannot be combined into a reconstruction.
enum class MismatchFault {
  duplicate_share,
  dimension_mismatch,
  scheme_mismatch,
};

class ShareMismatchError : public Error {
 public:
  ShareMismatchError(MismatchFault fault, const std::string& message)
      : Error(message), fault_(fault) {}

  MismatchFault fault() const noexcept { return fault_; }

 private:
  MismatchFault fault_;
};

}  // namespace gvss
