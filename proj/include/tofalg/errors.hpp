// Copyright 2026 The tofalg authors
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

namespace tofalg {

enum class errc {
  width_mismatch,
  index_out_of_range,
  target_in_controls,
  cap_exceeded,
  not_polynomial_form,
  not_idempotent,
  stale_match,
  pattern_mismatch,
  parse_error,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::width_mismatch: return "WidthMismatch";
    case errc::index_out_of_range: return "IndexOutOfRange";
    case errc::target_in_controls: return "TargetInControls";
    case errc::cap_exceeded: return "CapExceeded";
    case errc::not_polynomial_form: return "NotPolynomialForm";
    case errc::not_idempotent: return "NotIdempotent";
    case errc::stale_match: return "StaleMatch";
    case errc::pattern_mismatch: return "PatternMismatch";
    case errc::parse_error: return "ParseError";
  }
  return "UnknownError";
}

/// Structural misuse (bad widths, bad indices, malformed input).  Undefined
/// evaluation results are values (empty optionals), never exceptions.
class tof_error : public std::runtime_error {
 public:
  tof_error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const { return code_; }

 private:
  errc code_;
};

}  // namespace tofalg
