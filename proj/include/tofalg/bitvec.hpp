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

#include <cstdint>
#include <string>

#include "tofalg/errors.hpp"

namespace tofalg {

/// A fixed-width vector of bits.  Wire 0 is the topmost wire and is stored as
/// the most significant bit, so `word` is the integer value of the bit string
/// read top to bottom.  Widths are limited to 62 so that insertion never
/// overflows; the evaluation cap (default 22 input wires) is enforced
/// separately where enumeration happens.
struct bit_vec {
  int width = 0;
  std::uint64_t word = 0;

  bit_vec() = default;
  bit_vec(int w, std::uint64_t v) : width(w), word(v) {
    if (w < 0 || w > 62) throw tof_error(errc::index_out_of_range, "bit_vec width " + std::to_string(w));
    if (w < 62 && (v >> w) != 0) throw tof_error(errc::index_out_of_range, "bit_vec value wider than width");
  }

  bool bit(int wire) const { return (word >> (width - 1 - wire)) & 1u; }

  bit_vec with_bit(int wire, bool b) const {
    std::uint64_t mask = std::uint64_t{1} << (width - 1 - wire);
    bit_vec r = *this;
    r.word = b ? (word | mask) : (word & ~mask);
    return r;
  }

  bit_vec flipped(int wire) const {
    bit_vec r = *this;
    r.word ^= std::uint64_t{1} << (width - 1 - wire);
    return r;
  }

  /// Insert a new wire carrying `b` at `pos` (0 = top, width = bottom).
  bit_vec inserted(int pos, bool b) const {
    int low_bits = width - pos;  // wires pos..width-1 shift down
    std::uint64_t low_mask = (std::uint64_t{1} << low_bits) - 1;
    std::uint64_t high = word >> low_bits;
    std::uint64_t low = word & low_mask;
    return bit_vec(width + 1, (high << (low_bits + 1)) | (std::uint64_t{b} << low_bits) | low);
  }

  /// Remove wire `pos`.
  bit_vec removed(int pos) const {
    int low_bits = width - 1 - pos;
    std::uint64_t low_mask = (std::uint64_t{1} << low_bits) - 1;
    std::uint64_t high = word >> (low_bits + 1);
    std::uint64_t low = word & low_mask;
    return bit_vec(width - 1, (high << low_bits) | low);
  }

  bit_vec swapped(int i, int j) const {
    bool bi = bit(i), bj = bit(j);
    return with_bit(i, bj).with_bit(j, bi);
  }

  /// Top `n` wires.
  bit_vec take(int n) const { return bit_vec(n, n == 0 ? 0 : word >> (width - n)); }

  /// Everything below the top `n` wires.
  bit_vec drop(int n) const {
    int low_bits = width - n;
    return bit_vec(low_bits, word & ((std::uint64_t{1} << low_bits) - 1));
  }

  static bit_vec concat(const bit_vec& hi, const bit_vec& lo) {
    return bit_vec(hi.width + lo.width, (hi.word << lo.width) | lo.word);
  }

  std::string str() const {
    std::string s(width, '0');
    for (int i = 0; i < width; ++i)
      if (bit(i)) s[i] = '1';
    return s;
  }

  static bit_vec parse(const std::string& s) {
    bit_vec r(static_cast<int>(s.size()), 0);
    for (int i = 0; i < r.width; ++i) {
      if (s[i] != '0' && s[i] != '1') throw tof_error(errc::parse_error, "bad bit character in \"" + s + "\"");
      if (s[i] == '1') r = r.with_bit(i, true);
    }
    return r;
  }

  friend bool operator==(const bit_vec&, const bit_vec&) = default;
  friend auto operator<=>(const bit_vec&, const bit_vec&) = default;
};

}  // namespace tofalg
