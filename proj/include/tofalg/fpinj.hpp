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
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "tofalg/bitvec.hpp"
#include "tofalg/circuit.hpp"
#include "tofalg/errors.hpp"

namespace tofalg {

/// Default bound on input enumeration (h0 and everything built on it).
inline constexpr int default_wire_cap = 22;

/// Steps a single op.  Termination against the wrong ancilla value is the one
/// source of undefinedness; everything else is total.
inline std::optional<bit_vec> eval_op(const prim_op& op, const bit_vec& x) {
  switch (op.k) {
    case prim_op::kind::gcx: {
      for (int ctrl : op.controls) {
        if (ctrl < 0 || ctrl >= x.width) throw tof_error(errc::index_out_of_range, "eval_op control");
        if (!x.bit(ctrl)) return x;
      }
      if (op.target < 0 || op.target >= x.width) throw tof_error(errc::index_out_of_range, "eval_op target");
      return x.flipped(op.target);
    }
    case prim_op::kind::init:
      if (op.target < 0 || op.target > x.width) throw tof_error(errc::index_out_of_range, "eval_op init");
      return x.inserted(op.target, op.arg != 0);
    case prim_op::kind::term:
      if (op.target < 0 || op.target >= x.width) throw tof_error(errc::index_out_of_range, "eval_op term");
      if (x.bit(op.target) != (op.arg != 0)) return std::nullopt;
      return x.removed(op.target);
    case prim_op::kind::swap:
      if (op.target < 0 || op.target >= x.width || op.arg < 0 || op.arg >= x.width)
        throw tof_error(errc::index_out_of_range, "eval_op swap");
      return x.swapped(op.target, op.arg);
  }
  return std::nullopt;
}

/// Left-to-right fold of eval_op; undefinedness propagates.
inline std::optional<bit_vec> eval(const circuit& c, const bit_vec& x) {
  if (x.width != c.in_width) throw tof_error(errc::width_mismatch, "eval input width");
  bit_vec cur = x;
  for (const auto& op : c.ops) {
    auto next = eval_op(op, cur);
    if (!next) return std::nullopt;
    cur = *next;
  }
  return cur;
}

/// A partial injection between bit-vector spaces: the morphisms of FPinj2.
/// The table is sorted by input value (wire 0 most significant), which makes
/// equality canonical.  Injectivity is a class invariant.
struct partial_injection {
  int in_width = 0;
  int out_width = 0;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;  // sorted by first

  partial_injection() = default;
  partial_injection(int in_w, int out_w, std::vector<std::pair<std::uint64_t, std::uint64_t>> table)
      : in_width(in_w), out_width(out_w), pairs(std::move(table)) {
    std::sort(pairs.begin(), pairs.end());
    std::set<std::uint64_t> values;
    std::uint64_t in_bound = std::uint64_t{1} << in_width;
    std::uint64_t out_bound = std::uint64_t{1} << out_width;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (pairs[i].first >= in_bound || pairs[i].second >= out_bound)
        throw tof_error(errc::index_out_of_range, "partial_injection entry out of range");
      if (i > 0 && pairs[i].first == pairs[i - 1].first)
        throw tof_error(errc::index_out_of_range, "partial_injection duplicate key");
      if (!values.insert(pairs[i].second).second)
        throw tof_error(errc::index_out_of_range, "partial_injection not injective");
    }
  }

  std::optional<std::uint64_t> apply(std::uint64_t key) const {
    auto it = std::lower_bound(pairs.begin(), pairs.end(), std::make_pair(key, std::uint64_t{0}));
    if (it != pairs.end() && it->first == key) return it->second;
    return std::nullopt;
  }

  bool defined(std::uint64_t key) const { return apply(key).has_value(); }
  std::size_t size() const { return pairs.size(); }

  friend bool operator==(const partial_injection&, const partial_injection&) = default;
};

/// Evaluates c on all total points.  The result is injective by the theory;
/// this is asserted at runtime as a self-test of the evaluator.
inline partial_injection h0(const circuit& c, int cap = default_wire_cap) {
  if (c.in_width > cap)
    throw tof_error(errc::cap_exceeded, "h0 on " + std::to_string(c.in_width) + " input wires (cap " + std::to_string(cap) + ")");
  std::vector<std::pair<std::uint64_t, std::uint64_t>> table;
  std::uint64_t n = std::uint64_t{1} << c.in_width;
  for (std::uint64_t x = 0; x < n; ++x) {
    auto y = eval(c, bit_vec(c.in_width, x));
    if (y) table.emplace_back(x, y->word);
  }
  return partial_injection(c.in_width, c.out_width, std::move(table));
}

// ---------------------------------------------------------------------------
// The restriction/inverse structure of FPinj2.

inline partial_injection pin_identity(int n) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> t;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) t.emplace_back(x, x);
  return partial_injection(n, n, std::move(t));
}

inline partial_injection pin_empty(int n, int m) { return partial_injection(n, m, {}); }

/// Diagrammatic relational composition: f then g.
inline partial_injection pin_compose(const partial_injection& f, const partial_injection& g) {
  if (f.out_width != g.in_width) throw tof_error(errc::width_mismatch, "pin_compose");
  std::vector<std::pair<std::uint64_t, std::uint64_t>> t;
  for (const auto& [x, y] : f.pairs)
    if (auto z = g.apply(y)) t.emplace_back(x, *z);
  return partial_injection(f.in_width, g.out_width, std::move(t));
}

inline partial_injection pin_tensor(const partial_injection& f, const partial_injection& g) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> t;
  for (const auto& [a, b] : f.pairs)
    for (const auto& [c, d] : g.pairs)
      t.emplace_back((a << g.in_width) | c, (b << g.out_width) | d);
  return partial_injection(f.in_width + g.in_width, f.out_width + g.out_width, std::move(t));
}

inline partial_injection pin_dagger(const partial_injection& f) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> t;
  t.reserve(f.pairs.size());
  for (const auto& [x, y] : f.pairs) t.emplace_back(y, x);
  return partial_injection(f.out_width, f.in_width, std::move(t));
}

/// The partial identity on the domain of definition.
inline partial_injection pin_restriction(const partial_injection& f) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> t;
  t.reserve(f.pairs.size());
  for (const auto& [x, y] : f.pairs) t.emplace_back(x, x);
  return partial_injection(f.in_width, f.in_width, std::move(t));
}

inline bool is_partial_identity(const partial_injection& p) {
  if (p.in_width != p.out_width) throw tof_error(errc::width_mismatch, "is_partial_identity");
  for (const auto& [x, y] : p.pairs)
    if (x != y) return false;
  return true;
}

/// Complete semantic equivalence decision: the evaluation functor is faithful,
/// so equality of truth tables decides circuit equality.
inline bool equivalent(const circuit& c1, const circuit& c2, int cap = default_wire_cap) {
  if (c1.in_width != c2.in_width || c1.out_width != c2.out_width)
    throw tof_error(errc::width_mismatch, "equivalent: circuit types differ");
  return h0(c1, cap) == h0(c2, cap);
}

/// A width-0-input circuit denotes either a total point or the nowhere
/// defined map; nullopt encodes the latter.
inline std::optional<bit_vec> classify_point(const circuit& c) {
  if (c.in_width != 0) throw tof_error(errc::width_mismatch, "classify_point needs in_width 0");
  return eval(c, bit_vec(0, 0));
}

// ---------------------------------------------------------------------------
// Truth-table serialization: `#` header lines carry the widths, then one line
// per defined pair, input bits TAB output bits, inputs ascending.

inline std::string to_tsv(const partial_injection& p) {
  std::ostringstream out;
  out << "# in_width " << p.in_width << "\n";
  out << "# out_width " << p.out_width << "\n";
  for (const auto& [x, y] : p.pairs)
    out << bit_vec(p.in_width, x).str() << '\t' << bit_vec(p.out_width, y).str() << '\n';
  return out.str();
}

inline partial_injection parse_tsv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int in_w = -1, out_w = -1, lineno = 0;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> table;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::istringstream hs(line.substr(1));
      std::string key;
      long value;
      if (hs >> key >> value) {
        if (key == "in_width") in_w = static_cast<int>(value);
        if (key == "out_width") out_w = static_cast<int>(value);
      }
      continue;
    }
    auto tab = line.find('\t');
    if (tab == std::string::npos)
      throw tof_error(errc::parse_error, "line " + std::to_string(lineno) + ": expected <in>\\t<out>");
    bit_vec x = bit_vec::parse(line.substr(0, tab));
    bit_vec y = bit_vec::parse(line.substr(tab + 1));
    if (in_w < 0) in_w = x.width;
    if (out_w < 0) out_w = y.width;
    if (x.width != in_w || y.width != out_w)
      throw tof_error(errc::parse_error, "line " + std::to_string(lineno) + ": inconsistent widths");
    table.emplace_back(x.word, y.word);
  }
  if (in_w < 0 || out_w < 0) throw tof_error(errc::parse_error, "truth table carries no widths");
  return partial_injection(in_w, out_w, std::move(table));
}

}  // namespace tofalg
