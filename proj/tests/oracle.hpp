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

// Test-only gate-stepping oracle.  Deliberately independent of the library's
// packed-word evaluator: circuits are stepped on plain vectors of ints, and
// truth tables are built by brute-force enumeration.  Every [DERIVED]
// expected value in the suites comes from here.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "tofalg/circuit.hpp"
#include "tofalg/fpinj.hpp"

namespace oracle {

using tofalg::circuit;
using tofalg::prim_op;

using bits = std::vector<int>;

inline std::optional<bits> step(const prim_op& op, bits x) {
  switch (op.k) {
    case prim_op::kind::gcx: {
      bool fire = true;
      for (int c : op.controls) fire = fire && (x[c] == 1);
      if (fire) x[op.target] ^= 1;
      return x;
    }
    case prim_op::kind::init:
      x.insert(x.begin() + op.target, op.arg);
      return x;
    case prim_op::kind::term: {
      if (x[op.target] != op.arg) return std::nullopt;
      x.erase(x.begin() + op.target);
      return x;
    }
    case prim_op::kind::swap:
      std::swap(x[op.target], x[op.arg]);
      return x;
  }
  return std::nullopt;
}

inline std::optional<bits> run(const circuit& c, bits x) {
  for (const auto& op : c.ops) {
    auto next = step(op, std::move(x));
    if (!next) return std::nullopt;
    x = std::move(*next);
  }
  return x;
}

inline bits from_word(int width, std::uint64_t w) {
  bits x(width);
  for (int i = 0; i < width; ++i) x[i] = (w >> (width - 1 - i)) & 1;
  return x;
}

inline std::uint64_t to_word(const bits& x) {
  std::uint64_t w = 0;
  for (int b : x) w = (w << 1) | static_cast<unsigned>(b);
  return w;
}

/// Brute-force truth table, wire 0 as most significant bit.
inline std::map<std::uint64_t, std::uint64_t> table(const circuit& c) {
  std::map<std::uint64_t, std::uint64_t> t;
  for (std::uint64_t w = 0; w < (std::uint64_t{1} << c.in_width); ++w) {
    auto y = run(c, from_word(c.in_width, w));
    if (y) t[w] = to_word(*y);
  }
  return t;
}

inline std::map<std::uint64_t, std::uint64_t> to_map(const tofalg::partial_injection& p) {
  return {p.pairs.begin(), p.pairs.end()};
}

/// Random valid circuits for property tests.  Widths stay within
/// [min_width, max_width]; op mix favours gates over ancilla traffic.
struct circuit_gen {
  std::mt19937 rng;
  int max_width = 6;

  explicit circuit_gen(unsigned seed, int max_w = 6) : rng(seed), max_width(max_w) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

  circuit random_circuit(int in_width, int n_ops) {
    circuit c(in_width);
    int w = in_width;
    for (int i = 0; i < n_ops; ++i) {
      int pick = uniform(0, 9);
      if (w == 0 || pick >= 8) {
        if (pick == 9 && w > 0) {
          c.ops.push_back(prim_op::make_term(uniform(0, 1), uniform(0, w - 1)));
          --w;
        } else if (w < max_width) {
          c.ops.push_back(prim_op::make_init(uniform(0, 1), uniform(0, w)));
          ++w;
        }
        continue;
      }
      if (pick == 7 && w >= 2) {
        int a = uniform(0, w - 1), b = uniform(0, w - 2);
        if (b >= a) ++b;
        c.ops.push_back(prim_op::make_swap(a, b));
        continue;
      }
      int target = uniform(0, w - 1);
      std::vector<int> controls;
      int max_controls = std::min(3, w - 1);
      int n_controls = max_controls == 0 ? 0 : uniform(0, max_controls);
      while (static_cast<int>(controls.size()) < n_controls) {
        int ctrl = uniform(0, w - 1);
        if (ctrl != target && !std::count(controls.begin(), controls.end(), ctrl)) controls.push_back(ctrl);
      }
      c.ops.push_back(prim_op::make_gcx(tofalg::make_wire_set(std::move(controls)), target));
    }
    c.out_width = w;
    return c;
  }

  /// Random partial injection n -> m.
  tofalg::partial_injection random_pin(int n, int m) {
    std::vector<std::uint64_t> ins, outs;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) ins.push_back(x);
    for (std::uint64_t y = 0; y < (std::uint64_t{1} << m); ++y) outs.push_back(y);
    std::shuffle(ins.begin(), ins.end(), rng);
    std::shuffle(outs.begin(), outs.end(), rng);
    std::size_t k = std::uniform_int_distribution<std::size_t>(0, std::min(ins.size(), outs.size()))(rng);
    std::vector<std::pair<std::uint64_t, std::uint64_t>> t;
    for (std::size_t i = 0; i < k; ++i) t.emplace_back(ins[i], outs[i]);
    return tofalg::partial_injection(n, m, std::move(t));
  }
};

}  // namespace oracle
