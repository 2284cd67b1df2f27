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

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tofalg/errors.hpp"

namespace tofalg {

/// Sorted, duplicate-free set of wire indices.
using wire_set = std::vector<int>;

inline wire_set make_wire_set(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

inline bool wire_set_contains(const wire_set& s, int w) {
  return std::binary_search(s.begin(), s.end(), w);
}

/// One primitive operation of the IR.  Generalized controlled-NOT with any
/// number of controls (0 = not, 1 = cnot, 2 = tof), ancilla initialization
/// and termination for both bit values, and explicit wire swaps standing in
/// for the symmetry maps that circuit diagrams suppress.
struct prim_op {
  enum class kind { gcx, init, term, swap };

  kind k = kind::gcx;
  wire_set controls;  // gcx only
  int target = 0;     // gcx: target wire; init: insertion position; term: wire; swap: first wire
  int arg = 0;        // init/term: bit value; swap: second wire

  static prim_op make_gcx(wire_set controls, int target) {
    prim_op op;
    op.k = kind::gcx;
    op.controls = std::move(controls);
    op.target = target;
    return op;
  }
  static prim_op make_init(int bit, int pos) {
    prim_op op;
    op.k = kind::init;
    op.target = pos;
    op.arg = bit;
    return op;
  }
  static prim_op make_term(int bit, int pos) {
    prim_op op;
    op.k = kind::term;
    op.target = pos;
    op.arg = bit;
    return op;
  }
  static prim_op make_swap(int i, int j) {
    prim_op op;
    op.k = kind::swap;
    op.target = std::min(i, j);
    op.arg = std::max(i, j);
    return op;
  }

  /// Width delta: +1 for init, -1 for term, 0 otherwise.
  int width_delta() const {
    if (k == kind::init) return 1;
    if (k == kind::term) return -1;
    return 0;
  }

  friend bool operator==(const prim_op&, const prim_op&) = default;
};

/// A width-typed sequence of primitive ops.  The running width starts at
/// in_width and each init/term changes it by one; out_width caches the final
/// width.  Circuits are immutable values; all operations below are pure.
struct circuit {
  int in_width = 0;
  int out_width = 0;
  std::vector<prim_op> ops;

  circuit() = default;
  explicit circuit(int width) : in_width(width), out_width(width) {}
  circuit(int in_w, std::vector<prim_op> o) : in_width(in_w), ops(std::move(o)) {
    out_width = in_w;
    for (const auto& op : ops) out_width += op.width_delta();
  }

  std::size_t size() const { return ops.size(); }

  friend bool operator==(const circuit&, const circuit&) = default;
};

struct validation_issue {
  errc code;
  std::size_t op_index;  // ops.size() means the final-width check failed
  std::string detail;
};

/// Checks the circuit invariants; returns the first offending op on failure.
/// Swap{i,i} is reported as target_in_controls (one wire in two roles).
inline std::optional<validation_issue> validate(const circuit& c) {
  if (c.in_width < 0) return validation_issue{errc::width_mismatch, 0, "negative in_width"};
  int w = c.in_width;
  for (std::size_t i = 0; i < c.ops.size(); ++i) {
    const prim_op& op = c.ops[i];
    switch (op.k) {
      case prim_op::kind::gcx:
        for (int ctrl : op.controls)
          if (ctrl < 0 || ctrl >= w)
            return validation_issue{errc::index_out_of_range, i, "control " + std::to_string(ctrl) + " at width " + std::to_string(w)};
        if (op.target < 0 || op.target >= w)
          return validation_issue{errc::index_out_of_range, i, "target " + std::to_string(op.target) + " at width " + std::to_string(w)};
        if (wire_set_contains(op.controls, op.target))
          return validation_issue{errc::target_in_controls, i, "target " + std::to_string(op.target)};
        if (!std::is_sorted(op.controls.begin(), op.controls.end()) ||
            std::adjacent_find(op.controls.begin(), op.controls.end()) != op.controls.end())
          return validation_issue{errc::index_out_of_range, i, "controls not a sorted set"};
        break;
      case prim_op::kind::init:
        if (op.arg != 0 && op.arg != 1) return validation_issue{errc::index_out_of_range, i, "init bit"};
        if (op.target < 0 || op.target > w)
          return validation_issue{errc::index_out_of_range, i, "init position " + std::to_string(op.target) + " at width " + std::to_string(w)};
        ++w;
        break;
      case prim_op::kind::term:
        if (op.arg != 0 && op.arg != 1) return validation_issue{errc::index_out_of_range, i, "term bit"};
        if (op.target < 0 || op.target >= w)
          return validation_issue{errc::index_out_of_range, i, "term position " + std::to_string(op.target) + " at width " + std::to_string(w)};
        --w;
        break;
      case prim_op::kind::swap:
        if (op.target < 0 || op.target >= w || op.arg < 0 || op.arg >= w)
          return validation_issue{errc::index_out_of_range, i, "swap wire at width " + std::to_string(w)};
        if (op.target == op.arg)
          return validation_issue{errc::target_in_controls, i, "swap of a wire with itself"};
        break;
    }
  }
  if (w != c.out_width)
    return validation_issue{errc::width_mismatch, c.ops.size(),
                            "final width " + std::to_string(w) + " != out_width " + std::to_string(c.out_width)};
  return std::nullopt;
}

inline void validate_or_throw(const circuit& c) {
  if (auto issue = validate(c))
    throw tof_error(issue->code, issue->detail + " (op " + std::to_string(issue->op_index) + ")");
}

/// Diagrammatic composition: f then g.
inline circuit compose(const circuit& f, const circuit& g) {
  if (f.out_width != g.in_width)
    throw tof_error(errc::width_mismatch, "compose: " + std::to_string(f.out_width) + " -> " + std::to_string(g.in_width));
  circuit r;
  r.in_width = f.in_width;
  r.out_width = g.out_width;
  r.ops = f.ops;
  r.ops.insert(r.ops.end(), g.ops.begin(), g.ops.end());
  return r;
}

namespace detail {
inline prim_op offset_op(prim_op op, int offset) {
  switch (op.k) {
    case prim_op::kind::gcx:
      for (int& ctrl : op.controls) ctrl += offset;
      op.target += offset;
      break;
    case prim_op::kind::init:
    case prim_op::kind::term:
      op.target += offset;
      break;
    case prim_op::kind::swap:
      op.target += offset;
      op.arg += offset;
      break;
  }
  return op;
}

inline int shift_up(int wire, int inserted_at) { return wire >= inserted_at ? wire + 1 : wire; }
inline int shift_down(int wire, int removed_at) { return wire > removed_at ? wire - 1 : wire; }
}  // namespace detail

/// f on the top block of wires, g below.  g's ops run after f's, offset by
/// f's output width; f's ops are index-stable because g's wires sit below.
inline circuit tensor(const circuit& f, const circuit& g) {
  circuit r;
  r.in_width = f.in_width + g.in_width;
  r.out_width = f.out_width + g.out_width;
  r.ops = f.ops;
  r.ops.reserve(f.ops.size() + g.ops.size());
  for (const auto& op : g.ops) r.ops.push_back(detail::offset_op(op, f.out_width));
  return r;
}

/// Horizontal flip: reverses the op sequence, exchanging init and term.
inline circuit dagger(const circuit& c) {
  circuit r;
  r.in_width = c.out_width;
  r.out_width = c.in_width;
  r.ops.reserve(c.ops.size());
  for (auto it = c.ops.rbegin(); it != c.ops.rend(); ++it) {
    prim_op op = *it;
    if (op.k == prim_op::kind::init)
      op.k = prim_op::kind::term;
    else if (op.k == prim_op::kind::term)
      op.k = prim_op::kind::init;
    r.ops.push_back(op);
  }
  return r;
}

/// c then its partial inverse: the restriction idempotent c;c°.
inline circuit restriction(const circuit& c) { return compose(c, dagger(c)); }

// ---------------------------------------------------------------------------
// Gate constructors.

inline circuit mk_gcnot(int width, std::vector<int> controls, int target) {
  wire_set cs = make_wire_set(std::move(controls));
  circuit c(width);
  c.ops.push_back(prim_op::make_gcx(std::move(cs), target));
  validate_or_throw(c);
  return c;
}

inline circuit mk_tof(int width, int c1, int c2, int target) { return mk_gcnot(width, {c1, c2}, target); }
inline circuit mk_cnot(int width, int control, int target) { return mk_gcnot(width, {control}, target); }
inline circuit mk_not(int width, int target) { return mk_gcnot(width, {}, target); }
inline circuit mk_swap(int width, int i, int j) {
  circuit c(width);
  c.ops.push_back(prim_op::make_swap(i, j));
  validate_or_throw(c);
  return c;
}

inline circuit mk_ket1(int width, int pos) {
  circuit c(width);
  c.ops.push_back(prim_op::make_init(1, pos));
  c.out_width = width + 1;
  validate_or_throw(c);
  return c;
}

inline circuit mk_bra1(int width, int pos) {
  circuit c(width);
  c.ops.push_back(prim_op::make_term(1, pos));
  c.out_width = width - 1;
  validate_or_throw(c);
  return c;
}

/// |0> by its definitional equation: |1> then not.
inline circuit mk_ket0(int width, int pos) {
  circuit c(width);
  c.ops.push_back(prim_op::make_init(1, pos));
  c.ops.push_back(prim_op::make_gcx({}, pos));
  c.out_width = width + 1;
  validate_or_throw(c);
  return c;
}

/// <0| by its definitional equation: not then <1|.
inline circuit mk_bra0(int width, int pos) {
  circuit c(width);
  c.ops.push_back(prim_op::make_gcx({}, pos));
  c.ops.push_back(prim_op::make_term(1, pos));
  c.out_width = width - 1;
  validate_or_throw(c);
  return c;
}

// ---------------------------------------------------------------------------
// Macro expansion of many-control gates.

namespace detail {

/// One level of the inductive controlled-not definition: a fresh |0> ancilla
/// directly below the top two controls takes their conjunction via a tof,
/// the remaining gate uses it as a control, and a second tof restores it.
inline void expand_gcx_into(const prim_op& op, std::vector<prim_op>& out) {
  if (op.controls.size() <= 2) {
    out.push_back(op);
    return;
  }
  int c1 = op.controls[0];
  int c2 = op.controls[1];
  int anc = c2 + 1;
  wire_set inner;
  inner.push_back(anc);
  for (std::size_t i = 2; i < op.controls.size(); ++i) inner.push_back(shift_up(op.controls[i], anc));
  prim_op inner_gate = prim_op::make_gcx(make_wire_set(std::move(inner)), shift_up(op.target, anc));
  out.push_back(prim_op::make_init(0, anc));
  out.push_back(prim_op::make_gcx({c1, c2}, anc));
  expand_gcx_into(inner_gate, out);
  out.push_back(prim_op::make_gcx({c1, c2}, anc));
  out.push_back(prim_op::make_term(0, anc));
}

}  // namespace detail

/// Replaces every gate with more than two controls by its inductive
/// definition, leaving a circuit of not/cnot/tof gates only.
inline circuit expand_gcnot(const circuit& c) {
  circuit r;
  r.in_width = c.in_width;
  r.out_width = c.out_width;
  for (const auto& op : c.ops) {
    if (op.k == prim_op::kind::gcx)
      detail::expand_gcx_into(op, r.ops);
    else
      r.ops.push_back(op);
  }
  return r;
}

/// The diagonal: n -> 2n, copying each wire onto a fresh |0> ancilla with a
/// cnot.  Ancillas are appended at the bottom in wire order, so the output is
/// (input block, copy block) with no residual symmetry maps.
inline circuit delta(int n) {
  circuit c(n);
  for (int i = 0; i < n; ++i) {
    c.ops.push_back(prim_op::make_init(0, n + i));
    c.ops.push_back(prim_op::make_gcx({i}, n + i));
  }
  c.out_width = 2 * n;
  return c;
}

}  // namespace tofalg
