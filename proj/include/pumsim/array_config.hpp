#ifndef PUMSIM_ARRAY_CONFIG_HPP
#define PUMSIM_ARRAY_CONFIG_HPP

#include <cstdint>
#include <string>
#include <string_view>

namespace pumsim {

// Physical geometry and I/O cycle constants of the compute-array system.
// The baseline is a single 128 x 512 SRAM array; larger systems replicate
// the array (num_arrays) behind a single host port, so row transfers
// serialize while compute runs in parallel across arrays.
struct ArrayConfig {
  std::int64_t rows = 128;
  std::int64_t cols = 512;
  std::int64_t num_arrays = 1;
  std::int64_t row_write_cycles = 1;  // cycles to write one full row
  std::int64_t row_read_cycles = 1;   // cycles to read one full row
  std::int64_t transpose_core_cycles = 1;

  // Throws std::domain_error naming the violated bound.
  void validate() const;
};

// Total bit lanes across all arrays (cols * num_arrays).
std::int64_t system_columns(const ArrayConfig& config);

// Bit-level execution mode: BP packs an N-bit word horizontally across N
// columns; BS stacks it vertically down one column of 1-bit lanes.
enum class Mode { BP, BS };

const char* to_string(Mode mode);
Mode mode_from_string(std::string_view text);  // accepts "bp"/"bs", any case

// BP word widths are runtime-configurable between these bounds.
inline constexpr int kMinBpWidth = 2;
inline constexpr int kMaxBpWidth = 32;

// Mode plus the word width that BP lanes are configured to. BS lanes are
// always 1 bit wide; the width field is ignored in BS mode.
struct BitMode {
  Mode mode = Mode::BP;
  int word_width = kMaxBpWidth;

  static BitMode bp(int word_width);  // validates [kMinBpWidth, kMaxBpWidth]
  static BitMode bs();
};

// Vector-level organization: elements spread across lanes (EP) or stacked
// within one lane region (ES).
enum class VectorOrg { ElementParallel, ElementSerial };

struct LayoutSpec {
  BitMode bit_mode;
  VectorOrg vector_org = VectorOrg::ElementParallel;
};

enum class PrimKind {
  Logic,
  Add,
  Sub,
  Mult,
  DivRestoring,
  Shift,
  Mux,
  CompareSign,
};

const char* to_string(PrimKind kind);
PrimKind prim_kind_from_string(std::string_view text);

struct PrimitiveOp {
  PrimKind kind = PrimKind::Add;
  int width = kMaxBpWidth;  // operand bits
  int shift_bits = 0;       // Shift only: distance k >= 0
};

// Compute cycles for one primitive on resident data.
//
//   BP (word-level):  Logic 1, Add 1, Sub 2, Mult N+2, Shift(k) k,
//                     DivRestoring 40N, Mux 1, CompareSign 1
//   BS (per-bit):     Logic N, Add N, Sub N, Mult N^2, Shift(k) 0,
//                     DivRestoring 80N, Mux 4N, CompareSign 1
//
// The restoring-division constants are calibrated linear fits (640/1280
// cycles at N=16); BS multiplication is the N^2 shift-and-add recipe.
// Throws std::domain_error for a width outside the mode's bounds.
std::int64_t primitive_cost(const PrimitiveOp& op, Mode mode);

}  // namespace pumsim

#endif  // PUMSIM_ARRAY_CONFIG_HPP
