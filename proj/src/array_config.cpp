#include "pumsim/array_config.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace pumsim {

namespace {

std::string lower(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

void require(bool ok, const std::string& message) {
  if (!ok) throw std::domain_error(message);
}

}  // namespace

void ArrayConfig::validate() const {
  require(rows >= 1, "ArrayConfig.rows must be >= 1, got " + std::to_string(rows));
  require(cols >= 1, "ArrayConfig.cols must be >= 1, got " + std::to_string(cols));
  require(num_arrays >= 1,
          "ArrayConfig.num_arrays must be >= 1, got " + std::to_string(num_arrays));
  require(row_write_cycles >= 1, "ArrayConfig.row_write_cycles must be >= 1, got " +
                                     std::to_string(row_write_cycles));
  require(row_read_cycles >= 1, "ArrayConfig.row_read_cycles must be >= 1, got " +
                                    std::to_string(row_read_cycles));
  require(transpose_core_cycles >= 1, "ArrayConfig.transpose_core_cycles must be >= 1, got " +
                                          std::to_string(transpose_core_cycles));
}

std::int64_t system_columns(const ArrayConfig& config) {
  return config.cols * config.num_arrays;
}

const char* to_string(Mode mode) {
  return mode == Mode::BP ? "BP" : "BS";
}

Mode mode_from_string(std::string_view text) {
  const std::string m = lower(text);
  if (m == "bp" || m == "bit-parallel" || m == "bitparallel") return Mode::BP;
  if (m == "bs" || m == "bit-serial" || m == "bitserial") return Mode::BS;
  throw std::domain_error("unknown mode '" + std::string(text) + "' (expected bp or bs)");
}

BitMode BitMode::bp(int word_width) {
  if (word_width < kMinBpWidth || word_width > kMaxBpWidth) {
    throw std::domain_error("BP word width must be in [" + std::to_string(kMinBpWidth) + ", " +
                            std::to_string(kMaxBpWidth) + "], got " + std::to_string(word_width));
  }
  return BitMode{Mode::BP, word_width};
}

BitMode BitMode::bs() {
  return BitMode{Mode::BS, 1};
}

const char* to_string(PrimKind kind) {
  switch (kind) {
    case PrimKind::Logic: return "logic";
    case PrimKind::Add: return "add";
    case PrimKind::Sub: return "sub";
    case PrimKind::Mult: return "mult";
    case PrimKind::DivRestoring: return "div";
    case PrimKind::Shift: return "shift";
    case PrimKind::Mux: return "mux";
    case PrimKind::CompareSign: return "compare_sign";
  }
  return "?";
}

PrimKind prim_kind_from_string(std::string_view text) {
  const std::string k = lower(text);
  if (k == "logic" || k == "and" || k == "or" || k == "xor" || k == "not") return PrimKind::Logic;
  if (k == "add") return PrimKind::Add;
  if (k == "sub") return PrimKind::Sub;
  if (k == "mult" || k == "mul") return PrimKind::Mult;
  if (k == "div" || k == "div_restoring" || k == "divu") return PrimKind::DivRestoring;
  if (k == "shift") return PrimKind::Shift;
  if (k == "mux") return PrimKind::Mux;
  if (k == "compare_sign" || k == "sign") return PrimKind::CompareSign;
  throw std::domain_error("unknown primitive '" + std::string(text) + "'");
}

std::int64_t primitive_cost(const PrimitiveOp& op, Mode mode) {
  const std::int64_t n = op.width;
  if (mode == Mode::BP) {
    if (op.width < kMinBpWidth || op.width > kMaxBpWidth) {
      throw std::domain_error("BP operand width must be in [" + std::to_string(kMinBpWidth) +
                              ", " + std::to_string(kMaxBpWidth) + "], got " +
                              std::to_string(op.width));
    }
  } else if (op.width < 1) {
    throw std::domain_error("BS operand width must be >= 1, got " + std::to_string(op.width));
  }
  if (op.kind == PrimKind::Shift && op.shift_bits < 0) {
    throw std::domain_error("shift distance must be >= 0, got " + std::to_string(op.shift_bits));
  }

  if (mode == Mode::BP) {
    switch (op.kind) {
      case PrimKind::Logic: return 1;
      case PrimKind::Add: return 1;
      case PrimKind::Sub: return 2;
      case PrimKind::Mult: return n + 2;
      case PrimKind::DivRestoring: return 40 * n;
      case PrimKind::Shift: return op.shift_bits;
      case PrimKind::Mux: return 1;          // hardware word-level select
      case PrimKind::CompareSign: return 1;  // single sign-bit probe
    }
  } else {
    switch (op.kind) {
      case PrimKind::Logic: return n;
      case PrimKind::Add: return n;            // 1-cycle full adder per bit
      case PrimKind::Sub: return n;
      case PrimKind::Mult: return n * n;       // shift-and-add
      case PrimKind::DivRestoring: return 80 * n;
      case PrimKind::Shift: return 0;          // adjacent-row access is free
      case PrimKind::Mux: return 4 * n;        // synthesized from 4 gates per bit
      case PrimKind::CompareSign: return 1;    // sign bit is directly addressable
    }
  }
  throw std::domain_error("unhandled primitive kind");
}

}  // namespace pumsim
