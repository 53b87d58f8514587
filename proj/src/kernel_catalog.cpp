#include "pumsim/kernel_catalog.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace pumsim {

namespace {

// Lookup keys ignore case and whitespace, so "relu (8k)" finds "ReLU (8K)".
std::string normalize(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (unsigned char c : text) {
    if (std::isspace(c)) continue;
    out.push_back(static_cast<char>(std::tolower(c)));
  }
  return out;
}

KernelProfile entry(std::string name, std::string variant, Mode mode, std::int64_t rows,
                    bool approx, std::int64_t cols, std::int64_t load, std::int64_t compute,
                    std::int64_t readout, std::string challenge, std::int64_t ref_elems = 1024,
                    int width = 16) {
  KernelProfile p;
  p.name = std::move(name);
  p.variant = std::move(variant);
  p.mode = mode;
  p.rows_per_elem = rows;
  p.rows_per_elem_approx = approx;
  p.cols_per_elem = cols;
  p.load = load;
  p.compute = compute;
  p.readout = readout;
  p.challenge = std::move(challenge);
  p.reference_elements = ref_elems;
  p.data_width = width;
  return p;
}

std::vector<KernelProfile> build_catalog() {
  // Calibrated at 1,024 elements of 16-bit data (ReLU at 8K). Compute
  // values that no primitive recipe reproduces (BP if-then-else 7, BP
  // MIN/MAX 21, BP ge_0 17, ...) are pinned calibration constants.
  std::vector<KernelProfile> c;
  c.reserve(33);
  // Arithmetic kernels.
  c.push_back(entry("Vector Add", "Standard", Mode::BP, 3, true, 16, 64, 1, 32, "6"));
  c.push_back(entry("Vector Add", "Standard", Mode::BS, 49, false, 1, 64, 16, 32, "6"));
  c.push_back(entry("Vector Sub", "Standard", Mode::BP, 3, true, 16, 64, 2, 32, "6"));
  c.push_back(entry("Vector Sub", "Standard", Mode::BS, 49, false, 1, 64, 16, 32, "6"));
  c.push_back(entry("MULTU", "HW", Mode::BP, 4, true, 16, 128, 18, 64, "6"));
  c.push_back(entry("MULTU", "Shift+Add", Mode::BS, 64, false, 1, 64, 256, 64, "6"));
  c.push_back(entry("MULTU Const", "HW", Mode::BP, 3, true, 16, 128, 18, 64, "6"));
  c.push_back(entry("MULTU Const", "Shift+Add", Mode::BS, 48, false, 1, 64, 256, 64, "6"));
  c.push_back(entry("DIVU", "Restoring", Mode::BP, 4, false, 16, 64, 640, 32, "6"));
  c.push_back(entry("DIVU", "Restoring", Mode::BS, 64, false, 1, 64, 1280, 32, "6"));
  c.push_back(entry("MIN", "Shift Mask", Mode::BP, 5, true, 16, 64, 21, 32, "6"));
  c.push_back(entry("MIN", "Iter. Comp.", Mode::BS, 50, false, 1, 64, 96, 32, "6"));
  c.push_back(entry("MAX", "Shift Mask", Mode::BP, 5, true, 16, 64, 21, 32, "6"));
  c.push_back(entry("MAX", "Iter. Comp.", Mode::BS, 50, false, 1, 64, 96, 32, "6"));
  // Logical / bit-manipulation kernels.
  c.push_back(entry("Reduction", "Tree", Mode::BP, 2, false, 16, 32, 19, 16, "6"));
  c.push_back(entry("Reduction", "Native", Mode::BS, 17, false, 1, 32, 16, 16, "6"));
  c.push_back(entry("bitcount", "D&C", Mode::BP, 3, false, 16, 128, 25, 32, "1"));
  c.push_back(entry("bitcount", "Summation", Mode::BS, 26, false, 1, 32, 80, 16, "1"));
  c.push_back(entry("bitweave", "1b Logic", Mode::BP, 53, false, 1024, 96, 225, 2, "1", 1024, 1));
  c.push_back(entry("bitweave", "2b Logic", Mode::BS, 74, false, 512, 64, 434, 2, "1", 1024, 2));
  c.push_back(entry("bitweave", "4b Logic", Mode::BS, 116, false, 256, 48, 852, 2, "1", 1024, 4));
  // Control / predicate kernels.
  c.push_back(entry("abs", "Shift Mask", Mode::BP, 3, false, 16, 32, 18, 32, "4"));
  c.push_back(entry("abs", "Serialised", Mode::BS, 48, false, 1, 32, 48, 32, "4"));
  c.push_back(entry("if-then-else", "Mask 0-s", Mode::BP, 5, false, 16, 96, 7, 32, "2/6"));
  c.push_back(entry("if-then-else", "Synth. MUX", Mode::BS, 52, false, 1, 80, 49, 32, "2/6"));
  c.push_back(entry("equal", "XOR+Reduce", Mode::BP, 3, false, 16, 64, 22, 32, "6"));
  c.push_back(entry("equal", "Serial XOR", Mode::BS, 49, false, 1, 64, 33, 32, "6"));
  c.push_back(entry("ge_0", "Shift", Mode::BP, 1, false, 16, 32, 17, 16, "6"));
  c.push_back(entry("ge_0", "Sign Bit", Mode::BS, 16, false, 1, 32, 1, 16, "6"));
  c.push_back(entry("gt_0", "Synth.", Mode::BP, 3, false, 16, 32, 35, 32, "6"));
  c.push_back(entry("gt_0", "Serial Red.", Mode::BS, 17, false, 1, 32, 17, 16, "6"));
  c.push_back(entry("ReLU (8K)", "Standard", Mode::BP, 2, true, 16, 512, 17, 512, "4", 8192));
  c.push_back(entry("ReLU (8K)", "Standard", Mode::BS, 17, true, 1, 512, 17, 512, "4", 8192));
  return c;
}

}  // namespace

const std::vector<KernelProfile>& kernel_catalog() {
  static const std::vector<KernelProfile> catalog = build_catalog();
  return catalog;
}

std::vector<std::string> kernel_names() {
  std::vector<std::string> names;
  for (const auto& k : kernel_catalog()) {
    if (names.empty() || names.back() != k.name) names.push_back(k.name);
  }
  return names;
}

const KernelProfile& lookup_kernel(std::string_view name, Mode mode, std::string_view variant) {
  const std::string want_name = normalize(name);
  const std::string want_variant = normalize(variant);
  const KernelProfile* found = nullptr;
  bool ambiguous = false;
  std::vector<std::string> candidates;
  for (const auto& k : kernel_catalog()) {
    if (normalize(k.name) != want_name || k.mode != mode) continue;
    candidates.push_back(k.variant);
    if (!want_variant.empty() && normalize(k.variant) != want_variant) continue;
    if (found != nullptr) ambiguous = true;
    if (found == nullptr) found = &k;
  }
  if (found != nullptr && !ambiguous) return *found;

  std::ostringstream msg;
  if (ambiguous) {
    msg << "kernel '" << name << "' (" << to_string(mode)
        << ") has several variants, pass one of:";
    for (const auto& v : candidates) msg << " '" << v << "'";
  } else if (!candidates.empty()) {
    msg << "kernel '" << name << "' (" << to_string(mode) << ") has no variant '" << variant
        << "'; known variants:";
    for (const auto& v : candidates) msg << " '" << v << "'";
  } else {
    msg << "unknown kernel '" << name << "' (" << to_string(mode) << "); catalog:";
    for (const auto& n : kernel_names()) msg << " '" << n << "'";
  }
  throw std::out_of_range(msg.str());
}

const std::array<WordLatencyEntry, 4>& word_latency_table() {
  static const std::array<WordLatencyEntry, 4> table = {{
      {WordKernel::VectorAdd, "Vector Addition", 1, 32},
      {WordKernel::VectorMult, "Vector Multiplication", 34, 1024},
      {WordKernel::MinMax, "MIN / MAX", 36, 192},
      {WordKernel::IfThenElse, "If-Then-Else", 7, 97},
  }};
  return table;
}

std::int64_t word_latency(WordKernel kernel, Mode mode) {
  for (const auto& e : word_latency_table()) {
    if (e.kernel == kernel) return mode == Mode::BP ? e.bp_cycles : e.bs_cycles;
  }
  throw std::out_of_range("unknown word-level kernel");
}

WordKernel word_kernel_from_string(std::string_view text) {
  const std::string t = normalize(text);
  if (t == "vectoradd" || t == "vectoraddition" || t == "add") return WordKernel::VectorAdd;
  if (t == "vectormult" || t == "vectormultiplication" || t == "mult")
    return WordKernel::VectorMult;
  if (t == "minmax" || t == "min/max" || t == "min-max") return WordKernel::MinMax;
  if (t == "ifthenelse" || t == "if-then-else") return WordKernel::IfThenElse;
  throw std::out_of_range("unknown word-level kernel '" + std::string(text) +
                          "' (expected one of: vector-add, vector-mult, min-max, if-then-else)");
}

}  // namespace pumsim
