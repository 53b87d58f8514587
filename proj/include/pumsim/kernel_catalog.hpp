#ifndef PUMSIM_KERNEL_CATALOG_HPP
#define PUMSIM_KERNEL_CATALOG_HPP

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pumsim/array_config.hpp"

namespace pumsim {

// One calibrated micro-kernel record. Cycle counts are pinned at the
// kernel's reference scale (1,024 elements of 16-bit data unless the name
// says otherwise); rows/cols-per-element describe the physical footprint.
// Some rows-per-element values are amortized estimates, marked approximate.
struct KernelProfile {
  std::string name;
  std::string variant;
  Mode mode = Mode::BP;
  std::int64_t rows_per_elem = 0;
  bool rows_per_elem_approx = false;
  std::int64_t cols_per_elem = 1;
  std::int64_t load = 0;
  std::int64_t compute = 0;
  std::int64_t readout = 0;
  std::int64_t reference_elements = 1024;
  int data_width = 16;
  std::string challenge;  // which layout challenge the kernel exercises

  std::int64_t total() const { return load + compute + readout; }
};

// The full calibrated catalog, immutable after construction.
const std::vector<KernelProfile>& kernel_catalog();

// Case-insensitive lookup; the variant disambiguates kernels with several
// recipes per mode (e.g. the bitweave bit-packings). Throws
// std::out_of_range listing the catalog on a miss or an ambiguous match.
const KernelProfile& lookup_kernel(std::string_view name, Mode mode,
                                   std::string_view variant = "");

// Distinct kernel names in catalog order.
std::vector<std::string> kernel_names();

// Word-level compute latencies for common 32-bit kernels.
enum class WordKernel { VectorAdd, VectorMult, MinMax, IfThenElse };

struct WordLatencyEntry {
  WordKernel kernel;
  const char* name;
  std::int64_t bp_cycles;
  std::int64_t bs_cycles;
};

const std::array<WordLatencyEntry, 4>& word_latency_table();
std::int64_t word_latency(WordKernel kernel, Mode mode);
WordKernel word_kernel_from_string(std::string_view text);

}  // namespace pumsim

#endif  // PUMSIM_KERNEL_CATALOG_HPP
