#ifndef PUMSIM_LATENCY_HPP
#define PUMSIM_LATENCY_HPP

#include <cstdint>
#include <vector>

#include "pumsim/array_config.hpp"
#include "pumsim/kernel_catalog.hpp"

namespace pumsim {

// Total bits crossing the host port in each direction.
struct IoShape {
  std::int64_t input_bits = 0;
  std::int64_t output_bits = 0;
};

struct IoCycles {
  std::int64_t load = 0;
  std::int64_t readout = 0;
};

// total = load + compute + readout + transpose, always.
struct LatencyBreakdown {
  std::int64_t load = 0;
  std::int64_t compute = 0;
  std::int64_t readout = 0;
  std::int64_t transpose = 0;
  std::int64_t batches = 0;
  std::int64_t total = 0;
};

LatencyBreakdown make_breakdown(std::int64_t load, std::int64_t compute, std::int64_t readout,
                                std::int64_t transpose, std::int64_t batches);

// Row-granular host I/O: one row write/read moves a full array row of
// config.cols bits. Transfers serialize across arrays (single host port),
// so cost scales with the total row count regardless of num_arrays.
IoCycles io_cycles(const IoShape& shape, const ArrayConfig& config);

// First-principles latency of an element-parallel primitive over
// `elements` data elements with `operands_in` input vectors. Compute is
// charged once per batch: all resident lanes operate simultaneously.
LatencyBreakdown generic_latency(const PrimitiveOp& op, Mode mode, std::int64_t elements,
                                 int operands_in, const ArrayConfig& config);

// Latency of a calibrated kernel. At the profile's reference element count
// this returns the pinned values for any config; at other counts load and
// readout scale with the element ratio and compute repeats per batch.
LatencyBreakdown profile_latency(const KernelProfile& profile, const ArrayConfig& config);
LatencyBreakdown profile_latency(const KernelProfile& profile, const ArrayConfig& config,
                                 std::int64_t elements);

struct SweepRow {
  std::int64_t elements = 0;
  LatencyBreakdown bp;
  LatencyBreakdown bs;
  double speedup = 0.0;  // BS/BP total ratio, rounded to 2 decimals
};

// BP-vs-BS latency over a list of workload sizes (rows sorted ascending).
// Throws std::invalid_argument on an empty size list.
std::vector<SweepRow> sweep(const PrimitiveOp& op, int operands_in,
                            std::vector<std::int64_t> sizes, const ArrayConfig& config);

double round2(double x);

}  // namespace pumsim

#endif  // PUMSIM_LATENCY_HPP
