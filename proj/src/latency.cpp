#include "pumsim/latency.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "pumsim/placement.hpp"

namespace pumsim {

LatencyBreakdown make_breakdown(std::int64_t load, std::int64_t compute, std::int64_t readout,
                                std::int64_t transpose, std::int64_t batches) {
  LatencyBreakdown b;
  b.load = load;
  b.compute = compute;
  b.readout = readout;
  b.transpose = transpose;
  b.batches = batches;
  b.total = load + compute + readout + transpose;
  return b;
}

IoCycles io_cycles(const IoShape& shape, const ArrayConfig& config) {
  if (shape.input_bits < 0 || shape.output_bits < 0) {
    throw std::domain_error("I/O bit counts must be >= 0");
  }
  IoCycles io;
  if (shape.input_bits > 0) {
    io.load = ceil_div(shape.input_bits, config.cols) * config.row_write_cycles;
  }
  if (shape.output_bits > 0) {
    io.readout = ceil_div(shape.output_bits, config.cols) * config.row_read_cycles;
  }
  return io;
}

LatencyBreakdown generic_latency(const PrimitiveOp& op, Mode mode, std::int64_t elements,
                                 int operands_in, const ArrayConfig& config) {
  if (elements < 0) {
    throw std::domain_error("element count must be >= 0, got " + std::to_string(elements));
  }
  if (operands_in < 0) {
    throw std::domain_error("operand count must be >= 0, got " + std::to_string(operands_in));
  }
  const std::int64_t per_op = primitive_cost(op, mode);  // validates the width
  if (elements == 0) return LatencyBreakdown{};

  const BitMode bit_mode = mode == Mode::BP ? BitMode::bp(op.width) : BitMode::bs();
  const std::int64_t batches = batches_needed(elements, config, bit_mode);
  IoShape shape;
  shape.input_bits = static_cast<std::int64_t>(operands_in) * elements * op.width;
  shape.output_bits = elements * op.width;
  const IoCycles io = io_cycles(shape, config);
  return make_breakdown(io.load, per_op * batches, io.readout, 0, batches);
}

namespace {

// Batches relative to the profile's lane geometry. The reference working
// set is known to be resident (the calibration assumes it), so capacity is
// never taken below reference_elements even when cols_per_elem exceeds the
// per-batch column budget.
std::int64_t profile_batches(const KernelProfile& profile, const ArrayConfig& config,
                             std::int64_t elements) {
  const std::int64_t cap_raw = system_columns(config) / profile.cols_per_elem;
  const std::int64_t cap = std::max(cap_raw, profile.reference_elements);
  return ceil_div(elements, cap);
}

}  // namespace

LatencyBreakdown profile_latency(const KernelProfile& profile, const ArrayConfig& config) {
  return profile_latency(profile, config, profile.reference_elements);
}

LatencyBreakdown profile_latency(const KernelProfile& profile, const ArrayConfig& config,
                                 std::int64_t elements) {
  if (elements < 0) {
    throw std::domain_error("element count must be >= 0, got " + std::to_string(elements));
  }
  if (elements == 0) return LatencyBreakdown{};
  const std::int64_t ref = profile.reference_elements;
  const std::int64_t load = ceil_div(profile.load * elements, ref);
  const std::int64_t readout = ceil_div(profile.readout * elements, ref);
  const std::int64_t batches = profile_batches(profile, config, elements);
  return make_breakdown(load, profile.compute * batches, readout, 0, batches);
}

double round2(double x) {
  return std::round(x * 100.0) / 100.0;
}

std::vector<SweepRow> sweep(const PrimitiveOp& op, int operands_in,
                            std::vector<std::int64_t> sizes, const ArrayConfig& config) {
  if (sizes.empty()) {
    throw std::invalid_argument("sweep requires at least one workload size");
  }
  std::sort(sizes.begin(), sizes.end());
  std::vector<SweepRow> rows;
  rows.reserve(sizes.size());
  for (std::int64_t elements : sizes) {
    SweepRow row;
    row.elements = elements;
    row.bp = generic_latency(op, Mode::BP, elements, operands_in, config);
    row.bs = generic_latency(op, Mode::BS, elements, operands_in, config);
    row.speedup = row.bp.total > 0
                      ? round2(static_cast<double>(row.bs.total) / static_cast<double>(row.bp.total))
                      : 1.0;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace pumsim
