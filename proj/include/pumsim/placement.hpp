#ifndef PUMSIM_PLACEMENT_HPP
#define PUMSIM_PLACEMENT_HPP

#include <cstdint>

#include "pumsim/array_config.hpp"

namespace pumsim {

// Physical footprint of a block of data under one layout.
struct Footprint {
  std::int64_t rows_per_lane = 0;
  std::int64_t cols_per_element = 0;
  std::int64_t total_rows = 0;
  std::int64_t total_cols = 0;
};

struct CapacityVerdict {
  enum class Status { Fits, RowOverflow, ColumnBatching };
  Status status = Status::Fits;
  std::int64_t row_deficit = 0;  // > 0 iff RowOverflow
  std::int64_t batches = 0;      // >= 2 iff ColumnBatching
};

const char* to_string(CapacityVerdict::Status status);

// Rows/columns occupied by n_words words of `width` bits under `layout`.
// ES-BS stacks every word vertically in one column (n_words * width rows);
// ES-BP gives each word its own row of `width` columns. EP variants place
// words across lanes instead. Words pack densely, no alignment padding;
// n_words == 0 yields an all-zero footprint.
// Throws std::domain_error if a BP word is wider than one array row.
Footprint scratchpad_footprint(std::int64_t n_words, int width, const LayoutSpec& layout,
                               const ArrayConfig& config);

// RowOverflow when the footprint exceeds the physical row count,
// ColumnBatching when rows fit but columns exceed the system width.
CapacityVerdict check_overflow(const Footprint& fp, const ArrayConfig& config);

// Elements processable in one batch: every column is a lane in BS; BP
// aggregates word_width columns per lane.
std::int64_t lane_capacity(const ArrayConfig& config, const BitMode& mode);

// ceil(elements / lane_capacity); zero elements need zero batches.
std::int64_t batches_needed(std::int64_t elements, const ArrayConfig& config,
                            const BitMode& mode);

// Fraction of system columns doing useful work for `active_lanes` lanes.
double utilization(std::int64_t active_lanes, const BitMode& mode, const ArrayConfig& config);

std::int64_t ceil_div(std::int64_t a, std::int64_t b);

}  // namespace pumsim

#endif  // PUMSIM_PLACEMENT_HPP
