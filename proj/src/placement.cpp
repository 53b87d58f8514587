#include "pumsim/placement.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace pumsim {

std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
  return (a + b - 1) / b;
}

const char* to_string(CapacityVerdict::Status status) {
  switch (status) {
    case CapacityVerdict::Status::Fits: return "fits";
    case CapacityVerdict::Status::RowOverflow: return "row overflow";
    case CapacityVerdict::Status::ColumnBatching: return "column batching";
  }
  return "?";
}

Footprint scratchpad_footprint(std::int64_t n_words, int width, const LayoutSpec& layout,
                               const ArrayConfig& config) {
  if (n_words < 0) {
    throw std::domain_error("word count must be >= 0, got " + std::to_string(n_words));
  }
  if (width < 1) {
    throw std::domain_error("word width must be >= 1, got " + std::to_string(width));
  }
  if (layout.bit_mode.mode == Mode::BP && width > config.cols) {
    throw std::domain_error("BP word of " + std::to_string(width) +
                            " bits does not fit one array row of " +
                            std::to_string(config.cols) + " columns");
  }
  if (n_words == 0) return Footprint{};

  const bool serial = layout.vector_org == VectorOrg::ElementSerial;
  Footprint fp;
  if (layout.bit_mode.mode == Mode::BS) {
    fp.cols_per_element = 1;
    if (serial) {
      // All words stacked down one column.
      fp.rows_per_lane = n_words * width;
      fp.total_rows = n_words * width;
      fp.total_cols = 1;
    } else {
      // One word per column.
      fp.rows_per_lane = width;
      fp.total_rows = width;
      fp.total_cols = n_words;
    }
  } else {
    fp.cols_per_element = width;
    if (serial) {
      // One word per row.
      fp.rows_per_lane = n_words;
      fp.total_rows = n_words;
      fp.total_cols = width;
    } else {
      // Words side by side, wrapping after the system width.
      fp.rows_per_lane = 1;
      fp.total_cols = n_words * width;
      fp.total_rows = ceil_div(n_words * width, system_columns(config));
    }
  }
  return fp;
}

CapacityVerdict check_overflow(const Footprint& fp, const ArrayConfig& config) {
  CapacityVerdict verdict;
  if (fp.total_rows > config.rows) {
    verdict.status = CapacityVerdict::Status::RowOverflow;
    verdict.row_deficit = fp.total_rows - config.rows;
  } else if (fp.total_cols > system_columns(config)) {
    verdict.status = CapacityVerdict::Status::ColumnBatching;
    verdict.batches = ceil_div(fp.total_cols, system_columns(config));
  }
  return verdict;
}

std::int64_t lane_capacity(const ArrayConfig& config, const BitMode& mode) {
  const std::int64_t columns = system_columns(config);
  if (mode.mode == Mode::BS) return columns;
  return columns / mode.word_width;
}

std::int64_t batches_needed(std::int64_t elements, const ArrayConfig& config,
                            const BitMode& mode) {
  if (elements < 0) {
    throw std::domain_error("element count must be >= 0, got " + std::to_string(elements));
  }
  if (elements == 0) return 0;
  return ceil_div(elements, lane_capacity(config, mode));
}

double utilization(std::int64_t active_lanes, const BitMode& mode, const ArrayConfig& config) {
  if (active_lanes < 0) {
    throw std::domain_error("active lane count must be >= 0, got " +
                            std::to_string(active_lanes));
  }
  const double columns = static_cast<double>(system_columns(config));
  const double used = mode.mode == Mode::BS
                          ? static_cast<double>(active_lanes)
                          : static_cast<double>(active_lanes) * mode.word_width;
  return std::min(1.0, used / columns);
}

}  // namespace pumsim
