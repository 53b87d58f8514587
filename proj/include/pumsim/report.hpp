#ifndef PUMSIM_REPORT_HPP
#define PUMSIM_REPORT_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "pumsim/array_config.hpp"

namespace pumsim::report {

// A rendered result table: id names the reference table it mirrors.
struct Table {
  std::string id;
  std::string note;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

// Byte-stable emitters. CSV keeps raw cells; markdown groups thousands in
// integer cells for readability.
std::string to_csv(const Table& table);
std::string to_markdown(const Table& table);
std::string emit(const Table& table, const std::string& format);  // "csv"|"markdown"

// Reference-table generators, computed through the model (never copied
// from the golden files).
Table render_table2();
Table render_table3(const ArrayConfig& config);
Table render_table4(const ArrayConfig& config);
Table render_table5();
Table render_table6();
std::vector<Table> render_all_tables(const ArrayConfig& config);

// Golden artifacts and the regenerated tables disagree structurally
// (different header or column count).
struct GoldenFormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CellDiff {
  std::string table;
  std::string row_key;
  std::string column;
  std::string generated;  // value the model computes
  std::string reference;  // value the golden artifact holds
};

// Cell-level diff of a regenerated table against golden CSV text. Empty
// result means exact data match. Throws GoldenFormatError when the
// headers disagree.
std::vector<CellDiff> check_golden(const Table& generated, const std::string& reference_csv);

// Regenerates every reference table and diffs it against
// `<golden_dir>/<id>.csv`. Missing files throw std::runtime_error.
std::vector<CellDiff> verify_golden(const std::string& golden_dir, const ArrayConfig& config);

// Integer formatting helpers shared by the report surfaces.
std::string format_int(std::int64_t value);
std::string format_double2(double value);           // fixed, 2 decimals
std::string format_percent1(double fraction);       // 0.17 -> "17.0%"
std::string group_thousands(const std::string& digits);

}  // namespace pumsim::report

#endif  // PUMSIM_REPORT_HPP
