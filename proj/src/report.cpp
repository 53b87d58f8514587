#include "pumsim/report.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <sstream>

#include "pumsim/appbench.hpp"
#include "pumsim/kernel_catalog.hpp"
#include "pumsim/latency.hpp"
#include "pumsim/parse_util.hpp"
#include "pumsim/placement.hpp"

namespace pumsim::report {

std::string format_int(std::int64_t value) {
  return std::to_string(value);
}

std::string format_double2(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", value);
  return buf;
}

std::string format_percent1(double fraction) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.1f%%", fraction * 100.0);
  return buf;
}

std::string group_thousands(const std::string& digits) {
  std::string out;
  const std::size_t n = digits.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0 && (n - i) % 3 == 0) out.push_back(',');
    out.push_back(digits[i]);
  }
  return out;
}

namespace {

bool all_digits(const std::string& cell) {
  if (cell.empty()) return false;
  return std::all_of(cell.begin(), cell.end(),
                     [](unsigned char c) { return std::isdigit(c) != 0; });
}

std::string markdown_cell(const std::string& cell) {
  if (all_digits(cell) && cell.size() > 3) return group_thousands(cell);
  return cell;
}

}  // namespace

namespace {

// The golden files are unquoted CSV; a cell with a separator in it would
// silently corrupt them.
void require_csv_safe(const Table& table, const std::string& cell) {
  if (cell.find(',') != std::string::npos || cell.find('\n') != std::string::npos) {
    throw std::logic_error(table.id + ": cell '" + cell + "' is not CSV-safe");
  }
}

}  // namespace

std::string to_csv(const Table& table) {
  std::ostringstream out;
  out << "# " << table.id << ": " << table.note << "\n";
  for (std::size_t i = 0; i < table.header.size(); ++i) {
    if (i > 0) out << ',';
    require_csv_safe(table, table.header[i]);
    out << table.header[i];
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out << ',';
      require_csv_safe(table, row[i]);
      out << row[i];
    }
    out << '\n';
  }
  return out.str();
}

std::string to_markdown(const Table& table) {
  std::ostringstream out;
  out << "### " << table.id << ": " << table.note << "\n\n";
  out << '|';
  for (const auto& h : table.header) out << ' ' << h << " |";
  out << "\n|";
  for (std::size_t i = 0; i < table.header.size(); ++i) out << " --- |";
  out << '\n';
  for (const auto& row : table.rows) {
    out << '|';
    for (const auto& cell : row) out << ' ' << markdown_cell(cell) << " |";
    out << '\n';
  }
  return out.str();
}

std::string emit(const Table& table, const std::string& format) {
  if (format == "csv") return to_csv(table);
  if (format == "markdown" || format == "md") return to_markdown(table);
  throw std::domain_error("unknown output format '" + format + "' (expected markdown or csv)");
}

Table render_table2() {
  Table t;
  t.id = "table2";
  t.note = "primitive compute cycle costs (BP word-level, BS per-bit)";
  t.header = {"operation", "mode", "width", "cycles"};
  const auto cell = [](PrimKind kind, int width, Mode mode, int shift = 0) {
    return format_int(primitive_cost(PrimitiveOp{kind, width, shift}, mode));
  };
  t.rows = {
      {"logic", "bp", "32", cell(PrimKind::Logic, 32, Mode::BP)},
      {"add", "bp", "32", cell(PrimKind::Add, 32, Mode::BP)},
      {"sub", "bp", "32", cell(PrimKind::Sub, 32, Mode::BP)},
      {"mult", "bp", "32", cell(PrimKind::Mult, 32, Mode::BP)},
      {"shift(k=5)", "bp", "32", cell(PrimKind::Shift, 32, Mode::BP, 5)},
      {"add", "bs", "1", cell(PrimKind::Add, 1, Mode::BS)},
      {"sub", "bs", "1", cell(PrimKind::Sub, 1, Mode::BS)},
      {"shift(k=5)", "bs", "32", cell(PrimKind::Shift, 32, Mode::BS, 5)},
      {"mux", "bs", "1", cell(PrimKind::Mux, 1, Mode::BS)},
  };
  return t;
}

Table render_table3(const ArrayConfig& config) {
  Table t;
  t.id = "table3";
  t.note = "vector-add latency vs workload size (16-bit, BS/BP speedup)";
  t.header = {"elements", "bp_batches", "bp_cycles", "bs_cycles", "speedup"};
  const std::vector<std::int64_t> sizes = {1024, 4096, 16384, 65536, 262144};
  for (const auto& row : sweep(PrimitiveOp{PrimKind::Add, 16, 0}, 2, sizes, config)) {
    t.rows.push_back({format_int(row.elements), format_int(row.bp.batches),
                      format_int(row.bp.total), format_int(row.bs.total),
                      format_double2(row.speedup)});
  }
  return t;
}

Table render_table4(const ArrayConfig& config) {
  Table t;
  t.id = "table4";
  t.note = "micro-kernel cycle breakdown at reference scale (1,024 x 16-bit; ReLU at 8K)";
  t.header = {"kernel",  "variant", "mode",    "rows_per_elem", "cols_per_elem",
              "load",    "compute", "readout", "total",         "challenge"};
  for (const auto& k : kernel_catalog()) {
    const LatencyBreakdown lat = profile_latency(k, config);
    std::string rows = format_int(k.rows_per_elem);
    if (k.rows_per_elem_approx) rows.insert(rows.begin(), '~');
    t.rows.push_back({k.name, k.variant, k.mode == Mode::BP ? "BP" : "BS", rows,
                      format_int(k.cols_per_elem), format_int(lat.load),
                      format_int(lat.compute), format_int(lat.readout), format_int(lat.total),
                      k.challenge});
  }
  return t;
}

Table render_table5() {
  Table t;
  t.id = "table5";
  t.note = "word-level compute latency for common 32-bit kernels";
  t.header = {"kernel", "bp_cycles", "bs_cycles"};
  for (const auto& e : word_latency_table()) {
    t.rows.push_back({e.name, format_int(word_latency(e.kernel, Mode::BP)),
                      format_int(word_latency(e.kernel, Mode::BS))});
  }
  return t;
}

Table render_table6() {
  Table t;
  t.id = "table6";
  t.note = "AES-128 per-round cycle costs and recomputed best layout";
  t.header = {"operation", "bp_cycles", "bs_cycles", "best_layout"};
  std::int64_t bp_sum = 0;
  std::int64_t bs_sum = 0;
  for (const auto& op : appbench::aes_round_costs()) {
    bp_sum += op.bp_cycles;
    bs_sum += op.bs_cycles;
    t.rows.push_back({op.operation, format_int(op.bp_cycles), format_int(op.bs_cycles),
                      op.best_layout() == Mode::BP ? "BP" : "BS"});
  }
  t.rows.push_back({"Total per round", format_int(bp_sum), format_int(bs_sum), "-"});
  return t;
}

std::vector<Table> render_all_tables(const ArrayConfig& config) {
  return {render_table2(), render_table3(config), render_table4(config), render_table5(),
          render_table6()};
}

namespace {

struct ParsedCsv {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

ParsedCsv parse_csv(const std::string& text) {
  ParsedCsv parsed;
  std::istringstream in(text);
  std::string line;
  bool saw_header = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::string t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    auto cells = split(line, ',');
    if (!saw_header) {
      parsed.header = std::move(cells);
      saw_header = true;
    } else {
      parsed.rows.push_back(std::move(cells));
    }
  }
  return parsed;
}

// Row labels for diffs: first column, suffixed on repeats.
std::vector<std::string> row_keys(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::string> keys;
  keys.reserve(rows.size());
  for (const auto& row : rows) {
    std::string key = row.empty() ? "?" : row.front();
    int repeat = 1;
    for (const auto& prev : keys) {
      if (prev == key || prev.rfind(key + "#", 0) == 0) ++repeat;
    }
    if (repeat > 1) key += "#" + std::to_string(repeat);
    keys.push_back(key);
  }
  return keys;
}

}  // namespace

std::vector<CellDiff> check_golden(const Table& generated, const std::string& reference_csv) {
  const ParsedCsv ref = parse_csv(reference_csv);
  if (ref.header != generated.header) {
    std::ostringstream msg;
    msg << generated.id << ": golden header mismatch; expected '";
    for (std::size_t i = 0; i < generated.header.size(); ++i) {
      if (i > 0) msg << ',';
      msg << generated.header[i];
    }
    msg << "'";
    throw GoldenFormatError(msg.str());
  }

  std::vector<CellDiff> diffs;
  if (ref.rows.size() != generated.rows.size()) {
    diffs.push_back(CellDiff{generated.id, "<table>", "row count",
                             format_int(static_cast<std::int64_t>(generated.rows.size())),
                             format_int(static_cast<std::int64_t>(ref.rows.size()))});
  }
  const auto keys = row_keys(ref.rows);
  const std::size_t n = std::min(ref.rows.size(), generated.rows.size());
  for (std::size_t i = 0; i < n; ++i) {
    const auto& ref_row = ref.rows[i];
    const auto& gen_row = generated.rows[i];
    const std::size_t cols = std::min({ref_row.size(), gen_row.size(),
                                       generated.header.size()});
    if (ref_row.size() != gen_row.size()) {
      diffs.push_back(CellDiff{generated.id, keys[i], "cell count",
                               format_int(static_cast<std::int64_t>(gen_row.size())),
                               format_int(static_cast<std::int64_t>(ref_row.size()))});
    }
    for (std::size_t j = 0; j < cols; ++j) {
      if (ref_row[j] != gen_row[j]) {
        diffs.push_back(
            CellDiff{generated.id, keys[i], generated.header[j], gen_row[j], ref_row[j]});
      }
    }
  }
  return diffs;
}

std::vector<CellDiff> verify_golden(const std::string& golden_dir, const ArrayConfig& config) {
  std::vector<CellDiff> diffs;
  for (const auto& table : render_all_tables(config)) {
    const std::string path = golden_dir + "/" + table.id + ".csv";
    const std::string reference = read_text_file(path);  // throws if missing
    const auto table_diffs = check_golden(table, reference);
    diffs.insert(diffs.end(), table_diffs.begin(), table_diffs.end());
  }
  return diffs;
}

}  // namespace pumsim::report
