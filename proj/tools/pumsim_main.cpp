#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "pumsim/appbench.hpp"
#include "pumsim/array_config.hpp"
#include "pumsim/kernel_catalog.hpp"
#include "pumsim/latency.hpp"
#include "pumsim/parse_util.hpp"
#include "pumsim/placement.hpp"
#include "pumsim/report.hpp"
#include "pumsim/schedule.hpp"

namespace {

using namespace pumsim;
namespace rep = pumsim::report;
namespace app = pumsim::appbench;

constexpr int kExitOk = 0;
constexpr int kExitGoldenMismatch = 1;
constexpr int kExitUsage = 2;

struct GlobalFlags {
  std::int64_t rows = 0;
  std::int64_t cols = 0;
  std::int64_t arrays = 0;
  std::int64_t row_write = 0;
  std::int64_t row_read = 0;
  std::int64_t transpose_core = 0;
  std::string format;
  std::string out;
  std::string config_file;
};

// Batch-sensitive studies default to the 512-array evaluation system;
// everything else uses the single-array baseline.
std::int64_t default_arrays(const std::string& subcommand) {
  if (subcommand == "sweep" || subcommand == "vgg" || subcommand == "tables") return 512;
  return 1;
}

struct RunConfig {
  ArrayConfig array;
  std::string format = "markdown";
  std::string out;
};

void apply_config_file(RunConfig& run, const std::string& path) {
  for (const auto& kv : read_key_value_file(path)) {
    const auto bad = [&](const std::string& message) {
      return std::runtime_error(path + ":" + std::to_string(kv.line) + ": " + message);
    };
    try {
      if (kv.key == "rows") {
        run.array.rows = parse_int64(kv.value, kv.key);
      } else if (kv.key == "cols") {
        run.array.cols = parse_int64(kv.value, kv.key);
      } else if (kv.key == "num_arrays") {
        run.array.num_arrays = parse_int64(kv.value, kv.key);
      } else if (kv.key == "row_write_cycles") {
        run.array.row_write_cycles = parse_int64(kv.value, kv.key);
      } else if (kv.key == "row_read_cycles") {
        run.array.row_read_cycles = parse_int64(kv.value, kv.key);
      } else if (kv.key == "transpose_core_cycles") {
        run.array.transpose_core_cycles = parse_int64(kv.value, kv.key);
      } else if (kv.key == "format") {
        run.format = kv.value;
      } else if (kv.key == "out") {
        run.out = kv.value;
      } else {
        throw bad("unknown config key '" + kv.key + "'");
      }
    } catch (const ParseError& e) {
      throw bad(e.what());
    }
  }
}

RunConfig resolve_config(const CLI::App& cli, const GlobalFlags& flags,
                         const std::string& subcommand) {
  RunConfig run;
  run.array.num_arrays = default_arrays(subcommand);
  if (!flags.config_file.empty()) apply_config_file(run, flags.config_file);
  if (cli.count("--rows") > 0) run.array.rows = flags.rows;
  if (cli.count("--cols") > 0) run.array.cols = flags.cols;
  if (cli.count("--arrays") > 0) run.array.num_arrays = flags.arrays;
  if (cli.count("--row-write") > 0) run.array.row_write_cycles = flags.row_write;
  if (cli.count("--row-read") > 0) run.array.row_read_cycles = flags.row_read;
  if (cli.count("--transpose-core") > 0) run.array.transpose_core_cycles = flags.transpose_core;
  if (cli.count("--format") > 0) run.format = flags.format;
  if (cli.count("--out") > 0) run.out = flags.out;
  if (run.format != "markdown" && run.format != "md" && run.format != "csv") {
    throw std::domain_error("unknown output format '" + run.format +
                            "' (expected markdown or csv)");
  }
  run.array.validate();
  return run;
}

void write_output(const RunConfig& run, const std::string& text) {
  if (run.out.empty()) {
    std::cout << text;
    return;
  }
  std::string path = run.out;
  const char* dir = std::getenv("PUMSIM_OUT_DIR");
  if (dir != nullptr && *dir != '\0' && path.front() != '/') {
    path = std::string(dir) + "/" + path;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write output file " + path);
  out << text;
  if (!out) throw std::runtime_error("error while writing " + path);
}

std::string emit_tables(const std::vector<rep::Table>& tables, const std::string& format) {
  std::string text;
  for (std::size_t i = 0; i < tables.size(); ++i) {
    if (i > 0) text += "\n";
    text += rep::emit(tables[i], format);
  }
  return text;
}

// ----------------------------------------------------------- subcommands

std::string run_cost(const RunConfig& run, const std::string& op_name, int width,
                     const std::string& mode_name, int shift_k) {
  const PrimitiveOp op{prim_kind_from_string(op_name), width, shift_k};
  const Mode mode = mode_from_string(mode_name);
  rep::Table t;
  t.id = "cost";
  t.note = "compute cycles for one primitive on resident data";
  t.header = {"operation", "width", "mode", "cycles"};
  std::string label = to_string(op.kind);
  if (op.kind == PrimKind::Shift) label += "(k=" + std::to_string(shift_k) + ")";
  t.rows.push_back({label, rep::format_int(width), mode == Mode::BP ? "bp" : "bs",
                    rep::format_int(primitive_cost(op, mode))});
  return rep::emit(t, run.format);
}

std::string run_kernel(const RunConfig& run, const std::string& name,
                       const std::string& mode_name, const std::string& variant,
                       const std::string& elements) {
  const Mode mode = mode_from_string(mode_name);
  const KernelProfile& profile = lookup_kernel(name, mode, variant);
  const std::int64_t n =
      elements.empty() ? profile.reference_elements : parse_size(elements);
  const LatencyBreakdown lat = profile_latency(profile, run.array, n);
  rep::Table t;
  t.id = "kernel";
  t.note = "calibrated kernel latency (reference scale " +
           rep::format_int(profile.reference_elements) + " elements)";
  t.header = {"kernel",  "variant", "mode",    "elements", "batches",
              "load",    "compute", "readout", "total"};
  t.rows.push_back({profile.name, profile.variant, to_string(profile.mode),
                    rep::format_int(n), rep::format_int(lat.batches), rep::format_int(lat.load),
                    rep::format_int(lat.compute), rep::format_int(lat.readout),
                    rep::format_int(lat.total)});
  return rep::emit(t, run.format);
}

std::string run_sweep(const RunConfig& run, const std::string& kernel,
                      const std::string& sizes_csv, int width) {
  static const std::map<std::string, PrimKind> kKernels = {
      {"vector-add", PrimKind::Add},
      {"vector-sub", PrimKind::Sub},
      {"vector-mult", PrimKind::Mult},
      {"vector-div", PrimKind::DivRestoring},
  };
  const auto it = kKernels.find(kernel);
  if (it == kKernels.end()) {
    throw std::domain_error("unknown sweep kernel '" + kernel +
                            "' (expected vector-add, vector-sub, vector-mult, vector-div)");
  }
  std::vector<std::int64_t> sizes;
  for (const auto& part : split(sizes_csv, ',')) sizes.push_back(parse_size(part));

  rep::Table t;
  t.id = "sweep";
  t.note = kernel + " latency vs workload size (" + std::to_string(width) +
           "-bit, BS/BP speedup)";
  t.header = {"elements", "bp_batches", "bp_cycles", "bs_cycles", "speedup"};
  for (const auto& row : sweep(PrimitiveOp{it->second, width, 0}, 2, sizes, run.array)) {
    t.rows.push_back({rep::format_int(row.elements), rep::format_int(row.bp.batches),
                      rep::format_int(row.bp.total), rep::format_int(row.bs.total),
                      rep::format_double2(row.speedup)});
  }
  return rep::emit(t, run.format);
}

rep::Table aes_schedule_table(const app::AesResult& result, const ArrayConfig& config) {
  // Ordered phase,layout,compute,transpose_before view of the executed
  // schedule, reconstructed from the round trace.
  rep::Table t;
  t.id = "aes_schedule";
  t.note = "executed phase schedule (" + std::string(app::to_string(result.strategy)) + ")";
  t.header = {"phase", "layout", "compute", "transpose_before"};
  const std::int64_t each_way = result.transpose_each_way;
  (void)config;
  for (const auto& round : result.rounds) {
    // Transpositions bracket the BS phases; recover per-op charges.
    std::int64_t remaining = round.transpose_cycles;
    Mode current = Mode::BP;
    for (const auto& [op, cycles] : round.ops) {
      const auto& costs = app::aes_round_costs();
      Mode assigned = Mode::BP;
      for (const auto& c : costs) {
        if (c.operation == op) assigned = cycles == c.bs_cycles ? Mode::BS : Mode::BP;
      }
      std::int64_t before = 0;
      if (assigned != current && remaining >= each_way) {
        before = each_way;
        remaining -= each_way;
        current = assigned;
      }
      t.rows.push_back({round.label + " " + op, assigned == Mode::BP ? "BP" : "BS",
                        rep::format_int(cycles), rep::format_int(before)});
    }
  }
  return t;
}

std::string run_aes(const RunConfig& run, const std::string& strategy_name,
                    double transpose_mult) {
  const app::AesStrategy strategy = app::aes_strategy_from_string(strategy_name);
  const app::AesResult result = app::aes_total(strategy, run.array);

  rep::Table summary;
  summary.id = "aes_summary";
  summary.note = "AES-128 encryption cost, strategy " +
                 std::string(app::to_string(strategy));
  summary.header = {"metric", "value"};
  summary.rows.push_back({"total_cycles", rep::format_int(result.total)});
  summary.rows.push_back({"convention", result.convention});
  summary.rows.push_back({"standard_structure_total", rep::format_int(result.standard_total)});
  summary.rows.push_back({"uniform_rounds_total", rep::format_int(result.uniform_total)});
  summary.rows.push_back({"compute_cycles", rep::format_int(result.compute_cycles)});
  summary.rows.push_back({"transpose_cycles", rep::format_int(result.transpose_cycles)});
  summary.rows.push_back({"transpositions", rep::format_int(result.transpositions)});
  summary.rows.push_back(
      {"transpose_cost_each_way", rep::format_int(result.transpose_each_way)});
  summary.rows.push_back({"speedup_vs_static_bp", rep::format_double2(result.speedup_vs_bp)});

  rep::Table rounds;
  rounds.id = "aes_rounds";
  rounds.note = "per-round trace";
  rounds.header = {"round", "AddRoundKey", "SubBytes", "ShiftRows", "MixColumns",
                   "transpose", "total"};
  for (const auto& round : result.rounds) {
    std::map<std::string, std::int64_t> ops;
    for (const auto& [name, cycles] : round.ops) ops[name] = cycles;
    const auto cell = [&](const char* name) {
      return ops.count(name) ? rep::format_int(ops.at(name)) : std::string("-");
    };
    rounds.rows.push_back({round.label, cell("AddRoundKey"), cell("SubBytes"),
                           cell("ShiftRows"), cell("MixColumns"),
                           rep::format_int(round.transpose_cycles),
                           rep::format_int(round.total)});
  }

  std::vector<rep::Table> tables = {summary, rounds, aes_schedule_table(result, run.array)};

  if (transpose_mult != 1.0) {
    const app::AesSensitivity s = app::aes_sensitivity(transpose_mult, run.array);
    rep::Table sens;
    sens.id = "aes_sensitivity";
    sens.note = "hybrid robustness to slower transpose hardware";
    sens.header = {"metric", "value"};
    sens.rows.push_back({"core_multiplier", rep::format_double2(s.core_multiplier)});
    sens.rows.push_back({"hybrid_total", rep::format_int(s.hybrid_total)});
    sens.rows.push_back({"speedup_vs_static_bp", rep::format_double2(s.speedup_vs_bp)});
    sens.rows.push_back({"total_increase_pct", rep::format_double2(s.pct_increase)});
    tables.push_back(sens);
  }
  return emit_tables(tables, run.format);
}

std::string run_vgg(const RunConfig& run, const std::string& layers_path) {
  const auto layers = app::load_vgg_layers(layers_path);
  rep::Table t;
  t.id = "vgg_util";
  t.note = "per-layer resource utilization (16-bit elements)";
  t.header = {"layer", "elements", "bs_util", "bp_util"};
  for (const auto& u : app::vgg_utilization(layers, run.array)) {
    t.rows.push_back({u.layer, rep::format_int(u.elements), rep::format_percent1(u.bs_util),
                      rep::format_percent1(u.bp_util)});
  }
  return rep::emit(t, run.format);
}

void push_scratchpad_rows(rep::Table& t, const char* layout, const app::ScratchpadCase& c,
                          const ArrayConfig& config) {
  std::string detail;
  if (c.verdict.status == CapacityVerdict::Status::RowOverflow) {
    detail = "deficit " + rep::format_int(c.verdict.row_deficit) + " rows";
  } else if (c.verdict.status == CapacityVerdict::Status::ColumnBatching) {
    detail = rep::format_int(c.verdict.batches) + " batches";
  }
  t.rows.push_back({layout, rep::format_int(c.footprint.total_rows),
                    rep::format_int(config.rows), to_string(c.verdict.status), detail});
}

std::string run_challenge(const RunConfig& run, const std::string& which, int taps,
                          int live_vars, std::int64_t words, int width,
                          const std::string& widths_csv, const std::string& op_name,
                          std::int64_t dop) {
  std::vector<rep::Table> tables;
  if (which == "fir" || which == "predication") {
    const app::BufferingReport r = which == "fir"
                                       ? app::fir_report(taps, width, run.array)
                                       : app::predication_report(live_vars, width, run.array);
    rep::Table t;
    t.id = "challenge_" + which;
    t.note = rep::format_int(r.words) + " resident " + std::to_string(r.width) +
             "-bit words: scratchpad placement per layout";
    t.header = {"layout", "rows_needed", "array_rows", "verdict", "detail"};
    push_scratchpad_rows(t, "ES-BP", r.es_bp, run.array);
    push_scratchpad_rows(t, "ES-BS", r.es_bs, run.array);
    tables.push_back(t);
  } else if (which == "keccak") {
    const app::KeccakShuffleReport r = app::keccak_shuffle_report(words, width, run.array);
    rep::Table t;
    t.id = "challenge_keccak";
    t.note = "state permutation cost per layout (" + rep::format_int(r.state_words) + " x " +
             std::to_string(r.width) + "-bit state)";
    t.header = {"metric", "value"};
    t.rows.push_back({"es_bp_logical_shuffle_cycles", rep::format_int(r.es_bp_cycles)});
    t.rows.push_back({"es_bs_rows_needed", rep::format_int(r.es_bs.footprint.total_rows)});
    t.rows.push_back({"es_bs_verdict", to_string(r.es_bs.verdict.status)});
    t.rows.push_back({"es_bs_row_deficit", rep::format_int(r.es_bs.verdict.row_deficit)});
    t.rows.push_back({"moved_elements", rep::format_int(r.moved_elements)});
    t.rows.push_back({"ep_bs_physical_shuffle_cycles", rep::format_int(r.ep_bs_cycles)});
    t.rows.push_back({"move_model", r.move_model});
    tables.push_back(t);
  } else if (which == "mixed") {
    std::vector<app::PrecisionGroup> groups;
    for (const auto& part : split(widths_csv, ',')) {
      groups.push_back(
          app::PrecisionGroup{static_cast<int>(parse_int64(part, "width")), dop});
    }
    const app::MixedPrecisionReport r =
        app::mixed_precision_report(groups, prim_kind_from_string(op_name), run.array);
    rep::Table t;
    t.id = "challenge_mixed";
    t.note = "mixed-precision " + op_name + " over widths " + widths_csv;
    t.header = {"metric", "value"};
    t.rows.push_back({"bp_cycles", rep::format_int(r.bp_cycles)});
    t.rows.push_back({"bs_cycles_padded", rep::format_int(r.bs_cycles_padded)});
    t.rows.push_back({"padded_width", rep::format_int(r.padded_width)});
    t.rows.push_back({"conflict", r.conflict_note});
    tables.push_back(t);
  } else if (which == "utilization") {
    rep::Table t;
    t.id = "challenge_utilization";
    t.note = "resource utilization at a degree of parallelism of " + rep::format_int(dop);
    t.header = {"layout", "utilization"};
    t.rows.push_back(
        {"BS", rep::format_percent1(utilization(dop, BitMode::bs(), run.array))});
    t.rows.push_back(
        {"BP", rep::format_percent1(utilization(dop, BitMode::bp(width), run.array))});
    tables.push_back(t);
  } else {
    throw std::domain_error("unknown challenge '" + which +
                            "' (expected fir, predication, keccak, mixed, utilization)");
  }
  return emit_tables(tables, run.format);
}

std::string run_advise(const RunConfig& run, const std::string& workload_path) {
  const app::WorkloadDescriptor w = app::load_workload(workload_path);
  const app::Advice advice = app::advise(w, run.array);
  rep::Table t;
  t.id = "advice";
  t.note = "layout recommendation for " + workload_path;
  t.header = {"field", "value"};
  t.rows.push_back({"recommendation", to_string(advice.recommendation)});
  std::string causes;
  for (const auto& c : advice.root_causes) {
    if (!causes.empty()) causes += "; ";
    causes += c;
  }
  t.rows.push_back({"root_causes", causes});
  t.rows.push_back({"rationale", advice.rationale});
  return rep::emit(t, run.format);
}

int run_tables(const RunConfig& run, bool check, const std::string& golden_dir) {
  if (!check) {
    write_output(run, emit_tables(rep::render_all_tables(run.array), run.format));
    return kExitOk;
  }
  std::vector<rep::CellDiff> diffs;
  try {
    diffs = rep::verify_golden(golden_dir, run.array);
  } catch (const rep::GoldenFormatError& e) {
    std::cout << "golden structure error: " << e.what() << "\n";
    return kExitGoldenMismatch;
  }
  if (diffs.empty()) {
    write_output(run, "tables --check: all golden tables match\n");
    return kExitOk;
  }
  std::ostringstream out;
  for (const auto& d : diffs) {
    out << d.table << " row '" << d.row_key << "' column '" << d.column
        << "': generated " << d.generated << ", golden " << d.reference << "\n";
  }
  out << "tables --check: " << diffs.size() << " mismatch(es)\n";
  write_output(run, out.str());
  return kExitGoldenMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App cli{"Cycle-cost model and layout advisor for bit-parallel vs bit-serial "
               "processing-using-memory arrays"};
  cli.require_subcommand(1);

  GlobalFlags flags;
  cli.add_option("--rows", flags.rows, "physical rows per array (default 128)");
  cli.add_option("--cols", flags.cols, "columns per array (default 512)");
  cli.add_option("--arrays", flags.arrays,
                 "parallel arrays (default 1; sweep/vgg/tables default 512)");
  cli.add_option("--row-write", flags.row_write, "cycles per full-row write (default 1)");
  cli.add_option("--row-read", flags.row_read, "cycles per full-row read (default 1)");
  cli.add_option("--transpose-core", flags.transpose_core,
                 "transpose unit core cycles (default 1)");
  cli.add_option("--format", flags.format, "output format: markdown or csv");
  cli.add_option("--out", flags.out,
                 "output file (default stdout; PUMSIM_OUT_DIR prefixes relative paths)");
  cli.add_option("--config", flags.config_file, "key=value config file with the flags above");

  auto* cost = cli.add_subcommand("cost", "cycle cost of one primitive");
  std::string cost_op, cost_mode;
  int cost_width = 32;
  int cost_shift = 1;
  cost->add_option("op", cost_op, "primitive: logic|add|sub|mult|div|shift|mux|compare_sign")
      ->required();
  cost->add_option("width", cost_width, "operand bits")->required();
  cost->add_option("mode", cost_mode, "bp or bs")->required();
  cost->add_option("--shift-k", cost_shift, "shift distance for op=shift (default 1)");

  auto* kernel = cli.add_subcommand("kernel", "latency of a calibrated kernel");
  std::string kernel_name, kernel_mode = "bp", kernel_variant, kernel_elements;
  kernel->add_option("name", kernel_name, "catalog kernel name")->required();
  kernel->add_option("--mode", kernel_mode, "bp or bs")->required();
  kernel->add_option("--variant", kernel_variant, "catalog variant when ambiguous");
  kernel->add_option("--elements", kernel_elements,
                     "element count, K/M suffixes allowed (default: reference scale)");

  auto* sweep_cmd = cli.add_subcommand("sweep", "BP-vs-BS latency across workload sizes");
  std::string sweep_kernel, sweep_sizes = "1K,4K,16K,64K,256K";
  int sweep_width = 16;
  sweep_cmd->add_option("kernel", sweep_kernel, "vector-add|vector-sub|vector-mult|vector-div")
      ->required();
  sweep_cmd->add_option("--sizes", sweep_sizes, "comma list, K/M suffixes allowed");
  sweep_cmd->add_option("--width", sweep_width, "element bits (default 16)");

  auto* aes = cli.add_subcommand("aes", "AES-128 static vs hybrid execution study");
  std::string aes_strategy = "hybrid";
  double aes_mult = 1.0;
  aes->add_option("--strategy", aes_strategy, "bp, bs, or hybrid")->required();
  aes->add_option("--transpose-mult", aes_mult,
                  "also report hybrid totals with the transpose core scaled by this factor");

  auto* vgg = cli.add_subcommand("vgg", "per-layer utilization from a layer file");
  std::string vgg_layers;
  vgg->add_option("--layers", vgg_layers, "CSV file: layer,output_bits")->required();

  auto* challenge = cli.add_subcommand("challenge", "layout challenge case studies");
  std::string challenge_which, challenge_widths = "8,4", challenge_op = "add";
  int challenge_taps = 4;
  int challenge_vars = 10;
  std::int64_t challenge_words = 25;
  int challenge_width = 32;
  std::int64_t challenge_dop = 16;
  challenge->add_option("which", challenge_which,
                        "fir|predication|keccak|mixed|utilization")
      ->required();
  challenge->add_option("--taps", challenge_taps, "fir: filter taps (default 4)");
  challenge->add_option("--vars", challenge_vars, "predication: live variables (default 10)");
  challenge->add_option("--words", challenge_words, "keccak: state words (default 25)");
  challenge->add_option("--width", challenge_width,
                        "word bits (default 32; keccak uses 64 unless set)");
  challenge->add_option("--widths", challenge_widths, "mixed: comma list (default 8,4)");
  challenge->add_option("--op", challenge_op, "mixed: primitive (default add)");
  challenge->add_option("--dop", challenge_dop,
                        "utilization: active lanes (default 16)");

  auto* advise_cmd = cli.add_subcommand("advise", "recommend a layout for a workload");
  std::string advise_workload;
  advise_cmd->add_option("--workload", advise_workload, "key=value descriptor file")
      ->required();

  auto* tables = cli.add_subcommand("tables", "regenerate reference tables");
  bool tables_check = false;
  std::string golden_dir = "data/golden";
  tables->add_flag("--check", tables_check, "diff against the golden CSVs; exit 1 on mismatch");
  tables->add_option("--golden-dir", golden_dir, "golden CSV directory (default data/golden)");

  for (auto* sub : cli.get_subcommands({})) sub->fallthrough();

  try {
    cli.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return cli.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return cli.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "pumsim: " << e.what() << "\n\n" << cli.help() << std::flush;
    return kExitUsage;
  }

  try {
    const std::string sub = cli.get_subcommands().front()->get_name();
    const RunConfig run = resolve_config(cli, flags, sub);
    if (sub == "cost") {
      write_output(run, run_cost(run, cost_op, cost_width, cost_mode, cost_shift));
    } else if (sub == "kernel") {
      write_output(run,
                   run_kernel(run, kernel_name, kernel_mode, kernel_variant, kernel_elements));
    } else if (sub == "sweep") {
      write_output(run, run_sweep(run, sweep_kernel, sweep_sizes, sweep_width));
    } else if (sub == "aes") {
      write_output(run, run_aes(run, aes_strategy, aes_mult));
    } else if (sub == "vgg") {
      write_output(run, run_vgg(run, vgg_layers));
    } else if (sub == "challenge") {
      const int keccak_width =
          challenge->count("--width") > 0 ? challenge_width : 64;
      write_output(run, run_challenge(run, challenge_which, challenge_taps, challenge_vars,
                                      challenge_words,
                                      challenge_which == "keccak" ? keccak_width
                                                                  : challenge_width,
                                      challenge_widths, challenge_op, challenge_dop));
    } else if (sub == "advise") {
      write_output(run, run_advise(run, advise_workload));
    } else if (sub == "tables") {
      return run_tables(run, tables_check, golden_dir);
    }
  } catch (const std::exception& e) {
    std::cerr << "pumsim: error: " << e.what() << std::endl;
    return kExitUsage;
  }
  return kExitOk;
}
