#include "pumsim/appbench.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "pumsim/parse_util.hpp"

namespace pumsim::appbench {

// ---------------------------------------------------------------- AES-128

Mode AesOpCost::best_layout() const {
  return bs_cycles < bp_cycles ? Mode::BS : Mode::BP;
}

const std::vector<AesOpCost>& aes_round_costs() {
  // SubBytes in BP needs the full GF(2^8) inversion; in BS it runs as the
  // 115-gate bit-sliced circuit. The other three stages are word-shaped.
  static const std::vector<AesOpCost> costs = {
      {"AddRoundKey", 16, 128},
      {"SubBytes", 1568, 115},
      {"ShiftRows", 32, 256},
      {"MixColumns", 272, 2176},
  };
  return costs;
}

const char* to_string(AesStrategy strategy) {
  switch (strategy) {
    case AesStrategy::BP: return "bp";
    case AesStrategy::BS: return "bs";
    case AesStrategy::Hybrid: return "hybrid";
  }
  return "?";
}

AesStrategy aes_strategy_from_string(std::string_view text) {
  std::string t;
  for (unsigned char c : text) t.push_back(static_cast<char>(std::tolower(c)));
  if (t == "bp") return AesStrategy::BP;
  if (t == "bs") return AesStrategy::BS;
  if (t == "hybrid") return AesStrategy::Hybrid;
  throw std::domain_error("unknown AES strategy '" + std::string(text) +
                          "' (expected bp, bs, or hybrid)");
}

namespace {

Phase aes_phase(const AesOpCost& op) {
  return Phase{op.operation, op.bp_cycles, op.bs_cycles};
}

const AesOpCost& aes_op(const std::string& name) {
  for (const auto& op : aes_round_costs()) {
    if (op.operation == name) return op;
  }
  throw std::out_of_range("unknown AES operation " + name);
}

// Standard encryption order: whitening AddRoundKey, nine full rounds,
// and a final round without MixColumns.
std::vector<Phase> aes_standard_sequence() {
  std::vector<Phase> seq;
  seq.push_back(aes_phase(aes_op("AddRoundKey")));
  for (int round = 1; round <= kAesRounds; ++round) {
    seq.push_back(aes_phase(aes_op("SubBytes")));
    seq.push_back(aes_phase(aes_op("ShiftRows")));
    if (round < kAesRounds) seq.push_back(aes_phase(aes_op("MixColumns")));
    seq.push_back(aes_phase(aes_op("AddRoundKey")));
  }
  return seq;
}

// Ten identical AddRoundKey/SubBytes/ShiftRows/MixColumns rounds.
std::vector<Phase> aes_uniform_sequence() {
  std::vector<Phase> seq;
  for (int round = 1; round <= kAesRounds; ++round) {
    seq.push_back(aes_phase(aes_op("AddRoundKey")));
    seq.push_back(aes_phase(aes_op("SubBytes")));
    seq.push_back(aes_phase(aes_op("ShiftRows")));
    seq.push_back(aes_phase(aes_op("MixColumns")));
  }
  return seq;
}

Schedule aes_schedule(const std::vector<Phase>& phases, AesStrategy strategy,
                      const ArrayConfig& config) {
  switch (strategy) {
    case AesStrategy::BP: return schedule_static(phases, Mode::BP);
    case AesStrategy::BS: return schedule_static(phases, Mode::BS);
    case AesStrategy::Hybrid:
      return schedule_optimal(phases, kAesStateRowsBp, kAesStateRowsBs, config);
  }
  throw std::domain_error("unhandled AES strategy");
}

// Per-phase transposition charges for a schedule over state that arrives
// in BP (plaintext loads word-wise).
std::vector<std::int64_t> transpose_before(const std::vector<Phase>& phases,
                                           const Schedule& schedule,
                                           const ArrayConfig& config) {
  std::vector<std::int64_t> charges(phases.size(), 0);
  Mode current = Mode::BP;
  for (std::size_t i = 0; i < phases.size(); ++i) {
    const Mode here = schedule.assignment[i];
    if (here != current) {
      const TransposeJob job = current == Mode::BP
                                   ? TransposeJob{kAesStateRowsBp, kAesStateRowsBs}
                                   : TransposeJob{kAesStateRowsBs, kAesStateRowsBp};
      charges[i] = transpose_cost(job, config);
      current = here;
    }
  }
  return charges;
}

AesRoundTrace trace_window(const std::string& label, const std::vector<Phase>& phases,
                           const Schedule& schedule, const std::vector<std::int64_t>& charges,
                           std::size_t begin, std::size_t count) {
  AesRoundTrace row;
  row.label = label;
  for (std::size_t i = begin; i < begin + count; ++i) {
    const std::int64_t cycles = schedule.assignment[i] == Mode::BP ? phases[i].bp_cycles
                                                                   : phases[i].bs_cycles;
    row.ops.emplace_back(phases[i].name, cycles);
    row.transpose_cycles += charges[i];
    row.total += cycles + charges[i];
  }
  return row;
}

}  // namespace

AesResult aes_total(AesStrategy strategy, const ArrayConfig& config) {
  config.validate();
  const std::vector<Phase> standard = aes_standard_sequence();
  const std::vector<Phase> uniform = aes_uniform_sequence();
  const Schedule standard_schedule = aes_schedule(standard, strategy, config);
  const Schedule uniform_schedule = aes_schedule(uniform, strategy, config);

  AesResult result;
  result.strategy = strategy;
  result.standard_total = standard_schedule.grand_total;
  result.uniform_total = uniform_schedule.grand_total;
  result.transpose_each_way =
      transpose_cost(TransposeJob{kAesStateRowsBp, kAesStateRowsBs}, config);

  // BS results are reported over uniform rounds; BP and hybrid over the
  // standard structure. Both totals are always available above.
  const bool uniform_headline = strategy == AesStrategy::BS;
  const Schedule& headline = uniform_headline ? uniform_schedule : standard_schedule;
  const std::vector<Phase>& phases = uniform_headline ? uniform : standard;
  result.total = headline.grand_total;
  result.convention = uniform_headline
                          ? "ten uniform full rounds"
                          : "standard structure (initial AddRoundKey; final round without "
                            "MixColumns)";
  result.compute_cycles = headline.compute_total;
  result.transpose_cycles = headline.transpose_total;
  result.transpositions = headline.transpositions;
  result.breakdown =
      make_breakdown(0, result.compute_cycles, 0, result.transpose_cycles, 1);

  const std::int64_t bp_total = schedule_static(standard, Mode::BP).grand_total;
  result.speedup_vs_bp =
      static_cast<double>(bp_total) / static_cast<double>(result.total);

  const auto charges = strategy == AesStrategy::Hybrid
                           ? transpose_before(phases, headline, config)
                           : std::vector<std::int64_t>(phases.size(), 0);
  if (uniform_headline) {
    for (int round = 0; round < kAesRounds; ++round) {
      result.rounds.push_back(trace_window("round " + std::to_string(round + 1), phases,
                                           headline, charges, 4 * round, 4));
    }
  } else {
    // Display rounds pair each SubBytes/ShiftRows/MixColumns with the
    // AddRoundKey that precedes them, so a middle hybrid round reads
    // 16 + 115 + 32 + 272 + transpositions.
    for (int round = 0; round < kAesRounds - 1; ++round) {
      result.rounds.push_back(trace_window("round " + std::to_string(round + 1), phases,
                                           headline, charges, 4 * round, 4));
    }
    result.rounds.push_back(trace_window("round 10 (no MixColumns)", phases, headline,
                                         charges, 4 * (kAesRounds - 1), 3));
    result.rounds.push_back(trace_window("final AddRoundKey", phases, headline, charges,
                                         4 * (kAesRounds - 1) + 3, 1));
  }
  return result;
}

AesSensitivity aes_sensitivity(double core_multiplier, const ArrayConfig& config) {
  if (core_multiplier < 1.0) {
    throw std::domain_error("transpose core multiplier must be >= 1");
  }
  ArrayConfig scaled = config;
  scaled.transpose_core_cycles = static_cast<std::int64_t>(
      std::llround(static_cast<double>(config.transpose_core_cycles) * core_multiplier));
  const AesResult base = aes_total(AesStrategy::Hybrid, config);
  const AesResult bumped = aes_total(AesStrategy::Hybrid, scaled);

  AesSensitivity s;
  s.core_multiplier = core_multiplier;
  s.hybrid_total = bumped.total;
  s.speedup_vs_bp = bumped.speedup_vs_bp;
  s.pct_increase = 100.0 * static_cast<double>(bumped.total - base.total) /
                   static_cast<double>(base.total);
  return s;
}

// ---------------------------------------------------------------- VGG-13

std::vector<VggUtilization> vgg_utilization(const std::vector<VggLayer>& layers,
                                            const ArrayConfig& config, int element_width) {
  if (layers.empty()) throw std::invalid_argument("layer list is empty");
  if (element_width < 1) throw std::domain_error("element width must be >= 1");
  std::vector<VggUtilization> out;
  out.reserve(layers.size());
  const double columns = static_cast<double>(system_columns(config));
  for (const auto& layer : layers) {
    if (layer.output_bits <= 0) {
      throw std::domain_error("layer '" + layer.name + "' has no output bits");
    }
    VggUtilization u;
    u.layer = layer.name;
    u.elements = layer.output_bits / element_width;
    u.bs_util = std::min(1.0, static_cast<double>(u.elements) / columns);
    u.bp_util =
        std::min(1.0, static_cast<double>(u.elements) * element_width / columns);
    out.push_back(u);
  }
  return out;
}

std::vector<VggLayer> load_vgg_layers(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<VggLayer> layers;
  std::string line;
  int number = 0;
  bool seen_header = false;
  while (std::getline(in, line)) {
    ++number;
    const std::string t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    if (!seen_header && t == "layer,output_bits") {
      seen_header = true;
      continue;
    }
    const auto cells = split(t, ',');
    if (cells.size() != 2) {
      throw std::runtime_error(path + ":" + std::to_string(number) +
                               ": expected 'layer,output_bits', got '" + t + "'");
    }
    VggLayer layer;
    layer.name = trim(cells[0]);
    try {
      layer.output_bits = parse_int64(cells[1], "output_bits");
    } catch (const std::exception& e) {
      throw std::runtime_error(path + ":" + std::to_string(number) + ": " + e.what());
    }
    if (layer.output_bits <= 0) {
      throw std::runtime_error(path + ":" + std::to_string(number) +
                               ": output_bits must be > 0");
    }
    layers.push_back(std::move(layer));
  }
  if (layers.empty()) throw std::runtime_error(path + ": no layers found");
  return layers;
}

// ----------------------------------------------------- challenge studies

namespace {

ScratchpadCase scratchpad_case(std::int64_t words, int width, Mode mode,
                               const ArrayConfig& config) {
  LayoutSpec layout;
  layout.bit_mode = BitMode{mode, width};  // width used for footprint only
  layout.vector_org = VectorOrg::ElementSerial;
  ScratchpadCase c;
  c.footprint = scratchpad_footprint(words, width, layout, config);
  c.verdict = check_overflow(c.footprint, config);
  return c;
}

BufferingReport buffering_report(std::int64_t words, int width, const ArrayConfig& config) {
  BufferingReport r;
  r.words = words;
  r.width = width;
  r.es_bp = scratchpad_case(words, width, Mode::BP, config);
  r.es_bs = scratchpad_case(words, width, Mode::BS, config);
  return r;
}

}  // namespace

BufferingReport fir_report(int taps, int width, const ArrayConfig& config) {
  if (taps < 1) throw std::domain_error("tap count must be >= 1");
  // taps coefficients + taps state words + (taps - 2) spare product slots
  // + accumulator: 11 resident words for the 4-tap filter.
  const std::int64_t words = 3 * static_cast<std::int64_t>(taps) - 1;
  return buffering_report(words, width, config);
}

BufferingReport predication_report(int live_vars, int width, const ArrayConfig& config) {
  if (live_vars < 1) throw std::domain_error("live variable count must be >= 1");
  return buffering_report(live_vars, width, config);
}

const std::array<int, 25>& keccak_pi_source() {
  // Lane (x, y) at flat index 5x + y receives lane ((x + 3y) mod 5, x).
  static const std::array<int, 25> table = [] {
    std::array<int, 25> t{};
    for (int x = 0; x < 5; ++x) {
      for (int y = 0; y < 5; ++y) {
        t[5 * x + y] = 5 * ((x + 3 * y) % 5) + x;
      }
    }
    return t;
  }();
  return table;
}

KeccakShuffleReport keccak_shuffle_report(std::int64_t state_words, int width,
                                          const ArrayConfig& config) {
  if (state_words < 1) throw std::domain_error("state word count must be >= 1");
  if (width < 1) throw std::domain_error("word width must be >= 1");
  KeccakShuffleReport r;
  r.state_words = state_words;
  r.width = width;
  r.es_bp_cycles = 0;  // address remap only
  r.es_bs = scratchpad_case(state_words, width, Mode::BS, config);
  if (state_words == 25) {
    const auto& pi = keccak_pi_source();
    r.moved_elements = 0;
    for (int i = 0; i < 25; ++i) {
      if (pi[i] != i) ++r.moved_elements;
    }
  } else {
    // No pinned pattern at other sizes; assume every element displaced.
    r.moved_elements = state_words > 1 ? state_words : 0;
  }
  r.ep_bs_cycles =
      r.moved_elements * width * (config.row_read_cycles + config.row_write_cycles);
  r.move_model =
      "physical EP-BS shuffle: width x (row_read + row_write) cycles per displaced "
      "element; fixed points free";
  return r;
}

MixedPrecisionReport mixed_precision_report(const std::vector<PrecisionGroup>& groups,
                                            PrimKind op, const ArrayConfig& config) {
  config.validate();
  if (groups.empty()) throw std::invalid_argument("no precision groups given");
  std::set<int> widths;
  for (const auto& g : groups) {
    if (g.width < kMinBpWidth || g.width > kMaxBpWidth) {
      throw std::domain_error("group width must be in [" + std::to_string(kMinBpWidth) + ", " +
                              std::to_string(kMaxBpWidth) + "], got " +
                              std::to_string(g.width));
    }
    if (g.lanes < 1) throw std::domain_error("group lane count must be >= 1");
    widths.insert(g.width);
  }
  if (widths.size() < 2) {
    throw std::invalid_argument(
        "mixed-precision analysis needs at least two distinct widths");
  }

  MixedPrecisionReport r;
  r.padded_width = *widths.rbegin();
  // BP groups occupy disjoint lane sets and run concurrently.
  for (int w : widths) {
    r.bp_cycles = std::max(r.bp_cycles, primitive_cost(PrimitiveOp{op, w, 1}, Mode::BP));
  }
  // BS lanes share one broadcast bit index, so every group is padded to
  // the widest precision.
  r.bs_cycles_padded = primitive_cost(PrimitiveOp{op, r.padded_width, 1}, Mode::BS);
  std::ostringstream note;
  note << "out-of-bitwidth conflict: a broadcast bit-index command valid for " << r.padded_width
       << "-bit lanes exceeds the narrower groups; BS pads all groups to " << r.padded_width
       << " bits";
  r.conflict_note = note.str();
  return r;
}

// ------------------------------------------------- classification rules

std::string classify_speedup(double bs_over_bp) {
  if (!(bs_over_bp > 0.0)) {
    throw std::domain_error("BS/BP ratio must be > 0");
  }
  if (bs_over_bp >= 1.5) return "Strong BP preference";
  if (bs_over_bp >= 1.2) return "Moderate BP preference";
  if (bs_over_bp >= 1.0) return "Balanced";
  return "BS preference";
}

const std::vector<AppClassRow>& app_classification() {
  static const std::vector<AppClassRow> rows = {
      {"Strong BP preference", "Brightness, K-means, Keccak, FIR", "1.5-3.0x",
       "mixed arithmetic and control"},
      {"Moderate BP preference", "VGG-13, VGG-16/19, GEMM, GEMV, Conv, Downsample",
       "1.2-1.5x", "high arithmetic intensity, limited batching"},
      {"Balanced", "Vector-Add, AXPY, Pooling, Prefix-Sum", "1.0-1.15x",
       "batching neutralizes latency"},
      {"BS preference", "Histogram, HDC, Bitweave-DB", "0.6-0.9x",
       "bit-centric, full-density layouts"},
      {"Hybrid recommended", "AES, Radix-Sort", "2.66x vs best static", "phase diversity"},
  };
  return rows;
}

// ---------------------------------------------------------------- advisor

const char* to_string(OpClass c) {
  switch (c) {
    case OpClass::WordArithmetic: return "word_arithmetic";
    case OpClass::BitLevel: return "bit_level";
    case OpClass::ControlPredication: return "control_predication";
    case OpClass::MixedPrecision: return "mixed_precision";
    case OpClass::Permutation: return "permutation";
  }
  return "?";
}

OpClass op_class_from_string(std::string_view text) {
  const std::string t = trim(text);
  if (t == "word_arithmetic") return OpClass::WordArithmetic;
  if (t == "bit_level") return OpClass::BitLevel;
  if (t == "control_predication") return OpClass::ControlPredication;
  if (t == "mixed_precision") return OpClass::MixedPrecision;
  if (t == "permutation") return OpClass::Permutation;
  throw std::domain_error(
      "unknown op class '" + t +
      "' (expected word_arithmetic, bit_level, control_predication, mixed_precision, "
      "permutation)");
}

const char* to_string(Recommendation r) {
  switch (r) {
    case Recommendation::BP: return "BP";
    case Recommendation::BS: return "BS";
    case Recommendation::Hybrid: return "Hybrid";
  }
  return "?";
}

void WorkloadDescriptor::validate() const {
  if (degree_of_parallelism < 1) {
    throw std::domain_error("degree_of_parallelism must be >= 1");
  }
  if (word_widths.empty()) {
    throw std::domain_error("word_widths must not be empty");
  }
  for (int w : word_widths) {
    if (w < 1) throw std::domain_error("word widths must be >= 1");
  }
  if (working_set_elements < 0) {
    throw std::domain_error("working_set_elements must be >= 0");
  }
}

namespace {

bool favors_bs(OpClass c) {
  return c == OpClass::BitLevel;
}

void add_cause(std::vector<std::string>& causes, const char* cause) {
  if (std::find(causes.begin(), causes.end(), cause) == causes.end()) {
    causes.emplace_back(cause);
  }
}

void add_class_causes(std::vector<std::string>& causes, OpClass c) {
  switch (c) {
    case OpClass::WordArithmetic:
      add_cause(causes, kInherentLatency);
      break;
    case OpClass::BitLevel:
      add_cause(causes, kGranularityMismatch);
      break;
    case OpClass::ControlPredication:
      add_cause(causes, kVerticalStorageBottleneck);
      add_cause(causes, kLockstepControlConflict);
      break;
    case OpClass::MixedPrecision:
      add_cause(causes, kLockstepControlConflict);
      break;
    case OpClass::Permutation:
      add_cause(causes, kVerticalStorageBottleneck);
      break;
  }
}

void sort_causes(std::vector<std::string>& causes) {
  const std::vector<std::string> order = {kGranularityMismatch, kVerticalStorageBottleneck,
                                          kLockstepControlConflict, kInherentLatency};
  std::sort(causes.begin(), causes.end(), [&](const std::string& a, const std::string& b) {
    return std::find(order.begin(), order.end(), a) < std::find(order.begin(), order.end(), b);
  });
}

}  // namespace

Advice advise(const WorkloadDescriptor& w, const ArrayConfig& config) {
  w.validate();
  config.validate();

  std::vector<OpClass> classes = w.phase_classes;
  if (classes.empty()) classes.push_back(w.dominant_op_class);
  const bool has_bs_phase = std::any_of(classes.begin(), classes.end(), favors_bs);
  const bool has_bp_phase =
      std::any_of(classes.begin(), classes.end(), [](OpClass c) { return !favors_bs(c); });

  const std::int64_t bs_capacity = lane_capacity(config, BitMode::bs());
  const bool saturates_bs = w.degree_of_parallelism >= bs_capacity;
  const std::set<int> widths(w.word_widths.begin(), w.word_widths.end());

  Advice advice;
  if (has_bs_phase && has_bp_phase) {
    advice.recommendation = Recommendation::Hybrid;
    for (OpClass c : classes) add_class_causes(advice.root_causes, c);
    sort_causes(advice.root_causes);
    advice.rationale =
        "phases with conflicting layout affinities; switch layouts at phase boundaries "
        "when the transpose overhead stays below the per-phase savings";
    return advice;
  }

  if (w.dominant_op_class == OpClass::BitLevel && saturates_bs && !w.latency_critical) {
    advice.recommendation = Recommendation::BS;
    add_cause(advice.root_causes, kGranularityMismatch);
    advice.rationale = "bit-level work at a degree of parallelism of " +
                       std::to_string(w.degree_of_parallelism) + " saturates all " +
                       std::to_string(bs_capacity) +
                       " single-bit lanes; full-density BS wins";
    return advice;
  }

  advice.recommendation = Recommendation::BP;
  for (OpClass c : classes) add_class_causes(advice.root_causes, c);
  if (!saturates_bs) add_cause(advice.root_causes, kGranularityMismatch);
  if (w.latency_critical) add_cause(advice.root_causes, kInherentLatency);
  if (widths.size() >= 2) add_cause(advice.root_causes, kLockstepControlConflict);
  sort_causes(advice.root_causes);
  std::ostringstream why;
  why << "word-granular execution suits this workload";
  if (!saturates_bs) {
    why << "; a degree of parallelism of " << w.degree_of_parallelism << " cannot fill "
        << bs_capacity << " single-bit lanes";
  }
  if (w.latency_critical) why << "; per-operation latency matters";
  advice.rationale = why.str();
  return advice;
}

WorkloadDescriptor load_workload(const std::string& path) {
  WorkloadDescriptor w;
  bool saw_dominant = false;
  bool saw_dop = false;
  bool saw_widths = false;
  for (const auto& kv : read_key_value_file(path)) {
    const auto fail = [&](const std::string& message) -> std::runtime_error {
      return std::runtime_error(path + ":" + std::to_string(kv.line) + ": " + message);
    };
    try {
      if (kv.key == "dominant_op_class") {
        w.dominant_op_class = op_class_from_string(kv.value);
        saw_dominant = true;
      } else if (kv.key == "phase_classes") {
        for (const auto& part : split(kv.value, ',')) {
          w.phase_classes.push_back(op_class_from_string(part));
        }
      } else if (kv.key == "degree_of_parallelism") {
        w.degree_of_parallelism = parse_int64(kv.value, kv.key);
        saw_dop = true;
      } else if (kv.key == "word_widths") {
        for (const auto& part : split(kv.value, ',')) {
          w.word_widths.push_back(static_cast<int>(parse_int64(part, kv.key)));
        }
        saw_widths = true;
      } else if (kv.key == "working_set_elements") {
        w.working_set_elements = parse_int64(kv.value, kv.key);
      } else if (kv.key == "latency_critical") {
        if (kv.value == "true" || kv.value == "1") {
          w.latency_critical = true;
        } else if (kv.value == "false" || kv.value == "0") {
          w.latency_critical = false;
        } else {
          throw fail("latency_critical must be true/false");
        }
      } else {
        throw fail("unknown key '" + kv.key + "'");
      }
    } catch (const ParseError& e) {
      throw fail(e.what());
    } catch (const std::domain_error& e) {
      throw fail(e.what());
    }
  }
  if (!saw_dominant) throw std::runtime_error(path + ": missing dominant_op_class");
  if (!saw_dop) throw std::runtime_error(path + ": missing degree_of_parallelism");
  if (!saw_widths) throw std::runtime_error(path + ": missing word_widths");
  w.validate();
  return w;
}

}  // namespace pumsim::appbench
