#ifndef PUMSIM_APPBENCH_HPP
#define PUMSIM_APPBENCH_HPP

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pumsim/array_config.hpp"
#include "pumsim/latency.hpp"
#include "pumsim/placement.hpp"
#include "pumsim/schedule.hpp"

namespace pumsim::appbench {

// ---------------------------------------------------------------- AES-128

struct AesOpCost {
  std::string operation;
  std::int64_t bp_cycles = 0;
  std::int64_t bs_cycles = 0;

  Mode best_layout() const;  // recomputed argmin, ties toward BP
};

// Calibrated per-round costs of the four AES-128 stages.
const std::vector<AesOpCost>& aes_round_costs();

// Rows occupied by the 128-bit AES state: 16 rows of one byte in BP,
// 128 single-bit rows in BS.
inline constexpr std::int64_t kAesStateRowsBp = 16;
inline constexpr std::int64_t kAesStateRowsBs = 128;
inline constexpr int kAesRounds = 10;

enum class AesStrategy { BP, BS, Hybrid };

const char* to_string(AesStrategy strategy);
AesStrategy aes_strategy_from_string(std::string_view text);

struct AesRoundTrace {
  std::string label;
  std::vector<std::pair<std::string, std::int64_t>> ops;  // (operation, cycles)
  std::int64_t transpose_cycles = 0;
  std::int64_t total = 0;
};

struct AesResult {
  AesStrategy strategy = AesStrategy::BP;
  // Headline total in the convention each strategy is reported under:
  // BP and Hybrid use the standard structure (initial AddRoundKey, final
  // round without MixColumns); BS uses ten uniform full rounds.
  std::int64_t total = 0;
  std::string convention;
  std::int64_t standard_total = 0;  // initial ARK + 10 rounds, last one MC-free
  std::int64_t uniform_total = 0;   // 10 identical full rounds
  std::int64_t compute_cycles = 0;
  std::int64_t transpose_cycles = 0;
  int transpositions = 0;
  std::int64_t transpose_each_way = 0;  // per-conversion cost
  double speedup_vs_bp = 0.0;           // static-BP total / this total
  LatencyBreakdown breakdown;
  std::vector<AesRoundTrace> rounds;
};

// Full AES-128 encryption cost under a static layout or the hybrid
// schedule. Hybrid assignments come from the phase-scheduler DP over the
// whole operation sequence (initial layout BP, no final conversion).
AesResult aes_total(AesStrategy strategy, const ArrayConfig& config);

struct AesSensitivity {
  double core_multiplier = 1.0;
  std::int64_t hybrid_total = 0;
  double speedup_vs_bp = 0.0;
  double pct_increase = 0.0;  // hybrid total growth vs multiplier 1, percent
};

// Hybrid robustness to slower transpose hardware: scales the transpose
// core cycles by `core_multiplier` (>= 1) and recomputes.
AesSensitivity aes_sensitivity(double core_multiplier, const ArrayConfig& config);

// ---------------------------------------------------------------- VGG-13

struct VggLayer {
  std::string name;
  std::int64_t output_bits = 0;  // 16-bit elements upstream
};

struct VggUtilization {
  std::string layer;
  std::int64_t elements = 0;
  double bs_util = 0.0;
  double bp_util = 0.0;
};

std::vector<VggUtilization> vgg_utilization(const std::vector<VggLayer>& layers,
                                            const ArrayConfig& config, int element_width = 16);

// CSV `layer,output_bits`; parse errors name the line number.
std::vector<VggLayer> load_vgg_layers(const std::string& path);

// ----------------------------------------------------- challenge studies

struct ScratchpadCase {
  Footprint footprint;
  CapacityVerdict verdict;
};

struct BufferingReport {
  std::int64_t words = 0;
  int width = 0;
  ScratchpadCase es_bp;
  ScratchpadCase es_bs;
};

// FIR scratchpad pressure: taps coefficients + taps state words +
// intermediate products and the accumulator (3*taps - 1 words resident).
BufferingReport fir_report(int taps, int width, const ArrayConfig& config);

// Predicated execution keeps both branch outcomes and the mask live.
BufferingReport predication_report(int live_vars, int width, const ArrayConfig& config);

struct KeccakShuffleReport {
  std::int64_t state_words = 0;
  int width = 0;
  std::int64_t es_bp_cycles = 0;  // logical shuffle: address remap, free
  ScratchpadCase es_bs;           // vertical storage verdict
  std::int64_t moved_elements = 0;
  std::int64_t ep_bs_cycles = 0;  // physical shuffle
  std::string move_model;
};

// Cost of the Keccak state permutation under each viable layout. The
// 25-lane pattern is the real one; other sizes assume full displacement.
KeccakShuffleReport keccak_shuffle_report(std::int64_t state_words, int width,
                                          const ArrayConfig& config);

// pi[dst] = source lane index feeding lane dst (5x5 lane grid).
const std::array<int, 25>& keccak_pi_source();

struct PrecisionGroup {
  int width = 0;
  std::int64_t lanes = 1;
};

struct MixedPrecisionReport {
  std::int64_t bp_cycles = 0;         // groups run side by side: max per-group cost
  std::int64_t bs_cycles_padded = 0;  // lock-step run at the widest precision
  int padded_width = 0;
  std::string conflict_note;
};

// Requires at least two distinct widths (std::invalid_argument otherwise).
MixedPrecisionReport mixed_precision_report(const std::vector<PrecisionGroup>& groups,
                                            PrimKind op, const ArrayConfig& config);

// ------------------------------------------------- classification rules

// Buckets a BS/BP cycle ratio; partitions (0, inf) with no gaps.
std::string classify_speedup(double bs_over_bp);

struct AppClassRow {
  std::string category;
  std::string applications;
  std::string speedup_range;
  std::string dominant_factor;
};

// Observed application groupings by layout preference (reference data).
const std::vector<AppClassRow>& app_classification();

// ---------------------------------------------------------------- advisor

enum class OpClass {
  WordArithmetic,
  BitLevel,
  ControlPredication,
  MixedPrecision,
  Permutation,
};

const char* to_string(OpClass c);
OpClass op_class_from_string(std::string_view text);

struct WorkloadDescriptor {
  OpClass dominant_op_class = OpClass::WordArithmetic;
  std::vector<OpClass> phase_classes;  // empty means single-phase workload
  std::int64_t degree_of_parallelism = 1;
  std::vector<int> word_widths;
  std::int64_t working_set_elements = 0;
  bool latency_critical = false;

  void validate() const;
};

enum class Recommendation { BP, BS, Hybrid };

const char* to_string(Recommendation r);

// The four architectural root causes the rules trace back to.
inline constexpr const char* kGranularityMismatch = "granularity mismatch";
inline constexpr const char* kVerticalStorageBottleneck = "vertical storage bottleneck";
inline constexpr const char* kLockstepControlConflict = "lockstep control conflict";
inline constexpr const char* kInherentLatency = "inherent latency";

struct Advice {
  Recommendation recommendation = Recommendation::BP;
  std::vector<std::string> root_causes;
  std::string rationale;
};

// Deterministic rule engine mapping workload characteristics to a layout.
// The high/low parallelism cut is BS lane saturation (system columns).
Advice advise(const WorkloadDescriptor& w, const ArrayConfig& config);

// Flat key=value file; parse errors name the line number.
WorkloadDescriptor load_workload(const std::string& path);

}  // namespace pumsim::appbench

#endif  // PUMSIM_APPBENCH_HPP
