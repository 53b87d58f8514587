#include <doctest.h>

#include <random>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "pumsim/schedule.hpp"
#include "test_support.hpp"

using namespace pumsim;
using pumtest::baseline;

namespace {

const std::vector<Phase> kAesRound = {
    {"AddRoundKey", 16, 128},
    {"SubBytes", 1568, 115},
    {"ShiftRows", 32, 256},
    {"MixColumns", 272, 2176},
};

struct BruteResult {
  std::int64_t total = 0;
  std::int64_t bs_phases = 0;
  std::int64_t switches = 0;
};

// Exhaustive enumeration with the same tie-break key as the scheduler.
BruteResult brute_force(const std::vector<Phase>& phases, std::int64_t rows_bp,
                        std::int64_t rows_bs, const ArrayConfig& config,
                        const ScheduleOptions& options = {}) {
  const std::int64_t bp_to_bs = transpose_cost(TransposeJob{rows_bp, rows_bs}, config);
  const std::int64_t bs_to_bp = transpose_cost(TransposeJob{rows_bs, rows_bp}, config);
  BruteResult best;
  bool first = true;
  for (std::uint64_t mask = 0; mask < (1ull << phases.size()); ++mask) {
    BruteResult r;
    Mode current = options.initial_layout;
    for (std::size_t i = 0; i < phases.size(); ++i) {
      const Mode m = (mask >> i) & 1 ? Mode::BS : Mode::BP;
      if (m != current) {
        if (i > 0 || options.charge_entry_conversion) {
          r.total += current == Mode::BP ? bp_to_bs : bs_to_bp;
          ++r.switches;
        }
        current = m;
      }
      r.total += m == Mode::BP ? phases[i].bp_cycles : phases[i].bs_cycles;
      if (m == Mode::BS) ++r.bs_phases;
    }
    if (options.charge_final_conversion && current != options.initial_layout) {
      r.total += current == Mode::BP ? bp_to_bs : bs_to_bp;
      ++r.switches;
    }
    const auto key = [](const BruteResult& x) {
      return std::make_tuple(x.total, x.bs_phases, x.switches);
    };
    if (first || key(r) < key(best)) {
      best = r;
      first = false;
    }
  }
  return best;
}

std::vector<Phase> random_phases(std::mt19937& rng, int max_phases = 12) {
  std::uniform_int_distribution<int> count(1, max_phases);
  std::uniform_int_distribution<std::int64_t> cost(1, 3000);
  std::vector<Phase> phases(count(rng));
  for (auto& p : phases) {
    p.bp_cycles = cost(rng);
    p.bs_cycles = cost(rng);
  }
  return phases;
}

}  // namespace

TEST_CASE("transpose cost follows read + core + write") {
  const ArrayConfig config = baseline();
  CHECK(transpose_cost(TransposeJob{16, 128}, config) == 145);
  CHECK(transpose_cost(TransposeJob{128, 16}, config) == 145);

  ArrayConfig slow = config;
  slow.transpose_core_cycles = 10;
  CHECK(transpose_cost(TransposeJob{16, 128}, slow) == 154);
  CHECK_THROWS_AS(transpose_cost(TransposeJob{0, 16}, config), std::domain_error);
}

TEST_CASE("transpose cost is symmetric when read and write rates match") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<std::int64_t> rows(1, 4096);
  for (int trial = 0; trial < 100; ++trial) {
    ArrayConfig config = baseline();
    config.row_read_cycles = config.row_write_cycles = 1 + trial % 3;
    const std::int64_t m = rows(rng);
    const std::int64_t n = rows(rng);
    CHECK(transpose_cost(TransposeJob{m, n}, config) ==
          transpose_cost(TransposeJob{n, m}, config));
  }
}

TEST_CASE("static schedules") {
  CHECK(schedule_static(kAesRound, Mode::BP).grand_total == 1888);
  CHECK(schedule_static(kAesRound, Mode::BS).grand_total == 2675);
  CHECK(schedule_static(kAesRound, Mode::BP).transpose_total == 0);
  CHECK(schedule_static({{"idle", 0, 0}}, Mode::BP).grand_total == 0);
  CHECK_THROWS_AS(schedule_static({}, Mode::BP), std::invalid_argument);
}

TEST_CASE("optimal schedule finds the AES hybrid") {
  const Schedule s = schedule_optimal(kAesRound, 16, 128, baseline());
  CHECK(s.grand_total == 725);
  CHECK(s.compute_total == 435);
  CHECK(s.transpose_total == 290);
  CHECK(s.transpositions == 2);
  REQUIRE(s.assignment.size() == 4);
  CHECK(s.assignment[0] == Mode::BP);
  CHECK(s.assignment[1] == Mode::BS);
  CHECK(s.assignment[2] == Mode::BP);
  CHECK(s.assignment[3] == Mode::BP);
}

TEST_CASE("all-BP dominance keeps transposes at zero") {
  const std::vector<Phase> phases = {{"a", 5, 50}, {"b", 7, 70}, {"c", 9, 90}};
  const Schedule s = schedule_optimal(phases, 16, 128, baseline());
  CHECK(s.transpose_total == 0);
  for (Mode m : s.assignment) CHECK(m == Mode::BP);
  CHECK(s.grand_total == schedule_static(phases, Mode::BP).grand_total);
}

TEST_CASE("ties break toward BP") {
  // Equal costs everywhere: BP assignment with no switches must win.
  const std::vector<Phase> phases = {{"a", 10, 10}, {"b", 10, 10}};
  const Schedule s = schedule_optimal(phases, 16, 128, baseline());
  for (Mode m : s.assignment) CHECK(m == Mode::BP);
  CHECK(s.transpositions == 0);
}

TEST_CASE("optimal schedule matches exhaustive enumeration") {
  std::mt19937 rng(42);
  for (int trial = 0; trial < 300; ++trial) {
    const auto phases = random_phases(rng);
    ScheduleOptions options;
    options.initial_layout = trial % 2 == 0 ? Mode::BP : Mode::BS;
    options.charge_entry_conversion = trial % 5 == 0;
    options.charge_final_conversion = trial % 3 == 0;
    ArrayConfig config = baseline();
    config.transpose_core_cycles = 1 + trial % 20;
    const std::int64_t rows_bp = 1 + trial % 64;
    const std::int64_t rows_bs = 1 + (trial * 7) % 512;
    const Schedule dp = schedule_optimal(phases, rows_bp, rows_bs, config, options);
    const BruteResult brute = brute_force(phases, rows_bp, rows_bs, config, options);
    CHECK(dp.grand_total == brute.total);
    CHECK(dp.transpositions == brute.switches);
    // Recompute the DP result from its own assignment.
    std::int64_t recomputed = 0;
    Mode current = options.initial_layout;
    const std::int64_t bp_to_bs = transpose_cost(TransposeJob{rows_bp, rows_bs}, config);
    const std::int64_t bs_to_bp = transpose_cost(TransposeJob{rows_bs, rows_bp}, config);
    for (std::size_t i = 0; i < phases.size(); ++i) {
      if (dp.assignment[i] != current) {
        if (i > 0 || options.charge_entry_conversion) {
          recomputed += current == Mode::BP ? bp_to_bs : bs_to_bp;
        }
        current = dp.assignment[i];
      }
      recomputed += current == Mode::BP ? phases[i].bp_cycles : phases[i].bs_cycles;
    }
    if (options.charge_final_conversion && current != options.initial_layout) {
      recomputed += current == Mode::BP ? bp_to_bs : bs_to_bp;
    }
    CHECK(recomputed == dp.grand_total);
  }
}

TEST_CASE("optimal schedule never exceeds the better static choice") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const auto phases = random_phases(rng);
    const Schedule dp = schedule_optimal(phases, 16, 128, baseline());
    // Constant assignments stay admissible: all-BP is free to enter, and
    // all-BS pays the one entry conversion from the BP arrival layout.
    CHECK(dp.grand_total <= schedule_static(phases, Mode::BP).grand_total);
    CHECK(dp.grand_total <= schedule_static(phases, Mode::BS).grand_total +
                                transpose_cost(TransposeJob{16, 128}, baseline()));
  }
}

TEST_CASE("grand total is monotone in the transpose core cost") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    const auto phases = random_phases(rng);
    std::int64_t prev = -1;
    for (std::int64_t core = 1; core <= 40; ++core) {
      ArrayConfig config = baseline();
      config.transpose_core_cycles = core;
      const std::int64_t total = schedule_optimal(phases, 16, 128, config).grand_total;
      CHECK(total >= prev);
      prev = total;
    }
  }
}

TEST_CASE("schedules are deterministic") {
  std::mt19937 rng(5);
  const auto phases = random_phases(rng);
  const Schedule a = schedule_optimal(phases, 16, 128, baseline());
  const Schedule b = schedule_optimal(phases, 16, 128, baseline());
  CHECK(a.assignment == b.assignment);
  CHECK(a.grand_total == b.grand_total);
}

TEST_CASE("profitability rule") {
  const ProfitabilityVerdict aes = profitability(14530, 2900);
  CHECK(aes.profitable);
  CHECK(aes.margin == 11630);
  CHECK(aes.overhead_share == doctest::Approx(0.1996).epsilon(0.001));

  CHECK_FALSE(profitability(0, 1).profitable);
  CHECK_FALSE(profitability(100, 100).profitable);  // strict inequality
  CHECK(profitability(100, 99).profitable);
  CHECK(ProfitabilityVerdict::kRuleOfThumbCycles == 51);
  CHECK(ProfitabilityVerdict::kRuleOfThumbPct == doctest::Approx(2.0));
}
