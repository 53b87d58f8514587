#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <stdexcept>

#include "pumsim/appbench.hpp"
#include "test_support.hpp"

using namespace pumsim;
namespace app = pumsim::appbench;
using pumtest::baseline;
using pumtest::data_dir;
using pumtest::evaluation_system;

TEST_CASE("AES per-operation costs and recomputed best layout") {
  const auto& costs = app::aes_round_costs();
  REQUIRE(costs.size() == 4);
  std::int64_t bp_sum = 0;
  std::int64_t bs_sum = 0;
  for (const auto& op : costs) {
    bp_sum += op.bp_cycles;
    bs_sum += op.bs_cycles;
    if (op.operation == "SubBytes") {
      CHECK(op.bp_cycles == 1568);
      CHECK(op.bs_cycles == 115);
      CHECK(op.best_layout() == Mode::BS);
    } else {
      CHECK(op.best_layout() == Mode::BP);
    }
  }
  CHECK(bp_sum == 1888);
  CHECK(bs_sum == 2675);
}

TEST_CASE("AES static and hybrid totals") {
  const app::AesResult bp = app::aes_total(app::AesStrategy::BP, baseline());
  CHECK(bp.total == 18624);
  CHECK(bp.standard_total == 18624);
  CHECK(bp.uniform_total == 18880);
  CHECK(bp.transpose_cycles == 0);
  CHECK(bp.speedup_vs_bp == doctest::Approx(1.0));

  const app::AesResult bs = app::aes_total(app::AesStrategy::BS, baseline());
  CHECK(bs.total == 26750);
  CHECK(bs.uniform_total == 26750);
  CHECK(bs.standard_total == 24702);
  CHECK(bs.transpose_cycles == 0);

  const app::AesResult hybrid = app::aes_total(app::AesStrategy::Hybrid, baseline());
  CHECK(hybrid.total == 6994);
  CHECK(hybrid.uniform_total == 7250);
  CHECK(hybrid.transpose_cycles == 2900);
  CHECK(hybrid.transpositions == 20);
  CHECK(hybrid.transpose_each_way == 145);
  CHECK(hybrid.compute_cycles == 4094);
  CHECK(hybrid.speedup_vs_bp >= 2.65);
  CHECK(hybrid.speedup_vs_bp <= 2.67);
  CHECK(hybrid.total < bp.total);
  CHECK(hybrid.total < bs.total);
  CHECK(hybrid.breakdown.total == hybrid.total);
}

TEST_CASE("AES hybrid per-round trace") {
  const app::AesResult hybrid = app::aes_total(app::AesStrategy::Hybrid, baseline());
  REQUIRE(hybrid.rounds.size() == 11);  // 10 rounds + the final AddRoundKey
  const auto& round1 = hybrid.rounds.front();
  REQUIRE(round1.ops.size() == 4);
  CHECK(round1.ops[0] == std::pair<std::string, std::int64_t>{"AddRoundKey", 16});
  CHECK(round1.ops[1] == std::pair<std::string, std::int64_t>{"SubBytes", 115});
  CHECK(round1.ops[2] == std::pair<std::string, std::int64_t>{"ShiftRows", 32});
  CHECK(round1.ops[3] == std::pair<std::string, std::int64_t>{"MixColumns", 272});
  CHECK(round1.transpose_cycles == 290);
  CHECK(round1.total == 725);
  for (int r = 0; r < 9; ++r) CHECK(hybrid.rounds[r].total == 725);
  CHECK(hybrid.rounds[9].total == 453);   // no MixColumns
  CHECK(hybrid.rounds[10].total == 16);   // trailing AddRoundKey
  std::int64_t sum = 0;
  for (const auto& r : hybrid.rounds) sum += r.total;
  CHECK(sum == hybrid.total);

  // Static traces add up too, with no transpositions anywhere.
  const app::AesResult bs = app::aes_total(app::AesStrategy::BS, baseline());
  REQUIRE(bs.rounds.size() == 10);
  std::int64_t bs_sum = 0;
  for (const auto& r : bs.rounds) {
    CHECK(r.transpose_cycles == 0);
    CHECK(r.total == 2675);
    bs_sum += r.total;
  }
  CHECK(bs_sum == 26750);
}

TEST_CASE("AES transpose sensitivity") {
  const app::AesSensitivity ten = app::aes_sensitivity(10.0, baseline());
  CHECK(ten.hybrid_total == 7174);
  CHECK(ten.speedup_vs_bp >= 2.58);
  CHECK(ten.speedup_vs_bp <= 2.60);
  CHECK(ten.pct_increase >= 2.5);
  CHECK(ten.pct_increase <= 2.7);

  const app::AesSensitivity one = app::aes_sensitivity(1.0, baseline());
  CHECK(one.hybrid_total == 6994);
  CHECK(one.pct_increase == doctest::Approx(0.0));

  const app::AesSensitivity two = app::aes_sensitivity(2.0, baseline());
  CHECK(two.hybrid_total == 7014);  // 20 transpositions, one extra core cycle each

  CHECK_THROWS_AS(app::aes_sensitivity(0.5, baseline()), std::domain_error);
}

TEST_CASE("AES profitability accounting matches the hybrid study") {
  const app::AesResult bp = app::aes_total(app::AesStrategy::BP, baseline());
  const app::AesResult hybrid = app::aes_total(app::AesStrategy::Hybrid, baseline());
  const std::int64_t savings = bp.total - hybrid.compute_cycles;
  CHECK(savings == 14530);
  const ProfitabilityVerdict verdict = profitability(savings, hybrid.transpose_cycles);
  CHECK(verdict.profitable);
  CHECK(verdict.overhead_share == doctest::Approx(0.20).epsilon(0.01));
}

TEST_CASE("VGG utilization from the calibration layer file") {
  const auto layers = app::load_vgg_layers(data_dir() + "/vgg13_layers.csv");
  REQUIRE(layers.size() == 5);
  const auto util = app::vgg_utilization(layers, evaluation_system());

  // Early blocks saturate both layouts.
  for (int i = 0; i < 3; ++i) {
    CHECK(util[i].bs_util == doctest::Approx(1.0));
    CHECK(util[i].bp_util == doctest::Approx(1.0));
  }
  // conv4: BS starves, BP stays full.
  CHECK(util[3].bs_util * 100 == doctest::Approx(17.0).epsilon(0.06));
  CHECK(util[3].bp_util == doctest::Approx(1.0));
  // conv5: both degrade, BP 16x less.
  CHECK(util[4].bs_util * 100 == doctest::Approx(4.0).epsilon(0.25));
  CHECK(util[4].bp_util * 100 == doctest::Approx(68.0).epsilon(0.015));

  // Monotone decay and the BP >= BS dominance.
  for (std::size_t i = 1; i < util.size(); ++i) {
    CHECK(util[i].bs_util <= util[i - 1].bs_util);
  }
  for (const auto& u : util) CHECK(u.bp_util >= u.bs_util);
}

TEST_CASE("VGG utilization spot values") {
  // Back-solved calibration points.
  std::vector<app::VggLayer> layers = {{"a", 44565 * 16}, {"b", 11141 * 16}};
  const auto util = app::vgg_utilization(layers, evaluation_system());
  CHECK(util[0].bs_util * 100 == doctest::Approx(17.0).epsilon(0.01));
  CHECK(util[1].bp_util * 100 == doctest::Approx(68.0).epsilon(0.01));
  CHECK_THROWS_AS(app::vgg_utilization({}, evaluation_system()), std::invalid_argument);
  CHECK_THROWS_AS(app::vgg_utilization({{"zero", 0}}, evaluation_system()),
                  std::domain_error);
}

TEST_CASE("FIR buffering challenge") {
  const app::BufferingReport fir = app::fir_report(4, 32, baseline());
  CHECK(fir.words == 11);
  CHECK(fir.es_bs.footprint.total_rows == 352);
  CHECK(fir.es_bs.verdict.status == CapacityVerdict::Status::RowOverflow);
  CHECK(fir.es_bs.verdict.row_deficit == 224);
  CHECK(fir.es_bp.footprint.total_rows == 11);
  CHECK(fir.es_bp.verdict.status == CapacityVerdict::Status::Fits);

  CHECK(app::fir_report(1, 32, baseline()).es_bp.verdict.status ==
        CapacityVerdict::Status::Fits);

  const app::BufferingReport fir8 = app::fir_report(4, 8, baseline());
  CHECK(fir8.es_bs.footprint.total_rows == 88);
  CHECK(fir8.es_bs.verdict.status == CapacityVerdict::Status::Fits);

  CHECK_THROWS_AS(app::fir_report(0, 32, baseline()), std::domain_error);
}

TEST_CASE("predication challenge") {
  const app::BufferingReport pred = app::predication_report(10, 32, baseline());
  CHECK(pred.es_bs.footprint.total_rows == 320);
  CHECK(pred.es_bs.verdict.status == CapacityVerdict::Status::RowOverflow);
  CHECK(pred.es_bs.verdict.row_deficit == 192);
  CHECK(pred.es_bp.footprint.total_rows == 10);
  CHECK(pred.es_bp.verdict.status == CapacityVerdict::Status::Fits);

  const app::BufferingReport boundary = app::predication_report(4, 32, baseline());
  CHECK(boundary.es_bs.footprint.total_rows == 128);
  CHECK(boundary.es_bs.verdict.status == CapacityVerdict::Status::Fits);
}

TEST_CASE("Keccak shuffle challenge") {
  const app::KeccakShuffleReport keccak = app::keccak_shuffle_report(25, 64, baseline());
  CHECK(keccak.es_bp_cycles == 0);
  CHECK(keccak.es_bs.footprint.total_rows == 1600);
  CHECK(keccak.es_bs.verdict.status == CapacityVerdict::Status::RowOverflow);
  CHECK(keccak.moved_elements == 24);
  CHECK(keccak.ep_bs_cycles == 3072);
  CHECK_FALSE(keccak.move_model.empty());
}

TEST_CASE("Keccak pi pattern") {
  const auto& pi = app::keccak_pi_source();
  CHECK(pi[0] == 0);
  CHECK(pi[1] == 15);
  CHECK(pi[2] == 5);
  CHECK(pi[3] == 20);
  CHECK(pi[22] == 4);
  CHECK(pi[23] == 19);
  CHECK(pi[24] == 9);
  // A permutation with exactly one fixed point.
  std::set<int> seen(pi.begin(), pi.end());
  CHECK(seen.size() == 25);
  int fixed = 0;
  for (int i = 0; i < 25; ++i) fixed += pi[i] == i ? 1 : 0;
  CHECK(fixed == 1);
}

TEST_CASE("mixed-precision challenge") {
  const app::MixedPrecisionReport r = app::mixed_precision_report(
      {{8, 16}, {4, 16}}, PrimKind::Add, baseline());
  CHECK(r.bs_cycles_padded == 8);
  CHECK(r.padded_width == 8);
  CHECK(r.bp_cycles == 1);
  CHECK(r.conflict_note.find("out-of-bitwidth") != std::string::npos);

  CHECK(app::mixed_precision_report({{16, 1}, {8, 1}, {4, 1}}, PrimKind::Add, baseline())
            .bp_cycles == 1);

  CHECK_THROWS_AS(app::mixed_precision_report({{8, 1}, {8, 1}}, PrimKind::Add, baseline()),
                  std::invalid_argument);
  CHECK_THROWS_AS(app::mixed_precision_report({}, PrimKind::Add, baseline()),
                  std::invalid_argument);
}

TEST_CASE("speedup classification partitions the ratio axis") {
  CHECK(app::classify_speedup(2.0) == "Strong BP preference");
  CHECK(app::classify_speedup(1.07) == "Balanced");
  CHECK(app::classify_speedup(0.8) == "BS preference");
  CHECK(app::classify_speedup(1.5) == "Strong BP preference");
  CHECK(app::classify_speedup(1.2) == "Moderate BP preference");
  CHECK(app::classify_speedup(1.0) == "Balanced");
  CHECK(app::classify_speedup(0.999) == "BS preference");
  const std::set<std::string> names = {"Strong BP preference", "Moderate BP preference",
                                       "Balanced", "BS preference"};
  for (double r = 0.05; r < 5.0; r += 0.05) {
    CHECK(names.count(app::classify_speedup(r)) == 1);
  }
  CHECK_THROWS_AS(app::classify_speedup(0.0), std::domain_error);
  CHECK_THROWS_AS(app::classify_speedup(-1.0), std::domain_error);
}

TEST_CASE("application classification reference rows") {
  const auto& rows = app::app_classification();
  REQUIRE(rows.size() == 5);
  CHECK(rows[0].category == "Strong BP preference");
  CHECK(rows[4].category == "Hybrid recommended");
  CHECK(rows[4].applications.find("AES") != std::string::npos);
}

TEST_CASE("advisor rules") {
  const ArrayConfig big = evaluation_system();

  app::WorkloadDescriptor hdc;
  hdc.dominant_op_class = app::OpClass::BitLevel;
  hdc.degree_of_parallelism = 262144;
  hdc.word_widths = {1};
  const app::Advice a1 = app::advise(hdc, big);
  CHECK(a1.recommendation == app::Recommendation::BS);
  REQUIRE(a1.root_causes.size() == 1);
  CHECK(a1.root_causes[0] == app::kGranularityMismatch);

  app::WorkloadDescriptor pixels;
  pixels.dominant_op_class = app::OpClass::WordArithmetic;
  pixels.degree_of_parallelism = 16;
  pixels.word_widths = {32};
  pixels.latency_critical = true;
  const app::Advice a2 = app::advise(pixels, baseline());
  CHECK(a2.recommendation == app::Recommendation::BP);
  REQUIRE(a2.root_causes.size() == 2);
  CHECK(a2.root_causes[0] == app::kGranularityMismatch);
  CHECK(a2.root_causes[1] == app::kInherentLatency);

  app::WorkloadDescriptor pipeline;
  pipeline.dominant_op_class = app::OpClass::WordArithmetic;
  pipeline.phase_classes = {app::OpClass::BitLevel, app::OpClass::WordArithmetic};
  pipeline.degree_of_parallelism = 1024;
  pipeline.word_widths = {8};
  const app::Advice a3 = app::advise(pipeline, baseline());
  CHECK(a3.recommendation == app::Recommendation::Hybrid);

  // Determinism: equal descriptors, equal advice.
  const app::Advice again = app::advise(pixels, baseline());
  CHECK(again.recommendation == a2.recommendation);
  CHECK(again.root_causes == a2.root_causes);
  CHECK(again.rationale == a2.rationale);
}

TEST_CASE("advisor edge rules") {
  // Bit-level work that cannot fill the lanes goes BP.
  app::WorkloadDescriptor sparse_bits;
  sparse_bits.dominant_op_class = app::OpClass::BitLevel;
  sparse_bits.degree_of_parallelism = 64;
  sparse_bits.word_widths = {1};
  CHECK(app::advise(sparse_bits, baseline()).recommendation == app::Recommendation::BP);

  // Latency-critical bit-level work goes BP even at full parallelism.
  app::WorkloadDescriptor urgent;
  urgent.dominant_op_class = app::OpClass::BitLevel;
  urgent.degree_of_parallelism = 512;
  urgent.word_widths = {1};
  urgent.latency_critical = true;
  CHECK(app::advise(urgent, baseline()).recommendation == app::Recommendation::BP);

  // Mixed widths surface the lockstep conflict.
  app::WorkloadDescriptor quantized;
  quantized.dominant_op_class = app::OpClass::MixedPrecision;
  quantized.degree_of_parallelism = 100000;
  quantized.word_widths = {8, 4};
  const app::Advice advice = app::advise(quantized, baseline());
  CHECK(advice.recommendation == app::Recommendation::BP);
  bool has_lockstep = false;
  for (const auto& c : advice.root_causes) {
    if (c == app::kLockstepControlConflict) has_lockstep = true;
  }
  CHECK(has_lockstep);

  app::WorkloadDescriptor bad;
  bad.word_widths = {};
  CHECK_THROWS_AS(app::advise(bad, baseline()), std::domain_error);
}

TEST_CASE("workload descriptor files") {
  const app::WorkloadDescriptor hdc =
      app::load_workload(data_dir() + "/workloads/hdc_similarity.txt");
  CHECK(hdc.dominant_op_class == app::OpClass::BitLevel);
  CHECK(hdc.degree_of_parallelism == 262144);
  CHECK_FALSE(hdc.latency_critical);

  const app::WorkloadDescriptor pipeline =
      app::load_workload(data_dir() + "/workloads/crypto_pipeline.txt");
  CHECK(pipeline.phase_classes.size() == 3);
  CHECK(app::advise(pipeline, baseline()).recommendation == app::Recommendation::Hybrid);

  CHECK_THROWS_AS(app::load_workload(data_dir() + "/workloads/missing.txt"),
                  std::runtime_error);
}

TEST_CASE("malformed input files report the offending line") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::path("appbench_tmp_inputs");
  fs::remove_all(dir);
  fs::create_directories(dir);

  {
    std::ofstream bad(dir / "workload.txt");
    bad << "dominant_op_class=word_arithmetic\n"
        << "degree_of_parallelism=ten\n";
  }
  CHECK_THROWS_WITH_AS(app::load_workload((dir / "workload.txt").string()),
                       doctest::Contains(":2:"), std::runtime_error);

  {
    std::ofstream bad(dir / "layers.csv");
    bad << "layer,output_bits\n"
        << "conv1,1048576\n"
        << "conv2\n";
  }
  CHECK_THROWS_WITH_AS(app::load_vgg_layers((dir / "layers.csv").string()),
                       doctest::Contains(":3:"), std::runtime_error);

  {
    std::ofstream bad(dir / "unknown_key.txt");
    bad << "dominant_op_class=word_arithmetic\n"
        << "degree_of_parallelism=16\n"
        << "word_widths=32\n"
        << "favorite_color=blue\n";
  }
  CHECK_THROWS_WITH_AS(app::load_workload((dir / "unknown_key.txt").string()),
                       doctest::Contains("favorite_color"), std::runtime_error);

  fs::remove_all(dir);
}
