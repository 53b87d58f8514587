#include <doctest.h>

#include <stdexcept>

#include "pumsim/array_config.hpp"
#include "test_support.hpp"

using namespace pumsim;

namespace {

std::int64_t cost(PrimKind kind, int width, Mode mode, int shift = 0) {
  return primitive_cost(PrimitiveOp{kind, width, shift}, mode);
}

}  // namespace

TEST_CASE("primitive cost table cells") {
  // BP word-level column.
  CHECK(cost(PrimKind::Logic, 32, Mode::BP) == 1);
  CHECK(cost(PrimKind::Add, 32, Mode::BP) == 1);
  CHECK(cost(PrimKind::Sub, 32, Mode::BP) == 2);
  CHECK(cost(PrimKind::Mult, 32, Mode::BP) == 34);
  CHECK(cost(PrimKind::Shift, 32, Mode::BP, 5) == 5);
  // BS per-bit column.
  CHECK(cost(PrimKind::Add, 1, Mode::BS) == 1);
  CHECK(cost(PrimKind::Sub, 1, Mode::BS) == 1);
  CHECK(cost(PrimKind::Shift, 32, Mode::BS, 5) == 0);
  CHECK(cost(PrimKind::Mux, 1, Mode::BS) == 4);
}

TEST_CASE("primitive cost spec points") {
  CHECK(cost(PrimKind::Add, 32, Mode::BP) == 1);
  CHECK(cost(PrimKind::Mult, 32, Mode::BP) == 34);
  CHECK(cost(PrimKind::Shift, 16, Mode::BS, 5) == 0);
  CHECK(cost(PrimKind::Add, 1, Mode::BS) == 1);
  // Calibrated division and shift-and-add multiply at the 16-bit scale.
  CHECK(cost(PrimKind::DivRestoring, 16, Mode::BP) == 640);
  CHECK(cost(PrimKind::DivRestoring, 16, Mode::BS) == 1280);
  CHECK(cost(PrimKind::Mult, 16, Mode::BS) == 256);
  CHECK(cost(PrimKind::Mult, 32, Mode::BS) == 1024);
}

TEST_CASE("primitive cost width validation") {
  CHECK_THROWS_AS(cost(PrimKind::Add, 1, Mode::BP), std::domain_error);
  CHECK_THROWS_AS(cost(PrimKind::Add, 33, Mode::BP), std::domain_error);
  CHECK_THROWS_AS(cost(PrimKind::Add, 0, Mode::BS), std::domain_error);
  CHECK_THROWS_AS(cost(PrimKind::Shift, 16, Mode::BP, -1), std::domain_error);
  CHECK_THROWS_WITH_AS(cost(PrimKind::Mult, 40, Mode::BP),
                       doctest::Contains("[2, 32]"), std::domain_error);
  // BS words wider than the BP bound are fine.
  CHECK(cost(PrimKind::Add, 64, Mode::BS) == 64);
}

TEST_CASE("BS add cost is linear in width") {
  const std::int64_t unit = cost(PrimKind::Add, 1, Mode::BS);
  for (int n = 2; n <= 64; ++n) {
    CHECK(cost(PrimKind::Add, n, Mode::BS) == n * unit);
  }
}

TEST_CASE("BP multiply is width plus two across the range") {
  for (int n = kMinBpWidth; n <= kMaxBpWidth; ++n) {
    CHECK(cost(PrimKind::Mult, n, Mode::BP) == n + 2);
  }
}

TEST_CASE("BS shifts are free for any distance") {
  for (int k : {0, 1, 5, 31, 500}) {
    CHECK(cost(PrimKind::Shift, 8, Mode::BS, k) == 0);
  }
}

TEST_CASE("costs are non-negative and non-decreasing in width") {
  const PrimKind kinds[] = {PrimKind::Logic,        PrimKind::Add,  PrimKind::Sub,
                            PrimKind::Mult,         PrimKind::Mux,  PrimKind::CompareSign,
                            PrimKind::DivRestoring, PrimKind::Shift};
  for (Mode mode : {Mode::BP, Mode::BS}) {
    for (PrimKind kind : kinds) {
      std::int64_t prev = 0;
      const int lo = mode == Mode::BP ? kMinBpWidth : 1;
      const int hi = mode == Mode::BP ? kMaxBpWidth : 64;
      for (int n = lo; n <= hi; ++n) {
        const std::int64_t c = cost(kind, n, mode, 3);
        CHECK(c >= 0);
        CHECK(c >= prev);
        prev = c;
      }
    }
  }
}

TEST_CASE("system columns") {
  ArrayConfig big;
  big.num_arrays = 512;
  CHECK(system_columns(big) == 262144);
  CHECK(system_columns(ArrayConfig{}) == 512);
  ArrayConfig tiny;
  tiny.cols = 4;
  tiny.num_arrays = 3;
  CHECK(system_columns(tiny) == 12);
}

TEST_CASE("config validation names the violated bound") {
  ArrayConfig bad;
  bad.rows = 0;
  CHECK_THROWS_WITH_AS(bad.validate(), doctest::Contains("rows"), std::domain_error);
  bad = ArrayConfig{};
  bad.transpose_core_cycles = 0;
  CHECK_THROWS_WITH_AS(bad.validate(), doctest::Contains("transpose_core_cycles"),
                       std::domain_error);
  CHECK_NOTHROW(ArrayConfig{}.validate());
}

TEST_CASE("bit mode factories") {
  CHECK(BitMode::bp(16).word_width == 16);
  CHECK(BitMode::bs().mode == Mode::BS);
  CHECK_THROWS_AS(BitMode::bp(1), std::domain_error);
  CHECK_THROWS_AS(BitMode::bp(64), std::domain_error);
}

TEST_CASE("mode and kind parsing") {
  CHECK(mode_from_string("BP") == Mode::BP);
  CHECK(mode_from_string("bs") == Mode::BS);
  CHECK_THROWS_AS(mode_from_string("vertical"), std::domain_error);
  CHECK(prim_kind_from_string("mult") == PrimKind::Mult);
  CHECK_THROWS_AS(prim_kind_from_string("fma"), std::domain_error);
}
