#include <catch_amalgamated.hpp>

#include "dpc/builders.hpp"
#include "dpc/rank.hpp"

using namespace dpc;

TEST_CASE("no pair generates at n = 3", "[rank]") {
  auto const rep = rank_search(build_by_restrictions(3), true);
  CHECK(rep.standard_generates);
  CHECK(rep.exhaustive);
  CHECK_FALSE(rep.small_generating_set.has_value());
  CHECK(rep.singles_checked == 34);
  CHECK(rep.pairs_checked == 34 * 33 / 2);
  CHECK(rep.units_generated_size == 6);
}

TEST_CASE("threaded scan agrees", "[rank]") {
  auto const m = build_by_restrictions(4);
  auto const a = rank_search(m, true, 1);
  auto const b = rank_search(m, true, 3);
  CHECK(a.pairs_checked == b.pairs_checked);
  CHECK(a.small_generating_set == b.small_generating_set);
  CHECK_FALSE(a.small_generating_set.has_value());
}

TEST_CASE("standard generators generate", "[rank]") {
  for (std::size_t n = 3; n <= 8; ++n) {
    auto const rep = rank_search(build_by_restrictions(n), false);
    CHECK(rep.standard_generates);
    CHECK(rep.units_generated_size == 2 * n);
    CHECK_FALSE(rep.exhaustive);
  }
  auto const big = rank_search(build_by_restrictions(6), true, 1, 100);
  CHECK(big.budget_exceeded);
  CHECK_FALSE(big.exhaustive);
}
