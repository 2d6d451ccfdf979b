#include <random>

#include <catch_amalgamated.hpp>

#include "dpc/builders.hpp"
#include "dpc/dihedral.hpp"
#include "dpc/orientation.hpp"

using namespace dpc;

namespace {
  SequenceClass of(std::vector<Point> const& s) {
    return classify_sequence(s);
  }
}  // namespace

TEST_CASE("sequence classes", "[orientation]") {
  CHECK(of({2, 3, 1}).is_cyclic);
  CHECK(of({3, 1, 2}).is_cyclic);
  CHECK(of({3, 2, 1}).is_anticyclic);
  CHECK_FALSE(of({3, 2, 1}).is_cyclic);
  CHECK(of({}).is_cyclic);
  CHECK(of({}).is_anticyclic);
  CHECK(of({4}).is_cyclic);
  CHECK(of({4}).is_anticyclic);
  CHECK(of({1, 4}).is_cyclic);
  CHECK(of({1, 4}).is_anticyclic);
  // one ascent (1 < 3) in the cyclic reading: anti-cyclic
  CHECK(of({1, 3, 2}).is_anticyclic);
  CHECK_FALSE(of({1, 3, 2}).is_cyclic);
  CHECK_FALSE(of({1, 3, 2, 4}).is_oriented());
}

TEST_CASE("oriented maps", "[orientation]") {
  CHECK(is_oriented(PartialPerm(4, {{1, 1}, {2, 3}, {3, 2}})));
  CHECK_FALSE(is_oriented(PartialPerm(4, {{1, 1}, {2, 3}, {3, 2}, {4, 4}})));
  for (std::size_t n = 3; n <= 8; ++n) {
    for (auto const& e : DihedralElement::all(n)) {
      auto const p = e.to_partial_perm();
      CHECK(is_oriented(p));
      CHECK((e.reflects() ? is_orientation_reversing(p) : is_orientation_preserving(p)));
    }
  }
}

TEST_CASE("order predicates", "[orientation]") {
  CHECK(is_order_preserving(PartialPerm::identity(5)));
  auto const h = DihedralElement::reflection(5).to_partial_perm();
  auto const g = DihedralElement::rotation(5).to_partial_perm();
  CHECK(is_order_reversing(h));
  CHECK_FALSE(is_order_preserving(h));
  CHECK_FALSE(is_order_preserving(g));
  CHECK(is_oriented(g));
  CHECK(is_order_preserving(PartialPerm(5)));
}

TEST_CASE("elements of DPC_n are oriented", "[orientation][property]") {
  for (std::size_t n = 3; n <= 8; ++n) {
    auto const built = build_by_restrictions(n);
    for (auto const& a : built.elements()) {
      REQUIRE(is_oriented(a));
      if (a.rank() <= 2) {
        REQUIRE(classify(a).is_cyclic);
        REQUIRE(classify(a).is_anticyclic);
      }
    }
  }
}

TEST_CASE("orientation parity of products", "[orientation][property]") {
  std::mt19937 rng(7);
  for (std::size_t n = 4; n <= 8; ++n) {
    auto const  built = build_by_restrictions(n);
    auto const& elems = built.elements();
    for (int trial = 0; trial < 4000; ++trial) {
      auto const& a = elems[rng() % elems.size()];
      auto const& b = elems[rng() % elems.size()];
      auto const  ab = a * b;
      bool const  pa = is_orientation_preserving(a), ra = is_orientation_reversing(a);
      bool const  pb = is_orientation_preserving(b), rb = is_orientation_reversing(b);
      if ((pa && pb) || (ra && rb)) {
        REQUIRE(is_orientation_preserving(ab));
      }
      if ((pa && rb) || (ra && pb)) {
        REQUIRE(is_orientation_reversing(ab));
      }
    }
  }
}
