#include <algorithm>
#include <map>

#include <catch_amalgamated.hpp>

#include "dpc/presentation.hpp"

using namespace dpc;

namespace {
  bool has_relation(Presentation const& p, Word const& lhs, Word const& rhs) {
    return std::any_of(p.relations().begin(), p.relations().end(),
                       [&](Relation const& r) {
                         return (r.lhs == lhs && r.rhs == rhs)
                                || (r.lhs == rhs && r.rhs == lhs);
                       });
  }

  std::map<std::string, std::size_t> family_sizes(Presentation const& p) {
    std::map<std::string, std::size_t> out;
    for (auto const& r : p.relations()) {
      ++out[r.family];
    }
    return out;
  }
}  // namespace

TEST_CASE("relation counts", "[presentation]") {
  CHECK(build_R(3).relations().size() == 16);
  CHECK(build_R(4).relations().size() == 23);
  CHECK(build_Q(3).relations().size() == 9);
  CHECK(build_Q(4).relations().size() == 13);
  for (std::size_t n = 3; n <= 12; ++n) {
    INFO("n = " << n);
    auto const r = build_R(n);
    auto const q = build_Q(n);
    CHECK(r.relations().size() == expected_R_count(n));
    CHECK(q.relations().size() == expected_Q_count(n));
    CHECK(r.alphabet().size() == n + 2);
    CHECK(q.alphabet().size() == 3);

    auto const f = family_sizes(r);
    CHECK(f.at("R1") == 3);
    CHECK(f.at("R2") == n);
    CHECK(f.at("R3") == n * (n - 1) / 2);
    CHECK(f.at("R4") == n);
    CHECK(f.at("R5") == n);
    CHECK(f.at("R6") == (n % 2 == 0 ? 2u : 1u));

    auto const fq = family_sizes(q);
    CHECK(fq.at("Q3") == n * (n - 1) / 2);
    CHECK(fq.count("Q4") == (n % 2 == 1 ? 1u : 0u));
    CHECK(fq.count("Q5") == (n % 2 == 0 ? 1u : 0u));
  }
}

TEST_CASE("specific relations", "[presentation]") {
  using namespace letters_a;
  auto const r4 = build_R(4);
  CHECK(has_relation(r4, {h, e(2)}, {e(3), h}));
  CHECK(has_relation(r4, {g, e(1)}, {e(4), g}));
  CHECK(r4.render({h, e(2)}) == "h e2");
  CHECK(r4.render({}) == "1");
  namespace b = letters_b;
  CHECK(has_relation(build_Q(5), {b::g, b::h, b::e, b::g, b::h}, {b::e}));
  CHECK(r4.letter("e4") == e(4));
  CHECK_THROWS_AS(r4.letter("e5"), usage_error);
  Presentation p(3, {"a"});
  CHECK_THROWS_AS(p.add({1}, {}, "X"), usage_error);
  CHECK_THROWS_AS(build_R(2), usage_error);
}

TEST_CASE("evaluate", "[presentation]") {
  using namespace letters_a;
  auto const a = canonical_assignment_R(3);
  CHECK(evaluate({}, a, 3) == PartialPerm::identity(3));
  CHECK(evaluate({g, g, g}, a, 3) == PartialPerm::identity(3));
  Word const c = Word{h} + power({g}, 2);
  CHECK(evaluate(c + Word{e(3)} + c, a, 3) == evaluate({e(3)}, a, 3));
  // conjugating e_n gives each e_i
  for (std::size_t i = 1; i <= 3; ++i) {
    Word const ci = Word{h} + power({g}, i - 1);
    CHECK(evaluate(ci + Word{e(3)} + ci, a, 3) == idempotent(3, static_cast<Point>(i)));
  }
  CHECK_THROWS_AS(evaluate({7}, a, 3), usage_error);
}

TEST_CASE("canonical generators satisfy the relations", "[presentation]") {
  for (std::size_t n = 3; n <= 10; ++n) {
    INFO("n = " << n);
    auto const rr = check_satisfaction(build_R(n), canonical_assignment_R(n));
    auto const qq = check_satisfaction(build_Q(n), canonical_assignment_Q(n));
    CHECK(rr.all_pass());
    CHECK(rr.checked == expected_R_count(n));
    CHECK(qq.all_pass());
    CHECK(qq.checked == expected_Q_count(n));
  }
}

TEST_CASE("a false relation is detected", "[presentation]") {
  using namespace letters_a;
  auto p = build_R(4);
  p.add({h, h}, {g}, "bad");
  auto const rep = check_satisfaction(p, canonical_assignment_R(4));
  REQUIRE(rep.failures.size() == 1);
  CHECK(rep.failures[0].index == p.relations().size() - 1);
  CHECK_THROWS_AS(check_satisfaction(p, Assignment{}), usage_error);
}
