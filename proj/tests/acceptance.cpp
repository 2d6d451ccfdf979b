// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "dpc/builders.hpp"
#include "dpc/congruence.hpp"
#include "dpc/dihedral.hpp"
#include "dpc/green.hpp"
#include "dpc/lemmas.hpp"
#include "dpc/orientation.hpp"
#include "dpc/presentation.hpp"
#include "dpc/rank.hpp"

using namespace dpc;

namespace {

  struct Outcome {
    bool        pass = true;
    std::string detail;

    void fail(std::string const& why) {
      if (pass) {
        detail = why;
      }
      pass = false;
    }
  };

  std::string str(std::size_t n) {
    return std::to_string(n);
  }

  Outcome cardinality() {
    Outcome o;
    for (std::size_t n = 3; n <= 12; ++n) {
      auto const size = build_by_restrictions(n).size();
      if (size != cardinality_formula(n)) {
        o.fail("n=" + str(n) + ": " + str(size) + " != " + str(cardinality_formula(n)));
      }
    }
    o.detail = o.pass ? "n=3..12 match" : o.detail;
    return o;
  }

  Outcome builder_agreement() {
    Outcome o;
    for (std::size_t n = 3; n <= 10; ++n) {
      auto const r = build_by_restrictions(n);
      if (!(r == build_by_closure(n))) {
        o.fail("closure differs at n=" + str(n));
      }
      if (n <= 7 && !(r == build_by_bruteforce(n))) {
        o.fail("brute force differs at n=" + str(n));
      }
    }
    o.detail = o.pass ? "closure n=3..10, brute force n=3..7" : o.detail;
    return o;
  }

  bool antipodal_domain(PartialPerm const& a, CycleMetric const& d) {
    auto const pts = a.domain_points();
    return pts.size() == 2 && 2 * d.distance(pts[0], pts[1]) == a.degree();
  }

  Outcome extension_dichotomy() {
    Outcome     o;
    std::size_t checked = 0;
    for (std::size_t n = 3; n <= 8; ++n) {
      auto const        m = build_by_restrictions(n);
      CycleMetric const d(n);
      for (auto const& a : m.elements()) {
        ++checked;
        std::size_t const count = extensions_of(d, a).size();
        std::size_t       want  = 1;
        if (a.rank() == 0) {
          want = 2 * n;
        } else if (a.rank() == 1 || antipodal_domain(a, d)) {
          want = 2;
        }
        if (count != want) {
          o.fail("n=" + str(n) + " " + to_string(a) + ": " + str(count)
                 + " extensions");
        }
      }
    }
    o.detail = o.pass ? str(checked) + " elements, 0 exceptions" : o.detail;
    return o;
  }

  Outcome b2() {
    Outcome o;
    for (std::size_t n : {4u, 6u, 8u}) {
      auto const        m = build_by_restrictions(n);
      CycleMetric const d(n);
      std::vector<PartialPerm> two;
      for (auto const& a : m.elements()) {
        if (a.rank() == 2 && extensions_of(d, a).size() == 2) {
          two.push_back(a);
        }
      }
      auto const set = b2_set(n);
      if (set.size() != n * n / 2) {
        o.fail("n=" + str(n) + ": |B2| = " + str(set.size()));
      }
      if (set != two) {
        o.fail("n=" + str(n) + ": B2 differs from rank-2 two-extension set");
      }
    }
    o.detail = o.pass ? "n=4,6,8" : o.detail;
    return o;
  }

  Outcome green() {
    Outcome o;
    for (std::size_t n = 3; n <= 6; ++n) {
      auto const        m = build_by_restrictions(n);
      GreenOracle const oracle(m);
      for (auto tag : {GreenRelation::L, GreenRelation::R, GreenRelation::H}) {
        if (!green_LRH(m, tag).same_partition(oracle.classes(tag))) {
          o.fail(std::string(to_string(tag)) + " differs at n=" + str(n));
        }
      }
      if (!green_J(m, CycleMetric(n)).same_partition(oracle.classes(GreenRelation::J))) {
        o.fail("J differs at n=" + str(n));
      }
    }
    o.detail = o.pass ? "L, R, H, J equal the oracle for n=3..6" : o.detail;
    return o;
  }

  Outcome unit_group() {
    Outcome o;
    for (std::size_t n = 3; n <= 8; ++n) {
      auto const               u = units(build_by_restrictions(n));
      std::vector<PartialPerm> d;
      for (auto const& x : DihedralElement::all(n)) {
        d.push_back(x.to_partial_perm());
      }
      std::sort(d.begin(), d.end(), CanonicalLess{});
      if (u.size() != 2 * n || u.elements() != d) {
        o.fail("n=" + str(n) + ": " + str(u.size()) + " units");
      }
      if (!is_closed(u) || !is_inverse_closed(u)) {
        o.fail("n=" + str(n) + ": units not a group");
      }
    }
    o.detail = o.pass ? "order 2n, equal to D_2n, n=3..8" : o.detail;
    return o;
  }

  Outcome orientation() {
    Outcome     o;
    std::size_t checked = 0;
    for (std::size_t n = 3; n <= 8; ++n) {
      auto const built = build_by_restrictions(n);
      for (auto const& a : built.elements()) {
        ++checked;
        if (!is_oriented(a)) {
          o.fail("n=" + str(n) + " " + to_string(a) + " not oriented");
        }
      }
    }
    o.detail = o.pass ? str(checked) + " elements oriented" : o.detail;
    return o;
  }

  Outcome relation_counts() {
    Outcome o;
    for (std::size_t n = 3; n <= 12; ++n) {
      auto const r = build_R(n).relations().size();
      auto const q = build_Q(n).relations().size();
      if (r != expected_R_count(n)) {
        o.fail("|R| = " + str(r) + " at n=" + str(n));
      }
      if (q != expected_Q_count(n)) {
        o.fail("|Q| = " + str(q) + " at n=" + str(n));
      }
    }
    o.detail = o.pass ? "n=3..12; |R|=16,23 and |Q|=9,13 at n=3,4" : o.detail;
    return o;
  }

  Outcome satisfaction() {
    Outcome o;
    for (std::size_t n = 3; n <= 10; ++n) {
      auto const r = check_satisfaction(build_R(n), canonical_assignment_R(n));
      auto const q = check_satisfaction(build_Q(n), canonical_assignment_Q(n));
      if (!r.all_pass()) {
        o.fail("R relation #" + str(r.failures.front().index) + " fails at n=" + str(n));
      }
      if (!q.all_pass()) {
        o.fail("Q relation #" + str(q.failures.front().index) + " fails at n=" + str(n));
      }
    }
    o.detail = o.pass ? "n=3..10" : o.detail;
    return o;
  }

  Outcome presentations_define() {
    Outcome            o;
    std::ostringstream sizes;
    for (std::size_t n = 3; n <= 8; ++n) {
      auto const m = build_by_restrictions(n);
      for (bool use_q : {false, true}) {
        auto const p  = use_q ? build_Q(n) : build_R(n);
        auto const a  = use_q ? canonical_assignment_Q(n) : canonical_assignment_R(n);
        auto const t0 = std::chrono::steady_clock::now();
        auto const rep = verify_defines(p, m, a, default_slot_budget(n));
        double const s = std::chrono::duration<double>(
                             std::chrono::steady_clock::now() - t0).count();
        if (rep.verdict != Verdict::defines || !rep.isomorphic) {
          o.fail(std::string(use_q ? "Q" : "R") + " at n=" + str(n) + ": "
                 + std::string(to_string(rep.verdict)));
        }
        if (s > 300) {
          o.fail(std::string(use_q ? "Q" : "R") + " at n=" + str(n) + " over 5 min");
        }
      }
      sizes << (n == 3 ? "" : ",") << m.size();
    }
    o.detail = o.pass ? "R and Q close at " + sizes.str() : o.detail;
    return o;
  }

  Outcome negative_control() {
    Outcome    o;
    auto const t = enumerate_quotient(build_R(3).without_family("R6"), 100000);
    if (!t.closed()) {
      o.fail("enumeration without R6 did not close");
    } else if (t.size() <= 34) {
      o.fail("quotient size " + str(t.size()));
    } else {
      o.detail = "quotient size " + str(t.size()) + " > 34";
    }
    return o;
  }

  Outcome lemmas() {
    Outcome     o;
    std::size_t instances = 0;
    for (std::size_t n = 3; n <= 8; ++n) {
      auto const t = enumerate_quotient(build_R(n), default_slot_budget(n));
      if (!t.closed()) {
        o.fail("R quotient did not close at n=" + str(n));
        continue;
      }
      for (auto const& rep : check_lemmas(t, n)) {
        instances += rep.results.size();
        if (!rep.all_pass()) {
          o.fail(rep.name + " fails at n=" + str(n));
        }
      }
      if ((n % 2 == 0) && antipodal_pair_instances(n).size() != n / 2) {
        o.fail("missing antipodal instances at n=" + str(n));
      }
    }
    for (std::size_t n = 3; n <= 6; ++n) {
      if (!check_tietze_bridge(n).all_pass()) {
        o.fail("Tietze bridge fails at n=" + str(n));
      }
    }
    o.detail = o.pass ? str(instances) + " instances n=3..8; bridge n=3..6" : o.detail;
    return o;
  }

  Outcome rank() {
    Outcome o;
    for (std::size_t n = 3; n <= 10; ++n) {
      if (!rank_search(build_by_restrictions(n), false).standard_generates) {
        o.fail("{g,h,e_n} does not generate at n=" + str(n));
      }
    }
    for (std::size_t n = 3; n <= 5; ++n) {
      auto const rep = rank_search(build_by_restrictions(n), true);
      if (!rep.exhaustive || rep.small_generating_set) {
        o.fail("pair search at n=" + str(n) + " not exhaustive or found a set");
      }
    }
    o.detail = o.pass ? "generates n=3..10; no pair n=3..5" : o.detail;
    return o;
  }

  Outcome word_problem() {
    Outcome     o;
    std::size_t words = 0;
    for (std::size_t n : {3u, 4u}) {
      auto const p = build_R(n);
      auto const a = canonical_assignment_R(n);
      auto const t = enumerate_quotient(p, default_slot_budget(n));
      if (!t.closed()) {
        o.fail("no closed table at n=" + str(n));
        continue;
      }
      std::map<Slot, PartialPerm> value_of;
      std::map<PartialPerm, Slot, CanonicalLess> slot_of;
      Letter const             k = static_cast<Letter>(p.alphabet().size());
      std::vector<Word>        layer{{}};
      for (std::size_t len = 0; len <= 6; ++len) {
        for (auto const& w : layer) {
          ++words;
          Slot const        s = word_normal_form(t, w);
          PartialPerm const v = evaluate(w, a, n);
          auto const [vi, vf] = value_of.try_emplace(s, v);
          auto const [si, sf] = slot_of.try_emplace(v, s);
          if (!(vi->second == v) || si->second != s) {
            o.fail("n=" + str(n) + " word " + p.render(w));
          }
        }
        if (len == 6) {
          break;
        }
        std::vector<Word> next;
        next.reserve(layer.size() * k);
        for (auto const& w : layer) {
          for (Letter l = 0; l < k; ++l) {
            Word x = w;
            x.push_back(l);
            next.push_back(std::move(x));
          }
        }
        layer = std::move(next);
      }
    }
    o.detail = o.pass ? str(words) + " words, slot equality iff value equality" : o.detail;
    return o;
  }

}  // namespace

int main() {
  std::vector<std::pair<std::string, std::function<Outcome()>>> const criteria{
      {"cardinality", cardinality},
      {"builder_agreement", builder_agreement},
      {"extension_dichotomy", extension_dichotomy},
      {"b2_set", b2},
      {"green_relations", green},
      {"unit_group", unit_group},
      {"orientation", orientation},
      {"relation_counts", relation_counts},
      {"satisfaction", satisfaction},
      {"presentations_define", presentations_define},
      {"negative_control", negative_control},
      {"lemma_consequences", lemmas},
      {"rank", rank},
      {"word_problem", word_problem},
  };
  int failed = 0;
  int index  = 0;
  for (auto const& [name, run] : criteria) {
    ++index;
    auto const t0 = std::chrono::steady_clock::now();
    Outcome    o;
    try {
      o = run();
    } catch (std::exception const& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    double const s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("[%s] %2d %-22s %8.2fs  %s\n", o.pass ? "PASS" : "FAIL", index,
                name.c_str(), s, o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) {
      ++failed;
    }
  }
  std::printf("%d/%zu criteria passed\n", index - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
