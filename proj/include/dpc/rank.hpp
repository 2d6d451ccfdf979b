#ifndef DPC_RANK_HPP_
#define DPC_RANK_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <thread>
#include <vector>

#include "finite_monoid.hpp"

namespace dpc {

  // Size of the submonoid generated by `gens`, by right Cayley BFS from the
  // identity over a precomputed table.
  inline std::size_t generated_size(MultiplicationTable const& t,
                                    Ordinal identity,
                                    std::span<Ordinal const> gens,
                                    std::vector<std::uint8_t>& seen,
                                    std::vector<Ordinal>& queue) {
    std::fill(seen.begin(), seen.end(), 0);
    queue.clear();
    queue.push_back(identity);
    seen[identity] = 1;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (Ordinal g : gens) {
        Ordinal const p = t.at(queue[i], g);
        if (!seen[p]) {
          seen[p] = 1;
          queue.push_back(p);
        }
      }
    }
    return queue.size();
  }

  struct RankReport {
    std::size_t monoid_size = 0;
    std::size_t standard_generated_size = 0;
    bool        standard_generates = false;
    bool        exhaustive = false;  // singles and pairs were scanned
    bool        budget_exceeded = false;
    std::size_t singles_checked = 0;
    std::size_t pairs_checked = 0;
    // First generating set of size <= 2 found, if any.
    std::optional<std::vector<Ordinal>> small_generating_set;
    std::size_t                         units_generated_size = 0;  // <g, h>
  };

  inline constexpr std::size_t kDefaultPairSearchBound = 300;

  // Checks that the monoid's generators generate it and, when requested,
  // that no set of one or two elements does. The pair scan is split over
  // `jobs` threads; the reported witness is the lexicographically first.
  inline RankReport rank_search(FiniteMonoid const& m, bool exhaustive_pairs,
                                std::size_t jobs = 1,
                                std::size_t bound = kDefaultPairSearchBound) {
    RankReport report;
    report.monoid_size = m.size();
    MultiplicationTable const t(m);
    std::vector<std::uint8_t> seen(m.size());
    std::vector<Ordinal>      queue;

    std::vector<Ordinal> gens;
    for (auto const& g : m.generators()) {
      gens.push_back(*m.index_of(g.value));
    }
    report.standard_generated_size =
        generated_size(t, m.identity(), gens, seen, queue);
    report.standard_generates = report.standard_generated_size == m.size();
    if (gens.size() >= 2) {
      report.units_generated_size =
          generated_size(t, m.identity(), std::span(gens).first(2), seen, queue);
    }
    if (!exhaustive_pairs) {
      return report;
    }
    if (m.size() > bound) {
      report.budget_exceeded = true;
      return report;
    }

    Ordinal const size = static_cast<Ordinal>(m.size());
    for (Ordinal a = 0; a < size; ++a) {
      Ordinal const one[1] = {a};
      ++report.singles_checked;
      if (generated_size(t, m.identity(), one, seen, queue) == m.size()) {
        report.small_generating_set = std::vector<Ordinal>{a};
        break;
      }
    }

    jobs = std::max<std::size_t>(1, jobs);
    std::vector<std::optional<std::vector<Ordinal>>> found(jobs);
    std::vector<std::size_t>                         counted(jobs, 0);
    auto worker = [&](std::size_t w) {
      std::vector<std::uint8_t> s(m.size());
      std::vector<Ordinal>      q;
      for (Ordinal a = static_cast<Ordinal>(w); a < size;
           a += static_cast<Ordinal>(jobs)) {
        for (Ordinal b = a + 1; b < size; ++b) {
          Ordinal const two[2] = {a, b};
          ++counted[w];
          if (generated_size(t, m.identity(), two, s, q) == m.size()) {
            found[w] = std::vector<Ordinal>{a, b};
            return;
          }
        }
      }
    };
    if (jobs == 1) {
      worker(0);
    } else {
      std::vector<std::thread> pool;
      for (std::size_t w = 0; w < jobs; ++w) {
        pool.emplace_back(worker, w);
      }
      for (auto& th : pool) {
        th.join();
      }
    }
    for (std::size_t w = 0; w < jobs; ++w) {
      report.pairs_checked += counted[w];
      if (found[w] && !report.small_generating_set) {
        report.small_generating_set = found[w];
      } else if (found[w] && *found[w] < *report.small_generating_set) {
        report.small_generating_set = found[w];
      }
    }
    report.exhaustive = true;
    return report;
  }

}  // namespace dpc

#endif  // DPC_RANK_HPP_
