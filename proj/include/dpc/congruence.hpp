#ifndef DPC_CONGRUENCE_HPP_
#define DPC_CONGRUENCE_HPP_

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "builders.hpp"
#include "finite_monoid.hpp"
#include "presentation.hpp"

namespace dpc {

  using Slot = std::uint32_t;

  inline constexpr Slot kNoSlot = std::numeric_limits<Slot>::max();

  enum class EnumerationStatus { closed, budget_exhausted };

  // An enumeration ran out of slots before closing; the outcome is unknown.
  class budget_exhausted_error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  struct EnumerationStats {
    std::size_t slots_used = 0;  // slots ever allocated, including merged ones
    std::size_t merges     = 0;  // coincidences that identified two live slots
    std::size_t passes     = 0;  // full relation sweeps until the check held
  };

  // The right Cayley graph of A*/rho for a presentation <A | R>: slot 0 is
  // the identity and edge(s, a) is the class of (word of s) a. Only a table
  // with status() == closed describes the quotient; an exhausted table is
  // kept for its statistics.
  class CongruenceTable {
   public:
    CongruenceTable(EnumerationStatus status, std::size_t alphabet_size,
                    std::vector<Slot> edges, EnumerationStats stats)
        : _status(status), _alphabet_size(alphabet_size),
          _edges(std::move(edges)), _stats(stats) {}

    EnumerationStatus status() const noexcept {
      return _status;
    }
    bool closed() const noexcept {
      return _status == EnumerationStatus::closed;
    }
    std::size_t size() const noexcept {
      return _alphabet_size == 0 ? 1 : _edges.size() / _alphabet_size;
    }
    std::size_t alphabet_size() const noexcept {
      return _alphabet_size;
    }
    EnumerationStats const& stats() const noexcept {
      return _stats;
    }
    static constexpr Slot identity() noexcept {
      return 0;
    }

    Slot edge(Slot s, Letter a) const {
      return _edges.at(static_cast<std::size_t>(s) * _alphabet_size + a);
    }

    Slot trace(Slot from, Word const& w) const {
      for (Letter a : w) {
        if (a >= _alphabet_size) {
          throw usage_error("trace: letter outside the alphabet");
        }
        from = edge(from, a);
      }
      return from;
    }

   private:
    EnumerationStatus _status;
    std::size_t       _alphabet_size;
    std::vector<Slot> _edges;
    EnumerationStats  _stats;
  };

  namespace detail {

    // Relation-driven (HLT) monoid enumeration with a union-find over slots.
    class Enumerator {
     public:
      Enumerator(Presentation const& p, std::size_t max_slots)
          : _p(p), _width(p.alphabet().size()), _max(max_slots) {}

      CongruenceTable run() {
        new_slot();
        while (!_exhausted) {
          ++_stats.passes;
          sweep();
          if (_exhausted || consistent()) {
            break;
          }
        }
        if (_exhausted) {
          return {EnumerationStatus::budget_exhausted, _width, {}, _stats};
        }
        return {EnumerationStatus::closed, _width, compact(), _stats};
      }

     private:
      Slot new_slot() {
        if (_parent.size() >= _max) {
          _exhausted = true;
          return kNoSlot;
        }
        Slot const s = static_cast<Slot>(_parent.size());
        _parent.push_back(s);
        _table.resize(_table.size() + _width, kNoSlot);
        ++_stats.slots_used;
        return s;
      }

      Slot find(Slot x) {
        while (_parent[x] != x) {
          _parent[x] = _parent[_parent[x]];
          x          = _parent[x];
        }
        return x;
      }

      Slot& cell(Slot s, Letter a) {
        return _table[static_cast<std::size_t>(s) * _width + a];
      }

      Slot follow(Slot s, Letter a) {
        Slot& c = cell(s, a);
        if (c != kNoSlot) {
          c = find(c);
        }
        return c;
      }

      Slot step(Slot s, Letter a) {
        Slot t = follow(s, a);
        if (t == kNoSlot) {
          t = new_slot();
          if (t != kNoSlot) {
            cell(s, a) = t;
          }
        }
        return t;
      }

      Slot trace_defining(Slot s, Word const& w, std::size_t len) {
        for (std::size_t i = 0; i < len && s != kNoSlot; ++i) {
          s = step(s, w[i]);
        }
        return s;
      }

      void coincidence(Slot a, Slot b) {
        _queue.emplace_back(a, b);
        while (!_queue.empty()) {
          auto [x, y] = _queue.front();
          _queue.pop_front();
          x = find(x);
          y = find(y);
          if (x == y) {
            continue;
          }
          if (x > y) {
            std::swap(x, y);
          }
          _parent[y] = x;
          ++_stats.merges;
          for (Letter l = 0; l < _width; ++l) {
            Slot const ty = cell(y, l);
            if (ty == kNoSlot) {
              continue;
            }
            Slot& tx = cell(x, l);
            if (tx == kNoSlot) {
              tx = ty;
            } else {
              _queue.emplace_back(tx, ty);
            }
          }
        }
      }

      // Push u and v from s; identify the endpoints.
      void apply(Slot s, Word const& u, Word const& v) {
        Word const& a = u.size() >= v.size() ? u : v;
        Word const& b = u.size() >= v.size() ? v : u;
        Slot const  x = trace_defining(s, a, a.size());
        if (x == kNoSlot) {
          return;
        }
        if (b.empty()) {
          coincidence(s, x);
          return;
        }
        Slot const y = trace_defining(s, b, b.size() - 1);
        if (y == kNoSlot) {
          return;
        }
        Slot const t = follow(y, b.back());
        if (t == kNoSlot) {
          cell(y, b.back()) = find(x);
        } else {
          coincidence(t, x);
        }
      }

      void sweep() {
        auto const& rels = _p.relations();
        for (Slot s = 0; s < _parent.size(); ++s) {
          for (std::size_t r = 0; r < rels.size() && find(s) == s; ++r) {
            apply(s, rels[r].lhs, rels[r].rhs);
            if (_exhausted) {
              return;
            }
          }
          if (find(s) != s) {
            continue;
          }
          for (Letter l = 0; l < _width; ++l) {
            if (step(s, l) == kNoSlot) {
              return;
            }
          }
        }
      }

      // Every live slot has total edges and satisfies every relation.
      bool consistent() {
        for (Slot s = 0; s < _parent.size(); ++s) {
          if (find(s) != s) {
            continue;
          }
          for (Letter l = 0; l < _width; ++l) {
            if (follow(s, l) == kNoSlot) {
              return false;
            }
          }
          for (auto const& rel : _p.relations()) {
            if (walk(s, rel.lhs) != walk(s, rel.rhs)) {
              return false;
            }
          }
        }
        return true;
      }

      Slot walk(Slot s, Word const& w) {
        for (Letter a : w) {
          s = follow(s, a);
        }
        return s;
      }

      std::vector<Slot> compact() {
        std::vector<Slot> renumber(_parent.size(), kNoSlot);
        Slot              live = 0;
        for (Slot s = 0; s < _parent.size(); ++s) {
          if (find(s) == s) {
            renumber[s] = live++;
          }
        }
        std::vector<Slot> edges;
        edges.reserve(static_cast<std::size_t>(live) * _width);
        for (Slot s = 0; s < _parent.size(); ++s) {
          if (renumber[s] == kNoSlot) {
            continue;
          }
          for (Letter l = 0; l < _width; ++l) {
            edges.push_back(renumber[follow(s, l)]);
          }
        }
        return edges;
      }

      Presentation const&            _p;
      std::size_t                    _width;
      std::size_t                    _max;
      bool                           _exhausted = false;
      std::vector<Slot>              _parent;
      std::vector<Slot>              _table;
      std::deque<std::pair<Slot, Slot>> _queue;
      EnumerationStats               _stats;
    };

  }  // namespace detail

  inline CongruenceTable enumerate_quotient(Presentation const& p,
                                            std::size_t         max_slots) {
    if (max_slots < 1) {
      throw usage_error("enumerate_quotient: max_slots must be >= 1");
    }
    if (max_slots >= kNoSlot) {
      throw usage_error("enumerate_quotient: max_slots too large");
    }
    return detail::Enumerator(p, max_slots).run();
  }

  // 64 x |DPC_n|.
  inline std::size_t default_slot_budget(std::size_t n) {
    return static_cast<std::size_t>(64 * cardinality_formula(n));
  }

  inline Slot word_normal_form(CongruenceTable const& t, Word const& w) {
    if (!t.closed()) {
      throw usage_error("word_normal_form needs a closed table");
    }
    return t.trace(CongruenceTable::identity(), w);
  }

  inline bool check_consequence(CongruenceTable const& t, Word const& u,
                                Word const& v) {
    return word_normal_form(t, u) == word_normal_form(t, v);
  }

  enum class Verdict { defines, does_not_define, inconclusive };

  inline std::string_view to_string(Verdict v) {
    switch (v) {
      case Verdict::defines:
        return "defines";
      case Verdict::does_not_define:
        return "does_not_define";
      case Verdict::inconclusive:
        return "inconclusive";
    }
    return "?";
  }

  struct VerifyReport {
    Verdict            verdict = Verdict::inconclusive;
    std::size_t        quotient_size = 0;  // 0 when inconclusive
    std::size_t        target_size   = 0;
    bool               satisfied     = false;
    bool               isomorphic    = false;  // slot -> element is a bijection
    EnumerationStats   stats;
    double             wall_ms = 0;
  };

  // Reads the value of each slot off the closed table by BFS from the
  // identity and checks it is a well-defined bijection onto m.
  inline bool slot_values_bijective(CongruenceTable const& t,
                                    FiniteMonoid const&    m,
                                    Assignment const&      assignment) {
    if (t.size() != m.size()) {
      return false;
    }
    std::vector<std::optional<Ordinal>> value(t.size());
    std::vector<bool>                   hit(m.size(), false);
    std::deque<Slot>                    todo{CongruenceTable::identity()};
    value[0] = m.identity();
    hit[m.identity()] = true;
    while (!todo.empty()) {
      Slot const s = todo.front();
      todo.pop_front();
      for (Letter a = 0; a < t.alphabet_size(); ++a) {
        auto const v = m.index_of(compose(m.at(*value[s]), assignment[a]));
        if (!v) {
          return false;
        }
        Slot const next = t.edge(s, a);
        if (value[next]) {
          if (*value[next] != *v) {
            return false;
          }
          continue;
        }
        if (hit[*v]) {
          return false;
        }
        hit[*v]     = true;
        value[next] = v;
        todo.push_back(next);
      }
    }
    for (auto const& v : value) {
      if (!v) {
        return false;
      }
    }
    return true;
  }

  // Satisfaction gives a surjection A*/rho -> m; equal finite cardinality
  // makes it a bijection.
  inline VerifyReport verify_defines(Presentation const& p, FiniteMonoid const& m,
                                     Assignment const& assignment,
                                     std::size_t       max_slots) {
    auto const   start = std::chrono::steady_clock::now();
    VerifyReport report;
    report.target_size = m.size();
    report.satisfied   = check_satisfaction(p, assignment).all_pass();
    auto const table   = enumerate_quotient(p, max_slots);
    report.stats       = table.stats();
    if (!table.closed()) {
      report.verdict = Verdict::inconclusive;
    } else {
      report.quotient_size = table.size();
      report.isomorphic    = report.satisfied
                          && slot_values_bijective(table, m, assignment);
      report.verdict = (report.satisfied && report.quotient_size == m.size())
                           ? Verdict::defines
                           : Verdict::does_not_define;
    }
    report.wall_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    return report;
  }

}  // namespace dpc

#endif  // DPC_CONGRUENCE_HPP_
