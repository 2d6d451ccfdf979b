#ifndef DPC_LEMMAS_HPP_
#define DPC_LEMMAS_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "congruence.hpp"
#include "presentation.hpp"

namespace dpc {

  // One relation u = v to be checked in some quotient.
  struct Instance {
    std::string label;
    Word        lhs;
    Word        rhs;
  };

  struct CheckedInstance {
    Instance instance;
    bool     pass = false;
  };

  struct ConsequenceReport {
    std::string                  name;
    std::vector<CheckedInstance> results;

    bool all_pass() const noexcept {
      for (auto const& r : results) {
        if (!r.pass) {
          return false;
        }
      }
      return true;
    }
  };

  inline ConsequenceReport check_instances(std::string              name,
                                           CongruenceTable const&   t,
                                           std::vector<Instance>    instances) {
    ConsequenceReport report{std::move(name), {}};
    for (auto& inst : instances) {
      bool const ok = check_consequence(t, inst.lhs, inst.rhs);
      report.results.push_back({std::move(inst), ok});
    }
    return report;
  }

  namespace detail {
    inline Word h_g_power(std::size_t m) {
      return Word{letters_a::h} + power({letters_a::g}, m);
    }
  }  // namespace detail

  // hg^{2j-1} prod_{k != j, j+n/2} e_k = prod_{k != j, j+n/2} e_k, n even,
  // 1 <= j <= n/2.
  inline std::vector<Instance> antipodal_pair_instances(std::size_t n) {
    std::vector<Instance> out;
    if (n % 2 != 0) {
      return out;
    }
    for (std::size_t j = 1; j <= n / 2; ++j) {
      Word const tail = detail::idempotent_product(n, {j, j + n / 2});
      out.push_back({"j=" + std::to_string(j),
                     detail::h_g_power(2 * j - 1) + tail, tail});
    }
    return out;
  }

  // hg^{2i-1} prod_{k != i} e_k = prod_{k != i} e_k, 1 <= i <= n.
  inline std::vector<Instance> single_point_instances(std::size_t n) {
    std::vector<Instance> out;
    for (std::size_t i = 1; i <= n; ++i) {
      Word const tail = detail::idempotent_product(n, {i});
      out.push_back({"i=" + std::to_string(i),
                     detail::h_g_power(2 * i - 1) + tail, tail});
    }
    return out;
  }

  // h^l g^m e_1 ... e_n = e_1 ... e_n for 0 <= l <= max_l, 0 <= m <= max_m.
  inline std::vector<Instance> empty_map_instances(std::size_t n,
                                                   std::size_t max_l,
                                                   std::size_t max_m) {
    std::vector<Instance> out;
    Word const            all = detail::idempotent_product(n, {});
    for (std::size_t l = 0; l <= max_l; ++l) {
      for (std::size_t m = 0; m <= max_m; ++m) {
        out.push_back({"l=" + std::to_string(l) + ",m=" + std::to_string(m),
                       power({letters_a::h}, l) + power({letters_a::g}, m) + all,
                       all});
      }
    }
    return out;
  }

  // Checks the three families of derived relations in a closed <A | R> table.
  inline std::vector<ConsequenceReport> check_lemmas(CongruenceTable const& r_table,
                                                     std::size_t            n) {
    return {check_instances("antipodal_pair", r_table, antipodal_pair_instances(n)),
            check_instances("single_point", r_table, single_point_instances(n)),
            check_instances("empty_map", r_table, empty_map_instances(n, 3, 2 * n))};
  }

  // Word over B standing for e_i: hg^{i-1} e hg^{i-1} for i < n, and e for i = n.
  inline Word eliminate_idempotent(std::size_t n, std::size_t i) {
    using namespace letters_b;
    if (i == n) {
      return {e};
    }
    Word const c = Word{h} + power({g}, i - 1);
    return c + Word{e} + c;
  }

  // A-word to B-word under g -> g, h -> h, e_i -> eliminate_idempotent(i).
  inline Word push_to_B(std::size_t n, Word const& w) {
    Word out;
    for (Letter a : w) {
      if (a == letters_a::g) {
        out.push_back(letters_b::g);
      } else if (a == letters_a::h) {
        out.push_back(letters_b::h);
      } else {
        Word const sub = eliminate_idempotent(n, a - 1);
        out.insert(out.end(), sub.begin(), sub.end());
      }
    }
    return out;
  }

  // B-word to A-word under g -> g, h -> h, e -> e_n.
  inline Word pull_to_A(std::size_t n, Word const& w) {
    Word out;
    for (Letter a : w) {
      out.push_back(a == letters_b::e ? letters_a::e(n) : a);
    }
    return out;
  }

  struct TietzeReport {
    ConsequenceReport definitions;  // e_i = hg^{i-1} e_n hg^{i-1} holds in R
    ConsequenceReport r_in_q;       // every R relation, pushed to B, holds in Q
    ConsequenceReport q_in_r;       // every Q relation, pulled to A, holds in R

    bool all_pass() const noexcept {
      return definitions.all_pass() && r_in_q.all_pass() && q_in_r.all_pass();
    }
  };

  inline TietzeReport check_tietze_bridge(std::size_t            n,
                                          Presentation const&    r,
                                          CongruenceTable const& r_table,
                                          Presentation const&    q,
                                          CongruenceTable const& q_table) {
    std::vector<Instance> defs;
    for (std::size_t i = 1; i <= n; ++i) {
      Word const c = detail::h_g_power(i - 1);
      defs.push_back({"e" + std::to_string(i), {letters_a::e(i)},
                      c + Word{letters_a::e(n)} + c});
    }
    std::vector<Instance> forward;
    for (std::size_t k = 0; k < r.relations().size(); ++k) {
      auto const& rel = r.relations()[k];
      forward.push_back({rel.family + "#" + std::to_string(k),
                         push_to_B(n, rel.lhs), push_to_B(n, rel.rhs)});
    }
    std::vector<Instance> backward;
    for (std::size_t k = 0; k < q.relations().size(); ++k) {
      auto const& rel = q.relations()[k];
      backward.push_back({rel.family + "#" + std::to_string(k),
                          pull_to_A(n, rel.lhs), pull_to_A(n, rel.rhs)});
    }
    return {check_instances("definitions", r_table, std::move(defs)),
            check_instances("R_in_Q", q_table, std::move(forward)),
            check_instances("Q_in_R", r_table, std::move(backward))};
  }

  inline TietzeReport check_tietze_bridge(std::size_t n) {
    auto const r  = build_R(n);
    auto const q  = build_Q(n);
    auto const rt = enumerate_quotient(r, default_slot_budget(n));
    auto const qt = enumerate_quotient(q, default_slot_budget(n));
    if (!rt.closed() || !qt.closed()) {
      throw budget_exhausted_error("tietze bridge: enumeration did not close at n = "
                                   + std::to_string(n));
    }
    return check_tietze_bridge(n, r, rt, q, qt);
  }

}  // namespace dpc

#endif  // DPC_LEMMAS_HPP_
