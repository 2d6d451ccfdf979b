#ifndef DPC_BUILDERS_HPP_
#define DPC_BUILDERS_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "cycle_metric.hpp"
#include "dihedral.hpp"
#include "finite_monoid.hpp"
#include "partial_perm.hpp"

namespace dpc {

  enum class BuildMethod { restrictions, closure, bruteforce };

  inline std::string_view to_string(BuildMethod m) {
    switch (m) {
      case BuildMethod::restrictions:
        return "restrictions";
      case BuildMethod::closure:
        return "closure";
      case BuildMethod::bruteforce:
        return "bruteforce";
    }
    return "?";
  }

  inline std::optional<BuildMethod> parse_build_method(std::string_view s) {
    if (s == "restrictions") {
      return BuildMethod::restrictions;
    }
    if (s == "closure") {
      return BuildMethod::closure;
    }
    if (s == "bruteforce") {
      return BuildMethod::bruteforce;
    }
    return std::nullopt;
  }

  inline constexpr std::size_t kDefaultBruteforceBound = 7;

  namespace detail {
    inline void require_cycle_degree(std::size_t n) {
      if (n < 3) {
        throw usage_error("DPC_n needs n >= 3, got " + std::to_string(n));
      }
      if (n > 24) {
        throw usage_error("n = " + std::to_string(n)
                          + " is beyond the enumeration range (max 24)");
      }
    }
  }  // namespace detail

  // g, h and e_n, the rank-3 generating set.
  inline std::vector<Generator> standard_generators(std::size_t n) {
    return {{"g", DihedralElement::rotation(n).to_partial_perm()},
            {"h", DihedralElement::reflection(n).to_partial_perm()},
            {"e", idempotent(n, static_cast<Point>(n))}};
  }

  // Least set containing the identity and closed under right multiplication
  // by the given generators, in discovery order.
  inline std::vector<PartialPerm> closure(std::size_t                  n,
                                          std::span<PartialPerm const> gens) {
    std::vector<PartialPerm>        out{PartialPerm::identity(n)};
    std::unordered_set<PartialPerm> seen{out.front()};
    for (std::size_t i = 0; i < out.size(); ++i) {
      for (auto const& g : gens) {
        PartialPerm p = compose(out[i], g);
        if (seen.insert(p).second) {
          out.push_back(p);
        }
      }
    }
    return out;
  }

  inline FiniteMonoid build_by_restrictions(std::size_t n) {
    detail::require_cycle_degree(n);
    std::unordered_set<PartialPerm> seen;
    std::vector<PartialPerm>        elems;
    for (auto const& e : DihedralElement::all(n)) {
      PartialPerm const sigma = e.to_partial_perm();
      for (PointSet s = 0; s <= full_set(n); ++s) {
        PartialPerm p = restrict_to(sigma, s);
        if (seen.insert(p).second) {
          elems.push_back(p);
        }
        if (s == full_set(n)) {
          break;
        }
      }
    }
    return FiniteMonoid(n, std::move(elems), standard_generators(n));
  }

  inline FiniteMonoid build_by_closure(std::size_t n) {
    detail::require_cycle_degree(n);
    auto                     gens = standard_generators(n);
    std::vector<PartialPerm> values;
    for (auto const& g : gens) {
      values.push_back(g.value);
    }
    return FiniteMonoid(n, closure(n, values), std::move(gens));
  }

  // Filters every partial injection of {1..n} by the isometry predicate.
  inline FiniteMonoid build_by_bruteforce(
      std::size_t n, std::size_t bound = kDefaultBruteforceBound) {
    detail::require_cycle_degree(n);
    if (n > bound) {
      throw usage_error("bruteforce builder limited to n <= "
                        + std::to_string(bound) + ", got " + std::to_string(n));
    }
    CycleMetric const        metric(n);
    std::vector<PartialPerm> elems;
    std::vector<Point>       dom, img;
    for (PointSet ds = 0; ds <= full_set(n); ++ds) {
      dom = points_of(ds);
      for (PointSet is = 0; is <= full_set(n); ++is) {
        if (std::popcount(is) != std::popcount(ds)) {
          continue;
        }
        img = points_of(is);
        do {
          PartialPerm p(n, dom, img);
          if (metric.is_partial_isometry(p)) {
            elems.push_back(p);
          }
        } while (std::next_permutation(img.begin(), img.end()));
      }
    }
    return FiniteMonoid(n, std::move(elems), standard_generators(n));
  }

  inline FiniteMonoid build(std::size_t n, BuildMethod method) {
    switch (method) {
      case BuildMethod::restrictions:
        return build_by_restrictions(n);
      case BuildMethod::closure:
        return build_by_closure(n);
      case BuildMethod::bruteforce:
        return build_by_bruteforce(n);
    }
    throw usage_error("unknown build method");
  }

  // n 2^{n+1} - ((-1)^n + 5)/4 n^2 - 2n + 1, via the parity split.
  inline std::uint64_t cardinality_formula(std::size_t n) {
    if (n < 3) {
      throw usage_error("cardinality formula needs n >= 3");
    }
    if (n > 56) {
      throw usage_error("cardinality formula overflows for n > 56");
    }
    std::uint64_t const N = n;
    std::uint64_t const lead = N << (N + 1);
    std::uint64_t const square = (n % 2 == 1) ? N * N : 3 * N * N / 2;
    return lead - square - 2 * N + 1;
  }

  // Rank-2 maps on antipodal pairs {i, i+n/2}, straight and crossed.
  inline std::vector<PartialPerm> b2_set(std::size_t n) {
    if (n % 2 != 0 || n < 4) {
      throw usage_error("B2 is defined for even n >= 4, got "
                        + std::to_string(n));
    }
    Point const              half = static_cast<Point>(n / 2);
    std::vector<PartialPerm> out;
    for (Point i = 1; i <= half; ++i) {
      for (Point j = 1; j <= half; ++j) {
        out.push_back(PartialPerm(n, {{i, j}, {i + half, j + half}}));
        out.push_back(PartialPerm(n, {{i, j + half}, {i + half, j}}));
      }
    }
    std::sort(out.begin(), out.end(), CanonicalLess{});
    return out;
  }

  // The group of units: the total maps of m.
  inline FiniteMonoid units(FiniteMonoid const& m) {
    std::vector<PartialPerm> total;
    for (auto const& a : m.elements()) {
      if (a.is_total()) {
        total.push_back(a);
      }
    }
    return FiniteMonoid(m.degree(), std::move(total));
  }

}  // namespace dpc

#endif  // DPC_BUILDERS_HPP_
