#ifndef DPC_GREEN_HPP_
#define DPC_GREEN_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string_view>
#include <vector>

#include "cycle_metric.hpp"
#include "dihedral.hpp"
#include "finite_monoid.hpp"
#include "partial_perm.hpp"

namespace dpc {

  enum class GreenRelation { L, R, H, J, D };

  inline std::string_view to_string(GreenRelation r) {
    switch (r) {
      case GreenRelation::L:
        return "L";
      case GreenRelation::R:
        return "R";
      case GreenRelation::H:
        return "H";
      case GreenRelation::J:
        return "J";
      case GreenRelation::D:
        return "D";
    }
    return "?";
  }

  inline std::optional<GreenRelation> parse_green_relation(std::string_view s) {
    if (s == "L") return GreenRelation::L;
    if (s == "R") return GreenRelation::R;
    if (s == "H") return GreenRelation::H;
    if (s == "J") return GreenRelation::J;
    if (s == "D") return GreenRelation::D;
    return std::nullopt;
  }

  // A partition of 0..size-1. Classes are sorted internally and ordered by
  // their minimal ordinal, so two partitions compare equal iff they are the
  // same partition.
  class GreenClasses {
   public:
    GreenClasses(GreenRelation tag, std::vector<std::uint32_t> const& labels)
        : _tag(tag), _class_of(labels.size()) {
      std::map<std::uint32_t, std::uint32_t> renumber;
      for (std::size_t i = 0; i < labels.size(); ++i) {
        auto [it, fresh] = renumber.try_emplace(
            labels[i], static_cast<std::uint32_t>(_classes.size()));
        if (fresh) {
          _classes.emplace_back();
        }
        _class_of[i] = it->second;
        _classes[it->second].push_back(static_cast<Ordinal>(i));
      }
    }

    GreenRelation tag() const noexcept {
      return _tag;
    }
    std::size_t count() const noexcept {
      return _classes.size();
    }
    std::vector<std::vector<Ordinal>> const& classes() const noexcept {
      return _classes;
    }
    std::uint32_t class_of(Ordinal a) const {
      return _class_of.at(a);
    }
    bool related(Ordinal a, Ordinal b) const {
      return class_of(a) == class_of(b);
    }

    // class size -> number of classes of that size
    std::map<std::size_t, std::size_t> size_histogram() const {
      std::map<std::size_t, std::size_t> h;
      for (auto const& c : _classes) {
        ++h[c.size()];
      }
      return h;
    }

    bool refines(GreenClasses const& coarser) const {
      for (auto const& c : _classes) {
        for (Ordinal x : c) {
          if (coarser.class_of(x) != coarser.class_of(c.front())) {
            return false;
          }
        }
      }
      return true;
    }

    bool same_partition(GreenClasses const& other) const {
      return _classes == other._classes;
    }

   private:
    GreenRelation                     _tag;
    std::vector<std::uint32_t>        _class_of;
    std::vector<std::vector<Ordinal>> _classes;
  };

  // L, R, H of an inverse submonoid of I_n: equal image, equal domain, both.
  inline GreenClasses green_LRH(FiniteMonoid const& m, GreenRelation tag) {
    std::vector<std::uint32_t> labels(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
      auto const& a = m.elements()[i];
      switch (tag) {
        case GreenRelation::L:
          labels[i] = a.im();
          break;
        case GreenRelation::R:
          labels[i] = a.dom();
          break;
        case GreenRelation::H:
          // dom, im < 2^16 when n <= 16
          if (m.degree() > 16) {
            throw usage_error("green_LRH(H) supports n <= 16");
          }
          labels[i] = (a.dom() << 16) | a.im();
          break;
        default:
          throw usage_error("green_LRH handles L, R, H only");
      }
    }
    return GreenClasses(tag, labels);
  }

  namespace detail {
    // Whether some element of DPC_n maps domain `to` onto domain `from`
    // according to the characterization by rank, pair distance, or a
    // dihedral reindexing of the sorted points.
    inline bool j_related_domains(CycleMetric const& metric, PointSet from,
                                  PointSet to) {
      int const k = std::popcount(from);
      if (k != std::popcount(to)) {
        return false;
      }
      if (k <= 1) {
        return true;
      }
      auto const a = points_of(from);
      auto const b = points_of(to);
      if (k == 2) {
        return metric.distance(a[0], a[1]) == metric.distance(b[0], b[1]);
      }
      auto const kk = static_cast<std::size_t>(k);
      std::vector<Point> img(kk);
      for (auto const& sigma : DihedralElement::all(kk)) {
        for (std::size_t p = 0; p < kk; ++p) {
          img[p] = a[sigma.act(static_cast<Point>(p + 1)) - 1];
        }
        if (metric.is_partial_isometry(PartialPerm(metric.n(), b, img))) {
          return true;
        }
      }
      return false;
    }
  }  // namespace detail

  // J from the rank / distance / dihedral-reindexing characterization.
  inline GreenClasses green_J(FiniteMonoid const& m, CycleMetric const& metric) {
    if (metric.n() != m.degree()) {
      throw usage_error("green_J: metric and monoid degrees differ");
    }
    // Classify distinct domains first; each element inherits its domain's class.
    std::map<PointSet, std::uint32_t> domain_class;
    std::vector<PointSet>             reps;
    std::vector<std::uint32_t>        labels(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
      PointSet const d = m.elements()[i].dom();
      auto           it = domain_class.find(d);
      if (it == domain_class.end()) {
        std::uint32_t cls = static_cast<std::uint32_t>(reps.size());
        for (std::uint32_t r = 0; r < reps.size(); ++r) {
          if (detail::j_related_domains(metric, reps[r], d)) {
            cls = r;
            break;
          }
        }
        if (cls == reps.size()) {
          reps.push_back(d);
        }
        it = domain_class.emplace(d, cls).first;
      }
      labels[i] = it->second;
    }
    return GreenClasses(GreenRelation::J, labels);
  }

  inline constexpr std::size_t kDefaultGreenOracleBound = 6;

  // Textbook definitions: L by Ma, R by aM, J by MaM, H = L meet R, and
  // D = L join R. Ideals are stored as bitsets over ordinals.
  class GreenOracle {
   public:
    explicit GreenOracle(FiniteMonoid const& m,
                         std::size_t bound = kDefaultGreenOracleBound)
        : _size(m.size()), _words((m.size() + 63) / 64) {
      if (m.degree() > bound) {
        throw usage_error("green oracle limited to n <= " + std::to_string(bound));
      }
      MultiplicationTable const t(m);
      _left.assign(_size, Bits(_words, 0));
      _right.assign(_size, Bits(_words, 0));
      _two.assign(_size, Bits(_words, 0));
      for (Ordinal a = 0; a < _size; ++a) {
        for (Ordinal x = 0; x < _size; ++x) {
          set(_left[a], t.at(x, a));
          set(_right[a], t.at(a, x));
        }
      }
      for (Ordinal a = 0; a < _size; ++a) {
        for (Ordinal b = 0; b < _size; ++b) {
          if (test(_left[a], b)) {
            for (std::size_t w = 0; w < _words; ++w) {
              _two[a][w] |= _right[b][w];
            }
          }
        }
      }
    }

    GreenClasses classes(GreenRelation tag) const {
      switch (tag) {
        case GreenRelation::L:
          return by_key(tag, [this](Ordinal a) { return _left[a]; });
        case GreenRelation::R:
          return by_key(tag, [this](Ordinal a) { return _right[a]; });
        case GreenRelation::J:
          return by_key(tag, [this](Ordinal a) { return _two[a]; });
        case GreenRelation::H:
          return by_key(tag, [this](Ordinal a) {
            Bits k = _left[a];
            k.insert(k.end(), _right[a].begin(), _right[a].end());
            return k;
          });
        case GreenRelation::D:
          return join();
      }
      throw usage_error("unknown Green relation");
    }

   private:
    using Bits = std::vector<std::uint64_t>;

    static void set(Bits& b, Ordinal i) {
      b[i / 64] |= std::uint64_t{1} << (i % 64);
    }
    static bool test(Bits const& b, Ordinal i) {
      return (b[i / 64] >> (i % 64)) & 1u;
    }

    template <typename KeyFn>
    GreenClasses by_key(GreenRelation tag, KeyFn key) const {
      std::map<Bits, std::uint32_t> ids;
      std::vector<std::uint32_t>    labels(_size);
      for (Ordinal a = 0; a < _size; ++a) {
        labels[a] = ids.try_emplace(key(a), static_cast<std::uint32_t>(ids.size()))
                        .first->second;
      }
      return GreenClasses(tag, labels);
    }

    GreenClasses join() const {
      auto const l = classes(GreenRelation::L);
      auto const r = classes(GreenRelation::R);
      std::vector<std::uint32_t> parent(_size);
      std::iota(parent.begin(), parent.end(), 0u);
      auto find = [&parent](std::uint32_t x) {
        while (parent[x] != x) {
          x = parent[x] = parent[parent[x]];
        }
        return x;
      };
      for (auto const* p : {&l, &r}) {
        for (auto const& c : p->classes()) {
          for (Ordinal x : c) {
            auto a = find(x), b = find(c.front());
            if (a != b) {
              parent[std::max(a, b)] = std::min(a, b);
            }
          }
        }
      }
      std::vector<std::uint32_t> labels(_size);
      for (Ordinal a = 0; a < _size; ++a) {
        labels[a] = find(a);
      }
      return GreenClasses(GreenRelation::D, labels);
    }

    std::size_t       _size;
    std::size_t       _words;
    std::vector<Bits> _left, _right, _two;
  };

  inline GreenClasses green_oracle(FiniteMonoid const& m, GreenRelation tag,
                                   std::size_t bound = kDefaultGreenOracleBound) {
    return GreenOracle(m, bound).classes(tag);
  }

  // Characterization route for any tag (D coincides with J here).
  inline GreenClasses green_classes(FiniteMonoid const& m, GreenRelation tag) {
    if (tag == GreenRelation::J || tag == GreenRelation::D) {
      auto j = green_J(m, CycleMetric(m.degree()));
      return tag == GreenRelation::J ? j : GreenClasses(GreenRelation::D, [&] {
        std::vector<std::uint32_t> labels(m.size());
        for (Ordinal a = 0; a < m.size(); ++a) {
          labels[a] = j.class_of(a);
        }
        return labels;
      }());
    }
    return green_LRH(m, tag);
  }

}  // namespace dpc

#endif  // DPC_GREEN_HPP_
