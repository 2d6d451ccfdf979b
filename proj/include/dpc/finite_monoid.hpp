#ifndef DPC_FINITE_MONOID_HPP_
#define DPC_FINITE_MONOID_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "partial_perm.hpp"

namespace dpc {

  using Ordinal = std::uint32_t;

  struct Generator {
    std::string name;
    PartialPerm value;
  };

  // An enumerated monoid of partial permutations, held in canonical order.
  // Immutable once constructed.
  class FiniteMonoid {
   public:
    FiniteMonoid(std::size_t n, std::vector<PartialPerm> elements,
                 std::vector<Generator> generators = {})
        : _n(n), _elements(std::move(elements)),
          _generators(std::move(generators)) {
      std::sort(_elements.begin(), _elements.end(), CanonicalLess{});
      _elements.erase(std::unique(_elements.begin(), _elements.end()),
                      _elements.end());
      _index.reserve(_elements.size());
      for (std::size_t i = 0; i < _elements.size(); ++i) {
        if (_elements[i].degree() != n) {
          throw usage_error("FiniteMonoid: element of degree "
                            + std::to_string(_elements[i].degree())
                            + " in a monoid of degree " + std::to_string(n));
        }
        _index.emplace(_elements[i], static_cast<Ordinal>(i));
      }
      auto id = index_of(PartialPerm::identity(n));
      if (!id) {
        throw usage_error("FiniteMonoid: identity missing");
      }
      _identity = *id;
      for (auto const& g : _generators) {
        if (!contains(g.value)) {
          throw usage_error("FiniteMonoid: generator " + g.name
                            + " is not an element");
        }
      }
    }

    std::size_t degree() const noexcept {
      return _n;
    }
    std::size_t size() const noexcept {
      return _elements.size();
    }
    std::vector<PartialPerm> const& elements() const noexcept {
      return _elements;
    }
    PartialPerm const& at(Ordinal i) const {
      return _elements.at(i);
    }
    std::vector<Generator> const& generators() const noexcept {
      return _generators;
    }
    Ordinal identity() const noexcept {
      return _identity;
    }

    std::optional<Ordinal> index_of(PartialPerm const& p) const {
      auto it = _index.find(p);
      if (it == _index.end()) {
        return std::nullopt;
      }
      return it->second;
    }

    bool contains(PartialPerm const& p) const {
      return _index.contains(p);
    }

    Ordinal product(Ordinal a, Ordinal b) const {
      auto r = index_of(compose(_elements[a], _elements[b]));
      if (!r) {
        throw usage_error("FiniteMonoid: product leaves the monoid");
      }
      return *r;
    }

    friend bool operator==(FiniteMonoid const& a, FiniteMonoid const& b) {
      return a._n == b._n && a._elements == b._elements;
    }

   private:
    std::size_t                              _n;
    std::vector<PartialPerm>                 _elements;
    std::vector<Generator>                   _generators;
    std::unordered_map<PartialPerm, Ordinal> _index;
    Ordinal                                  _identity = 0;
  };

  // Dense Cayley table: at(a, b) = ordinal of ab.
  class MultiplicationTable {
   public:
    explicit MultiplicationTable(FiniteMonoid const& m)
        : _size(m.size()), _table(_size * _size) {
      for (Ordinal a = 0; a < _size; ++a) {
        for (Ordinal b = 0; b < _size; ++b) {
          _table[a * _size + b] = m.product(a, b);
        }
      }
    }

    std::size_t size() const noexcept {
      return _size;
    }

    Ordinal at(Ordinal a, Ordinal b) const noexcept {
      return _table[a * _size + b];
    }

   private:
    std::size_t          _size;
    std::vector<Ordinal> _table;
  };

  // Exhaustive closure check; O(|M|^2) compositions.
  inline bool is_closed(FiniteMonoid const& m) {
    for (auto const& a : m.elements()) {
      for (auto const& b : m.elements()) {
        if (!m.contains(compose(a, b))) {
          return false;
        }
      }
    }
    return true;
  }

  inline bool is_inverse_closed(FiniteMonoid const& m) {
    return std::all_of(m.elements().begin(), m.elements().end(),
                       [&m](auto const& a) { return m.contains(inverse(a)); });
  }

}  // namespace dpc

#endif  // DPC_FINITE_MONOID_HPP_
