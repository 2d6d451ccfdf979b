#ifndef DPC_DIHEDRAL_HPP_
#define DPC_DIHEDRAL_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "cycle_metric.hpp"
#include "partial_perm.hpp"

namespace dpc {

  // The element h^r g^k of the dihedral group of order 2n, where
  //   g : i -> i+1 (mod n),   h : i -> n-i+1.
  // Under right action h^r g^k applies h first (when r = 1), then g k times.
  class DihedralElement {
   public:
    DihedralElement(std::size_t n, bool reflect, std::size_t rotation)
        : _n(n), _reflect(reflect), _rot(rotation % (n == 0 ? 1 : n)) {
      if (n < 3) {
        throw usage_error("dihedral group needs n >= 3, got "
                          + std::to_string(n));
      }
    }

    static DihedralElement identity(std::size_t n) {
      return {n, false, 0};
    }
    static DihedralElement rotation(std::size_t n, std::size_t k = 1) {
      return {n, false, k};
    }
    static DihedralElement reflection(std::size_t n, std::size_t k = 0) {
      return {n, true, k};
    }

    // All 2n elements: g^0..g^{n-1} then hg^0..hg^{n-1}.
    static std::vector<DihedralElement> all(std::size_t n) {
      std::vector<DihedralElement> out;
      out.reserve(2 * n);
      for (int r = 0; r < 2; ++r) {
        for (std::size_t k = 0; k < n; ++k) {
          out.emplace_back(n, r == 1, k);
        }
      }
      return out;
    }

    std::size_t n() const noexcept {
      return _n;
    }
    bool reflects() const noexcept {
      return _reflect;
    }
    std::size_t rotation_amount() const noexcept {
      return _rot;
    }

    Point act(Point i) const {
      if (i < 1 || i > _n) {
        throw usage_error("point " + std::to_string(i) + " outside 1.."
                          + std::to_string(_n));
      }
      std::size_t x = _reflect ? _n - i + 1 : i;
      return static_cast<Point>((x - 1 + _rot) % _n + 1);
    }

    PartialPerm to_partial_perm() const {
      std::vector<Point> img(_n);
      for (Point i = 1; i <= _n; ++i) {
        img[i - 1] = act(i);
      }
      return PartialPerm::from_images(img);
    }

    friend bool operator==(DihedralElement const&,
                           DihedralElement const&) = default;

   private:
    std::size_t _n;
    bool        _reflect;
    std::size_t _rot;
  };

  // a then b. Uses g^k h = h g^{-k}.
  inline DihedralElement multiply(DihedralElement const& a,
                                  DihedralElement const& b) {
    if (a.n() != b.n()) {
      throw usage_error("multiply: dihedral degrees differ");
    }
    std::size_t const n = a.n();
    std::size_t k = a.rotation_amount();
    if (b.reflects()) {
      k = (n - k) % n;
    }
    return {n, a.reflects() != b.reflects(), (k + b.rotation_amount()) % n};
  }

  inline DihedralElement operator*(DihedralElement const& a,
                                   DihedralElement const& b) {
    return multiply(a, b);
  }

  // "1", "g", "g^k", "h", "hg", "hg^k".
  inline std::string to_string(DihedralElement const& e) {
    std::string s = e.reflects() ? "h" : "";
    std::size_t const k = e.rotation_amount();
    if (k == 1) {
      s += "g";
    } else if (k > 1) {
      s += "g^" + std::to_string(k);
    }
    return s.empty() ? "1" : s;
  }

  // Dihedral elements whose restriction to Dom(a) equals a. For a non-empty
  // map the only rotation candidate sending i = min Dom(a) to j = ia is
  // g^{j-i} and the only reflection candidate is hg^{i+j-1} (mod n); each is
  // then checked on the rest of the domain. Empty result iff a is not a
  // partial isometry of the cycle.
  inline std::vector<DihedralElement> extensions_of(CycleMetric const& m,
                                                    PartialPerm const& a) {
    std::size_t const n = m.n();
    if (a.degree() != n) {
      throw usage_error("extensions_of: degree mismatch");
    }
    PointSet const dom = a.dom();
    if (dom == 0) {
      return DihedralElement::all(n);
    }
    Point const i = static_cast<Point>(std::countr_zero(dom)) + 1;
    Point const j = a[i];
    DihedralElement const candidates[2] = {
        DihedralElement(n, false, (j + n - i) % n),
        DihedralElement(n, true, (i + j - 1) % n)};
    auto const points = a.domain_points();
    std::vector<DihedralElement> out;
    for (auto const& c : candidates) {
      bool ok = true;
      for (Point x : points) {
        if (c.act(x) != a[x]) {
          ok = false;
          break;
        }
      }
      if (ok) {
        out.push_back(c);
      }
    }
    return out;
  }

}  // namespace dpc

#endif  // DPC_DIHEDRAL_HPP_
