#ifndef DPC_PARTIAL_PERM_HPP_
#define DPC_PARTIAL_PERM_HPP_

#include <algorithm>
#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dpc {

  // Points are 1-based at the API boundary; internally slot i holds the
  // image of point i+1 (0-based) or kUndefined.
  using Point = std::uint32_t;

  inline constexpr std::size_t   kMaxDegree = 32;
  inline constexpr std::uint8_t  kUndefined = 0xFF;

  // Raised for caller mistakes: degree mismatch, point out of range, etc.
  class usage_error : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  // Bitmask of points, bit (x-1) set iff x is in the set.
  using PointSet = std::uint32_t;

  inline PointSet full_set(std::size_t n) {
    return n >= 32 ? ~PointSet{0} : ((PointSet{1} << n) - 1);
  }

  inline std::vector<Point> points_of(PointSet s) {
    std::vector<Point> out;
    while (s != 0) {
      out.push_back(static_cast<Point>(std::countr_zero(s)) + 1);
      s &= s - 1;
    }
    return out;
  }

  inline PointSet make_point_set(std::span<Point const> pts) {
    PointSet s = 0;
    for (Point p : pts) {
      s |= PointSet{1} << (p - 1);
    }
    return s;
  }

  // A partial injection of {1..n}. Points act on the right: x(ab) = (xa)b.
  class PartialPerm {
   public:
    PartialPerm() : PartialPerm(0) {}

    // The empty map on {1..n}.
    explicit PartialPerm(std::size_t n) : _n(static_cast<std::uint8_t>(n)) {
      if (n > kMaxDegree) {
        throw usage_error("degree " + std::to_string(n) + " exceeds "
                          + std::to_string(kMaxDegree));
      }
      _img.fill(kUndefined);
    }

    // Build from aligned domain/image lists; validates injectivity and range.
    PartialPerm(std::size_t n, std::span<Point const> dom,
                std::span<Point const> img)
        : PartialPerm(n) {
      if (dom.size() != img.size()) {
        throw usage_error("domain and image lists differ in length");
      }
      PointSet seen_dom = 0, seen_img = 0;
      for (std::size_t i = 0; i < dom.size(); ++i) {
        check_point(dom[i]);
        check_point(img[i]);
        PointSet const db = PointSet{1} << (dom[i] - 1);
        PointSet const ib = PointSet{1} << (img[i] - 1);
        if ((seen_dom & db) != 0) {
          throw usage_error("point " + std::to_string(dom[i])
                            + " listed twice in domain");
        }
        if ((seen_img & ib) != 0) {
          throw usage_error("map is not injective at image "
                            + std::to_string(img[i]));
        }
        seen_dom |= db;
        seen_img |= ib;
        _img[dom[i] - 1] = static_cast<std::uint8_t>(img[i] - 1);
      }
    }

    PartialPerm(std::size_t n, std::initializer_list<std::pair<Point, Point>> m)
        : PartialPerm(n) {
      std::vector<Point> d, i;
      for (auto [x, y] : m) {
        d.push_back(x);
        i.push_back(y);
      }
      *this = PartialPerm(n, d, i);
    }

    static PartialPerm identity(std::size_t n) {
      PartialPerm p(n);
      for (std::size_t i = 0; i < n; ++i) {
        p._img[i] = static_cast<std::uint8_t>(i);
      }
      return p;
    }

    // Total map from a 1-based image list of length n.
    static PartialPerm from_images(std::span<Point const> images) {
      std::vector<Point> dom(images.size());
      for (std::size_t i = 0; i < dom.size(); ++i) {
        dom[i] = static_cast<Point>(i + 1);
      }
      return PartialPerm(images.size(), dom, images);
    }

    std::size_t degree() const noexcept {
      return _n;
    }

    bool defined_at(Point x) const noexcept {
      return x >= 1 && x <= _n && _img[x - 1] != kUndefined;
    }

    // Image of x, or 0 if undefined.
    Point operator[](Point x) const {
      check_point(x);
      return _img[x - 1] == kUndefined ? 0 : _img[x - 1] + 1u;
    }

    PointSet dom() const noexcept {
      PointSet s = 0;
      for (std::size_t i = 0; i < _n; ++i) {
        if (_img[i] != kUndefined) {
          s |= PointSet{1} << i;
        }
      }
      return s;
    }

    PointSet im() const noexcept {
      PointSet s = 0;
      for (std::size_t i = 0; i < _n; ++i) {
        if (_img[i] != kUndefined) {
          s |= PointSet{1} << _img[i];
        }
      }
      return s;
    }

    std::size_t rank() const noexcept {
      return static_cast<std::size_t>(std::popcount(dom()));
    }

    bool is_total() const noexcept {
      return dom() == full_set(_n);
    }

    std::vector<Point> domain_points() const {
      return points_of(dom());
    }

    // Images aligned with the ascending domain.
    std::vector<Point> image_sequence() const {
      std::vector<Point> out;
      for (std::size_t i = 0; i < _n; ++i) {
        if (_img[i] != kUndefined) {
          out.push_back(_img[i] + 1u);
        }
      }
      return out;
    }

    friend bool operator==(PartialPerm const& a, PartialPerm const& b) noexcept {
      return a._n == b._n && a._img == b._img;
    }

    std::size_t hash() const noexcept {
      // FNV-1a over the used slots
      std::size_t h = 1469598103934665603ull ^ _n;
      for (std::size_t i = 0; i < _n; ++i) {
        h = (h ^ _img[i]) * 1099511628211ull;
      }
      return h;
    }

    std::uint8_t raw(std::size_t i) const noexcept {
      return _img[i];
    }

   private:
    friend PartialPerm compose(PartialPerm const&, PartialPerm const&);
    friend PartialPerm inverse(PartialPerm const&);
    friend PartialPerm restrict_to(PartialPerm const&, PointSet);

    void check_point(Point x) const {
      if (x < 1 || x > _n) {
        throw usage_error("point " + std::to_string(x) + " outside 1.."
                          + std::to_string(_n));
      }
    }

    std::uint8_t                          _n;
    std::array<std::uint8_t, kMaxDegree> _img;
  };

  // a then b.
  inline PartialPerm compose(PartialPerm const& a, PartialPerm const& b) {
    if (a._n != b._n) {
      throw usage_error("compose: degrees " + std::to_string(a._n) + " and "
                        + std::to_string(b._n) + " differ");
    }
    PartialPerm out(a._n);
    for (std::size_t i = 0; i < a._n; ++i) {
      std::uint8_t const y = a._img[i];
      if (y != kUndefined) {
        out._img[i] = b._img[y];
      }
    }
    return out;
  }

  inline PartialPerm operator*(PartialPerm const& a, PartialPerm const& b) {
    return compose(a, b);
  }

  inline PartialPerm inverse(PartialPerm const& a) {
    PartialPerm out(a._n);
    for (std::size_t i = 0; i < a._n; ++i) {
      if (a._img[i] != kUndefined) {
        out._img[a._img[i]] = static_cast<std::uint8_t>(i);
      }
    }
    return out;
  }

  inline PartialPerm restrict_to(PartialPerm const& a, PointSet s) {
    PartialPerm out(a._n);
    for (std::size_t i = 0; i < a._n; ++i) {
      if ((s >> i) & 1u) {
        out._img[i] = a._img[i];
      }
    }
    return out;
  }

  inline PartialPerm restrict_to(PartialPerm const& a,
                                 std::span<Point const> s) {
    PointSet mask = 0;
    for (Point p : s) {
      if (p >= 1 && p <= a.degree()) {
        mask |= PointSet{1} << (p - 1);
      }
    }
    return restrict_to(a, mask);
  }

  // id on {1..n} \ {i}.
  inline PartialPerm idempotent(std::size_t n, Point i) {
    if (i < 1 || i > n) {
      throw usage_error("idempotent: point " + std::to_string(i)
                        + " outside 1.." + std::to_string(n));
    }
    return restrict_to(PartialPerm::identity(n), full_set(n) & ~(PointSet{1} << (i - 1)));
  }

  // Canonical order: rank, then ascending domain tuple, then image tuple.
  inline bool canonical_less(PartialPerm const& a, PartialPerm const& b) {
    if (a.degree() != b.degree()) {
      return a.degree() < b.degree();
    }
    std::size_t const ra = a.rank(), rb = b.rank();
    if (ra != rb) {
      return ra < rb;
    }
    auto const da = a.domain_points(), db = b.domain_points();
    if (da != db) {
      return da < db;
    }
    return a.image_sequence() < b.image_sequence();
  }

  struct CanonicalLess {
    bool operator()(PartialPerm const& a, PartialPerm const& b) const {
      return canonical_less(a, b);
    }
  };

  // "{1->2,3->4}"
  inline std::string to_string(PartialPerm const& a) {
    std::string s = "{";
    bool first = true;
    for (Point x : a.domain_points()) {
      if (!first) {
        s += ',';
      }
      first = false;
      s += std::to_string(x) + "->" + std::to_string(a[x]);
    }
    return s + "}";
  }

  inline std::ostream& operator<<(std::ostream& os, PartialPerm const& a) {
    return os << to_string(a);
  }

}  // namespace dpc

template <>
struct std::hash<dpc::PartialPerm> {
  std::size_t operator()(dpc::PartialPerm const& p) const noexcept {
    return p.hash();
  }
};

#endif  // DPC_PARTIAL_PERM_HPP_
