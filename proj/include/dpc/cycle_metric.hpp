#ifndef DPC_CYCLE_METRIC_HPP_
#define DPC_CYCLE_METRIC_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "partial_perm.hpp"

namespace dpc {

  // Geodesic distance on the n-cycle 1 - 2 - ... - n - 1, by closed form.
  class CycleMetric {
   public:
    explicit CycleMetric(std::size_t n) : _n(n) {
      if (n < 3) {
        throw usage_error("cycle graph needs n >= 3, got " + std::to_string(n));
      }
      if (n > kMaxDegree) {
        throw usage_error("cycle degree " + std::to_string(n) + " exceeds "
                          + std::to_string(kMaxDegree));
      }
    }

    std::size_t n() const noexcept {
      return _n;
    }

    std::size_t distance(Point x, Point y) const {
      check(x);
      check(y);
      std::size_t const d = x > y ? x - y : y - x;
      return d <= _n - d ? d : _n - d;
    }

    // Points at distance exactly d from x, ascending.
    std::vector<Point> sphere(Point x, std::size_t d) const {
      check(x);
      if (d < 1 || 2 * d > _n) {
        throw usage_error("sphere radius " + std::to_string(d)
                          + " outside 1..n/2");
      }
      std::vector<Point> out;
      for (Point z = 1; z <= _n; ++z) {
        if (distance(x, z) == d) {
          out.push_back(z);
        }
      }
      return out;
    }

    bool is_partial_isometry(PartialPerm const& a) const {
      if (a.degree() != _n) {
        throw usage_error("is_partial_isometry: map degree "
                          + std::to_string(a.degree()) + " vs cycle "
                          + std::to_string(_n));
      }
      auto const dom = a.domain_points();
      for (std::size_t i = 0; i < dom.size(); ++i) {
        for (std::size_t j = i + 1; j < dom.size(); ++j) {
          if (distance(dom[i], dom[j]) != distance(a[dom[i]], a[dom[j]])) {
            return false;
          }
        }
      }
      return true;
    }

   private:
    void check(Point x) const {
      if (x < 1 || x > _n) {
        throw usage_error("point " + std::to_string(x) + " outside 1.."
                          + std::to_string(_n));
      }
    }

    std::size_t _n;
  };

}  // namespace dpc

#endif  // DPC_CYCLE_METRIC_HPP_
