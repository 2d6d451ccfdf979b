#ifndef DPC_TESTS_HELPERS_HPP_
#define DPC_TESTS_HELPERS_HPP_

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "dpc/partial_perm.hpp"

namespace dpc::test {

  // Uniform-ish random partial injection: random domain subset, random
  // injective images.
  inline PartialPerm random_partial_perm(std::size_t n, std::mt19937& rng) {
    std::vector<Point> pts(n);
    std::iota(pts.begin(), pts.end(), 1u);
    std::vector<Point> dom;
    for (Point x : pts) {
      if (rng() & 1u) {
        dom.push_back(x);
      }
    }
    std::shuffle(pts.begin(), pts.end(), rng);
    std::vector<Point> img(pts.begin(), pts.begin() + dom.size());
    return PartialPerm(n, dom, img);
  }

}  // namespace dpc::test

#endif  // DPC_TESTS_HELPERS_HPP_
