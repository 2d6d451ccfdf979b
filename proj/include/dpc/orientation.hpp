#ifndef DPC_ORIENTATION_HPP_
#define DPC_ORIENTATION_HPP_

#include <cstddef>
#include <span>

#include "partial_perm.hpp"

namespace dpc {

  struct SequenceClass {
    bool is_cyclic     = false;
    bool is_anticyclic = false;

    bool is_oriented() const noexcept {
      return is_cyclic || is_anticyclic;
    }
  };

  // Descents and ascents counted in the cyclic reading a_{t+1} = a_1.
  inline SequenceClass classify_sequence(std::span<Point const> s) {
    std::size_t descents = 0, ascents = 0;
    std::size_t const t = s.size();
    for (std::size_t i = 0; i < t; ++i) {
      Point const a = s[i], b = s[(i + 1) % t];
      descents += a > b;
      ascents += a < b;
    }
    return {descents <= 1, ascents <= 1};
  }

  inline SequenceClass classify(PartialPerm const& a) {
    auto const seq = a.image_sequence();
    return classify_sequence(seq);
  }

  inline bool is_orientation_preserving(PartialPerm const& a) {
    return classify(a).is_cyclic;
  }

  inline bool is_orientation_reversing(PartialPerm const& a) {
    return classify(a).is_anticyclic;
  }

  inline bool is_oriented(PartialPerm const& a) {
    return classify(a).is_oriented();
  }

  inline bool is_order_preserving(PartialPerm const& a) {
    auto const seq = a.image_sequence();
    for (std::size_t i = 1; i < seq.size(); ++i) {
      if (seq[i - 1] > seq[i]) {
        return false;
      }
    }
    return true;
  }

  inline bool is_order_reversing(PartialPerm const& a) {
    auto const seq = a.image_sequence();
    for (std::size_t i = 1; i < seq.size(); ++i) {
      if (seq[i - 1] < seq[i]) {
        return false;
      }
    }
    return true;
  }

}  // namespace dpc

#endif  // DPC_ORIENTATION_HPP_
