// Builds DPC_n for a few small n, checks the size formula and that both
// presentations define the monoid.

#include <iostream>

#include "dpc/builders.hpp"
#include "dpc/congruence.hpp"
#include "dpc/presentation.hpp"

int main() {
  for (std::size_t n = 3; n <= 6; ++n) {
    auto const m = dpc::build_by_restrictions(n);
    auto const r = dpc::verify_defines(dpc::build_R(n), m,
                                       dpc::canonical_assignment_R(n),
                                       dpc::default_slot_budget(n));
    auto const q = dpc::verify_defines(dpc::build_Q(n), m,
                                       dpc::canonical_assignment_Q(n),
                                       dpc::default_slot_budget(n));
    std::cout << "n=" << n << " |DPC_n|=" << m.size()
              << " formula=" << dpc::cardinality_formula(n)
              << " R:" << dpc::to_string(r.verdict)
              << " Q:" << dpc::to_string(q.verdict) << '\n';
  }
}
