#include "spinlift/spin.hpp"

namespace spinlift {

double orthogonality_defect(const OrthogonalDecomposition& d) {
  const Metric& g = d.plus.metric();
  const auto [a, b] = simple_factors(d.plus);
  const auto [u, v] = simple_factors(d.minus);
  return inner(g, a, v) * inner(g, b, u) - inner(g, a, u) * inner(g, b, v);
}

}  // namespace spinlift
