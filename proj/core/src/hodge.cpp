#include "ivhs/hodge.hpp"

#include <algorithm>
#include <numeric>

#include "ivhs/error.hpp"

namespace ivhs {

void require_ample_cartier(const Fan& fan, const TorusDivisor& d, std::int64_t t) {
  if (t < 1) fail_input("BadDilation", "t must be at least 1");
  if (!is_cartier(fan, d).cartier) fail_hypothesis("NotCartier", "divisor is not Cartier");
  if (!is_ample_toric(fan, d)) fail_hypothesis("NotAmple", "divisor is not ample");
}

HodgeNumbers hypersurface_hodge(const Fan& fan, const TorusDivisor& d, std::int64_t t) {
  require_ample_cartier(fan, d, t);
  const LatticePolytope delta = divisor_polytope(fan, d);
  const RationalPolynomial ehrhart = ehrhart_polynomial(delta);
  const std::uint64_t top = interior_count(delta, ehrhart, t);
  const std::uint64_t doubled = interior_count(delta, ehrhart, 2 * t);
  const auto facets = facet_interior_counts(delta.dilate(t));
  const std::uint64_t facet_sum = std::accumulate(facets.begin(), facets.end(), std::uint64_t{0});
  const auto n1 = static_cast<std::uint64_t>(fan.dimension() + 1);
  if (doubled < n1 * top + facet_sum) fail_internal("NegativeHodgeNumber", "h^{n-2,1} formula went negative");
  return {top, doubled - n1 * top - facet_sum};
}

std::uint64_t moduli_dim(const ToricGrading& g, const TorusDivisor& d, std::int64_t t, const GenericityPolicy& policy) {
  if (g.fan().dimension() < 4) fail_hypothesis("DimensionTooSmall", "the criterion needs n >= 4");
  require_ample_cartier(g.fan(), d, t);
  const DegreeKey degree = (divisor_class(g, d) * t).key();
  std::uint64_t best = UINT64_MAX;
  for (const auto& s : sample_sections(g, degree, policy)) {
    QuotientSample ring(g, jacobian_generators(g, s.section), s.arithmetic, s.characteristic);
    best = std::min<std::uint64_t>(best, ring.quotient_dim(degree));
  }
  return best;
}

HodgeSummary hodge_summary(const ToricGrading& g, const TorusDivisor& d, std::int64_t t, const GenericityPolicy& policy) {
  if (g.fan().dimension() < 4)
    fail_hypothesis("DimensionTooSmall", "vanishing and full cohomology are identified only for n >= 4");
  const HodgeNumbers h = hypersurface_hodge(g.fan(), d, t);
  HodgeSummary s;
  s.n = g.fan().dimension();
  s.t = t;
  s.h_top = h.h_top;
  s.h_next = h.h_next;
  s.mu = moduli_dim(g, d, t, policy);
  s.vanishing_equals_full = true;
  return s;
}

std::uint64_t inequality_rhs(std::uint64_t h_top, std::uint64_t h_next) {
  if (h_top == 0) fail_hypothesis("CriterionInapplicable", "h^{n-1,0} = 0 leaves the inequality undefined");
  // floor((h_next - 1) / h_top) is -1 when h_next = 0.
  const std::int64_t q = h_next == 0 ? -1 : static_cast<std::int64_t>((h_next - 1) / h_top);
  return static_cast<std::uint64_t>(3 * (q + 1));
}

}  // namespace ivhs
