#pragma once

#include <cstdint>

#include "ivhs/jacobian.hpp"
#include "ivhs/toric.hpp"

namespace ivhs {

struct HodgeNumbers {
  std::uint64_t h_top = 0;   // h^{n-1,0}
  std::uint64_t h_next = 0;  // h^{n-2,1}
};

/// Lattice-count formulas on Delta_t = t * divisor_polytope(D):
///   h_top  = l*(Delta_t)
///   h_next = l*(2 Delta_t) - (n+1) l*(Delta_t) - sum over facets of l*(facet).
/// Interior counts come from Ehrhart reciprocity on Delta, facet counts from
/// direct enumeration on Delta_t.
HodgeNumbers hypersurface_hodge(const Fan& fan, const TorusDivisor& d, std::int64_t t);

struct HodgeSummary {
  std::size_t n = 0;
  std::int64_t t = 0;
  std::uint64_t h_top = 0;
  std::uint64_t h_next = 0;
  std::uint64_t mu = 0;
  bool vanishing_equals_full = false;
};

/// dim R(f)_{[tD]} for a generic section: the minimum over the policy's samples.
std::uint64_t moduli_dim(const ToricGrading& g, const TorusDivisor& d, std::int64_t t, const GenericityPolicy& policy);

/// Refuses n < 4, where vanishing and full cohomology are not identified.
HodgeSummary hodge_summary(const ToricGrading& g, const TorusDivisor& d, std::int64_t t, const GenericityPolicy& policy);

/// 3 * (floor((h_next - 1) / h_top) + 1); h_top = 0 is CriterionInapplicable.
std::uint64_t inequality_rhs(std::uint64_t h_top, std::uint64_t h_next);

/// Cartier, ample and t >= 1, or throws the matching hypothesis error.
void require_ample_cartier(const Fan& fan, const TorusDivisor& d, std::int64_t t);

}  // namespace ivhs
