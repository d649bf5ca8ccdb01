#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ivhs/linalg.hpp"

namespace ivhs {

using LatticePoint = std::vector<std::int64_t>;

/// One half-space  <normal, x> + constant >= 0.
struct Inequality {
  std::vector<std::int64_t> normal;
  std::int64_t constant = 0;

  std::int64_t evaluate(std::span<const std::int64_t> x) const;
  bool operator==(const Inequality&) const = default;
};

/// Bounded polyhedron given by integral inequalities.  Construction
/// verifies boundedness, drops redundant inequalities, finds the implicit
/// equalities and caches an integer bounding box.
class LatticePolytope {
 public:
  LatticePolytope(std::size_t ambient_dim, std::vector<Inequality> inequalities);

  std::size_t ambient_dimension() const { return ambient_dim_; }
  /// Irredundant inequalities, in input order.
  const std::vector<Inequality>& inequalities() const { return inequalities_; }
  /// Inequalities exactly as given, including redundant ones.
  const std::vector<Inequality>& original_inequalities() const { return original_; }
  bool is_empty() const { return empty_; }
  /// Affine dimension; -1 for the empty polytope.
  int dimension() const { return dimension_; }
  bool is_full_dimensional() const { return dimension_ == static_cast<int>(ambient_dim_); }
  /// Per-coordinate integer interval [lo, hi] containing every lattice point.
  const std::vector<std::pair<std::int64_t, std::int64_t>>& bounding_box() const { return box_; }
  /// Indices (into inequalities()) of those that hold with equality on the polytope.
  const std::vector<std::size_t>& implicit_equalities() const { return implicit_; }

  /// t * P, realized by scaling every constant.
  LatticePolytope dilate(std::int64_t t) const;
  LatticePolytope translate(std::span<const std::int64_t> shift) const;

 private:
  std::size_t ambient_dim_;
  std::vector<Inequality> original_;
  std::vector<Inequality> inequalities_;
  std::vector<std::size_t> implicit_;
  std::vector<std::pair<std::int64_t, std::int64_t>> box_;
  bool empty_ = false;
  int dimension_ = -1;
};

/// Lattice points of p (strict = relative interior), in lexicographic order.
std::vector<LatticePoint> lattice_points(const LatticePolytope& p, bool strict);
std::uint64_t count_lattice_points(const LatticePolytope& p, bool strict);

/// Calls visit for every integer point of an arbitrary inequality system
/// that is known to be bounded.
void for_each_integer_point(std::size_t dim, std::span<const Inequality> system,
                            const std::function<void(std::span<const std::int64_t>)>& visit);

/// E(t) = #(tP ∩ Z^n), interpolated from t = 0..dim and checked at dim+1, dim+2.
RationalPolynomial ehrhart_polynomial(const LatticePolytope& p);

/// (-1)^dim E(-t): the number of relative-interior lattice points of tP.
std::uint64_t interior_count(const LatticePolytope& p, std::int64_t t);
std::uint64_t interior_count(const LatticePolytope& p, const RationalPolynomial& ehrhart, std::int64_t t);

/// Relative-interior lattice point count of every facet of a full-dimensional polytope.
std::vector<std::uint64_t> facet_interior_counts(const LatticePolytope& p);

/// Coefficient of t^n (n = ambient dimension) of the Ehrhart polynomial:
/// the lattice volume, zero unless p is full-dimensional.
Rational normalized_volume(const LatticePolytope& p);

}  // namespace ivhs
