#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ivhs/grading.hpp"
#include "ivhs/linalg.hpp"
#include "ivhs/polytope.hpp"

namespace ivhs {

using IntVector = std::vector<std::int64_t>;

/// Complete simplicial fan.  The constructor validates primitivity,
/// simpliciality and completeness (wall pairing plus a cover screen).
class Fan {
 public:
  Fan(std::size_t n, std::vector<IntVector> rays, std::vector<std::vector<std::size_t>> max_cones,
      std::string name = {});

  std::size_t dimension() const { return n_; }
  std::size_t ray_count() const { return rays_.size(); }
  const std::vector<IntVector>& rays() const { return rays_; }
  const std::vector<std::vector<std::size_t>>& max_cones() const { return cones_; }
  const std::string& name() const { return name_; }

  /// True when v lies in the closed cone spanned by the rays of max cone k.
  bool cone_contains(std::size_t k, std::span<const Rational> v) const;

 private:
  std::size_t n_;
  std::vector<IntVector> rays_;
  std::vector<std::vector<std::size_t>> cones_;
  std::string name_;
};

/// A_{n-1} = Z^r / M, presented through a Smith form of the pairing matrix
/// (rows = rays).  Classes are (free part, torsion part) with torsion
/// entries reduced modulo their invariant factors.
class ChowPresentation {
 public:
  explicit ChowPresentation(const Fan& fan);

  std::size_t ray_count() const { return r_; }
  std::size_t free_rank() const { return free_rows_.size(); }
  const std::vector<std::int64_t>& torsion_orders() const { return torsion_orders_; }
  bool has_torsion() const { return !torsion_orders_.empty(); }

  /// Image of an integer vector of length r; layout is free part then torsion part.
  DegreeKey project(std::span<const std::int64_t> x) const;
  /// Some divisor with the given class.
  IntVector lift(const DegreeKey& key) const;
  DegreeKey add(const DegreeKey& a, const DegreeKey& b) const;
  DegreeKey negate(const DegreeKey& a) const;
  DegreeKey reduce(DegreeKey key) const;

 private:
  std::size_t r_;
  std::size_t n_;
  std::vector<std::vector<Integer>> free_rows_;     // canonical free-part map
  std::vector<std::vector<Integer>> torsion_rows_;  // rows of the left Smith transform
  std::vector<std::int64_t> torsion_orders_;
  IntegerMatrix left_inverse_;                      // inverse of the left Smith transform
  IntegerMatrix free_transform_inverse_;            // undoes the Hermite canonicalization
  std::vector<std::size_t> torsion_index_;          // Smith rows carrying torsion
};

class DegreeClass {
 public:
  DegreeClass(std::shared_ptr<const ChowPresentation> presentation, DegreeKey key);

  std::span<const std::int64_t> free_part() const;
  std::span<const std::int64_t> torsion_part() const;
  const DegreeKey& key() const { return key_; }
  const std::shared_ptr<const ChowPresentation>& presentation() const { return pres_; }

  DegreeClass operator+(const DegreeClass& o) const;
  DegreeClass operator-(const DegreeClass& o) const;
  DegreeClass operator*(std::int64_t k) const;
  bool operator==(const DegreeClass& o) const { return pres_ == o.pres_ && key_ == o.key_; }
  bool is_zero() const;
  std::string to_string() const;

 private:
  std::shared_ptr<const ChowPresentation> pres_;
  DegreeKey key_;
};

struct TorusDivisor {
  IntVector coefficients;
};

/// Weights (q_0, ..., q_n) of a weighted projective space.
class WeightSystem {
 public:
  explicit WeightSystem(std::vector<std::int64_t> weights);

  const std::vector<std::int64_t>& weights() const { return q_; }
  std::size_t dimension() const { return q_.size() - 1; }
  /// lcm(q_1, ..., q_n).
  std::int64_t m() const { return m_; }
  /// q_0 + ... + q_n.
  std::int64_t s() const { return s_; }
  std::string to_string() const;

 private:
  std::vector<std::int64_t> q_;
  std::int64_t m_ = 1, s_ = 0;
};

/// Fan together with its Chow presentation; the Cox ring grading.
class ToricGrading final : public Grading {
 public:
  explicit ToricGrading(Fan fan);

  const Fan& fan() const { return fan_; }
  const std::shared_ptr<const ChowPresentation>& presentation() const { return pres_; }

  std::size_t variable_count() const override { return fan_.ray_count(); }
  DegreeKey degree_of(std::span<const std::int32_t> exponents) const override;
  DegreeKey add(const DegreeKey& a, const DegreeKey& b) const override { return pres_->add(a, b); }
  DegreeKey negate(const DegreeKey& a) const override { return pres_->negate(a); }
  std::vector<Exponents> monomials(const DegreeKey& degree) const override;

  DegreeClass degree_class(const DegreeKey& key) const { return DegreeClass(pres_, key); }

 private:
  Fan fan_;
  std::shared_ptr<const ChowPresentation> pres_;
};

std::shared_ptr<const ChowPresentation> chow_presentation(const Fan& fan);

DegreeClass monomial_degree(const ToricGrading& g, std::span<const std::int64_t> exponents);
DegreeClass divisor_class(const ToricGrading& g, const TorusDivisor& d);
/// deg(z_1 ... z_r).
DegreeClass beta0(const ToricGrading& g);

struct CartierData {
  bool cartier = false;
  /// u(sigma) per max cone with <u, ray_j> = -a_j on the cone's rays.
  std::vector<IntVector> witness;
};
CartierData is_cartier(const Fan& fan, const TorusDivisor& d);

bool is_ample_wps(const WeightSystem& w, std::int64_t d);
/// Strict convexity of the support function: for every max cone sigma and
/// ray j outside it, <u(sigma), n_j> + a_j > 0.
bool is_ample_toric(const Fan& fan, const TorusDivisor& d);

/// {m : <m, ray_j> + a_j >= 0 for all j}.
LatticePolytope divisor_polytope(const Fan& fan, const TorusDivisor& d);

/// Rays f_0 = (-q_1, ..., -q_n), f_j = e_j; max cones are all n-subsets.
Fan wps_fan(const WeightSystem& w);

}  // namespace ivhs
