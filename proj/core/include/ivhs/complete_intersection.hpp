#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "ivhs/jacobian.hpp"
#include "ivhs/nongenericity.hpp"

namespace ivhs {

/// C[x_0..x_n, mu_1..mu_c] with deg x_j = (0,1) and deg mu_a = (1,-d_a).
/// Variables are ordered x_0..x_n, mu_1..mu_c; degree keys are (p, q).
class BigradedGrading final : public Grading {
 public:
  BigradedGrading(std::size_t n, std::vector<std::int64_t> degrees);

  std::size_t n() const { return n_; }
  const std::vector<std::int64_t>& degrees() const { return d_; }

  std::size_t variable_count() const override { return n_ + 1 + d_.size(); }
  DegreeKey degree_of(std::span<const std::int32_t> exponents) const override;
  DegreeKey add(const DegreeKey& a, const DegreeKey& b) const override { return {a[0] + b[0], a[1] + b[1]}; }
  DegreeKey negate(const DegreeKey& a) const override { return {-a[0], -a[1]}; }
  std::vector<Exponents> monomials(const DegreeKey& degree) const override;

 private:
  std::size_t n_;
  std::vector<std::int64_t> d_;
};

struct BigradedDegree {
  std::int64_t p = 0;  // mu-degree
  std::int64_t q = 0;  // x-degree after the twist
  DegreeKey key() const { return {p, q}; }
};

/// Complete intersection of c hypersurfaces of degrees d_1 >= ... >= d_c in P^n.
struct CIProblem {
  std::size_t n = 0;
  std::vector<std::int64_t> degrees;
  /// Explicit forms of bidegree (0, d_a); when absent, forms follow the policy.
  std::optional<std::vector<GradedPolynomial>> forms;

  std::size_t c() const { return degrees.size(); }
  /// sum d_a - (n+1).
  std::int64_t d_X() const;
};

/// Validates 1 <= c < n and positive degrees; sorts degrees decreasingly.
CIProblem make_ci_problem(std::size_t n, std::vector<std::int64_t> degrees);

/// F_a = sum_i (i+1)^(a-1) x_i^(d_a).
std::vector<GradedPolynomial> fermat_ci_forms(const BigradedGrading& g);

/// Generators of the Jacobian ideal of F = sum mu_a F_a: the x-partials
/// (bidegree (1,-1)) followed by the F_a (bidegree (0, d_a)).
std::vector<GradedPolynomial> ci_generators(const BigradedGrading& g, const std::vector<GradedPolynomial>& forms);

/// Ring instances for the problem under the policy (explicit forms give one).
std::vector<RingInstance> ci_instances(const BigradedGrading& g, const CIProblem& prob, const GenericityPolicy& policy);

enum class PiecePart { Ambient, Jacobian, Quotient };

/// Ambient count, Jacobian rank (max over samples) or quotient dimension (min).
std::uint64_t bigraded_piece_dim(const CIProblem& prob, BigradedDegree deg, PiecePart part,
                                 const GenericityPolicy& policy = {});

/// Primitive h^{n-c-p,p} = dim R_(p, d(X)), for 0 <= p <= n-c.
std::uint64_t ci_hodge(const CIProblem& prob, std::int64_t p, const GenericityPolicy& policy = {});

/// dim R_(1,0); ModuliIdentificationUnavailable when d(X) < 0.
std::uint64_t ci_moduli(const CIProblem& prob, const GenericityPolicy& policy = {});

Certificate check_ci(const CIProblem& prob, const GenericityPolicy& policy = {});

/// Smallest integer >= the effective bound on d(X), with exact integer roots.
Integer effective_bound(std::size_t n, std::size_t c);

/// Smallest y >= 0 with y^k >= x.
Integer ceil_root(const Integer& x, unsigned long k);

}  // namespace ivhs
