#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "ivhs/grading.hpp"
#include "ivhs/linalg.hpp"

namespace ivhs {

/// Homogeneous polynomial with exact rational coefficients.  No zero
/// coefficients are stored; the zero polynomial still carries a degree.
struct GradedPolynomial {
  DegreeKey degree;
  std::map<Exponents, Rational> terms;

  bool is_zero() const { return terms.empty(); }
  std::size_t size() const { return terms.size(); }
  bool operator==(const GradedPolynomial&) const = default;
};

/// Builds a polynomial, dropping zero terms and checking that every
/// monomial has the stated degree (InvalidInput/NotHomogeneous otherwise).
GradedPolynomial make_polynomial(const Grading& g, DegreeKey degree, std::map<Exponents, Rational> terms);

/// One uniform coefficient from [-bound, bound] \ {0} per monomial of the
/// degree, drawn in basis order.  Throws EmptyGradedPiece if there are none.
GradedPolynomial random_section(const Grading& g, const DegreeKey& degree, std::int64_t coeff_bound, std::uint64_t seed);

/// Sum of the pure powers z_j^{k_j} of the degree; throws FermatUnavailable
/// unless every variable has such a power.
GradedPolynomial fermat_section(const Grading& g, const DegreeKey& degree);

GradedPolynomial partial_derivative(const Grading& g, const GradedPolynomial& f, std::size_t var);

/// All partial derivatives, in variable order.
std::vector<GradedPolynomial> jacobian_generators(const Grading& g, const GradedPolynomial& f);

std::string to_string(const GradedPolynomial& f);

}  // namespace ivhs
