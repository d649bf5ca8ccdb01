#include "ivhs/polynomial.hpp"

#include "ivhs/error.hpp"
#include "ivhs/random.hpp"

namespace ivhs {

GradedPolynomial make_polynomial(const Grading& g, DegreeKey degree, std::map<Exponents, Rational> terms) {
  GradedPolynomial f{std::move(degree), {}};
  for (auto& [e, c] : terms) {
    if (sgn(c) == 0) continue;
    if (e.size() != g.variable_count()) fail_input("BadExponent", "exponent vector has wrong length");
    for (auto x : e)
      if (x < 0) fail_input("BadExponent", "negative exponent");
    if (g.degree_of(e) != f.degree) fail_input("NotHomogeneous", "monomial of the wrong degree");
    f.terms.emplace(e, std::move(c));
  }
  return f;
}

GradedPolynomial random_section(const Grading& g, const DegreeKey& degree, std::int64_t coeff_bound,
                                std::uint64_t seed) {
  if (coeff_bound < 1) fail_input("BadBound", "coefficient bound must be positive");
  const auto basis = g.monomials(degree);
  if (basis.empty()) fail_input("EmptyGradedPiece", "no monomials of degree " + g.describe(degree));
  Rng rng(seed);
  GradedPolynomial f{degree, {}};
  for (const auto& e : basis) f.terms.emplace(e, Rational(static_cast<long>(rng.nonzero(coeff_bound))));
  return f;
}

GradedPolynomial fermat_section(const Grading& g, const DegreeKey& degree) {
  GradedPolynomial f{degree, {}};
  std::vector<bool> seen(g.variable_count(), false);
  for (const auto& e : g.monomials(degree)) {
    std::size_t support = 0, var = 0;
    for (std::size_t j = 0; j < e.size(); ++j)
      if (e[j] != 0) ++support, var = j;
    if (support == 1) {
      seen[var] = true;
      f.terms.emplace(e, Rational(1));
    }
  }
  for (std::size_t j = 0; j < seen.size(); ++j)
    if (!seen[j])
      fail_input("FermatUnavailable", "no pure power of variable " + std::to_string(j) + " in degree " + g.describe(degree));
  return f;
}

GradedPolynomial partial_derivative(const Grading& g, const GradedPolynomial& f, std::size_t var) {
  if (var >= g.variable_count()) fail_input("BadVariable", "variable index out of range");
  GradedPolynomial d{g.subtract(f.degree, g.variable_degree(var)), {}};
  for (const auto& [e, c] : f.terms) {
    if (e[var] == 0) continue;
    Exponents e2 = e;
    --e2[var];
    d.terms.emplace(std::move(e2), c * e[var]);
  }
  return d;
}

std::vector<GradedPolynomial> jacobian_generators(const Grading& g, const GradedPolynomial& f) {
  std::vector<GradedPolynomial> out;
  for (std::size_t j = 0; j < g.variable_count(); ++j) out.push_back(partial_derivative(g, f, j));
  return out;
}

std::string to_string(const GradedPolynomial& f) {
  if (f.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (auto it = f.terms.rbegin(); it != f.terms.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string coef = c.get_str();
    if (!first) s += sgn(c) < 0 ? " - " : " + ";
    else if (sgn(c) < 0) s += "-";
    if (sgn(c) < 0) coef = Rational(-c).get_str();
    std::string mono;
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (e[j] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "z" + std::to_string(j);
      if (e[j] > 1) mono += "^" + std::to_string(e[j]);
    }
    if (mono.empty()) s += coef;
    else if (coef == "1") s += mono;
    else s += coef + "*" + mono;
    first = false;
  }
  return s;
}

}  // namespace ivhs
