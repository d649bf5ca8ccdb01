#include "ivhs/complete_intersection.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "ivhs/error.hpp"
#include "ivhs/random.hpp"

namespace ivhs {

namespace {

// Calls visit for every exponent vector of total degree k in m variables.
void for_each_composition(std::size_t m, std::int64_t k, const std::function<void(const std::vector<std::int32_t>&)>& visit) {
  std::vector<std::int32_t> e(m, 0);
  if (m == 0) {
    if (k == 0) visit(e);
    return;
  }
  std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t i, std::int64_t left) {
    if (i + 1 == m) {
      e[i] = static_cast<std::int32_t>(left);
      visit(e);
      return;
    }
    for (std::int64_t v = left; v >= 0; --v) {
      e[i] = static_cast<std::int32_t>(v);
      rec(i + 1, left - v);
    }
  };
  rec(0, k);
}

std::string join(const std::vector<std::int64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

}  // namespace

BigradedGrading::BigradedGrading(std::size_t n, std::vector<std::int64_t> degrees) : n_(n), d_(std::move(degrees)) {}

DegreeKey BigradedGrading::degree_of(std::span<const std::int32_t> e) const {
  std::int64_t p = 0, q = 0;
  for (std::size_t j = 0; j <= n_; ++j) q += e[j];
  for (std::size_t a = 0; a < d_.size(); ++a) {
    p += e[n_ + 1 + a];
    q -= e[n_ + 1 + a] * d_[a];
  }
  return {p, q};
}

std::vector<Exponents> BigradedGrading::monomials(const DegreeKey& degree) const {
  std::vector<Exponents> out;
  const std::int64_t p = degree[0], q = degree[1];
  if (p < 0) return out;
  for_each_composition(d_.size(), p, [&](const std::vector<std::int32_t>& b) {
    std::int64_t xdeg = q;
    for (std::size_t a = 0; a < d_.size(); ++a) xdeg += b[a] * d_[a];
    if (xdeg < 0) return;
    for_each_composition(n_ + 1, xdeg, [&](const std::vector<std::int32_t>& x) {
      Exponents e(x);
      e.insert(e.end(), b.begin(), b.end());
      out.push_back(std::move(e));
    });
  });
  std::sort(out.begin(), out.end(), graded_lex_greater);
  return out;
}

std::int64_t CIProblem::d_X() const {
  return std::accumulate(degrees.begin(), degrees.end(), std::int64_t{0}) - static_cast<std::int64_t>(n + 1);
}

CIProblem make_ci_problem(std::size_t n, std::vector<std::int64_t> degrees) {
  if (degrees.empty()) fail_input("BadProblem", "need at least one form");
  if (degrees.size() >= n) fail_input("BadProblem", "need c < n");
  for (auto d : degrees)
    if (d < 1) fail_input("BadProblem", "degrees must be positive");
  std::sort(degrees.rbegin(), degrees.rend());
  CIProblem p;
  p.n = n;
  p.degrees = std::move(degrees);
  return p;
}

std::vector<GradedPolynomial> fermat_ci_forms(const BigradedGrading& g) {
  std::vector<GradedPolynomial> forms;
  for (std::size_t a = 0; a < g.degrees().size(); ++a) {
    GradedPolynomial f{{0, g.degrees()[a]}, {}};
    for (std::size_t i = 0; i <= g.n(); ++i) {
      Exponents e(g.variable_count(), 0);
      e[i] = static_cast<std::int32_t>(g.degrees()[a]);
      Integer coef;
      mpz_ui_pow_ui(coef.get_mpz_t(), i + 1, a);
      f.terms.emplace(std::move(e), Rational(coef));
    }
    forms.push_back(std::move(f));
  }
  return forms;
}

std::vector<GradedPolynomial> ci_generators(const BigradedGrading& g, const std::vector<GradedPolynomial>& forms) {
  const std::size_t c = g.degrees().size();
  if (forms.size() != c) fail_input("BadProblem", "number of forms differs from number of degrees");
  for (std::size_t a = 0; a < c; ++a)
    if (forms[a].degree != DegreeKey{0, g.degrees()[a]}) fail_input("BadProblem", "form has the wrong degree");
  std::vector<GradedPolynomial> gens;
  for (std::size_t j = 0; j <= g.n(); ++j) {
    std::map<Exponents, Rational> terms;
    for (std::size_t a = 0; a < c; ++a) {
      const GradedPolynomial d = partial_derivative(g, forms[a], j);
      for (const auto& [e, v] : d.terms) {
        Exponents e2 = e;
        ++e2[g.n() + 1 + a];
        terms[e2] += v;
      }
    }
    gens.push_back(make_polynomial(g, {1, -1}, std::move(terms)));
  }
  for (const auto& f : forms) gens.push_back(f);
  return gens;
}

std::vector<RingInstance> ci_instances(const BigradedGrading& g, const CIProblem& prob, const GenericityPolicy& policy) {
  std::vector<RingInstance> out;
  const Arithmetic a = policy.resolved_arithmetic();
  auto characteristic = [&](std::uint64_t seed) { return a == Arithmetic::Modular ? prime_from_seed(seed) : 0u; };
  if (prob.forms) {
    const Arithmetic explicit_a = policy.arithmetic.value_or(Arithmetic::Rational);
    const std::uint32_t p = explicit_a == Arithmetic::Modular ? prime_from_seed(policy.seed) : 0u;
    out.push_back({{0, p, 0}, explicit_a, ci_generators(g, *prob.forms)});
    return out;
  }
  if (policy.source == SectionSource::Fermat) {
    out.push_back({{0, characteristic(policy.seed), 0}, a, ci_generators(g, fermat_ci_forms(g))});
    return out;
  }
  if (policy.samples < 1) fail_input("BadSamples", "need at least one sample");
  for (int k = 0; k < policy.samples; ++k) {
    const std::uint64_t seed = mix_seed(policy.seed, static_cast<std::uint64_t>(k));
    std::vector<GradedPolynomial> forms;
    for (std::size_t i = 0; i < g.degrees().size(); ++i)
      forms.push_back(random_section(g, DegreeKey{0, g.degrees()[i]}, policy.coeff_bound, mix_seed(seed, i)));
    out.push_back({{seed, characteristic(seed), 0}, a, ci_generators(g, forms)});
  }
  return out;
}

std::uint64_t bigraded_piece_dim(const CIProblem& prob, BigradedDegree deg, PiecePart part,
                                 const GenericityPolicy& policy) {
  const BigradedGrading g(prob.n, prob.degrees);
  if (part == PiecePart::Ambient) return g.monomials(deg.key()).size();
  std::uint64_t best = part == PiecePart::Jacobian ? 0 : UINT64_MAX;
  for (const auto& inst : ci_instances(g, prob, policy)) {
    QuotientSample ring(g, inst.generators, inst.arithmetic, inst.record.characteristic);
    if (part == PiecePart::Jacobian) best = std::max<std::uint64_t>(best, ring.ideal_dim(deg.key()));
    else best = std::min<std::uint64_t>(best, ring.quotient_dim(deg.key()));
  }
  return best;
}

std::uint64_t ci_hodge(const CIProblem& prob, std::int64_t p, const GenericityPolicy& policy) {
  const auto dim = static_cast<std::int64_t>(prob.n - prob.c());
  if (p < 0 || p > dim) fail_input("BadIndex", "need 0 <= p <= n - c");
  return bigraded_piece_dim(prob, {p, prob.d_X()}, PiecePart::Quotient, policy);
}

std::uint64_t ci_moduli(const CIProblem& prob, const GenericityPolicy& policy) {
  if (prob.d_X() < 0)
    fail_hypothesis("ModuliIdentificationUnavailable", "d(X) = " + std::to_string(prob.d_X()) + " < 0");
  return bigraded_piece_dim(prob, {1, 0}, PiecePart::Quotient, policy);
}

Certificate check_ci(const CIProblem& prob, const GenericityPolicy& policy) {
  if (prob.n < prob.c() + 3) fail_hypothesis("DimensionTooSmall", "the criterion needs dim X = n - c >= 3");
  const std::int64_t dX = prob.d_X();
  if (dX != std::accumulate(prob.degrees.begin(), prob.degrees.end(), std::int64_t{0}) - static_cast<std::int64_t>(prob.n) - 1)
    fail_internal("DegreeMismatch", "d(X) recomputation disagrees");
  if (dX < 0) fail_hypothesis("ModuliIdentificationUnavailable", "d(X) = " + std::to_string(dX) + " < 0");
  const BigradedGrading g(prob.n, prob.degrees);

  CriterionDegrees degrees;
  degrees.mu = {1, 0};
  degrees.p0_source = {1, 0};
  degrees.p0_factor = {0, dX};
  degrees.p1_factor = {1, dX};
  degrees.h_top = DegreeKey{0, dX};
  degrees.h_next = DegreeKey{1, dX};
  RingOutcome r = evaluate_rings(g, ci_instances(g, prob, policy), degrees, true);

  Certificate c;
  c.instance = {{"kind", "ci"}, {"n", std::to_string(prob.n)}, {"degrees", join(prob.degrees)}, {"d_X", std::to_string(dX)}};
  c.h_top = *r.h_top;
  c.h_next = *r.h_next;
  c.mu = r.mu;
  c.p0_injective = r.p0_injective;
  c.p0_method = P0Method::Rank;
  c.p1_nonzero = r.p1_nonzero;
  c.p1_surjective = r.p1_surjective;
  c.section_source = prob.forms ? "explicit" : to_string(policy.source);
  c.arithmetic = to_string(prob.forms ? policy.arithmetic.value_or(Arithmetic::Rational) : policy.resolved_arithmetic());
  c.seed = policy.seed;
  c.samples = std::move(r.samples);
  c.warnings = std::move(r.warnings);
  c.warnings.push_back("smoothness of X assumed (seed policy)");
  finalize(c);
  return c;
}

Integer ceil_root(const Integer& x, unsigned long k) {
  if (k == 0) fail_input("BadRoot", "root index must be positive");
  if (sgn(x) <= 0) return 0;
  Integer r;
  mpz_root(r.get_mpz_t(), x.get_mpz_t(), k);
  Integer p;
  mpz_pow_ui(p.get_mpz_t(), r.get_mpz_t(), k);
  return p == x ? r : Integer(r + 1);
}

Integer effective_bound(std::size_t n, std::size_t c) {
  if (c < 1 || c >= n) fail_input("BadProblem", "need 1 <= c < n");
  auto pow = [](unsigned long b, unsigned long e) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), b, e);
    return r;
  };
  Integer fact;
  mpz_fac_ui(fact.get_mpz_t(), n);
  const Integer n1sq = pow(n + 1, 2);
  Integer best = static_cast<unsigned long>(n);
  if (c == 1) {
    const Integer inner = fact * (3 * pow(2, n) + 4 + n1sq);
    best = std::max(best, ceil_root(inner, n));
    return best;
  }
  const Integer first = 3 * pow(n, n) * pow(c, n + 1) * pow(2, n) + 1;
  const Integer second = fact * pow(c, n) * (3 + pow(c, 2) + n1sq);
  best = std::max(best, ceil_root(first, n - c));
  best = std::max(best, ceil_root(second, c));
  return best;
}

}  // namespace ivhs
