#include "ivhs/jacobian.hpp"

#include <cstdlib>
#include <thread>

#include "ivhs/quotient_ring.hpp"
#include "ivhs/random.hpp"

namespace ivhs {

struct QuotientSample::Impl {
  virtual ~Impl() = default;
  virtual std::size_t ambient_dim(const DegreeKey& d) = 0;
  virtual std::size_t ideal_dim(const DegreeKey& d) = 0;
  virtual std::size_t quotient_dim(const DegreeKey& d) = 0;
  virtual std::vector<Exponents> standard_monomials(const DegreeKey& d) = 0;
  virtual std::size_t injectivity_rank(const DegreeKey& e, const DegreeKey& c) = 0;
  virtual std::size_t pairing_rank(const DegreeKey& e, const DegreeKey& c) = 0;
  virtual bool ideal_contains(const GradedPolynomial& f) = 0;
  virtual RationalVector coordinates(const GradedPolynomial& f) = 0;
};

template <class Field>
struct QuotientSample::ImplT final : QuotientSample::Impl {
  QuotientRing<Field> ring;

  ImplT(const Grading& g, const std::vector<GradedPolynomial>& gens, Field field) : ring(g, gens, std::move(field)) {}

  std::size_t ambient_dim(const DegreeKey& d) override { return ring.piece(d).ambient_dim(); }
  std::size_t ideal_dim(const DegreeKey& d) override { return ring.piece(d).ideal_dim(); }
  std::size_t quotient_dim(const DegreeKey& d) override { return ring.piece(d).quotient_dim(); }
  std::vector<Exponents> standard_monomials(const DegreeKey& d) override {
    auto& p = ring.piece(d);
    std::vector<Exponents> out;
    for (auto i : p.standard) out.push_back(p.monomials[i]);
    return out;
  }
  std::size_t injectivity_rank(const DegreeKey& e, const DegreeKey& c) override { return ring.injectivity_rank(e, c); }
  std::size_t pairing_rank(const DegreeKey& e, const DegreeKey& c) override { return ring.pairing_rank(e, c); }
  bool ideal_contains(const GradedPolynomial& f) override { return ring.normal_form(f).empty(); }
  RationalVector coordinates(const GradedPolynomial& f) override {
    if constexpr (std::is_same_v<Field, RationalField>) {
      RationalVector out(ring.piece(f.degree).quotient_dim(), 0);
      for (auto& e : ring.normal_form(f)) out[e.index] = std::move(e.value);
      return out;
    } else {
      fail_internal("ArithmeticMismatch", "rational coordinates requested from a modular ring");
    }
  }
};

QuotientSample::QuotientSample(const Grading& grading, const std::vector<GradedPolynomial>& generators,
                               Arithmetic arithmetic, std::uint32_t characteristic)
    : grading_(&grading), arithmetic_(arithmetic), characteristic_(arithmetic == Arithmetic::Rational ? 0 : characteristic) {
  if (arithmetic == Arithmetic::Rational)
    impl_ = std::make_unique<ImplT<RationalField>>(grading, generators, RationalField{});
  else
    impl_ = std::make_unique<ImplT<PrimeField>>(grading, generators, PrimeField(characteristic));
}

QuotientSample::~QuotientSample() = default;
QuotientSample::QuotientSample(QuotientSample&&) noexcept = default;
QuotientSample& QuotientSample::operator=(QuotientSample&&) noexcept = default;

std::size_t QuotientSample::ambient_dim(const DegreeKey& d) { return impl_->ambient_dim(d); }
std::size_t QuotientSample::ideal_dim(const DegreeKey& d) { return impl_->ideal_dim(d); }
std::size_t QuotientSample::quotient_dim(const DegreeKey& d) { return impl_->quotient_dim(d); }
std::vector<Exponents> QuotientSample::standard_monomials(const DegreeKey& d) { return impl_->standard_monomials(d); }
std::size_t QuotientSample::injectivity_rank(const DegreeKey& e, const DegreeKey& c) {
  return impl_->injectivity_rank(e, c);
}
std::size_t QuotientSample::pairing_rank(const DegreeKey& e, const DegreeKey& c) { return impl_->pairing_rank(e, c); }
bool QuotientSample::ideal_contains(const GradedPolynomial& f) { return impl_->ideal_contains(f); }
RationalVector QuotientSample::coordinates(const GradedPolynomial& f) { return impl_->coordinates(f); }

std::string to_string(SectionSource s) { return s == SectionSource::Random ? "random" : "fermat"; }

Arithmetic GenericityPolicy::resolved_arithmetic() const {
  if (arithmetic) return *arithmetic;
  return source == SectionSource::Fermat ? Arithmetic::Rational : Arithmetic::Modular;
}

std::vector<SectionSample> sample_sections(const Grading& g, const DegreeKey& degree, const GenericityPolicy& policy) {
  if (policy.samples < 1) fail_input("BadSamples", "need at least one sample");
  std::vector<SectionSample> out;
  const Arithmetic a = policy.resolved_arithmetic();
  if (policy.source == SectionSource::Fermat) {
    SectionSample s;
    s.arithmetic = a;
    s.characteristic = a == Arithmetic::Modular ? prime_from_seed(policy.seed) : 0;
    s.section = fermat_section(g, degree);
    out.push_back(std::move(s));
    return out;
  }
  for (int k = 0; k < policy.samples; ++k) {
    SectionSample s;
    s.seed = mix_seed(policy.seed, static_cast<std::uint64_t>(k));
    s.arithmetic = a;
    s.characteristic = a == Arithmetic::Modular ? prime_from_seed(s.seed) : 0;
    s.section = random_section(g, degree, policy.coeff_bound, s.seed);
    out.push_back(std::move(s));
  }
  return out;
}

unsigned thread_budget() {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  if (const char* env = std::getenv("IVHS_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  return hw;
}

GradedPieceBasis monomial_basis(const ToricGrading& g, const DegreeClass& beta) {
  return {beta, g.monomials(beta.key())};
}

GradedPolynomial random_section(const ToricGrading& g, const DegreeClass& beta, std::int64_t coeff_bound,
                                std::uint64_t seed) {
  return random_section(static_cast<const Grading&>(g), beta.key(), coeff_bound, seed);
}

std::size_t jacobian_piece_dim(const ToricGrading& g, const GradedPolynomial& s, const DegreeClass& gamma,
                               Arithmetic arithmetic, std::uint32_t characteristic) {
  QuotientSample ring(g, jacobian_generators(g, s), arithmetic, characteristic);
  return ring.ideal_dim(gamma.key());
}

std::size_t ring_piece_dim(const ToricGrading& g, const GradedPolynomial& s, const DegreeClass& gamma,
                           Arithmetic arithmetic, std::uint32_t characteristic) {
  QuotientSample ring(g, jacobian_generators(g, s), arithmetic, characteristic);
  return ring.quotient_dim(gamma.key());
}

MultiplicationRank multiplication_rank(QuotientSample& ring, const DegreeKey& e, const DegreeKey& c) {
  MultiplicationRank out;
  out.source_dim = ring.quotient_dim(e);
  out.factor_dim = ring.quotient_dim(c);
  out.target_dim = ring.quotient_dim(ring.grading().add(e, c));
  out.rank = ring.injectivity_rank(e, c);
  out.pairing_rank = ring.pairing_rank(e, c);
  out.injective = out.rank == out.source_dim;
  out.surjective_onto = out.pairing_rank == out.target_dim;
  return out;
}

MultiplicationRank multiplication_rank(const ToricGrading& g, const GradedPolynomial& s, const DegreeClass& e,
                                       const DegreeClass& c, Arithmetic arithmetic, std::uint32_t characteristic) {
  QuotientSample ring(g, jacobian_generators(g, s), arithmetic, characteristic);
  return multiplication_rank(ring, e.key(), c.key());
}

}  // namespace ivhs
