#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ivhs/field.hpp"
#include "ivhs/polynomial.hpp"
#include "ivhs/toric.hpp"

namespace ivhs {

/// Quotient of a graded polynomial ring by homogeneous generators, in the
/// chosen arithmetic.  `grading` must outlive the ring.  Not thread-safe;
/// use one instance per thread.
class QuotientSample {
 public:
  /// `characteristic` is ignored for rational arithmetic.
  QuotientSample(const Grading& grading, const std::vector<GradedPolynomial>& generators, Arithmetic arithmetic,
                 std::uint32_t characteristic = 0);
  ~QuotientSample();
  QuotientSample(QuotientSample&&) noexcept;
  QuotientSample& operator=(QuotientSample&&) noexcept;

  const Grading& grading() const { return *grading_; }
  Arithmetic arithmetic() const { return arithmetic_; }
  /// 0 for rational arithmetic.
  std::uint32_t characteristic() const { return characteristic_; }

  std::size_t ambient_dim(const DegreeKey& d);
  std::size_t ideal_dim(const DegreeKey& d);
  std::size_t quotient_dim(const DegreeKey& d);
  std::vector<Exponents> standard_monomials(const DegreeKey& d);

  /// Rank of R_e -> Hom(R_c, R_{c+e}); may stop early once it equals dim R_e.
  std::size_t injectivity_rank(const DegreeKey& e, const DegreeKey& c);
  /// Dimension of the span of R_e * R_c in R_{c+e}.
  std::size_t pairing_rank(const DegreeKey& e, const DegreeKey& c);

  bool ideal_contains(const GradedPolynomial& f);
  /// Dense coordinates of the normal form in the standard basis.  Rational
  /// arithmetic only.
  RationalVector coordinates(const GradedPolynomial& f);

 private:
  struct Impl;
  template <class Field>
  struct ImplT;
  std::unique_ptr<Impl> impl_;
  const Grading* grading_;
  Arithmetic arithmetic_;
  std::uint32_t characteristic_;
};

enum class SectionSource { Random, Fermat };
std::string to_string(SectionSource s);

/// How "generic f" is realized.  Random sections are drawn `samples` times
/// from sub-seeds of `seed`; Fermat-type sections are deterministic and
/// sampled once.  Dimension outputs take the extreme value over samples.
struct GenericityPolicy {
  std::uint64_t seed = 1;
  int samples = 3;
  std::int64_t coeff_bound = 10;
  SectionSource source = SectionSource::Random;
  /// Defaults to rational for Fermat sections and modular for random ones.
  std::optional<Arithmetic> arithmetic;

  Arithmetic resolved_arithmetic() const;
  int resolved_samples() const { return source == SectionSource::Fermat ? 1 : samples; }
};

struct SectionSample {
  std::uint64_t seed = 0;        // sub-seed (0 for Fermat sections)
  Arithmetic arithmetic = Arithmetic::Rational;
  std::uint32_t characteristic = 0;
  GradedPolynomial section;
};

std::vector<SectionSample> sample_sections(const Grading& g, const DegreeKey& degree, const GenericityPolicy& policy);

/// Cap on worker threads: IVHS_THREADS if set, else hardware concurrency.
unsigned thread_budget();

// ---- Cox-ring front end ----------------------------------------------------------

struct GradedPieceBasis {
  DegreeClass degree;
  std::vector<Exponents> monomials;
};

GradedPieceBasis monomial_basis(const ToricGrading& g, const DegreeClass& beta);
GradedPolynomial random_section(const ToricGrading& g, const DegreeClass& beta, std::int64_t coeff_bound,
                                std::uint64_t seed);

/// Rank of (g_j) -> sum g_j * ds/dz_j into S_gamma.
std::size_t jacobian_piece_dim(const ToricGrading& g, const GradedPolynomial& s, const DegreeClass& gamma,
                               Arithmetic arithmetic = Arithmetic::Rational, std::uint32_t characteristic = 0);
/// dim S_gamma - jacobian_piece_dim.
std::size_t ring_piece_dim(const ToricGrading& g, const GradedPolynomial& s, const DegreeClass& gamma,
                           Arithmetic arithmetic = Arithmetic::Rational, std::uint32_t characteristic = 0);

struct MultiplicationRank {
  std::size_t rank = 0;           // of R_e -> Hom(R_c, R_{c+e})
  std::size_t source_dim = 0;     // dim R_e
  std::size_t factor_dim = 0;     // dim R_c
  std::size_t target_dim = 0;     // dim R_{c+e}
  std::size_t pairing_rank = 0;   // dim of R_e * R_c in R_{c+e}
  bool injective = false;
  bool surjective_onto = false;
};

MultiplicationRank multiplication_rank(QuotientSample& ring, const DegreeKey& e, const DegreeKey& c);
MultiplicationRank multiplication_rank(const ToricGrading& g, const GradedPolynomial& s, const DegreeClass& e,
                                       const DegreeClass& c, Arithmetic arithmetic = Arithmetic::Rational,
                                       std::uint32_t characteristic = 0);

}  // namespace ivhs
