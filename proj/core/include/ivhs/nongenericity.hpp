#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ivhs/hodge.hpp"
#include "ivhs/jacobian.hpp"
#include "ivhs/toric.hpp"

namespace ivhs {

enum class Verdict { NonGeneric, Inconclusive };
enum class P0Method { Rank, WeightedMacaulay };
/// How check_wps establishes p0-injectivity.
enum class P0Choice { Auto, Rank, WeightedMacaulay };

std::string to_string(Verdict v);
std::string to_string(P0Method m);

struct SampleRecord {
  std::uint64_t seed = 0;
  std::uint32_t characteristic = 0;  // 0 = rational arithmetic
  std::uint64_t mu = 0;
  bool operator==(const SampleRecord&) const = default;
};

/// Non-genericity verdict with every intermediate quantity.  The verdict is
/// NonGeneric iff inequality_holds && p0_injective && p1_nonzero.
struct Certificate {
  /// Ordered (key, value) description of the instance.
  std::vector<std::pair<std::string, std::string>> instance;
  std::uint64_t h_top = 0;
  std::uint64_t h_next = 0;
  std::uint64_t mu = 0;
  std::optional<std::uint64_t> rhs;  // absent when h_top = 0
  bool inequality_holds = false;
  bool p0_injective = false;
  P0Method p0_method = P0Method::Rank;
  bool p1_nonzero = false;
  std::string p1_method = "rank";
  bool p1_surjective = false;
  Verdict verdict = Verdict::Inconclusive;
  std::string section_source;
  std::string arithmetic;
  std::uint64_t seed = 0;
  std::vector<SampleRecord> samples;
  std::vector<std::string> warnings;

  bool operator==(const Certificate&) const = default;
};

/// Certificate equality ignoring the instance description.
bool same_fields(const Certificate& a, const Certificate& b);

/// JSON document; integers are decimal strings.  Round-trips exactly.
std::string to_json(const Certificate& c, int indent = 2);
Certificate certificate_from_json(const std::string& text);
std::string to_text(const Certificate& c);

/// m | c and (n+1)d - 2s - (c+e) > -s + m n.
bool weighted_macaulay_condition(const WeightSystem& w, std::int64_t d, std::int64_t c, std::int64_t e);

Certificate check_toric(const Fan& fan, const TorusDivisor& d, std::int64_t t, const GenericityPolicy& policy);

Certificate check_wps(const WeightSystem& w, std::int64_t d, const GenericityPolicy& policy,
                      P0Choice p0 = P0Choice::Auto);

struct ScanResult {
  std::vector<std::pair<std::int64_t, Certificate>> certificates;
  std::optional<std::int64_t> first_nongeneric;
};

/// check_toric for t = t_min..t_max.
ScanResult scan(const Fan& fan, const TorusDivisor& d, std::int64_t t_min, std::int64_t t_max,
                const GenericityPolicy& policy);

// ---- shared evaluation engine ------------------------------------------------------

/// One generic instance: its ring generators and provenance.
struct RingInstance {
  SampleRecord record;
  Arithmetic arithmetic = Arithmetic::Rational;
  std::vector<GradedPolynomial> generators;
};

/// Degrees at which the predicates are evaluated.
struct CriterionDegrees {
  DegreeKey mu;                   // E = R_mu
  DegreeKey p0_source, p0_factor; // R_mu -> Hom(R_factor, R_{mu+factor})
  DegreeKey p1_factor;            // R_mu (x) R_factor -> R_{mu+factor}
  std::optional<DegreeKey> h_top, h_next;  // ring-side Hodge pieces, if known
};

struct RingOutcome {
  std::uint64_t mu = 0;
  std::optional<std::uint64_t> h_top, h_next;  // minima over samples
  bool p0_injective = false;
  bool p1_nonzero = false;
  bool p1_surjective = false;
  std::vector<SampleRecord> samples;
  std::vector<std::string> warnings;
};

/// Evaluates samples in order.  p0 is skipped when `need_p0` is false; each
/// predicate stops being evaluated once a sample establishes it.
RingOutcome evaluate_rings(const Grading& g, std::vector<RingInstance> instances, const CriterionDegrees& degrees,
                           bool need_p0);

/// Fills rhs, inequality_holds and verdict, and re-verifies the verdict equation.
void finalize(Certificate& c);

}  // namespace ivhs
