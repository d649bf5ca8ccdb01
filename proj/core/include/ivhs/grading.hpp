#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace ivhs {

using Exponents = std::vector<std::int32_t>;
/// Canonical integer encoding of a degree; equal keys mean equal degrees.
using DegreeKey = std::vector<std::int64_t>;

struct ExponentsHash {
  std::size_t operator()(const Exponents& e) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (auto x : e) {
      h ^= static_cast<std::uint32_t>(x);
      h *= 0x100000001b3ULL;
    }
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};

/// Total degree first, then lexicographic; x_0^k is the greatest monomial of degree k.
bool graded_lex_greater(const Exponents& a, const Exponents& b);

/// A polynomial ring with an abelian-group grading in which every graded
/// piece is finite-dimensional.
class Grading {
 public:
  virtual ~Grading() = default;

  virtual std::size_t variable_count() const = 0;
  virtual DegreeKey degree_of(std::span<const std::int32_t> exponents) const = 0;
  virtual DegreeKey add(const DegreeKey& a, const DegreeKey& b) const = 0;
  virtual DegreeKey negate(const DegreeKey& a) const = 0;
  /// All monomials of the degree, sorted by graded_lex_greater.
  virtual std::vector<Exponents> monomials(const DegreeKey& degree) const = 0;
  virtual std::string describe(const DegreeKey& degree) const;

  DegreeKey subtract(const DegreeKey& a, const DegreeKey& b) const { return add(a, negate(b)); }
  DegreeKey scale(const DegreeKey& a, std::int64_t k) const;
  DegreeKey zero() const { return degree_of(Exponents(variable_count(), 0)); }
  DegreeKey variable_degree(std::size_t j) const;
};

}  // namespace ivhs
