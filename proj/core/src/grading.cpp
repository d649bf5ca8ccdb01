#include "ivhs/grading.hpp"

#include <numeric>

namespace ivhs {

bool graded_lex_greater(const Exponents& a, const Exponents& b) {
  const auto da = std::accumulate(a.begin(), a.end(), std::int64_t{0});
  const auto db = std::accumulate(b.begin(), b.end(), std::int64_t{0});
  if (da != db) return da > db;
  return a > b;
}

std::string Grading::describe(const DegreeKey& degree) const {
  std::string s = "(";
  for (std::size_t i = 0; i < degree.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(degree[i]);
  }
  return s + ")";
}

DegreeKey Grading::scale(const DegreeKey& a, std::int64_t k) const {
  DegreeKey acc = zero();
  const DegreeKey step = k >= 0 ? a : negate(a);
  for (std::int64_t i = 0; i < (k >= 0 ? k : -k); ++i) acc = add(acc, step);
  return acc;
}

DegreeKey Grading::variable_degree(std::size_t j) const {
  Exponents e(variable_count(), 0);
  e[j] = 1;
  return degree_of(e);
}

}  // namespace ivhs
