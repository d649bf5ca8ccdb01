#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "ivhs/field.hpp"
#include "ivhs/jacobian.hpp"
#include "ivhs/linalg.hpp"

namespace ivhs {

/// Exact sparse matrix keyed by (row, col); no zero entries stored.
struct SparseMatrix {
  std::size_t rows = 0, cols = 0;
  std::map<std::pair<std::size_t, std::size_t>, Rational> entries;

  static SparseMatrix from_dense(const RationalMatrix& m);
  RationalMatrix to_dense() const;
  bool operator==(const SparseMatrix&) const = default;
};

/// phi: E0 x Hom(G1, G2) -> Hom(G0, G2), (a, q) -> q o a, for
/// E0 = span(e0_basis) inside Hom(G0, G1).  Basis elements are g1 x g0.
struct CompositionProblem {
  std::size_t g0 = 0, g1 = 0, g2 = 0;
  std::vector<RationalMatrix> e0_basis;

  std::size_t d() const { return e0_basis.size(); }
  /// d * g1 * g2: the coordinates of q(a_1), ..., q(a_d).
  std::size_t unknowns() const { return d() * g1 * g2; }
};

/// Shapes, d <= g0 g1 and linear independence of the basis.
void validate(const CompositionProblem& p);

inline constexpr std::size_t kMaxSymmetrizerUnknowns = 200000;
/// Cap on (equations + unknowns) x unknowns for the dense exact kernel.
inline constexpr std::size_t kMaxDenseKernelCells = 4000000;

/// Rows Q_j A_i - Q_i A_j = 0 for i < j; unknown (i, r, s) is Q_i(r, s) at
/// index (i * g2 + r) * g1 + s.
std::vector<std::vector<std::pair<std::size_t, Rational>>> symmetrizer_equations(const CompositionProblem& p);

struct SymmetrizerSpace {
  std::size_t dim = 0;
  /// Each element lists q(a_1), ..., q(a_d) as g2 x g1 matrices.
  std::vector<std::vector<RationalMatrix>> basis;
};

/// Exact kernel of the symmetrizer equations.  Refuses more than
/// kMaxSymmetrizerUnknowns unknowns or a system larger than
/// kMaxDenseKernelCells (ProblemTooLarge).
SymmetrizerSpace symmetrizer_space(const CompositionProblem& p);

/// dim Symm via the rank of the equations; modular ranks give an upper bound on dim.
std::size_t symmetrizer_dimension(const CompositionProblem& p, Arithmetic arithmetic, std::uint32_t characteristic = 0);

/// 3 * (floor((g1 - 1) / g0) + 1).
std::uint64_t generic_threshold(std::uint64_t g0, std::uint64_t g1);

/// Exact check that q(a_j) o a_i = q(a_i) o a_j for all i < j.
bool satisfies_symmetrizer(const CompositionProblem& p, const std::vector<SparseMatrix>& q);

struct TrivialityReport {
  std::size_t trials = 0;
  std::size_t failures = 0;
  std::vector<std::uint64_t> failing_seeds;
  bool below_threshold = false;  // d < generic_threshold: failures carry no meaning
};

/// Samples `trials` random E0 (entries in [-10, 10]) and counts those with
/// Symm != 0.  A trial is trivial when the rank modulo a prime already equals
/// the number of unknowns; otherwise the dimension is recomputed exactly.
TrivialityReport randomized_triviality_report(std::size_t g0, std::size_t g1, std::size_t g2, std::size_t d,
                                              std::size_t trials, std::uint64_t seed);

/// G0 = R_c, G1 = R_{c+e}, G2 = R_{c+2e}, E0 = image of R_e in Hom(G0, G1).
/// Every q = P o mult, with P any endomorphism of G2, is a symmetrizer.
struct GeometricSymmetrizer {
  CompositionProblem problem;
  std::vector<SparseMatrix> e0;              // sparse copies of problem.e0_basis
  std::vector<SparseMatrix> multiplication;  // a_i : G1 -> G2

  std::size_t solution_count() const { return problem.g2; }
  /// q(a_i) = P_k o mult(a_i), P_k the k-th coordinate projection of G2.
  std::vector<SparseMatrix> solution(std::size_t k) const;
};

/// Needs a ring in rational arithmetic.
GeometricSymmetrizer geometric_symmetrizer(QuotientSample& ring, const DegreeKey& c, const DegreeKey& e);

/// Exact rank of a family of sparse vectors of the given dimension.
std::size_t exact_sparse_rank(const std::vector<std::vector<std::pair<std::size_t, Rational>>>& vectors, std::size_t dim);

}  // namespace ivhs
