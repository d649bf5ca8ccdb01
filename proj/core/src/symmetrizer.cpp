#include "ivhs/symmetrizer.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "ivhs/echelon.hpp"
#include "ivhs/error.hpp"
#include "ivhs/random.hpp"

namespace ivhs {

using SparseRow = std::vector<std::pair<std::size_t, Rational>>;

SparseMatrix SparseMatrix::from_dense(const RationalMatrix& m) {
  SparseMatrix s{m.rows(), m.cols(), {}};
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (sgn(m(i, j)) != 0) s.entries.emplace(std::make_pair(i, j), m(i, j));
  return s;
}

RationalMatrix SparseMatrix::to_dense() const {
  RationalMatrix m(rows, cols);
  for (const auto& [rc, v] : entries) m(rc.first, rc.second) = v;
  return m;
}

std::size_t exact_sparse_rank(const std::vector<SparseRow>& vectors, std::size_t dim) {
  SemiEchelon<RationalField> e(RationalField{}, dim);
  for (const auto& v : vectors) {
    SemiEchelon<RationalField>::SparseVector sv;
    for (const auto& [i, x] : v)
      if (sgn(x) != 0) sv.push_back({i, x});
    e.insert(sv);
  }
  return e.rank();
}

namespace {

std::size_t modular_rank(const std::vector<SparseRow>& vectors, std::size_t dim, std::uint32_t p) {
  const PrimeField f(p);
  SemiEchelon<PrimeField> e(f, dim);
  for (const auto& v : vectors) {
    SemiEchelon<PrimeField>::SparseVector sv;
    for (const auto& [i, x] : v) {
      const auto y = f.from_rational(x);
      if (y != 0) sv.push_back({i, y});
    }
    e.insert(sv);
    if (e.rank() == dim) break;
  }
  return e.rank();
}

std::vector<SparseRow> flattened_basis(const CompositionProblem& p) {
  std::vector<SparseRow> rows;
  for (const auto& a : p.e0_basis) {
    SparseRow r;
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j)
        if (sgn(a(i, j)) != 0) r.emplace_back(i * a.cols() + j, a(i, j));
    rows.push_back(std::move(r));
  }
  return rows;
}

// (Q * A) for sparse Q (g2 x g1) and A given by its rows (g1 -> list of (col, value)).
std::map<std::pair<std::size_t, std::size_t>, Rational> compose(
    const SparseMatrix& q, const std::vector<std::vector<std::pair<std::size_t, Rational>>>& a_rows) {
  std::map<std::pair<std::size_t, std::size_t>, Rational> out;
  for (const auto& [rs, v] : q.entries)
    for (const auto& [c, w] : a_rows[rs.second]) out[{rs.first, c}] += v * w;
  for (auto it = out.begin(); it != out.end();)
    it = sgn(it->second) == 0 ? out.erase(it) : std::next(it);
  return out;
}

}  // namespace

void validate(const CompositionProblem& p) {
  if (p.g0 == 0 || p.g1 == 0 || p.g2 == 0) fail_input("BadProblem", "dimensions must be positive");
  if (p.e0_basis.empty()) fail_input("BadProblem", "E0 basis is empty");
  if (p.d() > p.g0 * p.g1) fail_input("BadProblem", "d exceeds dim Hom(G0, G1)");
  for (const auto& a : p.e0_basis)
    if (a.rows() != p.g1 || a.cols() != p.g0) fail_input("BadProblem", "E0 basis matrix has the wrong shape");
  if (exact_sparse_rank(flattened_basis(p), p.g0 * p.g1) != p.d())
    fail_input("BadProblem", "E0 basis matrices are linearly dependent");
}

std::vector<SparseRow> symmetrizer_equations(const CompositionProblem& p) {
  const std::size_t d = p.d(), g0 = p.g0, g1 = p.g1, g2 = p.g2;
  auto unknown = [&](std::size_t i, std::size_t r, std::size_t s) { return (i * g2 + r) * g1 + s; };
  std::vector<SparseRow> rows;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      const auto& ai = p.e0_basis[i];
      const auto& aj = p.e0_basis[j];
      for (std::size_t r = 0; r < g2; ++r)
        for (std::size_t c = 0; c < g0; ++c) {
          SparseRow row;
          for (std::size_t s = 0; s < g1; ++s) {
            if (sgn(ai(s, c)) != 0) row.emplace_back(unknown(j, r, s), ai(s, c));
            if (sgn(aj(s, c)) != 0) row.emplace_back(unknown(i, r, s), -aj(s, c));
          }
          if (!row.empty()) rows.push_back(std::move(row));
        }
    }
  return rows;
}

SymmetrizerSpace symmetrizer_space(const CompositionProblem& p) {
  validate(p);
  const std::size_t n = p.unknowns();
  if (n > kMaxSymmetrizerUnknowns)
    fail_input("ProblemTooLarge", std::to_string(n) + " unknowns exceed the limit; use membership checks");
  const auto eqs = symmetrizer_equations(p);
  // The kernel itself can be n x n, so count it alongside the system.
  if ((eqs.size() + n) * n > kMaxDenseKernelCells)
    fail_input("ProblemTooLarge", std::to_string(eqs.size()) + " x " + std::to_string(n) +
                                      " system is too large for an exact kernel; use symmetrizer_dimension");
  RationalMatrix m(eqs.size(), n);
  for (std::size_t r = 0; r < eqs.size(); ++r)
    for (const auto& [c, v] : eqs[r]) m(r, c) += v;
  SymmetrizerSpace out;
  for (const auto& v : kernel_basis(m)) {
    std::vector<RationalMatrix> q;
    for (std::size_t i = 0; i < p.d(); ++i) {
      RationalMatrix qi(p.g2, p.g1);
      for (std::size_t r = 0; r < p.g2; ++r)
        for (std::size_t s = 0; s < p.g1; ++s) qi(r, s) = v[(i * p.g2 + r) * p.g1 + s];
      q.push_back(std::move(qi));
    }
    out.basis.push_back(std::move(q));
  }
  out.dim = out.basis.size();
  return out;
}

std::size_t symmetrizer_dimension(const CompositionProblem& p, Arithmetic arithmetic, std::uint32_t characteristic) {
  validate(p);
  const std::size_t n = p.unknowns();
  if (n > kMaxSymmetrizerUnknowns)
    fail_input("ProblemTooLarge", std::to_string(n) + " unknowns exceed the limit; use membership checks");
  const auto eqs = symmetrizer_equations(p);
  const std::size_t r = arithmetic == Arithmetic::Rational ? exact_sparse_rank(eqs, n) : modular_rank(eqs, n, characteristic);
  return n - r;
}

std::uint64_t generic_threshold(std::uint64_t g0, std::uint64_t g1) {
  if (g0 < 1) fail_input("BadProblem", "dim G0 must be positive");
  if (g1 < 1) fail_input("BadProblem", "dim G1 must be positive");
  return 3 * ((g1 - 1) / g0 + 1);
}

bool satisfies_symmetrizer(const CompositionProblem& p, const std::vector<SparseMatrix>& q) {
  if (q.size() != p.d()) fail_input("BadProblem", "need one matrix per E0 basis element");
  for (const auto& m : q)
    if (m.rows != p.g2 || m.cols != p.g1) fail_input("BadProblem", "q(a_i) must be g2 x g1");
  std::vector<std::vector<std::vector<std::pair<std::size_t, Rational>>>> rows(p.d());
  for (std::size_t i = 0; i < p.d(); ++i) {
    rows[i].resize(p.g1);
    const auto& a = p.e0_basis[i];
    for (std::size_t s = 0; s < p.g1; ++s)
      for (std::size_t c = 0; c < p.g0; ++c)
        if (sgn(a(s, c)) != 0) rows[i][s].emplace_back(c, a(s, c));
  }
  for (std::size_t i = 0; i < p.d(); ++i)
    for (std::size_t j = i + 1; j < p.d(); ++j)
      if (compose(q[j], rows[i]) != compose(q[i], rows[j])) return false;
  return true;
}

TrivialityReport randomized_triviality_report(std::size_t g0, std::size_t g1, std::size_t g2, std::size_t d,
                                              std::size_t trials, std::uint64_t seed) {
  if (g0 <= 1) fail_hypothesis("DimensionTooSmall", "the threshold statement needs dim G0 > 1");
  if (g1 == 0 || g2 == 0 || d == 0) fail_input("BadProblem", "dimensions must be positive");
  if (d > g0 * g1) fail_input("BadProblem", "d exceeds dim Hom(G0, G1)");
  if (d * g1 * g2 > kMaxSymmetrizerUnknowns) fail_input("ProblemTooLarge", "too many unknowns for random trials");
  TrivialityReport report;
  report.trials = trials;
  report.below_threshold = d < generic_threshold(g0, g1);

  std::vector<char> failed(trials, 0);
  std::vector<std::uint64_t> trial_seed(trials);
  auto run_trial = [&](std::size_t t) {
    const std::uint64_t s = mix_seed(seed, t);
    trial_seed[t] = s;
    Rng rng(s);
    CompositionProblem p{g0, g1, g2, {}};
    for (;;) {
      p.e0_basis.clear();
      for (std::size_t k = 0; k < d; ++k) {
        RationalMatrix a(g1, g0);
        for (std::size_t i = 0; i < g1; ++i)
          for (std::size_t j = 0; j < g0; ++j) a(i, j) = static_cast<long>(rng.uniform(-10, 10));
        p.e0_basis.push_back(std::move(a));
      }
      if (exact_sparse_rank(flattened_basis(p), g0 * g1) == d) break;
    }
    const auto eqs = symmetrizer_equations(p);
    const std::size_t n = p.unknowns();
    if (modular_rank(eqs, n, prime_from_seed(s)) == n) return;
    if (exact_sparse_rank(eqs, n) < n) failed[t] = 1;
  };

  const unsigned workers = std::max(1u, std::min<unsigned>(thread_budget(), static_cast<unsigned>(trials)));
  if (workers <= 1) {
    for (std::size_t t = 0; t < trials; ++t) run_trial(t);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr error;
    std::mutex error_mutex;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t t; (t = next++) < trials;) {
          try {
            run_trial(t);
          } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error) error = std::current_exception();
          }
        }
      });
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
  }
  for (std::size_t t = 0; t < trials; ++t)
    if (failed[t]) {
      ++report.failures;
      report.failing_seeds.push_back(trial_seed[t]);
    }
  return report;
}

std::vector<SparseMatrix> GeometricSymmetrizer::solution(std::size_t k) const {
  std::vector<SparseMatrix> q;
  for (const auto& m : multiplication) {
    SparseMatrix qk{m.rows, m.cols, {}};
    for (const auto& [rc, v] : m.entries)
      if (rc.first == k) qk.entries.emplace(rc, v);
    q.push_back(std::move(qk));
  }
  return q;
}

GeometricSymmetrizer geometric_symmetrizer(QuotientSample& ring, const DegreeKey& c, const DegreeKey& e) {
  if (ring.arithmetic() != Arithmetic::Rational) fail_input("ArithmeticMismatch", "geometric instances need exact arithmetic");
  const Grading& g = ring.grading();
  const DegreeKey c1 = g.add(c, e), c2 = g.add(c1, e);
  const auto alphas = ring.standard_monomials(e);
  const auto g0_basis = ring.standard_monomials(c);
  const auto g1_basis = ring.standard_monomials(c1);
  GeometricSymmetrizer out;
  out.problem.g0 = g0_basis.size();
  out.problem.g1 = g1_basis.size();
  out.problem.g2 = ring.quotient_dim(c2);
  auto product = [&](const Exponents& a, const Exponents& b, const DegreeKey& deg) {
    Exponents s(a.size());
    for (std::size_t j = 0; j < a.size(); ++j) s[j] = a[j] + b[j];
    GradedPolynomial m{deg, {}};
    m.terms.emplace(std::move(s), Rational(1));
    return ring.coordinates(m);
  };
  for (const auto& a : alphas) {
    RationalMatrix ai(out.problem.g1, out.problem.g0);
    for (std::size_t l = 0; l < g0_basis.size(); ++l) {
      const auto col = product(a, g0_basis[l], c1);
      for (std::size_t r = 0; r < col.size(); ++r) ai(r, l) = col[r];
    }
    out.e0.push_back(SparseMatrix::from_dense(ai));
    out.problem.e0_basis.push_back(std::move(ai));
    SparseMatrix mi{out.problem.g2, out.problem.g1, {}};
    for (std::size_t l = 0; l < g1_basis.size(); ++l) {
      const auto col = product(a, g1_basis[l], c2);
      for (std::size_t r = 0; r < col.size(); ++r)
        if (sgn(col[r]) != 0) mi.entries.emplace(std::make_pair(r, l), col[r]);
    }
    out.multiplication.push_back(std::move(mi));
  }
  return out;
}

}  // namespace ivhs
