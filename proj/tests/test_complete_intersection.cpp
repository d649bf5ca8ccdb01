#include <doctest.h>

#include "fans.hpp"
#include "ivhs/complete_intersection.hpp"
#include "ivhs/error.hpp"
#include "ivhs/nongenericity.hpp"
#include "oracles.hpp"

using namespace ivhs;

namespace {

GenericityPolicy fermat() {
  GenericityPolicy p;
  p.source = SectionSource::Fermat;
  return p;
}

std::uint64_t jacobian_hilbert(long d, long k) {
  return oracle::u64(oracle::hilbert_coefficient({d - 1, d - 1, d - 1, d - 1, d - 1}, {1, 1, 1, 1, 1}, k));
}

}  // namespace

TEST_SUITE("complete_intersection") {
  TEST_CASE("problem validation and d(X)") {
    const CIProblem p = make_ci_problem(5, {3, 4});
    CHECK(p.degrees == std::vector<std::int64_t>{4, 3});
    CHECK(p.d_X() == 1);
    CHECK(make_ci_problem(6, {2, 2, 2}).d_X() == -1);
    CHECK_THROWS_AS(make_ci_problem(3, {2, 2, 2}), Error);
    CHECK_THROWS_AS(make_ci_problem(4, {}), Error);
    CHECK_THROWS_AS(make_ci_problem(4, {0}), Error);
  }

  TEST_CASE("bigraded monomial counts by stars and bars") {
    const CIProblem p = make_ci_problem(5, {3, 4});
    for (std::int64_t a = 0; a <= 2; ++a)
      for (std::int64_t q = -2; q <= 3; ++q) {
        mpz_class expected = 0;
        // mu exponents (b1, b2) with b1 + b2 = a, x-degree q + 4 b1 + 3 b2
        for (std::int64_t b1 = 0; b1 <= a; ++b1) expected += oracle::binom(q + 4 * b1 + 3 * (a - b1) + 5, 5);
        CHECK(bigraded_piece_dim(p, {a, q}, PiecePart::Ambient) == oracle::u64(expected));
      }
  }

  TEST_CASE("c = 1 collapse onto the hypersurface Jacobian ring") {
    for (std::int64_t d : {5, 6}) {
      const CIProblem p = make_ci_problem(4, {d});
      for (std::int64_t k = 0; k <= 3; ++k) {
        const std::uint64_t expected = jacobian_hilbert(d, (k + 1) * d - 5);
        CHECK(ci_hodge(p, k, fermat()) == expected);
        // A random sextic in degree 19 is a dense elimination over 8855 monomials.
        if (k <= 2) CHECK(ci_hodge(p, k) == expected);
      }
      CHECK(ci_moduli(p, fermat()) == jacobian_hilbert(d, d));
    }
  }

  TEST_CASE("(3,4) in P^5: h^{3,0} = h^0(O(1)) and Hodge symmetry") {
    const CIProblem p = make_ci_problem(5, {3, 4});
    const auto h0 = ci_hodge(p, 0, fermat());
    CHECK(h0 == 6);
    CHECK(ci_hodge(p, 1, fermat()) == ci_hodge(p, 2, fermat()));
  }

  TEST_CASE("quotient dimensions are seed-stable") {
    const CIProblem p = make_ci_problem(5, {3, 4});
    std::vector<std::uint64_t> seen;
    for (std::uint64_t seed : {1u, 2u, 3u}) {
      GenericityPolicy policy;
      policy.seed = seed;
      policy.samples = 1;
      seen.push_back(ci_hodge(p, 1, policy));
    }
    CHECK(seen[0] == seen[1]);
    CHECK(seen[1] == seen[2]);
    CHECK(seen[0] == ci_hodge(p, 1, fermat()));
  }

  TEST_CASE("negative d(X) and small dimension are rejected") {
    const CIProblem p = make_ci_problem(6, {2, 2, 2});
    CHECK_THROWS_WITH_AS(ci_moduli(p), doctest::Contains("ModuliIdentificationUnavailable"), Error);
    CHECK_THROWS_WITH_AS(check_ci(p), doctest::Contains("ModuliIdentificationUnavailable"), Error);
    CHECK_THROWS_WITH_AS(check_ci(make_ci_problem(4, {2, 3})), doctest::Contains("DimensionTooSmall"), Error);
  }

  TEST_CASE("single hypersurface certificates agree with the toric path") {
    const Certificate ci = check_ci(make_ci_problem(4, {5}), fermat());
    const Certificate toric = check_toric(fans::projective(4), {{1, 0, 0, 0, 0}}, 5, fermat());
    CHECK(ci.h_top == toric.h_top);
    CHECK(ci.h_next == toric.h_next);
    CHECK(ci.mu == toric.mu);
    CHECK(ci.rhs == toric.rhs);
    CHECK(ci.verdict == Verdict::Inconclusive);
    const Certificate six = check_ci(make_ci_problem(4, {6}), fermat());
    CHECK(six.verdict == Verdict::NonGeneric);
  }

  TEST_CASE("effective bound") {
    CHECK(effective_bound(4, 1) == 7);
    {
      // n = 4, c = 2: max{4, sqrt(3 * 4^4 * 2^5 * 2^4 + 1), sqrt(4! * 2^4 * (3 + 4 + 25))}
      Integer a = 3 * 256 * 32 * 16 + 1, b = 24 * 16 * 32, ra, rb;
      mpz_sqrt(ra.get_mpz_t(), a.get_mpz_t());
      if (ra * ra < a) ++ra;
      mpz_sqrt(rb.get_mpz_t(), b.get_mpz_t());
      if (rb * rb < b) ++rb;
      const Integer expected = std::max({Integer(4), ra, rb});
      CHECK(expected == 628);
      CHECK(effective_bound(4, 2) == expected);
    }
    CHECK(ceil_root(1848, 4) == 7);
    CHECK(ceil_root(16, 4) == 2);
    CHECK(ceil_root(17, 4) == 3);
    CHECK(ceil_root(0, 3) == 0);
    for (long x = 0; x < 300; ++x)
      for (unsigned long k = 1; k <= 4; ++k) {
        const Integer y = ceil_root(x, k);
        Integer p, q;
        mpz_pow_ui(p.get_mpz_t(), y.get_mpz_t(), k);
        CHECK(p >= x);
        if (y > 0) {
          const Integer z = y - 1;
          mpz_pow_ui(q.get_mpz_t(), z.get_mpz_t(), k);
          CHECK(q < x);
        }
      }
    CHECK_THROWS_AS(effective_bound(4, 4), Error);
  }
}
