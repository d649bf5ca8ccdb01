#include <doctest.h>

#include "fans.hpp"
#include "ivhs/error.hpp"
#include "ivhs/jacobian.hpp"
#include "oracles.hpp"

using namespace ivhs;

namespace {

struct P4 {
  ToricGrading g{fans::projective(4)};
  DegreeClass h = divisor_class(g, {{1, 0, 0, 0, 0}});
};

// Hilbert function of the Jacobian ring of a smooth degree-d hypersurface in P^4.
std::uint64_t jacobian_hilbert(long d, long k) {
  return oracle::u64(oracle::hilbert_coefficient({d - 1, d - 1, d - 1, d - 1, d - 1}, {1, 1, 1, 1, 1}, k));
}

}  // namespace

TEST_SUITE("jacobian") {
  TEST_CASE("Fermat quintic: rank 25 in degree 5, quotient 101") {
    P4 p;
    const auto f = fermat_section(p.g, (p.h * 5).key());
    CHECK(f.terms.size() == 5);
    CHECK(jacobian_piece_dim(p.g, f, p.h * 5) == 25);
    CHECK(ring_piece_dim(p.g, f, p.h * 5) == 101);
    CHECK(jacobian_piece_dim(p.g, f, p.h * 10) == 900);
  }

  TEST_CASE("Hilbert function of sextic Jacobian rings, Fermat and random") {
    P4 p;
    const DegreeKey six = (p.h * 6).key();
    QuotientSample fermat(p.g, jacobian_generators(p.g, fermat_section(p.g, six)), Arithmetic::Rational);
    const auto r = random_section(p.g, p.h * 6, 10, 99);
    QuotientSample random(p.g, jacobian_generators(p.g, r), Arithmetic::Modular, prime_from_seed(99));
    for (long k = 0; k <= 21; ++k) {
      const DegreeKey key = (p.h * k).key();
      CHECK(fermat.quotient_dim(key) == jacobian_hilbert(6, k));
      // Random columns fill in densely; past degree 13 the eliminations take minutes.
      if (k <= 13) CHECK(random.quotient_dim(key) == jacobian_hilbert(6, k));
    }
    // socle in degree 5 * (6 - 2) = 20, symmetric Hilbert function
    CHECK(fermat.quotient_dim((p.h * 20).key()) == 1);
    for (long k = 0; k <= 20; ++k)
      CHECK(fermat.quotient_dim((p.h * k).key()) == fermat.quotient_dim((p.h * (20 - k)).key()));
  }

  TEST_CASE("weighted P(1,1,1,1,2), degree 8: quasi-smooth Hilbert series") {
    const WeightSystem w({1, 1, 1, 1, 2});
    const ToricGrading g(wps_fan(w));
    const DegreeClass d0 = divisor_class(g, {{1, 0, 0, 0, 0}});
    const auto s = random_section(g, d0 * 8, 10, 7);
    QuotientSample ring(g, jacobian_generators(g, s), Arithmetic::Modular, prime_from_seed(7));
    for (long k : {0L, 2L, 5L, 8L, 10L, 18L}) {
      const auto expected = oracle::u64(oracle::hilbert_coefficient({7, 7, 7, 7, 6}, {1, 1, 1, 1, 2}, k));
      CHECK(ring.quotient_dim((d0 * k).key()) == expected);
    }
    CHECK(ring.quotient_dim((d0 * 8).key()) == 268);
  }

  TEST_CASE("multiplication R_5 x R_5 -> R_10 on the quintic") {
    P4 p;
    const auto f = fermat_section(p.g, (p.h * 5).key());
    const MultiplicationRank m = multiplication_rank(p.g, f, p.h * 5, p.h * 5);
    CHECK(m.source_dim == 101);
    CHECK(m.target_dim == 101);
    CHECK(m.rank == 101);
    CHECK(m.injective);
    CHECK(m.pairing_rank == 101);
    CHECK(m.surjective_onto);
  }

  TEST_CASE("modular and rational arithmetic agree on random sections") {
    P4 p;
    for (std::uint64_t seed : {1u, 2u, 3u}) {
      const auto s = random_section(p.g, p.h * 5, 10, seed);
      QuotientSample q(p.g, jacobian_generators(p.g, s), Arithmetic::Rational);
      QuotientSample m(p.g, jacobian_generators(p.g, s), Arithmetic::Modular, prime_from_seed(seed));
      for (long k : {3L, 5L, 6L}) CHECK(q.quotient_dim((p.h * k).key()) == m.quotient_dim((p.h * k).key()));
      CHECK(q.injectivity_rank((p.h * 5).key(), (p.h * 0).key()) == 101);
    }
  }

  TEST_CASE("ideal membership and normal-form coordinates") {
    P4 p;
    const auto f = fermat_section(p.g, (p.h * 5).key());
    QuotientSample ring(p.g, jacobian_generators(p.g, f), Arithmetic::Rational);
    GradedPolynomial x4{(p.h * 4).key(), {{{4, 0, 0, 0, 0}, Rational(1)}}};
    CHECK(ring.ideal_contains(x4));
    GradedPolynomial x3y{(p.h * 4).key(), {{{3, 1, 0, 0, 0}, Rational(1)}}};
    CHECK_FALSE(ring.ideal_contains(x3y));
    const auto c = ring.coordinates(x3y);
    CHECK(c.size() == ring.quotient_dim((p.h * 4).key()));
    QuotientSample modular(p.g, jacobian_generators(p.g, f), Arithmetic::Modular, prime_from_seed(1));
    CHECK_THROWS_AS(modular.coordinates(x3y), Error);
  }

  TEST_CASE("section sampling is deterministic in the seed") {
    P4 p;
    GenericityPolicy policy;
    policy.seed = 42;
    const auto a = sample_sections(p.g, (p.h * 5).key(), policy);
    const auto b = sample_sections(p.g, (p.h * 5).key(), policy);
    REQUIRE(a.size() == 3);
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].seed == b[i].seed);
      CHECK(a[i].characteristic == b[i].characteristic);
      CHECK(a[i].section.terms == b[i].section.terms);
      CHECK(a[i].arithmetic == Arithmetic::Modular);
    }
    CHECK(a[0].seed != a[1].seed);
    policy.source = SectionSource::Fermat;
    const auto f = sample_sections(p.g, (p.h * 5).key(), policy);
    REQUIRE(f.size() == 1);
    CHECK(f[0].arithmetic == Arithmetic::Rational);
  }

  TEST_CASE("errors") {
    const WeightSystem w({1, 1, 1, 1, 2});
    const ToricGrading g(wps_fan(w));
    const DegreeClass d0 = divisor_class(g, {{1, 0, 0, 0, 0}});
    // x_4 has weight 2, so no pure power of it has odd degree
    CHECK_THROWS_WITH_AS(fermat_section(g, (d0 * 7).key()), doctest::Contains("FermatUnavailable"), Error);
    CHECK_THROWS_WITH_AS(random_section(g, d0 * -1, 10, 1), doctest::Contains("EmptyGradedPiece"), Error);
  }
}
