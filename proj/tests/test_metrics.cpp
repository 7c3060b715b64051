#include "doctest_complex.hpp"

#include <cmath>

#include "invlab/metrics.hpp"
#include "invlab/random.hpp"

using namespace invlab;

namespace {
const double kSqrt2 = std::sqrt(2.0);

cplx random_lambda(const CounterRng& rng, std::uint64_t k) {
  return cplx(4 * rng.uniform(k, 50) - 2, 4 * rng.uniform(k, 51) - 2);
}
}  // namespace

TEST_CASE("kobayashi closed forms") {
  CHECK(kobayashi_royden_density(Domain::disc(), cplx(0), cplx(1)) == doctest::Approx(1.0));
  CHECK(kobayashi_royden_density(Domain::disc(), cplx(0.5), cplx(1)) ==
        doctest::Approx(4.0 / 3));
  CHECK(kobayashi_royden_density(Domain::halfplane(), cplx(0, 2), cplx(1)) ==
        doctest::Approx(0.25));
  CHECK(kobayashi_royden_density(Domain::halfdisc(), cplx(0, 0.5), cplx(1)) ==
        doctest::Approx(5.0 / 3).epsilon(1e-14));
  CHECK(kobayashi_royden_density(Domain::polydisc({1, 1}), ComplexPoint{0, 0},
                                 TangentVector{1, 2}) == doctest::Approx(2.0));
  CHECK(kobayashi_royden_density(Domain::ball(2), ComplexPoint{0, 0},
                                 TangentVector{cplx(0.6), cplx(0, 0.8)}) ==
        doctest::Approx(1.0));
  CHECK_THROWS_AS(kobayashi_royden_density(Domain::disc(), cplx(1), cplx(1)), OutsideDomain);
  CHECK_THROWS_AS(kobayashi_royden_density(Domain::ellipsoid({1, 2}), ComplexPoint{0, 0},
                                           TangentVector{1, 0}),
                  Unsupported);
}

TEST_CASE("ball density: radial and complex-tangential directions") {
  // at z = (a, 0): kappa = |X1|/(1-a^2) radially, |X2|/sqrt(1-a^2) tangentially
  const double a = 0.6;
  const ComplexPoint z{a, 0};
  CHECK(kobayashi_royden_density(Domain::ball(2), z, TangentVector{1, 0}) ==
        doctest::Approx(1 / (1 - a * a)).epsilon(1e-13));
  CHECK(kobayashi_royden_density(Domain::ball(2), z, TangentVector{0, 1}) ==
        doctest::Approx(1 / std::sqrt(1 - a * a)).epsilon(1e-13));
  // n = 1 reduces to the disc
  CHECK(kobayashi_royden_density(Domain::ball(1), ComplexPoint{cplx(0.3, 0.2)}, TangentVector{1}) ==
        doctest::Approx(kobayashi_royden_density(Domain::disc(), cplx(0.3, 0.2), cplx(1)))
            .epsilon(1e-14));
}

TEST_CASE("bergman closed forms") {
  CHECK(bergman_metric(Domain::disc(), cplx(0), cplx(1)) == doctest::Approx(kSqrt2));
  CHECK(bergman_metric(Domain::ball(2), ComplexPoint{0, 0}, TangentVector{1, 0}) ==
        doctest::Approx(std::sqrt(3.0)));
  CHECK(bergman_metric(Domain::disc(), cplx(0.5), cplx(1)) == doctest::Approx(kSqrt2 * 4 / 3));
  CHECK(normalized_bergman(Domain::disc(), cplx(0), cplx(1)) == doctest::Approx(1.0));
  CHECK(normalized_bergman(Domain::ball(2), ComplexPoint{0, 0}, TangentVector{1, 0}) ==
        doctest::Approx(1.0));
  CHECK(normalized_bergman(Domain::disc(), cplx(0.5), cplx(1)) == doctest::Approx(4.0 / 3));
  CHECK_THROWS_AS(bergman_metric(Domain::halfplane(), cplx(0, 1), cplx(1)), Unsupported);
}

TEST_CASE("homogeneity of every density") {
  CounterRng rng(21);
  const auto pi1 = Domain::halfdisc();
  const FinslerDensity dens[] = {
      FinslerDensity::kobayashi(Domain::disc()),
      FinslerDensity::kobayashi(Domain::halfplane()),
      FinslerDensity::kobayashi(pi1),
      FinslerDensity::bergman(Domain::disc()),
      FinslerDensity::normalized_bergman(Domain::disc()),
      FinslerDensity::pullback(MapDescriptor::halfdisc_to_halfplane(),
                               FinslerDensity::kobayashi(Domain::halfplane())),
  };
  for (const auto& t : dens)
    for (std::uint64_t k = 0; k < 200; ++k) {
      const cplx z = sample_halfdisc(rng, k, 0.95, 0);
      const cplx X(rng.uniform(k, 3) - 0.5, rng.uniform(k, 4) - 0.5);
      const cplx lam = random_lambda(rng, k);
      const double base = t(z, X);
      CHECK(std::abs(t(z, lam * X) - std::abs(lam) * base) <= 1e-12 * std::abs(lam) * base);
    }
}

TEST_CASE("conformal invariance of kappa") {
  CounterRng rng(22);
  const auto f = MapDescriptor::halfdisc_to_halfplane();
  const auto kpi = FinslerDensity::kobayashi(Domain::halfplane());
  const auto theta = MapDescriptor::cayley();
  for (std::uint64_t k = 0; k < 1000; ++k) {
    const cplx z = sample_halfdisc(rng, k, 1.0, 5);
    const cplx X = std::polar(1.0, 6.283 * rng.uniform(k, 6));
    const double own = kobayashi_royden_density(Domain::halfdisc(), z, X);
    CHECK(std::abs(pullback_density(f, kpi, z, X) - own) <= 1e-12 * own);

    const cplx zeta = sample_disc(rng, k, 0.9, 7);
    const double kd = kobayashi_royden_density(Domain::disc(), zeta, X);
    CHECK(std::abs(pullback_density(theta, kpi, zeta, X) - kd) <= 1e-12 * kd);
  }
  // identity pullback is the density itself
  CHECK(pullback_density(MapDescriptor::identity(), kpi, cplx(0.1, 0.3), cplx(1)) ==
        kpi(cplx(0.1, 0.3), cplx(1)));
  // theta'(i-preimage) transfers: at zeta = 0, theta'(0) = -2i, kappa_Pi(i; -2i) = 1
  CHECK(pullback_density(theta, kpi, cplx(0), cplx(1)) == doctest::Approx(1.0));
  CHECK(kpi(cplx(0, 1), cplx(1)) == doctest::Approx(0.5));
}

TEST_CASE("normalized bergman equals kappa on disc and ball") {
  CounterRng rng(23);
  for (std::uint64_t k = 0; k < 10000; ++k) {
    const cplx z = sample_disc(rng, k, 0.999, 0);
    const cplx X(rng.uniform(k, 1) - 0.5, rng.uniform(k, 2) - 0.5);
    const double kap = kobayashi_royden_density(Domain::disc(), z, X);
    CHECK(std::abs(normalized_bergman(Domain::disc(), z, X) - kap) <= 1e-12 * kap);
  }
  for (std::uint64_t k = 0; k < 2000; ++k) {
    const auto z = sample_ball(rng, k, 3, 9);
    const TangentVector X{cplx(rng.uniform(k, 10), 0.2), cplx(-0.3, rng.uniform(k, 11)),
                          cplx(0.1, 0.1)};
    const double kap = kobayashi_royden_density(Domain::ball(3), z, X);
    CHECK(std::abs(normalized_bergman(Domain::ball(3), z, X) - kap) <= 1e-12 * kap);
  }
}

TEST_CASE("sandwich on the bidisc") {
  const auto d = Domain::polydisc({1, 1});
  const double sigma = 1 / std::sqrt(2.0);
  CounterRng rng(24);
  for (std::uint64_t k = 0; k < 300; ++k) {
    const ComplexPoint z{sample_disc(rng, k, 0.9, 0), sample_disc(rng, k, 0.9, 1)};
    const TangentVector X{cplx(rng.uniform(k, 2) - 0.5, 0.1), cplx(0.2, rng.uniform(k, 3))};
    const auto s = squeezing_sandwich(d, z, X, sigma);
    CHECK(s.holds);
    CHECK(s.lower == doctest::Approx(std::pow(sigma, 3)));
  }
  CHECK_THROWS_AS(squeezing_sandwich(d, ComplexPoint{0, 0}, TangentVector{1, 0}, 1.5),
                  std::invalid_argument);
}

TEST_CASE("localized density is infinite off U") {
  const auto inner = FinslerDensity::kobayashi(Domain::halfplane());
  const auto loc = FinslerDensity::localized(inner, Domain::halfdisc());
  CHECK(loc(cplx(0, 0.5), cplx(1)) == inner(cplx(0, 0.5), cplx(1)));
  CHECK(is_infinite(loc(cplx(0, 2), cplx(1))));
  CHECK(is_infinite(loc(cplx(0, 2), cplx(1)) + 1.0));
}
