#include "doctest_complex.hpp"

#include <cmath>
#include <numbers>

#include "invlab/geometry.hpp"
#include "invlab/random.hpp"
#include "invlab/text.hpp"

using namespace invlab;

TEST_CASE("membership on the catalog") {
  const auto pi1 = Domain::halfdisc();
  CHECK(contains(pi1, cplx(0, 0.5)));
  CHECK_FALSE(contains(pi1, cplx(0, 2)));
  CHECK_FALSE(contains(Domain::disc(), cplx(1, 0)));  // boundary excluded
  CHECK_FALSE(contains(Domain::halfplane(), cplx(0.3, 0)));
  CHECK(contains(Domain::ball(2), ComplexPoint{0.5, 0.5}));
  CHECK_FALSE(contains(Domain::ball(2), ComplexPoint{0.8, 0.8}));
  CHECK_THROWS_AS(contains(Domain::ball(2), ComplexPoint{0.1}), DimensionMismatch);
}

TEST_CASE("boundary distance") {
  CHECK(boundary_distance(Domain::halfplane(), cplx(0.3, 0.2)) == doctest::Approx(0.2));
  CHECK(boundary_distance(Domain::halfdisc(), cplx(0, 0.5)) == doctest::Approx(0.5));
  CHECK(boundary_distance(Domain::polydisc({1, 1}), ComplexPoint{0.5, 0.3}) ==
        doctest::Approx(0.5));
  CHECK_THROWS_AS(boundary_distance(Domain::disc(), cplx(1, 0)), OutsideDomain);
}

TEST_CASE("delta > 0 exactly on members") {
  CounterRng rng(7);
  const Domain doms[] = {Domain::disc(), Domain::halfplane(), Domain::halfdisc(0.5)};
  for (const auto& d : doms)
    for (std::uint64_t k = 0; k < 200; ++k) {
      const cplx z(4 * rng.uniform(k, 1) - 2, 4 * rng.uniform(k, 2) - 2);
      if (contains(d, z))
        CHECK(boundary_distance(d, z) > 0);
      else
        CHECK_THROWS_AS(boundary_distance(d, z), OutsideDomain);
    }
}

TEST_CASE("half-disc distance against a boundary sampler") {
  // boundary of Pi_r: segment [-r, r] and the upper semicircle
  const double r = 0.8;
  CounterRng rng(11);
  const int m = 1000;
  for (std::uint64_t k = 0; k < 50; ++k) {
    const cplx z = sample_halfdisc(rng, k, r, 3);
    double brute = INFINITY;
    for (int j = 0; j <= m; ++j) {
      const double s = -r + 2 * r * j / m;
      brute = std::min(brute, std::abs(z - cplx(s, 0)));
      const double th = std::numbers::pi * j / m;
      brute = std::min(brute, std::abs(z - std::polar(r, th)));
    }
    // clamp the sampler's discretization error before comparing
    const double exact = boundary_distance(Domain::halfdisc(r), z);
    CHECK(exact <= brute + 1e-12);
    CHECK(brute - exact <= 2e-3);
    CHECK(exact == doctest::Approx(std::min(z.imag(), r - std::abs(z))).epsilon(1e-15));
  }
}

TEST_CASE("intersect_with_ball") {
  const auto d = intersect_with_ball(Domain::halfplane(), cplx(0), 1.0);
  REQUIRE(d.is<HalfDiscScaled>());
  CHECK(d.as<HalfDiscScaled>()->r == 1.0);
  CHECK(contains(d, cplx(0, 0.5)));
  CHECK(intersect_with_ball(Domain::halfplane(), cplx(0), 0.25).as<HalfDiscScaled>()->r ==
        0.25);
  const auto cap = intersect_with_ball(Domain::disc(), cplx(0.5, 0), 0.5);
  CHECK(cap.is<BallIntersection>());
  CHECK_THROWS_AS(intersect_with_ball(Domain::disc(), cplx(3, 0), 0.5), EmptyIntersection);

  // shrinking the domain never increases delta
  CounterRng rng(3);
  for (std::uint64_t k = 0; k < 100; ++k) {
    const cplx z = sample_disc(rng, k, 0.99, 0);
    if (!contains(cap, z)) continue;
    CHECK(boundary_distance(cap, z) <= boundary_distance(Domain::disc(), z));
  }
}

TEST_CASE("factories reject bad invariants") {
  CHECK_THROWS_AS(Domain::halfdisc(0.0), std::invalid_argument);
  CHECK_THROWS_AS(Domain::halfdisc(1.5), std::invalid_argument);
  CHECK_THROWS_AS(Domain::ball(0), std::invalid_argument);
  CHECK_THROWS_AS(Domain::polydisc({1, -1}), std::invalid_argument);
}

TEST_CASE("complex literals") {
  CHECK(parse_complex("0+0.5i") == cplx(0, 0.5));
  CHECK(parse_complex("-0.28+0.96i") == cplx(-0.28, 0.96));
  CHECK(parse_complex("1e-3") == cplx(0.001, 0));
  CHECK(parse_complex("i") == cplx(0, 1));
  CHECK(parse_complex("-i") == cplx(0, -1));
  CHECK(parse_complex("2-3.5i") == cplx(2, -3.5));
  CHECK(parse_complex("1e-3+2e-2i") == cplx(1e-3, 2e-2));
  for (const char* bad : {"", "abc", "1+", "1+2", "1++2i", "0.5ii"})
    CHECK_THROWS_AS(parse_complex(bad), ParseError);
}

TEST_CASE("format round trip") {
  for (cplx c : {cplx(0.1, -0.3), cplx(1.0 / 3, 2.0 / 7), cplx(-1e-300, 5)}) {
    CHECK(parse_complex(format_complex(c, true)) == c);
  }
  CHECK(format_double17(0.1) == "0.10000000000000001");
  const auto p = parse_point("(0.5, 0.3i)");
  CHECK(p.dim() == 2);
  CHECK(p[1] == cplx(0, 0.3));
}

TEST_CASE("domain literals") {
  for (const char* lit : {"disc", "halfplane", "halfdisc:r=0.25", "ball:n=2",
                          "polydisc:r=1,0.5", "ellipsoid:p=1,2"}) {
    const auto d = parse_domain(lit);
    CHECK(parse_domain(d.literal()).literal() == d.literal());
  }
  CHECK(parse_domain("halfdisc").as<HalfDiscScaled>()->r == 1.0);
  CHECK(parse_domain("cap(disc;c=0.5;r=0.5)").is<BallIntersection>());
  CHECK(parse_domain("prod(disc;disc)").dim() == 2);
  CHECK_THROWS_AS(parse_domain("annulus"), ParseError);
}
