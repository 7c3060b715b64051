#include "doctest_complex.hpp"

#include <cmath>

#include "invlab/conformal.hpp"
#include "invlab/distances.hpp"
#include "invlab/metrics.hpp"
#include "invlab/random.hpp"

using namespace invlab;

namespace {
double k_of(const Domain& d, cplx z, cplx w) { return kobayashi_distance(d, z, w).value; }

// pseudohyperbolic distance of f(z), f(w) in Pi, computed without the library
double m_pi1_oracle(cplx z, cplx w) {
  auto f = [](cplx x) {
    const cplx q = (x + 1.0) / (x - 1.0);
    return q * q;
  };
  const cplx a = f(z), b = f(w);
  return std::abs(a - b) / std::abs(a - std::conj(b));
}
}  // namespace

TEST_CASE("pseudodistances") {
  CHECK(mobius_halfplane(cplx(0, 1), cplx(0, 2)) == doctest::Approx(1.0 / 3));
  CHECK(mobius_halfplane(cplx(0.2, 0.3), cplx(0.2, 0.3)) == 0.0);
  CHECK(mobius_halfplane(cplx(0, 0.5), cplx(0, 0.25)) == doctest::Approx(1.0 / 3));
  CHECK_THROWS_AS(mobius_halfplane(cplx(0, -1), cplx(0, 1)), OutsideDomain);
}

TEST_CASE("kobayashi distance closed forms") {
  CHECK(k_of(Domain::disc(), 0, 0.5) == doctest::Approx(std::atanh(0.5)).epsilon(1e-15));
  CHECK(k_of(Domain::halfplane(), cplx(0, 0.5), cplx(0, 0.25)) ==
        doctest::Approx(0.5 * std::log(2.0)).epsilon(1e-15));
  CHECK(k_of(Domain::halfdisc(), cplx(0, 0.5), cplx(0, 0.25)) ==
        doctest::Approx(0.5 * std::log(2.5)).epsilon(1e-14));
  const auto pd = Domain::polydisc({1, 1});
  CHECK(kobayashi_distance(pd, ComplexPoint{0, 0}, ComplexPoint{0.5, 0.3}).value ==
        doctest::Approx(std::atanh(0.5)));
  CHECK(kobayashi_distance(Domain::ball(2), ComplexPoint{0, 0}, ComplexPoint{0.3, 0.4}).value ==
        doctest::Approx(std::atanh(0.5)));
  const double near = k_of(Domain::halfplane(), cplx(-0.1, 0.01), cplx(0.1, 0.01));
  CHECK(near == doctest::Approx(2.99805).epsilon(1e-3));
  CHECK(near == doctest::Approx(std::atanh(0.2 / std::abs(cplx(0.2, 0.02)))).epsilon(1e-12));
}

TEST_CASE("overflow to the infinite marker") {
  const auto v = kobayashi_distance(Domain::halfplane(), cplx(0, 1e-300), cplx(0, 1));
  CHECK(v.infinite());
  CHECK(is_infinite(hyperbolic_from_pseudo(1.0)));
  CHECK(is_infinite(hyperbolic_from_pseudo(1 - 1e-16)));
  CHECK_FALSE(is_infinite(hyperbolic_from_pseudo(0.999)));
}

TEST_CASE("stable atanh near m = 1") {
  // z = i, w = i y: m = (y-1)/(y+1), 1 - m^2 = 4y/(y+1)^2, k = log(y)/2 exactly
  for (double y : {1e3, 1e6, 1e9, 1e12, 1e14}) {
    const double k = k_of(Domain::halfplane(), cplx(0, 1), cplx(0, y));
    CHECK(k == doctest::Approx(0.5 * std::log(y)).epsilon(1e-13));
  }
}

TEST_CASE("corrected 1 - m^2 identity") {
  CounterRng rng(31);
  for (std::uint64_t k = 0; k < 1000; ++k) {
    const cplx z = sample_halfdisc(rng, k, 1.0, 0), w = sample_halfdisc(rng, k, 1.0, 1);
    const double m = std::abs(z - w) / std::abs(z - std::conj(w));
    CHECK(halfplane_one_minus_m2(z, w) == doctest::Approx(1 - m * m).epsilon(1e-12));
    CHECK(halfplane_one_minus_m2(z, w) ==
          doctest::Approx(4 * z.imag() * w.imag() / std::norm(z - std::conj(w))).epsilon(1e-14));
  }
}

TEST_CASE("gap spot pair with exact rationals") {
  const cplx z(0, 0.5), w(0, 0.25);
  CHECK(t1(z, w) == doctest::Approx(std::log(15.0 / 14)).epsilon(1e-13));
  CHECK(t2(z, w) == doctest::Approx(0.5 * std::log(49.0 / 45)).epsilon(1e-13));
  const auto g = localization_gap_halfdisc(z, w);
  CHECK(std::abs(g.gap - 0.5 * std::log(1.25)) <= 1e-12);
  CHECK(g.residual <= 1e-13);
  CHECK(t1(z, z) == 0.0);
  CHECK(t2(z, z) == 0.0);
  CHECK(localization_gap_halfdisc(z, z).gap == 0.0);
  CHECK(t2(z, w) / t2_asymptotic(z, w) == doctest::Approx(1.3625).epsilon(1e-4));
}

TEST_CASE("t1 and t2 against independent routes") {
  CounterRng rng(32);
  for (std::uint64_t k = 0; k < 2000; ++k) {
    const cplx z = sample_halfdisc(rng, k, 0.9, 0), w = sample_halfdisc(rng, k, 0.9, 1);
    const double mg = std::abs(z - w) / std::abs(z - std::conj(w));
    const double ml = m_pi1_oracle(z, w);
    CHECK(std::abs(t1(z, w) - std::log((1 + ml) / (1 + mg))) <= 1e-12);
    const double t2o =
        -0.5 * std::log((1 - std::norm(z)) * (1 - std::norm(w)) / std::norm(1.0 - z * std::conj(w)));
    CHECK(std::abs(t2(z, w) - t2o) <= 1e-12);
    const auto g = localization_gap_halfdisc(z, w);
    CHECK(g.residual <= 1e-10);
    CHECK(g.t1 >= 0);
    CHECK(g.t2 >= 0);
  }
}

TEST_CASE("asymptotic leading terms") {
  const cplx z = 1e-3 * cplx(1, 1), w = 1e-3 * cplx(1, 2);
  CHECK(t1(z, w) / t1_asymptotic(z, w) == doctest::Approx(1.0).epsilon(1e-2));
  CHECK(t2_asymptotic(z, w) == 0.5 * std::norm(z - w));
  CHECK_THROWS_AS(t1_asymptotic(z, z), std::invalid_argument);
}

TEST_CASE("lempert and caratheodory agree with k") {
  CHECK(lempert_function(Domain::disc(), 0, 0.5).value == doctest::Approx(std::atanh(0.5)));
  CHECK(lempert_function(Domain::disc(), 0.3, 0.3).value == 0.0);
  CHECK(caratheodory_distance(Domain::halfplane(), cplx(0, 1), cplx(0, 2)).value ==
        doctest::Approx(std::atanh(1.0 / 3)));
  CHECK(lempert_function(Domain::polydisc({1, 1}), ComplexPoint{0, 0}, ComplexPoint{0.5, 0.3})
            .value == doctest::Approx(std::atanh(0.5)));
  CHECK_THROWS_AS(
      kobayashi_distance(intersect_with_ball(Domain::disc(), 0.5, 0.5), 0.5, 0.6), Unsupported);
}

TEST_CASE("metric axioms and domain monotonicity") {
  CounterRng rng(33);
  const Domain doms[] = {Domain::disc(), Domain::halfplane(), Domain::halfdisc(),
                         Domain::halfdisc(0.25)};
  for (const auto& d : doms)
    for (std::uint64_t k = 0; k < 1000; ++k) {
      const double r = d.is<HalfDiscScaled>() ? d.as<HalfDiscScaled>()->r : 1.0;
      auto pt = [&](std::uint64_t s) {
        return d.is<UnitDisc>() ? sample_disc(rng, k, 1.0, s) : sample_halfdisc(rng, k, r, s);
      };
      const cplx a = pt(0), b = pt(1), c = pt(2);
      const double ab = k_of(d, a, b), bc = k_of(d, b, c), ac = k_of(d, a, c);
      CHECK(std::abs(ab - k_of(d, b, a)) <= 1e-12 * std::max(1.0, ab));
      CHECK(ac <= ab + bc + 1e-12 * std::max(1.0, ab + bc));
      if (!d.is<UnitDisc>()) CHECK(ab >= k_of(Domain::halfplane(), a, b));
    }
}

TEST_CASE("scaling covariance") {
  CounterRng rng(34);
  for (double r : {0.25, 0.5, 0.8})
    for (std::uint64_t k = 0; k < 300; ++k) {
      const cplx z = sample_halfdisc(rng, k, r, 0), w = sample_halfdisc(rng, k, r, 1);
      const double a = k_of(Domain::halfdisc(r), z, w), b = k_of(Domain::halfdisc(), z / r, w / r);
      CHECK(std::abs(a - b) <= 1e-12 * std::max(1.0, a));
    }
}
