#include "doctest_complex.hpp"

#include <cmath>

#include "invlab/distances.hpp"
#include "invlab/geodesic.hpp"
#include "invlab/random.hpp"

using namespace invlab;

namespace {
const auto kDisc = FinslerDensity::kobayashi(Domain::disc());
const auto kPi = FinslerDensity::kobayashi(Domain::halfplane());

DistanceOracle oracle(const Domain& d) {
  return [d](const ComplexPoint& a, const ComplexPoint& b) {
    return kobayashi_distance(d, a, b).value;
  };
}
}  // namespace

TEST_CASE("length of straight chords") {
  CHECK(finsler_length(kDisc, Polyline::chord(cplx(0), cplx(0.5), 65)) ==
        doctest::Approx(std::atanh(0.5)).epsilon(1e-8));
  CHECK(finsler_length(kPi, Polyline::chord(cplx(0, 1), cplx(0, 2), 65)) ==
        doctest::Approx(0.5 * std::log(2.0)).epsilon(1e-8));
  CHECK(finsler_length(kDisc, Polyline({cplx(0.2), cplx(0.2)})) == 0.0);
  CHECK_THROWS_AS(Polyline({cplx(0.2)}), std::invalid_argument);
}

TEST_CASE("infinite density propagates into lengths") {
  const auto loc = FinslerDensity::localized(kPi, Domain::halfdisc());
  CHECK(is_infinite(finsler_length(loc, Polyline::chord(cplx(0, 0.5), cplx(0, 1.5), 9))));
}

TEST_CASE("solver examples") {
  SUBCASE("through the centre of the disc") {
    const auto r = minimize_curve(kDisc, cplx(-0.5), cplx(0.5));
    CHECK(r.length == doctest::Approx(2 * std::atanh(0.5)).epsilon(1e-4));
    for (const auto& n : r.curve.nodes()) CHECK(std::abs(n.scalar().imag()) < 1e-6);
    const auto cert = epsilon_certificate(r.curve, kDisc, oracle(Domain::disc()));
    CHECK(cert.epsilon <= 1e-4);
    CHECK(cert.epsilon >= -1e-8);
  }
  SUBCASE("near-boundary half-plane pair") {
    const cplx z(-0.1, 0.01), w(0.1, 0.01);
    const double exact = kobayashi_distance(Domain::halfplane(), z, w).value;
    const auto r = minimize_curve(kPi, z, w);
    CHECK(r.length == doctest::Approx(exact).epsilon(1e-3));
    CHECK(r.length >= exact - 1e-6);
    CHECK(r.length <= r.chord_length + 1e-12);
    // w is a node, so the farthest node is w itself
    CHECK(excursion_radius(r.curve, z) == doctest::Approx(0.2).epsilon(1e-12));
    // the apex of the circular arc is at height |w|
    double apex = 0;
    ComplexPoint top = r.curve.front();
    for (const auto& n : r.curve.nodes())
      if (n.scalar().imag() > apex) apex = n.scalar().imag(), top = n;
    CHECK(apex == doctest::Approx(std::abs(w)).epsilon(1e-2));
    CHECK(std::abs(z - cplx(0, std::abs(w))) == doctest::Approx(0.1345).epsilon(1e-3));
  }
  SUBCASE("half-disc density") {
    const auto d = FinslerDensity::kobayashi(Domain::halfdisc());
    const auto r = minimize_curve(d, cplx(0, 0.5), cplx(0, 0.25));
    CHECK(r.length == doctest::Approx(0.5 * std::log(2.5)).epsilon(1e-4));
  }
}

TEST_CASE("chord certificate and excursion of chords") {
  const cplx z(-0.1, 0.01), w(0.1, 0.01);
  const auto chord = Polyline::chord(z, w, 65);
  CHECK(finsler_length(kPi, chord) == doctest::Approx(10.0).epsilon(1e-3));
  const auto cert = epsilon_certificate(chord, kPi, oracle(Domain::halfplane()));
  CHECK(cert.epsilon > 5);
  CHECK(cert.first < cert.second);
  CHECK(excursion_radius(chord, z) == doctest::Approx(std::abs(z - w)));
  CHECK(excursion_radius(Polyline({z, z}), z) == 0.0);
  CHECK(epsilon_certificate(Polyline({z, z}), kPi, oracle(Domain::halfplane())).epsilon == 0.0);
}

TEST_CASE("discretization convergence 65 -> 129") {
  CounterRng rng(41);
  SolverConfig fine;
  fine.node_count = 129;
  fine.refinement_levels = 4;
  for (std::uint64_t k = 0; k < 3; ++k) {
    const cplx z = sample_disc(rng, k, 0.7, 0), w = sample_disc(rng, k, 0.7, 1);
    const double a = minimize_curve(kDisc, z, w).length;
    const double b = minimize_curve(kDisc, z, w, fine).length;
    CHECK(std::abs(a - b) <= 1e-5 * b);
    const double exact = kobayashi_distance(Domain::disc(), z, w).value;
    CHECK(b >= exact - 1e-6);
  }
}

TEST_CASE("solver is deterministic") {
  const auto a = minimize_curve(kPi, cplx(-0.3, 0.1), cplx(0.2, 0.4));
  const auto b = minimize_curve(kPi, cplx(-0.3, 0.1), cplx(0.2, 0.4));
  CHECK(a.length == b.length);
  CHECK(a.curve.nodes() == b.curve.nodes());
}

TEST_CASE("config validation") {
  SolverConfig c;
  c.node_count = 64;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c.node_count = 65;
  c.convergence_tol = 0;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  CHECK_THROWS_AS(minimize_curve(kDisc, cplx(0), cplx(2)), OutsideDomain);
}
