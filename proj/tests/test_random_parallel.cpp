#include "doctest_complex.hpp"

#include <atomic>
#include <cstdlib>
#include <set>
#include <stdexcept>

#include "invlab/geometry.hpp"
#include "invlab/parallel.hpp"
#include "invlab/random.hpp"

using namespace invlab;

TEST_CASE("counter rng is a pure function of (seed, index, stream)") {
  CounterRng a(42), b(42), c(43);
  CHECK(a.bits(17, 3) == b.bits(17, 3));
  CHECK(a.bits(17, 3) != c.bits(17, 3));
  CHECK(a.bits(17, 3) != a.bits(17, 4));
  CHECK(a.bits(17, 3) != a.bits(18, 3));
  std::set<std::uint64_t> seen;
  double mean = 0;
  for (std::uint64_t k = 0; k < 10000; ++k) {
    seen.insert(a.bits(k));
    const double u = a.uniform(k);
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    mean += u / 10000;
  }
  CHECK(seen.size() == 10000);
  CHECK(mean == doctest::Approx(0.5).epsilon(0.02));
}

TEST_CASE("samplers land in their domains") {
  CounterRng rng(1);
  for (std::uint64_t k = 0; k < 2000; ++k) {
    CHECK(contains(Domain::halfdisc(0.3), sample_halfdisc(rng, k, 0.3)));
    CHECK(contains(Domain::disc(), sample_disc(rng, k, 1.0)));
    CHECK(contains(Domain::ball(3), sample_ball(rng, k, 3)));
  }
  CHECK(sample_disc(rng, 5, 0.5, 2) == sample_disc(rng, 5, 0.5, 2));
}

TEST_CASE("parallel_map keeps input order and is thread-count independent") {
  auto run = [](const char* threads) {
    setenv("INVLAB_THREADS", threads, 1);
    CounterRng rng(9);
    return parallel_map(1000, [&](std::size_t i) { return rng.uniform(i) * double(i); });
  };
  const auto one = run("1");
  const auto four = run("4");
  unsetenv("INVLAB_THREADS");
  CHECK(one == four);
  CHECK(one[10] == CounterRng(9).uniform(10) * 10.0);
}

TEST_CASE("parallel_map rethrows the lowest-index failure") {
  setenv("INVLAB_THREADS", "3", 1);
  std::atomic<int> calls{0};
  try {
    parallel_map(50, [&](std::size_t i) -> int {
      ++calls;
      if (i == 7 || i == 31) throw std::runtime_error(std::to_string(i));
      return int(i);
    });
    FAIL("no exception");
  } catch (const std::runtime_error& e) {
    CHECK(std::string(e.what()) == "7");
  }
  unsetenv("INVLAB_THREADS");
  CHECK(calls == 50);
  CHECK(parallel_map(0, [](std::size_t) { return 1; }).empty());
}
