#pragma once

#include <cstdint>

#include "invlab/geometry.hpp"

namespace invlab {

// Counter-based generator: the value for (index, stream) depends only on the
// seed, never on evaluation order, so concurrent sampling is reproducible.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t bits(std::uint64_t index, std::uint64_t stream = 0) const;
  // Uniform in [0, 1) with 53 random bits.
  double uniform(std::uint64_t index, std::uint64_t stream = 0) const;

  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
};

// Uniform point of Pi ∩ rD (rejection sampling; sample k is a pure function
// of (seed, k, stream)).
cplx sample_halfdisc(const CounterRng& rng, std::uint64_t k, double r,
                     std::uint64_t stream = 0);
// Uniform point of the disc of radius r centered at 0.
cplx sample_disc(const CounterRng& rng, std::uint64_t k, double r,
                 std::uint64_t stream = 0);

// Uniform point of the unit ball in C^n.
ComplexPoint sample_ball(const CounterRng& rng, std::uint64_t k, std::size_t n,
                         std::uint64_t stream = 0);

}  // namespace invlab
