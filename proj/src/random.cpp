#include "invlab/random.hpp"

namespace invlab {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t CounterRng::bits(std::uint64_t index, std::uint64_t stream) const {
  return splitmix(splitmix(seed_ ^ splitmix(stream)) ^ index);
}

double CounterRng::uniform(std::uint64_t index, std::uint64_t stream) const {
  return double(bits(index, stream) >> 11) * 0x1.0p-53;
}

cplx sample_halfdisc(const CounterRng& rng, std::uint64_t k, double r,
                     std::uint64_t stream) {
  for (std::uint64_t attempt = 0;; ++attempt) {
    const std::uint64_t s = (stream << 20) + 2 * attempt;
    const double x = r * (2.0 * rng.uniform(k, s) - 1.0);
    const double y = r * rng.uniform(k, s + 1);
    if (y > 0.0 && x * x + y * y < r * r) return {x, y};
  }
}

cplx sample_disc(const CounterRng& rng, std::uint64_t k, double r,
                 std::uint64_t stream) {
  for (std::uint64_t attempt = 0;; ++attempt) {
    const std::uint64_t s = (stream << 20) + 2 * attempt;
    const double x = r * (2.0 * rng.uniform(k, s) - 1.0);
    const double y = r * (2.0 * rng.uniform(k, s + 1) - 1.0);
    if (x * x + y * y < r * r) return {x, y};
  }
}

ComplexPoint sample_ball(const CounterRng& rng, std::uint64_t k, std::size_t n,
                         std::uint64_t stream) {
  std::vector<cplx> c(n);
  for (std::uint64_t attempt = 0;; ++attempt) {
    const std::uint64_t s = (stream << 20) + 2 * n * attempt;
    double r2 = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      c[j] = {2.0 * rng.uniform(k, s + 2 * j) - 1.0,
              2.0 * rng.uniform(k, s + 2 * j + 1) - 1.0};
      r2 += std::norm(c[j]);
    }
    if (r2 < 1.0) return ComplexPoint(c);
  }
}

}  // namespace invlab
