#pragma once

#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "invlab/geometry.hpp"

namespace invlab {

class MapDescriptor;

namespace maps {
struct Identity {};
struct Scale {
  cplx lambda;
};
// z -> (a z + b) / (c z + d)
struct Mobius {
  cplx a, b, c, d;
};
// theta(zeta) = i (1 - zeta) / (1 + zeta), unit disc onto the upper half-plane.
struct Cayley {};
// f(z) = ((z + 1) / (z - 1))^2, Pi_1 onto Pi.
struct HalfDiscToHalfPlane {};
// Composition{g, f} is g ∘ f: the last map is applied first.
struct Composition {
  std::vector<MapDescriptor> maps;
};
}  // namespace maps

class MapDescriptor {
 public:
  using Variant = std::variant<maps::Identity, maps::Scale, maps::Mobius,
                               maps::Cayley, maps::HalfDiscToHalfPlane,
                               maps::Composition>;

  static MapDescriptor identity() { return MapDescriptor(maps::Identity{}); }
  static MapDescriptor scale(cplx lambda);
  static MapDescriptor mobius(cplx a, cplx b, cplx c, cplx d);
  static MapDescriptor cayley() { return MapDescriptor(maps::Cayley{}); }
  static MapDescriptor halfdisc_to_halfplane() {
    return MapDescriptor(maps::HalfDiscToHalfPlane{});
  }
  static MapDescriptor compose(std::vector<MapDescriptor> outer_to_inner);

  const Variant& variant() const { return v_; }
  std::string literal() const;

 private:
  explicit MapDescriptor(Variant v) : v_(std::move(v)) {}
  Variant v_;
};

// Declared source domain, when narrower than "C minus the pole".
std::optional<Domain> source_domain(const MapDescriptor& f);

bool in_source(const MapDescriptor& f, cplx z);

cplx apply(const MapDescriptor& f, cplx z);
ComplexPoint apply(const MapDescriptor& f, const ComplexPoint& z);

cplx derivative(const MapDescriptor& f, cplx z);

// |central difference - derivative| / |derivative| with a real step h.
double numeric_derivative_check(const MapDescriptor& f, cplx z, double h);

// Local complex Newton iteration for f(z) = target, seeded at `seed`.
// Throws NumericalFailure when it does not converge inside the source.
cplx newton_preimage(const MapDescriptor& f, cplx target, cplx seed,
                     int max_iter = 100, double tol = 1e-14);

// halfdisc2halfplane | cayley | identity | scale:<l> | mobius:<a>,<b>,<c>,<d>
MapDescriptor parse_map(std::string_view text);

}  // namespace invlab
