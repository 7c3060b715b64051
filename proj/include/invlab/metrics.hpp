#pragma once

#include <functional>
#include <limits>
#include <optional>
#include <string>

#include "invlab/conformal.hpp"
#include "invlab/geometry.hpp"

namespace invlab {

// Marker for t_D(z; X) = +inf (e.g. a metric localized to a subset U).  It
// propagates through sums, so any length that touches it is +inf as well.
inline constexpr double kInfinite = std::numeric_limits<double>::infinity();
inline bool is_infinite(double x) { return x == kInfinite; }

enum class DensitySource {
  kobayashi,
  bergman,
  normalized_bergman,
  pullback,
  localized,
  custom
};

std::string to_string(DensitySource s);

// Nonnegative, absolutely homogeneous function of (point, tangent vector).
class FinslerDensity {
 public:
  using Evaluator =
      std::function<double(const ComplexPoint&, const TangentVector&)>;
  using Membership = std::function<bool(const ComplexPoint&)>;

  static FinslerDensity kobayashi(const Domain& d);
  static FinslerDensity bergman(const Domain& d);
  static FinslerDensity normalized_bergman(const Domain& d);
  static FinslerDensity pullback(const MapDescriptor& f,
                                 const FinslerDensity& inner);
  // Equal to `inner` on inner-domain ∩ U and +inf on the rest.
  static FinslerDensity localized(const FinslerDensity& inner, const Domain& U);
  static FinslerDensity custom(Evaluator eval, Membership admits,
                               std::size_t dim, std::string label);

  // Throws OutsideDomain when z is not admissible.
  double operator()(const ComplexPoint& z, const TangentVector& X) const;
  bool admits(const ComplexPoint& z) const { return admits_(z); }

  DensitySource source() const { return source_; }
  const std::string& label() const { return label_; }
  std::size_t dim() const { return dim_; }

 private:
  FinslerDensity(Evaluator e, Membership m, DensitySource s, std::size_t dim,
                 std::string label)
      : eval_(std::move(e)),
        admits_(std::move(m)),
        source_(s),
        dim_(dim),
        label_(std::move(label)) {}

  Evaluator eval_;
  Membership admits_;
  DensitySource source_;
  std::size_t dim_;
  std::string label_;
};

// Automorphism of the unit ball exchanging a and 0.
ComplexPoint ball_automorphism(const ComplexPoint& a, const ComplexPoint& z);
// Differential of ball_automorphism(a, .) at z = a, applied to X.
TangentVector ball_automorphism_differential(const ComplexPoint& a,
                                             const TangentVector& X);

double kobayashi_royden_density(const Domain& d, const ComplexPoint& z,
                                const TangentVector& X);

// Closed forms on UnitDisc, Ball(n), Polydisc.
double bergman_metric(const Domain& d, const ComplexPoint& z,
                      const TangentVector& X);
// bergman_metric / sqrt(n + 1).
double normalized_bergman(const Domain& d, const ComplexPoint& z,
                          const TangentVector& X);

// density(f(z); f'(z) X) for a planar map f.
double pullback_density(const MapDescriptor& f, const FinslerDensity& density,
                        const ComplexPoint& z, const TangentVector& X);

struct SandwichCheck {
  double ratio;  // normalized Bergman / Kobayashi
  double lower;  // sigma^(n+1)
  double upper;  // sigma^-(n+1)
  bool holds;
};

// sigma^(n+1) <= nbergman / kobayashi <= sigma^-(n+1) for a user-supplied
// squeezing value sigma in (0, 1].
SandwichCheck squeezing_sandwich(const Domain& d, const ComplexPoint& z,
                                 const TangentVector& X, double sigma);

}  // namespace invlab
