#include "invlab/metrics.hpp"

#include <algorithm>

#include "invlab/text.hpp"

namespace invlab {

std::string to_string(DensitySource s) {
  switch (s) {
    case DensitySource::kobayashi: return "kobayashi";
    case DensitySource::bergman: return "bergman";
    case DensitySource::normalized_bergman: return "normalized_bergman";
    case DensitySource::pullback: return "pullback";
    case DensitySource::localized: return "localized";
    case DensitySource::custom: return "custom";
  }
  return "unknown";
}

namespace {

ComplexPoint slice_point(const ComplexPoint& z, std::size_t off, std::size_t n) {
  return ComplexPoint(
      std::vector<cplx>(z.coords().begin() + off, z.coords().begin() + off + n));
}

TangentVector slice_vector(const TangentVector& x, std::size_t off,
                           std::size_t n) {
  return TangentVector(
      std::vector<cplx>(x.coords().begin() + off, x.coords().begin() + off + n));
}

double halfplane_density(cplx z, cplx x) { return std::abs(x) / (2.0 * z.imag()); }

double halfdisc_density(double r, cplx z, cplx x) {
  static const MapDescriptor f = MapDescriptor::halfdisc_to_halfplane();
  const cplx u = z / r;
  return halfplane_density(apply(f, u), derivative(f, u) * x / r);
}

// Cap(halfplane; c = 0; r <= 1) built without normalization.
std::optional<double> as_halfdisc_radius(const Domain& d) {
  if (auto* h = d.as<HalfDiscScaled>()) return h->r;
  if (auto* b = d.as<BallIntersection>())
    if (b->base->is<HalfPlane>() && b->center[0] == cplx(0.0, 0.0) &&
        b->radius <= 1.0)
      return b->radius;
  return std::nullopt;
}

double disc_density(double r, cplx z, cplx x) {
  return std::abs(x) * r / (r * r - std::norm(z));
}

}  // namespace

ComplexPoint ball_automorphism(const ComplexPoint& a, const ComplexPoint& z) {
  require_same_dim(a.dim(), z.dim(), "ball_automorphism");
  const double a2 = std::norm(a.norm());
  const std::size_t n = a.dim();
  const cplx za = hermitian(z.coords(), a.coords());
  std::vector<cplx> out(n);
  if (a2 == 0.0) {
    for (std::size_t j = 0; j < n; ++j) out[j] = -z[j];
    return ComplexPoint(std::move(out));
  }
  const double s = std::sqrt(1.0 - a2);
  const cplx den = 1.0 - za;
  for (std::size_t j = 0; j < n; ++j) {
    const cplx p = za / a2 * a[j];  // P_a z
    const cplx q = z[j] - p;        // Q_a z
    out[j] = (a[j] - p - s * q) / den;
  }
  return ComplexPoint(std::move(out));
}

TangentVector ball_automorphism_differential(const ComplexPoint& a,
                                             const TangentVector& X) {
  require_same_dim(a.dim(), X.dim(), "ball_automorphism_differential");
  const double a2 = std::norm(a.norm());
  const std::size_t n = a.dim();
  std::vector<cplx> out(n);
  if (a2 == 0.0) {
    for (std::size_t j = 0; j < n; ++j) out[j] = -X[j];
    return TangentVector(std::move(out));
  }
  const double one_minus = 1.0 - a2;
  const cplx xa = hermitian(X.coords(), a.coords());
  for (std::size_t j = 0; j < n; ++j) {
    const cplx p = xa / a2 * a[j];
    const cplx q = X[j] - p;
    out[j] = -p / one_minus - q / std::sqrt(one_minus);
  }
  return TangentVector(std::move(out));
}

double kobayashi_royden_density(const Domain& d, const ComplexPoint& z,
                                const TangentVector& X) {
  require_same_dim(d.dim(), X.dim(), "kobayashi_royden_density");
  require_inside(d, z, "kobayashi_royden_density");
  if (auto r = as_halfdisc_radius(d)) return halfdisc_density(*r, z[0], X[0]);
  struct V {
    const ComplexPoint& z;
    const TangentVector& X;
    double operator()(const UnitDisc&) const { return disc_density(1.0, z[0], X[0]); }
    double operator()(const HalfPlane&) const { return halfplane_density(z[0], X[0]); }
    double operator()(const HalfDiscScaled& h) const {
      return halfdisc_density(h.r, z[0], X[0]);
    }
    double operator()(const Ball&) const {
      return ball_automorphism_differential(z, X).norm();
    }
    double operator()(const Polydisc& p) const {
      double m = 0.0;
      for (std::size_t j = 0; j < p.radii.size(); ++j)
        m = std::max(m, disc_density(p.radii[j], z[j], X[j]));
      return m;
    }
    double operator()(const Product& p) const {
      double m = 0.0;
      std::size_t off = 0;
      for (const auto& f : p.factors) {
        const auto n = f.dim();
        m = std::max(m, kobayashi_royden_density(f, slice_point(z, off, n),
                                                 slice_vector(X, off, n)));
        off += n;
      }
      return m;
    }
    double operator()(const BallIntersection&) const {
      throw Unsupported("kobayashi_royden_density: no closed form for this cap");
    }
    double operator()(const ReinhardtEllipsoid& e) const {
      if (e.exponents.size() == 1) return disc_density(1.0, z[0], X[0]);
      throw Unsupported("kobayashi_royden_density: no closed form for ellipsoids");
    }
  };
  return std::visit(V{z, X}, d.variant());
}

double bergman_metric(const Domain& d, const ComplexPoint& z,
                      const TangentVector& X) {
  require_same_dim(d.dim(), X.dim(), "bergman_metric");
  require_inside(d, z, "bergman_metric");
  if (d.is<UnitDisc>())
    return std::sqrt(2.0) * disc_density(1.0, z[0], X[0]);
  if (auto* b = d.as<Ball>())
    return std::sqrt(b->n + 1.0) * kobayashi_royden_density(d, z, X);
  if (auto* p = d.as<Polydisc>()) {
    double s = 0.0;
    for (std::size_t j = 0; j < p->radii.size(); ++j) {
      const double k = disc_density(p->radii[j], z[j], X[j]);
      s += 2.0 * k * k;
    }
    return std::sqrt(s);
  }
  throw Unsupported("bergman_metric: closed form only on disc, ball, polydisc (" +
                    d.literal() + ")");
}

double normalized_bergman(const Domain& d, const ComplexPoint& z,
                          const TangentVector& X) {
  return bergman_metric(d, z, X) / std::sqrt(double(d.dim()) + 1.0);
}

double pullback_density(const MapDescriptor& f, const FinslerDensity& density,
                        const ComplexPoint& z, const TangentVector& X) {
  const cplx u = z.scalar();
  return density(ComplexPoint(apply(f, u)), TangentVector(derivative(f, u) * X.scalar()));
}

SandwichCheck squeezing_sandwich(const Domain& d, const ComplexPoint& z,
                                 const TangentVector& X, double sigma) {
  if (!(sigma > 0.0 && sigma <= 1.0))
    throw std::invalid_argument("squeezing value must lie in (0, 1]");
  const double e = double(d.dim()) + 1.0;
  SandwichCheck c{};
  c.ratio = normalized_bergman(d, z, X) / kobayashi_royden_density(d, z, X);
  c.lower = std::pow(sigma, e);
  c.upper = std::pow(sigma, -e);
  c.holds = c.lower <= c.ratio && c.ratio <= c.upper;
  return c;
}

// ---------------------------------------------------------------------------

double FinslerDensity::operator()(const ComplexPoint& z,
                                  const TangentVector& X) const {
  if (!admits_(z))
    throw OutsideDomain(label_ + ": point " + format_point(z) +
                        " outside the density's domain");
  return eval_(z, X);
}

FinslerDensity FinslerDensity::kobayashi(const Domain& d) {
  return FinslerDensity(
      [d](const ComplexPoint& z, const TangentVector& X) {
        return kobayashi_royden_density(d, z, X);
      },
      [d](const ComplexPoint& z) { return contains(d, z); },
      DensitySource::kobayashi, d.dim(), "kobayashi(" + d.literal() + ")");
}

FinslerDensity FinslerDensity::bergman(const Domain& d) {
  return FinslerDensity(
      [d](const ComplexPoint& z, const TangentVector& X) {
        return bergman_metric(d, z, X);
      },
      [d](const ComplexPoint& z) { return contains(d, z); },
      DensitySource::bergman, d.dim(), "bergman(" + d.literal() + ")");
}

FinslerDensity FinslerDensity::normalized_bergman(const Domain& d) {
  return FinslerDensity(
      [d](const ComplexPoint& z, const TangentVector& X) {
        return invlab::normalized_bergman(d, z, X);
      },
      [d](const ComplexPoint& z) { return contains(d, z); },
      DensitySource::normalized_bergman, d.dim(),
      "nbergman(" + d.literal() + ")");
}

FinslerDensity FinslerDensity::pullback(const MapDescriptor& f,
                                        const FinslerDensity& inner) {
  if (inner.dim() != 1)
    throw DimensionMismatch("pullback: conformal maps act on planar densities");
  return FinslerDensity(
      [f, inner](const ComplexPoint& z, const TangentVector& X) {
        return pullback_density(f, inner, z, X);
      },
      [f, inner](const ComplexPoint& z) {
        if (z.dim() != 1 || !in_source(f, z[0])) return false;
        return inner.admits(ComplexPoint(apply(f, z[0])));
      },
      DensitySource::pullback, 1,
      "pullback(" + f.literal() + "," + inner.label() + ")");
}

FinslerDensity FinslerDensity::localized(const FinslerDensity& inner,
                                         const Domain& U) {
  require_same_dim(inner.dim(), U.dim(), "localized density");
  return FinslerDensity(
      [inner, U](const ComplexPoint& z, const TangentVector& X) {
        if (!contains(U, z)) return kInfinite;
        return inner(z, X);
      },
      [inner](const ComplexPoint& z) { return inner.admits(z); },
      DensitySource::localized, inner.dim(),
      "localized(" + inner.label() + "," + U.literal() + ")");
}

FinslerDensity FinslerDensity::custom(Evaluator eval, Membership admits,
                                      std::size_t dim, std::string label) {
  return FinslerDensity(std::move(eval), std::move(admits),
                        DensitySource::custom, dim, std::move(label));
}

}  // namespace invlab
