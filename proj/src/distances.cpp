#include "invlab/distances.hpp"

#include <algorithm>

#include "invlab/conformal.hpp"
#include "invlab/metrics.hpp"
#include "invlab/text.hpp"

namespace invlab {

std::string to_string(DistanceMethod m) {
  switch (m) {
    case DistanceMethod::closed_form: return "closed_form";
    case DistanceMethod::pullback: return "pullback";
    case DistanceMethod::solver: return "solver";
  }
  return "unknown";
}

std::string to_string(DistanceKind k) {
  switch (k) {
    case DistanceKind::kobayashi: return "kobayashi";
    case DistanceKind::lempert: return "lempert";
    case DistanceKind::caratheodory: return "caratheodory";
  }
  return "unknown";
}

bool DistanceValue::infinite() const { return is_infinite(value); }

double hyperbolic_from_pseudo(double m, double one_minus_m2) {
  if (m >= kPseudodistanceCeiling) return kInfinite;
  if (m <= 0.0) return 0.0;
  return std::log1p(m) - 0.5 * std::log(one_minus_m2);
}

double hyperbolic_from_pseudo(double m) {
  if (m >= kPseudodistanceCeiling) return kInfinite;
  if (m <= 0.0) return 0.0;
  return 0.5 * std::log((1.0 + m) / (1.0 - m));
}

namespace {

void require_halfplane(cplx z, const char* what) {
  if (!(z.imag() > 0.0))
    throw OutsideDomain(std::string(what) + ": " + format_complex(z) +
                        " is not in the upper half-plane");
}

void require_halfdisc(cplx z, const char* what) {
  if (!(z.imag() > 0.0 && std::abs(z) < 1.0))
    throw OutsideDomain(std::string(what) + ": " + format_complex(z) +
                        " is not in Pi ∩ D");
}

double halfplane_k(cplx z, cplx w) {
  return hyperbolic_from_pseudo(mobius_halfplane(z, w),
                                halfplane_one_minus_m2(z, w));
}

// Disc of radius r centered at 0.
double disc_k(double r, cplx z, cplx w) {
  const cplx den = r * r - z * std::conj(w);
  const double m = r * std::abs(z - w) / std::abs(den);
  const double omm2 =
      (r * r - std::norm(z)) * (r * r - std::norm(w)) / std::norm(den);
  return hyperbolic_from_pseudo(m, omm2);
}

double halfdisc_k(double r, cplx z, cplx w) {
  static const MapDescriptor f = MapDescriptor::halfdisc_to_halfplane();
  return halfplane_k(apply(f, z / r), apply(f, w / r));
}

double ball_k(const ComplexPoint& z, const ComplexPoint& w) {
  const double m = ball_automorphism(z, w).norm();
  const double omm2 = (1.0 - std::norm(z.norm())) * (1.0 - std::norm(w.norm())) /
                      std::norm(1.0 - hermitian(w.coords(), z.coords()));
  return hyperbolic_from_pseudo(m, omm2);
}

ComplexPoint slice(const ComplexPoint& z, std::size_t off, std::size_t n) {
  return ComplexPoint(
      std::vector<cplx>(z.coords().begin() + off, z.coords().begin() + off + n));
}

}  // namespace

double mobius_halfplane(cplx z, cplx w) {
  require_halfplane(z, "mobius_halfplane");
  require_halfplane(w, "mobius_halfplane");
  return std::abs(z - w) / std::abs(z - std::conj(w));
}

double halfplane_one_minus_m2(cplx z, cplx w) {
  require_halfplane(z, "halfplane_one_minus_m2");
  require_halfplane(w, "halfplane_one_minus_m2");
  return 4.0 * z.imag() * w.imag() / std::norm(z - std::conj(w));
}

double pseudohyperbolic_disc(cplx z, cplx w) {
  if (!(std::abs(z) < 1.0 && std::abs(w) < 1.0))
    throw OutsideDomain("pseudohyperbolic_disc: points must lie in the unit disc");
  return std::abs(z - w) / std::abs(1.0 - z * std::conj(w));
}

DistanceValue kobayashi_distance(const Domain& d, const ComplexPoint& z,
                                 const ComplexPoint& w) {
  require_inside(d, z, "kobayashi_distance");
  require_inside(d, w, "kobayashi_distance");
  if (auto* b = d.as<BallIntersection>()) {
    if (b->base->is<HalfPlane>() && b->center[0] == cplx(0.0, 0.0) &&
        b->radius <= 1.0)
      return {halfdisc_k(b->radius, z[0], w[0]), DistanceMethod::pullback};
    throw Unsupported("kobayashi_distance: no closed form on " + d.literal());
  }
  struct V {
    const ComplexPoint& z;
    const ComplexPoint& w;
    DistanceValue operator()(const UnitDisc&) const {
      return {disc_k(1.0, z[0], w[0])};
    }
    DistanceValue operator()(const HalfPlane&) const {
      return {halfplane_k(z[0], w[0])};
    }
    DistanceValue operator()(const HalfDiscScaled& h) const {
      return {halfdisc_k(h.r, z[0], w[0]), DistanceMethod::pullback};
    }
    DistanceValue operator()(const Ball&) const { return {ball_k(z, w)}; }
    DistanceValue operator()(const Polydisc& p) const {
      double m = 0.0;
      for (std::size_t j = 0; j < p.radii.size(); ++j)
        m = std::max(m, disc_k(p.radii[j], z[j], w[j]));
      return {m};
    }
    DistanceValue operator()(const Product& p) const {
      DistanceValue out{0.0};
      std::size_t off = 0;
      for (const auto& f : p.factors) {
        const auto n = f.dim();
        const auto k = kobayashi_distance(f, slice(z, off, n), slice(w, off, n));
        if (k.value >= out.value) out = k;
        off += n;
      }
      return out;
    }
    DistanceValue operator()(const BallIntersection&) const {
      throw Unsupported("kobayashi_distance: unreachable");
    }
    DistanceValue operator()(const ReinhardtEllipsoid& e) const {
      if (e.exponents.size() == 1) return {disc_k(1.0, z[0], w[0])};
      throw Unsupported("kobayashi_distance: no closed form on ellipsoids");
    }
  };
  return std::visit(V{z, w}, d.variant());
}

DistanceValue lempert_function(const Domain& d, const ComplexPoint& z,
                               const ComplexPoint& w) {
  auto k = kobayashi_distance(d, z, w);
  k.kind = DistanceKind::lempert;
  return k;
}

DistanceValue caratheodory_distance(const Domain& d, const ComplexPoint& z,
                                    const ComplexPoint& w) {
  auto k = kobayashi_distance(d, z, w);
  k.kind = DistanceKind::caratheodory;
  return k;
}

double t1(cplx z, cplx w) {
  require_halfdisc(z, "t1");
  require_halfdisc(w, "t1");
  const double d = std::abs(z - w);
  const double dbar = std::abs(z - std::conj(w));
  const double a = std::abs(1.0 - z * w);
  const double b = std::abs(1.0 - z * std::conj(w));
  return std::log1p(d * z.imag() * w.imag() / (d + dbar) * 4.0 / ((a + b) * b));
}

double t2(cplx z, cplx w) {
  require_halfdisc(z, "t2");
  require_halfdisc(w, "t2");
  return -0.5 * std::log1p(-std::norm(z - w) / std::norm(1.0 - z * std::conj(w)));
}

double t1_asymptotic(cplx z, cplx w) {
  require_halfdisc(z, "t1_asymptotic");
  require_halfdisc(w, "t1_asymptotic");
  if (z == w) throw std::invalid_argument("t1_asymptotic: z == w");
  const double d = std::abs(z - w);
  return 2.0 * d * z.imag() * w.imag() / (d + std::abs(z - std::conj(w)));
}

double t2_asymptotic(cplx z, cplx w) {
  require_halfdisc(z, "t2_asymptotic");
  require_halfdisc(w, "t2_asymptotic");
  if (z == w) throw std::invalid_argument("t2_asymptotic: z == w");
  return 0.5 * std::norm(z - w);
}

GapDecomposition localization_gap_halfdisc(cplx z, cplx w) {
  GapDecomposition g;
  g.t1 = t1(z, w);
  g.t2 = t2(z, w);
  g.gap = g.t1 + g.t2;
  g.k_local = halfdisc_k(1.0, z, w);
  g.k_global = halfplane_k(z, w);
  g.residual = std::abs(g.gap - (g.k_local - g.k_global));
  return g;
}

}  // namespace invlab
