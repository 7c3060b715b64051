#include "invlab/geometry.hpp"

#include <algorithm>
#include <limits>
#include <numbers>

#include "invlab/text.hpp"

namespace invlab {

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b)
    throw DimensionMismatch(std::string(what) + ": dimension " +
                            std::to_string(a) + " vs " + std::to_string(b));
}

ComplexPoint operator+(const ComplexPoint& p, const TangentVector& v) {
  require_same_dim(p.dim(), v.dim(), "point + vector");
  std::vector<cplx> out(p.dim());
  for (std::size_t i = 0; i < p.dim(); ++i) out[i] = p[i] + v[i];
  return ComplexPoint(std::move(out));
}

TangentVector operator-(const ComplexPoint& a, const ComplexPoint& b) {
  require_same_dim(a.dim(), b.dim(), "point - point");
  std::vector<cplx> out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) out[i] = a[i] - b[i];
  return TangentVector(std::move(out));
}

TangentVector operator*(cplx s, const TangentVector& v) {
  std::vector<cplx> out(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) out[i] = s * v[i];
  return TangentVector(std::move(out));
}

TangentVector operator+(const TangentVector& a, const TangentVector& b) {
  require_same_dim(a.dim(), b.dim(), "vector + vector");
  std::vector<cplx> out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) out[i] = a[i] + b[i];
  return TangentVector(std::move(out));
}

double distance(const ComplexPoint& a, const ComplexPoint& b) {
  return (a - b).norm();
}

cplx hermitian(std::span<const cplx> a, std::span<const cplx> b) {
  require_same_dim(a.size(), b.size(), "hermitian product");
  cplx s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * std::conj(b[i]);
  return s;
}

// ---------------------------------------------------------------------------

namespace {

void require_positive(double x, const char* what) {
  if (!(x > 0.0) || !std::isfinite(x))
    throw std::invalid_argument(std::string(what) + " must be positive");
}

ComplexPoint slice(const ComplexPoint& z, std::size_t offset, std::size_t n) {
  std::vector<cplx> c(z.coords().begin() + offset,
                      z.coords().begin() + offset + n);
  return ComplexPoint(std::move(c));
}

// Sampled distance from moduli a to the level set {rho1^(2p1) + rho2^(2p2) = 1}.
double ellipsoid_boundary_distance_2d(double a1, double a2, double p1,
                                      double p2) {
  auto dist = [&](double th) {
    const double r1 = std::pow(std::cos(th), 1.0 / p1);
    const double r2 = std::pow(std::sin(th), 1.0 / p2);
    return std::hypot(a1 - r1, a2 - r2);
  };
  constexpr int kSamples = 4096;
  const double hi = std::numbers::pi / 2;
  int best = 0;
  double best_d = std::numeric_limits<double>::infinity();
  for (int k = 0; k <= kSamples; ++k) {
    const double d = dist(hi * k / kSamples);
    if (d < best_d) {
      best_d = d;
      best = k;
    }
  }
  // golden-section refinement on the bracketing cell
  double lo = hi * std::max(0, best - 1) / kSamples;
  double up = hi * std::min(kSamples, best + 1) / kSamples;
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = up - g * (up - lo), x2 = lo + g * (up - lo);
  double f1 = dist(x1), f2 = dist(x2);
  for (int it = 0; it < 100 && up - lo > 1e-15; ++it) {
    if (f1 < f2) {
      up = x2;
      x2 = x1;
      f2 = f1;
      x1 = up - g * (up - lo);
      f1 = dist(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + g * (up - lo);
      f2 = dist(x2);
    }
  }
  return std::min({best_d, f1, f2});
}

}  // namespace

Domain Domain::halfdisc(double r) {
  require_positive(r, "halfdisc radius");
  if (r > 1.0) throw std::invalid_argument("halfdisc radius must be <= 1");
  return Domain(HalfDiscScaled{r});
}

Domain Domain::ball(int n) {
  if (n < 1) throw std::invalid_argument("ball dimension must be >= 1");
  return Domain(Ball{n});
}

Domain Domain::polydisc(std::vector<double> radii) {
  if (radii.empty()) throw std::invalid_argument("polydisc needs radii");
  for (double r : radii) require_positive(r, "polydisc radius");
  return Domain(Polydisc{std::move(radii)});
}

Domain Domain::product(std::vector<Domain> factors) {
  if (factors.empty()) throw std::invalid_argument("product needs factors");
  return Domain(Product{std::move(factors)});
}

Domain Domain::ellipsoid(std::vector<double> exponents) {
  if (exponents.empty())
    throw std::invalid_argument("ellipsoid needs exponents");
  for (double p : exponents) require_positive(p, "ellipsoid exponent");
  return Domain(ReinhardtEllipsoid{std::move(exponents)});
}

Domain Domain::ball_intersection(Domain base, ComplexPoint center,
                                 double radius) {
  require_positive(radius, "cap radius");
  require_same_dim(base.dim(), center.dim(), "cap center");
  if (!center.finite()) throw std::invalid_argument("cap center not finite");
  if (!contains(base, center) && !(distance_to_closure(base, center) < radius))
    throw EmptyIntersection("ball B(" + format_point(center) + ", " +
                            format_double(radius) + ") misses " +
                            base.literal());
  return Domain(BallIntersection{std::make_shared<const Domain>(std::move(base)),
                                 std::move(center), radius});
}

std::size_t Domain::dim() const {
  struct V {
    std::size_t operator()(const UnitDisc&) const { return 1; }
    std::size_t operator()(const HalfPlane&) const { return 1; }
    std::size_t operator()(const HalfDiscScaled&) const { return 1; }
    std::size_t operator()(const Ball& b) const { return std::size_t(b.n); }
    std::size_t operator()(const Polydisc& p) const { return p.radii.size(); }
    std::size_t operator()(const Product& p) const {
      std::size_t n = 0;
      for (const auto& f : p.factors) n += f.dim();
      return n;
    }
    std::size_t operator()(const BallIntersection& b) const {
      return b.base->dim();
    }
    std::size_t operator()(const ReinhardtEllipsoid& e) const {
      return e.exponents.size();
    }
  };
  return std::visit(V{}, v_);
}

std::string Domain::literal() const {
  auto join = [](const std::vector<double>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (i) s += ',';
      s += format_double(xs[i]);
    }
    return s;
  };
  struct V {
    decltype(join)& j;
    std::string operator()(const UnitDisc&) const { return "disc"; }
    std::string operator()(const HalfPlane&) const { return "halfplane"; }
    std::string operator()(const HalfDiscScaled& h) const {
      return "halfdisc:r=" + format_double(h.r);
    }
    std::string operator()(const Ball& b) const {
      return "ball:n=" + std::to_string(b.n);
    }
    std::string operator()(const Polydisc& p) const {
      return "polydisc:r=" + j(p.radii);
    }
    std::string operator()(const Product& p) const {
      std::string s = "prod(";
      for (std::size_t i = 0; i < p.factors.size(); ++i) {
        if (i) s += ';';
        s += p.factors[i].literal();
      }
      return s + ")";
    }
    std::string operator()(const BallIntersection& b) const {
      return "cap(" + b.base->literal() + ";c=" + format_point(b.center) +
             ";r=" + format_double(b.radius) + ")";
    }
    std::string operator()(const ReinhardtEllipsoid& e) const {
      return "ellipsoid:p=" + j(e.exponents);
    }
  };
  return std::visit(V{join}, v_);
}

bool contains(const Domain& d, const ComplexPoint& z) {
  require_same_dim(d.dim(), z.dim(), "contains");
  if (!z.finite()) return false;
  struct V {
    const ComplexPoint& z;
    bool operator()(const UnitDisc&) const { return std::abs(z[0]) < 1.0; }
    bool operator()(const HalfPlane&) const { return z[0].imag() > 0.0; }
    bool operator()(const HalfDiscScaled& h) const {
      return z[0].imag() > 0.0 && std::abs(z[0]) < h.r;
    }
    bool operator()(const Ball&) const { return z.norm() < 1.0; }
    bool operator()(const Polydisc& p) const {
      for (std::size_t j = 0; j < p.radii.size(); ++j)
        if (!(std::abs(z[j]) < p.radii[j])) return false;
      return true;
    }
    bool operator()(const Product& p) const {
      std::size_t off = 0;
      for (const auto& f : p.factors) {
        if (!contains(f, slice(z, off, f.dim()))) return false;
        off += f.dim();
      }
      return true;
    }
    bool operator()(const BallIntersection& b) const {
      return contains(*b.base, z) && distance(z, b.center) < b.radius;
    }
    bool operator()(const ReinhardtEllipsoid& e) const {
      double s = 0.0;
      for (std::size_t j = 0; j < e.exponents.size(); ++j)
        s += std::pow(std::abs(z[j]), 2.0 * e.exponents[j]);
      return s < 1.0;
    }
  };
  return std::visit(V{z}, d.variant());
}

void require_inside(const Domain& d, const ComplexPoint& z, const char* what) {
  if (!contains(d, z))
    throw OutsideDomain(std::string(what) + ": point " + format_point(z) +
                        " is not in " + d.literal());
}

double boundary_distance(const Domain& d, const ComplexPoint& z) {
  require_inside(d, z, "boundary_distance");
  struct V {
    const ComplexPoint& z;
    double operator()(const UnitDisc&) const { return 1.0 - std::abs(z[0]); }
    double operator()(const HalfPlane&) const { return z[0].imag(); }
    double operator()(const HalfDiscScaled& h) const {
      return std::min(z[0].imag(), h.r - std::abs(z[0]));
    }
    double operator()(const Ball&) const { return 1.0 - z.norm(); }
    double operator()(const Polydisc& p) const {
      double m = std::numeric_limits<double>::infinity();
      for (std::size_t j = 0; j < p.radii.size(); ++j)
        m = std::min(m, p.radii[j] - std::abs(z[j]));
      return m;
    }
    double operator()(const Product& p) const {
      double m = std::numeric_limits<double>::infinity();
      std::size_t off = 0;
      for (const auto& f : p.factors) {
        m = std::min(m, boundary_distance(f, slice(z, off, f.dim())));
        off += f.dim();
      }
      return m;
    }
    double operator()(const BallIntersection& b) const {
      return std::min(boundary_distance(*b.base, z),
                      b.radius - distance(z, b.center));
    }
    double operator()(const ReinhardtEllipsoid& e) const {
      if (e.exponents.size() == 1) return 1.0 - std::abs(z[0]);
      if (e.exponents.size() == 2)
        return ellipsoid_boundary_distance_2d(std::abs(z[0]), std::abs(z[1]),
                                              e.exponents[0], e.exponents[1]);
      throw Unsupported("boundary_distance: ellipsoid of dimension > 2");
    }
  };
  return std::visit(V{z}, d.variant());
}

double distance_to_closure(const Domain& d, const ComplexPoint& c) {
  require_same_dim(d.dim(), c.dim(), "distance_to_closure");
  if (contains(d, c)) return 0.0;
  struct V {
    const ComplexPoint& c;
    double operator()(const UnitDisc&) const {
      return std::max(0.0, std::abs(c[0]) - 1.0);
    }
    double operator()(const HalfPlane&) const {
      return std::max(0.0, -c[0].imag());
    }
    double operator()(const HalfDiscScaled& h) const {
      const cplx z = c[0];
      if (z.imag() >= 0.0) return std::max(0.0, std::abs(z) - h.r);
      const double x = std::clamp(z.real(), -h.r, h.r);
      return std::abs(z - cplx(x, 0.0));
    }
    double operator()(const Ball&) const {
      return std::max(0.0, c.norm() - 1.0);
    }
    double operator()(const Polydisc& p) const {
      double s = 0.0;
      for (std::size_t j = 0; j < p.radii.size(); ++j) {
        const double e = std::max(0.0, std::abs(c[j]) - p.radii[j]);
        s += e * e;
      }
      return std::sqrt(s);
    }
    double operator()(const Product& p) const {
      double s = 0.0;
      std::size_t off = 0;
      for (const auto& f : p.factors) {
        const double e = distance_to_closure(f, slice(c, off, f.dim()));
        s += e * e;
        off += f.dim();
      }
      return std::sqrt(s);
    }
    double operator()(const BallIntersection&) const {
      throw Unsupported("distance_to_closure: nested cap with exterior center");
    }
    double operator()(const ReinhardtEllipsoid&) const {
      throw Unsupported("distance_to_closure: ellipsoid with exterior point");
    }
  };
  return std::visit(V{c}, d.variant());
}

Domain intersect_with_ball(const Domain& d, const ComplexPoint& center,
                           double radius) {
  require_same_dim(d.dim(), center.dim(), "intersect_with_ball");
  if (d.is<HalfPlane>() && center[0] == cplx(0.0, 0.0) && radius > 0.0 &&
      radius <= 1.0)
    return Domain::halfdisc(radius);
  return Domain::ball_intersection(d, center, radius);
}

}  // namespace invlab
