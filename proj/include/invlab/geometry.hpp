#pragma once

#include <cmath>
#include <complex>
#include <initializer_list>
#include <memory>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "invlab/errors.hpp"

namespace invlab {

using cplx = std::complex<double>;

namespace detail {

// Shared storage for points and tangent vectors of C^n.  The tag keeps the
// two apart at the type level.
template <class Tag>
class CVec {
 public:
  CVec() = default;
  CVec(cplx c) : coords_{c} {}  // NOLINT: planar convenience
  CVec(double x) : coords_{cplx(x, 0.0)} {}  // NOLINT
  CVec(std::initializer_list<cplx> c) : coords_(c) {}
  explicit CVec(std::vector<cplx> c) : coords_(std::move(c)) {}

  std::size_t dim() const { return coords_.size(); }
  const cplx& operator[](std::size_t i) const { return coords_[i]; }
  cplx& operator[](std::size_t i) { return coords_[i]; }
  std::span<const cplx> coords() const { return coords_; }

  // Only meaningful for n = 1.
  cplx scalar() const {
    if (coords_.size() != 1)
      throw DimensionMismatch("expected a planar (n = 1) value, got n = " +
                              std::to_string(coords_.size()));
    return coords_[0];
  }

  double norm() const {
    double s = 0.0;
    for (const auto& c : coords_) s += std::norm(c);
    return std::sqrt(s);
  }

  bool finite() const {
    for (const auto& c : coords_)
      if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
    return true;
  }

  friend bool operator==(const CVec&, const CVec&) = default;

 private:
  std::vector<cplx> coords_;
};

struct PointTag {};
struct VectorTag {};

}  // namespace detail

using ComplexPoint = detail::CVec<detail::PointTag>;
using TangentVector = detail::CVec<detail::VectorTag>;

void require_same_dim(std::size_t a, std::size_t b, const char* what);

ComplexPoint operator+(const ComplexPoint& p, const TangentVector& v);
TangentVector operator-(const ComplexPoint& a, const ComplexPoint& b);
TangentVector operator*(cplx s, const TangentVector& v);
TangentVector operator+(const TangentVector& a, const TangentVector& b);
double distance(const ComplexPoint& a, const ComplexPoint& b);
// Hermitian product <a, b> = sum a_j conj(b_j).
cplx hermitian(std::span<const cplx> a, std::span<const cplx> b);

// ---------------------------------------------------------------------------
// Domain catalog

class Domain;

struct UnitDisc {};
struct HalfPlane {};
// Pi ∩ rD with 0 < r <= 1.
struct HalfDiscScaled {
  double r = 1.0;
};
struct Ball {
  int n = 1;
};
struct Polydisc {
  std::vector<double> radii;
};
struct Product {
  std::vector<Domain> factors;
};
struct BallIntersection {
  std::shared_ptr<const Domain> base;
  ComplexPoint center;
  double radius = 1.0;
};
// { z : sum_j |z_j|^(2 p_j) < 1 }
struct ReinhardtEllipsoid {
  std::vector<double> exponents;
};

class Domain {
 public:
  using Variant = std::variant<UnitDisc, HalfPlane, HalfDiscScaled, Ball,
                               Polydisc, Product, BallIntersection,
                               ReinhardtEllipsoid>;

  static Domain disc() { return Domain(UnitDisc{}); }
  static Domain halfplane() { return Domain(HalfPlane{}); }
  static Domain halfdisc(double r = 1.0);
  static Domain ball(int n);
  static Domain polydisc(std::vector<double> radii);
  static Domain product(std::vector<Domain> factors);
  static Domain ellipsoid(std::vector<double> exponents);
  // Raw constructor; validates the invariants of each variant.
  static Domain ball_intersection(Domain base, ComplexPoint center,
                                  double radius);

  const Variant& variant() const { return v_; }
  template <class T>
  const T* as() const {
    return std::get_if<T>(&v_);
  }
  template <class T>
  bool is() const {
    return std::holds_alternative<T>(v_);
  }

  std::size_t dim() const;
  // Literal form accepted by parse_domain.
  std::string literal() const;
  // Planar members of the catalog.
  bool planar() const { return dim() == 1; }

 private:
  explicit Domain(Variant v) : v_(std::move(v)) {}
  Variant v_;
};

bool contains(const Domain& d, const ComplexPoint& z);

// Euclidean distance from z to the complement of d.  Throws OutsideDomain
// for non-members.
double boundary_distance(const Domain& d, const ComplexPoint& z);

// d ∩ B(center, radius).  HalfPlane ∩ B(0, r) with r <= 1 normalizes to
// HalfDiscScaled(r).
Domain intersect_with_ball(const Domain& d, const ComplexPoint& center,
                           double radius);

// Euclidean distance from c to the closure of d (0 for members).
double distance_to_closure(const Domain& d, const ComplexPoint& c);

void require_inside(const Domain& d, const ComplexPoint& z, const char* what);

}  // namespace invlab
