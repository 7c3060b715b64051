#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "invlab/geometry.hpp"

namespace invlab {

class AdmissibleWeight {
 public:
  enum class Form { power, linear, tabulated };

  // c * x^alpha.  Any real alpha is accepted so that non-admissible powers
  // can be fed to check_admissible; weight_integral needs alpha > 0.
  static AdmissibleWeight power(double c, double alpha);
  static AdmissibleWeight linear(double c);
  // Log-log interpolation between samples, power-law extrapolation outside.
  // Needs >= 2 strictly increasing abscissae and positive values.
  static AdmissibleWeight tabulated(std::vector<double> xs, std::vector<double> fs);

  double operator()(double x) const;

  Form form() const { return form_; }
  double c() const { return c_; }
  double alpha() const { return alpha_; }
  const std::vector<double>& xs() const { return xs_; }
  const std::vector<double>& fs() const { return fs_; }
  std::string label() const;

 private:
  AdmissibleWeight() = default;
  Form form_ = Form::power;
  double c_ = 1.0;
  double alpha_ = 1.0;
  std::vector<double> xs_, fs_;
};

struct GeometricGrid {
  double lo = 1e-8;
  double hi = 1.0;
  int per_decade = 64;
};

inline constexpr const char* kNotPositive = "f not positive";
inline constexpr const char* kNotIncreasing = "f not increasing";
inline constexpr const char* kNotUnbounded = "f not unbounded";
inline constexpr const char* kRatioNotDecreasing = "f(x)/x not decreasing";
inline constexpr const char* kIntegralDiverges = "integral of f(x)/x over (0,1] diverges";

// Empty iff every condition holds on the grid.  Unboundedness is judged from
// the growth of f over 16 decades beyond the grid; the integral from the
// dyadic increments of int_{2^-k}^1 f(x)/x dx.
std::vector<std::string> check_admissible(const AdmissibleWeight& f,
                                          const GeometricGrid& grid = {});

// int_0^T f(x)/x dx.
double weight_integral(const AdmissibleWeight& f, double T);

struct BoundParams {
  double c1 = 1.0, c2 = 1.0, c3 = 1.0, C = 1.0;
  int m = 1;

  void validate() const;
};

double rhs_distupest(const AdmissibleWeight& f, const BoundParams& p,
                     const ComplexPoint& z, const ComplexPoint& w);
double rhs_uprat(const AdmissibleWeight& f, const BoundParams& p,
                 const ComplexPoint& z, const ComplexPoint& w, double delta_z);
double better_bound(const ComplexPoint& z, const ComplexPoint& w, double delta_z,
                    double delta_w, double C, int m);
double rhs_dimone(double C, const ComplexPoint& z, const ComplexPoint& w,
                  double delta_z, double delta_w);
double rhs_nikolov_andreev(const ComplexPoint& z, const ComplexPoint& w,
                           double delta_z, double delta_w, double C);
// m log(1 + C1 |z-w| / delta_z^(1/(2m))).
double rhs_pisalow(const ComplexPoint& z, const ComplexPoint& w, double delta_z,
                   double C1, int m);

using PointPair = std::pair<ComplexPoint, ComplexPoint>;
using PairFunction = std::function<double(const ComplexPoint&, const ComplexPoint&)>;

struct BoundReport {
  double max_ratio = 0.0;
  std::optional<PointPair> argmax_pair;
  std::size_t sample_count = 0;  // pairs actually used (z != w)
  std::optional<double> fitted_exponent;
};

// max of lhs/rhs over pairs with z != w.  Pairs are evaluated concurrently;
// ties resolve to the lowest index.
BoundReport empirical_constant(const std::vector<PointPair>& pairs,
                               const PairFunction& lhs, const PairFunction& rhs);

// Least-squares slope of log g against log h.
double fit_exponent(const std::vector<std::pair<double, double>>& samples);

struct SharpnessRow {
  std::string family;
  double t;
  cplx z, w;
  double gap;
  double shape;  // the retained right-hand side
  double ratio;  // gap / shape
};

// Families (all on the imaginary axis, z = it):
//   imaginary-axis   w = it/2,          shape |z-w|(|z-w|/2 + min Im)
//   quadratic-dropped w = it^2,         shape |z-w| min Im
//   min-dropped      w = i(1-1e-6)t,    shape |z-w|^2 / 2
// The last two blow up as t -> 0, so neither term can be removed.
std::vector<SharpnessRow> sharpness_sweep(const std::vector<double>& t_values);

}  // namespace invlab
