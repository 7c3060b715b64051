#include "invlab/localization.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "invlab/distances.hpp"
#include "invlab/errors.hpp"
#include "invlab/parallel.hpp"
#include "invlab/text.hpp"

namespace invlab {

namespace {

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v))
    throw std::invalid_argument(std::string(what) + " must be positive and finite");
}

void require_nonnegative(double v, const char* what) {
  if (!(v >= 0.0) || !std::isfinite(v))
    throw std::invalid_argument(std::string(what) + " must be >= 0 and finite");
}

// int_a^b g(e^u) du, i.e. int_{e^a}^{e^b} g(x)/x dx.
double log_integral(const AdmissibleWeight& f, double a, double b) {
  double err = 0.0;
  const double v = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
      [&](double u) { return f(std::exp(u)); }, a, b, 15, 1e-13, &err);
  // Boost reports a conservative, QUADPACK-style estimate
  if (!(err <= 1e-6 * std::abs(v) + 1e-300))
    throw NumericalFailure("weight integral did not converge on [" +
                           format_double(std::exp(a)) + ", " +
                           format_double(std::exp(b)) + "]");
  return v;
}

double slope(const std::vector<double>& xs, const std::vector<double>& fs,
             std::size_t i) {
  return std::log(fs[i + 1] / fs[i]) / std::log(xs[i + 1] / xs[i]);
}

}  // namespace

AdmissibleWeight AdmissibleWeight::power(double c, double alpha) {
  require_positive(c, "power weight constant");
  if (!std::isfinite(alpha))
    throw std::invalid_argument("power weight exponent must be finite");
  AdmissibleWeight f;
  f.form_ = Form::power;
  f.c_ = c;
  f.alpha_ = alpha;
  return f;
}

AdmissibleWeight AdmissibleWeight::linear(double c) {
  require_positive(c, "linear weight constant");
  AdmissibleWeight f;
  f.form_ = Form::linear;
  f.c_ = c;
  return f;
}

AdmissibleWeight AdmissibleWeight::tabulated(std::vector<double> xs,
                                             std::vector<double> fs) {
  if (xs.size() != fs.size() || xs.size() < 2)
    throw std::invalid_argument("tabulated weight needs >= 2 (x, f) samples");
  for (std::size_t i = 0; i < xs.size(); ++i) {
    require_positive(xs[i], "tabulated abscissa");
    require_positive(fs[i], "tabulated value");
    if (i > 0 && !(xs[i] > xs[i - 1]))
      throw std::invalid_argument("tabulated abscissae must increase strictly");
  }
  AdmissibleWeight f;
  f.form_ = Form::tabulated;
  f.xs_ = std::move(xs);
  f.fs_ = std::move(fs);
  return f;
}

double AdmissibleWeight::operator()(double x) const {
  switch (form_) {
    case Form::power: return c_ * std::pow(x, alpha_);
    case Form::linear: return c_ * x;
    case Form::tabulated: break;
  }
  const std::size_t n = xs_.size();
  std::size_t i = 0;
  if (x >= xs_.back()) {
    i = n - 2;
  } else if (x > xs_.front()) {
    i = std::size_t(std::upper_bound(xs_.begin(), xs_.end(), x) - xs_.begin()) - 1;
  }
  return fs_[i] * std::pow(x / xs_[i], slope(xs_, fs_, i));
}

std::string AdmissibleWeight::label() const {
  switch (form_) {
    case Form::power: return "power:c=" + format_double(c_) + ",a=" + format_double(alpha_);
    case Form::linear: return "linear:c=" + format_double(c_);
    case Form::tabulated: return "tabulated:" + std::to_string(xs_.size()) + " samples";
  }
  return "unknown";
}

std::vector<std::string> check_admissible(const AdmissibleWeight& f,
                                          const GeometricGrid& grid) {
  if (!(grid.lo > 0.0 && grid.hi > grid.lo && grid.per_decade > 0 &&
        std::isfinite(grid.hi)))
    throw std::invalid_argument("grid must satisfy 0 < lo < hi < inf");

  const int count =
      int(std::lround(std::log10(grid.hi / grid.lo) * grid.per_decade)) + 1;
  std::vector<double> x(static_cast<std::size_t>(count)), fx(x.size());
  for (int i = 0; i < count; ++i) {
    x[std::size_t(i)] = i + 1 == count
                            ? grid.hi
                            : grid.lo * std::pow(10.0, double(i) / grid.per_decade);
    fx[std::size_t(i)] = f(x[std::size_t(i)]);
  }

  std::vector<std::string> out;
  if (!std::all_of(fx.begin(), fx.end(),
                   [](double v) { return v > 0.0 && std::isfinite(v); })) {
    out.emplace_back(kNotPositive);
    return out;  // the remaining tests divide by f
  }

  bool increasing = true, ratio_decreasing = true;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    if (!(fx[i + 1] > fx[i])) increasing = false;
    if (fx[i + 1] / x[i + 1] > (fx[i] / x[i]) * (1.0 + 1e-12)) ratio_decreasing = false;
  }
  if (!increasing) out.emplace_back(kNotIncreasing);

  // growth over the last of 16 decades beyond the grid
  const double far = f(grid.hi * 1e16), near = f(grid.hi * 1e15);
  if (!(std::isfinite(far) && far > 0.0 && std::log10(far / near) > 1e-9))
    out.emplace_back(kNotUnbounded);

  if (!ratio_decreasing) out.emplace_back(kRatioNotDecreasing);

  // increments I_k = int_{2^-k}^{2^-k+1} f(x)/x dx, k = 1..60
  constexpr int kLevels = 60;
  const double ln2 = std::log(2.0);
  std::vector<double> inc;
  bool converges = true;
  try {
    for (int k = 1; k <= kLevels; ++k)
      inc.push_back(log_integral(f, -k * ln2, -(k - 1) * ln2));
    double q = 0.0;
    for (int k = kLevels - 10; k < kLevels; ++k)
      q = std::max(q, inc[std::size_t(k)] / inc[std::size_t(k - 1)]);
    converges = q < 1.0 - 1e-9 && std::isfinite(q);
  } catch (const NumericalFailure&) {
    converges = false;
  }
  if (!converges) out.emplace_back(kIntegralDiverges);
  return out;
}

double weight_integral(const AdmissibleWeight& f, double T) {
  if (!(T >= 0.0) || !std::isfinite(T))
    throw std::invalid_argument("weight_integral: T must be >= 0 and finite");
  if (T == 0.0) return 0.0;
  switch (f.form()) {
    case AdmissibleWeight::Form::power:
      if (!(f.alpha() > 0.0))
        throw NumericalFailure("weight_integral: x^" + format_double(f.alpha()) +
                               "/x is not integrable at 0");
      return f.c() * std::pow(T, f.alpha()) / f.alpha();
    case AdmissibleWeight::Form::linear:
      return f.c() * T;
    case AdmissibleWeight::Form::tabulated:
      break;
  }

  // below the first sample f is an exact power law, integrated analytically
  const auto& xs = f.xs();
  const double s0 = slope(xs, f.fs(), 0);
  if (!(s0 > 0.0))
    throw NumericalFailure("weight_integral: tabulated weight does not vanish at 0");
  const double cut = std::min(T, xs.front());
  double total = f(cut) / s0;
  double a = cut;
  for (std::size_t i = 1; i < xs.size() && a < T; ++i) {
    const double b = std::min(T, xs[i]);
    if (b > a) total += log_integral(f, std::log(a), std::log(b));
    a = std::max(a, b);
  }
  if (a < T) total += log_integral(f, std::log(a), std::log(T));
  return total;
}

void BoundParams::validate() const {
  require_positive(c1, "c1");
  require_positive(c2, "c2");
  require_positive(c3, "c3");
  require_positive(C, "C");
  if (m < 1) throw std::invalid_argument("type exponent m must be >= 1");
}

double rhs_distupest(const AdmissibleWeight& f, const BoundParams& p,
                     const ComplexPoint& z, const ComplexPoint& w) {
  p.validate();
  const double d = distance(z, w);
  return p.c1 * weight_integral(f, p.c2 * std::pow(d, 1.0 / (2 * p.m)));
}

double rhs_uprat(const AdmissibleWeight& f, const BoundParams& p,
                 const ComplexPoint& z, const ComplexPoint& w, double delta_z) {
  p.validate();
  require_nonnegative(delta_z, "delta_z");
  const double arg = p.c3 * (delta_z + std::pow(distance(z, w), 1.0 / (2 * p.m)));
  return arg == 0.0 ? 1.0 : 1.0 + f(arg);
}

double better_bound(const ComplexPoint& z, const ComplexPoint& w, double delta_z,
                    double delta_w, double C, int m) {
  require_nonnegative(delta_z, "delta_z");
  require_nonnegative(delta_w, "delta_w");
  require_positive(C, "C");
  if (m < 1) throw std::invalid_argument("type exponent m must be >= 1");
  const double d = distance(z, w);
  if (d == 0.0) return 0.0;
  const double den = std::sqrt(d) + std::sqrt(delta_z) + std::sqrt(delta_w);
  return C * std::pow(d / den, 1.0 / m);
}

double rhs_dimone(double C, const ComplexPoint& z, const ComplexPoint& w,
                  double delta_z, double delta_w) {
  require_nonnegative(delta_z, "delta_z");
  require_nonnegative(delta_w, "delta_w");
  const double d = distance(z, w);
  return C * d * (d + std::sqrt(delta_z * delta_w));
}

double rhs_nikolov_andreev(const ComplexPoint& z, const ComplexPoint& w,
                           double delta_z, double delta_w, double C) {
  require_positive(delta_z, "delta_z");
  require_positive(delta_w, "delta_w");
  return std::log1p(C * distance(z, w) / std::sqrt(delta_z * delta_w));
}

double rhs_pisalow(const ComplexPoint& z, const ComplexPoint& w, double delta_z,
                   double C1, int m) {
  require_positive(delta_z, "delta_z");
  if (m < 1) throw std::invalid_argument("type exponent m must be >= 1");
  return m * std::log1p(C1 * distance(z, w) / std::pow(delta_z, 1.0 / (2 * m)));
}

BoundReport empirical_constant(const std::vector<PointPair>& pairs,
                               const PairFunction& lhs, const PairFunction& rhs) {
  if (pairs.empty()) throw std::invalid_argument("empirical_constant: no pairs");
  constexpr double kSkip = std::numeric_limits<double>::quiet_NaN();
  const auto ratios = parallel_map(pairs.size(), [&](std::size_t i) {
    const auto& [z, w] = pairs[i];
    if (z == w) return kSkip;
    const double r = rhs(z, w);
    if (!(r > 0.0))
      throw std::invalid_argument("empirical_constant: right-hand side " +
                                  format_double(r) + " is not positive at pair " +
                                  std::to_string(i));
    return lhs(z, w) / r;
  });

  BoundReport rep;
  rep.max_ratio = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < ratios.size(); ++i) {
    if (std::isnan(ratios[i])) continue;
    ++rep.sample_count;
    if (ratios[i] > rep.max_ratio) {
      rep.max_ratio = ratios[i];
      rep.argmax_pair = pairs[i];
    }
  }
  if (rep.sample_count == 0) rep.max_ratio = 0.0;
  return rep;
}

double fit_exponent(const std::vector<std::pair<double, double>>& samples) {
  if (samples.size() < 3)
    throw std::invalid_argument("fit_exponent: need at least 3 samples");
  double sx = 0, sy = 0;
  for (const auto& [h, g] : samples) {
    if (!(h > 0.0 && g > 0.0))
      throw std::invalid_argument("fit_exponent: samples must be positive");
    sx += std::log(h);
    sy += std::log(g);
  }
  const double n = double(samples.size());
  const double mx = sx / n, my = sy / n;
  double sxx = 0, sxy = 0;
  for (const auto& [h, g] : samples) {
    const double dx = std::log(h) - mx;
    sxx += dx * dx;
    sxy += dx * (std::log(g) - my);
  }
  if (sxx == 0.0) throw std::invalid_argument("fit_exponent: all scales equal");
  return sxy / sxx;
}

std::vector<SharpnessRow> sharpness_sweep(const std::vector<double>& t_values) {
  for (double t : t_values)
    if (!(t > 0.0 && t <= 0.1))
      throw std::invalid_argument("sharpness_sweep: t = " + format_double(t) +
                                  " outside (0, 0.1]");
  std::vector<SharpnessRow> rows;
  auto add = [&](const char* family, double t, cplx w, auto shape_of) {
    const cplx z(0.0, t);
    const double gap = localization_gap_halfdisc(z, w).gap;
    const double d = std::abs(z - w);
    const double shape = shape_of(d, std::min(z.imag(), w.imag()));
    rows.push_back({family, t, z, w, gap, shape, gap / shape});
  };
  for (double t : t_values)
    add("imaginary-axis", t, cplx(0.0, t / 2),
        [](double d, double mi) { return d * (0.5 * d + mi); });
  for (double t : t_values)
    add("quadratic-dropped", t, cplx(0.0, t * t),
        [](double d, double mi) { return d * mi; });
  for (double t : t_values)
    add("min-dropped", t, cplx(0.0, t * (1.0 - 1e-6)),
        [](double d, double) { return 0.5 * d * d; });
  return rows;
}

}  // namespace invlab
