#include "invlab/bergman.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "invlab/text.hpp"

namespace invlab {

namespace {

constexpr double kPi = std::numbers::pi;

void require_reinhardt(const Domain& d) {
  if (!(d.is<UnitDisc>() || d.is<Ball>() || d.is<Polydisc>() ||
        d.is<ReinhardtEllipsoid>()))
    throw Unsupported("Bergman moments need a Reinhardt domain, got " +
                      d.literal());
}

// int_0^1 r^(2a+1) (1 - r^(2p))^e dr
double radial_profile(int a, double p, double e) {
  if (e == 0.0) return 1.0 / (2.0 * a + 2.0);
  auto f = [=](double r) {
    return std::pow(r, 2.0 * a + 1.0) * std::pow(1.0 - std::pow(r, 2.0 * p), e);
  };
  double err = 0.0;
  const double v = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
      f, 0.0, 1.0, 25, 1e-13, &err);
  if (!(err <= 1e-10 * std::abs(v)))
    throw NumericalFailure("ellipsoid moment quadrature did not reach 1e-10");
  return v;
}

double ellipsoid_moment(const std::vector<double>& p, const MultiIndex& alpha) {
  const std::size_t n = p.size();
  double value = std::pow(2.0 * kPi, double(n));
  double tail = 0.0;  // sum_{j > k} (alpha_j + 1) / p_j
  for (std::size_t k = n; k-- > 0;) {
    value *= radial_profile(alpha[k], p[k], tail);
    tail += (alpha[k] + 1.0) / p[k];
  }
  return value;
}

std::vector<MultiIndex> indices_of_degree(std::size_t n, int degree) {
  std::vector<MultiIndex> out;
  MultiIndex cur(n, 0);
  // enumerate compositions of `degree` into n parts, lexicographically
  auto rec = [&](auto&& self, std::size_t pos, int left) -> void {
    if (pos + 1 == n) {
      cur[pos] = left;
      out.push_back(cur);
      return;
    }
    for (int a = left; a >= 0; --a) {
      cur[pos] = a;
      self(self, pos + 1, left - a);
    }
  };
  rec(rec, 0, degree);
  return out;
}

double log_kernel(const MomentTable& t, const ComplexPoint& z) {
  return std::log(bergman_kernel_diag(t, z).kernel_diag);
}

}  // namespace

double monomial_moment(const Domain& d, const MultiIndex& alpha) {
  require_reinhardt(d);
  if (alpha.size() != d.dim())
    throw DimensionMismatch("monomial_moment: multi-index length " +
                            std::to_string(alpha.size()) + " vs dimension " +
                            std::to_string(d.dim()));
  for (int a : alpha)
    if (a < 0) throw std::invalid_argument("multi-index entries must be >= 0");

  if (d.is<UnitDisc>()) return kPi / (alpha[0] + 1.0);
  if (auto* p = d.as<Polydisc>()) {
    double m = 1.0;
    for (std::size_t j = 0; j < alpha.size(); ++j)
      m *= kPi * std::pow(p->radii[j], 2.0 * alpha[j] + 2.0) / (alpha[j] + 1.0);
    return m;
  }
  if (auto* b = d.as<Ball>()) {
    // pi^n alpha! / (n + |alpha|)!
    const int total = std::accumulate(alpha.begin(), alpha.end(), 0);
    double lg = b->n * std::log(kPi) - std::lgamma(double(b->n + total) + 1.0);
    for (int a : alpha) lg += std::lgamma(a + 1.0);
    return std::exp(lg);
  }
  return ellipsoid_moment(d.as<ReinhardtEllipsoid>()->exponents, alpha);
}

MomentTable::MomentTable(const Domain& d, int truncation_degree)
    : domain_(d), degree_(truncation_degree) {
  require_reinhardt(d);
  if (truncation_degree < 0)
    throw std::invalid_argument("truncation degree must be >= 0");
  for (int deg = 0; deg <= degree_; ++deg) {
    offsets_.push_back(indices_.size());
    for (auto& a : indices_of_degree(d.dim(), deg)) {
      moments_.push_back(monomial_moment(d, a));
      indices_.push_back(std::move(a));
    }
  }
  offsets_.push_back(indices_.size());
}

int default_truncation(std::size_t dim) {
  if (dim <= 1) return 50;
  if (dim == 2) return 20;
  return 12;
}

KernelResult bergman_kernel_diag(const MomentTable& table, const ComplexPoint& z) {
  const Domain& d = table.domain();
  require_inside(d, z, "bergman_kernel_diag");
  const std::size_t n = d.dim();
  std::vector<double> r2(n);
  for (std::size_t j = 0; j < n; ++j) r2[j] = std::norm(z[j]);

  const int N = table.truncation_degree();
  std::vector<double> shell(std::size_t(N) + 1, 0.0);
  for (int deg = 0; deg <= N; ++deg) {
    double s = 0.0;
    for (std::size_t k = table.degree_begin(deg); k < table.degree_begin(deg + 1);
         ++k) {
      double term = 1.0 / table.moments()[k];
      const auto& a = table.indices()[k];
      for (std::size_t j = 0; j < n && term != 0.0; ++j)
        if (a[j] > 0) term *= std::pow(r2[j], a[j]);
      s += term;
    }
    shell[std::size_t(deg)] = s;
  }

  KernelResult res;
  res.truncation_degree = N;
  for (double s : shell) res.kernel_diag += s;
  res.K_D = std::sqrt(res.kernel_diag);

  // geometric extrapolation from the ratios of the last five shells
  const double last = shell.back();
  if (last > 0.0 && N >= 4) {
    double q = 0.0;
    for (int deg = N - 3; deg <= N; ++deg) {
      const double prev = shell[std::size_t(deg - 1)];
      if (prev > 0.0) q = std::max(q, shell[std::size_t(deg)] / prev);
    }
    res.tail_estimate =
        q < 1.0 ? last * q / (1.0 - q) : std::numeric_limits<double>::infinity();
  } else if (last > 0.0) {
    res.tail_estimate = std::numeric_limits<double>::infinity();
  }
  return res;
}

KernelResult bergman_kernel_diag(const Domain& d, const ComplexPoint& z, int N) {
  return bergman_kernel_diag(MomentTable(d, N), z);
}

double bergman_metric_numeric(const MomentTable& table, const ComplexPoint& z,
                              const TangentVector& X, double h) {
  const Domain& d = table.domain();
  require_same_dim(d.dim(), X.dim(), "bergman_metric_numeric");
  require_inside(d, z, "bergman_metric_numeric");
  if (!(h > 0.0)) throw std::invalid_argument("step h must be positive");
  const double xn = X.norm();
  if (xn == 0.0) return 0.0;
  double delta = 0.0;
  try {
    delta = boundary_distance(d, z);
  } catch (const Unsupported&) {
    delta = 2.0 * h;  // stencil membership is checked below instead
  }
  if (delta < 2.0 * h)
    throw OutsideDomain("bergman_metric_numeric: z within 2h of the boundary");

  const double s = h / xn;
  const double f0 = log_kernel(table, z);
  double sum = 0.0;
  for (cplx dir : {cplx(1, 0), cplx(-1, 0), cplx(0, 1), cplx(0, -1)}) {
    const ComplexPoint p = z + (s * dir) * X;
    require_inside(d, p, "bergman_metric_numeric stencil");
    sum += log_kernel(table, p);
  }
  const double levi = (sum - 4.0 * f0) / (4.0 * s * s);
  if (!(levi > 0.0))
    throw NumericalFailure("bergman_metric_numeric: nonpositive Levi form " +
                           format_double(levi) + " (truncation too low?)");
  return std::sqrt(levi);
}

double bergman_metric_numeric(const Domain& d, const ComplexPoint& z,
                              const TangentVector& X, int N, double h) {
  return bergman_metric_numeric(MomentTable(d, N), z, X, h);
}

double m_big_D(const MomentTable& table, const ComplexPoint& z,
               const TangentVector& X, double h) {
  return bergman_metric_numeric(table, z, X, h) *
         bergman_kernel_diag(table, z).K_D;
}

double m_big_D(const Domain& d, const ComplexPoint& z, const TangentVector& X,
               int N, double h) {
  return m_big_D(MomentTable(d, N), z, X, h);
}

}  // namespace invlab
