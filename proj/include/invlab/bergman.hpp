#pragma once

#include <vector>

#include "invlab/geometry.hpp"

namespace invlab {

using MultiIndex = std::vector<int>;

// int_D |z^alpha|^2 dV for a Reinhardt domain (disc, ball, polydisc,
// ellipsoid).  Ellipsoid moments come from adaptive Gauss-Kronrod quadrature
// of the radial profile, everything else is closed form.
double monomial_moment(const Domain& d, const MultiIndex& alpha);

// All moments with |alpha| <= N, grouped by total degree.  Immutable once
// built; safe to share between threads.
class MomentTable {
 public:
  MomentTable(const Domain& d, int truncation_degree);

  const Domain& domain() const { return domain_; }
  int truncation_degree() const { return degree_; }
  const std::vector<MultiIndex>& indices() const { return indices_; }
  const std::vector<double>& moments() const { return moments_; }
  // indices_[begin(d) .. begin(d + 1)) have total degree d.
  std::size_t degree_begin(int d) const { return offsets_[std::size_t(d)]; }

 private:
  Domain domain_;
  int degree_;
  std::vector<MultiIndex> indices_;
  std::vector<double> moments_;
  std::vector<std::size_t> offsets_;
};

struct KernelResult {
  double kernel_diag = 0.0;  // K(z, z)
  double K_D = 0.0;          // sqrt(kernel_diag)
  int truncation_degree = 0;
  double tail_estimate = 0.0;
};

// 50 in dimension 1, 20 in dimension 2, 12 above.
int default_truncation(std::size_t dim);

KernelResult bergman_kernel_diag(const MomentTable& table, const ComplexPoint& z);
KernelResult bergman_kernel_diag(const Domain& d, const ComplexPoint& z, int N);

// sqrt of the Levi form of log K(z, z) applied to X, by a 5-point complex
// Laplacian stencil with displacement h along X.
double bergman_metric_numeric(const MomentTable& table, const ComplexPoint& z,
                              const TangentVector& X, double h);
double bergman_metric_numeric(const Domain& d, const ComplexPoint& z,
                              const TangentVector& X, int N, double h);

// M_D(z; X) = beta_D(z; X) * K_D(z).
double m_big_D(const MomentTable& table, const ComplexPoint& z,
               const TangentVector& X, double h);
double m_big_D(const Domain& d, const ComplexPoint& z, const TangentVector& X,
               int N, double h);

}  // namespace invlab
