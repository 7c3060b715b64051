#pragma once

#include <functional>
#include <vector>

#include "invlab/metrics.hpp"

namespace invlab {

// Discretized curve with fixed endpoints.
class Polyline {
 public:
  explicit Polyline(std::vector<ComplexPoint> nodes);
  // Evenly spaced nodes on the segment [z, w].
  static Polyline chord(const ComplexPoint& z, const ComplexPoint& w,
                        std::size_t node_count);

  const std::vector<ComplexPoint>& nodes() const { return nodes_; }
  std::size_t size() const { return nodes_.size(); }
  const ComplexPoint& front() const { return nodes_.front(); }
  const ComplexPoint& back() const { return nodes_.back(); }

  // Nodes and segment midpoints all admitted by the density.
  bool inside(const FinslerDensity& density) const;

 private:
  std::vector<ComplexPoint> nodes_;
};

struct SolverConfig {
  std::size_t node_count = 65;
  int max_iterations = 20000;        // per refinement level
  double convergence_tol = 1e-11;    // relative improvement over 50 iterations
  int refinement_levels = 3;
  double finite_difference_step = 1e-5;  // relative to the local segment length

  // Throws std::invalid_argument when an invariant fails.
  void validate() const;
};

struct SolverResult {
  Polyline curve;
  double length;
  double chord_length;  // length of the initial straight chord at node_count
  int iterations;       // summed over refinement levels
};

struct EpsilonCertificate {
  double epsilon = 0.0;
  std::size_t first = 0;   // node indices of the worst pair
  std::size_t second = 0;
};

using DistanceOracle =
    std::function<double(const ComplexPoint&, const ComplexPoint&)>;

// Integral of density(a + t h; h) over [0, 1] by 2-point Gauss.
double segment_length(const FinslerDensity& density, const ComplexPoint& a,
                      const ComplexPoint& b);

// Sum of segment lengths; +inf if any evaluation is +inf.  Throws
// OutsideDomain when a node or quadrature point is not admitted.
double finsler_length(const FinslerDensity& density, const Polyline& curve);

// Damped, diagonally preconditioned gradient descent on the interior nodes,
// starting from the chord and refining dyadically.  Deterministic.
SolverResult minimize_curve(const FinslerDensity& density,
                            const ComplexPoint& z, const ComplexPoint& w,
                            const SolverConfig& config = {});

// max over dyadic index pairs i < j of
//   length(curve[i..j]) - oracle(curve[i], curve[j]).
EpsilonCertificate epsilon_certificate(const Polyline& curve,
                                       const FinslerDensity& density,
                                       const DistanceOracle& oracle);

// max over nodes of |node - z|.
double excursion_radius(const Polyline& curve, const ComplexPoint& z);

}  // namespace invlab
