#pragma once

#include <string>

#include "invlab/geometry.hpp"

namespace invlab {

enum class DistanceMethod { closed_form, pullback, solver };
enum class DistanceKind { kobayashi, lempert, caratheodory };

std::string to_string(DistanceMethod m);
std::string to_string(DistanceKind k);

struct DistanceValue {
  double value = 0.0;  // kInfinite past the overflow threshold
  DistanceMethod method = DistanceMethod::closed_form;
  DistanceKind kind = DistanceKind::kobayashi;

  bool infinite() const;
};

// Pseudodistances at or above this threshold map to the +inf marker.
inline constexpr double kPseudodistanceCeiling = 1.0 - 1e-15;

// tanh^-1 from m and an independently computed 1 - m^2 (which is what keeps
// the result accurate when m is close to 1):
//   atanh m = log(1 + m) - log(1 - m^2) / 2.
double hyperbolic_from_pseudo(double m, double one_minus_m2);
// The plain 1/2 log((1 + m)/(1 - m)) with the same overflow policy.
double hyperbolic_from_pseudo(double m);

// m_Pi(z, w) = |z - w| / |z - conj w| on the upper half-plane.
double mobius_halfplane(cplx z, cplx w);
// 1 - m_Pi(z, w)^2 = 4 Im z Im w / |z - conj w|^2.
double halfplane_one_minus_m2(cplx z, cplx w);
// |z - w| / |1 - z conj w| on the unit disc.
double pseudohyperbolic_disc(cplx z, cplx w);

DistanceValue kobayashi_distance(const Domain& d, const ComplexPoint& z,
                                 const ComplexPoint& w);
// On the catalog l = k (every member is biholomorphic to a convex domain).
DistanceValue lempert_function(const Domain& d, const ComplexPoint& z,
                               const ComplexPoint& w);
// On the catalog c = k; the ordering c <= k <= l is an equality by construction.
DistanceValue caratheodory_distance(const Domain& d, const ComplexPoint& z,
                                    const ComplexPoint& w);

// Localization gap k_{Pi_1} - k_Pi = T1 + T2 for z, w in Pi_1.
double t1(cplx z, cplx w);
double t2(cplx z, cplx w);
// Leading terms as z, w -> 0.  Throw std::invalid_argument for z == w.
double t1_asymptotic(cplx z, cplx w);
double t2_asymptotic(cplx z, cplx w);

struct GapDecomposition {
  double gap = 0.0;  // t1 + t2
  double t1 = 0.0;
  double t2 = 0.0;
  double k_local = 0.0;   // k_{Pi_1}(z, w)
  double k_global = 0.0;  // k_Pi(z, w)
  double residual = 0.0;  // |(t1 + t2) - (k_local - k_global)|
};

GapDecomposition localization_gap_halfdisc(cplx z, cplx w);

}  // namespace invlab
