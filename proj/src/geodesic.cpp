#include "invlab/geodesic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "invlab/text.hpp"

namespace invlab {

namespace {

ComplexPoint lerp(const ComplexPoint& a, const ComplexPoint& b, double t) {
  return a + cplx(t, 0.0) * (b - a);
}

// 2-point Gauss on [0, 1]; +inf when a quadrature point is not admitted.
double segment_or_inf(const FinslerDensity& density, const ComplexPoint& a,
                      const ComplexPoint& b) {
  if (a == b) return 0.0;
  static const double g = 0.5 / std::sqrt(3.0);
  const TangentVector h = b - a;
  const ComplexPoint p1 = lerp(a, b, 0.5 - g);
  const ComplexPoint p2 = lerp(a, b, 0.5 + g);
  if (!density.admits(p1) || !density.admits(p2)) return kInfinite;
  return 0.5 * (density(p1, h) + density(p2, h));
}

double total_or_inf(const FinslerDensity& density,
                    const std::vector<ComplexPoint>& nodes) {
  double s = 0.0;
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    s += segment_or_inf(density, nodes[i], nodes[i + 1]);
    if (is_infinite(s)) return s;
  }
  return s;
}

// Pull a non-admitted node back towards its admitted predecessor.
void repair_nodes(const FinslerDensity& density, std::vector<ComplexPoint>& nodes) {
  for (std::size_t i = 1; i + 1 < nodes.size(); ++i) {
    if (density.admits(nodes[i])) continue;
    const ComplexPoint anchor = nodes[i - 1];
    ComplexPoint p = nodes[i];
    for (int k = 0; k < 60 && !density.admits(p); ++k) p = lerp(anchor, p, 0.5);
    if (!density.admits(p))
      throw NumericalFailure("minimize_curve: chord irreparably exits the domain");
    nodes[i] = p;
  }
}

std::vector<ComplexPoint> refine(const FinslerDensity& density,
                                 const std::vector<ComplexPoint>& nodes) {
  std::vector<ComplexPoint> out;
  out.reserve(2 * nodes.size() - 1);
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    out.push_back(nodes[i]);
    out.push_back(lerp(nodes[i], nodes[i + 1], 0.5));
  }
  out.push_back(nodes.back());
  repair_nodes(density, out);
  return out;
}

// Real coordinate k of a point in C^n (re, im interleaved).
double& coord(ComplexPoint& p, std::size_t k) {
  return reinterpret_cast<double(&)[2]>(p[k / 2])[k % 2];
}

// Composite rule used only to place nodes: a long segment whose density
// varies by orders of magnitude is badly underestimated by a single
// 2-point rule, which would starve it of nodes.
double placement_length(const FinslerDensity& density, const ComplexPoint& a,
                        const ComplexPoint& b) {
  constexpr int kPieces = 16;
  double s = 0.0;
  for (int j = 0; j < kPieces; ++j)
    s += segment_or_inf(density, lerp(a, b, double(j) / kPieces),
                        lerp(a, b, double(j + 1) / kPieces));
  return s;
}

// Redistribute nodes along the polyline so that every segment carries the
// same Finsler length (nodes stay on the current polygon).
void equidistribute(const FinslerDensity& density, std::vector<ComplexPoint>& x) {
  const std::size_t n = x.size();
  if (n < 3) return;
  std::vector<double> cum(n, 0.0);
  for (std::size_t i = 0; i + 1 < n; ++i)
    cum[i + 1] = cum[i] + placement_length(density, x[i], x[i + 1]);
  const double total = cum.back();
  if (!(total > 0.0) || !std::isfinite(total)) return;
  std::vector<ComplexPoint> out(x);
  std::size_t seg = 0;
  for (std::size_t k = 1; k + 1 < n; ++k) {
    const double target = total * double(k) / double(n - 1);
    while (seg + 2 < n && cum[seg + 1] < target) ++seg;
    const double span = cum[seg + 1] - cum[seg];
    const double t = span > 0.0 ? std::clamp((target - cum[seg]) / span, 0.0, 1.0) : 0.0;
    out[k] = lerp(x[seg], x[seg + 1], t);
  }
  x.swap(out);
}

// Node-by-node damped descent.  Moving node i only changes its two adjacent
// segments, so each accepted move strictly decreases the total length.
struct Descent {
  const FinslerDensity& density;
  const SolverConfig& config;
  int iterations = 0;

  double local(const std::vector<ComplexPoint>& x, std::size_t i,
               const ComplexPoint& p) const {
    return segment_or_inf(density, x[i - 1], p) +
           segment_or_inf(density, p, x[i + 1]);
  }

  // Preconditioned descent direction for node i with the tangential
  // component removed (sliding along the curve only reshuffles quadrature
  // error).  Empty when no usable direction exists.
  std::vector<double> direction(const std::vector<ComplexPoint>& x,
                                std::size_t i, double e0) const {
    const std::size_t reals = 2 * x[i].dim();
    const double l1 = distance(x[i - 1], x[i]);
    const double l2 = distance(x[i], x[i + 1]);
    const double lmin = std::min(l1, l2);
    if (!(lmin > 0.0)) return {};
    const double fd = config.finite_difference_step * lmin;
    ComplexPoint p = x[i];
    std::vector<double> g(reals, 0.0);
    for (std::size_t k = 0; k < reals; ++k) {
      const double orig = coord(p, k);
      coord(p, k) = orig + fd;
      const double ep = local(x, i, p);
      coord(p, k) = orig - fd;
      const double em = local(x, i, p);
      coord(p, k) = orig;
      if (!is_infinite(ep) && !is_infinite(em))
        g[k] = (ep - em) / (2.0 * fd);
      else if (!is_infinite(ep))
        g[k] = (ep - e0) / fd;
      else if (!is_infinite(em))
        g[k] = (e0 - em) / fd;
    }
    TangentVector u = x[i + 1] - x[i - 1];
    const double un = u.norm();
    if (!(un > 0.0)) return {};
    u = cplx(1.0 / un, 0.0) * u;
    double dot = 0.0;
    for (std::size_t k = 0; k < reals; ++k)
      dot += g[k] * reinterpret_cast<const double(&)[2]>(u[k / 2])[k % 2];
    for (std::size_t k = 0; k < reals; ++k)
      g[k] -= dot * reinterpret_cast<const double(&)[2]>(u[k / 2])[k % 2];
    // Newton-like scaling by the normal curvature rho (1/l1 + 1/l2).
    const double hess = density(x[i], u) * (1.0 / l1 + 1.0 / l2);
    if (!(hess > 0.0) || !std::isfinite(hess)) return {};
    for (auto& c : g) c /= hess;
    return g;
  }

  void run(std::vector<ComplexPoint>& x) {
    const std::size_t n = x.size();
    if (n < 3) return;
    constexpr double kAlphaMax = 1.0;
    constexpr double kAlphaMin = 1e-12;
    constexpr int kWindow = 50;
    constexpr int kReparametrize = 10;
    std::vector<double> alpha(n, kAlphaMax);
    std::vector<double> history{total_or_inf(density, x)};

    for (int it = 0; it < config.max_iterations; ++it) {
      ++iterations;
      for (std::size_t i = 1; i + 1 < n; ++i) {
        const double e0 = local(x, i, x[i]);
        const auto s = direction(x, i, e0);
        if (s.empty()) continue;
        if (alpha[i] < kAlphaMin) alpha[i] = kAlphaMin;
        while (alpha[i] >= kAlphaMin) {
          ComplexPoint p = x[i];
          for (std::size_t k = 0; k < s.size(); ++k) coord(p, k) -= alpha[i] * s[k];
          if (density.admits(p) && local(x, i, p) < e0) {
            x[i] = p;
            alpha[i] = std::min(kAlphaMax, alpha[i] * 1.25);
            break;
          }
          alpha[i] *= 0.5;
        }
      }
      // Nodes cannot slide along the curve on their own, so the
      // parametrization is reset to equal Finsler length periodically.
      if ((it + 1) % kReparametrize == 0) equidistribute(density, x);
      const double length = total_or_inf(density, x);
      history.push_back(length);
      if (history.size() > kWindow) {
        const double before = history[history.size() - 1 - kWindow];
        if ((before - length) <= config.convergence_tol * length) break;
      }
    }
  }
};

}  // namespace

Polyline::Polyline(std::vector<ComplexPoint> nodes) : nodes_(std::move(nodes)) {
  if (nodes_.size() < 2) throw std::invalid_argument("polyline needs >= 2 nodes");
  for (const auto& p : nodes_) {
    require_same_dim(p.dim(), nodes_.front().dim(), "polyline node");
    if (!p.finite()) throw std::invalid_argument("polyline node not finite");
  }
}

Polyline Polyline::chord(const ComplexPoint& z, const ComplexPoint& w,
                         std::size_t node_count) {
  if (node_count < 2) throw std::invalid_argument("chord needs >= 2 nodes");
  std::vector<ComplexPoint> nodes;
  nodes.reserve(node_count);
  for (std::size_t i = 0; i < node_count; ++i) {
    if (i == 0) nodes.push_back(z);
    else if (i + 1 == node_count) nodes.push_back(w);
    else nodes.push_back(lerp(z, w, double(i) / double(node_count - 1)));
  }
  return Polyline(std::move(nodes));
}

bool Polyline::inside(const FinslerDensity& density) const {
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (!density.admits(nodes_[i])) return false;
    if (i + 1 < nodes_.size() &&
        !density.admits(lerp(nodes_[i], nodes_[i + 1], 0.5)))
      return false;
  }
  return true;
}

void SolverConfig::validate() const {
  if (node_count < 2) throw std::invalid_argument("node_count must be >= 2");
  const std::size_t segs = node_count - 1;
  if ((segs & (segs - 1)) != 0)
    throw std::invalid_argument("node_count must be a power of two plus one");
  if (max_iterations <= 0) throw std::invalid_argument("max_iterations must be positive");
  if (!(convergence_tol > 0.0))
    throw std::invalid_argument("convergence_tol must be positive");
  if (refinement_levels < 0)
    throw std::invalid_argument("refinement_levels must be >= 0");
  if ((segs >> refinement_levels) == 0 ||
      ((segs >> refinement_levels) << refinement_levels) != segs)
    throw std::invalid_argument("too many refinement levels for node_count");
  if (!(finite_difference_step > 0.0))
    throw std::invalid_argument("finite_difference_step must be positive");
}

double segment_length(const FinslerDensity& density, const ComplexPoint& a,
                      const ComplexPoint& b) {
  const double s = segment_or_inf(density, a, b);
  if (is_infinite(s) && (!density.admits(a) || !density.admits(b) ||
                         !Polyline({a, b}).inside(density)))
    throw OutsideDomain("segment " + format_point(a) + " -> " + format_point(b) +
                        " leaves the domain of " + density.label());
  return s;
}

double finsler_length(const FinslerDensity& density, const Polyline& curve) {
  double s = 0.0;
  for (const auto& p : curve.nodes())
    if (!density.admits(p))
      throw OutsideDomain("finsler_length: node " + format_point(p) +
                          " outside the domain of " + density.label());
  for (std::size_t i = 0; i + 1 < curve.size(); ++i)
    s += segment_length(density, curve.nodes()[i], curve.nodes()[i + 1]);
  return s;
}

SolverResult minimize_curve(const FinslerDensity& density, const ComplexPoint& z,
                            const ComplexPoint& w, const SolverConfig& config) {
  config.validate();
  require_same_dim(z.dim(), density.dim(), "minimize_curve");
  require_same_dim(w.dim(), density.dim(), "minimize_curve");
  if (!density.admits(z) || !density.admits(w))
    throw OutsideDomain("minimize_curve: endpoints must lie in the domain of " +
                        density.label());

  const std::size_t coarse =
      ((config.node_count - 1) >> config.refinement_levels) + 1;
  std::vector<ComplexPoint> x = Polyline::chord(z, w, coarse).nodes();
  repair_nodes(density, x);
  equidistribute(density, x);

  Descent descent{density, config};
  for (int level = 0; level <= config.refinement_levels; ++level) {
    descent.run(x);
    if (level < config.refinement_levels) {
      x = refine(density, x);
      equidistribute(density, x);
    }
  }

  Polyline chord = Polyline::chord(z, w, config.node_count);
  std::vector<ComplexPoint> chord_nodes = chord.nodes();
  repair_nodes(density, chord_nodes);
  const double chord_len = total_or_inf(density, chord_nodes);

  Polyline curve(std::move(x));
  double len = finsler_length(density, curve);
  // Descent never returns anything worse than the starting chord.
  if (!(len <= chord_len)) {
    curve = Polyline(chord_nodes);
    len = chord_len;
  }
  return {std::move(curve), len, chord_len, descent.iterations};
}

EpsilonCertificate epsilon_certificate(const Polyline& curve,
                                       const FinslerDensity& density,
                                       const DistanceOracle& oracle) {
  const auto& x = curve.nodes();
  const std::size_t n = x.size();
  std::vector<double> prefix(n, 0.0);
  for (std::size_t i = 0; i + 1 < n; ++i)
    prefix[i + 1] = prefix[i] + segment_length(density, x[i], x[i + 1]);

  EpsilonCertificate cert{-kInfinite, 0, n - 1};
  auto consider = [&](std::size_t i, std::size_t j) {
    const double deficit = (prefix[j] - prefix[i]) - oracle(x[i], x[j]);
    if (deficit > cert.epsilon) cert = {deficit, i, j};
  };
  for (std::size_t span = 1; span < n - 1; span *= 2)
    for (std::size_t i = 0; i + span < n; ++i) consider(i, i + span);
  consider(0, n - 1);
  return cert;
}

double excursion_radius(const Polyline& curve, const ComplexPoint& z) {
  double r = 0.0;
  for (const auto& p : curve.nodes()) r = std::max(r, distance(p, z));
  return r;
}

}  // namespace invlab
