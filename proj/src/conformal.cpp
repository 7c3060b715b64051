#include "invlab/conformal.hpp"

#include "invlab/text.hpp"

namespace invlab {

MapDescriptor MapDescriptor::scale(cplx lambda) {
  if (lambda == cplx(0.0, 0.0))
    throw std::invalid_argument("scale factor must be nonzero");
  return MapDescriptor(maps::Scale{lambda});
}

MapDescriptor MapDescriptor::mobius(cplx a, cplx b, cplx c, cplx d) {
  if (a * d - b * c == cplx(0.0, 0.0))
    throw std::invalid_argument("mobius map needs ad - bc != 0");
  return MapDescriptor(maps::Mobius{a, b, c, d});
}

MapDescriptor MapDescriptor::compose(std::vector<MapDescriptor> outer_to_inner) {
  if (outer_to_inner.empty())
    throw std::invalid_argument("empty composition");
  return MapDescriptor(maps::Composition{std::move(outer_to_inner)});
}

std::string MapDescriptor::literal() const {
  struct V {
    std::string operator()(const maps::Identity&) const { return "identity"; }
    std::string operator()(const maps::Scale& s) const {
      return "scale:" + format_complex(s.lambda);
    }
    std::string operator()(const maps::Mobius& m) const {
      return "mobius:" + format_complex(m.a) + "," + format_complex(m.b) + "," +
             format_complex(m.c) + "," + format_complex(m.d);
    }
    std::string operator()(const maps::Cayley&) const { return "cayley"; }
    std::string operator()(const maps::HalfDiscToHalfPlane&) const {
      return "halfdisc2halfplane";
    }
    std::string operator()(const maps::Composition& c) const {
      std::string s = "compose(";
      for (std::size_t i = 0; i < c.maps.size(); ++i) {
        if (i) s += ';';
        s += c.maps[i].literal();
      }
      return s + ")";
    }
  };
  return std::visit(V{}, v_);
}

std::optional<Domain> source_domain(const MapDescriptor& f) {
  if (std::holds_alternative<maps::Cayley>(f.variant())) return Domain::disc();
  if (std::holds_alternative<maps::HalfDiscToHalfPlane>(f.variant()))
    return Domain::halfdisc(1.0);
  if (auto* c = std::get_if<maps::Composition>(&f.variant()))
    return source_domain(c->maps.back());
  return std::nullopt;
}

namespace {

// Apply one map, assuming z is already in its source.
cplx apply_raw(const MapDescriptor& f, cplx z);

struct Apply {
  cplx z;
  cplx operator()(const maps::Identity&) const { return z; }
  cplx operator()(const maps::Scale& s) const { return s.lambda * z; }
  cplx operator()(const maps::Mobius& m) const {
    return (m.a * z + m.b) / (m.c * z + m.d);
  }
  cplx operator()(const maps::Cayley&) const {
    return cplx(0.0, 1.0) * (1.0 - z) / (1.0 + z);
  }
  cplx operator()(const maps::HalfDiscToHalfPlane&) const {
    const cplx q = (z + 1.0) / (z - 1.0);
    return q * q;
  }
  cplx operator()(const maps::Composition& c) const {
    cplx w = z;
    for (auto it = c.maps.rbegin(); it != c.maps.rend(); ++it) {
      if (!in_source(*it, w))
        throw OutsideDomain("composition: intermediate point " +
                            format_complex(w) + " outside source of " +
                            it->literal());
      w = apply_raw(*it, w);
    }
    return w;
  }
};

cplx apply_raw(const MapDescriptor& f, cplx z) {
  return std::visit(Apply{z}, f.variant());
}

void require_source(const MapDescriptor& f, cplx z) {
  if (!in_source(f, z))
    throw OutsideDomain("point " + format_complex(z) +
                        " outside the source of " + f.literal());
}

}  // namespace

bool in_source(const MapDescriptor& f, cplx z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  if (auto* m = std::get_if<maps::Mobius>(&f.variant()))
    return m->c * z + m->d != cplx(0.0, 0.0);
  if (auto* c = std::get_if<maps::Composition>(&f.variant())) {
    cplx w = z;
    for (auto it = c->maps.rbegin(); it != c->maps.rend(); ++it) {
      if (!in_source(*it, w)) return false;
      w = apply_raw(*it, w);
    }
    return true;
  }
  if (auto src = source_domain(f)) return contains(*src, ComplexPoint(z));
  return true;
}

cplx apply(const MapDescriptor& f, cplx z) {
  require_source(f, z);
  return apply_raw(f, z);
}

ComplexPoint apply(const MapDescriptor& f, const ComplexPoint& z) {
  return ComplexPoint(apply(f, z.scalar()));
}

namespace {

// The closed forms extend holomorphically to the boundary of the source, so
// derivatives are also available on its closure (minus the pole).
bool in_closed_source(const MapDescriptor& f, cplx z) {
  if (in_source(f, z)) return true;
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  if (std::holds_alternative<maps::Cayley>(f.variant()))
    return std::abs(z) <= 1.0 && z != cplx(-1.0, 0.0);
  if (std::holds_alternative<maps::HalfDiscToHalfPlane>(f.variant()))
    return z.imag() >= 0.0 && std::abs(z) <= 1.0 && z != cplx(1.0, 0.0);
  return false;
}

}  // namespace

cplx derivative(const MapDescriptor& f, cplx z) {
  if (!in_closed_source(f, z))
    throw OutsideDomain("point " + format_complex(z) +
                        " outside the closed source of " + f.literal());
  struct V {
    cplx z;
    cplx operator()(const maps::Identity&) const { return 1.0; }
    cplx operator()(const maps::Scale& s) const { return s.lambda; }
    cplx operator()(const maps::Mobius& m) const {
      const cplx den = m.c * z + m.d;
      return (m.a * m.d - m.b * m.c) / (den * den);
    }
    cplx operator()(const maps::Cayley&) const {
      const cplx den = 1.0 + z;
      return cplx(0.0, -2.0) / (den * den);
    }
    cplx operator()(const maps::HalfDiscToHalfPlane&) const {
      const cplx den = z - 1.0;
      return -4.0 * (z + 1.0) / (den * den * den);
    }
    cplx operator()(const maps::Composition& c) const {
      cplx w = z, d = 1.0;
      for (auto it = c.maps.rbegin(); it != c.maps.rend(); ++it) {
        d *= derivative(*it, w);
        w = apply_raw(*it, w);
      }
      return d;
    }
  };
  return std::visit(V{z}, f.variant());
}

double numeric_derivative_check(const MapDescriptor& f, cplx z, double h) {
  require_source(f, z);
  require_source(f, z + h);
  require_source(f, z - h);
  const cplx fd = (apply_raw(f, z + h) - apply_raw(f, z - h)) / (2.0 * h);
  const cplx d = derivative(f, z);
  return std::abs(fd - d) / std::abs(d);
}

cplx newton_preimage(const MapDescriptor& f, cplx target, cplx seed,
                     int max_iter, double tol) {
  cplx z = seed;
  for (int it = 0; it < max_iter; ++it) {
    require_source(f, z);
    const cplx r = apply_raw(f, z) - target;
    if (std::abs(r) <= tol * std::max(1.0, std::abs(target))) return z;
    cplx step = r / derivative(f, z);
    // halve until the iterate stays in the source
    while (!in_source(f, z - step)) {
      step *= 0.5;
      if (std::abs(step) < 1e-300)
        throw NumericalFailure("newton_preimage: stuck at source boundary");
    }
    z -= step;
  }
  throw NumericalFailure("newton_preimage: no convergence from seed " +
                         format_complex(seed));
}

MapDescriptor parse_map(std::string_view text) {
  const std::string s(text);
  if (s == "identity") return MapDescriptor::identity();
  if (s == "cayley") return MapDescriptor::cayley();
  if (s == "halfdisc2halfplane") return MapDescriptor::halfdisc_to_halfplane();
  if (s.rfind("scale:", 0) == 0)
    return MapDescriptor::scale(parse_complex(text.substr(6)));
  if (s.rfind("mobius:", 0) == 0) {
    const ComplexPoint c = parse_point(text.substr(7));
    if (c.dim() != 4) throw ParseError("mobius needs four coefficients: '" + s + "'");
    return MapDescriptor::mobius(c[0], c[1], c[2], c[3]);
  }
  throw ParseError("unknown map '" + s + "'");
}

}  // namespace invlab
