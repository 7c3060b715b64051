#pragma once

#include <string>
#include <string_view>

#include "invlab/geometry.hpp"

namespace invlab {

// Shortest representation that round-trips.
std::string format_double(double x);
// printf("%.17g"), the CSV convention.
std::string format_double17(double x);

// "a+bi" / "a-bi".
std::string format_complex(cplx c, bool full_precision = false);
// Comma-separated coordinates; planar points print as a single literal.
std::string format_point(const ComplexPoint& z, bool full_precision = false);

// Accepts "a", "a+bi", "a-bi", "bi", "i", "-i", "a+i"; decimal components with
// optional exponents ("1e-3").
cplx parse_complex(std::string_view text);

// Comma-separated complex literals, optionally wrapped in parentheses.
ComplexPoint parse_point(std::string_view text);
TangentVector parse_vector(std::string_view text);

// disc | halfplane | halfdisc:r=<r> | ball:n=<n> | polydisc:r=<r1>,...
// | ellipsoid:p=<p1>,... | cap(<domain>;c=<point>;r=<r>) | prod(<d>;<d>;...)
Domain parse_domain(std::string_view text);

}  // namespace invlab
