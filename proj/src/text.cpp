#include "invlab/text.hpp"

#include <charconv>
#include <cstdio>
#include <regex>

namespace invlab {

std::string format_double(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string format_double17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string format_complex(cplx c, bool full_precision) {
  auto fmt = full_precision ? format_double17 : format_double;
  const double im = c.imag();
  const bool neg = std::signbit(im);
  return fmt(c.real()) + (neg ? "-" : "+") + fmt(neg ? -im : im) + "i";
}

std::string format_point(const ComplexPoint& z, bool full_precision) {
  std::string s;
  for (std::size_t i = 0; i < z.dim(); ++i) {
    if (i) s += ',';
    s += format_complex(z[i], full_precision);
  }
  return s;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

double parse_real(std::string_view s, std::string_view context) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || res.ec != std::errc() || res.ptr != s.data() + s.size())
    throw ParseError("malformed number '" + std::string(s) + "' in '" +
                     std::string(context) + "'");
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (s[i] == sep && depth == 0) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  out.push_back(s.substr(start));
  return out;
}

std::vector<cplx> parse_complex_list(std::string_view text) {
  text = trim(text);
  if (text.size() >= 2 && text.front() == '(' && text.back() == ')')
    text = text.substr(1, text.size() - 2);
  std::vector<cplx> out;
  for (auto part : split(text, ',')) out.push_back(parse_complex(part));
  return out;
}

std::vector<double> parse_real_list(std::string_view text) {
  std::vector<double> out;
  for (auto part : split(text, ',')) out.push_back(parse_real(part, text));
  return out;
}

}  // namespace

cplx parse_complex(std::string_view text) {
  static const std::string num = R"((?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)";
  static const std::regex real_only("^([+-]?" + num + ")$");
  static const std::regex imag_only("^([+-]?)(" + num + ")?i$");
  static const std::regex both("^([+-]?" + num + ")([+-])(" + num + ")?i$");

  const std::string s(trim(text));
  std::smatch m;
  if (std::regex_match(s, m, real_only))
    return {parse_real(m[1].str(), s), 0.0};
  if (std::regex_match(s, m, imag_only)) {
    const double mag = m[2].matched ? parse_real(m[2].str(), s) : 1.0;
    return {0.0, m[1].str() == "-" ? -mag : mag};
  }
  if (std::regex_match(s, m, both)) {
    const double re = parse_real(m[1].str(), s);
    const double mag = m[3].matched ? parse_real(m[3].str(), s) : 1.0;
    return {re, m[2].str() == "-" ? -mag : mag};
  }
  throw ParseError("malformed complex literal '" + s + "'");
}

ComplexPoint parse_point(std::string_view text) {
  return ComplexPoint(parse_complex_list(text));
}

TangentVector parse_vector(std::string_view text) {
  return TangentVector(parse_complex_list(text));
}

Domain parse_domain(std::string_view text) {
  text = trim(text);
  const std::string s(text);
  auto args_of = [&](std::string_view head) -> std::string_view {
    // head(...) -> inner text
    if (text.size() < head.size() + 2 || text.back() != ')')
      throw ParseError("malformed domain literal '" + s + "'");
    return text.substr(head.size() + 1, text.size() - head.size() - 2);
  };

  if (s == "disc") return Domain::disc();
  if (s == "halfplane") return Domain::halfplane();
  if (s.rfind("halfdisc", 0) == 0) {
    if (s == "halfdisc") return Domain::halfdisc(1.0);
    if (s.rfind("halfdisc:r=", 0) != 0)
      throw ParseError("malformed domain literal '" + s + "'");
    return Domain::halfdisc(parse_real(text.substr(11), s));
  }
  if (s.rfind("ball:n=", 0) == 0) {
    const double n = parse_real(text.substr(7), s);
    if (n != std::floor(n)) throw ParseError("ball dimension must be integer");
    return Domain::ball(static_cast<int>(n));
  }
  if (s.rfind("polydisc:r=", 0) == 0)
    return Domain::polydisc(parse_real_list(text.substr(11)));
  if (s.rfind("ellipsoid:p=", 0) == 0)
    return Domain::ellipsoid(parse_real_list(text.substr(12)));
  if (s.rfind("cap(", 0) == 0) {
    auto parts = split(args_of("cap"), ';');
    if (parts.size() != 3)
      throw ParseError("cap literal needs <domain>;c=<point>;r=<r>: '" + s + "'");
    auto c = trim(parts[1]), r = trim(parts[2]);
    if (c.rfind("c=", 0) != 0 || r.rfind("r=", 0) != 0)
      throw ParseError("cap literal needs <domain>;c=<point>;r=<r>: '" + s + "'");
    return intersect_with_ball(parse_domain(parts[0]),
                               parse_point(c.substr(2)),
                               parse_real(r.substr(2), s));
  }
  if (s.rfind("prod(", 0) == 0) {
    std::vector<Domain> factors;
    for (auto part : split(args_of("prod"), ';'))
      factors.push_back(parse_domain(part));
    return Domain::product(std::move(factors));
  }
  throw ParseError("unknown domain '" + s + "'");
}

}  // namespace invlab
