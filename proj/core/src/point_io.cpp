#include "hjconvex/point_io.hpp"

#include <charconv>
#include <cmath>

#include "hjconvex/error.hpp"

namespace hjc {
namespace {

double parse_double(const std::string& s) {
  double v = 0.0;
  auto r = std::from_chars(s.data(), s.data() + s.size(), v);
  if (r.ec != std::errc() || r.ptr != s.data() + s.size())
    throw DomainError("cannot parse number '" + s + "'");
  return v;
}

void expect_fields(const std::vector<std::string>& f, std::size_t n) {
  if (f.size() != n) throw DomainError("wrong number of point fields");
}

}  // namespace

std::string format_double(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  char buf[64];
  auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

nlohmann::json point_json(const EuclideanSpace&, const EuclideanPoint& p) {
  nlohmann::json a = nlohmann::json::array();
  for (int i = 0; i < p.dim; ++i) a.push_back(p[i]);
  return a;
}
nlohmann::json point_json(const HalfLine&, const HalfLinePoint& p) { return p.x; }
nlohmann::json point_json(const Cylinder&, const CylinderPoint& p) {
  return {{"theta", p.theta}, {"height", p.height}};
}
nlohmann::json point_json(const Lattice2&, const LatticePoint& p) {
  return nlohmann::json::array({p.x1.to_string(), p.x2.to_string()});
}
nlohmann::json point_json(const MetricTree& s, const TreePoint& p) {
  nlohmann::json j = {{"edge", p.edge}, {"offset", p.offset}};
  if (s.name() == "cross") {
    auto [a, b] = s.cross_coordinates(p);
    j["planar"] = {a, b};
  }
  return j;
}

std::vector<std::string> point_columns(const EuclideanSpace& s) {
  std::vector<std::string> c;
  for (int i = 0; i < s.dim(); ++i) c.push_back("x" + std::to_string(i + 1));
  return c;
}
std::vector<std::string> point_columns(const HalfLine&) { return {"x"}; }
std::vector<std::string> point_columns(const Cylinder&) { return {"theta", "height"}; }
std::vector<std::string> point_columns(const Lattice2&) { return {"x1", "x2"}; }
std::vector<std::string> point_columns(const MetricTree&) { return {"edge", "offset"}; }

std::vector<std::string> point_fields(const EuclideanSpace&, const EuclideanPoint& p) {
  std::vector<std::string> f;
  for (int i = 0; i < p.dim; ++i) f.push_back(format_double(p[i]));
  return f;
}
std::vector<std::string> point_fields(const HalfLine&, const HalfLinePoint& p) {
  return {format_double(p.x)};
}
std::vector<std::string> point_fields(const Cylinder&, const CylinderPoint& p) {
  return {format_double(p.theta), format_double(p.height)};
}
std::vector<std::string> point_fields(const Lattice2&, const LatticePoint& p) {
  return {p.x1.to_string(), p.x2.to_string()};
}
std::vector<std::string> point_fields(const MetricTree&, const TreePoint& p) {
  return {std::to_string(p.edge), format_double(p.offset)};
}

EuclideanPoint parse_point(const EuclideanSpace& s, const std::vector<std::string>& f) {
  expect_fields(f, static_cast<std::size_t>(s.dim()));
  EuclideanPoint p;
  p.dim = static_cast<std::uint8_t>(s.dim());
  for (int i = 0; i < s.dim(); ++i) p[i] = parse_double(f[i]);
  return p;
}
HalfLinePoint parse_point(const HalfLine& s, const std::vector<std::string>& f) {
  expect_fields(f, 1);
  return s.make(parse_double(f[0]));
}
CylinderPoint parse_point(const Cylinder& s, const std::vector<std::string>& f) {
  expect_fields(f, 2);
  return s.make(parse_double(f[0]), parse_double(f[1]));
}
LatticePoint parse_point(const Lattice2& s, const std::vector<std::string>& f) {
  expect_fields(f, 2);
  return s.make(Dyadic::parse(f[0]), Dyadic::parse(f[1]));
}
TreePoint parse_point(const MetricTree& s, const std::vector<std::string>& f) {
  expect_fields(f, 2);
  return s.make(static_cast<int>(parse_double(f[0])), parse_double(f[1]));
}

}  // namespace hjc
