#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hjconvex/spaces/any_space.hpp"

namespace hjc {

/// Shortest decimal form that reads back to the same double.
std::string format_double(double v);

nlohmann::json point_json(const EuclideanSpace& s, const EuclideanPoint& p);
nlohmann::json point_json(const HalfLine& s, const HalfLinePoint& p);
nlohmann::json point_json(const Cylinder& s, const CylinderPoint& p);
nlohmann::json point_json(const Lattice2& s, const LatticePoint& p);
nlohmann::json point_json(const MetricTree& s, const TreePoint& p);

/// CSV column names and values for a point; lattice coordinates are written
/// as exact "num/2^m" strings.
std::vector<std::string> point_columns(const EuclideanSpace& s);
std::vector<std::string> point_columns(const HalfLine& s);
std::vector<std::string> point_columns(const Cylinder& s);
std::vector<std::string> point_columns(const Lattice2& s);
std::vector<std::string> point_columns(const MetricTree& s);

std::vector<std::string> point_fields(const EuclideanSpace& s, const EuclideanPoint& p);
std::vector<std::string> point_fields(const HalfLine& s, const HalfLinePoint& p);
std::vector<std::string> point_fields(const Cylinder& s, const CylinderPoint& p);
std::vector<std::string> point_fields(const Lattice2& s, const LatticePoint& p);
std::vector<std::string> point_fields(const MetricTree& s, const TreePoint& p);

/// Inverse of point_fields; throws DomainError on malformed input.
EuclideanPoint parse_point(const EuclideanSpace& s, const std::vector<std::string>& f);
HalfLinePoint parse_point(const HalfLine& s, const std::vector<std::string>& f);
CylinderPoint parse_point(const Cylinder& s, const std::vector<std::string>& f);
LatticePoint parse_point(const Lattice2& s, const std::vector<std::string>& f);
TreePoint parse_point(const MetricTree& s, const std::vector<std::string>& f);

/// Compact single-string form used in witness lists and log lines.
template <class S, class P>
std::string point_label(const S& s, const P& p) {
  std::string out = "(";
  const auto f = point_fields(s, p);
  for (std::size_t i = 0; i < f.size(); ++i) out += (i ? "," : "") + f[i];
  return out + ")";
}

}  // namespace hjc
