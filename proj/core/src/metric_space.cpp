#include "fixcirc/metric_space.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_set>

namespace fixcirc {

MetricSpace MetricSpace::from_matrix(std::vector<std::string> labels,
                                     std::vector<double> row_major) {
  const std::size_t n = labels.size();
  if (n == 0) throw SchemaError("metric space needs at least one point");
  if (row_major.size() != n * n)
    throw SchemaError("distance matrix is not square: " +
                      std::to_string(row_major.size()) + " entries for " +
                      std::to_string(n) + " points");
  std::unordered_set<std::string> seen;
  for (const auto& l : labels)
    if (!seen.insert(l).second)
      throw SchemaError("duplicate point label: " + l);
  MetricSpace s;
  s.labels_ = std::move(labels);
  s.matrix_ = std::move(row_major);
  return s;
}

MetricSpace MetricSpace::from_complex(std::vector<std::string> labels,
                                      std::vector<std::complex<double>> coords) {
  const std::size_t n = labels.size();
  if (n == 0) throw SchemaError("metric space needs at least one point");
  if (coords.size() != n)
    throw SchemaError("coordinate count does not match label count");
  std::unordered_set<std::string> seen;
  for (const auto& l : labels)
    if (!seen.insert(l).second)
      throw SchemaError("duplicate point label: " + l);
  MetricSpace s;
  s.labels_ = std::move(labels);
  s.coords_ = std::move(coords);
  return s;
}

std::optional<PointId> MetricSpace::find(std::string_view label) const {
  for (PointId i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

PointId MetricSpace::require(std::string_view label) const {
  if (auto p = find(label)) return *p;
  throw DomainError("unknown point label: " + std::string(label));
}

double MetricSpace::distance(PointId a, PointId b) const {
  if (coordinate_geometry()) return std::abs(coords_[a] - coords_[b]);
  return matrix_[a * size() + b];
}

bool MetricSpace::distances_equal(double a, double b) const {
  return std::abs(a - b) <= eq_tolerance();
}

AxiomReport MetricSpace::validate() const {
  AxiomReport report;
  if (coordinate_geometry()) return report;  // modulus metric by construction

  const std::size_t n = size();
  auto d = [&](PointId a, PointId b) { return matrix_[a * n + b]; };
  for (PointId a = 0; a < n; ++a) {
    for (PointId b = 0; b < n; ++b) {
      if (d(a, b) < 0.0)
        report.violations.push_back({"nonneg", a, b, b, d(a, b), 0.0});
      if (a == b && d(a, b) != 0.0)
        report.violations.push_back({"identity", a, b, b, d(a, b), 0.0});
      if (a != b && d(a, b) == 0.0)
        report.violations.push_back({"identity", a, b, b, 0.0, 0.0});
      if (d(a, b) != d(b, a))
        report.violations.push_back({"symmetry", a, b, b, d(a, b), d(b, a)});
    }
  }
  for (PointId a = 0; a < n; ++a)
    for (PointId b = 0; b < n; ++b)
      for (PointId c = 0; c < n; ++c)
        if (d(a, c) > d(a, b) + d(b, c))
          report.violations.push_back(
              {"triangle", a, b, c, d(a, c), d(a, b) + d(b, c)});
  report.pass = report.violations.empty();
  return report;
}

std::vector<double> MetricSpace::realized_distances() const {
  if (coordinate_geometry())
    throw ParameterError(
        "realized distance set is only finite-exact for matrix geometry; "
        "coordinate geometry needs an explicit radius list");
  std::vector<double> out;
  out.reserve(size() * size() / 2 + 1);
  for (PointId a = 0; a < size(); ++a)
    for (PointId b = a; b < size(); ++b) out.push_back(distance(a, b));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

PointSet::PointSet(std::vector<PointId> members) : members_(std::move(members)) {
  if (members_.empty()) throw DomainError("point set must be nonempty");
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

PointSet::PointSet(std::initializer_list<PointId> members)
    : PointSet(std::vector<PointId>(members)) {}

bool PointSet::contains(PointId p) const {
  return std::binary_search(members_.begin(), members_.end(), p);
}

AxiomReport validate_metric(const MetricSpace& space) { return space.validate(); }

double point_set_distance(const MetricSpace& space, PointId x,
                          const PointSet& b) {
  double best = std::numeric_limits<double>::infinity();
  for (PointId y : b.members()) best = std::min(best, space.distance(x, y));
  return best;
}

double hausdorff(const MetricSpace& space, const PointSet& a,
                 const PointSet& b) {
  double forward = 0.0;
  for (PointId x : a.members())
    forward = std::max(forward, point_set_distance(space, x, b));
  double backward = 0.0;
  for (PointId y : b.members())
    backward = std::max(backward, point_set_distance(space, y, a));
  return std::max(forward, backward);
}

Circle circle_of(const MetricSpace& space, PointId x0, double r) {
  if (r < 0.0) throw DomainError("circle radius must be nonnegative");
  Circle c{x0, r, {}};
  for (PointId x = 0; x < space.size(); ++x)
    if (space.distances_equal(space.distance(x, x0), r)) c.members.push_back(x);
  return c;
}

std::vector<PointId> disc_of(const MetricSpace& space, PointId x0, double r) {
  if (r < 0.0) throw DomainError("disc radius must be nonnegative");
  std::vector<PointId> out;
  for (PointId x = 0; x < space.size(); ++x)
    if (space.distance(x, x0) <= r + space.eq_tolerance()) out.push_back(x);
  return out;
}

}  // namespace fixcirc
