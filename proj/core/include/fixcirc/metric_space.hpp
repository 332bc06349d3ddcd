#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fixcirc/errors.hpp"

namespace fixcirc {

using PointId = std::size_t;

/// One metric-axiom violation, identified by the points involved.
/// For pair axioms (symmetry, non-negativity, identity) c == b.
struct AxiomViolation {
  std::string axiom;  // "nonneg", "identity", "symmetry", "triangle"
  PointId a = 0;
  PointId b = 0;
  PointId c = 0;
  double lhs = 0.0;
  double rhs = 0.0;
};

struct AxiomReport {
  bool pass = true;
  std::vector<AxiomViolation> violations;
};

/// Finite labeled metric space with one of two distance backends:
/// an explicit symmetric matrix, or complex-plane coordinates with
/// d(x,y) = |x - y|. Immutable after construction; all queries are
/// pure and safe to call concurrently.
///
/// Coordinate geometry carries two tolerances: eq_tolerance for
/// "equal distance" tests (circle membership) and cmp_tolerance for
/// strict-inequality slack. Matrix geometry compares exactly.
class MetricSpace {
 public:
  static MetricSpace from_matrix(std::vector<std::string> labels,
                                 std::vector<double> row_major);
  static MetricSpace from_complex(std::vector<std::string> labels,
                                  std::vector<std::complex<double>> coords);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(PointId p) const { return labels_[p]; }
  std::optional<PointId> find(std::string_view label) const;
  PointId require(std::string_view label) const;  // throws DomainError

  double distance(PointId a, PointId b) const;
  bool coordinate_geometry() const { return !coords_.empty(); }
  std::complex<double> coordinate(PointId p) const { return coords_[p]; }

  double eq_tolerance() const { return coordinate_geometry() ? 1e-9 : 0.0; }
  double cmp_tolerance() const { return coordinate_geometry() ? 1e-12 : 0.0; }

  /// d-values equal up to eq_tolerance (exact for matrix geometry).
  bool distances_equal(double a, double b) const;
  /// v strictly positive beyond cmp_tolerance (exact for matrix geometry).
  bool positive(double v) const { return v > cmp_tolerance(); }

  /// Checks the four metric axioms on every pair/triple (matrix geometry);
  /// complex geometry passes by construction (modulus metric).
  AxiomReport validate() const;

  /// All distinct distance values d(x,y), sorted ascending (includes 0).
  /// Matrix geometry only; used as the realized radius set.
  std::vector<double> realized_distances() const;

 private:
  MetricSpace() = default;

  std::vector<std::string> labels_;
  std::vector<double> matrix_;                 // row-major, empty for complex
  std::vector<std::complex<double>> coords_;   // empty for matrix
};

/// Nonempty set of space points (an element of CB(X) = K(X) here).
/// Members are kept sorted and unique.
class PointSet {
 public:
  explicit PointSet(std::vector<PointId> members);
  PointSet(std::initializer_list<PointId> members);

  const std::vector<PointId>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(PointId p) const;
  bool operator==(const PointSet& other) const = default;

 private:
  std::vector<PointId> members_;
};

struct Circle {
  PointId center = 0;
  double radius = 0.0;
  std::vector<PointId> members;  // may be empty
};

AxiomReport validate_metric(const MetricSpace& space);

/// D(x,B) = min over y in B of d(x,y).
double point_set_distance(const MetricSpace& space, PointId x,
                          const PointSet& b);

/// H(A,B) = max of the two directed sup-min distances.
double hausdorff(const MetricSpace& space, const PointSet& a,
                 const PointSet& b);

/// C_{x0,r}: points at distance r from x0, up to eq_tolerance.
Circle circle_of(const MetricSpace& space, PointId x0, double r);

/// D_{x0,r}: points at distance <= r (+ eq_tolerance). May be empty only
/// in theory; x0 itself is always a member for r >= 0.
std::vector<PointId> disc_of(const MetricSpace& space, PointId x0, double r);

}  // namespace fixcirc
