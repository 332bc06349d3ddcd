#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fixcirc/contractions.hpp"
#include "fixcirc/metric_space.hpp"

namespace fixcirc {

/// The critical radius r = min over displaced points of H(Tx,{x}).
/// Vacuous (no displaced point) is reported with r = +inf.
struct RadiusResult {
  double r = std::numeric_limits<double>::infinity();
  bool vacuous = true;
  std::vector<PointId> attaining;  // in point order
};

RadiusResult compute_r(const MetricSpace& space, const MultivaluedMap& map);

struct CircleVerdict {
  Circle circle;
  bool fixed = false;    // every member x has x in Tx
  bool vacuous = false;  // no members at this radius
  std::vector<std::pair<PointId, bool>> witnesses;  // (member, x in Tx)
};

CircleVerdict verify_fixed_circle(const MetricSpace& space,
                                  const MultivaluedMap& map, PointId x0,
                                  double rho);

/// Per-member record of the Ciric side hypothesis D(Tx,x0) = r.
struct SideCheck {
  PointId point = 0;
  double value = 0.0;
  bool pass = false;
};

/// Outcome of running one fixed-circle theorem end to end: the
/// contraction hypothesis, the radius, and all predicted conclusions.
/// Conclusions are always evaluated, even under a failed hypothesis,
/// so converse failures stay visible; `certified` is true only when
/// hypothesis, side conditions, and conclusions all hold.
struct TheoremReport {
  ContractionClass cls = ContractionClass::Fc;
  PointId x0 = 0;
  ContractionVerdict hypothesis;
  std::vector<std::pair<std::string, bool>> hypothesis_checks;
  RadiusResult radius;
  std::optional<CircleVerdict> circle_at_r;  // absent when degenerate
  std::vector<CircleVerdict> inner_circles;  // realized rho < r; all realized
                                             // radii when degenerate
  std::vector<PointId> disc_members;
  bool disc_fixed = false;
  bool center_in_image = false;
  std::vector<SideCheck> side_details;  // Ciric classes only
  bool certified = false;
  bool degenerate = false;
  std::vector<std::string> notes;
};

TheoremReport verify_theorem(const MetricSpace& space, const MultivaluedMap& map,
                             ContractionClass cls, const FFunction& f,
                             double tau, PointId x0,
                             const IntegralPhi* phi = nullptr);

/// Brute-force ground truth: every nonempty fixed circle over all centers
/// and all radii. Matrix geometry derives radii from realized distances;
/// coordinate geometry requires an explicit list (ParameterError without).
std::vector<CircleVerdict> enumerate_fixed_circles(
    const MetricSpace& space, const MultivaluedMap& map,
    const std::vector<double>* radii = nullptr);

/// Distinct distances from x0 to space points, ascending; nonempty
/// circles centered at x0 are exactly these radii.
std::vector<double> center_radii(const MetricSpace& space, PointId x0);

}  // namespace fixcirc
