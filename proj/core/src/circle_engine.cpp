#include "fixcirc/circle_engine.hpp"

#include <algorithm>
#include <cmath>

namespace fixcirc {

RadiusResult compute_r(const MetricSpace& space, const MultivaluedMap& map) {
  RadiusResult result;
  std::vector<double> h(space.size());
  for (PointId x = 0; x < space.size(); ++x) {
    h[x] = displacement(space, map, x);
    if (space.positive(h[x]) && h[x] < result.r) {
      result.r = h[x];
      result.vacuous = false;
    }
  }
  if (!result.vacuous)
    for (PointId x = 0; x < space.size(); ++x)
      if (space.positive(h[x]) && space.distances_equal(h[x], result.r))
        result.attaining.push_back(x);
  return result;
}

CircleVerdict verify_fixed_circle(const MetricSpace& space,
                                  const MultivaluedMap& map, PointId x0,
                                  double rho) {
  CircleVerdict v;
  v.circle = circle_of(space, x0, rho);
  v.vacuous = v.circle.members.empty();
  v.fixed = true;
  for (PointId x : v.circle.members) {
    const bool member = map.self_member(x);
    v.witnesses.emplace_back(x, member);
    v.fixed = v.fixed && member;
  }
  return v;
}

std::vector<double> center_radii(const MetricSpace& space, PointId x0) {
  std::vector<double> radii(space.size());
  for (PointId x = 0; x < space.size(); ++x) radii[x] = space.distance(x, x0);
  std::sort(radii.begin(), radii.end());
  std::vector<double> out;
  for (double r : radii)
    if (out.empty() || !space.distances_equal(out.back(), r)) out.push_back(r);
  return out;
}

TheoremReport verify_theorem(const MetricSpace& space, const MultivaluedMap& map,
                             ContractionClass cls, const FFunction& f,
                             double tau, PointId x0, const IntegralPhi* phi) {
  TheoremReport report;
  report.cls = cls;
  report.x0 = x0;
  report.hypothesis = check_contraction(space, map, cls, f, tau, x0, phi);
  report.hypothesis_checks.emplace_back("contraction", report.hypothesis.holds);
  report.radius = compute_r(space, map);
  report.degenerate = report.radius.vacuous;
  report.center_in_image = map.self_member(x0);

  const bool ciric = cls == ContractionClass::CiricFc ||
                     cls == ContractionClass::IntegralCiricFc;
  const std::vector<double> radii = center_radii(space, x0);

  bool conclusions = true;
  if (report.degenerate) {
    report.notes.push_back("degenerate: T has no displaced points");
    for (double rho : radii) {
      report.inner_circles.push_back(verify_fixed_circle(space, map, x0, rho));
      conclusions = conclusions && report.inner_circles.back().fixed;
    }
    report.disc_members = disc_of(space, x0, radii.empty() ? 0.0 : radii.back());
  } else {
    const double r = report.radius.r;
    report.circle_at_r = verify_fixed_circle(space, map, x0, r);
    conclusions = conclusions && report.circle_at_r->fixed;
    for (double rho : radii) {
      if (rho < r && !space.distances_equal(rho, r)) {
        report.inner_circles.push_back(verify_fixed_circle(space, map, x0, rho));
        conclusions = conclusions && report.inner_circles.back().fixed;
      }
    }
    report.disc_members = disc_of(space, x0, r);
  }
  report.disc_fixed = true;
  for (PointId x : report.disc_members)
    report.disc_fixed = report.disc_fixed && map.self_member(x);
  conclusions = conclusions && report.disc_fixed && report.center_in_image;

  bool side_ok = true;
  if (ciric) {
    // Side hypothesis D(Tx,x0) = r, read universally over the members of
    // C_{x0,r} (quantifier adopted here; the report carries the reading).
    if (report.circle_at_r) {
      for (PointId x : report.circle_at_r->circle.members) {
        const double value = point_set_distance(space, x0, map.image(x));
        const bool pass = space.distances_equal(value, report.radius.r);
        report.side_details.push_back({x, value, pass});
        side_ok = side_ok && pass;
      }
    }
    report.hypothesis_checks.emplace_back("D(Tx,x0)=r", side_ok);
    report.notes.push_back(
        "side hypothesis D(Tx,x0)=r evaluated for every member of C_{x0,r}");
    if (!side_ok) report.notes.push_back("side hypothesis fail");
  }

  const bool integral = cls == ContractionClass::IntegralFc ||
                        cls == ContractionClass::IntegralCiricFc;
  if (integral)
    report.notes.push_back(
        "integral classes certify the circle at r directly; inner circles "
        "and the disc ride on the disc corollary");

  if (!report.hypothesis.holds)
    report.notes.push_back(
        "unconditioned: hypothesis failed, conclusions are empirical only");

  report.certified = report.hypothesis.holds && side_ok && conclusions;
  return report;
}

std::vector<CircleVerdict> enumerate_fixed_circles(
    const MetricSpace& space, const MultivaluedMap& map,
    const std::vector<double>* radii) {
  std::vector<double> realized;
  if (radii) {
    realized = *radii;
    std::sort(realized.begin(), realized.end());
    realized.erase(std::unique(realized.begin(), realized.end()),
                   realized.end());
  } else if (!space.coordinate_geometry()) {
    realized = space.realized_distances();
  } else {
    throw ParameterError(
        "circle enumeration on coordinate geometry needs an explicit radius "
        "list");
  }

  std::vector<CircleVerdict> fixed;
  for (PointId x0 = 0; x0 < space.size(); ++x0) {
    for (double rho : realized) {
      CircleVerdict v = verify_fixed_circle(space, map, x0, rho);
      if (!v.vacuous && v.fixed) fixed.push_back(std::move(v));
    }
  }
  return fixed;
}

}  // namespace fixcirc
