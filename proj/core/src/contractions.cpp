#include "fixcirc/contractions.hpp"

#include <algorithm>
#include <cmath>

#include "fixcirc/quadrature.hpp"

namespace fixcirc {

MultivaluedMap::MultivaluedMap(const MetricSpace& space,
                               std::vector<PointSet> images)
    : images_(std::move(images)) {
  if (images_.size() != space.size())
    throw SchemaError("map must assign an image to every point");
  for (const auto& img : images_)
    for (PointId p : img.members())
      if (p >= space.size())
        throw SchemaError("image point outside the space");
}

MultivaluedMap MultivaluedMap::identity(const MetricSpace& space) {
  std::vector<PointSet> images;
  images.reserve(space.size());
  for (PointId x = 0; x < space.size(); ++x)
    images.push_back(PointSet{std::vector<PointId>{x}});
  return MultivaluedMap(space, std::move(images));
}

bool MultivaluedMap::all_singletons() const {
  return std::all_of(images_.begin(), images_.end(),
                     [](const PointSet& s) { return s.size() == 1; });
}

const char* contraction_class_name(ContractionClass cls) {
  switch (cls) {
    case ContractionClass::Fc: return "fc";
    case ContractionClass::IntegralFc: return "integral-fc";
    case ContractionClass::CiricFc: return "ciric-fc";
    case ContractionClass::IntegralCiricFc: return "integral-ciric-fc";
  }
  return "?";
}

std::optional<ContractionClass> contraction_class_by_name(std::string_view name) {
  if (name == "fc") return ContractionClass::Fc;
  if (name == "integral-fc") return ContractionClass::IntegralFc;
  if (name == "ciric-fc") return ContractionClass::CiricFc;
  if (name == "integral-ciric-fc") return ContractionClass::IntegralCiricFc;
  return std::nullopt;
}

IntegralPhi IntegralPhi::one() { return IntegralPhi(Kind::One, "one"); }

IntegralPhi IntegralPhi::linear(double slope) {
  if (slope <= 0.0)
    throw DomainError("linear phi needs positive slope for integral positivity");
  IntegralPhi p(Kind::Linear, "linear:" + std::to_string(slope));
  p.slope_ = slope;
  return p;
}

IntegralPhi IntegralPhi::sampled(std::vector<double> ts, std::vector<double> values,
                                 double quad_tol) {
  if (ts.size() != values.size() || ts.size() < 2)
    throw SchemaError("sampled phi needs matching grids with >= 2 knots");
  if (ts.front() != 0.0)
    throw SchemaError("sampled phi grid must start at t = 0");
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (i > 0 && ts[i] <= ts[i - 1])
      throw SchemaError("sampled phi grid must be strictly increasing");
    if (values[i] < 0.0) throw DomainError("phi negative at a probe point");
  }
  if (values[0] == 0.0 && values[1] == 0.0)
    throw DomainError("phi integrates to zero on an initial interval");
  if (quad_tol <= 0.0) throw DomainError("quad_tol must be positive");
  IntegralPhi p(Kind::Sampled, "sampled");
  p.grid_t_ = std::move(ts);
  p.grid_v_ = std::move(values);
  p.quad_tol_ = quad_tol;
  return p;
}

double IntegralPhi::sample_value(double t) const {
  if (t < grid_t_.front() || t > grid_t_.back())
    throw RangeError("sampled phi evaluated outside its grid hull");
  auto it = std::lower_bound(grid_t_.begin(), grid_t_.end(), t);
  std::size_t hi = static_cast<std::size_t>(it - grid_t_.begin());
  if (grid_t_[hi] == t) return grid_v_[hi];
  std::size_t lo = hi - 1;
  double u = (t - grid_t_[lo]) / (grid_t_[hi] - grid_t_[lo]);
  return grid_v_[lo] + u * (grid_v_[hi] - grid_v_[lo]);
}

double IntegralPhi::integral(double s) const {
  if (s < 0.0) throw DomainError("Phi is defined on [0,inf)");
  switch (kind_) {
    case Kind::One:
      return s;
    case Kind::Linear:
      return slope_ * s * s / 2.0;
    case Kind::Sampled:
      if (s == 0.0) return 0.0;
      if (s > grid_t_.back())
        throw RangeError("Phi(s) beyond the sampled phi grid hull");
      return adaptive_simpson([this](double t) { return sample_value(t); }, 0.0,
                              s, quad_tol_);
  }
  throw DomainError("unreachable phi kind");
}

double displacement(const MetricSpace& space, const MultivaluedMap& map,
                    PointId x) {
  return hausdorff(space, map.image(x), PointSet{std::vector<PointId>{x}});
}

std::pair<bool, bool> zero_displacement_iff_member(const MetricSpace& space,
                                                   const MultivaluedMap& map,
                                                   PointId x) {
  const double h = displacement(space, map, x);
  return {!space.positive(h), map.self_member(x)};
}

double ciric_M(const MetricSpace& space, const MultivaluedMap& map, PointId x,
               PointId y) {
  const double dxy = space.distance(x, y);
  const double dxTx = point_set_distance(space, x, map.image(x));
  const double dyTy = point_set_distance(space, y, map.image(y));
  const double cross = 0.5 * (point_set_distance(space, x, map.image(y)) +
                              point_set_distance(space, y, map.image(x)));
  return std::max(std::max(dxy, dxTx), std::max(dyTy, cross));
}

namespace {

// Shared slack analysis behind the four contraction classes. With tau
// absent this computes tau_max; with tau present it records per-point
// inequality violations. Iteration is in point order, ties on the
// minimum go to the first point, so results do not depend on evaluation
// order.
ContractionVerdict analyze(const MetricSpace& space, const MultivaluedMap& map,
                           ContractionClass cls, const FFunction& f,
                           std::optional<double> tau, PointId x0,
                           const IntegralPhi* phi) {
  if (x0 >= space.size()) throw DomainError("x0 outside the space");
  if (tau && !(*tau > 0.0)) throw DomainError("tau must be positive");

  const bool ciric = cls == ContractionClass::CiricFc ||
                     cls == ContractionClass::IntegralCiricFc;
  const bool integral = cls == ContractionClass::IntegralFc ||
                        cls == ContractionClass::IntegralCiricFc;
  static const IntegralPhi unit_phi = IntegralPhi::one();
  const IntegralPhi& ph = phi ? *phi : unit_phi;

  ContractionVerdict v;
  v.cls = cls;

  const double tol = space.cmp_tolerance();
  bool displaced_any = false;
  bool f_domain = false;
  double best = ContractionVerdict::kInfinity;

  for (PointId x = 0; x < space.size(); ++x) {
    const double h = displacement(space, map, x);
    if (!space.positive(h)) continue;
    displaced_any = true;

    const double bound = ciric ? ciric_M(space, map, x, x0)
                               : space.distance(x, x0);
    const double lhs_arg = integral ? ph.integral(h) : h;
    const double rhs_arg = integral ? ph.integral(bound) : bound;

    if (!space.positive(rhs_arg) || !space.positive(lhs_arg)) {
      // Bound argument lands outside F's domain (0,inf): the contraction
      // inequality cannot hold for any tau.
      v.violations.push_back({x, h, bound, "F-domain"});
      f_domain = true;
      continue;
    }

    const double slack = f(rhs_arg) - f(lhs_arg);
    if (slack < best) {
      best = slack;
      v.attained_at = x;
    }
    if (tau && *tau > slack + tol)
      v.violations.push_back({x, h, bound, "inequality"});
  }

  if (!displaced_any) {
    v.vacuous = true;
    v.holds = true;
    v.tau_max = ContractionVerdict::kInfinity;
    return v;
  }

  v.tau_max = std::isinf(best) ? 0.0 : best;  // only F-domain points seen
  if (tau)
    v.holds = v.violations.empty();
  else
    v.holds = !f_domain && v.tau_max > 0.0;
  return v;
}

}  // namespace

ContractionVerdict max_tau_fc(const MetricSpace& space, const MultivaluedMap& map,
                              const FFunction& f, PointId x0) {
  return analyze(space, map, ContractionClass::Fc, f, std::nullopt, x0, nullptr);
}

ContractionVerdict check_fc(const MetricSpace& space, const MultivaluedMap& map,
                            const FFunction& f, double tau, PointId x0) {
  return analyze(space, map, ContractionClass::Fc, f, tau, x0, nullptr);
}

ContractionVerdict max_tau_ciric(const MetricSpace& space,
                                 const MultivaluedMap& map, const FFunction& f,
                                 PointId x0) {
  return analyze(space, map, ContractionClass::CiricFc, f, std::nullopt, x0,
                 nullptr);
}

ContractionVerdict check_ciric_fc(const MetricSpace& space,
                                  const MultivaluedMap& map, const FFunction& f,
                                  double tau, PointId x0) {
  return analyze(space, map, ContractionClass::CiricFc, f, tau, x0, nullptr);
}

ContractionVerdict max_tau_integral_fc(const MetricSpace& space,
                                       const MultivaluedMap& map,
                                       const FFunction& f, PointId x0,
                                       const IntegralPhi& phi) {
  return analyze(space, map, ContractionClass::IntegralFc, f, std::nullopt, x0,
                 &phi);
}

ContractionVerdict check_integral_fc(const MetricSpace& space,
                                     const MultivaluedMap& map,
                                     const FFunction& f, double tau, PointId x0,
                                     const IntegralPhi& phi) {
  return analyze(space, map, ContractionClass::IntegralFc, f, tau, x0, &phi);
}

ContractionVerdict max_tau_integral_ciric(const MetricSpace& space,
                                          const MultivaluedMap& map,
                                          const FFunction& f, PointId x0,
                                          const IntegralPhi& phi) {
  return analyze(space, map, ContractionClass::IntegralCiricFc, f, std::nullopt,
                 x0, &phi);
}

ContractionVerdict check_integral_ciric(const MetricSpace& space,
                                        const MultivaluedMap& map,
                                        const FFunction& f, double tau,
                                        PointId x0, const IntegralPhi& phi) {
  return analyze(space, map, ContractionClass::IntegralCiricFc, f, tau, x0, &phi);
}

ContractionVerdict max_tau(const MetricSpace& space, const MultivaluedMap& map,
                           ContractionClass cls, const FFunction& f, PointId x0,
                           const IntegralPhi* phi) {
  return analyze(space, map, cls, f, std::nullopt, x0, phi);
}

ContractionVerdict check_contraction(const MetricSpace& space,
                                     const MultivaluedMap& map,
                                     ContractionClass cls, const FFunction& f,
                                     double tau, PointId x0,
                                     const IntegralPhi* phi) {
  return analyze(space, map, cls, f, tau, x0, phi);
}

std::vector<WitnessEntry> search_witness(const MetricSpace& space,
                                         const MultivaluedMap& map,
                                         const std::vector<FFunction>& fs,
                                         const std::vector<PointId>& candidates) {
  struct Keyed {
    WitnessEntry entry;
    int cls_idx;
    std::size_t f_idx;
  };
  static const ContractionClass kClasses[] = {
      ContractionClass::Fc, ContractionClass::IntegralFc,
      ContractionClass::CiricFc, ContractionClass::IntegralCiricFc};

  std::vector<Keyed> found;
  for (int c = 0; c < 4; ++c) {
    for (std::size_t fi = 0; fi < fs.size(); ++fi) {
      for (PointId x0 : candidates) {
        ContractionVerdict v = max_tau(space, map, kClasses[c], fs[fi], x0);
        if (!v.holds) continue;
        found.push_back({{kClasses[c], fs[fi].name(), x0, v.tau_max, v.vacuous},
                         c,
                         fi});
      }
    }
  }
  std::sort(found.begin(), found.end(), [](const Keyed& a, const Keyed& b) {
    if (a.entry.tau_max != b.entry.tau_max)
      return a.entry.tau_max > b.entry.tau_max;
    if (a.cls_idx != b.cls_idx) return a.cls_idx < b.cls_idx;
    if (a.f_idx != b.f_idx) return a.f_idx < b.f_idx;
    return a.entry.x0 < b.entry.x0;
  });
  std::vector<WitnessEntry> out;
  out.reserve(found.size());
  for (auto& k : found) out.push_back(std::move(k.entry));
  return out;
}

}  // namespace fixcirc
