#pragma once

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "fixcirc/metric_space.hpp"
#include "fixcirc/wardowski.hpp"

namespace fixcirc {

/// Total assignment point -> nonempty image set over one space.
/// Realizes a map X -> CB(X); the singleton {x} is built on demand.
class MultivaluedMap {
 public:
  MultivaluedMap(const MetricSpace& space, std::vector<PointSet> images);
  static MultivaluedMap identity(const MetricSpace& space);

  std::size_t size() const { return images_.size(); }
  const PointSet& image(PointId x) const { return images_[x]; }
  bool self_member(PointId x) const { return images_[x].contains(x); }
  bool all_singletons() const;

 private:
  std::vector<PointSet> images_;
};

enum class ContractionClass { Fc, IntegralFc, CiricFc, IntegralCiricFc };

const char* contraction_class_name(ContractionClass cls);  // "fc", ...
std::optional<ContractionClass> contraction_class_by_name(std::string_view name);

struct ContractionViolation {
  PointId point = 0;
  double displacement = 0.0;  // H(Tx, {x})
  double bound = 0.0;         // d(x,x0), M(x,x0), or their Phi images
  std::string reason;         // "inequality" or "F-domain"
};

/// Outcome of a contraction decision. tau_max is the largest admissible
/// margin: min over displaced points of F(bound) - F(H). +inf sentinel
/// when no point is displaced (vacuous pass). holds requires tau_max > 0
/// and no F-domain violation; for the fixed-tau checkers it additionally
/// requires tau <= tau_max.
struct ContractionVerdict {
  ContractionClass cls = ContractionClass::Fc;
  bool holds = false;
  bool vacuous = false;
  double tau_max = 0.0;
  std::optional<PointId> attained_at;  // first point attaining tau_max
  std::vector<ContractionViolation> violations;

  static constexpr double kInfinity = std::numeric_limits<double>::infinity();
};

/// Integrand phi for the integral-type classes, with Phi(s) = integral of
/// phi over [0,s]. One and Linear evaluate in closed form; sampled phi
/// goes through adaptive Simpson at quad_tol.
class IntegralPhi {
 public:
  static IntegralPhi one();
  static IntegralPhi linear(double slope);
  static IntegralPhi sampled(std::vector<double> ts, std::vector<double> values,
                             double quad_tol = 1e-9);

  /// Phi(s); nondecreasing with Phi(0)=0 and Phi(s)>0 for s>0.
  double integral(double s) const;
  const std::string& name() const { return name_; }

 private:
  enum class Kind { One, Linear, Sampled };
  IntegralPhi(Kind kind, std::string name) : kind_(kind), name_(std::move(name)) {}

  double sample_value(double t) const;

  Kind kind_;
  std::string name_;
  double slope_ = 0.0;
  double quad_tol_ = 1e-9;
  std::vector<double> grid_t_;
  std::vector<double> grid_v_;
};

/// H(Tx, {x}); equals max over a in Tx of d(a,x), computed per the
/// two-branch definition.
double displacement(const MetricSpace& space, const MultivaluedMap& map,
                    PointId x);

/// (H(Tx,{x}) == 0, x in Tx). Only the forward direction H=0 => membership
/// is a theorem; the pair is reported so the converse gap stays visible.
std::pair<bool, bool> zero_displacement_iff_member(const MetricSpace& space,
                                                   const MultivaluedMap& map,
                                                   PointId x);

/// max{d(x,y), D(x,Tx), D(y,Ty), (D(x,Ty)+D(y,Tx))/2}.
double ciric_M(const MetricSpace& space, const MultivaluedMap& map, PointId x,
               PointId y);

ContractionVerdict max_tau_fc(const MetricSpace& space, const MultivaluedMap& map,
                              const FFunction& f, PointId x0);
ContractionVerdict check_fc(const MetricSpace& space, const MultivaluedMap& map,
                            const FFunction& f, double tau, PointId x0);

ContractionVerdict max_tau_ciric(const MetricSpace& space,
                                 const MultivaluedMap& map, const FFunction& f,
                                 PointId x0);
ContractionVerdict check_ciric_fc(const MetricSpace& space,
                                  const MultivaluedMap& map, const FFunction& f,
                                  double tau, PointId x0);

ContractionVerdict max_tau_integral_fc(const MetricSpace& space,
                                       const MultivaluedMap& map,
                                       const FFunction& f, PointId x0,
                                       const IntegralPhi& phi);
ContractionVerdict check_integral_fc(const MetricSpace& space,
                                     const MultivaluedMap& map,
                                     const FFunction& f, double tau, PointId x0,
                                     const IntegralPhi& phi);

ContractionVerdict max_tau_integral_ciric(const MetricSpace& space,
                                          const MultivaluedMap& map,
                                          const FFunction& f, PointId x0,
                                          const IntegralPhi& phi);
ContractionVerdict check_integral_ciric(const MetricSpace& space,
                                        const MultivaluedMap& map,
                                        const FFunction& f, double tau,
                                        PointId x0, const IntegralPhi& phi);

/// Dispatch by class; phi defaults to One for the integral classes.
ContractionVerdict max_tau(const MetricSpace& space, const MultivaluedMap& map,
                           ContractionClass cls, const FFunction& f, PointId x0,
                           const IntegralPhi* phi = nullptr);
ContractionVerdict check_contraction(const MetricSpace& space,
                                     const MultivaluedMap& map,
                                     ContractionClass cls, const FFunction& f,
                                     double tau, PointId x0,
                                     const IntegralPhi* phi = nullptr);

struct WitnessEntry {
  ContractionClass cls;
  std::string f_name;
  PointId x0;
  double tau_max;
  bool vacuous;
};

/// Existential sweep: every (class, F, x0) with tau_max > 0, sorted by
/// tau_max descending (vacuous +inf entries first), ties broken by class,
/// F, then point order. Integral classes use phi = One.
std::vector<WitnessEntry> search_witness(const MetricSpace& space,
                                         const MultivaluedMap& map,
                                         const std::vector<FFunction>& fs,
                                         const std::vector<PointId>& candidates);

}  // namespace fixcirc
