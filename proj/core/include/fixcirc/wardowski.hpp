#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fixcirc/errors.hpp"

namespace fixcirc {

enum class FKind { Ln, LnPlusId, NegInvSqrt, LnQuadratic, CustomSampled };

/// A member of the Wardowski family: strictly increasing F:(0,inf)->R with
/// the divergence and vanishing-tail conditions. Built-ins evaluate in
/// closed form; CustomSampled interpolates linearly on its grid and
/// refuses to extrapolate.
class FFunction {
 public:
  static FFunction ln();
  static FFunction ln_plus_id();
  static FFunction neg_inv_sqrt();
  static FFunction ln_quadratic();
  /// Grid alphas must be positive and strictly increasing.
  static FFunction custom(std::vector<double> alphas, std::vector<double> values);

  /// Built-in name strings used by the CLI and instance files:
  /// "ln", "ln+id", "-1/sqrt", "ln-quad".
  static std::optional<FFunction> by_name(std::string_view name);
  static const std::vector<std::string>& builtin_names();

  FKind kind() const { return kind_; }
  bool is_builtin() const { return kind_ != FKind::CustomSampled; }
  const std::string& name() const { return name_; }

  /// eval_F. Throws DomainError for alpha <= 0, RangeError outside a
  /// custom grid hull.
  double operator()(double alpha) const;

  /// Custom grid hull [min alpha, max alpha]; built-ins return (0, inf).
  std::pair<double, double> hull() const;

 private:
  FFunction(FKind kind, std::string name) : kind_(kind), name_(std::move(name)) {}

  FKind kind_;
  std::string name_;
  std::vector<double> grid_alpha_;  // CustomSampled only
  std::vector<double> grid_value_;
};

struct ProbeConfig {
  double grid_min = 1e-8;
  double grid_max = 1e3;
  int grid_points = 200;
  // Exponent for the (F3) tail probe. Any k in (1/2, 1) witnesses all four
  // built-ins; 1/2 itself cannot (alpha^{1/2} * (-1/sqrt(alpha)) == -1).
  double k = 0.9;
  double f2_threshold = -1e3;
  double f3_tolerance = 1e-3;
};

struct FAxiomReport {
  bool f1 = false;  // strictly increasing across the probe grid
  bool f2 = false;  // divergence toward -inf at 0+ (analytic for built-ins)
  bool f3 = false;  // alpha^k F(alpha) -> 0 probe
  bool pass = false;
  // Finite probing decides limit statements; results are numerically
  // consistent, not proved.
  std::vector<std::string> notes;
};

/// Numeric validation of (F1)-(F3) on a log-spaced grid. Custom grids are
/// probed only inside their hull.
FAxiomReport validate_F(const FFunction& f, const ProbeConfig& probe = {});

}  // namespace fixcirc
