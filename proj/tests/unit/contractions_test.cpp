#include "fixcirc/contractions.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "fixcirc/instance.hpp"

using namespace fixcirc;

namespace {

// Real-line points as an explicit matrix; keeps every comparison exact.
MetricSpace line_space(const std::vector<std::pair<std::string, double>>& pts) {
  std::vector<std::string> labels;
  for (const auto& [label, value] : pts) labels.push_back(label);
  const std::size_t n = pts.size();
  std::vector<double> d(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      d[i * n + j] = std::abs(pts[i].second - pts[j].second);
  return MetricSpace::from_matrix(std::move(labels), std::move(d));
}

MultivaluedMap map_of(const MetricSpace& space,
                      const std::vector<std::vector<std::string>>& images) {
  std::vector<PointSet> sets;
  for (const auto& img : images) {
    std::vector<PointId> ids;
    for (const auto& label : img) ids.push_back(space.require(label));
    sets.emplace_back(std::move(ids));
  }
  return MultivaluedMap(space, std::move(sets));
}

TEST(Displacement, WorkedExampleValues) {
  const Instance ex2 = builtin_instance("example2");
  EXPECT_EQ(displacement(ex2.space, ex2.map, ex2.space.require("4")), 3.0);
  EXPECT_EQ(displacement(ex2.space, ex2.map, ex2.space.require("0")), 0.0);

  const Instance ex1 = builtin_instance("example1");
  const PointId minus_one = ex1.space.require("-1");
  for (int n : {1, 5, 20}) {
    const PointId xn = ex1.space.require("x" + std::to_string(n));
    // H(Tx_n, {x_n}) = d(-1, x_n) = 2 + 1/n
    EXPECT_EQ(displacement(ex1.space, ex1.map, xn),
              ex1.space.distance(minus_one, xn));
    EXPECT_NEAR(displacement(ex1.space, ex1.map, xn), 2.0 + 1.0 / n, 1e-12);
  }
}

TEST(Displacement, NearestImagePointDistance) {
  const Instance ex1 = builtin_instance("example1");
  for (int n = 2; n <= 20; ++n) {
    const PointId xn = ex1.space.require("x" + std::to_string(n));
    const PointId xp = ex1.space.require("x" + std::to_string(n - 1));
    const double d = point_set_distance(ex1.space, xn, ex1.map.image(xn));
    EXPECT_EQ(d, ex1.space.distance(xn, xp));
    EXPECT_NEAR(d, 1.0 / (n - 1) - 1.0 / n, 1e-12);
  }
}

TEST(ZeroDisplacement, MembershipPairs) {
  // Tx = {x,y}: membership holds yet H = d(x,y) > 0; the printed "iff"
  // only survives in the forward direction.
  const MetricSpace s = line_space({{"x", 0.0}, {"y", 1.0}});
  const MultivaluedMap t = map_of(s, {{"x", "y"}, {"y"}});
  EXPECT_EQ(zero_displacement_iff_member(s, t, 0),
            (std::pair<bool, bool>{false, true}));
  EXPECT_EQ(zero_displacement_iff_member(s, t, 1),
            (std::pair<bool, bool>{true, true}));

  const Instance ex2 = builtin_instance("example2");
  EXPECT_EQ(
      zero_displacement_iff_member(ex2.space, ex2.map, ex2.space.require("4")),
      (std::pair<bool, bool>{false, false}));
}

TEST(ZeroDisplacement, ForwardDirectionAlwaysHolds) {
  const Instance ex1 = builtin_instance("example1");
  for (PointId x = 0; x < ex1.space.size(); ++x) {
    const auto [zero, member] = zero_displacement_iff_member(ex1.space, ex1.map, x);
    if (zero) {
      EXPECT_TRUE(member);
    }
  }
}

TEST(MaxTauFc, Example2WitnessValue) {
  const Instance inst = builtin_instance("example2");
  const PointId origin = inst.space.require("0");
  const ContractionVerdict v =
      max_tau_fc(inst.space, inst.map, FFunction::ln(), origin);
  EXPECT_TRUE(v.holds);
  EXPECT_FALSE(v.vacuous);
  EXPECT_NEAR(v.tau_max, std::log(4.0 / 3.0), 1e-12);
  ASSERT_TRUE(v.attained_at.has_value());
  EXPECT_EQ(inst.space.label(*v.attained_at), "4");

  // Oracle: the slack minimum over the displaced chain, straight from the
  // definition.
  double best = 1e300;
  for (int x = 4; x <= 9; ++x)
    best = std::min(best, std::log(double(x)) - std::log(3.0));
  EXPECT_EQ(v.tau_max, best);
}

TEST(MaxTauFc, Example1HasNoMargin) {
  const Instance inst = builtin_instance("example1");
  const ContractionVerdict v =
      max_tau_fc(inst.space, inst.map, FFunction::ln(), inst.space.require("-1"));
  EXPECT_FALSE(v.holds);
  EXPECT_EQ(v.tau_max, 0.0);
}

TEST(MaxTauFc, IdentityIsVacuous) {
  const MetricSpace s = line_space({{"a", 0.0}, {"b", 1.0}});
  const MultivaluedMap t = MultivaluedMap::identity(s);
  const ContractionVerdict v = max_tau_fc(s, t, FFunction::ln(), 0);
  EXPECT_TRUE(v.holds);
  EXPECT_TRUE(v.vacuous);
  EXPECT_TRUE(std::isinf(v.tau_max));
}

TEST(CheckFc, Example2AtTheWitnessAndBeyond) {
  const Instance inst = builtin_instance("example2");
  const PointId origin = inst.space.require("0");
  const FFunction f = FFunction::ln();
  EXPECT_TRUE(
      check_fc(inst.space, inst.map, f, std::log(4.0 / 3.0), origin).holds);

  const ContractionVerdict too_big =
      check_fc(inst.space, inst.map, f, 1.0, origin);
  EXPECT_FALSE(too_big.holds);
  ASSERT_FALSE(too_big.violations.empty());
  EXPECT_EQ(inst.space.label(too_big.violations.front().point), "4");
}

TEST(CheckFc, RejectsNonPositiveTau) {
  const MetricSpace s = line_space({{"a", 0.0}, {"b", 1.0}});
  const MultivaluedMap t = MultivaluedMap::identity(s);
  EXPECT_THROW(check_fc(s, t, FFunction::ln(), 0.0, 0), DomainError);
  EXPECT_THROW(check_fc(s, t, FFunction::ln(), -1.0, 0), DomainError);
}

TEST(CheckFc, DisplacedCenterIsFDomainFailure) {
  // T(a) = {a,b} displaces the center itself: d(a,a) = 0 falls outside
  // F's domain, so the verdict fails with the "F-domain" reason.
  const MetricSpace s = line_space({{"a", 0.0}, {"b", 1.0}});
  const MultivaluedMap t = map_of(s, {{"a", "b"}, {"b"}});
  const ContractionVerdict v = check_fc(s, t, FFunction::ln(), 0.5, 0);
  EXPECT_FALSE(v.holds);
  ASSERT_EQ(v.violations.size(), 1u);
  EXPECT_EQ(v.violations[0].reason, "F-domain");

  const ContractionVerdict ciric = check_ciric_fc(s, t, FFunction::ln(), 0.5, 0);
  EXPECT_FALSE(ciric.holds);
  ASSERT_EQ(ciric.violations.size(), 1u);
  EXPECT_EQ(ciric.violations[0].reason, "F-domain");  // M(a,a) = D(a,Ta) = 0
}

TEST(CiricM, Example2BruteForce) {
  const Instance inst = builtin_instance("example2");
  const PointId x = inst.space.require("4");
  const PointId y = inst.space.require("0");
  // Oracle: the four terms computed raw. T4 = {5,6,7}, T0 = {0}.
  const double term1 = inst.space.distance(x, y);                          // 4
  const double term2 = point_set_distance(inst.space, x, inst.map.image(x));  // 1
  const double term3 = point_set_distance(inst.space, y, inst.map.image(y));  // 0
  const double term4 =
      0.5 * (point_set_distance(inst.space, x, inst.map.image(y)) +
             point_set_distance(inst.space, y, inst.map.image(x)));  // (4+5)/2
  ASSERT_EQ(term1, 4.0);
  ASSERT_EQ(term2, 1.0);
  ASSERT_EQ(term3, 0.0);
  ASSERT_EQ(term4, 4.5);
  EXPECT_EQ(ciric_M(inst.space, inst.map, x, y), 4.5);
}

TEST(CiricM, FixedPointGivesZero) {
  const MetricSpace s = line_space({{"a", 0.0}, {"b", 3.0}});
  const MultivaluedMap t = MultivaluedMap::identity(s);
  EXPECT_EQ(ciric_M(s, t, 0, 0), 0.0);
}

TEST(CiricM, Example1ReducesToCenterDistance) {
  const Instance inst = builtin_instance("example1");
  const PointId minus_one = inst.space.require("-1");
  for (int n : {1, 3, 20}) {
    const PointId xn = inst.space.require("x" + std::to_string(n));
    EXPECT_EQ(ciric_M(inst.space, inst.map, xn, minus_one),
              inst.space.distance(xn, minus_one));
  }
}

TEST(CiricCheck, Example3AndCounterexample) {
  const Instance ex2 = builtin_instance("example2");
  const PointId origin = ex2.space.require("0");
  EXPECT_TRUE(check_ciric_fc(ex2.space, ex2.map, FFunction::ln(),
                             std::log(4.0 / 3.0), origin)
                  .holds);

  const Instance ex1 = builtin_instance("example1");
  const ContractionVerdict v = max_tau_ciric(ex1.space, ex1.map, FFunction::ln(),
                                             ex1.space.require("-1"));
  EXPECT_FALSE(v.holds);
  EXPECT_EQ(v.tau_max, 0.0);
}

TEST(CiricCheck, FcImpliesCiricAtSameTriple) {
  const Instance inst = builtin_instance("example2");
  const FFunction f = FFunction::ln();
  for (const char* x0_label : {"0", "1", "i"}) {
    const PointId x0 = inst.space.require(x0_label);
    for (double tau : {0.01, 0.25, std::log(4.0 / 3.0)}) {
      if (check_fc(inst.space, inst.map, f, tau, x0).holds) {
        EXPECT_TRUE(check_ciric_fc(inst.space, inst.map, f, tau, x0).holds);
      }
    }
  }
}

TEST(IntegralPhi, ClosedForms) {
  EXPECT_EQ(IntegralPhi::one().integral(7.5), 7.5);
  EXPECT_EQ(IntegralPhi::one().integral(0.0), 0.0);
  EXPECT_EQ(IntegralPhi::linear(2.0).integral(3.0), 9.0);  // phi(t)=2t
}

TEST(IntegralPhi, SampledGoesThroughSimpson) {
  // phi(t) = t sampled on knots; Phi(4) = 8.
  const IntegralPhi phi =
      IntegralPhi::sampled({0.0, 1.0, 2.0, 5.0}, {0.0, 1.0, 2.0, 5.0});
  EXPECT_NEAR(phi.integral(4.0), 8.0, 1e-8);
  EXPECT_EQ(phi.integral(0.0), 0.0);
  EXPECT_THROW(phi.integral(6.0), RangeError);
}

TEST(IntegralPhi, ValidationGuards) {
  EXPECT_THROW(IntegralPhi::linear(0.0), DomainError);
  EXPECT_THROW(IntegralPhi::linear(-1.0), DomainError);
  EXPECT_THROW(IntegralPhi::sampled({0.0, 1.0}, {0.0, -1.0}), DomainError);
  EXPECT_THROW(IntegralPhi::sampled({0.0, 1.0}, {0.0, 0.0}), DomainError);
  EXPECT_THROW(IntegralPhi::sampled({1.0, 2.0}, {1.0, 1.0}), SchemaError);
}

TEST(IntegralChecks, PhiOneReducesToPlainExactly) {
  const Instance inst = builtin_instance("example2");
  const IntegralPhi phi = IntegralPhi::one();
  const FFunction f = FFunction::ln();
  for (const char* x0_label : {"0", "4", "-3"}) {
    const PointId x0 = inst.space.require(x0_label);
    const ContractionVerdict plain = max_tau_fc(inst.space, inst.map, f, x0);
    const ContractionVerdict integ =
        max_tau_integral_fc(inst.space, inst.map, f, x0, phi);
    EXPECT_EQ(plain.holds, integ.holds);
    EXPECT_EQ(plain.tau_max, integ.tau_max);  // bit-exact
    EXPECT_EQ(plain.attained_at, integ.attained_at);
  }
}

TEST(IntegralChecks, LinearPhiShiftsTheMargin) {
  // phi(t) = 2t turns the bound into ln(|x|^2) - ln(9); minimum at |x|=4
  // gives ln(16/9).
  const Instance inst = builtin_instance("example2");
  const ContractionVerdict v = max_tau_integral_fc(
      inst.space, inst.map, FFunction::ln(), inst.space.require("0"),
      IntegralPhi::linear(2.0));
  EXPECT_TRUE(v.holds);
  EXPECT_NEAR(v.tau_max, std::log(16.0 / 9.0), 1e-12);

  double oracle = 1e300;
  for (int x = 4; x <= 9; ++x)
    oracle = std::min(oracle, std::log(double(x * x)) - std::log(9.0));
  EXPECT_NEAR(v.tau_max, oracle, 1e-12);
}

TEST(IntegralChecks, VacuousForIdentity) {
  const MetricSpace s = line_space({{"a", 0.0}, {"b", 1.0}});
  const MultivaluedMap t = MultivaluedMap::identity(s);
  const ContractionVerdict v = check_integral_ciric(
      s, t, FFunction::ln(), 1.0, 0, IntegralPhi::linear(3.0));
  EXPECT_TRUE(v.holds);
  EXPECT_TRUE(v.vacuous);
}

TEST(CustomF, HullViolationAbortsCheck) {
  // F sampled on [1,2] cannot express F(3) needed for H = 3.
  const Instance inst = builtin_instance("example2");
  const FFunction f = FFunction::custom({1.0, 2.0}, {0.0, 1.0});
  EXPECT_THROW(max_tau_fc(inst.space, inst.map, f, inst.space.require("0")),
               RangeError);
}

TEST(SearchWitness, Example2FindsTheKnownTriple) {
  const Instance inst = builtin_instance("example2");
  std::vector<PointId> candidates(inst.space.size());
  for (PointId i = 0; i < inst.space.size(); ++i) candidates[i] = i;
  const auto witnesses = search_witness(inst.space, inst.map,
                                        {FFunction::ln()}, candidates);
  bool found = false;
  for (const auto& w : witnesses)
    if (w.cls == ContractionClass::Fc && inst.space.label(w.x0) == "0" &&
        std::abs(w.tau_max - std::log(4.0 / 3.0)) <= 1e-12)
      found = true;
  EXPECT_TRUE(found);
}

TEST(SearchWitness, Example1CenterYieldsNothing) {
  const Instance inst = builtin_instance("example1");
  const auto witnesses =
      search_witness(inst.space, inst.map, {FFunction::ln()},
                     {inst.space.require("-1")});
  EXPECT_TRUE(witnesses.empty());
}

TEST(SearchWitness, IdentityListsEveryCenterVacuously) {
  const MetricSpace s = line_space({{"a", 0.0}, {"b", 1.0}, {"c", 5.0}});
  const MultivaluedMap t = MultivaluedMap::identity(s);
  const auto witnesses = search_witness(s, t, {FFunction::ln()}, {0, 1, 2});
  // 4 classes x 3 centers, all vacuous with the +inf sentinel.
  EXPECT_EQ(witnesses.size(), 12u);
  for (const auto& w : witnesses) {
    EXPECT_TRUE(w.vacuous);
    EXPECT_TRUE(std::isinf(w.tau_max));
  }
}

}  // namespace
