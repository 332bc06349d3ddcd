#include "fixcirc/campaign.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "fixcirc/circle_engine.hpp"
#include "fixcirc/contractions.hpp"
#include "fixcirc/metric_space.hpp"
#include "fixcirc/quadrature.hpp"
#include "fixcirc/wardowski.hpp"

namespace fixcirc {

namespace {

// Hand-rolled generator so streams are identical across standard-library
// implementations (std distributions are not pinned).
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  std::uint64_t below(std::uint64_t n) { return next() % n; }
};

constexpr const char* kTallyNames[] = {
    "metric-closure-valid", "lemma1",           "hausdorff-axioms",
    "circle-partition",     "consistency",      "implication-fc-ciric",
    "reduction-phi-one",    "center-membership", "theorem1-fc",
    "theorem3-ciric",       "oracle-r",         "oracle-circles",
    "single-valued",        "quadrature"};

class Battery {
 public:
  explicit Battery(const CampaignConfig& config) : config_(config) {
    for (const char* name : kTallyNames) tallies_.push_back({name, 0, 0});
  }

  void record(const std::string& name, bool ok, int instance_idx,
              const std::string& detail) {
    for (auto& t : tallies_) {
      if (t.name == name) {
        ++t.checked;
        if (!ok) {
          ++t.violated;
          if (failures_.size() < 20) {
            std::ostringstream os;
            os << "instance " << instance_idx << ": " << name << ": " << detail;
            failures_.push_back(os.str());
          }
        }
        return;
      }
    }
  }

  CampaignResult finish(int instances) {
    CampaignResult result;
    result.config = config_;
    result.instances = instances;
    result.tallies = std::move(tallies_);
    result.failures = std::move(failures_);
    return result;
  }

 private:
  CampaignConfig config_;
  std::vector<InvariantTally> tallies_;
  std::vector<std::string> failures_;
};

MetricSpace random_space(SplitMix64& rng, int n) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));

  const auto sz = static_cast<std::size_t>(n);
  std::vector<double> d(sz * sz, 0.0);
  for (std::size_t i = 0; i < sz; ++i)
    for (std::size_t j = i + 1; j < sz; ++j) {
      const double v = 1.0 + static_cast<double>(rng.below(12));
      d[i * sz + j] = v;
      d[j * sz + i] = v;
    }
  // Shortest-path metric closure: integer sums stay exact in doubles, so
  // the repaired matrix satisfies the triangle inequality exactly.
  for (std::size_t k = 0; k < sz; ++k)
    for (std::size_t i = 0; i < sz; ++i)
      for (std::size_t j = 0; j < sz; ++j)
        d[i * sz + j] = std::min(d[i * sz + j], d[i * sz + k] + d[k * sz + j]);
  return MetricSpace::from_matrix(std::move(labels), std::move(d));
}

std::vector<PointId> random_subset(SplitMix64& rng, std::size_t n,
                                   std::size_t max_size) {
  const std::size_t size = 1 + rng.below(std::min(max_size, n));
  std::vector<PointId> out;
  for (std::size_t i = 0; i < size; ++i) out.push_back(rng.below(n));
  return out;  // PointSet dedupes
}

enum class MapMode { Random, Biased, Singleton, Identity };

MultivaluedMap random_map(SplitMix64& rng, const MetricSpace& space,
                          MapMode mode, int max_image_size) {
  const std::size_t n = space.size();
  std::vector<PointSet> images;
  images.reserve(n);
  switch (mode) {
    case MapMode::Random:
      for (std::size_t x = 0; x < n; ++x)
        images.emplace_back(random_subset(
            rng, n, static_cast<std::size_t>(max_image_size)));
      break;
    case MapMode::Biased: {
      // Images drawn closer to x than x0 is, so F-contraction slack stays
      // positive and the theorem hypotheses trigger non-vacuously.
      const PointId x0 = rng.below(n);
      for (PointId x = 0; x < n; ++x) {
        std::vector<PointId> pool;
        for (PointId a = 0; a < n; ++a)
          if (space.distance(a, x) < space.distance(x, x0)) pool.push_back(a);
        if (pool.empty()) {
          images.emplace_back(std::vector<PointId>{x});
          continue;
        }
        std::vector<PointId> img;
        const std::size_t size = 1 + rng.below(std::min<std::size_t>(
                                         pool.size(),
                                         static_cast<std::size_t>(max_image_size)));
        for (std::size_t i = 0; i < size; ++i)
          img.push_back(pool[rng.below(pool.size())]);
        images.emplace_back(std::move(img));
      }
      break;
    }
    case MapMode::Singleton:
      for (std::size_t x = 0; x < n; ++x)
        images.emplace_back(std::vector<PointId>{rng.below(n)});
      break;
    case MapMode::Identity:
      for (PointId x = 0; x < n; ++x)
        images.emplace_back(std::vector<PointId>{x});
      break;
  }
  return MultivaluedMap(space, std::move(images));
}

std::string describe_point(const MetricSpace& space, PointId p) {
  return space.label(p);
}

// ---------------------------------------------------------------------
// Independent oracles. These re-derive results straight from the distance
// oracle and must not call the implementation paths they check.
// ---------------------------------------------------------------------

double naive_self_hausdorff(const MetricSpace& space, const MultivaluedMap& map,
                            PointId x) {
  double forward = 0.0;  // sup over image of distance to {x}
  double backward = std::numeric_limits<double>::infinity();
  for (PointId a : map.image(x).members()) {
    forward = std::max(forward, space.distance(a, x));
    backward = std::min(backward, space.distance(x, a));
  }
  return std::max(forward, backward);
}

struct NaiveRadius {
  double r = std::numeric_limits<double>::infinity();
  bool vacuous = true;
  std::vector<PointId> attaining;
};

NaiveRadius naive_radius(const MetricSpace& space, const MultivaluedMap& map) {
  NaiveRadius out;
  for (PointId x = 0; x < space.size(); ++x) {
    const double h = naive_self_hausdorff(space, map, x);
    if (h > 0.0 && h < out.r) {
      out.r = h;
      out.vacuous = false;
    }
  }
  if (!out.vacuous)
    for (PointId x = 0; x < space.size(); ++x)
      if (naive_self_hausdorff(space, map, x) == out.r) out.attaining.push_back(x);
  return out;
}

// Single-valued F_C reference: d(x,Tx)>0 => tau + F(d(x,Tx)) <= F(d(x0,x)).
struct SingleValuedVerdict {
  bool holds = true;
  bool vacuous = true;
  bool f_domain = false;
  double tau_max = std::numeric_limits<double>::infinity();
};

SingleValuedVerdict single_valued_reference(const MetricSpace& space,
                                            const std::vector<PointId>& image_of,
                                            const FFunction& f, double tau,
                                            PointId x0) {
  SingleValuedVerdict v;
  for (PointId x = 0; x < space.size(); ++x) {
    const double d = space.distance(x, image_of[x]);
    if (!(d > 0.0)) continue;
    v.vacuous = false;
    const double dx0 = space.distance(x0, x);
    if (!(dx0 > 0.0)) {
      v.holds = false;
      v.f_domain = true;
      continue;
    }
    const double slack = f(dx0) - f(d);
    v.tau_max = std::min(v.tau_max, slack);
    if (tau + f(d) > f(dx0)) v.holds = false;
  }
  if (!v.vacuous && std::isinf(v.tau_max)) v.tau_max = 0.0;
  return v;
}

bool same_tau(double a, double b) {
  if (std::isinf(a) || std::isinf(b)) return std::isinf(a) && std::isinf(b);
  return a == b;
}

bool verdicts_identical(const ContractionVerdict& a, const ContractionVerdict& b) {
  if (a.holds != b.holds || a.vacuous != b.vacuous) return false;
  if (!same_tau(a.tau_max, b.tau_max)) return false;
  if (a.attained_at != b.attained_at) return false;
  if (a.violations.size() != b.violations.size()) return false;
  for (std::size_t i = 0; i < a.violations.size(); ++i) {
    if (a.violations[i].point != b.violations[i].point) return false;
    if (a.violations[i].reason != b.violations[i].reason) return false;
  }
  return true;
}

// ---------------------------------------------------------------------
// Per-instance invariant checks
// ---------------------------------------------------------------------

void check_hausdorff_family(Battery& battery, int idx, SplitMix64& rng,
                            const MetricSpace& space, const MultivaluedMap& map) {
  std::vector<PointSet> pool;
  for (PointId x = 0; x < space.size(); ++x) pool.push_back(map.image(x));
  for (PointId x = 0; x < space.size(); ++x)
    pool.emplace_back(std::vector<PointId>{x});
  for (int i = 0; i < 4; ++i)
    pool.emplace_back(random_subset(rng, space.size(), 3));

  const std::size_t m = pool.size();
  std::vector<double> h(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      h[i * m + j] = hausdorff(space, pool[i], pool[j]);

  bool lemma_ok = true;
  std::string lemma_detail;
  for (std::size_t i = 0; i < m && lemma_ok; ++i)
    for (std::size_t j = 0; j < m && lemma_ok; ++j)
      for (PointId a : pool[i].members())
        if (point_set_distance(space, a, pool[j]) > h[i * m + j]) {
          lemma_ok = false;
          lemma_detail = "D(" + describe_point(space, a) + ",B) > H(A,B)";
          break;
        }
  battery.record("lemma1", lemma_ok, idx, lemma_detail);

  bool axioms_ok = true;
  std::string axiom_detail;
  for (std::size_t i = 0; i < m && axioms_ok; ++i) {
    for (std::size_t j = 0; j < m && axioms_ok; ++j) {
      if (h[i * m + j] != h[j * m + i]) {
        axioms_ok = false;
        axiom_detail = "H not symmetric";
      }
      const bool zero = h[i * m + j] == 0.0;
      if (zero != (pool[i] == pool[j])) {
        axioms_ok = false;
        axiom_detail = "H(A,B)=0 iff A=B violated";
      }
    }
  }
  for (std::size_t i = 0; i < m && axioms_ok; ++i)
    for (std::size_t j = 0; j < m && axioms_ok; ++j)
      for (std::size_t k = 0; k < m; ++k)
        if (h[i * m + k] > h[i * m + j] + h[j * m + k]) {
          axioms_ok = false;
          axiom_detail = "H triangle inequality violated";
          break;
        }
  battery.record("hausdorff-axioms", axioms_ok, idx, axiom_detail);
}

void check_circle_partition(Battery& battery, int idx, const MetricSpace& space) {
  bool ok = true;
  std::string detail;
  for (PointId x0 = 0; x0 < space.size() && ok; ++x0) {
    const std::vector<double> radii = center_radii(space, x0);
    std::size_t covered = 0;
    std::vector<PointId> union_members;
    for (double rho : radii) {
      const Circle c = circle_of(space, x0, rho);
      covered += c.members.size();
      union_members.insert(union_members.end(), c.members.begin(),
                           c.members.end());
    }
    std::sort(union_members.begin(), union_members.end());
    const bool unique_cover =
        std::adjacent_find(union_members.begin(), union_members.end()) ==
        union_members.end();
    if (covered != space.size() || !unique_cover) {
      ok = false;
      detail = "circles centered at " + describe_point(space, x0) +
               " do not partition the space";
      break;
    }
    const std::vector<PointId> disc = disc_of(space, x0, radii.back());
    if (disc.size() != space.size()) {
      ok = false;
      detail = "disc at max radius misses points";
    }
    // The disc is the union of the circles with rho <= its radius.
    const double mid = radii[radii.size() / 2];
    std::vector<PointId> circle_union;
    for (double rho : radii) {
      if (rho > mid) break;
      const Circle c = circle_of(space, x0, rho);
      circle_union.insert(circle_union.end(), c.members.begin(),
                          c.members.end());
    }
    std::sort(circle_union.begin(), circle_union.end());
    if (circle_union != disc_of(space, x0, mid)) {
      ok = false;
      detail = "disc differs from the union of its circles";
    }
  }
  battery.record("circle-partition", ok, idx, detail);
}

void check_contraction_calculus(Battery& battery, int idx,
                                const MetricSpace& space,
                                const MultivaluedMap& map,
                                std::vector<TheoremReport>& predicted) {
  const FFunction f_ln = FFunction::ln();
  const FFunction f_sqrt = FFunction::neg_inv_sqrt();
  const IntegralPhi phi_one = IntegralPhi::one();

  for (PointId x0 = 0; x0 < space.size(); ++x0) {
    const ContractionVerdict mt = max_tau_fc(space, map, f_ln, x0);
    const bool f_domain =
        std::any_of(mt.violations.begin(), mt.violations.end(),
                    [](const ContractionViolation& v) {
                      return v.reason == "F-domain";
                    });

    // Consistency: holds iff 0 < tau <= tau_max (and no F-domain point).
    {
      bool ok = true;
      std::string detail;
      auto expect = [&](double tau, bool want) {
        const bool got = check_fc(space, map, f_ln, tau, x0).holds;
        if (got != want) {
          ok = false;
          detail = "check_fc(tau=" + std::to_string(tau) + ") = " +
                   (got ? "holds" : "fails") + ", expected otherwise";
        }
      };
      if (mt.vacuous) {
        expect(1.0, true);
      } else if (!f_domain && mt.tau_max > 0.0) {
        expect(mt.tau_max / 2.0, true);
        expect(mt.tau_max, true);
        expect(std::nextafter(mt.tau_max, 4.0 * mt.tau_max + 1.0), false);
        expect(2.0 * mt.tau_max + 1.0, false);
      } else {
        expect(1.0, false);
        expect(1e-12, false);
      }
      battery.record("consistency", ok, idx, detail);
    }

    // fc => Ciric, by verdict and by slack ordering.
    {
      bool ok = true;
      std::string detail;
      const ContractionVerdict mc = max_tau_ciric(space, map, f_ln, x0);
      if (mt.vacuous != mc.vacuous) {
        ok = false;
        detail = "vacuousness differs between fc and ciric";
      }
      if (ok && !mt.vacuous && !f_domain && mt.tau_max > 0.0) {
        if (!check_ciric_fc(space, map, f_ln, mt.tau_max, x0).holds) {
          ok = false;
          detail = "fc holds at tau_max but ciric fails";
        }
        if (ok && !(mc.tau_max >= mt.tau_max ||
                    std::isinf(mc.tau_max))) {
          ok = false;
          detail = "ciric tau_max below fc tau_max";
        }
      }
      if (ok && check_fc(space, map, f_ln, 1.0, x0).holds &&
          !check_ciric_fc(space, map, f_ln, 1.0, x0).holds) {
        ok = false;
        detail = "fc holds at tau=1 but ciric fails";
      }
      battery.record("implication-fc-ciric", ok, idx, detail);
    }

    // phi = 1 reduces the integral classes to the plain ones, bit-exactly.
    {
      bool ok =
          verdicts_identical(mt, max_tau_integral_fc(space, map, f_ln, x0,
                                                     phi_one)) &&
          verdicts_identical(max_tau_ciric(space, map, f_ln, x0),
                             max_tau_integral_ciric(space, map, f_ln, x0,
                                                    phi_one)) &&
          verdicts_identical(check_fc(space, map, f_ln, 1.0, x0),
                             check_integral_fc(space, map, f_ln, 1.0, x0,
                                               phi_one));
      battery.record("reduction-phi-one", ok, idx,
                     "integral verdict differs from plain verdict at x0=" +
                         describe_point(space, x0));
    }

    // Contraction at x0 forces x0 into its own image, for all classes.
    {
      bool ok = true;
      std::string detail;
      for (ContractionClass cls :
           {ContractionClass::Fc, ContractionClass::IntegralFc,
            ContractionClass::CiricFc, ContractionClass::IntegralCiricFc}) {
        for (const FFunction* f : {&f_ln, &f_sqrt}) {
          const ContractionVerdict v =
              max_tau(space, map, cls, *f, x0, &phi_one);
          if (v.holds && !map.self_member(x0)) {
            ok = false;
            detail = std::string(contraction_class_name(cls)) +
                     " holds but x0 not in Tx0";
          }
        }
      }
      battery.record("center-membership", ok, idx, detail);
    }

    // Theorem: fc hypothesis certifies the circle at r, every inner
    // circle, the disc, and the center. Exact set computations.
    {
      const double tau =
          (!mt.vacuous && !f_domain && mt.tau_max > 0.0) ? mt.tau_max : 1.0;
      const TheoremReport report =
          verify_theorem(space, map, ContractionClass::Fc, f_ln, tau, x0);
      bool ok = true;
      std::string detail;
      if (report.hypothesis.holds && !report.certified) {
        ok = false;
        detail = "fc hypothesis holds but a conclusion failed at x0=" +
                 describe_point(space, x0);
      }
      battery.record("theorem1-fc", ok, idx, detail);
      if (report.hypothesis.holds) predicted.push_back(report);
    }

    // Theorem: Ciric hypothesis plus the side condition certify C_{x0,r}.
    {
      const ContractionVerdict mc = max_tau_ciric(space, map, f_ln, x0);
      const bool c_domain =
          std::any_of(mc.violations.begin(), mc.violations.end(),
                      [](const ContractionViolation& v) {
                        return v.reason == "F-domain";
                      });
      const double tau =
          (!mc.vacuous && !c_domain && mc.tau_max > 0.0) ? mc.tau_max : 1.0;
      const TheoremReport report = verify_theorem(
          space, map, ContractionClass::CiricFc, f_ln, tau, x0);
      bool side_ok = true;
      for (const auto& [name, pass] : report.hypothesis_checks)
        if (name == "D(Tx,x0)=r") side_ok = pass;
      bool ok = true;
      if (report.hypothesis.holds && side_ok && !report.degenerate &&
          !report.circle_at_r->fixed)
        ok = false;
      battery.record("theorem3-ciric", ok, idx,
                     "ciric hypothesis + side condition but circle not fixed");
      if (report.hypothesis.holds && side_ok) predicted.push_back(report);
    }
  }
}

void check_oracles(Battery& battery, int idx, const MetricSpace& space,
                   const MultivaluedMap& map,
                   const std::vector<TheoremReport>& predicted) {
  // compute_r against the naive double loop.
  {
    const RadiusResult got = compute_r(space, map);
    const NaiveRadius want = naive_radius(space, map);
    const bool ok = got.vacuous == want.vacuous &&
                    same_tau(got.r, want.r) && got.attaining == want.attaining;
    battery.record("oracle-r", ok, idx, "compute_r disagrees with naive loop");
  }

  // Every theorem-predicted nonempty fixed circle shows up in the
  // brute-force enumeration.
  {
    const std::vector<CircleVerdict> all = enumerate_fixed_circles(space, map);
    auto contains = [&](const CircleVerdict& c) {
      for (const auto& e : all)
        if (e.circle.center == c.circle.center &&
            e.circle.radius == c.circle.radius &&
            e.circle.members == c.circle.members)
          return true;
      return false;
    };
    bool ok = true;
    std::string detail;
    for (const TheoremReport& report : predicted) {
      std::vector<const CircleVerdict*> claimed;
      if (report.circle_at_r && report.circle_at_r->fixed &&
          !report.circle_at_r->vacuous)
        claimed.push_back(&*report.circle_at_r);
      for (const auto& c : report.inner_circles)
        if (c.fixed && !c.vacuous) claimed.push_back(&c);
      for (const CircleVerdict* c : claimed) {
        if (!contains(*c)) {
          ok = false;
          detail = "predicted fixed circle missing from enumeration (center " +
                   describe_point(space, c->circle.center) + ")";
          break;
        }
      }
      if (!ok) break;
    }
    battery.record("oracle-circles", ok, idx, detail);
  }
}

void check_single_valued(Battery& battery, int idx, const MetricSpace& space,
                         const MultivaluedMap& map) {
  if (!map.all_singletons()) return;
  std::vector<PointId> image_of(space.size());
  for (PointId x = 0; x < space.size(); ++x)
    image_of[x] = map.image(x).members().front();

  bool ok = true;
  std::string detail;
  for (PointId x = 0; x < space.size(); ++x) {
    if (displacement(space, map, x) != space.distance(x, image_of[x])) {
      ok = false;
      detail = "displacement differs from d(x,Tx) on a singleton map";
      break;
    }
  }
  const FFunction f_ln = FFunction::ln();
  for (PointId x0 = 0; x0 < space.size() && ok; ++x0) {
    const SingleValuedVerdict ref =
        single_valued_reference(space, image_of, f_ln, 1.0, x0);
    const ContractionVerdict got = check_fc(space, map, f_ln, 1.0, x0);
    const ContractionVerdict mt = max_tau_fc(space, map, f_ln, x0);
    if (got.holds != ref.holds) {
      ok = false;
      detail = "multivalued verdict disagrees with single-valued reference";
    }
    if (ok && !ref.f_domain && !same_tau(mt.tau_max, ref.tau_max)) {
      ok = false;
      detail = "tau_max disagrees with single-valued reference";
    }
  }
  battery.record("single-valued", ok, idx, detail);
}

void check_quadrature(Battery& battery, SplitMix64& rng) {
  bool ok = true;
  std::string detail;
  std::vector<double> ss = {0.1, 1.0, 3.0, 10.0, 100.0};
  for (int i = 0; i < 15; ++i)
    ss.push_back(static_cast<double>(rng.below(10000)) / 100.0);
  for (double s : ss) {
    const double one_err =
        std::abs(adaptive_simpson([](double) { return 1.0; }, 0.0, s, 1e-9) - s);
    const double lin_err = std::abs(
        adaptive_simpson([](double t) { return 2.0 * t; }, 0.0, s, 1e-9) -
        s * s);
    if (one_err > 1e-8 || lin_err > 1e-8) {
      ok = false;
      detail = "Simpson drifts from closed form at s=" + std::to_string(s);
      break;
    }
  }
  battery.record("quadrature", ok, 0, detail);
}

}  // namespace

bool CampaignResult::pass() const {
  return std::all_of(tallies.begin(), tallies.end(),
                     [](const InvariantTally& t) { return t.violated == 0; });
}

long long CampaignResult::total_checked() const {
  long long sum = 0;
  for (const auto& t : tallies) sum += t.checked;
  return sum;
}

long long CampaignResult::total_violated() const {
  long long sum = 0;
  for (const auto& t : tallies) sum += t.violated;
  return sum;
}

CampaignResult run_campaign(const CampaignConfig& config) {
  if (config.count < 1) throw ParameterError("campaign needs count >= 1");
  if (config.min_points < 1 || config.max_points < config.min_points)
    throw ParameterError("campaign size range is empty");

  Battery battery(config);
  SplitMix64 rng(config.seed);
  check_quadrature(battery, rng);

  for (int idx = 0; idx < config.count; ++idx) {
    const int n = config.min_points +
                  static_cast<int>(rng.below(static_cast<std::uint64_t>(
                      config.max_points - config.min_points + 1)));
    const MetricSpace space = random_space(rng, n);
    battery.record("metric-closure-valid", space.validate().pass, idx,
                   "repaired matrix fails the metric axioms");

    const MapMode mode = static_cast<MapMode>(idx % 4);
    const MultivaluedMap map =
        random_map(rng, space, mode, config.max_image_size);

    check_hausdorff_family(battery, idx, rng, space, map);
    check_circle_partition(battery, idx, space);

    std::vector<TheoremReport> predicted;
    check_contraction_calculus(battery, idx, space, map, predicted);
    check_oracles(battery, idx, space, map, predicted);
    check_single_valued(battery, idx, space, map);
  }
  return battery.finish(config.count);
}

}  // namespace fixcirc
