#include "fixcirc/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace fixcirc {

namespace {

using Json = nlohmann::ordered_json;

std::string fmt(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

// JSON has no infinity; the +inf sentinel serializes as null next to its
// vacuous flag.
Json json_number(double v) {
  if (std::isinf(v) || std::isnan(v)) return nullptr;
  return v;
}

Json circle_json(const MetricSpace& space, const CircleVerdict& v) {
  Json members = Json::array();
  for (PointId p : v.circle.members) members.push_back(space.label(p));
  return Json{{"center", space.label(v.circle.center)},
              {"radius", json_number(v.circle.radius)},
              {"fixed", v.fixed},
              {"vacuous", v.vacuous},
              {"members", std::move(members)}};
}

RunReport finish(Json doc, std::string text, bool positive) {
  RunReport r;
  r.json = doc.dump(2) + "\n";
  r.text = std::move(text);
  r.positive = positive;
  return r;
}

}  // namespace

RunReport report_check(const Instance& inst, const std::string& command,
                       const ContractionVerdict& verdict,
                       const std::string& f_name, double tau,
                       const std::string& x0_label) {
  Json violations = Json::array();
  for (const auto& v : verdict.violations)
    violations.push_back(Json{{"point", inst.space.label(v.point)},
                              {"H", json_number(v.displacement)},
                              {"bound", json_number(v.bound)},
                              {"reason", v.reason}});
  Json doc{{"instance", inst.name},
           {"command", command},
           {"class", contraction_class_name(verdict.cls)},
           {"f", f_name},
           {"tau", json_number(tau)},
           {"x0", x0_label},
           {"verdict", verdict.holds},
           {"tau_max", json_number(verdict.tau_max)},
           {"vacuous", verdict.vacuous},
           {"attained_at", verdict.attained_at
                               ? Json(inst.space.label(*verdict.attained_at))
                               : Json(nullptr)},
           {"violations", std::move(violations)}};

  std::ostringstream text;
  text << inst.name << " " << command << " class="
       << contraction_class_name(verdict.cls) << " F=" << f_name
       << " tau=" << fmt(tau) << " x0=" << x0_label << "\n"
       << "  verdict: " << (verdict.holds ? "holds" : "fails")
       << (verdict.vacuous ? " (vacuous: no displaced points)" : "") << "\n"
       << "  tau_max: " << fmt(verdict.tau_max);
  if (verdict.attained_at)
    text << " (attained at " << inst.space.label(*verdict.attained_at) << ")";
  text << "\n";
  for (const auto& v : verdict.violations)
    text << "  violation at " << inst.space.label(v.point) << ": H="
         << fmt(v.displacement) << " bound=" << fmt(v.bound) << " ["
         << v.reason << "]\n";
  return finish(std::move(doc), text.str(), verdict.holds);
}

RunReport report_radius(const Instance& inst, const RadiusResult& radius) {
  Json attaining = Json::array();
  for (PointId p : radius.attaining) attaining.push_back(inst.space.label(p));
  Json doc{{"instance", inst.name},
           {"command", "radius"},
           {"verdict", !radius.vacuous},
           {"r", json_number(radius.r)},
           {"vacuous", radius.vacuous},
           {"attaining", std::move(attaining)}};

  std::ostringstream text;
  text << inst.name << " radius\n  r = " << fmt(radius.r);
  if (radius.vacuous) text << " (vacuous: no displaced points)";
  if (!radius.attaining.empty()) {
    text << "\n  attained at:";
    for (PointId p : radius.attaining) text << " " << inst.space.label(p);
  }
  text << "\n";
  return finish(std::move(doc), text.str(), !radius.vacuous);
}

RunReport report_circles(const Instance& inst,
                         const std::vector<CircleVerdict>& circles) {
  Json arr = Json::array();
  for (const auto& c : circles) arr.push_back(circle_json(inst.space, c));
  Json doc{{"instance", inst.name},
           {"command", "circles"},
           {"verdict", !circles.empty()},
           {"circles", std::move(arr)}};

  std::ostringstream text;
  text << inst.name << " circles: " << circles.size() << " fixed\n";
  for (const auto& c : circles) {
    text << "  C(" << inst.space.label(c.circle.center) << ", "
         << fmt(c.circle.radius) << ") = {";
    for (std::size_t i = 0; i < c.circle.members.size(); ++i)
      text << (i ? ", " : "") << inst.space.label(c.circle.members[i]);
    text << "}\n";
  }
  return finish(std::move(doc), text.str(), !circles.empty());
}

RunReport report_theorem(const Instance& inst, const TheoremReport& theorem,
                         const std::string& f_name, double tau) {
  Json checks = Json::object();
  for (const auto& [name, pass] : theorem.hypothesis_checks) checks[name] = pass;

  Json circles = Json::array();
  if (theorem.circle_at_r)
    circles.push_back(circle_json(inst.space, *theorem.circle_at_r));
  for (const auto& c : theorem.inner_circles)
    circles.push_back(circle_json(inst.space, c));

  Json disc_members = Json::array();
  for (PointId p : theorem.disc_members)
    disc_members.push_back(inst.space.label(p));

  Json doc{{"instance", inst.name},
           {"command", "theorem"},
           {"class", contraction_class_name(theorem.cls)},
           {"f", f_name},
           {"tau", json_number(tau)},
           {"x0", inst.space.label(theorem.x0)},
           {"verdict", theorem.certified},
           {"tau_max", json_number(theorem.hypothesis.tau_max)},
           {"r", json_number(theorem.radius.r)},
           {"degenerate", theorem.degenerate},
           {"hypothesis_checks", std::move(checks)},
           {"circles", std::move(circles)},
           {"disc", Json{{"radius", json_number(theorem.radius.r)},
                         {"fixed", theorem.disc_fixed},
                         {"members", std::move(disc_members)}}},
           {"center_in_image", theorem.center_in_image},
           {"notes", theorem.notes}};

  std::ostringstream text;
  text << inst.name << " theorem class="
       << contraction_class_name(theorem.cls) << " F=" << f_name
       << " tau=" << fmt(tau) << " x0=" << inst.space.label(theorem.x0) << "\n";
  for (const auto& [name, pass] : theorem.hypothesis_checks)
    text << "  hypothesis " << name << ": " << (pass ? "pass" : "fail") << "\n";
  text << "  r = " << fmt(theorem.radius.r) << "\n";
  if (theorem.circle_at_r) {
    text << "  C(x0, r): "
         << (theorem.circle_at_r->vacuous
                 ? "empty (vacuously fixed)"
                 : (theorem.circle_at_r->fixed ? "fixed" : "NOT fixed"))
         << "\n";
  }
  text << "  inner circles fixed: ";
  bool all_inner = true;
  for (const auto& c : theorem.inner_circles) all_inner = all_inner && c.fixed;
  text << (all_inner ? "yes" : "no") << " (" << theorem.inner_circles.size()
       << " checked)\n";
  text << "  disc fixed: " << (theorem.disc_fixed ? "yes" : "no") << "\n";
  text << "  x0 in Tx0: " << (theorem.center_in_image ? "yes" : "no") << "\n";
  text << "  " << (theorem.certified ? "theorem-certified" : "not certified");
  if (!theorem.hypothesis.holds) text << " (empirical only)";
  text << "\n";
  for (const auto& note : theorem.notes) text << "  note: " << note << "\n";
  return finish(std::move(doc), text.str(), theorem.certified);
}

RunReport report_search(const Instance& inst,
                        const std::vector<WitnessEntry>& witnesses) {
  Json arr = Json::array();
  for (const auto& w : witnesses)
    arr.push_back(Json{{"class", contraction_class_name(w.cls)},
                       {"f", w.f_name},
                       {"x0", inst.space.label(w.x0)},
                       {"tau_max", json_number(w.tau_max)},
                       {"vacuous", w.vacuous}});
  Json doc{{"instance", inst.name},
           {"command", "search"},
           {"verdict", !witnesses.empty()},
           {"witnesses", std::move(arr)}};

  std::ostringstream text;
  text << inst.name << " search: " << witnesses.size() << " witnesses\n";
  for (const auto& w : witnesses)
    text << "  " << contraction_class_name(w.cls) << " F=" << w.f_name
         << " x0=" << inst.space.label(w.x0) << " tau_max=" << fmt(w.tau_max)
         << (w.vacuous ? " (vacuous)" : "") << "\n";
  return finish(std::move(doc), text.str(), !witnesses.empty());
}

RunReport report_campaign(const CampaignResult& result) {
  Json tallies = Json::array();
  for (const auto& t : result.tallies)
    tallies.push_back(
        Json{{"name", t.name}, {"checked", t.checked}, {"violated", t.violated}});
  Json doc{{"instance", "random"},
           {"command", "campaign"},
           {"seed", result.config.seed},
           {"count", result.config.count},
           {"sizes", Json::array({result.config.min_points,
                                  result.config.max_points})},
           {"verdict", result.pass()},
           {"instances", result.instances},
           {"invariants", std::move(tallies)},
           {"failures", result.failures}};

  std::ostringstream text;
  text << "campaign seed=" << result.config.seed
       << " count=" << result.config.count << " sizes=["
       << result.config.min_points << "," << result.config.max_points << "]\n";
  for (const auto& t : result.tallies)
    text << "  " << t.name << ": " << t.checked << " checked, " << t.violated
         << " violated\n";
  for (const auto& f : result.failures) text << "  FAIL " << f << "\n";
  text << (result.pass() ? "  all invariants hold\n" : "  INVARIANTS VIOLATED\n");
  return finish(std::move(doc), text.str(), result.pass());
}

RunReport report_example(int which) {
  struct Item {
    std::string name;
    std::string expected;
    std::string got;
    bool pass;
  };
  std::vector<Item> items;
  auto add = [&](std::string name, std::string expected, std::string got,
                 bool pass) {
    items.push_back({std::move(name), std::move(expected), std::move(got), pass});
  };

  const double ln43 = std::log(4.0 / 3.0);
  if (which == 1) {
    const Instance inst = builtin_instance("example1");
    const FFunction f = FFunction::ln();
    const PointId x0 = inst.space.require("-1");
    const ContractionVerdict fc = check_fc(inst.space, inst.map, f, 0.1, x0);
    add("fc contraction at x0=-1", "fails, tau_max=0",
        std::string(fc.holds ? "holds" : "fails") +
            ", tau_max=" + fmt(fc.tau_max),
        !fc.holds && std::abs(fc.tau_max) <= 1e-12);
    const ContractionVerdict ci =
        check_ciric_fc(inst.space, inst.map, f, 0.1, x0);
    add("ciric contraction at x0=-1", "fails, tau_max=0",
        std::string(ci.holds ? "holds" : "fails") +
            ", tau_max=" + fmt(ci.tau_max),
        !ci.holds && std::abs(ci.tau_max) <= 1e-12);
    const CircleVerdict circ = verify_fixed_circle(inst.space, inst.map, x0, 1.0);
    std::string members;
    for (PointId p : circ.circle.members)
      members += (members.empty() ? "" : ",") + inst.space.label(p);
    add("circle C(-1,1)", "fixed, members -2,0",
        std::string(circ.fixed ? "fixed" : "not fixed") + ", members " + members,
        circ.fixed && members == "-2,0");
  } else if (which == 2) {
    const Instance inst = builtin_instance("example2");
    const FFunction f = FFunction::ln();
    const PointId x0 = inst.space.require("0");
    const RadiusResult radius = compute_r(inst.space, inst.map);
    add("radius", "r=3", "r=" + fmt(radius.r), radius.r == 3.0);
    const ContractionVerdict fc = check_fc(inst.space, inst.map, f, ln43, x0);
    add("fc contraction at x0=0", "holds, tau_max=ln(4/3)",
        std::string(fc.holds ? "holds" : "fails") +
            ", tau_max=" + fmt(fc.tau_max),
        fc.holds && std::abs(fc.tau_max - ln43) <= 1e-12);
    const TheoremReport theorem = verify_theorem(
        inst.space, inst.map, ContractionClass::Fc, f, ln43, x0);
    add("theorem", "certified: C(0,3) and D(0,3) fixed",
        theorem.certified ? "certified" : "not certified",
        theorem.certified && theorem.circle_at_r && theorem.circle_at_r->fixed &&
            theorem.disc_fixed);
  } else if (which == 3) {
    const Instance inst = builtin_instance("example3");
    const FFunction f = FFunction::ln();
    const PointId x0 = inst.space.require("0");
    const ContractionVerdict ci =
        check_ciric_fc(inst.space, inst.map, f, ln43, x0);
    add("ciric contraction at x0=0", "holds",
        ci.holds ? "holds" : "fails", ci.holds);
    const double m = ciric_M(inst.space, inst.map, inst.space.require("4"), x0);
    add("M(4,0)", "4.5", fmt(m), std::abs(m - 4.5) <= 1e-12);
    const TheoremReport theorem = verify_theorem(
        inst.space, inst.map, ContractionClass::CiricFc, f, ln43, x0);
    add("theorem", "certified: C(0,3) fixed",
        theorem.certified ? "certified" : "not certified", theorem.certified);
  } else {
    throw ParameterError("example id must be 1, 2 or 3");
  }

  bool all = true;
  Json arr = Json::array();
  std::ostringstream text;
  text << "example " << which << " reproduction\n";
  for (const auto& item : items) {
    all = all && item.pass;
    arr.push_back(Json{{"check", item.name},
                       {"expected", item.expected},
                       {"got", item.got},
                       {"pass", item.pass}});
    text << "  " << (item.pass ? "PASS" : "FAIL") << " " << item.name
         << ": expected " << item.expected << ", got " << item.got << "\n";
  }
  Json doc{{"instance", "example" + std::to_string(which)},
           {"command", "example"},
           {"verdict", all},
           {"checks", std::move(arr)}};
  return finish(std::move(doc), text.str(), all);
}

}  // namespace fixcirc
