// Acceptance suite: runs every criterion end to end against the real CLI
// binary and the library, printing one PASS/FAIL line per criterion.
// Nonzero exit if anything fails.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "fixcirc/circle_engine.hpp"
#include "fixcirc/contractions.hpp"
#include "fixcirc/instance.hpp"
#include "fixcirc/quadrature.hpp"
#include "fixcirc/wardowski.hpp"

#ifndef FIXCIRC_CLI_PATH
#error "FIXCIRC_CLI_PATH must point at the fixcirc binary"
#endif

using Json = nlohmann::ordered_json;

namespace {

struct CliRun {
  int exit_code = -1;
  std::string output;
  double seconds = 0.0;
};

CliRun run_cli(const std::string& args) {
  const std::string command = std::string("\"") + FIXCIRC_CLI_PATH + "\" " +
                              args + " 2>/dev/null";
  const auto start = std::chrono::steady_clock::now();
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return {};
  CliRun run;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof(buf), pipe))
    run.output.append(buf, n);
  const int status = pclose(pipe);
  run.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  run.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return run;
}

int failures = 0;

void criterion(int number, const std::string& name, bool pass,
               const std::string& detail = "") {
  std::cout << (pass ? "PASS" : "FAIL") << " criterion " << number << ": "
            << name;
  if (!pass && !detail.empty()) std::cout << " -- " << detail;
  std::cout << "\n";
  if (!pass) ++failures;
}

const double kLn43 = std::log(4.0 / 3.0);

void criterion1_example2() {
  bool pass = true;
  std::string detail;

  const CliRun radius = run_cli("radius example2 --format json");
  if (radius.exit_code != 0 ||
      Json::parse(radius.output)["r"].get<double>() != 3.0) {
    pass = false;
    detail = "radius did not report r = 3 exactly";
  }

  const CliRun check = run_cli(
      "check example2 --class fc --f ln --tau 0.2876820724 --x0 0 "
      "--format json");
  if (pass) {
    const Json doc = Json::parse(check.output);
    if (check.exit_code != 0 || doc["verdict"] != true ||
        std::abs(doc["tau_max"].get<double>() - kLn43) > 1e-12) {
      pass = false;
      detail = "check did not hold with tau_max = ln(4/3)";
    }
  }

  const CliRun theorem = run_cli(
      "theorem example2 --class fc --f ln --tau 0.2876820724 --x0 0 "
      "--format json");
  if (pass) {
    const Json doc = Json::parse(theorem.output);
    bool circle_ok = false;
    for (const auto& c : doc["circles"])
      if (c["center"] == "0" &&
          std::abs(c["radius"].get<double>() - 3.0) <= 1e-9 &&
          c["fixed"] == true)
        circle_ok = true;
    if (theorem.exit_code != 0 || doc["verdict"] != true || !circle_ok ||
        doc["disc"]["fixed"] != true) {
      pass = false;
      detail = "theorem did not certify C(0,3) and D(0,3)";
    }
  }

  if (pass && (radius.seconds >= 1.0 || check.seconds >= 1.0 ||
               theorem.seconds >= 1.0)) {
    pass = false;
    detail = "a command exceeded the 1 s budget";
  }
  criterion(1, "example2: r=3, fc holds at ln(4/3), C(0,3)+D(0,3) certified",
            pass, detail);
}

void criterion2_example1() {
  bool pass = true;
  std::string detail;
  double worst_seconds = 0.0;

  for (const char* cls : {"fc", "ciric-fc"}) {
    for (const char* tau : {"0.000001", "0.1", "5.0"}) {
      std::ostringstream args;
      args << "check example1 --class " << cls << " --f ln --tau " << tau
           << " --x0=-1 --format json";
      const CliRun run = run_cli(args.str());
      worst_seconds = std::max(worst_seconds, run.seconds);
      const Json doc = Json::parse(run.output);
      if (run.exit_code != 1 || doc["verdict"] != false ||
          std::abs(doc["tau_max"].get<double>()) > 1e-12) {
        pass = false;
        detail = std::string("class ") + cls + " tau " + tau +
                 " did not fail with tau_max = 0";
      }
    }
  }

  const CliRun circles = run_cli("circles example1 --format json");
  worst_seconds = std::max(worst_seconds, circles.seconds);
  if (pass) {
    bool found = false;
    const Json doc = Json::parse(circles.output);
    for (const auto& c : doc["circles"]) {
      if (c["center"] == "-1" &&
          std::abs(c["radius"].get<double>() - 1.0) <= 1e-9 &&
          c["fixed"] == true && c["members"] == Json::array({"-2", "0"}))
        found = true;
    }
    if (circles.exit_code != 0 || !found) {
      pass = false;
      detail = "circles did not list C(-1,1) = {-2, 0} as fixed (exit " +
               std::to_string(circles.exit_code) + ", " +
               std::to_string(circles.output.size()) + " bytes)";
    }
  }

  if (pass && worst_seconds >= 1.0) {
    pass = false;
    detail = "a command exceeded the 1 s budget";
  }
  criterion(2, "example1: contraction checks fail at tau_max=0, C(-1,1) fixed",
            pass, detail);
}

void criterion3_example3() {
  bool pass = true;
  std::string detail;

  const CliRun check = run_cli(
      "check example2 --class ciric-fc --f ln --tau 0.2876820724 --x0 0 "
      "--format json");
  if (check.exit_code != 0 || Json::parse(check.output)["verdict"] != true) {
    pass = false;
    detail = "ciric check did not pass with (ln, ln 4/3, 0)";
  }

  const fixcirc::Instance inst = fixcirc::builtin_instance("example2");
  const double m = fixcirc::ciric_M(inst.space, inst.map,
                                    inst.space.require("4"),
                                    inst.space.require("0"));
  if (std::abs(m - 4.5) > 1e-12) {
    pass = false;
    detail = "M(4,0) != 4.5";
  }
  criterion(3, "example3: ciric class passes and M(4,0) = 4.5", pass, detail);
}

Json campaign_doc;  // shared between criteria 4 and 5

void criterion4_campaign() {
  const CliRun run = run_cli("campaign --seed 1 --count 500 --format json");
  bool pass = run.exit_code == 0;
  std::string detail;
  if (pass) {
    campaign_doc = Json::parse(run.output);
    pass = campaign_doc["verdict"] == true &&
           campaign_doc["instances"] == 500;
    const std::vector<std::string> required = {
        "lemma1", "hausdorff-axioms", "theorem1-fc", "implication-fc-ciric",
        "reduction-phi-one", "center-membership", "consistency"};
    for (const auto& name : required) {
      bool seen = false;
      for (const auto& t : campaign_doc["invariants"])
        if (t["name"] == name) {
          seen = true;
          if (t["violated"].get<long long>() != 0 ||
              t["checked"].get<long long>() <= 0)
            pass = false;
        }
      if (!seen) pass = false;
    }
    if (!pass) detail = "campaign reported violations or missing invariants";
  } else {
    detail = "campaign exited nonzero";
  }
  if (pass && run.seconds >= 30.0) {
    pass = false;
    detail = "campaign exceeded the 30 s budget";
  }
  criterion(4, "campaign seed=1 count=500 finds zero violations", pass, detail);
}

void criterion5_oracles() {
  bool pass = !campaign_doc.is_null();
  std::string detail = "campaign output unavailable";
  if (pass) {
    bool r_ok = false, circles_ok = false;
    for (const auto& t : campaign_doc["invariants"]) {
      if (t["name"] == "oracle-r")
        r_ok = t["checked"].get<long long>() == 500 &&
               t["violated"].get<long long>() == 0;
      if (t["name"] == "oracle-circles")
        circles_ok = t["checked"].get<long long>() == 500 &&
                     t["violated"].get<long long>() == 0;
    }
    pass = r_ok && circles_ok;
    detail = "oracle tallies incomplete or violated";
  }
  criterion(5, "oracle equivalence on every campaign instance", pass, detail);
}

void criterion6_quadrature() {
  bool pass = true;
  std::string detail;
  for (double s : {0.1, 1.0, 3.0, 10.0, 100.0}) {
    const double one_err = std::abs(
        fixcirc::adaptive_simpson([](double) { return 1.0; }, 0.0, s, 1e-9) - s);
    const double lin_err = std::abs(
        fixcirc::adaptive_simpson([](double t) { return 2.0 * t; }, 0.0, s,
                                  1e-9) -
        s * s);
    if (one_err > 1e-8 || lin_err > 1e-8) {
      pass = false;
      detail = "Simpson error above 1e-8 at s = " + std::to_string(s);
    }
  }

  // phi = one: integral-class verdicts equal the plain class bit-exactly.
  const fixcirc::Instance ex2 = fixcirc::builtin_instance("example2");
  const fixcirc::Instance tri = fixcirc::parse_instance_text(
      R"({"kind": "matrix", "points": ["a","b","c"],
          "distances": [0, 1, 2, 1, 0, 2, 2, 2, 0],
          "map": {"a": ["a"], "b": ["c"], "c": ["c"]}})",
      "triangle");
  const fixcirc::IntegralPhi one = fixcirc::IntegralPhi::one();
  const fixcirc::FFunction ln = fixcirc::FFunction::ln();
  auto bit_equal = [](const fixcirc::ContractionVerdict& a,
                      const fixcirc::ContractionVerdict& b) {
    const bool tau_equal = (std::isinf(a.tau_max) && std::isinf(b.tau_max)) ||
                           a.tau_max == b.tau_max;
    return a.holds == b.holds && tau_equal;
  };
  for (const fixcirc::Instance* inst : {&ex2, &tri}) {
    for (fixcirc::PointId x0 = 0; x0 < inst->space.size(); x0 += 7) {
      if (!bit_equal(fixcirc::max_tau_fc(inst->space, inst->map, ln, x0),
                     fixcirc::max_tau_integral_fc(inst->space, inst->map, ln,
                                                  x0, one)) ||
          !bit_equal(fixcirc::max_tau_ciric(inst->space, inst->map, ln, x0),
                     fixcirc::max_tau_integral_ciric(inst->space, inst->map,
                                                     ln, x0, one))) {
        pass = false;
        detail = "phi=one verdict differs from the plain class";
      }
    }
  }
  criterion(6, "quadrature within 1e-8 and phi=one reduction bit-exact", pass,
            detail);
}

// Not a numbered criterion: pins the CLI exit-code contract
// (0 positive, 1 negative, 2 usage/schema, 3 metric-axiom).
void exit_code_contract() {
  bool pass = true;
  std::string detail;
  auto expect_exit = [&](const std::string& args, int want) {
    const CliRun run = run_cli(args);
    if (run.exit_code != want) {
      pass = false;
      detail = "`" + args + "` exited " + std::to_string(run.exit_code) +
               ", expected " + std::to_string(want);
    }
  };

  const std::string dir = "/tmp/fixcirc-acceptance";
  std::system(("mkdir -p " + dir).c_str());
  auto write_file = [&](const std::string& name, const std::string& body) {
    FILE* f = fopen((dir + "/" + name).c_str(), "w");
    fwrite(body.data(), 1, body.size(), f);
    fclose(f);
  };
  write_file("asym.json",
             R"({"kind":"matrix","points":["a","b"],"distances":[0,1,2,0],
                 "map":{"a":["a"],"b":["b"]}})");
  write_file("triangle_violation.json",
             R"({"kind":"matrix","points":["a","b","c"],
                 "distances":[0,5,1,5,0,1,1,1,0],
                 "map":{"a":["a"],"b":["b"],"c":["c"]}})");
  write_file("identity.json",
             R"({"kind":"matrix","points":["a"],"distances":[0],
                 "map":{"a":["a"]}})");

  expect_exit("radius example2", 0);
  expect_exit("check example1 --class fc --f ln --tau 0.1 --x0=-1", 1);
  expect_exit("radius " + dir + "/identity.json", 1);  // vacuous
  expect_exit("radius " + dir + "/asym.json", 2);
  expect_exit("radius " + dir + "/triangle_violation.json", 3);
  expect_exit("check example2 --class bogus --f ln --tau 1 --x0 0", 2);
  expect_exit("check example2 --class fc --f exp --tau 1 --x0 0", 2);
  expect_exit("check example2 --class fc --f ln --tau 0 --x0 0", 2);
  expect_exit("campaign --count 0", 2);
  expect_exit("circles " + dir + "/identity.json", 0);
  expect_exit("example 9", 2);

  std::cout << (pass ? "PASS" : "FAIL") << " exit-code contract";
  if (!pass) std::cout << " -- " << detail;
  std::cout << "\n";
  if (!pass) ++failures;
}

void criterion7_f_validation() {
  bool pass = true;
  std::string detail;
  for (const auto& name : fixcirc::FFunction::builtin_names()) {
    const auto report = fixcirc::validate_F(*fixcirc::FFunction::by_name(name));
    if (!report.pass) {
      pass = false;
      detail = "builtin " + name + " failed (F1)-(F3) probes";
    }
  }
  const auto decreasing = fixcirc::validate_F(
      fixcirc::FFunction::custom({1.0, 2.0}, {2.0, 1.0}));
  if (decreasing.f1 || decreasing.pass) {
    pass = false;
    detail = "decreasing sampled grid was not rejected";
  }
  criterion(7, "F-family validation: built-ins pass, decreasing grid rejected",
            pass, detail);
}

}  // namespace

int main() {
  criterion1_example2();
  criterion2_example1();
  criterion3_example3();
  criterion4_campaign();
  criterion5_oracles();
  criterion6_quadrature();
  criterion7_f_validation();
  exit_code_contract();

  if (failures == 0) {
    std::cout << "ACCEPTANCE: all criteria pass\n";
    return 0;
  }
  std::cout << "ACCEPTANCE: " << failures << " criteria failed\n";
  return 1;
}
