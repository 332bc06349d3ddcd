// Command-line front end: loads instances (files or builtins), runs the
// contraction / radius / circle verifiers, and emits deterministic text
// or JSON reports.
//
// Exit codes: 0 verdict-positive, 1 verdict-negative, 2 usage or schema
// error, 3 metric-axiom failure.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fixcirc/campaign.hpp"
#include "fixcirc/circle_engine.hpp"
#include "fixcirc/contractions.hpp"
#include "fixcirc/instance.hpp"
#include "fixcirc/report.hpp"

namespace {

constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitMetricAxiom = 3;

struct CommonArgs {
  std::string instance;
  std::string cls = "fc";
  std::string f_name = "ln";
  double tau = 0.0;
  std::string x0;
  std::string phi = "one";
  std::string format = "text";
};

fixcirc::IntegralPhi parse_phi(const std::string& text) {
  if (text == "one") return fixcirc::IntegralPhi::one();
  if (text.rfind("linear:", 0) == 0) {
    const std::string slope_text = text.substr(7);
    try {
      std::size_t used = 0;
      const double slope = std::stod(slope_text, &used);
      if (used != slope_text.size()) throw std::invalid_argument(slope_text);
      return fixcirc::IntegralPhi::linear(slope);
    } catch (const std::invalid_argument&) {
      throw fixcirc::ParameterError("bad --phi slope: " + slope_text);
    }
  }
  throw fixcirc::ParameterError("unknown --phi '" + text +
                                "' (expected one|linear:<slope>)");
}

void emit(const fixcirc::RunReport& report, const std::string& format) {
  std::cout << (format == "json" ? report.json : report.text);
}

int run_check_like(const CommonArgs& args, bool theorem_mode) {
  const auto cls = fixcirc::contraction_class_by_name(args.cls);
  if (!cls) throw fixcirc::ParameterError("unknown --class '" + args.cls + "'");
  const auto f = fixcirc::FFunction::by_name(args.f_name);
  if (!f) throw fixcirc::ParameterError("unknown --f '" + args.f_name + "'");
  if (!(args.tau > 0.0))
    throw fixcirc::ParameterError("--tau must be positive");

  const fixcirc::Instance inst = fixcirc::load_instance(args.instance);
  const fixcirc::PointId x0 = inst.space.require(args.x0);
  const fixcirc::IntegralPhi phi = parse_phi(args.phi);

  fixcirc::RunReport report;
  if (theorem_mode) {
    const fixcirc::TheoremReport result = fixcirc::verify_theorem(
        inst.space, inst.map, *cls, *f, args.tau, x0, &phi);
    report = fixcirc::report_theorem(inst, result, args.f_name, args.tau);
  } else {
    const fixcirc::ContractionVerdict verdict = fixcirc::check_contraction(
        inst.space, inst.map, *cls, *f, args.tau, x0, &phi);
    report = fixcirc::report_check(inst, "check", verdict, args.f_name,
                                   args.tau, args.x0);
  }
  emit(report, args.format);
  return report.positive ? 0 : kExitNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fixed circles of multivalued maps on finite metric spaces"};
  app.require_subcommand(1);

  CommonArgs check_args, theorem_args;
  std::string search_instance, radius_instance, circles_instance;
  std::vector<std::string> search_fs;
  std::string search_format = "text", radius_format = "text",
              circles_format = "text", campaign_format = "text",
              example_format = "text";
  std::uint64_t seed = 1;
  int count = 500;
  int example_id = 0;

  auto* check = app.add_subcommand("check", "decide one contraction class");
  check->add_option("instance", check_args.instance, "file or builtin name")
      ->required();
  check->add_option("--class", check_args.cls,
                    "fc|integral-fc|ciric-fc|integral-ciric-fc");
  check->add_option("--f", check_args.f_name, "ln|ln+id|-1/sqrt|ln-quad");
  check->add_option("--tau", check_args.tau, "contraction margin (> 0)")
      ->required();
  check->add_option("--x0", check_args.x0, "center point label")->required();
  check->add_option("--phi", check_args.phi, "one|linear:<slope>");
  check->add_option("--format", check_args.format, "text|json");

  auto* search = app.add_subcommand("search", "sweep (class, F, x0) witnesses");
  search->add_option("instance", search_instance)->required();
  search->add_option("--f", search_fs, "F names to try (default: all builtin)");
  search->add_option("--format", search_format, "text|json");

  auto* radius = app.add_subcommand("radius", "critical radius r");
  radius->add_option("instance", radius_instance)->required();
  radius->add_option("--format", radius_format, "text|json");

  auto* circles = app.add_subcommand("circles", "enumerate all fixed circles");
  circles->add_option("instance", circles_instance)->required();
  circles->add_option("--format", circles_format, "text|json");

  auto* theorem =
      app.add_subcommand("theorem", "run a fixed-circle theorem end to end");
  theorem->add_option("instance", theorem_args.instance)->required();
  theorem->add_option("--class", theorem_args.cls,
                      "fc|integral-fc|ciric-fc|integral-ciric-fc");
  theorem->add_option("--f", theorem_args.f_name, "ln|ln+id|-1/sqrt|ln-quad");
  theorem->add_option("--tau", theorem_args.tau, "contraction margin (> 0)")
      ->required();
  theorem->add_option("--x0", theorem_args.x0, "center point label")->required();
  theorem->add_option("--phi", theorem_args.phi, "one|linear:<slope>");
  theorem->add_option("--format", theorem_args.format, "text|json");

  auto* campaign =
      app.add_subcommand("campaign", "randomized theorem-property campaign");
  campaign->add_option("--seed", seed, "generator seed");
  campaign->add_option("--count", count, "number of random instances");
  campaign->add_option("--format", campaign_format, "text|json");

  auto* example = app.add_subcommand("example", "reproduce a worked example");
  example->add_option("id", example_id, "1, 2 or 3")->required();
  example->add_option("--format", example_format, "text|json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (check->parsed()) return run_check_like(check_args, false);
    if (theorem->parsed()) return run_check_like(theorem_args, true);

    if (radius->parsed()) {
      const fixcirc::Instance inst = fixcirc::load_instance(radius_instance);
      const fixcirc::RunReport report =
          fixcirc::report_radius(inst, fixcirc::compute_r(inst.space, inst.map));
      emit(report, radius_format);
      return report.positive ? 0 : kExitNegative;
    }

    if (circles->parsed()) {
      const fixcirc::Instance inst = fixcirc::load_instance(circles_instance);
      const std::vector<double>* radii =
          inst.has_radii() ? &inst.circle_radii : nullptr;
      const fixcirc::RunReport report = fixcirc::report_circles(
          inst, fixcirc::enumerate_fixed_circles(inst.space, inst.map, radii));
      emit(report, circles_format);
      return report.positive ? 0 : kExitNegative;
    }

    if (search->parsed()) {
      const fixcirc::Instance inst = fixcirc::load_instance(search_instance);
      std::vector<fixcirc::FFunction> fs;
      const auto& names = search_fs.empty()
                              ? fixcirc::FFunction::builtin_names()
                              : search_fs;
      for (const auto& name : names) {
        const auto f = fixcirc::FFunction::by_name(name);
        if (!f) throw fixcirc::ParameterError("unknown --f '" + name + "'");
        fs.push_back(*f);
      }
      std::vector<fixcirc::PointId> candidates(inst.space.size());
      for (fixcirc::PointId i = 0; i < inst.space.size(); ++i) candidates[i] = i;
      const fixcirc::RunReport report = fixcirc::report_search(
          inst, fixcirc::search_witness(inst.space, inst.map, fs, candidates));
      emit(report, search_format);
      return report.positive ? 0 : kExitNegative;
    }

    if (campaign->parsed()) {
      fixcirc::CampaignConfig config;
      config.seed = seed;
      config.count = count;
      const fixcirc::RunReport report =
          fixcirc::report_campaign(fixcirc::run_campaign(config));
      emit(report, campaign_format);
      return report.positive ? 0 : kExitNegative;
    }

    if (example->parsed()) {
      const fixcirc::RunReport report = fixcirc::report_example(example_id);
      emit(report, example_format);
      return report.positive ? 0 : kExitNegative;
    }
  } catch (const fixcirc::MetricAxiomError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMetricAxiom;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
