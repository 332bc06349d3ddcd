#pragma once

#include <string>
#include <vector>

#include "fixcirc/campaign.hpp"
#include "fixcirc/circle_engine.hpp"
#include "fixcirc/contractions.hpp"
#include "fixcirc/instance.hpp"

namespace fixcirc {

/// Rendered command outcome. `positive` drives the CLI exit code
/// (0 verdict-positive, 1 verdict-negative); renderings are
/// deterministic for identical inputs.
struct RunReport {
  std::string json;  // machine-readable document, one trailing newline
  std::string text;  // human-readable rendering
  bool positive = false;
};

RunReport report_check(const Instance& inst, const std::string& command,
                       const ContractionVerdict& verdict,
                       const std::string& f_name, double tau,
                       const std::string& x0_label);

RunReport report_radius(const Instance& inst, const RadiusResult& radius);

RunReport report_circles(const Instance& inst,
                         const std::vector<CircleVerdict>& circles);

RunReport report_theorem(const Instance& inst, const TheoremReport& theorem,
                         const std::string& f_name, double tau);

RunReport report_search(const Instance& inst,
                        const std::vector<WitnessEntry>& witnesses);

RunReport report_campaign(const CampaignResult& result);

/// Canned reproduction of one worked example (1, 2 or 3): runs the
/// relevant commands on the builtin instance and compares against the
/// expected verdicts.
RunReport report_example(int which);

}  // namespace fixcirc
