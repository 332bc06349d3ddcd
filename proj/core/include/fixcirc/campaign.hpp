#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fixcirc/errors.hpp"

namespace fixcirc {

struct CampaignConfig {
  std::uint64_t seed = 1;
  int count = 500;
  int min_points = 3;
  int max_points = 10;
  int max_image_size = 3;
};

struct InvariantTally {
  std::string name;
  long long checked = 0;
  long long violated = 0;
};

struct CampaignResult {
  CampaignConfig config;
  int instances = 0;
  std::vector<InvariantTally> tallies;
  std::vector<std::string> failures;  // first few violation details

  bool pass() const;
  long long total_checked() const;
  long long total_violated() const;
};

/// Randomized theorem-property campaign. Generates `count` finite metric
/// spaces (random symmetric integer matrices repaired into metrics via
/// shortest-path closure) with random, contraction-biased, singleton and
/// identity maps, then runs the cross-module invariant battery on each:
///
///   metric-closure-valid   repaired matrices satisfy all metric axioms
///   lemma1                 D(a,B) <= H(A,B) for a in A
///   hausdorff-axioms       symmetry, identity, triangle on CB(X)
///   circle-partition       circles centered at x0 partition the space
///   consistency            check holds iff 0 < tau <= tau_max
///   implication-fc-ciric   fc contraction implies Ciric contraction
///   reduction-phi-one      integral classes with phi=1 equal plain ones
///   center-membership      contraction at x0 implies x0 in Tx0
///   theorem1-fc            fc hypothesis certifies circle/disc fixedness
///   theorem3-ciric         Ciric hypothesis + side condition certify C_r
///   oracle-r               compute_r equals a naive double-loop minimum
///   oracle-circles         predicted fixed circles appear in enumeration
///   single-valued          singleton maps match the single-valued theory
///   quadrature             adaptive Simpson vs closed forms
///
/// Deterministic per seed: identical config produces identical results.
CampaignResult run_campaign(const CampaignConfig& config);

}  // namespace fixcirc
