#pragma once

#include <map>
#include <string>
#include <vector>

#include "slicekit/slices.hpp"

namespace slicekit {

/// One recorded counterexample with all inputs and intermediate values.
struct SweepCase {
  std::map<std::string, std::string> values;
};

struct SweepReport {
  std::string group;
  std::string suite;
  long long bound = 0;  // λ-coefficient bound or coordinate box radius
  long long cases_checked = 0;
  std::vector<SweepCase> counterexamples;

  bool ok() const { return counterexamples.empty(); }
  std::string to_json() const;
};

/// Instance of the claim: λ dominant, μ ≤ λ, ⟨α∨,μ⟩ ≥ -1 for positive α∨
/// imply that μ is a weight of V^λ. Preconditions are enforced.
bool check_weight_rep(const RepOracle& oracle, const Coweight& lambda, const Coweight& mu);

/// Exhaustive instantiation over all dominant λ with fundamental-coefficient
/// sum ≤ lambda_bound and all μ ≤ λ satisfying the μ-condition.
SweepReport sweep_weight_rep(const RepOracle& oracle, long long lambda_bound, unsigned jobs = 1);

/// Instance of: dominant_interval(μ, μ⁺) == {μ⁺} implies the μ-condition.
bool check_no_dom_est(const RootDatum& datum, const Coweight& mu);

/// Equivalence sweep of the pairing condition against the no-intermediate
/// condition over the coordinate box [-box_radius, box_radius]^rank.
SweepReport sweep_pairing_orbit_equiv(const RootDatum& datum, long long box_radius,
                                      unsigned jobs = 1);

/// All dominant coweights Σ c_i ω_i with Σ c_i ≤ bound, in lexicographic
/// coefficient order. Shared by the sweeps and the CLI.
std::vector<Coweight> dominant_cone(const RootDatum& datum, long long bound);

/// All μ ≤ λ satisfying the μ-condition (a finite set), lexicographic.
std::vector<Coweight> mu_condition_interval(const RootDatum& datum, const Coweight& lambda);

}  // namespace slicekit
