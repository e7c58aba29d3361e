#pragma once

#include <vector>

#include "slicekit/characters.hpp"
#include "slicekit/rep_oracle.hpp"

namespace slicekit {

/// A pair (λ, μ) with λ dominant and μ ≤ λ in dominance order.
struct SliceDatum {
  Coweight lambda;
  Coweight mu;
};

/// Validates and builds a SliceDatum; throws on violated invariants.
SliceDatum make_slice(const RootDatum& datum, const Coweight& lambda, const Coweight& mu);

struct FibrationDecomposition {
  Coweight base_lambda;
  Coweight base_mu_plus;
  long long affine_dim = 0;
  /// True when additionally μ ∈ Wλ, so the base is a point and the whole
  /// slice is the affine space of dimension slice_dimension.
  bool slice_is_affine_space = false;
};

long long slice_dimension(const RootDatum& datum, const SliceDatum& s);

bool has_torus_fixed_point(const RepOracle& oracle, const SliceDatum& s);

/// ⟨α∨, μ⟩ ≥ -1 for every positive root α∨.
bool mu_condition(const RootDatum& datum, const Coweight& mu);

/// Requires mu_condition; throws mu_condition_error otherwise.
FibrationDecomposition fibration_decomposition(const RootDatum& datum, const SliceDatum& s);

/// {α∨ ∈ Δ∨₋ : ⟨α∨, μ⟩ > 0}, sorted canonically.
std::vector<RootChar> delta_mu_minus(const RootDatum& datum, const Coweight& mu);

long long repellent_dimension(const RootDatum& datum, const SliceDatum& s);

/// Σ over delta_mu_minus(μ) of e^{α∨} + ħ·e^{−α∨}; requires λ minuscule and
/// μ ∈ Wλ (errors not_minuscule_error / mu_not_in_orbit_error).
EquivariantCharacter minuscule_slice_character(const RepOracle& oracle, const SliceDatum& s);

/// All dominant λ' with μ ≤ λ' ≤ λ, sorted lexicographically.
std::vector<Coweight> dominant_interval(const RootDatum& datum, const Coweight& mu,
                                        const Coweight& lambda);

struct DeepestStratumReport {
  bool cond_pairing = false;          // ⟨α∨, μ⟩ ≥ -1 for all positive α∨
  bool cond_no_intermediate = false;  // dominant_interval(μ, μ⁺) == {μ⁺}
  bool agree = false;
};

DeepestStratumReport deepest_stratum_report(const RootDatum& datum, const Coweight& mu);

}  // namespace slicekit
