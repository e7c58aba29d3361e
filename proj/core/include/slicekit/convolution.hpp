#pragma once

#include <vector>

#include "slicekit/characters.hpp"
#include "slicekit/rep_oracle.hpp"
#include "slicekit/slices.hpp"

namespace slicekit {

/// A factorization datum: dominant coweights λ₁,…,λ_N and μ ≤ λ₁+…+λ_N.
struct ConvolutionDatum {
  std::vector<Coweight> lambdas;
  Coweight mu;

  Coweight lambda_total() const;
};

ConvolutionDatum make_convolution(const RootDatum& datum, std::vector<Coweight> lambdas,
                                  const Coweight& mu);

/// N-tuple μ̲ = (μ₁,…,μ_N) indexing a torus-fixed point z^{μ̲}.
struct FixedPointTuple {
  std::vector<Coweight> mus;

  bool operator==(const FixedPointTuple& o) const { return mus == o.mus; }
  bool operator<(const FixedPointTuple& o) const { return mus < o.mus; }
};

/// All tuples with μ_i a weight of V^{λ_i} and Σμ_i = μ, in lexicographic
/// order. Enumeration is depth-first with dominance pruning on the running
/// partial sum against the remaining highest/lowest weight totals.
std::vector<FixedPointTuple> fixed_points(const RepOracle& oracle, const ConvolutionDatum& c);

/// T×C×-character of the tangent space at the fixed point z^{μ̲}:
///   Σ_{i=1..N} Σ_{α∨ ∈ Δ∨₋, ⟨α∨,μ_i⟩>0}
///     ħ^{−⟨α∨,μ₁+…+μ_{i−1}⟩} e^{α∨} + ħ^{1+⟨α∨,μ₁+…+μ_{i−1}⟩} e^{−α∨}.
/// Requires every λ_i minuscule and t a fixed point of the datum.
EquivariantCharacter tangent_character(const RepOracle& oracle, const ConvolutionDatum& c,
                                       const FixedPointTuple& t);

/// Closed form of the GL₂ tangent character at the fixed point given by an
/// increasing subset {i₁<…<i_k} ⊂ {1..N}:
///   Σ_{l=1..k} ħ^{i_l−2l+1} e^{−α∨₁} + ħ^{2l−i_l} e^{α∨₁}.
EquivariantCharacter gl2_tangent_character(const RootDatum& datum, long long n_factors,
                                           const std::vector<long long>& subset);

/// Poincaré polynomial of compactly supported cohomology via the direct
/// attracting-weight count at each fixed point for the contracting
/// cocharacter t ↦ (−2ρ(t), t^d), d ≫ 0. This is the authoritative output.
/// Requires every λ_i minuscule and the μ-condition.
QPolynomial poincare_polynomial(const RepOracle& oracle, const ConvolutionDatum& c);

/// Closed-form cell-dimension count
///   Σ_{μ̲} q^{2(Σ_i|Δ∨_{μ_i,−}| + Σ_i #{α∨ ∈ Δ∨_{μ_i,−} : ⟨α∨,μ₁+…+μ_{i−1}⟩ = offset})}
/// with offset 0 or −1. Offset 0 reproduces the direct count; offset −1 is
/// the repelling-side variant kept as a cross-check.
QPolynomial poincare_closed_form(const RepOracle& oracle, const ConvolutionDatum& c,
                                 long long offset);

/// Per-cell dimensions behind poincare_closed_form, in fixed-point order.
std::vector<long long> closed_form_cell_dimensions(const RepOracle& oracle,
                                                   const ConvolutionDatum& c, long long offset);

struct CoveringChart {
  FixedPointTuple tuple;
  std::vector<long long> chart_dims;  // slice_dimension(λ_i, μ_i) per factor
  long long total_dim = 0;
};

/// One chart per fixed-point tuple; requires the μ-condition. For minuscule
/// λ_i each chart is an affine space of dimension ⟨2ρ∨, λ−μ⟩.
std::vector<CoveringChart> covering_charts(const RepOracle& oracle, const ConvolutionDatum& c);

}  // namespace slicekit
