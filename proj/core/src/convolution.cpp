#include "slicekit/convolution.hpp"

#include <algorithm>

#include "slicekit/errors.hpp"

namespace slicekit {

Coweight ConvolutionDatum::lambda_total() const {
  Coweight total = lambdas.at(0);
  for (size_t i = 1; i < lambdas.size(); ++i) total = total + lambdas[i];
  return total;
}

ConvolutionDatum make_convolution(const RootDatum& datum, std::vector<Coweight> lambdas,
                                  const Coweight& mu) {
  if (lambdas.empty()) throw slice_error("convolution: empty λ̲");
  for (const auto& la : lambdas)
    if (!datum.is_dominant(la))
      throw not_dominant_error("convolution: λ_i = " + la.str() + " is not dominant");
  ConvolutionDatum c{std::move(lambdas), mu};
  if (!datum.dominance_leq(mu, c.lambda_total()))
    throw slice_error("convolution: μ = " + mu.str() + " is not ≤ Σλ_i = " +
                      c.lambda_total().str());
  return c;
}

namespace {

bool in_positive_coroot_cone(const RootDatum& datum, const Coweight& v) {
  auto coeffs = datum.coroot_coefficients(v);
  return coeffs &&
         std::all_of(coeffs->begin(), coeffs->end(), [](long long c) { return c >= 0; });
}

void require_minuscule(const RepOracle& oracle, const ConvolutionDatum& c) {
  for (const auto& la : c.lambdas)
    if (!oracle.is_minuscule(la))
      throw not_minuscule_error("λ_i = " + la.str() + " is not minuscule");
}

void require_mu_condition(const RootDatum& datum, const Coweight& mu) {
  if (!mu_condition(datum, mu))
    throw mu_condition_error("μ = " + mu.str() + " violates ⟨α∨, μ⟩ ≥ -1");
}

}  // namespace

std::vector<FixedPointTuple> fixed_points(const RepOracle& oracle, const ConvolutionDatum& c) {
  const RootDatum& datum = oracle.datum();
  const size_t n = c.lambdas.size();

  // weight lists (lex order via diagram map) and suffix highest/lowest sums
  std::vector<std::vector<Coweight>> weights(n);
  for (size_t i = 0; i < n; ++i) {
    auto diagram = oracle.weights_of(c.lambdas[i]);
    for (const auto& [w, m] : diagram->mults) weights[i].push_back(w);
  }
  std::vector<Coweight> suffix_high(n + 1, datum.zero_coweight());
  std::vector<Coweight> suffix_low(n + 1, datum.zero_coweight());
  for (size_t i = n; i-- > 0;) {
    suffix_high[i] = suffix_high[i + 1] + c.lambdas[i];
    suffix_low[i] = suffix_low[i + 1] + datum.lowest_weight(c.lambdas[i]);
  }

  std::vector<FixedPointTuple> result;
  std::vector<Coweight> current;
  current.reserve(n);

  auto dfs = [&](auto&& self, size_t i, const Coweight& remaining) -> void {
    if (i == n) {
      if (remaining.is_zero()) result.push_back(FixedPointTuple{current});
      return;
    }
    if (!in_positive_coroot_cone(datum, suffix_high[i] - remaining) ||
        !in_positive_coroot_cone(datum, remaining - suffix_low[i]))
      return;
    for (const auto& w : weights[i]) {
      current.push_back(w);
      self(self, i + 1, remaining - w);
      current.pop_back();
    }
  };
  dfs(dfs, 0, c.mu);
  return result;
}

EquivariantCharacter tangent_character(const RepOracle& oracle, const ConvolutionDatum& c,
                                       const FixedPointTuple& t) {
  const RootDatum& datum = oracle.datum();
  require_minuscule(oracle, c);
  if (t.mus.size() != c.lambdas.size())
    throw tuple_not_fixed_point_error("tuple length does not match λ̲");
  Coweight sum = datum.zero_coweight();
  for (size_t i = 0; i < t.mus.size(); ++i) {
    if (oracle.weight_multiplicity(c.lambdas[i], t.mus[i]) == 0)
      throw tuple_not_fixed_point_error("μ_" + std::to_string(i + 1) + " = " + t.mus[i].str() +
                                        " is not a weight of V^{λ_" + std::to_string(i + 1) + "}");
    sum = sum + t.mus[i];
  }
  if (sum != c.mu)
    throw tuple_not_fixed_point_error("Σμ_i = " + sum.str() + " differs from μ = " + c.mu.str());

  EquivariantCharacter ch;
  Coweight partial = datum.zero_coweight();
  for (size_t i = 0; i < t.mus.size(); ++i) {
    for (const auto& alpha : delta_mu_minus(datum, t.mus[i])) {
      long long s = pairing(alpha, partial);
      ch.add_term(-s, alpha, 1);
      ch.add_term(1 + s, -alpha, 1);
    }
    partial = partial + t.mus[i];
  }
  return ch;
}

EquivariantCharacter gl2_tangent_character(const RootDatum& datum, long long n_factors,
                                           const std::vector<long long>& subset) {
  if (datum.ss_rank() != 1)
    throw slice_error("gl2_tangent_character needs a rank-one root system, got " + datum.label());
  long long prev = 0;
  for (long long idx : subset) {
    if (idx <= prev || idx > n_factors)
      throw malformed_subset_error("subset indices must be strictly increasing in [1, N]");
    prev = idx;
  }
  const RootChar& alpha = datum.simple_roots()[0];
  EquivariantCharacter ch;
  for (size_t l = 1; l <= subset.size(); ++l) {
    long long i_l = subset[l - 1];
    ch.add_term(i_l - 2 * static_cast<long long>(l) + 1, -alpha, 1);
    ch.add_term(2 * static_cast<long long>(l) - i_l, alpha, 1);
  }
  return ch;
}

QPolynomial poincare_polynomial(const RepOracle& oracle, const ConvolutionDatum& c) {
  const RootDatum& datum = oracle.datum();
  require_minuscule(oracle, c);
  require_mu_condition(datum, c.mu);
  Coweight minus_two_rho = -datum.two_rho();
  QPolynomial p;
  for (const auto& t : fixed_points(oracle, c)) {
    EquivariantCharacter ch = tangent_character(oracle, c, t);
    p.add_term(2 * attracting_dimension(ch, minus_two_rho), 1);
  }
  return p;
}

std::vector<long long> closed_form_cell_dimensions(const RepOracle& oracle,
                                                   const ConvolutionDatum& c, long long offset) {
  const RootDatum& datum = oracle.datum();
  require_minuscule(oracle, c);
  require_mu_condition(datum, c.mu);
  if (offset != 0 && offset != -1)
    throw slice_error("closed-form offset must be 0 or -1");
  std::vector<long long> dims;
  for (const auto& t : fixed_points(oracle, c)) {
    long long cells = 0;
    Coweight partial = datum.zero_coweight();
    for (size_t i = 0; i < t.mus.size(); ++i) {
      for (const auto& alpha : delta_mu_minus(datum, t.mus[i])) {
        cells += 1;
        if (pairing(alpha, partial) == offset) cells += 1;
      }
      partial = partial + t.mus[i];
    }
    dims.push_back(cells);
  }
  return dims;
}

QPolynomial poincare_closed_form(const RepOracle& oracle, const ConvolutionDatum& c,
                                 long long offset) {
  QPolynomial p;
  for (long long cells : closed_form_cell_dimensions(oracle, c, offset)) p.add_term(2 * cells, 1);
  return p;
}

std::vector<CoveringChart> covering_charts(const RepOracle& oracle, const ConvolutionDatum& c) {
  const RootDatum& datum = oracle.datum();
  require_mu_condition(datum, c.mu);
  long long total = pairing(datum.two_rho_check(), c.lambda_total() - c.mu);
  std::vector<CoveringChart> charts;
  for (const auto& t : fixed_points(oracle, c)) {
    CoveringChart chart;
    chart.tuple = t;
    long long sum = 0;
    for (size_t i = 0; i < t.mus.size(); ++i) {
      long long d = pairing(datum.two_rho_check(), c.lambdas[i] - t.mus[i]);
      chart.chart_dims.push_back(d);
      sum += d;
    }
    if (sum != total)
      throw slice_error("covering chart dimensions do not sum to ⟨2ρ∨, λ-μ⟩");
    chart.total_dim = sum;
    charts.push_back(std::move(chart));
  }
  return charts;
}

}  // namespace slicekit
