#include "slicekit/slices.hpp"

#include <algorithm>

#include "slicekit/errors.hpp"

namespace slicekit {

SliceDatum make_slice(const RootDatum& datum, const Coweight& lambda, const Coweight& mu) {
  if (!datum.is_dominant(lambda))
    throw not_dominant_error("slice: λ = " + lambda.str() + " is not dominant");
  if (!datum.dominance_leq(mu, lambda))
    throw slice_error("slice: μ = " + mu.str() + " is not ≤ λ = " + lambda.str() +
                      " in dominance order");
  return SliceDatum{lambda, mu};
}

long long slice_dimension(const RootDatum& datum, const SliceDatum& s) {
  return pairing(datum.two_rho_check(), s.lambda - s.mu);
}

bool has_torus_fixed_point(const RepOracle& oracle, const SliceDatum& s) {
  return oracle.weight_multiplicity(s.lambda, s.mu) > 0;
}

bool mu_condition(const RootDatum& datum, const Coweight& mu) {
  datum.check_rank(mu);
  for (const auto& root : datum.positive_roots())
    if (pairing(root, mu) < -1) return false;
  return true;
}

FibrationDecomposition fibration_decomposition(const RootDatum& datum, const SliceDatum& s) {
  for (const auto& root : datum.positive_roots()) {
    long long p = pairing(root, s.mu);
    if (p < -1)
      throw mu_condition_error("fibration: ⟨" + root.str() + ", μ⟩ = " + std::to_string(p) +
                               " < -1 at μ = " + s.mu.str());
  }
  FibrationDecomposition f;
  f.base_lambda = s.lambda;
  f.base_mu_plus = datum.dominant_representative(s.mu);
  f.affine_dim = pairing(datum.two_rho_check(), f.base_mu_plus - s.mu);
  f.slice_is_affine_space = (f.base_mu_plus == s.lambda);
  return f;
}

std::vector<RootChar> delta_mu_minus(const RootDatum& datum, const Coweight& mu) {
  datum.check_rank(mu);
  std::vector<RootChar> result;
  for (const auto& root : datum.positive_roots()) {
    RootChar neg = -root;
    if (pairing(neg, mu) > 0) result.push_back(neg);
  }
  std::sort(result.begin(), result.end());
  return result;
}

long long repellent_dimension(const RootDatum& datum, const SliceDatum& s) {
  long long d = slice_dimension(datum, s);
  if (d % 2 != 0) throw slice_error("slice dimension is odd; λ-μ escaped the coroot lattice");
  return d / 2;
}

EquivariantCharacter minuscule_slice_character(const RepOracle& oracle, const SliceDatum& s) {
  const RootDatum& datum = oracle.datum();
  if (!oracle.is_minuscule(s.lambda))
    throw not_minuscule_error("slice character: λ = " + s.lambda.str() + " is not minuscule");
  if (datum.dominant_representative(s.mu) != s.lambda)
    throw mu_not_in_orbit_error("slice character: μ = " + s.mu.str() + " is not in Wλ for λ = " +
                                s.lambda.str());
  EquivariantCharacter ch;
  for (const auto& alpha : delta_mu_minus(datum, s.mu)) {
    ch.add_term(0, alpha, 1);
    ch.add_term(1, -alpha, 1);
  }
  return ch;
}

std::vector<Coweight> dominant_interval(const RootDatum& datum, const Coweight& mu,
                                        const Coweight& lambda) {
  auto box = datum.coroot_coefficients(lambda - mu);
  if (!box || !std::all_of(box->begin(), box->end(), [](long long c) { return c >= 0; }))
    throw slice_error("dominant_interval: μ = " + mu.str() + " is not ≤ λ = " + lambda.str());
  std::vector<Coweight> result;
  const int ss = datum.ss_rank();
  std::vector<long long> n(ss, 0);
  for (;;) {
    Coweight cand = lambda;
    for (int i = 0; i < ss; ++i) cand = cand - datum.simple_coroots()[i] * n[i];
    if (datum.is_dominant(cand)) result.push_back(cand);
    int pos = ss - 1;
    while (pos >= 0 && n[pos] == (*box)[pos]) {
      n[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++n[pos];
  }
  std::sort(result.begin(), result.end());
  return result;
}

DeepestStratumReport deepest_stratum_report(const RootDatum& datum, const Coweight& mu) {
  DeepestStratumReport r;
  r.cond_pairing = mu_condition(datum, mu);
  Coweight mu_plus = datum.dominant_representative(mu);
  auto interval = dominant_interval(datum, mu, mu_plus);
  r.cond_no_intermediate = (interval.size() == 1 && interval[0] == mu_plus);
  r.agree = (r.cond_pairing == r.cond_no_intermediate);
  return r;
}

}  // namespace slicekit
