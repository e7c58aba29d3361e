#include "slicekit/appendix_checks.hpp"

#include <algorithm>

#include "json.hpp"

#include "slicekit/errors.hpp"
#include "slicekit/parallel.hpp"

namespace slicekit {

using nlohmann::json;

std::string SweepReport::to_json() const {
  json doc;
  doc["group"] = group;
  doc["suite"] = suite;
  doc["bound"] = bound;
  doc["cases_checked"] = cases_checked;
  json cex = json::array();
  for (const auto& c : counterexamples) {
    json entry = json::object();
    for (const auto& [k, v] : c.values) entry[k] = v;
    cex.push_back(entry);
  }
  doc["counterexamples"] = cex;
  return doc.dump();
}

bool check_weight_rep(const RepOracle& oracle, const Coweight& lambda, const Coweight& mu) {
  const RootDatum& datum = oracle.datum();
  if (!datum.is_dominant(lambda))
    throw not_dominant_error("check_weight_rep: λ = " + lambda.str() + " is not dominant");
  if (!datum.dominance_leq(mu, lambda))
    throw slice_error("check_weight_rep: μ = " + mu.str() + " is not ≤ λ");
  if (!mu_condition(datum, mu))
    throw mu_condition_error("check_weight_rep: μ = " + mu.str() + " fails ⟨α∨,μ⟩ ≥ -1");
  return oracle.weight_multiplicity(lambda, mu) > 0;
}

std::vector<Coweight> dominant_cone(const RootDatum& datum, long long bound) {
  std::vector<Coweight> result;
  const int nf = datum.fundamental_count();
  std::vector<long long> c(nf, 0);
  auto rec = [&](auto&& self, int i, long long remaining) -> void {
    if (i == nf) {
      Coweight la = datum.zero_coweight();
      for (int j = 0; j < nf; ++j) la = la + datum.fundamental_coweight(j + 1) * c[j];
      result.push_back(la);
      return;
    }
    for (long long v = 0; v <= remaining; ++v) {
      c[i] = v;
      self(self, i + 1, remaining - v);
    }
    c[i] = 0;
  };
  rec(rec, 0, bound);
  return result;
}

std::vector<Coweight> mu_condition_interval(const RootDatum& datum, const Coweight& lambda) {
  // μ = λ - Σ n_i α_i with ⟨2ρ∨, μ⟩ ≥ -|Δ∨₊| forces Σ n_i ≤ S; each
  // ⟨2ρ∨, α_i⟩ = 2 makes the bound uniform.
  long long s_bound =
      (pairing(datum.two_rho_check(), lambda) + static_cast<long long>(datum.positive_roots().size())) / 2;
  std::vector<Coweight> result;
  const int ss = datum.ss_rank();
  std::vector<long long> n(ss, 0);
  auto rec = [&](auto&& self, int i, long long remaining) -> void {
    if (i == ss) {
      Coweight mu = lambda;
      for (int j = 0; j < ss; ++j) mu = mu - datum.simple_coroots()[j] * n[j];
      if (mu_condition(datum, mu)) result.push_back(mu);
      return;
    }
    for (long long v = 0; v <= remaining; ++v) {
      n[i] = v;
      self(self, i + 1, remaining - v);
    }
    n[i] = 0;
  };
  rec(rec, 0, s_bound);
  std::sort(result.begin(), result.end());
  return result;
}

SweepReport sweep_weight_rep(const RepOracle& oracle, long long lambda_bound, unsigned jobs) {
  const RootDatum& datum = oracle.datum();
  SweepReport report;
  report.group = datum.label();
  report.suite = "weight-rep";
  report.bound = lambda_bound;

  std::vector<Coweight> lambdas = dominant_cone(datum, lambda_bound);
  struct Partial {
    long long checked = 0;
    std::vector<SweepCase> counterexamples;
  };
  auto partials = parallel_map(lambdas.size(), jobs, [&](size_t idx) {
    const Coweight& la = lambdas[idx];
    Partial partial;
    for (const Coweight& mu : mu_condition_interval(datum, la)) {
      partial.checked += 1;
      long long mult = oracle.weight_multiplicity(la, mu);
      if (mult > 0) continue;
      SweepCase cex;
      cex.values["lambda"] = la.str();
      cex.values["mu"] = mu.str();
      cex.values["mu_plus"] = datum.dominant_representative(mu).str();
      cex.values["multiplicity"] = std::to_string(mult);
      long long min_pairing = 0;
      for (const auto& root : datum.positive_roots())
        min_pairing = std::min(min_pairing, pairing(root, mu));
      cex.values["min_root_pairing"] = std::to_string(min_pairing);
      partial.counterexamples.push_back(std::move(cex));
    }
    return partial;
  });
  for (auto& partial : partials) {
    report.cases_checked += partial.checked;
    for (auto& cex : partial.counterexamples) report.counterexamples.push_back(std::move(cex));
  }
  return report;
}

bool check_no_dom_est(const RootDatum& datum, const Coweight& mu) {
  Coweight mu_plus = datum.dominant_representative(mu);
  auto interval = dominant_interval(datum, mu, mu_plus);
  bool no_intermediate = interval.size() == 1 && interval[0] == mu_plus;
  return !no_intermediate || mu_condition(datum, mu);
}

SweepReport sweep_pairing_orbit_equiv(const RootDatum& datum, long long box_radius,
                                      unsigned jobs) {
  SweepReport report;
  report.group = datum.label();
  report.suite = "pairing-orbit";
  report.bound = box_radius;

  const int rank = datum.rank();
  long long side = 2 * box_radius + 1;
  long long total = 1;
  for (int i = 0; i < rank; ++i) total *= side;
  report.cases_checked = total;

  // chunk by the first coordinate so merging stays in lexicographic order
  auto partials = parallel_map(static_cast<size_t>(side), jobs, [&](size_t chunk) {
    std::vector<SweepCase> found;
    std::vector<long long> coords(rank, -box_radius);
    coords[0] = static_cast<long long>(chunk) - box_radius;
    for (;;) {
      Coweight mu{coords};
      DeepestStratumReport r = deepest_stratum_report(datum, mu);
      if (!r.agree) {
        SweepCase cex;
        cex.values["mu"] = mu.str();
        cex.values["mu_plus"] = datum.dominant_representative(mu).str();
        cex.values["cond_pairing"] = r.cond_pairing ? "true" : "false";
        cex.values["cond_no_intermediate"] = r.cond_no_intermediate ? "true" : "false";
        auto interval = dominant_interval(datum, mu, datum.dominant_representative(mu));
        std::string text;
        for (const auto& w : interval) text += (text.empty() ? "" : " ") + w.str();
        cex.values["dominant_interval"] = text;
        found.push_back(std::move(cex));
      }
      int pos = rank - 1;
      while (pos >= 1 && coords[pos] == box_radius) {
        coords[pos] = -box_radius;
        --pos;
      }
      if (pos < 1) break;
      ++coords[pos];
    }
    return found;
  });
  for (auto& chunk : partials)
    for (auto& cex : chunk) report.counterexamples.push_back(std::move(cex));
  return report;
}

}  // namespace slicekit
