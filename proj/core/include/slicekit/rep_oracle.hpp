#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "slicekit/root_datum.hpp"

namespace slicekit {

/// All weights of the irreducible module V^λ of the dual group, with their
/// multiplicities. Keys cover full Weyl orbits.
struct WeightDiagram {
  Coweight highest;
  std::map<Coweight, long long> mults;

  long long multiplicity(const Coweight& mu) const {
    auto it = mults.find(mu);
    return it == mults.end() ? 0 : it->second;
  }
  long long dimension() const {
    long long s = 0;
    for (const auto& [w, m] : mults) s += m;
    return s;
  }
};

using FormMatrix = std::vector<std::vector<Rational>>;

/// W-invariant symmetric form on Λ⊗Q: the symmetrized Cartan form on the
/// coroot span (short coroots of square length 2), extended by the standard
/// dot product on the orthogonal central directions. For GL_n this is the
/// plain dot product on Z^n. `component_scales` rescales the form on each
/// Dynkin component; weight multiplicities must not depend on it.
FormMatrix invariant_form(const RootDatum& datum,
                          const std::vector<Rational>& component_scales = {});

Rational form_value(const FormMatrix& form, const std::vector<long long>& u,
                    const std::vector<long long>& v);

/// Weight multiplicities of V^λ via the Freudenthal recursion over the
/// positive coroots, plus the dimension formula and minuscule tests.
/// Completed diagrams are cached per highest weight; the cache is
/// mutex-guarded so concurrent readers are safe.
class RepOracle {
 public:
  explicit RepOracle(RootDatum datum, const std::vector<Rational>& form_scales = {});

  const RootDatum& datum() const { return datum_; }
  const FormMatrix& form() const { return form_; }

  std::shared_ptr<const WeightDiagram> weights_of(const Coweight& la) const;
  long long weight_multiplicity(const Coweight& la, const Coweight& mu) const;
  long long weyl_dimension(const Coweight& la) const;

  /// Pairing test: ⟨α∨, λ⟩ ≤ 1 for every positive root α∨.
  bool is_minuscule(const Coweight& la) const;
  /// Definition chased through the oracle: support of V^λ equals Wλ.
  bool is_minuscule_via_weights(const Coweight& la) const;

  std::vector<Coweight> minuscule_fundamental_coweights() const;

 private:
  RootDatum datum_;
  FormMatrix form_;
  mutable std::mutex cache_mutex_;
  mutable std::map<Coweight, std::shared_ptr<const WeightDiagram>> cache_;

  std::shared_ptr<const WeightDiagram> build_diagram(const Coweight& la) const;
};

}  // namespace slicekit
