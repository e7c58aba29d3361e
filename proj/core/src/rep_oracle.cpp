#include "slicekit/rep_oracle.hpp"

#include <algorithm>
#include <set>

#include "slicekit/errors.hpp"

namespace slicekit {

FormMatrix invariant_form(const RootDatum& datum,
                          const std::vector<Rational>& component_scales) {
  const int rank = datum.rank();
  const int ss = datum.ss_rank();
  const auto& components = datum.dynkin_components();
  if (!component_scales.empty() && component_scales.size() != components.size())
    throw slice_error("invariant_form: one scale per Dynkin component expected");

  // d_i, optionally rescaled per component
  std::vector<Rational> d(ss);
  for (int i = 0; i < ss; ++i) d[i] = Rational(datum.symmetrizers()[i]);
  for (size_t c = 0; c < components.size(); ++c) {
    if (component_scales.empty()) break;
    if (component_scales[c] <= Rational(0))
      throw slice_error("invariant_form: scales must be positive");
    for (int i : components[c]) d[i] *= component_scales[c];
  }

  // P = C⁻¹ A_root maps v to its coroot-basis coefficients modulo the center.
  std::vector<std::vector<Rational>> p(ss, std::vector<Rational>(rank, Rational(0)));
  if (ss > 0) {
    std::vector<std::vector<Rational>> cmat(ss, std::vector<Rational>(ss));
    for (int i = 0; i < ss; ++i)
      for (int j = 0; j < ss; ++j) cmat[i][j] = Rational(datum.cartan()[i][j]);
    // invert C column by column
    std::vector<std::vector<Rational>> cinv(ss, std::vector<Rational>(ss));
    for (int col = 0; col < ss; ++col) {
      std::vector<std::vector<Rational>> m = cmat;
      std::vector<Rational> rhs(ss, Rational(0));
      rhs[col] = Rational(1);
      for (int piv = 0; piv < ss; ++piv) {
        int row = piv;
        while (row < ss && m[row][piv].is_zero()) ++row;
        if (row == ss) throw slice_error("Cartan matrix not invertible");
        std::swap(m[row], m[piv]);
        std::swap(rhs[row], rhs[piv]);
        Rational inv = Rational(1) / m[piv][piv];
        for (int j = 0; j < ss; ++j) m[piv][j] *= inv;
        rhs[piv] *= inv;
        for (int r = 0; r < ss; ++r) {
          if (r == piv || m[r][piv].is_zero()) continue;
          Rational f = m[r][piv];
          for (int j = 0; j < ss; ++j) m[r][j] -= f * m[piv][j];
          rhs[r] -= f * rhs[piv];
        }
      }
      for (int i = 0; i < ss; ++i) cinv[i][col] = rhs[i];
    }
    for (int i = 0; i < ss; ++i)
      for (int k = 0; k < rank; ++k) {
        Rational acc(0);
        for (int j = 0; j < ss; ++j)
          acc += cinv[i][j] * Rational(datum.simple_roots()[j].coords[k]);
        p[i][k] = acc;
      }
  }

  // central projector Zp = I - A_co P
  std::vector<std::vector<Rational>> zp(rank, std::vector<Rational>(rank, Rational(0)));
  for (int k = 0; k < rank; ++k) zp[k][k] = Rational(1);
  for (int k = 0; k < rank; ++k)
    for (int l = 0; l < rank; ++l)
      for (int i = 0; i < ss; ++i)
        zp[k][l] -= Rational(datum.simple_coroots()[i].coords[k]) * p[i][l];

  // G = Pᵀ (D∘C) P + Zpᵀ Zp
  FormMatrix g(rank, std::vector<Rational>(rank, Rational(0)));
  for (int k = 0; k < rank; ++k)
    for (int l = k; l < rank; ++l) {
      Rational acc(0);
      for (int i = 0; i < ss; ++i)
        for (int j = 0; j < ss; ++j)
          acc += p[i][k] * d[i] * Rational(datum.cartan()[i][j]) * p[j][l];
      for (int m = 0; m < rank; ++m) acc += zp[m][k] * zp[m][l];
      g[k][l] = acc;
      g[l][k] = acc;
    }
  return g;
}

Rational form_value(const FormMatrix& form, const std::vector<long long>& u,
                    const std::vector<long long>& v) {
  Rational acc(0);
  for (size_t i = 0; i < u.size(); ++i) {
    if (u[i] == 0) continue;
    Rational row(0);
    for (size_t j = 0; j < v.size(); ++j)
      if (v[j] != 0) row += form[i][j] * Rational(v[j]);
    acc += Rational(u[i]) * row;
  }
  return acc;
}

RepOracle::RepOracle(RootDatum datum, const std::vector<Rational>& form_scales)
    : datum_(std::move(datum)), form_(invariant_form(datum_, form_scales)) {}

std::shared_ptr<const WeightDiagram> RepOracle::weights_of(const Coweight& la) const {
  if (!datum_.is_dominant(la))
    throw not_dominant_error("weights_of: highest weight " + la.str() + " is not dominant");
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto it = cache_.find(la);
    if (it != cache_.end()) return it->second;
  }
  auto diagram = build_diagram(la);
  std::lock_guard<std::mutex> lock(cache_mutex_);
  auto [it, inserted] = cache_.emplace(la, diagram);
  return it->second;
}

std::shared_ptr<const WeightDiagram> RepOracle::build_diagram(const Coweight& la) const {
  const auto& d = datum_;
  auto diagram = std::make_shared<WeightDiagram>();
  diagram->highest = la;

  Coweight lowest = d.lowest_weight(la);
  auto box = d.coroot_coefficients(la - lowest);
  if (!box) throw slice_error("weights_of: λ - w0(λ) escaped the coroot lattice");

  // dominant candidates λ - Σ n_i α_i, processed top-down in height
  struct Candidate {
    long long height;
    Coweight nu;
  };
  std::vector<Candidate> dominants;
  const int ss = d.ss_rank();
  std::vector<long long> n(ss, 0);
  for (;;) {
    Coweight nu = la;
    long long height = 0;
    for (int i = 0; i < ss; ++i) {
      nu = nu - d.simple_coroots()[i] * n[i];
      height += n[i];
    }
    if (d.is_dominant(nu)) dominants.push_back({height, nu});
    int pos = ss - 1;
    while (pos >= 0 && n[pos] == (*box)[pos]) {
      n[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++n[pos];
  }
  std::sort(dominants.begin(), dominants.end(), [](const Candidate& a, const Candidate& b) {
    if (a.height != b.height) return a.height < b.height;
    return a.nu < b.nu;
  });

  std::map<Coweight, long long> dominant_mults;
  for (const auto& cand : dominants) {
    const Coweight& nu = cand.nu;
    if (nu == la) {
      dominant_mults[nu] = 1;
      continue;
    }
    // Freudenthal: ((λ+ν+2ρ̂, λ-ν)) m_ν = 2 Σ_{α∈Δ₊} Σ_{k≥1} (ν+kα, α) m_{ν+kα}
    Rational num(0);
    for (const auto& alpha : d.positive_coroots()) {
      for (long long k = 1;; ++k) {
        Coweight xi = nu + alpha * k;
        auto above = d.coroot_coefficients(la - xi);
        if (!above || !std::all_of(above->begin(), above->end(),
                                   [](long long c) { return c >= 0; }))
          break;
        auto it = dominant_mults.find(d.dominant_representative(xi));
        if (it != dominant_mults.end() && it->second > 0)
          num += form_value(form_, xi.coords, alpha.coords) * Rational(it->second);
      }
    }
    num *= Rational(2);
    Rational den = form_value(form_, (la + nu + d.two_rho()).coords, (la - nu).coords);
    if (den.is_zero()) throw slice_error("Freudenthal denominator vanished below λ");
    Rational m = num / den;
    if (!m.is_integer() || m.to_int64() < 1)
      throw slice_error("Freudenthal produced a non-positive-integer multiplicity at " + nu.str());
    dominant_mults[nu] = m.to_int64();
  }

  for (const auto& [nu, m] : dominant_mults)
    for (const auto& w : d.weyl_orbit(nu)) diagram->mults[w] = m;
  return diagram;
}

long long RepOracle::weight_multiplicity(const Coweight& la, const Coweight& mu) const {
  if (!datum_.is_dominant(la))
    throw not_dominant_error("weight_multiplicity: " + la.str() + " is not dominant");
  datum_.check_rank(mu);
  if (!datum_.dominance_leq(mu, la)) return 0;
  return weights_of(la)->multiplicity(mu);
}

long long RepOracle::weyl_dimension(const Coweight& la) const {
  if (!datum_.is_dominant(la))
    throw not_dominant_error("weyl_dimension: " + la.str() + " is not dominant");
  // Π ⟨α∨, 2λ+2ρ̂⟩ / ⟨α∨, 2ρ̂⟩ over positive roots α∨, with 2ρ̂ the sum of
  // positive coroots. The factors are accumulated as prime exponents so the
  // intermediate products never overflow even when the root system is large.
  Coweight doubled = la * 2 + datum_.two_rho();
  std::map<long long, long long> exponents;
  auto accumulate = [&exponents](long long value, long long sign) {
    for (long long p = 2; p * p <= value; ++p)
      while (value % p == 0) {
        exponents[p] += sign;
        value /= p;
      }
    if (value > 1) exponents[value] += sign;
  };
  for (const auto& root : datum_.positive_roots()) {
    long long num = pairing(root, doubled);
    long long den = pairing(root, datum_.two_rho());
    if (num <= 0 || den <= 0)
      throw slice_error("Weyl dimension formula met a non-positive pairing");
    accumulate(num, 1);
    accumulate(den, -1);
  }
  long long dim = 1;
  for (const auto& [p, e] : exponents) {
    if (e < 0) throw slice_error("Weyl dimension formula returned a non-integer value");
    for (long long i = 0; i < e; ++i) {
      if (dim > INT64_MAX / p) throw std::overflow_error("Weyl dimension exceeds 64 bits");
      dim *= p;
    }
  }
  return dim;
}

bool RepOracle::is_minuscule(const Coweight& la) const {
  if (!datum_.is_dominant(la))
    throw not_dominant_error("is_minuscule: " + la.str() + " is not dominant");
  for (const auto& root : datum_.positive_roots())
    if (pairing(root, la) > 1) return false;
  return true;
}

bool RepOracle::is_minuscule_via_weights(const Coweight& la) const {
  if (!datum_.is_dominant(la))
    throw not_dominant_error("is_minuscule_via_weights: " + la.str() + " is not dominant");
  auto diagram = weights_of(la);
  auto orbit = datum_.weyl_orbit(la);
  if (diagram->mults.size() != orbit.size()) return false;
  auto it = diagram->mults.begin();
  for (const auto& w : orbit) {
    if (it->first != w) return false;
    ++it;
  }
  return true;
}

std::vector<Coweight> RepOracle::minuscule_fundamental_coweights() const {
  std::vector<Coweight> result;
  for (int i = 1; i <= datum_.fundamental_count(); ++i) {
    Coweight w = datum_.fundamental_coweight(i);
    if (is_minuscule(w)) result.push_back(w);
  }
  return result;
}

}  // namespace slicekit
