#pragma once

#include <map>
#include <string>

#include "slicekit/root_datum.hpp"

namespace slicekit {

enum class RenderFormat { plain, json, latex };

/// One monomial ħ^hbar · e^weight; ordering is the canonical serialization
/// order (hbar exponent first, then weight coordinates).
struct CharTerm {
  long long hbar = 0;
  RootChar weight;

  bool operator<(const CharTerm& o) const {
    if (hbar != o.hbar) return hbar < o.hbar;
    return weight < o.weight;
  }
  bool operator==(const CharTerm& o) const { return hbar == o.hbar && weight == o.weight; }
};

/// Finitely supported integer combination of terms ħ^a·e^{β∨}, kept in
/// canonical form (no zero coefficients, sorted term map).
class EquivariantCharacter {
 public:
  EquivariantCharacter() = default;

  void add_term(long long hbar, const RootChar& weight, long long coeff);

  EquivariantCharacter operator+(const EquivariantCharacter& o) const;
  EquivariantCharacter& operator+=(const EquivariantCharacter& o);
  EquivariantCharacter scaled(long long k) const;

  bool operator==(const EquivariantCharacter& o) const { return terms_ == o.terms_; }
  bool operator!=(const EquivariantCharacter& o) const { return !(*this == o); }

  bool empty() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const std::map<CharTerm, long long>& terms() const { return terms_; }

  /// Sum of coefficients = dimension of the carrying space.
  long long total_dimension() const;

 private:
  std::map<CharTerm, long long> terms_;
};

/// Dimension of the attracting part of the character under the cocharacter
/// t ↦ (ξ(t), t^d) with d ≫ 0 kept symbolic: a term is attracting when its
/// ħ-exponent is positive, or has ħ-exponent zero and pairs positively with
/// ξ. Throws zero_weight_term_error on a term with ħ-exponent zero and zero
/// pairing (the fixed point would not be isolated for this cocharacter).
long long attracting_dimension(const EquivariantCharacter& ch, const Coweight& xi);

/// Complementary count (strictly negative weight for d ≫ 0); same error.
long long repelling_dimension(const EquivariantCharacter& ch, const Coweight& xi);

/// Polynomial in q with nonnegative integer coefficients.
class QPolynomial {
 public:
  QPolynomial() = default;

  void add_term(long long degree, long long coeff);

  QPolynomial operator+(const QPolynomial& o) const;
  QPolynomial& operator+=(const QPolynomial& o);
  bool operator==(const QPolynomial& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const QPolynomial& o) const { return !(*this == o); }

  bool is_zero() const { return coeffs_.empty(); }
  long long coefficient(long long degree) const;
  long long evaluate_at_one() const;
  long long degree() const;  // -1 for the zero polynomial
  const std::map<long long, long long>& coefficients() const { return coeffs_; }

  static QPolynomial monomial(long long degree) {
    QPolynomial p;
    p.add_term(degree, 1);
    return p;
  }

 private:
  std::map<long long, long long> coeffs_;
};

/// Rendering. Plain and LaTeX modes print weights in simple-root coordinates
/// (and throw if a weight is outside the root lattice); JSON keeps raw
/// covector coordinates per the documented schema. Output is byte-stable.
std::string render(const RootDatum& datum, const EquivariantCharacter& ch, RenderFormat format);
std::string render(const QPolynomial& p, RenderFormat format);

EquivariantCharacter parse_character_json(const std::string& text);
QPolynomial parse_qpolynomial_json(const std::string& text);

}  // namespace slicekit
