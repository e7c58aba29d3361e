#include "slicekit/characters.hpp"

#include <sstream>

#include "json.hpp"

#include "slicekit/errors.hpp"

namespace slicekit {

using nlohmann::json;

void EquivariantCharacter::add_term(long long hbar, const RootChar& weight, long long coeff) {
  if (coeff == 0) return;
  CharTerm key{hbar, weight};
  auto [it, inserted] = terms_.emplace(key, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

EquivariantCharacter EquivariantCharacter::operator+(const EquivariantCharacter& o) const {
  EquivariantCharacter r = *this;
  r += o;
  return r;
}

EquivariantCharacter& EquivariantCharacter::operator+=(const EquivariantCharacter& o) {
  for (const auto& [term, coeff] : o.terms_) add_term(term.hbar, term.weight, coeff);
  return *this;
}

EquivariantCharacter EquivariantCharacter::scaled(long long k) const {
  EquivariantCharacter r;
  if (k == 0) return r;
  for (const auto& [term, coeff] : terms_) r.terms_.emplace(term, coeff * k);
  return r;
}

long long EquivariantCharacter::total_dimension() const {
  long long s = 0;
  for (const auto& [term, coeff] : terms_) s += coeff;
  return s;
}

namespace {

std::string raw_term_text(const CharTerm& term) {
  std::ostringstream os;
  os << "h^" << term.hbar << "*e" << term.weight.str();
  return os.str();
}

// Sign of the term weight under (ξ(t), t^d) for symbolic d ≫ 0: lexicographic
// in (hbar exponent, pairing with ξ).
int term_sign(const CharTerm& term, const Coweight& xi) {
  if (term.hbar != 0) return term.hbar > 0 ? 1 : -1;
  long long p = pairing(term.weight, xi);
  if (p == 0) throw zero_weight_term_error(raw_term_text(term));
  return p > 0 ? 1 : -1;
}

}  // namespace

long long attracting_dimension(const EquivariantCharacter& ch, const Coweight& xi) {
  long long dim = 0;
  for (const auto& [term, coeff] : ch.terms())
    if (term_sign(term, xi) > 0) dim += coeff;
  return dim;
}

long long repelling_dimension(const EquivariantCharacter& ch, const Coweight& xi) {
  long long dim = 0;
  for (const auto& [term, coeff] : ch.terms())
    if (term_sign(term, xi) < 0) dim += coeff;
  return dim;
}

void QPolynomial::add_term(long long degree, long long coeff) {
  if (coeff == 0) return;
  if (degree < 0) throw slice_error("QPolynomial: negative degree");
  auto [it, inserted] = coeffs_.emplace(degree, coeff);
  if (!inserted) it->second += coeff;
  if (it->second < 0) throw slice_error("QPolynomial: negative coefficient");
  if (it->second == 0) coeffs_.erase(it);
}

QPolynomial QPolynomial::operator+(const QPolynomial& o) const {
  QPolynomial r = *this;
  r += o;
  return r;
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& o) {
  for (const auto& [deg, coeff] : o.coeffs_) add_term(deg, coeff);
  return *this;
}

long long QPolynomial::coefficient(long long degree) const {
  auto it = coeffs_.find(degree);
  return it == coeffs_.end() ? 0 : it->second;
}

long long QPolynomial::evaluate_at_one() const {
  long long s = 0;
  for (const auto& [deg, coeff] : coeffs_) s += coeff;
  return s;
}

long long QPolynomial::degree() const {
  return coeffs_.empty() ? -1 : coeffs_.rbegin()->first;
}

namespace {

// exponents of the weight in simple-root coordinates; errs outside the
// root lattice since every character produced here is supported on roots
std::vector<long long> root_exponents(const RootDatum& datum, const RootChar& weight) {
  auto coeffs = datum.root_coefficients(weight);
  if (!coeffs)
    throw slice_error("character weight " + weight.str() + " is outside the root lattice of " +
                      datum.label());
  return *coeffs;
}

std::string plain_term(const RootDatum& datum, const CharTerm& term, long long coeff) {
  std::vector<std::string> factors;
  if (coeff != 1) factors.push_back(std::to_string(coeff));
  if (term.hbar == 1)
    factors.push_back("h");
  else if (term.hbar != 0)
    factors.push_back("h^" + std::to_string(term.hbar));
  auto exps = root_exponents(datum, term.weight);
  for (size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] == 0) continue;
    std::string f = "a" + std::to_string(i + 1);
    if (exps[i] != 1) f += "^" + std::to_string(exps[i]);
    factors.push_back(f);
  }
  if (factors.empty()) return "1";
  std::string out = factors[0];
  for (size_t i = 1; i < factors.size(); ++i) out += "*" + factors[i];
  return out;
}

std::string latex_term(const RootDatum& datum, const CharTerm& term, long long coeff) {
  std::ostringstream os;
  if (coeff != 1) os << coeff << " ";
  if (term.hbar == 1)
    os << "\\hbar ";
  else if (term.hbar != 0)
    os << "\\hbar^{" << term.hbar << "} ";
  auto exps = root_exponents(datum, term.weight);
  bool any = false;
  std::ostringstream arg;
  for (size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] == 0) continue;
    if (exps[i] > 0 && any) arg << "+";
    if (exps[i] == -1)
      arg << "-";
    else if (exps[i] != 1)
      arg << exps[i];
    arg << "\\alpha^\\vee_" << (i + 1);
    any = true;
  }
  if (any)
    os << "e^{" << arg.str() << "}";
  else if (coeff == 1 && term.hbar == 0)
    os << "1";
  std::string s = os.str();
  while (!s.empty() && s.back() == ' ') s.pop_back();
  return s;
}

}  // namespace

std::string render(const RootDatum& datum, const EquivariantCharacter& ch, RenderFormat format) {
  if (format == RenderFormat::json) {
    json terms = json::array();
    for (const auto& [term, coeff] : ch.terms()) {
      json t;
      t["hbar"] = term.hbar;
      t["weight"] = term.weight.coords;
      t["coeff"] = coeff;
      terms.push_back(t);
    }
    json doc;
    doc["terms"] = terms;
    return doc.dump();
  }
  if (ch.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [term, coeff] : ch.terms()) {
    std::string piece = format == RenderFormat::latex ? latex_term(datum, term, coeff)
                                                      : plain_term(datum, term, coeff);
    if (!first) out += " + ";
    out += piece;
    first = false;
  }
  return out;
}

std::string render(const QPolynomial& p, RenderFormat format) {
  if (format == RenderFormat::json) {
    json doc = json::object();
    for (const auto& [deg, coeff] : p.coefficients()) doc[std::to_string(deg)] = coeff;
    return doc.dump();
  }
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [deg, coeff] : p.coefficients()) {
    std::string piece;
    if (deg == 0)
      piece = std::to_string(coeff);
    else {
      if (coeff != 1) piece = std::to_string(coeff) + "*";
      if (format == RenderFormat::latex)
        piece += deg == 1 ? "q" : "q^{" + std::to_string(deg) + "}";
      else
        piece += deg == 1 ? "q" : "q^" + std::to_string(deg);
    }
    if (!first) out += " + ";
    out += piece;
    first = false;
  }
  return out;
}

EquivariantCharacter parse_character_json(const std::string& text) {
  json doc = json::parse(text);
  EquivariantCharacter ch;
  for (const auto& t : doc.at("terms")) {
    std::vector<long long> coords = t.at("weight").get<std::vector<long long>>();
    ch.add_term(t.at("hbar").get<long long>(), RootChar(coords), t.at("coeff").get<long long>());
  }
  return ch;
}

QPolynomial parse_qpolynomial_json(const std::string& text) {
  json doc = json::parse(text);
  QPolynomial p;
  for (auto it = doc.begin(); it != doc.end(); ++it)
    p.add_term(std::stoll(it.key()), it.value().get<long long>());
  return p;
}

}  // namespace slicekit
