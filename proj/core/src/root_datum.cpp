#include "slicekit/root_datum.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

#include "slicekit/errors.hpp"

namespace slicekit {

namespace {

std::vector<long long> add_vec(const std::vector<long long>& a, const std::vector<long long>& b) {
  std::vector<long long> r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

std::vector<long long> sub_vec(const std::vector<long long>& a, const std::vector<long long>& b) {
  std::vector<long long> r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

std::vector<long long> scale_vec(const std::vector<long long>& a, long long k) {
  std::vector<long long> r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * k;
  return r;
}

std::string vec_str(const std::vector<long long>& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v[i];
  }
  os << ")";
  return os.str();
}

// Solves the square rational system M x = rhs by Gaussian elimination.
std::vector<Rational> solve_square(std::vector<std::vector<Rational>> m,
                                   std::vector<Rational> rhs) {
  const size_t n = m.size();
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && m[piv][col].is_zero()) ++piv;
    if (piv == n) throw slice_error("singular matrix in root-datum solver");
    std::swap(m[piv], m[col]);
    std::swap(rhs[piv], rhs[col]);
    Rational inv = Rational(1) / m[col][col];
    for (size_t j = col; j < n; ++j) m[col][j] *= inv;
    rhs[col] *= inv;
    for (size_t row = 0; row < n; ++row) {
      if (row == col || m[row][col].is_zero()) continue;
      Rational f = m[row][col];
      for (size_t j = col; j < n; ++j) m[row][j] -= f * m[col][j];
      rhs[row] -= f * rhs[col];
    }
  }
  return rhs;
}

// Left inverse L = (AᵀA)⁻¹Aᵀ of a full-column-rank integer matrix A
// (rank x ss), returned as ss x rank rationals.
std::vector<std::vector<Rational>> left_inverse(
    const std::vector<std::vector<long long>>& columns, int rank) {
  const int ss = static_cast<int>(columns.size());
  std::vector<std::vector<Rational>> gram(ss, std::vector<Rational>(ss));
  for (int i = 0; i < ss; ++i)
    for (int j = 0; j < ss; ++j) {
      long long s = 0;
      for (int k = 0; k < rank; ++k) s += columns[i][k] * columns[j][k];
      gram[i][j] = Rational(s);
    }
  std::vector<std::vector<Rational>> result(ss, std::vector<Rational>(rank));
  for (int k = 0; k < rank; ++k) {
    std::vector<Rational> rhs(ss);
    for (int i = 0; i < ss; ++i) rhs[i] = Rational(columns[i][k]);
    std::vector<Rational> x = solve_square(gram, rhs);
    for (int i = 0; i < ss; ++i) result[i][k] = x[i];
  }
  return result;
}

struct TypeSpec {
  char type;
  int n;
};

TypeSpec parse_simple_descriptor(const std::string& desc) {
  if (desc.empty() || !std::isalpha(static_cast<unsigned char>(desc[0])))
    throw descriptor_error("bad group descriptor: '" + desc + "'");
  char t = desc[0];
  std::string digits = desc.substr(1);
  if (digits.empty() ||
      !std::all_of(digits.begin(), digits.end(),
                   [](unsigned char c) { return std::isdigit(c); }))
    throw descriptor_error("bad rank in descriptor: '" + desc + "'");
  int n = std::stoi(digits);
  return {t, n};
}

// Cartan matrix with entries C[i][j] = <root_i, coroot_j>; the named type is
// the type of the coroot system. Short-coroot rows carry the -1 against a -2
// column, which is what makes descriptor B_n the one with the spin coweight.
std::vector<std::vector<long long>> cartan_table(char type, int n) {
  auto chain = [&](int size) {
    std::vector<std::vector<long long>> c(size, std::vector<long long>(size, 0));
    for (int i = 0; i < size; ++i) c[i][i] = 2;
    for (int i = 0; i + 1 < size; ++i) c[i][i + 1] = c[i + 1][i] = -1;
    return c;
  };
  switch (type) {
    case 'A': {
      if (n < 1) throw descriptor_error("A_n needs n >= 1");
      return chain(n);
    }
    case 'B': {
      if (n < 2) throw descriptor_error("B_n needs n >= 2");
      auto c = chain(n);
      c[n - 1][n - 2] = -2;
      return c;
    }
    case 'C': {
      if (n < 2) throw descriptor_error("C_n needs n >= 2");
      auto c = chain(n);
      c[n - 2][n - 1] = -2;
      return c;
    }
    case 'D': {
      if (n < 3) throw descriptor_error("D_n needs n >= 3");
      auto c = chain(n);
      c[n - 2][n - 1] = c[n - 1][n - 2] = 0;
      c[n - 3][n - 1] = c[n - 1][n - 3] = -1;
      return c;
    }
    case 'E': {
      if (n < 6 || n > 8) throw descriptor_error("E_n needs n in {6,7,8}");
      std::vector<std::vector<long long>> c(n, std::vector<long long>(n, 0));
      for (int i = 0; i < n; ++i) c[i][i] = 2;
      auto link = [&](int a, int b) { c[a - 1][b - 1] = c[b - 1][a - 1] = -1; };
      link(1, 3);
      link(3, 4);
      link(4, 5);
      link(5, 6);
      if (n >= 7) link(6, 7);
      if (n >= 8) link(7, 8);
      link(2, 4);
      return c;
    }
    case 'F': {
      if (n != 4) throw descriptor_error("F type needs rank 4");
      auto c = chain(4);
      c[2][1] = -2;
      return c;
    }
    case 'G': {
      if (n != 2) throw descriptor_error("G type needs rank 2");
      return {{2, -3}, {-1, 2}};
    }
    default:
      throw descriptor_error(std::string("unknown simple type '") + type + "'");
  }
}

}  // namespace

Coweight Coweight::operator+(const Coweight& o) const { return Coweight(add_vec(coords, o.coords)); }
Coweight Coweight::operator-(const Coweight& o) const { return Coweight(sub_vec(coords, o.coords)); }
Coweight Coweight::operator-() const { return Coweight(scale_vec(coords, -1)); }
Coweight Coweight::operator*(long long k) const { return Coweight(scale_vec(coords, k)); }
bool Coweight::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](long long c) { return c == 0; });
}
std::string Coweight::str() const { return vec_str(coords); }

RootChar RootChar::operator+(const RootChar& o) const { return RootChar(add_vec(coords, o.coords)); }
RootChar RootChar::operator-(const RootChar& o) const { return RootChar(sub_vec(coords, o.coords)); }
RootChar RootChar::operator-() const { return RootChar(scale_vec(coords, -1)); }
RootChar RootChar::operator*(long long k) const { return RootChar(scale_vec(coords, k)); }
bool RootChar::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](long long c) { return c == 0; });
}
std::string RootChar::str() const { return vec_str(coords); }

long long pairing(const RootChar& chi, const Coweight& mu) {
  if (chi.rank() != mu.rank())
    throw rank_mismatch_error("pairing: rank mismatch " + chi.str() + " vs " + mu.str());
  long long s = 0;
  for (size_t i = 0; i < chi.coords.size(); ++i) s += chi.coords[i] * mu.coords[i];
  return s;
}

RootDatum RootDatum::build(const std::string& descriptor) {
  RootDatum d;
  d.label_ = descriptor;
  if (descriptor.rfind("GL", 0) == 0) {
    std::string digits = descriptor.substr(2);
    if (digits.empty() ||
        !std::all_of(digits.begin(), digits.end(),
                     [](unsigned char c) { return std::isdigit(c); }))
      throw descriptor_error("bad GL descriptor: '" + descriptor + "'");
    int n = std::stoi(digits);
    if (n < 1) throw descriptor_error("GL_n needs n >= 1");
    d.rank_ = n;
    d.ss_rank_ = n - 1;
    for (int i = 0; i + 1 < n; ++i) {
      std::vector<long long> root(n, 0), coroot(n, 0);
      root[i] = 1;
      root[i + 1] = -1;
      coroot[i] = 1;
      coroot[i + 1] = -1;
      d.simple_roots_.push_back(RootChar(root));
      d.simple_coroots_.push_back(Coweight(coroot));
    }
    for (int k = 1; k < n; ++k) {
      std::vector<long long> w(n, 0);
      for (int i = 0; i < k; ++i) w[i] = 1;
      d.fundamental_coweights_.push_back(Coweight(w));
    }
  } else {
    TypeSpec ts = parse_simple_descriptor(descriptor);
    auto cartan = cartan_table(ts.type, ts.n);
    int n = static_cast<int>(cartan.size());
    d.rank_ = n;
    d.ss_rank_ = n;
    for (int i = 0; i < n; ++i) {
      std::vector<long long> root(n, 0);
      root[i] = 1;  // fundamental-coweight basis: simple roots are coordinate covectors
      d.simple_roots_.push_back(RootChar(root));
      std::vector<long long> coroot(n);
      for (int k = 0; k < n; ++k) coroot[k] = cartan[k][i];
      d.simple_coroots_.push_back(Coweight(coroot));
      std::vector<long long> w(n, 0);
      w[i] = 1;
      d.fundamental_coweights_.push_back(Coweight(w));
    }
  }
  d.finalize();
  return d;
}

void RootDatum::finalize() {
  cartan_.assign(ss_rank_, std::vector<long long>(ss_rank_, 0));
  for (int i = 0; i < ss_rank_; ++i)
    for (int j = 0; j < ss_rank_; ++j)
      cartan_[i][j] = pairing(simple_roots_[i], simple_coroots_[j]);
  for (int i = 0; i < ss_rank_; ++i) {
    if (cartan_[i][i] != 2) throw slice_error("Cartan diagonal must be 2");
    for (int j = 0; j < ss_rank_; ++j)
      if (i != j && cartan_[i][j] > 0) throw slice_error("Cartan off-diagonal must be <= 0");
  }

  // Reflection closure on aligned (root, coroot) pairs.
  std::set<std::pair<std::vector<long long>, std::vector<long long>>> seen;
  std::vector<std::pair<RootChar, Coweight>> queue;
  for (int i = 0; i < ss_rank_; ++i) {
    queue.push_back({simple_roots_[i], simple_coroots_[i]});
    seen.insert({simple_roots_[i].coords, simple_coroots_[i].coords});
  }
  for (size_t head = 0; head < queue.size(); ++head) {
    auto [root, coroot] = queue[head];
    for (int i = 0; i < ss_rank_; ++i) {
      RootChar r = reflect_char(i, root);
      Coweight c = reflect(i, coroot);
      if (seen.insert({r.coords, c.coords}).second) queue.push_back({r, c});
    }
  }
  if (seen.size() % 2 != 0) throw slice_error("root closure produced odd count");

  // Solvers need the simple-root expansion, so build them before filtering
  // the closure down to the positive half.
  std::vector<std::vector<long long>> coroot_cols, root_cols;
  for (const auto& c : simple_coroots_) coroot_cols.push_back(c.coords);
  for (const auto& r : simple_roots_) root_cols.push_back(r.coords);
  if (ss_rank_ > 0) {
    coroot_left_inverse_ = left_inverse(coroot_cols, rank_);
    root_left_inverse_ = left_inverse(root_cols, rank_);
  }

  for (const auto& [root, coroot] : seen) {
    auto coeffs = root_coefficients(RootChar(root));
    if (!coeffs) throw slice_error("closure root outside root lattice");
    bool nonneg = std::all_of(coeffs->begin(), coeffs->end(), [](long long c) { return c >= 0; });
    if (nonneg) {
      positive_roots_.push_back(RootChar(root));
      positive_coroots_.push_back(Coweight(coroot));
    }
  }
  // already sorted by root coords via the set ordering on pairs
  if (2 * positive_roots_.size() != seen.size())
    throw slice_error("positive roots are not half of the closure");

  std::vector<long long> trc(rank_, 0), tr(rank_, 0);
  for (const auto& r : positive_roots_) trc = add_vec(trc, r.coords);
  for (const auto& c : positive_coroots_) tr = add_vec(tr, c.coords);
  two_rho_check_ = RootChar(trc);
  two_rho_ = Coweight(tr);

  // Dynkin components and symmetrizers d_i with d_i C[i][j] = d_j C[j][i].
  std::vector<int> comp(ss_rank_, -1);
  std::vector<Rational> dr(ss_rank_, Rational(0));
  for (int start = 0; start < ss_rank_; ++start) {
    if (comp[start] >= 0) continue;
    std::vector<int> members{start};
    comp[start] = start;
    dr[start] = Rational(1);
    for (size_t h = 0; h < members.size(); ++h) {
      int i = members[h];
      for (int j = 0; j < ss_rank_; ++j) {
        if (cartan_[i][j] == 0 || i == j) continue;
        Rational dj = dr[i] * Rational(cartan_[i][j]) / Rational(cartan_[j][i]);
        if (comp[j] < 0) {
          comp[j] = start;
          dr[j] = dj;
          members.push_back(j);
        } else if (dr[j] != dj) {
          throw slice_error("Cartan matrix is not symmetrizable");
        }
      }
    }
    Rational dmin = dr[members[0]];
    for (int m : members) dmin = std::min(dmin, dr[m], [](const Rational& a, const Rational& b) { return a < b; });
    for (int m : members) dr[m] /= dmin;
    std::vector<int> sorted = members;
    std::sort(sorted.begin(), sorted.end());
    components_.push_back(sorted);
  }
  symmetrizers_.resize(ss_rank_);
  for (int i = 0; i < ss_rank_; ++i) symmetrizers_[i] = dr[i].to_int64();

  for (int i = 0; i < ss_rank_; ++i) {
    if (pairing(simple_roots_[i], two_rho_) != 2 || pairing(two_rho_check_, simple_coroots_[i]) != 2)
      throw slice_error("rho pairing invariant violated during construction");
  }
}

Coweight RootDatum::fundamental_coweight(int i) const {
  if (i < 1 || i > static_cast<int>(fundamental_coweights_.size()))
    throw descriptor_error("fundamental coweight index out of range: w" + std::to_string(i));
  return fundamental_coweights_[i - 1];
}

void RootDatum::check_rank(const Coweight& mu) const {
  if (static_cast<int>(mu.rank()) != rank_)
    throw rank_mismatch_error("coweight " + mu.str() + " has wrong rank for " + label_);
}

void RootDatum::check_rank(const RootChar& chi) const {
  if (static_cast<int>(chi.rank()) != rank_)
    throw rank_mismatch_error("character " + chi.str() + " has wrong rank for " + label_);
}

bool RootDatum::is_dominant(const Coweight& mu) const {
  check_rank(mu);
  for (const auto& r : simple_roots_)
    if (pairing(r, mu) < 0) return false;
  return true;
}

std::optional<std::vector<long long>> RootDatum::expand(
    const std::vector<long long>& v,
    const std::vector<std::vector<Rational>>& left_inverse,
    const std::vector<std::vector<long long>>& columns) const {
  if (ss_rank_ == 0) {
    bool zero = std::all_of(v.begin(), v.end(), [](long long c) { return c == 0; });
    return zero ? std::make_optional(std::vector<long long>{}) : std::nullopt;
  }
  std::vector<long long> coeffs(ss_rank_);
  for (int i = 0; i < ss_rank_; ++i) {
    Rational acc(0);
    for (int k = 0; k < rank_; ++k) acc += left_inverse[i][k] * Rational(v[k]);
    if (!acc.is_integer()) return std::nullopt;
    coeffs[i] = acc.to_int64();
  }
  // consistency: v must actually lie in the span
  for (int k = 0; k < rank_; ++k) {
    long long s = 0;
    for (int i = 0; i < ss_rank_; ++i) s += coeffs[i] * columns[i][k];
    if (s != v[k]) return std::nullopt;
  }
  return coeffs;
}

std::optional<std::vector<long long>> RootDatum::coroot_coefficients(const Coweight& v) const {
  check_rank(v);
  std::vector<std::vector<long long>> cols;
  cols.reserve(ss_rank_);
  for (const auto& c : simple_coroots_) cols.push_back(c.coords);
  return expand(v.coords, coroot_left_inverse_, cols);
}

std::optional<std::vector<long long>> RootDatum::root_coefficients(const RootChar& chi) const {
  check_rank(chi);
  std::vector<std::vector<long long>> cols;
  cols.reserve(ss_rank_);
  for (const auto& r : simple_roots_) cols.push_back(r.coords);
  return expand(chi.coords, root_left_inverse_, cols);
}

bool RootDatum::dominance_leq(const Coweight& mu, const Coweight& la) const {
  auto coeffs = coroot_coefficients(la - mu);
  if (!coeffs) return false;
  return std::all_of(coeffs->begin(), coeffs->end(), [](long long c) { return c >= 0; });
}

Coweight RootDatum::reflect(int i, const Coweight& mu) const {
  check_rank(mu);
  long long p = pairing(simple_roots_[i], mu);
  return mu - simple_coroots_[i] * p;
}

RootChar RootDatum::reflect_char(int i, const RootChar& chi) const {
  check_rank(chi);
  long long p = pairing(chi, simple_coroots_[i]);
  return chi - simple_roots_[i] * p;
}

Coweight RootDatum::dominant_representative(const Coweight& mu) const {
  Coweight cur = mu;
  for (;;) {
    int neg = -1;
    for (int i = 0; i < ss_rank_; ++i) {
      if (pairing(simple_roots_[i], cur) < 0) {
        neg = i;
        break;
      }
    }
    if (neg < 0) return cur;
    cur = reflect(neg, cur);
  }
}

Coweight RootDatum::lowest_weight(const Coweight& la) const {
  return -dominant_representative(-la);
}

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

bool is_integer_token(const std::string& s) {
  if (s.empty()) return false;
  size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) return false;
  return std::all_of(s.begin() + start, s.end(),
                     [](unsigned char c) { return std::isdigit(c); });
}

}  // namespace

Coweight RootDatum::parse_coweight(const std::string& text) const {
  auto tokens = split(text, ',');
  if (tokens.size() == 1 && !tokens[0].empty() && tokens[0][0] == 'w') {
    std::string idx = tokens[0].substr(1);
    if (!is_integer_token(idx))
      throw descriptor_error("bad fundamental-coweight shorthand: '" + tokens[0] + "'");
    return fundamental_coweight(std::stoi(idx));
  }
  if (static_cast<int>(tokens.size()) != rank_)
    throw descriptor_error("coweight '" + text + "' needs " + std::to_string(rank_) +
                           " coordinates for " + label_);
  std::vector<long long> coords;
  for (const auto& t : tokens) {
    if (!is_integer_token(t))
      throw descriptor_error("bad coweight coordinate '" + t + "' in '" + text + "'");
    coords.push_back(std::stoll(t));
  }
  return Coweight(coords);
}

std::vector<Coweight> RootDatum::parse_coweight_list(const std::string& text) const {
  std::vector<Coweight> result;
  for (const auto& segment : split(text, ';')) {
    auto tokens = split(segment, ',');
    bool all_ints = std::all_of(tokens.begin(), tokens.end(), is_integer_token);
    if (all_ints) {
      result.push_back(parse_coweight(segment));
    } else {
      for (const auto& t : tokens) result.push_back(parse_coweight(t));
    }
  }
  return result;
}

std::vector<Coweight> RootDatum::weyl_orbit(const Coweight& mu) const {
  check_rank(mu);
  std::set<Coweight> seen{mu};
  std::vector<Coweight> queue{mu};
  for (size_t head = 0; head < queue.size(); ++head) {
    Coweight cur = queue[head];
    for (int i = 0; i < ss_rank_; ++i) {
      Coweight next = reflect(i, cur);
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  return std::vector<Coweight>(seen.begin(), seen.end());
}

}  // namespace slicekit
