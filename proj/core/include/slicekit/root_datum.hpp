#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "slicekit/rational.hpp"

namespace slicekit {

/// Integer vector in the cocharacter lattice Λ = Z^rank.
struct Coweight {
  std::vector<long long> coords;

  Coweight() = default;
  explicit Coweight(std::vector<long long> c) : coords(std::move(c)) {}

  size_t rank() const { return coords.size(); }

  bool operator==(const Coweight& o) const { return coords == o.coords; }
  bool operator!=(const Coweight& o) const { return coords != o.coords; }
  bool operator<(const Coweight& o) const { return coords < o.coords; }

  Coweight operator+(const Coweight& o) const;
  Coweight operator-(const Coweight& o) const;
  Coweight operator-() const;
  Coweight operator*(long long k) const;

  bool is_zero() const;
  std::string str() const;
};

/// Integer covector in the character lattice Λ*; roots live here.
struct RootChar {
  std::vector<long long> coords;

  RootChar() = default;
  explicit RootChar(std::vector<long long> c) : coords(std::move(c)) {}

  size_t rank() const { return coords.size(); }

  bool operator==(const RootChar& o) const { return coords == o.coords; }
  bool operator!=(const RootChar& o) const { return coords != o.coords; }
  bool operator<(const RootChar& o) const { return coords < o.coords; }

  RootChar operator+(const RootChar& o) const;
  RootChar operator-(const RootChar& o) const;
  RootChar operator-() const;
  RootChar operator*(long long k) const;

  bool is_zero() const;
  std::string str() const;
};

/// Canonical pairing Λ* × Λ -> Z.
long long pairing(const RootChar& chi, const Coweight& mu);

/// Root datum of a reductive group, with exact integer arithmetic throughout.
///
/// Conventions. The lattice Λ has a fixed basis: for GL_n it is Z^n with the
/// diagonal cocharacters, for a simple type it is the full coweight lattice in
/// the fundamental-coweight basis (so simple roots are coordinate covectors).
/// cartan[i][j] = pairing(simple_roots[i], simple_coroots[j]), and the type
/// label names the type of the *coroot* system, so that irreducible modules
/// V^λ attached to dominant coweights λ carry the representation theory of
/// the named type (descriptor B3 has a minuscule spin coweight, C3 has the
/// 2n-dimensional ω₁, and so on).
class RootDatum {
 public:
  /// Builds from a descriptor: "GL<n>" (n ≥ 1) or "<TYPE><rank>" with TYPE in
  /// {A,B,C,D,E,F,G}. Throws descriptor_error on unknown type or bad rank.
  static RootDatum build(const std::string& descriptor);

  const std::string& label() const { return label_; }
  int rank() const { return rank_; }
  int ss_rank() const { return ss_rank_; }
  const std::vector<std::vector<long long>>& cartan() const { return cartan_; }
  const std::vector<Coweight>& simple_coroots() const { return simple_coroots_; }
  const std::vector<RootChar>& simple_roots() const { return simple_roots_; }

  /// Positive roots and coroots, index-aligned (positive_coroots()[k] is the
  /// coroot of positive_roots()[k]); sorted lexicographically by root coords.
  const std::vector<RootChar>& positive_roots() const { return positive_roots_; }
  const std::vector<Coweight>& positive_coroots() const { return positive_coroots_; }

  const RootChar& two_rho_check() const { return two_rho_check_; }
  const Coweight& two_rho() const { return two_rho_; }

  /// Symmetrizers d_i (minimal positive integers per Dynkin component) with
  /// d_i * cartan[i][j] symmetric; short coroots get d = 1.
  const std::vector<long long>& symmetrizers() const { return symmetrizers_; }

  /// Connected components of the Dynkin diagram as lists of simple indices.
  const std::vector<std::vector<int>>& dynkin_components() const { return components_; }

  Coweight zero_coweight() const { return Coweight(std::vector<long long>(rank_, 0)); }
  Coweight fundamental_coweight(int i) const;  // 1-based index
  int fundamental_count() const { return ss_rank_; }

  bool is_dominant(const Coweight& mu) const;
  bool dominance_leq(const Coweight& mu, const Coweight& la) const;

  Coweight reflect(int i, const Coweight& mu) const;       // 0-based simple index
  RootChar reflect_char(int i, const RootChar& chi) const;

  Coweight dominant_representative(const Coweight& mu) const;
  Coweight lowest_weight(const Coweight& la) const;  // w0·λ for dominant λ

  /// Full Weyl orbit, sorted lexicographically.
  std::vector<Coweight> weyl_orbit(const Coweight& mu) const;

  /// Exact expansion of v in the simple coroots; nullopt if v is outside the
  /// rational coroot span or the (unique) solution is not integral.
  std::optional<std::vector<long long>> coroot_coefficients(const Coweight& v) const;

  /// Exact expansion of chi in the simple roots; nullopt outside root lattice.
  std::optional<std::vector<long long>> root_coefficients(const RootChar& chi) const;

  void check_rank(const Coweight& mu) const;
  void check_rank(const RootChar& chi) const;

  /// Parses a coweight literal: comma-separated integers ("1,0,-1") or the
  /// shorthand "w<i>" for the i-th fundamental coweight.
  Coweight parse_coweight(const std::string& text) const;

  /// Parses a semicolon-separated tuple of coweights. A segment whose
  /// comma-separated entries are all integers is a single coweight in
  /// coordinates; otherwise the segment splits on commas into "w<i>"
  /// shorthands ("w1,w1,w2" names three coweights).
  std::vector<Coweight> parse_coweight_list(const std::string& text) const;

 private:
  std::string label_;
  int rank_ = 0;
  int ss_rank_ = 0;
  std::vector<std::vector<long long>> cartan_;
  std::vector<Coweight> simple_coroots_;
  std::vector<RootChar> simple_roots_;
  std::vector<RootChar> positive_roots_;
  std::vector<Coweight> positive_coroots_;
  RootChar two_rho_check_;
  Coweight two_rho_;
  std::vector<long long> symmetrizers_;
  std::vector<std::vector<int>> components_;
  std::vector<Coweight> fundamental_coweights_;

  // Precomputed rational left-inverses for the expansion solvers.
  std::vector<std::vector<Rational>> coroot_left_inverse_;  // ss_rank x rank
  std::vector<std::vector<Rational>> root_left_inverse_;    // ss_rank x rank

  void finalize();
  std::optional<std::vector<long long>> expand(
      const std::vector<long long>& v,
      const std::vector<std::vector<Rational>>& left_inverse,
      const std::vector<std::vector<long long>>& columns) const;
};

}  // namespace slicekit
