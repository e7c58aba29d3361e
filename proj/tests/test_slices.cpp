#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "slicekit/errors.hpp"
#include "slicekit/slices.hpp"

using namespace slicekit;

namespace {

Coweight cw(std::vector<long long> v) { return Coweight(std::move(v)); }
RootChar rc(std::vector<long long> v) { return RootChar(std::move(v)); }

}  // namespace

TEST_CASE("slice construction guards") {
  auto gl2 = RootDatum::build("GL2");
  CHECK_THROWS_AS(make_slice(gl2, cw({0, 1}), cw({0, 1})), not_dominant_error);
  CHECK_THROWS_AS(make_slice(gl2, cw({1, 1}), cw({2, 0})), slice_error);
}

TEST_CASE("slice dimension") {
  auto gl2 = RootDatum::build("GL2");
  auto gl3 = RootDatum::build("GL3");
  CHECK(slice_dimension(gl2, make_slice(gl2, cw({3, 1}), cw({3, 1}))) == 0);
  CHECK(slice_dimension(gl2, make_slice(gl2, cw({1, 0}), cw({0, 1}))) == 2);
  CHECK(slice_dimension(gl3, make_slice(gl3, cw({1, 0, 0}), cw({0, 0, 1}))) == 4);
}

TEST_CASE("torus fixed point existence") {
  auto gl2 = RootDatum::build("GL2");
  RepOracle o(gl2);
  CHECK(has_torus_fixed_point(o, make_slice(gl2, cw({2, 0}), cw({1, 1}))));
  CHECK(has_torus_fixed_point(o, make_slice(gl2, cw({2, 1}), cw({2, 1}))));
  CHECK(has_torus_fixed_point(o, make_slice(gl2, cw({1, 0}), cw({0, 1}))));
}

TEST_CASE("mu condition") {
  auto gl2 = RootDatum::build("GL2");
  auto gl3 = RootDatum::build("GL3");
  CHECK(mu_condition(gl2, cw({0, 1})));
  CHECK_FALSE(mu_condition(gl2, cw({0, 2})));
  CHECK(mu_condition(gl3, cw({0, 1, 1})));
}

TEST_CASE("fibration decomposition") {
  auto gl2 = RootDatum::build("GL2");
  auto f = fibration_decomposition(gl2, make_slice(gl2, cw({1, 0}), cw({0, 1})));
  CHECK(f.base_mu_plus == cw({1, 0}));
  CHECK(f.affine_dim == 2);
  CHECK(f.slice_is_affine_space);

  auto g = fibration_decomposition(gl2, make_slice(gl2, cw({2, 0}), cw({1, 1})));
  CHECK(g.base_mu_plus == cw({1, 1}));
  CHECK(g.affine_dim == 0);
  CHECK_FALSE(g.slice_is_affine_space);

  CHECK_THROWS_AS(fibration_decomposition(gl2, make_slice(gl2, cw({2, 0}), cw({0, 2}))),
                  mu_condition_error);
}

TEST_CASE("delta_mu_minus") {
  auto gl2 = RootDatum::build("GL2");
  CHECK(delta_mu_minus(gl2, cw({1, 0})).empty());
  auto one = delta_mu_minus(gl2, cw({0, 1}));
  REQUIRE(one.size() == 1);
  CHECK(one[0] == rc({-1, 1}));

  auto gl3 = RootDatum::build("GL3");
  auto two = delta_mu_minus(gl3, cw({0, 0, 1}));
  REQUIRE(two.size() == 2);
  CHECK(two[0] == rc({-1, 0, 1}));
  CHECK(two[1] == rc({0, -1, 1}));
}

TEST_CASE("repellent dimension") {
  auto gl2 = RootDatum::build("GL2");
  auto gl3 = RootDatum::build("GL3");
  CHECK(repellent_dimension(gl2, make_slice(gl2, cw({1, 1}), cw({1, 1}))) == 0);
  CHECK(repellent_dimension(gl2, make_slice(gl2, cw({1, 0}), cw({0, 1}))) == 1);
  CHECK(repellent_dimension(gl3, make_slice(gl3, cw({1, 0, 0}), cw({0, 0, 1}))) == 2);
}

TEST_CASE("minuscule slice character") {
  auto gl2 = RootDatum::build("GL2");
  RepOracle o(gl2);
  CHECK(minuscule_slice_character(o, make_slice(gl2, cw({1, 0}), cw({1, 0}))).empty());

  auto ch = minuscule_slice_character(o, make_slice(gl2, cw({1, 0}), cw({0, 1})));
  EquivariantCharacter expected;
  expected.add_term(0, rc({-1, 1}), 1);
  expected.add_term(1, rc({1, -1}), 1);
  CHECK(ch == expected);

  auto gl3 = RootDatum::build("GL3");
  RepOracle o3(gl3);
  auto ch3 = minuscule_slice_character(o3, make_slice(gl3, cw({1, 0, 0}), cw({0, 0, 1})));
  EquivariantCharacter expected3;
  expected3.add_term(0, rc({-1, 0, 1}), 1);
  expected3.add_term(0, rc({0, -1, 1}), 1);
  expected3.add_term(1, rc({1, 0, -1}), 1);
  expected3.add_term(1, rc({0, 1, -1}), 1);
  CHECK(ch3 == expected3);

  CHECK_THROWS_AS(minuscule_slice_character(o, make_slice(gl2, cw({2, 0}), cw({1, 1}))),
                  not_minuscule_error);
  CHECK_THROWS_AS(minuscule_slice_character(o, SliceDatum{cw({1, 0}), cw({2, -1})}),
                  mu_not_in_orbit_error);
}

TEST_CASE("character counts match repellent and slice dimensions") {
  for (const char* name : {"GL3", "GL4", "A3", "D4"}) {
    auto d = RootDatum::build(name);
    RepOracle o(d);
    for (const auto& la : o.minuscule_fundamental_coweights()) {
      for (const auto& mu : d.weyl_orbit(la)) {
        auto s = make_slice(d, la, mu);
        auto minus = delta_mu_minus(d, mu);
        CHECK(static_cast<long long>(minus.size()) == repellent_dimension(d, s));
        auto ch = minuscule_slice_character(o, s);
        CHECK(ch.total_dimension() == slice_dimension(d, s));
        long long hbar0 = 0, hbar1 = 0;
        for (const auto& [term, coeff] : ch.terms()) {
          if (term.hbar == 0) hbar0 += coeff;
          if (term.hbar == 1) hbar1 += coeff;
        }
        CHECK(hbar0 == repellent_dimension(d, s));
        CHECK(hbar1 == repellent_dimension(d, s));
        CHECK(attracting_dimension(ch, -d.two_rho()) == slice_dimension(d, s));
      }
    }
  }
}

TEST_CASE("dominant interval") {
  auto gl2 = RootDatum::build("GL2");
  auto box = dominant_interval(gl2, cw({0, 2}), cw({2, 0}));
  REQUIRE(box.size() == 2);
  CHECK(box[0] == cw({1, 1}));
  CHECK(box[1] == cw({2, 0}));
  auto self = dominant_interval(gl2, cw({2, 1}), cw({2, 1}));
  REQUIRE(self.size() == 1);
  CHECK(self[0] == cw({2, 1}));
  auto gl3 = RootDatum::build("GL3");
  auto pair = dominant_interval(gl3, cw({1, 1, 1}), cw({2, 1, 0}));
  REQUIRE(pair.size() == 2);
  CHECK(pair[0] == cw({1, 1, 1}));
  CHECK(pair[1] == cw({2, 1, 0}));
}

TEST_CASE("deepest stratum report") {
  auto gl2 = RootDatum::build("GL2");
  auto a = deepest_stratum_report(gl2, cw({0, 1}));
  CHECK(a.cond_pairing);
  CHECK(a.cond_no_intermediate);
  CHECK(a.agree);
  auto b = deepest_stratum_report(gl2, cw({0, 2}));
  CHECK_FALSE(b.cond_pairing);
  CHECK_FALSE(b.cond_no_intermediate);
  CHECK(b.agree);
  auto c = deepest_stratum_report(gl2, cw({3, 1}));
  CHECK(c.cond_pairing);
  CHECK(c.cond_no_intermediate);
  CHECK(c.agree);
}

TEST_CASE("mu condition with dominance forces a fixed point") {
  for (const char* name : {"GL2", "A2"}) {
    auto d = RootDatum::build(name);
    RepOracle o(d);
    for (long long c1 = 0; c1 <= 2; ++c1)
      for (long long c2 = 0; c2 <= 2 - c1; ++c2) {
        Coweight la = d.fundamental_coweight(1) * c1;
        if (d.fundamental_count() >= 2) la = la + d.fundamental_coweight(2) * c2;
        std::vector<long long> box{-3, -3};
        for (long long x = -3; x <= 3; ++x)
          for (long long y = -3; y <= 3; ++y) {
            Coweight mu = cw({x, y});
            if (!mu_condition(d, mu) || !d.dominance_leq(mu, la)) continue;
            CHECK(has_torus_fixed_point(o, make_slice(d, la, mu)));
          }
      }
  }
}
