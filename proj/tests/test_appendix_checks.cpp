#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "slicekit/appendix_checks.hpp"
#include "slicekit/errors.hpp"

using namespace slicekit;

namespace {

Coweight cw(std::vector<long long> v) { return Coweight(std::move(v)); }

long long binomial(long long n, long long k) {
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("check_weight_rep instances") {
  RepOracle gl2(RootDatum::build("GL2"));
  CHECK(check_weight_rep(gl2, cw({2, 0}), cw({1, 1})));
  CHECK(check_weight_rep(gl2, cw({2, 0}), cw({2, 0})));
  RepOracle gl3(RootDatum::build("GL3"));
  CHECK(check_weight_rep(gl3, cw({1, 0, -1}), cw({0, 0, 0})));

  CHECK_THROWS_AS(check_weight_rep(gl2, cw({0, 1}), cw({0, 1})), not_dominant_error);
  CHECK_THROWS_AS(check_weight_rep(gl2, cw({1, 1}), cw({2, 0})), slice_error);
  CHECK_THROWS_AS(check_weight_rep(gl2, cw({4, 0}), cw({0, 4})), mu_condition_error);
}

TEST_CASE("weight-rep sweeps are counterexample free") {
  for (const char* name : {"GL2", "A2", "B2"}) {
    RepOracle o(RootDatum::build(name));
    auto report = sweep_weight_rep(o, 3);
    INFO(name, ": ", report.to_json());
    CHECK(report.ok());
    CHECK(report.cases_checked > 0);
  }
  RepOracle g2(RootDatum::build("G2"));
  auto report = sweep_weight_rep(g2, 2);
  CHECK(report.ok());
}

TEST_CASE("dominant cone size has a closed form") {
  for (const char* name : {"GL2", "A2", "A3", "B2"}) {
    auto d = RootDatum::build(name);
    for (long long bound = 0; bound <= 4; ++bound) {
      auto cone = dominant_cone(d, bound);
      CHECK(static_cast<long long>(cone.size()) ==
            binomial(bound + d.fundamental_count(), d.fundamental_count()));
      for (const auto& la : cone) CHECK(d.is_dominant(la));
    }
  }
}

TEST_CASE("cases_checked matches an independent recount") {
  auto d = RootDatum::build("GL2");
  RepOracle o(d);
  auto report = sweep_weight_rep(o, 2);
  // plain nested recount over a generous box, no enumeration tricks
  long long recount = 0;
  for (const auto& la : dominant_cone(d, 2)) {
    for (long long n = 0; n <= 20; ++n) {
      Coweight mu = la - d.simple_coroots()[0] * n;
      if (mu_condition(d, mu)) recount += 1;
    }
  }
  CHECK(report.cases_checked == recount);

  auto a2 = RootDatum::build("A2");
  RepOracle oa(a2);
  auto ra = sweep_weight_rep(oa, 2);
  long long recount_a2 = 0;
  for (const auto& la : dominant_cone(a2, 2))
    for (long long n1 = 0; n1 <= 20; ++n1)
      for (long long n2 = 0; n2 <= 20; ++n2) {
        Coweight mu = la - a2.simple_coroots()[0] * n1 - a2.simple_coroots()[1] * n2;
        if (mu_condition(a2, mu)) recount_a2 += 1;
      }
  CHECK(ra.cases_checked == recount_a2);
}

TEST_CASE("no_dom_est instances") {
  auto gl2 = RootDatum::build("GL2");
  CHECK(check_no_dom_est(gl2, cw({0, 2})));
  CHECK(check_no_dom_est(gl2, cw({0, 1})));
  CHECK(check_no_dom_est(gl2, cw({3, 1})));
}

TEST_CASE("pairing-orbit sweeps are counterexample free") {
  {
    auto d = RootDatum::build("GL2");
    auto report = sweep_pairing_orbit_equiv(d, 3);
    CHECK(report.ok());
    CHECK(report.cases_checked == 49);
  }
  {
    auto d = RootDatum::build("A2");
    auto report = sweep_pairing_orbit_equiv(d, 2);
    CHECK(report.ok());
    CHECK(report.cases_checked == 25);
  }
  {
    auto d = RootDatum::build("B2");
    auto report = sweep_pairing_orbit_equiv(d, 2);
    CHECK(report.ok());
  }
  for (const char* name : {"C3", "A4", "D4", "F4"}) {
    auto d = RootDatum::build(name);
    long long radius = d.rank() <= 3 ? 2 : 1;
    auto report = sweep_pairing_orbit_equiv(d, radius);
    INFO(name);
    CHECK(report.ok());
  }
}

TEST_CASE("pairing-orbit equivalence holds on radius-3 boxes up to rank 4") {
  for (const char* name : {"A3", "C3", "GL4", "D4"}) {
    auto d = RootDatum::build(name);
    auto report = sweep_pairing_orbit_equiv(d, 3, 2);
    long long box = 1;
    for (int i = 0; i < d.rank(); ++i) box *= 7;
    INFO(name);
    CHECK(report.ok());
    CHECK(report.cases_checked == box);
  }
}

TEST_CASE("sweeps are independent of the worker count") {
  RepOracle o(RootDatum::build("A2"));
  auto serial = sweep_weight_rep(o, 3, 1);
  auto parallel = sweep_weight_rep(o, 3, 4);
  CHECK(serial.to_json() == parallel.to_json());

  auto d = RootDatum::build("B2");
  CHECK(sweep_pairing_orbit_equiv(d, 2, 1).to_json() ==
        sweep_pairing_orbit_equiv(d, 2, 3).to_json());
}

TEST_CASE("report json carries the full record") {
  RepOracle o(RootDatum::build("GL2"));
  auto report = sweep_weight_rep(o, 1);
  auto text = report.to_json();
  CHECK(text.find("\"group\":\"GL2\"") != std::string::npos);
  CHECK(text.find("\"suite\":\"weight-rep\"") != std::string::npos);
  CHECK(text.find("\"cases_checked\"") != std::string::npos);
  CHECK(text.find("\"counterexamples\":[]") != std::string::npos);
}
