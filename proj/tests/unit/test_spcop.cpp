#include <doctest.h>

#include <random>
#include <set>

#include "oddpath/generators.hpp"
#include "oddpath/negative_forest.hpp"
#include "oddpath/oracle.hpp"
#include "oddpath/spcop.hpp"

using namespace oddpath;

TEST_SUITE("spcop") {
  TEST_CASE("single edge with no constraints") {
    WeightedGraph g(2);
    g.add_edge(0, 1, 4);
    auto r = solve_spcop(g, 0, 1, {});
    REQUIRE(r.found());
    CHECK(r.vertices == std::vector<int>{0, 1});
    CHECK(r.weight == Rational(4));
  }

  TEST_CASE("constrained example returns the cheapest feasible path") {
    Instance in = constrained_example_instance();
    std::set<std::vector<int>> feasible{{0, 2, 3, 4, 5, 1}, {0, 4, 5, 1}, {0, 2, 5, 1}};
    std::mt19937_64 rng(2);
    for (int it = 0; it < 100; ++it) {
      std::vector<Rational> w;
      for (int e = 0; e < 9; ++e) w.push_back(Rational(static_cast<std::int64_t>(rng() % 5)));
      Instance wi = constrained_example_instance(w);
      SpcopStats st;
      SpcopOptions opt;
      opt.certify_matching = true;
      auto r = solve_spcop(wi.g, 0, 1, wi.constraints, opt, &st);
      auto o = oracle_spcop(wi.g, 0, 1, wi.constraints);
      REQUIRE(r.found());
      CHECK(r.weight == o.weight);
      CHECK(feasible.count(r.vertices) == 1);
      CHECK(st.certificate_ok);
    }
    CHECK(oracle_feasible_paths(in.g, 0, 1, in.constraints).size() == 3);
  }

  TEST_CASE("unconstrained negative edge is refused") {
    WeightedGraph g(3);
    g.add_edge(0, 2, -1);
    g.add_edge(2, 1, 2);
    try {
      solve_spcop(g, 0, 1, {});
      FAIL("expected an exception");
    } catch (const SolverError& e) {
      CHECK(e.code() == Errc::ConstraintCoverage);
    }
  }

  TEST_CASE("gadget shape") {
    WeightedGraph g(4);
    int e0 = g.add_edge(0, 2, 1);
    g.add_edge(2, 3, 1);
    g.add_edge(3, 1, 1);
    ParityConstraints c;
    c.f_even.push_back(e0);
    auto gad = build_spcop_gadget(g, 0, 1, c);
    CHECK(gad.h.n() == 6);
    CHECK(gad.copy_of[0] == -1);
    CHECK(gad.copy_of[1] == -1);
    CHECK(gad.copy_of[2] == 4);
    CHECK(gad.copy_of[3] == 5);
    // originals: 2-3, 3-1 (0-2 is even-only); copies: 2'-3'; plus two v-v' edges
    CHECK(gad.h.m() == 5);
  }

  TEST_CASE("random constrained instances equal the oracle") {
    std::mt19937_64 rng(21);
    for (int it = 0; it < 600; ++it) {
      RandomGraphSpec sp;
      sp.n = 3 + it % 5;
      Instance in = random_conservative(sp, rng);
      ParityConstraints c;
      for (int e = 0; e < in.g.m(); ++e) {
        int x = static_cast<int>(rng() % 3);
        if (in.g.edge(e).w.is_negative() && x == 0) x = 1;
        if (x == 1) c.f_even.push_back(e);
        if (x == 2) c.f_odd.push_back(e);
      }
      auto r = solve_spcop(in.g, 0, 1, c);
      auto o = oracle_spcop(in.g, 0, 1, c);
      REQUIRE(r.found() == o.found());
      if (r.found()) {
        CHECK(r.weight == o.weight);
        CHECK_FALSE(check_odd_path(in.g, 0, 1, r, &c));
      }
    }
  }
}

TEST_SUITE("nonneg parity paths") {
  TEST_CASE("odd path in a unit triangle is the edge") {
    WeightedGraph g(3);
    g.add_edge(0, 1, 1);
    g.add_edge(1, 2, 1);
    g.add_edge(2, 0, 1);
    auto r = shortest_odd_path_nonneg(g, 0, 1);
    CHECK(r.vertices == std::vector<int>{0, 1});
    CHECK(r.weight == Rational(1));
  }

  TEST_CASE("path s-a-t has no odd path but an even one") {
    WeightedGraph g(3);
    g.add_edge(0, 2, 1);
    g.add_edge(2, 1, 1);
    CHECK_FALSE(shortest_odd_path_nonneg(g, 0, 1).found());
    auto e = shortest_even_path_nonneg(g, 0, 1);
    CHECK(e.vertices == std::vector<int>{0, 2, 1});
    CHECK(e.weight == Rational(2));
  }

  TEST_CASE("single edge has no even path") {
    WeightedGraph g(2);
    g.add_edge(0, 1, 1);
    CHECK_FALSE(shortest_even_path_nonneg(g, 0, 1).found());
  }

  TEST_CASE("random non-negative graphs equal the oracle") {
    std::mt19937_64 rng(4);
    for (int it = 0; it < 400; ++it) {
      int n = 2 + it % 7;
      WeightedGraph g(n);
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
          if (rng() % 2) g.add_edge(u, v, static_cast<std::int64_t>(rng() % 4));
      auto odd = shortest_odd_path_nonneg(g, 0, 1);
      auto oo = oracle_odd_path(g, 0, 1);
      REQUIRE(odd.found() == oo.found());
      if (odd.found()) CHECK(odd.weight == oo.weight);
      auto even = shortest_even_path_nonneg(g, 0, 1);
      auto oe = oracle_even_path(g, 0, 1);
      REQUIRE(even.found() == oe.found());
      if (even.found()) CHECK(even.weight == oe.weight);
    }
  }
}

TEST_SUITE("parity-changing leap") {
  TEST_CASE("leap example at v2, v6") {
    Instance in = leap_example_instance();
    auto f = NegativeForest::build(in.g);
    // v2 = 3, v6 = 7, v7 = 8
    auto r = parity_changing_leap_min(in.g, f, 0, 3, 7);
    REQUIRE(r.found());
    CHECK(r.vertices == std::vector<int>{3, 8, 7});
    CHECK(r.weight == Rational(3));
  }

  TEST_CASE("same-parity leaps do not count") {
    // tree edge a-b; a-x-y-b closes an even cycle, a-z-b an odd one
    WeightedGraph g(5);
    g.add_edge(0, 1, -1);
    g.add_edge(0, 2, 1);
    g.add_edge(2, 3, 1);
    g.add_edge(3, 1, 1);
    auto f = NegativeForest::build(g);
    CHECK_FALSE(parity_changing_leap_min(g, f, 0, 0, 1).found());
    g.add_edge(0, 4, 5);
    g.add_edge(4, 1, 5);
    auto f2 = NegativeForest::build(g);
    auto r = parity_changing_leap_min(g, f2, 0, 0, 1);
    REQUIRE(r.found());
    CHECK(r.vertices == std::vector<int>{0, 4, 1});
  }

  TEST_CASE("a single edge across a two-edge tree path") {
    WeightedGraph g(3);
    g.add_edge(0, 2, -1);
    g.add_edge(2, 1, -1);
    g.add_edge(0, 1, 2);
    auto f = NegativeForest::build(g);
    auto r = parity_changing_leap_min(g, f, 0, 0, 1);
    REQUIRE(r.found());
    CHECK(r.weight == Rational(2));
    CHECK(r.length() == 1);
  }
}
