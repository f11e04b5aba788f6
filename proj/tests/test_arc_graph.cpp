#include <random>
#include <set>

#include "doctest.h"
#include "sclcone/arc_graph.hpp"

using namespace sclcone;

namespace {

ArcSystem system_of(const char* text, int ka = 0, int kb = 0) {
  return ArcSystem(normalize(parse_chain(text, {FactorSpec{'a', ka}, FactorSpec{'b', kb}})));
}

RationalVector basis(const ArcSystem& sys, int factor, int from, int to, Rational scale = 1) {
  RationalVector v(sys.turn_count(factor));
  int t = sys.turn_index(factor, from, to);
  REQUIRE(t >= 0);
  v[t] = scale;
  return v;
}

// arc of the given exponent in factor 0
int arc_with(const ArcSystem& sys, int factor, std::int64_t exponent) {
  for (const auto& a : sys.arcs(factor))
    if (a.exponent == exponent) return a.id;
  FAIL("no such arc");
  return -1;
}

}  // namespace

TEST_CASE("arcs and turns of abab^-1") {
  ArcSystem sys = system_of("abab^-1");
  CHECK(sys.arc_count(0) == 2);
  CHECK(sys.arc_count(1) == 2);
  CHECK(sys.turn_count(0) == 4);
  CHECK(sys.arcs(0)[0].exponent == 1);
  CHECK(sys.arcs(0)[1].exponent == 1);
  std::set<std::int64_t> b_exp{sys.arcs(1)[0].exponent, sys.arcs(1)[1].exponent};
  CHECK(b_exp == std::set<std::int64_t>{-1, 1});
}

TEST_CASE("arcs and turns of the commutator") {
  ArcSystem sys = system_of("[a,b]");
  REQUIRE(sys.arc_count(0) == 2);
  CHECK(sys.turn_count(0) == 4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) CHECK(sys.turn_index(0, i, j) >= 0);
}

TEST_CASE("self-loop arcs only carry diagonal turns") {
  ArcSystem sys = system_of("a^2 + a^-2");
  REQUIRE(sys.arc_count(0) == 2);
  CHECK(sys.arc_count(1) == 0);
  CHECK(sys.turn_count(0) == 2);
  for (const auto& t : sys.turns(0)) CHECK(t.from == t.to);
  for (const auto& a : sys.arcs(0)) CHECK(a.self_loop);
  CHECK(sys.turn_index(0, 0, 1) == -1);

  ArcSystem mixed = system_of("a^2 + ab^-1");
  CHECK(mixed.turn_count(0) == 2);
  for (std::size_t t = 0; t < mixed.turn_count(0); ++t) {
    const Turn& turn = mixed.turns(0)[t];
    CHECK(turn.from == turn.to);
    CHECK(mixed.is_self_loop_turn(0, static_cast<int>(t)) == mixed.arcs(0)[turn.from].self_loop);
  }
}

TEST_CASE("next/prev are inverse and alternate factors") {
  for (const char* s : {"aba^-2b^-2 + ab", "a^2ba^-1b^-1a^-2bab^-1", "[a,b] + abab^-1"}) {
    ArcSystem sys = system_of(s, 7, 9);
    for (int f = 0; f < 2; ++f) {
      for (const auto& a : sys.arcs(f)) {
        if (a.self_loop) continue;
        int n = sys.next(f, a.id);
        CHECK(sys.prev(1 - f, n) == a.id);
        CHECK(sys.arcs(1 - f)[n].word == a.word);
      }
    }
  }
}

TEST_CASE("partner is an involution") {
  for (const char* s : {"aba^-2b^-2 + ab", "aba^2b^2a^3b^3a^-5b^-5", "[a,b] + a^3 + ab", "aba^-2b^-2a^2b^2a^-1b^-1"}) {
    ArcSystem sys = system_of(s, 0, 0);
    for (int f = 0; f < 2; ++f) {
      for (std::size_t t = 0; t < sys.turn_count(f); ++t) {
        int p = sys.partner(f, static_cast<int>(t));
        if (sys.is_self_loop_turn(f, static_cast<int>(t))) {
          CHECK(p == -1);
          continue;
        }
        REQUIRE(p >= 0);
        const Turn& turn = sys.turns(f)[t];
        const Turn& other = sys.turns(1 - f)[p];
        CHECK(other.to == sys.next(f, turn.from));
        CHECK(other.from == sys.prev(f, turn.to));
        CHECK(sys.partner(1 - f, p) == static_cast<int>(t));
      }
    }
  }
}

TEST_CASE("boundary map examples") {
  ArcSystem sys = system_of("[a,b]");
  int a = arc_with(sys, 0, 1), ai = arc_with(sys, 0, -1);
  RationalVector d = boundary_map(sys, 0, basis(sys, 0, a, ai));
  CHECK(d[a] == 1);
  CHECK(d[ai] == -1);

  RationalVector cycle = basis(sys, 0, a, ai);
  cycle[sys.turn_index(0, ai, a)] = 1;
  for (const auto& x : boundary_map(sys, 0, cycle)) CHECK(x == 0);
  for (const auto& x : boundary_map(sys, 0, basis(sys, 0, a, a, 2))) CHECK(x == 0);
}

TEST_CASE("winding examples") {
  ArcSystem sys = system_of("a^2ba^-1b^-1", 5, 0);
  int a2 = arc_with(sys, 0, 2), ai = arc_with(sys, 0, -1);
  CHECK(winding(sys, 0, basis(sys, 0, a2, ai)) == make_rational(1, 2));

  ArcSystem comm = system_of("[a,b]");
  int a = arc_with(comm, 0, 1), b = arc_with(comm, 0, -1);
  RationalVector cycle = basis(comm, 0, a, b);
  cycle[comm.turn_index(0, b, a)] = 1;
  CHECK(winding(comm, 0, cycle) == 0);

  ArcSystem prod = system_of("ab", 3, 3);
  CHECK(winding(prod, 0, basis(prod, 0, 0, 0, 3)) == 3);
  IntVector three{3};
  CHECK(winding(prod, 0, std::span<const std::int64_t>(three)) == 3);
  CHECK_THROWS(winding(sys, 0, std::span<const std::int64_t>(IntVector{0, 1, 0, 0})));
}

TEST_CASE("turn norm examples") {
  ArcSystem comm = system_of("[a,b]");
  int a = arc_with(comm, 0, 1), b = arc_with(comm, 0, -1);
  RationalVector cycle = basis(comm, 0, a, b);
  cycle[comm.turn_index(0, b, a)] = 1;
  CHECK(turn_norm(comm, 0, cycle) == 2);

  ArcSystem loops = system_of("a^2 + a^-2");
  CHECK(turn_norm(loops, 0, basis(loops, 0, 0, 0, 5)) == 0);

  ArcSystem prod = system_of("ab", 0, 0);
  CHECK(turn_norm(prod, 0, basis(prod, 0, 0, 0, 7)) == 7);

  RationalVector negative = cycle;
  negative[0] = -1;
  CHECK_THROWS_AS(turn_norm(comm, 0, negative), std::invalid_argument);
}

TEST_CASE("boundary map and winding are linear") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> num(-20, 20), den(1, 9);
  ArcSystem sys = system_of("aba^-2b^-2 + ab + a^3b^2", 0, 0);
  for (int f = 0; f < 2; ++f) {
    const std::size_t n = sys.turn_count(f);
    for (int trial = 0; trial < 50; ++trial) {
      RationalVector v(n), w(n), sum(n), scaled(n);
      Rational q = make_rational(num(rng), den(rng));
      for (std::size_t i = 0; i < n; ++i) {
        v[i] = make_rational(num(rng), den(rng));
        w[i] = make_rational(num(rng), den(rng));
        sum[i] = v[i] + w[i];
        scaled[i] = q * v[i];
      }
      CHECK(winding(sys, f, sum) == winding(sys, f, v) + winding(sys, f, w));
      CHECK(winding(sys, f, scaled) == q * winding(sys, f, v));
      RationalVector dv = boundary_map(sys, f, v), dw = boundary_map(sys, f, w);
      RationalVector ds = boundary_map(sys, f, sum), dq = boundary_map(sys, f, scaled);
      for (std::size_t i = 0; i < dv.size(); ++i) {
        CHECK(ds[i] == dv[i] + dw[i]);
        CHECK(dq[i] == q * dv[i]);
      }
    }
  }
}

TEST_CASE("closed integer vectors have integer winding") {
  std::mt19937 rng(11);
  ArcSystem sys = system_of("aba^-2b^-2 + a^3b^-1a^-2b", 0, 0);
  const int f = 0;
  const int n = static_cast<int>(sys.arc_count(f));
  std::uniform_int_distribution<int> pick(0, n - 1), len(1, 6);
  for (int trial = 0; trial < 200; ++trial) {
    // sum of random closed walks
    RationalVector v(sys.turn_count(f));
    int start = pick(rng), cur = start;
    for (int step = len(rng); step > 0; --step) {
      int nxt = pick(rng);
      v[sys.turn_index(f, cur, nxt)] += 1;
      cur = nxt;
    }
    v[sys.turn_index(f, cur, start)] += 1;
    for (const auto& x : boundary_map(sys, f, v)) REQUIRE(x == 0);
    CHECK(is_integer(winding(sys, f, v)));
  }
}

TEST_CASE("json dump mentions every turn") {
  ArcSystem sys = system_of("[a,b]");
  std::string js = sys.to_json();
  CHECK(js.find("\"partner\"") != std::string::npos);
  CHECK(js.find("\"turns\"") != std::string::npos);
}
