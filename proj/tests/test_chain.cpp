#include "doctest.h"
#include "sclcone/chain.hpp"
#include "sclcone/scl_engine.hpp"

using namespace sclcone;

namespace {

FactorPair ab(int ka = 0, int kb = 0) { return {FactorSpec{'a', ka}, FactorSpec{'b', kb}}; }

Word word(std::initializer_list<std::pair<int, std::int64_t>> s) {
  Word w;
  for (auto [f, e] : s) w.syllables.push_back({f, e});
  return w;
}

}  // namespace

TEST_CASE("parse: sums of words") {
  Chain c = parse_chain("aba^-2b^-2 + ab", ab());
  REQUIRE(c.terms.size() == 2);
  CHECK(c.terms[0].word == word({{0, 1}, {1, 1}, {0, -2}, {1, -2}}));
  CHECK(c.terms[0].coefficient == 1);
  CHECK(c.terms[1].word == word({{0, 1}, {1, 1}}));
  CHECK(c.terms[1].coefficient == 1);
}

TEST_CASE("parse: commutator shorthand") {
  Chain c = parse_chain("[a,b]", ab());
  REQUIRE(c.terms.size() == 1);
  CHECK(c.terms[0].word == word({{0, 1}, {1, 1}, {0, -1}, {1, -1}}));
}

TEST_CASE("parse: coefficient and uppercase inverse") {
  Chain c = parse_chain("1/2*aB", ab());
  REQUIRE(c.terms.size() == 1);
  CHECK(c.terms[0].word == word({{0, 1}, {1, -1}}));
  CHECK(c.terms[0].coefficient == make_rational(1, 2));
}

TEST_CASE("parse: subtraction, groups and powers") {
  Chain c = parse_chain("ab - 2/3*(ab)^2", ab());
  REQUIRE(c.terms.size() == 2);
  CHECK(c.terms[1].coefficient == make_rational(-2, 3));
  CHECK(c.terms[1].word == word({{0, 1}, {1, 1}, {0, 1}, {1, 1}}));
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_chain("ac", ab()), ChainParseError);
  CHECK_THROWS_AS(parse_chain("a^^", ab()), ChainParseError);
  CHECK_THROWS_AS(parse_chain("a^0b", ab()), ChainParseError);
  CHECK_THROWS_AS(parse_chain("1/0*ab", ab()), std::invalid_argument);
  CHECK_THROWS_AS(parse_chain("ab +", ab()), ChainParseError);
  CHECK_THROWS_AS(infer_generators("abc"), ChainParseError);
  CHECK_THROWS_AS(validate_factors(ab(1, 0)), std::invalid_argument);
  CHECK_THROWS_AS(validate_factors({FactorSpec{'a', 0}, FactorSpec{'a', 0}}), std::invalid_argument);
}

TEST_CASE("generator inference") {
  CHECK(infer_generators("a^2ta^-2t^-1") == std::array<char, 2>{'a', 't'});
  CHECK(infer_generators("ab") == std::array<char, 2>{'a', 'b'});
  CHECK(infer_generators("xY") == std::array<char, 2>{'x', 'y'});
}

TEST_CASE("exponent representatives") {
  CHECK(reduce_exponent(3, 2) == 1);
  CHECK(reduce_exponent(-1, 2) == 1);
  CHECK(reduce_exponent(2, 4) == 2);
  CHECK(reduce_exponent(-2, 4) == 2);
  CHECK(reduce_exponent(-2, 5) == -2);
  CHECK(reduce_exponent(4, 5) == -1);
  CHECK(reduce_exponent(-7, 0) == -7);
}

TEST_CASE("normalize: reduction by hand") {
  // a^3 -> a, a^-1 -> a (order 2), b free.
  Chain c = normalize(parse_chain("a^3 b a^-1 b^-1", ab(2, 0)));
  REQUIRE(c.terms.size() == 1);
  CHECK(render(c) == render(normalize(parse_chain("abab^-1", ab(2, 0)))));
}

TEST_CASE("normalize: cyclic merge and torsion removal") {
  Chain c = normalize(parse_chain("a b b^-1 a", ab()));
  REQUIRE(c.terms.size() == 1);
  CHECK(c.terms[0].word == word({{0, 2}}));

  std::vector<std::string> warnings;
  Chain t = normalize(parse_chain("a^2", ab(2, 0)), &warnings);
  CHECK(t.terms.empty());

  Chain u = normalize(parse_chain("a^2 + ab", ab(3, 3)), &warnings);
  CHECK(u.terms.size() == 1);
  CHECK_FALSE(warnings.empty());
}

TEST_CASE("normalize: negative coefficients become inverse words") {
  Chain c = normalize(parse_chain("-ab", ab()));
  REQUIRE(c.terms.size() == 1);
  CHECK(c.terms[0].coefficient == 1);
  CHECK(c.terms[0].word == canonical_rotation(inverse(word({{0, 1}, {1, 1}}), ab())));
}

TEST_CASE("normalize: rotations merge") {
  Chain c = normalize(parse_chain("ab + ba + 1/2*[a,b] + 1/2*a^-1b^-1ab", ab()));
  REQUIRE(c.terms.size() == 2);
  Rational total = c.terms[0].coefficient + c.terms[1].coefficient;
  CHECK(total == 3);
}

TEST_CASE("normalize is idempotent and round-trips through render") {
  const char* samples[] = {"aba^-2b^-2 + ab", "[a,b]", "1/2*aB - 3/4*ba^2", "a^5b^-7ab", "a^2 + a^-2", "2*abab^-1"};
  for (int ka : {0, 2, 3, 5}) {
    for (int kb : {0, 2, 7}) {
      for (const char* s : samples) {
        CAPTURE(s);
        Chain once = normalize(parse_chain(s, ab(ka, kb)));
        Chain twice = normalize(once);
        CHECK(render(once) == render(twice));
        Chain back = normalize(parse_chain(render(once), ab(ka, kb)));
        CHECK(render(back) == render(once));
      }
    }
  }
}

TEST_CASE("homological check") {
  CHECK(homological_check(normalize(parse_chain("ab", ab(2, 3)))) == Homology::Trivial);
  CHECK(homological_check(normalize(parse_chain("ab", ab(0, 3)))) == Homology::Nontrivial);
  FactorPair at{FactorSpec{'a', 0}, FactorSpec{'t', 0}};
  CHECK(homological_check(normalize(parse_chain("a^2ta^-2t^-1", at))) == Homology::Trivial);
  CHECK(homological_check(normalize(parse_chain("ab + a^-1b^-1", ab()))) == Homology::Trivial);
  CHECK(homological_check(normalize(parse_chain("1/2*a^2 + a^-1", ab()))) == Homology::Trivial);
}

TEST_CASE("normalization preserves the value under exponent shifts") {
  const int ka = 5, kb = 7;
  Chain plain = parse_chain("aba^-2b^-2 + ab", ab(ka, kb));
  Chain shifted = parse_chain("a^6b^8a^3b^-9 + a^-4b", ab(ka, kb));
  CHECK(compute_scl(plain).value == compute_scl(shifted).value);
}

TEST_CASE("with_orders keeps names") {
  Chain c = with_orders(parse_chain("xy", {FactorSpec{'x', 0}, FactorSpec{'y', 0}}), 4, 6);
  CHECK(c.factors[0].name == 'x');
  CHECK(c.factors[0].order == 4);
  CHECK(c.factors[1].order == 6);
}
