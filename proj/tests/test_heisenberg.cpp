#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "doctest.h"
#include "sclcone/heisenberg.hpp"
#include "sclcone/rational.hpp"

using namespace sclcone;

namespace {

std::set<std::int64_t> interval(std::int64_t lo, std::int64_t hi) {
  std::set<std::int64_t> s;
  for (auto r = lo; r <= hi; ++r) s.insert(r);
  return s;
}

// cyclic transition counts of w
std::map<std::string, int> transitions(const std::string& w) {
  std::map<std::string, int> n;
  for (std::size_t i = 0; i < w.size(); ++i) ++n[std::string{w[i], w[(i + 1) % w.size()]}];
  return n;
}

// Rotation classes of all strings of length 3(u+v) with the prescribed
// cyclic transition counts, by exhaustive scan.
std::set<std::string> words_by_scan(int u, int v) {
  const int n = 3 * (u + v);
  std::set<std::string> out;
  std::string w(n, 'a');
  std::function<void(int)> fill = [&](int i) {
    if (i == n) {
      auto t = transitions(w);
      if (t["ab"] == u && t["bc"] == u && t["ca"] == u && t["ac"] == v && t["cb"] == v && t["ba"] == v) {
        std::string best = w, r = w;
        for (int k = 1; k < n; ++k) {
          std::rotate(r.begin(), r.begin() + 1, r.end());
          best = std::min(best, r);
        }
        out.insert(best);
      }
      return;
    }
    for (char c : {'a', 'b', 'c'}) {
      w[i] = c;
      fill(i + 1);
    }
  };
  fill(0);
  return out;
}

}  // namespace

TEST_CASE("group law") {
  HeisenbergElement a{1, 0, 0}, b{0, 1, 0}, c{-1, -1, 0}, id{};
  CHECK(a * id == a);
  CHECK(a * a.inverse() == id);
  CHECK((a * b) * c == a * (b * c));
  HeisenbergElement comm = a * b * a.inverse() * b.inverse();
  CHECK(comm == HeisenbergElement{0, 0, 1});
  HeisenbergElement z{0, 0, 5};
  for (const auto& g : {a, b, c, a * b * b}) CHECK(g * z == z * g);
}

TEST_CASE("word enumeration") {
  CHECK(enumerate_words(1, 0) == std::vector<std::string>{"abc"});
  // three rotation classes: abacbc, abcacb and abcbac
  auto w11 = enumerate_words(1, 1);
  CHECK(std::set<std::string>(w11.begin(), w11.end()) == std::set<std::string>{"abacbc", "abcacb", "abcbac"});
  for (int u = 0; u <= 2; ++u)
    for (int v = 0; u + v <= 3; ++v) {
      if (u + v == 0) continue;
      auto words = enumerate_words(u, v);
      CHECK(std::set<std::string>(words.begin(), words.end()) == words_by_scan(u, v));
      CHECK(words.size() == words_by_scan(u, v).size());
    }
  CHECK(enumerate_words(0, 0).empty());
  CHECK_THROWS_AS(enumerate_words(5, 5, 8), ResourceLimitError);
  for (int u = 0; u <= 3; ++u)
    for (int v = 0; v + u <= 4; ++v)
      for (const auto& w : enumerate_words(u, v)) {
        auto n = transitions(w);
        CHECK(n["ab"] == u);
        CHECK(n["bc"] == u);
        CHECK(n["ca"] == u);
        CHECK(n["ac"] == v);
        CHECK(n["cb"] == v);
        CHECK(n["ba"] == v);
      }
}

TEST_CASE("word exponent") {
  CHECK(word_exponent("abc") == 0);
  CHECK(word_exponent("abcacb") == -1);
  CHECK(word_exponent("abacbc") == -1);
  CHECK(word_exponent("abcbac") == -1);
  CHECK_THROWS_AS(word_exponent("aab"), std::invalid_argument);
}

TEST_CASE("word exponent is invariant under rotation") {
  for (int u = 0; u <= 3; ++u)
    for (int v = 0; u + v <= 4; ++v)
      for (std::string w : enumerate_words(u, v)) {
        const auto f = word_exponent(w);
        for (std::size_t k = 0; k < w.size(); ++k) {
          std::rotate(w.begin(), w.begin() + 1, w.end());
          CHECK(word_exponent(w) == f);
        }
      }
}

TEST_CASE("S_uv examples") {
  CHECK(suv_bruteforce(1, 1) == std::set<std::int64_t>{-1});
  CHECK(suv_bruteforce(2, 1) == std::set<std::int64_t>{-1, 0});
  CHECK(suv_bruteforce(1, 2) == std::set<std::int64_t>{-3, -2});
  CHECK(suv_formula(1, 1) == IntInterval{-1, -1});
  CHECK(suv_formula(3, 3) == IntInterval{-6, 0});
  CHECK(suv_formula(2, 5) == IntInterval{-8, -4});
  CHECK_FALSE(suv_formula(0, 0).has_value());
}

TEST_CASE("brute force matches the interval formula") {
  for (int u = 0; u <= 6; ++u)
    for (int v = 0; u + v <= 6; ++v) {
      if (u + v == 0) continue;
      auto range = suv_formula(u, v);
      REQUIRE(range);
      CAPTURE(u);
      CAPTURE(v);
      CHECK(suv_bruteforce(u, v) == interval(range->lo, range->hi));
    }
}

TEST_CASE("S_uv symmetry") {
  for (int u = 0; u <= 4; ++u)
    for (int v = 0; u + v <= 6; ++v) {
      if (u + v == 0) continue;
      std::set<std::int64_t> mirrored;
      for (auto r : suv_bruteforce(v, u)) mirrored.insert(-r - (u + v));
      CHECK(suv_bruteforce(u, v) == mirrored);
    }
}

TEST_CASE("disk region") {
  CHECK(disk_region(1, 2, 2, 2));
  CHECK_FALSE(disk_region(1, 2, 2, 1));
  CHECK(disk_region(0, 1, 1, 0));
  for (int u = 0; u <= 12; ++u)
    for (int v = 0; v <= 12; ++v) {
      CAPTURE(u);
      CAPTURE(v);
      CHECK(disk_region(1, 2, u, v) == half_region_description(u, v));
    }
}
