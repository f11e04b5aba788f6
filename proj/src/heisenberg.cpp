#include "sclcone/heisenberg.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <stdexcept>

#include "sclcone/rational.hpp"

namespace sclcone {

namespace {

std::string least_rotation(const std::string& w) {
  std::string best = w;
  for (std::size_t i = 1; i < w.size(); ++i) best = std::min(best, w.substr(i) + w.substr(0, i));
  return best;
}

}  // namespace

std::vector<std::string> enumerate_words(int u, int v, int max_length) {
  if (u < 0 || v < 0) throw std::invalid_argument("enumerate_words needs u, v >= 0");
  if (u + v > max_length)
    throw ResourceLimitError("enumerate_words: u + v = " + std::to_string(u + v) + " exceeds the cap " +
                             std::to_string(max_length));
  if (u + v == 0) return {};
  // remaining[x][y]: transitions x -> y still to be used.
  std::array<std::array<int, 3>, 3> remaining{};
  remaining[0][1] = remaining[1][2] = remaining[2][0] = u;
  remaining[0][2] = remaining[2][1] = remaining[1][0] = v;
  const std::size_t length = 3 * static_cast<std::size_t>(u + v);

  std::set<std::string> words;
  std::string w = "a";
  std::function<void()> extend = [&]() {
    const int x = w.back() - 'a';
    if (w.size() == length) {
      if (remaining[x][0] == 1) words.insert(least_rotation(w));
      return;
    }
    for (int y = 0; y < 3; ++y) {
      if (remaining[x][y] == 0) continue;
      --remaining[x][y];
      w.push_back(static_cast<char>('a' + y));
      extend();
      w.pop_back();
      ++remaining[x][y];
    }
  };
  extend();
  return {words.begin(), words.end()};
}

std::int64_t word_exponent(const std::string& w) {
  static const std::array<HeisenbergElement, 3> gens{{{1, 0, 0}, {0, 1, 0}, {-1, -1, 0}}};
  std::array<std::size_t, 3> counts{};
  HeisenbergElement prod;
  for (char ch : w) {
    if (ch < 'a' || ch > 'c') throw std::invalid_argument(std::string("word_exponent: unexpected letter '") + ch + "'");
    ++counts[ch - 'a'];
    prod = prod * gens[ch - 'a'];
  }
  if (counts[0] != counts[1] || counts[1] != counts[2])
    throw std::invalid_argument("word_exponent needs equal numbers of a, b and c");
  return prod.r;
}

std::set<std::int64_t> suv_bruteforce(int u, int v, int max_length) {
  std::set<std::int64_t> out;
  for (const auto& w : enumerate_words(u, v, max_length)) out.insert(word_exponent(w));
  return out;
}

std::optional<IntInterval> suv_formula(int u, int v) {
  if (u < 0 || v < 0) throw std::invalid_argument("suv_formula needs u, v >= 0");
  if (u == 0 && v == 0) return std::nullopt;
  const std::int64_t U = u, V = v;
  if (u == v) return IntInterval{-V * (V + 1) / 2, V * (V - 3) / 2};
  if (u > v) return IntInterval{-V * (V + 1) / 2, V * (V - 1) / 2};
  return IntInterval{-U * (U + 1) / 2 - V, U * (U - 1) / 2 - V};
}

bool disk_region(std::int64_t m, std::int64_t n, int u, int v) {
  const auto range = suv_formula(u, v);
  if (!range) return false;
  const std::int64_t lhs = m * (u + v);
  if (n == 0) return lhs == 0;
  if (lhs % n != 0) return false;
  const std::int64_t r = -lhs / n;
  return range->lo <= r && r <= range->hi;
}

bool half_region_description(int u, int v) {
  if ((u - v) % 2 != 0) return false;
  const std::int64_t U = u, V = v;
  return (1 <= V && V <= U && U <= V * V) || (U < V && V <= U * U);
}

}  // namespace sclcone
