#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace sclcone {

/// Integer Heisenberg group element with (p,q,r)(p',q',r') = (p+p', q+q', r+r'+pq').
struct HeisenbergElement {
  std::int64_t p = 0, q = 0, r = 0;

  HeisenbergElement operator*(const HeisenbergElement& o) const { return {p + o.p, q + o.q, r + o.r + p * o.q}; }
  HeisenbergElement inverse() const { return {-p, -q, -r + p * q}; }
  bool operator==(const HeisenbergElement&) const = default;
};

/// Cyclic words over {a,b,c} (given by their lexicographically least rotation)
/// with exactly u occurrences of each of ab, bc, ca and v of each of ac, cb, ba
/// as cyclic subwords. Throws ResourceLimitError when u + v exceeds `max_length`.
std::vector<std::string> enumerate_words(int u, int v, int max_length = 8);

/// f(w) with w = (abc)^k [a,b]^f(w), computed from a = (1,0,0), b = (0,1,0),
/// c = (-1,-1,0). Throws std::invalid_argument unless w has equal letter counts.
std::int64_t word_exponent(const std::string& w);

std::set<std::int64_t> suv_bruteforce(int u, int v, int max_length = 8);

struct IntInterval {
  std::int64_t lo = 0, hi = 0;
  bool operator==(const IntInterval&) const = default;
};

/// Closed interval claimed for S_{u,v}; nullopt when u = v = 0.
std::optional<IntInterval> suv_formula(int u, int v);

/// Some integer r in suv_formula(u,v) solves m(u+v) + n r = 0.
bool disk_region(std::int64_t m, std::int64_t n, int u, int v);

/// Set description of the m/n = 1/2 region: 1 <= v <= u <= v² or u < v <= u², with u ≡ v mod 2.
bool half_region_description(int u, int v);

}  // namespace sclcone
