#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sclcone/rational.hpp"

namespace sclcone {

/// One cyclic factor of the free product. order 0 encodes the infinite cyclic group.
struct FactorSpec {
  char name = 'a';
  int order = 0;
};

using FactorPair = std::array<FactorSpec, 2>;

/// Throws std::invalid_argument unless the pair has distinct names and orders in {0} u [2, inf).
void validate_factors(const FactorPair& factors);

struct Syllable {
  int factor = 0;  // 0 or 1, index into the FactorPair
  std::int64_t exponent = 0;
  auto operator<=>(const Syllable&) const = default;
};

/// A cyclic word. After normalization consecutive syllables (cyclically)
/// alternate between the two factors, or the word is a single syllable.
struct Word {
  std::vector<Syllable> syllables;
  auto operator<=>(const Word&) const = default;
  bool is_self_loop() const { return syllables.size() == 1; }
};

struct Term {
  Word word;
  Rational coefficient;
};

struct Chain {
  std::vector<Term> terms;
  FactorPair factors;
};

class ChainParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Grammar: terms joined by '+'/'-', each an optional "p/q*" coefficient and a
/// word. Words juxtapose generators `g`, powers `g^k`, uppercase inverses,
/// parenthesised groups and commutators `[x,y]`; any atom may take `^k`.
Chain parse_chain(std::string_view text, const FactorPair& factors);

/// Picks generator names for a chain text: {a,b} when the letters fit, else the
/// letters in alphabetical order. Throws ChainParseError on three or more letters.
std::array<char, 2> infer_generators(std::string_view text);

/// Reduces exponents to the representative of least absolute value (ties positive).
std::int64_t reduce_exponent(std::int64_t exponent, int order);

Word inverse(const Word& w, const FactorPair& factors);

/// Lexicographically least cyclic rotation of the syllables.
Word canonical_rotation(const Word& w);

/// Canonical form of a chain: reduced exponents, merged syllables, torsion and
/// empty words dropped, negative terms replaced by inverse words, rotations
/// canonicalised and equal words merged. Dropped torsion words are reported
/// through `warnings` when given.
Chain normalize(const Chain& chain, std::vector<std::string>* warnings = nullptr);

enum class Homology { Trivial, Nontrivial };

/// Real-homology test: each infinite-order generator must have weighted exponent sum zero.
Homology homological_check(const Chain& chain);

std::string render_word(const Word& w, const FactorPair& factors);
std::string render(const Chain& chain);

/// Same chain with different factor orders (names kept).
Chain with_orders(const Chain& chain, int order_a, int order_b);

}  // namespace sclcone
