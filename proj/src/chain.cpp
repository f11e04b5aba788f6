#include "sclcone/chain.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

namespace sclcone {

void validate_factors(const FactorPair& factors) {
  for (const auto& f : factors) {
    if (!std::islower(static_cast<unsigned char>(f.name)))
      throw std::invalid_argument(std::string("generator name must be a lowercase letter, got '") + f.name + "'");
    if (f.order != 0 && f.order < 2)
      throw std::invalid_argument("factor order must be 0 (infinite) or at least 2, got " + std::to_string(f.order));
  }
  if (factors[0].name == factors[1].name)
    throw std::invalid_argument(std::string("factor names must differ, both are '") + factors[0].name + "'");
}

namespace {

constexpr std::size_t kMaxParsedSyllables = 1'000'000;

class Parser {
 public:
  Parser(std::string_view text, const FactorPair& factors) : text_(text), factors_(factors) {}

  Chain parse() {
    Chain chain;
    chain.factors = factors_;
    skip_ws();
    if (at_end()) return chain;
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    for (;;) {
      chain.terms.push_back(parse_term(negative));
      skip_ws();
      if (at_end()) break;
      char c = peek();
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      negative = c == '-';
      ++pos_;
    }
    return chain;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ChainParseError(what + " at position " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  std::string digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Term parse_term(bool negative) {
    skip_ws();
    Term term;
    term.coefficient = 1;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      std::string num = digits();
      std::string den = "1";
      skip_ws();
      if (!at_end() && peek() == '/') {
        ++pos_;
        skip_ws();
        den = digits();
        if (den.empty()) fail("malformed rational coefficient");
      }
      try {
        term.coefficient = parse_rational(num + "/" + den);
      } catch (const std::invalid_argument&) {
        fail("malformed rational coefficient");
      }
      skip_ws();
      if (at_end() || peek() != '*') fail("expected '*' after coefficient");
      ++pos_;
    }
    term.word.syllables = parse_word();
    if (term.word.syllables.empty()) fail("expected a word");
    if (negative) term.coefficient = -term.coefficient;
    return term;
  }

  std::vector<Syllable> parse_word() {
    std::vector<Syllable> out;
    for (;;) {
      skip_ws();
      if (at_end()) break;
      char c = peek();
      if (c == '+' || c == '-' || c == ',' || c == ']' || c == ')') break;
      auto item = parse_item();
      out.insert(out.end(), item.begin(), item.end());
      if (out.size() > kMaxParsedSyllables) fail("word too long");
    }
    return out;
  }

  static std::vector<Syllable> invert(std::vector<Syllable> s) {
    std::reverse(s.begin(), s.end());
    for (auto& x : s) x.exponent = -x.exponent;
    return s;
  }

  std::vector<Syllable> parse_item() {
    std::vector<Syllable> base;
    char c = peek();
    if (c == '[') {
      ++pos_;
      auto x = parse_word();
      skip_ws();
      if (at_end() || peek() != ',') fail("expected ',' in commutator");
      ++pos_;
      auto y = parse_word();
      skip_ws();
      if (at_end() || peek() != ']') fail("expected ']'");
      ++pos_;
      if (x.empty() || y.empty()) fail("empty commutator entry");
      base = x;
      base.insert(base.end(), y.begin(), y.end());
      auto xi = invert(x), yi = invert(y);
      base.insert(base.end(), xi.begin(), xi.end());
      base.insert(base.end(), yi.begin(), yi.end());
    } else if (c == '(') {
      ++pos_;
      base = parse_word();
      skip_ws();
      if (at_end() || peek() != ')') fail("expected ')'");
      ++pos_;
      if (base.empty()) fail("empty parentheses");
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      ++pos_;
      char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
      int factor = -1;
      for (int i = 0; i < 2; ++i)
        if (factors_[i].name == lower) factor = i;
      if (factor < 0) {
        --pos_;
        fail(std::string("unknown generator '") + lower + "'");
      }
      base.push_back({factor, std::isupper(static_cast<unsigned char>(c)) ? -1 : 1});
    } else {
      fail(std::string("unexpected character '") + c + "'");
    }

    skip_ws();
    if (at_end() || peek() != '^') return base;
    ++pos_;
    skip_ws();
    bool neg = false;
    if (!at_end() && (peek() == '-' || peek() == '+')) {
      neg = peek() == '-';
      ++pos_;
    }
    std::string ds = digits();
    if (ds.empty()) fail("expected exponent after '^'");
    if (ds.size() > 12) fail("exponent too large");
    std::int64_t k = std::stoll(ds);
    if (k == 0) fail("zero exponent");
    if (neg) base = invert(base);
    if (base.size() == 1) {
      base[0].exponent *= k;
      return base;
    }
    if (base.size() * static_cast<std::size_t>(k) > kMaxParsedSyllables) fail("word too long");
    std::vector<Syllable> out;
    out.reserve(base.size() * k);
    for (std::int64_t i = 0; i < k; ++i) out.insert(out.end(), base.begin(), base.end());
    return out;
  }

  std::string_view text_;
  const FactorPair& factors_;
  std::size_t pos_ = 0;
};

}  // namespace

Chain parse_chain(std::string_view text, const FactorPair& factors) {
  validate_factors(factors);
  return Parser(text, factors).parse();
}

std::array<char, 2> infer_generators(std::string_view text) {
  std::set<char> letters;
  for (char c : text)
    if (std::isalpha(static_cast<unsigned char>(c))) letters.insert(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (letters.size() > 2) {
    std::string all(letters.begin(), letters.end());
    throw ChainParseError("more than two distinct generators (" + all + "); only two-factor products are supported");
  }
  if (std::all_of(letters.begin(), letters.end(), [](char c) { return c == 'a' || c == 'b'; })) return {'a', 'b'};
  if (letters.size() == 1) letters.insert(*letters.begin() == 'a' ? 'b' : 'a');
  return {*letters.begin(), *std::next(letters.begin())};
}

std::int64_t reduce_exponent(std::int64_t exponent, int order) {
  if (order == 0) return exponent;
  std::int64_t r = exponent % order;
  if (r < 0) r += order;
  // r in [0, order); pick the representative of least absolute value, ties positive.
  if (2 * r > order) r -= order;
  return r;
}

Word inverse(const Word& w, const FactorPair& factors) {
  Word out;
  out.syllables.assign(w.syllables.rbegin(), w.syllables.rend());
  for (auto& s : out.syllables) s.exponent = reduce_exponent(-s.exponent, factors[s.factor].order);
  return out;
}

Word canonical_rotation(const Word& w) {
  const auto& s = w.syllables;
  const std::size_t n = s.size();
  if (n <= 1) return w;
  std::size_t best = 0;
  for (std::size_t r = 1; r < n; ++r) {
    for (std::size_t i = 0; i < n; ++i) {
      const auto& x = s[(r + i) % n];
      const auto& y = s[(best + i) % n];
      if (x < y) {
        best = r;
        break;
      }
      if (y < x) break;
    }
  }
  Word out;
  out.syllables.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.syllables.push_back(s[(best + i) % n]);
  return out;
}

namespace {

// Reduces and merges syllables, including across the cyclic seam.
Word reduce_cyclic(const Word& w, const FactorPair& factors) {
  std::vector<Syllable> stack;
  for (Syllable s : w.syllables) {
    s.exponent = reduce_exponent(s.exponent, factors[s.factor].order);
    if (s.exponent == 0) continue;
    if (!stack.empty() && stack.back().factor == s.factor) {
      auto& top = stack.back();
      top.exponent = reduce_exponent(top.exponent + s.exponent, factors[s.factor].order);
      if (top.exponent == 0) stack.pop_back();
    } else {
      stack.push_back(s);
    }
  }
  std::size_t front = 0;
  while (stack.size() - front >= 2 && stack[front].factor == stack.back().factor) {
    auto& f = stack[front];
    f.exponent = reduce_exponent(f.exponent + stack.back().exponent, factors[f.factor].order);
    stack.pop_back();
    if (f.exponent == 0) ++front;
  }
  Word out;
  out.syllables.assign(stack.begin() + static_cast<std::ptrdiff_t>(front), stack.end());
  return out;
}

}  // namespace

Chain normalize(const Chain& chain, std::vector<std::string>* warnings) {
  std::map<Word, Rational> merged;
  for (const auto& term : chain.terms) {
    if (term.coefficient == 0) continue;
    Word w = reduce_cyclic(term.word, chain.factors);
    if (w.syllables.empty()) continue;
    if (w.is_self_loop() && chain.factors[w.syllables[0].factor].order != 0) {
      if (warnings)
        warnings->push_back("dropped torsion term " + render_word(w, chain.factors) + " (vanishes in B1H)");
      continue;
    }
    Rational c = term.coefficient;
    if (c < 0) {
      w = inverse(w, chain.factors);
      c = -c;
    }
    merged[canonical_rotation(w)] += c;
  }
  Chain out;
  out.factors = chain.factors;
  for (auto& [w, c] : merged)
    if (c != 0) out.terms.push_back({w, c});
  return out;
}

Homology homological_check(const Chain& chain) {
  std::array<Rational, 2> sums;
  for (const auto& term : chain.terms)
    for (const auto& s : term.word.syllables) sums[s.factor] += term.coefficient * make_rational(s.exponent);
  for (int i = 0; i < 2; ++i)
    if (chain.factors[i].order == 0 && sums[i] != 0) return Homology::Nontrivial;
  return Homology::Trivial;
}

std::string render_word(const Word& w, const FactorPair& factors) {
  std::string out;
  for (const auto& s : w.syllables) {
    out += factors[s.factor].name;
    if (s.exponent != 1) out += "^" + std::to_string(s.exponent);
  }
  return out;
}

std::string render(const Chain& chain) {
  std::string out;
  bool first = true;
  for (const auto& term : chain.terms) {
    Rational c = term.coefficient;
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    c = abs(c);
    if (c != 1) out += to_string(c) + "*";
    out += render_word(term.word, chain.factors);
  }
  return out;
}

Chain with_orders(const Chain& chain, int order_a, int order_b) {
  Chain out = chain;
  out.factors[0].order = order_a;
  out.factors[1].order = order_b;
  validate_factors(out.factors);
  return out;
}

}  // namespace sclcone
