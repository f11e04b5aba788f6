#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "sclcone/chain.hpp"
#include "sclcone/rational.hpp"

namespace sclcone {

/// One syllable of a normalized chain, i.e. a component of L minus the wedge
/// preimage that maps into a single factor.
struct Arc {
  int id = 0;  // index within its factor
  int factor = 0;
  std::int64_t exponent = 0;
  int word = 0;
  int position = 0;
  bool self_loop = false;
};

/// Ordered pair of arcs of one factor: a cut arc running from `from` to `to`,
/// or (on the diagonal of a self-loop arc) a covering degree.
struct Turn {
  int from = 0;
  int to = 0;
};

/// Combinatorial encoding of a normalized, homologically trivial chain.
/// Immutable after construction.
class ArcSystem {
 public:
  explicit ArcSystem(const Chain& normalized);

  const Chain& chain() const { return chain_; }
  int order(int factor) const { return chain_.factors[factor].order; }

  const std::vector<Arc>& arcs(int factor) const { return arcs_[factor]; }
  const std::vector<Turn>& turns(int factor) const { return turns_[factor]; }
  std::size_t arc_count(int factor) const { return arcs_[factor].size(); }
  std::size_t turn_count(int factor) const { return turns_[factor].size(); }

  /// Index of turn (from, to), or -1 when the pair is not a turn.
  int turn_index(int factor, int from, int to) const;

  /// Arc of the other factor following / preceding `arc` along its word. Undefined for self-loops.
  int next(int factor, int arc) const { return next_[factor][arc]; }
  int prev(int factor, int arc) const { return prev_[factor][arc]; }

  /// Gluing partner in the other factor: (prev(to), next(from)). -1 for self-loop turns.
  int partner(int factor, int turn) const { return partner_[factor][turn]; }

  const Rational& coefficient(int word) const { return chain_.terms[word].coefficient; }
  std::size_t word_count() const { return chain_.terms.size(); }

  bool is_self_loop_turn(int factor, int turn) const;

  /// Contribution of a turn to the cut-arc count: 0 on self-loop diagonals, 1 otherwise.
  int norm_weight(int factor, int turn) const { return is_self_loop_turn(factor, turn) ? 0 : 1; }

  std::string turn_label(int factor, int turn) const;
  std::string arc_label(int factor, int arc) const;

  /// Debug dump: arcs, turns, partner pairing.
  std::string to_json() const;

 private:
  Chain chain_;
  std::array<std::vector<Arc>, 2> arcs_;
  std::array<std::vector<Turn>, 2> turns_;
  std::array<std::vector<int>, 2> turn_lookup_;  // from * arcs + to -> turn or -1
  std::array<std::vector<int>, 2> next_, prev_;
  std::array<std::vector<int>, 2> partner_;
};

/// ∂(τ,τ') = τ - τ'; returns the arc-indexed image.
RationalVector boundary_map(const ArcSystem& sys, int factor, std::span<const Rational> v);

/// Σ v(τ,τ')·(t_τ + t_τ')/2.
Rational winding(const ArcSystem& sys, int factor, std::span<const Rational> v);
std::int64_t winding(const ArcSystem& sys, int factor, std::span<const std::int64_t> v);

/// Number of cut arcs encoded by v. Throws std::invalid_argument on negative coordinates.
Rational turn_norm(const ArcSystem& sys, int factor, std::span<const Rational> v);
std::int64_t turn_norm(const ArcSystem& sys, int factor, std::span<const std::int64_t> v);

RationalVector to_rational(std::span<const std::int64_t> v);

}  // namespace sclcone
