#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "sclcone/arc_graph.hpp"
#include "sclcone/rational.hpp"

namespace sclcone {

/// Finite set D' of disk vectors of one factor with conv(D') + V = conv(D) + V.
struct DiskGeneratorSet {
  int factor = 0;
  int order = 0;
  std::vector<IntVector> generators;
  /// Largest walk length (coordinate sum) searched.
  std::int64_t bound = 0;
  bool minimal = false;
};

/// Directed simple cycles of the turn graph (loops included), each as a 0/1
/// turn vector. Deterministic order: by least vertex, then DFS order.
std::vector<IntVector> simple_loops(const ArcSystem& sys, int factor);

/// v != 0, ∂v = 0, edge-connected support and winding ≡ 0 mod order
/// (exactly 0 when order is 0). Negative coordinates give false.
bool disk_membership(const ArcSystem& sys, int factor, std::span<const std::int64_t> v, int order);
/// Rational overload; throws std::invalid_argument on a non-integer coordinate.
bool disk_membership(const ArcSystem& sys, int factor, std::span<const Rational> v, int order);

/// Upper bound on the coordinate sum of a componentwise-minimal disk vector.
/// order >= 2: arcs * order. order 0: arcs * N with N the cycle-count bound
/// L + (L + 2)U + 1 + max(L, 1)U over L simple loops of maximal |winding| U.
std::int64_t disk_length_bound(const ArcSystem& sys, int factor, int order);

/// D' for one factor by dynamic programming over simple-loop combinations,
/// keyed by (support, winding residue) and kept Pareto-minimal, followed by
/// LP pruning. Throws ResourceLimitError past `max_nodes` DP insertions.
DiskGeneratorSet enumerate_disk_generators(const ArcSystem& sys, int factor, int order,
                                           std::size_t max_nodes = default_max_nodes());

/// Removes every d lying in conv(rest) + V, decided by an LP feasibility check.
std::vector<IntVector> prune_generators(std::vector<IntVector> generators);

/// Exhaustive scan of all disk vectors with coordinate sum <= bound, then the
/// componentwise-minimal ones pruned. Exponential; for cross-checks only.
std::vector<IntVector> brute_force_generators(const ArcSystem& sys, int factor, int order, std::int64_t bound,
                                              std::size_t max_nodes = default_max_nodes());

/// Vertices of the convex hull of the integer points of conv(vertices).
/// Throws std::invalid_argument on empty or ragged input and ResourceLimitError
/// when the dimension or the bounding box exceeds the caps.
std::vector<IntVector> integer_hull(const std::vector<RationalVector>& vertices, std::size_t max_dimension = 6,
                                    std::size_t max_box_points = 1'000'000);

/// Splits a balanced non-negative integer vector into simple loops:
/// (loop, multiplicity) pairs summing to v. Throws on unbalanced input.
std::vector<std::pair<IntVector, std::int64_t>> decompose_into_loops(const ArcSystem& sys, int factor,
                                                                     std::span<const std::int64_t> v);

/// Least c·d over all disk vectors d of the factor, for non-negative turn
/// costs c, one candidate per starting arc (duplicates removed), ascending.
/// Shortest closed walks in the graph of (arc, winding residue) states;
/// for order 0 the exact winding is tracked inside the window ±bound·max|t|.
struct PricedDisk {
  Rational cost;
  IntVector disk;
};
std::vector<PricedDisk> cheapest_disks(const ArcSystem& sys, int factor, int order, std::span<const Rational> costs);

/// LP test of d ∈ conv(others) + V.
bool in_hull_plus_cone(std::span<const std::int64_t> d, const std::vector<IntVector>& others);

}  // namespace sclcone
