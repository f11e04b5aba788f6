#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "sclcone/arc_graph.hpp"
#include "sclcone/chain.hpp"
#include "sclcone/disk_enum.hpp"
#include "sclcone/rational_lp.hpp"

namespace sclcone {

/// Column bookkeeping for the gluing LP. Columns are either residual turn
/// coordinates v' (disk < 0) or multipliers of a disk vector of one factor.
struct GluingColumn {
  int factor = 0;
  int turn = -1;
  int disk = -1;
};

/// maximize Σ s_j - Σ_factors |v|/2 over
///   ∂v' = 0 per factor,
///   v_A(t) = v_B(partner(t)) for every regular A-turn t,
///   Σ_{τ'} v(τ,τ') = coefficient(word of τ) per regular arc, v(τ,τ) = coefficient per self-loop arc,
/// where v = v' + Σ s_j d_j.
struct GluingProgram {
  LpProblem lp;
  std::vector<GluingColumn> columns;
  std::array<std::vector<IntVector>, 2> disks;
  std::array<std::vector<int>, 2> boundary_rows;       // per arc
  std::vector<int> gluing_rows;                         // per A-turn, -1 for self-loops
  std::array<std::vector<int>, 2> normalization_rows;   // per arc
  std::array<std::vector<int>, 2> turn_columns;         // column of v'(t)
};

GluingProgram build_program(const ArcSystem& sys, const std::array<std::vector<IntVector>, 2>& generators);

/// LP column (one entry per row) and objective coefficient of s·d.
std::pair<RationalVector, Rational> disk_column(const GluingProgram& program, const ArcSystem& sys, int factor,
                                                const IntVector& d);

/// Appends a disk multiplier column; returns its column index.
std::size_t add_disk(GluingProgram& program, const ArcSystem& sys, int factor, const IntVector& d);

enum class SclStatus { Finite, Infinite, Empty };
std::string to_string(SclStatus s);

enum class Strategy {
  /// Restricted LP grown by exact pricing over all disk vectors.
  ColumnGeneration,
  /// Full generator sets D' from enumerate_disk_generators, one LP solve.
  Enumerate,
};

struct SclOptions {
  Strategy strategy = Strategy::ColumnGeneration;
  std::size_t max_nodes = default_max_nodes();
  std::size_t max_rounds = 100'000;
};

struct SclResult {
  SclStatus status = SclStatus::Empty;
  Rational value;
  Chain chain;  // normalized
  std::vector<std::string> warnings;
  std::array<RationalVector, 2> primal;              // v per factor
  std::array<std::vector<IntVector>, 2> generators;  // disk columns of the final LP
  std::array<RationalVector, 2> multipliers;         // s_j per generator
  RationalVector dual;
  Rational objective;
  std::array<std::int64_t, 2> bound{0, 0};
  std::size_t lp_vars = 0;
  std::size_t lp_constraints = 0;
  std::size_t pivots = 0;
  std::size_t rounds = 0;
  bool certificate_ok = false;
  double millis = 0;
  Strategy strategy = Strategy::ColumnGeneration;
};

SclResult compute_scl(const Chain& chain, const SclOptions& options = {});

std::string to_json(const SclResult& r);

/// max Σ t_j subject to v - Σ t_j d_j ∈ V. Throws std::invalid_argument when v is
/// not in the factor cone (negative coordinate or ∂v != 0).
Rational kappa(const ArcSystem& sys, int factor, std::span<const Rational> v, const std::vector<IntVector>& generators);

/// nullopt encodes an infinite value.
using MaybeRational = std::optional<Rational>;

/// ½(1 - 1/n(a^i) - 1/n(b^j)) with n the order of the power; infinite when a
/// power has infinite order. Throws when an exponent is 0 modulo its order.
MaybeRational formula_product(std::int64_t i, std::int64_t j, std::array<int, 2> orders);

/// 1/2 - 1/k with k the least finite order (1/2 when both are infinite).
Rational formula_commutator(std::array<int, 2> orders);

/// a^p t a^q t⁻¹ in Z * Z: 1/2 when q = -p, infinite otherwise.
MaybeRational formula_self_product(std::int64_t p, std::int64_t q);

enum class WalkerFamily { F1, F2, F3, F4, Counterexample };

std::string walker_word(WalkerFamily family);
std::optional<WalkerFamily> parse_walker_family(std::string_view name);

/// Tabulated value, or nullopt outside the family's validity range.
std::optional<Rational> walker_reference(WalkerFamily family, int o1, int o2);

}  // namespace sclcone
