#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "sclcone/rational.hpp"

namespace sclcone {

/// maximize c·x subject to A x = b, x >= 0. A is stored row-major.
struct LpProblem {
  std::vector<RationalVector> A;
  RationalVector b;
  RationalVector c;

  std::size_t rows() const { return b.size(); }
  std::size_t cols() const { return c.size(); }
  /// Throws std::invalid_argument on inconsistent dimensions.
  void validate() const;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

std::string to_string(LpStatus s);

/// Result of a solve together with its certificate:
///  Optimal    x primal, y dual with Aᵀy >= c and b·y = c·x.
///  Infeasible y Farkas vector with Aᵀy >= 0 and b·y < 0.
///  Unbounded  x feasible, ray r >= 0 with A r = 0 and c·r > 0.
struct LpOutcome {
  LpStatus status = LpStatus::Infeasible;
  RationalVector x;
  RationalVector y;
  RationalVector ray;
  Rational value;
  std::size_t pivots = 0;
};

/// Two-phase dense tableau simplex in exact arithmetic. Dantzig pricing with
/// lowest-index ties; after a run of degenerate pivots it switches for good to
/// Bland's rule, which cannot cycle.
class Simplex {
 public:
  explicit Simplex(LpProblem problem);

  LpOutcome solve();

  /// Appends a column (one coefficient per row) with objective coefficient
  /// `cost`; the next solve() resumes from the current basis.
  std::size_t add_column(std::span<const Rational> column, const Rational& cost);

  const LpProblem& problem() const { return problem_; }

 private:
  void initialise();
  void pivot(std::size_t row, std::size_t col);
  // Column index j < n is structural, n + i is the artificial of row i.
  bool run(bool phase_one, std::size_t& entering_unbounded);
  void price_phase_two();
  void expel_artificials();
  LpOutcome outcome(LpStatus status, std::size_t unbounded_col) const;
  std::size_t width() const { return n_ + problem_.rows(); }

  LpProblem problem_;
  std::vector<int> sign_;                 // row scaling so that b >= 0
  std::vector<RationalVector> real_;      // B⁻¹ S A, rows x n
  std::vector<RationalVector> inverse_;   // B⁻¹, rows x rows
  RationalVector rhs_;
  RationalVector reduced_;                // c_j - z_j over structural columns
  RationalVector reduced_art_;            // same over artificial columns
  std::vector<std::size_t> basis_;        // per row: column index (n_ + i for artificials)
  std::size_t n_ = 0;
  std::size_t pivots_ = 0;
  std::size_t degenerate_run_ = 0;
  bool bland_ = false;
  bool initialised_ = false;
  bool phase_two_ready_ = false;
  bool infeasible_ = false;
};

LpOutcome solve(const LpProblem& p);

/// Exact verification of the outcome's certificate for its status.
bool check_certificate(const LpProblem& p, const LpOutcome& outcome);

/// A x = b and x >= 0. Throws std::invalid_argument on dimension mismatch.
bool feasible(std::span<const Rational> x, const LpProblem& p);

std::string to_json(const LpProblem& p);

}  // namespace sclcone
