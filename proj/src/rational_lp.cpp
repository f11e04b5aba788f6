#include "sclcone/rational_lp.hpp"

#include <stdexcept>

#include "json.hpp"

namespace sclcone {

namespace {

constexpr std::size_t kDegenerateRunBeforeBland = 50;

}  // namespace

void LpProblem::validate() const {
  if (A.size() != b.size())
    throw std::invalid_argument("LP has " + std::to_string(A.size()) + " rows but " + std::to_string(b.size()) +
                                " right-hand sides");
  for (const auto& row : A)
    if (row.size() != c.size())
      throw std::invalid_argument("LP row has " + std::to_string(row.size()) + " entries, expected " +
                                  std::to_string(c.size()));
}

std::string to_string(LpStatus s) {
  switch (s) {
    case LpStatus::Optimal: return "optimal";
    case LpStatus::Infeasible: return "infeasible";
    case LpStatus::Unbounded: return "unbounded";
  }
  return "unknown";
}

Simplex::Simplex(LpProblem problem) : problem_(std::move(problem)) {
  problem_.validate();
  n_ = problem_.cols();
}

void Simplex::initialise() {
  const std::size_t m = problem_.rows();
  sign_.assign(m, 1);
  real_.assign(m, RationalVector(n_));
  inverse_.assign(m, RationalVector(m));
  rhs_.assign(m, Rational());
  basis_.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    sign_[i] = problem_.b[i] < 0 ? -1 : 1;
    rhs_[i] = sign_[i] < 0 ? Rational(-problem_.b[i]) : problem_.b[i];
    for (std::size_t j = 0; j < n_; ++j)
      if (problem_.A[i][j] != 0) real_[i][j] = sign_[i] < 0 ? Rational(-problem_.A[i][j]) : problem_.A[i][j];
    inverse_[i][i] = 1;
    basis_[i] = n_ + i;
  }
  // Phase one maximises -Σ artificials; with all artificials basic the
  // reduced cost of a structural column is its column sum.
  reduced_.assign(n_, Rational());
  reduced_art_.assign(m, Rational());
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (real_[i][j] != 0) reduced_[j] += real_[i][j];
  initialised_ = true;
  phase_two_ready_ = false;
  infeasible_ = false;
}

void Simplex::pivot(std::size_t row, std::size_t col) {
  const std::size_t m = problem_.rows();
  ++pivots_;
  auto& prow = real_[row];
  auto& pinv = inverse_[row];
  const Rational piv = col < n_ ? prow[col] : pinv[col - n_];

  std::vector<std::size_t> nz_real, nz_inv;
  for (std::size_t j = 0; j < n_; ++j)
    if (prow[j] != 0) {
      prow[j] /= piv;
      nz_real.push_back(j);
    }
  for (std::size_t j = 0; j < m; ++j)
    if (pinv[j] != 0) {
      pinv[j] /= piv;
      nz_inv.push_back(j);
    }
  rhs_[row] /= piv;

  auto eliminate = [&](RationalVector& real, RationalVector& inv, Rational& rhs, const Rational& f) {
    for (auto j : nz_real) real[j] -= f * prow[j];
    for (auto j : nz_inv) inv[j] -= f * pinv[j];
    rhs -= f * rhs_[row];
  };

  for (std::size_t i = 0; i < m; ++i) {
    if (i == row) continue;
    const Rational f = col < n_ ? real_[i][col] : inverse_[i][col - n_];
    if (f == 0) continue;
    eliminate(real_[i], inverse_[i], rhs_[i], f);
  }
  const Rational f = col < n_ ? reduced_[col] : reduced_art_[col - n_];
  if (f != 0) {
    for (auto j : nz_real) reduced_[j] -= f * prow[j];
    for (auto j : nz_inv) reduced_art_[j] -= f * pinv[j];
  }
  basis_[row] = col;
}

bool Simplex::run(bool phase_one, std::size_t& entering_unbounded) {
  const std::size_t m = problem_.rows();
  for (;;) {
    // Entering column: structural columns only; artificials never re-enter.
    std::size_t enter = n_;
    for (std::size_t j = 0; j < n_; ++j) {
      if (reduced_[j] <= 0) continue;
      if (enter == n_) {
        enter = j;
        if (bland_) break;
      } else if (reduced_[j] > reduced_[enter]) {
        enter = j;
      }
    }
    if (enter == n_) return true;

    std::size_t leave = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      const Rational& a = real_[i][enter];
      if (a <= 0) continue;
      Rational ratio = rhs_[i] / a;
      if (leave == m || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
        leave = i;
        best = std::move(ratio);
      }
    }
    if (leave == m) {
      if (phase_one) throw std::logic_error("phase one of the simplex cannot be unbounded");
      entering_unbounded = enter;
      return false;
    }
    if (best == 0) {
      if (++degenerate_run_ >= kDegenerateRunBeforeBland) bland_ = true;
    } else {
      // A strict improvement cannot lie on a cycle, so the greedy rule is safe again.
      degenerate_run_ = 0;
      bland_ = false;
    }
    pivot(leave, enter);
  }
}

void Simplex::expel_artificials() {
  const std::size_t m = problem_.rows();
  for (std::size_t i = 0; i < m; ++i) {
    if (basis_[i] < n_) continue;
    for (std::size_t j = 0; j < n_; ++j) {
      if (real_[i][j] != 0) {
        pivot(i, j);
        break;
      }
    }
    // Otherwise the row is redundant and its artificial stays basic at zero.
  }
}

void Simplex::price_phase_two() {
  const std::size_t m = problem_.rows();
  reduced_ = problem_.c;
  reduced_art_.assign(m, Rational());
  for (std::size_t i = 0; i < m; ++i) {
    if (basis_[i] >= n_) continue;
    const Rational& cb = problem_.c[basis_[i]];
    if (cb == 0) continue;
    for (std::size_t j = 0; j < n_; ++j)
      if (real_[i][j] != 0) reduced_[j] -= cb * real_[i][j];
    for (std::size_t j = 0; j < m; ++j)
      if (inverse_[i][j] != 0) reduced_art_[j] -= cb * inverse_[i][j];
  }
  phase_two_ready_ = true;
}

LpOutcome Simplex::outcome(LpStatus status, std::size_t unbounded_col) const {
  const std::size_t m = problem_.rows();
  LpOutcome out;
  out.status = status;
  out.pivots = pivots_;
  out.y.assign(m, Rational());
  if (status == LpStatus::Infeasible) {
    // Phase-one duals: the artificial cost is -1, so y'_i = -1 - reduced_art_i.
    // Scaled back by S they certify infeasibility: Aᵀy >= 0 and b·y < 0.
    for (std::size_t i = 0; i < m; ++i) {
      Rational yi = -1 - reduced_art_[i];
      out.y[i] = sign_[i] < 0 ? Rational(-yi) : yi;
    }
    return out;
  }
  out.x.assign(n_, Rational());
  for (std::size_t i = 0; i < m; ++i)
    if (basis_[i] < n_) out.x[basis_[i]] = rhs_[i];
  for (std::size_t j = 0; j < n_; ++j)
    if (out.x[j] != 0) out.value += problem_.c[j] * out.x[j];
  for (std::size_t i = 0; i < m; ++i) out.y[i] = sign_[i] < 0 ? reduced_art_[i] : Rational(-reduced_art_[i]);
  if (status == LpStatus::Unbounded) {
    out.ray.assign(n_, Rational());
    out.ray[unbounded_col] = 1;
    for (std::size_t i = 0; i < m; ++i)
      if (basis_[i] < n_) out.ray[basis_[i]] = -real_[i][unbounded_col];
  }
  return out;
}

LpOutcome Simplex::solve() {
  if (!initialised_ || infeasible_) {
    pivots_ = 0;
    degenerate_run_ = 0;
    bland_ = false;
    initialise();
    std::size_t unused = 0;
    run(true, unused);
    for (std::size_t i = 0; i < problem_.rows(); ++i) {
      if (basis_[i] >= n_ && rhs_[i] != 0) {
        infeasible_ = true;
        return outcome(LpStatus::Infeasible, 0);
      }
    }
    expel_artificials();
    price_phase_two();
    degenerate_run_ = 0;
  }
  std::size_t unbounded_col = 0;
  bool optimal = run(false, unbounded_col);
  return outcome(optimal ? LpStatus::Optimal : LpStatus::Unbounded, unbounded_col);
}

std::size_t Simplex::add_column(std::span<const Rational> column, const Rational& cost) {
  const std::size_t m = problem_.rows();
  if (column.size() != m)
    throw std::invalid_argument("column has " + std::to_string(column.size()) + " entries, expected " +
                                std::to_string(m));
  for (std::size_t i = 0; i < m; ++i) problem_.A[i].push_back(column[i]);
  problem_.c.push_back(cost);
  const std::size_t j = n_++;

  // Basis indices of artificials are n_ + i, so shift them along with n_.
  for (auto& b : basis_)
    if (b >= j) ++b;
  if (!initialised_ || infeasible_) return j;

  // Scaled column S a, then B⁻¹ S a.
  RationalVector scaled(m);
  for (std::size_t i = 0; i < m; ++i)
    if (column[i] != 0) scaled[i] = sign_[i] < 0 ? Rational(-column[i]) : column[i];
  for (std::size_t i = 0; i < m; ++i) {
    Rational v;
    for (std::size_t k = 0; k < m; ++k)
      if (scaled[k] != 0 && inverse_[i][k] != 0) v += inverse_[i][k] * scaled[k];
    real_[i].push_back(std::move(v));
  }
  if (phase_two_ready_) {
    // c_j - y'·S a, with y' = -reduced_art.
    Rational rc = cost;
    for (std::size_t k = 0; k < m; ++k)
      if (scaled[k] != 0 && reduced_art_[k] != 0) rc += reduced_art_[k] * scaled[k];
    reduced_.push_back(std::move(rc));
  } else {
    reduced_.push_back(Rational());
  }
  // A redundant row whose artificial is basic at zero may no longer be
  // redundant; pivot the new column in there (degenerate, keeps feasibility).
  for (std::size_t i = 0; i < m; ++i)
    if (basis_[i] >= n_ && real_[i][j] != 0) pivot(i, j);
  return j;
}

LpOutcome solve(const LpProblem& p) { return Simplex(p).solve(); }

namespace {

bool satisfies_equalities(std::span<const Rational> x, const LpProblem& p) {
  for (std::size_t i = 0; i < p.rows(); ++i) {
    Rational s;
    for (std::size_t j = 0; j < p.cols(); ++j)
      if (p.A[i][j] != 0 && x[j] != 0) s += p.A[i][j] * x[j];
    if (s != p.b[i]) return false;
  }
  return true;
}

Rational column_dot(const LpProblem& p, std::size_t j, std::span<const Rational> y) {
  Rational s;
  for (std::size_t i = 0; i < p.rows(); ++i)
    if (p.A[i][j] != 0 && y[i] != 0) s += p.A[i][j] * y[i];
  return s;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  return s;
}

}  // namespace

bool feasible(std::span<const Rational> x, const LpProblem& p) {
  p.validate();
  if (x.size() != p.cols())
    throw std::invalid_argument("point has " + std::to_string(x.size()) + " coordinates, LP has " +
                                std::to_string(p.cols()) + " variables");
  for (const auto& xi : x)
    if (xi < 0) return false;
  return satisfies_equalities(x, p);
}

bool check_certificate(const LpProblem& p, const LpOutcome& o) {
  p.validate();
  if (o.y.size() != p.rows()) return false;
  switch (o.status) {
    case LpStatus::Optimal: {
      if (o.x.size() != p.cols() || !feasible(o.x, p)) return false;
      for (std::size_t j = 0; j < p.cols(); ++j)
        if (column_dot(p, j, o.y) < p.c[j]) return false;
      const Rational primal = dot(p.c, o.x);
      return primal == o.value && dot(p.b, o.y) == primal;
    }
    case LpStatus::Infeasible: {
      for (std::size_t j = 0; j < p.cols(); ++j)
        if (column_dot(p, j, o.y) < 0) return false;
      return dot(p.b, o.y) < 0;
    }
    case LpStatus::Unbounded: {
      if (o.x.size() != p.cols() || o.ray.size() != p.cols() || !feasible(o.x, p)) return false;
      for (const auto& r : o.ray)
        if (r < 0) return false;
      for (std::size_t i = 0; i < p.rows(); ++i) {
        Rational s;
        for (std::size_t j = 0; j < p.cols(); ++j)
          if (p.A[i][j] != 0 && o.ray[j] != 0) s += p.A[i][j] * o.ray[j];
        if (s != 0) return false;
      }
      return dot(p.c, o.ray) > 0;
    }
  }
  return false;
}

std::string to_json(const LpProblem& p) {
  using nlohmann::json;
  auto vec = [](const RationalVector& v) {
    json a = json::array();
    for (const auto& q : v) a.push_back(to_string(q));
    return a;
  };
  json out;
  out["sense"] = "maximize";
  out["c"] = vec(p.c);
  out["b"] = vec(p.b);
  json rows = json::array();
  for (const auto& r : p.A) rows.push_back(vec(r));
  out["A"] = std::move(rows);
  return out.dump();
}

}  // namespace sclcone
