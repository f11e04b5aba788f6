#include "sclcone/scl_engine.hpp"

#include <chrono>
#include <numeric>
#include <set>

#include "json.hpp"

namespace sclcone {

namespace {

const Rational kHalf = make_rational(1, 2);

int add_row(LpProblem& lp, const Rational& rhs) {
  lp.A.emplace_back(lp.cols());
  lp.b.push_back(rhs);
  return static_cast<int>(lp.rows() - 1);
}

std::size_t add_column(GluingProgram& g, const RationalVector& column, const Rational& cost, GluingColumn desc) {
  for (std::size_t i = 0; i < g.lp.rows(); ++i) g.lp.A[i].push_back(column[i]);
  g.lp.c.push_back(cost);
  g.columns.push_back(desc);
  return g.lp.cols() - 1;
}

// Accumulates into `column` the rows touched by one unit of turn t of `factor`
// in v (not v'); the boundary rows are left to the caller.
void add_turn_entries(const GluingProgram& g, const ArcSystem& sys, int factor, int t, const Rational& weight,
                      RationalVector& column) {
  const auto& turn = sys.turns(factor)[t];
  column[g.normalization_rows[factor][turn.from]] += weight;
  if (sys.is_self_loop_turn(factor, t)) return;
  if (factor == 0) {
    column[g.gluing_rows[t]] += weight;
  } else {
    column[g.gluing_rows[sys.partner(1, t)]] -= weight;
  }
}

}  // namespace

GluingProgram build_program(const ArcSystem& sys, const std::array<std::vector<IntVector>, 2>& generators) {
  GluingProgram g;
  for (int f = 0; f < 2; ++f) {
    g.boundary_rows[f].resize(sys.arc_count(f));
    for (std::size_t a = 0; a < sys.arc_count(f); ++a) g.boundary_rows[f][a] = add_row(g.lp, 0);
  }
  g.gluing_rows.assign(sys.turn_count(0), -1);
  for (std::size_t t = 0; t < sys.turn_count(0); ++t)
    if (!sys.is_self_loop_turn(0, static_cast<int>(t))) g.gluing_rows[t] = add_row(g.lp, 0);
  for (int f = 0; f < 2; ++f) {
    g.normalization_rows[f].resize(sys.arc_count(f));
    for (const auto& arc : sys.arcs(f)) g.normalization_rows[f][arc.id] = add_row(g.lp, sys.coefficient(arc.word));
  }

  for (int f = 0; f < 2; ++f) {
    for (std::size_t t = 0; t < sys.turn_count(f); ++t) {
      RationalVector column(g.lp.rows());
      const auto& turn = sys.turns(f)[t];
      if (turn.from != turn.to) {
        column[g.boundary_rows[f][turn.from]] += 1;
        column[g.boundary_rows[f][turn.to]] -= 1;
      }
      add_turn_entries(g, sys, f, static_cast<int>(t), Rational(1), column);
      const Rational cost = -kHalf * sys.norm_weight(f, static_cast<int>(t));
      g.turn_columns[f].push_back(static_cast<int>(add_column(g, column, cost, {f, static_cast<int>(t), -1})));
    }
  }
  for (int f = 0; f < 2; ++f)
    for (const auto& d : generators[f]) add_disk(g, sys, f, d);
  return g;
}

std::pair<RationalVector, Rational> disk_column(const GluingProgram& g, const ArcSystem& sys, int factor,
                                                const IntVector& d) {
  RationalVector column(g.lp.rows());
  for (std::size_t t = 0; t < d.size(); ++t)
    if (d[t] != 0) add_turn_entries(g, sys, factor, static_cast<int>(t), make_rational(d[t]), column);
  return {std::move(column), 1 - kHalf * make_rational(turn_norm(sys, factor, d))};
}

std::size_t add_disk(GluingProgram& g, const ArcSystem& sys, int factor, const IntVector& d) {
  auto [column, cost] = disk_column(g, sys, factor, d);
  g.disks[factor].push_back(d);
  return add_column(g, column, cost, {factor, -1, static_cast<int>(g.disks[factor].size() - 1)});
}

std::string to_string(SclStatus s) {
  switch (s) {
    case SclStatus::Finite: return "finite";
    case SclStatus::Infinite: return "infinite";
    case SclStatus::Empty: return "empty";
  }
  return "unknown";
}

namespace {

// Disks made of a short simple loop (one or two turns) repeated just enough
// to close up. Longer loops are left to pricing.
std::vector<IntVector> seed_disks(const ArcSystem& sys, int factor) {
  const int k = sys.order(factor);
  std::vector<IntVector> out;
  for (auto loop : simple_loops(sys, factor)) {
    if (std::accumulate(loop.begin(), loop.end(), std::int64_t{0}) > 2) continue;
    const std::int64_t w = winding(sys, factor, loop);
    std::int64_t m;
    if (k == 0) {
      if (w != 0) continue;
      m = 1;
    } else {
      m = k / std::gcd(std::abs(w), static_cast<std::int64_t>(k));
    }
    for (auto& x : loop) x *= m;
    out.push_back(std::move(loop));
  }
  return out;
}

Rational column_dot(const LpProblem& lp, std::size_t j, const RationalVector& y) {
  Rational s;
  for (std::size_t i = 0; i < lp.rows(); ++i)
    if (lp.A[i][j] != 0 && y[i] != 0) s += lp.A[i][j] * y[i];
  return s;
}

// Reduced costs (Aᵀy - c) of the v' columns of one factor, which the pricing
// oracle uses as turn lengths.
RationalVector turn_costs(const GluingProgram& g, int factor, const RationalVector& y) {
  RationalVector out;
  for (int j : g.turn_columns[factor]) {
    Rational c = column_dot(g.lp, j, y) - g.lp.c[j];
    if (c < 0) throw std::logic_error("dual is infeasible for a residual turn column");
    out.push_back(std::move(c));
  }
  return out;
}

void fill_solution(SclResult& r, const GluingProgram& g, const ArcSystem& sys, const LpOutcome& o) {
  for (int f = 0; f < 2; ++f) {
    r.primal[f].assign(sys.turn_count(f), Rational());
    r.generators[f] = g.disks[f];
    r.multipliers[f].assign(g.disks[f].size(), Rational());
  }
  for (std::size_t j = 0; j < g.columns.size(); ++j) {
    const auto& col = g.columns[j];
    if (o.x[j] == 0) continue;
    if (col.disk < 0) {
      r.primal[col.factor][col.turn] += o.x[j];
    } else {
      r.multipliers[col.factor][col.disk] = o.x[j];
      const auto& d = g.disks[col.factor][col.disk];
      for (std::size_t t = 0; t < d.size(); ++t)
        if (d[t]) r.primal[col.factor][t] += o.x[j] * make_rational(d[t]);
    }
  }
  r.dual = o.y;
  r.objective = o.value;
  r.value = -o.value / 2;
  r.lp_vars = g.lp.cols();
  r.lp_constraints = g.lp.rows();
  r.pivots = o.pivots;
}

}  // namespace

SclResult compute_scl(const Chain& chain, const SclOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  SclResult r;
  r.strategy = options.strategy;
  validate_factors(chain.factors);
  r.chain = normalize(chain, &r.warnings);
  auto finish = [&]() {
    r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
  };

  if (r.chain.terms.empty()) {
    r.status = SclStatus::Empty;
    r.value = 0;
    r.certificate_ok = true;
    return finish();
  }
  if (homological_check(r.chain) == Homology::Nontrivial) {
    r.status = SclStatus::Infinite;
    r.certificate_ok = true;
    return finish();
  }

  const ArcSystem sys(r.chain);
  r.status = SclStatus::Finite;
  for (int f = 0; f < 2; ++f) r.bound[f] = disk_length_bound(sys, f, sys.order(f));

  if (options.strategy == Strategy::Enumerate) {
    std::array<std::vector<IntVector>, 2> gens;
    for (int f = 0; f < 2; ++f)
      gens[f] = enumerate_disk_generators(sys, f, sys.order(f), options.max_nodes).generators;
    GluingProgram g = build_program(sys, gens);
    LpOutcome o = solve(g.lp);
    if (o.status != LpStatus::Optimal) throw std::logic_error("gluing LP is " + to_string(o.status));
    fill_solution(r, g, sys, o);
    r.rounds = 1;
    r.certificate_ok = check_certificate(g.lp, o);
    return finish();
  }

  GluingProgram g = build_program(sys, {seed_disks(sys, 0), seed_disks(sys, 1)});
  std::array<std::set<IntVector>, 2> present;
  for (int f = 0; f < 2; ++f) present[f].insert(g.disks[f].begin(), g.disks[f].end());
  Simplex simplex(g.lp);
  for (;;) {
    if (++r.rounds > options.max_rounds)
      throw ResourceLimitError("column generation exceeded " + std::to_string(options.max_rounds) + " rounds");
    LpOutcome o = simplex.solve();
    if (o.status != LpStatus::Optimal) throw std::logic_error("gluing LP is " + to_string(o.status));

    // A disk d improves the objective iff 1 - c·d > 0 for the turn costs c.
    bool added = false;
    bool priced_out = true;
    for (int f = 0; f < 2; ++f) {
      for (auto& cand : cheapest_disks(sys, f, sys.order(f), turn_costs(g, f, o.y))) {
        if (cand.cost >= 1) break;
        priced_out = false;
        if (!present[f].insert(cand.disk).second)
          throw std::logic_error("pricing returned a disk already in the program");
        auto [column, cost] = disk_column(g, sys, f, cand.disk);
        add_disk(g, sys, f, cand.disk);
        simplex.add_column(column, cost);
        added = true;
      }
    }
    if (!added) {
      fill_solution(r, g, sys, o);
      r.certificate_ok = priced_out && check_certificate(g.lp, o);
      return finish();
    }
  }
}

std::string to_json(const SclResult& r) {
  using nlohmann::json;
  json out;
  out["chain"] = render(r.chain);
  out["orders"] = {r.chain.factors[0].order, r.chain.factors[1].order};
  out["status"] = to_string(r.status);
  if (r.status == SclStatus::Infinite) {
    out["scl"] = nullptr;
  } else {
    out["scl"] = {{"num", r.value.get_num().get_str()}, {"den", r.value.get_den().get_str()}};
  }
  out["generators"] = {{"count", {r.generators[0].size(), r.generators[1].size()}},
                       {"bound", {r.bound[0], r.bound[1]}},
                       {"strategy", r.strategy == Strategy::Enumerate ? "enumerate" : "column-generation"}};
  out["lp"] = {{"vars", r.lp_vars}, {"constraints", r.lp_constraints}, {"pivots", r.pivots}, {"rounds", r.rounds}};
  out["certificate_ok"] = r.certificate_ok;
  if (!r.warnings.empty()) out["warnings"] = r.warnings;
  return out.dump();
}

Rational kappa(const ArcSystem& sys, int factor, std::span<const Rational> v, const std::vector<IntVector>& generators) {
  const std::size_t dim = sys.turn_count(factor);
  if (v.size() != dim) throw std::invalid_argument("turn vector has the wrong number of coordinates");
  for (const auto& x : v)
    if (x < 0) throw std::invalid_argument("kappa: vector has a negative coordinate");
  for (const auto& x : boundary_map(sys, factor, v))
    if (x != 0) throw std::invalid_argument("kappa: vector is not balanced");

  // Columns: t_j per generator, then slacks; Σ t_j d_j + slack = v.
  const std::size_t g = generators.size();
  LpProblem lp;
  lp.c.assign(g + dim, Rational());
  for (std::size_t j = 0; j < g; ++j) lp.c[j] = 1;
  for (std::size_t t = 0; t < dim; ++t) {
    RationalVector row(g + dim);
    for (std::size_t j = 0; j < g; ++j)
      if (generators[j][t]) row[j] = make_rational(generators[j][t]);
    row[g + t] = 1;
    lp.A.push_back(std::move(row));
    lp.b.push_back(v[t]);
  }
  LpOutcome o = solve(lp);
  if (o.status != LpStatus::Optimal) throw std::logic_error("kappa LP is " + to_string(o.status));
  return o.value;
}

namespace {

// Order of g^i in Z/k, 0 standing for infinite order.
std::int64_t power_order(std::int64_t i, int k) {
  if (k == 0) return 0;
  if (i % k == 0) throw std::invalid_argument("exponent " + std::to_string(i) + " is trivial modulo " + std::to_string(k));
  return k / std::gcd(std::abs(i), static_cast<std::int64_t>(k));
}

}  // namespace

MaybeRational formula_product(std::int64_t i, std::int64_t j, std::array<int, 2> orders) {
  if (i == 0 || j == 0) throw std::invalid_argument("formula_product needs nonzero exponents");
  const std::int64_t na = power_order(i, orders[0]);
  const std::int64_t nb = power_order(j, orders[1]);
  if (na == 0 || nb == 0) return std::nullopt;
  return kHalf * (1 - make_rational(1, na) - make_rational(1, nb));
}

Rational formula_commutator(std::array<int, 2> orders) {
  int k = 0;
  for (int o : orders)
    if (o != 0) k = k == 0 ? o : std::min(k, o);
  if (k == 0) return kHalf;
  return kHalf - make_rational(1, k);
}

MaybeRational formula_self_product(std::int64_t p, std::int64_t q) {
  if (p == 0 || q == 0) throw std::invalid_argument("formula_self_product needs nonzero exponents");
  if (q != -p) return std::nullopt;
  return kHalf;
}

std::string walker_word(WalkerFamily family) {
  switch (family) {
    case WalkerFamily::F1: return "aba^-2b^-2 + ab";
    case WalkerFamily::F2: return "aba^-3b^-3";
    case WalkerFamily::F3: return "a^2ba^-1b^-1a^-2bab^-1";
    case WalkerFamily::F4: return "aba^2b^2a^3b^3a^-5b^-5";
    case WalkerFamily::Counterexample: return "aba^-2b^-2a^2b^2a^-1b^-1";
  }
  return "";
}

std::optional<WalkerFamily> parse_walker_family(std::string_view name) {
  if (name == "F1") return WalkerFamily::F1;
  if (name == "F2") return WalkerFamily::F2;
  if (name == "F3") return WalkerFamily::F3;
  if (name == "F4") return WalkerFamily::F4;
  if (name == "counterexample" || name == "C") return WalkerFamily::Counterexample;
  return std::nullopt;
}

std::optional<Rational> walker_reference(WalkerFamily family, int o1, int o2) {
  if (o1 < 2 || o2 < 2) return std::nullopt;
  const int m = std::min(o1, o2);
  const Rational a = make_rational(1, o1), b = make_rational(1, o2);
  switch (family) {
    case WalkerFamily::F1:
      return make_rational(2, 3) - (m % 2 == 0 ? make_rational(2, 3) : kHalf) / m;
    case WalkerFamily::F2:
      if (m < 7) return std::nullopt;
      return make_rational(3, 4) - a - b;
    case WalkerFamily::F3:
      if (m < 3) return std::nullopt;
      return kHalf - (o1 % 2 == 0 ? 2 : 1) * a;
    case WalkerFamily::F4:
      if (m < 6) return std::nullopt;
      return 1 - kHalf * a - kHalf * b;
    case WalkerFamily::Counterexample: {
      if (!(o1 > 10 && 2 * o1 < o2)) return std::nullopt;
      switch (o1 % 6) {
        case 0: return 1 - 3 * a;
        case 2: return 1 - make_rational(15, 5 * o1 + 8);
        case 4: return 1 - make_rational(3, o1 + 2);
        default: return 1 - make_rational(3 * (o1 - 1), static_cast<std::int64_t>(o1) * (o1 + 1));
      }
    }
  }
  return std::nullopt;
}

}  // namespace sclcone
