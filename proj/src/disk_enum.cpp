#include "sclcone/disk_enum.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <queue>

#include "sclcone/rational_lp.hpp"

namespace sclcone {

namespace {

std::int64_t mod(std::int64_t x, std::int64_t k) {
  std::int64_t r = x % k;
  return r < 0 ? r + k : r;
}

bool leq(const IntVector& a, const IntVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

std::int64_t total(const IntVector& v) { return std::accumulate(v.begin(), v.end(), std::int64_t{0}); }

// Union-find over arcs; true when the turns in the support form one component.
bool support_connected(const ArcSystem& sys, int factor, const std::function<bool(std::size_t)>& used) {
  const auto& turns = sys.turns(factor);
  std::vector<int> parent(sys.arc_count(factor));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  int root = -1;
  for (std::size_t t = 0; t < turns.size(); ++t) {
    if (!used(t)) continue;
    parent[find(turns[t].from)] = find(turns[t].to);
    root = turns[t].from;
  }
  if (root < 0) return false;
  for (std::size_t t = 0; t < turns.size(); ++t)
    if (used(t) && find(turns[t].from) != find(root)) return false;
  return true;
}

bool balanced(const ArcSystem& sys, int factor, std::span<const std::int64_t> v) {
  std::vector<std::int64_t> net(sys.arc_count(factor));
  const auto& turns = sys.turns(factor);
  for (std::size_t t = 0; t < v.size(); ++t) {
    net[turns[t].from] += v[t];
    net[turns[t].to] -= v[t];
  }
  return std::all_of(net.begin(), net.end(), [](std::int64_t x) { return x == 0; });
}

// Keeps only the componentwise-minimal vectors (duplicates collapse).
std::vector<IntVector> minimal_elements(std::vector<IntVector> vs) {
  std::sort(vs.begin(), vs.end(), [](const IntVector& a, const IntVector& b) {
    auto ta = total(a), tb = total(b);
    return ta != tb ? ta < tb : a < b;
  });
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  std::vector<IntVector> out;
  for (auto& v : vs)
    if (std::none_of(out.begin(), out.end(), [&](const IntVector& y) { return leq(y, v); })) out.push_back(std::move(v));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<IntVector> simple_loops(const ArcSystem& sys, int factor) {
  const int n = static_cast<int>(sys.arc_count(factor));
  const std::size_t dim = sys.turn_count(factor);
  std::vector<IntVector> loops;
  std::vector<int> path;
  std::vector<bool> on_path(n, false);

  std::function<void(int, int)> dfs = [&](int start, int u) {
    for (int x = start; x < n; ++x) {
      int t = sys.turn_index(factor, u, x);
      if (t < 0) continue;
      if (x == start) {
        IntVector loop(dim, 0);
        for (std::size_t i = 0; i + 1 < path.size(); ++i) loop[sys.turn_index(factor, path[i], path[i + 1])] = 1;
        loop[t] = 1;
        loops.push_back(std::move(loop));
      } else if (!on_path[x]) {
        on_path[x] = true;
        path.push_back(x);
        dfs(start, x);
        path.pop_back();
        on_path[x] = false;
      }
    }
  };

  for (int s = 0; s < n; ++s) {
    path = {s};
    on_path[s] = true;
    dfs(s, s);
    on_path[s] = false;
  }
  return loops;
}

bool disk_membership(const ArcSystem& sys, int factor, std::span<const std::int64_t> v, int order) {
  if (v.size() != sys.turn_count(factor))
    throw std::invalid_argument("turn vector has the wrong number of coordinates");
  bool nonzero = false;
  for (auto x : v) {
    if (x < 0) return false;
    nonzero = nonzero || x != 0;
  }
  if (!nonzero || !balanced(sys, factor, v)) return false;
  if (!support_connected(sys, factor, [&](std::size_t t) { return v[t] != 0; })) return false;
  std::int64_t w = winding(sys, factor, v);
  return order == 0 ? w == 0 : mod(w, order) == 0;
}

bool disk_membership(const ArcSystem& sys, int factor, std::span<const Rational> v, int order) {
  IntVector iv;
  iv.reserve(v.size());
  for (const auto& q : v) {
    if (!is_integer(q)) throw std::invalid_argument("disk_membership needs an integer vector, got " + to_string(q));
    iv.push_back(to_int64(q));
  }
  return disk_membership(sys, factor, iv, order);
}

namespace {

struct LoopData {
  std::vector<IntVector> loops;
  std::vector<std::int64_t> winding;
  std::int64_t max_abs_winding = 0;
};

LoopData loop_data(const ArcSystem& sys, int factor) {
  LoopData d;
  d.loops = simple_loops(sys, factor);
  for (const auto& l : d.loops) {
    d.winding.push_back(winding(sys, factor, l));
    d.max_abs_winding = std::max(d.max_abs_winding, std::abs(d.winding.back()));
  }
  return d;
}

// Bound on the number of simple cycles in a minimal winding-zero disk, for
// L simple loops of winding at most U on n arcs. Split any loop decomposition
// of such a disk into at most n loops that connect its support and the rest R.
// Dropping a zero-sum part of R keeps a smaller disk, so R is zero-sum free;
// ordering R greedily by sign keeps distinct partial sums in (-U, U] until one
// sign runs out, and the skeleton has winding at most nU. Hence
// |R| <= 2U + (n + 1)U.
std::int64_t cycle_count_bound(std::int64_t n, std::int64_t L, std::int64_t U) {
  const std::int64_t coarse = L + (L + 2) * U + 1 + std::max<std::int64_t>(L, 1) * U;
  return std::min(coarse, n + (n + 3) * U);
}

}  // namespace

std::int64_t disk_length_bound(const ArcSystem& sys, int factor, int order) {
  const auto n = static_cast<std::int64_t>(sys.arc_count(factor));
  if (order != 0) return n * order;
  const auto data = loop_data(sys, factor);
  return n * cycle_count_bound(n, static_cast<std::int64_t>(data.loops.size()), data.max_abs_winding);
}

DiskGeneratorSet enumerate_disk_generators(const ArcSystem& sys, int factor, int order, std::size_t max_nodes) {
  DiskGeneratorSet out;
  out.factor = factor;
  out.order = order;
  const std::size_t dim = sys.turn_count(factor);
  if (dim > 64) throw ResourceLimitError("disk enumeration supports at most 64 turns per factor");
  const auto data = loop_data(sys, factor);
  const std::int64_t bound = disk_length_bound(sys, factor, order);
  out.bound = bound;
  const std::int64_t cycles =
      order == 0 ? cycle_count_bound(static_cast<std::int64_t>(sys.arc_count(factor)),
                                     static_cast<std::int64_t>(data.loops.size()), data.max_abs_winding)
                 : 0;

  struct Entry {
    IntVector v;
    std::int64_t length;
  };
  using Key = std::pair<std::uint64_t, std::int64_t>;  // support mask, winding (residue when order > 0)
  std::map<Key, std::vector<Entry>> table;
  table[{0, 0}].push_back({IntVector(dim, 0), 0});
  std::size_t nodes = 0;

  auto insert = [&](std::map<Key, std::vector<Entry>>& into, const Key& key, Entry e) {
    if (++nodes > max_nodes)
      throw ResourceLimitError("disk enumeration exceeded " + std::to_string(max_nodes) + " nodes");
    auto& bucket = into[key];
    for (const auto& y : bucket)
      if (leq(y.v, e.v)) return;
    std::erase_if(bucket, [&](const Entry& y) { return leq(e.v, y.v); });
    bucket.push_back(std::move(e));
  };

  for (std::size_t i = 0; i < data.loops.size(); ++i) {
    const auto& loop = data.loops[i];
    const std::int64_t len = total(loop);
    std::uint64_t loop_mask = 0;
    for (std::size_t t = 0; t < dim; ++t)
      if (loop[t]) loop_mask |= std::uint64_t{1} << t;
    std::int64_t cap;
    if (order != 0) cap = order;
    else cap = data.winding[i] == 0 ? 1 : cycles;

    auto next = table;
    for (const auto& [key, bucket] : table) {
      for (const auto& e : bucket) {
        for (std::int64_t m = 1; m <= cap && e.length + m * len <= bound; ++m) {
          Entry f{e.v, e.length + m * len};
          for (std::size_t t = 0; t < dim; ++t) f.v[t] += m * loop[t];
          std::int64_t w = key.second + m * data.winding[i];
          if (order != 0) w = mod(w, order);
          insert(next, {key.first | loop_mask, w}, std::move(f));
        }
      }
    }
    table = std::move(next);
  }

  std::vector<IntVector> found;
  for (const auto& [key, bucket] : table) {
    if (key.first == 0 || key.second != 0) continue;
    for (const auto& e : bucket)
      if (disk_membership(sys, factor, e.v, order)) found.push_back(e.v);
  }
  out.generators = prune_generators(minimal_elements(std::move(found)));
  out.minimal = true;
  return out;
}

bool in_hull_plus_cone(std::span<const std::int64_t> d, const std::vector<IntVector>& others) {
  if (others.empty()) return false;
  const std::size_t dim = d.size();
  const std::size_t g = others.size();
  // Columns: λ_1..λ_g, then slacks s_t; rows: Σ λ g_t + s_t = d_t, Σ λ = 1.
  LpProblem p;
  p.c.assign(g + dim, Rational());
  for (std::size_t t = 0; t < dim; ++t) {
    RationalVector row(g + dim);
    for (std::size_t j = 0; j < g; ++j)
      if (others[j][t]) row[j] = make_rational(others[j][t]);
    row[g + t] = 1;
    p.A.push_back(std::move(row));
    p.b.push_back(make_rational(d[t]));
  }
  RationalVector ones(g + dim);
  for (std::size_t j = 0; j < g; ++j) ones[j] = 1;
  p.A.push_back(std::move(ones));
  p.b.push_back(1);
  return solve(p).status != LpStatus::Infeasible;
}

std::vector<IntVector> prune_generators(std::vector<IntVector> generators) {
  std::sort(generators.begin(), generators.end(), [](const IntVector& a, const IntVector& b) {
    auto ta = total(a), tb = total(b);
    return ta != tb ? ta < tb : a < b;
  });
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  // Try the heaviest first; anything found redundant is dropped immediately.
  for (std::size_t i = generators.size(); i-- > 0;) {
    std::vector<IntVector> rest;
    for (std::size_t j = 0; j < generators.size(); ++j)
      if (j != i) rest.push_back(generators[j]);
    if (in_hull_plus_cone(generators[i], rest)) generators.erase(generators.begin() + static_cast<std::ptrdiff_t>(i));
  }
  std::sort(generators.begin(), generators.end());
  return generators;
}

std::vector<IntVector> brute_force_generators(const ArcSystem& sys, int factor, int order, std::int64_t bound,
                                              std::size_t max_nodes) {
  const std::size_t dim = sys.turn_count(factor);
  std::vector<IntVector> found;
  if (bound <= 0 || dim == 0) return found;
  IntVector v(dim, 0);
  std::size_t nodes = 0;
  std::function<void(std::size_t, std::int64_t)> scan = [&](std::size_t t, std::int64_t left) {
    if (++nodes > max_nodes) throw ResourceLimitError("brute-force scan exceeded " + std::to_string(max_nodes) + " nodes");
    if (t == dim) {
      if (disk_membership(sys, factor, v, order)) found.push_back(v);
      return;
    }
    for (std::int64_t x = 0; x <= left; ++x) {
      v[t] = x;
      scan(t + 1, left - x);
    }
    v[t] = 0;
  };
  scan(0, bound);
  return prune_generators(minimal_elements(std::move(found)));
}

namespace {

bool in_convex_hull(const RationalVector& p, const std::vector<RationalVector>& points) {
  if (points.empty()) return false;
  LpProblem lp;
  const std::size_t g = points.size();
  lp.c.assign(g, Rational());
  for (std::size_t t = 0; t < p.size(); ++t) {
    RationalVector row(g);
    for (std::size_t j = 0; j < g; ++j) row[j] = points[j][t];
    lp.A.push_back(std::move(row));
    lp.b.push_back(p[t]);
  }
  lp.A.push_back(RationalVector(g, Rational(1)));
  lp.b.push_back(1);
  return solve(lp).status != LpStatus::Infeasible;
}

Integer floor_of(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil_of(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

}  // namespace

std::vector<IntVector> integer_hull(const std::vector<RationalVector>& vertices, std::size_t max_dimension,
                                    std::size_t max_box_points) {
  if (vertices.empty()) throw std::invalid_argument("integer_hull needs at least one vertex");
  const std::size_t dim = vertices.front().size();
  for (const auto& v : vertices)
    if (v.size() != dim) throw std::invalid_argument("integer_hull vertices have different dimensions");
  if (dim > max_dimension)
    throw ResourceLimitError("integer_hull dimension " + std::to_string(dim) + " exceeds cap " +
                             std::to_string(max_dimension));

  IntVector lo(dim), hi(dim);
  std::size_t box = 1;
  for (std::size_t t = 0; t < dim; ++t) {
    Rational mn = vertices.front()[t], mx = vertices.front()[t];
    for (const auto& v : vertices) {
      mn = std::min(mn, v[t]);
      mx = std::max(mx, v[t]);
    }
    lo[t] = to_int64(ceil_of(mn));
    hi[t] = to_int64(floor_of(mx));
    if (lo[t] > hi[t]) return {};
    const auto width = static_cast<std::size_t>(hi[t] - lo[t] + 1);
    if (box > max_box_points / width)
      throw ResourceLimitError("integer_hull bounding box exceeds " + std::to_string(max_box_points) + " points");
    box *= width;
  }

  std::vector<RationalVector> inside;
  IntVector p = lo;
  for (;;) {
    RationalVector q = to_rational(p);
    if (in_convex_hull(q, vertices)) inside.push_back(std::move(q));
    std::size_t t = 0;
    while (t < dim && p[t] == hi[t]) {
      p[t] = lo[t];
      ++t;
    }
    if (t == dim) break;
    ++p[t];
  }

  std::vector<IntVector> hull;
  for (std::size_t i = 0; i < inside.size(); ++i) {
    std::vector<RationalVector> rest;
    for (std::size_t j = 0; j < inside.size(); ++j)
      if (j != i) rest.push_back(inside[j]);
    if (!in_convex_hull(inside[i], rest)) {
      IntVector v;
      for (const auto& q : inside[i]) v.push_back(to_int64(q));
      hull.push_back(std::move(v));
    }
  }
  std::sort(hull.begin(), hull.end());
  return hull;
}

std::vector<std::pair<IntVector, std::int64_t>> decompose_into_loops(const ArcSystem& sys, int factor,
                                                                     std::span<const std::int64_t> v) {
  const std::size_t dim = sys.turn_count(factor);
  if (v.size() != dim) throw std::invalid_argument("turn vector has the wrong number of coordinates");
  for (auto x : v)
    if (x < 0) throw std::invalid_argument("decompose_into_loops needs a non-negative vector");
  if (!balanced(sys, factor, v)) throw std::invalid_argument("decompose_into_loops needs a balanced vector");

  const auto& turns = sys.turns(factor);
  const int n = static_cast<int>(sys.arc_count(factor));
  IntVector rest(v.begin(), v.end());
  std::map<IntVector, std::int64_t> loops;
  for (;;) {
    auto first = std::find_if(rest.begin(), rest.end(), [](std::int64_t x) { return x > 0; });
    if (first == rest.end()) break;
    // Walk along positive turns until an arc repeats; the tail is a simple cycle.
    std::vector<int> position(n, -1);
    std::vector<int> walk_turns;
    int u = turns[first - rest.begin()].from;
    while (position[u] < 0) {
      position[u] = static_cast<int>(walk_turns.size());
      int t = -1;
      for (int x = 0; x < n && t < 0; ++x) {
        int cand = sys.turn_index(factor, u, x);
        if (cand >= 0 && rest[cand] > 0) t = cand;
      }
      walk_turns.push_back(t);
      u = turns[t].to;
    }
    IntVector loop(dim, 0);
    std::int64_t mult = -1;
    for (std::size_t i = static_cast<std::size_t>(position[u]); i < walk_turns.size(); ++i) {
      loop[walk_turns[i]] = 1;
      mult = mult < 0 ? rest[walk_turns[i]] : std::min(mult, rest[walk_turns[i]]);
    }
    for (std::size_t t = 0; t < dim; ++t) rest[t] -= mult * loop[t];
    loops[loop] += mult;
  }
  return {loops.begin(), loops.end()};
}

std::vector<PricedDisk> cheapest_disks(const ArcSystem& sys, int factor, int order, std::span<const Rational> costs) {
  const int n = static_cast<int>(sys.arc_count(factor));
  if (costs.size() != sys.turn_count(factor)) throw std::invalid_argument("cost vector has the wrong size");
  for (const auto& c : costs)
    if (c < 0) throw std::invalid_argument("cheapest_disks needs non-negative costs");
  if (n == 0) return {};

  const auto& arcs = sys.arcs(factor);
  const auto& turns = sys.turns(factor);
  std::int64_t offset, width;  // winding coordinate: residue, or exact value shifted into [0, width)
  if (order != 0) {
    offset = 0;
    width = order;
  } else {
    std::int64_t max_t = 0;
    for (const auto& a : arcs) max_t = std::max(max_t, std::abs(a.exponent));
    offset = disk_length_bound(sys, factor, 0) * max_t;
    width = 2 * offset + 1;
  }
  const std::size_t states = static_cast<std::size_t>(n) * static_cast<std::size_t>(width);
  auto state = [&](int arc, std::int64_t w) { return static_cast<std::size_t>(arc) * width + w; };
  auto shift = [&](std::int64_t w, std::int64_t t) -> std::int64_t {
    if (order != 0) return mod(w + t, order);
    std::int64_t x = w + t;
    return x < 0 || x >= width ? -1 : x;
  };
  const std::int64_t zero = offset;

  std::vector<std::vector<int>> out_turns(n);
  for (std::size_t t = 0; t < turns.size(); ++t) out_turns[turns[t].from].push_back(static_cast<int>(t));

  std::vector<PricedDisk> result;
  std::vector<Rational> dist(states);
  std::vector<bool> reached(states), done(states);
  std::vector<std::pair<std::size_t, int>> pred(states);  // previous state, turn taken

  struct Item {
    Rational d;
    std::size_t s;
  };
  auto worse = [](const Item& a, const Item& b) { return a.d != b.d ? a.d > b.d : a.s > b.s; };

  for (int s = 0; s < n; ++s) {
    std::fill(reached.begin(), reached.end(), false);
    std::fill(done.begin(), done.end(), false);
    std::priority_queue<Item, std::vector<Item>, decltype(worse)> pq(worse);
    const std::size_t src = state(s, zero);
    dist[src] = 0;
    reached[src] = true;
    pq.push({Rational(0), src});

    bool found = false;
    Rational best;
    std::size_t best_state = 0;
    int best_turn = -1;

    while (!pq.empty()) {
      Item it = pq.top();
      pq.pop();
      if (done[it.s]) continue;
      if (found && it.d >= best) break;  // every closing edge costs at least 0
      done[it.s] = true;
      const int u = static_cast<int>(it.s / width);
      const std::int64_t w = static_cast<std::int64_t>(it.s % width);
      for (int t : out_turns[u]) {
        const int x = turns[t].to;
        const std::int64_t w2 = shift(w, arcs[x].exponent);
        if (w2 < 0) continue;
        Rational nd = it.d + costs[t];
        if (x == s && w2 == zero) {
          if (!found || nd < best) {
            found = true;
            best = nd;
            best_state = it.s;
            best_turn = t;
          }
          continue;
        }
        const std::size_t ns = state(x, w2);
        if (!reached[ns] || nd < dist[ns]) {
          reached[ns] = true;
          dist[ns] = nd;
          pred[ns] = {it.s, t};
          pq.push({std::move(nd), ns});
        }
      }
    }
    if (!found) continue;
    IntVector disk(turns.size(), 0);
    disk[best_turn] += 1;
    for (std::size_t cur = best_state; cur != src; cur = pred[cur].first) disk[pred[cur].second] += 1;
    result.push_back({best, std::move(disk)});
  }

  std::sort(result.begin(), result.end(), [](const PricedDisk& a, const PricedDisk& b) {
    return a.cost != b.cost ? a.cost < b.cost : a.disk < b.disk;
  });
  result.erase(std::unique(result.begin(), result.end(),
                           [](const PricedDisk& a, const PricedDisk& b) { return a.disk == b.disk; }),
               result.end());
  return result;
}

}  // namespace sclcone
