#include "sclcone/arc_graph.hpp"

#include "json.hpp"

namespace sclcone {

ArcSystem::ArcSystem(const Chain& normalized) : chain_(normalized) {
  // word, position -> arc index within its factor
  std::vector<std::vector<int>> index(chain_.terms.size());
  for (std::size_t w = 0; w < chain_.terms.size(); ++w) {
    const auto& syl = chain_.terms[w].word.syllables;
    const bool self = syl.size() == 1;
    for (std::size_t p = 0; p < syl.size(); ++p) {
      const int f = syl[p].factor;
      Arc arc;
      arc.id = static_cast<int>(arcs_[f].size());
      arc.factor = f;
      arc.exponent = syl[p].exponent;
      arc.word = static_cast<int>(w);
      arc.position = static_cast<int>(p);
      arc.self_loop = self;
      index[w].push_back(arc.id);
      arcs_[f].push_back(arc);
    }
  }

  for (int f = 0; f < 2; ++f) {
    next_[f].assign(arcs_[f].size(), -1);
    prev_[f].assign(arcs_[f].size(), -1);
    for (const auto& arc : arcs_[f]) {
      if (arc.self_loop) continue;
      const auto& syl = chain_.terms[arc.word].word.syllables;
      const std::size_t n = syl.size();
      next_[f][arc.id] = index[arc.word][(arc.position + 1) % n];
      prev_[f][arc.id] = index[arc.word][(arc.position + n - 1) % n];
    }

    const int n = static_cast<int>(arcs_[f].size());
    turn_lookup_[f].assign(static_cast<std::size_t>(n) * n, -1);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if ((arcs_[f][i].self_loop || arcs_[f][j].self_loop) && i != j) continue;
        turn_lookup_[f][static_cast<std::size_t>(i) * n + j] = static_cast<int>(turns_[f].size());
        turns_[f].push_back({i, j});
      }
    }
  }

  for (int f = 0; f < 2; ++f) {
    const int g = 1 - f;
    partner_[f].assign(turns_[f].size(), -1);
    for (std::size_t t = 0; t < turns_[f].size(); ++t) {
      const auto& turn = turns_[f][t];
      if (arcs_[f][turn.from].self_loop) continue;
      partner_[f][t] = turn_index(g, prev_[f][turn.to], next_[f][turn.from]);
    }
  }
}

int ArcSystem::turn_index(int factor, int from, int to) const {
  const int n = static_cast<int>(arcs_[factor].size());
  if (from < 0 || to < 0 || from >= n || to >= n) return -1;
  return turn_lookup_[factor][static_cast<std::size_t>(from) * n + to];
}

bool ArcSystem::is_self_loop_turn(int factor, int turn) const {
  return arcs_[factor][turns_[factor][turn].from].self_loop;
}

std::string ArcSystem::arc_label(int factor, int arc) const {
  const auto& a = arcs_[factor][arc];
  std::string out(1, chain_.factors[factor].name);
  if (a.exponent != 1) out += "^" + std::to_string(a.exponent);
  return out + "@" + std::to_string(a.word) + "." + std::to_string(a.position);
}

std::string ArcSystem::turn_label(int factor, int turn) const {
  const auto& t = turns_[factor][turn];
  return "(" + arc_label(factor, t.from) + "," + arc_label(factor, t.to) + ")";
}

std::string ArcSystem::to_json() const {
  using nlohmann::json;
  json out;
  out["chain"] = render(chain_);
  for (int f = 0; f < 2; ++f) {
    json factor;
    factor["name"] = std::string(1, chain_.factors[f].name);
    factor["order"] = chain_.factors[f].order;
    json arcs = json::array();
    for (const auto& a : arcs_[f])
      arcs.push_back({{"id", a.id},
                      {"exponent", a.exponent},
                      {"word", a.word},
                      {"position", a.position},
                      {"self_loop", a.self_loop},
                      {"next", next_[f][a.id]},
                      {"prev", prev_[f][a.id]}});
    json turns = json::array();
    for (std::size_t t = 0; t < turns_[f].size(); ++t)
      turns.push_back({{"id", t},
                       {"from", turns_[f][t].from},
                       {"to", turns_[f][t].to},
                       {"partner", partner_[f][t]},
                       {"label", turn_label(f, static_cast<int>(t))}});
    factor["arcs"] = std::move(arcs);
    factor["turns"] = std::move(turns);
    out["factors"].push_back(std::move(factor));
  }
  return out.dump(2);
}

namespace {

void check_size(const ArcSystem& sys, int factor, std::size_t n) {
  if (n != sys.turn_count(factor))
    throw std::invalid_argument("turn vector has " + std::to_string(n) + " coordinates, factor has " +
                                std::to_string(sys.turn_count(factor)) + " turns");
}

}  // namespace

RationalVector boundary_map(const ArcSystem& sys, int factor, std::span<const Rational> v) {
  check_size(sys, factor, v.size());
  RationalVector out(sys.arc_count(factor));
  for (std::size_t t = 0; t < v.size(); ++t) {
    if (v[t] == 0) continue;
    const auto& turn = sys.turns(factor)[t];
    out[turn.from] += v[t];
    out[turn.to] -= v[t];
  }
  return out;
}

Rational winding(const ArcSystem& sys, int factor, std::span<const Rational> v) {
  check_size(sys, factor, v.size());
  Rational sum;
  const auto& arcs = sys.arcs(factor);
  for (std::size_t t = 0; t < v.size(); ++t) {
    if (v[t] == 0) continue;
    const auto& turn = sys.turns(factor)[t];
    sum += v[t] * make_rational(arcs[turn.from].exponent + arcs[turn.to].exponent, 2);
  }
  return sum;
}

std::int64_t winding(const ArcSystem& sys, int factor, std::span<const std::int64_t> v) {
  check_size(sys, factor, v.size());
  std::int64_t twice = 0;
  const auto& arcs = sys.arcs(factor);
  for (std::size_t t = 0; t < v.size(); ++t) {
    const auto& turn = sys.turns(factor)[t];
    twice += v[t] * (arcs[turn.from].exponent + arcs[turn.to].exponent);
  }
  if (twice % 2 != 0) throw std::invalid_argument("integer winding requested for a vector with half-integral winding");
  return twice / 2;
}

Rational turn_norm(const ArcSystem& sys, int factor, std::span<const Rational> v) {
  check_size(sys, factor, v.size());
  Rational sum;
  for (std::size_t t = 0; t < v.size(); ++t) {
    if (v[t] < 0) throw std::invalid_argument("turn_norm of a vector with a negative coordinate");
    if (sys.norm_weight(factor, static_cast<int>(t))) sum += v[t];
  }
  return sum;
}

std::int64_t turn_norm(const ArcSystem& sys, int factor, std::span<const std::int64_t> v) {
  check_size(sys, factor, v.size());
  std::int64_t sum = 0;
  for (std::size_t t = 0; t < v.size(); ++t) {
    if (v[t] < 0) throw std::invalid_argument("turn_norm of a vector with a negative coordinate");
    if (sys.norm_weight(factor, static_cast<int>(t))) sum += v[t];
  }
  return sum;
}

RationalVector to_rational(std::span<const std::int64_t> v) {
  RationalVector out;
  out.reserve(v.size());
  for (auto x : v) out.push_back(make_rational(x));
  return out;
}

}  // namespace sclcone
