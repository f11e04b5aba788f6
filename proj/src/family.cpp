#include "sclcone/family.hpp"

#include <algorithm>
#include <atomic>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <thread>

namespace sclcone {

ScanTable scan(const Chain& chain, std::vector<int> orders_a, std::vector<int> orders_b, int jobs,
               const SclOptions& options) {
  std::sort(orders_a.begin(), orders_a.end());
  orders_a.erase(std::unique(orders_a.begin(), orders_a.end()), orders_a.end());
  std::sort(orders_b.begin(), orders_b.end());
  orders_b.erase(std::unique(orders_b.begin(), orders_b.end()), orders_b.end());

  ScanTable table;
  for (int a : orders_a)
    for (int b : orders_b) table.rows.push_back({a, b, "", Rational(), 0, ""});

  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < table.rows.size(); i = next++) {
      auto& row = table.rows[i];
      try {
        SclResult r = compute_scl(with_orders(chain, row.order_a, row.order_b), options);
        row.status = to_string(r.status);
        row.value = r.value;
        row.millis = r.millis;
        if (r.status == SclStatus::Finite && !r.certificate_ok) {
          row.status = "error";
          row.message = "certificate check failed";
        }
      } catch (const ResourceLimitError& e) {
        row.status = "resource_limit";
        row.message = e.what();
      } catch (const std::exception& e) {
        row.status = "error";
        row.message = e.what();
      }
    }
  };
  const int n = std::max(1, std::min<int>(jobs, static_cast<int>(table.rows.size())));
  std::vector<std::thread> threads;
  for (int t = 1; t < n; ++t) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();
  return table;
}

void write_csv(std::ostream& out, const ScanTable& table, bool timing) {
  out << "order_a,order_b,status,scl_num,scl_den,millis\n";
  for (const auto& row : table.rows) {
    out << row.order_a << ',' << row.order_b << ',' << row.status << ',';
    if (row.status == "finite" || row.status == "empty")
      out << row.value.get_num().get_str() << ',' << row.value.get_den().get_str();
    else
      out << ',';
    out << ',' << (timing ? static_cast<long long>(row.millis + 0.5) : 0LL) << '\n';
  }
}

namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

int parse_int(const std::string& s, std::size_t line) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw std::invalid_argument("line " + std::to_string(line) + ": expected an integer, got '" + s + "'");
}

}  // namespace

ScanTable read_csv(std::istream& in) {
  ScanTable table;
  std::string line;
  std::size_t lineno = 0;
  bool header = true;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (header) {
      header = false;
      if (line.rfind("order_a", 0) == 0) continue;
    }
    auto cells = split(line);
    if (cells.size() != 6)
      throw std::invalid_argument("line " + std::to_string(lineno) + ": expected 6 columns, got " +
                                  std::to_string(cells.size()));
    ScanRow row;
    row.order_a = parse_int(cells[0], lineno);
    row.order_b = parse_int(cells[1], lineno);
    row.status = cells[2];
    if (!cells[3].empty()) {
      try {
        row.value = parse_rational(cells[3] + "/" + cells[4]);
      } catch (const std::invalid_argument&) {
        throw std::invalid_argument("line " + std::to_string(lineno) + ": malformed scl value");
      }
    }
    row.millis = parse_int(cells[5], lineno);
    table.rows.push_back(std::move(row));
  }
  std::sort(table.rows.begin(), table.rows.end(), [](const ScanRow& x, const ScanRow& y) {
    return std::pair(x.order_a, x.order_b) < std::pair(y.order_a, y.order_b);
  });
  return table;
}

namespace {

using Poly = std::vector<Rational>;  // constant term first

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Rational eval(const Poly& p, const Rational& x) {
  Rational acc;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

Poly poly_mod(Poly a, const Poly& b) {
  trim(a);
  while (a.size() >= b.size()) {
    const Rational f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    trim(a);
  }
  return a;
}

Poly poly_div(Poly a, const Poly& b) {
  trim(a);
  if (a.size() < b.size()) return {};
  Poly q(a.size() - b.size() + 1);
  while (a.size() >= b.size()) {
    const Rational f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    trim(a);
  }
  return q;
}

Poly poly_gcd(Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Nullspace basis of a rational matrix (rows of equal length).
std::vector<RationalVector> nullspace(std::vector<RationalVector> m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t p = row;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    const Rational piv = m[row][c];
    for (auto& x : m[row]) x /= piv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][c] == 0) continue;
      const Rational f = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[row][j];
    }
    pivots.push_back(c);
    ++row;
  }
  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
    RationalVector v(cols);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Integer> to_integers(const Poly& p, const Integer& scale) {
  std::vector<Integer> out;
  for (const auto& c : p) {
    Rational s = c * scale;
    out.push_back(s.get_num());
  }
  return out;
}

// Reduces num/den by their gcd and scales to coprime integer coefficients.
RationalFunction normalise(Poly num, Poly den) {
  trim(num);
  trim(den);
  Poly g = poly_gcd(num, den);
  if (g.size() > 1) {
    num = poly_div(num, g);
    den = poly_div(den, g);
  }
  if (num.empty()) {
    num = {Rational(0)};
    den = {Rational(1)};
  }
  Integer l = 1;
  for (const auto* p : {&num, &den})
    for (const auto& c : *p) l = lcm(l, Integer(c.get_den()));
  auto n = to_integers(num, l), d = to_integers(den, l);
  Integer g2 = 0;
  for (const auto* p : {&n, &d})
    for (const auto& c : *p) g2 = gcd(g2, c);
  if (d.back() < 0) g2 = -g2;
  for (auto& c : n) c /= g2;
  for (auto& c : d) c /= g2;
  return {std::move(n), std::move(d)};
}

}  // namespace

Rational RationalFunction::operator()(const Rational& o) const {
  Rational p, q;
  for (std::size_t i = num.size(); i-- > 0;) p = p * o + Rational(num[i]);
  for (std::size_t i = den.size(); i-- > 0;) q = q * o + Rational(den[i]);
  if (q == 0) throw std::domain_error("rational function has a pole at " + to_string(o));
  return p / q;
}

std::string RationalFunction::render(const std::string& var) const {
  auto poly = [&](const std::vector<Integer>& p) {
    std::string out;
    for (std::size_t i = p.size(); i-- > 0;) {
      if (p[i] == 0) continue;
      Integer c = p[i];
      if (out.empty()) {
        if (c < 0) out += "-";
      } else {
        out += c < 0 ? " - " : " + ";
      }
      c = abs(c);
      const bool show = c != 1 || i == 0;
      if (show) out += c.get_str();
      if (i > 0) {
        if (show) out += "*";
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
      }
    }
    return out.empty() ? std::string("0") : out;
  };
  const std::string n = poly(num), d = poly(den);
  if (d == "1") return n;
  return "(" + n + ")/(" + d + ")";
}

std::optional<RationalFunction> fit_rational_function(const std::vector<std::pair<Rational, Rational>>& points,
                                                      int max_degree) {
  for (int d = 0; d <= max_degree; ++d) {
    const std::size_t unknowns = 2 * static_cast<std::size_t>(d) + 2;
    // 2d + 1 points determine a degree-d fit; demand at least one more as a check.
    if (points.size() < unknowns) break;
    std::vector<RationalVector> m;
    for (const auto& [o, f] : points) {
      RationalVector row(unknowns);
      Rational power = 1;
      for (int i = 0; i <= d; ++i) {
        row[i] = power;
        row[d + 1 + i] = -f * power;
        power *= o;
      }
      m.push_back(std::move(row));
    }
    for (const auto& v : nullspace(std::move(m), unknowns)) {
      Poly num(v.begin(), v.begin() + d + 1), den(v.begin() + d + 1, v.end());
      trim(den);
      if (den.empty()) continue;
      RationalFunction rf = normalise(num, den);
      Poly rden(rf.den.begin(), rf.den.end());
      bool ok = true;
      for (const auto& [o, f] : points) {
        if (eval(rden, o) == 0 || rf(o) != f) {
          ok = false;
          break;
        }
      }
      if (ok) return rf;
    }
  }
  return std::nullopt;
}

namespace {

struct Piece {
  std::size_t begin, end;  // point indices [begin, end)
  RationalFunction f;
};

std::size_t degree_of(const RationalFunction& f) { return std::max(f.num_degree(), f.den_degree()); }

// Cover of consecutive points by exactly fitted pieces: fewest pieces, then
// least degree sum, ties going to the longest final piece.
std::optional<std::vector<Piece>> segment(const std::vector<std::pair<Rational, Rational>>& pts, int max_degree) {
  const std::size_t n = pts.size();
  if (n == 0) return std::vector<Piece>{};
  struct Best {
    bool ok = false;
    std::size_t pieces = 0, degree = 0, from = 0;
    std::optional<RationalFunction> f;
  };
  std::vector<Best> best(n + 1);
  best[0].ok = true;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 0; j + 1 < i; ++j) {
      if (!best[j].ok) continue;
      std::vector<std::pair<Rational, Rational>> slice(pts.begin() + static_cast<std::ptrdiff_t>(j),
                                                       pts.begin() + static_cast<std::ptrdiff_t>(i));
      auto f = fit_rational_function(slice, max_degree);
      if (!f) continue;
      const std::size_t pieces = best[j].pieces + 1, degree = best[j].degree + degree_of(*f);
      if (!best[i].ok || pieces < best[i].pieces || (pieces == best[i].pieces && degree < best[i].degree)) {
        best[i] = {true, pieces, degree, j, std::move(f)};
      }
    }
  }
  if (!best[n].ok) return std::nullopt;
  std::vector<Piece> out;
  for (std::size_t i = n; i > 0; i = best[i].from) out.push_back({best[i].from, i, *best[i].f});
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace

FitReport detect_congruence_pattern(const ScanTable& table, int axis, int max_period, int max_degree) {
  if (axis != 0 && axis != 1) throw std::invalid_argument("axis must be 0 (a) or 1 (b)");
  std::map<int, std::vector<std::pair<int, Rational>>> groups;
  for (const auto& row : table.rows) {
    if (row.status != "finite" && row.status != "empty") continue;
    const int var = axis == 0 ? row.order_a : row.order_b;
    const int fixed = axis == 0 ? row.order_b : row.order_a;
    groups[fixed].emplace_back(var, row.value);
  }

  FitReport report;
  for (auto& [fixed, rows] : groups) {
    std::sort(rows.begin(), rows.end());
    bool done = false;
    for (int p = 1; p <= max_period && !done; ++p) {
      std::vector<CongruenceFit> fits;
      bool ok = true;
      for (int r = 0; r < p && ok; ++r) {
        std::vector<std::pair<Rational, Rational>> pts;
        std::vector<int> xs;
        for (const auto& [o, v] : rows) {
          if (((o % p) + p) % p != r) continue;
          pts.emplace_back(make_rational(o), v);
          xs.push_back(o);
        }
        auto pieces = segment(pts, max_degree);
        if (!pieces || pts.empty()) {
          ok = false;
          break;
        }
        for (auto& piece : *pieces) {
          CongruenceFit fit;
          fit.axis = axis;
          fit.fixed_order = fixed;
          fit.period = p;
          fit.residue = r;
          fit.first = xs[piece.begin];
          fit.last = xs[piece.end - 1];
          fit.points = piece.end - piece.begin;
          fit.f = std::move(piece.f);
          fits.push_back(std::move(fit));
        }
      }
      if (ok) {
        report.fits.insert(report.fits.end(), fits.begin(), fits.end());
        done = true;
      }
    }
    if (!done) report.unfitted.push_back(fixed);
  }
  return report;
}

}  // namespace sclcone
