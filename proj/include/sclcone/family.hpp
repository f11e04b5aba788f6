#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "sclcone/chain.hpp"
#include "sclcone/scl_engine.hpp"

namespace sclcone {

struct ScanRow {
  int order_a = 0;
  int order_b = 0;
  /// finite, infinite, empty, resource_limit or error
  std::string status;
  Rational value;  // meaningful for finite and empty rows
  double millis = 0;
  std::string message;
};

struct ScanTable {
  std::vector<ScanRow> rows;  // sorted by (order_a, order_b)
};

/// scl of the chain at every grid point; row-level failures never abort the
/// scan. Results do not depend on `jobs`.
ScanTable scan(const Chain& chain, std::vector<int> orders_a, std::vector<int> orders_b, int jobs = 1,
               const SclOptions& options = {});

/// Columns order_a,order_b,status,scl_num,scl_den,millis; millis is written
/// as 0 unless `timing` is set, so that repeated scans are byte-identical.
void write_csv(std::ostream& out, const ScanTable& table, bool timing = false);
/// Throws std::invalid_argument on a malformed file.
ScanTable read_csv(std::istream& in);

/// Exact rational function num(o)/den(o); coefficients from the constant term
/// up, integers with gcd 1 and positive leading denominator coefficient.
struct RationalFunction {
  std::vector<Integer> num;
  std::vector<Integer> den;
  Rational operator()(const Rational& o) const;
  std::size_t num_degree() const { return num.size() - 1; }
  std::size_t den_degree() const { return den.size() - 1; }
  std::string render(const std::string& var = "o") const;
};

struct CongruenceFit {
  int axis = 0;         // 0: order_a varies, 1: order_b varies
  int fixed_order = 0;  // value of the other order
  int period = 1;
  int residue = 0;
  int first = 0;  // verified range of the varying order
  int last = 0;
  std::size_t points = 0;
  RationalFunction f;
};

struct FitReport {
  std::vector<CongruenceFit> fits;
  /// Groups (fixed order values) for which no period up to the cap worked.
  std::vector<int> unfitted;
};

/// Smallest period p <= max_period such that every residue class of the
/// varying order splits into consecutive pieces, each matched exactly by a
/// rational function of degree at most max_degree and confirmed on at least
/// one point beyond those determining it. Among the covers for that period,
/// fewest pieces, then least total degree.
FitReport detect_congruence_pattern(const ScanTable& table, int axis, int max_period, int max_degree);

/// Exact fit of one rational function through all points, or nullopt.
std::optional<RationalFunction> fit_rational_function(const std::vector<std::pair<Rational, Rational>>& points,
                                                      int max_degree);

}  // namespace sclcone
