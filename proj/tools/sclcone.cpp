#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "sclcone/arc_graph.hpp"
#include "sclcone/chain.hpp"
#include "sclcone/disk_enum.hpp"
#include "sclcone/family.hpp"
#include "sclcone/heisenberg.hpp"
#include "sclcone/scl_engine.hpp"

using namespace sclcone;

namespace {

constexpr int kUsageError = 2;
constexpr int kResourceError = 3;

// "0,2..12" -> {0, 2, 3, ..., 12}
std::vector<int> parse_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto dots = item.find("..");
    try {
      if (dots == std::string::npos) {
        out.push_back(std::stoi(item));
      } else {
        int lo = std::stoi(item.substr(0, dots)), hi = std::stoi(item.substr(dots + 2));
        if (hi < lo) throw std::invalid_argument("empty range");
        for (int v = lo; v <= hi; ++v) out.push_back(v);
      }
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed order list '" + text + "'");
    }
  }
  return out;
}

Chain read_chain(const std::string& text, const std::string& gens, int order_a, int order_b) {
  std::array<char, 2> names{};
  if (gens.empty()) {
    names = infer_generators(text);
  } else {
    if (gens.size() != 2) throw std::invalid_argument("--gens takes two letters, e.g. ab");
    names = {gens[0], gens[1]};
  }
  return parse_chain(text, {FactorSpec{names[0], order_a}, FactorSpec{names[1], order_b}});
}

void print_warnings(const std::vector<std::string>& warnings) {
  for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact stable commutator length in free products of two cyclic groups"};
  app.require_subcommand(1);

  std::string chain_text, gens, strategy = "cg";
  int order_a = 0, order_b = 0;
  bool json = false;
  auto* compute = app.add_subcommand("compute", "scl of one chain");
  compute->add_option("chain", chain_text, "chain, e.g. \"[a,b]\" or \"aba^-2b^-2 + ab\"")->required();
  compute->add_option("--order-a", order_a, "order of the first generator (0 = infinite)");
  compute->add_option("--order-b", order_b, "order of the second generator (0 = infinite)");
  compute->add_option("--gens", gens, "generator letters, default inferred");
  compute->add_option("--strategy", strategy, "cg (column generation) or enumerate")
      ->check(CLI::IsMember({"cg", "enumerate"}));
  compute->add_flag("--json", json, "print the JSON result");

  std::string orders_a_text, orders_b_text, out_path;
  int jobs = 1;
  bool timing = false;
  auto* scan_cmd = app.add_subcommand("scan", "scl over a grid of orders, as CSV");
  scan_cmd->add_option("chain", chain_text)->required();
  scan_cmd->add_option("--orders-a", orders_a_text, "list such as 2,3,5 or 2..12")->required();
  scan_cmd->add_option("--orders-b", orders_b_text, "list such as 2,3,5 or 2..12")->required();
  scan_cmd->add_option("--out", out_path, "CSV output file (default: stdout)");
  scan_cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  scan_cmd->add_option("--gens", gens);
  scan_cmd->add_flag("--timing", timing, "record wall-clock milliseconds (otherwise 0)");

  std::string csv_path, axis = "a";
  int max_period = 6, max_degree = 2;
  auto* fit = app.add_subcommand("fit", "congruence-class rational fits of a scan");
  fit->add_option("csv", csv_path)->required()->check(CLI::ExistingFile);
  fit->add_option("--axis", axis, "order that varies")->check(CLI::IsMember({"a", "b"}));
  fit->add_option("--max-period", max_period)->check(CLI::PositiveNumber);
  fit->add_option("--max-degree", max_degree)->check(CLI::NonNegativeNumber);

  std::string factor_name;
  auto* diskgen = app.add_subcommand("diskgen", "disk-vector generators per factor, as JSON");
  diskgen->add_option("chain", chain_text)->required();
  diskgen->add_option("--order-a", order_a);
  diskgen->add_option("--order-b", order_b);
  diskgen->add_option("--gens", gens);
  diskgen->add_option("--factor", factor_name, "restrict to one generator letter");

  auto* arcs = app.add_subcommand("arcs", "arc system of a chain, as JSON");
  arcs->add_option("chain", chain_text)->required();
  arcs->add_option("--order-a", order_a);
  arcs->add_option("--order-b", order_b);
  arcs->add_option("--gens", gens);

  int u = 1, v = 1, max_t = 12;
  std::int64_t m = 1, n = 2;
  bool check = false;
  auto* heis = app.add_subcommand("heisenberg", "word oracle in the integral Heisenberg group");
  heis->require_subcommand(1);
  auto* suv = heis->add_subcommand("suv", "S_{u,v}: brute force and closed form");
  suv->add_option("--u", u)->required()->check(CLI::NonNegativeNumber);
  suv->add_option("--v", v)->required()->check(CLI::NonNegativeNumber);
  suv->add_flag("--check", check, "exit 1 unless both sets agree");
  auto* region = heis->add_subcommand("region", "disk-vector region grid");
  region->add_option("--m", m)->required();
  region->add_option("--n", n)->required();
  region->add_option("--max", max_t, "largest u and v")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kUsageError;
  }

  try {
    if (*compute) {
      Chain chain = read_chain(chain_text, gens, order_a, order_b);
      SclOptions opts;
      opts.strategy = strategy == "enumerate" ? Strategy::Enumerate : Strategy::ColumnGeneration;
      SclResult r = compute_scl(chain, opts);
      print_warnings(r.warnings);
      if (json) {
        std::cout << to_json(r) << "\n";
      } else if (r.status == SclStatus::Infinite) {
        std::cout << "infinite\n";
      } else {
        std::cout << to_string(r.value) << "\n";
      }
      if (!r.certificate_ok) {
        std::cerr << "error: certificate check failed\n";
        return 1;
      }
      return 0;
    }

    if (*scan_cmd) {
      Chain chain = read_chain(chain_text, gens, 0, 0);
      ScanTable table = scan(chain, parse_list(orders_a_text), parse_list(orders_b_text), jobs);
      if (out_path.empty()) {
        write_csv(std::cout, table, timing);
      } else {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot write " + out_path);
        write_csv(out, table, timing);
      }
      for (const auto& row : table.rows)
        if (!row.message.empty())
          std::cerr << "(" << row.order_a << "," << row.order_b << ") " << row.status << ": " << row.message << "\n";
      return 0;
    }

    if (*fit) {
      std::ifstream in(csv_path);
      ScanTable table = read_csv(in);
      FitReport report = detect_congruence_pattern(table, axis == "a" ? 0 : 1, max_period, max_degree);
      const char var = axis == "a" ? 'a' : 'b';
      const char other = axis == "a" ? 'b' : 'a';
      std::cout << "caps: period <= " << max_period << ", degree <= " << max_degree << "\n";
      for (const auto& f : report.fits) {
        std::cout << "order_" << other << "=" << f.fixed_order << "  period " << f.period << "  o_" << var
                  << " = " << f.residue << " mod " << f.period << "  range [" << f.first << ", " << f.last << "] ("
                  << f.points << " points)  f(o) = " << f.f.render() << "\n";
      }
      for (int fixed : report.unfitted)
        std::cout << "order_" << other << "=" << fixed << "  no fit found within caps\n";
      return 0;
    }

    if (*diskgen || *arcs) {
      Chain chain = normalize(read_chain(chain_text, gens, order_a, order_b));
      if (homological_check(chain) == Homology::Nontrivial)
        throw std::invalid_argument("chain is not homologically trivial (scl is infinite)");
      ArcSystem sys(chain);
      if (*arcs) {
        std::cout << sys.to_json() << "\n";
        return 0;
      }
      nlohmann::json out;
      out["chain"] = render(chain);
      for (int f = 0; f < 2; ++f) {
        if (!factor_name.empty() && factor_name[0] != chain.factors[f].name) continue;
        DiskGeneratorSet set = enumerate_disk_generators(sys, f, sys.order(f));
        nlohmann::json entry;
        entry["factor"] = std::string(1, chain.factors[f].name);
        entry["order"] = set.order;
        entry["bound"] = set.bound;
        entry["minimal"] = set.minimal;
        for (const auto& d : set.generators) {
          nlohmann::json coords = nlohmann::json::object();
          for (std::size_t t = 0; t < d.size(); ++t)
            if (d[t]) coords[sys.turn_label(f, static_cast<int>(t))] = d[t];
          entry["generators"].push_back(
              {{"turns", coords}, {"winding", winding(sys, f, d)}, {"norm", turn_norm(sys, f, d)}});
        }
        out["factors"].push_back(entry);
      }
      std::cout << out.dump(2) << "\n";
      return 0;
    }

    if (*suv) {
      auto range = suv_formula(u, v);
      std::set<std::int64_t> formula;
      if (range)
        for (auto r = range->lo; r <= range->hi; ++r) formula.insert(r);
      auto show = [](const std::set<std::int64_t>& s) {
        std::string out = "{";
        for (auto x : s) out += (out.size() > 1 ? ", " : "") + std::to_string(x);
        return out + "}";
      };
      std::set<std::int64_t> brute;
      try {
        brute = suv_bruteforce(u, v);
      } catch (const ResourceLimitError& e) {
        if (check) throw;
        std::cout << "formula    " << show(formula) << "\nunverified (" << e.what() << ")\n";
        return 0;
      }
      std::cout << "bruteforce " << show(brute) << "\nformula    " << show(formula) << "\n";
      const bool match = brute == formula;
      std::cout << (match ? "match" : "MISMATCH") << "\n";
      return check && !match ? 1 : 0;
    }

    if (*region) {
      std::cout << "v\\u";
      for (int uu = 0; uu <= max_t; ++uu) std::cout << ' ' << (uu % 10);
      std::cout << "\n";
      for (int vv = 0; vv <= max_t; ++vv) {
        std::cout << (vv < 10 ? "  " : " ") << vv;
        for (int uu = 0; uu <= max_t; ++uu) std::cout << ' ' << (disk_region(m, n, uu, vv) ? '#' : '.');
        std::cout << "\n";
      }
      return 0;
    }
  } catch (const ResourceLimitError& e) {
    std::cerr << "unable to certify: " << e.what() << "\n";
    return kResourceError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
