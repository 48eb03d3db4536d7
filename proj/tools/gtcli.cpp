#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "cascade/adaptive.hpp"
#include "cascade/bounds.hpp"
#include "cascade/construct.hpp"
#include "cascade/design.hpp"
#include "cascade/exact.hpp"
#include "cascade/feasibility.hpp"
#include "cascade/systematic.hpp"

namespace {

using namespace cascade;

constexpr int kOk = 0;
constexpr int kNegative = 1;  // mathematically negative answer (infeasible)
constexpr int kError = 2;     // usage or I/O error

std::uint64_t default_budget() {
  if (const char* env = std::getenv("CASCADE_STEP_BUDGET")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      // fall through to the built-in default
    }
  }
  return kDefaultStepBudget;
}

std::string set_to_string(const DefectiveSet& s) {
  std::ostringstream out;
  out << '{';
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) out << ',';
    out << s[i];
  }
  out << '}';
  return out.str();
}

std::string seq_to_string(const TestSeq& t) {
  std::ostringstream out;
  out << '(';
  for (size_t i = 0; i < t.size(); ++i) {
    if (i) out << ',';
    out << t[i];
  }
  out << ')';
  return out.str();
}

DefectiveSet parse_defectives(const std::string& csv) {
  std::vector<ItemId> items;
  std::istringstream in(csv);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (tok.empty()) continue;
    size_t used = 0;
    const int v = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument("bad item: " + tok);
    items.push_back(v);
  }
  return make_defective_set(std::move(items));
}

void print_report(const FeasibilityReport& r) {
  if (r.feasible) {
    std::cout << "FEASIBLE\n";
    return;
  }
  std::cout << "INFEASIBLE\n";
  if (r.condition_witness) {
    std::cout << "witness: subset=" << set_to_string(r.condition_witness->subset)
              << " item=" << r.condition_witness->item
              << " (no test reports this item first within the subset)\n";
  }
  if (r.collision_witness) {
    std::cout << "witness: colliding sets "
              << set_to_string(r.collision_witness->first) << " and "
              << set_to_string(r.collision_witness->second)
              << " (identical output vectors)\n";
  }
}

std::string bounds_kv(const BoundsSummary& s) {
  std::ostringstream out;
  out << "n=" << s.n << " k=" << s.k;
  auto opt = [&](const char* name, const std::optional<long long>& v) {
    out << ' ' << name << '=';
    if (v) out << *v;
    else out << "n/a";
  };
  opt("lower_alpha_beta", s.lower_alpha_beta);
  opt("lower_es", s.lower_es);
  out << " lower_trivial=" << s.lower_trivial;
  opt("upper_randomized", s.upper_randomized);
  out << " upper_recursive=" << s.upper_recursive
      << " upper_constructed=" << s.upper_constructed
      << " best_lower=" << s.best_lower << " best_upper=" << s.best_upper;
  return out.str();
}

void print_bounds_table(const BoundsSummary& s) {
  auto row = [](const std::string& name, const std::string& value) {
    std::cout << "  " << name;
    for (size_t i = name.size(); i < 28; ++i) std::cout << ' ';
    std::cout << value << "\n";
  };
  auto opt = [](const std::optional<long long>& v) {
    return v ? std::to_string(*v) : std::string("n/a");
  };
  std::cout << "bounds for N=" << s.n << ", K=" << s.k << "\n";
  row("lower: alpha-beta", opt(s.lower_alpha_beta));
  row("lower: Erdos-Szekeres", opt(s.lower_es));
  row("lower: trivial (K)", std::to_string(s.lower_trivial));
  row("upper: randomized", opt(s.upper_randomized));
  row("upper: recursion bound", std::to_string(s.upper_recursive));
  row("upper: constructed size", std::to_string(s.upper_constructed));
  row("best lower", std::to_string(s.best_lower));
  row("best upper", std::to_string(s.best_upper));
}

int cmd_gen(int n, int k, const std::string& method,
            std::optional<std::uint64_t> seed, std::optional<int> t_count,
            const std::string& out_path) {
  Design d;
  std::vector<std::string> provenance;
  if (method == "recursive") {
    d = design_for(n, k);
    std::ostringstream c;
    c << "method=recursive n=" << n << " k=" << k;
    provenance.push_back(c.str());
  } else if (method == "random") {
    if (k < 2) {
      std::cerr << "error: random method requires k >= 2\n";
      return kError;
    }
    const std::uint64_t s = seed.value_or(0);
    const int t = t_count.value_or(static_cast<int>(upper_bound_randomized(n, k)));
    d = randomized_design(n, k, t, Seed{s});
    std::ostringstream c;
    c << "method=random generator=mt19937_64/fisher-yates-rejection-v1 n=" << n
      << " k=" << k << " seed=" << s << " tests=" << t;
    provenance.push_back(c.str());
  } else {
    std::cerr << "error: unknown method '" << method << "'\n";
    return kError;
  }
  if (out_path.empty()) {
    std::cout << format_design(d, provenance);
  } else {
    write_design_file(out_path, d, provenance);
  }
  std::cout << "tests=" << d.tests.size() << "\n";
  std::cout << bounds_kv(bounds_summary(n, k)) << "\n";
  return kOk;
}

int cmd_verify(const std::string& design_path, const std::string& method,
               std::uint64_t budget) {
  const Design d = parse_design_file(design_path);
  FeasibilityReport r;
  if (method == "condition") {
    r = check_feasible_thm1(d, budget);
  } else if (method == "injectivity") {
    r = check_injective_oracle(d, budget);
  } else if (method == "systematic") {
    if (!is_systematic(d)) {
      std::cerr << "error: design is not in systematic form; the systematic "
                   "method requires each test's first item to appear in no "
                   "other test\n";
      return kError;
    }
    r = check_systematic_thm3(d, budget);
  } else {
    std::cerr << "error: unknown method '" << method << "'\n";
    return kError;
  }
  print_report(r);
  return r.feasible ? kOk : kNegative;
}

int cmd_simulate(const std::string& design_path, const std::string& defectives) {
  const Design d = parse_design_file(design_path);
  const DefectiveSet ks = parse_defectives(defectives);
  const OutputVector y = run_design(d, ks);
  std::cout << "y=[";
  for (size_t i = 0; i < y.size(); ++i) {
    if (i) std::cout << ',';
    std::cout << y[i];
  }
  std::cout << "]\n";
  std::cout << "decoded=" << set_to_string(decode(d, y)) << "\n";
  return kOk;
}

int cmd_solve(int n, int k, const std::string& out_path, std::uint64_t budget) {
  const ExactResult res = exact_optimal_T(n, k, budget);
  std::cout << "optimum=" << res.optimum << "\n";
  std::cout << "certificate: " << res.certificate << "\n";
  std::vector<std::string> comments = {
      "optimal witness for N=" + std::to_string(n) + " K=" + std::to_string(k),
      res.certificate};
  if (out_path.empty()) {
    std::cout << format_design(res.witness, comments);
  } else {
    write_design_file(out_path, res.witness, comments);
  }
  return kOk;
}

int cmd_adaptive(int n, int k, const std::string& defectives) {
  const DefectiveSet hidden = parse_defectives(defectives);
  for (ItemId v : hidden) {
    if (v < 1 || v > n) {
      std::cerr << "error: defective item " << v << " out of range 1.." << n
                << "\n";
      return kError;
    }
  }
  if (static_cast<int>(hidden.size()) > k) {
    std::cerr << "error: more than k defectives given\n";
    return kError;
  }
  SetOracle oracle(hidden);
  int round = 0;
  const DefectiveSet found =
      adaptive_identify(n, k, oracle, [&](const TestSeq& q, ItemId ans) {
        std::cout << "query " << ++round << ": " << seq_to_string(q) << " -> "
                  << ans << "\n";
      });
  std::cout << "identified=" << set_to_string(found) << " queries="
            << oracle.queries() << "\n";
  return kOk;
}

int cmd_systematize(const std::string& design_path, const std::string& out_path) {
  const Design d = parse_design_file(design_path);
  const Design reduced = to_systematic(d);
  std::vector<std::string> comments = {"systematic reduction"};
  if (out_path.empty()) {
    std::cout << format_design(reduced, comments);
  } else {
    write_design_file(out_path, reduced, comments);
  }
  std::cout << "tests=" << reduced.tests.size() << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cascaded group testing toolkit"};
  app.require_subcommand(1);

  int n = 0, k = 0;
  std::string method, design_path, out_path, defectives;
  std::uint64_t budget = default_budget();
  std::optional<std::uint64_t> seed;
  std::optional<int> t_count;

  auto* gen = app.add_subcommand("gen", "construct a design and write it out");
  gen->add_option("--n", n, "number of items")->required();
  gen->add_option("--k", k, "maximum number of defectives")->required();
  std::string gen_method = "recursive";
  gen->add_option("--method", gen_method, "recursive|random");
  std::uint64_t seed_val = 0;
  bool seed_given = false;
  gen->add_option("--seed", seed_val, "seed for the random method")
      ->each([&](const std::string&) { seed_given = true; });
  int t_count_val = 0;
  bool t_count_given = false;
  gen->add_option("--tests", t_count_val, "test count for the random method")
      ->each([&](const std::string&) { t_count_given = true; });
  gen->add_option("--out", out_path, "output design file (default: stdout)");

  auto* verify = app.add_subcommand("verify", "check feasibility of a design file");
  verify->add_option("--design", design_path, "design file")->required();
  std::string verify_method = "condition";
  verify->add_option("--method", verify_method, "condition|injectivity|systematic");
  verify->add_option("--budget", budget, "step budget for exhaustive checks");

  auto* simulate = app.add_subcommand("simulate", "run a design on a defective set");
  simulate->add_option("--design", design_path, "design file")->required();
  simulate->add_option("--defectives", defectives, "comma-separated items");

  auto* bounds = app.add_subcommand("bounds", "print bounds on the optimal size");
  bounds->add_option("--n", n, "number of items")->required();
  bounds->add_option("--k", k, "maximum number of defectives")->required();

  auto* solve = app.add_subcommand("solve", "exact optimum by exhaustive search");
  solve->add_option("--n", n, "number of items")->required();
  solve->add_option("--k", k, "maximum number of defectives")->required();
  solve->add_option("--out", out_path, "witness design file (default: stdout)");
  solve->add_option("--budget", budget, "step budget for the search");

  auto* adaptive = app.add_subcommand("adaptive", "trace the adaptive scheme");
  adaptive->add_option("--n", n, "number of items")->required();
  adaptive->add_option("--k", k, "maximum number of defectives")->required();
  adaptive->add_option("--defectives", defectives, "comma-separated hidden set");

  auto* systematize = app.add_subcommand("systematize", "reduce to systematic form");
  systematize->add_option("--design", design_path, "design file")->required();
  systematize->add_option("--out", out_path, "output design file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kError;
  }

  if (seed_given) seed = seed_val;
  if (t_count_given) t_count = t_count_val;

  try {
    if (gen->parsed()) return cmd_gen(n, k, gen_method, seed, t_count, out_path);
    if (verify->parsed()) return cmd_verify(design_path, verify_method, budget);
    if (simulate->parsed()) return cmd_simulate(design_path, defectives);
    if (bounds->parsed()) {
      const BoundsSummary s = bounds_summary(n, k);
      print_bounds_table(s);
      std::cout << bounds_kv(s) << "\n";
      return kOk;
    }
    if (solve->parsed()) return cmd_solve(n, k, out_path, budget);
    if (adaptive->parsed()) return cmd_adaptive(n, k, defectives);
    if (systematize->parsed()) return cmd_systematize(design_path, out_path);
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}
