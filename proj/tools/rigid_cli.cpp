// Command-line front end: count, witness, verify, oracle, sweep, decompose,
// field-check.
//
// Exit codes: 0 success / verified, 1 verification failed, 2 usage or
// parameter error, 3 budget exceeded.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rigid/clp.hpp"
#include "rigid/io.hpp"
#include "rigid/rigidity.hpp"

namespace {

using namespace rigid;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct TableSource {
  std::string path;
  std::optional<std::uint64_t> seed;
  unsigned q = 2;
  unsigned n = 0;

  void attach(CLI::App* cmd, bool with_path = true) {
    if (with_path) cmd->add_option("table", path, "function table file (fqn-table v1)");
    cmd->add_option("--seed,--random", seed, "use a seeded random function instead of a file");
    cmd->add_option("--q", q, "field order for --seed");
    cmd->add_option("--n", n, "dimension for --seed");
  }

  FunctionTable load() const {
    if (seed) {
      if (!path.empty()) throw Error(ErrorCode::InvalidParameter, "give a table path or --seed, not both");
      if (!is_prime_power(q) || q > kMaxFieldOrder)
        throw Error(ErrorCode::NotPrimePower, "q = " + std::to_string(q));
      return random_function(q, n, *seed);
    }
    if (path.empty()) throw Error(ErrorCode::InvalidParameter, "a table path or --seed is required");
    return load_table(path);
  }
};

Rational parse_eps(const std::string& text) {
  const Rational eps = Rational::parse(text);
  if (eps.num() <= 0 || eps.num() >= eps.den())
    throw Error(ErrorCode::InvalidParameter, "eps must lie in (0, 1), got " + text);
  return eps;
}

std::vector<unsigned> parse_degree_list(const std::string& text, unsigned max_degree) {
  std::vector<unsigned> out;
  if (text.empty()) {
    for (unsigned d = 0; d <= max_degree; ++d) out.push_back(d);
    return out;
  }
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    try {
      std::size_t used = 0;
      const unsigned long d = std::stoul(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(static_cast<unsigned>(d));
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidParameter, "bad degree '" + item + "'");
    }
  }
  return out;
}

void require_writable(const std::string& path) {
  if (path.empty()) return;
  std::ofstream probe(path, std::ios::app);
  if (!probe) throw Error(ErrorCode::InvalidParameter, "cannot write " + path);
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

int run_count(unsigned q, unsigned n, unsigned d) {
  if (!is_prime_power(q)) throw Error(ErrorCode::NotPrimePower, "q = " + std::to_string(q));
  const std::uint64_t m = count_monomials(q, n, d);
  std::cout << m << ' ' << checked_pow(q, n) - m << '\n';
  return kExitOk;
}

int run_witness(const TableSource& src, const std::string& eps_text, const std::string& out,
                const std::string& table_out) {
  const Rational eps = parse_eps(eps_text);
  require_writable(out);
  require_writable(table_out);
  const FunctionTable f = src.load();
  const Witness w = build_witness(f, eps);
  if (!out.empty()) save_witness(out, w);
  if (!table_out.empty()) save_table(table_out, f);
  if (out.empty()) write_witness(std::cout, w);
  std::ostream& summary = out.empty() ? std::cerr : std::cout;
  summary << "d=" << w.d << " rank_bound=" << w.rank_bound << " distance=" << w.distance
            << " N^{1+eps}=" << w.threshold << " pass=" << yes_no(w.within_threshold() && w.useful())
            << '\n';
  return kExitOk;
}

int run_verify(const TableSource& src, const std::string& witness_path, const Budget& budget) {
  const FunctionTable f = src.load();
  const Witness w = load_witness(witness_path);
  const VerificationReport rep = verify_witness(f, w, budget);
  for (const auto& c : rep.checks)
    std::cout << "check " << c.name << ' ' << (c.passed ? "PASS" : "FAIL") << ' ' << c.detail << '\n';
  std::cout << "exact_rank=" << rep.exact_rank << " rank_bound=" << rep.rank_bound
            << " width=" << rep.width << " distance=" << rep.distance
            << " N^{1+eps}=" << w.threshold << '\n';
  if (rep.passed()) {
    std::cout << "verified=true\n";
    return kExitOk;
  }
  std::cout << "verified=false failed=" << rep.failures() << '\n';
  return kExitFailed;
}

int run_oracle(const TableSource& src, std::uint64_t space) {
  const FunctionTable f = src.load();
  const RigidityProfile prof = brute_force_rigidity(build_matrix(f), space);
  for (std::size_t r = 0; r < prof.values.size(); ++r)
    std::cout << (r ? " " : "") << r << ':' << prof.values[r];
  std::cout << '\n';
  return kExitOk;
}

int run_sweep(const TableSource& src, const std::string& degrees, const std::string& out,
              const Budget& budget) {
  require_writable(out);
  const FunctionTable f = src.load();
  const auto rows = tradeoff_sweep(f, parse_degree_list(degrees, (f.q() - 1) * f.n()), budget);
  if (out.empty()) {
    write_sweep_csv(std::cout, rows);
  } else {
    std::ofstream os(out, std::ios::binary);
    write_sweep_csv(os, rows);
  }
  return kExitOk;
}

int run_decompose(const std::string& witness_path) {
  const Witness w = load_witness(witness_path);
  const RankFactorization fac = clp_decompose(w.poly, w.d);
  const bool ok = fac.width() <= w.rank_bound;
  std::cout << "width=" << fac.width() << " x_pairs=" << fac.x_group
            << " y_pairs=" << fac.width() - fac.x_group << " bound=" << w.rank_bound
            << " ok=" << yes_no(ok) << '\n';
  return ok ? kExitOk : kExitFailed;
}

int run_field_check(std::optional<unsigned> q) {
  std::vector<unsigned> orders;
  if (q) {
    if (!is_prime_power(*q) || *q > kMaxFieldOrder)
      throw Error(ErrorCode::NotPrimePower, "q = " + std::to_string(*q));
    orders.push_back(*q);
  } else {
    orders = prime_powers_up_to(16);
  }
  bool all = true;
  for (unsigned order : orders) {
    const bool ok = check_field_axioms(Field::make(order));
    all = all && ok;
    std::cout << "GF(" << order << ") " << (ok ? "ok" : "FAILED") << '\n';
  }
  return all ? kExitOk : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Non-rigidity witnesses for f(x+y) matrices over finite fields"};
  app.require_subcommand(1);

  unsigned q = 0, n = 0, d = 0;
  auto* count = app.add_subcommand("count", "print m_d(q,n) and q^n - m_d");
  count->add_option("q_pos", q)->required();
  count->add_option("n_pos", n)->required();
  count->add_option("d_pos", d)->required();

  TableSource witness_src;
  std::string eps_text, out, save_table, degrees;
  Budget budget;
  auto* witness = app.add_subcommand("witness", "build a witness for a table or seeded random f");
  witness_src.attach(witness);
  witness->add_option("--eps", eps_text, "epsilon as num/den")->required();
  witness->add_option("--out", out, "witness output path (stdout if omitted)");
  witness->add_option("--save-table", save_table, "also write the input table");

  TableSource verify_src;
  std::string witness_path;
  auto* verify = app.add_subcommand("verify", "check a witness against a table");
  std::vector<std::string> verify_files;
  verify_src.attach(verify, false);
  verify->add_option("files", verify_files, "[table] witness (the table is omitted with --seed)")
      ->required()
      ->expected(1, 2);
  verify->add_option("--budget", budget.max_matrix_dim, "largest N to materialize");

  TableSource oracle_src;
  auto* oracle = app.add_subcommand("oracle", "exhaustive rigidity profile of a tiny f(x+y) matrix");
  oracle_src.attach(oracle);
  oracle->add_option("--budget", budget.max_oracle_space, "largest q^(N*N) to enumerate");

  TableSource sweep_src;
  auto* sweep = app.add_subcommand("sweep", "tabulate the degree trade-off as CSV");
  sweep_src.attach(sweep);
  sweep->add_option("--d", degrees, "comma-separated degrees (default: all)");
  sweep->add_option("--out", out, "CSV output path (stdout if omitted)");
  sweep->add_option("--budget", budget.max_matrix_dim, "largest N for exact ranks");

  auto* decompose = app.add_subcommand("decompose", "CLP factorization statistics for a witness");
  decompose->add_option("witness", witness_path)->required();

  std::optional<unsigned> field_q;
  auto* field_check = app.add_subcommand("field-check", "exhaustive field axiom check");
  field_check->add_option("--q", field_q, "field order (default: every q <= 16)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*count) return run_count(q, n, d);
    if (*witness) return run_witness(witness_src, eps_text, out, save_table);
    if (*verify) {
      if (verify_files.size() == 2) verify_src.path = verify_files.front();
      return run_verify(verify_src, verify_files.back(), budget);
    }
    if (*oracle) return run_oracle(oracle_src, budget.max_oracle_space);
    if (*sweep) return run_sweep(sweep_src, degrees, out, budget);
    if (*decompose) return run_decompose(witness_path);
    if (*field_check) return run_field_check(field_q);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::BudgetExceeded ? kExitBudget : kExitUsage;
  }
  return kExitUsage;
}
