#include <algorithm>
#include <iostream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "permutahedral/aw.hpp"
#include "permutahedral/io.hpp"
#include "permutahedral/mixed_eulerian.hpp"
#include "permutahedral/pipedreams.hpp"
#include "permutahedral/verify.hpp"

#ifndef PERMUTAHEDRAL_DATA_DIR
#define PERMUTAHEDRAL_DATA_DIR "tests/data"
#endif

using namespace permutahedral;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

Permutation parse_aw_input(const std::string& text) {
  Permutation w = Permutation::parse(text);
  if (length(w) != w.size() - 1 || w.size() < 2)
    throw UsageError(text + " has length " + std::to_string(length(w)) + ", expected " + std::to_string(w.size() - 1));
  return w;
}

int cmd_aw(const std::string& perm, const std::string& method, bool all_methods) {
  Permutation w = parse_aw_input(perm);
  if (!all_methods) {
    std::cout << aw(w, parse_method(method)).value << "\n";
    return kOk;
  }
  bool agree = true;
  mpz_class reference = aw_value(w, Method::mixed);
  for (Method m : {Method::ds, Method::mixed, Method::klyachko}) {
    AwResult r = aw(w, m);
    agree &= r.value == reference;
    std::cout << to_string(m) << ": " << r.value << "\n";
  }
  for (const auto& [name, v] : special_interpretations(w)) {
    agree &= v == reference;
    std::cout << name << ": " << v << "\n";
  }
  std::cout << (agree ? "agree" : "DISAGREE") << "\n";
  return agree ? kOk : kFailed;
}

int cmd_tau(int n, int max_n, const std::string& format, const std::string& method, int threads) {
  if (n < 2 || n > max_n) throw UsageError("n must be in [2, " + std::to_string(max_n) + "]");
  Expansion e = make_expansion(n, tau_expansion(n, parse_method(method), threads));
  if (format == "text") std::cout << expansion_text(e) << "\n";
  else if (format == "csv") std::cout << expansion_csv(e);
  else std::cout << expansion_to_json(e).dump(2) << "\n";
  return kOk;
}

int cmd_verify(const std::string& suite, int n, int threads, const std::string& data_dir) {
  if (suite != "all" && std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end())
    throw UsageError("unknown suite: " + suite);
  bool ok = true;
  for (const auto& report : run_suite(suite, n, threads, data_dir)) {
    std::cout << report.str();
    ok &= report.ok();
  }
  return ok ? kOk : kFailed;
}

int cmd_hvector(const std::string& perm) {
  Permutation u = Permutation::parse(perm).normalized();
  if (!is_indecomposable(u)) throw UsageError(perm + " is decomposable");
  std::cout << polynomial_text(h_vector(u)) << "\n";
  return kOk;
}

int cmd_mixed(const std::string& text) {
  WeakComposition c = parse_composition(text);
  int sum = 0;
  for (int x : c) sum += x;
  if (sum != static_cast<int>(c.size()) - 1)
    throw UsageError("entries of " + text + " sum to " + std::to_string(sum) + ", expected " + std::to_string(c.size() - 1));
  std::cout << mixed_eulerian(c) << "\n";
  return kOk;
}

int cmd_pipedreams(const std::string& perm) {
  Permutation w = Permutation::parse(perm);
  auto dreams = enumerate_pipe_dreams(w);
  std::cout << dreams.size() << " pipe dreams\n";
  for (const auto& d : dreams) std::cout << "\n" << render(d, w.size());
  return kOk;
}

// Locations of the largest a_w; nothing is asserted about them.
int cmd_maxima(int max_n, int threads) {
  for (int n = 2; n <= max_n; ++n) {
    auto entries = tau_expansion(n, Method::automatic, threads);
    mpz_class best = 0;
    for (const auto& e : entries) best = std::max(best, e.result.value);
    std::cout << "n=" << n << " max a_w=" << best << ":";
    for (const auto& e : entries)
      if (e.result.value == best) {
        std::cout << " " << e.w.str();
        if (is_coxeter(e.w)) std::cout << " (coxeter, I={" << composition_str(coxeter_index_set(e.w)) << "})";
      }
    std::cout << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schubert coefficients of the permutahedral variety"};
  app.require_subcommand(1);
  int threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  app.add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);

  std::string perm, method = "auto", format = "text", suite, comp, data_dir = PERMUTAHEDRAL_DATA_DIR;
  bool all_methods = false;
  int n = 0, max_n = 7;

  auto* aw_cmd = app.add_subcommand("aw", "a_w for w in S'_n");
  aw_cmd->add_option("perm", perm, "one-line permutation")->required();
  aw_cmd->add_option("--method", method, "ds, mixed, klyachko, special or auto");
  aw_cmd->add_flag("--all-methods", all_methods, "run every method and compare");

  auto* tau_cmd = app.add_subcommand("tau", "Schubert expansion of tau_n");
  tau_cmd->add_option("n", n)->required();
  tau_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json", "csv"}));
  tau_cmd->add_option("--method", method);
  tau_cmd->add_option("--max-n", max_n);

  auto* verify_cmd = app.add_subcommand("verify", "run an identity suite exhaustively up to n");
  verify_cmd->add_option("suite", suite, "symmetries, cyclic-sum, methods, mixed-eulerian, vexillary, lukasiewicz, tables, all")->required();
  verify_cmd->add_option("n", n)->required();
  verify_cmd->add_option("--data-dir", data_dir, "directory with the golden tables");

  auto* hv_cmd = app.add_subcommand("hvector", "h-vector of an indecomposable u");
  hv_cmd->add_option("perm", perm)->required();

  auto* mixed_cmd = app.add_subcommand("mixed", "mixed Eulerian number A_c");
  mixed_cmd->add_option("c", comp, "comma separated, e.g. 2,1,0,0")->required();

  auto* table_cmd = app.add_subcommand("mixed-table", "CSV of A_c for all c of length n");
  table_cmd->add_option("n", n)->required();

  auto* pd_cmd = app.add_subcommand("pipedreams", "render every reduced pipe dream of w");
  pd_cmd->add_option("perm", perm)->required();

  auto* max_cmd = app.add_subcommand("maxima", "where a_w is largest, n <= max-n");
  max_cmd->add_option("--max-n", max_n);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*aw_cmd) return cmd_aw(perm, method, all_methods);
    if (*tau_cmd) return cmd_tau(n, max_n, format, method, threads);
    if (*verify_cmd) return cmd_verify(suite, n, threads, data_dir);
    if (*hv_cmd) return cmd_hvector(perm);
    if (*mixed_cmd) return cmd_mixed(comp);
    if (*table_cmd) {
      if (n < 1) throw UsageError("n must be positive");
      std::cout << mixed_eulerian_csv(n);
      return kOk;
    }
    if (*pd_cmd) return cmd_pipedreams(perm);
    if (*max_cmd) return cmd_maxima(max_n, threads);
  } catch (const NotApplicable& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
  return kUsage;
}
