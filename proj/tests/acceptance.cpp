// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "oracles.hpp"
#include "permutahedral/aw.hpp"
#include "permutahedral/io.hpp"
#include "permutahedral/pipedreams.hpp"
#include "permutahedral/poly.hpp"
#include "permutahedral/tableaux.hpp"
#include "permutahedral/verify.hpp"

using namespace permutahedral;

namespace {

int threads() { return static_cast<int>(std::max(1u, std::thread::hardware_concurrency())); }

std::vector<std::string> lines_of(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<std::string> out;
  for (std::string line; std::getline(in, line);)
    if (!line.empty()) out.push_back(line);
  return out;
}

bool suite_ok(const std::string& name, int n, std::string& note) {
  for (const auto& r : run_suite(name, n, threads(), PERMUTAHEDRAL_DATA_DIR))
    if (!r.ok()) {
      note = r.str();
      return false;
    }
  return true;
}

bool table1(std::string& note) {
  auto golden = lines_of(std::string(PERMUTAHEDRAL_DATA_DIR) + "/table1.csv");
  std::map<int, std::string> expected;
  for (std::size_t i = 1; i < golden.size(); ++i) expected[std::stoi(golden[i])] += golden[i] + "\n";
  for (Method m : {Method::automatic, Method::ds, Method::mixed, Method::klyachko})
    for (int n = 2; n <= 6; ++n) {
      Expansion e = make_expansion(n, tau_expansion(n, m, threads()));
      if (table1_rows(e) != expected[n]) {
        note = "n=" + std::to_string(n) + " method " + to_string(m);
        return false;
      }
    }
  Expansion six = make_expansion(6, tau_expansion(6, Method::automatic, threads()));
  const std::string text = expansion_text(six);
  if (text.find("16S_462513") == std::string::npos || text.find("16S_536142") == std::string::npos) {
    note = "missing the 16 coefficients at n=6";
    return false;
  }
  return true;
}

bool table2(std::string& note) {
  auto rows = lines_of(std::string(PERMUTAHEDRAL_DATA_DIR) + "/table2.csv");
  for (std::size_t i = 1; i < rows.size(); ++i) {
    std::istringstream in(rows[i]);
    std::string perm, len, coeffs;
    std::getline(in, perm, ',');
    std::getline(in, len, ',');
    std::getline(in, coeffs);
    Permutation u = Permutation::parse(perm);
    std::string got;
    for (const auto& x : h_vector(u)) got += (got.empty() ? "" : ";") + x.get_str();
    if (got != coeffs || length(u) != std::stoi(len)) {
      note = perm + ": " + got;
      return false;
    }
  }
  Permutation u = Permutation::parse("346215");
  auto h = h_vector(u);
  mpz_class sum = 0;
  for (const auto& x : h) sum += x;
  if (sum != static_cast<long>(oracle::reduced_words(u.word()).size())) {
    note = "346215 coefficients do not sum to |Red|";
    return false;
  }
  const int n = hvector_size(u), p = u.size() - 1;
  for (int m = 0; m <= n - p - 1; ++m)
    if (aw_vexillary(shift_embed(u, m, n - p - 1 - m)) != h[m]) {
      note = "346215 coefficient " + std::to_string(m) + " differs under the SYT pipeline";
      return false;
    }
  return true;
}

bool cyclic(std::string& note) {
  if (!suite_ok("cyclic-sum", 6, note)) return false;
  std::multiset<mpz_class> values;
  for (const auto& s : cyclic_shifts(Permutation::parse("53124768"))) values.insert(aw_value(s));
  if (values != std::multiset<mpz_class>{6, 21, 36} || cyclic_sum(Permutation::parse("53124768")) != 63) {
    note = "53124768";
    return false;
  }
  return true;
}

bool pipe_dreams(std::string& note) {
  for (int n = 1; n <= 5; ++n)
    for (const auto& w : all_permutations(n)) {
      auto dreams = enumerate_pipe_dreams(w);
      SparsePoly sum(n);
      for (const auto& d : dreams) sum += SparsePoly::monomial(row_weight(d, n));
      const mpz_class count = static_cast<long>(dreams.size());
      if (count != principal_specialization(w) || count * factorial(length(w)) != macdonald_sum(w) || sum != schubert(w, n)) {
        note = w.str();
        return false;
      }
    }
  return true;
}

bool lukasiewicz(std::string& note) {
  for (int n = 1; n <= 8; ++n) {
    long count = 0;
    for (const auto& w : s_prime(n)) count += is_lukasiewicz(w);
    if (count != catalan(n - 1)) {
      note = "count at n=" + std::to_string(n);
      return false;
    }
  }
  return suite_ok("lukasiewicz", 6, note);
}

bool vexillary(std::string& note) {
  if (!suite_ok("vexillary", 7, note)) return false;
  if (aw_vexillary(Permutation::parse("346215789")) != 3 || aw_vexillary(Permutation::parse("351246")) != 2 ||
      aw_vexillary(Permutation::parse("146235")) != 3) {
    note = "worked examples";
    return false;
  }
  return true;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string name;
    std::function<bool(std::string&)> run;
  };
  std::vector<Criterion> criteria{
      {1, "tau expansions match table1.csv, n = 2..6, every method", table1},
      {2, "h-vectors match table2.csv, 346215 cross-checked", table2},
      {3, "method agreement, n <= 6", [](std::string& s) { return suite_ok("methods", 6, s); }},
      {4, "cyclic sum rule, n <= 6, and 53124768", cyclic},
      {5, "mixed Eulerian suite", [](std::string& s) { return suite_ok("mixed-eulerian", 6, s); }},
      {6, "pipe dreams, Macdonald and Schubert polynomials, n <= 5", pipe_dreams},
      {7, "Lukasiewicz suite", lukasiewicz},
      {8, "vexillary suite", vexillary},
      {9, "symmetry suite, n <= 6", [](std::string& s) { return suite_ok("symmetries", 6, s); }},
  };
  bool all = true;
  for (const auto& c : criteria) {
    std::string note;
    bool ok = false;
    auto start = std::chrono::steady_clock::now();
    try {
      ok = c.run(note);
    } catch (const std::exception& e) {
      note = e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name << " (" << secs << " s)";
    if (!ok) std::cout << " -- " << note;
    std::cout << std::endl;
    all &= ok;
  }
  return all ? 0 : 1;
}
