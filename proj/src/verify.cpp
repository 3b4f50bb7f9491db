#include "permutahedral/verify.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "permutahedral/aw.hpp"
#include "permutahedral/io.hpp"
#include "permutahedral/klyachko.hpp"
#include "permutahedral/mixed_eulerian.hpp"
#include "permutahedral/pipedreams.hpp"
#include "permutahedral/poly.hpp"
#include "permutahedral/tableaux.hpp"

namespace permutahedral {

bool SuiteReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.ok(); });
}

std::string SuiteReport::str() const {
  std::ostringstream out;
  out << "suite " << suite << " (n <= " << n << "): " << (ok() ? "pass" : "FAIL") << "\n";
  for (const auto& c : checks) {
    out << "  [" << (c.ok() ? "ok" : "FAIL") << "] " << c.identity << ": " << c.checked << " checked";
    if (!c.ok()) out << ", " << c.failed << " failed, first: " << c.first_failure;
    out << "\n";
  }
  return out.str();
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"symmetries", "cyclic-sum", "methods", "mixed-eulerian", "vexillary", "lukasiewicz", "tables"};
  return names;
}

void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& body) {
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < count; i = next++) body(i);
  };
  const int t = std::max(1, std::min<int>(threads, static_cast<int>(count)));
  std::vector<std::thread> pool;
  for (int k = 1; k < t; ++k) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
}

namespace {

// Accumulates one identity over many cases. Thread-safe; the reported first
// failure is the one with the smallest case index, so output does not depend on scheduling.
class Tally {
 public:
  explicit Tally(std::string identity) { check_.identity = std::move(identity); }

  void record(bool ok, std::size_t order, const std::string& what) {
    std::lock_guard lock(mutex_);
    ++check_.checked;
    if (ok) return;
    ++check_.failed;
    if (order < first_order_) {
      first_order_ = order;
      check_.first_failure = what;
    }
  }
  // Runs the predicate, turning exceptions into failures.
  void expect(std::size_t order, const std::string& what, const std::function<bool()>& pred) {
    bool ok = false;
    std::string detail = what;
    try {
      ok = pred();
    } catch (const std::exception& e) {
      detail += " (" + std::string(e.what()) + ")";
    }
    record(ok, order, detail);
  }
  Check result() const { return check_; }

 private:
  std::mutex mutex_;
  Check check_;
  std::size_t first_order_ = static_cast<std::size_t>(-1);
};

struct Case {
  int n;
  Permutation w;
};

std::vector<Case> s_prime_cases(int lo, int hi) {
  std::vector<Case> out;
  for (int k = lo; k <= hi; ++k)
    for (auto& w : s_prime(k)) out.push_back({k, w});
  return out;
}

Permutation conj(const Permutation& w) {
  Permutation wo = Permutation::longest(w.size());
  return wo * w * wo;
}

std::vector<mpz_class> hilbert_numerator(const std::vector<mpz_class>& series, int n, int terms) {
  std::vector<mpz_class> out(terms, 0);
  for (int k = 0; k < terms; ++k)
    for (int j = 0; j <= k && j < static_cast<int>(series.size()); ++j) {
      mpz_class t = series[j] * binomial(n, k - j);
      if ((k - j) % 2) out[k] -= t;
      else out[k] += t;
    }
  return out;
}

SuiteReport symmetries(int n, int threads) {
  auto cases = s_prime_cases(2, n);
  Tally inv("a_w = a_{w^-1}"), wo("a_w = a_{w_o w w_o}"), pos("a_w > 0"), one("a_w = 1 for dominant and 213-avoiding w");
  parallel_for(cases.size(), threads, [&](std::size_t i) {
    const auto& w = cases[i].w;
    mpz_class a = aw_value(w, Method::mixed);
    inv.expect(i, w.str(), [&] { return a == aw_value(w.inverse(), Method::mixed); });
    wo.expect(i, w.str(), [&] { return a == aw_value(conj(w), Method::mixed); });
    pos.expect(i, w.str(), [&] { return a > 0; });
    if (avoids(w, Permutation({1, 3, 2})) || avoids(w, Permutation({2, 1, 3}))) one.expect(i, w.str(), [&] { return a == 1; });
  });
  return {"symmetries", n, {inv.result(), wo.result(), pos.result(), one.result()}};
}

SuiteReport cyclic(int n, int threads) {
  auto cases = s_prime_cases(2, n);
  Tally sum("sum of a over cyclic shifts = |Red(w)|"), bound("a_w <= |Red(w)|"),
      luk("cyclic shifts distinct, exactly one Lukasiewicz"), indec("a_w = |Red(w)| for indecomposable w");
  parallel_for(cases.size(), threads, [&](std::size_t i) {
    const auto& w = cases[i].w;
    mpz_class red = reduced_word_count(w);
    sum.expect(i, w.str(), [&] { return cyclic_sum(w) == red; });
    bound.expect(i, w.str(), [&] { return aw_value(w) <= red; });
    luk.expect(i, w.str(), [&] {
      auto shifts = cyclic_shifts(w);
      std::set<Permutation> distinct(shifts.begin(), shifts.end());
      long count = std::count_if(shifts.begin(), shifts.end(), [](const Permutation& s) { return is_lukasiewicz(s); });
      return distinct.size() == shifts.size() && count == 1;
    });
    if (is_indecomposable(w)) indec.expect(i, w.str(), [&] { return aw_value(w) == red; });
  });
  return {"cyclic-sum", n, {sum.result(), bound.result(), luk.result(), indec.result()}};
}

SuiteReport methods(int n, int threads) {
  auto cases = s_prime_cases(2, n);
  Tally agree("ds = mixed = klyachko"), special("special interpretations agree"), autom("auto agrees");
  parallel_for(cases.size(), threads, [&](std::size_t i) {
    const auto& w = cases[i].w;
    mpz_class a = aw_value(w, Method::mixed);
    agree.expect(i, w.str(), [&] { return a == aw_value(w, Method::ds) && a == aw_value(w, Method::klyachko); });
    for (const auto& [name, v] : special_interpretations(w)) special.expect(i, w.str() + " " + name, [&] { return v == a; });
    autom.expect(i, w.str(), [&] { return aw_value(w, Method::automatic) == a; });
  });
  return {"methods", n, {agree.result(), special.result(), autom.result()}};
}

SuiteReport mixed_suite(int n, int threads) {
  Tally petrov("A_c = coin-move solution"), cyc("cyclic class sum = 1"), euler("A_{0..0,n-1,0..0} = Eulerian numbers"),
      conn("connected generating function identity");
  std::vector<std::pair<int, WeakComposition>> comps;
  for (int k = 2; k <= n; ++k)
    for (auto& c : weak_compositions(k)) comps.push_back({k, c});
  std::vector<std::map<WeakComposition, mpq_class>> tables(n + 1);
  parallel_for(static_cast<std::size_t>(std::max(0, n - 1)), threads, [&](std::size_t i) { tables[i + 2] = petrov_table(static_cast<int>(i) + 2); });
  parallel_for(comps.size(), threads, [&](std::size_t i) {
    const auto& [k, c] = comps[i];
    std::string label = composition_str(c);
    if (c.back() == 0) petrov.expect(i, label, [&] { return mpq_class(mixed_eulerian(c)) == tables[k].at(c); });
    cyc.expect(i, label, [&] { return cyclic_class_sum(c) == 1; });
  });
  std::size_t order = 0;
  for (int k = 2; k <= std::max(n, 7); ++k)
    for (int j = 1; j <= k - 1; ++j) {
      WeakComposition c(k, 0);
      c[j - 1] = k - 1;
      euler.expect(order++, composition_str(c), [&] { return mixed_eulerian(c) == eulerian_number_tally(k - 1, j - 1); });
    }
  order = 0;
  for (int k = 2; k <= n; ++k)
    for (const auto& c : weak_compositions(k)) {
      // Strong compositions of k-1: the nonzero prefix of c when c has no interior zeros.
      auto last = std::find(c.begin(), c.end(), 0);
      if (last == c.begin() || std::any_of(last, c.end(), [](int x) { return x != 0; })) continue;
      std::vector<int> a(c.begin(), last);
      conn.expect(order++, composition_str(a), [&] {
        auto gf = connected_gf(a);
        while (!gf.empty() && gf.back() == 0) gf.pop_back();
        return gf == connected_gf_series(a);
      });
    }
  return {"mixed-eulerian", n, {petrov.result(), cyc.result(), euler.result(), conn.result()}};
}

std::vector<Partition> partitions_up_to(int max_size) {
  std::vector<Partition> out;
  std::vector<int> parts;
  std::function<void(int, int)> rec = [&](int remaining, int cap) {
    if (!parts.empty()) out.emplace_back(parts);
    for (int p = std::min(remaining, cap); p >= 1; --p) {
      parts.push_back(p);
      rec(remaining - p, p);
      parts.pop_back();
    }
  };
  rec(max_size, max_size);
  return out;
}

std::vector<Signature> all_signatures(const Partition& lambda) {
  const int le = std::max(0, lambda.length() - 1);
  const int lf = std::max(0, lambda[1] - 1);
  std::vector<Signature> out;
  for (unsigned mask = 0; mask < (1u << (le + lf)); ++mask) {
    Signature s{std::vector<int>(le), std::vector<int>(lf)};
    for (int i = 0; i < le; ++i) s.e[i] = (mask >> i) & 1;
    for (int j = 0; j < lf; ++j) s.f[j] = (mask >> (le + j)) & 1;
    out.push_back(std::move(s));
  }
  return out;
}

bool str_is_bijection(const Partition& lambda, const Signature& eps, int N) {
  auto flag = flag_from_signature(lambda, eps, N);
  auto source = epsilon_tableaux(lambda, eps, N);
  std::set<Tableau> image;
  for (const auto& t : source) {
    Tableau u = str_map(t, eps);
    if (str_inverse(u, eps) != t) return false;
    image.insert(u);
  }
  if (image.size() != source.size()) return false;
  auto target = flagged_ssyt(lambda, flag);
  return std::set<Tableau>(target.begin(), target.end()) == image && epsilon_partition_count(lambda, eps, N) == mpz_class(source.size());
}

SuiteReport vexillary_suite(int n, int threads) {
  Tally numer("nu_u series numerator = SYT omega_u-descent polynomial shifted by N_u"), lab("compatible labeling valid"),
      flagged("|SSYT(lambda(w), phi(w))| = nu_w"), ineq("shape/flag inequalities and extreme cases"),
      corr("a_w from SYT descents = mixed formula"), str("Str bijection onto flagged tableaux");

  std::vector<Permutation> indecomposables;
  for (int k = 2; k <= n; ++k)
    for (int m = 2; m <= k; ++m)
      for (auto& u : permutations_of_length(m, k - 1))
        if (is_vexillary(u) && is_indecomposable(u)) indecomposables.push_back(u);
  parallel_for(indecomposables.size(), threads, [&](std::size_t i) {
    const auto& u = indecomposables[i];
    const int k = length(u) + 1;
    auto [eps, N] = vexillary_signature(u);
    auto lambda = shape_and_flag(u).first;
    auto omega = compatible_labeling(lambda, eps);
    lab.expect(i, u.str(), [&] { return is_compatible(lambda, eps, omega); });
    numer.expect(i, u.str(), [&] {
      std::vector<mpz_class> nu(k + 3);
      for (int j = 0; j < k + 3; ++j) nu[j] = nu_shifted(u, j);
      auto lhs = hilbert_numerator(nu, k, k + 3);
      auto dist = omega_descent_distribution(lambda, omega);
      std::vector<mpz_class> rhs(k + 3, 0);
      for (int d = 0; d < static_cast<int>(dist.size()); ++d) {
        if (dist[d] == 0) continue;
        if (d - N < 0 || d - N >= k + 3) return false;
        rhs[d - N] = dist[d];
      }
      return lhs == rhs;
    });
  });

  auto all = s_prime_cases(2, n);
  std::vector<Permutation> everything;
  for (int k = 1; k <= std::min(n, 6); ++k)
    for (auto& w : all_permutations(k))
      if (is_vexillary(w) && length(w) > 0) everything.push_back(w);
  parallel_for(everything.size(), threads, [&](std::size_t i) {
    const auto& w = everything[i];
    auto [lambda, phi] = shape_and_flag(w);
    flagged.expect(i, w.str(), [&] { return flagged_ssyt_count(lambda, phi) == principal_specialization(w); });
    ineq.expect(i, w.str(), [&] {
      if (!satisfies_vexillary_inequalities(lambda, phi)) return false;
      auto blocks = lambda.blocks();
      auto ends = lambda.block_ends();
      auto values = flag_block_values(lambda, phi);
      bool dominant_case = true, grass_case = true, inv_grass_case = true;
      for (std::size_t q = 0; q < blocks.size(); ++q) dominant_case &= values[q] == ends[q];
      for (std::size_t q = 0; q + 1 < blocks.size(); ++q) {
        grass_case &= values[q + 1] == values[q];
        inv_grass_case &= values[q + 1] - values[q] == blocks[q + 1].second + blocks[q].first - blocks[q + 1].first;
      }
      return dominant_case == is_dominant(w) && grass_case == is_grassmannian(w) && inv_grass_case == is_grassmannian(w.inverse());
    });
  });

  std::vector<Permutation> vex;
  for (auto& c : all)
    if (is_vexillary(c.w)) vex.push_back(c.w);
  parallel_for(vex.size(), threads, [&](std::size_t i) {
    corr.expect(i, vex[i].str(), [&] { return aw_vexillary(vex[i]) == aw_value(vex[i], Method::mixed); });
  });

  std::vector<std::pair<Partition, Signature>> shapes;
  for (auto& lambda : partitions_up_to(std::min(n + 1, 8)))
    for (auto& eps : all_signatures(lambda)) shapes.push_back({lambda, eps});
  parallel_for(shapes.size(), threads, [&](std::size_t i) {
    const auto& [lambda, eps] = shapes[i];
    const int base = n_min(lambda, eps);
    std::string label = lambda.str() + " e=" + composition_str(eps.e) + " f=" + composition_str(eps.f);
    str.expect(i, label, [&] {
      return epsilon_partition_count(lambda, eps, base - 1) == 0 && epsilon_partition_count(lambda, eps, base) > 0 &&
             str_is_bijection(lambda, eps, base) && str_is_bijection(lambda, eps, base + 1);
    });
  });
  return {"vexillary", n, {numer.result(), lab.result(), flagged.result(), ineq.result(), corr.result(), str.result()}};
}

SuiteReport lukasiewicz_suite(int n, int threads) {
  Tally count("|Luk_n| = Catalan(n-1)"), pd("a_w = |PD(w)| on Luk_n"), alt("code Lukasiewicz iff abar Lukasiewicz"),
      inv("Luk_n closed under inverse, |PD(w)| = |PD(w^-1)| by transpose"), con("a_w = nu_{w_o w w_o} when the conjugate is Lukasiewicz"),
      bottom("abar(w) = antidiagonal weight of the bottom pipe dream");
  for (int k = 1; k <= n; ++k) {
    long luk = 0;
    for (auto& w : s_prime(k)) luk += is_lukasiewicz(w);
    long comps = 0;
    for (auto& c : weak_compositions(k)) comps += c.back() == 0 ? is_lukasiewicz_composition(c) : 0;
    count.expect(k, std::to_string(k), [&] { return luk == catalan(k - 1) && comps == catalan(k - 1); });
  }
  auto cases = s_prime_cases(2, n);
  parallel_for(cases.size(), threads, [&](std::size_t i) {
    const auto& w = cases[i].w;
    const int k = cases[i].n;
    alt.expect(i, w.str(), [&] { return is_lukasiewicz(w) == is_lukasiewicz_composition(abar(w)); });
    bottom.expect(i, w.str(), [&] { return abar(w) == antidiagonal_weight(bottom_pipe_dream(w), k); });
    if (is_lukasiewicz(w)) {
      pd.expect(i, w.str(), [&] { return mpz_class(enumerate_pipe_dreams(w).size()) == aw_value(w, Method::mixed); });
      inv.expect(i, w.str(), [&] {
        if (!is_lukasiewicz(w.inverse())) return false;
        auto a = enumerate_pipe_dreams(w);
        auto b = enumerate_pipe_dreams(w.inverse());
        std::set<PipeDream> t;
        for (auto& g : a) t.insert(transpose(g));
        return t == std::set<PipeDream>(b.begin(), b.end());
      });
    }
    if (Permutation v = conj(w); is_lukasiewicz(v))
      con.expect(i, w.str(), [&] { return principal_specialization(v) == aw_value(w, Method::mixed); });
  });
  return {"lukasiewicz", n, {count.result(), pd.result(), alt.result(), bottom.result(), inv.result(), con.result()}};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

SuiteReport tables(int n, int threads, const std::string& data_dir) {
  Tally t1("tau expansions = table1.csv (byte-exact)"), t2("h-vectors = table2.csv (byte-exact)"),
      t2direct("h-vectors by direct a_w evaluation"), rev("h-vector of w_o u w_o is the reversed h-vector");
  const std::string dir = data_dir.empty() ? "." : data_dir;
  const std::string golden1 = read_file(dir + "/table1.csv");
  std::istringstream in1(golden1);
  std::string line, header;
  std::getline(in1, header);
  std::map<int, std::string> expected;
  while (std::getline(in1, line)) expected[std::stoi(line.substr(0, line.find(',')))] += line + "\n";
  for (int k = 2; k <= std::min(n, 6); ++k) {
    t1.expect(k, "n=" + std::to_string(k), [&] {
      return table1_rows(make_expansion(k, tau_expansion(k, Method::automatic, threads))) == expected[k];
    });
  }
  const std::string golden2 = read_file(dir + "/table2.csv");
  std::istringstream in2(golden2);
  std::getline(in2, header);
  std::vector<std::string> rows;
  while (std::getline(in2, line))
    if (!line.empty()) rows.push_back(line);
  parallel_for(rows.size(), threads, [&](std::size_t i) {
    const std::string& row = rows[i];
    const Permutation u = Permutation::parse(row.substr(0, row.find(',')));
    auto to_field = [](const std::vector<mpz_class>& h) {
      std::string s;
      for (std::size_t k = 0; k < h.size(); ++k) s += (k ? ";" : "") + h[k].get_str();
      return s;
    };
    auto h = h_vector(u);
    t2.expect(i, u.str(), [&] { return u.str() + "," + std::to_string(length(u)) + "," + to_field(h) == row; });
    t2direct.expect(i, u.str(), [&] { return h_vector_direct(u) == h; });
    rev.expect(i, u.str(), [&] {
      auto r = h_vector(conj(u));
      std::reverse(r.begin(), r.end());
      return r == h;
    });
  });
  return {"tables", n, {t1.result(), t2.result(), t2direct.result(), rev.result()}};
}

}  // namespace

std::vector<SuiteReport> run_suite(const std::string& name, int n, int threads, const std::string& data_dir) {
  if (n < 2) throw std::invalid_argument("suites need n >= 2");
  if (name == "all") {
    std::vector<SuiteReport> out;
    for (const auto& s : suite_names()) out.push_back(run_suite(s, n, threads, data_dir).front());
    return out;
  }
  if (name == "symmetries") return {symmetries(n, threads)};
  if (name == "cyclic-sum") return {cyclic(n, threads)};
  if (name == "methods") return {methods(n, threads)};
  if (name == "mixed-eulerian") return {mixed_suite(n, threads)};
  if (name == "vexillary") return {vexillary_suite(n, threads)};
  if (name == "lukasiewicz") return {lukasiewicz_suite(n, threads)};
  if (name == "tables") return {tables(n, threads, data_dir)};
  throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace permutahedral
