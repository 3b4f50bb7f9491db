#include "permutahedral/aw.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <deque>
#include <map>
#include <thread>

#include "permutahedral/klyachko.hpp"
#include "permutahedral/mixed_eulerian.hpp"
#include "permutahedral/pipedreams.hpp"
#include "permutahedral/poly.hpp"
#include "permutahedral/tableaux.hpp"

namespace permutahedral {

namespace {

// Beyond this size the full antisymmetrization is too slow; the monomial formula is used instead.
constexpr int kGenericDsLimit = 6;

int checked_size(const Permutation& w) {
  const int n = w.size();
  if (n < 2 || length(w) != n - 1) throw std::invalid_argument("a_w needs w in S_n with l(w) = n-1, got " + w.str());
  return n;
}

mpz_class as_integer(const mpq_class& q, const char* what) {
  if (q.get_den() != 1) throw std::logic_error(std::string("non-integral value from ") + what);
  return q.get_num();
}

Permutation conjugate_by_longest(const Permutation& w) {
  const Permutation wo = Permutation::longest(w.size());
  return wo * w * wo;
}

}  // namespace

std::string to_string(Method m) {
  switch (m) {
    case Method::ds: return "ds";
    case Method::mixed: return "mixed";
    case Method::klyachko: return "klyachko";
    case Method::special: return "special";
    case Method::automatic: return "auto";
  }
  return "?";
}

Method parse_method(std::string_view name) {
  for (Method m : {Method::ds, Method::mixed, Method::klyachko, Method::special, Method::automatic})
    if (to_string(m) == name) return m;
  throw std::invalid_argument("unknown method: " + std::string(name));
}

mpz_class aw_ds(const Permutation& w) {
  const int n = checked_size(w);
  SparsePoly s = schubert(w, n);
  if (n > kGenericDsLimit) return as_integer(ds_scalar(s, n), "ds");
  SparsePoly d = divided_symmetrization(s, n);
  if (!d.is_constant()) throw std::logic_error("divided symmetrization is not a constant");
  return as_integer(d.coefficient(Exponent(n, 0)), "ds");
}

mpz_class aw_mixed(const Permutation& w) {
  const int n = checked_size(w);
  std::map<WeakComposition, long> contents;
  for (const auto& word : reduced_words(w)) ++contents[letter_content(word, n)];
  mpz_class total = 0;
  for (const auto& [c, mult] : contents) total += mixed_eulerian(c) * mult;
  mpq_class q(total, factorial(n - 1));
  q.canonicalize();
  return as_integer(q, "mixed");
}

IndexSet coxeter_index_set(const Permutation& w) {
  if (!is_coxeter(w)) throw std::invalid_argument("not a Coxeter element: " + w.str());
  const int n = w.normalized().size();
  auto word = any_reduced_word(w);
  std::vector<int> where(n, 0);
  for (std::size_t k = 0; k < word.size(); ++k) where[word[k]] = static_cast<int>(k);
  IndexSet I;
  for (int i = 1; i <= n - 2; ++i)
    if (where[i] < where[i + 1]) I.push_back(i);
  return I;
}

Permutation coxeter_from_set(int n, const IndexSet& I) {
  if (n < 2) throw std::invalid_argument("Coxeter elements need n >= 2");
  std::deque<int> word{1};
  for (int i = 1; i <= n - 2; ++i) {
    if (std::find(I.begin(), I.end(), i) != I.end()) word.push_back(i + 1);
    else word.push_front(i + 1);
  }
  return word_product(ReducedWord(word.begin(), word.end()), n);
}

mpz_class coxeter_aw(const Permutation& w) {
  auto I = coxeter_index_set(w);
  return beta(w.normalized().size() - 1, I);
}

mpz_class grassmannian_aw(const Permutation& w) {
  const int n = checked_size(w);
  auto d = descents(w);
  if (d.size() != 1) throw std::invalid_argument("not a Grassmannian permutation: " + w.str());
  const int m = d.front();
  auto lambda = shape_and_flag(w).first;
  if (lambda.size() != n - 1) throw std::logic_error("shape size differs from the length");
  mpz_class count = 0;
  for (const auto& t : standard_tableaux(lambda))
    if (syt_descents(t) == m - 1) ++count;
  return count;
}

std::vector<std::pair<std::string, mpz_class>> special_interpretations(const Permutation& w) {
  const int n = checked_size(w);
  std::vector<std::pair<std::string, mpz_class>> out;
  if (is_coxeter(w)) out.push_back({"coxeter", coxeter_aw(w)});
  if (avoids(w, Permutation({1, 3, 2}))) out.push_back({"dominant", 1});
  if (avoids(w, Permutation({2, 1, 3}))) out.push_back({"213-avoiding", 1});
  if (is_lukasiewicz(w)) out.push_back({"lukasiewicz", static_cast<unsigned long>(enumerate_pipe_dreams(w).size())});
  if (Permutation v = conjugate_by_longest(w); is_lukasiewicz(v.resized(n)))
    out.push_back({"lukasiewicz-conjugate", principal_specialization(v)});
  if (is_grassmannian(w)) out.push_back({"grassmannian", grassmannian_aw(w)});
  if (is_vexillary(w)) out.push_back({"vexillary", aw_vexillary(w)});
  return out;
}

std::optional<std::pair<std::string, mpz_class>> special_aw(const Permutation& w) {
  auto all = special_interpretations(w);
  if (all.empty()) return std::nullopt;
  return all.front();
}

AwResult aw(const Permutation& w, Method method) {
  checked_size(w);
  auto start = std::chrono::steady_clock::now();
  AwResult r{0, method, to_string(method)};
  switch (method) {
    case Method::ds: r.value = aw_ds(w); break;
    case Method::mixed: r.value = aw_mixed(w); break;
    case Method::klyachko: r.value = aw_klyachko(w); break;
    case Method::special:
    case Method::automatic: {
      if (auto s = special_aw(w)) {
        r.method = Method::special;
        r.detail = s->first;
        r.value = s->second;
      } else if (method == Method::special) {
        throw NotApplicable("no combinatorial interpretation applies to " + w.str());
      } else {
        r.method = Method::mixed;
        r.detail = "mixed";
        r.value = aw_mixed(w);
      }
      break;
    }
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<TauEntry> tau_expansion(int n, Method method, int threads) {
  if (n < 2) throw std::invalid_argument("tau_expansion needs n >= 2");
  auto perms = s_prime(n);
  std::vector<TauEntry> out(perms.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < perms.size(); i = next++) out[i] = {perms[i], aw(perms[i], method)};
  };
  const int t = std::max(1, std::min<int>(threads, static_cast<int>(perms.size())));
  std::vector<std::thread> pool;
  for (int k = 1; k < t; ++k) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
  return out;
}

bool check_symmetries(const Permutation& w, Method method) {
  const mpz_class a = aw_value(w, method);
  return a == aw_value(w.inverse(), method) && a == aw_value(conjugate_by_longest(w), method);
}

mpz_class cyclic_sum(const Permutation& w, Method method) {
  checked_size(w);
  mpz_class total = 0;
  for (const auto& s : cyclic_shifts(w)) total += aw_value(s, method);
  return total;
}

int hvector_size(const Permutation& u_in) {
  const Permutation u = u_in.normalized();
  if (u.size() < 2 || !is_indecomposable(u)) throw std::invalid_argument("h-vector needs an indecomposable permutation");
  return length(u) + 1;
}

std::vector<mpz_class> h_vector(const Permutation& u_in) {
  const Permutation u = u_in.normalized();
  const int n = hvector_size(u);
  const int p = u.size() - 1;
  std::vector<mpz_class> nu(n + 1);
  for (int j = 0; j <= n; ++j) nu[j] = nu_shifted(u, j);
  std::vector<mpz_class> h;
  for (int m = 0; m <= n - p - 1; ++m) {
    mpz_class a = 0;
    for (int j = 0; j <= m; ++j) {
      mpz_class term = nu[j] * binomial(n, m - j);
      if ((m - j) % 2) a -= term;
      else a += term;
    }
    h.push_back(a);
  }
  return h;
}

std::vector<mpz_class> h_vector_direct(const Permutation& u_in, Method method) {
  const Permutation u = u_in.normalized();
  const int n = hvector_size(u);
  const int p = u.size() - 1;
  std::vector<mpz_class> h;
  for (int m = 0; m <= n - p - 1; ++m) h.push_back(aw_value(shift_embed(u, m, n - p - 1 - m), method));
  return h;
}

}  // namespace permutahedral
