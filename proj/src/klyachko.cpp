#include "permutahedral/klyachko.hpp"

#include <stdexcept>

namespace permutahedral {

KElement::KElement(int n) : n_(n) {
  if (n < 2 || n > 32) throw std::invalid_argument("algebra size out of range");
}

KElement KElement::one(int n) {
  KElement e(n);
  e.add(0, 1);
  return e;
}

KElement KElement::basis(int n, const IndexSet& subset) {
  KElement e(n);
  Subset key = 0;
  for (int i : subset) {
    if (i < 1 || i > n - 1) throw std::invalid_argument("generator index out of range");
    key |= Subset{1} << (i - 1);
  }
  e.add(key, 1);
  return e;
}

mpq_class KElement::coefficient(const IndexSet& subset) const {
  Subset key = 0;
  for (int i : subset) key |= Subset{1} << (i - 1);
  auto it = coeffs_.find(key);
  return it == coeffs_.end() ? mpq_class(0) : it->second;
}

void KElement::add(Subset key, const mpq_class& c) {
  if (c == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

KElement& KElement::operator+=(const KElement& other) {
  if (other.n_ != n_) throw std::invalid_argument("algebra size mismatch");
  for (const auto& [k, c] : other.coeffs_) add(k, c);
  return *this;
}

std::string KElement::str() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : coeffs_) {
    if (!out.empty()) out += " + ";
    out += c.get_str() + "*u{";
    bool first = true;
    for (int i = 1; i < n_; ++i)
      if (k & (Subset{1} << (i - 1))) {
        if (!first) out += ",";
        out += std::to_string(i);
        first = false;
      }
    out += "}";
  }
  return out;
}

KElement multiply_by_generator(const KElement& e, int i) {
  const int n = e.n();
  if (i < 1 || i > n - 1) throw std::invalid_argument("generator index out of range");
  using Subset = KElement::Subset;
  auto bit = [](int k) { return Subset{1} << (k - 1); };
  KElement out(n);
  for (const auto& [key, c] : e.coefficients()) {
    if (!(key & bit(i))) {
      out.add(key | bit(i), c);
      continue;
    }
    // i lies in a maximal run [a, b] of the subset. Writing X_j = u_j u_I, the
    // relations force X_j = (X_{j-1} + X_{j+1}) / 2 on the run, with
    // X_{a-1} = u_{I + {a-1}}, X_{b+1} = u_{I + {b+1}} and u_0 = u_n = 0,
    // so X_i is the linear interpolation between the two ends.
    int a = i;
    while (a > 1 && (key & bit(a - 1))) --a;
    int b = i;
    while (b < n - 1 && (key & bit(b + 1))) ++b;
    const mpq_class span = b - a + 2;
    if (a - 1 >= 1) out.add(key | bit(a - 1), c * mpq_class(b + 1 - i) / span);
    if (b + 1 <= n - 1) out.add(key | bit(b + 1), c * mpq_class(i - a + 1) / span);
  }
  return out;
}

KElement reduce_word_monomial(const WeakComposition& c, int n) {
  if (static_cast<int>(c.size()) > n) throw std::invalid_argument("too many exponents");
  if (static_cast<int>(c.size()) == n && c.back() != 0) throw std::invalid_argument("u_n does not exist");
  KElement e = KElement::one(n);
  for (int i = 1; i <= static_cast<int>(c.size()) && i <= n - 1; ++i)
    for (int k = 0; k < c[i - 1]; ++k) e = multiply_by_generator(e, i);
  return e;
}

mpq_class integral(const KElement& e) {
  KElement::Subset top = (KElement::Subset{1} << (e.n() - 1)) - 1;
  auto it = e.coefficients().find(top);
  return it == e.coefficients().end() ? mpq_class(0) : it->second;
}

mpz_class aw_klyachko(const Permutation& w) {
  const int n = w.size();
  if (n < 2 || length(w) != n - 1) throw std::invalid_argument("aw needs l(w) = n-1");
  // Group reduced words by letter content; each class contributes once.
  std::map<WeakComposition, long> contents;
  for (const auto& word : reduced_words(w)) ++contents[letter_content(word, n - 1)];
  mpq_class total = 0;
  for (const auto& [c, mult] : contents) total += integral(reduce_word_monomial(c, n)) * mult;
  if (total.get_den() != 1) throw std::logic_error("non-integral Klyachko integral");
  return total.get_num();
}

}  // namespace permutahedral
