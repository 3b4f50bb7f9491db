#include "permutahedral/io.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace permutahedral {

Permutation ExpansionTerm::wow(int n) const { return (Permutation::longest(n) * w.resized(n)).normalized(); }

Expansion make_expansion(int n, const std::vector<TauEntry>& entries) {
  Expansion e{n, {}};
  for (const auto& entry : entries) {
    std::string method = entry.result.method == Method::special ? entry.result.detail : to_string(entry.result.method);
    e.terms.push_back({entry.w, entry.result.value, method});
  }
  return e;
}

std::vector<ExpansionTerm> table_order(const Expansion& e) {
  std::vector<std::pair<std::string, ExpansionTerm>> keyed;
  for (const auto& t : e.terms) keyed.push_back({t.wow(e.n).str(), t});
  std::stable_sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<ExpansionTerm> out;
  for (auto& [k, t] : keyed) out.push_back(std::move(t));
  return out;
}

std::string expansion_text(const Expansion& e) {
  std::string out;
  for (const auto& t : table_order(e)) {
    if (!out.empty()) out += " + ";
    if (t.a_w != 1) out += t.a_w.get_str();
    out += "S_" + t.wow(e.n).str();
  }
  return out;
}

std::string expansion_csv(const Expansion& e) {
  std::string out = "n,w,wow,a_w,method\n";
  for (const auto& t : table_order(e))
    out += std::to_string(e.n) + "," + t.w.str() + "," + t.wow(e.n).str() + "," + t.a_w.get_str() + "," + t.method + "\n";
  return out;
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  // Fields here never contain commas except inside quotes.
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (char ch : line) {
    if (ch == '"') quoted = !quoted;
    else if (ch == ',' && !quoted) {
      fields.push_back(cur);
      cur.clear();
    } else cur += ch;
  }
  fields.push_back(cur);
  return fields;
}

}  // namespace

Expansion expansion_from_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line) || line != "n,w,wow,a_w,method") throw std::invalid_argument("unexpected CSV header");
  Expansion e;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto f = split_csv_line(line);
    if (f.size() != 5) throw std::invalid_argument("expected 5 CSV fields: " + line);
    int n = std::stoi(f[0]);
    if (e.n != 0 && e.n != n) throw std::invalid_argument("mixed sizes in one expansion");
    e.n = n;
    ExpansionTerm t{Permutation::parse(f[1]).resized(n), mpz_class(f[3]), f[4]};
    if (t.wow(n).str() != Permutation::parse(f[2]).normalized().str()) throw std::invalid_argument("wow column disagrees with w");
    e.terms.push_back(std::move(t));
  }
  return e;
}

json permutation_to_json(const Permutation& w) { return json(w.word()); }

Permutation permutation_from_json(const json& j) { return Permutation(j.get<std::vector<int>>()); }

json composition_to_json(const WeakComposition& c) { return json(c); }

WeakComposition composition_from_json(const json& j) { return j.get<WeakComposition>(); }

json integer_to_json(const mpz_class& z) {
  if (z.fits_slong_p()) return json(z.get_si());
  return json(z.get_str());
}

mpz_class integer_from_json(const json& j) {
  if (j.is_number_integer()) return mpz_class(std::to_string(j.get<long long>()));
  if (j.is_string()) return mpz_class(j.get<std::string>());
  throw std::invalid_argument("expected an integer");
}

json expansion_to_json(const Expansion& e) {
  json terms = json::array();
  for (const auto& t : table_order(e))
    terms.push_back({{"w", permutation_to_json(t.w)},
                     {"wow", permutation_to_json(t.wow(e.n))},
                     {"a_w", integer_to_json(t.a_w)},
                     {"method", t.method}});
  return {{"n", e.n}, {"terms", terms}};
}

Expansion expansion_from_json(const json& j) {
  Expansion e;
  e.n = j.at("n").get<int>();
  for (const auto& t : j.at("terms"))
    e.terms.push_back({permutation_from_json(t.at("w")).resized(e.n), integer_from_json(t.at("a_w")), t.at("method").get<std::string>()});
  return e;
}

std::string table1_rows(const Expansion& e) {
  std::string out;
  for (const auto& t : table_order(e))
    out += std::to_string(e.n) + "," + t.w.str() + "," + t.wow(e.n).str() + "," + t.a_w.get_str() + "\n";
  return out;
}

std::string polynomial_text(const std::vector<mpz_class>& coeffs, std::string_view var) {
  std::string out;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const mpz_class& c = coeffs[k];
    if (c == 0) continue;
    std::string mag = mpz_class(abs(c)).get_str();
    std::string term;
    if (k == 0) term = mag;
    else {
      term = (mag == "1" ? "" : mag) + std::string(var);
      if (k > 1) term += "^" + std::to_string(k);
    }
    if (out.empty()) out = (c < 0 ? "-" : "") + term;
    else out += (c < 0 ? " - " : " + ") + term;
  }
  return out.empty() ? "0" : out;
}

WeakComposition parse_composition(std::string_view text) {
  WeakComposition c;
  std::istringstream in{std::string(text)};
  std::string token;
  while (std::getline(in, token, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad composition entry: '" + token + "'");
    }
    if (used != token.size() || v < 0) throw std::invalid_argument("bad composition entry: '" + token + "'");
    c.push_back(v);
  }
  if (c.empty()) throw std::invalid_argument("empty composition");
  return c;
}

std::string composition_str(const WeakComposition& c) {
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) out += (i ? "," : "") + std::to_string(c[i]);
  return out;
}

}  // namespace permutahedral
