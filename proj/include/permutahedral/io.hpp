#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "json.hpp"
#include "permutahedral/aw.hpp"
#include "permutahedral/perm.hpp"

namespace permutahedral {

using json = nlohmann::json;

/// One term a_w S_{w_o w} of the tau expansion.
struct ExpansionTerm {
  Permutation w;
  mpz_class a_w;
  std::string method;

  /// w_o w, with trailing fixed points stripped.
  Permutation wow(int n) const;
  friend bool operator==(const ExpansionTerm&, const ExpansionTerm&) = default;
};

struct Expansion {
  int n = 0;
  std::vector<ExpansionTerm> terms;

  friend bool operator==(const Expansion&, const Expansion&) = default;
};

Expansion make_expansion(int n, const std::vector<TauEntry>& entries);

/// Terms ordered by the one-line string of w_o w.
std::vector<ExpansionTerm> table_order(const Expansion& e);

/// "S_132 + S_21": coefficient then S_{w_o w}, in table order.
std::string expansion_text(const Expansion& e);
/// Header "n,w,wow,a_w,method".
std::string expansion_csv(const Expansion& e);
Expansion expansion_from_csv(std::string_view text);
json expansion_to_json(const Expansion& e);
Expansion expansion_from_json(const json& j);

/// Golden table rows "n,w,wow,a_w" without header, in table order.
std::string table1_rows(const Expansion& e);

json permutation_to_json(const Permutation& w);
Permutation permutation_from_json(const json& j);
json composition_to_json(const WeakComposition& c);
WeakComposition composition_from_json(const json& j);
/// Integers that fit a long are written as numbers, larger ones as decimal strings.
json integer_to_json(const mpz_class& z);
mpz_class integer_from_json(const json& j);

/// Ascending powers: "1 + 7t + 7t^2 + t^3".
std::string polynomial_text(const std::vector<mpz_class>& coeffs, std::string_view var = "t");
/// "3,1,0,0" -> {3,1,0,0}.
WeakComposition parse_composition(std::string_view text);
std::string composition_str(const WeakComposition& c);

}  // namespace permutahedral
