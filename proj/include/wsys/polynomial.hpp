#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "json.hpp"

namespace wsys {

using Int = mpz_class;
using Rat = mpq_class;

// Variable namespace of the coefficient ring.  Indices below 1000 are the
// Casimir generators C_k; index 1000+i is the formal variable x_i used by
// the generating-series identities.
constexpr std::uint32_t kAuxVarBase = 1000;

inline std::uint32_t casimir_var(int k) { return static_cast<std::uint32_t>(k); }
inline std::uint32_t aux_var(int i) { return kAuxVarBase + static_cast<std::uint32_t>(i); }
std::string var_name(std::uint32_t v);
std::uint32_t var_from_name(const std::string& name);

struct Monomial {
  // (variable, exponent) pairs, ascending variable index, exponents > 0.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> factors;

  int total_degree() const;
  Monomial operator*(const Monomial& o) const;
  bool operator==(const Monomial& o) const { return factors == o.factors; }
};

// Display order: higher total degree first, then lower variable index,
// then higher exponent.  Used for term storage, printing and JSON.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rat, MonomialOrder>;

  Polynomial() = default;
  Polynomial(int c);           // NOLINT: implicit constants are convenient
  Polynomial(const Rat& c);    // NOLINT
  static Polynomial variable(std::uint32_t v);
  static Polynomial casimir(int k) { return variable(casimir_var(k)); }
  static Polynomial aux(int i) { return variable(aux_var(i)); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rat constant_value() const;  // requires is_constant()
  int degree() const;
  const TermMap& terms() const { return terms_; }
  std::set<std::uint32_t> variables() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rat& c);
  Polynomial operator-() const;
  Polynomial pow(unsigned e) const;

  // Ring-homomorphic substitution; unassigned variables pass through.
  Polynomial substitute(const std::map<std::uint32_t, Polynomial>& assignment) const;

  // Coefficient of C_t^1 and the remainder, for solving linear equations:
  // *this == lin * C_t + rest.  Throws contract_error if C_t appears with
  // exponent > 1.
  void split_linear(std::uint32_t var, Polynomial* lin, Polynomial* rest) const;

  std::string str() const;
  nlohmann::json to_json() const;
  static Polynomial from_json(const nlohmann::json& j);

  bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }

  void add_term(const Monomial& m, const Rat& c);

 private:
  TermMap terms_;  // no zero coefficients stored
};

Polynomial operator+(Polynomial a, const Polynomial& b);
Polynomial operator-(Polynomial a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial operator*(Polynomial a, const Rat& c);
Polynomial operator*(const Rat& c, Polynomial a);

}  // namespace wsys
