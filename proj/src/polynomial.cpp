#include "wsys/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "wsys/errors.hpp"

namespace wsys {

std::string var_name(std::uint32_t v) {
  if (v < kAuxVarBase) return "C" + std::to_string(v);
  return "x" + std::to_string(v - kAuxVarBase);
}

std::uint32_t var_from_name(const std::string& name) {
  if (name.empty()) throw parse_error("empty variable name");
  char kind = name[0];
  const std::string digits = name.substr(1);
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
    throw parse_error("bad variable name: " + name);
  unsigned long idx = std::stoul(digits);
  if (kind == 'C') {
    if (idx >= kAuxVarBase) throw parse_error("Casimir index out of range: " + name);
    return casimir_var(static_cast<int>(idx));
  }
  if (kind == 'x') return aux_var(static_cast<int>(idx));
  throw parse_error("bad variable name: " + name);
}

int Monomial::total_degree() const {
  int d = 0;
  for (const auto& [v, e] : factors) d += static_cast<int>(e);
  return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial out;
  out.factors.reserve(factors.size() + o.factors.size());
  std::size_t i = 0, j = 0;
  while (i < factors.size() && j < o.factors.size()) {
    if (factors[i].first < o.factors[j].first) {
      out.factors.push_back(factors[i++]);
    } else if (factors[i].first > o.factors[j].first) {
      out.factors.push_back(o.factors[j++]);
    } else {
      out.factors.emplace_back(factors[i].first, factors[i].second + o.factors[j].second);
      ++i, ++j;
    }
  }
  for (; i < factors.size(); ++i) out.factors.push_back(factors[i]);
  for (; j < o.factors.size(); ++j) out.factors.push_back(o.factors[j]);
  return out;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
  const int da = a.total_degree(), db = b.total_degree();
  if (da != db) return da > db;
  const std::size_t n = std::min(a.factors.size(), b.factors.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a.factors[i].first != b.factors[i].first)
      return a.factors[i].first < b.factors[i].first;
    if (a.factors[i].second != b.factors[i].second)
      return a.factors[i].second > b.factors[i].second;
  }
  return a.factors.size() > b.factors.size();
}

Polynomial::Polynomial(int c) {
  if (c != 0) terms_.emplace(Monomial{}, Rat(c));
}

Polynomial::Polynomial(const Rat& c) { add_term(Monomial{}, c); }

Polynomial Polynomial::variable(std::uint32_t v) {
  Polynomial p;
  Monomial m;
  m.factors.emplace_back(v, 1u);
  p.terms_.emplace(std::move(m), Rat(1));
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.factors.empty());
}

Rat Polynomial::constant_value() const {
  if (terms_.empty()) return Rat(0);
  if (!is_constant()) throw contract_error("constant_value on non-constant polynomial");
  return terms_.begin()->second;
}

int Polynomial::degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
  return d;
}

std::set<std::uint32_t> Polynomial::variables() const {
  std::set<std::uint32_t> out;
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m.factors) out.insert(v);
  return out;
}

void Polynomial::add_term(const Monomial& m, const Rat& c) {
  // gmp assumes canonical fractions; normalize at the boundary
  Rat cc = c;
  cc.canonicalize();
  if (cc == 0) return;
  auto [it, inserted] = terms_.emplace(m, cc);
  if (!inserted) {
    it->second += cc;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  *this = *this * o;
  return *this;
}

Polynomial& Polynomial::operator*=(const Rat& c) {
  Rat cc = c;
  cc.canonicalize();
  if (cc == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coef] : terms_) coef *= cc;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial out(1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) out *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return out;
}

Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) out.add_term(ma * mb, ca * cb);
  return out;
}

Polynomial operator*(Polynomial a, const Rat& c) { return a *= c; }
Polynomial operator*(const Rat& c, Polynomial a) { return a *= c; }

Polynomial Polynomial::substitute(const std::map<std::uint32_t, Polynomial>& assignment) const {
  Polynomial out;
  for (const auto& [m, c] : terms_) {
    Polynomial term(c);
    for (const auto& [v, e] : m.factors) {
      auto it = assignment.find(v);
      if (it == assignment.end()) {
        Monomial single;
        single.factors.emplace_back(v, e);
        Polynomial pass;
        pass.add_term(single, Rat(1));
        term *= pass;
      } else {
        term *= it->second.pow(e);
      }
    }
    out += term;
  }
  return out;
}

void Polynomial::split_linear(std::uint32_t var, Polynomial* lin, Polynomial* rest) const {
  *lin = Polynomial();
  *rest = Polynomial();
  for (const auto& [m, c] : terms_) {
    Monomial stripped;
    unsigned exp = 0;
    for (const auto& [v, e] : m.factors) {
      if (v == var) {
        exp = e;
      } else {
        stripped.factors.emplace_back(v, e);
      }
    }
    if (exp == 0) {
      rest->add_term(m, c);
    } else if (exp == 1) {
      lin->add_term(stripped, c);
    } else {
      throw contract_error("split_linear: variable " + var_name(var) +
                           " occurs with exponent " + std::to_string(exp));
    }
  }
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool neg = c < 0;
    Rat mag = neg ? Rat(-c) : c;
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    const bool coeff_one = (mag == 1);
    if (!coeff_one || m.factors.empty()) os << mag.get_str();
    bool star = !coeff_one;
    for (const auto& [v, e] : m.factors) {
      if (star) os << "*";
      os << var_name(v);
      if (e > 1) os << "^" << e;
      star = true;
    }
  }
  return os.str();
}

namespace {

nlohmann::json int_to_json(const Int& z) {
  if (z.fits_slong_p()) return nlohmann::json(static_cast<long>(z.get_si()));
  return nlohmann::json(z.get_str());
}

Int int_from_json(const nlohmann::json& j) {
  if (j.is_string()) return Int(j.get<std::string>());
  return Int(static_cast<long>(j.get<long long>()));
}

}  // namespace

nlohmann::json Polynomial::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [m, c] : terms_) {
    nlohmann::json t;
    t["num"] = int_to_json(c.get_num());
    t["den"] = int_to_json(c.get_den());
    nlohmann::json exps = nlohmann::json::object();
    for (const auto& [v, e] : m.factors) exps[var_name(v)] = e;
    t["exponents"] = std::move(exps);
    arr.push_back(std::move(t));
  }
  return arr;
}

Polynomial Polynomial::from_json(const nlohmann::json& j) {
  Polynomial out;
  for (const auto& t : j) {
    Rat c(int_from_json(t.at("num")), int_from_json(t.at("den")));
    c.canonicalize();
    Monomial m;
    for (const auto& [name, e] : t.at("exponents").items())
      m.factors.emplace_back(var_from_name(name), e.get<unsigned>());
    std::sort(m.factors.begin(), m.factors.end());
    out.add_term(m, c);
  }
  return out;
}

}  // namespace wsys
