#include "wsys/pbw.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "wsys/errors.hpp"

namespace wsys {

std::string AlgebraSpec::name() const {
  return family == PBWFamily::so ? "so(" + std::to_string(dim) + ")"
                                 : "sp(" + std::to_string(dim) + ")";
}

void AlgebraSpec::validate() const {
  if (dim < 2) throw contract_error("algebra dimension parameter must be >= 2");
  if (family == PBWFamily::sp && dim % 2 != 0) throw contract_error("sp needs even dimension");
}

GeneratorBasis make_basis(const AlgebraSpec& a) {
  a.validate();
  GeneratorBasis b;
  for (int i = 1; i <= a.dim; ++i) {
    for (int j = 1; j <= a.dim; ++j) {
      const std::pair<int, int> partner{a.bar(j), a.bar(i)};
      const std::pair<int, int> me{i, j};
      if (a.family == PBWFamily::so) {
        if (i + j < a.dim + 1) b.pairs.push_back(me);  // i+j = dim+1 vanishes
      } else {
        if (me <= partner) b.pairs.push_back(me);
      }
    }
  }
  std::sort(b.pairs.begin(), b.pairs.end());
  for (int k = 0; k < static_cast<int>(b.pairs.size()); ++k) b.index.emplace(b.pairs[k], k);
  return b;
}

ReducedGen reduce_generator(const AlgebraSpec& a, const GeneratorBasis& b, int i, int j) {
  if (i < 1 || i > a.dim || j < 1 || j > a.dim) throw contract_error("generator index out of range");
  if (a.family == PBWFamily::so) {
    if (i + j == a.dim + 1) return {0, -1};
    if (i + j < a.dim + 1) return {+1, b.index.at({i, j})};
    return {-1, b.index.at({a.bar(j), a.bar(i)})};
  }
  const std::pair<int, int> me{i, j};
  const std::pair<int, int> partner{a.bar(j), a.bar(i)};
  if (me <= partner) return {+1, b.index.at(me)};
  // X_{ij} = -eps_i eps_j X_{bar j, bar i}
  return {-a.eps(i) * a.eps(j), b.index.at(partner)};
}

void PBWElement::add(const std::vector<int>& word, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms.emplace(word, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

PBWElement& PBWElement::operator+=(const PBWElement& o) {
  for (const auto& [w, c] : o.terms) add(w, c);
  return *this;
}

PBWElement& PBWElement::operator-=(const PBWElement& o) {
  for (const auto& [w, c] : o.terms) add(w, -c);
  return *this;
}

std::string PBWElement::str(const GeneratorBasis& basis) const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms) {
    if (!first) os << " + ";
    first = false;
    os << c.get_str();
    for (int g : w) {
      const auto& [i, j] = basis.pairs[g];
      os << "*X[" << i << "," << j << "]";
    }
  }
  return os.str();
}

PBWAlgebra::PBWAlgebra(AlgebraSpec spec) : spec_(spec), basis_(make_basis(spec)) {}

const std::vector<std::pair<Rat, int>>& PBWAlgebra::commutator(int g1, int g2) const {
  const auto key = std::make_pair(g1, g2);
  auto it = comm_cache_.find(key);
  if (it != comm_cache_.end()) return it->second;

  const auto [i, j] = basis_.pairs[g1];
  const auto [k, l] = basis_.pairs[g2];
  // [X_ij, X_kl] = d_kj X_il - d_il X_kj - e (d_{bar l, j} X_{i, bar k}
  //                                           - d_{i, bar k} X_{bar l, j})
  // with e = 1 for so and e = eps_k eps_l for sp (expand the brackets of
  // E_ij - eps_i eps_j E_{bar j, bar i} to see the cross-term sign).
  std::map<int, Rat> acc;
  auto add = [&](int sign, int ii, int jj) {
    ReducedGen rg = reduce(ii, jj);
    if (rg.sign == 0) return;
    acc[rg.index] += Rat(sign * rg.sign);
  };
  const int e = spec_.family == PBWFamily::so ? 1 : spec_.eps(k) * spec_.eps(l);
  if (k == j) add(+1, i, l);
  if (i == l) add(-1, k, j);
  if (spec_.bar(l) == j) add(-e, i, spec_.bar(k));
  if (i == spec_.bar(k)) add(+e, spec_.bar(l), j);

  std::vector<std::pair<Rat, int>> out;
  for (const auto& [g, c] : acc)
    if (c != 0) out.emplace_back(c, g);
  return comm_cache_.emplace(key, std::move(out)).first->second;
}

PBWElement PBWAlgebra::normal_form(const std::vector<int>& word, const Rat& coeff) const {
  PBWElement result;
  std::vector<std::pair<Rat, std::vector<int>>> work;
  work.emplace_back(coeff, word);
  while (!work.empty()) {
    auto [c, w] = std::move(work.back());
    work.pop_back();
    int pos = -1;
    for (int t = 0; t + 1 < static_cast<int>(w.size()); ++t) {
      if (w[t] > w[t + 1]) {
        pos = t;
        break;
      }
    }
    if (pos < 0) {
      result.add(w, c);
      continue;
    }
    const int a = w[pos], b = w[pos + 1];
    std::vector<int> swapped = w;
    std::swap(swapped[pos], swapped[pos + 1]);
    work.emplace_back(c, std::move(swapped));
    for (const auto& [cc, g] : commutator(a, b)) {
      std::vector<int> shorter;
      shorter.reserve(w.size() - 1);
      shorter.insert(shorter.end(), w.begin(), w.begin() + pos);
      shorter.push_back(g);
      shorter.insert(shorter.end(), w.begin() + pos + 2, w.end());
      work.emplace_back(c * cc, std::move(shorter));
    }
  }
  return result;
}

PBWElement PBWAlgebra::multiply(const PBWElement& x, const PBWElement& y) const {
  PBWElement out;
  for (const auto& [wx, cx] : x.terms) {
    for (const auto& [wy, cy] : y.terms) {
      std::vector<int> w = wx;
      w.insert(w.end(), wy.begin(), wy.end());
      out += normal_form(w, cx * cy);
    }
  }
  return out;
}

PBWElement PBWAlgebra::envelope_sum(const Permutation& s, bool parallel) const {
  const int m = s.size();
  const int dim = spec_.dim;
  double total_d = std::pow(static_cast<double>(dim), m);
  if (total_d > 1e7)
    throw guard_error("w_envelope: " + std::to_string(dim) + "^" + std::to_string(m) +
                      " index tuples exceed the 10^7 guard");
  const long total = static_cast<long>(total_d + 0.5);

  auto add_tuple = [&](long idx, PBWElement& acc) {
    std::vector<int> tuple(m);
    long rem = idx;
    for (int pos = 0; pos < m; ++pos) {
      tuple[pos] = static_cast<int>(rem % dim) + 1;
      rem /= dim;
    }
    Rat coeff(1);
    std::vector<int> word(m);
    for (int pos = 1; pos <= m; ++pos) {
      const ReducedGen rg = reduce(tuple[pos - 1], tuple[s(pos) - 1]);
      if (rg.sign == 0) return;
      if (rg.sign < 0) coeff = -coeff;
      word[pos - 1] = rg.index;
    }
    acc += normal_form(word, coeff);
  };

  PBWElement result;
  bool run_parallel = false;
#ifdef _OPENMP
  run_parallel = parallel;
#else
  (void)parallel;
#endif
  if (run_parallel) {
    // fill the commutator table up front; workers then only read it
    for (int g1 = 0; g1 < basis_.size(); ++g1)
      for (int g2 = 0; g2 < basis_.size(); ++g2) commutator(g1, g2);
#ifdef _OPENMP
#pragma omp parallel
    {
      PBWElement local;
#pragma omp for schedule(static)
      for (long idx = 0; idx < total; ++idx) add_tuple(idx, local);
#pragma omp critical
      result += local;
    }
#endif
  } else {
    for (long idx = 0; idx < total; ++idx) add_tuple(idx, result);
  }

  if (spec_.family == PBWFamily::sp) {
    const int r = cycles(s).count();
    if ((m + r) % 2 == 1) {
      PBWElement neg;
      for (const auto& [w, c] : result.terms) neg.terms.emplace(w, -c);
      result = std::move(neg);
    }
  }
  return result;
}

PBWElement PBWAlgebra::w_envelope(const Permutation& s) const { return envelope_sum(s, true); }

PBWElement PBWAlgebra::w_envelope_serial(const Permutation& s) const {
  return envelope_sum(s, false);
}

PBWElement PBWAlgebra::casimir(int m) const {
  auto it = casimir_cache_.find(m);
  if (it != casimir_cache_.end()) return it->second;
  PBWElement e = envelope_sum(Permutation::standard_cycle(m), false);
  return casimir_cache_.emplace(m, std::move(e)).first->second;
}

bool PBWAlgebra::is_central(const PBWElement& e) const {
  for (int g = 0; g < basis_.size(); ++g) {
    PBWElement gen;
    gen.add({g}, Rat(1));
    PBWElement left = multiply(gen, e);
    left -= multiply(e, gen);
    if (!left.is_zero()) return false;
  }
  return true;
}

PBWElement PBWAlgebra::evaluate_polynomial(const Polynomial& p) const {
  PBWElement out;
  for (const auto& [mono, c] : p.terms()) {
    PBWElement term;
    term.add({}, c);
    for (const auto& [v, exp] : mono.factors) {
      if (v >= kAuxVarBase || v == 0 || v % 2 == 1)
        throw contract_error("evaluate_polynomial: unexpected variable " + var_name(v));
      for (unsigned k = 0; k < exp; ++k) term = multiply(term, casimir(static_cast<int>(v)));
    }
    out += term;
  }
  return out;
}

bool PBWAlgebra::oracle_check(const Permutation& s, WeightEvaluator& so_eval) const {
  const Polynomial value = so_eval.eval(s);
  const Polynomial specialized =
      value.substitute({{casimir_var(0), Polynomial(spec_.c0_value())}});
  PBWElement lhs = evaluate_polynomial(specialized);
  lhs -= envelope_sum(s, false);
  return lhs.is_zero();
}

}  // namespace wsys
