#include "wsys/weights.hpp"

#include <algorithm>
#include <cassert>

#include "wsys/errors.hpp"

namespace wsys {

namespace {

// The recurrence at an adjacent slot pair (r, r+1) trades the local edge
// configuration for a swap of the two slots plus correction graphs on one
// slot fewer.  Each correction rewires the four half-edge stubs
//   a = head of in(r+1), b = tail of out(r+1),
//   c = head of in(r),   d = tail of out(r):
// two stubs attach to the ports of a fresh middle vertex and the remaining
// two are spliced into a single edge.  Splices may close a vertex-free loop,
// which contributes a factor C_0, and the last two moves create head/head or
// tail/tail edges that normalize to a signed permutation.
enum LocalEnd { kA = 0, kB = 1, kC = 2, kD = 3 };

struct MoveSpec {
  int vh, vt;    // local ends plugged into the middle vertex's head/tail port
  int sx, sy;    // local ends spliced together
  int sign;      // coefficient of the correction term
  bool so_only;  // the head/head - tail/tail moves exist only for so
};

constexpr MoveSpec kMoves[4] = {
    {kC, kB, kA, kD, +1, false},
    {kA, kD, kC, kB, -1, false},
    {kB, kD, kA, kC, +1, true},
    {kC, kA, kB, kD, -1, true},
};

struct Terminal {
  bool is_vport = false;
  int slot = 0;  // original slot index for anchors
  bool head = false;
};

struct Link {
  bool is_terminal = false;
  Terminal term;
  int local = -1;
};

Link local_link(int end) { return Link{false, {}, end}; }
Link anchor_link(int slot, bool head) { return Link{true, {false, slot, head}, -1}; }
Link vport_link(bool head) { return Link{true, {true, 0, head}, -1}; }

struct SurgeryOutcome {
  int c0_power = 0;
  SignedPermutation result;
};

SurgeryOutcome apply_move(const Permutation& s, int r, const MoveSpec& mv) {
  const int m = s.size();
  const Permutation sinv = s.inverse();
  const int p = sinv(r + 1), q = sinv(r), t = s(r + 1), u = s(r);

  // E-links: the far end of each local stub's edge.
  Link E[4];
  E[kA] = p == r ? local_link(kD) : p == r + 1 ? local_link(kB) : anchor_link(p, false);
  E[kB] = t == r ? local_link(kC) : t == r + 1 ? local_link(kA) : anchor_link(t, true);
  E[kC] = q == r ? local_link(kD) : q == r + 1 ? local_link(kB) : anchor_link(q, false);
  E[kD] = u == r ? local_link(kC) : u == r + 1 ? local_link(kA) : anchor_link(u, true);

  // P-links: where the move plugs each local stub.
  Link P[4];
  P[mv.vh] = vport_link(true);
  P[mv.vt] = vport_link(false);
  P[mv.sx] = local_link(mv.sy);
  P[mv.sy] = local_link(mv.sx);

  bool visited[4] = {false, false, false, false};
  auto chase = [&](int x, bool next_is_p) -> Terminal {
    for (;;) {
      visited[x] = true;
      const Link& l = next_is_p ? P[x] : E[x];
      if (l.is_terminal) return l.term;
      x = l.local;
      next_is_p = !next_is_p;
    }
  };

  // new slot indices: old slots below r keep their index, the middle vertex
  // takes slot r, slots above r+1 shift down by one
  auto map_slot = [r](int slot) { return slot < r ? slot : slot - 1; };
  auto to_half_edge = [&](const Terminal& term) {
    return term.is_vport ? HalfEdge{r, term.head} : HalfEdge{map_slot(term.slot), term.head};
  };

  ExtendedGraph g;
  g.m = m - 1;
  for (int x = 0; x < 4; ++x) {
    if (visited[x] || !E[x].is_terminal) continue;
    Terminal t1 = E[x].term;
    Terminal t2 = chase(x, true);
    g.edges.push_back({to_half_edge(t1), to_half_edge(t2)});
  }
  for (int x = 0; x < 4; ++x) {
    if (visited[x] || !P[x].is_terminal) continue;
    Terminal t1 = P[x].term;
    Terminal t2 = chase(x, false);
    g.edges.push_back({to_half_edge(t1), to_half_edge(t2)});
  }
  SurgeryOutcome out;
  for (int x = 0; x < 4; ++x) {
    if (visited[x]) continue;
    // closed alternating chain with no anchors: a vertex-free loop
    int cur = x;
    bool next_is_p = true;
    do {
      visited[cur] = true;
      const Link& l = next_is_p ? P[cur] : E[cur];
      assert(!l.is_terminal);
      cur = l.local;
      next_is_p = !next_is_p;
    } while (!(cur == x && next_is_p));
    ++out.c0_power;
  }

  // untouched edges
  for (int k = 1; k <= m; ++k) {
    if (k == r || k == r + 1 || k == p || k == q) continue;
    g.edges.push_back({HalfEdge{map_slot(k), false}, HalfEdge{map_slot(s(k)), true}});
  }

  out.result = g.normalize();
  return out;
}

std::string image_bytes(const std::vector<int>& img) {
  std::string key(img.size(), '\0');
  for (std::size_t i = 0; i < img.size(); ++i) key[i] = static_cast<char>(img[i]);
  return key;
}

}  // namespace

WeightEvaluator::WeightEvaluator(WeightFamily family, EvalOptions opt)
    : family_(family), opt_(opt) {}

Polynomial WeightEvaluator::eval(const Permutation& s) { return eval_impl(s); }

Polynomial WeightEvaluator::eval_diagram(const ChordDiagram& d) {
  return eval_impl(d.to_permutation());
}

Polynomial WeightEvaluator::eval_product(const std::vector<Permutation>& factors) {
  Polynomial out(1);
  for (const Permutation& f : factors) out *= eval_impl(f);
  return out;
}

Polynomial WeightEvaluator::cycle_value(int m) {
  if (family_ == WeightFamily::so && m % 2 == 1) return odd_cycle_value(m);
  return Polynomial::casimir(m);
}

Polynomial WeightEvaluator::eval_impl(const Permutation& s) {
  const int m = s.size();
  if (m == 0) return Polynomial(1);

  // multiplicativity over concatenation: split at the first closed prefix
  {
    const auto& img = s.images();
    int hi = 0;
    for (int k = 1; k < m; ++k) {
      hi = std::max(hi, img[k - 1]);
      if (hi == k) {
        std::vector<int> left(img.begin(), img.begin() + k);
        std::vector<int> right;
        right.reserve(m - k);
        for (int i = k; i < m; ++i) right.push_back(img[i] - k);
        return eval_impl(Permutation(std::move(left))) *
               eval_impl(Permutation(std::move(right)));
      }
    }
  }

  if (s.is_standard_cycle()) return cycle_value(m);

  auto [key, key_sign] = memo_key(s);
  if (auto it = memo_.find(key); it != memo_.end())
    return key_sign == 1 ? it->second : -it->second;

  // Bubble the cycle through slot 1 towards the standard ascending block:
  // after the longest prefix 1->2->...->k the wanted successor sits at slot
  // v = s(k) > k+1; pull it one slot to the left.
  int k = 1;
  while (s(k) == k + 1) ++k;
  const int v = s(k);
  assert(v > k + 1);
  const int r = v - 1;

  Polynomial out = eval_impl(s.conjugate_adjacent(r));
  out += corrections(s, r);

  memo_.emplace(std::move(key), key_sign == 1 ? out : -out);
  return out;
}

Polynomial WeightEvaluator::corrections(const Permutation& s, int r) {
  Polynomial acc;
  for (const MoveSpec& mv : kMoves) {
    if (mv.so_only && family_ == WeightFamily::gl) continue;
    SurgeryOutcome o = apply_move(s, r, mv);
    Polynomial val = eval_impl(o.result.perm);
    if (o.c0_power > 0) val *= Polynomial::casimir(0).pow(o.c0_power);
    if (mv.sign * o.result.sign < 0)
      acc -= val;
    else
      acc += val;
  }
  return acc;
}

Polynomial WeightEvaluator::odd_cycle_value(int m) {
  if (family_ != WeightFamily::so)
    throw contract_error("odd_cycle_value is defined for the so family only");
  if (m < 1 || m % 2 == 0) throw contract_error("odd_cycle_value: m must be odd");
  const std::string key = "odd:" + std::to_string(m);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  Permutation cur = Permutation::reversed_cycle(m);
  const Permutation target = Permutation::standard_cycle(m);
  Polynomial corr;
  while (!(cur == target)) {
    int k = 1;
    while (cur(k) == k + 1) ++k;
    const int r = cur(k) - 1;
    corr += corrections(cur, r);
    cur = cur.conjugate_adjacent(r);
  }
  Polynomial val = corr * Rat(-1, 2);
  memo_.emplace(key, val);
  return val;
}

std::pair<std::string, int> WeightEvaluator::memo_key(const Permutation& s) const {
  if (!opt_.memo_canonicalize) return {image_bytes(s.images()), 1};
  std::vector<int> img = s.images();
  int sign = 1;
  if (family_ == WeightFamily::so) {
    const Permutation inv = s.inverse();
    for (const auto& cyc : cycles(s).cycles) {
      if (cyc.size() < 3) continue;  // a reversed 2-cycle is itself
      std::vector<int> slots = cyc;
      std::sort(slots.begin(), slots.end());
      bool reversed_smaller = false;
      for (int slot : slots) {
        const int fwd = img[slot - 1], rev = inv(slot);
        if (fwd != rev) {
          reversed_smaller = rev < fwd;
          break;
        }
      }
      if (reversed_smaller) {
        for (int slot : slots) img[slot - 1] = inv(slot);
        if (cyc.size() % 2 == 1) sign = -sign;
      }
    }
  }
  Permutation t(img);
  std::vector<int> best = t.images();
  for (int i = 1; i < t.size(); ++i) {
    t = t.cyclic_conjugate();
    best = std::min(best, t.images());
  }
  return {image_bytes(best), sign};
}

// ---- randomized-strategy evaluation (test hook) ---------------------------

namespace {

// slot -> rank: cycles ordered by minimal element, each walked from its
// minimal element.  Rank order coincides with slot order exactly when the
// permutation is a concatenation of standard ascending cycles.
std::vector<int> slot_ranks(const Permutation& s) {
  std::vector<int> rank(s.size() + 1, 0);
  int next = 1;
  for (const auto& cyc : cycles(s).cycles)
    for (int slot : cyc) rank[slot] = next++;
  return rank;
}

}  // namespace

Polynomial WeightEvaluator::eval_random_strategy(const Permutation& s, std::mt19937& rng) {
  Memo memo;
  return eval_random(s, rng, memo);
}

Polynomial WeightEvaluator::eval_random(const Permutation& s, std::mt19937& rng, Memo& memo) {
  const int m = s.size();
  if (m == 0) return Polynomial(1);
  const std::string key = image_bytes(s.images());
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  const std::vector<int> rank = slot_ranks(s);
  std::vector<int> admissible;
  for (int r = 1; r < m; ++r)
    if (rank[r] > rank[r + 1]) admissible.push_back(r);

  Polynomial out;
  if (admissible.empty()) {
    // concatenation of standard ascending cycles
    out = Polynomial(1);
    for (const auto& cyc : cycles(s).cycles) out *= cycle_value(static_cast<int>(cyc.size()));
  } else {
    const int r = admissible[std::uniform_int_distribution<std::size_t>(
        0, admissible.size() - 1)(rng)];
    out = eval_random(s.conjugate_adjacent(r), rng, memo);
    out += corrections_random(s, r, rng, memo);
  }
  memo.emplace(key, out);
  return out;
}

Polynomial WeightEvaluator::corrections_random(const Permutation& s, int r, std::mt19937& rng,
                                               Memo& memo) {
  Polynomial acc;
  for (const MoveSpec& mv : kMoves) {
    if (mv.so_only && family_ == WeightFamily::gl) continue;
    SurgeryOutcome o = apply_move(s, r, mv);
    Polynomial val = eval_random(o.result.perm, rng, memo);
    if (o.c0_power > 0) val *= Polynomial::casimir(0).pow(o.c0_power);
    if (mv.sign * o.result.sign < 0)
      acc -= val;
    else
      acc += val;
  }
  return acc;
}

// ---- Lie-algebra specializations ------------------------------------------

void FamilySpec::validate() const {
  if (family == Algebra::so && (M != 0 || N < 0)) throw contract_error("so(N) requires M = 0");
  if (family == Algebra::sp && (N != 0 || M < 0)) throw contract_error("sp(2M) requires N = 0");
  if (family == Algebra::osp && (N < 0 || M < 0)) throw contract_error("osp(N|2M) needs N,M >= 0");
}

Rat FamilySpec::c0_value() const {
  validate();
  switch (family) {
    case Algebra::so: return Rat(N);
    case Algebra::sp: return Rat(-2 * M);
    case Algebra::osp: return Rat(N - 2 * M);
  }
  return Rat(0);
}

std::string FamilySpec::name() const {
  switch (family) {
    case Algebra::so: return "so(" + std::to_string(N) + ")";
    case Algebra::sp: return "sp(" + std::to_string(2 * M) + ")";
    case Algebra::osp: return "osp(" + std::to_string(N) + "|" + std::to_string(2 * M) + ")";
  }
  return "?";
}

Polynomial specialize_family(const Polynomial& p, const FamilySpec& f) {
  for (std::uint32_t v : p.variables()) {
    if (v >= kAuxVarBase || v % 2 == 1)
      throw contract_error("specialize_family: polynomial contains " + var_name(v) +
                           "; only even Casimir variables are allowed");
  }
  return p.substitute({{casimir_var(0), Polynomial(f.c0_value())}});
}

}  // namespace wsys
