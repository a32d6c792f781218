#include "wsys/perm.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <map>
#include <set>
#include <sstream>

#include "wsys/errors.hpp"

namespace wsys {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int m = size();
  std::vector<bool> seen(m + 1, false);
  for (int v : images_) {
    if (v < 1 || v > m)
      throw parse_error("image " + std::to_string(v) + " out of range 1.." + std::to_string(m));
    if (seen[v]) throw parse_error("image " + std::to_string(v) + " repeated");
    seen[v] = true;
  }
}

Permutation Permutation::parse(const std::string& text) {
  std::istringstream is(text);
  std::vector<int> images;
  std::string tok;
  while (is >> tok) {
    try {
      std::size_t pos = 0;
      int v = std::stoi(tok, &pos);
      if (pos != tok.size() || v <= 0) throw std::invalid_argument(tok);
      images.push_back(v);
    } catch (const std::exception&) {
      throw parse_error("bad permutation token: '" + tok + "'");
    }
  }
  return Permutation(std::move(images));
}

Permutation Permutation::identity(int m) {
  std::vector<int> img(m);
  for (int i = 0; i < m; ++i) img[i] = i + 1;
  return Permutation(std::move(img));
}

Permutation Permutation::standard_cycle(int m) {
  std::vector<int> img(m);
  for (int i = 0; i < m; ++i) img[i] = (i + 1) % m + 1;
  return Permutation(std::move(img));
}

Permutation Permutation::reversed_cycle(int m) {
  std::vector<int> img(m);
  for (int i = 0; i < m; ++i) img[i] = (i + m - 1) % m + 1;
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<int> img(size());
  for (int i = 1; i <= size(); ++i) img[images_[i - 1] - 1] = i;
  return Permutation(std::move(img));
}

bool Permutation::is_standard_cycle() const {
  const int m = size();
  if (m == 0) return false;
  for (int i = 1; i < m; ++i)
    if (images_[i - 1] != i + 1) return false;
  return images_[m - 1] == 1;
}

Permutation Permutation::conjugate_adjacent(int r) const {
  const int m = size();
  if (r < 1 || r + 1 > m) throw contract_error("conjugate_adjacent: bad position");
  auto tau = [r](int v) { return v == r ? r + 1 : v == r + 1 ? r : v; };
  std::vector<int> img(m);
  for (int i = 1; i <= m; ++i) img[i - 1] = tau(images_[tau(i) - 1]);
  return Permutation(std::move(img));
}

Permutation Permutation::cyclic_conjugate() const {
  const int m = size();
  if (m == 0) return *this;
  std::vector<int> img(m);
  for (int i = 1; i <= m; ++i) {
    const int pre = (i - 2 + m) % m + 1;  // c^{-1}(i)
    img[i - 1] = images_[pre - 1] % m + 1;
  }
  return Permutation(std::move(img));
}

Permutation Permutation::concat(const Permutation& a, const Permutation& b) {
  std::vector<int> img = a.images_;
  img.reserve(a.size() + b.size());
  for (int v : b.images_) img.push_back(v + a.size());
  return Permutation(std::move(img));
}

std::string Permutation::str() const {
  std::ostringstream os;
  for (int i = 0; i < size(); ++i) {
    if (i) os << ' ';
    os << images_[i];
  }
  return os.str();
}

CycleDecomposition cycles(const Permutation& p) {
  CycleDecomposition out;
  const int m = p.size();
  std::vector<bool> seen(m + 1, false);
  for (int i = 1; i <= m; ++i) {
    if (seen[i]) continue;
    std::vector<int> cyc;
    int j = i;
    do {
      cyc.push_back(j);
      seen[j] = true;
      j = p(j);
    } while (j != i);
    out.cycles.push_back(std::move(cyc));
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<int> relabel_first_occurrence(const std::vector<int>& word) {
  std::map<int, int> rename;
  std::vector<int> out;
  out.reserve(word.size());
  int next = 1;
  for (int label : word) {
    auto [it, inserted] = rename.emplace(label, next);
    if (inserted) ++next;
    out.push_back(it->second);
  }
  return out;
}

}  // namespace

ChordDiagram::ChordDiagram(std::vector<int> word) {
  if (word.size() % 2 != 0) throw parse_error("diagram word has odd length");
  std::map<int, int> count;
  for (int label : word) ++count[label];
  for (const auto& [label, c] : count)
    if (c != 2)
      throw parse_error("label " + std::to_string(label) + " occurs " + std::to_string(c) +
                        " times (expected 2)");
  word_ = relabel_first_occurrence(word);
}

ChordDiagram ChordDiagram::parse(const std::string& text) {
  if (text.find('(') != std::string::npos) {
    std::vector<std::pair<int, int>> pairs;
    std::size_t i = 0;
    while (i < text.size()) {
      if (std::isspace(static_cast<unsigned char>(text[i]))) {
        ++i;
        continue;
      }
      if (text[i] != '(') throw parse_error("expected '(' in pair list");
      std::size_t close = text.find(')', i);
      if (close == std::string::npos) throw parse_error("unbalanced '(' in pair list");
      std::string body = text.substr(i + 1, close - i - 1);
      std::size_t comma = body.find(',');
      if (comma == std::string::npos) throw parse_error("expected ',' in pair: (" + body + ")");
      try {
        int a = std::stoi(body.substr(0, comma));
        int b = std::stoi(body.substr(comma + 1));
        pairs.emplace_back(a, b);
      } catch (const std::exception&) {
        throw parse_error("bad pair: (" + body + ")");
      }
      i = close + 1;
    }
    return from_pairs(std::move(pairs));
  }
  std::istringstream is(text);
  std::vector<int> word;
  std::string tok;
  while (is >> tok) {
    try {
      word.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw parse_error("bad diagram token: '" + tok + "'");
    }
  }
  return ChordDiagram(std::move(word));
}

ChordDiagram ChordDiagram::from_pairs(std::vector<std::pair<int, int>> pairs) {
  const int n = static_cast<int>(pairs.size());
  std::vector<int> word(2 * n, 0);
  for (int i = 0; i < n; ++i) {
    for (int pt : {pairs[i].first, pairs[i].second}) {
      if (pt < 1 || pt > 2 * n) throw parse_error("endpoint " + std::to_string(pt) + " out of range");
      if (word[pt - 1] != 0) throw parse_error("endpoint " + std::to_string(pt) + " used twice");
      word[pt - 1] = i + 1;
    }
  }
  return ChordDiagram(std::move(word));
}

std::vector<std::pair<int, int>> ChordDiagram::pairs() const {
  std::vector<std::pair<int, int>> out(chords(), {0, 0});
  for (int pos = 1; pos <= 2 * chords(); ++pos) {
    auto& pr = out[word_[pos - 1] - 1];
    (pr.first == 0 ? pr.first : pr.second) = pos;
  }
  return out;
}

Permutation ChordDiagram::to_permutation() const {
  const int L = static_cast<int>(word_.size());
  std::vector<int> img(L);
  for (const auto& [a, b] : pairs()) {
    img[a - 1] = b;
    img[b - 1] = a;
  }
  return Permutation(std::move(img));
}

ChordDiagram ChordDiagram::canonical() const {
  const int L = static_cast<int>(word_.size());
  if (L == 0) return *this;
  std::vector<int> best = word_;
  std::vector<int> rotated(L);
  for (int shift = 0; shift < L; ++shift) {
    for (int i = 0; i < L; ++i) rotated[i] = word_[(i + shift) % L];
    std::vector<int> cand = relabel_first_occurrence(rotated);
    if (cand < best) best = std::move(cand);
  }
  return ChordDiagram(std::move(best));
}

std::string ChordDiagram::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < word_.size(); ++i) {
    if (i) os << ' ';
    os << word_[i];
  }
  return os.str();
}

namespace {

void enumerate_matchings(std::vector<int>& word, int next_label,
                         std::set<std::vector<int>>& out) {
  const int L = static_cast<int>(word.size());
  int first = -1;
  for (int i = 0; i < L; ++i)
    if (word[i] == 0) {
      first = i;
      break;
    }
  if (first < 0) {
    out.insert(ChordDiagram(word).canonical().word());
    return;
  }
  for (int j = first + 1; j < L; ++j) {
    if (word[j] != 0) continue;
    word[first] = word[j] = next_label;
    enumerate_matchings(word, next_label + 1, out);
    word[first] = word[j] = 0;
  }
}

}  // namespace

std::vector<ChordDiagram> enumerate_diagrams(int n) {
  if (n < 1) throw contract_error("enumerate_diagrams: n must be >= 1");
  std::set<std::vector<int>> canon;
  std::vector<int> word(2 * n, 0);
  enumerate_matchings(word, 1, canon);
  std::vector<ChordDiagram> out;
  out.reserve(canon.size());
  for (const auto& w : canon) out.push_back(ChordDiagram(w));
  return out;
}

// ---------------------------------------------------------------------------

ExtendedGraph ExtendedGraph::from_permutation(const Permutation& p) {
  ExtendedGraph g;
  g.m = p.size();
  g.edges.reserve(g.m);
  for (int i = 1; i <= g.m; ++i)
    g.edges.push_back({HalfEdge{i, false}, HalfEdge{p(i), true}});
  return g;
}

void ExtendedGraph::validate() const {
  std::vector<int> heads(m + 1, 0), tails(m + 1, 0);
  for (const auto& [a, b] : edges) {
    for (const HalfEdge& h : {a, b}) {
      if (h.vertex < 1 || h.vertex > m) throw contract_error("half-edge vertex out of range");
      (h.head ? heads : tails)[h.vertex]++;
    }
  }
  for (int v = 1; v <= m; ++v)
    if (heads[v] != 1 || tails[v] != 1)
      throw contract_error("vertex " + std::to_string(v) + " must carry one head and one tail");
}

bool ExtendedGraph::is_ordinary() const {
  for (const auto& [a, b] : edges)
    if (a.head == b.head) return false;
  return true;
}

namespace {

struct PortWalk {
  const ExtendedGraph& g;
  // incid[v] = indices into g.edges with an end at v, paired with end id
  std::vector<std::array<std::pair<int, int>, 2>> incid;
  std::vector<int> degree;
  std::vector<bool> flipped;
  std::vector<bool> visited;
  int flips = 0;

  explicit PortWalk(const ExtendedGraph& graph)
      : g(graph),
        incid(graph.m + 1),
        degree(graph.m + 1, 0),
        flipped(graph.m + 1, false),
        visited(graph.m + 1, false) {
    g.validate();
    for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
      const auto& [a, b] = g.edges[e];
      incid[a.vertex][degree[a.vertex]++] = {e, 0};
      incid[b.vertex][degree[b.vertex]++] = {e, 1};
    }
  }

  const HalfEdge& end(int e, int which) const {
    return which == 0 ? g.edges[e].first : g.edges[e].second;
  }

  bool effective_head(const HalfEdge& h) const { return h.head != flipped[h.vertex]; }

  // Walk the cycle through v0, flipping vertices so that every edge is
  // traversed tail -> head; record the resulting images.
  void orient_cycle(int v0, std::vector<int>& img) {
    int cur = v0;
    do {
      visited[cur] = true;
      int e = -1, which = -1;
      for (int k = 0; k < 2; ++k) {
        const auto& [ek, wk] = incid[cur][k];
        if (!effective_head(end(ek, wk))) {
          e = ek;
          which = wk;
        }
      }
      assert(e >= 0 && "vertex has no effective tail port");
      const HalfEdge& far = end(e, 1 - which);
      if (effective_head(far) == false) {
        flipped[far.vertex] = !flipped[far.vertex];
        ++flips;
      }
      assert(effective_head(end(e, 1 - which)));
      img[cur - 1] = far.vertex;
      cur = far.vertex;
    } while (cur != v0);
  }
};

}  // namespace

SignedPermutation ExtendedGraph::normalize() const {
  PortWalk walk(*this);
  std::vector<int> img(m, 0);
  for (int v = 1; v <= m; ++v)
    if (!walk.visited[v]) walk.orient_cycle(v, img);
  return SignedPermutation{Permutation(std::move(img)), walk.flips % 2 == 0 ? 1 : -1};
}

SignedPermutation ExtendedGraph::normalize_opposite(int vertex) const {
  // Identify the members of the cycle through `vertex` under the canonical
  // orientation, then redo the walk with that cycle's start pre-flipped: the
  // walk orients it the other way round.
  const SignedPermutation base = normalize();
  std::set<int> members;
  for (int cur = vertex; !members.count(cur); cur = base.perm(cur)) members.insert(cur);
  PortWalk walk(*this);
  std::vector<int> img(m, 0);
  for (int v = 1; v <= m; ++v) {
    if (walk.visited[v]) continue;
    if (members.count(v)) {
      walk.flipped[v] = !walk.flipped[v];
      ++walk.flips;
    }
    walk.orient_cycle(v, img);
  }
  return SignedPermutation{Permutation(std::move(img)), walk.flips % 2 == 0 ? 1 : -1};
}

}  // namespace wsys
