#include "arranger/wgraph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <stdexcept>

namespace arranger {

WeightSet::WeightSet(std::vector<Rat> elems) : elems_(std::move(elems)) {
  std::sort(elems_.begin(), elems_.end());
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
}

WeightSet WeightSet::parse(const std::string& raw) {
  std::string s;
  for (char c : raw)
    if (c != ' ' && c != '\t') s += c;
  if (s == "{}" || s == "\xE2\x88\x85") return WeightSet();
  if (!s.empty() && s.front() == '{') {
    if (s.back() != '}') throw std::invalid_argument("WeightSet: unbalanced braces in '" + raw + "'");
    s = s.substr(1, s.size() - 2);
    if (s.empty()) return WeightSet();
    std::vector<Rat> elems;
    size_t start = 0;
    while (start <= s.size()) {
      size_t comma = s.find(',', start);
      if (comma == std::string::npos) comma = s.size();
      elems.push_back(Rat::parse(s.substr(start, comma - start)));
      start = comma + 1;
    }
    return WeightSet(std::move(elems));
  }
  return WeightSet({Rat::parse(s)});
}

bool WeightSet::contains(const Rat& x) const {
  return std::binary_search(elems_.begin(), elems_.end(), x);
}

bool WeightSet::subset_of(const WeightSet& o) const {
  return std::includes(o.elems_.begin(), o.elems_.end(), elems_.begin(), elems_.end());
}

std::string WeightSet::str() const {
  std::string out = "{";
  for (size_t i = 0; i < elems_.size(); ++i) {
    if (i) out += ",";
    out += elems_[i].str();
  }
  return out + "}";
}

WeightedGraph::WeightedGraph(int n, std::vector<std::pair<int, int>> edges,
                             std::vector<WeightSet> psi)
    : n_(n), psi_(std::move(psi)) {
  if (n < 1) throw std::invalid_argument("WeightedGraph: need at least one vertex");
  if (static_cast<int>(psi_.size()) != n)
    throw std::invalid_argument("WeightedGraph: psi must be defined on every vertex");
  for (auto& [u, v] : edges) {
    if (u == v) throw std::invalid_argument("WeightedGraph: loop edge");
    if (u > v) std::swap(u, v);
    if (u < 1 || v > n) throw std::invalid_argument("WeightedGraph: edge endpoint out of range");
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw std::invalid_argument("WeightedGraph: duplicate edge");
  edges_ = std::move(edges);

  adj_.assign(n, std::vector<char>(n, 0));
  nbrs_.assign(n, {});
  for (auto [u, v] : edges_) {
    adj_[u - 1][v - 1] = adj_[v - 1][u - 1] = 1;
    nbrs_[u - 1].push_back(v);
    nbrs_[v - 1].push_back(u);
  }
  for (auto& ns : nbrs_) std::sort(ns.begin(), ns.end());
}

bool WeightedGraph::adjacent(int u, int v) const {
  if (u < 1 || u > n_ || v < 1 || v > n_) throw std::out_of_range("adjacent: vertex out of range");
  return adj_[u - 1][v - 1] != 0;
}

const std::vector<int>& WeightedGraph::neighbors(int v) const {
  if (v < 1 || v > n_) throw std::out_of_range("neighbors: vertex out of range");
  return nbrs_[v - 1];
}

const WeightSet& WeightedGraph::psi(int v) const {
  if (v < 1 || v > n_) throw std::out_of_range("psi: vertex out of range");
  return psi_[v - 1];
}

bool WeightedGraph::is_complete() const {
  return static_cast<int>(edges_.size()) == n_ * (n_ - 1) / 2;
}

bool is_simplicial(const WeightedGraph& g, int v) {
  const auto& ns = g.neighbors(v);
  for (size_t a = 0; a < ns.size(); ++a)
    for (size_t b = a + 1; b < ns.size(); ++b)
      if (!g.adjacent(ns[a], ns[b])) return false;
  return true;
}

namespace {

// Rotate/orient a cycle so the smallest vertex comes first and its smaller
// cycle-neighbor second.
std::vector<int> canonical_cycle(std::vector<int> cyc) {
  const size_t k = cyc.size();
  size_t mi = 0;
  for (size_t i = 1; i < k; ++i)
    if (cyc[i] < cyc[mi]) mi = i;
  std::vector<int> out(k);
  const int prev = cyc[(mi + k - 1) % k];
  const int next = cyc[(mi + 1) % k];
  const int dir = (next < prev) ? 1 : -1;
  for (size_t i = 0; i < k; ++i) out[i] = cyc[(mi + k + dir * i) % k];
  return out;
}

// Shortest path from a to b through allowed vertices (BFS, ascending
// neighbor order for determinism). Returns empty if none.
std::vector<int> shortest_path(const WeightedGraph& g, int a, int b,
                               const std::vector<char>& allowed) {
  std::vector<int> parent(g.n_vertices() + 1, 0);
  std::deque<int> queue{a};
  parent[a] = a;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    if (u == b) break;
    for (int w : g.neighbors(u)) {
      if (!allowed[w] || parent[w]) continue;
      parent[w] = u;
      queue.push_back(w);
    }
  }
  if (!parent[b]) return {};
  std::vector<int> path{b};
  while (path.back() != a) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

// An induced cycle of length >= 4, or nullopt if g is chordal. Scans for a
// vertex v with non-adjacent neighbors a,b connectable outside N[v].
std::optional<Obstruction> find_chordless_cycle(const WeightedGraph& g) {
  const int n = g.n_vertices();
  for (int v = 1; v <= n; ++v) {
    const auto& ns = g.neighbors(v);
    for (size_t ia = 0; ia < ns.size(); ++ia) {
      for (size_t ib = ia + 1; ib < ns.size(); ++ib) {
        const int a = ns[ia], b = ns[ib];
        if (g.adjacent(a, b)) continue;
        std::vector<char> allowed(n + 1, 1);
        allowed[v] = 0;
        for (int w : ns) allowed[w] = 0;
        allowed[a] = allowed[b] = 1;
        std::vector<int> path = shortest_path(g, a, b, allowed);
        if (path.empty()) continue;
        std::vector<int> cyc{v};
        cyc.insert(cyc.end(), path.begin(), path.end());
        return Obstruction{ObstructionKind::chordless_cycle, canonical_cycle(cyc)};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

WeoResult mcs_peo(const WeightedGraph& g) {
  const int n = g.n_vertices();
  std::vector<char> visited(n + 1, 0);
  std::vector<int> count(n + 1, 0);
  std::vector<int> visit_order;
  visit_order.reserve(n);
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 1; v <= n; ++v)
      if (!visited[v] && (best == -1 || count[v] > count[best])) best = v;
    visited[best] = 1;
    visit_order.push_back(best);
    for (int w : g.neighbors(best))
      if (!visited[w]) ++count[w];
  }
  Ordering o;
  o.verts.assign(visit_order.rbegin(), visit_order.rend());
  if (validate_peo(g, o)) return o;
  std::optional<Obstruction> cyc = find_chordless_cycle(g);
  if (!cyc) throw std::logic_error("mcs_peo: MCS check failed on a chordal graph");
  return *cyc;
}

namespace {

void check_permutation(const WeightedGraph& g, const Ordering& o) {
  const int n = g.n_vertices();
  if (static_cast<int>(o.verts.size()) != n)
    throw std::invalid_argument("Ordering: wrong length");
  std::vector<char> seen(n + 1, 0);
  for (int v : o.verts) {
    if (v < 1 || v > n || seen[v]) throw std::invalid_argument("Ordering: not a permutation");
    seen[v] = 1;
  }
}

}  // namespace

bool validate_peo(const WeightedGraph& g, const Ordering& o) {
  check_permutation(g, o);
  const int n = g.n_vertices();
  for (int i = 0; i < n; ++i) {
    std::vector<int> earlier;
    for (int j = 0; j < i; ++j)
      if (g.adjacent(o.verts[i], o.verts[j])) earlier.push_back(o.verts[j]);
    for (size_t a = 0; a < earlier.size(); ++a)
      for (size_t b = a + 1; b < earlier.size(); ++b)
        if (!g.adjacent(earlier[a], earlier[b])) return false;
  }
  return true;
}

bool validate_weo(const WeightedGraph& g, const Ordering& o) {
  if (!validate_peo(g, o)) return false;
  const int n = g.n_vertices();
  std::vector<int> pos(n + 1, 0);
  for (int i = 0; i < n; ++i) pos[o.verts[i]] = i + 1;
  for (auto [u, v] : g.edges()) {
    const int early = pos[u] < pos[v] ? u : v;
    const int late = pos[u] < pos[v] ? v : u;
    if (!g.psi(early).superset_of(g.psi(late))) return false;
  }
  return true;
}

WeoResult find_weo(const WeightedGraph& g) {
  WeoResult chordal = mcs_peo(g);
  if (!holds_ordering(chordal)) return chordal;

  for (auto [u, v] : g.edges())
    if (!g.psi(u).comparable(g.psi(v)))
      return Obstruction{ObstructionKind::incomparable_edge, {u, v}};

  const int n = g.n_vertices();
  std::vector<char> alive(n + 1, 1);
  std::vector<int> order(n, 0);

  for (int pos = n; pos >= 1; --pos) {
    // Vertices whose weight is minimal among the remaining weights.
    std::vector<int> minimal;
    for (int v = 1; v <= n; ++v) {
      if (!alive[v]) continue;
      bool is_min = true;
      for (int u = 1; u <= n && is_min; ++u)
        if (alive[u] && g.psi(u) != g.psi(v) && g.psi(u).subset_of(g.psi(v))) is_min = false;
      if (is_min) minimal.push_back(v);
    }
    // S: connected component (within the minimal set) of the lowest vertex.
    std::vector<char> in_min(n + 1, 0);
    for (int v : minimal) in_min[v] = 1;
    std::vector<char> in_s(n + 1, 0);
    std::deque<int> queue{minimal.front()};
    in_s[minimal.front()] = 1;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int w : g.neighbors(u)) {
        if (!alive[w] || !in_min[w] || in_s[w]) continue;
        in_s[w] = 1;
        queue.push_back(w);
      }
    }
    // N: outside neighborhood of S among the remaining vertices.
    std::vector<int> nbhd;
    for (int v = 1; v <= n; ++v) {
      if (!alive[v] || in_s[v]) continue;
      for (int w : g.neighbors(v)) {
        if (alive[w] && in_s[w]) {
          nbhd.push_back(v);
          break;
        }
      }
    }
    for (size_t a = 0; a < nbhd.size(); ++a) {
      for (size_t b = a + 1; b < nbhd.size(); ++b) {
        if (g.adjacent(nbhd[a], nbhd[b])) continue;
        // Shortest u-S-v path: a valley (the interior carries the strictly
        // smaller constant weight), and induced since it is shortest.
        std::vector<char> allowed(n + 1, 0);
        for (int v = 1; v <= n; ++v) allowed[v] = in_s[v];
        allowed[nbhd[a]] = allowed[nbhd[b]] = 1;
        std::vector<int> path = shortest_path(g, nbhd[a], nbhd[b], allowed);
        if (path.empty()) throw std::logic_error("find_weo: S-neighbors disconnected through S");
        if (path.back() < path.front()) std::reverse(path.begin(), path.end());
        return Obstruction{ObstructionKind::valley_path, path};
      }
    }
    // F = S u N is chordal, so S holds a vertex simplicial in F; it is then
    // simplicial in the whole remaining graph and weight-minimal among its
    // neighbors, so it can be eliminated last.
    std::vector<char> in_f(n + 1, 0);
    for (int v = 1; v <= n; ++v) in_f[v] = in_s[v];
    for (int v : nbhd) in_f[v] = 1;
    int chosen = 0;
    for (int v = 1; v <= n && !chosen; ++v) {
      if (!in_s[v]) continue;
      bool simp = true;
      const auto& ns = g.neighbors(v);
      std::vector<int> fn;
      for (int w : ns)
        if (alive[w] && in_f[w]) fn.push_back(w);
      for (size_t a = 0; a < fn.size() && simp; ++a)
        for (size_t b = a + 1; b < fn.size() && simp; ++b)
          if (!g.adjacent(fn[a], fn[b])) simp = false;
      if (simp) chosen = v;
    }
    if (!chosen) throw std::logic_error("find_weo: no simplicial vertex in minimal component");
    order[pos - 1] = chosen;
    alive[chosen] = 0;
  }
  return Ordering{order};
}

namespace {

void enumerate_induced_paths(const WeightedGraph& g, std::vector<int>& path,
                             std::vector<char>& used,
                             const std::function<void(const std::vector<int>&)>& emit) {
  const int last = path.back();
  for (int w : g.neighbors(last)) {
    if (used[w]) continue;
    bool induced = true;
    for (size_t i = 0; i + 1 < path.size() && induced; ++i)
      if (g.adjacent(path[i], w)) induced = false;
    if (!induced) continue;
    path.push_back(w);
    used[w] = 1;
    emit(path);
    enumerate_induced_paths(g, path, used, emit);
    used[w] = 0;
    path.pop_back();
  }
}

bool is_valley_shape(const WeightedGraph& g, const std::vector<int>& path) {
  const size_t k = path.size();
  if (k < 3) return false;
  const WeightSet& interior = g.psi(path[1]);
  for (size_t i = 2; i + 1 < k; ++i)
    if (g.psi(path[i]) != interior) return false;
  return g.psi(path.front()).proper_superset_of(interior) &&
         g.psi(path.back()).proper_superset_of(interior);
}

}  // namespace

std::vector<Obstruction> forbidden_paths(const WeightedGraph& g) {
  if (g.n_vertices() > 16)
    throw std::invalid_argument("forbidden_paths: exhaustive search limited to 16 vertices");
  std::vector<Obstruction> out;
  for (auto [u, v] : g.edges())
    if (!g.psi(u).comparable(g.psi(v)))
      out.push_back({ObstructionKind::incomparable_edge, {u, v}});

  std::vector<std::vector<int>> valleys;
  auto emit = [&](const std::vector<int>& path) {
    if (path.front() < path.back() && is_valley_shape(g, path)) valleys.push_back(path);
  };
  for (int s = 1; s <= g.n_vertices(); ++s) {
    std::vector<int> path{s};
    std::vector<char> used(g.n_vertices() + 1, 0);
    used[s] = 1;
    enumerate_induced_paths(g, path, used, emit);
  }
  std::sort(valleys.begin(), valleys.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  for (auto& p : valleys) out.push_back({ObstructionKind::valley_path, std::move(p)});
  return out;
}

UnimodalResult unimodal_decompose(const std::vector<WeightSet>& psi_seq) {
  if (psi_seq.empty()) throw std::invalid_argument("unimodal_decompose: empty sequence");
  const int k = static_cast<int>(psi_seq.size());
  for (int peak = 1; peak <= k; ++peak) {
    bool ok = true;
    for (int i = 0; i + 1 < peak && ok; ++i)
      if (!psi_seq[i].subset_of(psi_seq[i + 1])) ok = false;
    for (int i = peak - 1; i + 1 < k && ok; ++i)
      if (!psi_seq[i].superset_of(psi_seq[i + 1])) ok = false;
    if (ok) return UnimodalResult{true, peak, 0, 0, ObstructionKind::incomparable_edge};
  }
  for (int i = 0; i + 1 < k; ++i) {
    if (!psi_seq[i].comparable(psi_seq[i + 1]))
      return UnimodalResult{false, 0, i + 1, i + 2, ObstructionKind::incomparable_edge};
  }
  // All steps comparable: locate the valley as in the unimodality argument,
  // with minimal i0 (first strict drop), minimal i2 (first strict rise after
  // the drop), then maximal i1 in [i0, i2-2] with a strict drop. 0-based here.
  int i0 = -1;
  for (int i = 0; i + 1 < k; ++i) {
    if (psi_seq[i].proper_superset_of(psi_seq[i + 1])) {
      i0 = i;
      break;
    }
  }
  if (i0 < 0) throw std::logic_error("unimodal_decompose: inconsistent state");
  int i2 = -1;
  for (int i = i0 + 1; i + 1 < k; ++i) {
    if (psi_seq[i + 1].proper_superset_of(psi_seq[i])) {
      i2 = i + 1;
      break;
    }
  }
  if (i2 < 0) throw std::logic_error("unimodal_decompose: inconsistent state");
  int i1 = i0;
  for (int i = i0; i <= i2 - 2; ++i)
    if (psi_seq[i].proper_superset_of(psi_seq[i + 1])) i1 = i;
  return UnimodalResult{false, 0, i1 + 1, i2 + 1, ObstructionKind::valley_path};
}

WeightedGraph induced_subgraph(const WeightedGraph& g, const std::vector<int>& vs,
                               std::vector<int>* old_of_new) {
  if (vs.empty()) throw std::invalid_argument("induced_subgraph: empty vertex set");
  std::vector<int> sorted = vs;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted.size() != vs.size())
    throw std::invalid_argument("induced_subgraph: duplicate vertices");
  std::vector<int> new_of_old(g.n_vertices() + 1, 0);
  std::vector<WeightSet> psi;
  for (size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] < 1 || sorted[i] > g.n_vertices())
      throw std::out_of_range("induced_subgraph: vertex out of range");
    new_of_old[sorted[i]] = static_cast<int>(i) + 1;
    psi.push_back(g.psi(sorted[i]));
  }
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges())
    if (new_of_old[u] && new_of_old[v]) edges.emplace_back(new_of_old[u], new_of_old[v]);
  if (old_of_new) *old_of_new = sorted;
  return WeightedGraph(static_cast<int>(sorted.size()), std::move(edges), std::move(psi));
}

WeightedGraph contract_edge(const WeightedGraph& g, std::pair<int, int> e,
                            std::vector<int>* old_of_new) {
  int i = std::min(e.first, e.second), j = std::max(e.first, e.second);
  if (i < 1 || j > g.n_vertices() || !g.adjacent(i, j))
    throw std::invalid_argument("contract_edge: not an edge");
  auto relabel = [&](int v) { return v == j ? i : (v > j ? v - 1 : v); };
  std::set<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges()) {
    int a = relabel(u), b = relabel(v);
    if (a == b) continue;
    edges.insert({std::min(a, b), std::max(a, b)});
  }
  std::vector<WeightSet> psi;
  std::vector<int> old_labels;
  for (int v = 1; v <= g.n_vertices(); ++v) {
    if (v == j) continue;
    if (v == i) {
      std::vector<Rat> merged = g.psi(i).elements();
      for (const Rat& x : g.psi(j).elements()) merged.push_back(x);
      psi.push_back(WeightSet(std::move(merged)));
    } else {
      psi.push_back(g.psi(v));
    }
    old_labels.push_back(v);
  }
  if (old_of_new) *old_of_new = old_labels;
  return WeightedGraph(g.n_vertices() - 1,
                       std::vector<std::pair<int, int>>(edges.begin(), edges.end()),
                       std::move(psi));
}

bool validate_obstruction(const WeightedGraph& g, const Obstruction& obs) {
  const auto& v = obs.verts;
  std::set<int> distinct(v.begin(), v.end());
  if (distinct.size() != v.size()) return false;
  for (int x : v)
    if (x < 1 || x > g.n_vertices()) return false;
  switch (obs.kind) {
    case ObstructionKind::chordless_cycle: {
      const size_t k = v.size();
      if (k < 4) return false;
      for (size_t a = 0; a < k; ++a)
        for (size_t b = a + 1; b < k; ++b) {
          const bool consecutive = (b == a + 1) || (a == 0 && b == k - 1);
          if (g.adjacent(v[a], v[b]) != consecutive) return false;
        }
      return true;
    }
    case ObstructionKind::incomparable_edge:
      return v.size() == 2 && g.adjacent(v[0], v[1]) &&
             !g.psi(v[0]).comparable(g.psi(v[1]));
    case ObstructionKind::valley_path: {
      const size_t k = v.size();
      if (k < 3) return false;
      for (size_t a = 0; a < k; ++a)
        for (size_t b = a + 1; b < k; ++b)
          if (g.adjacent(v[a], v[b]) != (b == a + 1)) return false;
      return is_valley_shape(g, v);
    }
  }
  return false;
}

std::string obstruction_str(const Obstruction& obs) {
  std::string name;
  switch (obs.kind) {
    case ObstructionKind::chordless_cycle: name = "chordless_cycle"; break;
    case ObstructionKind::incomparable_edge: name = "incomparable_edge"; break;
    case ObstructionKind::valley_path: name = "valley_path"; break;
  }
  std::string out = name + " [";
  for (size_t i = 0; i < obs.verts.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(obs.verts[i]);
  }
  return out + "]";
}

}  // namespace arranger
