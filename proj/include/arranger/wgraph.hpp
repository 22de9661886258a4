// Vertex-weighted graphs over the inclusion order on finite rational sets:
// chordality via maximum cardinality search, perfect and weighted
// elimination orderings, unimodality of paths, and obstruction witnesses
// (chordless cycles, incomparable edges, valley paths).
#ifndef ARRANGER_WGRAPH_HPP
#define ARRANGER_WGRAPH_HPP

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "arranger/rational.hpp"

namespace arranger {

// A finite set of exact rationals, compared by inclusion (a partial order).
class WeightSet {
 public:
  WeightSet() = default;
  explicit WeightSet(std::vector<Rat> elems);

  // Accepts "{}", the UTF-8 empty-set sign, or "{a,b,...}" with rational
  // entries; also a bare single rational.
  static WeightSet parse(const std::string& s);

  int size() const { return static_cast<int>(elems_.size()); }
  bool empty() const { return elems_.empty(); }
  const std::vector<Rat>& elements() const { return elems_; }
  bool contains(const Rat& x) const;

  bool subset_of(const WeightSet& o) const;
  bool superset_of(const WeightSet& o) const { return o.subset_of(*this); }
  bool proper_superset_of(const WeightSet& o) const {
    return size() > o.size() && superset_of(o);
  }
  bool comparable(const WeightSet& o) const {
    return subset_of(o) || superset_of(o);
  }

  bool operator==(const WeightSet& o) const { return elems_ == o.elems_; }
  bool operator!=(const WeightSet& o) const { return elems_ != o.elems_; }
  bool operator<(const WeightSet& o) const { return elems_ < o.elems_; }

  std::string str() const;  // "{0,1}" / "{}"

 private:
  std::vector<Rat> elems_;  // sorted, unique
};

// Simple graph on vertices 1..n with a weight set per vertex.
class WeightedGraph {
 public:
  WeightedGraph(int n, std::vector<std::pair<int, int>> edges,
                std::vector<WeightSet> psi);  // psi indexed 0..n-1 by vertex-1

  int n_vertices() const { return n_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  bool adjacent(int u, int v) const;
  const std::vector<int>& neighbors(int v) const;
  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
  const WeightSet& psi(int v) const;
  bool is_complete() const;

 private:
  int n_;
  std::vector<std::pair<int, int>> edges_;      // i<j, sorted, unique
  std::vector<WeightSet> psi_;                  // [v-1]
  std::vector<std::vector<char>> adj_;          // [u-1][v-1]
  std::vector<std::vector<int>> nbrs_;          // sorted
};

// verts[k-1] is the vertex at elimination position k.
struct Ordering {
  std::vector<int> verts;
};

enum class ObstructionKind { chordless_cycle, incomparable_edge, valley_path };

struct Obstruction {
  ObstructionKind kind;
  std::vector<int> verts;  // cycle, {u,v}, or path
};

using WeoResult = std::variant<Ordering, Obstruction>;

inline bool holds_ordering(const WeoResult& r) {
  return std::holds_alternative<Ordering>(r);
}

// True iff the neighbors of v induce a complete subgraph.
bool is_simplicial(const WeightedGraph& g, int v);

// Maximum cardinality search; on a chordal graph the reverse visit order is
// a perfect elimination ordering. Ties pick the lowest vertex index, so the
// lowest-index start vertex is eliminated last. On failure returns a
// certified induced cycle of length >= 4.
WeoResult mcs_peo(const WeightedGraph& g);

bool validate_peo(const WeightedGraph& g, const Ordering& o);

// PEO and psi(v_i) superset of psi(v_j) for every edge {v_i,v_j} with i<j.
bool validate_weo(const WeightedGraph& g, const Ordering& o);

// Constructive search for a weighted elimination ordering following the
// elimination argument: repeatedly remove a minimal-weight simplicial
// vertex, or produce a witness (chordless cycle, incomparable edge, or
// valley path) proving none exists.
WeoResult find_weo(const WeightedGraph& g);

// Exhaustive scan over induced paths for forbidden shapes: incomparable
// edges and valley paths (strictly larger endpoint weights around a
// constant interior). Intended for small graphs; guarded at 16 vertices.
std::vector<Obstruction> forbidden_paths(const WeightedGraph& g);

struct UnimodalResult {
  bool unimodal = false;
  int peak = 0;            // smallest valid peak position (1-based)
  int lo = 0, hi = 0;      // embedded forbidden subpath range (1-based)
  ObstructionKind kind = ObstructionKind::incomparable_edge;  // of [lo,hi]
};

// Decides unimodality of a weight sequence along a path; on failure locates
// an embedded type (i)/(ii) subpath (first incomparable adjacent pair, or
// the valley located by: minimal i0 with a strict drop, minimal i2 with the
// next strict rise, maximal i1 <= i2-2 with a strict drop).
UnimodalResult unimodal_decompose(const std::vector<WeightSet>& psi_seq);

// Subgraph induced by vs, relabeled 1..|vs| in ascending order of the
// original labels; old_of_new[k-1] gives the original label of new vertex k.
WeightedGraph induced_subgraph(const WeightedGraph& g, const std::vector<int>& vs,
                               std::vector<int>* old_of_new = nullptr);

// Contracts edge {i,j} (i<j) into vertex i with weight psi(i) union psi(j);
// vertices above j shift down by one. old_of_new maps new labels to old
// (the merged vertex maps to i).
WeightedGraph contract_edge(const WeightedGraph& g, std::pair<int, int> e,
                            std::vector<int>* old_of_new = nullptr);

// Checks the witness invariants of an obstruction against g.
bool validate_obstruction(const WeightedGraph& g, const Obstruction& obs);

std::string obstruction_str(const Obstruction& obs);

}  // namespace arranger

#endif
