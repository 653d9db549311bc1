#pragma once

// Anchored configuration spaces of arbitrary finite loop-free multigraphs:
// n labeled points live on vertices and open edges, and every anchor vertex
// must be occupied.  Complexes are built cell-by-cell and handed to the
// GF(2) oracle.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "acs/gf2.hpp"

namespace acs {

class AnchoredGraph {
 public:
  // Vertex ids are arbitrary strings; duplicate edge pairs express parallel
  // edges; loops are rejected (subdivide them first).
  AnchoredGraph(std::vector<std::string> vertex_ids,
                std::vector<std::pair<std::string, std::string>> edges,
                std::vector<std::string> anchor_ids, int n);

  static AnchoredGraph from_json(const nlohmann::json& j);

  int vertex_count() const { return static_cast<int>(vertex_ids_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::string>& vertex_ids() const { return vertex_ids_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& anchors() const { return anchors_; }
  int anchor_count() const { return static_cast<int>(anchors_.size()); }
  int n() const { return n_; }

  AnchoredGraph with_n(int n) const;

 private:
  std::vector<std::string> vertex_ids_;
  std::vector<std::pair<int, int>> edges_;  // vertex indices, u != v
  std::vector<int> anchors_;                // sorted vertex indices
  int n_ = 0;
};

// One point assignment: entry p is the cell carrying point p+1, encoded as
// a vertex index in [0, V) or V + edge index.  Dimension = points on edges.
struct GraphCube {
  std::vector<int> assignment;

  int dim(int vertex_count) const;
  std::string to_string(const AnchoredGraph& g) const;
};

// Every assignment satisfying the anchor condition, graded by dimension and
// ordered by the mixed-radix encoding of the assignment.
std::vector<std::vector<GraphCube>> enumerate_graph_cubes(const AnchoredGraph& g);

// The anchored configuration complex; empty when n < |anchors|.  Boundary
// of a cube replaces one edge-riding point by either endpoint.
BasedComplex build_complex(const AnchoredGraph& g);

std::vector<std::int64_t> graph_f_vector(const AnchoredGraph& g);

std::vector<std::int64_t> betti_graph(const AnchoredGraph& g, int threads = 1);

// Number of top-dimensional spheres for a tree with m >= 2 anchors and
// n >= m points: sum_k (-1)^k C(m,k) (m-1-k)^n over k = 0..m-2.
std::int64_t tree_sphere_count(int m, int n);

// The graph of injections [m] -> [m+1] with edges between injections that
// differ in exactly one argument, summarized.
struct HomGraphSummary {
  int m = 0;
  std::int64_t vertex_count = 0;
  std::int64_t edge_count = 0;
  int degree = 0;       // common vertex degree
  bool regular = false;
  int components = 0;
  std::int64_t beta1 = 0;
  std::int64_t zeta = 0;  // (m+1)!(m-2)/2 + 1
  bool zeta_matches = false;
};

HomGraphSummary hom_graph(int m);

// Predicted Betti numbers of the anchored space of a disjoint union: labeled
// points are distributed over the components with multinomial multiplicity
// and the per-component Betti vectors convolve.  Trailing zeros trimmed.
std::vector<std::int64_t> partition_betti(const std::vector<AnchoredGraph>& components,
                                          int n);

// Disjoint union with vertex ids prefixed per component ("0:a", "1:b", ...).
AnchoredGraph disjoint_union(const std::vector<AnchoredGraph>& components, int n);

}  // namespace acs
